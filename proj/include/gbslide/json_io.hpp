#pragma once

#include <string>

#include <json.hpp>

#include "gbslide/group_structure.hpp"
#include "gbslide/slide_engine.hpp"

namespace gbslide {

using nlohmann::json;

json to_json(const NumberedGraph& g);
NumberedGraph numbered_graph_from_json(const json& j);

json to_json(const GraphAutomorphism& f);
GraphAutomorphism automorphism_from_json(const json& j);

json to_json(const TaggedPoset& p);
TaggedPoset poset_from_json(const json& j);

json to_json(const SlideSequence& s);
SlideSequence sequence_from_json(const json& j);

json to_json(const Presentation& p);
Presentation presentation_from_json(const json& j);

std::string poset_text(const TaggedPoset& p);
std::string graph_dot(const NumberedGraph& g);
std::string poset_dot(const TaggedPoset& p);

json load_json_file(const std::string& path);

} // namespace gbslide
