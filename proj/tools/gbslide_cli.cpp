// Command-line surface: every subcommand is a thin wrapper over one library
// operation. Exit codes: 0 success / isomorphic, 1 decided non-isomorphic,
// 2 input or precondition error, 3 resource cap exceeded.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "gbslide/hom_oracle.hpp"
#include "gbslide/json_io.hpp"
#include "gbslide/mapping_torus.hpp"

using namespace gbslide;

namespace {

OracleOptions oracle_options() {
    OracleOptions opts;
    if (const char* env = std::getenv("GBSLIDE_NODE_BUDGET"))
        opts.node_budget = std::strtoll(env, nullptr, 10);
    return opts;
}

NumberedGraph load_graph(const std::string& path) {
    return numbered_graph_from_json(load_json_file(path));
}

Presentation load_presentation(const std::string& path) {
    return presentation_from_json(load_json_file(path));
}

// Edge reference with an optional '~' prefix selecting the reversed dart.
Dart parse_dart(const NumberedGraph& g, std::string ref) {
    bool rev = false;
    if (!ref.empty() && ref[0] == '~') {
        rev = true;
        ref = ref.substr(1);
    }
    int p = g.graph().find_pair(ref);
    check_input(p >= 0, "unknown edge '" + ref + "'");
    return Dart{p, rev};
}

void write_or_print(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(path);
        check_input(out.good(), "cannot write '" + path + "'");
        out << text;
    }
}

Tier parse_tier(const std::string& name) {
    if (name == "small") return Tier::small;
    if (name == "medium") return Tier::medium;
    throw InputError("tier must be 'small' or 'medium'");
}

std::string fingerprint_text(const Fingerprint& fp) {
    std::string out;
    for (auto& [name, count] : fp) out += name + ": " + std::to_string(count) + "\n";
    return out;
}

int run(int argc, char** argv) {
    CLI::App app{"Numbered-graph toolkit: slide-move isomorphism certificates, poset "
                 "invariants, mapping tori, and a finite-quotient fingerprint oracle"};
    app.require_subcommand(1);

    // poset
    std::string poset_file, poset_dot_file;
    bool poset_json = false, poset_text_flag = false;
    auto* cmd_poset = app.add_subcommand("poset", "Associated poset of a numbered graph");
    cmd_poset->add_option("graph", poset_file)->required();
    cmd_poset->add_flag("--json", poset_json);
    cmd_poset->add_flag("--text", poset_text_flag);
    cmd_poset->add_option("--dot", poset_dot_file, "write the Hasse diagram as DOT");

    // iso
    std::string iso_g1, iso_g2, iso_witness;
    auto* cmd_iso = app.add_subcommand("iso", "Decide slide equivalence, with certificate");
    cmd_iso->add_option("g1", iso_g1)->required();
    cmd_iso->add_option("g2", iso_g2)->required();
    cmd_iso->add_option("--witness", iso_witness, "write the replayable certificate");

    // slide
    std::string slide_file, slide_edge, slide_along;
    auto* cmd_slide = app.add_subcommand("slide", "Apply one slide move");
    cmd_slide->add_option("graph", slide_file)->required();
    cmd_slide->add_option("--edge", slide_edge, "edge to move; '~' prefix slides the other end")
        ->required();
    cmd_slide->add_option("--along", slide_along, "edge to slide along; '~' prefix reverses")
        ->required();

    // reduce
    std::string reduce_file;
    auto* cmd_reduce = app.add_subcommand("reduce", "Collapse to a reduced graph");
    cmd_reduce->add_option("graph", reduce_file)->required();

    // enumerate
    std::string enum_file;
    int enum_cap = 1000;
    auto* cmd_enum = app.add_subcommand("enumerate", "Enumerate the slide class");
    cmd_enum->add_option("graph", enum_file)->required();
    cmd_enum->add_option("--cap", enum_cap, "maximum number of classes");

    // mapping-torus
    std::string torus_file;
    auto* cmd_torus =
        app.add_subcommand("mapping-torus", "Numbered graph of a finite-order automorphism");
    cmd_torus->add_option("automorphism", torus_file)->required();

    // fixture
    std::string fixture_name;
    long fx_m = 5, fx_r = 2, fx_step = 1, fx_M = 3;
    auto* cmd_fixture = app.add_subcommand("fixture", "Built-in graphs and automorphisms");
    cmd_fixture->add_option("name", fixture_name, "FIG1A, FIG1B, KLEIN, CAGE, ROSECOVER")
        ->required();
    cmd_fixture->add_option("--m", fx_m);
    cmd_fixture->add_option("--r", fx_r);
    cmd_fixture->add_option("--step", fx_step);
    cmd_fixture->add_option("--M", fx_M);

    // present
    std::string present_file, present_interp = "gbs";
    auto* cmd_present = app.add_subcommand("present", "Presentation of either interpretation");
    cmd_present->add_option("graph", present_file)->required();
    cmd_present->add_option("--interp", present_interp, "gbs or finite");

    // epi
    std::string epi_file;
    auto* cmd_epi = app.add_subcommand("epi", "Structure epimorphism onto Z/M");
    cmd_epi->add_option("graph", epi_file)->required();

    // euler
    std::string euler_file;
    long long euler_holonomy_n = -1, euler_fiber_m = -1;
    auto* cmd_euler = app.add_subcommand("euler", "Rational Euler characteristic and fibration "
                                                  "arithmetic");
    cmd_euler->add_option("graph", euler_file)->required();
    cmd_euler->add_option("--holonomy", euler_holonomy_n,
                          "compute the holonomy order for this fiber rank N");
    cmd_euler->add_option("--fiber-rank", euler_fiber_m,
                          "compute the fiber rank for this holonomy order m");

    // recognize-product
    std::string recog_file;
    auto* cmd_recog = app.add_subcommand("recognize-product", "Detect F_M x Z");
    cmd_recog->add_option("graph", recog_file)->required();

    // fsc
    std::string fsc_file;
    auto* cmd_fsc = app.add_subcommand("fsc", "Finite-subgroup conjugacy classes report");
    cmd_fsc->add_option("graph", fsc_file)->required();

    // centreless-check
    std::string centreless_file;
    auto* cmd_centreless =
        app.add_subcommand("centreless-check", "Necessary condition: edge label gcd is 1");
    cmd_centreless->add_option("graph", centreless_file)->required();

    // homcount
    std::string hom_file, hom_group;
    auto* cmd_hom = app.add_subcommand("homcount", "Count homomorphisms into a catalogue group");
    cmd_hom->add_option("presentation", hom_file)->required();
    cmd_hom->add_option("--group", hom_group)->required();

    // fingerprint
    std::string fp_file1, fp_file2, fp_tier = "small";
    auto* cmd_fp = app.add_subcommand("fingerprint",
                                      "Hom-count fingerprint; with two files, compare them");
    cmd_fp->add_option("p1", fp_file1)->required();
    cmd_fp->add_option("p2", fp_file2);
    cmd_fp->add_option("--tier", fp_tier, "small or medium");

    // higman
    std::string hig_file, hig_letter;
    int hig_relator = 0;
    bool hig_verify = false;
    auto* cmd_hig = app.add_subcommand("higman", "Twist a relator; optionally verify that it "
                                                 "dies in every small quotient");
    cmd_hig->add_option("presentation", hig_file)->required();
    cmd_hig->add_option("--relator", hig_relator)->required();
    cmd_hig->add_option("--letter", hig_letter)->required();
    cmd_hig->add_flag("--verify", hig_verify);

    // verify
    std::string verify_file;
    auto* cmd_verify = app.add_subcommand("verify", "Replay a witness file");
    cmd_verify->add_option("witness", verify_file)->required();

    CLI11_PARSE(app, argc, argv);

    if (cmd_poset->parsed()) {
        NumberedGraph g = load_graph(poset_file);
        TaggedPoset p = associated_poset(g);
        if (!poset_dot_file.empty()) write_or_print(poset_dot_file, poset_dot(p));
        if (poset_json)
            std::cout << to_json(p).dump(2) << "\n";
        else
            std::cout << poset_text(p);
        return 0;
    }
    if (cmd_iso->parsed()) {
        NumberedGraph g1 = load_graph(iso_g1);
        NumberedGraph g2 = load_graph(iso_g2);
        IsoDecision dec = slide_equivalent(g1, g2);
        if (!dec.isomorphic) {
            std::cout << "not isomorphic (associated posets differ)\n";
            return 1;
        }
        check_internal(dec.certificate && verify_certificate(*dec.certificate),
                       "certificate failed verification");
        std::cout << "isomorphic; certificate with " << dec.certificate->moves.size()
                  << " slide moves verified\n";
        if (!iso_witness.empty())
            write_or_print(iso_witness, to_json(*dec.certificate).dump(2) + "\n");
        return 0;
    }
    if (cmd_slide->parsed()) {
        NumberedGraph g = load_graph(slide_file);
        SlideMove m{parse_dart(g, slide_edge), parse_dart(g, slide_along)};
        std::cout << to_json(slide(g, m)).dump(2) << "\n";
        return 0;
    }
    if (cmd_reduce->parsed()) {
        auto [r, log] = reduce(load_graph(reduce_file));
        for (const CollapseStep& c : log)
            std::cerr << "collapse " << c.edge << ": " << c.removed_vertex << " -> "
                      << c.kept_vertex << "\n";
        std::cout << to_json(r).dump(2) << "\n";
        return 0;
    }
    if (cmd_enum->parsed()) {
        SlideClass cls = enumerate_slide_class(load_graph(enum_file), enum_cap);
        json out;
        out["truncated"] = cls.truncated;
        out["classes"] = json::array();
        for (const NumberedGraph& g : cls.reps) out["classes"].push_back(to_json(g));
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    if (cmd_torus->parsed()) {
        GraphAutomorphism f = automorphism_from_json(load_json_file(torus_file));
        std::cout << to_json(mapping_torus(f)).dump(2) << "\n";
        return 0;
    }
    if (cmd_fixture->parsed()) {
        if (fixture_name == "FIG1A")
            std::cout << to_json(fig1a()).dump(2) << "\n";
        else if (fixture_name == "FIG1B")
            std::cout << to_json(fig1b()).dump(2) << "\n";
        else if (fixture_name == "KLEIN")
            std::cout << to_json(klein()).dump(2) << "\n";
        else if (fixture_name == "CAGE")
            std::cout << to_json(cage_graph(fx_m, fx_r, fx_step)).dump(2) << "\n";
        else if (fixture_name == "ROSECOVER")
            std::cout << to_json(rose_cyclic_cover(fx_M, fx_m)).dump(2) << "\n";
        else
            throw InputError("unknown fixture '" + fixture_name + "'");
        return 0;
    }
    if (cmd_present->parsed()) {
        Interp interp;
        if (present_interp == "gbs")
            interp = Interp::gbs;
        else if (present_interp == "finite")
            interp = Interp::finite_quotient;
        else
            throw InputError("--interp must be 'gbs' or 'finite'");
        std::cout << to_json(present(load_graph(present_file), interp)).dump(2) << "\n";
        return 0;
    }
    if (cmd_epi->parsed()) {
        Epimorphism epi = structure_epimorphism(load_graph(epi_file));
        std::cout << "modulus: " << epi.modulus << "\n";
        for (auto& [gen, img] : epi.images) std::cout << gen << " -> " << img << "\n";
        return 0;
    }
    if (cmd_euler->parsed()) {
        NumberedGraph g = load_graph(euler_file);
        std::cout << "chi = " << rational_euler_char(g).str() << "\n";
        if (euler_holonomy_n >= 0)
            std::cout << "m = " << holonomy_order(g, euler_holonomy_n) << "\n";
        if (euler_fiber_m >= 0)
            std::cout << "N = " << fiber_rank(g, euler_fiber_m) << "\n";
        return 0;
    }
    if (cmd_recog->parsed()) {
        auto m = recognize_direct_product(load_graph(recog_file));
        if (m)
            std::cout << "F_" << *m << " x Z\n";
        else
            std::cout << "not a direct product F_M x Z\n";
        return 0;
    }
    if (cmd_fsc->parsed()) {
        FscReport report = fsc_report(load_graph(fsc_file));
        for (const FscClass& c : report.classes) {
            std::cout << c.element_id << ": conjugacy class of a cyclic subgroup of order "
                      << c.subgroup_order << "; centraliser Betti number = "
                      << c.centraliser_betti;
            if (c.trivial_class) std::cout << " (trivial subgroup)";
            std::cout << "\n";
        }
        return 0;
    }
    if (cmd_centreless->parsed()) {
        bool ok = centreless_candidate(load_graph(centreless_file));
        std::cout << (ok ? "edge gcd 1: may present a centreless quotient\n"
                         : "edge gcd > 1: cannot present a centreless quotient\n");
        return 0;
    }
    if (cmd_hom->parsed()) {
        Presentation p = load_presentation(hom_file);
        for (const FiniteGroup& q : catalogue(Tier::medium)) {
            if (q.name() == hom_group) {
                std::cout << hom_count(p, q, oracle_options()) << "\n";
                return 0;
            }
        }
        throw InputError("unknown catalogue group '" + hom_group + "'");
    }
    if (cmd_fp->parsed()) {
        Tier tier = parse_tier(fp_tier);
        Presentation p1 = load_presentation(fp_file1);
        Fingerprint f1 = fingerprint(p1, tier, oracle_options());
        std::cout << fingerprint_text(f1);
        if (fp_file2.empty()) return 0;
        Presentation p2 = load_presentation(fp_file2);
        auto sep = distinguish(p1, p2, tier, oracle_options());
        if (sep) {
            std::cout << "separated by " << *sep << "\n";
            return 1;
        }
        std::cout << "not separated at tier " << fp_tier << "\n";
        return 0;
    }
    if (cmd_hig->parsed()) {
        Presentation p = load_presentation(hig_file);
        check_input(hig_relator >= 0 && hig_relator < static_cast<int>(p.relators.size()),
                    "--relator out of range");
        Word original = cyclic_reduce(p.relators[hig_relator]);
        Presentation twisted = higman_twist(p, hig_relator, hig_letter);
        std::cout << to_json(twisted).dump(2) << "\n";
        if (hig_verify) {
            bool ok = higman_quotient_check(twisted, original, Tier::small, oracle_options());
            std::cerr << (ok ? "relator dies in every small quotient\n"
                             : "relator survives in some small quotient\n");
            return ok ? 0 : 1;
        }
        return 0;
    }
    if (cmd_verify->parsed()) {
        SlideSequence seq = sequence_from_json(load_json_file(verify_file));
        bool ok = verify_certificate(seq);
        std::cout << (ok ? "witness verifies\n" : "witness INVALID\n");
        return ok ? 0 : 1;
    }
    return 2;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const ResourceCapError& e) {
        std::cerr << "resource cap: " << e.what() << "\n";
        return 3;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
}
