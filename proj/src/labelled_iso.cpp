#include "gbslide/labelled_iso.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <tuple>

namespace gbslide {

namespace {

std::vector<long long> vertex_signature(const SerreGraph& g, const std::vector<long long>& el,
                                        const std::vector<int>& colors, int v) {
    std::vector<long long> sig{colors[v]};
    std::vector<std::pair<long long, long long>> nb;
    for (const Dart& d : g.darts_at(v)) nb.emplace_back(el[d.pair], colors[g.tau(d)]);
    std::sort(nb.begin(), nb.end());
    for (auto& [a, b] : nb) {
        sig.push_back(a);
        sig.push_back(b);
    }
    return sig;
}

using EdgeProfile = std::map<std::tuple<int, int, long long>, std::vector<int>>;

// Pairs bucketed by (min endpoint, max endpoint, label), ids in index order.
EdgeProfile edge_profile(const SerreGraph& g, const std::vector<long long>& el) {
    EdgeProfile prof;
    for (int p = 0; p < g.pair_count(); ++p) {
        int a = std::min(g.from(p), g.to(p));
        int b = std::max(g.from(p), g.to(p));
        prof[{a, b, el[p]}].push_back(p);
    }
    return prof;
}

} // namespace

std::optional<LabelledIso> labelled_iso(const SerreGraph& g1,
                                        const std::vector<long long>& vlabel1,
                                        const std::vector<long long>& elabel1,
                                        const SerreGraph& g2,
                                        const std::vector<long long>& vlabel2,
                                        const std::vector<long long>& elabel2) {
    const int n = g1.vertex_count();
    if (n != g2.vertex_count() || g1.pair_count() != g2.pair_count()) return std::nullopt;
    if (n == 0) return LabelledIso{};

    // Joint color refinement over both graphs so color ids are comparable.
    std::vector<int> c1(n), c2(n);
    {
        std::map<std::pair<long long, long long>, int> code;
        for (int v = 0; v < n; ++v) {
            auto [it, ins] = code.emplace(
                std::pair(vlabel1[v], static_cast<long long>(g1.darts_at(v).size())),
                static_cast<int>(code.size()));
            (void)ins;
            c1[v] = it->second;
        }
        for (int v = 0; v < n; ++v) {
            auto [it, ins] = code.emplace(
                std::pair(vlabel2[v], static_cast<long long>(g2.darts_at(v).size())),
                static_cast<int>(code.size()));
            (void)ins;
            c2[v] = it->second;
        }
        for (int round = 0; round <= n; ++round) {
            std::map<std::vector<long long>, int> next;
            std::vector<int> n1(n), n2(n);
            for (int v = 0; v < n; ++v) {
                auto [it, ins] = next.emplace(vertex_signature(g1, elabel1, c1, v),
                                              static_cast<int>(next.size()));
                (void)ins;
                n1[v] = it->second;
            }
            for (int v = 0; v < n; ++v) {
                auto [it, ins] = next.emplace(vertex_signature(g2, elabel2, c2, v),
                                              static_cast<int>(next.size()));
                (void)ins;
                n2[v] = it->second;
            }
            if (n1 == c1 && n2 == c2) break;
            c1 = std::move(n1);
            c2 = std::move(n2);
        }
        std::map<int, int> h1, h2;
        for (int v = 0; v < n; ++v) {
            ++h1[c1[v]];
            ++h2[c2[v]];
        }
        if (h1 != h2) return std::nullopt;
    }

    EdgeProfile prof1 = edge_profile(g1, elabel1);
    EdgeProfile prof2 = edge_profile(g2, elabel2);

    // Buckets of prof1 touching each vertex, for incremental checks.
    std::vector<std::vector<const EdgeProfile::value_type*>> touching(n);
    for (const auto& kv : prof1) {
        auto [a, b, lab] = kv.first;
        (void)lab;
        touching[a].push_back(&kv);
        if (b != a) touching[b].push_back(&kv);
    }

    // Backtracking over vertices, most constrained color classes first.
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::map<int, int> class_size;
    for (int v = 0; v < n; ++v) ++class_size[c1[v]];
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return std::tuple(class_size[c1[a]], c1[a], a) < std::tuple(class_size[c1[b]], c1[b], b);
    });

    std::vector<int> vmap(n, -1);
    std::vector<char> used(n, 0);

    auto consistent_at = [&](int u) {
        for (const auto* kv : touching[u]) {
            auto [a, b, lab] = kv->first;
            if (vmap[a] < 0 || vmap[b] < 0) continue;
            int ia = std::min(vmap[a], vmap[b]);
            int ib = std::max(vmap[a], vmap[b]);
            auto it = prof2.find({ia, ib, lab});
            size_t have = (it == prof2.end()) ? 0 : it->second.size();
            if (have != kv->second.size()) return false;
        }
        return true;
    };

    std::function<bool(size_t)> rec = [&](size_t i) -> bool {
        if (i == order.size()) return true;
        int u = order[i];
        for (int w = 0; w < n; ++w) {
            if (used[w] || c2[w] != c1[u]) continue;
            vmap[u] = w;
            used[w] = 1;
            if (consistent_at(u) && rec(i + 1)) return true;
            vmap[u] = -1;
            used[w] = 0;
        }
        return false;
    };
    if (!rec(0)) return std::nullopt;

    // Build the edge bijection: match pairs within each (endpoint image,
    // label) bucket in id order.
    LabelledIso iso;
    iso.vmap = vmap;
    iso.emap.assign(g1.pair_count(), Dart{-1, false});
    for (const auto& [key, plist] : prof1) {
        auto [a, b, lab] = key;
        int ia = std::min(vmap[a], vmap[b]);
        int ib = std::max(vmap[a], vmap[b]);
        auto it = prof2.find({ia, ib, lab});
        if (it == prof2.end() || it->second.size() != plist.size()) return std::nullopt;
        for (size_t i = 0; i < plist.size(); ++i) {
            int p = plist[i];
            int q = it->second[i];
            bool flip = vmap[g1.from(p)] != g2.from(q);
            iso.emap[p] = Dart{q, flip};
        }
    }
    return iso;
}

} // namespace gbslide
