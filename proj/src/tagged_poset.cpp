#include "gbslide/tagged_poset.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace gbslide {

std::vector<long long> divisors(long long n) {
    std::vector<long long> out;
    for (long long d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        out.push_back(d);
        if (d != n / d) out.push_back(n / d);
    }
    std::sort(out.begin(), out.end());
    return out;
}

int mobius(long long n) {
    check_input(n >= 1, "mobius: n must be >= 1");
    int primes = 0;
    for (long long p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        n /= p;
        if (n % p == 0) return 0;
        ++primes;
    }
    if (n > 1) ++primes;
    return primes % 2 == 0 ? 1 : -1;
}

namespace {

// Connected components of the subgraph of labels divisible by k, ordered by
// smallest vertex index.
std::vector<Subgraph> level_components(const NumberedGraph& g, long long k) {
    const SerreGraph& s = g.graph();
    std::vector<bool> in(s.vertex_count(), false);
    for (int v = 0; v < s.vertex_count(); ++v) in[v] = g.vertex_label(v) % k == 0;
    std::vector<int> comp(s.vertex_count(), -1);
    std::vector<Subgraph> out;
    for (int start = 0; start < s.vertex_count(); ++start) {
        if (!in[start] || comp[start] >= 0) continue;
        Subgraph sub;
        std::vector<int> stack{start};
        comp[start] = static_cast<int>(out.size());
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            sub.vertices.push_back(v);
            for (const Dart& d : s.darts_at(v)) {
                if (g.edge_label(d.pair) % k != 0) continue;
                int w = s.tau(d);
                // Edge labels divide endpoint labels, so w is in the level
                // subgraph automatically.
                if (comp[w] < 0) {
                    comp[w] = comp[start];
                    stack.push_back(w);
                }
            }
        }
        std::sort(sub.vertices.begin(), sub.vertices.end());
        for (int p = 0; p < s.pair_count(); ++p)
            if (g.edge_label(p) % k == 0 && sub.contains_vertex(s.from(p)))
                sub.pairs.push_back(p);
        out.push_back(std::move(sub));
    }
    return out;
}

} // namespace

std::vector<std::pair<int, int>> TaggedPoset::covers() const {
    std::vector<std::pair<int, int>> out;
    const int n = size();
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (!strictly_less(i, j)) continue;
            bool is_cover = true;
            for (int z = 0; z < n && is_cover; ++z)
                if (strictly_less(i, z) && strictly_less(z, j)) is_cover = false;
            if (is_cover) out.emplace_back(i, j);
        }
    }
    return out;
}

std::vector<int> TaggedPoset::maximal_elements() const {
    std::vector<int> out;
    for (int i = 0; i < size(); ++i) {
        bool maximal = true;
        for (int j = 0; j < size() && maximal; ++j)
            if (strictly_less(i, j)) maximal = false;
        if (maximal) out.push_back(i);
    }
    return out;
}

int TaggedPoset::minimum() const {
    for (int i = 0; i < size(); ++i) {
        bool below_all = true;
        for (int j = 0; j < size() && below_all; ++j)
            if (!leq[i][j]) below_all = false;
        if (below_all) return i;
    }
    return -1;
}

TaggedPoset associated_poset(const NumberedGraph& g) {
    std::set<long long> levels;
    for (int v = 0; v < g.vertex_count(); ++v)
        for (long long d : divisors(g.vertex_label(v))) levels.insert(d);

    TaggedPoset poset;
    for (long long k : levels) {
        int index = 1;
        for (Subgraph& comp : level_components(g, k)) {
            PosetElement el;
            el.level = k;
            el.tag = subgraph_betti(comp);
            el.component = std::move(comp);
            el.index_in_level = index++;
            poset.elements.push_back(std::move(el));
        }
    }

    const int n = poset.size();
    poset.leq.assign(n, std::vector<bool>(n, false));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const PosetElement& a = poset.elements[i];
            const PosetElement& b = poset.elements[j];
            if (b.level % a.level != 0) continue;
            // a precedes b iff the levels divide and a contains b. Vertex
            // containment suffices: b's edges lie in the level-l subgraph,
            // which sits inside the level-k subgraph whose component is a.
            // Distinct components at one level are disjoint, so antisymmetry
            // is automatic.
            poset.leq[i][j] = std::includes(a.component.vertices.begin(),
                                            a.component.vertices.end(),
                                            b.component.vertices.begin(),
                                            b.component.vertices.end());
        }
    }
    // Level-divisibility invariant on every constructed poset.
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (poset.leq[i][j])
                check_internal(poset.elements[j].level % poset.elements[i].level == 0,
                               "poset: comparable elements with non-dividing levels");
    return poset;
}

std::optional<std::vector<int>> data_preserving_iso(const TaggedPoset& p1, const TaggedPoset& p2) {
    const int n = p1.size();
    if (n != p2.size()) return std::nullopt;
    if (n == 0) return std::vector<int>{};

    auto updown = [](const TaggedPoset& p, int i) {
        int up = 0, down = 0;
        for (int j = 0; j < p.size(); ++j) {
            if (p.strictly_less(i, j)) ++up;
            if (p.strictly_less(j, i)) ++down;
        }
        return std::pair(up, down);
    };

    // Iterated refinement on (level, tag, up-degree, down-degree) signatures
    // extended by neighbour color multisets.
    std::vector<int> c1(n), c2(n);
    {
        std::map<std::tuple<long long, int, int, int>, int> code;
        for (int i = 0; i < n; ++i) {
            auto [up, down] = updown(p1, i);
            auto key = std::tuple(p1.elements[i].level, p1.elements[i].tag, up, down);
            auto [it, ins] = code.emplace(key, static_cast<int>(code.size()));
            (void)ins;
            c1[i] = it->second;
        }
        for (int i = 0; i < n; ++i) {
            auto [up, down] = updown(p2, i);
            auto key = std::tuple(p2.elements[i].level, p2.elements[i].tag, up, down);
            auto [it, ins] = code.emplace(key, static_cast<int>(code.size()));
            (void)ins;
            c2[i] = it->second;
        }
        auto signature = [](const TaggedPoset& p, const std::vector<int>& c, int i) {
            std::vector<int> sig{c[i]};
            std::vector<int> above, below;
            for (int j = 0; j < p.size(); ++j) {
                if (p.strictly_less(i, j)) above.push_back(c[j]);
                if (p.strictly_less(j, i)) below.push_back(c[j]);
            }
            std::sort(above.begin(), above.end());
            std::sort(below.begin(), below.end());
            sig.push_back(-1);
            sig.insert(sig.end(), above.begin(), above.end());
            sig.push_back(-2);
            sig.insert(sig.end(), below.begin(), below.end());
            return sig;
        };
        for (int round = 0; round <= n; ++round) {
            std::map<std::vector<int>, int> next;
            std::vector<int> n1(n), n2(n);
            for (int i = 0; i < n; ++i) {
                auto [it, ins] =
                    next.emplace(signature(p1, c1, i), static_cast<int>(next.size()));
                (void)ins;
                n1[i] = it->second;
            }
            for (int i = 0; i < n; ++i) {
                auto [it, ins] =
                    next.emplace(signature(p2, c2, i), static_cast<int>(next.size()));
                (void)ins;
                n2[i] = it->second;
            }
            if (n1 == c1 && n2 == c2) break;
            c1 = std::move(n1);
            c2 = std::move(n2);
        }
        std::map<int, int> h1, h2;
        for (int i = 0; i < n; ++i) {
            ++h1[c1[i]];
            ++h2[c2[i]];
        }
        if (h1 != h2) return std::nullopt;
    }

    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::map<int, int> class_size;
    for (int i = 0; i < n; ++i) ++class_size[c1[i]];
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return std::tuple(class_size[c1[a]], c1[a], a) < std::tuple(class_size[c1[b]], c1[b], b);
    });

    std::vector<int> map(n, -1);
    std::vector<char> used(n, 0);
    auto consistent = [&](int i) {
        for (int j = 0; j < n; ++j) {
            if (map[j] < 0) continue;
            if (p1.leq[i][j] != p2.leq[map[i]][map[j]]) return false;
            if (p1.leq[j][i] != p2.leq[map[j]][map[i]]) return false;
        }
        return true;
    };
    std::function<bool(size_t)> rec = [&](size_t idx) -> bool {
        if (idx == order.size()) return true;
        int i = order[idx];
        for (int w = 0; w < n; ++w) {
            if (used[w] || c2[w] != c1[i]) continue;
            map[i] = w;
            used[w] = 1;
            if (consistent(i) && rec(idx + 1)) return true;
            map[i] = -1;
            used[w] = 0;
        }
        return false;
    };
    if (!rec(0)) return std::nullopt;

    for (int i = 0; i < n; ++i) {
        check_internal(p1.elements[i].level == p2.elements[map[i]].level &&
                           p1.elements[i].tag == p2.elements[map[i]].tag,
                       "poset iso: level or tag mismatch escaped refinement");
    }
    return map;
}

std::pair<long long, long long> edge_count_by_label(const NumberedGraph& g, long long l) {
    check_input(l >= 1, "edge_count_by_label: label must be >= 1");
    long long direct = 0;
    for (int p = 0; p < g.pair_count(); ++p)
        if (g.edge_label(p) == l) ++direct;

    std::set<long long> levels;
    for (int v = 0; v < g.vertex_count(); ++v)
        for (long long d : divisors(g.vertex_label(v))) levels.insert(d);

    long long via_mobius = 0;
    for (long long m : levels) {
        if (m % l != 0) continue;
        long long edges_in_gm = 0;
        for (int p = 0; p < g.pair_count(); ++p)
            if (g.edge_label(p) % m == 0) ++edges_in_gm;
        via_mobius += edges_in_gm * mobius(m / l);
    }
    return {direct, via_mobius};
}

} // namespace gbslide
