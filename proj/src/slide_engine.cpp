#include "gbslide/slide_engine.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <set>

namespace gbslide {

namespace {

// BFS path of darts from one vertex to another inside the subgraph spanned by
// allowed_pairs, optionally avoiding one pair entirely. Empty when from == to;
// nullopt when unreachable.
std::optional<std::vector<Dart>> dart_path(const NumberedGraph& g, int from, int to,
                                           const std::vector<char>& allowed_pair,
                                           int avoid_pair = -1) {
    if (from == to) return std::vector<Dart>{};
    const SerreGraph& s = g.graph();
    std::vector<Dart> via(s.vertex_count(), Dart{-1, false});
    std::vector<char> seen(s.vertex_count(), 0);
    std::deque<int> queue{from};
    seen[from] = 1;
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        for (const Dart& d : s.darts_at(v)) {
            if (d.pair == avoid_pair || !allowed_pair[d.pair]) continue;
            int w = s.tau(d);
            if (seen[w]) continue;
            seen[w] = 1;
            via[w] = d;
            if (w == to) {
                std::vector<Dart> path;
                int x = to;
                while (x != from) {
                    path.push_back(via[x]);
                    x = s.origin(via[x]);
                }
                std::reverse(path.begin(), path.end());
                return path;
            }
            queue.push_back(w);
        }
    }
    return std::nullopt;
}

void apply_move(NumberedGraph& h, const SlideMove& m, std::vector<SlideMove>& out) {
    h = slide(h, m);
    out.push_back(m);
}

// Slides the tau end of the given dart along a path of darts.
void slide_along_path(NumberedGraph& h, Dart moved, const std::vector<Dart>& path,
                      std::vector<SlideMove>& out) {
    for (const Dart& f : path) {
        check_internal(h.graph().tau(moved) == h.graph().origin(f),
                       "slide path: dart chain broken");
        apply_move(h, SlideMove{moved, f}, out);
    }
}

// Core octopus normalization over the pairs in kpairs (all one label),
// anchoring at `anchor`. Mutates h and appends the moves performed.
void octopus_moves(NumberedGraph& h, const std::vector<int>& kpairs, int anchor,
                   std::vector<SlideMove>& out) {
    std::vector<char> allowed(h.pair_count(), 0);
    for (int p : kpairs) allowed[p] = 1;

    // Phase A: make every pair incident to the anchor. For a pair away from
    // the anchor, at least one endpoint reaches the anchor through the other
    // pairs; slide that endpoint over.
    for (;;) {
        int pick = -1;
        for (int p : kpairs) {
            if (h.graph().from(p) == anchor || h.graph().to(p) == anchor) continue;
            pick = p;
            break;
        }
        if (pick < 0) break;
        Dart d{pick, false};
        auto path = dart_path(h, h.graph().tau(d), anchor, allowed, pick);
        if (!path) {
            d = Dart{pick, true};
            path = dart_path(h, h.graph().tau(d), anchor, allowed, pick);
        }
        check_internal(path.has_value(), "octopus: anchor unreachable, component disconnected");
        slide_along_path(h, d, *path, out);
    }

    // Phase B: collapse parallel anchor edges at each leaf into loops,
    // keeping the smallest pair index.
    for (;;) {
        int leaf = -1;
        std::vector<int> at_leaf;
        for (int v = 0; v < h.vertex_count() && leaf < 0; ++v) {
            if (v == anchor) continue;
            at_leaf.clear();
            for (int p : kpairs)
                if (!h.graph().is_loop(p) &&
                    (h.graph().from(p) == v || h.graph().to(p) == v))
                    at_leaf.push_back(p);
            if (at_leaf.size() >= 2) leaf = v;
        }
        if (leaf < 0) break;
        int keep = at_leaf[0];
        Dart back{keep, h.graph().to(keep) != anchor};
        // back runs leaf -> anchor.
        check_internal(h.graph().origin(back) == leaf && h.graph().tau(back) == anchor,
                       "octopus: bad return dart");
        for (size_t i = 1; i < at_leaf.size(); ++i) {
            int p = at_leaf[i];
            Dart d{p, h.graph().to(p) != leaf};
            check_internal(h.graph().tau(d) == leaf, "octopus: bad leaf dart");
            apply_move(h, SlideMove{d, back}, out);
        }
    }
}

std::vector<long long> label_multiset(const NumberedGraph& g) {
    std::vector<long long> out = g.edge_labels();
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

std::vector<SlideMove> legal_slides(const NumberedGraph& g) {
    std::vector<SlideMove> out;
    for (int p = 0; p < g.pair_count(); ++p) {
        for (bool rev : {false, true}) {
            Dart d{p, rev};
            int v = g.graph().tau(d);
            for (const Dart& f : g.graph().darts_at(v)) {
                if (f.pair == p) continue;
                if (g.edge_label(f.pair) % g.edge_label(p) != 0) continue;
                out.push_back(SlideMove{d, f});
            }
        }
    }
    return out;
}

SlideSequence octopus_normal_form(const NumberedGraph& g,
                                  const std::vector<int>& component_pairs, int anchor) {
    check_input(anchor >= 0 && anchor < g.vertex_count(), "octopus: anchor out of range");
    check_input(std::set<int>(component_pairs.begin(), component_pairs.end()).size() ==
                    component_pairs.size(),
                "octopus: duplicate pair in component");
    if (!component_pairs.empty()) {
        long long label = g.edge_label(component_pairs.front());
        std::set<int> touched;
        for (int p : component_pairs) {
            check_input(p >= 0 && p < g.pair_count(), "octopus: pair out of range");
            check_input(g.edge_label(p) == label, "octopus: component edges must share one label");
            touched.insert(g.graph().from(p));
            touched.insert(g.graph().to(p));
        }
        check_input(touched.count(anchor) > 0, "octopus: anchor outside the component");
        // Connectivity of the component.
        std::vector<char> allowed(g.pair_count(), 0);
        for (int p : component_pairs) allowed[p] = 1;
        for (int v : touched)
            check_input(dart_path(g, anchor, v, allowed).has_value(),
                        "octopus: component is not connected");
    }
    SlideSequence seq;
    seq.source = g;
    NumberedGraph h = g;
    octopus_moves(h, component_pairs, anchor, seq.moves);
    seq.target = h;
    seq.vertex_bijection.resize(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) seq.vertex_bijection[v] = v;
    seq.edge_bijection.resize(g.pair_count());
    for (int p = 0; p < g.pair_count(); ++p) seq.edge_bijection[p] = Dart{p, false};
    NumberedGraph replay = g;
    seq.state_hashes.clear();
    for (const SlideMove& m : seq.moves) {
        replay = slide(replay, m);
        seq.state_hashes.push_back(graph_hash(replay));
    }
    return seq;
}

SlideSequence synthesize_slides(const NumberedGraph& g1, const NumberedGraph& g2,
                                const std::vector<int>& poset_iso) {
    check_input(is_reduced(g1) && is_reduced(g2), "synthesize: inputs must be reduced");
    TaggedPoset p1 = associated_poset(g1);
    TaggedPoset p2 = associated_poset(g2);
    check_input(static_cast<int>(poset_iso.size()) == p1.size() && p1.size() == p2.size(),
                "synthesize: poset bijection has wrong size");

    const int nv = g1.vertex_count();
    check_internal(nv == g2.vertex_count(), "synthesize: vertex counts differ");

    // Step 1: read the vertex bijection off maximal elements. In a reduced
    // graph, the element of level d_v containing v is the single-vertex
    // component {v + its d_v loops}, and these are exactly the maximal
    // elements.
    auto max_element_of_vertex = [](const TaggedPoset& p, const NumberedGraph& g, int v) {
        for (int i = 0; i < p.size(); ++i) {
            const PosetElement& el = p.elements[i];
            if (el.level == g.vertex_label(v) && el.component.contains_vertex(v)) {
                check_internal(el.component.vertices.size() == 1,
                               "synthesize: top-level component not a single vertex");
                return i;
            }
        }
        throw InternalError("synthesize: missing maximal element for a vertex");
    };
    std::vector<int> vmap(nv, -1);
    std::vector<char> hit(nv, 0);
    for (int v = 0; v < nv; ++v) {
        int i = max_element_of_vertex(p1, g1, v);
        const PosetElement& image = p2.elements[poset_iso[i]];
        check_internal(image.component.vertices.size() == 1,
                       "synthesize: image of a maximal element is not a vertex");
        int w = image.component.vertices[0];
        check_internal(!hit[w], "synthesize: vertex bijection collision");
        check_internal(g1.vertex_label(v) == g2.vertex_label(w),
                       "synthesize: vertex bijection breaks labels");
        hit[w] = 1;
        vmap[v] = w;
    }

    // Steps 2-4: per corresponding component, equal vertex images, tags, and
    // per-label edge counts; whole-graph label counts cross-checked through
    // the Moebius route as well.
    for (int i = 0; i < p1.size(); ++i) {
        const PosetElement& a = p1.elements[i];
        const PosetElement& b = p2.elements[poset_iso[i]];
        check_internal(a.level == b.level && a.tag == b.tag,
                       "synthesize: poset bijection not data-preserving");
        std::vector<int> image;
        for (int v : a.component.vertices) image.push_back(vmap[v]);
        std::sort(image.begin(), image.end());
        check_internal(image == b.component.vertices,
                       "synthesize: component vertex sets do not correspond");
        std::map<long long, int> c1, c2;
        for (int p : a.component.pairs) ++c1[g1.edge_label(p)];
        for (int q : b.component.pairs) ++c2[g2.edge_label(q)];
        check_internal(c1 == c2, "synthesize: per-label edge counts differ in a component");
    }
    {
        std::set<long long> labels(g1.edge_labels().begin(), g1.edge_labels().end());
        for (long long l : labels) {
            auto [d1, m1] = edge_count_by_label(g1, l);
            auto [d2, m2] = edge_count_by_label(g2, l);
            check_internal(d1 == m1 && d2 == m2 && d1 == d2,
                           "synthesize: Moebius edge counts disagree");
        }
    }

    SlideSequence seq;
    seq.source = g1;
    seq.target = g2;
    seq.vertex_bijection = vmap;
    seq.edge_bijection.assign(g1.pair_count(), Dart{-1, false});

    // Already aligned under the Step-1 bijection: no moves needed. Pairs are
    // matched within each (endpoint image, label) bucket in id order.
    if (labelled_equal_under(g1, g2, vmap)) {
        std::map<std::tuple<int, int, long long>, std::vector<int>> buckets;
        for (int q = 0; q < g2.pair_count(); ++q) {
            int u = g2.graph().from(q), w = g2.graph().to(q);
            buckets[{std::min(u, w), std::max(u, w), g2.edge_label(q)}].push_back(q);
        }
        for (int p = 0; p < g1.pair_count(); ++p) {
            int u = vmap[g1.graph().from(p)], w = vmap[g1.graph().to(p)];
            auto& bucket = buckets[{std::min(u, w), std::max(u, w), g1.edge_label(p)}];
            check_internal(!bucket.empty(), "synthesize: bucket matching failed");
            int q = bucket.back();
            bucket.pop_back();
            seq.edge_bijection[p] = Dart{q, vmap[g1.graph().from(p)] != g2.graph().from(q)};
        }
        return seq;
    }

    NumberedGraph h1 = g1;
    const std::vector<long long> start_labels = label_multiset(g1);

    // Pair correspondence h1 -> g2, filled label by label.
    std::vector<Dart>& emap = seq.edge_bijection;

    // Step 5: process distinct label values in descending order; this
    // refines the top-down poset induction since any proper multiple is
    // numerically greater.
    std::set<long long, std::greater<long long>> labels(g1.edge_labels().begin(),
                                                        g1.edge_labels().end());
    for (long long k : labels) {
        for (int i = 0; i < p1.size(); ++i) {
            if (p1.elements[i].level != k) continue;
            const PosetElement& a = p1.elements[i];
            const PosetElement& b = p2.elements[poset_iso[i]];

            std::vector<int> kpairs1, kpairs2;
            for (int p : a.component.pairs)
                if (g1.edge_label(p) == k) kpairs1.push_back(p);
            for (int q : b.component.pairs)
                if (g2.edge_label(q) == k) kpairs2.push_back(q);
            check_internal(kpairs1.size() == kpairs2.size(),
                           "synthesize: k-edge counts differ in a component");
            if (kpairs1.empty()) continue;

            // C-partition: components of the subgraph of `a` spanned by
            // edges with label > k, computed in the current h1 (same vertex
            // sets as in g1, since slides never change them).
            std::vector<char> high1(g1.pair_count(), 0), high2(g2.pair_count(), 0);
            for (int p : a.component.pairs)
                if (g1.edge_label(p) > k) high1[p] = 1;
            for (int q : b.component.pairs)
                if (g2.edge_label(q) > k) high2[q] = 1;

            auto c_class = [](const NumberedGraph& g, const std::vector<int>& verts,
                              const std::vector<char>& allowed) {
                std::map<int, int> cls;
                int next = 0;
                for (int v : verts) {
                    if (cls.count(v)) continue;
                    int c = next++;
                    std::vector<int> stack{v};
                    cls[v] = c;
                    while (!stack.empty()) {
                        int x = stack.back();
                        stack.pop_back();
                        for (const Dart& d : g.graph().darts_at(x)) {
                            if (!allowed[d.pair]) continue;
                            int w = g.graph().tau(d);
                            if (!cls.count(w)) {
                                cls[w] = c;
                                stack.push_back(w);
                            }
                        }
                    }
                }
                return cls;
            };
            std::map<int, int> cls1 = c_class(h1, a.component.vertices, high1);
            std::map<int, int> cls2 = c_class(g2, b.component.vertices, high2);

            // The >k edges of the component are already aligned, so the
            // C-partitions must correspond under vmap.
            {
                std::set<std::vector<int>> parts1, parts2;
                std::map<int, std::vector<int>> by1, by2;
                for (auto [v, c] : cls1) by1[c].push_back(vmap[v]);
                for (auto [v, c] : cls2) by2[c].push_back(v);
                for (auto& [c, vs] : by1) {
                    std::sort(vs.begin(), vs.end());
                    parts1.insert(vs);
                }
                for (auto& [c, vs] : by2) {
                    std::sort(vs.begin(), vs.end());
                    parts2.insert(vs);
                }
                check_internal(parts1 == parts2,
                               "synthesize: C-partitions do not correspond");
            }

            // Representative of each class: the vertex whose g2 image has the
            // smallest name (consistent on both sides through vmap).
            auto name2 = [&](int w) { return g2.graph().vertex_name(w); };
            std::map<int, int> rep1; // class -> h1 vertex
            for (auto [v, c] : cls1) {
                auto it = rep1.find(c);
                if (it == rep1.end() || name2(vmap[v]) < name2(vmap[it->second]))
                    rep1[c] = v;
            }

            // Slide every k-edge endpoint to its class representative, on h1
            // for real and on a scratch copy of g2 for the alignment replay.
            NumberedGraph h2 = g2;
            std::vector<SlideMove> m2;
            auto normalize = [&](NumberedGraph& h, const std::vector<int>& kpairs,
                                 const std::vector<char>& high, auto target_of,
                                 std::vector<SlideMove>& out) {
                for (int p : kpairs) {
                    for (bool rev : {false, true}) {
                        Dart d{p, rev};
                        int at = h.graph().tau(d);
                        int want = target_of(at);
                        if (at == want) continue;
                        auto path = dart_path(h, at, want, high);
                        check_internal(path.has_value(),
                                       "synthesize: representative unreachable inside C");
                        slide_along_path(h, d, *path, out);
                    }
                }
            };
            normalize(h1, kpairs1, high1,
                      [&](int v) { return rep1[cls1.at(v)]; }, seq.moves);
            // Class of a g2 vertex keyed through the h1 partition image.
            std::map<int, int> rep2; // g2 vertex -> g2 representative
            for (auto [v, c] : cls1) rep2[vmap[v]] = vmap[rep1[c]];
            normalize(h2, kpairs2, high2, [&](int v) { return rep2.at(v); }, m2);

            // Anchor: representative with the smallest g2 name.
            int anchor1 = -1;
            for (auto [c, v] : rep1)
                if (anchor1 < 0 || name2(vmap[v]) < name2(vmap[anchor1])) anchor1 = v;
            int anchor2 = vmap[anchor1];

            octopus_moves(h1, kpairs1, anchor1, seq.moves);
            octopus_moves(h2, kpairs2, anchor2, m2);

            // Match the two octopi: the leaf edge at each leaf vertex pairs
            // off through vmap, anchor loops pair off in index order.
            std::map<int, int> leaf1, leaf2; // leaf vertex -> pair
            std::vector<int> loops1, loops2;
            for (int p : kpairs1) {
                if (h1.graph().is_loop(p)) {
                    check_internal(h1.graph().from(p) == anchor1,
                                   "synthesize: octopus loop away from anchor");
                    loops1.push_back(p);
                } else {
                    int u = h1.graph().from(p) == anchor1 ? h1.graph().to(p)
                                                          : h1.graph().from(p);
                    check_internal(leaf1.emplace(u, p).second,
                                   "synthesize: octopus leaf with two edges");
                }
            }
            for (int q : kpairs2) {
                if (h2.graph().is_loop(q)) {
                    check_internal(h2.graph().from(q) == anchor2,
                                   "synthesize: octopus loop away from anchor (target)");
                    loops2.push_back(q);
                } else {
                    int u = h2.graph().from(q) == anchor2 ? h2.graph().to(q)
                                                          : h2.graph().from(q);
                    check_internal(leaf2.emplace(u, q).second,
                                   "synthesize: octopus leaf with two edges (target)");
                }
            }
            check_internal(leaf1.size() == leaf2.size() && loops1.size() == loops2.size(),
                           "synthesize: octopus shapes differ");
            for (auto [u, p] : leaf1) {
                auto it = leaf2.find(vmap[u]);
                check_internal(it != leaf2.end(), "synthesize: octopus leaves differ");
                int q = it->second;
                bool flip = vmap[h1.graph().from(p)] != h2.graph().from(q);
                emap[p] = Dart{q, flip};
            }
            for (size_t i2 = 0; i2 < loops1.size(); ++i2)
                emap[loops1[i2]] = Dart{loops2[i2], false};

            // Replay the inverse of the target-side normalization on h1,
            // translated through the pair correspondence. Pair ids never
            // change under slides, so the correspondence stays valid.
            std::vector<Dart> rmap(g2.pair_count(), Dart{-1, false});
            for (int p = 0; p < g1.pair_count(); ++p)
                if (emap[p].pair >= 0) rmap[emap[p].pair] = Dart{p, emap[p].rev};
            for (auto it = m2.rbegin(); it != m2.rend(); ++it) {
                SlideMove inv{it->moved, bar(it->along)};
                Dart mt = rmap[inv.moved.pair];
                Dart at = rmap[inv.along.pair];
                check_internal(mt.pair >= 0 && at.pair >= 0,
                               "synthesize: replay references an unmatched pair");
                SlideMove translated{Dart{mt.pair, inv.moved.rev != mt.rev},
                                     Dart{at.pair, inv.along.rev != at.rev}};
                apply_move(h1, translated, seq.moves);
            }

            // The component's k-edges now sit exactly where g2 has them.
            for (int p : kpairs1) {
                int q = emap[p].pair;
                int u1 = emap[p].rev ? h1.graph().to(p) : h1.graph().from(p);
                int w1 = emap[p].rev ? h1.graph().from(p) : h1.graph().to(p);
                check_internal(vmap[u1] == g2.graph().from(q) && vmap[w1] == g2.graph().to(q),
                               "synthesize: k-edges misaligned after replay");
            }
        }
        // Label multiset and vertex labels are untouched by construction;
        // assert anyway.
        check_internal(label_multiset(h1) == start_labels,
                       "synthesize: edge label multiset changed");
        for (int v = 0; v < nv; ++v)
            check_internal(h1.vertex_label(v) == g1.vertex_label(v),
                           "synthesize: vertex labels changed");
    }

    for (int p = 0; p < g1.pair_count(); ++p)
        check_internal(emap[p].pair >= 0, "synthesize: unmatched edge pair");
    check_internal(labelled_equal_under(h1, g2, vmap),
                   "synthesize: endpoint graphs not equal under the bijection");

    seq.state_hashes.clear();
    NumberedGraph replay = g1;
    for (const SlideMove& m : seq.moves) {
        replay = slide(replay, m);
        seq.state_hashes.push_back(graph_hash(replay));
    }
    return seq;
}

NumberedGraph apply_sequence(const NumberedGraph& g, const SlideSequence& seq) {
    check_input(g == seq.source, "apply: graph does not match the certificate source");
    NumberedGraph cur = g;
    for (const CollapseStep& step : seq.source_collapses) cur = apply_collapse(cur, step);
    size_t i = 0;
    for (const SlideMove& m : seq.moves) {
        cur = slide(cur, m);
        if (i < seq.state_hashes.size())
            check_input(graph_hash(cur) == seq.state_hashes[i],
                        "apply: state hash mismatch at move " + std::to_string(i));
        ++i;
    }
    return cur;
}

bool verify_certificate(const SlideSequence& seq) {
    try {
        NumberedGraph x = apply_sequence(seq.source, seq);
        NumberedGraph r2 = seq.target;
        for (const CollapseStep& step : seq.target_collapses) r2 = apply_collapse(r2, step);
        if (static_cast<int>(seq.vertex_bijection.size()) != x.vertex_count()) return false;
        return labelled_equal_under(x, r2, seq.vertex_bijection);
    } catch (const InputError&) {
        return false;
    }
}

IsoDecision slide_equivalent(const NumberedGraph& g1, const NumberedGraph& g2) {
    auto [r1, log1] = reduce(g1);
    auto [r2, log2] = reduce(g2);

    SlideSequence cert;
    cert.source = g1;
    cert.target = g2;
    cert.source_collapses = log1;
    cert.target_collapses = log2;

    if (auto li = labelled_iso(r1, r2)) {
        // Equal up to relabelling: the empty move sequence already works.
        cert.vertex_bijection = li->vmap;
        cert.edge_bijection = li->emap;
        check_internal(verify_certificate(cert), "slide_equivalent: trivial certificate failed");
        return IsoDecision{true, cert};
    }

    TaggedPoset p1 = associated_poset(r1);
    TaggedPoset p2 = associated_poset(r2);
    auto iso = data_preserving_iso(p1, p2);
    if (!iso) return IsoDecision{false, std::nullopt};

    SlideSequence inner = synthesize_slides(r1, r2, *iso);
    cert.moves = inner.moves;
    cert.state_hashes = inner.state_hashes;
    cert.vertex_bijection = inner.vertex_bijection;
    cert.edge_bijection = inner.edge_bijection;
    check_internal(verify_certificate(cert), "slide_equivalent: synthesized certificate failed");
    return IsoDecision{true, cert};
}

SlideClass enumerate_slide_class(const NumberedGraph& g, int cap) {
    check_input(is_reduced(g), "enumerate: graph must be reduced");
    check_input(cap >= 1, "enumerate: cap must be >= 1");
    SlideClass out;
    out.reps.push_back(g);
    std::deque<size_t> queue{0};
    while (!queue.empty() && !out.truncated) {
        NumberedGraph cur = out.reps[queue.front()];
        queue.pop_front();
        for (const SlideMove& m : legal_slides(cur)) {
            NumberedGraph next = slide(cur, m);
            bool known = false;
            for (const NumberedGraph& rep : out.reps)
                if (labelled_iso(rep, next)) {
                    known = true;
                    break;
                }
            if (known) continue;
            if (static_cast<int>(out.reps.size()) >= cap) {
                out.truncated = true;
                break;
            }
            out.reps.push_back(next);
            queue.push_back(out.reps.size() - 1);
        }
    }
    return out;
}

} // namespace gbslide
