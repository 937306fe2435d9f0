#include "gbslide/hom_oracle.hpp"

#include <algorithm>
#include <map>

namespace gbslide {

FiniteGroup::FiniteGroup(std::string name, std::vector<int> table)
    : name_(std::move(name)) {
    order_ = 0;
    while (static_cast<size_t>(order_) * order_ < table.size()) ++order_;
    check_input(static_cast<size_t>(order_) * order_ == table.size() && order_ >= 1,
                "finite group '" + name_ + "': table is not square");
    table_ = std::move(table);
    for (int x : table_)
        check_input(x >= 0 && x < order_, "finite group '" + name_ + "': entry out of range");

    // Latin square check.
    for (int a = 0; a < order_; ++a) {
        std::vector<char> row(order_, 0), col(order_, 0);
        for (int b = 0; b < order_; ++b) {
            check_input(!row[mul(a, b)], "finite group '" + name_ + "': repeated row entry");
            row[mul(a, b)] = 1;
            check_input(!col[mul(b, a)], "finite group '" + name_ + "': repeated column entry");
            col[mul(b, a)] = 1;
        }
    }
    // Identity.
    identity_ = -1;
    for (int e = 0; e < order_; ++e) {
        bool ok = true;
        for (int a = 0; a < order_ && ok; ++a)
            ok = mul(e, a) == a && mul(a, e) == a;
        if (ok) {
            identity_ = e;
            break;
        }
    }
    check_input(identity_ >= 0, "finite group '" + name_ + "': no identity element");
    // Inverses.
    inverse_.assign(order_, -1);
    for (int a = 0; a < order_; ++a) {
        for (int b = 0; b < order_; ++b)
            if (mul(a, b) == identity_ && mul(b, a) == identity_) inverse_[a] = b;
        check_input(inverse_[a] >= 0, "finite group '" + name_ + "': missing inverse");
    }
    // Associativity.
    for (int a = 0; a < order_; ++a)
        for (int b = 0; b < order_; ++b)
            for (int c = 0; c < order_; ++c)
                check_input(mul(mul(a, b), c) == mul(a, mul(b, c)),
                            "finite group '" + name_ + "': not associative");
}

int FiniteGroup::pow(int a, long long e) const {
    if (e < 0) {
        a = inv(a);
        e = -e;
    }
    int acc = identity_;
    while (e > 0) {
        if (e & 1) acc = mul(acc, a);
        a = mul(a, a);
        e >>= 1;
    }
    return acc;
}

int FiniteGroup::conjugacy_class_count() const {
    std::vector<int> cls(order_, -1);
    int count = 0;
    for (int a = 0; a < order_; ++a) {
        if (cls[a] >= 0) continue;
        for (int g = 0; g < order_; ++g) cls[mul(mul(g, a), inv(g))] = count;
        ++count;
    }
    return count;
}

FiniteGroup FiniteGroup::cyclic(int n) {
    check_input(n >= 1, "cyclic group order must be >= 1");
    std::vector<int> t(n * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) t[a * n + b] = (a + b) % n;
    return FiniteGroup("C" + std::to_string(n), std::move(t));
}

FiniteGroup FiniteGroup::from_permutations(const std::string& name, int degree,
                                           const std::vector<std::vector<int>>& gens) {
    // BFS closure starting from the identity permutation.
    std::vector<std::vector<int>> elems;
    std::map<std::vector<int>, int> index;
    std::vector<int> id(degree);
    for (int i = 0; i < degree; ++i) id[i] = i;
    elems.push_back(id);
    index[id] = 0;
    for (size_t i = 0; i < elems.size(); ++i) {
        for (const auto& g : gens) {
            std::vector<int> prod(degree);
            for (int x = 0; x < degree; ++x) prod[x] = g[elems[i][x]];
            if (index.emplace(prod, static_cast<int>(elems.size())).second)
                elems.push_back(prod);
        }
        check_input(elems.size() <= 20000, "permutation closure too large");
    }
    int n = static_cast<int>(elems.size());
    std::vector<int> table(n * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            std::vector<int> prod(degree);
            for (int x = 0; x < degree; ++x) prod[x] = elems[a][elems[b][x]];
            table[a * n + b] = index.at(prod);
        }
    return FiniteGroup(name, std::move(table));
}

FiniteGroup FiniteGroup::symmetric(int n) {
    check_input(n >= 2 && n <= 4, "symmetric group supported for 2 <= n <= 4");
    std::vector<int> cycle(n), swap01(n);
    for (int i = 0; i < n; ++i) {
        cycle[i] = (i + 1) % n;
        swap01[i] = i;
    }
    std::swap(swap01[0], swap01[1]);
    return from_permutations("S" + std::to_string(n), n, {cycle, swap01});
}

FiniteGroup FiniteGroup::alternating4() {
    return from_permutations("A4", 4, {{1, 2, 0, 3}, {0, 2, 3, 1}});
}

FiniteGroup FiniteGroup::dihedral(int n) {
    check_input(n >= 3, "dihedral group needs n >= 3");
    std::vector<int> rot(n), refl(n);
    for (int i = 0; i < n; ++i) {
        rot[i] = (i + 1) % n;
        refl[i] = (n - i) % n;
    }
    return from_permutations("D" + std::to_string(n), n, {rot, refl});
}

FiniteGroup FiniteGroup::quaternion8() {
    // Elements 0..7 = 1, -1, i, -i, j, -j, k, -k.
    auto enc = [](int axis, int neg) { return axis * 2 + neg; };
    auto mulq = [&](int a, int b) {
        int ax = a / 2, an = a % 2, bx = b / 2, bn = b % 2;
        // Basis products over axes 0=1, 1=i, 2=j, 3=k.
        static const int prod_axis[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
        static const int prod_neg[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
        int axis = prod_axis[ax][bx];
        int neg = (an + bn + prod_neg[ax][bx]) % 2;
        return enc(axis, neg);
    };
    std::vector<int> t(64);
    for (int a = 0; a < 8; ++a)
        for (int b = 0; b < 8; ++b) t[a * 8 + b] = mulq(a, b);
    return FiniteGroup("Q8", std::move(t));
}

const std::vector<FiniteGroup>& catalogue(Tier tier) {
    static const std::vector<FiniteGroup> small_groups = [] {
        std::vector<FiniteGroup> v;
        for (int n = 2; n <= 6; ++n) v.push_back(FiniteGroup::cyclic(n));
        v.push_back(FiniteGroup::symmetric(3));
        v.push_back(FiniteGroup::dihedral(4));
        v.push_back(FiniteGroup::quaternion8());
        v.push_back(FiniteGroup::alternating4());
        return v;
    }();
    static const std::vector<FiniteGroup> medium_groups = [] {
        std::vector<FiniteGroup> v = small_groups;
        for (int n = 7; n <= 12; ++n) v.push_back(FiniteGroup::cyclic(n));
        v.push_back(FiniteGroup::dihedral(5));
        v.push_back(FiniteGroup::dihedral(6));
        v.push_back(FiniteGroup::symmetric(4));
        return v;
    }();
    return tier == Tier::small ? small_groups : medium_groups;
}

namespace {

struct Search {
    const Presentation& p;
    const FiniteGroup& q;
    long long budget;
    long long used = 0;

    // Relators bucketed by the last generator index they mention.
    std::vector<std::vector<const Word*>> due;
    std::vector<int> images;

    Search(const Presentation& p_, const FiniteGroup& q_, long long budget_)
        : p(p_), q(q_), budget(budget_) {
        int ng = static_cast<int>(p.generators.size());
        due.resize(ng + 1);
        for (const Word& r : p.relators) {
            int last = -1;
            for (auto [g, e] : r.syllables) {
                (void)e;
                last = std::max(last, g);
            }
            due[last + 1].push_back(&r); // empty relators land in slot 0
        }
        images.assign(ng, 0);
    }

    int mul(int a, int b) {
        if (++used > budget)
            throw ResourceCapError("hom search exceeded node budget of " +
                                   std::to_string(budget));
        return q.mul(a, b);
    }

    int eval(const Word& w) {
        int acc = q.identity();
        for (auto [g, e] : w.syllables) {
            int base = e >= 0 ? images[g] : q.inv(images[g]);
            long long k = e >= 0 ? e : -static_cast<long long>(e);
            // Square-and-multiply, each table lookup billed.
            int sq = base;
            while (k > 0) {
                if (k & 1) acc = mul(acc, sq);
                k >>= 1;
                if (k > 0) sq = mul(sq, sq);
            }
        }
        return acc;
    }

    bool relators_hold(int upto) {
        for (const Word* r : due[upto])
            if (eval(*r) != q.identity()) return false;
        return true;
    }

    void run(int g, const std::function<void(const std::vector<int>&)>& fn) {
        if (g == static_cast<int>(p.generators.size())) {
            fn(images);
            return;
        }
        for (int img = 0; img < q.order(); ++img) {
            images[g] = img;
            if (relators_hold(g + 1)) run(g + 1, fn);
        }
    }
};

} // namespace

void for_each_hom(const Presentation& p, const FiniteGroup& q,
                  const std::function<void(const std::vector<int>&)>& fn, OracleOptions opts) {
    Search search(p, q, opts.node_budget);
    // Relators with empty support must hold for the trivial evaluation.
    if (!search.relators_hold(0)) return;
    search.run(0, fn);
}

long long hom_count(const Presentation& p, const FiniteGroup& q, OracleOptions opts) {
    long long count = 0;
    for_each_hom(p, q, [&](const std::vector<int>&) { ++count; }, opts);
    return count;
}

Fingerprint fingerprint(const Presentation& p, Tier tier, OracleOptions opts) {
    Fingerprint fp;
    for (const FiniteGroup& q : catalogue(tier)) fp.emplace_back(q.name(), hom_count(p, q, opts));
    return fp;
}

std::optional<std::string> distinguish(const Presentation& p1, const Presentation& p2, Tier tier,
                                       OracleOptions opts) {
    for (const FiniteGroup& q : catalogue(tier))
        if (hom_count(p1, q, opts) != hom_count(p2, q, opts)) return q.name();
    return std::nullopt;
}

bool higman_quotient_check(const Presentation& twisted, const Word& r, Tier tier,
                           OracleOptions opts) {
    for (auto [g, e] : r.syllables) {
        (void)e;
        check_input(g >= 0 && g < static_cast<int>(twisted.generators.size()),
                    "higman check: word uses an unknown generator");
    }
    bool all_trivial = true;
    for (const FiniteGroup& q : catalogue(tier)) {
        for_each_hom(
            twisted, q,
            [&](const std::vector<int>& images) {
                int acc = q.identity();
                for (auto [g, e] : r.syllables) acc = q.mul(acc, q.pow(images[g], e));
                if (acc != q.identity()) all_trivial = false;
            },
            opts);
        if (!all_trivial) break;
    }
    return all_trivial;
}

} // namespace gbslide
