#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "gbslide/group_structure.hpp"

namespace gbslide {

// Finite group as a validated multiplication table over 0..order-1.
// Associativity, identity, and inverses are checked at construction, so
// correctness never rests on permutation-group code.
class FiniteGroup {
public:
    FiniteGroup(std::string name, std::vector<int> table);

    const std::string& name() const { return name_; }
    int order() const { return order_; }
    int identity() const { return identity_; }
    int mul(int a, int b) const { return table_[a * order_ + b]; }
    int inv(int a) const { return inverse_[a]; }
    int pow(int a, long long e) const;

    int conjugacy_class_count() const;

    static FiniteGroup cyclic(int n);
    static FiniteGroup symmetric(int n);   // n <= 4
    static FiniteGroup alternating4();
    static FiniteGroup dihedral(int n);    // order 2n
    static FiniteGroup quaternion8();
    static FiniteGroup from_permutations(const std::string& name, int degree,
                                         const std::vector<std::vector<int>>& gens);

private:
    std::string name_;
    int order_;
    int identity_;
    std::vector<int> table_;
    std::vector<int> inverse_;
};

enum class Tier { small, medium };

// small: C2..C6, S3, D4, Q8, A4. medium adds C7..C12, D5, D6, S4.
const std::vector<FiniteGroup>& catalogue(Tier tier);

struct OracleOptions {
    // Counted in table multiplications; exceeding it raises ResourceCapError.
    long long node_budget = 1'000'000'000;
};

// Exact number of homomorphisms p -> q: backtracking over generator images,
// each relator checked as soon as its support is fully assigned.
long long hom_count(const Presentation& p, const FiniteGroup& q, OracleOptions opts = {});

// Calls fn once per homomorphism with the generator image vector.
void for_each_hom(const Presentation& p, const FiniteGroup& q,
                  const std::function<void(const std::vector<int>&)>& fn,
                  OracleOptions opts = {});

using Fingerprint = std::vector<std::pair<std::string, long long>>;

Fingerprint fingerprint(const Presentation& p, Tier tier, OracleOptions opts = {});

// First catalogue group with differing counts, or nullopt when the tier does
// not separate the two presentations.
std::optional<std::string> distinguish(const Presentation& p1, const Presentation& p2,
                                       Tier tier, OracleOptions opts = {});

// True iff the image of `r` is the identity under every homomorphism of the
// twisted presentation into every catalogue group of the tier.
bool higman_quotient_check(const Presentation& twisted, const Word& r, Tier tier,
                           OracleOptions opts = {});

} // namespace gbslide
