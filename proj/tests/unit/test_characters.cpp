#include <doctest.h>

#include "crystal_lr/characters.hpp"

using namespace clr;

namespace {
using Split = std::map<std::pair<GenPartition, GenPartition>, long long>;

LaurentPoly mono(std::vector<int> e, long long c = 1) { return LaurentPoly::monomial(e, c); }

// coefficient of t^j at every monomial
LaurentPoly slice(const TLaurentPoly& p, int j) {
    LaurentPoly r(p.nvars());
    for (auto& [e, c] : p.terms()) r.add_term(e, c.coeff(j));
    return r;
}

LaurentPoly at_one(const TLaurentPoly& p) {
    LaurentPoly r(p.nvars());
    for (auto& [e, c] : p.terms()) r.add_term(e, c.eval1());
    return r;
}

// m_λ in n variables
LaurentPoly monomial_symmetric(std::vector<int> lam) {
    std::sort(lam.begin(), lam.end());
    LaurentPoly r(static_cast<int>(lam.size()));
    do r.add_term(lam, 1);
    while (std::next_permutation(lam.begin(), lam.end()));
    return r;
}
}  // namespace

TEST_CASE("laurent schur polynomials") {
    CHECK(laurent_schur(GenPartition{0, 0, 0}) == LaurentPoly::constant(3, 1));
    CHECK(laurent_schur(GenPartition{1, 0}) == mono({1, 0}) + mono({0, 1}));
    CHECK(laurent_schur(GenPartition{0, -1}) == mono({-1, 0}) + mono({0, -1}));
    CHECK(laurent_schur(GenPartition{1, -1}) == mono({1, -1}) + mono({0, 0}) + mono({-1, 1}));
    for (auto& lam : gen_partitions(3, -2, 2)) CHECK(laurent_schur(lam).is_symmetric());
}

TEST_CASE("branching to two blocks") {
    CHECK(branch_split(GenPartition{1, 0}, 1, 1) ==
          Split{{{GenPartition{1}, GenPartition{0}}, 1}, {{GenPartition{0}, GenPartition{1}}, 1}});
    CHECK(branch_split(GenPartition{0, 0}, 1, 1) == Split{{{GenPartition{0}, GenPartition{0}}, 1}});
    CHECK(branch_split(GenPartition{1, -1}, 1, 1) == Split{{{GenPartition{1}, GenPartition{-1}}, 1},
                                                           {{GenPartition{0}, GenPartition{0}}, 1},
                                                           {{GenPartition{-1}, GenPartition{1}}, 1}});
}

TEST_CASE("branching agrees with generalized lr coefficients") {
    for (int m = 1; m <= 2; ++m)
        for (int n = 1; n <= 2; ++n)
            for (auto& lam : gen_partitions(m + n, -2, 2)) {
                auto split = branch_split(lam, m, n);
                LaurentPoly sum(m + n);
                for (auto& [k, c] : split) {
                    CHECK(c == gen_lr_coefficient(lam, k.first, k.second));
                    sum += block_schur({k.first, k.second}).scaled(c);
                }
                CHECK(sum == laurent_schur(lam));
            }
}

TEST_CASE("hall-littlewood specializations") {
    auto p11 = hall_littlewood_P(Partition{1, 1}, 2);
    CHECK(at_one(p11) == mono({1, 1}));
    CHECK(slice(p11, 0) == mono({1, 1}));
    CHECK(slice(p11, 1).is_zero());
    for (int k = 0; k <= 4; ++k)
        for (auto& mu : partitions_of(k, 3, k)) {
            GenPartition g = GenPartition::pad(mu, 3);
            auto P = hall_littlewood_P(mu, 3);
            CHECK(slice(P, 0) == laurent_schur(g));
            CHECK(at_one(P) == monomial_symmetric(g.parts));
        }
}

TEST_CASE("schur to hall-littlewood transition") {
    auto k = schur_in_hall_littlewood(GenPartition{2, 0});
    CHECK(k.size() == 2);
    CHECK(k[GenPartition{2, 0}] == TPoly(1));
    CHECK(k[GenPartition{1, 1}] == TPoly::monomial(1));
    auto k3 = schur_in_hall_littlewood(GenPartition{2, 1, 0});
    CHECK(k3[GenPartition{1, 1, 1}] == TPoly::monomial(1) + TPoly::monomial(2));
}
