#include <doctest.h>

#include "crystal_lr/zring.hpp"

using namespace clr;

namespace {
RElem z(int k) { return RElem::z(k); }
DElem s(Sign g, int n) { return DElem::s(g, n); }
}  // namespace

TEST_CASE("z-schur determinants") {
    CHECK(z_schur(GenPartition{4}) == z(4));
    CHECK(z_schur(GenPartition{1, 0}) == z(1) * z(0) - z(2) * z(-1));
    CHECK(z_schur(GenPartition{0, 0}) == z(0) * z(0) - z(1) * z(-1));
    CHECK(z_schur(GenPartition{0, 0}).homogeneous_degree() == 2);
}

TEST_CASE("skew z-schur determinants") {
    GenPartition lam{2, 0, -1};
    CHECK(z_skew_schur(lam, GenPartition{0, 0, 0}) == z_schur(lam));
    auto e = expand_in_z_schur(z_skew_schur(lam, lam), 3, 3);
    CHECK(e.coeffs[GenPartition{0, 0, 0}] == 1);
    // entries z_{λ_i-μ_j-i+j}: z0, z2 / z-2, z0
    CHECK(z_skew_schur(GenPartition{1, 0}, GenPartition{1, 0}) == z(0) * z(0) - z(2) * z(-2));
}

TEST_CASE("expansion in z-schur functions") {
    GenPartition lam{1, -1, -2};
    auto r = expand_in_z_schur(z_schur(lam), 3, 4);
    CHECK(r.complete());
    CHECK(r.coeffs == std::map<GenPartition, long long>{{lam, 1}});
    CHECK(expand_in_z_schur(RElem(), 2, 3).coeffs.empty());
    // z1 z0 = z_(1,0) + z_(2,-1) + z_(3,-2) + ...
    auto m = expand_in_z_schur(z(1) * z(0), 2, 3);
    CHECK(m.coeffs == std::map<GenPartition, long long>{
                          {GenPartition{1, 0}, 1}, {GenPartition{2, -1}, 1}, {GenPartition{3, -2}, 1}});
    CHECK_FALSE(m.complete());
    CHECK(m.remainder == z(4) * z(-3));
}

TEST_CASE("ore extension products") {
    CHECK(s(Sign::Plus, 1) * DElem(z(0)) == DElem(z(0)) * s(Sign::Plus, 1) + DElem(z(-1)));
    CHECK(s(Sign::Plus, 2) * DElem(z(0)) == DElem(z(0)) * s(Sign::Plus, 2) - DElem(z(-2)));
    DElem a = DElem(z(3)) * s(Sign::Minus, 2) + s(Sign::Plus, 1);
    CHECK(DElem(1) * a == a);
    CHECK(a * DElem(1) == a);
}

TEST_CASE("ore products are associative and act on R") {
    std::vector<DElem> gens{DElem(z(0)), DElem(z(-1)), s(Sign::Plus, 1), s(Sign::Minus, 2), s(Sign::Plus, 2)};
    RElem f = z(1) * z(0) - z(2);
    for (auto& a : gens)
        for (auto& b : gens) {
            for (auto& c : gens) CHECK((a * b) * c == a * (b * c));
            CHECK(d_apply(a * b, f) == d_apply(a, d_apply(b, f)));
        }
}

TEST_CASE("power sum derivations") {
    CHECK(p_action(Sign::Plus, 1, z(0)) == z(-1));
    CHECK(p_action(Sign::Plus, 3, RElem(1)).is_zero());
    CHECK(p_action(Sign::Minus, 2, z(0) * z(0)) == z(2) * z(0) * RElem(-2));
}

TEST_CASE("complete homogeneous operators shift z-schur functions") {
    // the minus side adds a column, the plus side removes one
    for (auto& lam : gen_partitions(2, -1, 2)) {
        CHECK(h_operator(Sign::Minus, 2, z_schur(lam)) == z_schur(lam.shifted(1)));
        CHECK(h_operator(Sign::Plus, 2, z_schur(lam)) == z_schur(lam.shifted(-1)));
        CHECK(h_operator(Sign::Minus, 3, z_schur(lam)).is_zero());
        CHECK(h_operator(Sign::Plus, 4, z_schur(lam)).is_zero());
    }
    CHECK(s_operator(Sign::Minus, Partition{1}, z_schur(GenPartition{0, 0})) ==
          z_skew_schur(GenPartition{0, 0}, GenPartition{0, -1}));
}

TEST_CASE("omega involution") {
    CHECK(omega(z(3)) == z(-3));
    CHECK(omega(z_schur(GenPartition{1, 0})) == z_schur(GenPartition{0, -1}));
    RElem f = z(2) * z(-1) * z(-1) - z(0) * RElem(3);
    CHECK(omega(omega(f)) == f);
    DElem d = DElem(z(1)) * s(Sign::Plus, 2) * s(Sign::Minus, 1);
    CHECK(omega(omega(d)) == d);
    CHECK(omega(s(Sign::Plus, 2)) == s(Sign::Minus, 2));
    CHECK(d_apply(omega(d), omega(f)) == omega(d_apply(d, f)));
}

TEST_CASE("annihilator relations") {
    for (int n = 1; n <= 2; ++n) {
        auto rels = annihilator_relations(n, n + 2);
        CHECK_FALSE(rels.empty());
        for (auto& rel : rels)
            for (auto& lam : gen_partitions(n, -2, 2)) CHECK(d_apply(rel.element, z_schur(lam)).is_zero());
    }
    // h^±_0 is the identity
    CHECK(h_operator(Sign::Plus, 0, z(5)) == z(5));
    CHECK(h_operator(Sign::Minus, 0, z(5)) == z(5));
}
