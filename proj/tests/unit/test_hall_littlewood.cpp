#include <doctest.h>

#include "crystal_lr/hall_littlewood.hpp"

using namespace clr;

namespace {
TRElem one(int T) { return TRElem(RElem(1), T); }
}  // namespace

TEST_CASE("vertex operators on the constant") {
    for (int k = -2; k <= 2; ++k) CHECK(bt_apply(k, one(0)) == TRElem(RElem::z(k), 0));
    for (int T = 0; T <= 3; ++T) CHECK(bt_apply(0, one(T)) == TRElem(RElem::z(0), T));
}

TEST_CASE("rodrigues formula at t=0") {
    for (auto& lam : gen_partitions(3, -1, 2)) CHECK(bt_word(lam.parts, one(0)) == TRElem(z_schur(lam), 0));
    CHECK(bt_lambda({1, 1}, one(0)) == TRElem(z_schur(GenPartition{1, 1}), 0));
}

TEST_CASE("raising operator form") {
    CHECK(bt_lambda({2}, one(2)) == bt_apply(2, one(2)));
    // α+ρ with a repeated entry vanishes, a transposition flips the sign
    CHECK(bt_lambda({0, 1}, one(2)).is_zero());
    CHECK(bt_lambda({0, 2}, one(2)) == TRElem(2) - bt_lambda({1, 1}, one(2)));
    for (auto& lam : gen_partitions(2, -1, 2)) CHECK(bt_lambda(lam.parts, one(2)) == bt_lambda_by_classes(lam, one(2)));
}

TEST_CASE("kostka-foulkes polynomials from vertex operators") {
    auto w = bt_word_action(GenPartition{1, 1}, 1);
    CHECK(w.complete);
    CHECK(w.coeffs == std::map<GenPartition, TPoly>{{GenPartition{1, 1}, TPoly(1)}, {GenPartition{2, 0}, TPoly::monomial(1)}});
    // higher t-degrees bring in non-partition shapes
    auto w3 = bt_word_action(GenPartition{1, 1}, 3);
    CHECK(w3.coeffs.size() == 4);
    for (auto& [lam, p] : w3.coeffs) CHECK(p == kostka_foulkes(lam, GenPartition{1, 1}).truncated(3));
    auto s = bt_word_action(GenPartition{2}, 1);
    CHECK(s.coeffs == std::map<GenPartition, TPoly>{{GenPartition{2}, TPoly(1)}});
    auto k = bt_word_action(GenPartition{1, 1, 1}, 3);
    CHECK(k.coeffs[GenPartition{2, 1, 0}] == kostka_foulkes(GenPartition{2, 1, 0}, GenPartition{1, 1, 1}));
}

TEST_CASE("monomials at t=1") {
    RElem f(1);
    for (int k : {1, 1, -1}) f = bt_apply_at_one(k, f, 5);
    CHECK(f == RElem::z(1) * RElem::z(1) * RElem::z(-1));
}

TEST_CASE("commutation relations") {
    CHECK(bt_commutator_check(1, 0, one(2)));
    TRElem sample(RElem::z(0) * RElem::z(-1) + RElem::z(1), 2);
    for (int m = -1; m <= 1; ++m)
        for (int n = -1; n <= 1; ++n) {
            CHECK(bt_commutator_check(m, n, sample));
            CHECK(bt_bbar_commute_check(m, n, sample));
        }
}
