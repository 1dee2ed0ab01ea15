#include <doctest.h>

#include <cmath>

#include "crystal_lr/crystal.hpp"
#include "crystal_lr/shapes.hpp"

using namespace clr;

namespace {
long long binom(int n, int k) {
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}
}  // namespace

TEST_CASE("conjugate") {
    CHECK(conjugate(Partition()) == Partition());
    CHECK(conjugate(Partition{2, 1}) == Partition{2, 1});
    CHECK(conjugate(Partition{3, 1}) == Partition{2, 1, 1});
    for (int n = 0; n <= 7; ++n)
        for (auto& p : partitions_of(n)) CHECK(conjugate(conjugate(p)) == p);
}

TEST_CASE("horizontal and vertical strips") {
    CHECK(is_horizontal_strip(SkewShape(Partition{2}, Partition{1})));
    CHECK(is_vertical_strip(SkewShape(Partition{2}, Partition{1})));
    CHECK_FALSE(is_horizontal_strip(SkewShape(Partition{2, 2}, Partition{1})));
    CHECK(is_vertical_strip(SkewShape(Partition{2, 1}, Partition{1})));
}

TEST_CASE("lr coefficients") {
    CHECK(lr_coefficient(Partition{1}, Partition(), Partition{1}) == 1);
    CHECK(lr_coefficient(Partition{2, 1}, Partition{1}, Partition{1, 1}) == 1);
    CHECK(lr_coefficient(Partition{3, 2, 1}, Partition{2, 1}, Partition{2, 1}) == 2);
    CHECK(lr_coefficient(Partition{2}, Partition{1}, Partition{2}) == 0);
}

TEST_CASE("lr coefficients are symmetric") {
    for (int n = 0; n <= 8; ++n)
        for (auto& lam : partitions_of(n))
            for (int a = 0; a <= n; ++a)
                for (auto& mu : partitions_of(a)) {
                    if (!contains(lam, mu)) continue;
                    for (auto& nu : partitions_of(n - a))
                        REQUIRE(lr_coefficient(lam, mu, nu) == lr_coefficient(lam, nu, mu));
                }
}

TEST_CASE("sum of c f^lambda matches the product of standard tableau counts") {
    for (int n = 0; n <= 6; ++n)
        for (int a = 0; a <= n; ++a)
            for (auto& mu : partitions_of(a))
                for (auto& nu : partitions_of(n - a)) {
                    long long lhs = 0;
                    for (auto& lam : partitions_of(n)) lhs += lr_coefficient(lam, mu, nu) * standard_tableaux_count(lam);
                    CHECK(lhs == standard_tableaux_count(mu) * standard_tableaux_count(nu) * binom(n, a));
                }
}

TEST_CASE("generalized lr coefficients") {
    CHECK(gen_lr_coefficient(GenPartition{0, 0}, GenPartition{0}, GenPartition{0}) == 1);
    CHECK(gen_lr_coefficient(GenPartition{1, -1}, GenPartition{1}, GenPartition{-1}) == 1);
    CHECK(gen_lr_coefficient(GenPartition{1, 0}, GenPartition{1}, GenPartition{1}) == 0);
    CHECK_THROWS(gen_lr_coefficient(GenPartition{1, 0}, GenPartition{1}, GenPartition{0, 0}));
}

TEST_CASE("generalized lr coefficients are shift invariant") {
    for (auto& lam : gen_partitions(3, -2, 2))
        for (auto& mu : gen_partitions(2, -2, 2))
            for (auto& nu : gen_partitions(1, -2, 2)) {
                long long c = gen_lr_coefficient(lam, mu, nu);
                for (int p = 1; p <= 4; ++p)
                    REQUIRE(gen_lr_coefficient(lam.shifted(p), mu.shifted(p), nu.shifted(p)) == c);
            }
}

TEST_CASE("kostka-foulkes polynomials") {
    CHECK(kostka_foulkes(GenPartition{2, 1}, GenPartition{2, 1}) == TPoly(1));
    TPoly t_plus_t2 = TPoly::monomial(1) + TPoly::monomial(2);
    CHECK(kostka_foulkes(GenPartition{2, 1, 0}, GenPartition{1, 1, 1}) == t_plus_t2);
    CHECK(kostka_foulkes(GenPartition{2, 0}, GenPartition{1, 1}) == TPoly::monomial(1));
    CHECK(kostka_foulkes(GenPartition{1, 0, -1}, GenPartition{0, 0, 0}) == t_plus_t2);
    CHECK_THROWS(kostka_foulkes(GenPartition{2, 0}, GenPartition{1, 1, 0}));
}

TEST_CASE("kostka-foulkes at t=1 counts tableaux and vanishes below mu") {
    for (int n = 0; n <= 6; ++n)
        for (auto& lam : partitions_of(n, 3, n))
            for (auto& mu : partitions_of(n, 3, n)) {
                GenPartition l = GenPartition::pad(lam, 3), m = GenPartition::pad(mu, 3);
                TPoly k = kostka_foulkes(l, m);
                CHECK(k.eval1() == kostka_number(lam, mu.parts));
                if (lex_greater(m, l)) CHECK(k.is_zero());
                for (auto& [e, c] : k.terms()) CHECK(c > 0);
            }
}

TEST_CASE("shape syntax") {
    CHECK(parse_partition("3,1") == Partition{3, 1});
    CHECK(parse_partition("") == Partition());
    CHECK(parse_partition("0") == Partition());
    CHECK(parse_gen_partition("2,0,-1") == GenPartition{2, 0, -1});
    CHECK(parse_skew("3,1/1").outer == Partition{3, 1});
    try {
        parse_partition("3,x");
        FAIL("expected a parse error");
    } catch (const parse_error& e) {
        CHECK(e.token == "x");
    }
    CHECK_THROWS_AS(parse_gen_partition("1,2"), parse_error);
}
