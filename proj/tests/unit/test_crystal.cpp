#include <doctest.h>

#include <set>

#include "crystal_lr/crystal.hpp"

using namespace clr;

namespace {
Weight eps_sum(std::initializer_list<int> idx) {
    Weight w;
    for (int i : idx) w.add_eps(i, 1);
    return w;
}

std::vector<Word> letters(int lo, int hi, bool dual = false) {
    std::vector<Word> r;
    for (int i = lo; i <= hi; ++i) r.push_back({Letter{i, dual}});
    return r;
}

// every word of length <= r over letters [lo,hi] of both alphabets
std::vector<Word> mixed_words(int r, int lo, int hi) {
    std::vector<Word> alpha = letters(lo, hi), dual = letters(lo, hi, true);
    alpha.insert(alpha.end(), dual.begin(), dual.end());
    std::vector<Word> out{{}}, layer{{}};
    for (int k = 1; k <= r; ++k) {
        std::vector<Word> next;
        for (auto& w : layer)
            for (auto& a : alpha) {
                Word v = w;
                v.push_back(a[0]);
                next.push_back(v);
            }
        out.insert(out.end(), next.begin(), next.end());
        layer = std::move(next);
    }
    return out;
}
}  // namespace

TEST_CASE("letter operators") {
    CHECK_FALSE(raise({L(0)}, 0).has_value());
    CHECK(lower({L(0)}, 0) == Word{L(1)});
    CHECK(lower({Ld(1)}, 0) == Word{Ld(0)});
    CHECK(raise({Ld(0)}, 0) == Word{Ld(1)});
    CHECK(eps({L(0)}, 0) == 0);
    CHECK(phi({L(0)}, 0) == 1);
    CHECK(eps({L(3)}, 0) == 0);
    CHECK(phi({L(3)}, 0) == 0);
}

TEST_CASE("tensor signature") {
    // 0 ⊗ 1: the + of the first factor is cancelled by the − of the second
    CHECK(phi({L(0), L(1)}, 0) == 0);
    CHECK(eps({L(0), L(1)}, 0) == 0);
    CHECK(phi({L(1), L(0)}, 0) == 1);
    CHECK(eps({L(1), L(0)}, 0) == 1);
    CHECK(lower({L(0), L(0)}, 0) == Word{L(1), L(0)});
    CHECK(raise({L(1), L(1)}, 0) == Word{L(1), L(0)});
}

TEST_CASE("weights") {
    Weight w = weight({L(2), Ld(1)});
    CHECK(w.level == 0);
    CHECK(w.coeff(2) == 1);
    CHECK(w.coeff(1) == -1);
    CHECK(w == Weight::epsilon(2) - Weight::epsilon(1));
    CHECK(Weight::fundamental(0).pairing(0) == 1);
    CHECK(Weight::fundamental(0).pairing(1) == 0);
    CHECK(Weight::alpha(3).pairing(3) == 2);
    CHECK(Weight::alpha(3).pairing(2) == -1);
    CHECK(dominant_index(Weight::dominant(GenPartition{2, 0, -1})) == GenPartition{2, 0, -1});
}

TEST_CASE("weyl reflection") {
    Word w{L(5)};
    CHECK(weyl_reflect(w, 0) == w);
    CHECK(weyl_reflect({L(0)}, 0) == Word{L(1)});
    CHECK(weyl_reflect({L(1)}, 1) == Word{L(2)});
    CHECK(weyl_reflect({L(2)}, 1) == Word{L(1)});
}

TEST_CASE("tableau reading word") {
    Tableau cell{Partition{1}, Partition(), false, {{L(4)}}};
    CHECK(tableau_word(cell) == Word{L(4)});
    Tableau t{Partition{2, 1}, Partition(), false, {{L(1), L(2)}, {L(3)}}};
    CHECK(tableau_word(t) == Word{L(2), L(1), L(3)});
    Tableau col{Partition{1, 1}, Partition(), false, {{L(1)}, {L(2)}}};
    CHECK(tableau_word(col) == Word{L(1), L(2)});
    for (auto& s : enumerate_sst(Partition{3, 2, 1}, 0, 3))
        CHECK(tableau_from_word(tableau_word(s), s.outer, s.inner, false) == s);
}

TEST_CASE("semistandard tableau counts") {
    CHECK(enumerate_sst(Partition{1}, 1, 3).size() == 3);
    CHECK(enumerate_sst(Partition{2, 1}, 1, 3).size() == 8);
    CHECK(enumerate_sst(Partition{1, 1, 1, 1}, 1, 3).empty());
    CHECK(enumerate_sst(Partition{2, 1}, 1, 3, true).size() == 8);
    for (auto& t : enumerate_sst(Partition{2, 2}, -1, 2)) CHECK(is_semistandard(t));
}

TEST_CASE("component decomposition") {
    auto sq = tensor_words({letters(1, 3), letters(1, 3)});
    auto comps = decompose_components(sq, 1, 2);
    REQUIRE(comps.size() == 2);
    std::set<std::pair<Weight, size_t>> got;
    for (auto& c : comps) got.insert({c.highest_weight, c.size});
    CHECK(got == std::set<std::pair<Weight, size_t>>{{eps_sum({1, 1}), 6}, {eps_sum({1, 2}), 3}});

    auto single = decompose_components({Word{L(1), L(1)}}, 4, 5);
    REQUIRE(single.size() == 1);
    CHECK(single[0].multiplicity == 1);

    auto cube = tensor_words({letters(1, 2), letters(1, 2), letters(1, 2)});
    auto c3 = decompose_components(cube, 1, 1);
    REQUIRE(c3.size() == 2);
    for (auto& c : c3) {
        if (c.highest_weight == eps_sum({1, 1, 1})) {
            CHECK(c.size == 4);
            CHECK(c.multiplicity == 1);
        } else {
            CHECK(c.highest_weight == eps_sum({1, 1, 2}));
            CHECK(c.size == 2);
            CHECK(c.multiplicity == 2);
        }
    }
}

TEST_CASE("component isomorphism") {
    Word w{L(2), L(1), L(1)};
    CHECK(is_equivalent(w, w, 1, 2));
    // distinct highest weight words of weight 2ε1+ε2 in B^{⊗3}
    std::vector<Word> hw;
    for (auto& v : tensor_words({letters(1, 2), letters(1, 2), letters(1, 2)}))
        if (eps(v, 1) == 0 && weight(v) == eps_sum({1, 1, 2})) hw.push_back(v);
    REQUIRE(hw.size() == 2);
    CHECK(hw[0] != hw[1]);
    CHECK(is_equivalent(hw[0], hw[1], 1, 1));
    CHECK_FALSE(is_equivalent({L(1), L(2)}, {L(2), L(1)}, 1, 1));
}

TEST_CASE("raise and lower are partial inverses with weight bookkeeping") {
    for (auto& w : mixed_words(3, -1, 1))
        for (int i = -2; i <= 1; ++i) {
            auto f = lower(w, i);
            CHECK(f.has_value() == (phi(w, i) > 0));
            if (f) {
                REQUIRE(raise(*f, i) == w);
                CHECK(weight(*f) == weight(w) - Weight::alpha(i));
                CHECK(eps(*f, i) == eps(w, i) + 1);
            }
            auto e = raise(w, i);
            CHECK(e.has_value() == (eps(w, i) > 0));
            if (e) REQUIRE(lower(*e, i) == w);
            CHECK(phi(w, i) - eps(w, i) == weight(w).pairing(i));
        }
}

TEST_CASE("duality exchanges raising and lowering") {
    for (auto& w : mixed_words(3, -1, 1))
        for (int i = -2; i <= 1; ++i) {
            CHECK(dual_word(dual_word(w)) == w);
            auto f = lower(w, i);
            auto e = raise(dual_word(w), i);
            REQUIRE(f.has_value() == e.has_value());
            if (f) CHECK(dual_word(*f) == *e);
            CHECK(weight(dual_word(w)) == -weight(w));
        }
}

TEST_CASE("lowering preserves semistandardness") {
    for (auto& t : enumerate_sst(Partition{2, 1}, -1, 2))
        for (int i = -1; i <= 1; ++i)
            if (auto f = lower(tableau_word(t), i))
                CHECK(tableau_from_word(*f, t.outer, t.inner, false).has_value());
}
