#include <doctest.h>

#include "crystal_lr/json_io.hpp"
#include "crystal_lr/lr_engine.hpp"

using namespace clr;

namespace {
ExtremalClass lvl0(Partition mu, Partition nu) { return {std::move(mu), std::move(nu), std::nullopt, false}; }
ExtremalClass hw(Partition mu, Partition nu, GenPartition l) { return {std::move(mu), std::move(nu), std::move(l), false}; }

Decomposition of(std::initializer_list<std::pair<ExtremalClass, long long>> terms) {
    Decomposition d;
    for (auto& [c, m] : terms) d.add(c, m);
    return d;
}

Partition column(int a) { return Partition(std::vector<int>(a, 1)); }
}  // namespace

TEST_CASE("level zero products") {
    CHECK(level0_product(Partition{1}, Partition(), Partition(), Partition{1}) ==
          of({{lvl0(Partition{1}, Partition{1}), 1}}));
    CHECK(level0_product(Partition{1}, Partition(), Partition{1}, Partition()) ==
          of({{lvl0(Partition{2}, Partition()), 1}, {lvl0(Partition{1, 1}, Partition()), 1}}));
    for (auto& a : partitions_up_to(2))
        for (auto& b : partitions_up_to(2))
            for (auto& c : partitions_up_to(2))
                CHECK(level0_product(a, b, c, Partition{1}) == level0_product(c, Partition{1}, a, b));
}

TEST_CASE("highest weight products") {
    HwWindow w{-3, 3};
    auto p = hw_product(GenPartition{0}, GenPartition{0}, w);
    CHECK(p[GenPartition{0, 0}] == 1);
    CHECK(p[GenPartition{1, -1}] == 1);
    auto q = hw_product(GenPartition{1}, GenPartition{0}, w);
    CHECK(q[GenPartition{1, 0}] == 1);
    for (auto& [lam, c] : q) CHECK(lam.sum() == 1);
}

TEST_CASE("pieri rule for columns") {
    for (int i = -2; i <= 2; ++i)
        for (int k = 0; k <= 3; ++k) {
            Decomposition want;
            for (int a = 0; a <= k; ++a) want.add(hw(column(a), Partition(), GenPartition{i + k - a}), 1);
            CHECK(pieri_column(GenPartition{i}, k, false) == want);
        }
    CHECK(pieri_column(GenPartition{2, -1}, 0, false) == of({{hw(Partition(), Partition(), GenPartition{2, -1}), 1}}));
    CHECK(pieri_column(GenPartition{1, 0}, 1, false) == of({{hw(Partition{1}, Partition(), GenPartition{1, 0}), 1},
                                                            {hw(Partition(), Partition(), GenPartition{2, 0}), 1},
                                                            {hw(Partition(), Partition(), GenPartition{1, 1}), 1}}));
    CHECK_THROWS(pieri_column(GenPartition{0}, -1, false));
}

TEST_CASE("moving level zero factors past a highest weight crystal") {
    GenPartition l{1, -1};
    CHECK(hw_past_level0(l, Partition(), Partition()) == of({{hw(Partition(), Partition(), l), 1}}));
    for (int i = -2; i <= 2; ++i) {
        CHECK(hw_past_level0(GenPartition{i}, Partition{1}, Partition()) ==
              of({{hw(Partition{1}, Partition(), GenPartition{i}), 1}, {hw(Partition(), Partition(), GenPartition{i + 1}), 1}}));
        CHECK(hw_past_level0(GenPartition{i}, Partition(), Partition{1}) ==
              of({{hw(Partition(), Partition{1}, GenPartition{i}), 1}, {hw(Partition(), Partition(), GenPartition{i - 1}), 1}}));
    }
}

TEST_CASE("extremal products collapse to the simpler rules") {
    HwWindow w{-3, 3};
    Decomposition want;
    for (auto& [lam, c] : hw_product(GenPartition{1}, GenPartition{0, -1}, w))
        want.add(hw(Partition(), Partition(), lam), c);
    CHECK(extremal_lr(GenPartition{1}, Partition(), Partition(), GenPartition{0, -1}, Partition(), Partition(), w) == want);

    Decomposition past = hw_past_level0(GenPartition{0}, Partition{1}, Partition{1});
    CHECK(extremal_lr(GenPartition{0}, Partition(), Partition(), GenPartition(), Partition{1}, Partition{1}, w) == past);
    CHECK(extremal_lr(hw(Partition(), Partition(), GenPartition{0}), lvl0(Partition{1}, Partition{1}), w) == past);
    CHECK_THROWS_AS(extremal_lr(ExtremalClass{Partition(), Partition(), GenPartition{0}, true}, lvl0(Partition(), Partition()), w),
                    level_error);
}

TEST_CASE("extremal products do not commute in general") {
    HwWindow w{-3, 3};
    auto x = lvl0(Partition(), Partition{1});
    auto y = hw(Partition(), Partition(), GenPartition{1});
    CHECK(extremal_lr(x, y, w) == of({{hw(Partition(), Partition{1}, GenPartition{1}), 1}}));
    CHECK(extremal_lr(y, x, w) ==
          of({{hw(Partition(), Partition{1}, GenPartition{1}), 1}, {hw(Partition(), Partition(), GenPartition{0}), 1}}));
    auto a = lvl0(Partition{1}, Partition()), b = lvl0(Partition(), Partition{2});
    CHECK(extremal_lr(a, b, w) == extremal_lr(b, a, w));
}

TEST_CASE("canonical level zero weights") {
    CHECK(level0_canonical(Weight()) == std::pair{Partition(), Partition()});
    CHECK(level0_canonical(Weight::epsilon(5) - Weight::epsilon(-2)) == std::pair{Partition{1}, Partition{1}});
    CHECK(level0_canonical(Weight::epsilon(1, 2) + Weight::epsilon(3) - Weight::epsilon(7)) ==
          std::pair{Partition{2, 1}, Partition{1}});
    CHECK_THROWS_AS(level0_canonical(Weight::fundamental(0)), level_error);
}

TEST_CASE("tensor expression grammar") {
    auto fs = parse_tensor_expression("B(1,0) * Bdual(0) * Bmn(2,1;1) * Bmu(1) * Bnu(2) * Bcol(2) * Bcoldual(1)");
    REQUIRE(fs.size() == 7);
    CHECK(fs[0].kind == Factor::Kind::Hw);
    CHECK(fs[0].hw == GenPartition{1, 0});
    CHECK(fs[0].level() == 2);
    CHECK(fs[1].kind == Factor::Kind::HwDual);
    CHECK(fs[1].level() == -1);
    CHECK(fs[2].mu == Partition{2, 1});
    CHECK(fs[2].nu == Partition{1});
    CHECK(fs[3].mu == Partition{1});
    CHECK(fs[4].nu == Partition{2});
    CHECK(fs[5].mu == Partition{1, 1});
    CHECK(fs[6].nu == Partition{1});
    for (auto& f : fs) CHECK(parse_tensor_expression(to_string(f)) == std::vector<Factor>{f});
    for (std::string bad : {"", "B()", "Bfoo(1)", "B(1", "Bmn(1)", "Bcol(-1)", "B(0) * "}) {
        CAPTURE(bad);
        CHECK_THROWS_AS(parse_tensor_expression(bad), parse_error);
    }
    try {
        parse_tensor_expression("B(0) * Bxyz(1)");
        FAIL("expected a parse error");
    } catch (const parse_error& e) {
        CHECK(e.token == "Bxyz");
    }
}

TEST_CASE("decompose evaluates left to right") {
    HwWindow w{-3, 3};
    CHECK(decompose(parse_tensor_expression("B(0) * Bcol(2)"), w) == pieri_column(GenPartition{0}, 2, false));
    CHECK(decompose(parse_tensor_expression("Bmn(1;) * Bmn(;1)"), w) ==
          level0_product(Partition{1}, Partition(), Partition(), Partition{1}));
    CHECK_THROWS_AS(decompose(parse_tensor_expression("B(0) * Bdual(0)"), w), mixed_level_error);
    auto neg = decompose(parse_tensor_expression("Bdual(0) * Bdual(1)"), w);
    auto pos = decompose(parse_tensor_expression("B(1) * B(0)"), w);
    CHECK(neg == dual(pos));
    for (auto& [c, m] : neg.terms) CHECK(c.level() == -2);
}

TEST_CASE("brute force truncation agrees with the closed formulas") {
    VerifyOptions opt;
    opt.hw_filter = HwWindow{-3, 3};
    for (std::string e : {"Bmn(1;)", "Bmn(1;1)", "B(0) * Bcol(2)", "B(0) * Bmn(;1)", "Bmn(1;) * B(1)"}) {
        CAPTURE(e);
        auto fs = parse_tensor_expression(e);
        auto rep = verify_truncated(fs, {-3, 3}, decompose(fs, HwWindow{-3, 3}), opt);
        CHECK(rep.match);
        CHECK(rep.discrepancy.empty());
    }
    auto pieri = parse_tensor_expression("B(0) * Bcol(2)");
    CHECK(verify_truncated(pieri, {-4, 4}, decompose(pieri, HwWindow{-4, 4}), opt).match);
}

TEST_CASE("level one times level minus one") {
    auto fs = parse_tensor_expression("B(0) * Bdual(1)");
    Decomposition want;
    for (int a = 0; a <= 4; ++a) want.add(lvl0(column(a), column(a + 1)), 1);
    auto rep = verify_truncated(fs, {-3, 3}, want);
    CHECK(rep.match);
    // only a <= 2 fits the window; the rest are outside the comparison
    for (auto& e : rep.census) CHECK(class_fits(e.cls, {-3, 3}));
}

TEST_CASE("the verifier detects a corrupted prediction") {
    auto fs = parse_tensor_expression("B(0) * Bcol(2)");
    auto good = decompose(fs, HwWindow{-3, 3});
    Decomposition more = good, fewer = good, extra = good;
    more.add(hw(Partition{1}, Partition(), GenPartition{1}), 1);
    fewer.terms.erase(fewer.terms.begin());
    extra.add(hw(Partition(), Partition(), GenPartition{3}), 1);
    for (auto* d : {&more, &fewer}) {
        auto rep = verify_truncated(fs, {-3, 3}, *d);
        CHECK_FALSE(rep.match);
        CHECK_FALSE(rep.discrepancy.empty());
    }
    CHECK_THROWS(verify_truncated(fs, {1, 3}, good));
}

TEST_CASE("canonical weights") {
    auto c = hw(Partition{2}, Partition{1}, GenPartition{0});
    Weight w = canonical_weight(c, {-2, 3});
    CHECK(w.level == 1);
    CHECK(w.coeff(-2) == 2);
    CHECK(w.coeff(3) == -1);
    CHECK(w.coeff(0) == 0);
    CHECK(class_fits(lvl0(Partition{1, 1}, Partition{1}), {-1, 1}));
    CHECK_FALSE(class_fits(lvl0(column(4), Partition()), {-1, 1}));
}

TEST_CASE("json round trip") {
    Decomposition d = pieri_column(GenPartition{1, 0}, 2, false);
    d.add(lvl0(Partition{2}, Partition{1, 1}), 3);
    json j = to_json(d);
    CHECK(decomposition_from_json(j) == d);
    CHECK(decomposition_from_json(json::parse(j.dump())) == d);
    ExtremalClass dual_class{Partition{1}, Partition(), GenPartition{0, -1}, true};
    CHECK(class_from_json(to_json(dual_class)) == dual_class);
    CHECK(to_json(TPoly::monomial(1) + TPoly::monomial(2)).dump() == "[[1,1],[2,1]]");
}
