#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support/fixtures.hpp"
#include "wfs/core.hpp"
#include "wfs/rng.hpp"

using namespace wfs;
using wfs::testing::fig1_instance;

TEST_CASE("parse_instance reads the worked example") {
    const auto inst = parse_instance("5 10\n10 10 7 6 3\n1 1 1 1 1\n");
    CHECK(inst.n == 5);
    CHECK(inst.t_max == 10);
    CHECK(inst.w == std::vector<std::int64_t>{10, 10, 7, 6, 3});
    CHECK(inst.f == std::vector<int>{1, 1, 1, 1, 1});
}

TEST_CASE("parse_instance smallest legal instance") {
    const auto inst = parse_instance("1 1\n1\n1\n");
    CHECK(inst.n == 1);
    CHECK(inst.t_max == 1);
}

TEST_CASE("parse_instance tolerates comments and blank lines") {
    const auto inst = parse_instance("# header\n\n5 10 # inline\n10 10 7 6 3\n\n1 1 1 1 1\n");
    CHECK(inst.n == 5);
    CHECK(inst.w[4] == 3);
}

TEST_CASE("parse_instance distinct diagnostics") {
    CHECK_THROWS_WITH_AS(parse_instance("2 1\n1 1\n1 1\n"),
                         doctest::Contains("less than"), ParseError);
    CHECK_THROWS_WITH_AS(parse_instance("5\n1 2 3 4 5\n1 1 1 1 1\n"),
                         doctest::Contains("malformed header"), ParseError);
    CHECK_THROWS_WITH_AS(parse_instance("2 4\n1\n1 1\n"),
                         doctest::Contains("expected 2 weights"), ParseError);
    CHECK_THROWS_WITH_AS(parse_instance("2 4\n1 0\n1 1\n"),
                         doctest::Contains("must be positive"), ParseError);
    CHECK_THROWS_WITH_AS(parse_instance("2 4\n1 1\n1 0\n"),
                         doctest::Contains("must be positive"), ParseError);
    CHECK_THROWS_WITH_AS(parse_instance("2 4\n1 1\n1 x\n"),
                         doctest::Contains("invalid frequency token"), ParseError);
    CHECK_THROWS_WITH_AS(parse_instance("2 4\n1 10000000000\n1 1\n"),
                         doctest::Contains("out of supported range"), ParseError);
    CHECK_THROWS_WITH_AS(parse_instance("2 4\n1 1\n1 1\n9 9\n"),
                         doctest::Contains("extra content"), ParseError);
    CHECK_THROWS_AS(parse_instance(""), ParseError);
}

TEST_CASE("instance files round-trip") {
    const auto inst = fig1_instance();
    const auto again = parse_instance(format_instance(inst));
    CHECK(again.w == inst.w);
    CHECK(again.f == inst.f);
    CHECK(again.t_max == inst.t_max);
}

TEST_CASE("circular_distance branches") {
    CHECK(circular_distance(3, 1, 8) == 2);
    CHECK(circular_distance(1, 3, 8) == 6);
    CHECK(circular_distance(4, 4, 8) == 8);
    CHECK_THROWS_AS(circular_distance(0, 1, 8), std::invalid_argument);
    CHECK_THROWS_AS(circular_distance(1, 9, 8), std::invalid_argument);
}

TEST_CASE("circular_distance totality") {
    for (int t_len = 1; t_len <= 12; ++t_len)
        for (int t = 1; t <= t_len; ++t)
            for (int tp = 1; tp <= t_len; ++tp) {
                const int d = circular_distance(t, tp, t_len);
                CHECK(d >= 1);
                CHECK(d <= t_len);
            }
}

TEST_CASE("evaluate worked example solutions") {
    const auto inst = fig1_instance();

    const auto ev_a = evaluate(inst, parse_sequence("5\n2 1 5 4 3\n"));
    CHECK(ev_a.objective == 50);
    for (int i = 0; i < 5; ++i) CHECK(ev_a.max_gap[static_cast<std::size_t>(i)] == 5);
    CHECK(ev_a.binding_symbols() == std::vector<int>{1, 2});

    const auto ev_b = evaluate(inst, parse_sequence("8\n2 1 3 5 2 1 4 3\n"));
    CHECK(ev_b.objective == 48);
    CHECK(ev_b.max_gap == std::vector<int>{4, 4, 5, 8, 8});
    CHECK(ev_b.product == std::vector<std::int64_t>{40, 40, 35, 48, 24});
    CHECK(ev_b.binding_symbols() == std::vector<int>{4});
}

TEST_CASE("evaluate single-symbol run") {
    Instance inst;
    inst.n = 1;
    inst.t_max = 3;
    inst.w = {5};
    inst.f = {1};
    const auto ev = evaluate(inst, Sequence{{1, 1, 1}});
    CHECK(ev.max_gap[0] == 1);
    CHECK(ev.objective == 5);
}

TEST_CASE("evaluate rejects infeasible sequences") {
    const auto inst = fig1_instance();
    CHECK_THROWS_AS(evaluate(inst, Sequence{{1}}), std::invalid_argument);
    CHECK_THROWS_WITH_AS(evaluate(inst, Sequence{{1, 2, 3, 4, 7}}),
                         doctest::Contains("out of range"), std::invalid_argument);
}

TEST_CASE("validate reports violations as values") {
    const auto inst = fig1_instance();
    CHECK(validate(inst, parse_sequence("8\n2 1 3 5 2 1 4 3\n")).empty());

    const auto missing = validate(inst, Sequence{{1}});
    CHECK(missing.size() == 4);

    Sequence too_long;
    for (int i = 0; i < 11; ++i) too_long.symbols.push_back(1 + i % 5);
    const auto length = validate(inst, too_long);
    REQUIRE(!length.empty());
    CHECK(length.front().find("exceeds maximum length") != std::string::npos);
}

TEST_CASE("trivial_solution layout and value") {
    const auto inst = fig1_instance();
    const auto seq = trivial_solution(inst);
    CHECK(seq.symbols == std::vector<int>{1, 2, 3, 4, 5});
    CHECK(evaluate(inst, seq).objective == 50);

    Instance two;
    two.n = 2;
    two.t_max = 4;
    two.w = {1, 1};
    two.f = {2, 1};
    CHECK(trivial_solution(two).symbols == std::vector<int>{1, 1, 2});
}

TEST_CASE("sequence files round-trip and reject garbage") {
    const auto seq = parse_sequence("8\n2 1 3 5 2 1 4 3\n");
    CHECK(parse_sequence(format_sequence(seq)).symbols == seq.symbols);
    CHECK_THROWS_AS(parse_sequence("3\n1 2\n"), ParseError);
    CHECK_THROWS_AS(parse_sequence(""), ParseError);
    CHECK_THROWS_AS(parse_sequence("2 2\n1 2\n"), ParseError);
}

TEST_CASE("generate_instance ranges and determinism") {
    const auto inst = generate_instance(5, 10, 42);
    CHECK(inst.n == 5);
    CHECK(inst.t_max == 10);
    for (const auto w : inst.w) {
        CHECK(w >= 1);
        CHECK(w <= 10);
    }
    CHECK(inst.f == std::vector<int>(5, 1));
    // Frozen stream of the documented generator.
    CHECK(inst.w == std::vector<std::int64_t>{4, 2, 9, 5, 1});

    const auto again = generate_instance(5, 10, 42);
    CHECK(again.w == inst.w);

    const auto tiny = generate_instance(1, 2, 7);
    CHECK(tiny.w[0] >= 1);
    CHECK(tiny.w[0] <= 2);
    CHECK(tiny.f == std::vector<int>{1});

    CHECK_THROWS_AS(generate_instance(5, 4, 1), std::invalid_argument);
}

TEST_CASE("rotation invariance of the objective") {
    SplitMix64 gen(11);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 2 + static_cast<int>(next_below(gen, 3));
        const int t_max = n + 2 + static_cast<int>(next_below(gen, 4));
        const auto inst = generate_instance(n, t_max, gen.next());
        const int t_len = inst.total_required() +
                          static_cast<int>(next_below(
                              gen, static_cast<std::uint64_t>(t_max - inst.total_required() + 1)));
        const auto seq = wfs::testing::random_feasible_sequence(inst, t_len, gen);
        const auto base = evaluate(inst, seq).objective;
        for (int r = 1; r < t_len; ++r)
            CHECK(evaluate(inst, rotate(seq, r)).objective == base);
    }
}

TEST_CASE("relabel invariance for symbols with equal weight and frequency") {
    Instance inst;
    inst.n = 3;
    inst.t_max = 8;
    inst.w = {4, 4, 2};
    inst.f = {1, 1, 1};
    SplitMix64 gen(23);
    for (int trial = 0; trial < 40; ++trial) {
        const auto seq = wfs::testing::random_feasible_sequence(inst, 6, gen);
        Sequence swapped = seq;
        for (auto& s : swapped.symbols)
            s = s == 1 ? 2 : (s == 2 ? 1 : s);
        CHECK(evaluate(inst, seq).objective == evaluate(inst, swapped).objective);
    }
}

TEST_CASE("single occurrence wraps to the full length") {
    SplitMix64 gen(31);
    for (int trial = 0; trial < 40; ++trial) {
        const auto inst = generate_instance(4, 9, gen.next());
        const auto seq = wfs::testing::random_feasible_sequence(inst, 7, gen);
        const auto ev = evaluate(inst, seq);
        std::vector<int> count(4, 0);
        for (const int s : seq.symbols) ++count[static_cast<std::size_t>(s - 1)];
        for (int i = 0; i < 4; ++i)
            if (count[static_cast<std::size_t>(i)] == 1)
                CHECK(ev.max_gap[static_cast<std::size_t>(i)] == seq.length());
    }
}

TEST_CASE("objective is a weight multiple attained by some symbol") {
    SplitMix64 gen(47);
    for (int trial = 0; trial < 60; ++trial) {
        const auto inst = generate_instance(3, 8, gen.next());
        const auto seq = wfs::testing::random_feasible_sequence(inst, 6, gen);
        const auto ev = evaluate(inst, seq);
        CHECK(!ev.binding_symbols().empty());
        for (const int i : ev.binding_symbols())
            CHECK(ev.objective % inst.w[static_cast<std::size_t>(i - 1)] == 0);
    }
}

TEST_CASE("canonical order sorts by weight then frequency then index") {
    Instance inst;
    inst.n = 4;
    inst.t_max = 10;
    inst.w = {3, 7, 7, 7};
    inst.f = {1, 1, 2, 1};
    CHECK(canonical_symbol_order(inst) == std::vector<int>{3, 2, 4, 1});
}
