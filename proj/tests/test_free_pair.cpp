#include "markedfree/free_pair.hpp"
#include "markedfree/json_io.hpp"
#include "markedfree/thompson.hpp"

#include "test_helpers.hpp"

#include <doctest.h>

using namespace markedfree;

namespace {
const std::vector<PLMap> fs = {generator_f1(), generator_f2()};
}

TEST_CASE("check_no_relations finds the classical relation at radius 10") {
    const CheckReport report = check_no_relations(fs, 10);
    REQUIRE(report.violation.has_value());
    CHECK(report.violation->length() == 10);
    CHECK(eval_word(*report.violation, fs).is_identity());

    // Independent oracle: earliest trivial word in shortlex order.
    std::optional<Word> expected;
    enumerate_reduced_words(2, 10, [&](const Word& w) {
        if (w.empty() || expected) return;
        if (w.length() == 10 && eval_word(w, fs).is_identity()) expected = w;
    });
    // Nothing shorter exists...
    std::uint64_t shorter_trivial = 0;
    enumerate_reduced_words(2, 9, [&](const Word& w) {
        if (!w.empty() && eval_word(w, fs).is_identity()) ++shorter_trivial;
    });
    CHECK(shorter_trivial == 0);
    REQUIRE(expected.has_value());
    // ...and the reported violation is that earliest one: the DFS letter
    // order is the shortlex letter order, so first-found is lex-least.
    CHECK(*report.violation == *expected);

    // The classical commutator relation is among the length-10 relations.
    const Word rel = Word::parse("f2 f1^-2 f2^-1 f1^2 f2^-1 f1^-1 f2 f1", 2);
    CHECK(eval_word(rel, fs).is_identity());
}

TEST_CASE("check_no_relations certifies a translation as relation-free") {
    const CheckReport report = check_no_relations({generator_f1()}, 20);
    CHECK(report.verified());
    CHECK(report.checked_words == 40); // rank 1: two words per length
}

TEST_CASE("check_no_relations on degenerate tuples") {
    const CheckReport report = check_no_relations({PLMap(), PLMap()}, 1);
    REQUIRE(report.violation.has_value());
    CHECK(report.violation->length() == 1);
    CHECK(report.violation->str() == "f1"); // lex-least of the four
}

TEST_CASE("check_no_relations is thread-count independent") {
    const CheckReport a = check_no_relations(fs, 10, 1);
    const CheckReport b = check_no_relations(fs, 10, 4);
    REQUIRE(a.violation.has_value());
    REQUIRE(b.violation.has_value());
    CHECK(*a.violation == *b.violation);
}

TEST_CASE("free_pair at small radii") {
    SUBCASE("n = 1 certifies the four letters") {
        const FreePair fp = free_pair(1, 7);
        CHECK(fp.cert.verified);
        CHECK(fp.cert.checked_words == 4);
        CHECK(is_in_f2_derived(fp.a));
        CHECK(is_in_f2_derived(fp.b));
    }
    SUBCASE("n = 3 covers 52 nontrivial words") {
        const FreePair fp = free_pair(3, 42);
        CHECK(fp.cert.verified);
        CHECK(fp.cert.checked_words == 52);
        CHECK(support(fp.a).closure_inside(Rational(0), Rational(1)));
        CHECK(support(fp.b).closure_inside(Rational(0), Rational(1)));
        // the certificate is backed by an exhaustive direct check
        CHECK(check_no_relations({fp.a, fp.b}, 3).verified());
    }
}

TEST_CASE("free_pair is deterministic per seed") {
    for (std::uint64_t seed : {3ULL, 42ULL, 1001ULL}) {
        const FreePair x = free_pair(2, seed);
        const FreePair y = free_pair(2, seed);
        CHECK(x.a == y.a);
        CHECK(x.b == y.b);
        CHECK(free_pair_to_json(x).dump() == free_pair_to_json(y).dump());
    }
    CHECK_FALSE(free_pair(2, 3).a == free_pair(2, 4).a); // different draws
}

TEST_CASE("free_pair blocks are disjoint and restrictions match") {
    const FreePair fp = free_pair(2, 42);
    const auto& blocks = fp.cert.blocks;
    REQUIRE(blocks.size() == fp.a_blocks.size());
    for (std::size_t j = 0; j < blocks.size(); ++j) {
        CHECK(blocks[j].lo == Rational(1) - Rational::pow2(-static_cast<long>(j) - 1));
        for (std::size_t k = j + 1; k < blocks.size(); ++k)
            CHECK(blocks[j].hi <= blocks[k].lo);
        // a restricted to block j is exactly the placed factor
        CHECK(equal_on_interval(fp.a, fp.a_blocks[j], blocks[j].lo, blocks[j].hi));
        CHECK(equal_on_interval(fp.b, fp.b_blocks[j], blocks[j].lo, blocks[j].hi));
        // and the placed factor is supported inside its block
        for (const auto& c : support(fp.a_blocks[j]).components) {
            CHECK(*c.lo >= blocks[j].lo);
            CHECK(*c.hi <= blocks[j].hi);
        }
    }
}

TEST_CASE("budget exhaustion reports the surviving words") {
    FreePairOptions opts;
    opts.candidate_budget = 0;
    CHECK_THROWS_AS(free_pair(2, 42, opts), FreePairSearchError);
    try {
        free_pair(2, 42, opts);
    } catch (const FreePairSearchError& e) {
        CHECK(e.surviving.size() == 16);
    }
}

TEST_CASE("negative control: disjointly supported halves satisfy a law") {
    // Two elements with disjoint supports commute, so the radius-2 ball is
    // already not free: freeness is only ever a finite-radius certificate.
    const F2Generators& gens = f2_subgroup_generators();
    const PLMap c = commutator(gens.U_pl, gens.V_pl);
    const PLMap x = affine_conjugate_into(c, Rational(1, 4), Rational(0));
    const PLMap y = affine_conjugate_into(c, Rational(1, 4), Rational(1, 2));
    REQUIRE_FALSE(x.is_identity());
    REQUIRE_FALSE(y.is_identity());
    const CheckReport report = check_no_relations({x, y}, 4);
    REQUIRE(report.violation.has_value());
    CHECK(report.violation->length() == 4);
    CHECK(report.violation->cyclically_reduced().length() == 4); // a genuine commutator
}
