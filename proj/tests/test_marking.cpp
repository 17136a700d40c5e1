#include "markedfree/marking.hpp"
#include "markedfree/json_io.hpp"

#include "test_helpers.hpp"

#include <doctest.h>

using namespace markedfree;
using testutil::random_word;

namespace {
const std::vector<PLMap> fs = {generator_f1(), generator_f2()};

const MarkingBundle& bundle1() {
    static const MarkingBundle b = build_marking(1, 42);
    return b;
}
} // namespace

TEST_CASE("choose_m solves the prefix displacement conditions") {
    Word w1(2);
    w1.append(0, 1);
    CHECK(choose_m(w1, w1) == 5); // prefix t+1: need m-1+1 > 2 and 2+1 < m-1

    const F2Generators& gens = f2_subgroup_generators();
    const long m = choose_m(gens.U, gens.V);
    for (const Word* uv : {&gens.U, &gens.V}) {
        PLMap prefix;
        for (const auto& l : uv->flattened()) {
            prefix = compose(prefix, l.exp < 0 ? invert(fs[l.index]) : fs[l.index]);
            // all four ray/interval conditions, restated through monotonicity
            for (long mm : {m, m + 1, m + 7}) { // conditions persist for larger m
                CHECK(prefix(Rational(mm - 1)) > Rational(2));
                CHECK(prefix(Rational(2)) < Rational(mm - 1));
            }
        }
    }
    CHECK_THROWS_AS(choose_m(Word(2), w1), std::invalid_argument);
}

TEST_CASE("block_product") {
    CHECK(block_product(PLMap(), 3, 6).is_identity());

    const F2Generators& gens = f2_subgroup_generators();
    const PLMap e = commutator(gens.U_pl, gens.V_pl); // compactly supported in (0,1)
    REQUIRE_FALSE(e.is_identity());
    const PLMap prod = block_product(e, 3, 6);

    // identity outside [3,6], the k-translate of e on each block
    CHECK(equal_on_interval(prod, PLMap(), Rational(-1), Rational(3)));
    CHECK(equal_on_interval(prod, PLMap(), Rational(6), Rational(9)));
    for (long k = 3; k < 6; ++k) {
        const PLMap shift({}, {Rational(1), Rational(k)}, {Rational(1), Rational(k)});
        CHECK(equal_on_interval(prod, conjugate(e, shift), Rational(k), Rational(k + 1)));
    }
    CHECK(prod == compose(compose(conjugate(e, power(fs[0], 3)), conjugate(e, power(fs[0], 4))),
                          conjugate(e, power(fs[0], 5))));

    CHECK_THROWS_AS(block_product(generator_f2(), 0, 2), ValidationError); // support not in (0,1)
    CHECK_THROWS_AS(block_product(e, 4, 4), std::invalid_argument);
}

TEST_CASE("bundle invariants at n = 1") {
    const MarkingBundle& b = bundle1();
    CHECK(b.g == compose(b.p, generator_f1()));
    CHECK(b.h == compose(b.q, generator_f2()));
    CHECK(is_thompson_element(b.g));
    CHECK(is_thompson_element(b.h));

    // support of p inside I_n
    for (const auto& c : support(b.p).components) {
        CHECK(*c.lo >= Rational(b.m));
        CHECK(*c.hi <= Rational(b.interval_end()));
    }
    // g agrees with f1 strictly below the interval
    for (long t = -3; t + 1 < b.m; ++t) CHECK(b.g(Rational(t)) == Rational(t + 1));
    // blockwise: p restricted to [k, k+1] is the f1^k-conjugate of a
    for (long k = b.m; k < b.interval_end(); ++k)
        CHECK(equal_on_interval(b.p, conjugate(b.a, power(generator_f1(), k)), Rational(k),
                                Rational(k + 1)));
    CHECK(equal_on_interval(b.p, PLMap(), Rational(b.interval_end()), Rational(b.interval_end() + 5)));
    CHECK(equal_on_interval(b.p, PLMap(), Rational(-5), Rational(b.m)));
}

TEST_CASE("verify_free_ball at n = 1 and 2") {
    const BallCertificate c1 = verify_free_ball(bundle1());
    CHECK(c1.verified());
    CHECK(c1.report.checked_words == 16);
    CHECK(c1.shadow_words_checked == 20);

    const MarkingBundle b2 = build_marking(2, 42);
    const BallCertificate c2 = verify_free_ball(b2);
    CHECK(c2.verified());
    CHECK(c2.report.checked_words == 160);
}

TEST_CASE("free-ball certificates hold at other seeds") {
    for (std::uint64_t seed : {3ULL, 1001ULL}) {
        for (int n = 1; n <= 2; ++n) {
            const MarkingBundle b = build_marking(n, seed);
            CHECK(verify_free_ball(b).verified());
        }
    }
}

TEST_CASE("substitution locality: <U1, V1> moves nothing between 1 and 2") {
    const MarkingBundle& b = bundle1();
    const std::vector<PLMap> u1v1 = {eval_word(b.U, {b.g, b.h}), eval_word(b.V, {b.g, b.h})};
    std::mt19937_64 rng(77);
    for (int i = 0; i < 20; ++i) {
        const PLMap w = eval_word(random_word(rng, 2, 6), u1v1);
        for (const auto& c : support(w).components) {
            REQUIRE(c.lo.has_value());
            REQUIRE(c.hi.has_value());
            const bool in_unit = *c.lo >= Rational(0) && *c.hi <= Rational(1);
            const bool in_far_zone = *c.lo >= Rational(2); // J sits beyond 2
            CHECK((in_unit || in_far_zone));
        }
    }
}

TEST_CASE("alpha has the stated dynamics") {
    const MarkingBundle& b = bundle1();
    const PLMap alpha = alpha_of(b);
    CHECK(equal_on_interval(alpha, PLMap(), Rational(0), Rational(1)));
    CHECK(alpha(Rational(2)) > Rational(2));
    CHECK(is_special(alpha, Rational(0), Rational(1)));
}

TEST_CASE("displacement_power") {
    const PLMap& f1 = generator_f1();
    CHECK(displacement_power(f1, Rational(12), Rational(13), Rational(4)) == 0);
    CHECK(displacement_power(f1, Rational(3), Rational(4), Rational(10)) == 8);
    // minimality: 7 steps leave the infimum at 10, not past it
    CHECK(Rational(3 + 7) <= Rational(10));
    CHECK_THROWS_AS(displacement_power(generator_f2(), Rational(-4), Rational(-3), Rational(2)),
                    std::invalid_argument); // f2 fixes the negatives
    CHECK_THROWS_AS(displacement_power(f1, Rational(4), Rational(3), Rational(10)),
                    std::invalid_argument);
}

TEST_CASE("commutator_decomposition") {
    SUBCASE("literal commutator returns its own halves") {
        const Word w = Word::parse("f1^-1 f2^-1 f1 f2", 2);
        const auto pairs = commutator_decomposition(w);
        REQUIRE(pairs.size() == 1);
        CHECK(pairs[0].first.str() == "f1");
        CHECK(pairs[0].second.str() == "f2");
    }
    SUBCASE("empty word decomposes to nothing") {
        CHECK(commutator_decomposition(Word(2)).empty());
    }
    SUBCASE("doubled commutator gives two pairs") {
        const Word w = Word::parse("f1 f2 f1^-1 f2^-1 f1 f2 f1^-1 f2^-1", 2);
        const auto pairs = commutator_decomposition(w);
        CHECK(pairs.size() == 2);
        Word prod(2);
        for (const auto& [c, d] : pairs) {
            prod.append(c.inverse());
            prod.append(d.inverse());
            prod.append(c);
            prod.append(d);
        }
        CHECK(prod == w); // free reduction oracle
    }
    SUBCASE("random zero-sum words decompose and reduce back") {
        std::mt19937_64 rng(64);
        for (int i = 0; i < 25; ++i) {
            Word w = random_word(rng, 2, 12);
            w.append(0, -w.exponent_sum(0));
            w.append(1, -w.exponent_sum(1));
            if (w.exponent_sum(0) != 0 || w.exponent_sum(1) != 0) continue; // cancellation edge
            const auto pairs = commutator_decomposition(w); // self-verifying
            Word prod(2);
            for (const auto& [c, d] : pairs) {
                prod.append(c.inverse());
                prod.append(d.inverse());
                prod.append(c);
                prod.append(d);
            }
            CHECK(prod == w);
        }
    }
    SUBCASE("rejects nonzero exponent sums") {
        CHECK_THROWS_AS(commutator_decomposition(Word::parse("f1 f2", 2)), std::invalid_argument);
    }
}

TEST_CASE("generation witness at n = 1") {
    const MarkingBundle& b = bundle1();
    const GenerationWitness w = generation_witness(b);
    CHECK(w.verified);
    CHECK(w.W_p.eval({b.g, b.h}) == b.p);
    CHECK(w.W_q.eval({b.g, b.h}) == b.q);
    CHECK(w.s > 0);
    CHECK(w.expanded_length_p > 0);
    // the witness survives serialization
    const SlpWord wp = slp_from_json(slp_to_json(w.W_p));
    CHECK(wp.eval({b.g, b.h}) == b.p);
}
