#include "markedfree/slp.hpp"
#include "markedfree/thompson.hpp"
#include "markedfree/word.hpp"

#include "test_helpers.hpp"

#include <doctest.h>

#include <set>

using namespace markedfree;

TEST_CASE("words reduce freely") {
    Word w(2);
    w.append(0, 1);
    w.append(0, -1);
    CHECK(w.empty());
    w.append(0, 2);
    w.append(1, 1);
    w.append(1, -1);
    w.append(0, -2);
    CHECK(w.empty());

    Word u(2);
    u.append(0, 1);
    u.append(1, 2);
    CHECK(u.length() == 3);
    CHECK(u.inverse().str() == "f2^-2 f1^-1");
    CHECK(u.concat(u.inverse()).empty());
    CHECK(u.pow(0).empty());
    CHECK(u.pow(-2) == u.inverse().concat(u.inverse()));
    CHECK(u.exponent_sum(1) == 2);
}

TEST_CASE("word text round-trip") {
    const Word w = Word::parse("f1 f2^-1 f1^2", 2);
    CHECK(w.str() == "f1 f2^-1 f1^2");
    CHECK(w.length() == 4);
    CHECK(Word::parse("", 2).empty());
    CHECK_THROWS_AS(Word::parse("g1", 2), std::invalid_argument);
    CHECK_THROWS_AS(Word::parse("f3", 2), std::invalid_argument);
}

TEST_CASE("cyclic reduction") {
    const Word w = Word::parse("f1^-1 f2 f1", 2);
    CHECK(w.cyclically_reduced().str() == "f2");
    const Word v = Word::parse("f1 f2 f1^-1 f2^-1", 2);
    CHECK(v.cyclically_reduced() == v);
}

TEST_CASE("shortlex order") {
    CHECK(Word::shortlex_less(Word::parse("f1", 2), Word::parse("f1 f1", 2)));
    CHECK(Word::shortlex_less(Word::parse("f1", 2), Word::parse("f1^-1", 2)));
    CHECK(Word::shortlex_less(Word::parse("f1^-1", 2), Word::parse("f2", 2)));
    CHECK_FALSE(Word::shortlex_less(Word::parse("f2", 2), Word::parse("f2", 2)));
}

TEST_CASE("substitute") {
    const Word w = Word::parse("f1 f2^-1", 2);
    const std::vector<Word> images = {Word::parse("f1 f2", 2), Word::parse("f2 f1", 2)};
    CHECK(w.substitute(images).str() == "f1 f2 f1^-1 f2^-1");
}

TEST_CASE("enumeration counts and uniqueness") {
    CHECK(reduced_words(2, 0).size() == 1);
    CHECK(reduced_words(2, 1).size() == 5);
    for (int n = 0; n <= 6; ++n) {
        const auto words = reduced_words(2, n);
        // closed form 2*3^n - 1
        std::uint64_t expect = 1, p = 1;
        for (int i = 0; i < n; ++i) p *= 3;
        expect = 2 * p - 1;
        CHECK(words.size() == expect);
        std::set<std::string> seen;
        for (const auto& w : words) {
            CHECK(w.length() <= static_cast<std::uint64_t>(n));
            CHECK(seen.insert(w.str()).second); // each exactly once, already reduced
        }
    }
    CHECK(reduced_words(1, 3).size() == 7); // id, f1^{+-1,+-2,+-3}
}

TEST_CASE("eval_word") {
    const std::vector<PLMap> fs = {generator_f1(), generator_f2()};
    CHECK(eval_word(Word(2), fs).is_identity());
    CHECK(eval_word(Word::parse("f1 f2", 2), fs)(Rational(0)) == Rational(2));
    Word cancel(2);
    cancel.append(0, 1);
    cancel.append(0, -1);
    CHECK(eval_word(cancel, fs).is_identity());
    CHECK_THROWS_AS(eval_word(Word(3), fs), std::invalid_argument);
}

TEST_CASE("slp evaluation agrees with expansion") {
    std::mt19937_64 rng(5);
    const std::vector<PLMap> fs = {generator_f1(), generator_f2()};
    SlpWord s(2);
    const auto a = s.gen(0);
    const auto b = s.gen(1);
    const auto ab = s.cat(a, b);
    const auto c = s.cat({s.inv(ab), s.pow(b, 3), ab});
    const auto root = s.cat(c, s.lit(Word::parse("f1 f2^-1", 2)));
    s.set_root(root);

    const Word flat = s.expand();
    CHECK(flat.str() == "f2^-1 f1^-1 f2^3 f1 f2 f1 f2^-1");
    CHECK(s.expanded_length() == mpz_class(9)); // pre-reduction letter count
    CHECK(s.eval(fs) == eval_word(flat, fs));

    SlpWord big(2);
    big.set_root(big.pow(big.pow(big.gen(0), 1000), 100000));
    CHECK(big.expanded_length() == mpz_class(100000000));
    CHECK_THROWS_AS(big.expand(), std::length_error);

    // structural sharing
    SlpWord shared(2);
    const auto x = shared.cat(shared.gen(0), shared.gen(1));
    const auto y = shared.cat(shared.gen(0), shared.gen(1));
    CHECK(x == y);
}

TEST_CASE("slp power semantics") {
    const std::vector<PLMap> fs = {generator_f1(), generator_f2()};
    SlpWord s(2);
    s.set_root(s.pow(s.gen(0), -3));
    CHECK(s.eval(fs)(Rational(0)) == Rational(-3));
    SlpWord z(2);
    z.set_root(z.pow(z.gen(1), 0));
    CHECK(z.eval(fs).is_identity());
}
