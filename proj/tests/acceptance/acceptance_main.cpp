// Acceptance suite: one line per criterion, nonzero exit on any failure.
// Everything here is exact arithmetic; there are no tolerances to tune.

#include "markedfree/json_io.hpp"
#include "markedfree/marked_space.hpp"
#include "markedfree/marking.hpp"

#include <chrono>
#include <iostream>
#include <random>
#include <sstream>
#include <vector>

namespace mf = markedfree;

namespace {

int failures = 0;

void report(int criterion, bool ok, const std::string& detail) {
    std::cout << "[" << (ok ? "PASS" : "FAIL") << "] criterion " << criterion << ": " << detail
              << std::endl;
    if (!ok) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

mf::Word random_reduced(std::mt19937_64& rng, int max_len) {
    const int len = 1 + static_cast<int>(rng() % static_cast<unsigned long>(max_len));
    mf::Word w(2);
    int last = -1;
    for (int i = 0; i < len; ++i) {
        int lid;
        if (last < 0) {
            lid = static_cast<int>(rng() % 4);
        } else {
            lid = static_cast<int>(rng() % 3);
            if (lid >= (last ^ 1)) ++lid;
        }
        w.append(lid / 2, lid % 2 == 0 ? 1 : -1);
        last = lid;
    }
    return w;
}

} // namespace

int main() {
    const std::vector<mf::PLMap> fs = {mf::generator_f1(), mf::generator_f2()};
    const std::uint64_t seed = 42;

    // Bundles are shared across criteria 1, 2, 4 and 6.
    std::vector<mf::MarkingBundle> bundles;
    for (int n = 1; n <= 4; ++n) bundles.push_back(mf::build_marking(n, seed));

    // 1. Free-ball certificates with the pinned word counts.
    {
        const std::uint64_t expected_counts[4] = {16, 160, 1456, 13120};
        const auto t0 = std::chrono::steady_clock::now();
        bool ok = true;
        std::ostringstream detail;
        for (int n = 1; n <= 4; ++n) {
            const mf::BallCertificate cert = mf::verify_free_ball(bundles[n - 1]);
            const bool good = cert.verified() &&
                              cert.report.checked_words == expected_counts[n - 1];
            ok = ok && good;
            detail << (n > 1 ? ", " : "") << "n=" << n << ":" << cert.report.checked_words
                   << (good ? "" : "(!)");
        }
        std::ostringstream line;
        line << "free-ball certificates (seed 42) verified, word counts " << detail.str()
             << " [" << seconds_since(t0) << "s]";
        report(1, ok, line.str());
    }

    // 2. Generation witnesses for n = 1 and 2, bit-exact.
    {
        const auto t0 = std::chrono::steady_clock::now();
        bool ok = true;
        std::ostringstream detail;
        for (int n = 1; n <= 2; ++n) {
            const mf::MarkingBundle& b = bundles[n - 1];
            try {
                const mf::GenerationWitness w = mf::generation_witness(b);
                const bool good = w.verified && w.W_p.eval({b.g, b.h}) == b.p &&
                                  w.W_q.eval({b.g, b.h}) == b.q;
                ok = ok && good;
                detail << (n > 1 ? ", " : "") << "n=" << n << ": |W_p|=" << w.expanded_length_p.get_str()
                       << " |W_q|=" << w.expanded_length_q.get_str() << (good ? "" : "(!)");
            } catch (const std::exception& e) {
                ok = false;
                detail << " n=" << n << " threw: " << e.what();
            }
        }
        std::ostringstream line;
        line << "generation witnesses evaluate to p_n, q_n exactly; " << detail.str() << " ["
             << seconds_since(t0) << "s]";
        report(2, ok, line.str());
    }

    // 3. Negative control: the standard marking sits at distance e^-4.
    {
        const mf::DistanceReport rep = mf::distance_to_free(fs, 8);
        const bool ok = rep.n == 4 && rep.exact && rep.shortest_relation &&
                        rep.shortest_relation->length() == 10 &&
                        mf::eval_word(*rep.shortest_relation, fs).is_identity();
        std::ostringstream line;
        line << "distance_to_free((f1,f2), cutoff 8) = e^-" << rep.n << ", shortest relation ";
        if (rep.shortest_relation)
            line << "'" << rep.shortest_relation->str() << "' of length "
                 << rep.shortest_relation->length();
        else
            line << "missing";
        report(3, ok, line.str());
    }

    // 4. Convergence trend: reported exponents nondecreasing and >= n.
    {
        const auto t0 = std::chrono::steady_clock::now();
        bool ok = true;
        int prev = 0;
        std::ostringstream detail;
        for (int n = 1; n <= 4; ++n) {
            const mf::MarkingBundle& b = bundles[n - 1];
            const mf::DistanceReport rep = mf::distance_to_free({b.g, b.h}, n);
            const bool good = rep.n >= n && rep.n >= prev;
            ok = ok && good;
            prev = rep.n;
            detail << (n > 1 ? ", " : "") << "n=" << n << ": e^-" << rep.n
                   << (rep.censored ? " (censored)" : " (exact)") << (good ? "" : "(!)");
        }
        std::ostringstream line;
        line << "bundle distances " << detail.str() << " [" << seconds_since(t0) << "s]";
        report(4, ok, line.str());
    }

    // 5. Word-problem soundness: 100 seeded roundtrips, words up to length 30.
    {
        std::mt19937_64 rng(20240 + seed);
        bool ok = true;
        for (int i = 0; i < 100 && ok; ++i) {
            const mf::PLMap f = mf::eval_word(random_reduced(rng, 30), fs);
            ok = mf::eval_word(mf::express_word(f), fs) == f;
        }
        report(5, ok, "express_word . eval_word round-trip on 100 words of length <= 30, exact");
    }

    // 6. Dynamical predicates.
    {
        bool ok = mf::is_special(mf::generator_f2(), mf::Rational(0), mf::Rational(1));
        std::string failed;
        for (const auto& b : bundles) {
            try {
                const mf::PLMap alpha = mf::alpha_of(b); // throws unless both properties hold
                ok = ok && mf::equal_on_interval(alpha, mf::PLMap(), mf::Rational(0), mf::Rational(1)) &&
                     mf::strictly_above_identity_on_ray(alpha, mf::Rational(1));
            } catch (const std::exception& e) {
                ok = false;
                failed = e.what();
            }
        }
        report(6, ok,
               "is_special(f2, 0, 1) and the alpha assertions hold for every bundle" +
                   (failed.empty() ? "" : " (" + failed + ")"));
    }

    // 7. Invariant suites across three seeds.
    {
        bool ok = true;
        for (std::uint64_t s : {3ULL, 42ULL, 1001ULL}) {
            std::mt19937_64 rng(s);
            // pl_engine: group axioms, support transport, canonicality
            for (int i = 0; i < 8 && ok; ++i) {
                const mf::PLMap f = mf::eval_word(random_reduced(rng, 8), fs);
                const mf::PLMap g = mf::eval_word(random_reduced(rng, 8), fs);
                const mf::PLMap h = mf::eval_word(random_reduced(rng, 8), fs);
                ok = ok && mf::compose(mf::compose(f, g), h) == mf::compose(f, mf::compose(g, h));
                ok = ok && mf::compose(f, mf::invert(f)).is_identity();
                ok = ok && (mf::support(mf::conjugate(f, g)) ==
                            mf::image_of_support(mf::support(f), g));
                ok = ok && (mf::equals(f, g) == (f == g));
            }
            // free_approx: determinism and block disjointness
            const mf::FreePair x = mf::free_pair(2, s);
            const mf::FreePair y = mf::free_pair(2, s);
            ok = ok && x.a == y.a && x.b == y.b;
            for (std::size_t i = 0; ok && i < x.cert.blocks.size(); ++i)
                for (std::size_t j = i + 1; ok && j < x.cert.blocks.size(); ++j)
                    ok = x.cert.blocks[i].hi <= x.cert.blocks[j].lo;
            for (std::size_t i = 0; ok && i < x.cert.blocks.size(); ++i)
                ok = mf::equal_on_interval(x.a, x.a_blocks[i], x.cert.blocks[i].lo,
                                           x.cert.blocks[i].hi);
        }
        report(7, ok, "pl_engine and free_approx invariant suites, seeds {3, 42, 1001}");
    }

    if (failures == 0) {
        std::cout << "acceptance: all criteria passed" << std::endl;
        return 0;
    }
    std::cout << "acceptance: " << failures << " criterion(s) failed" << std::endl;
    return 1;
}
