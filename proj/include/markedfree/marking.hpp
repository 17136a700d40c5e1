#pragma once

/// \file marking.hpp
/// The marking construction: blockwise placement of a certified free pair on
/// an integer interval chosen by exact prefix-displacement conditions, the
/// marked generators g = p f1, h = q f2, exhaustive free-ball verification,
/// and explicit generation witnesses (SLPs over {g, h} that evaluate back to
/// p and q bit-exactly).

#include "markedfree/free_pair.hpp"
#include "markedfree/plmap.hpp"
#include "markedfree/slp.hpp"
#include "markedfree/thompson.hpp"
#include "markedfree/word.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace markedfree {

struct MarkingBundle {
    int n = 0;
    long m = 0; // I_n = [m, m + 2n + 1]
    std::uint64_t seed = 0;
    PLMap a, b;  // certified free pair, supported in (0,1)
    PLMap p, q;  // blockwise products over I_n
    PLMap g, h;  // the marking: g = p f1, h = q f2
    std::vector<PLMap> a_blocks, b_blocks;
    std::vector<BlockPieces> pieces; // commutator halves behind each block
    Word U, V;                       // words generating the [0,1]-fixing copy
    FreePairCertificate pair_cert;

    long interval_end() const { return m + 2 * n + 1; }
};

/// Least positive integer m such that every nonempty prefix w of U and V
/// satisfies w(m-1) > 2 and w(2) < m-1 (the ray/interval disjointness
/// conditions, reduced through monotonicity). Exact prefix evaluation.
long choose_m(const Word& U, const Word& V);

/// The map acting on each unit block [k, k+1], c <= k < d, as the translate
/// of e by k, and as the identity elsewhere. Requires support(e) in (0,1).
PLMap block_product(const PLMap& e, long c, long d);

struct BuildOptions {
    FreePairOptions pair;
};

/// Runs free_pair at radius 2n, picks m from the subgroup generator words,
/// and assembles the bundle.
MarkingBundle build_marking(int n, std::uint64_t seed, const BuildOptions& opts = {});

struct BallCertificate {
    CheckReport report;                    // exhaustive radius-2n check on (g, h)
    std::uint64_t shadow_words_checked = 0; // middle-block mimicry sample
    bool shadow_passed = false;
    bool verified() const { return report.verified() && shadow_passed; }
};

/// Radius-2n exhaustive check plus the middle-block shadow property: words of
/// length <= n act on [m+n, m+n+1] as the conjugated, shifted action of the
/// same word on (a, b).
BallCertificate verify_free_ball(const MarkingBundle& bundle, int threads = 1);

struct WitnessError : std::runtime_error {
    WitnessError(std::string stage_, const std::string& what)
        : std::runtime_error(stage_ + ": " + what), stage(std::move(stage_)) {}
    std::string stage;
};

/// alpha = g^-1 h g; asserts exactly that alpha restricts to the identity on
/// [0,1] and moves every point of (1, inf) strictly up.
PLMap alpha_of(const MarkingBundle& bundle);

/// Least k >= 0 with inf([k_lo, k_hi] * mover^k) > target_sup. Requires mover
/// strictly above the identity on the spanned interval.
long displacement_power(const PLMap& mover, const Rational& k_lo, const Rational& k_hi,
                        const Rational& target_sup);

/// Constructive commutator decomposition in the free group of rank 2: for w
/// with zero exponent sum in both letters, returns pairs (c_i, d_i) with w
/// freely equal to prod [c_i, d_i]. Literal commutators come back verbatim;
/// the general case is Reidemeister-Schreier rewriting over the derived
/// subgroup's standard basis.
std::vector<std::pair<Word, Word>> commutator_decomposition(const Word& w);

struct GenerationWitness {
    SlpWord W_p, W_q; // over the alphabet (g, h)
    long s = 0;       // h-power conjugating p, q into the derived subgroup
    std::vector<long> k_values_p, k_values_q;
    mpz_class expanded_length_p, expanded_length_q;
    bool verified = false;
};

/// Builds witnesses following the generation proof: conjugate p (and q) by
/// h^-s into the derived subgroup of the [0,1]-fixing copy, split into the
/// construction's commutator pieces, express each half over the subgroup
/// generator pair, lift through the substituted words U1, V1 and separate the
/// far supports with alpha-power conjugations. Every stage is checked by
/// exact PL equality; the final SLPs re-evaluate to p and q bit-exactly.
GenerationWitness generation_witness(const MarkingBundle& bundle);

} // namespace markedfree
