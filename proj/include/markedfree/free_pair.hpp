#pragma once

/// \file free_pair.hpp
/// Exhaustive freeness certification of marked tuples up to a radius, and the
/// seeded search for pairs (a_n, b_n) in the derived subgroup of the
/// [0,1]-fixing copy whose marked n-ball is free. Word evaluation shares
/// prefix compositions through a DFS over the reduced-word tree; the leaf
/// level avoids composition entirely by comparing against precomputed
/// inverse-letter maps.

#include "markedfree/plmap.hpp"
#include "markedfree/word.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace markedfree {

struct CheckReport {
    int radius = 0;
    std::uint64_t checked_words = 0;    // nontrivial reduced words visited
    std::optional<Word> violation;      // shortest trivial word, lex-least on ties
    bool verified() const { return !violation.has_value(); }
};

/// Evaluates every nontrivial freely reduced word of length <= max_len on the
/// tuple. Returns either a clean report or the shortest violating word.
/// Deterministic for any thread count; threads > 1 splits the top-level
/// subtrees.
CheckReport check_no_relations(const std::vector<PLMap>& tuple, int max_len, int threads = 1);

struct BlockPlacement {
    Rational lo, hi;             // dyadic sub-block of (0,1)
    std::uint64_t candidate_id;  // draw index of the placed candidate pair
};

struct FreePairCertificate {
    int radius = 0;
    std::uint64_t checked_words = 0;
    std::uint64_t seed = 0;
    std::vector<BlockPlacement> blocks;
    bool verified = false;
};

/// One placed block: the commutator halves u, v (unit-model maps, support in
/// (0,1)) and their affine placements; the placed candidate pair is
/// ([u,v], [u',v']) conjugated into the block.
struct BlockPieces {
    PLMap a_u, a_v; // a's candidate halves, pre-placement
    PLMap b_u, b_v; // b's candidate halves, pre-placement
    Rational scale, offset;
};

struct FreePair {
    PLMap a, b;
    std::vector<PLMap> a_blocks, b_blocks; // placed per-block factors
    std::vector<BlockPieces> pieces;
    FreePairCertificate cert;
};

struct FreePairSearchError : std::runtime_error {
    FreePairSearchError(std::string msg, std::vector<Word> surviving_words)
        : std::runtime_error(std::move(msg)), surviving(std::move(surviving_words)) {}
    std::vector<Word> surviving;
};

struct FreePairOptions {
    std::uint64_t candidate_budget = 256; // total candidate draws before giving up
    int candidates_per_round = 8;
    int max_candidate_word_len = 4; // letters per random word in a commutator half
    int threads = 1;
};

/// Greedy seeded construction: draw candidate pairs of short commutators of
/// random words in the unit-model copy, score against the still-unkilled
/// words, place the best on the next dyadic sub-block (1-2^-j, 1-2^-j-1).
/// Deterministic per (n, seed). Throws FreePairSearchError when the budget
/// runs out.
FreePair free_pair(int n, std::uint64_t seed, const FreePairOptions& opts = {});

} // namespace markedfree
