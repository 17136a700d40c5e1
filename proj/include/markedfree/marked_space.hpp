#pragma once

/// \file marked_space.hpp
/// The marked-groups metric, operationally: two markings are e^-n apart when
/// n is the largest radius at which the labeled Cayley balls agree, and a
/// marked tuple has a free n-ball iff it satisfies no nontrivial relation of
/// length <= 2n. Relation spectra are computed by exhaustive prefix-sharing
/// enumeration with exact equality.

#include "markedfree/free_pair.hpp"
#include "markedfree/plmap.hpp"
#include "markedfree/word.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace markedfree {

struct RelationSpectrum {
    int cutoff = 0;
    std::vector<Word> trivial_words; // nontrivial-as-words, evaluating to id; shortlex order
    std::uint64_t words_checked = 0;
    bool empty() const { return trivial_words.empty(); }
};

/// Every reduced word of length <= cutoff that evaluates to the identity.
RelationSpectrum relation_spectrum(const std::vector<PLMap>& tuple, int cutoff, int threads = 1);

/// Free n-ball criterion: no nontrivial relation of length <= 2n.
bool ball_isomorphic_to_free(const std::vector<PLMap>& tuple, int n, int threads = 1);

struct DistanceReport {
    int n = 0;            // distance is e^-n; n = 0 is the maximal-distance sentinel
    bool exact = false;   // a violation pinned n (found at radius n+1)
    bool censored = false; // search stopped at the cutoff
    std::optional<Word> shortest_relation;
    std::uint64_t words_checked = 0;
    int cutoff = 0;
};

/// Largest n <= cutoff whose ball is free, by iterative deepening on the
/// relation length; reports the shortest relation when one exists within
/// reach, and censors otherwise.
DistanceReport distance_to_free(const std::vector<PLMap>& tuple, int cutoff, int threads = 1);

} // namespace markedfree
