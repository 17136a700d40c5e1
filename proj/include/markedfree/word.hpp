#pragma once

/// \file word.hpp
/// Formal words over a ranked alphabet with inverses, kept in freely reduced
/// form (adjacent letters with equal index merged, zero exponents dropped).
/// Letters print as "f1", "f2^-1", "f1^3" and words as space-separated
/// letters; the empty word prints as "".

#include "markedfree/plmap.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace markedfree {

struct Letter {
    int index;  // 0-based generator index
    long exp;   // nonzero in reduced form
    bool operator==(const Letter&) const = default;
};

class Word {
public:
    Word() = default;
    explicit Word(int rank) : rank_(rank) {}
    Word(int rank, std::vector<Letter> letters);

    int rank() const { return rank_; }
    const std::vector<Letter>& letters() const { return letters_; }
    bool empty() const { return letters_.empty(); }

    /// Sum of |exponent|.
    std::uint64_t length() const;

    /// One (index, +-1) entry per letter occurrence.
    std::vector<Letter> flattened() const;

    /// Appends one syllable, merging and cancelling against the tail.
    void append(int index, long exp);
    void append(const Word& w);

    Word inverse() const;
    Word concat(const Word& o) const;
    Word pow(long e) const;

    /// Replaces generator i by images[i]; the result lives over the images'
    /// alphabet.
    Word substitute(const std::vector<Word>& images) const;

    long exponent_sum(int index) const;

    /// Conjugacy-minimal form: strips matching first/last inverse letters.
    Word cyclically_reduced() const;

    /// Order by length, then lexicographically on flattened letters with
    /// f1 < f1^-1 < f2 < f2^-1 < ...
    static bool shortlex_less(const Word& a, const Word& b);

    std::string str() const;
    static Word parse(const std::string& text, int rank);

    bool operator==(const Word&) const = default;

private:
    int rank_ = 0;
    std::vector<Letter> letters_;
};

/// Substitute-and-compose in right-action order; assignment[i] replaces
/// generator i. Throws std::invalid_argument on rank mismatch.
PLMap eval_word(const Word& w, const std::vector<PLMap>& assignment);

/// All freely reduced words of length <= max_len, identity included, each
/// exactly once, in shortlex-compatible depth-first order.
void enumerate_reduced_words(int rank, int max_len, const std::function<void(const Word&)>& fn);

std::vector<Word> reduced_words(int rank, int max_len);

} // namespace markedfree
