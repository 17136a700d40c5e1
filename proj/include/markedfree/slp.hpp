#pragma once

/// \file slp.hpp
/// Straight-line programs: DAG-compressed words whose literal expansion may
/// be huge. Nodes reference earlier nodes only, so evaluation is a single
/// memoized bottom-up pass and never expands the word.

#include "markedfree/word.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <tuple>
#include <vector>

namespace markedfree {

class SlpWord {
public:
    enum class Op : std::uint8_t { Gen, Cat, Inv, Pow, Lit };

    struct Node {
        Op op;
        int gen = 0;          // Gen
        std::uint32_t a = 0;  // Cat/Inv/Pow child
        std::uint32_t b = 0;  // Cat second child
        long exp = 0;         // Pow
        Word literal;         // Lit
    };

    explicit SlpWord(int rank = 0) : rank_(rank) {}

    int rank() const { return rank_; }
    const std::vector<Node>& nodes() const { return nodes_; }
    std::uint32_t root() const { return root_; }
    void set_root(std::uint32_t r) { root_ = r; }

    // Builders return node ids; structurally identical nodes are shared.
    std::uint32_t gen(int index);
    std::uint32_t cat(std::uint32_t a, std::uint32_t b);
    std::uint32_t cat(std::initializer_list<std::uint32_t> xs);
    std::uint32_t inv(std::uint32_t a);
    std::uint32_t pow(std::uint32_t a, long e);
    std::uint32_t lit(const Word& w);

    /// Appends a prebuilt node (used by deserialization); validates child ids.
    std::uint32_t push_node(Node n);

    /// Memoized evaluation in right-action order.
    PLMap eval(const std::vector<PLMap>& assignment) const;

    /// Exact letter count of the expansion.
    mpz_class expanded_length() const;

    /// Literal expansion, guarded: throws std::length_error beyond the cap.
    Word expand(std::uint64_t max_letters = 10'000'000) const;

private:
    int rank_;
    std::vector<Node> nodes_;
    std::uint32_t root_ = 0;
    std::map<std::tuple<int, int, std::uint32_t, std::uint32_t, long, std::string>, std::uint32_t> dedup_;
};

inline PLMap eval_word(const SlpWord& w, const std::vector<PLMap>& assignment) {
    return w.eval(assignment);
}

} // namespace markedfree
