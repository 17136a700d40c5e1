#pragma once

/// \file thompson.hpp
/// The two models of Thompson's group F used throughout:
///   - the real-line model, generated by f1(t) = t+1 and the three-piece f2;
///   - the unit model, dyadic PL homeomorphisms of [0,1] extended by the
///     identity, reached through an explicit dyadic conjugacy psi: R -> (0,1).
/// On top of the transport sit tree-pair diagrams, the classical normal form
/// and a complete expression algorithm: any PLMap passing the membership
/// checks is rewritten as a word in {f1, f2} that evaluates back to it
/// exactly.

#include "markedfree/plmap.hpp"
#include "markedfree/word.hpp"

#include <utility>
#include <vector>

namespace markedfree {

/// t -> t + 1.
const PLMap& generator_f1();
/// t for t <= 0; 2t on [0,1]; t + 1 for t >= 1.
const PLMap& generator_f2();

/// The conjugacy psi: on [n, n+1] (n >= 0), psi(t) = 1 - 2^(-n-2)*(2-(t-n));
/// on [-n-1, -n], psi(t) = 2^(-n-2)*(2+(t+n)). Strictly increasing bijection
/// onto (0,1), dyadic-to-dyadic.
Rational brown_forward(const Rational& t);
/// Exact inverse; requires 0 < s < 1.
Rational brown_backward(const Rational& s);

/// psi^-1 then f then psi, as a PLMap fixing the complement of [0,1]
/// pointwise. Requires is_thompson_element(f). Group isomorphism onto the
/// unit model.
PLMap transport_to_unit(const PLMap& f);
/// Inverse transport. Requires: identity tails, g(0)=0, g(1)=1, dyadic
/// breakpoints inside [0,1], 2-power slopes.
PLMap transport_from_unit(const PLMap& g);

/// A standard dyadic interval [k/2^e, (k+1)/2^e].
struct DyadicInterval {
    Rational lo, hi;
    bool operator==(const DyadicInterval&) const = default;
};

/// Reduced pair of standard dyadic partitions of [0,1] with equal leaf
/// counts; leaf i of the domain maps affinely onto leaf i of the range.
class TreePair {
public:
    TreePair(std::vector<DyadicInterval> domain, std::vector<DyadicInterval> range);

    const std::vector<DyadicInterval>& domain() const { return domain_; }
    const std::vector<DyadicInterval>& range() const { return range_; }
    std::size_t leaf_count() const { return domain_.size(); }

    /// The induced PL homeomorphism, extended by the identity outside [0,1].
    PLMap to_plmap() const;

    /// Balanced-parenthesis encodings of the two trees ('*' = leaf).
    std::string domain_parens() const;
    std::string range_parens() const;

    bool operator==(const TreePair&) const = default;

private:
    std::vector<DyadicInterval> domain_, range_;
    void reduce();
};

/// Reduced tree pair of a unit-model element; g must fix 0 and 1, have
/// identity tails, dyadic breakpoints and 2-power slopes. Throws
/// std::domain_error when the refinement guard is exceeded (non-membership).
TreePair tree_pair_of(const PLMap& g);

/// Classical normal form x0^a0 ... xk^ak xk^-bk ... x0^-b0 in the infinite
/// generator family, computed from leaf exponents of the reduced pair. The
/// returned Word's alphabet is x0..x_(leaves-1).
Word normal_form(const TreePair& tp);

/// Rewrites a word over x0..xk into {x0, x1} via x_n = x0^-(n-1) x1 x0^(n-1).
Word collapse_to_rank2(const Word& w_infinite);

/// Word w over {f1, f2} with eval_word(w, {f1, f2}) == f, via
/// transport / tree pair / normal form. Throws NonThompsonError with the
/// failed membership condition otherwise.
Word express_word(const PLMap& f);

/// Word over a rank-2 alphabet evaluating to g under the unit-model
/// generator pair (transport_to_unit(f1), transport_to_unit(f2)).
Word express_unit_word(const PLMap& g);

struct NonThompsonError : std::domain_error {
    using std::domain_error::domain_error;
};

/// The subgroup fixing R \ [0,1] pointwise, with its canonical generator
/// pair: U_pl = transport_to_unit(f1), V_pl = transport_to_unit(f2) (the
/// unit-model standard pair, extended by the identity), and words U, V in
/// {f1, f2} that evaluate to them exactly.
struct F2Generators {
    Word U, V;
    PLMap U_pl, V_pl;
};
const F2Generators& f2_subgroup_generators();

/// Membership in the derived subgroup of the [0,1]-fixing copy: the closure
/// of the support is a compact subset of (0,1). Requires is_thompson_element.
bool is_in_f2_derived(const PLMap& f);

} // namespace markedfree
