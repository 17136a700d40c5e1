#pragma once

/// \file plmap.hpp
/// Orientation-preserving piecewise-linear homeomorphisms of the real line
/// with finitely many breakpoints and affine tails, in exact rational
/// arithmetic. This is the universal carrier for every group element in the
/// project.
///
/// Conventions, fixed globally:
///   - all actions are right actions: compose(f, g) means "apply f, then g",
///     so eval(compose(f, g), x) == eval(g, eval(f, x));
///   - conjugate(f, g) == g^-1 f g, hence supp(conjugate(f, g)) == supp(f)·g;
///   - commutator(f, g) == f^-1 g^-1 f g.
///
/// Every PLMap is canonical on construction: breakpoints whose incoming and
/// outgoing slopes agree are merged away, so equality of maps is identity of
/// representations. Values are immutable after construction and safe to share
/// across threads.

#include "markedfree/rational.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace markedfree {

/// Validation failure for non-monotone or discontinuous breakpoint data.
/// `index` points at the offending breakpoint (size_t(-1) for tail problems).
struct ValidationError : std::invalid_argument {
    ValidationError(std::string msg, std::size_t idx)
        : std::invalid_argument(std::move(msg)), index(idx) {}
    std::size_t index;
};

/// t -> slope*t + offset with slope > 0.
struct AffineTail {
    Rational slope{1};
    Rational offset{0};

    Rational operator()(const Rational& t) const { return slope * t + offset; }
    AffineTail inverse() const { return {slope.reciprocal(), -(offset / slope)}; }
    /// this, then o (right-action order).
    AffineTail then(const AffineTail& o) const { return {slope * o.slope, o.slope * offset + o.offset}; }
    bool is_identity() const { return slope.is_one() && offset.is_zero(); }
    bool operator==(const AffineTail&) const = default;
};

struct Breakpoint {
    Rational x;
    Rational y;
    bool operator==(const Breakpoint&) const = default;
};

/// An open interval with rational or infinite endpoints. nullopt on the left
/// means -inf, on the right +inf.
struct OpenInterval {
    std::optional<Rational> lo;
    std::optional<Rational> hi;
    bool operator==(const OpenInterval&) const = default;
};

/// Maximal open set {x : x·f != x}, as disjoint open intervals left to right.
struct SupportSet {
    std::vector<OpenInterval> components;

    bool empty() const { return components.empty(); }
    /// Closure is a compact subset of (lo, hi): all endpoints finite and
    /// strictly inside.
    bool closure_inside(const Rational& lo, const Rational& hi) const;
    /// Infimum over all components; nullopt if empty support or -inf.
    std::optional<Rational> inf() const;
    std::optional<Rational> sup() const;
    bool operator==(const SupportSet&) const = default;
    std::string str() const;
};

class PLMap {
public:
    /// Identity map: no breakpoints, both tails t -> t.
    PLMap() = default;

    /// Validates monotonicity/continuity and canonicalizes. Throws
    /// ValidationError identifying the offending breakpoint index.
    PLMap(std::vector<Breakpoint> pts, AffineTail left, AffineTail right);

    const std::vector<Breakpoint>& breakpoints() const { return pts_; }
    const AffineTail& left_tail() const { return left_; }
    const AffineTail& right_tail() const { return right_; }

    bool is_identity() const { return pts_.empty() && left_.is_identity(); }

    /// Exact image of x. Piece located by binary search.
    Rational operator()(const Rational& x) const;

    /// Exact preimage: the unique x with f(x) == y.
    Rational preimage(const Rational& y) const;

    bool operator==(const PLMap&) const = default;

private:
    std::vector<Breakpoint> pts_; // strictly increasing in x and in y
    AffineTail left_;             // valid on (-inf, x0]
    AffineTail right_;            // valid on [x_last, inf)

    void validate() const;
    void canonicalize();
    friend PLMap compose(const PLMap&, const PLMap&);
};

// --- spec-named operations -------------------------------------------------

inline PLMap make_plmap(std::vector<Breakpoint> pts, AffineTail left, AffineTail right) {
    return PLMap(std::move(pts), std::move(left), std::move(right));
}

inline Rational eval(const PLMap& f, const Rational& x) { return f(x); }

/// "f then g": eval(compose(f,g), x) == eval(g, eval(f, x)). Breakpoints of
/// the result are a subset of breaks(f) together with f-preimages of
/// breaks(g); computed by an ordered merge, then canonicalized.
PLMap compose(const PLMap& f, const PLMap& g);

PLMap invert(const PLMap& f);

inline bool equals(const PLMap& f, const PLMap& g) { return f == g; }

/// g^-1 f g.
PLMap conjugate(const PLMap& f, const PLMap& g);

/// f^-1 g^-1 f g.
PLMap commutator(const PLMap& f, const PLMap& g);

/// f composed with itself n times (n may be negative).
PLMap power(const PLMap& f, long n);

SupportSet support(const PLMap& f);

/// Finite fixed endpoints of support components (accumulation points of the
/// support), deduplicated, ascending.
std::vector<Rational> transition_points(const PLMap& f);

/// J-special for J = [r1, r2]: fixes (-inf, r1] pointwise and moves every
/// point of (r2, inf) strictly up. Decided exactly from canonical form data.
bool is_special(const PLMap& f, const Rational& r1, const Rational& r2);

/// Conjugate of f by t -> a*t + b (a > 0); takes support(f) into (b, a+b).
/// Throws ValidationError when a <= 0.
PLMap affine_conjugate_into(const PLMap& f, const Rational& a, const Rational& b);

/// Necessary conditions for membership in the group generated by the two
/// standard real-line generators: dyadic breakpoints, 2-power slopes, both
/// tails integer translations. (Certification is express_word.)
bool is_thompson_element(const PLMap& f);

/// Exact equality of restrictions to [lo, hi].
bool equal_on_interval(const PLMap& f, const PLMap& g, const Rational& lo, const Rational& hi);

/// f(x) > x for every x in (lo, inf)? Exact piecewise decision.
bool strictly_above_identity_on_ray(const PLMap& f, const Rational& lo);

/// Image of a support set under a homeomorphism (componentwise).
SupportSet image_of_support(const SupportSet& s, const PLMap& g);

} // namespace markedfree
