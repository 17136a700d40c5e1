#include "markedfree/plmap.hpp"

#include <algorithm>
#include <cassert>

namespace markedfree {

namespace {

/// Closed interval with optionally infinite endpoints, used for fixed sets.
struct ClosedPart {
    std::optional<Rational> lo; // nullopt = -inf
    std::optional<Rational> hi; // nullopt = +inf
};

/// One affine piece of the map: t -> a*t + b on [lo, hi] (ends optional).
struct Piece {
    Rational a, b;
    std::optional<Rational> lo, hi;
};

std::vector<Piece> pieces_of(const PLMap& f) {
    std::vector<Piece> out;
    const auto& pts = f.breakpoints();
    if (pts.empty()) {
        out.push_back({f.left_tail().slope, f.left_tail().offset, std::nullopt, std::nullopt});
        return out;
    }
    out.push_back({f.left_tail().slope, f.left_tail().offset, std::nullopt, pts.front().x});
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        const Rational a = (pts[i + 1].y - pts[i].y) / (pts[i + 1].x - pts[i].x);
        const Rational b = pts[i].y - a * pts[i].x;
        out.push_back({a, b, pts[i].x, pts[i + 1].x});
    }
    out.push_back({f.right_tail().slope, f.right_tail().offset, pts.back().x, std::nullopt});
    return out;
}

} // namespace

bool SupportSet::closure_inside(const Rational& lo, const Rational& hi) const {
    for (const auto& c : components) {
        if (!c.lo || !c.hi) return false;
        if (!(*c.lo > lo) || !(*c.hi < hi)) return false;
    }
    return true;
}

std::optional<Rational> SupportSet::inf() const {
    if (components.empty()) return std::nullopt;
    return components.front().lo;
}

std::optional<Rational> SupportSet::sup() const {
    if (components.empty()) return std::nullopt;
    return components.back().hi;
}

std::string SupportSet::str() const {
    if (components.empty()) return "{}";
    std::string s;
    for (const auto& c : components) {
        if (!s.empty()) s += " u ";
        s += "(" + (c.lo ? c.lo->str() : std::string("-inf")) + ", " +
             (c.hi ? c.hi->str() : std::string("+inf")) + ")";
    }
    return s;
}

PLMap::PLMap(std::vector<Breakpoint> pts, AffineTail left, AffineTail right)
    : pts_(std::move(pts)), left_(std::move(left)), right_(std::move(right)) {
    validate();
    canonicalize();
}

void PLMap::validate() const {
    if (left_.slope.sign() <= 0)
        throw ValidationError("left tail slope must be positive", static_cast<std::size_t>(-1));
    if (right_.slope.sign() <= 0)
        throw ValidationError("right tail slope must be positive", static_cast<std::size_t>(-1));
    if (pts_.empty()) {
        if (!(left_ == right_))
            throw ValidationError("map with no breakpoints must have equal tails",
                                  static_cast<std::size_t>(-1));
        return;
    }
    for (std::size_t i = 0; i + 1 < pts_.size(); ++i) {
        if (!(pts_[i].x < pts_[i + 1].x))
            throw ValidationError("breakpoint x not strictly increasing at index " + std::to_string(i + 1),
                                  i + 1);
        if (!(pts_[i].y < pts_[i + 1].y))
            throw ValidationError("breakpoint y not strictly increasing at index " + std::to_string(i + 1),
                                  i + 1);
    }
    if (left_(pts_.front().x) != pts_.front().y)
        throw ValidationError("left tail discontinuous at breakpoint 0", 0);
    if (right_(pts_.back().x) != pts_.back().y)
        throw ValidationError("right tail discontinuous at breakpoint " + std::to_string(pts_.size() - 1),
                              pts_.size() - 1);
}

void PLMap::canonicalize() {
    if (pts_.empty()) return;
    const std::size_t n = pts_.size();
    // One-sided slopes of the underlying function at each breakpoint are
    // intrinsic, so a single pass suffices.
    std::vector<Breakpoint> keep;
    keep.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const Rational in = (i == 0)
            ? left_.slope
            : (pts_[i].y - pts_[i - 1].y) / (pts_[i].x - pts_[i - 1].x);
        const Rational out = (i + 1 == n)
            ? right_.slope
            : (pts_[i + 1].y - pts_[i].y) / (pts_[i + 1].x - pts_[i].x);
        if (in != out) keep.push_back(pts_[i]);
    }
    pts_ = std::move(keep);
    if (pts_.empty()) {
        // All slopes equal; continuity forces a single affine map.
        assert(left_ == right_);
    }
}

Rational PLMap::operator()(const Rational& x) const {
    if (pts_.empty() || x <= pts_.front().x) return left_(x);
    if (x >= pts_.back().x) return right_(x);
    // first breakpoint with pts_[k].x >= x; segment is [k-1, k]
    std::size_t lo = 0, hi = pts_.size() - 1;
    while (lo + 1 < hi) {
        const std::size_t mid = (lo + hi) / 2;
        if (pts_[mid].x >= x) hi = mid;
        else lo = mid;
    }
    const auto& p = pts_[lo];
    const auto& q = pts_[hi];
    return p.y + (x - p.x) * (q.y - p.y) / (q.x - p.x);
}

Rational PLMap::preimage(const Rational& y) const {
    if (pts_.empty() || y <= pts_.front().y) return left_.inverse()(y);
    if (y >= pts_.back().y) return right_.inverse()(y);
    std::size_t lo = 0, hi = pts_.size() - 1;
    while (lo + 1 < hi) {
        const std::size_t mid = (lo + hi) / 2;
        if (pts_[mid].y >= y) hi = mid;
        else lo = mid;
    }
    const auto& p = pts_[lo];
    const auto& q = pts_[hi];
    return p.x + (y - p.y) * (q.x - p.x) / (q.y - p.y);
}

PLMap compose(const PLMap& f, const PLMap& g) {
    const auto& fp = f.breakpoints();
    const auto& gp = g.breakpoints();
    std::vector<Rational> xs;
    xs.reserve(fp.size() + gp.size());
    std::size_t i = 0, j = 0;
    while (i < fp.size() || j < gp.size()) {
        if (i == fp.size()) {
            xs.push_back(f.preimage(gp[j].x));
            ++j;
        } else if (j == gp.size()) {
            xs.push_back(fp[i].x);
            ++i;
        } else {
            const Rational xg = f.preimage(gp[j].x);
            if (fp[i].x < xg) {
                xs.push_back(fp[i].x);
                ++i;
            } else if (xg < fp[i].x) {
                xs.push_back(xg);
                ++j;
            } else {
                xs.push_back(fp[i].x);
                ++i;
                ++j;
            }
        }
    }
    std::vector<Breakpoint> pts;
    pts.reserve(xs.size());
    for (auto& x : xs) {
        Rational y = g(f(x));
        pts.push_back({std::move(x), std::move(y)});
    }
    return PLMap(std::move(pts), f.left_tail().then(g.left_tail()),
                 f.right_tail().then(g.right_tail()));
}

PLMap invert(const PLMap& f) {
    std::vector<Breakpoint> pts;
    pts.reserve(f.breakpoints().size());
    for (const auto& p : f.breakpoints()) pts.push_back({p.y, p.x});
    return PLMap(std::move(pts), f.left_tail().inverse(), f.right_tail().inverse());
}

PLMap conjugate(const PLMap& f, const PLMap& g) {
    return compose(compose(invert(g), f), g);
}

PLMap commutator(const PLMap& f, const PLMap& g) {
    return compose(compose(invert(f), invert(g)), compose(f, g));
}

PLMap power(const PLMap& f, long n) {
    PLMap base = n < 0 ? invert(f) : f;
    long k = n < 0 ? -n : n;
    PLMap acc;
    while (k-- > 0) acc = compose(acc, base);
    return acc;
}

SupportSet support(const PLMap& f) {
    // Fixed set first: closed, finitely many intervals/points; support is its
    // open complement.
    std::vector<ClosedPart> fixed;
    auto add_fixed = [&](std::optional<Rational> lo, std::optional<Rational> hi) {
        if (!fixed.empty()) {
            auto& prev = fixed.back();
            // Parts arrive in ascending order and can only touch at a shared
            // piece endpoint.
            if (prev.hi && lo && *prev.hi == *lo) {
                prev.hi = hi;
                return;
            }
        }
        fixed.push_back({std::move(lo), std::move(hi)});
    };
    for (const auto& pc : pieces_of(f)) {
        if (pc.a.is_one()) {
            if (pc.b.is_zero()) add_fixed(pc.lo, pc.hi);
            continue;
        }
        Rational t = pc.b / (Rational(1) - pc.a);
        const bool in_lo = !pc.lo || *pc.lo <= t;
        const bool in_hi = !pc.hi || t <= *pc.hi;
        if (in_lo && in_hi) add_fixed(t, t);
    }
    SupportSet s;
    if (fixed.empty()) {
        s.components.push_back({std::nullopt, std::nullopt});
        return s;
    }
    if (fixed.front().lo) s.components.push_back({std::nullopt, fixed.front().lo});
    for (std::size_t i = 0; i + 1 < fixed.size(); ++i)
        s.components.push_back({fixed[i].hi, fixed[i + 1].lo});
    if (fixed.back().hi) s.components.push_back({fixed.back().hi, std::nullopt});
    return s;
}

std::vector<Rational> transition_points(const PLMap& f) {
    std::vector<Rational> out;
    for (const auto& c : support(f).components) {
        if (c.lo && (out.empty() || out.back() != *c.lo)) out.push_back(*c.lo);
        if (c.hi && (out.empty() || out.back() != *c.hi)) out.push_back(*c.hi);
    }
    return out;
}

bool is_special(const PLMap& f, const Rational& r1, const Rational& r2) {
    if (!(r1 <= r2)) throw std::invalid_argument("is_special: requires r1 <= r2");
    const SupportSet s = support(f);
    for (const auto& c : s.components)
        if (!c.lo || *c.lo < r1) return false; // moves something left of r1
    if (!strictly_above_identity_on_ray(f, r2)) return false;
    return true;
}

bool strictly_above_identity_on_ray(const PLMap& f, const Rational& lo) {
    const SupportSet s = support(f);
    // (lo, inf) must be inside one support component...
    if (s.components.empty()) return false;
    const auto& last = s.components.back();
    if (last.hi) return false;                  // rightmost moved set is bounded
    if (last.lo && !(*last.lo <= lo)) return false; // a fixed point sits right of lo
    // ...and then f - id has constant sign there; one exact probe decides it.
    Rational probe = lo + Rational(1);
    if (!f.breakpoints().empty()) probe = max(probe, f.breakpoints().back().x + Rational(1));
    return f(probe) > probe;
}

PLMap affine_conjugate_into(const PLMap& f, const Rational& a, const Rational& b) {
    if (a.sign() <= 0)
        throw ValidationError("affine carrier slope must be positive", static_cast<std::size_t>(-1));
    const PLMap phi({}, {a, b}, {a, b});
    return compose(compose(invert(phi), f), phi);
}

bool is_thompson_element(const PLMap& f) {
    const auto integer_translation = [](const AffineTail& t) {
        return t.slope.is_one() && t.offset.is_integer();
    };
    if (!integer_translation(f.left_tail()) || !integer_translation(f.right_tail())) return false;
    const auto& pts = f.breakpoints();
    for (const auto& p : pts)
        if (!p.x.is_dyadic() || !p.y.is_dyadic()) return false;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        const Rational slope = (pts[i + 1].y - pts[i].y) / (pts[i + 1].x - pts[i].x);
        if (!slope.is_power_of_two()) return false;
    }
    return true;
}

bool equal_on_interval(const PLMap& f, const PLMap& g, const Rational& lo, const Rational& hi) {
    if (hi < lo) throw std::invalid_argument("equal_on_interval: requires lo <= hi");
    if (f(lo) != g(lo) || f(hi) != g(hi)) return false;
    std::vector<Rational> xs;
    for (const auto& p : f.breakpoints())
        if (lo < p.x && p.x < hi) xs.push_back(p.x);
    for (const auto& p : g.breakpoints())
        if (lo < p.x && p.x < hi) xs.push_back(p.x);
    std::sort(xs.begin(), xs.end());
    // Between consecutive probe points both maps are affine and agree at the
    // ends, hence agree everywhere on [lo, hi].
    for (const auto& x : xs)
        if (f(x) != g(x)) return false;
    return true;
}

SupportSet image_of_support(const SupportSet& s, const PLMap& g) {
    SupportSet out;
    out.components.reserve(s.components.size());
    for (const auto& c : s.components) {
        OpenInterval img;
        if (c.lo) img.lo = g(*c.lo);
        if (c.hi) img.hi = g(*c.hi);
        out.components.push_back(std::move(img));
    }
    return out;
}

} // namespace markedfree
