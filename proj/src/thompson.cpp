#include "markedfree/thompson.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace markedfree {

namespace {

long to_long(const mpz_class& z) {
    if (!z.fits_slong_p()) throw std::overflow_error("integer out of machine range");
    return z.get_si();
}

mpz_class ceil_of(const Rational& q) { return -((-q).floor()); }

/// [lo, hi] is standard dyadic: positive 2-power length, aligned left end.
bool is_std_dyadic(const Rational& lo, const Rational& hi) {
    const Rational len = hi - lo;
    long e = 0;
    if (len.sign() <= 0 || !len.is_power_of_two(&e)) return false;
    return (lo / len).is_integer();
}

struct UnitModelInfo {
    long max_denominator_exp = 0; // over breakpoint coordinates
    long max_slope_exp = 0;       // |exponent| over interior pieces
};

UnitModelInfo require_unit_model(const PLMap& g, const char* who) {
    UnitModelInfo info;
    if (!g.left_tail().is_identity() || !g.right_tail().is_identity())
        throw NonThompsonError(std::string(who) + ": tails must be the identity");
    const auto& pts = g.breakpoints();
    for (const auto& p : pts) {
        if (!p.x.is_dyadic() || !p.y.is_dyadic())
            throw NonThompsonError(std::string(who) + ": non-dyadic breakpoint");
        if (p.x.sign() < 0 || p.x > Rational(1))
            throw NonThompsonError(std::string(who) + ": breakpoint outside [0,1]");
        info.max_denominator_exp = std::max({info.max_denominator_exp,
                                             p.x.dyadic_exponent(), p.y.dyadic_exponent()});
    }
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        const Rational slope = (pts[i + 1].y - pts[i].y) / (pts[i + 1].x - pts[i].x);
        long e = 0;
        if (!slope.is_power_of_two(&e))
            throw NonThompsonError(std::string(who) + ": slope is not a power of two");
        info.max_slope_exp = std::max(info.max_slope_exp, e < 0 ? -e : e);
    }
    if (g(Rational(0)) != Rational(0) || g(Rational(1)) != Rational(1))
        throw NonThompsonError(std::string(who) + ": must fix 0 and 1");
    return info;
}

/// Cached unit-model generator pair (x0, x1) = transports of (f1, f2).
const std::pair<PLMap, PLMap>& unit_generator_pair() {
    static const std::pair<PLMap, PLMap> pair{transport_to_unit(generator_f1()),
                                              transport_to_unit(generator_f2())};
    return pair;
}

} // namespace

const PLMap& generator_f1() {
    static const PLMap f1({}, {Rational(1), Rational(1)}, {Rational(1), Rational(1)});
    return f1;
}

const PLMap& generator_f2() {
    static const PLMap f2({{Rational(0), Rational(0)}, {Rational(1), Rational(2)}},
                          {Rational(1), Rational(0)}, {Rational(1), Rational(1)});
    return f2;
}

Rational brown_forward(const Rational& t) {
    const mpz_class fl = t.floor();
    if (fl >= 0) {
        const long n = to_long(fl);
        // 1 - 2^(-n-2) * (2 - (t - n))
        return Rational(1) - Rational::pow2(-n - 2) * (Rational(2) - (t - Rational(n)));
    }
    const long n = to_long(mpz_class(-fl - 1));
    return Rational::pow2(-n - 2) * (Rational(2) + (t + Rational(n)));
}

Rational brown_backward(const Rational& s) {
    if (!(Rational(0) < s && s < Rational(1)))
        throw std::domain_error("brown_backward: argument must lie strictly between 0 and 1");
    if (s >= Rational(1, 2)) {
        const Rational u = Rational(1) - s;
        long n = 0;
        while (u < Rational::pow2(-n - 2)) ++n;
        return Rational(n) + Rational(2) - u * Rational::pow2(n + 2);
    }
    long n = 0;
    while (s < Rational::pow2(-n - 2)) ++n;
    return s * Rational::pow2(n + 2) - Rational(2) - Rational(n);
}

PLMap transport_to_unit(const PLMap& f) {
    if (!is_thompson_element(f))
        throw NonThompsonError("transport_to_unit: not a real-line Thompson element");
    if (f.is_identity()) return PLMap();

    const long kl = to_long(f.left_tail().offset.num());
    const long kr = to_long(f.right_tail().offset.num());
    // Below L (above R) both t and its translate must sit on the negative
    // (positive) side of 0, where psi conjugates a translation by k into a
    // single scaling by 2^k; otherwise real corners hide in the tail zone.
    long L = -1, R = 1;
    const auto& pts = f.breakpoints();
    if (!pts.empty()) {
        L = to_long(pts.front().x.floor()) - 1;
        R = to_long(ceil_of(pts.back().x)) + 1;
    }
    L = std::min({L, -1L, -kl - 1});
    R = std::max({R, 1L, -kr + 1});

    std::vector<Rational> T;
    for (long t = L; t <= R; ++t) T.push_back(Rational(t));
    for (const auto& p : pts) T.push_back(p.x);
    for (long m = L + kl; m <= R + kr; ++m) T.push_back(f.preimage(Rational(m)));
    std::sort(T.begin(), T.end());
    T.erase(std::unique(T.begin(), T.end()), T.end());

    std::vector<Breakpoint> out;
    out.reserve(T.size() + 2);
    out.push_back({Rational(0), Rational(0)});
    for (const auto& t : T) out.push_back({brown_forward(t), brown_forward(f(t))});
    out.push_back({Rational(1), Rational(1)});
    return PLMap(std::move(out), {}, {});
}

PLMap transport_from_unit(const PLMap& g) {
    require_unit_model(g, "transport_from_unit");
    if (g.is_identity()) return PLMap();

    // Interior breakpoints drive the construction; a nonidentity unit-model
    // map always has one.
    std::vector<Rational> interior;
    for (const auto& p : g.breakpoints())
        if (Rational(0) < p.x && p.x < Rational(1)) interior.push_back(p.x);
    if (interior.empty()) return PLMap();

    const Rational s_first = interior.front(), s_last = interior.back();
    // Germ slopes 2^e0 at 0+ and 2^e1 at 1-; the conjugated map translates by
    // +e0 near -inf and by -e1 near +inf (psi reverses the exponent at 1).
    long e0 = 0, e1 = 0;
    (g(s_first) / s_first).is_power_of_two(&e0);
    ((Rational(1) - g(s_last)) / (Rational(1) - s_last)).is_power_of_two(&e1);
    const long kl = e0, kr = -e1;

    long L = std::min(to_long(brown_backward(s_first).floor()),
                      to_long(brown_backward(g(s_first)).floor())) - 1;
    L = std::min({L, -1L, -kl - 1});
    long R = std::max(to_long(ceil_of(brown_backward(s_last))),
                      to_long(ceil_of(brown_backward(g(s_last))))) + 1;
    R = std::max({R, 1L, -kr + 1});

    std::vector<Rational> T;
    for (long t = L; t <= R; ++t) T.push_back(Rational(t));
    for (const auto& s : interior) T.push_back(brown_backward(s));
    for (long m = L + kl; m <= R + kr; ++m)
        T.push_back(brown_backward(g.preimage(brown_forward(Rational(m)))));
    std::sort(T.begin(), T.end());
    T.erase(std::unique(T.begin(), T.end()), T.end());

    std::vector<Breakpoint> out;
    out.reserve(T.size());
    for (const auto& t : T) out.push_back({t, brown_backward(g(brown_forward(t)))});
    return PLMap(std::move(out), {Rational(1), Rational(kl)}, {Rational(1), Rational(kr)});
}

// --- tree pairs --------------------------------------------------------------

TreePair::TreePair(std::vector<DyadicInterval> domain, std::vector<DyadicInterval> range)
    : domain_(std::move(domain)), range_(std::move(range)) {
    if (domain_.size() != range_.size() || domain_.empty())
        throw std::invalid_argument("TreePair: partitions must be nonempty and of equal size");
    const auto check = [](const std::vector<DyadicInterval>& part, const char* side) {
        if (part.front().lo != Rational(0) || part.back().hi != Rational(1))
            throw std::invalid_argument(std::string("TreePair: ") + side + " must partition [0,1]");
        for (std::size_t i = 0; i < part.size(); ++i) {
            if (!is_std_dyadic(part[i].lo, part[i].hi))
                throw std::invalid_argument(std::string("TreePair: ") + side +
                                            " leaf is not standard dyadic");
            if (i + 1 < part.size() && part[i].hi != part[i + 1].lo)
                throw std::invalid_argument(std::string("TreePair: ") + side + " leaves have gaps");
        }
    };
    check(domain_, "domain");
    check(range_, "range");
    reduce();
}

void TreePair::reduce() {
    const auto siblings = [](const std::vector<DyadicInterval>& part, std::size_t i) {
        return part[i].hi - part[i].lo == part[i + 1].hi - part[i + 1].lo &&
               is_std_dyadic(part[i].lo, part[i + 1].hi);
    };
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i + 1 < domain_.size(); ++i) {
            if (siblings(domain_, i) && siblings(range_, i)) {
                domain_[i].hi = domain_[i + 1].hi;
                range_[i].hi = range_[i + 1].hi;
                domain_.erase(domain_.begin() + static_cast<long>(i) + 1);
                range_.erase(range_.begin() + static_cast<long>(i) + 1);
                changed = true;
                break;
            }
        }
    }
}

PLMap TreePair::to_plmap() const {
    std::vector<Breakpoint> pts;
    pts.reserve(domain_.size() + 1);
    pts.push_back({Rational(0), Rational(0)});
    for (std::size_t i = 0; i < domain_.size(); ++i) pts.push_back({domain_[i].hi, range_[i].hi});
    return PLMap(std::move(pts), {}, {});
}

namespace {

std::string parens_of(const std::vector<DyadicInterval>& part, std::size_t lo_idx,
                      std::size_t hi_idx, const Rational& lo, const Rational& hi) {
    if (hi_idx == lo_idx + 1) return "*";
    const Rational mid = (lo + hi) / Rational(2);
    std::size_t split = lo_idx + 1;
    while (split < hi_idx && part[split].lo != mid) ++split;
    assert(split < hi_idx);
    return "(" + parens_of(part, lo_idx, split, lo, mid) + parens_of(part, split, hi_idx, mid, hi) + ")";
}

} // namespace

std::string TreePair::domain_parens() const {
    return parens_of(domain_, 0, domain_.size(), Rational(0), Rational(1));
}

std::string TreePair::range_parens() const {
    return parens_of(range_, 0, range_.size(), Rational(0), Rational(1));
}

TreePair tree_pair_of(const PLMap& g) {
    const UnitModelInfo info = require_unit_model(g, "tree_pair_of");
    // Refinement always terminates for genuine elements; the guard turns a
    // non-member into a hard error instead of a loop.
    const long max_depth = info.max_denominator_exp + info.max_slope_exp + 2;

    std::vector<DyadicInterval> dom, ran;
    const auto& pts = g.breakpoints();
    auto has_interior_break = [&](const Rational& lo, const Rational& hi) {
        auto it = std::upper_bound(pts.begin(), pts.end(), lo,
                                   [](const Rational& v, const Breakpoint& p) { return v < p.x; });
        return it != pts.end() && it->x < hi;
    };
    auto rec = [&](auto&& self, const Rational& lo, const Rational& hi, long depth) -> void {
        if (!has_interior_break(lo, hi)) {
            const Rational glo = g(lo), ghi = g(hi);
            if (is_std_dyadic(glo, ghi)) {
                dom.push_back({lo, hi});
                ran.push_back({glo, ghi});
                return;
            }
        }
        if (depth >= max_depth)
            throw std::domain_error("tree_pair_of: refinement depth guard exceeded (not an element)");
        const Rational mid = (lo + hi) / Rational(2);
        self(self, lo, mid, depth + 1);
        self(self, mid, hi, depth + 1);
    };
    rec(rec, Rational(0), Rational(1), 0);
    return TreePair(std::move(dom), std::move(ran));
}

// --- normal form -------------------------------------------------------------

namespace {

struct TreeNodes {
    struct N {
        int parent = -1;
        int left = -1, right = -1;
        bool on_right_spine = false;
    };
    std::vector<N> nodes;
    std::vector<int> leaf_node; // leaf index -> node id
    int root = -1;
};

int build_tree(TreeNodes& t, const std::vector<DyadicInterval>& part, std::size_t lo_idx,
               std::size_t hi_idx, const Rational& lo, const Rational& hi) {
    const int id = static_cast<int>(t.nodes.size());
    t.nodes.emplace_back();
    if (hi_idx == lo_idx + 1) {
        t.leaf_node[lo_idx] = id;
        return id;
    }
    const Rational mid = (lo + hi) / Rational(2);
    std::size_t split = lo_idx + 1;
    while (split < hi_idx && part[split].lo != mid) ++split;
    assert(split < hi_idx);
    const int l = build_tree(t, part, lo_idx, split, lo, mid);
    const int r = build_tree(t, part, split, hi_idx, mid, hi);
    t.nodes[id].left = l;
    t.nodes[id].right = r;
    t.nodes[l].parent = id;
    t.nodes[r].parent = id;
    return id;
}

TreeNodes tree_of_partition(const std::vector<DyadicInterval>& part) {
    TreeNodes t;
    t.leaf_node.assign(part.size(), -1);
    t.root = build_tree(t, part, 0, part.size(), Rational(0), Rational(1));
    for (int n = t.root; n != -1; n = t.nodes[n].right) t.nodes[n].on_right_spine = true;
    return t;
}

/// Leaf exponent: length of the maximal chain of left edges climbing from the
/// leaf whose top stays off the right spine of the tree.
std::vector<long> leaf_exponents(const std::vector<DyadicInterval>& part) {
    const TreeNodes t = tree_of_partition(part);
    std::vector<long> exps(part.size(), 0);
    for (std::size_t k = 0; k < part.size(); ++k) {
        int node = t.leaf_node[k];
        long count = 0;
        while (true) {
            const int par = t.nodes[node].parent;
            if (par == -1 || t.nodes[par].left != node || t.nodes[par].on_right_spine) break;
            ++count;
            node = par;
        }
        exps[k] = count;
    }
    return exps;
}

} // namespace

Word normal_form(const TreePair& tp) {
    const auto a = leaf_exponents(tp.domain()); // positive part
    const auto b = leaf_exponents(tp.range());  // negative part
    Word w(static_cast<int>(tp.leaf_count()));
    for (std::size_t k = 0; k < a.size(); ++k)
        if (a[k] != 0) w.append(static_cast<int>(k), a[k]);
    for (std::size_t k = b.size(); k-- > 0;)
        if (b[k] != 0) w.append(static_cast<int>(k), -b[k]);
    return w;
}

Word collapse_to_rank2(const Word& w_infinite) {
    std::vector<Word> images;
    images.reserve(static_cast<std::size_t>(w_infinite.rank()));
    for (int k = 0; k < w_infinite.rank(); ++k) {
        Word img(2);
        if (k == 0) {
            img.append(0, 1);
        } else {
            img.append(0, -(k - 1));
            img.append(1, 1);
            img.append(0, k - 1);
        }
        images.push_back(std::move(img));
    }
    return w_infinite.substitute(images);
}

Word express_unit_word(const PLMap& g) {
    const TreePair tp = tree_pair_of(g);
    const Word w = collapse_to_rank2(normal_form(tp));
    const auto& [A, B] = unit_generator_pair();
    if (!(eval_word(w, {A, B}) == g))
        throw std::logic_error("express_unit_word: normal form failed to re-evaluate");
    return w;
}

Word express_word(const PLMap& f) {
    if (!is_thompson_element(f)) {
        std::string reason = "express_word: not a Thompson element:";
        const auto translation = [](const AffineTail& t) {
            return t.slope.is_one() && t.offset.is_integer();
        };
        if (!translation(f.left_tail()) || !translation(f.right_tail()))
            reason += " tails are not integer translations;";
        for (const auto& p : f.breakpoints())
            if (!p.x.is_dyadic() || !p.y.is_dyadic()) {
                reason += " non-dyadic breakpoint " + p.x.str() + ";";
                break;
            }
        const auto& pts = f.breakpoints();
        for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
            const Rational s = (pts[i + 1].y - pts[i].y) / (pts[i + 1].x - pts[i].x);
            if (!s.is_power_of_two()) {
                reason += " slope " + s.str() + " is not a power of two;";
                break;
            }
        }
        throw NonThompsonError(reason);
    }
    return express_unit_word(transport_to_unit(f));
}

const F2Generators& f2_subgroup_generators() {
    static const F2Generators gens = [] {
        F2Generators r;
        r.U_pl = transport_to_unit(generator_f1());
        r.V_pl = transport_to_unit(generator_f2());
        r.U = express_word(r.U_pl);
        r.V = express_word(r.V_pl);
        return r;
    }();
    return gens;
}

bool is_in_f2_derived(const PLMap& f) {
    if (!is_thompson_element(f))
        throw std::invalid_argument("is_in_f2_derived: requires a Thompson element");
    return support(f).closure_inside(Rational(0), Rational(1));
}

} // namespace markedfree
