#include "markedfree/marking.hpp"

#include <algorithm>
#include <random>

namespace markedfree {

namespace {

PLMap translation(long k) {
    if (k == 0) return PLMap();
    return PLMap({}, {Rational(1), Rational(k)}, {Rational(1), Rational(k)});
}

long to_long_checked(const mpz_class& z, const char* who) {
    if (!z.fits_slong_p()) throw std::overflow_error(std::string(who) + ": value out of range");
    return z.get_si();
}

} // namespace

long choose_m(const Word& U, const Word& V) {
    if (U.empty() || V.empty()) throw std::invalid_argument("choose_m: words must be nonempty");
    const std::vector<PLMap> fs = {generator_f1(), generator_f2()};
    const Rational two(2);
    Rational q = two; // keeps m at least 4 even for degenerate prefixes
    for (const Word* w : {&U, &V}) {
        PLMap prefix;
        for (const auto& l : w->flattened()) {
            const PLMap letter = l.exp < 0 ? invert(fs[l.index]) : fs[l.index];
            prefix = compose(prefix, letter);
            q = max(q, prefix(two));
            q = max(q, prefix.preimage(two));
        }
    }
    return to_long_checked(q.floor(), "choose_m") + 2;
}

PLMap block_product(const PLMap& e, long c, long d) {
    if (c >= d) throw std::invalid_argument("block_product: interval must have c < d");
    for (const auto& comp : support(e).components) {
        if (!comp.lo || !comp.hi || comp.lo->sign() < 0 || *comp.hi > Rational(1))
            throw ValidationError("block_product: support must lie in (0,1)",
                                  static_cast<std::size_t>(-1));
    }
    if (e.is_identity()) return PLMap();
    std::vector<Breakpoint> pts;
    pts.reserve(static_cast<std::size_t>(d - c) * e.breakpoints().size());
    for (long k = c; k < d; ++k) {
        const Rational shift(k);
        for (const auto& bp : e.breakpoints()) {
            Breakpoint moved{bp.x + shift, bp.y + shift};
            if (!pts.empty() && pts.back() == moved) continue; // shared block corner
            pts.push_back(std::move(moved));
        }
    }
    return PLMap(std::move(pts), {}, {});
}

MarkingBundle build_marking(int n, std::uint64_t seed, const BuildOptions& opts) {
    if (n < 1) throw std::invalid_argument("build_marking: n must be >= 1");
    // Radius 2n: the ball-isomorphism criterion consumes quotients of length
    // up to 2n, and the middle block transfers exactly those to (a, b).
    FreePair fp = free_pair(2 * n, seed, opts.pair);
    const F2Generators& gens = f2_subgroup_generators();

    MarkingBundle bundle;
    bundle.n = n;
    bundle.seed = seed;
    bundle.m = choose_m(gens.U, gens.V);
    bundle.U = gens.U;
    bundle.V = gens.V;
    bundle.a = std::move(fp.a);
    bundle.b = std::move(fp.b);
    bundle.a_blocks = std::move(fp.a_blocks);
    bundle.b_blocks = std::move(fp.b_blocks);
    bundle.pieces = std::move(fp.pieces);
    bundle.pair_cert = std::move(fp.cert);
    bundle.p = block_product(bundle.a, bundle.m, bundle.interval_end());
    bundle.q = block_product(bundle.b, bundle.m, bundle.interval_end());
    bundle.g = compose(bundle.p, generator_f1());
    bundle.h = compose(bundle.q, generator_f2());
    return bundle;
}

BallCertificate verify_free_ball(const MarkingBundle& bundle, int threads) {
    BallCertificate cert;
    cert.report = check_no_relations({bundle.g, bundle.h}, 2 * bundle.n, threads);

    // Middle-block shadow: on [m+n, m+n+1] a word of length <= n in (g, h)
    // acts as the matching word in (a, b), conjugated by the block
    // translation and post-composed with the exponent-sum shift.
    const long M = bundle.m + bundle.n;
    const std::vector<PLMap> gh = {bundle.g, bundle.h};
    const std::vector<PLMap> ab = {bundle.a, bundle.b};
    std::mt19937_64 rng(bundle.seed ^ 0xA5C1D4E3B2F19687ULL);
    cert.shadow_passed = true;
    const int samples = 20;
    for (int i = 0; i < samples; ++i) {
        Word w(2);
        const int len = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(bundle.n));
        int last = -1;
        for (int l = 0; l < len; ++l) {
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
        const long shift = w.exponent_sum(0) + w.exponent_sum(1);
        const PLMap lhs = eval_word(w, gh);
        const PLMap mimic =
            compose(compose(translation(-M), eval_word(w, ab)), translation(M + shift));
        if (!equal_on_interval(lhs, mimic, Rational(M), Rational(M + 1))) {
            cert.shadow_passed = false;
            break;
        }
        ++cert.shadow_words_checked;
    }
    return cert;
}

PLMap alpha_of(const MarkingBundle& bundle) {
    PLMap alpha = conjugate(bundle.h, bundle.g);
    if (!equal_on_interval(alpha, PLMap(), Rational(0), Rational(1)))
        throw WitnessError("alpha", "g^-1 h g does not restrict to the identity on [0,1]");
    if (!strictly_above_identity_on_ray(alpha, Rational(1)))
        throw WitnessError("alpha", "g^-1 h g does not move (1,inf) strictly up");
    return alpha;
}

long displacement_power(const PLMap& mover, const Rational& k_lo, const Rational& k_hi,
                        const Rational& target_sup) {
    if (!(k_lo <= k_hi)) throw std::invalid_argument("displacement_power: bad interval");
    if (k_lo > target_sup) return 0;
    // mover must be strictly above the identity on [k_lo, max(k_hi, target)].
    const Rational span_hi = max(k_hi, target_sup);
    const SupportSet s = support(mover);
    bool covered = false;
    for (const auto& comp : s.components) {
        const bool lo_ok = !comp.lo || *comp.lo < k_lo;
        const bool hi_ok = !comp.hi || *comp.hi > span_hi;
        if (lo_ok && hi_ok) {
            covered = true;
            break;
        }
    }
    if (!covered || !(mover(k_lo) > k_lo))
        throw std::invalid_argument(
            "displacement_power: mover is not strictly increasing past the identity on the span");
    long k = 0;
    Rational x = k_lo;
    while (!(x > target_sup)) {
        x = mover(x);
        ++k;
        if (k > 10'000'000) throw std::logic_error("displacement_power: runaway orbit");
    }
    return k;
}

std::vector<std::pair<Word, Word>> commutator_decomposition(const Word& w) {
    if (w.rank() != 2) throw std::invalid_argument("commutator_decomposition: rank-2 words only");
    if (w.exponent_sum(0) != 0 || w.exponent_sum(1) != 0)
        throw std::invalid_argument("commutator_decomposition: exponent sums must vanish");
    std::vector<std::pair<Word, Word>> out;
    if (w.empty()) return out;

    const auto flat = w.flattened();
    const std::size_t L = flat.size();
    // Fast path: w literally spelled as c^-1 d^-1 c d.
    const auto inverse_of = [](const Letter& l) { return Letter{l.index, -l.exp}; };
    for (std::size_t p = 1; p + 1 < L; ++p) {
        if (L < 2 * p + 2 || (L - 2 * p) % 2 != 0) continue;
        const std::size_t q = (L - 2 * p) / 2;
        bool ok = true;
        for (std::size_t i = 0; ok && i < p; ++i)
            if (!(flat[p + q + i] == inverse_of(flat[p - 1 - i]))) ok = false;
        for (std::size_t i = 0; ok && i < q; ++i)
            if (!(flat[2 * p + q + i] == inverse_of(flat[p + q - 1 - i]))) ok = false;
        if (!ok) continue;
        Word c(2), d(2);
        for (std::size_t i = 0; i < p; ++i) c.append(flat[p + q + i].index, flat[p + q + i].exp);
        for (std::size_t i = 0; i < q; ++i) d.append(flat[2 * p + q + i].index, flat[2 * p + q + i].exp);
        out.emplace_back(std::move(c), std::move(d));
        return out;
    }

    // Reidemeister-Schreier rewriting over the kernel of abelianization with
    // transversal x^a y^b; each emitted basis element x^a y^b x y^-b x^-a-1
    // is the single commutator [x^a y^-b x^-a, x^-1].
    const auto basis_pair = [](long a, long b) {
        Word c(2), d(2);
        c.append(0, a);
        c.append(1, -b);
        c.append(0, -a);
        d.append(0, -1);
        return std::make_pair(std::move(c), std::move(d));
    };
    long a = 0, b = 0;
    for (const auto& l : flat) {
        if (l.index == 1) {
            b += l.exp;
            continue;
        }
        if (l.exp > 0) {
            if (b != 0) out.push_back(basis_pair(a, b));
            a += 1;
        } else {
            a -= 1;
            if (b != 0) {
                auto [c, d] = basis_pair(a, b);
                out.emplace_back(std::move(d), std::move(c)); // inverse commutator
            }
        }
    }

    // The rewriting telescopes back to w; verify by free reduction.
    Word check(2);
    for (const auto& [c, d] : out) {
        check.append(c.inverse());
        check.append(d.inverse());
        check.append(c);
        check.append(d);
    }
    if (!(check == w))
        throw std::logic_error("commutator_decomposition: rewriting failed to reduce to input");
    return out;
}

namespace {

struct JunkHull {
    bool present = false;
    Rational lo, hi;
};

/// Hull of the support outside [0,1]; every component must sit cleanly on one
/// side (inside [0,1] or strictly right of 1).
JunkHull junk_hull(const PLMap& f, const char* stage) {
    JunkHull hull;
    for (const auto& comp : support(f).components) {
        if (!comp.lo || !comp.hi)
            throw WitnessError(stage, "support unexpectedly unbounded");
        if (*comp.lo >= Rational(0) && *comp.hi <= Rational(1)) continue;
        if (!(*comp.lo >= Rational(1)))
            throw WitnessError(stage, "support component straddles [0,1]: " +
                                          comp.lo->str() + ".." + comp.hi->str());
        if (!hull.present) {
            hull = {true, *comp.lo, *comp.hi};
        } else {
            hull.lo = min(hull.lo, *comp.lo);
            hull.hi = max(hull.hi, *comp.hi);
        }
    }
    return hull;
}

struct WitnessBuilder {
    const MarkingBundle& bundle;
    const PLMap& alpha;
    const PLMap h_pow_neg_s; // h^-s
    long s;
    SlpWord slp{2};
    std::uint32_t node_g, node_h, node_U, node_V, node_alpha;
    std::vector<PLMap> gh, u1v1_maps;

    WitnessBuilder(const MarkingBundle& b, const PLMap& alpha_, const PLMap& h_neg_s, long s_)
        : bundle(b), alpha(alpha_), h_pow_neg_s(h_neg_s), s(s_) {
        node_g = slp.gen(0);
        node_h = slp.gen(1);
        node_U = slp.lit(bundle.U);
        node_V = slp.lit(bundle.V);
        node_alpha = slp.cat({slp.inv(node_g), node_h, node_g});
        gh = {bundle.g, bundle.h};
        const PLMap U1 = eval_word(bundle.U, gh);
        const PLMap V1 = eval_word(bundle.V, gh);
        const F2Generators& gens = f2_subgroup_generators();
        if (!equal_on_interval(U1, gens.U_pl, Rational(0), Rational(1)) ||
            !equal_on_interval(V1, gens.V_pl, Rational(0), Rational(1)))
            throw WitnessError("substitution",
                               "U1/V1 do not restrict to the subgroup generators on [0,1]");
        u1v1_maps = {std::move(U1), std::move(V1)};
    }

    /// Chain of U1/V1 powers spelling a rank-2 word.
    std::uint32_t word_over_u1v1(const Word& w) {
        std::uint32_t node = 0;
        bool first = true;
        for (const auto& l : w.letters()) {
            const std::uint32_t base = l.index == 0 ? node_U : node_V;
            const std::uint32_t part = slp.pow(base, l.exp);
            node = first ? part : slp.cat(node, part);
            first = false;
        }
        if (first) throw WitnessError("lift", "empty commutator half");
        return node;
    }

    /// One commutator piece [P, Q]^ = [alpha^k C alpha^-k, D], verified
    /// against the expected map. Returns the SLP node and stores k.
    std::uint32_t lift_piece(const PLMap& P, const PLMap& Q, std::vector<long>& ks) {
        const Word wp = express_unit_word(P);
        const Word wq = express_unit_word(Q);
        const PLMap C = eval_word(wp, u1v1_maps);
        const PLMap D = eval_word(wq, u1v1_maps);
        if (!equal_on_interval(C, P, Rational(0), Rational(1)) ||
            !equal_on_interval(D, Q, Rational(0), Rational(1)))
            throw WitnessError("lift", "lifted word does not restrict to the piece on [0,1]");
        const JunkHull jc = junk_hull(C, "lift");
        const JunkHull jd = junk_hull(D, "lift");
        long k = 0;
        if (jc.present && jd.present) k = displacement_power(alpha, jd.lo, jd.hi, jc.hi);
        const PLMap E = conjugate(C, power(alpha, -k)); // alpha^k C alpha^-k
        const PLMap got = commutator(E, D);
        const PLMap expected = commutator(P, Q);
        if (!(got == expected))
            throw WitnessError("alpha-trick", "commutator does not collapse to the piece");
        ks.push_back(k);

        const std::uint32_t cnode = word_over_u1v1(wp);
        const std::uint32_t dnode = word_over_u1v1(wq);
        const std::uint32_t enode =
            slp.cat({slp.pow(node_alpha, k), cnode, slp.pow(node_alpha, -k)});
        return slp.cat({slp.inv(enode), slp.inv(dnode), enode, dnode});
    }

    /// Assembles one witness (for p from the a-side pieces, or q from b).
    std::uint32_t build(const PLMap& target, bool a_side, std::vector<long>& ks) {
        // z = h^s target h^-s splits as the product of the conjugated
        // commutator pieces of the block construction.
        const PLMap z = conjugate(target, h_pow_neg_s);
        if (!is_in_f2_derived(z))
            throw WitnessError("conjugation", "h^-s failed to carry the target into F2'");
        PLMap acc;
        std::uint32_t chain = 0;
        bool first = true;
        for (long k = bundle.m; k < bundle.interval_end(); ++k) {
            const PLMap step = compose(translation(k), h_pow_neg_s);
            for (const auto& piece : bundle.pieces) {
                const PLMap placement({}, {piece.scale, piece.offset}, {piece.scale, piece.offset});
                const PLMap gamma = compose(placement, step);
                const PLMap& u = a_side ? piece.a_u : piece.b_u;
                const PLMap& v = a_side ? piece.a_v : piece.b_v;
                const PLMap P = conjugate(u, gamma);
                const PLMap Q = conjugate(v, gamma);
                const std::uint32_t node = lift_piece(P, Q, ks);
                acc = compose(acc, commutator(P, Q));
                chain = first ? node : slp.cat(chain, node);
                first = false;
            }
        }
        if (!(acc == z))
            throw WitnessError("assembly", "piece product does not equal the conjugated target");
        const std::uint32_t root =
            slp.cat({slp.pow(node_h, -s), chain, slp.pow(node_h, s)});
        return root;
    }
};

} // namespace

GenerationWitness generation_witness(const MarkingBundle& bundle) {
    const PLMap alpha = alpha_of(bundle);
    const PLMap h_inv = invert(bundle.h);

    // Search the conjugating power: every point of I_n must be pulled inside
    // (0,1), which also carries each piece's support along.
    long s = 0;
    Rational right_end(bundle.interval_end());
    PLMap z = bundle.p;
    while (!(right_end < Rational(1) && support(z).closure_inside(Rational(0), Rational(1)))) {
        z = conjugate(z, h_inv);
        right_end = h_inv(right_end);
        ++s;
        if (s > 100000) throw WitnessError("conjugation", "no h-power pulls I_n into (0,1)");
    }
    const PLMap h_neg_s = power(bundle.h, -s);

    GenerationWitness w;
    w.s = s;

    WitnessBuilder builder_p(bundle, alpha, h_neg_s, s);
    const std::uint32_t root_p = builder_p.build(bundle.p, true, w.k_values_p);
    builder_p.slp.set_root(root_p);
    if (!(builder_p.slp.eval({bundle.g, bundle.h}) == bundle.p))
        throw WitnessError("verification", "W_p does not evaluate to p");
    w.W_p = std::move(builder_p.slp);

    WitnessBuilder builder_q(bundle, alpha, h_neg_s, s);
    const std::uint32_t root_q = builder_q.build(bundle.q, false, w.k_values_q);
    builder_q.slp.set_root(root_q);
    if (!(builder_q.slp.eval({bundle.g, bundle.h}) == bundle.q))
        throw WitnessError("verification", "W_q does not evaluate to q");
    w.W_q = std::move(builder_q.slp);

    w.expanded_length_p = w.W_p.expanded_length();
    w.expanded_length_q = w.W_q.expanded_length();
    w.verified = true;
    return w;
}

} // namespace markedfree
