#include "markedfree/free_pair.hpp"

#include "markedfree/json_io.hpp"
#include "markedfree/thompson.hpp"

#include <algorithm>
#include <future>
#include <random>

namespace markedfree {

namespace {

/// lid encoding: generator lid/2, sign + for even lids; lid^1 is the inverse
/// letter. Ascending lid is the lexicographic letter order.
std::vector<PLMap> letter_maps(const std::vector<PLMap>& tuple) {
    std::vector<PLMap> out;
    out.reserve(tuple.size() * 2);
    for (const auto& m : tuple) {
        out.push_back(m);
        out.push_back(invert(m));
    }
    return out;
}

Word word_of_lids(const std::vector<int>& lids, int rank) {
    Word w(rank);
    for (int lid : lids) w.append(lid / 2, lid % 2 == 0 ? 1 : -1);
    return w;
}

bool lids_less(const std::vector<int>& a, const std::vector<int>& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

struct DfsState {
    const std::vector<PLMap>* letters = nullptr;
    int rank = 0;
    int max_len = 0;
    std::uint64_t checked = 0;
    std::vector<int> best; // shortest violating lid sequence, lex-least
    bool has_best = false;

    void consider(const std::vector<int>& path) {
        if (!has_best || lids_less(path, best)) {
            best = path;
            has_best = true;
        }
    }

    void rec(const PLMap& cur, std::vector<int>& path, int last_lid) {
        const int depth = static_cast<int>(path.size());
        if (depth >= max_len) return;
        for (int lid = 0; lid < 2 * rank; ++lid) {
            if (last_lid >= 0 && (lid ^ 1) == last_lid) continue;
            if (has_best && depth + 1 > static_cast<int>(best.size())) return;
            path.push_back(lid);
            ++checked;
            if (depth + 1 == max_len) {
                // Leaf: compose(cur, letter) is trivial iff cur equals the
                // inverse letter's map; no composition needed.
                if (cur == (*letters)[lid ^ 1]) consider(path);
            } else {
                PLMap next = compose(cur, (*letters)[lid]);
                if (next.is_identity()) {
                    consider(path); // longer extensions cannot beat this one
                } else {
                    rec(next, path, lid);
                }
            }
            path.pop_back();
        }
    }
};

} // namespace

CheckReport check_no_relations(const std::vector<PLMap>& tuple, int max_len, int threads) {
    if (tuple.empty()) throw std::invalid_argument("check_no_relations: empty tuple");
    if (max_len < 0) throw std::invalid_argument("check_no_relations: negative radius");
    const int rank = static_cast<int>(tuple.size());
    const auto letters = letter_maps(tuple);

    CheckReport report;
    report.radius = max_len;
    if (max_len == 0) return report;

    const auto run_first = [&](int first_lid) {
        DfsState st;
        st.letters = &letters;
        st.rank = rank;
        st.max_len = max_len;
        std::vector<int> path{first_lid};
        ++st.checked;
        if (max_len == 1) {
            if (PLMap() == letters[first_lid ^ 1]) st.consider(path);
        } else {
            const PLMap& cur = letters[first_lid];
            if (cur.is_identity())
                st.consider(path);
            else
                st.rec(cur, path, first_lid);
        }
        return st;
    };

    std::vector<DfsState> parts;
    if (threads <= 1) {
        for (int lid = 0; lid < 2 * rank; ++lid) parts.push_back(run_first(lid));
    } else {
        std::vector<std::future<DfsState>> futs;
        for (int lid = 0; lid < 2 * rank; ++lid)
            futs.push_back(std::async(std::launch::async, run_first, lid));
        for (auto& f : futs) parts.push_back(f.get());
    }
    std::vector<int> best;
    bool has_best = false;
    for (auto& p : parts) {
        report.checked_words += p.checked;
        if (p.has_best && (!has_best || lids_less(p.best, best))) {
            best = p.best;
            has_best = true;
        }
    }
    if (has_best) report.violation = word_of_lids(best, rank);
    return report;
}

namespace {

/// Preorder walk of the nontrivial reduced-word tree over a rank-2 pair,
/// reporting (index, nontrivial) in the same order as reduced_words() minus
/// the identity. Prefix compositions are shared; leaves compare against the
/// inverse-letter maps.
void walk_pair_nontrivial(const PLMap& x, const PLMap& y, int max_len,
                          const std::function<void(std::size_t, bool)>& fn) {
    const std::vector<PLMap> letters = {x, invert(x), y, invert(y)};
    std::size_t idx = 0;
    auto rec = [&](auto&& self, const PLMap& cur, int depth, int last_lid) -> void {
        if (depth >= max_len) return;
        for (int lid = 0; lid < 4; ++lid) {
            if (last_lid >= 0 && (lid ^ 1) == last_lid) continue;
            if (depth + 1 == max_len) {
                fn(idx++, !(cur == letters[lid ^ 1]));
            } else {
                PLMap next = compose(cur, letters[lid]);
                const bool nontrivial = !next.is_identity();
                fn(idx++, nontrivial);
                self(self, next, depth + 1, lid);
            }
        }
    };
    rec(rec, PLMap(), 0, -1);
}

std::string candidate_key(const PLMap& x, const PLMap& y) {
    return plmap_to_json(x).dump() + "|" + plmap_to_json(y).dump();
}

Word random_reduced_word(std::mt19937_64& rng, int max_len) {
    const int len = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_len));
    Word w(2);
    int last = -1;
    for (int i = 0; i < len; ++i) {
        int lid;
        if (last < 0) {
            lid = static_cast<int>(rng() % 4);
        } else {
            lid = static_cast<int>(rng() % 3);
            if (lid >= (last ^ 1)) ++lid; // skip the cancelling letter
        }
        w.append(lid / 2, lid % 2 == 0 ? 1 : -1);
        last = lid;
    }
    return w;
}

} // namespace

FreePair free_pair(int n, std::uint64_t seed, const FreePairOptions& opts) {
    if (n < 1) throw std::invalid_argument("free_pair: n must be >= 1");
    const auto& gens = f2_subgroup_generators();
    const std::vector<PLMap> unit_pair = {gens.U_pl, gens.V_pl};

    std::vector<Word> words = reduced_words(2, n);
    words.erase(words.begin()); // drop the identity
    const std::size_t total = words.size();

    std::vector<char> unkilled(total, 1);
    std::size_t unkilled_count = total;

    std::mt19937_64 rng(seed);
    std::uint64_t draws = 0;

    FreePair result;
    result.cert.radius = n;
    result.cert.seed = seed;
    result.cert.checked_words = total;

    long block_j = 1;
    while (unkilled_count > 0) {
        if (draws >= opts.candidate_budget) {
            std::vector<Word> surviving;
            for (std::size_t i = 0; i < total; ++i)
                if (unkilled[i]) surviving.push_back(words[i]);
            throw FreePairSearchError(
                "free_pair: candidate budget exhausted with " +
                    std::to_string(surviving.size()) + " words still alive",
                std::move(surviving));
        }

        struct Candidate {
            PLMap x, y, u1, u2, v1, v2;
            std::vector<char> kills;
            std::size_t score = 0;
            std::uint64_t id = 0;
            std::string key;
        };
        std::vector<Candidate> round;
        const int count = static_cast<int>(
            std::min<std::uint64_t>(opts.candidates_per_round, opts.candidate_budget - draws));
        for (int c = 0; c < count; ++c) {
            Candidate cand;
            cand.id = draws++;
            cand.u1 = eval_word(random_reduced_word(rng, opts.max_candidate_word_len), unit_pair);
            cand.u2 = eval_word(random_reduced_word(rng, opts.max_candidate_word_len), unit_pair);
            cand.v1 = eval_word(random_reduced_word(rng, opts.max_candidate_word_len), unit_pair);
            cand.v2 = eval_word(random_reduced_word(rng, opts.max_candidate_word_len), unit_pair);
            cand.x = commutator(cand.u1, cand.u2);
            cand.y = commutator(cand.v1, cand.v2);
            cand.kills.assign(total, 0);
            walk_pair_nontrivial(cand.x, cand.y, n, [&](std::size_t i, bool nontrivial) {
                if (nontrivial) cand.kills[i] = 1;
            });
            for (std::size_t i = 0; i < total; ++i)
                if (unkilled[i] && cand.kills[i]) ++cand.score;
            cand.key = candidate_key(cand.x, cand.y);
            round.push_back(std::move(cand));
        }

        const Candidate* best = nullptr;
        for (const auto& c : round) {
            if (c.score == 0) continue;
            if (!best || c.score > best->score ||
                (c.score == best->score && c.key < best->key))
                best = &c;
        }
        if (!best) continue; // round wasted; budget already charged

        const Rational scale = Rational::pow2(-block_j - 1);
        const Rational offset = Rational(1) - Rational::pow2(-block_j);
        result.a_blocks.push_back(affine_conjugate_into(best->x, scale, offset));
        result.b_blocks.push_back(affine_conjugate_into(best->y, scale, offset));
        result.pieces.push_back({best->u1, best->u2, best->v1, best->v2, scale, offset});
        result.cert.blocks.push_back({offset, offset + scale, best->id});
        for (std::size_t i = 0; i < total; ++i) {
            if (unkilled[i] && best->kills[i]) {
                unkilled[i] = 0;
                --unkilled_count;
            }
        }
        ++block_j;
    }

    PLMap a, b;
    for (const auto& part : result.a_blocks) a = compose(a, part);
    for (const auto& part : result.b_blocks) b = compose(b, part);
    result.a = std::move(a);
    result.b = std::move(b);
    if (!is_in_f2_derived(result.a) || !is_in_f2_derived(result.b))
        throw std::logic_error("free_pair: constructed pair escaped the derived subgroup");

    // Independent soundness pass: re-evaluate a sample of certified words
    // directly on the assembled pair.
    std::mt19937_64 recheck_rng(seed ^ 0x9E3779B97F4A7C15ULL);
    const std::size_t samples = std::min<std::size_t>(100, total);
    const std::vector<PLMap> pair_tuple = {result.a, result.b};
    for (std::size_t s = 0; s < samples; ++s) {
        const auto& w = words[recheck_rng() % total];
        if (eval_word(w, pair_tuple).is_identity())
            throw std::logic_error("free_pair: certificate re-check failed on word " + w.str());
    }
    result.cert.verified = true;
    return result;
}

} // namespace markedfree
