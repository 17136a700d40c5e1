#include "markedfree/marked_space.hpp"

#include <algorithm>
#include <future>

namespace markedfree {

namespace {

struct SpectrumState {
    const std::vector<PLMap>* letters = nullptr;
    int rank = 0;
    int cutoff = 0;
    std::uint64_t checked = 0;
    std::vector<Word> trivial;

    void rec(const PLMap& cur, Word& w, int last_lid) {
        const int depth = static_cast<int>(w.length());
        if (depth >= cutoff) return;
        for (int lid = 0; lid < 2 * rank; ++lid) {
            if (last_lid >= 0 && (lid ^ 1) == last_lid) continue;
            Word next = w;
            next.append(lid / 2, lid % 2 == 0 ? 1 : -1);
            ++checked;
            if (depth + 1 == cutoff) {
                if (cur == (*letters)[lid ^ 1]) trivial.push_back(next);
            } else {
                PLMap map = compose(cur, (*letters)[lid]);
                if (map.is_identity()) trivial.push_back(next);
                rec(map, next, lid);
            }
        }
    }
};

} // namespace

RelationSpectrum relation_spectrum(const std::vector<PLMap>& tuple, int cutoff, int threads) {
    if (tuple.empty()) throw std::invalid_argument("relation_spectrum: empty tuple");
    if (cutoff < 0) throw std::invalid_argument("relation_spectrum: negative cutoff");
    const int rank = static_cast<int>(tuple.size());
    std::vector<PLMap> letters;
    for (const auto& m : tuple) {
        letters.push_back(m);
        letters.push_back(invert(m));
    }

    RelationSpectrum spec;
    spec.cutoff = cutoff;
    if (cutoff == 0) return spec;

    const auto run_first = [&](int lid) {
        SpectrumState st;
        st.letters = &letters;
        st.rank = rank;
        st.cutoff = cutoff;
        Word w(rank);
        w.append(lid / 2, lid % 2 == 0 ? 1 : -1);
        ++st.checked;
        if (cutoff == 1) {
            if (PLMap() == letters[lid ^ 1]) st.trivial.push_back(w);
        } else {
            const PLMap& cur = letters[lid];
            if (cur.is_identity()) st.trivial.push_back(w);
            st.rec(cur, w, lid);
        }
        return st;
    };

    std::vector<SpectrumState> parts;
    if (threads <= 1) {
        for (int lid = 0; lid < 2 * rank; ++lid) parts.push_back(run_first(lid));
    } else {
        std::vector<std::future<SpectrumState>> futs;
        for (int lid = 0; lid < 2 * rank; ++lid)
            futs.push_back(std::async(std::launch::async, run_first, lid));
        for (auto& f : futs) parts.push_back(f.get());
    }
    for (auto& p : parts) {
        spec.words_checked += p.checked;
        for (auto& w : p.trivial) spec.trivial_words.push_back(std::move(w));
    }
    std::sort(spec.trivial_words.begin(), spec.trivial_words.end(), Word::shortlex_less);
    return spec;
}

bool ball_isomorphic_to_free(const std::vector<PLMap>& tuple, int n, int threads) {
    if (n < 0) throw std::invalid_argument("ball_isomorphic_to_free: negative radius");
    return check_no_relations(tuple, 2 * n, threads).verified();
}

DistanceReport distance_to_free(const std::vector<PLMap>& tuple, int cutoff, int threads) {
    if (cutoff < 1) throw std::invalid_argument("distance_to_free: cutoff must be >= 1");
    DistanceReport rep;
    rep.cutoff = cutoff;
    // Iterative deepening keeps the cost at the scale of the shortest
    // relation instead of the cutoff.
    for (int len = 1; len <= 2 * cutoff; ++len) {
        CheckReport cr = check_no_relations(tuple, len, threads);
        rep.words_checked += cr.checked_words;
        if (cr.violation) {
            const int l = static_cast<int>(cr.violation->length());
            rep.shortest_relation = std::move(cr.violation);
            rep.n = (l - 1) / 2;
            rep.exact = true;
            rep.censored = false;
            return rep;
        }
    }
    rep.n = cutoff;
    rep.exact = false;
    rep.censored = true;
    return rep;
}

} // namespace markedfree
