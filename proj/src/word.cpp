#include "markedfree/word.hpp"

#include <sstream>
#include <stdexcept>

namespace markedfree {

Word::Word(int rank, std::vector<Letter> letters) : rank_(rank) {
    for (const auto& l : letters) append(l.index, l.exp);
}

std::uint64_t Word::length() const {
    std::uint64_t n = 0;
    for (const auto& l : letters_) n += static_cast<std::uint64_t>(l.exp < 0 ? -l.exp : l.exp);
    return n;
}

std::vector<Letter> Word::flattened() const {
    std::vector<Letter> out;
    out.reserve(length());
    for (const auto& l : letters_) {
        const long step = l.exp < 0 ? -1 : 1;
        for (long i = 0; i != l.exp; i += step) out.push_back({l.index, step});
    }
    return out;
}

void Word::append(int index, long exp) {
    if (exp == 0) return;
    if (index < 0 || index >= rank_) throw std::invalid_argument("Word::append: letter index out of range");
    if (!letters_.empty() && letters_.back().index == index) {
        letters_.back().exp += exp;
        if (letters_.back().exp == 0) letters_.pop_back();
        return;
    }
    letters_.push_back({index, exp});
}

void Word::append(const Word& w) {
    for (const auto& l : w.letters_) append(l.index, l.exp);
}

Word Word::inverse() const {
    Word out(rank_);
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) out.append(it->index, -it->exp);
    return out;
}

Word Word::concat(const Word& o) const {
    Word out = *this;
    out.append(o);
    return out;
}

Word Word::pow(long e) const {
    Word out(rank_);
    const Word base = e < 0 ? inverse() : *this;
    long k = e < 0 ? -e : e;
    while (k-- > 0) out.append(base);
    return out;
}

Word Word::substitute(const std::vector<Word>& images) const {
    if (static_cast<int>(images.size()) != rank_)
        throw std::invalid_argument("Word::substitute: image count != rank");
    const int new_rank = images.empty() ? 0 : images.front().rank();
    Word out(new_rank);
    for (const auto& l : letters_) out.append(images[l.index].pow(l.exp));
    return out;
}

long Word::exponent_sum(int index) const {
    long s = 0;
    for (const auto& l : letters_)
        if (l.index == index) s += l.exp;
    return s;
}

Word Word::cyclically_reduced() const {
    Word w = *this;
    while (w.letters_.size() >= 2) {
        const Letter& first = w.letters_.front();
        const Letter& last = w.letters_.back();
        if (first.index != last.index || (first.exp > 0) == (last.exp > 0)) break;
        // strip one cancelling pair of letter occurrences at each end
        Word next(w.rank_);
        auto flat = w.flattened();
        next = Word(w.rank_);
        for (std::size_t i = 1; i + 1 < flat.size(); ++i) next.append(flat[i].index, flat[i].exp);
        w = std::move(next);
    }
    return w;
}

bool Word::shortlex_less(const Word& a, const Word& b) {
    const auto la = a.length(), lb = b.length();
    if (la != lb) return la < lb;
    const auto fa = a.flattened(), fb = b.flattened();
    for (std::size_t i = 0; i < fa.size(); ++i) {
        const int ka = fa[i].index * 2 + (fa[i].exp < 0 ? 1 : 0);
        const int kb = fb[i].index * 2 + (fb[i].exp < 0 ? 1 : 0);
        if (ka != kb) return ka < kb;
    }
    return false;
}

std::string Word::str() const {
    std::string s;
    for (const auto& l : letters_) {
        if (!s.empty()) s += ' ';
        s += "f" + std::to_string(l.index + 1);
        if (l.exp != 1) s += "^" + std::to_string(l.exp);
    }
    return s;
}

Word Word::parse(const std::string& text, int rank) {
    Word out(rank);
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) {
        if (tok.empty() || tok[0] != 'f')
            throw std::invalid_argument("Word::parse: bad letter '" + tok + "'");
        const auto caret = tok.find('^');
        const std::string idx = tok.substr(1, caret == std::string::npos ? std::string::npos : caret - 1);
        long exp = 1;
        std::size_t pos = 0;
        int index = 0;
        try {
            index = std::stoi(idx, &pos) - 1;
            if (pos != idx.size()) throw std::invalid_argument("");
            if (caret != std::string::npos) {
                const std::string e = tok.substr(caret + 1);
                exp = std::stol(e, &pos);
                if (pos != e.size()) throw std::invalid_argument("");
            }
        } catch (const std::exception&) {
            throw std::invalid_argument("Word::parse: bad letter '" + tok + "'");
        }
        out.append(index, exp);
    }
    return out;
}

PLMap eval_word(const Word& w, const std::vector<PLMap>& assignment) {
    if (static_cast<int>(assignment.size()) != w.rank())
        throw std::invalid_argument("eval_word: assignment size != word rank");
    PLMap acc;
    for (const auto& l : w.letters()) {
        const PLMap base = l.exp < 0 ? invert(assignment[l.index]) : assignment[l.index];
        long k = l.exp < 0 ? -l.exp : l.exp;
        while (k-- > 0) acc = compose(acc, base);
    }
    return acc;
}

namespace {

void enumerate_rec(int rank, int max_len, Word& w, int last_lid,
                   const std::function<void(const Word&)>& fn) {
    if (static_cast<int>(w.length()) == max_len) return;
    for (int lid = 0; lid < 2 * rank; ++lid) {
        if (last_lid >= 0 && (lid ^ 1) == last_lid) continue; // would cancel
        const int index = lid / 2;
        const long exp = (lid % 2 == 0) ? 1 : -1;
        Word next = w;
        next.append(index, exp);
        fn(next);
        enumerate_rec(rank, max_len, next, lid, fn);
    }
}

} // namespace

void enumerate_reduced_words(int rank, int max_len, const std::function<void(const Word&)>& fn) {
    if (rank < 1) throw std::invalid_argument("enumerate_reduced_words: rank must be >= 1");
    if (max_len < 0) throw std::invalid_argument("enumerate_reduced_words: max_len must be >= 0");
    Word identity(rank);
    fn(identity);
    enumerate_rec(rank, max_len, identity, -1, fn);
}

std::vector<Word> reduced_words(int rank, int max_len) {
    std::vector<Word> out;
    enumerate_reduced_words(rank, max_len, [&](const Word& w) { out.push_back(w); });
    return out;
}

} // namespace markedfree
