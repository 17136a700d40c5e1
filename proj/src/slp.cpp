#include "markedfree/slp.hpp"

#include <stdexcept>

namespace markedfree {

std::uint32_t SlpWord::push_node(Node n) {
    if (n.op == Op::Gen && (n.gen < 0 || n.gen >= rank_))
        throw std::invalid_argument("SlpWord: generator index out of range");
    const bool needs_a = n.op == Op::Cat || n.op == Op::Inv || n.op == Op::Pow;
    if (needs_a && n.a >= nodes_.size())
        throw std::invalid_argument("SlpWord: node references later node");
    if (n.op == Op::Cat && n.b >= nodes_.size())
        throw std::invalid_argument("SlpWord: node references later node");
    if (n.op == Op::Lit && n.literal.rank() != rank_)
        throw std::invalid_argument("SlpWord: literal rank mismatch");
    nodes_.push_back(std::move(n));
    return static_cast<std::uint32_t>(nodes_.size() - 1);
}

std::uint32_t SlpWord::gen(int index) {
    auto key = std::make_tuple(int(Op::Gen), index, 0u, 0u, 0L, std::string());
    auto it = dedup_.find(key);
    if (it != dedup_.end()) return it->second;
    Node n;
    n.op = Op::Gen;
    n.gen = index;
    return dedup_[key] = push_node(std::move(n));
}

std::uint32_t SlpWord::cat(std::uint32_t a, std::uint32_t b) {
    auto key = std::make_tuple(int(Op::Cat), 0, a, b, 0L, std::string());
    auto it = dedup_.find(key);
    if (it != dedup_.end()) return it->second;
    Node n;
    n.op = Op::Cat;
    n.a = a;
    n.b = b;
    return dedup_[key] = push_node(std::move(n));
}

std::uint32_t SlpWord::cat(std::initializer_list<std::uint32_t> xs) {
    if (xs.size() == 0) throw std::invalid_argument("SlpWord::cat: empty list");
    auto it = xs.begin();
    std::uint32_t acc = *it++;
    for (; it != xs.end(); ++it) acc = cat(acc, *it);
    return acc;
}

std::uint32_t SlpWord::inv(std::uint32_t a) {
    auto key = std::make_tuple(int(Op::Inv), 0, a, 0u, 0L, std::string());
    auto it = dedup_.find(key);
    if (it != dedup_.end()) return it->second;
    Node n;
    n.op = Op::Inv;
    n.a = a;
    return dedup_[key] = push_node(std::move(n));
}

std::uint32_t SlpWord::pow(std::uint32_t a, long e) {
    auto key = std::make_tuple(int(Op::Pow), 0, a, 0u, e, std::string());
    auto it = dedup_.find(key);
    if (it != dedup_.end()) return it->second;
    Node n;
    n.op = Op::Pow;
    n.a = a;
    n.exp = e;
    return dedup_[key] = push_node(std::move(n));
}

std::uint32_t SlpWord::lit(const Word& w) {
    auto key = std::make_tuple(int(Op::Lit), 0, 0u, 0u, 0L, w.str());
    auto it = dedup_.find(key);
    if (it != dedup_.end()) return it->second;
    Node n;
    n.op = Op::Lit;
    n.literal = w;
    return dedup_[key] = push_node(std::move(n));
}

PLMap SlpWord::eval(const std::vector<PLMap>& assignment) const {
    if (static_cast<int>(assignment.size()) != rank_)
        throw std::invalid_argument("SlpWord::eval: assignment size != rank");
    if (nodes_.empty()) return PLMap();
    // Mark nodes reachable from the root, then evaluate in index order.
    std::vector<char> needed(nodes_.size(), 0);
    std::vector<std::uint32_t> stack{root_};
    needed[root_] = 1;
    while (!stack.empty()) {
        const Node& n = nodes_[stack.back()];
        stack.pop_back();
        const auto visit = [&](std::uint32_t c) {
            if (!needed[c]) {
                needed[c] = 1;
                stack.push_back(c);
            }
        };
        switch (n.op) {
            case Op::Cat: visit(n.a); visit(n.b); break;
            case Op::Inv:
            case Op::Pow: visit(n.a); break;
            default: break;
        }
    }
    std::vector<PLMap> value(nodes_.size());
    for (std::uint32_t i = 0; i < nodes_.size(); ++i) {
        if (!needed[i]) continue;
        const Node& n = nodes_[i];
        switch (n.op) {
            case Op::Gen: value[i] = assignment[n.gen]; break;
            case Op::Cat: value[i] = compose(value[n.a], value[n.b]); break;
            case Op::Inv: value[i] = invert(value[n.a]); break;
            case Op::Pow: {
                PLMap base = n.exp < 0 ? invert(value[n.a]) : value[n.a];
                long k = n.exp < 0 ? -n.exp : n.exp;
                PLMap acc;
                while (k-- > 0) acc = compose(acc, base);
                value[i] = std::move(acc);
                break;
            }
            case Op::Lit: value[i] = eval_word(n.literal, assignment); break;
        }
    }
    return value[root_];
}

mpz_class SlpWord::expanded_length() const {
    if (nodes_.empty()) return 0;
    std::vector<mpz_class> len(nodes_.size());
    for (std::uint32_t i = 0; i < nodes_.size(); ++i) {
        const Node& n = nodes_[i];
        switch (n.op) {
            case Op::Gen: len[i] = 1; break;
            case Op::Cat: len[i] = len[n.a] + len[n.b]; break;
            case Op::Inv: len[i] = len[n.a]; break;
            case Op::Pow: len[i] = len[n.a] * (n.exp < 0 ? -n.exp : n.exp); break;
            case Op::Lit: len[i] = mpz_class(static_cast<unsigned long>(n.literal.length())); break;
        }
    }
    return len[root_];
}

Word SlpWord::expand(std::uint64_t max_letters) const {
    if (expanded_length() > max_letters)
        throw std::length_error("SlpWord::expand: expansion exceeds the size guard");
    if (nodes_.empty()) return Word(rank_);
    std::vector<std::optional<Word>> memo(nodes_.size());
    auto rec = [&](auto&& self, std::uint32_t i) -> const Word& {
        if (memo[i]) return *memo[i];
        const Node& n = nodes_[i];
        Word w(rank_);
        switch (n.op) {
            case Op::Gen: w.append(n.gen, 1); break;
            case Op::Cat: w = self(self, n.a).concat(self(self, n.b)); break;
            case Op::Inv: w = self(self, n.a).inverse(); break;
            case Op::Pow: w = self(self, n.a).pow(n.exp); break;
            case Op::Lit: w = n.literal; break;
        }
        memo[i] = std::move(w);
        return *memo[i];
    };
    return rec(rec, root_);
}

} // namespace markedfree
