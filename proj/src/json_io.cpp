#include "markedfree/json_io.hpp"

#include <fstream>

namespace markedfree {

json rational_to_json(const Rational& r) { return r.str(); }

Rational rational_from_json(const json& j) {
    if (!j.is_string()) throw std::invalid_argument("rational: expected \"num/den\" string");
    return Rational::parse(j.get<std::string>());
}

namespace {

json tail_to_json(const AffineTail& t) {
    return json{{"slope", rational_to_json(t.slope)}, {"offset", rational_to_json(t.offset)}};
}

AffineTail tail_from_json(const json& j) {
    return AffineTail{rational_from_json(j.at("slope")), rational_from_json(j.at("offset"))};
}

} // namespace

json plmap_to_json(const PLMap& f) {
    json breaks = json::array();
    for (const auto& p : f.breakpoints())
        breaks.push_back(json::array({rational_to_json(p.x), rational_to_json(p.y)}));
    return json{{"breaks", std::move(breaks)},
                {"left", tail_to_json(f.left_tail())},
                {"right", tail_to_json(f.right_tail())}};
}

PLMap plmap_from_json(const json& j) {
    std::vector<Breakpoint> pts;
    for (const auto& e : j.at("breaks"))
        pts.push_back({rational_from_json(e.at(0)), rational_from_json(e.at(1))});
    return PLMap(std::move(pts), tail_from_json(j.at("left")), tail_from_json(j.at("right")));
}

json support_to_json(const SupportSet& s) {
    json comps = json::array();
    for (const auto& c : s.components)
        comps.push_back(json::array({c.lo ? rational_to_json(*c.lo) : json("-inf"),
                                     c.hi ? rational_to_json(*c.hi) : json("+inf")}));
    return json{{"components", std::move(comps)}};
}

json word_to_json(const Word& w) { return w.str(); }

Word word_from_json(const json& j, int rank) {
    if (!j.is_string()) throw std::invalid_argument("word: expected compact text");
    return Word::parse(j.get<std::string>(), rank);
}

json slp_to_json(const SlpWord& s) {
    json nodes = json::array();
    for (const auto& n : s.nodes()) {
        switch (n.op) {
            case SlpWord::Op::Gen: nodes.push_back({{"op", "gen"}, {"g", n.gen}}); break;
            case SlpWord::Op::Cat: nodes.push_back({{"op", "cat"}, {"a", n.a}, {"b", n.b}}); break;
            case SlpWord::Op::Inv: nodes.push_back({{"op", "inv"}, {"a", n.a}}); break;
            case SlpWord::Op::Pow: nodes.push_back({{"op", "pow"}, {"a", n.a}, {"e", n.exp}}); break;
            case SlpWord::Op::Lit: nodes.push_back({{"op", "lit"}, {"w", n.literal.str()}}); break;
        }
    }
    return json{{"rank", s.rank()}, {"root", s.root()}, {"nodes", std::move(nodes)}};
}

SlpWord slp_from_json(const json& j) {
    SlpWord s(j.at("rank").get<int>());
    for (const auto& e : j.at("nodes")) {
        const std::string op = e.at("op").get<std::string>();
        SlpWord::Node n;
        if (op == "gen") {
            n.op = SlpWord::Op::Gen;
            n.gen = e.at("g").get<int>();
        } else if (op == "cat") {
            n.op = SlpWord::Op::Cat;
            n.a = e.at("a").get<std::uint32_t>();
            n.b = e.at("b").get<std::uint32_t>();
        } else if (op == "inv") {
            n.op = SlpWord::Op::Inv;
            n.a = e.at("a").get<std::uint32_t>();
        } else if (op == "pow") {
            n.op = SlpWord::Op::Pow;
            n.a = e.at("a").get<std::uint32_t>();
            n.exp = e.at("e").get<long>();
        } else if (op == "lit") {
            n.op = SlpWord::Op::Lit;
            n.literal = Word::parse(e.at("w").get<std::string>(), s.rank());
        } else {
            throw std::invalid_argument("slp: unknown node op '" + op + "'");
        }
        s.push_node(std::move(n));
    }
    s.set_root(j.at("root").get<std::uint32_t>());
    if (s.root() >= s.nodes().size()) throw std::invalid_argument("slp: root out of range");
    return s;
}

json tree_pair_to_json(const TreePair& tp) {
    return json{{"domain", tp.domain_parens()}, {"range", tp.range_parens()}};
}

json check_report_to_json(const CheckReport& r) {
    json j{{"radius", r.radius}, {"checked_words", r.checked_words}, {"verified", r.verified()}};
    if (r.violation) j["violation"] = r.violation->str();
    return j;
}

json certificate_to_json(const FreePairCertificate& c) {
    json blocks = json::array();
    for (const auto& b : c.blocks)
        blocks.push_back({{"lo", rational_to_json(b.lo)},
                          {"hi", rational_to_json(b.hi)},
                          {"candidate_id", b.candidate_id}});
    return json{{"radius", c.radius},
                {"checked_words", c.checked_words},
                {"seed", c.seed},
                {"blocks", std::move(blocks)},
                {"verified", c.verified}};
}

FreePairCertificate certificate_from_json(const json& j) {
    FreePairCertificate c;
    c.radius = j.at("radius").get<int>();
    c.checked_words = j.at("checked_words").get<std::uint64_t>();
    c.seed = j.at("seed").get<std::uint64_t>();
    c.verified = j.at("verified").get<bool>();
    for (const auto& e : j.at("blocks"))
        c.blocks.push_back({rational_from_json(e.at("lo")), rational_from_json(e.at("hi")),
                            e.at("candidate_id").get<std::uint64_t>()});
    return c;
}

json free_pair_to_json(const FreePair& fp) {
    return json{{"format", "markedfree.pair/1"},
                {"a", plmap_to_json(fp.a)},
                {"b", plmap_to_json(fp.b)},
                {"certificate", certificate_to_json(fp.cert)}};
}

namespace {

json pieces_to_json(const std::vector<BlockPieces>& pieces) {
    json out = json::array();
    for (const auto& p : pieces)
        out.push_back({{"a_u", plmap_to_json(p.a_u)},
                       {"a_v", plmap_to_json(p.a_v)},
                       {"b_u", plmap_to_json(p.b_u)},
                       {"b_v", plmap_to_json(p.b_v)},
                       {"scale", rational_to_json(p.scale)},
                       {"offset", rational_to_json(p.offset)}});
    return out;
}

std::vector<BlockPieces> pieces_from_json(const json& j) {
    std::vector<BlockPieces> out;
    for (const auto& e : j)
        out.push_back({plmap_from_json(e.at("a_u")), plmap_from_json(e.at("a_v")),
                       plmap_from_json(e.at("b_u")), plmap_from_json(e.at("b_v")),
                       rational_from_json(e.at("scale")), rational_from_json(e.at("offset"))});
    return out;
}

json plmaps_to_json(const std::vector<PLMap>& maps) {
    json out = json::array();
    for (const auto& m : maps) out.push_back(plmap_to_json(m));
    return out;
}

std::vector<PLMap> plmaps_from_json(const json& j) {
    std::vector<PLMap> out;
    for (const auto& e : j) out.push_back(plmap_from_json(e));
    return out;
}

} // namespace

json bundle_to_json(const MarkingBundle& b) {
    return json{{"format", "markedfree.bundle/1"},
                {"n", b.n},
                {"m", b.m},
                {"interval", json::array({b.m, b.interval_end()})},
                {"seed", b.seed},
                {"a", plmap_to_json(b.a)},
                {"b", plmap_to_json(b.b)},
                {"p", plmap_to_json(b.p)},
                {"q", plmap_to_json(b.q)},
                {"g", plmap_to_json(b.g)},
                {"h", plmap_to_json(b.h)},
                {"a_blocks", plmaps_to_json(b.a_blocks)},
                {"b_blocks", plmaps_to_json(b.b_blocks)},
                {"pieces", pieces_to_json(b.pieces)},
                {"U", b.U.str()},
                {"V", b.V.str()},
                {"pair_certificate", certificate_to_json(b.pair_cert)}};
}

MarkingBundle bundle_from_json(const json& j) {
    if (j.value("format", "") != "markedfree.bundle/1")
        throw std::invalid_argument("bundle: unknown format tag");
    MarkingBundle b;
    b.n = j.at("n").get<int>();
    b.m = j.at("m").get<long>();
    b.seed = j.at("seed").get<std::uint64_t>();
    b.a = plmap_from_json(j.at("a"));
    b.b = plmap_from_json(j.at("b"));
    b.p = plmap_from_json(j.at("p"));
    b.q = plmap_from_json(j.at("q"));
    b.g = plmap_from_json(j.at("g"));
    b.h = plmap_from_json(j.at("h"));
    b.a_blocks = plmaps_from_json(j.at("a_blocks"));
    b.b_blocks = plmaps_from_json(j.at("b_blocks"));
    b.pieces = pieces_from_json(j.at("pieces"));
    b.U = Word::parse(j.at("U").get<std::string>(), 2);
    b.V = Word::parse(j.at("V").get<std::string>(), 2);
    b.pair_cert = certificate_from_json(j.at("pair_certificate"));
    // Revalidate the bundle's defining identities.
    if (!(compose(b.p, generator_f1()) == b.g) || !(compose(b.q, generator_f2()) == b.h))
        throw std::invalid_argument("bundle: g/h do not match p f1 / q f2");
    PLMap a, bb;
    for (const auto& part : b.a_blocks) a = compose(a, part);
    for (const auto& part : b.b_blocks) bb = compose(bb, part);
    if (!(a == b.a) || !(bb == b.b))
        throw std::invalid_argument("bundle: blocks do not multiply to the stored pair");
    return b;
}

json ball_certificate_to_json(const BallCertificate& c, const MarkingBundle& b) {
    return json{{"format", "markedfree.ball_certificate/1"},
                {"n", b.n},
                {"seed", b.seed},
                {"radius", c.report.radius},
                {"checked_words", c.report.checked_words},
                {"violation", c.report.violation ? json(c.report.violation->str()) : json()},
                {"shadow_words_checked", c.shadow_words_checked},
                {"shadow_passed", c.shadow_passed},
                {"verified", c.verified()}};
}

json witness_to_json(const GenerationWitness& w, const MarkingBundle& b) {
    return json{{"format", "markedfree.witness/1"},
                {"n", b.n},
                {"seed", b.seed},
                {"s", w.s},
                {"k_values_p", w.k_values_p},
                {"k_values_q", w.k_values_q},
                {"W_p", slp_to_json(w.W_p)},
                {"W_q", slp_to_json(w.W_q)},
                {"expanded_length_p", w.expanded_length_p.get_str()},
                {"expanded_length_q", w.expanded_length_q.get_str()},
                {"verified", w.verified}};
}

json distance_report_to_json(const DistanceReport& r) {
    json j{{"format", "markedfree.distance/1"},
           {"n", r.n},
           {"distance", "e^-" + std::to_string(r.n)},
           {"exact", r.exact},
           {"censored", r.censored},
           {"cutoff", r.cutoff},
           {"words_checked", r.words_checked}};
    if (r.shortest_relation) {
        j["shortest_relation"] = r.shortest_relation->str();
        j["shortest_relation_length"] = r.shortest_relation->length();
    }
    return j;
}

json spectrum_to_json(const RelationSpectrum& s) {
    json words = json::array();
    for (const auto& w : s.trivial_words) words.push_back(w.str());
    return json{{"format", "markedfree.spectrum/1"},
                {"cutoff", s.cutoff},
                {"words_checked", s.words_checked},
                {"trivial_words", std::move(words)}};
}

json tuple_to_json(const std::vector<PLMap>& maps) {
    return json{{"format", "markedfree.tuple/1"}, {"maps", plmaps_to_json(maps)}};
}

std::vector<PLMap> tuple_from_json(const json& j) {
    return plmaps_from_json(j.at("maps"));
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    json j;
    in >> j;
    return j;
}

void save_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << j.dump(2) << "\n";
}

} // namespace markedfree
