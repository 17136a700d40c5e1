#include "markedfree/json_io.hpp"
#include "markedfree/report.hpp"

#include "test_helpers.hpp"

#include <doctest.h>

using namespace markedfree;
using testutil::random_thompson;

TEST_CASE("plmap json round-trip is exact") {
    const json j = plmap_to_json(generator_f2());
    CHECK(j["breaks"][0][0] == "0/1");
    CHECK(j["breaks"][1][1] == "2/1");
    CHECK(j["left"]["slope"] == "1/1");
    CHECK(plmap_from_json(j) == generator_f2());

    std::mt19937_64 rng(8);
    for (int i = 0; i < 15; ++i) {
        const PLMap f = random_thompson(rng);
        CHECK(plmap_from_json(plmap_to_json(f)) == f);
    }
}

TEST_CASE("plmap json re-canonicalizes and re-validates") {
    json j = plmap_to_json(PLMap());
    j["breaks"] = json::array({json::array({"0/1", "0/1"}), json::array({"1/2", "1/2"})});
    CHECK(plmap_from_json(j).is_identity()); // spurious points merge away

    j["breaks"] = json::array({json::array({"0/1", "0/1"}), json::array({"0/1", "1/1"})});
    CHECK_THROWS_AS(plmap_from_json(j), ValidationError);
    CHECK_THROWS_AS(plmap_from_json(json::parse("{\"breaks\": []}")), json::exception);
    CHECK_THROWS_AS(rational_from_json(json(3)), std::invalid_argument);
}

TEST_CASE("word and slp json round-trips") {
    const Word w = Word::parse("f1^2 f2^-1", 2);
    CHECK(word_from_json(word_to_json(w)) == w);

    SlpWord s(2);
    s.set_root(s.cat({s.pow(s.gen(0), -2), s.lit(Word::parse("f2 f1", 2)), s.inv(s.gen(1))}));
    const SlpWord t = slp_from_json(slp_to_json(s));
    CHECK(t.expanded_length() == s.expanded_length());
    const std::vector<PLMap> fs = {generator_f1(), generator_f2()};
    CHECK(t.eval(fs) == s.eval(fs));
    CHECK(slp_to_json(t) == slp_to_json(s));

    json bad = slp_to_json(s);
    bad["nodes"][0]["op"] = "frob";
    CHECK_THROWS_AS(slp_from_json(bad), std::invalid_argument);
}

TEST_CASE("tree pair parens") {
    const TreePair tp = tree_pair_of(transport_to_unit(generator_f1()));
    const json j = tree_pair_to_json(tp);
    CHECK(j["domain"] == "((**)*)");
    CHECK(j["range"] == "(*(**))");
}

TEST_CASE("tuple files") {
    const std::vector<PLMap> tuple = {generator_f1(), generator_f2()};
    const json j = tuple_to_json(tuple);
    CHECK(j["format"] == "markedfree.tuple/1");
    const auto back = tuple_from_json(j);
    REQUIRE(back.size() == 2);
    CHECK(back[0] == tuple[0]);
    CHECK(back[1] == tuple[1]);
}

TEST_CASE("bundle json round-trip revalidates") {
    const MarkingBundle b = build_marking(1, 7);
    const json j = bundle_to_json(b);
    const MarkingBundle back = bundle_from_json(j);
    CHECK(back.g == b.g);
    CHECK(back.h == b.h);
    CHECK(back.m == b.m);
    CHECK(bundle_to_json(back).dump() == j.dump());

    json corrupt = j;
    corrupt["g"] = plmap_to_json(generator_f1());
    CHECK_THROWS_AS(bundle_from_json(corrupt), std::invalid_argument);
}

TEST_CASE("sha256 known vector") {
    CHECK(sha256_hex("abc") ==
          "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
    CHECK(sha256_hex("") ==
          "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
}
