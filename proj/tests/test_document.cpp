#include "dioset/document.hpp"
#include "dioset/errors.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <functional>

using namespace dioset;

namespace {

std::vector<BigInteger> S(std::initializer_list<long> values) {
    std::vector<BigInteger> out;
    for (long v : values) out.emplace_back(v);
    return out;
}

Witness golden() {
    ConstructOptions o;
    o.parameter = ProjPoint({3, 1});
    return construct_witness(S({0, 1, 2}), o);
}

}  // namespace

TEST_CASE("golden document layout") {
    const WitnessDocument doc = to_document(golden());
    CHECK(doc.schema_version == "1");
    CHECK(doc.set == std::vector<std::string>{"0", "1", "2"});
    CHECK(doc.poly == std::vector<std::string>{"1", "24"});
    CHECK(doc.method == "quadric");
    CHECK(doc.parameter == std::vector<std::string>{"3", "1"});
    CHECK(doc.padding.empty());
    CHECK(doc.flags.empty());
    CHECK_FALSE(doc.twist.has_value());
    REQUIRE(doc.pair_roots.size() == 3);
    CHECK(doc.pair_roots[0] == PairRootDocument{"0", "1", "5"});
    CHECK(doc.pair_roots[2] == PairRootDocument{"1", "2", "35"});
    CHECK(serialize(doc) ==
          R"({"schema_version":"1","set":["0","1","2"],"poly":["1","24"],"method":"quadric","parameter":["3","1"],)"
          R"("padding":[],"pair_roots":[{"i":"0","j":"1","root":"5"},{"i":"0","j":"2","root":"7"},)"
          R"({"i":"1","j":"2","root":"35"}],"flags":[]})");
}

TEST_CASE("twist section") {
    const Witness w = golden();
    const WitnessDocument doc = to_document(w, twist_points(w));
    REQUIRE(doc.twist.has_value());
    CHECK(doc.twist->twist_scalar == "1");
    CHECK(doc.twist->poly == std::vector<std::string>{"1", "24"});
    REQUIRE(doc.twist->points.size() == 3);
    CHECK(doc.twist->points[1] == std::pair<std::string, std::string>{"1", "5"});
    CHECK(to_json(doc)["twist"]["points"][2]["y"] == "7");
}

TEST_CASE("parse inverts serialize and serialize inverts parse") {
    std::mt19937_64 rng(81);
    for (int trial = 0; trial < 40; ++trial) {
        const auto set = oracle::distinct_integers(rng, 3 + static_cast<std::size_t>(trial % 7), -30, 30);
        ConstructOptions o;
        o.seed = static_cast<std::uint64_t>(trial);
        o.method = trial % 3 ? Method::quadric : Method::plane;
        const Witness w = construct_witness(set, o);
        const WitnessDocument doc =
            trial % 2 ? to_document(w, twist_points(w)) : to_document(w);
        const std::string text = serialize(doc);
        const WitnessDocument back = parse_witness(text);
        CHECK(back == doc);
        CHECK(serialize(back) == text);
        CHECK(document_set(back) == w.set);
        CHECK(document_poly(back) == w.poly);
    }
}

TEST_CASE("documents carry no binary numbers") {
    const Witness w = golden();
    const Json j = to_json(to_document(w, twist_points(w)));
    std::function<void(const Json&)> walk = [&](const Json& node) {
        CHECK_FALSE(node.is_number());
        if (node.is_structured())
            for (const auto& child : node) walk(child);
    };
    walk(j);
}

TEST_CASE("validation reports problems") {
    Json good = to_json(to_document(golden()));
    CHECK(validate_witness_json(good).empty());

    Json j = good;
    j["poly"][0] = 1;
    CHECK_FALSE(validate_witness_json(j).empty());
    CHECK_THROWS_AS(parse_witness(j), InputError);

    j = good;
    j["extra"] = "x";
    CHECK_FALSE(validate_witness_json(j).empty());

    j = good;
    j.erase("method");
    CHECK_FALSE(validate_witness_json(j).empty());

    j = good;
    j["set"][1] = "1.5";
    CHECK_FALSE(validate_witness_json(j).empty());

    j = good;
    j["flags"] = Json::array({"sparkly"});
    CHECK_FALSE(validate_witness_json(j).empty());

    j = good;
    j["schema_version"] = "2";
    CHECK_FALSE(validate_witness_json(j).empty());

    CHECK_THROWS_AS(parse_witness(std::string_view("{not json")), InputError);
    CHECK_THROWS_AS(parse_witness(std::string_view("[]")), InputError);
}

TEST_CASE("verify and search reports") {
    const Json v = to_json(verify_witness(S({1, 3}), Polynomial({0, 1})), S({1, 3}), Polynomial({0, 1}));
    CHECK(v["ok"] == false);
    CHECK(v["failures"] == Json::array({Json::array({"1", "3"})}));
    CHECK(v["pairs"][0]["product"] == "3");
    CHECK(v["pairs"][0]["root"].is_null());

    const Json s = to_json(brute_force_search(S({0, 1}), 0, 1));
    CHECK(s["exhausted"] == true);
    CHECK(s["found"] == Json::array({Json::array({"1"})}));
}
