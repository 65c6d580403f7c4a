#pragma once

// JSON documents exchanged by the command-line tool. Every number is a decimal
// string ("p/q" for non-integral rationals); no binary floats anywhere.

#include "dioset/forge.hpp"
#include "dioset/twist.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace dioset {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1";

struct TwistDocument {
    std::string twist_scalar;
    std::vector<std::string> poly;
    std::vector<std::pair<std::string, std::string>> points;
    std::string genus_note;

    bool operator==(const TwistDocument&) const = default;
};

struct PairRootDocument {
    std::string i, j, root;

    bool operator==(const PairRootDocument&) const = default;
};

struct WitnessDocument {
    std::string schema_version = kSchemaVersion;
    std::vector<std::string> set;
    std::vector<std::string> poly;
    std::string method;
    std::vector<std::string> parameter;
    std::vector<std::string> padding;
    std::vector<PairRootDocument> pair_roots;
    std::vector<std::string> flags;
    std::optional<TwistDocument> twist;

    bool operator==(const WitnessDocument&) const = default;
};

WitnessDocument to_document(const Witness& w, const std::optional<TwistPointSet>& twist = std::nullopt);
TwistDocument to_document(const TwistPointSet& twist);

Json to_json(const WitnessDocument& doc);
/// Structural problems with a witness document; empty when valid.
std::vector<std::string> validate_witness_json(const Json& j);
/// Throws InputError listing every schema violation.
WitnessDocument parse_witness(const Json& j);
WitnessDocument parse_witness(std::string_view text);
inline WitnessDocument parse_witness(const std::string& text) { return parse_witness(std::string_view(text)); }
/// Compact single-line form used for JSON-lines output.
std::string serialize(const WitnessDocument& doc);

std::vector<BigInteger> document_set(const WitnessDocument& doc);
Polynomial document_poly(const WitnessDocument& doc);

Json to_json(const VerifyReport& report, const std::vector<BigInteger>& set, const Polynomial& poly);
Json to_json(const SearchReport& report);

}  // namespace dioset
