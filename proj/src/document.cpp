#include "dioset/document.hpp"

#include "dioset/errors.hpp"

#include <algorithm>

namespace dioset {

namespace {

std::vector<std::string> strings(const std::vector<BigInteger>& v) {
    std::vector<std::string> out;
    for (const auto& x : v) out.push_back(to_string(x));
    return out;
}

std::vector<std::string> strings(const IntVector& v) {
    std::vector<std::string> out;
    for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(to_string(v(i)));
    return out;
}

bool is_integer_string(const Json& j) {
    if (!j.is_string()) return false;
    try {
        parse_integer(j.get<std::string>());
        return true;
    } catch (const InputError&) {
        return false;
    }
}

bool is_rational_string(const Json& j) {
    if (!j.is_string()) return false;
    try {
        parse_rational(j.get<std::string>());
        return true;
    } catch (const InputError&) {
        return false;
    }
}

void check_integer_list(const Json& j, const std::string& key, bool nonempty, std::vector<std::string>& problems) {
    if (!j.contains(key)) {
        problems.push_back("missing '" + key + "'");
        return;
    }
    const Json& v = j.at(key);
    if (!v.is_array()) {
        problems.push_back("'" + key + "' must be an array");
        return;
    }
    if (nonempty && v.empty()) problems.push_back("'" + key + "' must not be empty");
    for (const auto& x : v)
        if (!is_integer_string(x)) problems.push_back("'" + key + "' entries must be decimal integer strings");
}

void check_twist(const Json& t, std::vector<std::string>& problems) {
    if (!t.is_object()) {
        problems.push_back("'twist' must be an object");
        return;
    }
    if (!t.contains("twist_scalar") || !is_rational_string(t.at("twist_scalar")))
        problems.push_back("'twist.twist_scalar' must be a rational string");
    check_integer_list(t, "poly", true, problems);
    if (!t.contains("points") || !t.at("points").is_array()) {
        problems.push_back("'twist.points' must be an array");
    } else {
        for (const auto& p : t.at("points"))
            if (!p.is_object() || !p.contains("x") || !p.contains("y") || !is_rational_string(p.at("x")) ||
                !is_rational_string(p.at("y")) || p.size() != 2)
                problems.push_back("'twist.points' entries must be {x, y} rational strings");
    }
    if (!t.contains("genus_note") || !t.at("genus_note").is_string())
        problems.push_back("'twist.genus_note' must be a string");
}

}  // namespace

TwistDocument to_document(const TwistPointSet& twist) {
    TwistDocument doc{to_string(twist.curve.twist_scalar), strings(twist.curve.poly), {}, twist.genus_note};
    for (const auto& p : twist.points) doc.points.emplace_back(to_string(p.x), to_string(p.y));
    return doc;
}

WitnessDocument to_document(const Witness& w, const std::optional<TwistPointSet>& twist) {
    WitnessDocument doc;
    doc.set = strings(w.set);
    doc.poly = w.poly.to_strings();
    doc.method = to_string(w.method);
    doc.parameter = strings(w.parameter.coords());
    doc.padding = strings(w.padding);
    for (const auto& [ij, root] : w.pair_roots)
        doc.pair_roots.push_back({std::to_string(ij.first), std::to_string(ij.second), to_string(root)});
    for (WitnessFlag f : w.flags) doc.flags.push_back(to_string(f));
    if (twist) doc.twist = to_document(*twist);
    return doc;
}

Json to_json(const WitnessDocument& doc) {
    Json j;
    j["schema_version"] = doc.schema_version;
    j["set"] = doc.set;
    j["poly"] = doc.poly;
    j["method"] = doc.method;
    j["parameter"] = doc.parameter;
    j["padding"] = doc.padding;
    j["pair_roots"] = Json::array();
    for (const auto& r : doc.pair_roots) j["pair_roots"].push_back(Json{{"i", r.i}, {"j", r.j}, {"root", r.root}});
    j["flags"] = doc.flags;
    if (doc.twist) {
        Json t;
        t["twist_scalar"] = doc.twist->twist_scalar;
        t["poly"] = doc.twist->poly;
        t["points"] = Json::array();
        for (const auto& [x, y] : doc.twist->points) t["points"].push_back(Json{{"x", x}, {"y", y}});
        t["genus_note"] = doc.twist->genus_note;
        j["twist"] = std::move(t);
    }
    return j;
}

std::vector<std::string> validate_witness_json(const Json& j) {
    std::vector<std::string> problems;
    if (!j.is_object()) return {"document must be a JSON object"};
    static const std::vector<std::string> known = {"schema_version", "set",   "poly",  "method", "parameter",
                                                   "padding",        "pair_roots", "flags", "twist"};
    for (const auto& item : j.items())
        if (std::find(known.begin(), known.end(), item.key()) == known.end())
            problems.push_back("unknown field '" + item.key() + "'");
    if (!j.contains("schema_version") || j.at("schema_version") != kSchemaVersion)
        problems.push_back(std::string("'schema_version' must be \"") + kSchemaVersion + "\"");
    check_integer_list(j, "set", true, problems);
    check_integer_list(j, "poly", true, problems);
    check_integer_list(j, "parameter", false, problems);
    check_integer_list(j, "padding", false, problems);
    if (!j.contains("method") || !j.at("method").is_string() ||
        (j.at("method") != "quadric" && j.at("method") != "plane"))
        problems.push_back("'method' must be \"quadric\" or \"plane\"");
    if (!j.contains("pair_roots") || !j.at("pair_roots").is_array()) {
        problems.push_back("'pair_roots' must be an array");
    } else {
        for (const auto& r : j.at("pair_roots"))
            if (!r.is_object() || r.size() != 3 || !r.contains("i") || !r.contains("j") || !r.contains("root") ||
                !is_integer_string(r.at("i")) || !is_integer_string(r.at("j")) || !is_integer_string(r.at("root")))
                problems.push_back("'pair_roots' entries must be {i, j, root} integer strings");
    }
    if (!j.contains("flags") || !j.at("flags").is_array()) {
        problems.push_back("'flags' must be an array");
    } else {
        for (const auto& f : j.at("flags")) {
            try {
                if (!f.is_string()) throw InputError("");
                parse_flag(f.get<std::string>());
            } catch (const InputError&) {
                problems.push_back("unknown flag " + f.dump());
            }
        }
    }
    if (j.contains("twist")) check_twist(j.at("twist"), problems);
    return problems;
}

WitnessDocument parse_witness(const Json& j) {
    const auto problems = validate_witness_json(j);
    if (!problems.empty()) {
        std::string what = "invalid witness document:";
        for (const auto& p : problems) what += " " + p + ";";
        throw InputError(what);
    }
    WitnessDocument doc;
    doc.schema_version = j.at("schema_version").get<std::string>();
    doc.set = j.at("set").get<std::vector<std::string>>();
    doc.poly = j.at("poly").get<std::vector<std::string>>();
    doc.method = j.at("method").get<std::string>();
    doc.parameter = j.at("parameter").get<std::vector<std::string>>();
    doc.padding = j.at("padding").get<std::vector<std::string>>();
    for (const auto& r : j.at("pair_roots"))
        doc.pair_roots.push_back({r.at("i").get<std::string>(), r.at("j").get<std::string>(),
                                  r.at("root").get<std::string>()});
    doc.flags = j.at("flags").get<std::vector<std::string>>();
    if (j.contains("twist")) {
        const Json& t = j.at("twist");
        TwistDocument twist;
        twist.twist_scalar = t.at("twist_scalar").get<std::string>();
        twist.poly = t.at("poly").get<std::vector<std::string>>();
        for (const auto& p : t.at("points")) twist.points.emplace_back(p.at("x").get<std::string>(), p.at("y").get<std::string>());
        twist.genus_note = t.at("genus_note").get<std::string>();
        doc.twist = std::move(twist);
    }
    return doc;
}

WitnessDocument parse_witness(std::string_view text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError(std::string("malformed JSON: ") + e.what());
    }
    return parse_witness(j);
}

std::string serialize(const WitnessDocument& doc) { return to_json(doc).dump(); }

std::vector<BigInteger> document_set(const WitnessDocument& doc) {
    std::vector<BigInteger> out;
    for (const auto& s : doc.set) out.push_back(parse_integer(s));
    return out;
}

Polynomial document_poly(const WitnessDocument& doc) { return Polynomial::from_strings(doc.poly); }

Json to_json(const VerifyReport& report, const std::vector<BigInteger>& set, const Polynomial& poly) {
    Json j;
    j["ok"] = report.ok;
    j["set"] = strings(set);
    j["poly"] = poly.to_strings();
    j["pairs"] = Json::array();
    for (const auto& p : report.pairs) {
        Json pair{{"a", to_string(p.a)}, {"b", to_string(p.b)}, {"product", to_string(p.product)}};
        pair["root"] = p.root ? Json(to_string(*p.root)) : Json(nullptr);
        j["pairs"].push_back(std::move(pair));
    }
    j["failures"] = Json::array();
    for (const auto& [a, b] : report.failures) j["failures"].push_back(Json::array({to_string(a), to_string(b)}));
    j["zero_products"] = std::to_string(report.zero_products);
    return j;
}

Json to_json(const SearchReport& report) {
    Json j;
    j["set"] = strings(report.set);
    j["max_degree"] = std::to_string(report.max_degree);
    j["max_height"] = to_string(report.max_height);
    j["found"] = Json::array();
    for (const auto& f : report.found) j["found"].push_back(f.to_strings());
    j["count"] = std::to_string(report.found.size());
    j["exhausted"] = report.exhausted;
    return j;
}

}  // namespace dioset
