#include "dioset/cli.hpp"

#include "dioset/document.hpp"
#include "dioset/errors.hpp"

#include <CLI11.hpp>

#include <istream>
#include <ostream>

namespace dioset {

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = text.find(',', start);
        std::string token = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        const auto first = token.find_first_not_of(" \t");
        const auto last = token.find_last_not_of(" \t");
        token = first == std::string::npos ? "" : token.substr(first, last - first + 1);
        if (token.empty()) throw InputError("empty entry in list '" + text + "'");
        out.push_back(token);
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

namespace {

std::vector<BigInteger> parse_integers(const std::string& text) {
    std::vector<BigInteger> out;
    for (const auto& token : split_list(text)) out.push_back(parse_integer(token));
    return out;
}

struct ConstructArgs {
    std::string set;
    std::string method = "quadric";
    std::string param;
    std::uint64_t seed = 0;
    std::size_t count = 1;
    int max_attempts = 20;
    long bound = 50;
    bool emit_twist = false;
};

struct VerifyArgs {
    std::string set;
    std::string poly;
    bool from_json = false;
};

struct SearchArgs {
    std::string set;
    long max_degree = 0;
    std::string max_height;
};

int cmd_construct(const ConstructArgs& a, std::ostream& out) {
    ConstructOptions options;
    options.method = parse_method(a.method);
    options.seed = a.seed;
    options.max_attempts = a.max_attempts;
    options.sample_bound = a.bound;
    if (!a.param.empty()) options.parameter = ProjPoint(to_int_vector(parse_integers(a.param)));
    if (a.count < 1) throw InputError("--count must be at least 1");
    const std::vector<BigInteger> set = parse_integers(a.set);
    for (const Witness& w : construct_witnesses(set, options, a.count)) {
        std::optional<TwistPointSet> twist;
        if (a.emit_twist) twist = twist_points(w);
        out << serialize(to_document(w, twist)) << '\n';
    }
    return kExitOk;
}

// A document's stored certificate must match the recomputed roots.
bool certificate_matches(const WitnessDocument& doc, const VerifyReport& report) {
    if (doc.pair_roots.empty()) return true;
    if (doc.pair_roots.size() != report.roots.size()) return false;
    for (const auto& r : doc.pair_roots) {
        const PairIndex ij{std::stoul(r.i), std::stoul(r.j)};
        const auto found = report.roots.find(ij);
        if (found == report.roots.end() || found->second != parse_integer(r.root)) return false;
    }
    return true;
}

int cmd_verify(const VerifyArgs& a, std::istream& in, std::ostream& out) {
    if (!a.from_json) {
        if (a.set.empty() || a.poly.empty()) throw InputError("verify needs --set and --poly, or --from-json");
        const std::vector<BigInteger> set = parse_integers(a.set);
        const Polynomial poly(to_int_vector(parse_integers(a.poly)));
        const VerifyReport report = verify_witness(set, poly);
        out << to_json(report, set, poly).dump() << '\n';
        return report.ok ? kExitOk : kExitVerification;
    }
    if (!a.set.empty() || !a.poly.empty()) throw InputError("--from-json excludes --set and --poly");
    bool all_ok = true;
    std::size_t documents = 0;
    std::string line;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        const WitnessDocument doc = parse_witness(line);
        const std::vector<BigInteger> set = document_set(doc);
        const Polynomial poly = document_poly(doc);
        const VerifyReport report = verify_witness(set, poly);
        Json j = to_json(report, set, poly);
        const bool matches = certificate_matches(doc, report);
        j["certificate_matches"] = matches;
        out << j.dump() << '\n';
        all_ok = all_ok && report.ok && matches;
        ++documents;
    }
    if (documents == 0) throw InputError("--from-json: no documents on standard input");
    return all_ok ? kExitOk : kExitVerification;
}

int cmd_search(const SearchArgs& a, std::ostream& out) {
    const std::vector<BigInteger> set = parse_integers(a.set);
    const BigInteger height = parse_integer(a.max_height);
    const SearchReport report = brute_force_search(set, a.max_degree, height);
    out << to_json(report).dump() << '\n';
    return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Construct and verify integer polynomials f with f(a)f(b) a square on a given set"};
    app.name("dioset");
    app.require_subcommand(1);

    ConstructArgs construct;
    auto* c = app.add_subcommand("construct", "Build witness polynomials for a set");
    c->add_option("--set", construct.set, "Comma-separated distinct integers")->required();
    c->add_option("--method", construct.method, "quadric (deg |S|-2) or plane (deg 2k, |S| <= 3k+2)")
        ->check(CLI::IsMember({"quadric", "plane"}));
    c->add_option("--param", construct.param, "Explicit projective parameter, comma-separated");
    c->add_option("--seed", construct.seed, "Seed for parameter sampling");
    c->add_option("--count", construct.count, "Number of witnesses (JSON lines)");
    c->add_option("--max-attempts", construct.max_attempts, "Sampling attempts per witness");
    c->add_option("--bound", construct.bound, "Sampled parameter coordinates lie in [-B, B]");
    c->add_flag("--emit-twist", construct.emit_twist, "Include the quadratic-twist points");

    VerifyArgs verify;
    auto* v = app.add_subcommand("verify", "Check that f(a)f(b) is a square for all pairs");
    v->add_option("--set", verify.set, "Comma-separated distinct integers");
    v->add_option("--poly", verify.poly, "Ascending coefficients, comma-separated");
    v->add_flag("--from-json", verify.from_json, "Read witness documents (JSON lines) from standard input");

    SearchArgs search;
    auto* s = app.add_subcommand("search", "Exhaustive search over a coefficient box");
    s->add_option("--set", search.set, "Comma-separated distinct integers")->required();
    s->add_option("--max-degree", search.max_degree, "Largest degree")->required();
    s->add_option("--max-height", search.max_height, "Largest coefficient magnitude")->required();

    std::vector<const char*> argv{"dioset"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "dioset: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        if (c->parsed()) return cmd_construct(construct, out);
        if (v->parsed()) return cmd_verify(verify, in, out);
        return cmd_search(search, out);
    } catch (const ConstructionError& e) {
        err << "dioset: construction failed: " << e.what() << '\n';
        return kExitConstruction;
    } catch (const SearchCeilingError& e) {
        err << "dioset: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "dioset: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::out_of_range& e) {
        err << "dioset: " << e.what() << '\n';
        return kExitUsage;
    }
}

}  // namespace dioset
