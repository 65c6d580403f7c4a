#pragma once

// End-to-end witnesses: given distinct integers S, produce f in Z[x] with
// f(a) f(b) a perfect square for all distinct a, b in S.

#include "dioset/polynomial.hpp"
#include "dioset/rational_maps.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dioset {

enum class Method { quadric, plane };

enum class WitnessFlag { degree_dropped, trivial_family, zero_value };
using Flags = std::set<WitnessFlag>;

std::string to_string(Method method);
Method parse_method(const std::string& text);
std::string to_string(WitnessFlag flag);
WitnessFlag parse_flag(const std::string& text);

/// Index pair (i, j), i < j, into a sorted set.
using PairIndex = std::pair<std::size_t, std::size_t>;
using PairRoots = std::map<PairIndex, BigInteger>;

struct Witness {
    std::vector<BigInteger> set;  // sorted ascending
    Polynomial poly;
    PairRoots pair_roots;
    Method method = Method::quadric;
    ProjPoint parameter;
    std::vector<BigInteger> padding;
    Flags flags;
    // Construction data; absent for witnesses read back from documents.
    std::optional<WPoint> w_point;
};

struct ConstructOptions {
    Method method = Method::quadric;
    std::optional<ProjPoint> parameter;
    std::uint64_t seed = 0;
    int max_attempts = 20;
    long sample_bound = 50;
};

/// Tallies of rejected attempts, carried by ConstructionError.
struct AttemptStats {
    int attempts = 0;
    int degenerate_parameter = 0;
    int base_point = 0;
    int in_plane = 0;
    int degree_dropped = 0;
    int trivial_family = 0;
    int zero_value = 0;

    std::string summary() const;
};

class ConstructionError : public std::runtime_error {
public:
    ConstructionError(const std::string& what, AttemptStats stats)
        : std::runtime_error(what + " (" + stats.summary() + ")"), stats_(stats) {}
    const AttemptStats& stats() const { return stats_; }

private:
    AttemptStats stats_;
};

/// Sorted copy; throws InputError for fewer than min_size elements or duplicates.
std::vector<BigInteger> validated_set(std::vector<BigInteger> set, std::size_t min_size);

/// Number of parameter coordinates the method uses for a set of this size.
Eigen::Index parameter_size(Method method, std::size_t set_size);

/// Plane instance rank: the least k >= 1 with 3k+2 >= set_size.
Eigen::Index plane_k(std::size_t set_size);

/// Smallest non-negative integers not in the set, then negatives, `count` of them.
std::vector<BigInteger> padding_for(const std::vector<BigInteger>& sorted_set, std::size_t count);

/// With options.parameter: a single attempt, flagged outcomes returned as is.
/// Without: seeded sampling in [-B, B], resampling degenerate and flagged
/// outcomes; falls back to the first flagged witness that is nonzero on S.
Witness construct_witness(const std::vector<BigInteger>& set, const ConstructOptions& options);

/// `count` witnesses drawn from one seeded stream (no explicit parameter).
std::vector<Witness> construct_witnesses(const std::vector<BigInteger>& set, const ConstructOptions& options,
                                         std::size_t count);

struct PairCheck {
    BigInteger a, b, product;
    std::optional<BigInteger> root;
};

struct VerifyReport {
    bool ok = true;
    std::vector<std::pair<BigInteger, BigInteger>> failures;
    PairRoots roots;
    std::vector<PairCheck> pairs;
    std::size_t zero_products = 0;
};

/// Checks every unordered pair. Indices in `roots` refer to `set` as given.
VerifyReport verify_witness(const std::vector<BigInteger>& set, const Polynomial& poly);

/// Like verify_witness but stops at the first failing pair.
bool passes(const std::vector<BigInteger>& set, const Polynomial& poly);

Flags classify_trivial(const Polynomial& poly, const std::vector<BigInteger>& set);

struct SearchReport {
    std::vector<BigInteger> set;
    Eigen::Index max_degree = 0;
    BigInteger max_height;
    std::vector<Polynomial> found;
    bool exhausted = false;
};

/// Default 10^8, overridable through DIOSET_ORACLE_CEILING.
BigInteger oracle_ceiling();

/// (2H+1)^(max_degree+1).
BigInteger search_box_size(Eigen::Index max_degree, const BigInteger& max_height);

/// Every primitive f with positive leading coefficient, deg f <= max_degree and
/// |f_j| <= max_height that passes verification, in enumeration order (degree,
/// then leading coefficient, then lower coefficients lexicographically from
/// the constant term up).
SearchReport brute_force_search(const std::vector<BigInteger>& set, Eigen::Index max_degree,
                                const BigInteger& max_height, std::optional<BigInteger> ceiling = std::nullopt);

}  // namespace dioset
