#include "dioset/forge.hpp"

#include "dioset/errors.hpp"
#include "dioset/isqrt.hpp"

#include <algorithm>
#include <cstdlib>
#include <future>
#include <random>
#include <thread>

namespace dioset {

std::string to_string(Method method) { return method == Method::quadric ? "quadric" : "plane"; }

Method parse_method(const std::string& text) {
    if (text == "quadric") return Method::quadric;
    if (text == "plane") return Method::plane;
    throw InputError("unknown method '" + text + "' (expected quadric or plane)");
}

std::string to_string(WitnessFlag flag) {
    switch (flag) {
        case WitnessFlag::degree_dropped: return "degree-dropped";
        case WitnessFlag::trivial_family: return "trivial-family";
        case WitnessFlag::zero_value: return "zero-value";
    }
    return "";
}

WitnessFlag parse_flag(const std::string& text) {
    if (text == "degree-dropped") return WitnessFlag::degree_dropped;
    if (text == "trivial-family") return WitnessFlag::trivial_family;
    if (text == "zero-value") return WitnessFlag::zero_value;
    throw InputError("unknown flag '" + text + "'");
}

std::string AttemptStats::summary() const {
    return "attempts=" + std::to_string(attempts) + " degenerate-parameter=" + std::to_string(degenerate_parameter) +
           " base-point=" + std::to_string(base_point) + " in-plane=" + std::to_string(in_plane) +
           " degree-dropped=" + std::to_string(degree_dropped) + " trivial-family=" + std::to_string(trivial_family) +
           " zero-value=" + std::to_string(zero_value);
}

std::vector<BigInteger> validated_set(std::vector<BigInteger> set, std::size_t min_size) {
    if (set.size() < min_size)
        throw InputError("set needs at least " + std::to_string(min_size) + " elements, got " +
                         std::to_string(set.size()));
    std::sort(set.begin(), set.end());
    const auto dup = std::adjacent_find(set.begin(), set.end());
    if (dup != set.end()) throw InputError("duplicate element " + to_string(*dup));
    return set;
}

Eigen::Index plane_k(std::size_t set_size) {
    Eigen::Index k = 1;
    while (3 * k + 2 < static_cast<Eigen::Index>(set_size)) ++k;
    return k;
}

Eigen::Index parameter_size(Method method, std::size_t set_size) {
    if (method == Method::quadric) return static_cast<Eigen::Index>(set_size) - 1;
    return 2 * plane_k(set_size) + 1;
}

std::vector<BigInteger> padding_for(const std::vector<BigInteger>& sorted_set, std::size_t count) {
    std::vector<BigInteger> out;
    const auto taken = [&](const BigInteger& x) { return std::binary_search(sorted_set.begin(), sorted_set.end(), x); };
    for (BigInteger x = 0; out.size() < count; ++x)
        if (!taken(x)) out.push_back(x);
    return out;
}

namespace {

struct Instance {
    PointConfig config;
    std::vector<BigInteger> padding;
};

Instance make_instance(const std::vector<BigInteger>& set, Method method) {
    if (method == Method::quadric)
        return {PointConfig::from_integers(set, static_cast<Eigen::Index>(set.size()) - 2), {}};
    const Eigen::Index k = plane_k(set.size());
    std::vector<BigInteger> padding = padding_for(set, static_cast<std::size_t>(3 * k + 2) - set.size());
    std::vector<BigInteger> nodes = set;
    nodes.insert(nodes.end(), padding.begin(), padding.end());
    return {PointConfig::from_integers(nodes, 2 * k), std::move(padding)};
}

struct Attempt {
    std::optional<Witness> witness;
    bool clean = false;
};

Attempt attempt(const Instance& instance, const std::vector<BigInteger>& set, Method method, const ProjPoint& q,
                AttemptStats& stats) {
    ++stats.attempts;
    const PointConfig& config = instance.config;
    std::optional<ParamResult> image;
    try {
        image = method == Method::quadric ? param_quadric(config, q) : param_plane(config, q);
    } catch (const DegenerateParameterError&) {
        ++stats.degenerate_parameter;
        return {};
    }
    if (image->flag == ParamFlag::base_point) ++stats.base_point;
    if (image->flag == ParamFlag::in_plane) ++stats.in_plane;

    const PsiImage psi = psi_image(image->point);
    IntVector raw(psi.poly.size());
    for (Eigen::Index j = 0; j < raw.size(); ++j) raw(j) = psi.poly(j).get_num();
    Polynomial poly(raw);

    Flags flags = classify_trivial(poly, set);
    if (poly.degree() < config.degree()) flags.insert(WitnessFlag::degree_dropped);
    if (flags.count(WitnessFlag::degree_dropped)) ++stats.degree_dropped;
    if (flags.count(WitnessFlag::trivial_family)) ++stats.trivial_family;
    if (flags.count(WitnessFlag::zero_value)) {
        ++stats.zero_value;
        return {};
    }

    VerifyReport report = verify_witness(set, poly);
    if (!report.ok) throw std::logic_error("constructed polynomial " + poly.pretty() + " failed verification");

    Witness w{set, poly, std::move(report.roots), method, q, instance.padding, flags, image->point};
    return {std::move(w), flags.empty() && image->flag == ParamFlag::none};
}

ProjPoint sample_parameter(std::mt19937_64& rng, Eigen::Index size, long bound) {
    std::uniform_int_distribution<long> coord(-bound, bound);
    IntVector q(size);
    while (true) {
        bool zero = true;
        for (Eigen::Index i = 0; i < size; ++i) {
            q(i) = coord(rng);
            zero = zero && q(i) == 0;
        }
        if (!zero) return ProjPoint(q);
    }
}

Witness sample_witness(const Instance& instance, const std::vector<BigInteger>& set, const ConstructOptions& options,
                       std::mt19937_64& rng) {
    if (options.max_attempts < 1) throw InputError("max_attempts must be positive");
    if (options.sample_bound < 1) throw InputError("sample bound must be positive");
    const Eigen::Index size = parameter_size(options.method, set.size());
    AttemptStats stats;
    std::optional<Witness> fallback;
    for (int i = 0; i < options.max_attempts; ++i) {
        Attempt a = attempt(instance, set, options.method, sample_parameter(rng, size, options.sample_bound), stats);
        if (!a.witness) continue;
        if (a.clean) return std::move(*a.witness);
        if (!fallback) fallback = std::move(a.witness);
    }
    if (fallback) return std::move(*fallback);
    throw ConstructionError("no witness nonzero on the set after " + std::to_string(options.max_attempts) + " attempts",
                            stats);
}

}  // namespace

Witness construct_witness(const std::vector<BigInteger>& raw_set, const ConstructOptions& options) {
    const std::vector<BigInteger> set = validated_set(raw_set, 3);
    const Instance instance = make_instance(set, options.method);

    if (options.parameter) {
        const Eigen::Index size = parameter_size(options.method, set.size());
        if (options.parameter->size() != size)
            throw InputError(to_string(options.method) + " parameter for " + std::to_string(set.size()) +
                             " elements needs " + std::to_string(size) + " coordinates, got " +
                             std::to_string(options.parameter->size()));
        AttemptStats stats;
        Attempt a = attempt(instance, set, options.method, *options.parameter, stats);
        if (!a.witness) throw ConstructionError("parameter yields no witness", stats);
        return std::move(*a.witness);
    }

    std::mt19937_64 rng(options.seed);
    return sample_witness(instance, set, options, rng);
}

std::vector<Witness> construct_witnesses(const std::vector<BigInteger>& raw_set, const ConstructOptions& options,
                                         std::size_t count) {
    if (options.parameter) {
        if (count != 1) throw InputError("an explicit parameter determines a single witness");
        return {construct_witness(raw_set, options)};
    }
    const std::vector<BigInteger> set = validated_set(raw_set, 3);
    const Instance instance = make_instance(set, options.method);
    std::mt19937_64 rng(options.seed);
    std::vector<Witness> out;
    for (std::size_t i = 0; i < count; ++i) out.push_back(sample_witness(instance, set, options, rng));
    return out;
}

VerifyReport verify_witness(const std::vector<BigInteger>& set, const Polynomial& poly) {
    validated_set(set, 0);
    std::vector<BigInteger> values;
    values.reserve(set.size());
    for (const auto& a : set) values.push_back(poly(a));

    VerifyReport report;
    for (std::size_t i = 0; i < set.size(); ++i) {
        for (std::size_t j = i + 1; j < set.size(); ++j) {
            PairCheck check{set[i], set[j], values[i] * values[j], std::nullopt};
            check.root = integer_sqrt(check.product);
            if (check.product == 0) ++report.zero_products;
            if (check.root) {
                report.roots[{i, j}] = *check.root;
            } else {
                report.ok = false;
                report.failures.emplace_back(set[i], set[j]);
            }
            report.pairs.push_back(std::move(check));
        }
    }
    return report;
}

bool passes(const std::vector<BigInteger>& set, const Polynomial& poly) {
    std::vector<BigInteger> values;
    values.reserve(set.size());
    for (const auto& a : set) values.push_back(poly(a));
    BigInteger product;
    for (std::size_t i = 0; i < values.size(); ++i)
        for (std::size_t j = i + 1; j < values.size(); ++j) {
            product = values[i] * values[j];
            if (product < 0 || !mpz_perfect_square_p(product.get_mpz_t())) return false;
        }
    return true;
}

Flags classify_trivial(const Polynomial& poly, const std::vector<BigInteger>& set) {
    Flags flags;
    if (poly.degree() == 0 || polynomial_sqrt(poly.primitive_part())) flags.insert(WitnessFlag::trivial_family);
    for (const auto& a : set)
        if (poly(a) == 0) {
            flags.insert(WitnessFlag::zero_value);
            break;
        }
    return flags;
}

BigInteger oracle_ceiling() {
    if (const char* env = std::getenv("DIOSET_ORACLE_CEILING")) {
        try {
            return parse_integer(env);
        } catch (const InputError&) {
            throw InputError(std::string("DIOSET_ORACLE_CEILING is not an integer: ") + env);
        }
    }
    return BigInteger("100000000");
}

BigInteger search_box_size(Eigen::Index max_degree, const BigInteger& max_height) {
    BigInteger side = 2 * max_height + 1;
    BigInteger size;
    mpz_pow_ui(size.get_mpz_t(), side.get_mpz_t(), static_cast<unsigned long>(max_degree + 1));
    return size;
}

namespace {

// All candidates of exact degree e with the given leading coefficient.
std::vector<Polynomial> scan_leading(const std::vector<BigInteger>& set, Eigen::Index e, long lead, long height) {
    std::vector<Polynomial> found;
    IntVector c(e + 1);
    std::vector<long> lower(static_cast<std::size_t>(e), -height);
    c(e) = lead;
    while (true) {
        for (Eigen::Index i = 0; i < e; ++i) c(i) = lower[static_cast<std::size_t>(i)];
        if (content(c) == 1) {
            Polynomial f(c);
            if (passes(set, f)) found.push_back(std::move(f));
        }
        // odometer: c_0 most significant
        Eigen::Index pos = e - 1;
        while (pos >= 0 && lower[static_cast<std::size_t>(pos)] == height) {
            lower[static_cast<std::size_t>(pos)] = -height;
            --pos;
        }
        if (pos < 0) break;
        ++lower[static_cast<std::size_t>(pos)];
    }
    return found;
}

}  // namespace

SearchReport brute_force_search(const std::vector<BigInteger>& raw_set, Eigen::Index max_degree,
                                const BigInteger& max_height, std::optional<BigInteger> ceiling) {
    const std::vector<BigInteger> set = validated_set(raw_set, 2);
    if (max_degree < 0) throw InputError("max_degree must be non-negative");
    if (max_height < 1) throw InputError("max_height must be at least 1");
    const BigInteger limit = ceiling ? *ceiling : oracle_ceiling();
    const BigInteger box = search_box_size(max_degree, max_height);
    if (box > limit)
        throw SearchCeilingError("search box has " + to_string(box) + " candidate vectors, above the ceiling of " +
                                 to_string(limit));
    const long height = max_height.get_si();

    SearchReport report{set, max_degree, max_height, {}, false};
    const unsigned workers = std::max(1u, std::thread::hardware_concurrency());
    for (Eigen::Index e = 0; e <= max_degree; ++e) {
        const long leads = e == 0 ? 1 : height;
        // Contiguous blocks of leading coefficients per worker, merged in order.
        std::vector<std::future<std::vector<Polynomial>>> parts;
        const long per = (leads + workers - 1) / workers;
        for (long begin = 1; begin <= leads; begin += per) {
            const long end = std::min(leads, begin + per - 1);
            parts.push_back(std::async(std::launch::async, [&set, e, begin, end, height] {
                std::vector<Polynomial> out;
                for (long lead = begin; lead <= end; ++lead) {
                    auto part = scan_leading(set, e, lead, height);
                    out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
                }
                return out;
            }));
        }
        for (auto& part : parts) {
            auto found = part.get();
            report.found.insert(report.found.end(), std::make_move_iterator(found.begin()),
                                std::make_move_iterator(found.end()));
        }
    }
    report.exhausted = true;
    return report;
}

}  // namespace dioset
