// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include "dioset/errors.hpp"
#include "dioset/forge.hpp"
#include "dioset/linalg.hpp"
#include "dioset/twist.hpp"

#include "oracles.hpp"

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <optional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

using namespace dioset;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;

    void require(bool condition, const std::string& what) {
        if (!condition && ok) detail = what;
        ok = ok && condition;
    }
};

std::vector<BigInteger> S(std::initializer_list<long> values) {
    std::vector<BigInteger> out;
    for (long v : values) out.emplace_back(v);
    return out;
}

ConstructOptions with_param(Method method, ProjPoint q) {
    ConstructOptions o;
    o.method = method;
    o.parameter = std::move(q);
    return o;
}

ProjPoint random_param(std::mt19937_64& rng, Eigen::Index size, long bound) {
    IntVector v(size);
    do {
        for (Eigen::Index i = 0; i < size; ++i) v(i) = oracle::uniform(rng, -bound, bound);
    } while (v.isZero());
    return ProjPoint(v);
}

PointConfig random_config(std::mt19937_64& rng, std::size_t nodes, Eigen::Index d) {
    const auto xs = oracle::distinct_integers(rng, nodes, -15, 15);
    RatVector v(static_cast<Eigen::Index>(nodes));
    for (std::size_t i = 0; i < nodes; ++i) v(static_cast<Eigen::Index>(i)) = xs[i];
    return PointConfig(v, d);
}

bool oracle_passes(const std::vector<BigInteger>& set, const Polynomial& f) {
    for (std::size_t i = 0; i < set.size(); ++i)
        for (std::size_t j = i + 1; j < set.size(); ++j) {
            BigInteger root;
            if (!oracle::bisection_is_square(f(set[i]) * f(set[j]), root)) return false;
        }
    return true;
}

std::string shell(const std::string& command, int& code) {
    std::string out;
    FILE* pipe = popen(command.c_str(), "r");
    if (!pipe) {
        code = -1;
        return out;
    }
    char buffer[4096];
    std::size_t got;
    while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) out.append(buffer, got);
    const int status = pclose(pipe);
    code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return out;
}

Outcome golden_quadric() {
    Outcome r;
    const Witness w = construct_witness(S({0, 1, 2}), with_param(Method::quadric, ProjPoint({3, 1})));
    r.require(w.poly == Polynomial({1, 24}), "f = " + w.poly.pretty());
    r.require(w.pair_roots == PairRoots{{{0, 1}, 5}, {{0, 2}, 7}, {{1, 2}, 35}}, "pair roots");
    r.require(oracle_passes(w.set, w.poly), "bisection oracle");
    // Y = 2 mu q - nu P with mu, nu from permutation-sum determinants
    const PointConfig c = PointConfig::from_integers(S({0, 1, 2}), 1);
    RatVector q(3), q2(3);
    q << 3, 1, 0;
    q2 << 9, 1, 0;
    const BigRational mu = oracle::leibniz_det(c.bracket_matrix(q, 2));
    const BigRational nu = oracle::leibniz_det(c.bracket_matrix(q2, 2));
    RatVector y(3);
    for (Eigen::Index i = 0; i < 3; ++i) y(i) = 2 * mu * q(i) - nu;
    r.require(w.w_point && w.w_point->coords() == ProjPoint::from_rationals(y), "W-point vs determinant oracle");
    return r;
}

Outcome golden_plane() {
    Outcome r;
    const Witness w = construct_witness(S({0, 1, 2, 3, 4}), with_param(Method::plane, ProjPoint({1, 2, 0})));
    r.require(w.poly == Polynomial({2, 4, 2}), "f = " + w.poly.pretty());
    r.require(w.w_point && w.w_point->coords() == ProjPoint({1, 2, -3, -4, -5}), "W-point");
    const PointConfig c = PointConfig::from_integers(S({0, 1, 2, 3, 4}), 2);
    const ParamResult p = param_plane(c, ProjPoint({1, 2, 0}));
    r.require(ProjPoint::from_rationals(p.multipliers) == ProjPoint({-1, -1, 2}), "mu");
    RatVector y2(5);
    y2 << 1, 4, 9, 16, 25;
    for (const auto& q : c.quadrics()) r.require(q.apply(y2) == 0, "quadric does not vanish");
    r.require(oracle_passes(w.set, w.poly), "bisection oracle");
    return r;
}

Outcome soundness_sweep() {
    Outcome r;
    std::mt19937_64 rng(2024);
    int passed = 0;
    for (int trial = 0; trial < 100; ++trial) {
        const auto set = oracle::distinct_integers(rng, 3 + static_cast<std::size_t>(oracle::uniform(rng, 0, 7)), -20, 20);
        ConstructOptions o;
        o.seed = static_cast<std::uint64_t>(trial);
        const Witness w = construct_witness(set, o);
        if (verify_witness(w.set, w.poly).ok) ++passed;
    }
    r.require(passed == 100, std::to_string(passed) + "/100 verified");
    if (r.ok) r.detail = "100/100 verified";
    return r;
}

Outcome degree_claims() {
    Outcome r;
    std::mt19937_64 rng(4);
    for (Eigen::Index k = 1; k <= 3; ++k) {
        const std::size_t size = static_cast<std::size_t>(3 * k + 2);
        const Eigen::Index n = static_cast<Eigen::Index>(size) - 1;
        for (int s = 0; s < 3; ++s) {
            const auto set = oracle::distinct_integers(rng, size, -20, 20);
            bool plane_exact = false, quadric_exact = false;
            for (int attempt = 0; attempt < 20; ++attempt) {
                ConstructOptions o;
                o.seed = static_cast<std::uint64_t>(attempt);
                o.method = Method::plane;
                const Witness pw = construct_witness(set, o);
                r.require(pw.poly.degree() <= 2 * k, "plane degree above 2k");
                r.require(2 * pw.poly.degree() <= 4 * (n / 3), "deg F_f above 4 floor(n/3)");
                plane_exact = plane_exact || pw.poly.degree() == 2 * k;
                o.method = Method::quadric;
                const Witness qw = construct_witness(set, o);
                r.require(qw.poly.degree() <= n - 1, "quadric degree above |S|-2");
                quadric_exact = quadric_exact || qw.poly.degree() == n - 1;
            }
            r.require(plane_exact, "plane never reached degree 2k");
            r.require(quadric_exact, "quadric never reached degree |S|-2");
        }
    }
    return r;
}

Outcome round_trips() {
    Outcome r;
    std::mt19937_64 rng(5);
    long quadric_inv = 0, plane_inv = 0, psi_phi = 0, phi_psi = 0, total_q = 0, total_p = 0;
    long psi_phi_total = 0;
    std::set<Eigen::Index> failing_degrees;
    auto check_v_w = [&](const WPoint& w) {
        const VPoint v = psi_w_to_v(w);
        if (v.degenerate()) return;
        ++psi_phi_total;
        const WPoint back = phi_v_to_w(v);
        if (equal_up_to_signs(back.coords(), w.coords())) ++phi_psi;
        if (psi_w_to_v(phi_v_to_w(v)).coords() == v.coords())
            ++psi_phi;
        else
            failing_degrees.insert(v.config().degree());
    };
    for (Eigen::Index d = 1; d <= 4; ++d) {
        const PointConfig c = random_config(rng, static_cast<std::size_t>(d + 2), d);
        for (int i = 0; i < 100; ++i) {
            const ProjPoint q = random_param(rng, d + 1, 30);
            ParamResult p = [&] {
                try {
                    return param_quadric(c, q);
                } catch (const DegenerateParameterError&) {
                    return ParamResult{WPoint(c, ProjPoint(IntVector::Ones(d + 2))), ParamFlag::base_point, {}};
                }
            }();
            if (p.flag != ParamFlag::none) continue;
            ++total_q;
            if (param_quadric_inv(p.point) == q) ++quadric_inv;
            check_v_w(p.point);
        }
    }
    for (Eigen::Index k = 1; k <= 3; ++k) {
        const PointConfig c = random_config(rng, static_cast<std::size_t>(3 * k + 2), 2 * k);
        for (int i = 0; i < 100; ++i) {
            const ProjPoint q = random_param(rng, 2 * k + 1, 30);
            ParamResult p = [&] {
                try {
                    return param_plane(c, q);
                } catch (const DegenerateParameterError&) {
                    return ParamResult{WPoint(c, ProjPoint(IntVector::Ones(3 * k + 2))), ParamFlag::base_point, {}};
                }
            }();
            if (p.flag != ParamFlag::none) continue;
            ++total_p;
            if (param_plane_inv(p.point) == q) ++plane_inv;
            check_v_w(p.point);
        }
    }
    r.require(total_q >= 350 && total_p >= 250, "too few generic points");
    r.require(quadric_inv == total_q, "quadric inverse " + std::to_string(quadric_inv) + "/" + std::to_string(total_q));
    r.require(plane_inv == total_p, "plane inverse " + std::to_string(plane_inv) + "/" + std::to_string(total_p));
    r.require(phi_psi == psi_phi_total, "phi.psi up to signs " + std::to_string(phi_psi) + "/" + std::to_string(psi_phi_total));
    std::string degrees;
    for (auto d : failing_degrees) degrees += (degrees.empty() ? "" : ",") + std::to_string(d);
    r.require(psi_phi == psi_phi_total, "psi.phi exact " + std::to_string(psi_phi) + "/" + std::to_string(psi_phi_total) +
                                            " (fails at d = " + degrees + ": certificate comes back as -z)");
    return r;
}

Outcome psi_identity() {
    Outcome r;
    std::mt19937_64 rng(6);
    int checked = 0;
    while (checked < 200) {
        const bool plane = checked % 2;
        const Eigen::Index k = 1 + checked % 3;
        const Eigen::Index d = plane ? 2 * k : 1 + checked % 4;
        const PointConfig c =
            plane ? random_config(rng, static_cast<std::size_t>(3 * k + 2), d) : random_config(rng, static_cast<std::size_t>(d + 2), d);
        const ProjPoint q = random_param(rng, plane ? 2 * k + 1 : d + 1, 20);
        std::optional<WPoint> w;
        try {
            w = plane ? param_plane(c, q).point : param_quadric(c, q).point;
        } catch (const DegenerateParameterError&) {
            continue;
        }
        const PsiImage img = psi_image(*w);
        const BigRational sign = d % 2 ? -1 : 1;
        for (Eigen::Index i = 0; i <= c.n(); ++i) {
            const BigRational y = w->coords()[i];
            r.require(evaluate(img.poly, c.node(i)) == sign * img.vandermonde_det * y * y, "identity fails");
        }
        r.require(img.vandermonde_det == c.vandermonde_det(), "D");
        ++checked;
    }
    return r;
}

Outcome structural_invariants() {
    Outcome r;
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 60; ++trial) {
        const Eigen::Index d = 1 + trial % 6;
        const PointConfig c = random_config(rng, static_cast<std::size_t>(d + 2 + trial % 4), d);
        for (const auto& q : c.quadrics())
            for (Eigen::Index t = 0; t <= d; ++t) r.require(q.apply(power_point(c, t)) == 0, "power row");
        r.require(on_W(c, ProjPoint(IntVector::Ones(c.n() + 1))), "P not on W");
        for (Eigen::Index t = 0; 2 * t <= d; ++t)
            r.require(on_W(c, ProjPoint::from_rationals(power_point(c, t))), "T_t not on W");
    }
    return r;
}

Outcome degenerate_locus() {
    Outcome r;
    const PointConfig c = PointConfig::from_integers(S({0, 1, 2, 3, 4}), 2);
    RatMatrix expected(2, 3);
    expected << -4, 0, -2, -12, 0, -6;
    r.require(build_A(c, ProjPoint({1, 0, 0})) == expected, "A matrix");
    bool threw = false;
    try {
        param_plane(c, ProjPoint({1, 0, 0}));
    } catch (const DegenerateParameterError&) {
        threw = true;
    }
    r.require(threw, "no degenerate-parameter error");
    const PointConfig line = PointConfig::from_integers(S({0, 1, 2}), 1);
    const ParamResult p = param_quadric(line, ProjPoint({2, 1}));
    r.require(p.flag == ParamFlag::base_point, "not flagged");
    r.require(p.point.is_base_point() && p.point.coords() == ProjPoint({1, 1, 1}), "not the base point");
    return r;
}

Outcome oracle_agreement() {
    Outcome r;
    const auto set = S({0, 1, 2});
    const SearchReport report = brute_force_search(set, 1, 30);
    r.require(report.exhausted, "not exhausted");
    std::set<Polynomial> found(report.found.begin(), report.found.end());
    for (const auto& f : report.found) r.require(verify_witness(set, f).ok, "reported poly fails verify");
    // full enumeration of the box, checked with verify_witness
    std::set<Polynomial> expected;
    for (long a = -30; a <= 30; ++a)
        for (long b = -30; b <= 30; ++b) {
            if (a == 0 && b == 0) continue;
            const Polynomial f({a, b});
            if ((b > 0 || (b == 0 && a > 0)) && f.content() == 1 && verify_witness(set, f).ok)
                expected.insert(f);
        }
    r.require(found == expected, "search and enumeration disagree");
    r.require(found.count(Polynomial({1, 24})) == 1, "24x + 1 missing");
    r.detail = r.ok ? std::to_string(found.size()) + " polynomials" : r.detail;
    return r;
}

Outcome twist_points_check() {
    Outcome r;
    std::mt19937_64 rng(10);
    for (int trial = 0; trial < 50; ++trial) {
        const auto set = oracle::distinct_integers(rng, 3 + static_cast<std::size_t>(trial % 7), -20, 20);
        ConstructOptions o;
        o.seed = static_cast<std::uint64_t>(trial);
        o.method = trial % 2 ? Method::plane : Method::quadric;
        const Witness w = construct_witness(set, o);
        const TwistPointSet t = twist_points(w);
        r.require(t.points.size() == set.size(), "point count");
        r.require(t.points[0].x == BigRational(w.set[0]) && t.points[0].y == 1, "P_0");
        for (std::size_t i = 0; i < t.points.size(); ++i) {
            const BigRational fx = w.poly(t.points[i].x);
            r.require(t.curve.twist_scalar * t.points[i].y * t.points[i].y == fx, "off curve");
        }
    }
    return r;
}

Outcome distinctness() {
    Outcome r;
    const auto set = S({-7, -2, 3, 5, 11});
    std::mt19937_64 rng(11);
    std::set<ProjPoint, bool (*)(const ProjPoint&, const ProjPoint&)> params(
        [](const ProjPoint& a, const ProjPoint& b) { return std::lexicographical_compare(a.coords().begin(), a.coords().end(), b.coords().begin(), b.coords().end()); });
    std::set<Polynomial> polys;
    while (params.size() < 100) {
        const ProjPoint q = random_param(rng, 4, 30);
        if (!params.insert(q).second) continue;
        try {
            polys.insert(construct_witness(set, with_param(Method::quadric, q)).poly.primitive_part());
        } catch (const ConstructionError&) {
        }
    }
    r.require(polys.size() >= 10, std::to_string(polys.size()) + " distinct");
    if (r.ok) r.detail = std::to_string(polys.size()) + " distinct polynomials";
    return r;
}

Outcome cli_determinism() {
    Outcome r;
    const std::string cli = std::string("'") + DIOSET_CLI_PATH + "'";
    const std::vector<std::string> invocations = {
        "construct --set 0,1,2 --param 3,1",
        "construct --set=-5,0,2,9,13 --seed 3 --count 4 --emit-twist",
        "construct --set 1,4,6,10,12,19,20 --method plane --seed 17 --count 3",
        "construct --set 2,3,5,7,11,13,17,19 --seed 8",
    };
    for (const auto& args : invocations) {
        int a_code = 0, b_code = 0, pipe_code = 0;
        const std::string a = shell(cli + " " + args, a_code);
        const std::string b = shell(cli + " " + args, b_code);
        r.require(a_code == 0 && b_code == 0, "construct failed: " + args);
        r.require(!a.empty() && a == b, "output differs: " + args);
        shell(cli + " " + args + " | " + cli + " verify --from-json >/dev/null", pipe_code);
        r.require(pipe_code == 0, "pipe exit " + std::to_string(pipe_code) + ": " + args);
    }
    return r;
}

struct Criterion {
    int number;
    std::string name;
    std::function<Outcome()> run;
    double limit_seconds;  // 0: no limit
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "golden quadric example", golden_quadric, 0.1},
        {2, "golden plane example", golden_plane, 0.1},
        {3, "soundness sweep", soundness_sweep, 10},
        {4, "degree claims", degree_claims, 0},
        {5, "birational round trips", round_trips, 30},
        {6, "psi determinant identity", psi_identity, 0},
        {7, "structural invariants", structural_invariants, 0},
        {8, "degenerate locus", degenerate_locus, 0},
        {9, "brute-force oracle agreement", oracle_agreement, 60},
        {10, "twist points", twist_points_check, 0},
        {11, "distinct polynomials", distinctness, 0},
        {12, "CLI determinism and pipe", cli_determinism, 0},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.ok = false;
            o.detail = std::string("exception: ") + e.what();
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.limit_seconds > 0 && seconds >= c.limit_seconds) {
            o.ok = false;
            o.detail += (o.detail.empty() ? "" : "; ") + std::string("over time limit");
        }
        std::ostringstream line;
        line << (o.ok ? "PASS" : "FAIL") << " [" << c.number << "] " << c.name << " (" << std::fixed;
        line.precision(3);
        line << seconds << " s)";
        if (!o.detail.empty()) line << ": " << o.detail;
        std::cout << line.str() << std::endl;
        failures += o.ok ? 0 : 1;
    }
    std::cout << (criteria.size() - static_cast<std::size_t>(failures)) << "/" << criteria.size() << " criteria passed"
              << std::endl;
    return failures == 0 ? 0 : 1;
}
