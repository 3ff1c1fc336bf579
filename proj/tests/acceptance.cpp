// Acceptance suite: property-based checks at desk scale, one line per
// criterion, nonzero exit iff any criterion fails. Budgets are wall-clock.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <random>
#include <string>
#include <vector>

#include "opmono/centrality.hpp"
#include "opmono/matrix_calculus.hpp"
#include "opmono/witness.hpp"
#include "test_support.hpp"

using namespace opmono;
using opmono::testing::builtin_test_seeds;
using opmono::testing::random_pair;
using opmono::testing::sample_window;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
    double seconds = 0.0;
};

int failures = 0;

template <typename F>
void criterion(int id, const std::string& label, double budget_s, F&& body) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    body(o);
    o.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (budget_s > 0.0 && o.seconds >= budget_s) {
        o.pass = false;
        o.detail += " [over time budget]";
    }
    std::printf("[%s] %d. %s: %s (%.3f s%s)\n", o.pass ? "PASS" : "FAIL", id, label.c_str(),
                o.detail.c_str(), o.seconds,
                budget_s > 0.0 ? (" / " + std::to_string(budget_s).substr(0, 4) + " s").c_str()
                               : "");
    if (!o.pass) ++failures;
}

std::string fmt(const char* f, double a) {
    char buf[96];
    std::snprintf(buf, sizeof(buf), f, a);
    return buf;
}

// Results of the decide/verify round-trip shared by criteria 4 and 6.
struct RoundTripStats {
    bool all_ok = true;
    int instances = 0;
    double worst_delta = std::numeric_limits<double>::infinity();
    double worst_gap = 0.0;       // max |neg_eig + delta| overshoot above 1e-10
    double worst_dim_dev = 0.0;   // max |cert.delta - 2x2 delta|
};

RoundTripStats run_certificate_roundtrip() {
    RoundTripStats st;
    for (const auto& seed : builtin_test_seeds()) {
        std::mt19937_64 rng(4242);
        std::uniform_int_distribution<int> dim(2, 8);
        int made = 0;
        std::uint64_t offset = 0;
        while (made < 200) {
            const int n = dim(rng);
            auto A = testing::random_in_domain(seed, n, 100000 + offset++);
            if (testing::spectral_width(A) <= 0.1) continue;
            ++made;
            ++st.instances;

            auto v = decide(seed, A);
            if (v.verdict != Verdict::NonCentral) {
                st.all_ok = false;
                continue;
            }
            const auto& cert = *v.certificate;
            st.worst_delta = std::min(st.worst_delta, cert.delta);
            if (!(cert.delta > 0.0)) st.all_ok = false;
            if (!(min_eigenvalue(cert.B) >= -1e-12)) st.all_ok = false;
            if (!(cert.neg_eig <= -cert.delta + 1e-10)) st.all_ok = false;
            if (!verify_certificate(seed, A, cert).ok) st.all_ok = false;

            const auto wit = witness_2x2(seed, cert.x, cert.y);
            st.worst_dim_dev = std::max(st.worst_dim_dev, std::abs(cert.delta - wit.delta));
        }
    }
    return st;
}

} // namespace

int main() {
    std::printf("opmono acceptance suite\n");

    criterion(1, "slope-matrix determinant negativity", 1.0, [](Outcome& o) {
        double worst = -std::numeric_limits<double>::infinity();
        int checked = 0;
        for (const auto& seed : builtin_test_seeds()) {
            std::mt19937_64 rng(101);
            const auto w = sample_window(seed);
            for (int i = 0; i < 1000; ++i) {
                auto [x, y] = random_pair(rng, w, 1e-3, 10.0);
                const double det = build_L(seed, x, y).det();
                worst = std::max(worst, det);
                ++checked;
                if (!(det < 0.0)) o.pass = false;
            }
        }
        o.detail = std::to_string(checked) + " pairs, worst det " + fmt("%.3e", worst);
    });

    criterion(2, "log-concavity inequality chain", 5.0, [](Outcome& o) {
        double worst_strict = std::numeric_limits<double>::infinity();
        for (const auto& seed : builtin_test_seeds()) {
            std::mt19937_64 rng(202);
            const auto w = sample_window(seed);
            for (int i = 0; i < 500; ++i) {
                auto [x, y] = random_pair(rng, w, 1e-3, 10.0);
                const auto c = chain_inequality_check(seed, x, y);
                if (!c.ok) o.pass = false;
                if (std::abs(x - y) >= 0.1) {
                    worst_strict = std::min(worst_strict, c.rhs - c.mid);
                    if (!(c.rhs - c.mid > 1e-10)) o.pass = false;
                }
            }
        }
        o.detail = "2000 pairs, min strict margin " + fmt("%.3e", worst_strict);
    });

    criterion(3, "derivative formula vs finite differences", 10.0, [](Outcome& o) {
        const double h = 1e-5;
        double worst = 0.0;
        for (const auto& seed : builtin_test_seeds()) {
            for (int i = 0; i < 100; ++i) {
                auto A = testing::random_in_domain(seed, 5, 300000 + i);
                auto C = random_hermitian(5, 310000 + i);
                auto D = frechet(seed, A, C);
                auto F = (1.0 / (2.0 * h)) * (apply(seed, A + h * C) - apply(seed, A - h * C));
                double err = 0.0;
                for (int r = 0; r < 5; ++r)
                    for (int c = 0; c < 5; ++c) err += std::norm(D(r, c) - F(r, c));
                const double rel = std::sqrt(err) / std::max(1.0, D.frobenius_norm());
                worst = std::max(worst, rel);
                if (!(rel <= 1e-6)) o.pass = false;
            }
        }
        o.detail = "400 pairs at n=5, worst relative error " + fmt("%.3e", worst);
    });

    RoundTripStats rt; // shared with criterion 6, which reuses the same instances

    criterion(4, "non-scalar inputs yield verified violation certificates", 30.0,
              [&](Outcome& o) {
                  rt = run_certificate_roundtrip();
                  o.pass = rt.all_ok && rt.instances == 800;
                  o.detail = std::to_string(rt.instances) + " instances, min delta " +
                             fmt("%.3e", rt.worst_delta);
              });

    criterion(5, "commuting ordered pairs are preserved", 10.0, [](Outcome& o) {
        double worst = std::numeric_limits<double>::infinity();
        for (const auto& seed : builtin_test_seeds()) {
            std::mt19937_64 rng(505);
            std::uniform_real_distribution<double> ut(1e-3, 1.0);
            std::uniform_int_distribution<int> dim(2, 6);
            const double c = std::isfinite(seed.gamma) ? seed.gamma + 0.8 : -0.3;
            for (int i = 0; i < 500; ++i) {
                const int n = dim(rng);
                auto A = c * HermitianMatrix::identity(n);
                auto P = testing::random_psd(n, 510000 + i, 2.0);
                const double m =
                    min_eigenvalue(apply(seed, A + ut(rng) * P) - apply(seed, A));
                worst = std::min(worst, m);
                if (!(m >= -1e-10)) o.pass = false;
            }
            const double lo = std::isfinite(seed.gamma) ? seed.gamma + 0.5 : -1.5;
            for (int i = 0; i < 200; ++i) {
                const int n = dim(rng);
                auto [a, b] = testing::random_commuting_ordered(n, 520000 + i, lo);
                if (!monotone_commuting_check(seed, a, b)) o.pass = false;
            }
        }
        o.detail = "4 seeds x (500 scalar + 200 commuting), worst margin " +
                   fmt("%.3e", worst);
    });

    criterion(6, "certificate margin is dimension independent", 0.0, [&](Outcome& o) {
        o.pass = rt.worst_dim_dev <= 1e-10 && rt.instances == 800;
        o.detail = "max |delta_n - delta_2x2| = " + fmt("%.3e", rt.worst_dim_dev) +
                   " over criterion-4 instances";
    });

    criterion(7, "golden regressions", 0.0, [](Outcome& o) {
        auto p2 = builtin_seed("pow", {2.0});
        auto e = builtin_seed("exp");
        build_L(p2, 1.0, 3.0); // warm-up before per-case timing

        const auto t1 = std::chrono::steady_clock::now();
        const auto L = build_L(p2, 1.0, 3.0);
        const auto t2 = std::chrono::steady_clock::now();
        if (std::abs(L.xx - 2.0) > 1e-12 || std::abs(L.xy - 4.0) > 1e-12 ||
            std::abs(L.yy - 6.0) > 1e-12 || std::abs(L.det() + 4.0) > 1e-12)
            o.pass = false;

        const auto t3 = std::chrono::steady_clock::now();
        const double em1 = std::exp(1.0) - 1.0;
        const double det_e = build_L(e, 0.0, 1.0).det();
        const auto t4 = std::chrono::steady_clock::now();
        if (std::abs(det_e - (std::exp(1.0) - em1 * em1)) > 1e-9) o.pass = false;

        const auto t5 = std::chrono::steady_clock::now();
        auto A = HermitianMatrix::from_entries(2, {cplx(1.0), cplx(1.0), cplx(1.0), cplx(1.0)});
        auto B = HermitianMatrix::from_entries(2, {cplx(2.0), cplx(1.0), cplx(1.0), cplx(1.0)});
        const bool ordered = min_eigenvalue(B - A) >= -1e-14;
        auto sq = [](const HermitianMatrix& m) {
            return symmetrized(m.dim(), matmul(m.dim(), m.entries(), m.entries()));
        };
        const bool square_violates = min_eigenvalue(sq(B) - sq(A)) < 0.0;
        const auto t6 = std::chrono::steady_clock::now();
        if (!ordered || !square_violates) o.pass = false;

        const double ms1 = std::chrono::duration<double, std::milli>(t2 - t1).count();
        const double ms2 = std::chrono::duration<double, std::milli>(t4 - t3).count();
        const double ms3 = std::chrono::duration<double, std::milli>(t6 - t5).count();
        if (ms1 >= 1.0 || ms2 >= 1.0 || ms3 >= 1.0) o.pass = false;
        char buf[128];
        std::snprintf(buf, sizeof(buf),
                      "slope matrices and square counterexample (%.3f/%.3f/%.3f ms)", ms1, ms2,
                      ms3);
        o.detail = buf;
    });

    criterion(8, "inadmissible seeds are rejected", 0.0, [](Outcome& o) {
        bool rejected = false;
        try {
            builtin_seed("pow", {1.0});
        } catch (const AdmissibilityViolation&) {
            rejected = true;
        }
        if (!rejected) o.pass = false;

        const FunctionSeed expsq{"expsq",
                                 {},
                                 -std::numeric_limits<double>::infinity(),
                                 [](double x) { return x; },
                                 [](double x) { return std::exp(x * x); }};
        const auto rep = verify_conditions(expsq, {0.0, 1.0, 2.0});
        if (rep.log_concavity_ok || rep.all_ok()) o.pass = false;
        if (!rep.positivity_ok || !rep.strict_increase_ok) o.pass = false;
        o.detail = "pow p=1 rejected at construction; log-convex derivative fails condition "
                   "(iii) with margin " +
                   fmt("%.3f", rep.concavity_margin);
    });

    std::printf("ACCEPTANCE: %d/8 criteria passed\n", 8 - failures);
    return failures;
}
