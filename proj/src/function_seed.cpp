#include "opmono/function_seed.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

namespace opmono {

namespace {

constexpr double kConcavityTol = 1e-12;
constexpr double kChainStrictMargin = 1e-12;

void require_in_domain(const FunctionSeed& seed, double x, const char* what) {
    if (!(x > seed.gamma)) {
        char buf[128];
        std::snprintf(buf, sizeof(buf), "%s: point %.17g is not above domain endpoint %.17g",
                      what, x, seed.gamma);
        throw DomainError(buf);
    }
}

// Simpson rule with an even number of subintervals.
double simpson(const std::function<double(double)>& g, int subintervals) {
    const int n = subintervals + (subintervals % 2);
    const double h = 1.0 / n;
    double s = g(0.0) + g(1.0);
    for (int k = 1; k < n; ++k) s += g(k * h) * (k % 2 ? 4.0 : 2.0);
    return s * h / 3.0;
}

} // namespace

FunctionSeed builtin_seed(const std::string& name, const std::vector<double>& params) {
    if (name == "exp") {
        if (!params.empty()) throw std::invalid_argument("builtin_seed: exp takes no parameters");
        auto e = [](double x) { return std::exp(x); };
        return {"exp", {}, -std::numeric_limits<double>::infinity(), e, e};
    }
    if (name == "pow") {
        if (params.size() != 1)
            throw std::invalid_argument("builtin_seed: pow requires exactly one parameter p");
        const double p = params[0];
        if (!(p > 1.0))
            throw AdmissibilityViolation(
                "builtin_seed: pow requires p > 1; the derivative p*x^(p-1) is not strictly "
                "increasing otherwise");
        return {"pow",
                {p},
                0.0,
                [p](double x) { return std::pow(x, p); },
                [p](double x) { return p * std::pow(x, p - 1.0); }};
    }
    throw std::invalid_argument("builtin_seed: unknown seed name '" + name + "'");
}

ConditionReport verify_conditions(const FunctionSeed& seed, const std::vector<double>& grid) {
    if (grid.size() < 3)
        throw std::invalid_argument("verify_conditions: grid needs at least 3 points");
    if (!std::is_sorted(grid.begin(), grid.end()))
        throw std::invalid_argument("verify_conditions: grid must be sorted ascending");
    for (double x : grid) require_in_domain(seed, x, "verify_conditions");

    const int n = static_cast<int>(grid.size());
    std::vector<double> fp(n);
    for (int i = 0; i < n; ++i) fp[i] = seed.fprime(grid[i]);

    ConditionReport rep;
    std::vector<double> failing;

    // (i) positivity
    rep.positivity_ok = true;
    rep.positivity_margin = std::numeric_limits<double>::infinity();
    for (int i = 0; i < n; ++i) {
        rep.positivity_margin = std::min(rep.positivity_margin, fp[i]);
        if (!(fp[i] > 0.0)) {
            rep.positivity_ok = false;
            failing.push_back(grid[i]);
        }
    }

    // (ii) strict increase across consecutive grid points
    rep.strict_increase_ok = true;
    rep.increase_margin = std::numeric_limits<double>::infinity();
    for (int i = 0; i + 1 < n; ++i) {
        const double step = fp[i + 1] - fp[i];
        rep.increase_margin = std::min(rep.increase_margin, step);
        if (!(step > 0.0)) {
            rep.strict_increase_ok = false;
            failing.push_back(grid[i]);
            failing.push_back(grid[i + 1]);
        }
    }

    // (iii) midpoint log-concavity over all grid pairs
    rep.log_concavity_ok = true;
    rep.concavity_margin = std::numeric_limits<double>::infinity();
    for (int i = 0; i < n; ++i) {
        if (!(fp[i] > 0.0)) continue; // already reported under (i)
        for (int j = i + 1; j < n; ++j) {
            if (!(fp[j] > 0.0)) continue;
            const double mid = 0.5 * (grid[i] + grid[j]);
            const double fmid = seed.fprime(mid);
            const double gap = fmid > 0.0
                                   ? std::log(fmid) - 0.5 * (std::log(fp[i]) + std::log(fp[j]))
                                   : -std::numeric_limits<double>::infinity();
            rep.concavity_margin = std::min(rep.concavity_margin, gap);
            if (!(gap >= -kConcavityTol)) {
                rep.log_concavity_ok = false;
                failing.push_back(grid[i]);
                failing.push_back(grid[j]);
            }
        }
    }

    std::sort(failing.begin(), failing.end());
    failing.erase(std::unique(failing.begin(), failing.end()), failing.end());
    rep.failing_points = std::move(failing);
    return rep;
}

std::vector<double> default_verification_grid(const FunctionSeed& seed, int points) {
    if (points < 3)
        throw std::invalid_argument("default_verification_grid: need at least 3 points");
    const double lo = std::max(seed.gamma + 0.01, -10.0);
    const double hi = 10.0;
    std::vector<double> grid(points);
    for (int i = 0; i < points; ++i)
        grid[i] = lo + (hi - lo) * static_cast<double>(i) / (points - 1);
    return grid;
}

ChainCheck chain_inequality_check(const FunctionSeed& seed, double x, double y, int quad_points) {
    if (x == y) throw DegeneratePair("chain_inequality_check: x == y");
    if (quad_points < 16)
        throw std::invalid_argument("chain_inequality_check: quad_points must be >= 16");
    require_in_domain(seed, x, "chain_inequality_check");
    require_in_domain(seed, y, "chain_inequality_check");

    const double lhs = 0.5 * (std::log(seed.fprime(x)) + std::log(seed.fprime(y)));
    const auto segment = [&](double t) { return t * x + (1.0 - t) * y; };
    const double mid =
        simpson([&](double t) { return std::log(seed.fprime(segment(t))); }, quad_points);
    const double rhs =
        std::log(simpson([&](double t) { return seed.fprime(segment(t)); }, quad_points));

    const bool ok = (lhs <= mid + kChainStrictMargin) && (mid < rhs - kChainStrictMargin);
    return {lhs, mid, rhs, ok};
}

} // namespace opmono
