// opmono — admissibility checks, order-violation witnesses, centrality
// decisions, and randomized batch experiments over Hermitian matrices.
//
// JSON goes to stdout, diagnostics to stderr. Exit codes:
//   0  success (conditions pass / Central / certificate verified / batch clean)
//   1  negative result (a violation witness was found, or verification failed)
//   2  usage or parse error (bad flags, fnspec, matrix file, degenerate pair)
//   3  numerical failure (domain violation, eigensolver or search failure, I/O)

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "opmono/centrality.hpp"
#include "opmono/function_seed.hpp"
#include "opmono/hermitian.hpp"
#include "opmono/json_io.hpp"
#include "opmono/matrix_calculus.hpp"
#include "opmono/witness.hpp"

namespace {

using nlohmann::json;
using namespace opmono;

// I/O failures map to exit code 3, unlike malformed input (2).
class IoError : public Error {
public:
    using Error::Error;
};

FunctionSeed parse_fnspec(const std::string& spec) {
    if (spec == "exp") return builtin_seed("exp");
    if (spec.rfind("pow:p=", 0) == 0) {
        const std::string v = spec.substr(6);
        std::size_t pos = 0;
        const double p = std::stod(v, &pos);
        if (pos != v.size())
            throw std::invalid_argument("fnspec: trailing characters after exponent in '" +
                                        spec + "'");
        return builtin_seed("pow", {p});
    }
    throw std::invalid_argument("fnspec must be 'exp' or 'pow:p=<real>' (got '" + spec + "')");
}

int max_dimension() {
    const char* env = std::getenv("OPMONO_MAX_N");
    if (env == nullptr || *env == '\0') return 256;
    std::size_t pos = 0;
    const int cap = std::stoi(env, &pos);
    if (pos != std::string(env).size() || cap < 1)
        throw std::invalid_argument("OPMONO_MAX_N must be a positive integer");
    return cap;
}

HermitianMatrix load_matrix(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open matrix file '" + path + "'");
    HermitianMatrix A = matrix_from_json(json::parse(in));
    if (A.dim() > max_dimension())
        throw std::invalid_argument("matrix dimension exceeds OPMONO_MAX_N");
    return A;
}

void emit(const json& j) {
    std::cout << j.dump(2) << "\n";
}

int run_check_fn(const FunctionSeed& seed, std::optional<double> lo, std::optional<double> hi,
                 int points) {
    std::vector<double> grid;
    if (lo || hi) {
        const double a = lo.value_or(std::max(seed.gamma + 0.01, -10.0));
        const double b = hi.value_or(10.0);
        if (!(a < b)) throw std::invalid_argument("check-fn: --grid-lo must be below --grid-hi");
        if (points < 3) throw std::invalid_argument("check-fn: --grid-n must be >= 3");
        grid.resize(points);
        for (int i = 0; i < points; ++i)
            grid[i] = a + (b - a) * static_cast<double>(i) / (points - 1);
    } else {
        grid = default_verification_grid(seed, points);
    }
    const ConditionReport rep = verify_conditions(seed, grid);
    emit(report_to_json(rep));
    return rep.all_ok() ? 0 : 1;
}

int run_witness(const FunctionSeed& seed, double x, double y) {
    if (!(x > seed.gamma) || !(y > seed.gamma))
        throw std::invalid_argument("witness: both points must lie strictly above the domain "
                                    "endpoint");
    emit(witness_to_json(witness_2x2(seed, x, y)));
    return 0;
}

int run_decide(const FunctionSeed& seed, const std::string& matrix_path) {
    const HermitianMatrix A = load_matrix(matrix_path);
    const CentralityVerdict v = decide(seed, A);
    emit(verdict_to_json(v));
    return v.verdict == Verdict::Central ? 0 : 1;
}

int run_verify(const FunctionSeed& seed, const std::string& matrix_path,
               const std::string& cert_path) {
    const HermitianMatrix A = load_matrix(matrix_path);
    std::ifstream in(cert_path);
    if (!in) throw std::invalid_argument("cannot open certificate file '" + cert_path + "'");
    const ViolationCertificate cert = certificate_from_json(json::parse(in));
    const CertificateCheck check = verify_certificate(seed, A, cert);
    emit(json{{"ok", check.ok}, {"reasons", check.reasons}});
    return check.ok ? 0 : 1;
}

struct BatchInstance {
    std::uint64_t seed;
    int n;
    double width;
    double delta;
    double t0;
    double neg_eig;
    bool verified;
};

void emit_csv(const std::vector<BatchInstance>& instances, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw IoError("batch: cannot write CSV file '" + path + "'");
    out << "seed,n,width,delta,t0,neg_eig,verified\n";
    char buf[256];
    for (const auto& r : instances) {
        std::snprintf(buf, sizeof(buf), "%llu,%d,%.17g,%.17g,%.17g,%.17g,%s\n",
                      static_cast<unsigned long long>(r.seed), r.n, r.width, r.delta, r.t0,
                      r.neg_eig, r.verified ? "true" : "false");
        out << buf;
    }
    if (!out.flush()) throw IoError("batch: write to '" + path + "' failed");
}

int run_batch(const FunctionSeed& seed, const std::string& fnspec, int n, int count,
              std::uint64_t base_seed, const std::string& csv_path) {
    if (n < 1 || n > max_dimension())
        throw std::invalid_argument("batch: --n must be in [1, OPMONO_MAX_N]");
    if (count < 0) throw std::invalid_argument("batch: --count must be >= 0");

    std::vector<BatchInstance> instances;
    instances.reserve(count);
    for (int i = 0; i < count; ++i) {
        const std::uint64_t inst_seed = base_seed + static_cast<std::uint64_t>(i);
        HermitianMatrix A = random_hermitian(n, inst_seed);
        if (std::isfinite(seed.gamma)) {
            // Place the spectrum inside a bounded-below domain, width unchanged.
            const double shift = seed.gamma + 1.0 - min_eigenvalue(A);
            A = A + shift * HermitianMatrix::identity(n);
        }
        const CentralityVerdict v = decide(seed, A);
        if (v.verdict == Verdict::Central) {
            instances.push_back({inst_seed, n, v.spectral_width, 0.0, 0.0, 0.0, true});
        } else {
            const auto& cert = *v.certificate;
            const bool ok = verify_certificate(seed, A, cert).ok;
            instances.push_back(
                {inst_seed, n, v.spectral_width, cert.delta, cert.t0, cert.neg_eig, ok});
        }
    }

    json inst_json = json::array();
    std::vector<double> deltas;
    int verified = 0;
    for (const auto& r : instances) {
        inst_json.push_back({{"seed", r.seed},
                             {"n", r.n},
                             {"width", r.width},
                             {"delta", r.delta},
                             {"t0", r.t0},
                             {"neg_eig", r.neg_eig},
                             {"verified", r.verified}});
        if (r.verified) ++verified;
        if (r.delta > 0.0) deltas.push_back(r.delta);
    }
    std::sort(deltas.begin(), deltas.end());
    json aggregates = {{"count", count},
                       {"verified_fraction",
                        count > 0 ? static_cast<double>(verified) / count : 1.0}};
    if (!deltas.empty()) {
        const std::size_t m = deltas.size();
        aggregates["min_delta"] = deltas.front();
        aggregates["median_delta"] =
            m % 2 ? deltas[m / 2] : 0.5 * (deltas[m / 2 - 1] + deltas[m / 2]);
    } else {
        aggregates["min_delta"] = nullptr;
        aggregates["median_delta"] = nullptr;
    }

    emit(json{{"function", fnspec},
              {"n", n},
              {"count", count},
              {"seed", base_seed},
              {"instances", std::move(inst_json)},
              {"aggregates", std::move(aggregates)}});

    if (!csv_path.empty()) emit_csv(instances, csv_path);
    return verified == count ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"centrality of Hermitian matrices via local monotonicity of admissible "
                 "matrix functions"};
    app.require_subcommand(1);

    std::string fnspec, matrix_path, cert_path, csv_path;
    double x = 0.0, y = 0.0;
    std::optional<double> grid_lo, grid_hi;
    int grid_n = 64;
    int n = 4, count = 10;
    std::uint64_t base_seed = 0;

    auto* check = app.add_subcommand("check-fn", "verify admissibility conditions on a grid");
    check->add_option("fnspec", fnspec, "'exp' or 'pow:p=<real>'")->required();
    check->add_option("--grid-lo", grid_lo, "grid lower end (default max(gamma+0.01, -10))");
    check->add_option("--grid-hi", grid_hi, "grid upper end (default 10)");
    check->add_option("--grid-n", grid_n, "grid size (default 64)");

    auto* wit = app.add_subcommand("witness", "construct a 2x2 order-violation witness");
    wit->add_option("fnspec", fnspec)->required();
    wit->add_option("--x", x, "first spectral point")->required();
    wit->add_option("--y", y, "second spectral point")->required();

    auto* dec = app.add_subcommand("decide", "decide centrality of a matrix file");
    dec->add_option("fnspec", fnspec)->required();
    dec->add_option("--matrix", matrix_path, "matrix JSON file")->required();

    auto* ver = app.add_subcommand("verify", "re-check a violation certificate");
    ver->add_option("fnspec", fnspec)->required();
    ver->add_option("--matrix", matrix_path, "matrix JSON file")->required();
    ver->add_option("--cert", cert_path, "certificate JSON file")->required();

    auto* bat = app.add_subcommand("batch", "randomized decide/verify experiment");
    bat->add_option("fnspec", fnspec)->required();
    bat->add_option("--n", n, "matrix dimension")->required();
    bat->add_option("--count", count, "number of instances")->required();
    bat->add_option("--seed", base_seed, "base RNG seed")->required();
    bat->add_option("--csv", csv_path, "also write per-instance rows to this CSV file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        const FunctionSeed seed = parse_fnspec(fnspec);
        if (*check) return run_check_fn(seed, grid_lo, grid_hi, grid_n);
        if (*wit) return run_witness(seed, x, y);
        if (*dec) return run_decide(seed, matrix_path);
        if (*ver) return run_verify(seed, matrix_path, cert_path);
        if (*bat) return run_batch(seed, fnspec, n, count, base_seed, csv_path);
        return 2;
    } catch (const AdmissibilityViolation& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const DegeneratePair& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const NotHermitian& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const DimensionMismatch& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 3;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: invalid JSON input: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 3;
    }
}
