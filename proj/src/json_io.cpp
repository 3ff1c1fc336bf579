#include "opmono/json_io.hpp"

namespace opmono {

namespace {

using nlohmann::json;

json complex_to_json(const cplx& z) {
    return json::array({z.real(), z.imag()});
}

cplx complex_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw std::invalid_argument("expected a complex value as [re, im]");
    return {j[0].get<double>(), j[1].get<double>()};
}

double number_field(const json& j, const char* key) {
    if (!j.contains(key) || !j.at(key).is_number())
        throw std::invalid_argument(std::string("missing numeric field '") + key + "'");
    return j.at(key).get<double>();
}

} // namespace

json matrix_to_json(const HermitianMatrix& A) {
    const int n = A.dim();
    json rows = json::array();
    for (int i = 0; i < n; ++i) {
        json row = json::array();
        for (int j = 0; j < n; ++j) row.push_back(complex_to_json(A(i, j)));
        rows.push_back(std::move(row));
    }
    return {{"n", n}, {"entries", std::move(rows)}};
}

HermitianMatrix matrix_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("entries"))
        throw std::invalid_argument("matrix: expected object with 'n' and 'entries'");
    const int n = j.at("n").get<int>();
    const auto& rows = j.at("entries");
    if (!rows.is_array() || rows.size() != static_cast<std::size_t>(n))
        throw std::invalid_argument("matrix: 'entries' must have n rows");
    std::vector<cplx> a;
    a.reserve(static_cast<std::size_t>(n) * n);
    for (const auto& row : rows) {
        if (!row.is_array() || row.size() != static_cast<std::size_t>(n))
            throw std::invalid_argument("matrix: each row must have n entries");
        for (const auto& e : row) a.push_back(complex_from_json(e));
    }
    return HermitianMatrix::from_entries(n, std::move(a));
}

json witness_to_json(const Witness2x2& w) {
    return {{"x", w.x},
            {"y", w.y},
            {"lambda", complex_to_json(w.lambda)},
            {"mu", complex_to_json(w.mu)},
            {"t0", w.t0},
            {"delta", w.delta},
            {"L_det", w.L_det}};
}

json certificate_to_json(const ViolationCertificate& cert) {
    json w = json::array();
    for (const auto& z : cert.w) w.push_back(complex_to_json(z));
    return {{"B", matrix_to_json(cert.B)}, {"t0", cert.t0},   {"w", std::move(w)},
            {"delta", cert.delta},         {"neg_eig", cert.neg_eig},
            {"x", cert.x},                 {"y", cert.y}};
}

ViolationCertificate certificate_from_json(const json& j) {
    if (!j.is_object() || !j.contains("B") || !j.contains("w"))
        throw std::invalid_argument("certificate: expected object with 'B' and 'w'");
    ViolationCertificate cert{matrix_from_json(j.at("B")),
                              number_field(j, "t0"),
                              {},
                              number_field(j, "delta"),
                              number_field(j, "neg_eig"),
                              number_field(j, "x"),
                              number_field(j, "y")};
    for (const auto& e : j.at("w")) cert.w.push_back(complex_from_json(e));
    return cert;
}

json report_to_json(const ConditionReport& rep) {
    return {{"positivity_ok", rep.positivity_ok},
            {"strict_increase_ok", rep.strict_increase_ok},
            {"log_concavity_ok", rep.log_concavity_ok},
            {"worst_margins",
             {{"positivity", rep.positivity_margin},
              {"strict_increase", rep.increase_margin},
              {"log_concavity", rep.concavity_margin}}},
            {"failing_points", rep.failing_points},
            {"all_ok", rep.all_ok()}};
}

json verdict_to_json(const CentralityVerdict& v) {
    json out = {{"verdict", v.verdict == Verdict::Central ? "Central" : "NonCentral"},
                {"spectral_width", v.spectral_width}};
    if (v.certificate) out["certificate"] = certificate_to_json(*v.certificate);
    return out;
}

} // namespace opmono
