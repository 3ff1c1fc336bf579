/*
 * json_io.hpp — wire formats used by the CLI.
 *
 * Matrix:       {"n": int, "entries": [[[re, im], ...], ...]}   (row-major)
 * Witness:      {"x", "y", "lambda": [re, im], "mu": [re, im],
 *                "t0", "delta", "L_det"}
 * Certificate:  {"B": matrix, "t0", "w": [[re, im], ...],
 *                "delta", "neg_eig", "x", "y"}
 */

#pragma once

#include "json.hpp"

#include "opmono/centrality.hpp"
#include "opmono/function_seed.hpp"
#include "opmono/hermitian.hpp"
#include "opmono/witness.hpp"

namespace opmono {

nlohmann::json matrix_to_json(const HermitianMatrix& A);
HermitianMatrix matrix_from_json(const nlohmann::json& j);

nlohmann::json witness_to_json(const Witness2x2& w);

nlohmann::json certificate_to_json(const ViolationCertificate& cert);
ViolationCertificate certificate_from_json(const nlohmann::json& j);

nlohmann::json report_to_json(const ConditionReport& rep);
nlohmann::json verdict_to_json(const CentralityVerdict& v);

} // namespace opmono
