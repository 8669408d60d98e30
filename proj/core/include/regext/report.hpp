#pragma once

// JSON and CSV serialization. Key order is fixed and no wall-clock data is
// emitted, so identical inputs give byte-identical documents.

#include "regext/classifier.hpp"
#include "regext/module.hpp"

#include <json.hpp>

#include <string>

namespace regext {

using Json = nlohmann::ordered_json;

Json to_json(const Caps& caps);
Json to_json(const WitnessCertificate& cert);
Json to_json(const WitnessCertificate& cert, const CertificateValidation& validation);
Json to_json(const OracleCheck& check);
Json to_json(const CommutantData& data);

/// {subset, size, kind, verdict, certificates[], oracle_checks[], problems[]}
Json subset_json(const SubsetVerdict& v);

/// Single-subset report: {system, subset, verdict, certificates[],
/// oracle_checks[], grid, caps, incomplete_flag}.
Json classification_json(const std::string& system, const SubsetVerdict& v, const std::vector<Weight>& grid,
                         const Caps& caps, bool incomplete);

/// Whole-system report: {system, grid, caps, mode, incomplete_flag,
/// incomplete_reason, dichotomy_holds, counts, results[]}.
Json to_json(const ClassificationReport& report);

/// One row per subset: subset,size,kind,verdict,certificates,valid_certificates,oracle_checks,oracle_agreements.
std::string to_csv(const ClassificationReport& report);

Json to_json(const NonsimpleReport& report);

/// {system, highest_weight, dimension, basis_weights[], e{root: entries}, h[]}
/// with matrix entries as [row, col, num, den].
Json to_json(const ModuleRealization& m);

}  // namespace regext
