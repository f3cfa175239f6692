#pragma once

#include <json.hpp>

#include <string>

#include "tk/analysis.hpp"

namespace tk {

/// Report schema version written into every report.
inline constexpr const char* kReportSchema = "tk.analysis/1";

/// One analysis report. Rationals are "p/q" strings, big integers decimal strings.
nlohmann::json report_json(const AnalysisReport& rep);

/// Human-readable tables in the layout of the scalar tables (alpha/beta, kappa/mu/theta/rho).
std::string report_table(const AnalysisReport& rep);

nlohmann::json summary_json(const ScanSummary& s);

nlohmann::json partition_json(const DistancePartition& p, const Graph& g);

/// Integer matrix as rows of decimal strings.
nlohmann::json matrix_json(const IntMatrix& m);

}  // namespace tk
