#pragma once

#include <string>
#include <vector>

#include "toepblock/address.hpp"
#include "toepblock/counting.hpp"
#include "toepblock/simulate.hpp"
#include "toepblock/theory.hpp"
#include "toepblock/verify.hpp"

namespace toepblock {

enum class ReportFormat { Json, Csv };

ReportFormat parse_format(const std::string& name);

// JSON serializations. Every report object carries a versioned "schema"
// field; layouts are documented in doc/report-schema.md. Serialization is
// deterministic: identical inputs give identical bytes.
std::string report_json(const SimReport& report);
std::string report_json(const ConvergenceReport& report);
std::string report_json(const VerifyReport& report);
std::string report_json(const DecompositionReport& report);
std::string report_json(const TheoreticalMoments& moments);
std::string report_json(const PFit& fit, LinkKind kind, const Word& w);

// Exactly the fields word, link, n, sign, count, normalized; the count is a
// decimal string so arbitrary exact values survive JSON round-trips.
std::string count_json(const CountResult& result);

// Plot-ready tables.
std::string moments_csv(const SimReport& report);   // h,empirical,std_error,theoretical,z_score
std::string histogram_csv(const std::vector<HistogramBin>& bins);
std::string eigenvalue_csv(const std::vector<Spectrum>& spectra);  // values / scale
std::string convergence_csv(const ConvergenceReport& report);

// Throws std::runtime_error when the path cannot be written.
void write_text_file(const std::string& path, const std::string& content);

void emit_report(const SimReport& report, ReportFormat format, const std::string& path);
void emit_report(const ConvergenceReport& report, ReportFormat format, const std::string& path);

}  // namespace toepblock
