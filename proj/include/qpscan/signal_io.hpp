#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qpscan/analysis.hpp"
#include "qpscan/types.hpp"

namespace qpscan {

/// Shortest decimal form of v within 15 significant digits ("%.15g",
/// C locale: '.' decimal separator).
std::string format_double(double v);

struct SignalFile {
  TimeSeries series;                       // series.dt filled from header or fallback
  std::optional<double> header_dt;         // dt= metadata if present
  std::map<std::string, std::string> metadata;
};

/// Reads a signal file: one real per line; '#' lines carry key=value
/// metadata; a CSV variant with a single named column is accepted.
/// NaN/Inf tokens and anything unparsable are rejected.
SignalFile read_signal_file(const std::string& path, double fallback_dt);

/// Writes '#' key=value metadata lines followed by one sample per line.
void write_signal_file(const std::string& path, const TimeSeries& ts,
                       const std::vector<std::pair<std::string, std::string>>& metadata);

void write_curve_csv(const std::string& path, const DiagnosticCurve& curve,
                     const std::string& x_name = "N");
void write_scan_csv(const std::string& path, const ThetaScan& scan);
void write_jumps_csv(const std::string& path, const std::vector<JumpEstimate>& jumps);

/// The human-readable summary emitted as report.txt.
std::string render_report(const StabilityReport& report, const AnalysisConfig& config,
                          const std::string& signal_name, long n_samples);

}  // namespace qpscan
