#pragma once

#include <string>
#include <vector>

#include "kdv/analysis.hpp"
#include "kdv/certificates.hpp"

namespace kdv {

/// One sweep result. `error` is empty on success; a failed value keeps its
/// row with NaN statistics.
struct SweepRow {
    double value = 0;
    double nu = 0;
    double kappa = 0;
    double r2 = 0;
    std::string error;
};

/// Doubles serialized with 17 significant digits (round-trip exact),
/// comma separator, LF newlines, no locale formatting.
std::string format_double(double v);

/// Time series: header `t,E,lnE,V,trace`. A sample without a Lyapunov
/// value leaves the V field empty.
void emit_csv(const std::vector<EnergySample>& samples, const std::string& path);

/// Sweep table: header `value,nu,kappa,r2`.
void emit_csv(const std::vector<SweepRow>& rows, const std::string& path);

/// Certificate report as flat `key,value` rows.
void emit_csv(const CertificateReport& report, const std::string& path);

std::string to_csv(const std::vector<EnergySample>& samples);
std::string to_csv(const std::vector<SweepRow>& rows);
std::string to_csv(const CertificateReport& report);

} // namespace kdv
