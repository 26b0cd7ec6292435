#ifndef PERIWAVE_IO_HPP
#define PERIWAVE_IO_HPP

#include <string>
#include <vector>

#include "periwave/evolution.hpp"
#include "periwave/families.hpp"
#include "periwave/verifier.hpp"

namespace periwave::io {

// Floating-point CSV/JSON formatting: 17 significant digits, locale-free.
std::string fmt17(double v);

// Profile document: {family, k, L, c, A, N, samples[]}.
std::string profile_to_json(const WaveProfile& profile);
WaveProfile profile_from_json(const std::string& text);

void write_text(const std::string& path, const std::string& text);

// Two-column (x, phi) CSV with header.
std::string profile_to_csv(const WaveProfile& profile);

// Trace CSV: t, rho, drift_E, drift_Q, drift_V.
std::string trace_to_csv(const EvolutionTrace& trace);

std::string report_csv_header();
std::string report_to_csv_row(const HypothesisReport& report);

} // namespace periwave::io

#endif
