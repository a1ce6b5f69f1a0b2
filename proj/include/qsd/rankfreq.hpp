#pragma once

#include <span>
#include <string>
#include <vector>

#include "qsd/common.hpp"

namespace qsd {

/// Per-frame softmax probability dump over a fixed symbol alphabet.
struct FrameDump {
    std::vector<std::string> symbols;
    std::vector<std::vector<double>> frames;
    int renormalized_warnings = 0;

    int num_symbols() const { return static_cast<int>(symbols.size()); }
};

/// Reads CSV (header of symbol names, one frame per row) or JSON
/// ({"symbols": [...], "frames": [[...], ...]}); format chosen by sniffing
/// the first non-space byte. Frames off normalization by more than 1e-3 are
/// renormalized and counted in `renormalized_warnings`; worse than that is
/// still renormalized, below 1e-6 is accepted as-is.
FrameDump ingest_frames(const std::string& path);
FrameDump ingest_frames_text(const std::string& text);

/// Each frame sorted descending, averaged position-wise; nonincreasing.
std::vector<double> rank_frequency(const FrameDump& dump);

struct FitResult {
    double a;
    double b;
    double stderr_a;
    double stderr_b;
    double r2;
    int rank_lo;
    int rank_hi;

    std::string to_json() const;
};

/// Ordinary least squares of log p against log r over ranks
/// [rank_lo, rank_hi] (1-based, inclusive): a = exp(intercept), b = -slope.
FitResult fit_powerlaw(std::span<const double> profile, int rank_lo, int rank_hi);

}  // namespace qsd
