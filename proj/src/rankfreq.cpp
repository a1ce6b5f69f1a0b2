#include "qsd/rankfreq.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

namespace qsd {

using nlohmann::json;

namespace {

void validate_and_normalize(FrameDump& dump) {
    const std::size_t width = dump.symbols.size();
    if (width == 0) throw input_error("ingest_frames: no symbols");
    if (dump.frames.empty()) throw input_error("ingest_frames: no frames");
    for (std::size_t f = 0; f < dump.frames.size(); ++f) {
        auto& frame = dump.frames[f];
        if (frame.size() != width)
            throw input_error("ingest_frames: frame " + std::to_string(f) +
                              " has " + std::to_string(frame.size()) + " values, expected " +
                              std::to_string(width));
        double sum = 0.0;
        for (double v : frame) {
            if (v < 0 || !std::isfinite(v))
                throw input_error("ingest_frames: frame " + std::to_string(f) +
                                  " has a negative or non-finite probability");
            sum += v;
        }
        if (sum <= 0) throw input_error("ingest_frames: frame " + std::to_string(f) + " sums to 0");
        if (std::abs(sum - 1.0) > 1e-3) ++dump.renormalized_warnings;
        if (std::abs(sum - 1.0) > 1e-6)
            for (double& v : frame) v /= sum;
    }
}

FrameDump parse_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line)) throw input_error("ingest_frames: empty file");
    FrameDump dump;
    {
        std::istringstream hs(line);
        std::string cell;
        while (std::getline(hs, cell, ',')) dump.symbols.push_back(cell);
    }
    int lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string cell;
        std::vector<double> row;
        while (std::getline(ls, cell, ',')) {
            try {
                row.push_back(std::stod(cell));
            } catch (const std::exception&) {
                throw input_error("ingest_frames: line " + std::to_string(lineno) +
                                  ": bad number '" + cell + "'");
            }
        }
        dump.frames.push_back(std::move(row));
        if (dump.frames.back().size() != dump.symbols.size())
            throw input_error("ingest_frames: line " + std::to_string(lineno) +
                              ": inconsistent column count");
    }
    return dump;
}

FrameDump parse_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw input_error(std::string("ingest_frames: JSON parse failure: ") + e.what());
    }
    try {
        FrameDump dump;
        dump.symbols = j.at("symbols").get<std::vector<std::string>>();
        dump.frames = j.at("frames").get<std::vector<std::vector<double>>>();
        return dump;
    } catch (const json::exception& e) {
        throw input_error(std::string("ingest_frames: bad JSON structure: ") + e.what());
    }
}

}  // namespace

FrameDump ingest_frames_text(const std::string& text) {
    const auto pos = text.find_first_not_of(" \t\r\n");
    if (pos == std::string::npos) throw input_error("ingest_frames: empty input");
    FrameDump dump = (text[pos] == '{') ? parse_json(text) : parse_csv(text);
    validate_and_normalize(dump);
    return dump;
}

FrameDump ingest_frames(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("ingest_frames: cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ingest_frames_text(ss.str());
}

std::vector<double> rank_frequency(const FrameDump& dump) {
    if (dump.frames.empty()) throw input_error("rank_frequency: empty dump");
    const std::size_t width = dump.symbols.size();
    const std::size_t nframes = dump.frames.size();

    std::vector<double> acc(width, 0.0);
#pragma omp parallel
    {
        std::vector<double> local(width, 0.0);
        std::vector<double> sorted(width);
#pragma omp for schedule(static) nowait
        for (std::size_t f = 0; f < nframes; ++f) {
            sorted = dump.frames[f];
            std::sort(sorted.begin(), sorted.end(), std::greater<>());
            for (std::size_t i = 0; i < width; ++i) local[i] += sorted[i];
        }
#pragma omp critical
        for (std::size_t i = 0; i < width; ++i) acc[i] += local[i];
    }
    for (double& v : acc) v /= static_cast<double>(nframes);
    return acc;
}

FitResult fit_powerlaw(std::span<const double> profile, int rank_lo, int rank_hi) {
    if (rank_lo < 1 || rank_hi > static_cast<int>(profile.size()) || rank_hi - rank_lo + 1 < 3)
        throw std::domain_error("fit_powerlaw: need >= 3 ranks inside the profile");
    const int m = rank_hi - rank_lo + 1;
    std::vector<double> x(m), y(m);
    for (int i = 0; i < m; ++i) {
        const double p = profile[rank_lo - 1 + i];
        if (!(p > 0)) throw std::domain_error("fit_powerlaw: nonpositive value in range");
        x[i] = std::log(static_cast<double>(rank_lo + i));
        y[i] = std::log(p);
    }
    double mx = 0, my = 0;
    for (int i = 0; i < m; ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= m;
    my /= m;
    double sxx = 0, sxy = 0, syy = 0;
    for (int i = 0; i < m; ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
        syy += (y[i] - my) * (y[i] - my);
    }
    const double slope = sxy / sxx;
    const double intercept = my - slope * mx;

    double ssr = 0.0;
    for (int i = 0; i < m; ++i) {
        const double r = y[i] - (intercept + slope * x[i]);
        ssr += r * r;
    }
    const double sigma2 = (m > 2) ? ssr / (m - 2) : 0.0;
    const double se_slope = std::sqrt(sigma2 / sxx);
    const double se_intercept = std::sqrt(sigma2 * (1.0 / m + mx * mx / sxx));

    FitResult fit;
    fit.b = -slope;
    fit.a = std::exp(intercept);
    fit.stderr_b = se_slope;
    fit.stderr_a = fit.a * se_intercept;  // delta method through exp
    fit.r2 = (syy > 0) ? 1.0 - ssr / syy : 1.0;
    fit.rank_lo = rank_lo;
    fit.rank_hi = rank_hi;
    return fit;
}

std::string FitResult::to_json() const {
    json j;
    j["a"] = a;
    j["b"] = b;
    j["stderr_a"] = stderr_a;
    j["stderr_b"] = stderr_b;
    j["r2"] = r2;
    j["rank_range"] = {rank_lo, rank_hi};
    return j.dump(2);
}

}  // namespace qsd
