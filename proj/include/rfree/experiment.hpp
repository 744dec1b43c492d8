#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <ctime>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include <json.hpp>

#include "rfree/common.hpp"
#include "rfree/counting.hpp"
#include "rfree/series.hpp"

// Desk-scale empirical check of R(H,r,k) ~ c_{k,r} H^3: exact counts over an
// H grid, residuals against the main term, and the log-log slope of |delta|.
// The proven error exponents are 3/2 + 3/(2r) (k != 0) and 9r/(5r-2) (k = 0),
// both floored at 2; the slope is consistency-grade only, not a certification
// of the exponent.

namespace rfree {

struct ExperimentConfig {
    unsigned r = 2;
    std::int64_t k = 1;
    std::vector<std::uint64_t> h_grid;
    std::uint64_t series_cutoff = 10'000;
    unsigned threads = 0;
    std::string cache_path; // optional CSV of (H,r,k,R) records
};

struct ExperimentRow {
    std::uint64_t H = 0;
    std::uint64_t R_exact = 0;
    double main_term = 0; // c * H^3
    double delta = 0;     // R - c H^3
    double delta_norm = 0;
    double runtime_ms = 0;
};

struct Report {
    ExperimentConfig config;
    SeriesResult series;
    double norm_exponent = 2.25;
    std::vector<ExperimentRow> rows;
    double slope = 0;
    bool slope_valid = false;
    std::map<std::string, bool> suites;
    std::string timestamp_utc;
    double total_ms = 0;
};

inline double error_exponent_hint(unsigned r, std::int64_t k) {
    const double proven = k == 0 ? 9.0 * r / (5.0 * r - 2.0) : 1.5 + 1.5 / static_cast<double>(r);
    return std::max(2.0, proven);
}

// Least-squares slope of log|delta| against log H over rows with delta != 0.
inline double fit_log_slope(const std::vector<ExperimentRow>& rows, bool* valid = nullptr) {
    std::vector<double> xs, ys;
    for (const auto& row : rows) {
        if (row.delta != 0.0) {
            xs.push_back(std::log(static_cast<double>(row.H)));
            ys.push_back(std::log(std::abs(row.delta)));
        }
    }
    if (valid)
        *valid = xs.size() >= 2;
    if (xs.size() < 2)
        return 0.0;
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        mx += xs[i];
        my += ys[i];
    }
    mx /= static_cast<double>(xs.size());
    my /= static_cast<double>(xs.size());
    double num = 0, den = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        num += (xs[i] - mx) * (ys[i] - my);
        den += (xs[i] - mx) * (xs[i] - mx);
    }
    return num / den;
}

// Exact-key cache of computed counts; never interpolated.
class RCache {
  public:
    void load(const std::string& path) {
        std::ifstream in(path);
        if (!in)
            return;
        std::string line;
        std::getline(in, line); // header
        while (std::getline(in, line)) {
            std::istringstream ss(line);
            std::uint64_t H, R;
            long long r, k;
            char comma;
            if (ss >> H >> comma >> r >> comma >> k >> comma >> R)
                map_[{H, static_cast<unsigned>(r), k}] = R;
        }
    }
    void save(const std::string& path) const {
        std::ofstream out(path);
        out << "H,r,k,R\n";
        for (const auto& [key, R] : map_)
            out << std::get<0>(key) << ',' << std::get<1>(key) << ',' << std::get<2>(key) << ','
                << R << '\n';
    }
    const std::uint64_t* lookup(std::uint64_t H, unsigned r, std::int64_t k) const {
        auto it = map_.find({H, r, k});
        return it == map_.end() ? nullptr : &it->second;
    }
    void store(std::uint64_t H, unsigned r, std::int64_t k, std::uint64_t R) {
        map_[{H, r, k}] = R;
    }

  private:
    std::map<std::tuple<std::uint64_t, unsigned, std::int64_t>, std::uint64_t> map_;
};

// on_row, when set, observes each completed row in grid order (the CLI uses
// it to flush partial CSV output).
inline Report run_experiment(const ExperimentConfig& cfg,
                             const std::function<void(const ExperimentRow&)>& on_row = {}) {
    if (cfg.h_grid.empty())
        throw std::invalid_argument("run_experiment: H grid is empty");
    const auto t0 = std::chrono::steady_clock::now();
    Report rep;
    rep.config = cfg;
    rep.series = singular_series(cfg.r, cfg.k, cfg.series_cutoff);
    rep.norm_exponent = error_exponent_hint(cfg.r, cfg.k);

    RCache cache;
    if (!cfg.cache_path.empty())
        cache.load(cfg.cache_path);

    std::vector<std::uint64_t> grid = cfg.h_grid;
    std::sort(grid.begin(), grid.end());
    const double c = rep.series.value;
    for (std::uint64_t H : grid) {
        const auto row_start = std::chrono::steady_clock::now();
        std::uint64_t R;
        if (const std::uint64_t* hit = cache.lookup(H, cfg.r, cfg.k)) {
            R = *hit;
        } else {
            R = count_R_direct(H, cfg.r, cfg.k, cfg.threads);
            cache.store(H, cfg.r, cfg.k, R);
        }
        ExperimentRow row;
        row.H = H;
        row.R_exact = R;
        const double h3 = static_cast<double>(H) * static_cast<double>(H) * static_cast<double>(H);
        row.main_term = c * h3;
        row.delta = static_cast<double>(R) - row.main_term;
        row.delta_norm = row.delta / std::pow(static_cast<double>(H), rep.norm_exponent);
        row.runtime_ms = std::chrono::duration<double, std::milli>(
                             std::chrono::steady_clock::now() - row_start)
                             .count();
        rep.rows.push_back(row);
        if (on_row)
            on_row(row);
    }
    if (!cfg.cache_path.empty())
        cache.save(cfg.cache_path);

    rep.slope = fit_log_slope(rep.rows, &rep.slope_valid);

    // pass/fail booleans against the fixed acceptance thresholds
    const ExperimentRow* at150 = nullptr;
    const ExperimentRow* at600 = nullptr;
    for (const auto& row : rep.rows) {
        if (row.H == 150)
            at150 = &row;
        if (row.H == 600)
            at600 = &row;
    }
    if (at150 && at600 && at150->R_exact > 0 && at600->R_exact > 0) {
        const double rel150 = std::abs(at150->delta) / static_cast<double>(at150->R_exact);
        const double rel600 = std::abs(at600->delta) / static_cast<double>(at600->R_exact);
        rep.suites["relerr_H600_lt_H150"] = rel600 < rel150;
        rep.suites["relerr_H600_below_5pct"] = rel600 < 0.05;
    }
    if (rep.slope_valid)
        rep.suites["slope_le_2.6"] = rep.slope <= 2.6;

    std::time_t now = std::time(nullptr);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
    rep.timestamp_utc = buf;
    rep.total_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                       .count();
    return rep;
}

// JSON document. All content outside the "timing" object is a deterministic
// function of the invocation.
inline nlohmann::json report_to_json(const Report& rep, bool include_timing = true) {
    nlohmann::json j;
    j["config"] = {{"r", rep.config.r},
                   {"k", rep.config.k},
                   {"H_grid", rep.config.h_grid},
                   {"P", rep.config.series_cutoff},
                   {"threads", rep.config.threads},
                   {"cache", rep.config.cache_path}};
    j["series"] = {{"value", rep.series.value},
                   {"P", rep.series.prime_cutoff},
                   {"tail", rep.series.tail_bound}};
    j["norm_exponent"] = rep.norm_exponent;
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : rep.rows)
        rows.push_back({{"H", row.H},
                        {"R", row.R_exact},
                        {"main", row.main_term},
                        {"delta", row.delta},
                        {"delta_norm", row.delta_norm}});
    j["rows"] = std::move(rows);
    j["slope"] = rep.slope_valid ? nlohmann::json(rep.slope) : nlohmann::json(nullptr);
    j["suites"] = rep.suites;
    if (include_timing) {
        nlohmann::json ms = nlohmann::json::array();
        for (const auto& row : rep.rows)
            ms.push_back(row.runtime_ms);
        j["timing"] = {{"timestamp_utc", rep.timestamp_utc},
                       {"total_ms", rep.total_ms},
                       {"row_ms", std::move(ms)}};
    }
    return j;
}

// CSV rows, header mandatory: H,R,main,delta,delta_norm,ms
inline void write_csv(const Report& rep, std::ostream& out) {
    out << "H,R,main,delta,delta_norm,ms\n";
    char buf[256];
    for (const auto& row : rep.rows) {
        std::snprintf(buf, sizeof buf, "%llu,%llu,%.17g,%.17g,%.17g,%.3f\n",
                      static_cast<unsigned long long>(row.H),
                      static_cast<unsigned long long>(row.R_exact), row.main_term, row.delta,
                      row.delta_norm, row.runtime_ms);
        out << buf;
    }
}

} // namespace rfree
