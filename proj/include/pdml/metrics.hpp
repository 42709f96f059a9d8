#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pdml/error.hpp"

namespace pdml {

// Counts plus the two ratios the benchmark tables report. The positive class
// is status = 1 (PD). Precision with no positive predictions is surfaced as
// undefined rather than silently zeroed.
struct EvalReport {
    std::size_t tp = 0, fp = 0, tn = 0, fn = 0;
    double accuracy = 0.0;
    std::optional<double> precision;
    double train_time_seconds = 0.0;
    std::string config;
    bool failed = false;
    std::string failure_reason;

    std::size_t total() const { return tp + fp + tn + fn; }
};

inline EvalReport evaluate(const std::vector<int>& y_true, const std::vector<int>& y_pred) {
    if (y_true.size() != y_pred.size())
        fail(errc::length_mismatch, "evaluate: label vectors differ in length");
    if (y_true.empty()) fail(errc::empty_input, "evaluate: empty input");
    EvalReport r;
    for (std::size_t i = 0; i < y_true.size(); ++i) {
        if (y_pred[i] == 1)
            (y_true[i] == 1 ? r.tp : r.fp)++;
        else
            (y_true[i] == 0 ? r.tn : r.fn)++;
    }
    r.accuracy = static_cast<double>(r.tp + r.tn) / static_cast<double>(r.total());
    if (r.tp + r.fp > 0) r.precision = static_cast<double>(r.tp) / static_cast<double>(r.tp + r.fp);
    return r;
}

// Renders num/den at `places` decimals with round-half-even, computed in
// integer arithmetic so the rendering of an exact rational is exact.
inline std::string format_ratio(std::uint64_t num, std::uint64_t den, int places) {
    std::uint64_t scale = 1;
    for (int i = 0; i < places; ++i) scale *= 10;
    const std::uint64_t scaled = num * scale;
    std::uint64_t q = scaled / den;
    const std::uint64_t rem = scaled % den;
    if (2 * rem > den || (2 * rem == den && (q % 2 == 1))) ++q;
    std::string digits = std::to_string(q % scale);
    digits.insert(digits.begin(), static_cast<std::size_t>(places) - digits.size(), '0');
    return std::to_string(q / scale) + "." + digits;
}

inline std::string format_accuracy(const EvalReport& r, int places = 4) {
    return format_ratio(r.tp + r.tn, r.total(), places);
}

inline std::string format_precision(const EvalReport& r, int places = 4) {
    if (!r.precision) return "undefined";
    return format_ratio(r.tp, r.tp + r.fp, places);
}

// Wall time around the fit call only, monotonic clock.
template <typename Job>
auto time_training(Job&& job) {
    const auto start = std::chrono::steady_clock::now();
    auto result = std::forward<Job>(job)();
    const auto stop = std::chrono::steady_clock::now();
    const double seconds = std::chrono::duration<double>(stop - start).count();
    return std::make_pair(std::move(result), seconds);
}

} // namespace pdml
