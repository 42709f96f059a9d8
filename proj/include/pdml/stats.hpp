#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "pdml/dataset.hpp"
#include "pdml/error.hpp"
#include "pdml/matrix.hpp"

namespace pdml {

struct FeatureSummary {
    std::string name;
    std::size_t count = 0;
    double mean = 0, std_dev = 0, min = 0, q25 = 0, median = 0, q75 = 0, max = 0;
};

struct SummaryTable {
    std::vector<FeatureSummary> features;
};

// Quantile by linear interpolation at position (n-1)*p over the order
// statistics; this is the convention that reproduces the published summary
// table on the reference file.
inline double quantile_sorted(const std::vector<double>& sorted, double p) {
    const std::size_t n = sorted.size();
    if (n == 1) return sorted[0];
    const double pos = p * static_cast<double>(n - 1);
    const std::size_t lo = static_cast<std::size_t>(pos);
    const double frac = pos - static_cast<double>(lo);
    if (lo + 1 >= n) return sorted[n - 1];
    return sorted[lo] + frac * (sorted[lo + 1] - sorted[lo]);
}

inline FeatureSummary summarize_column(std::string name, std::vector<double> values) {
    FeatureSummary s;
    s.name = std::move(name);
    s.count = values.size();
    double sum = 0;
    for (double v : values) sum += v;
    s.mean = sum / static_cast<double>(s.count);
    double ss = 0;
    for (double v : values) {
        const double d = v - s.mean;
        ss += d * d;
    }
    s.std_dev = s.count > 1 ? std::sqrt(ss / static_cast<double>(s.count - 1)) : 0.0;
    std::sort(values.begin(), values.end());
    s.min = values.front();
    s.max = values.back();
    s.q25 = quantile_sorted(values, 0.25);
    s.median = quantile_sorted(values, 0.50);
    s.q75 = quantile_sorted(values, 0.75);
    return s;
}

inline SummaryTable summarize(const Dataset& ds) {
    if (ds.records.empty()) fail(errc::empty_input, "summarize: dataset is empty");
    SummaryTable table;
    for (std::size_t f = 0; f < kFeatureCount; ++f) {
        std::vector<double> col(ds.size());
        for (std::size_t i = 0; i < ds.size(); ++i) col[i] = ds.records[i].features[f];
        table.features.push_back(summarize_column(feature_names()[f], std::move(col)));
    }
    return table;
}

struct CorrMatrix {
    std::vector<std::string> labels;
    std::vector<double> values; // row-major, labels.size() squared

    double at(std::size_t i, std::size_t j) const { return values[i * labels.size() + j]; }
    double& at(std::size_t i, std::size_t j) { return values[i * labels.size() + j]; }

    std::ptrdiff_t index_of(const std::string& label) const {
        for (std::size_t i = 0; i < labels.size(); ++i)
            if (labels[i] == label) return static_cast<std::ptrdiff_t>(i);
        return -1;
    }
};

inline CorrMatrix correlation_matrix(const Dataset& ds, bool include_status = true) {
    if (ds.size() < 2) fail(errc::empty_input, "correlation_matrix: need at least 2 records");
    const std::size_t d = kFeatureCount + (include_status ? 1 : 0);

    std::vector<std::vector<double>> cols(d, std::vector<double>(ds.size()));
    CorrMatrix cm;
    for (std::size_t f = 0; f < kFeatureCount; ++f) {
        cm.labels.push_back(feature_names()[f]);
        for (std::size_t i = 0; i < ds.size(); ++i) cols[f][i] = ds.records[i].features[f];
    }
    if (include_status) {
        cm.labels.push_back("status");
        for (std::size_t i = 0; i < ds.size(); ++i) cols[kFeatureCount][i] = ds.records[i].status;
    }

    const std::size_t n = ds.size();
    std::vector<double> mean(d), sd(d);
    for (std::size_t j = 0; j < d; ++j) {
        double s = 0;
        for (double v : cols[j]) s += v;
        mean[j] = s / static_cast<double>(n);
        double ss = 0;
        for (double v : cols[j]) ss += (v - mean[j]) * (v - mean[j]);
        sd[j] = std::sqrt(ss);
        if (sd[j] == 0.0) fail(errc::zero_variance, "correlation_matrix: zero-variance column '" + cm.labels[j] + "'");
    }

    cm.values.assign(d * d, 0.0);
    for (std::size_t a = 0; a < d; ++a) {
        cm.at(a, a) = 1.0;
        for (std::size_t b = a + 1; b < d; ++b) {
            double s = 0;
            for (std::size_t i = 0; i < n; ++i) s += (cols[a][i] - mean[a]) * (cols[b][i] - mean[b]);
            const double r = s / (sd[a] * sd[b]);
            cm.at(a, b) = r;
            cm.at(b, a) = r;
        }
    }
    return cm;
}

inline std::string fixed_decimals(double v, int places) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", places, v);
    return buf;
}

// --- serialization: statistics as rows, features as columns, mirroring the
// published summary-table layout ---

inline std::string summary_to_csv(const SummaryTable& t) {
    static const char* stat_names[] = {"count", "mean", "std", "min", "25%", "50%", "75%", "max"};
    std::string out = "stat";
    for (const auto& f : t.features) out += "," + f.name;
    out += "\n";
    for (int s = 0; s < 8; ++s) {
        out += stat_names[s];
        for (const auto& f : t.features) {
            double v = 0;
            switch (s) {
            case 0: v = static_cast<double>(f.count); break;
            case 1: v = f.mean; break;
            case 2: v = f.std_dev; break;
            case 3: v = f.min; break;
            case 4: v = f.q25; break;
            case 5: v = f.median; break;
            case 6: v = f.q75; break;
            case 7: v = f.max; break;
            }
            out += "," + format_double(v);
        }
        out += "\n";
    }
    return out;
}

inline std::string summary_to_markdown(const SummaryTable& t) {
    static const char* stat_names[] = {"count", "mean", "std", "min", "25%", "50%", "75%", "max"};
    std::string out = "| stat |";
    for (const auto& f : t.features) out += " " + f.name + " |";
    out += "\n|---|";
    for (std::size_t i = 0; i < t.features.size(); ++i) out += "---|";
    out += "\n";
    for (int s = 0; s < 8; ++s) {
        out += std::string("| ") + stat_names[s] + " |";
        for (const auto& f : t.features) {
            double v = 0;
            switch (s) {
            case 0: v = static_cast<double>(f.count); break;
            case 1: v = f.mean; break;
            case 2: v = f.std_dev; break;
            case 3: v = f.min; break;
            case 4: v = f.q25; break;
            case 5: v = f.median; break;
            case 6: v = f.q75; break;
            case 7: v = f.max; break;
            }
            out += " " + fixed_decimals(v, 6) + " |";
        }
        out += "\n";
    }
    return out;
}

inline std::string corr_to_csv(const CorrMatrix& cm) {
    std::string out;
    for (const auto& l : cm.labels) out += "," + l;
    out += "\n";
    for (std::size_t i = 0; i < cm.labels.size(); ++i) {
        out += cm.labels[i];
        for (std::size_t j = 0; j < cm.labels.size(); ++j) out += "," + format_double(cm.at(i, j));
        out += "\n";
    }
    return out;
}

inline std::string corr_to_markdown(const CorrMatrix& cm) {
    std::string out = "| |";
    for (const auto& l : cm.labels) out += " " + l + " |";
    out += "\n|---|";
    for (std::size_t i = 0; i < cm.labels.size(); ++i) out += "---|";
    out += "\n";
    for (std::size_t i = 0; i < cm.labels.size(); ++i) {
        out += "| " + cm.labels[i] + " |";
        for (std::size_t j = 0; j < cm.labels.size(); ++j) out += " " + fixed_decimals(cm.at(i, j), 2) + " |";
        out += "\n";
    }
    return out;
}

} // namespace pdml
