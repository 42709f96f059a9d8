#pragma once

#include <string>
#include <vector>

#include "pdml/error.hpp"
#include "pdml/matrix.hpp"

namespace pdml {

// Column-wise standardization fitted on training rows only; applying to test
// rows reuses the training statistics (no refit, no leakage).
struct Scaler {
    std::vector<std::string> names;
    std::vector<double> mean;
    std::vector<double> std_dev; // n-1 denominator
};

inline Scaler fit_scaler(const FeatureMatrix& x) {
    if (x.rows() < 2) fail(errc::empty_input, "fit_scaler: need at least 2 rows");
    Scaler s;
    s.names = x.names();
    s.mean.resize(x.cols());
    s.std_dev.resize(x.cols());
    for (std::size_t j = 0; j < x.cols(); ++j) {
        s.mean[j] = x.column_mean(j);
        s.std_dev[j] = x.column_std(j);
        if (s.std_dev[j] == 0.0)
            fail(errc::zero_variance, "fit_scaler: zero-variance column '" + x.names()[j] + "'");
    }
    return s;
}

inline void check_columns(const Scaler& s, const FeatureMatrix& x) {
    if (x.names() != s.names) {
        std::string msg = "apply_scaler: column names do not match the fitted scaler";
        fail(errc::column_mismatch, msg);
    }
}

inline FeatureMatrix apply_scaler(const Scaler& s, const FeatureMatrix& x) {
    check_columns(s, x);
    FeatureMatrix out(x.rows(), x.names());
    for (std::size_t i = 0; i < x.rows(); ++i)
        for (std::size_t j = 0; j < x.cols(); ++j) out(i, j) = (x(i, j) - s.mean[j]) / s.std_dev[j];
    return out;
}

inline FeatureMatrix invert_scaler(const Scaler& s, const FeatureMatrix& x) {
    check_columns(s, x);
    FeatureMatrix out(x.rows(), x.names());
    for (std::size_t i = 0; i < x.rows(); ++i)
        for (std::size_t j = 0; j < x.cols(); ++j) out(i, j) = x(i, j) * s.std_dev[j] + s.mean[j];
    return out;
}

} // namespace pdml
