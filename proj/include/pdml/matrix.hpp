#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "pdml/error.hpp"

namespace pdml {

// Dense row-major matrix with named columns. The lingua franca between
// ingest, preprocessing and the model trainers.
class FeatureMatrix {
public:
    FeatureMatrix() = default;
    FeatureMatrix(std::size_t rows, std::vector<std::string> names)
        : rows_(rows), cols_(names.size()), names_(std::move(names)), data_(rows_ * cols_, 0.0) {}
    FeatureMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), names_(cols), data_(rows * cols, 0.0) {
        for (std::size_t j = 0; j < cols; ++j) names_[j] = "x" + std::to_string(j);
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const std::vector<std::string>& names() const { return names_; }

    double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::span<const double> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
    std::span<double> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }

    std::vector<double> column(std::size_t j) const {
        std::vector<double> c(rows_);
        for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
        return c;
    }

    // -1 when absent
    std::ptrdiff_t find_column(const std::string& name) const {
        for (std::size_t j = 0; j < cols_; ++j)
            if (names_[j] == name) return static_cast<std::ptrdiff_t>(j);
        return -1;
    }

    FeatureMatrix select_rows(const std::vector<std::size_t>& idx) const {
        FeatureMatrix out(idx.size(), names_);
        for (std::size_t i = 0; i < idx.size(); ++i)
            for (std::size_t j = 0; j < cols_; ++j) out(i, j) = (*this)(idx[i], j);
        return out;
    }

    double column_mean(std::size_t j) const {
        double s = 0.0;
        for (std::size_t i = 0; i < rows_; ++i) s += (*this)(i, j);
        return s / static_cast<double>(rows_);
    }

    // sample standard deviation (n-1)
    double column_std(std::size_t j) const {
        if (rows_ < 2) return 0.0;
        const double m = column_mean(j);
        double s = 0.0;
        for (std::size_t i = 0; i < rows_; ++i) {
            const double d = (*this)(i, j) - m;
            s += d * d;
        }
        return std::sqrt(s / static_cast<double>(rows_ - 1));
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<std::string> names_;
    std::vector<double> data_;
};

inline void check_width(const FeatureMatrix& x, std::size_t expected, const char* what) {
    if (x.cols() != expected)
        fail(errc::dimension_mismatch, std::string(what) + ": expected " + std::to_string(expected) +
                                           " columns, got " + std::to_string(x.cols()));
}

} // namespace pdml
