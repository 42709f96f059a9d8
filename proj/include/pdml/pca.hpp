#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <vector>

#include "pdml/error.hpp"
#include "pdml/matrix.hpp"

namespace pdml {

struct PcaModel {
    std::vector<double> components; // k x d, row-major, rows orthonormal
    std::vector<double> eigenvalues; // all d, descending
    std::vector<double> explained_ratio; // all d, sums to 1
    std::size_t k = 0;
    std::size_t dim = 0;
    std::vector<double> fit_mean; // column means of the fitting matrix

    double component(std::size_t comp, std::size_t j) const { return components[comp * dim + j]; }
};

namespace detail {

// Cyclic Jacobi rotations on a symmetric matrix. The problem sizes here are
// tiny (22 x 22), so exactness is preferred over speed: sweeps continue until
// the off-diagonal Frobenius norm falls below 1e-12.
inline void jacobi_eigen(std::vector<double>& a, std::size_t n, std::vector<double>& vectors) {
    vectors.assign(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) vectors[i * n + i] = 1.0;

    auto off_norm = [&]() {
        double s = 0;
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) s += 2.0 * a[p * n + q] * a[p * n + q];
        return std::sqrt(s);
    };

    const int max_sweeps = 100;
    for (int sweep = 0; sweep < max_sweeps && off_norm() > 1e-12; ++sweep) {
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = a[p * n + q];
                if (std::abs(apq) < 1e-300) continue;
                const double app = a[p * n + p];
                const double aqq = a[q * n + q];
                const double theta = (aqq - app) / (2.0 * apq);
                const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;

                for (std::size_t i = 0; i < n; ++i) {
                    const double aip = a[i * n + p];
                    const double aiq = a[i * n + q];
                    a[i * n + p] = c * aip - s * aiq;
                    a[i * n + q] = s * aip + c * aiq;
                }
                for (std::size_t i = 0; i < n; ++i) {
                    const double api = a[p * n + i];
                    const double aqi = a[q * n + i];
                    a[p * n + i] = c * api - s * aqi;
                    a[q * n + i] = s * api + c * aqi;
                }
                for (std::size_t i = 0; i < n; ++i) {
                    const double vip = vectors[i * n + p];
                    const double viq = vectors[i * n + q];
                    vectors[i * n + p] = c * vip - s * viq;
                    vectors[i * n + q] = s * vip + c * viq;
                }
            }
        }
    }
}

} // namespace detail

// Eigendecomposition of the sample covariance (n-1). Components are sorted by
// descending eigenvalue and sign-normalized so the largest-magnitude entry of
// each component is positive, making the result independent of the
// eigensolver's sign choices.
inline PcaModel fit_pca(const FeatureMatrix& x, double variance_target) {
    if (variance_target <= 0.0 || variance_target > 1.0)
        fail(errc::usage_error, "fit_pca: variance_target must be in (0, 1]");
    if (x.rows() < 2) fail(errc::empty_input, "fit_pca: need at least 2 rows");
    const std::size_t n = x.rows(), d = x.cols();

    PcaModel m;
    m.dim = d;
    m.fit_mean.resize(d);
    for (std::size_t j = 0; j < d; ++j) m.fit_mean[j] = x.column_mean(j);

    std::vector<double> cov(d * d, 0.0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t a = 0; a < d; ++a) {
            const double da = x(i, a) - m.fit_mean[a];
            for (std::size_t b = a; b < d; ++b) cov[a * d + b] += da * (x(i, b) - m.fit_mean[b]);
        }
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = a; b < d; ++b) {
            cov[a * d + b] /= static_cast<double>(n - 1);
            cov[b * d + a] = cov[a * d + b];
        }

    std::vector<double> vecs;
    detail::jacobi_eigen(cov, d, vecs);

    std::vector<std::size_t> order(d);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return cov[a * d + a] > cov[b * d + b]; });

    m.eigenvalues.resize(d);
    double total = 0.0;
    for (std::size_t r = 0; r < d; ++r) {
        m.eigenvalues[r] = std::max(0.0, cov[order[r] * d + order[r]]); // clamp roundoff negatives
        total += m.eigenvalues[r];
    }
    if (total <= 0.0) fail(errc::degenerate_rank, "fit_pca: covariance has no positive eigenvalues");
    m.explained_ratio.resize(d);
    for (std::size_t r = 0; r < d; ++r) m.explained_ratio[r] = m.eigenvalues[r] / total;

    // smallest k whose cumulative ratio reaches the target (>=, so a component
    // exactly straddling the threshold is included)
    double cum = 0.0;
    std::size_t k = d;
    for (std::size_t r = 0; r < d; ++r) {
        cum += m.explained_ratio[r];
        if (cum >= variance_target - 1e-12) {
            k = r + 1;
            break;
        }
    }
    for (std::size_t r = 0; r < k; ++r)
        if (m.eigenvalues[r] <= 0.0)
            fail(errc::degenerate_rank, "fit_pca: reaching the variance target requires a non-positive eigenvalue");
    m.k = k;

    m.components.resize(k * d);
    for (std::size_t r = 0; r < k; ++r) {
        const std::size_t src = order[r];
        double largest = 0.0;
        for (std::size_t j = 0; j < d; ++j)
            if (std::abs(vecs[j * d + src]) > std::abs(largest)) largest = vecs[j * d + src];
        const double sign = largest < 0.0 ? -1.0 : 1.0;
        for (std::size_t j = 0; j < d; ++j) m.components[r * d + j] = sign * vecs[j * d + src];
    }
    return m;
}

inline FeatureMatrix apply_pca(const PcaModel& m, const FeatureMatrix& x) {
    check_width(x, m.dim, "apply_pca");
    std::vector<std::string> names(m.k);
    for (std::size_t r = 0; r < m.k; ++r) names[r] = "pc" + std::to_string(r + 1);
    FeatureMatrix out(x.rows(), names);
    for (std::size_t i = 0; i < x.rows(); ++i)
        for (std::size_t r = 0; r < m.k; ++r) {
            double s = 0;
            for (std::size_t j = 0; j < m.dim; ++j) s += (x(i, j) - m.fit_mean[j]) * m.components[r * m.dim + j];
            out(i, r) = s;
        }
    return out;
}

// reconstruction back into the original feature space (exact when k = d)
inline FeatureMatrix invert_pca(const PcaModel& m, const FeatureMatrix& scores,
                                const std::vector<std::string>& names) {
    check_width(scores, m.k, "invert_pca");
    FeatureMatrix out(scores.rows(), names);
    for (std::size_t i = 0; i < scores.rows(); ++i)
        for (std::size_t j = 0; j < m.dim; ++j) {
            double s = m.fit_mean[j];
            for (std::size_t r = 0; r < m.k; ++r) s += scores(i, r) * m.components[r * m.dim + j];
            out(i, j) = s;
        }
    return out;
}

} // namespace pdml
