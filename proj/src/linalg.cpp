#include "resrmn/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace resrmn {

Matrix uniform_matrix(RngStream& rng, Eigen::Index rows, Eigen::Index cols, double scale) {
    if (rows < 1 || cols < 1) {
        throw DimensionError("uniform_matrix: dimensions must be positive, got " +
                             std::to_string(rows) + "x" + std::to_string(cols));
    }
    if (scale < 0.0) {
        throw NumericError("uniform_matrix: negative scale " + std::to_string(scale));
    }
    Matrix m(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i) {
        for (Eigen::Index j = 0; j < cols; ++j) {
            m(i, j) = rng.next_uniform(scale);
        }
    }
    return m;
}

Matrix cyclic_orthogonal(Eigen::Index n) {
    if (n < 1) {
        throw DimensionError("cyclic_orthogonal: order must be positive, got " + std::to_string(n));
    }
    Matrix c = Matrix::Zero(n, n);
    c(0, n - 1) = 1.0;
    for (Eigen::Index i = 1; i < n; ++i) {
        c(i, i - 1) = 1.0;
    }
    return c;
}

Matrix random_orthogonal(RngStream& rng, Eigen::Index n) {
    if (n < 1) {
        throw DimensionError("random_orthogonal: order must be positive, got " + std::to_string(n));
    }
    const Matrix m = uniform_matrix(rng, n, n, 1.0);
    Eigen::HouseholderQR<Matrix> qr(m);
    Matrix q = qr.householderQ();
    const Matrix& r = qr.matrixQR();
    for (Eigen::Index j = 0; j < n; ++j) {
        if (r(j, j) < 0.0) q.col(j) = -q.col(j);
    }
    return q;
}

double spectral_radius(const Matrix& m) {
    double radius = 0.0;
    for (const Complex& lambda : eigenvalues(m)) {
        radius = std::max(radius, std::abs(lambda));
    }
    return radius;
}

Matrix rescale_to_radius(const Matrix& m, double target) {
    if (target <= 0.0) {
        throw NumericError("rescale_to_radius: target must be positive, got " + std::to_string(target));
    }
    const double radius = spectral_radius(m);
    if (radius < 1e-12) {
        throw NumericError("rescale_to_radius: spectral radius " + std::to_string(radius) +
                           " is degenerate, rescaling undefined");
    }
    return m * (target / radius);
}

double spectral_norm(const Matrix& m) {
    if (m.rows() < 1 || m.cols() < 1) {
        throw DimensionError("spectral_norm: empty matrix");
    }
    const Eigen::Index n = m.cols();

    // Power iteration on m^T m; deterministic start vector, restart if the
    // first vector happens to lie in the null space.
    Vector v(n);
    for (int attempt = 0; attempt < 4; ++attempt) {
        for (Eigen::Index i = 0; i < n; ++i) {
            const std::uint64_t bits = RngStream::mix(static_cast<std::uint64_t>(i) + 1 +
                                                      static_cast<std::uint64_t>(attempt) * 0x51ull);
            v(i) = (static_cast<double>(bits >> 11) + 0.5) * 0x1.0p-53;
        }
        v.normalize();

        double estimate = 0.0;
        constexpr int kMaxIters = 20000;
        for (int it = 0; it < kMaxIters; ++it) {
            Vector w = m.transpose() * (m * v);
            const double norm = w.norm();
            if (norm == 0.0) break; // null-space start; try another vector
            w /= norm;
            const double next = norm; // Rayleigh quotient of m^T m at unit v
            v = w;
            if (it > 0 && std::abs(next - estimate) <= 1e-10 * std::max(next, 1e-300)) {
                return std::sqrt(next);
            }
            estimate = next;
        }
        if (estimate > 0.0) return std::sqrt(estimate);
    }
    return 0.0; // m^T m annihilated every start vector: zero matrix
}

namespace {

bool spectrum_less(const Complex& a, const Complex& b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
}

} // namespace

double spectrum_match_distance(const Spectrum& a, const Spectrum& b) {
    if (a.size() != b.size()) {
        throw DimensionError("spectrum_match_distance: sizes differ, " +
                             std::to_string(a.size()) + " vs " + std::to_string(b.size()));
    }
    Spectrum lhs = a;
    Spectrum rhs = b;
    std::sort(lhs.begin(), lhs.end(), spectrum_less);
    std::sort(rhs.begin(), rhs.end(), spectrum_less);

    // Greedy nearest-unmatched pairing. Plain index-wise pairing after the
    // sort is almost always right; the nearest-partner scan keeps conjugate
    // pairs straddling a tiny real-part perturbation from flipping order.
    std::vector<bool> used(rhs.size(), false);
    double worst = 0.0;
    for (const Complex& x : lhs) {
        std::size_t best = rhs.size();
        double best_dist = 0.0;
        for (std::size_t j = 0; j < rhs.size(); ++j) {
            if (used[j]) continue;
            const double d = std::abs(x - rhs[j]);
            if (best == rhs.size() || d < best_dist) {
                best = j;
                best_dist = d;
            }
        }
        used[best] = true;
        worst = std::max(worst, best_dist);
    }
    return worst;
}

double conjugate_pairing_residual(const Spectrum& s) {
    Spectrum conj(s.size());
    std::transform(s.begin(), s.end(), conj.begin(), [](const Complex& z) { return std::conj(z); });
    return spectrum_match_distance(s, conj);
}

} // namespace resrmn
