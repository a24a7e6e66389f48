#include "resrmn/linalg.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace resrmn {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// Diagonal similarity scaling (radix 2) equalizing row and column norms.
// Eigenvalues are preserved exactly; conditioning of the QR iteration is not.
void balance(Matrix& a) {
    const Eigen::Index n = a.rows();
    if (n < 2) return;
    bool converged = false;
    while (!converged) {
        converged = true;
        for (Eigen::Index i = 0; i < n; ++i) {
            double c = a.col(i).cwiseAbs().sum() - std::abs(a(i, i));
            double r = a.row(i).cwiseAbs().sum() - std::abs(a(i, i));
            if (c == 0.0 || r == 0.0) continue;
            const double s = c + r;
            double f = 1.0;
            double g = r / 2.0;
            while (c < g) {
                f *= 2.0;
                c *= 4.0;
            }
            g = r * 2.0;
            while (c > g) {
                f /= 2.0;
                c /= 4.0;
            }
            if ((c + r) / f < 0.95 * s) {
                converged = false;
                a.row(i) *= 1.0 / f;
                a.col(i) *= f;
            }
        }
    }
}

// Householder reduction to upper Hessenberg form, in place. No similarity
// accumulation: only eigenvalues are required.
void hessenberg(Matrix& a) {
    const Eigen::Index n = a.rows();
    for (Eigen::Index k = 0; k + 2 < n; ++k) {
        const Eigen::Index len = n - k - 1;
        const double norm = a.col(k).segment(k + 1, len).norm();
        if (norm == 0.0) continue;
        const double alpha = a(k + 1, k) >= 0.0 ? -norm : norm;
        Vector v = a.col(k).segment(k + 1, len);
        v(0) -= alpha;
        const double vnorm = v.norm();
        if (vnorm == 0.0) continue;
        v /= vnorm;
        a.block(k + 1, k, len, n - k) -=
            2.0 * v * (v.transpose() * a.block(k + 1, k, len, n - k));
        a.block(0, k + 1, n, len) -= 2.0 * (a.block(0, k + 1, n, len) * v) * v.transpose();
        a(k + 1, k) = alpha;
        if (len > 1) a.col(k).segment(k + 2, len - 1).setZero();
    }
}

// Eigenvalues of the 2x2 block [[a11, a12], [a21, a22]], appended to out.
void push_two_by_two(double a11, double a12, double a21, double a22, Spectrum& out) {
    const double half_diff = 0.5 * (a11 - a22);
    const double w = a21 * a12;
    const double disc = half_diff * half_diff + w;
    if (disc >= 0.0) {
        double z = std::sqrt(disc);
        z = half_diff >= 0.0 ? half_diff + z : half_diff - z;
        const double lambda1 = a22 + z;
        const double lambda2 = z != 0.0 ? a22 - w / z : lambda1;
        out.emplace_back(lambda1, 0.0);
        out.emplace_back(lambda2, 0.0);
    } else {
        const double re = a22 + half_diff;
        const double im = std::sqrt(-disc);
        out.emplace_back(re, im);
        out.emplace_back(re, -im);
    }
}

// Francis implicit double-shift QR with deflation on an upper Hessenberg
// matrix. Exceptional shifts after 10 and 20 stalled sweeps on a block;
// throws once the global iteration budget (100 n) is spent.
Spectrum francis_qr(Matrix& h) {
    const Eigen::Index n = h.rows();
    Spectrum eigs;
    eigs.reserve(static_cast<std::size_t>(n));

    const double hnorm = h.cwiseAbs().sum();
    const long iteration_cap = 100 * static_cast<long>(n);
    long total_iterations = 0;

    Eigen::Index high = n - 1;
    int its = 0;
    while (high >= 0) {
        // Deflation scan: smallest l with a negligible subdiagonal below it.
        Eigen::Index l = high;
        while (l > 0) {
            double s = std::abs(h(l - 1, l - 1)) + std::abs(h(l, l));
            if (s == 0.0) s = hnorm;
            if (std::abs(h(l, l - 1)) <= kEps * s) {
                h(l, l - 1) = 0.0;
                break;
            }
            --l;
        }

        if (l == high) {
            eigs.emplace_back(h(high, high), 0.0);
            --high;
            its = 0;
            continue;
        }
        if (l == high - 1) {
            push_two_by_two(h(high - 1, high - 1), h(high - 1, high), h(high, high - 1),
                            h(high, high), eigs);
            high -= 2;
            its = 0;
            continue;
        }

        if (total_iterations >= iteration_cap) {
            throw NumericError("eigenvalues: QR iteration failed to converge for matrix of order " +
                               std::to_string(n));
        }
        ++total_iterations;

        // Double shift from the trailing 2x2, replaced by the standard
        // exceptional values when a block has stalled.
        double sum;
        double prod;
        if (its == 10 || its == 20) {
            const double s = std::abs(h(high, high - 1)) + std::abs(h(high - 1, high - 2));
            const double d = 0.75 * s + h(high, high);
            sum = 2.0 * d;
            prod = d * d + 0.4375 * s * s;
        } else {
            sum = h(high - 1, high - 1) + h(high, high);
            prod = h(high - 1, high - 1) * h(high, high) - h(high - 1, high) * h(high, high - 1);
        }
        ++its;

        // First column of (H - s1)(H - s2) e1 at candidate start rows; walk up
        // from the bottom looking for two consecutive small subdiagonals.
        double p = 0.0;
        double q = 0.0;
        double r = 0.0;
        Eigen::Index m = high - 2;
        for (; m >= l; --m) {
            const double z = h(m, m);
            p = (z * z - sum * z + prod) / h(m + 1, m) + h(m, m + 1);
            q = h(m, m) + h(m + 1, m + 1) - sum;
            r = h(m + 2, m + 1);
            const double scale = std::abs(p) + std::abs(q) + std::abs(r);
            p /= scale;
            q /= scale;
            r /= scale;
            if (m == l) break;
            const double u = std::abs(h(m, m - 1)) * (std::abs(q) + std::abs(r));
            const double v =
                std::abs(p) * (std::abs(h(m - 1, m - 1)) + std::abs(z) + std::abs(h(m + 1, m + 1)));
            if (u <= kEps * v) break;
        }

        // Clear stale bulge debris below the second subdiagonal.
        for (Eigen::Index i = m + 2; i <= high; ++i) {
            h(i, i - 2) = 0.0;
            if (i > m + 2) h(i, i - 3) = 0.0;
        }

        // Chase the bulge from row m down to the bottom of the block.
        for (Eigen::Index k = m; k < high; ++k) {
            if (k != m) {
                p = h(k, k - 1);
                q = h(k + 1, k - 1);
                r = k + 2 <= high ? h(k + 2, k - 1) : 0.0;
            }
            const double colscale = std::abs(p) + std::abs(q) + std::abs(r);
            if (colscale != 0.0) {
                p /= colscale;
                q /= colscale;
                r /= colscale;
            }
            double alpha = std::sqrt(p * p + q * q + r * r);
            if (p < 0.0) alpha = -alpha;
            if (alpha == 0.0) continue;

            if (k != m) {
                h(k, k - 1) = -alpha * colscale;
            } else if (l != m) {
                h(k, k - 1) = -h(k, k - 1);
            }

            p += alpha;
            const double x = p / alpha;
            const double y = q / alpha;
            const double z = r / alpha;
            q /= p;
            r /= p;

            const bool has_third_row = k + 2 <= high;
            for (Eigen::Index j = k; j <= high; ++j) {
                double t = h(k, j) + q * h(k + 1, j);
                if (has_third_row) {
                    t += r * h(k + 2, j);
                    h(k + 2, j) -= t * z;
                }
                h(k + 1, j) -= t * y;
                h(k, j) -= t * x;
            }
            const Eigen::Index row_end = std::min(high, k + 3);
            for (Eigen::Index i = l; i <= row_end; ++i) {
                double t = x * h(i, k) + y * h(i, k + 1);
                if (has_third_row) {
                    t += z * h(i, k + 2);
                    h(i, k + 2) -= t * r;
                }
                h(i, k + 1) -= t * q;
                h(i, k) -= t;
            }
        }
    }
    return eigs;
}

} // namespace

Spectrum eigenvalues(const Matrix& m) {
    if (m.rows() != m.cols()) {
        throw DimensionError("eigenvalues: matrix is " + std::to_string(m.rows()) + "x" +
                             std::to_string(m.cols()) + ", square required");
    }
    if (m.rows() == 0) {
        throw DimensionError("eigenvalues: empty matrix");
    }
    if (!m.allFinite()) {
        throw NumericError("eigenvalues: matrix has non-finite entries");
    }
    if (m.rows() == 1) {
        return {Complex(m(0, 0), 0.0)};
    }
    Matrix h = m;
    balance(h);
    hessenberg(h);
    return francis_qr(h);
}

} // namespace resrmn
