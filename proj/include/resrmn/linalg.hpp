#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "resrmn/errors.hpp"
#include "resrmn/rng.hpp"

namespace resrmn {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using Complex = std::complex<double>;

/// Eigenvalues of a real square matrix, with multiplicity.
using Spectrum = std::vector<Complex>;

/// rows x cols matrix with i.i.d. entries uniform on (-scale, scale),
/// drawn row-major from the stream. scale = 0 yields the zero matrix.
Matrix uniform_matrix(RngStream& rng, Eigen::Index rows, Eigen::Index cols, double scale);

/// n x n circular-shift permutation: C(0, n-1) = 1 and C(i, i-1) = 1.
/// Acts as a lossless delay line; spectral radius exactly 1.
Matrix cyclic_orthogonal(Eigen::Index n);

/// Q factor of the QR decomposition of an n x n matrix with i.i.d. entries
/// uniform in (-1, 1). Column j is flipped when R(j, j) < 0 so the
/// factorization (and hence the run) is unique and reproducible.
Matrix random_orthogonal(RngStream& rng, Eigen::Index n);

/// All n eigenvalues of a real square matrix, via balancing, Householder
/// reduction to Hessenberg form, and Francis double-shift QR iteration with
/// deflation. Throws NumericError naming the matrix order if the iteration
/// cap (100 * n) is exhausted.
Spectrum eigenvalues(const Matrix& m);

/// max |lambda| over eigenvalues(m).
double spectral_radius(const Matrix& m);

/// m * (target / spectral_radius(m)). Throws NumericError when the spectral
/// radius is below 1e-12 (rescaling undefined).
Matrix rescale_to_radius(const Matrix& m, double target);

/// Largest singular value, by power iteration on m^T m to relative
/// tolerance 1e-10.
double spectral_norm(const Matrix& m);

/// Maximum pairwise distance of the best greedy matching between two
/// eigenvalue multisets (sorted by (re, im), nearest unmatched partner).
/// Sizes must agree.
double spectrum_match_distance(const Spectrum& a, const Spectrum& b);

/// Largest distance from any value to its conjugate's best match; near zero
/// for spectra of real matrices.
double conjugate_pairing_residual(const Spectrum& s);

} // namespace resrmn
