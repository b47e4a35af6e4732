// Copyright (c) 2026 pwbasis developers
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <string>
#include <vector>

#include "pwbasis/errors.hpp"
#include "pwbasis/rng.hpp"

namespace pwbasis {

using Complex = std::complex<double>;

/// Dense column-major complex matrix, sized for the tiny per-cell systems
/// (n <= 32) and the Gram sections (n <= 4096).
class CMatrix {
  public:
    CMatrix() = default;
    CMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols, Complex{0.0, 0.0}) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Complex& operator()(std::size_t i, std::size_t j) { return a_[j * rows_ + i]; }
    const Complex& operator()(std::size_t i, std::size_t j) const { return a_[j * rows_ + i]; }

    const std::vector<Complex>& data() const { return a_; }

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Complex> a_;
};

namespace detail {

/// In-place LU with partial pivoting.  Returns the pivot permutation and the
/// parity sign; a zero pivot column marks the matrix singular (rank_ok=false).
struct LuResult {
    std::vector<std::size_t> piv;
    int sign = 1;
    bool singular = false;
};

inline LuResult lu_factor(CMatrix& A) {
    const std::size_t n = A.rows();
    LuResult r;
    r.piv.resize(n);
    for (std::size_t i = 0; i < n; ++i) r.piv[i] = i;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t imax = k;
        double amax = std::abs(A(k, k));
        for (std::size_t i = k + 1; i < n; ++i) {
            const double v = std::abs(A(i, k));
            if (v > amax) {
                amax = v;
                imax = i;
            }
        }
        if (amax == 0.0) {
            r.singular = true;
            return r;
        }
        if (imax != k) {
            std::swap(r.piv[imax], r.piv[k]);
            r.sign = -r.sign;
            for (std::size_t j = 0; j < n; ++j) std::swap(A(imax, j), A(k, j));
        }
        const Complex pivot = A(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            const Complex m = A(i, k) / pivot;
            A(i, k) = m;
            for (std::size_t j = k + 1; j < n; ++j) A(i, j) -= m * A(k, j);
        }
    }
    return r;
}

}  // namespace detail

/// |det A| by LU with partial pivoting; 0 for a numerically singular matrix.
inline double det_modulus(CMatrix A) {
    if (A.rows() != A.cols()) throw ValueError("det of non-square matrix");
    auto lu = detail::lu_factor(A);
    if (lu.singular) return 0.0;
    double m = 1.0;
    for (std::size_t k = 0; k < A.rows(); ++k) m *= std::abs(A(k, k));
    return m;
}

/// Solves A x = b by LU with partial pivoting.  Throws SingularSystem when a
/// pivot column vanishes.
inline std::vector<Complex> lu_solve(CMatrix A, const std::vector<Complex>& b,
                                     const std::string& context = "") {
    const std::size_t n = A.rows();
    if (A.cols() != n || b.size() != n) throw ValueError("lu_solve: shape mismatch");
    auto lu = detail::lu_factor(A);
    if (lu.singular)
        throw SingularSystem("singular linear system" + (context.empty() ? "" : " " + context));
    std::vector<Complex> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = b[lu.piv[i]];
    for (std::size_t i = 1; i < n; ++i)
        for (std::size_t j = 0; j < i; ++j) x[i] -= A(i, j) * x[j];
    for (std::size_t i = n; i-- > 0;) {
        for (std::size_t j = i + 1; j < n; ++j) x[i] -= A(i, j) * x[j];
        x[i] /= A(i, i);
    }
    return x;
}

/// Extremal eigenvalues of a Hermitian matrix by power iteration on G and on
/// c*I - G with c the lambda_max estimate.  Residual target ||Gv - lambda v||.
struct ExtremalEigen {
    double lambda_min = 0.0;
    double lambda_max = 0.0;
};

namespace detail {

inline double power_iterate(const CMatrix& G, double shift, bool negate, double tol,
                            long max_iter) {
    const std::size_t n = G.rows();
    // Deterministic start vector; fixed seed keeps reports reproducible.
    Rng rng(0x517cc1b727220a95ULL);
    std::vector<Complex> v(n), w(n);
    double nrm = 0.0;
    for (auto& c : v) {
        c = Complex{rng.uniform() - 0.5, rng.uniform() - 0.5};
        nrm += std::norm(c);
    }
    nrm = std::sqrt(nrm);
    for (auto& c : v) c /= nrm;

    double lambda = 0.0;
    for (long it = 0; it < max_iter; ++it) {
        // w = (negate ? shift*I - G : G) v
        for (std::size_t i = 0; i < n; ++i) {
            Complex acc{0.0, 0.0};
            for (std::size_t j = 0; j < n; ++j) acc += G(i, j) * v[j];
            w[i] = negate ? shift * v[i] - acc : acc;
        }
        double rq = 0.0;  // Rayleigh quotient (real for Hermitian G)
        for (std::size_t i = 0; i < n; ++i) rq += (std::conj(v[i]) * w[i]).real();
        lambda = rq;
        double res = 0.0, wn = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            res += std::norm(w[i] - lambda * v[i]);
            wn += std::norm(w[i]);
        }
        res = std::sqrt(res);
        wn = std::sqrt(wn);
        if (res <= tol) return lambda;
        if (wn == 0.0) return lambda;  // v is exactly in the kernel: eigenvalue 0
        for (std::size_t i = 0; i < n; ++i) v[i] = w[i] / wn;
    }
    throw ConvergenceError("power iteration stalled after " + std::to_string(max_iter) +
                               " iterations",
                           max_iter);
}

}  // namespace detail

inline ExtremalEigen hermitian_extremes(const CMatrix& G, double tol = 1e-8,
                                        long max_iter = 200000) {
    ExtremalEigen e;
    e.lambda_max = detail::power_iterate(G, 0.0, false, tol, max_iter);
    const double c = e.lambda_max + 1e-3 * std::max(1.0, std::abs(e.lambda_max));
    const double top = detail::power_iterate(G, c, true, tol, max_iter);
    e.lambda_min = c - top;
    if (e.lambda_min < 0.0 && e.lambda_min > -1e-10) e.lambda_min = 0.0;
    return e;
}

/// Pairwise (cascade) summation over a fixed term order; keeps long
/// oscillatory sums reproducible and cancellation-stable.
inline Complex pairwise_sum(std::vector<Complex> terms) {
    if (terms.empty()) return {0.0, 0.0};
    std::size_t n = terms.size();
    while (n > 1) {
        const std::size_t half = n / 2;
        for (std::size_t i = 0; i < half; ++i) terms[i] = terms[2 * i] + terms[2 * i + 1];
        if (n % 2 == 1) {
            terms[half] = terms[n - 1];
            n = half + 1;
        } else {
            n = half;
        }
    }
    return terms[0];
}

}  // namespace pwbasis
