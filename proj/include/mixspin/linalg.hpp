#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "mixspin/error.hpp"
#include "mixspin/model.hpp"

namespace mixspin {

inline constexpr double kRowTol = 1e-12;

/// Row-stochastic matrix, row-major. Construction validates entries and row sums.
class TransitionMatrix {
 public:
  TransitionMatrix(std::size_t rows, std::size_t cols, std::vector<double> entries,
                   double row_tol = kRowTol)
      : rows_(rows), cols_(cols), entries_(std::move(entries)), row_tol_(row_tol) {
    if (rows_ == 0 || cols_ == 0 || entries_.size() != rows_ * cols_) {
      throw Error(ErrorCode::ShapeMismatch, "entry count does not match shape");
    }
    for (std::size_t r = 0; r < rows_; ++r) {
      double sum = 0.0;
      for (std::size_t c = 0; c < cols_; ++c) {
        double& v = entries_[r * cols_ + c];
        if (!(v >= -row_tol_ && v <= 1.0 + row_tol_)) {
          throw Error(ErrorCode::NotStochastic, "entry outside [0,1] in row " + std::to_string(r));
        }
        v = std::clamp(v, 0.0, 1.0);
        sum += v;
      }
      if (std::abs(sum - 1.0) > row_tol_) {
        throw Error(ErrorCode::NotStochastic, "row " + std::to_string(r) + " sums to " + std::to_string(sum));
      }
    }
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }
  double row_tol() const noexcept { return row_tol_; }
  const std::vector<double>& entries() const noexcept { return entries_; }

  double operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  std::span<const double> row(std::size_t r) const {
    return std::span<const double>(entries_).subspan(r * cols_, cols_);
  }

  Eigen::MatrixXd to_eigen() const {
    Eigen::MatrixXd m(static_cast<Eigen::Index>(rows_), static_cast<Eigen::Index>(cols_));
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = (*this)(r, c);
    return m;
  }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<double> entries_;
  double row_tol_;
};

/// Product a * b of two kernels (first step a, then b).
inline TransitionMatrix compose(const TransitionMatrix& a, const TransitionMatrix& b) {
  if (a.cols() != b.rows()) throw Error(ErrorCode::ShapeMismatch, "inner dimensions differ");
  std::vector<double> out(a.rows() * b.cols(), 0.0);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t m = 0; m < a.cols(); ++m) {
      const double aim = a(i, m);
      for (std::size_t j = 0; j < b.cols(); ++j) out[i * b.cols() + j] += aim * b(m, j);
    }
  return TransitionMatrix(a.rows(), b.cols(), std::move(out), std::max(a.row_tol(), b.row_tol()));
}

/// Dense eigenvalues of a square matrix, sorted by descending magnitude
/// (ties broken by descending real part). Real parts are reported.
inline SpectralSummary spectrum(const Eigen::MatrixXd& m) {
  if (m.rows() != m.cols() || m.rows() == 0) throw Error(ErrorCode::ShapeMismatch, "spectrum needs a square matrix");
  Eigen::EigenSolver<Eigen::MatrixXd> solver(m, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success) throw Error(ErrorCode::EigenFailure, "eigen decomposition did not converge");
  std::vector<std::complex<double>> values(solver.eigenvalues().data(),
                                           solver.eigenvalues().data() + solver.eigenvalues().size());
  std::sort(values.begin(), values.end(), [](const auto& a, const auto& b) {
    const double ma = std::abs(a);
    const double mb = std::abs(b);
    if (ma != mb) return ma > mb;
    return a.real() > b.real();
  });
  SpectralSummary out;
  out.eigenvalues.reserve(values.size());
  for (const auto& v : values) out.eigenvalues.push_back(v.real());
  out.lambda1 = out.eigenvalues[0];
  out.lambda2 = out.eigenvalues.size() > 1 ? out.eigenvalues[1] : 0.0;
  return out;
}

inline SpectralSummary spectrum(const TransitionMatrix& t) {
  if (!t.square()) throw Error(ErrorCode::ShapeMismatch, "spectrum needs a square kernel");
  return spectrum(t.to_eigen());
}

/// Left fixed vector pi T = pi with sum(pi) = 1.
inline std::vector<double> stationary_distribution(const TransitionMatrix& t) {
  if (!t.square()) throw Error(ErrorCode::ShapeMismatch, "stationary distribution needs a square kernel");
  const auto n = static_cast<Eigen::Index>(t.rows());
  Eigen::MatrixXd a = t.to_eigen().transpose() - Eigen::MatrixXd::Identity(n, n);

  Eigen::FullPivLU<Eigen::MatrixXd> lu(a);
  lu.setThreshold(1e-10);
  if (lu.rank() != n - 1) {
    throw Error(ErrorCode::SingularChain, "stationary vector is not unique (rank " + std::to_string(lu.rank()) + ")");
  }

  // Rows of (T^T - I) sum to zero; swap the last one for the normalisation.
  a.row(n - 1).setOnes();
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(n);
  rhs(n - 1) = 1.0;
  const Eigen::VectorXd pi = a.colPivHouseholderQr().solve(rhs);

  std::vector<double> out(static_cast<std::size_t>(n));
  double total = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    double v = pi(i);
    if (v < 0.0 && v >= -1e-14) v = 0.0;
    out[static_cast<std::size_t>(i)] = v;
    total += v;
  }
  for (double& v : out) v /= total;
  return out;
}

}  // namespace mixspin
