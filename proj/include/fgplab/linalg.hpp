#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <vector>

#include "fgplab/errors.hpp"

namespace fgplab {

using Vec = std::vector<double>;

/// Dense row-major matrix sized for small-n portfolio math. Also doubles as
/// the storage for per-path time series ((M+1) x n blocks).
class Mat {
public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  Mat(std::initializer_list<std::initializer_list<double>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& r : init) {
      if (r.size() != cols_) throw ValidationError("ragged matrix initializer");
      data_.insert(data_.end(), r.begin(), r.end());
    }
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  double& operator()(std::size_t i, std::size_t j) {
    return data_[i * cols_ + j];
  }
  double operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }
  double* row(std::size_t i) { return data_.data() + i * cols_; }
  const double* row(std::size_t i) const { return data_.data() + i * cols_; }
  Vec row_vec(std::size_t i) const {
    return Vec(row(i), row(i) + cols_);
  }
  const std::vector<double>& data() const { return data_; }
  std::vector<double>& data() { return data_; }

  bool finite() const {
    return std::all_of(data_.begin(), data_.end(),
                       [](double x) { return std::isfinite(x); });
  }

private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<double> data_;
};

inline bool finite(const Vec& v) {
  return std::all_of(v.begin(), v.end(),
                     [](double x) { return std::isfinite(x); });
}

inline double dot(const Vec& a, const Vec& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline double sum(const Vec& v) {
  double s = 0.0;
  for (double x : v) s += x;
  return s;
}

inline double norm2(const Vec& v) { return std::sqrt(dot(v, v)); }

inline double max_abs(const Vec& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

inline double max_abs(const Mat& a) {
  double m = 0.0;
  for (double x : a.data()) m = std::max(m, std::abs(x));
  return m;
}

inline Vec matvec(const Mat& a, const Vec& x) {
  Vec y(a.rows(), 0.0);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    double s = 0.0;
    const double* r = a.row(i);
    for (std::size_t j = 0; j < a.cols(); ++j) s += r[j] * x[j];
    y[i] = s;
  }
  return y;
}

inline double quad_form(const Mat& a, const Vec& x) {
  return dot(x, matvec(a, x));
}

/// a = m m' for an n x d matrix m; result symmetric n x n.
inline Mat outer_self(const Mat& m) {
  Mat a(m.rows(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = i; j < m.rows(); ++j) {
      double s = 0.0;
      for (std::size_t k = 0; k < m.cols(); ++k) s += m(i, k) * m(j, k);
      a(i, j) = s;
      a(j, i) = s;
    }
  return a;
}

/// Cholesky-based positive-semidefiniteness test with a relative shift.
/// Accepts matrices whose smallest eigenvalue is >= -tol * ||a||.
inline bool is_psd(const Mat& a, double rel_tol = 1e-10) {
  const std::size_t n = a.rows();
  if (n == 0) return true;
  const double shift = rel_tol * std::max(1e-300, max_abs(a));
  Mat l(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      double s = a(i, j) + (i == j ? shift : 0.0);
      for (std::size_t k = 0; k < j; ++k) s -= l(i, k) * l(j, k);
      if (i == j) {
        if (s < 0.0) return false;
        l(i, i) = std::sqrt(s);
      } else {
        l(i, j) = l(j, j) > 0.0 ? s / l(j, j) : 0.0;
      }
    }
  }
  return true;
}

/// Smallest eigenvalue of a symmetric matrix by bisection on the shifted
/// Cholesky test. Good to ~1e-12 * scale, which is all the ellipticity
/// checks need.
inline double min_eigenvalue(const Mat& a) {
  const double scale = std::max(1e-300, max_abs(a));
  auto psd_shifted = [&](double mu) {
    Mat b = a;
    for (std::size_t i = 0; i < b.rows(); ++i) b(i, i) -= mu;
    return is_psd(b, 1e-14);
  };
  double lo = -2.0 * scale, hi = 2.0 * scale;
  if (!psd_shifted(lo)) return lo;
  for (int it = 0; it < 100; ++it) {
    double mid = 0.5 * (lo + hi);
    if (psd_shifted(mid))
      lo = mid;
    else
      hi = mid;
  }
  return lo;
}

/// Modified Gram-Schmidt. Throws on numerical rank deficiency, naming the
/// offending vector. Input rows are the raw vectors.
inline Mat orthonormalize_rows(const Mat& raw, double pivot_tol = 1e-10) {
  Mat q = raw;
  const std::size_t k = q.rows(), n = q.cols();
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      double proj = 0.0;
      for (std::size_t c = 0; c < n; ++c) proj += q(i, c) * q(j, c);
      for (std::size_t c = 0; c < n; ++c) q(i, c) -= proj * q(j, c);
    }
    double nrm = 0.0;
    for (std::size_t c = 0; c < n; ++c) nrm += q(i, c) * q(i, c);
    nrm = std::sqrt(nrm);
    if (nrm < pivot_tol)
      throw ValidationError("orthonormalize: vector " + std::to_string(i) +
                            " is numerically dependent on its predecessors");
    for (std::size_t c = 0; c < n; ++c) q(i, c) /= nrm;
  }
  return q;
}

/// Compensated (Kahan) summation for order-insensitive ensemble reductions.
class KahanSum {
public:
  void add(double x) {
    double y = x - c_;
    double t = s_ + y;
    c_ = (t - s_) - y;
    s_ = t;
  }
  double value() const { return s_; }

private:
  double s_ = 0.0, c_ = 0.0;
};

inline double mean(const Vec& v) {
  if (v.empty()) return 0.0;
  KahanSum k;
  for (double x : v) k.add(x);
  return k.value() / static_cast<double>(v.size());
}

inline double sample_variance(const Vec& v) {
  if (v.size() < 2) return 0.0;
  const double m = mean(v);
  KahanSum k;
  for (double x : v) k.add((x - m) * (x - m));
  return k.value() / static_cast<double>(v.size() - 1);
}

}  // namespace fgplab
