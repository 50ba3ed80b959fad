#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fgplab/errors.hpp"
#include "fgplab/linalg.hpp"
#include "fgplab/parallel.hpp"
#include "fgplab/rng.hpp"

namespace fgplab {

/// Piecewise-constant-in-time sample table. A single entry means a constant
/// coefficient; otherwise the value at t is the last sample with time <= t.
template <typename T>
class Sampled {
public:
  Sampled() = default;
  explicit Sampled(T constant) : values_{std::move(constant)} {}
  Sampled(std::vector<double> times, std::vector<T> values)
      : times_(std::move(times)), values_(std::move(values)) {
    if (values_.empty()) throw ValidationError("sampled coefficient is empty");
    if (times_.size() != values_.size())
      throw ValidationError("sampled coefficient: times/values size mismatch");
    for (std::size_t i = 1; i < times_.size(); ++i)
      if (times_[i] <= times_[i - 1])
        throw ValidationError("sampled coefficient: times must increase");
  }

  bool constant() const { return values_.size() == 1; }
  std::size_t count() const { return values_.size(); }
  const std::vector<T>& values() const { return values_; }

  const T& at(double t) const {
    if (values_.size() == 1) return values_.front();
    std::size_t lo = 0;
    for (std::size_t i = 1; i < times_.size() && times_[i] <= t; ++i) lo = i;
    return values_[lo];
  }

private:
  std::vector<double> times_;
  std::vector<T> values_;
};

/// n-asset Ito market on log prices: dL = gamma dt + sigma dW, with W a
/// d-dimensional Brownian motion, d >= n. An optional money-market asset has
/// an identically zero volatility row.
struct MarketSpec {
  std::size_t n = 0;
  std::size_t d = 0;
  Sampled<Vec> gamma;   // drift per year, n-vector
  Sampled<Mat> sigma;   // volatility, n x d, 1/sqrt(year)
  std::optional<std::size_t> money_market_index;
  Vec initial_log_prices;

  void validate() const {
    if (n == 0) throw ValidationError("market: n must be >= 1");
    if (d < n) throw ValidationError("market: d must be >= n");
    if (initial_log_prices.size() != n)
      throw ValidationError("market: L0 must have n entries");
    if (!finite(initial_log_prices))
      throw ValidationError("market: L0 has nonfinite entries");
    for (const Vec& g : gamma.values()) {
      if (g.size() != n) throw ValidationError("market: gamma must be length n");
      if (!finite(g)) throw ValidationError("market: nonfinite drift");
    }
    for (const Mat& s : sigma.values()) {
      if (s.rows() != n || s.cols() != d)
        throw ValidationError("market: sigma must be n x d");
      if (!s.finite()) throw ValidationError("market: nonfinite volatility");
      if (!is_psd(outer_self(s)))
        throw ValidationError("market: sigma sigma' is not PSD");
      if (money_market_index) {
        for (std::size_t k = 0; k < d; ++k)
          if (s(*money_market_index, k) != 0.0)
            throw ValidationError(
                "market: money market asset must have a zero sigma row");
      }
    }
    if (money_market_index && *money_market_index >= n)
      throw ValidationError("market: money_market_index out of range");
  }
};

/// Uniform grid on [0, T] with M steps, timestamps t_m = m * T / M.
struct TimeGrid {
  double horizon = 0.0;
  std::size_t steps = 0;

  TimeGrid() = default;
  TimeGrid(double T, std::size_t M) : horizon(T), steps(M) {
    if (!(T > 0.0) || !std::isfinite(T))
      throw ValidationError("grid: horizon must be positive and finite");
    if (M < 1) throw ValidationError("grid: steps must be >= 1");
  }

  double dt() const { return horizon / static_cast<double>(steps); }
  double time(std::size_t m) const { return dt() * static_cast<double>(m); }
  std::size_t points() const { return steps + 1; }
};

enum class PathOrigin { simulated, ingested };

/// Ensemble of log-price paths on a common grid. Each path is an
/// (M+1) x n matrix of log prices.
struct PathSet {
  TimeGrid grid;
  std::size_t assets = 0;
  std::vector<Mat> logs;
  std::uint64_t seed = 0;
  PathOrigin origin = PathOrigin::simulated;

  std::size_t n_paths() const { return logs.size(); }
};

/// Instantaneous covariance a(t) = sigma(t) sigma(t)'.
inline Mat covariance(const MarketSpec& spec, double t) {
  return outer_self(spec.sigma.at(t));
}

/// Euler-Maruyama on log prices for one path, using the path's own
/// counter-based substream. Exact in distribution for constant coefficients.
inline Mat simulate_log_path(const MarketSpec& spec, const TimeGrid& grid,
                             std::uint64_t seed, std::size_t path_index) {
  const std::size_t n = spec.n, d = spec.d, M = grid.steps;
  const double dt = grid.dt();
  const double sqrt_dt = std::sqrt(dt);
  RandomStream rng(seed, path_index);
  Mat path(M + 1, n);
  for (std::size_t i = 0; i < n; ++i) path(0, i) = spec.initial_log_prices[i];
  Vec z(d);
  for (std::size_t m = 0; m < M; ++m) {
    const double t = grid.time(m);
    const Vec& g = spec.gamma.at(t);
    const Mat& s = spec.sigma.at(t);
    for (std::size_t k = 0; k < d; ++k) z[k] = rng.next_normal();
    for (std::size_t i = 0; i < n; ++i) {
      double diff = 0.0;
      for (std::size_t k = 0; k < d; ++k) diff += s(i, k) * z[k];
      path(m + 1, i) = path(m, i) + g[i] * dt + sqrt_dt * diff;
    }
  }
  return path;
}

/// Simulates an ensemble. Bit-deterministic under a fixed seed and
/// path-order independent: path k is identical regardless of n_paths.
inline PathSet simulate_paths(const MarketSpec& spec, const TimeGrid& grid,
                              std::size_t n_paths, std::uint64_t seed) {
  spec.validate();
  if (n_paths < 1) throw ValidationError("simulate: n_paths must be >= 1");
  PathSet out;
  out.grid = grid;
  out.assets = spec.n;
  out.seed = seed;
  out.origin = PathOrigin::simulated;
  out.logs.resize(n_paths);
  parallel_for(n_paths, [&](std::size_t p) {
    out.logs[p] = simulate_log_path(spec, grid, seed, p);
  });
  return out;
}

/// Relative covariance with respect to weights rho:
/// arel_ij = a_ij - [a rho]_j - [a rho]_i + rho' a rho.
/// Guarantees rho' arel rho = 0 up to rounding.
inline Mat relative_covariance(const Mat& a, const Vec& rho,
                               double weight_tol = 1e-12) {
  const std::size_t n = a.rows();
  if (rho.size() != n)
    throw ValidationError("relative_covariance: weight dimension mismatch");
  if (std::abs(sum(rho) - 1.0) > weight_tol)
    throw ValidationError("relative_covariance: weights must sum to 1");
  const Vec arho = matvec(a, rho);
  const double arr = dot(rho, arho);
  Mat rel(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      rel(i, j) = a(i, j) - arho[j] - arho[i] + arr;
  return rel;
}

/// Per-path realized covariation over non-overlapping lag-step increments.
struct RealizedCovariation {
  Mat total;       // sum of increment outer products over the window used
  Mat annualized;  // total divided by elapsed time actually covered
  std::size_t increments = 0;
};

inline RealizedCovariation realized_covariation_path(const Mat& logs,
                                                     const TimeGrid& grid,
                                                     std::size_t lag) {
  const std::size_t M = grid.steps, n = logs.cols();
  if (lag < 1 || lag > M)
    throw ValidationError("realized_covariation: lag must be in [1, M]");
  RealizedCovariation rc;
  rc.total = Mat(n, n);
  const std::size_t k = M / lag;  // non-overlapping increments
  for (std::size_t blk = 0; blk < k; ++blk) {
    const std::size_t m0 = blk * lag, m1 = m0 + lag;
    for (std::size_t i = 0; i < n; ++i) {
      const double di = logs(m1, i) - logs(m0, i);
      for (std::size_t j = 0; j < n; ++j) {
        const double dj = logs(m1, j) - logs(m0, j);
        rc.total(i, j) += di * dj;
      }
    }
  }
  rc.increments = k;
  const double elapsed = grid.dt() * static_cast<double>(k * lag);
  rc.annualized = rc.total;
  for (double& x : rc.annualized.data()) x /= elapsed;
  return rc;
}

inline std::vector<RealizedCovariation> realized_covariation(
    const PathSet& paths, std::size_t lag) {
  std::vector<RealizedCovariation> out(paths.n_paths());
  parallel_for(paths.n_paths(), [&](std::size_t p) {
    out[p] = realized_covariation_path(paths.logs[p], paths.grid, lag);
  });
  return out;
}

/// Numeraire-relative log prices for one path: Lrel_i,m = L_i,m - logV_m.
/// log_wealth is the numeraire's log-wealth series (log V%rho, V0 = 1).
inline Mat to_numeraire_path(const Mat& logs, const Vec& log_wealth) {
  if (log_wealth.size() != logs.rows())
    throw ValidationError("to_numeraire: wealth series length mismatch");
  Mat rel = logs;
  for (std::size_t m = 0; m < logs.rows(); ++m) {
    if (!std::isfinite(log_wealth[m]))
      throw DegenerateNumeraireError("numeraire wealth nonpositive at step " +
                                     std::to_string(m));
    for (std::size_t i = 0; i < logs.cols(); ++i) rel(m, i) -= log_wealth[m];
  }
  return rel;
}

}  // namespace fgplab
