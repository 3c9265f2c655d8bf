#pragma once

// Brute-force reference implementations used only by the tests. None of
// these call into the library paths they are compared against.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <set>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace oracle {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Direct double-loop convolution truncated at the shorter length.
inline std::vector<Int> convolve(const std::vector<Int>& a, const std::vector<Int>& b) {
  const std::size_t n = std::min(a.size(), b.size());
  std::vector<Int> c(n, 0);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t j = 0; j <= k; ++j) c[k] += a[j] * b[k - j];
  return c;
}

// Visits every i in N_{>=1}^d with lo <= |i| <= hi by plain recursion.
inline void visit_indices(unsigned d, std::uint64_t lo, std::uint64_t hi,
                          const std::function<void(const std::vector<unsigned>&)>& fn) {
  std::vector<unsigned> idx(d, 1);
  std::function<void(unsigned, std::uint64_t)> rec = [&](unsigned axis, std::uint64_t used) {
    if (axis == d) {
      if (used >= lo && used <= hi) fn(idx);
      return;
    }
    for (unsigned v = 1; used + v + (d - axis - 1) <= hi; ++v) {
      idx[axis] = v;
      rec(axis + 1, used + v);
    }
  };
  rec(0, 0);
}

inline std::uint64_t general_lo(unsigned d, unsigned mu) { return std::max<std::uint64_t>(d, mu + 1); }

// sum over the index set of prod f(i_k); f is indexed by level (f[0] unused).
inline Int dup_sum(unsigned d, unsigned mu, const std::vector<Int>& f, bool nested) {
  Int total = 0;
  visit_indices(d, nested ? d + mu : general_lo(d, mu), d + mu, [&](const std::vector<unsigned>& i) {
    Int p = 1;
    for (unsigned v : i) p *= f[v];
    total += p;
  });
  return total;
}

// Exact univariate node identity: a rational that is the coordinate
// (equidistant), the angle fraction (Chebyshev), or the sequence position
// (Leja prefixes).
enum class Fam { EqInterior, EqBoundary, Cheb1, Cheb2, Prefix };

inline std::vector<Rat> node_ids(Fam fam, std::int64_t n) {
  std::vector<Rat> out;
  for (std::int64_t k = 1; k <= n; ++k) {
    switch (fam) {
      case Fam::EqInterior: out.push_back(Rat(2 * k, n + 1) - 1); break;
      case Fam::EqBoundary: out.push_back(n == 1 ? Rat(0) : Rat(2 * (k - 1), n - 1) - 1); break;
      case Fam::Cheb1: out.push_back(Rat(2 * k - 1, 2 * n)); break;
      case Fam::Cheb2: out.push_back(n == 1 ? Rat(1, 2) : Rat(k - 1, n - 1)); break;
      case Fam::Prefix: out.push_back(Rat(k)); break;
    }
  }
  return out;
}

// |Gamma(d, mu)| by materialising every tuple in a std::set.
inline std::size_t grid_size(unsigned d, unsigned mu, Fam fam, const std::vector<std::int64_t>& f,
                             bool nested) {
  std::vector<std::vector<Rat>> sets(f.size());
  for (std::size_t k = 1; k < f.size(); ++k) sets[k] = node_ids(fam, f[k]);
  std::set<std::vector<Rat>> points;
  visit_indices(d, nested ? d + mu : general_lo(d, mu), d + mu, [&](const std::vector<unsigned>& i) {
    std::vector<Rat> p(d);
    std::function<void(unsigned)> rec = [&](unsigned axis) {
      if (axis == d) {
        points.insert(p);
        return;
      }
      for (const Rat& x : sets[i[axis]]) {
        p[axis] = x;
        rec(axis + 1);
      }
    };
    rec(0);
  });
  return points.size();
}

// Leja reference: uniform scan, then bisection on the derivative
// sum 1/(x - x_j) inside each scanned local maximum. Ties within
// tie_rel go to the smaller coordinate.
inline std::vector<double> leja_dense_scan(std::size_t n, double seed, std::size_t candidates = 1'000'001,
                                           double tie_rel = 1e-12) {
  std::vector<double> pts{seed};
  std::vector<double> grid(candidates);
  for (std::size_t j = 0; j < candidates; ++j) {
    grid[j] = -1.0 + 2.0 * static_cast<double>(j) / static_cast<double>(candidates - 1);
  }
  auto objective = [&](double x) {
    double s = 0.0;
    for (double p : pts) s += std::log(std::abs(x - p));
    return s;
  };
  auto deriv = [&](double x) {
    double s = 0.0;
    for (double p : pts) s += 1.0 / (x - p);
    return s;
  };
  std::vector<double> values(candidates);
  while (pts.size() < n) {
    for (std::size_t j = 0; j < candidates; ++j) values[j] = objective(grid[j]);
    std::vector<std::pair<double, double>> peaks;
    for (std::size_t j = 0; j < candidates; ++j) {
      const double v = values[j];
      if (!std::isfinite(v)) continue;
      if (j > 0 && !(v > values[j - 1])) continue;
      if (j + 1 < candidates && !(v >= values[j + 1])) continue;
      double x = grid[j];
      if (j > 0 && j + 1 < candidates) {
        double a = grid[j - 1];
        double b = grid[j + 1];
        for (double p : pts) {
          if (p >= a && p < x) a = std::nextafter(p, 2.0);
          if (p <= b && p > x) b = std::nextafter(p, -2.0);
        }
        // Derivative is decreasing between nodes; bisect for its zero.
        if (deriv(a) > 0 && deriv(b) < 0) {
          for (int it = 0; it < 200 && b - a > 0; ++it) {
            const double m = 0.5 * (a + b);
            if (m <= a || m >= b) break;
            (deriv(m) > 0 ? a : b) = m;
          }
          x = 0.5 * (a + b);
        }
      }
      peaks.emplace_back(x, objective(x));
    }
    double best = -std::numeric_limits<double>::infinity();
    for (const auto& pk : peaks) best = std::max(best, pk.second);
    const double tol = tie_rel * std::max(1.0, std::abs(best));
    double pick = std::numeric_limits<double>::infinity();
    for (const auto& [x, v] : peaks)
      if (v >= best - tol) pick = std::min(pick, x);
    pts.push_back(pick);
  }
  return pts;
}

}  // namespace oracle
