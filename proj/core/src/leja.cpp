#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include "sgcount/errors.hpp"
#include "sgcount/nodes.hpp"

namespace sgcount {
namespace {

constexpr std::size_t kCandidateIntervals = 100'000;  // 100001 candidates
constexpr double kTieRelTol = 1e-12;
constexpr double kNegInf = -std::numeric_limits<double>::infinity();

double log_distance(double x, double y) {
  const double dist = std::abs(x - y);
  return dist == 0.0 ? kNegInf : std::log(dist);
}

// One growing Leja sequence together with the running objective on the
// dense candidate set.
class LejaMaster {
 public:
  LejaMaster(double seed, bool symmetric) : symmetric_(symmetric) {
    candidates_.resize(kCandidateIntervals + 1);
    const double pi = std::numbers::pi;
    const double m = static_cast<double>(kCandidateIntervals);
    // Chebyshev-distributed, ascending, exact endpoints and exact symmetry.
    for (std::size_t j = 0; j <= kCandidateIntervals; ++j) {
      const std::size_t mirror = kCandidateIntervals - j;
      if (j > mirror) {
        candidates_[j] = -candidates_[mirror];
      } else {
        candidates_[j] = -std::cos(pi * static_cast<double>(j) / m);
      }
    }
    candidates_[kCandidateIntervals / 2] = 0.0;
    objective_.assign(candidates_.size(), 0.0);
    add(symmetric ? 0.0 : seed);
  }

  std::vector<double> prefix(std::size_t n) {
    std::lock_guard lock(mutex_);
    while (points_.size() < n) extend();
    return {points_.begin(), points_.begin() + static_cast<std::ptrdiff_t>(n)};
  }

 private:
  struct Peak {
    double lo;
    double hi;
    std::size_t index;
    double bound;
  };

  void add(double x) {
    points_.push_back(x);
    sorted_.insert(std::upper_bound(sorted_.begin(), sorted_.end(), x), x);
    for (std::size_t j = 0; j < candidates_.size(); ++j) objective_[j] += log_distance(candidates_[j], x);
  }

  void extend() {
    const double x = next_point();
    add(x);
    if (symmetric_ && points_.size() < kLejaMaxPoints && x != 0.0) add(-x);
  }

  double objective(double x) const {
    double s = 0.0;
    for (double p : points_) s += log_distance(x, p);
    return s;
  }

  double slope(double x) const {
    double s = 0.0;
    for (double p : points_) s += 1.0 / (x - p);
    return s;
  }

  // Upper bound of the concave objective on [a, b] from the tangents at
  // both ends; +inf when an end is a node.
  double tangent_bound(double a, double b) const {
    const double fa = objective(a);
    const double fb = objective(b);
    if (!std::isfinite(fa) || !std::isfinite(fb)) return std::numeric_limits<double>::infinity();
    const double ga = slope(a);
    const double gb = slope(b);
    double xm = a;
    if (ga > gb) xm = std::clamp((fb - fa + ga * a - gb * b) / (ga - gb), a, b);
    else xm = fa >= fb ? a : b;
    const double bound = std::min(fa + ga * (xm - a), fb + gb * (xm - b));
    return std::max({bound, fa, fb});
  }

  // The objective is concave between neighbouring nodes, so its slope is
  // decreasing there and the maximiser is the slope's sign change.
  std::pair<double, double> refine_max(double a, double b) const {
    if (std::binary_search(sorted_.begin(), sorted_.end(), a)) a = std::nextafter(a, b);
    if (std::binary_search(sorted_.begin(), sorted_.end(), b)) b = std::nextafter(b, a);
    if (!(a < b)) return {a, objective(a)};
    if (slope(a) <= 0.0) return {a, objective(a)};
    if (slope(b) >= 0.0) return {b, objective(b)};
    for (int iter = 0; iter < 200; ++iter) {
      const double m = 0.5 * (a + b);
      if (m <= a || m >= b) break;
      (slope(m) > 0.0 ? a : b) = m;
    }
    const double fa = objective(a);
    const double fb = objective(b);
    return fb > fa ? std::pair{b, fb} : std::pair{a, fa};
  }

  double next_point() const {
    const std::size_t last = candidates_.size() - 1;
    std::vector<Peak> peaks;
    for (std::size_t j = 0; j <= last; ++j) {
      const double v = objective_[j];
      if (!std::isfinite(v)) continue;
      const bool left_ok = j == 0 || v > objective_[j - 1];
      const bool right_ok = j == last || v >= objective_[j + 1];
      if (!left_ok || !right_ok) continue;

      double lo = candidates_[j == 0 ? 0 : j - 1];
      double hi = candidates_[j == last ? last : j + 1];
      // Keep the bracket inside one gap between existing nodes.
      const auto above = std::upper_bound(sorted_.begin(), sorted_.end(), candidates_[j]);
      if (above != sorted_.end()) hi = std::min(hi, *above);
      if (above != sorted_.begin()) lo = std::max(lo, *std::prev(above));
      peaks.push_back({lo, hi, j, 0.0});
    }
    for (Peak& p : peaks) p.bound = tangent_bound(p.lo, p.hi);
    std::sort(peaks.begin(), peaks.end(), [](const Peak& a, const Peak& b) {
      return a.bound != b.bound ? a.bound > b.bound : a.index < b.index;
    });

    std::vector<std::pair<double, double>> refined;  // (x, value)
    double best = kNegInf;
    for (const Peak& p : peaks) {
      if (std::isfinite(best) && p.bound < best - kTieRelTol * std::max(1.0, std::abs(best))) break;
      std::pair<double, double> top{candidates_[p.index], objective(candidates_[p.index])};
      for (const auto& cand : {refine_max(p.lo, p.hi), std::pair{p.lo, objective(p.lo)},
                               std::pair{p.hi, objective(p.hi)}}) {
        if (cand.second > top.second) top = cand;
      }
      refined.push_back(top);
      best = std::max(best, top.second);
    }
    if (refined.empty()) throw InternalError("Leja objective has no finite maximum");

    const double tol = kTieRelTol * std::max(1.0, std::abs(best));
    double choice = std::numeric_limits<double>::infinity();
    for (const auto& [x, v] : refined) {
      if (v >= best - tol) choice = std::min(choice, x);
    }
    return choice;
  }

  bool symmetric_;
  std::vector<double> candidates_;
  std::vector<double> objective_;
  std::vector<double> points_;
  std::vector<double> sorted_;
  std::mutex mutex_;
};

LejaMaster& master_for(double seed, bool symmetric) {
  static std::mutex registry_mutex;
  static std::map<std::pair<std::uint64_t, bool>, std::unique_ptr<LejaMaster>> registry;
  const double canonical_seed = symmetric ? 0.0 : seed + 0.0;  // folds -0.0
  const auto key = std::pair{std::bit_cast<std::uint64_t>(canonical_seed), symmetric};
  std::lock_guard lock(registry_mutex);
  auto& slot = registry[key];
  if (!slot) slot = std::make_unique<LejaMaster>(canonical_seed, symmetric);
  return *slot;
}

}  // namespace

std::vector<double> leja_sequence(std::size_t n, double x1, bool symmetric) {
  if (n > kLejaMaxPoints) {
    throw RangeError("Leja sequences are limited to " + std::to_string(kLejaMaxPoints) + " points");
  }
  if (!(x1 >= -1.0 && x1 <= 1.0)) throw ContractError("Leja seed must lie in [-1, 1]");
  if (n == 0) return {};
  return master_for(x1, symmetric).prefix(n);
}

}  // namespace sgcount
