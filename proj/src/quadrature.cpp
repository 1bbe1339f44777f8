#include "leroy/quadrature.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <mutex>

#include "leroy/errors.hpp"

namespace leroy::quadrature {

namespace {

constexpr double kLog10Of2 = 0.30102999566398120;

// P_n(x) and P_n'(x) by the three-term recurrence.
std::pair<BigReal, BigReal> legendre(int n, const BigReal& x) {
  Precision p = x.precision();
  BigReal p0(1L, p), p1(x);
  for (int k = 2; k <= n; ++k) {
    BigReal p2 = (x * p1 * (2 * k - 1) - p0 * (k - 1)) / static_cast<long>(k);
    p0 = std::move(p1);
    p1 = std::move(p2);
  }
  BigReal dp = (x * p1 - p0) * n / (x * x - 1L);
  return {p1, dp};
}

GaussLegendreRule compute_rule(int n, Precision p) {
  Precision wp = p.plus_bits(32);
  GaussLegendreRule rule;
  rule.nodes.resize(static_cast<std::size_t>(n));
  rule.weights.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < (n + 1) / 2; ++i) {
    // Newton from the classical asymptotic guess; converges quadratically
    BigReal x(std::cos(M_PI * (i + 0.75) / (n + 0.5)), wp);
    for (int it = 0; it < 200; ++it) {
      auto [pn, dpn] = legendre(n, x);
      BigReal dx = pn / dpn;
      x -= dx;
      if (dx.is_zero() || dx.exponent() < x.exponent() - static_cast<long>(wp.bits) + 4) break;
    }
    auto [pn, dpn] = legendre(n, x);
    BigReal w = 2L / ((1L - x * x) * dpn * dpn);
    // nodes ascending: index n-1-i gets +x, i gets -x
    rule.nodes[static_cast<std::size_t>(n - 1 - i)] = BigReal(x, p);
    rule.nodes[static_cast<std::size_t>(i)] = BigReal(-x, p);
    rule.weights[static_cast<std::size_t>(n - 1 - i)] = BigReal(w, p);
    rule.weights[static_cast<std::size_t>(i)] = BigReal(w, p);
  }
  if (n % 2 == 1) rule.nodes[static_cast<std::size_t>(n / 2)] = BigReal(p);
  return rule;
}

double log10_or_ninf(const BigComplex& z) {
  return z.is_zero() ? -std::numeric_limits<double>::infinity() : z.log10_abs();
}

}  // namespace

std::shared_ptr<const GaussLegendreRule> gauss_legendre(int n, Precision p) {
  if (n < 1) throw Error(ErrorKind::invalid_argument, "Gauss-Legendre rule needs at least one node");
  static std::mutex mutex;
  static std::map<std::pair<int, mpfr_prec_t>, std::shared_ptr<const GaussLegendreRule>> cache;
  {
    std::lock_guard lock(mutex);
    auto it = cache.find({n, p.bits});
    if (it != cache.end()) return it->second;
  }
  auto rule = std::make_shared<const GaussLegendreRule>(compute_rule(n, p));
  std::lock_guard lock(mutex);
  return cache.emplace(std::make_pair(n, p.bits), rule).first->second;
}

std::vector<Panel> uniform_panels(const BigComplex& a, const BigComplex& b, int count) {
  std::vector<Panel> out;
  BigComplex step = (b - a) / BigReal(static_cast<long>(count), a.precision());
  for (int i = 0; i < count; ++i) {
    BigComplex lo = a + step * static_cast<long>(i);
    BigComplex hi = i + 1 == count ? b : a + step * static_cast<long>(i + 1);
    out.push_back({lo, hi});
  }
  return out;
}

std::vector<Panel> graded_panels(const BigComplex& a, const BigComplex& b, int count, double ratio) {
  // lengths proportional to ratio^i, i = 0..count-1
  std::vector<double> cum{0.0};
  double len = 1.0;
  for (int i = 0; i < count; ++i) {
    cum.push_back(cum.back() + len);
    len *= ratio;
  }
  std::vector<Panel> out;
  Precision p = a.precision();
  BigComplex d = b - a;
  for (int i = 0; i < count; ++i) {
    BigComplex lo = i == 0 ? a : a + d * BigReal(cum[static_cast<std::size_t>(i)] / cum.back(), p);
    BigComplex hi = i + 1 == count ? b : a + d * BigReal(cum[static_cast<std::size_t>(i + 1)] / cum.back(), p);
    out.push_back({lo, hi});
  }
  return out;
}

BigComplex apply_rule(const std::vector<Panel>& panels, const Integrand& f, int nodes, Precision p,
                      Execution execution, double* log10_abs_sum) {
  auto rule = gauss_legendre(nodes, p);
  const std::size_t n = static_cast<std::size_t>(nodes);
  const std::size_t total = panels.size() * n;

  // abscissae and scaled weights, then values; the sum runs serially in index order
  std::vector<BigComplex> points(total), scale(panels.size());
  for (std::size_t j = 0; j < panels.size(); ++j) {
    BigComplex mid = (panels[j].a + panels[j].b) * BigReal(0.5, p);
    BigComplex half = (panels[j].b - panels[j].a) * BigReal(0.5, p);
    scale[j] = half;
    for (std::size_t i = 0; i < n; ++i) points[j * n + i] = mid + half * rule->nodes[i];
  }
  std::vector<BigComplex> values(total);
  const long long count = static_cast<long long>(total);
  if (execution == Execution::parallel) {
    // exceptions cannot cross the parallel region; capture the first one
    std::exception_ptr failure;
    std::mutex failure_mutex;
#pragma omp parallel for schedule(dynamic, 4)
    for (long long idx = 0; idx < count; ++idx) {
      try {
        values[static_cast<std::size_t>(idx)] = f(points[static_cast<std::size_t>(idx)]);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
    if (failure) std::rethrow_exception(failure);
  } else {
    for (long long idx = 0; idx < count; ++idx)
      values[static_cast<std::size_t>(idx)] = f(points[static_cast<std::size_t>(idx)]);
  }

  BigComplex sum(p);
  double abs_sum = -std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < panels.size(); ++j) {
    BigComplex panel_sum(p);
    for (std::size_t i = 0; i < n; ++i) panel_sum += values[j * n + i] * rule->weights[i];
    BigComplex contrib = panel_sum * scale[j];
    for (std::size_t i = 0; i < n; ++i) {
      double l = log10_or_ninf(values[j * n + i]) + rule->weights[i].log10_abs() + scale[j].log10_abs();
      if (l > abs_sum)
        abs_sum = l + std::log10(1.0 + std::pow(10.0, abs_sum - l));
      else if (std::isfinite(l))
        abs_sum += std::log10(1.0 + std::pow(10.0, l - abs_sum));
    }
    sum += contrib;
  }
  if (log10_abs_sum) *log10_abs_sum = abs_sum;
  return sum;
}

Result integrate(std::vector<Panel> panels, const Integrand& f, const Options& options) {
  const Precision p = options.precision;
  Result r;
  double abs_sum = 0.0;
  BigComplex prev = apply_rule(panels, f, options.nodes, p, options.execution, &abs_sum);
  r.evaluations = panels.size() * static_cast<std::size_t>(options.nodes);
  double diff = std::numeric_limits<double>::infinity();
  for (int level = 1; level <= options.max_refinements; ++level) {
    std::vector<Panel> finer;
    finer.reserve(panels.size() * 2);
    for (const auto& pan : panels) {
      BigComplex mid = (pan.a + pan.b) * BigReal(0.5, p);
      finer.push_back({pan.a, mid});
      finer.push_back({mid, pan.b});
    }
    panels = std::move(finer);
    BigComplex cur = apply_rule(panels, f, options.nodes, p, options.execution, &abs_sum);
    r.evaluations += panels.size() * static_cast<std::size_t>(options.nodes);
    r.refinements = level;
    diff = log10_or_ninf(cur - prev);
    double scale = std::max(0.0, log10_or_ninf(cur));
    prev = std::move(cur);
    double floor = abs_sum - static_cast<double>(p.bits) * kLog10Of2 + 1.0;
    if (diff < options.tol_log10 + scale || diff < floor) {
      r.converged = true;
      break;
    }
  }
  double floor = abs_sum - static_cast<double>(p.bits) * kLog10Of2 + 1.0;
  r.value = prev;
  r.error = numerics::pow10(std::max(diff, floor), Precision{64});
  r.panels = panels.size();
  return r;
}

}  // namespace leroy::quadrature
