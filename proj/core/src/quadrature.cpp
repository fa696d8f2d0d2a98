#include "rovib/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <queue>
#include <tuple>
#include <utility>

#include "rovib/errors.hpp"

namespace rovib::quad {

namespace {

// Kronrod abscissae; odd indices are the embedded Gauss-7 nodes.
constexpr std::array<double, 8> kXk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double a, b, value, error;
  bool operator<(const Panel& other) const { return error < other.error; }
};

Panel gk15(const std::function<double(double)>& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  const double fc = f(c);
  double k = kWk[7] * fc;
  double g = kWg[3] * fc;
  for (int i = 0; i < 7; ++i) {
    const double dx = h * kXk[i];
    const double sum = f(c - dx) + f(c + dx);
    k += kWk[i] * sum;
    if (i % 2 == 1) g += kWg[i / 2] * sum;
  }
  k *= h;
  g *= h;
  return {a, b, k, std::abs(k - g)};
}

}  // namespace

Result integrate(const std::function<double(double)>& f, double a, double b,
                 const Options& options) {
  if (!(b > a)) {
    if (a == b) return {0.0, 0.0, 0, 0, true};
    throw InputError("quad::integrate: need a < b");
  }
  const std::size_t start = std::max<std::size_t>(options.initial_panels, 1);
  std::priority_queue<Panel> heap;
  Result res;
  const double width = (b - a) / static_cast<double>(start);
  for (std::size_t i = 0; i < start; ++i) {
    const double lo = a + width * i;
    const double hi = (i + 1 == start) ? b : a + width * (i + 1);
    heap.push(gk15(f, lo, hi));
    res.evaluations += 15;
  }

  auto totals = [&heap] {
    auto copy = heap;
    double v = 0.0, e = 0.0;
    while (!copy.empty()) {
      v += copy.top().value;
      e += copy.top().error;
      copy.pop();
    }
    return std::pair{v, e};
  };

  double value = 0.0, error = 0.0;
  std::tie(value, error) = totals();
  while (heap.size() < options.max_panels) {
    if (error <= std::max(options.abs_tol, options.rel_tol * std::abs(value))) {
      res.converged = true;
      break;
    }
    const Panel worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b)) {
      heap.push(worst);
      break;  // cannot split further in double precision
    }
    const Panel left = gk15(f, worst.a, mid);
    const Panel right = gk15(f, mid, worst.b);
    res.evaluations += 30;
    value += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);
  }
  // Re-sum from the panels to shed drift from the running updates.
  std::tie(value, error) = totals();
  if (!res.converged) {
    res.converged =
        error <= std::max(options.abs_tol, options.rel_tol * std::abs(value));
  }
  res.value = value;
  res.error = error;
  res.panels = heap.size();
  return res;
}

Rule gauss_legendre(std::size_t n) {
  if (n == 0) throw InputError("gauss_legendre: n must be positive");
  Rule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (std::size_t i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (std::size_t k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    // Recompute the derivative at the converged node.
    double p0 = 1.0, p1 = x;
    for (std::size_t k = 2; k <= n; ++k) {
      const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    dp = n * (x * p1 - p0) / (x * x - 1.0);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  return rule;
}

}  // namespace rovib::quad
