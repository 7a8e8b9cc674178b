#include "shnr/circle_search.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <queue>
#include <vector>

#include "shnr/linalg.hpp"

namespace shnr {

void ThetaOptConfig::validate() const {
  if (grid_points < 8) throw Error(Errc::InvalidArgument, "ThetaOptConfig: grid_points must be >= 8");
  if (!(refine_tol > 0.0)) throw Error(Errc::InvalidArgument, "ThetaOptConfig: refine_tol must be > 0");
  if (max_refine_iters < 0) throw Error(Errc::InvalidArgument, "ThetaOptConfig: max_refine_iters < 0");
  if (!(value_rtol >= 0.0)) throw Error(Errc::InvalidArgument, "ThetaOptConfig: value_rtol < 0");
}

std::pair<double, double> golden_section_max(const std::function<double(double)>& f, double lo,
                                             double hi, double tol, int max_iters) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo;
  double b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c);
  double fd = f(d);
  for (int it = 0; it < max_iters && (b - a) > tol; ++it) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  return fc >= fd ? std::pair{c, fc} : std::pair{d, fd};
}

namespace {

struct Arc {
  double lo, hi, f_lo, f_hi, upper;
  bool operator<(const Arc& other) const { return upper < other.upper; }
};

Arc make_arc(double lo, double hi, double f_lo, double f_hi) {
  return {lo, hi, f_lo, f_hi, std::max(f_lo, f_hi) / std::cos(0.5 * (hi - lo))};
}

double wrap_half_turn(double theta) {
  const double pi = std::numbers::pi;
  double t = std::fmod(theta, pi);
  if (t < 0.0) t += pi;
  return t;
}

}  // namespace

CircleMax maximize_seminorm_on_circle(const std::function<double(double)>& f,
                                      const ThetaOptConfig& cfg) {
  cfg.validate();
  const double pi = std::numbers::pi;
  const int n = cfg.grid_points;
  const double h = pi / n;

  CircleMax out;
  std::vector<double> grid(n);
  for (int k = 0; k < n; ++k) grid[k] = f(k * h);
  out.evaluations = n;

  const int kbest = static_cast<int>(std::max_element(grid.begin(), grid.end()) - grid.begin());
  out.value = grid[kbest];
  out.theta = kbest * h;
  if (out.value == 0.0 && std::all_of(grid.begin(), grid.end(), [](double v) { return v == 0.0; })) {
    // A seminorm vanishing at n >= 3 distinct directions of R^2 vanishes identically.
    return out;
  }

  int polish_evals = 0;
  const auto counted = [&](double t) {
    ++polish_evals;
    return f(t);
  };
  const auto [t_star, f_star] =
      golden_section_max(counted, (kbest - 1) * h, (kbest + 1) * h, cfg.refine_tol);
  out.evaluations += polish_evals;
  if (f_star > out.value) {
    out.value = f_star;
    out.theta = wrap_half_turn(t_star);
  }

  std::priority_queue<Arc> arcs;
  for (int k = 0; k < n; ++k) {
    const double f_next = grid[(k + 1) % n];  // f(pi) = f(0)
    arcs.push(make_arc(k * h, (k + 1) * h, grid[k], f_next));
  }

  const double tiny = 1e-300;
  for (int it = 0; it < cfg.max_refine_iters && !arcs.empty(); ++it) {
    const Arc top = arcs.top();
    if (top.upper <= out.value * (1.0 + cfg.value_rtol) + tiny) break;
    arcs.pop();
    const double mid = 0.5 * (top.lo + top.hi);
    const double f_mid = f(mid);
    ++out.evaluations;
    if (f_mid > out.value) {
      out.value = f_mid;
      out.theta = wrap_half_turn(mid);
    }
    arcs.push(make_arc(top.lo, mid, top.f_lo, f_mid));
    arcs.push(make_arc(mid, top.hi, f_mid, top.f_hi));
  }
  out.bound = arcs.empty() ? 0.0 : std::max(0.0, arcs.top().upper - out.value);
  return out;
}

CircleMax numerical_radius(const ComplexMatrix& m, const ThetaOptConfig& cfg) {
  require_square(m, "numerical_radius");
  if (norm_max(m) == 0.0) return {};
  const ComplexMatrix m_star = m.adjoint();
  const std::size_t n = m.rows();
  ComplexMatrix h(n, n);
  const auto f = [&](double theta) {
    const Complex e = std::polar(0.5, theta);
    const Complex ec = std::conj(e);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) h(i, j) = e * m(i, j) + ec * m_star(i, j);
    const std::vector<double> ev = hermitian_eigenvalues(h, 1e300);
    return std::max(std::abs(ev.front()), std::abs(ev.back()));
  };
  return maximize_seminorm_on_circle(f, cfg);
}

}  // namespace shnr
