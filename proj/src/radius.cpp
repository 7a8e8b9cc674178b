#include "shnr/radius.hpp"

#include <cmath>

namespace shnr {
namespace {

// f(theta) = g(cos(theta) x + sin(theta) y), evaluated through `eval`.
template <class Eval>
CircleMax sweep(const ComplexMatrix& x, const ComplexMatrix& y, const Eval& eval,
                const ThetaOptConfig& cfg) {
  ComplexMatrix work(x.rows(), x.cols());
  const auto f = [&](double theta) {
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    const auto w = work.entries();
    for (std::size_t k = 0; k < w.size(); ++k) w[k] = c * x.entries()[k] + s * y.entries()[k];
    return eval(work);
  };
  return maximize_seminorm_on_circle(f, cfg);
}

enum class Form { Re, Im };

CircleMax radius_impl(const SemiHilbertContext& ctx, const SeminormDescriptor& n,
                      const ComplexMatrix& t, const ThetaOptConfig& cfg, Form form) {
  require_member(ctx, t, "generalized_radius");
  cfg.validate();
  if (norm_max(t) == 0.0) return {};
  const ComplexMatrix re = re_a(ctx, t);
  const ComplexMatrix im = im_a(ctx, t);
  // Re form: cos Re - sin Im.  Im form: cos Im + sin Re.
  const ComplexMatrix x = form == Form::Re ? re : im;
  const ComplexMatrix y = form == Form::Re ? -im : re;
  if (n.on_range) return sweep(reduce(ctx, x), reduce(ctx, y), n.on_range, cfg);
  return sweep(x, y, [&](const ComplexMatrix& m) { return n.evaluate(ctx, m); }, cfg);
}

}  // namespace

CircleMax generalized_radius(const SemiHilbertContext& ctx, const SeminormDescriptor& n,
                             const ComplexMatrix& t, const ThetaOptConfig& cfg) {
  return radius_impl(ctx, n, t, cfg, Form::Re);
}

CircleMax generalized_radius_im_form(const SemiHilbertContext& ctx, const SeminormDescriptor& n,
                                     const ComplexMatrix& t, const ThetaOptConfig& cfg) {
  return radius_impl(ctx, n, t, cfg, Form::Im);
}

CircleMax omega_a_fast(const SemiHilbertContext& ctx, const ComplexMatrix& t,
                       const ThetaOptConfig& cfg) {
  return numerical_radius(reduce(ctx, t), cfg);
}

CircleMax radius_on_range(const std::function<double(const ComplexMatrix&)>& g,
                          const ComplexMatrix& m, const ThetaOptConfig& cfg) {
  require_square(m, "radius_on_range");
  cfg.validate();
  if (norm_max(m) == 0.0) return {};
  const ComplexMatrix ms = m.adjoint();
  const ComplexMatrix re = 0.5 * (m + ms);
  const ComplexMatrix im = Complex(0.0, -0.5) * (m - ms);
  return sweep(re, -im, g, cfg);
}

}  // namespace shnr
