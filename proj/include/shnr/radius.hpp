#pragma once

#include "shnr/circle_search.hpp"
#include "shnr/seminorms.hpp"
#include "shnr/semihilbert.hpp"

namespace shnr {

/// sup over theta of N(Re_A(e^{i theta} T)). Uses the identity
/// Re_A(e^{i theta} T) = cos(theta) Re_A(T) - sin(theta) Im_A(T), so only
/// two A-parts are formed; `value` is a lower bound and `bound` the
/// certified gap to the supremum. Errors: NotMember.
CircleMax generalized_radius(const SemiHilbertContext& ctx, const SeminormDescriptor& n,
                             const ComplexMatrix& t, const ThetaOptConfig& cfg = {});

/// The same supremum taken over N(Im_A(e^{i theta} T)).
CircleMax generalized_radius_im_form(const SemiHilbertContext& ctx, const SeminormDescriptor& n,
                                     const ComplexMatrix& t, const ThetaOptConfig& cfg = {});

/// omega_A(T) as the classical numerical radius of reduce(T).
CircleMax omega_a_fast(const SemiHilbertContext& ctx, const ComplexMatrix& t,
                       const ThetaOptConfig& cfg = {});

/// Radius of a seminorm given on reduced matrices, for an r x r
/// compression m: sup over theta of g(Re(e^{i theta} m)).
CircleMax radius_on_range(const std::function<double(const ComplexMatrix&)>& g,
                          const ComplexMatrix& m, const ThetaOptConfig& cfg = {});

}  // namespace shnr
