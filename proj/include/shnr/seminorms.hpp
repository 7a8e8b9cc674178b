#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>

#include "shnr/matrix.hpp"
#include "shnr/semihilbert.hpp"

namespace shnr {

struct SeminormFlags {
  bool submultiplicative = false;
  bool selfadjoint_invariant = false;
  bool weakly_unitary_invariant = false;
  bool a_increasing = false;
  bool power_property = false;

  /// True when every flag set in `required` is also set here.
  bool covers(const SeminormFlags& required) const;
};

struct SeminormDescriptor {
  std::string id;
  SeminormFlags flags;
  std::optional<double> alpha;
  /// N_A(T) for a member T.
  std::function<double(const SemiHilbertContext&, const ComplexMatrix&)> evaluate;
  /// The same value computed from reduce(ctx, T). All seminorms here depend
  /// on T only through its compression, so the radius engine can work on
  /// r x r matrices.
  std::function<double(const ComplexMatrix&)> on_range;
};

struct OmegaConfig {
  int t_steps = 5;       // t in [0, pi/2], endpoints included
  int psi_steps = 8;     // psi in [0, 2 pi)
  int starts = 3;        // best grid points handed to the ascent
  int max_iters = 500;
  double rel_tol = 1e-15;
};

struct AlphaConfig {
  int starts = 32;
  int survivors = 4;       // starts carried to convergence
  int warmup_iters = 8;
  int max_iters = 3000;
  double grad_tol = 1e-9;
  std::uint64_t seed = 0x5eed;
};

struct PairFormConfig {
  int starts = 24;
  int max_iters = 4000;
  double rel_tol = 1e-14;
  std::uint64_t seed = 0xfa17;
};

/// ||.||_A; all property flags set.
SeminormDescriptor a_norm_seminorm();
/// ||.||_{A,alpha}. Errors: AlphaOutOfRange.
SeminormDescriptor a_alpha_seminorm(double alpha, const AlphaConfig& cfg = {});
/// Omega_A.
SeminormDescriptor big_omega_seminorm(const OmegaConfig& cfg = {});
/// Omega_A evaluated through the pair form; same flags as big_omega.
SeminormDescriptor big_omega_pair_seminorm(const PairFormConfig& cfg = {});

/// sup over unit y of sqrt(alpha |y^* M y|^2 + (1 - alpha) ||M y||^2),
/// by multi-start projected gradient ascent on the sphere.
double alpha_norm_of(const ComplexMatrix& m, double alpha, const AlphaConfig& cfg = {});
/// sup over |a|^2 + |b|^2 = 1 of ||a M + b M^*||_2: coarse (t, psi) grid,
/// then alternating ascent between the top singular pair and (a, b).
double big_omega_of(const ComplexMatrix& m, const OmegaConfig& cfg = {});
/// sup over unit x, y of sqrt(|y^* M x|^2 + |y^* M^* x|^2), by alternating
/// maximization in x and y from random starts.
double big_omega_pair_of(const ComplexMatrix& m, const PairFormConfig& cfg = {});
/// min{sqrt||M M^* + M^* M||, sqrt(||M||^2 + w(M^2))}.
double gamma_of(const ComplexMatrix& m);

double alpha_norm(const SemiHilbertContext& ctx, const ComplexMatrix& t, double alpha);
double big_omega(const SemiHilbertContext& ctx, const ComplexMatrix& t);
double big_omega_pair_form(const SemiHilbertContext& ctx, const ComplexMatrix& t,
                           const PairFormConfig& cfg = {});
double gamma_a(const SemiHilbertContext& ctx, const ComplexMatrix& t);

struct PropertyProbe {
  double max_violation = 0.0;  // relative
  int trials = 0;
};

struct ProbeReport {
  PropertyProbe nonnegativity, homogeneity, triangle;
  PropertyProbe submultiplicative, selfadjoint_invariant, weakly_unitary_invariant, a_increasing,
      power_property;

  /// Whether every declared flag, and the seminorm axioms, showed no
  /// violation above tol.
  bool consistent_with(const SeminormFlags& declared, double tol) const;
};

/// Empirical check of the seminorm axioms and of each property on random
/// members of ctx. A-increasing is probed on A-positive pairs and the power
/// property on A-selfadjoint arguments. Errors: InvalidArgument if
/// trials < 1.
ProbeReport probe_properties(const SemiHilbertContext& ctx, const SeminormDescriptor& n, int trials,
                             std::uint64_t seed);

}  // namespace shnr
