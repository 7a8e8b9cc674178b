#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "shnr/circle_search.hpp"
#include "shnr/linalg.hpp"
#include "shnr/matrix.hpp"
#include "shnr/seminorms.hpp"

namespace shnr {

enum class CheckKind { Inequality, Equality, Conditional };
enum class Arity { T, TS, TSX, Vectors };

std::string_view to_string(CheckKind k);
std::string_view to_string(Arity a);

struct CheckSpec {
  std::string id;         // "C01" .. "C27"
  std::string title;
  std::string statement;  // the asserted relation, in plain notation
  Arity arity = Arity::T;
  CheckKind kind = CheckKind::Inequality;
  SeminormFlags required_flags;
  std::vector<std::string> seminorm_ids;
  bool pinned = false;    // one fixed instance instead of random ones
};

/// The 27 checks, in id order.
const std::vector<CheckSpec>& catalog();
/// Errors: InvalidArgument for an unknown id.
const CheckSpec& find_check(std::string_view id);

/// Resolves a seminorm id ("a_norm", "a_alpha", "big_omega",
/// "big_omega_pair"); a_alpha without an alpha uses 0.5. Errors: InvalidArgument,
/// AlphaOutOfRange.
SeminormDescriptor seminorm_by_id(std::string_view id, std::optional<double> alpha = std::nullopt);

/// Everything a check looks at; enough to replay it.
struct Instance {
  ComplexMatrix a;
  std::map<std::string, ComplexMatrix> operators;
  std::map<std::string, Vector> vectors;
  std::string variant = "random";
  std::optional<double> alpha;
};

struct Comparison {
  std::string seminorm;
  std::string label;
  double lhs = 0.0;
  double rhs = 0.0;
  bool equality = false;
  bool conditional = false;  // emitted only because its premise held
  double slack = 0.0;
};

/// (rhs - lhs) / max(rhs, 1e-300), clamped to [-1e300, 1e300].
double inequality_slack(double lhs, double rhs);
/// -|lhs - rhs| / max(|lhs|, |rhs|, 1e-300), clamped likewise.
double equality_slack(double lhs, double rhs);

struct EvalSettings {
  ThetaOptConfig theta;
  double tol_rel = 1e-6;
  double rtol = kDefaultRtol;
};

/// Deterministic instance for (check, A dimension, A rank, seed, index).
/// Operators are normalized to unit spectral norm.
Instance make_instance(const CheckSpec& spec, std::size_t dim, std::size_t rank, std::uint64_t seed,
                       std::size_t index);

/// The fixed instance of a pinned check.
Instance pinned_instance(const CheckSpec& spec);

/// Evaluates every comparison of the check on the instance, under each of
/// the check's seminorms.
std::vector<Comparison> evaluate_check(const CheckSpec& spec, const Instance& inst,
                                       const EvalSettings& settings);

}  // namespace shnr
