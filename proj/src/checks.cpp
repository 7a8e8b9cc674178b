#include "shnr/checks.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <string>

#include "shnr/instances.hpp"
#include "shnr/radius.hpp"
#include "shnr/semihilbert.hpp"

namespace shnr {

std::string_view to_string(CheckKind k) {
  switch (k) {
    case CheckKind::Inequality: return "inequality";
    case CheckKind::Equality: return "equality";
    case CheckKind::Conditional: return "conditional";
  }
  return "?";
}

std::string_view to_string(Arity a) {
  switch (a) {
    case Arity::T: return "T";
    case Arity::TS: return "T,S";
    case Arity::TSX: return "T,S,X";
    case Arity::Vectors: return "a,b,c";
  }
  return "?";
}

namespace {

constexpr double kTiny = 1e-300;
constexpr double kHuge = 1e300;

SeminormFlags flags_of(bool sub, bool sa, bool inc = false, bool power = false) {
  SeminormFlags f;
  f.submultiplicative = sub;
  f.selfadjoint_invariant = sa;
  f.a_increasing = inc;
  f.power_property = power;
  return f;
}

// Seminorms from the general pool whose flags meet `req`.
std::vector<std::string> general_pool(const SeminormFlags& req) {
  std::vector<std::string> out;
  for (const char* id : {"a_norm", "big_omega"})
    if (seminorm_by_id(id).flags.covers(req)) out.emplace_back(id);
  return out;
}

std::vector<CheckSpec> build_catalog() {
  using K = CheckKind;
  using Ar = Arity;
  std::vector<CheckSpec> c;
  const auto general = [&](std::string id, std::string title, std::string stmt, Ar ar, K kind,
                           SeminormFlags req) {
    CheckSpec s{std::move(id), std::move(title), std::move(stmt), ar, kind, req, general_pool(req)};
    c.push_back(std::move(s));
  };
  const auto fixed = [&](std::string id, std::string title, std::string stmt, Ar ar, K kind,
                         std::vector<std::string> ids) {
    CheckSpec s{std::move(id), std::move(title), std::move(stmt), ar, kind, {}, std::move(ids)};
    c.push_back(std::move(s));
  };

  general("C01", "lower bound", "w_N(T) >= N(T)/2 + |N(Re_A T) - N(Im_A T)|/2", Ar::T, K::Inequality,
          {});
  general("C02", "refined lower bound",
          "w_N(T) >= N(T)/2 + sup_t |N(Re_A(e^{it}T)) - N(Im_A(e^{it}T))|/2", Ar::T, K::Inequality, {});
  general("C03", "two-sided bound",
          "N(T)/2 <= w_N(T); w_N(T) <= N(T) when N is A-selfadjoint invariant", Ar::T, K::Inequality,
          {});
  general("C04", "adjoint and unitary invariance",
          "w_N(T) = w_N(T#); w_N(U# T U) = w_N(T) for A-unitary U when N is weakly unitarily invariant",
          Ar::T, K::Equality, flags_of(false, true));
  general("C05", "quadratic lower bound",
          "w_N(T)^2 >= N(T#T + TT#)/4 + sup_t |N^2(Re_A(e^{it}T)) - N^2(Im_A(e^{it}T))|/2", Ar::T,
          K::Inequality, flags_of(true, false));
  general("C06", "Kittaneh-type bounds",
          "sqrt(N(T#T + TT#))/2 <= w_N(T); w_N(T) <= sqrt(N(T#T + TT#))/sqrt(2) for A-increasing N "
          "with the power property",
          Ar::T, K::Inequality, flags_of(true, false));
  general("C07", "Re/Im euclidean upper bound",
          "w_N(T) <= inf_t sqrt(N^2(Re_A(e^{it}T)) + N^2(Im_A(e^{it}T)))", Ar::T, K::Inequality, {});
  general("C08", "power upper bound", "w_N(T)^2 <= w_N(T^2)/2 + N(T#T + TT#)/4", Ar::T, K::Inequality,
          flags_of(false, false, false, true));
  general("C09", "fourth-root upper bound", "w_N(T)^4 <= N^2(T#T + TT#)/8 + w_N(T^2)^2/2", Ar::T,
          K::Inequality, flags_of(false, false, true, true));
  general("C10", "A-selfadjoint equality", "w_N(T) = N(T) for A-selfadjoint T", Ar::T, K::Equality,
          flags_of(false, true));
  general("C11", "projection invariance", "w_N(PT) = w_N(TP) = w_N(T), P the projector onto R(A)",
          Ar::T, K::Equality, flags_of(false, true));
  general("C12", "product bounds",
          "w_N(TS) <= N(T) w_N(S) + w_N(TS +- ST#)/2; w_N(TS) <= N(S) w_N(T) + w_N(TS +- S#T)/2",
          Ar::TS, K::Inequality, flags_of(true, true));
  general("C13", "Fong-Holbrook analogue", "w_N(TS +- ST#) <= 2 N(T) w_N(S)", Ar::TS, K::Inequality,
          flags_of(true, true));
  general("C14", "product corollary",
          "w_N(TS) <= 2 min{w_N(T) N(S), w_N(S) N(T)} <= 4 w_N(T) w_N(S)", Ar::TS, K::Inequality,
          flags_of(true, true));
  general("C15", "three-operator bound", "w_N(TXS +- S#XT#) <= 2 N(T) N(S) w_N(X)", Ar::TSX,
          K::Inequality, flags_of(true, true));
  general("C16", "conjugation bounds", "w_N(TXT#) <= N(T)^2 w_N(X); w_N(T#XT) <= N(T)^2 w_N(X)",
          Ar::TSX, K::Inequality, flags_of(true, true));
  fixed("C17", "base sandwich",
        "||T||_A/2 <= w_A(T) <= ||T||_A, lower equality when AT^2 = 0, upper equality for A-normal T",
        Ar::T, K::Inequality, {"a_norm"});
  fixed("C18", "norm identities", "||T#T||_A = ||TT#||_A = ||T||_A^2", Ar::T, K::Equality, {"a_norm"});
  fixed("C19", "vector lemma",
        "|<a,c>_A|^2 + |<b,c>_A|^2 <= ||c||_A^2 (max{||a||_A^2, ||b||_A^2} + |<a,b>_A|)", Ar::Vectors,
        K::Inequality, {"a_norm"});
  fixed("C20", "Hermitian-part identity", "||Re_A T||_{A,alpha} = ||Re_A T||_A", Ar::T, K::Equality,
        {"a_alpha"});
  fixed("C21", "alpha-radius identity", "w_{A,alpha}(T) = w_A(T)", Ar::T, K::Equality, {"a_alpha"});
  fixed("C22", "Omega chain", "||T||_A <= Omega_A(T) <= gamma_A(T) <= sqrt(2) ||T||_A", Ar::T,
        K::Inequality, {"big_omega"});
  fixed("C23", "Omega selfadjoint value", "Omega_A(T) = sqrt(2) ||T||_A for A-selfadjoint T", Ar::T,
        K::Equality, {"big_omega"});
  fixed("C24", "Omega-radius scaling", "w_Omega(T) = sqrt(2) w_A(T)", Ar::T, K::Equality,
        {"big_omega"});
  fixed("C25", "A-normal equality", "w_Omega(T) = Omega_A(T) for A-normal T", Ar::T, K::Equality,
        {"big_omega"});
  fixed("C26", "pinned non-normal instance",
        "A = I_3, T = [[0,1,0],[0,0,0],[0,0,2]]: Omega(T) = w_Omega(T) = 2 sqrt(2), T not normal", Ar::T,
        K::Equality, {"big_omega", "big_omega_pair"});
  c.back().pinned = true;
  general("C27", "conditional equivalences",
          "w_N(T) = N(T)/2 <=> N(Re_A(e^{it}T)) = N(Im_A(e^{it}T)) = N(T)/2 for all t; "
          "for submultiplicative N, w_N(T) = sqrt(N(T#T + TT#))/2 <=> both parts equal that value "
          "for all t; w_Omega(T) = Omega_A(T)/2 <=> Omega_A(T) = 2 sqrt(2) ||Re_A(e^{it}T)||_A for all t",
          Ar::T, K::Conditional, {});
  return c;
}

// sup over theta of f, f pi-periodic: 64-point grid, then golden section on
// the best bracket. A lower estimate of the true supremum.
double sup_theta(const std::function<double(double)>& f) {
  constexpr int kGrid = 64;
  const double h = std::numbers::pi / kGrid;
  int best = 0;
  double best_v = -kHuge;
  for (int k = 0; k < kGrid; ++k) {
    const double v = f(k * h);
    if (v > best_v) {
      best_v = v;
      best = k;
    }
  }
  const auto [t, v] = golden_section_max(f, (best - 1) * h, (best + 1) * h, 1e-9);
  (void)t;
  return std::max(best_v, v);
}

double inf_theta(const std::function<double(double)>& f) {
  return -sup_theta([&](double t) { return -f(t); });
}

class Emitter {
 public:
  explicit Emitter(std::vector<Comparison>& out) : out_(out) {}
  void set_seminorm(std::string id) { seminorm_ = std::move(id); }

  void le(std::string label, double lhs, double rhs) {
    out_.push_back({seminorm_, std::move(label), lhs, rhs, false, false, inequality_slack(lhs, rhs)});
  }
  void eq(std::string label, double lhs, double rhs, bool conditional = false) {
    out_.push_back(
        {seminorm_, std::move(label), lhs, rhs, true, conditional, equality_slack(lhs, rhs)});
  }

 private:
  std::vector<Comparison>& out_;
  std::string seminorm_;
};

// Seminorm-bound evaluation helpers for one instance.
class Scope {
 public:
  Scope(const SemiHilbertContext& ctx, const SeminormDescriptor& n, const EvalSettings& s)
      : ctx_(ctx), n_(n), s_(s) {}

  double N(const ComplexMatrix& t) const { return n_.evaluate(ctx_, t); }
  double W(const ComplexMatrix& t) const { return generalized_radius(ctx_, n_, t, s_.theta).value; }
  ComplexMatrix sharp(const ComplexMatrix& t) const { return a_adjoint(ctx_, t); }

  // theta -> N(Re_A(e^{it}T)) and N(Im_A(e^{it}T)), through the reduced
  // evaluator.
  struct Parts {
    ComplexMatrix re, im;
    const SeminormDescriptor* n;
    double n_re(double t) const { return n->on_range(std::cos(t) * re - std::sin(t) * im); }
    double n_im(double t) const { return n->on_range(std::cos(t) * im + std::sin(t) * re); }
  };
  Parts parts(const ComplexMatrix& t) const {
    return {reduce(ctx_, re_a(ctx_, t)), reduce(ctx_, im_a(ctx_, t)), &n_};
  }

  const SeminormDescriptor& desc() const { return n_; }
  const SemiHilbertContext& ctx() const { return ctx_; }
  const EvalSettings& settings() const { return s_; }

 private:
  const SemiHilbertContext& ctx_;
  const SeminormDescriptor& n_;
  const EvalSettings& s_;
};

const ComplexMatrix& op(const Instance& inst, const char* name) {
  const auto it = inst.operators.find(name);
  if (it == inst.operators.end()) {
    throw Error(Errc::InvalidArgument, std::string("instance lacks operator ") + name);
  }
  return it->second;
}

const Vector& vec(const Instance& inst, const char* name) {
  const auto it = inst.vectors.find(name);
  if (it == inst.vectors.end()) {
    throw Error(Errc::InvalidArgument, std::string("instance lacks vector ") + name);
  }
  return it->second;
}

double rel_diff(double x, double y) {
  return std::abs(x - y) / std::max({std::abs(x), std::abs(y), kTiny});
}

// (i) w = w_target  <=>  (ii) part(t) = part_target on a 64-point grid.
// Each direction is emitted only when its premise holds.
void conditional_pair(Emitter& e, const std::string& name, double w, double w_target,
                      const std::function<double(double)>& part, double part_target, double tol) {
  constexpr int kGrid = 64;
  double worst = part_target;
  for (int k = 0; k < kGrid; ++k) {
    const double v = part(k * std::numbers::pi / kGrid);
    if (std::abs(v - part_target) > std::abs(worst - part_target)) worst = v;
  }
  if (rel_diff(w, w_target) <= tol) e.eq(name + ":(i)=>(ii)", worst, part_target, true);
  if (rel_diff(worst, part_target) <= tol) e.eq(name + ":(ii)=>(i)", w, w_target, true);
}

void run_general(const std::string& id, const Instance& inst, const Scope& sc, Emitter& e) {
  const SeminormFlags& fl = sc.desc().flags;
  const double tol = sc.settings().tol_rel;

  if (id == "C01") {
    const ComplexMatrix& t = op(inst, "T");
    const double lhs = sc.N(t) / 2 + std::abs(sc.N(re_a(sc.ctx(), t)) - sc.N(im_a(sc.ctx(), t))) / 2;
    e.le("lower", lhs, sc.W(t));
  } else if (id == "C02") {
    const ComplexMatrix& t = op(inst, "T");
    const auto p = sc.parts(t);
    const double sup = sup_theta([&](double th) { return std::abs(p.n_re(th) - p.n_im(th)); });
    e.le("lower", sc.N(t) / 2 + sup / 2, sc.W(t));
  } else if (id == "C03") {
    const ComplexMatrix& t = op(inst, "T");
    const double n = sc.N(t);
    const double w = sc.W(t);
    e.le("lower", n / 2, w);
    if (fl.selfadjoint_invariant) e.le("upper", w, n);
  } else if (id == "C04") {
    const ComplexMatrix& t = op(inst, "T");
    const double w = sc.W(t);
    e.eq("adjoint", sc.W(sc.sharp(t)), w);
    if (fl.weakly_unitary_invariant) {
      const ComplexMatrix& u = op(inst, "U");
      e.eq("unitary", sc.W(sc.sharp(u) * t * u), w);
    }
  } else if (id == "C05") {
    const ComplexMatrix& t = op(inst, "T");
    const ComplexMatrix ts = sc.sharp(t);
    const double sym = sc.N(ts * t + t * ts) / 4;
    const double w = sc.W(t);
    const double nr = sc.N(re_a(sc.ctx(), t));
    const double ni = sc.N(im_a(sc.ctx(), t));
    e.le("theta=0", std::sqrt(sym + std::abs(nr * nr - ni * ni) / 2), w);
    const auto p = sc.parts(t);
    const double sup = sup_theta([&](double th) {
      const double a = p.n_re(th);
      const double b = p.n_im(th);
      return std::abs(a * a - b * b);
    });
    e.le("sup", std::sqrt(sym + sup / 2), w);
  } else if (id == "C06") {
    const ComplexMatrix& t = op(inst, "T");
    const ComplexMatrix ts = sc.sharp(t);
    const double root = std::sqrt(sc.N(ts * t + t * ts));
    const double w = sc.W(t);
    e.le("lower", root / 2, w);
    if (fl.a_increasing && fl.power_property) e.le("upper", w, root / std::sqrt(2.0));
  } else if (id == "C07") {
    const ComplexMatrix& t = op(inst, "T");
    const double w = sc.W(t);
    const double nr = sc.N(re_a(sc.ctx(), t));
    const double ni = sc.N(im_a(sc.ctx(), t));
    e.le("theta=0", w, std::hypot(nr, ni));
    const auto p = sc.parts(t);
    e.le("inf", w, inf_theta([&](double th) { return std::hypot(p.n_re(th), p.n_im(th)); }));
  } else if (id == "C08") {
    const ComplexMatrix& t = op(inst, "T");
    const ComplexMatrix ts = sc.sharp(t);
    const double w = sc.W(t);
    e.le("upper", w * w, sc.W(t * t) / 2 + sc.N(ts * t + t * ts) / 4);
  } else if (id == "C09") {
    const ComplexMatrix& t = op(inst, "T");
    const ComplexMatrix ts = sc.sharp(t);
    const double w = sc.W(t);
    const double n = sc.N(ts * t + t * ts);
    const double w2 = sc.W(t * t);
    e.le("upper", w * w * w * w, n * n / 8 + w2 * w2 / 2);
  } else if (id == "C10") {
    const ComplexMatrix& t = op(inst, "T");
    e.eq("selfadjoint", sc.W(t), sc.N(t));
  } else if (id == "C11") {
    const ComplexMatrix& t = op(inst, "T");
    const ComplexMatrix& p = sc.ctx().proj();
    const double w = sc.W(t);
    e.eq("PT", sc.W(p * t), w);
    e.eq("TP", sc.W(t * p), w);
  } else if (id == "C12") {
    const ComplexMatrix& t = op(inst, "T");
    const ComplexMatrix& s = op(inst, "S");
    const ComplexMatrix ts = t * s;
    const double w = sc.W(ts);
    const ComplexMatrix st = s * sc.sharp(t);
    const ComplexMatrix ss = sc.sharp(s) * t;
    const double nt_ws = sc.N(t) * sc.W(s);
    const double ns_wt = sc.N(s) * sc.W(t);
    e.le("first,+", w, nt_ws + sc.W(ts + st) / 2);
    e.le("first,-", w, nt_ws + sc.W(ts - st) / 2);
    e.le("second,+", w, ns_wt + sc.W(ts + ss) / 2);
    e.le("second,-", w, ns_wt + sc.W(ts - ss) / 2);
  } else if (id == "C13") {
    const ComplexMatrix& t = op(inst, "T");
    const ComplexMatrix& s = op(inst, "S");
    const ComplexMatrix ts = t * s;
    const ComplexMatrix st = s * sc.sharp(t);
    const double rhs = 2 * sc.N(t) * sc.W(s);
    e.le("+", sc.W(ts + st), rhs);
    e.le("-", sc.W(ts - st), rhs);
  } else if (id == "C14") {
    const ComplexMatrix& t = op(inst, "T");
    const ComplexMatrix& s = op(inst, "S");
    const double w = sc.W(t * s);
    const double wt = sc.W(t);
    const double ws = sc.W(s);
    e.le("min", w, 2 * std::min(wt * sc.N(s), ws * sc.N(t)));
    e.le("product", w, 4 * wt * ws);
  } else if (id == "C15") {
    const ComplexMatrix& t = op(inst, "T");
    const ComplexMatrix& s = op(inst, "S");
    const ComplexMatrix& x = op(inst, "X");
    const ComplexMatrix left = t * x * s;
    const ComplexMatrix right = sc.sharp(s) * x * sc.sharp(t);
    const double rhs = 2 * sc.N(t) * sc.N(s) * sc.W(x);
    e.le("+", sc.W(left + right), rhs);
    e.le("-", sc.W(left - right), rhs);
  } else if (id == "C16") {
    const ComplexMatrix& t = op(inst, "T");
    const ComplexMatrix& x = op(inst, "X");
    const ComplexMatrix ts = sc.sharp(t);
    const double nt = sc.N(t);
    const double rhs = nt * nt * sc.W(x);
    e.le("TXT#", sc.W(t * x * ts), rhs);
    e.le("T#XT", sc.W(ts * x * t), rhs);
  } else if (id == "C27") {
    const ComplexMatrix& t = op(inst, "T");
    const auto p = sc.parts(t);
    const double w = sc.W(t);
    const auto worse_part = [&](double target) {
      return [&p, target](double th) {
        const double a = p.n_re(th);
        const double b = p.n_im(th);
        return std::abs(a - target) > std::abs(b - target) ? a : b;
      };
    };
    const double half = sc.N(t) / 2;
    conditional_pair(e, "half-norm", w, half, worse_part(half), half, tol);
    if (fl.submultiplicative) {
      const ComplexMatrix ts = sc.sharp(t);
      const double target = std::sqrt(sc.N(ts * t + t * ts)) / 2;
      conditional_pair(e, "kittaneh", w, target, worse_part(target), target, tol);
    }
    if (sc.desc().id == "big_omega") {
      const double omega = sc.N(t);
      const auto re_norm = [&](double th) {
        return spectral_norm(std::cos(th) * p.re - std::sin(th) * p.im);
      };
      conditional_pair(e, "omega-half", w, omega / 2, re_norm, omega / (2 * std::sqrt(2.0)), tol);
    }
  } else {
    throw Error(Errc::InvalidArgument, "no general evaluator for " + id);
  }
}

void run_special(const std::string& id, const Instance& inst, const Scope& sc, Emitter& e) {
  const SemiHilbertContext& ctx = sc.ctx();
  const ThetaOptConfig& theta = sc.settings().theta;
  const double root2 = std::sqrt(2.0);

  if (id == "C17") {
    const ComplexMatrix& t = op(inst, "T");
    const double n = a_operator_norm(ctx, t);
    const double w = omega_a_fast(ctx, t, theta).value;
    e.le("lower", n / 2, w);
    e.le("upper", w, n);
    if (inst.variant == "nilpotent") e.eq("sharp-lower", w, n / 2);
    if (inst.variant == "normal") e.eq("sharp-upper", w, n);
  } else if (id == "C18") {
    const ComplexMatrix& t = op(inst, "T");
    const ComplexMatrix s = sc.sharp(t);
    const double n = a_operator_norm(ctx, t);
    e.eq("T#T", a_operator_norm(ctx, s * t), n * n);
    e.eq("TT#", a_operator_norm(ctx, t * s), n * n);
  } else if (id == "C19") {
    const Vector& a = vec(inst, "a");
    const Vector& b = vec(inst, "b");
    const Vector& c = vec(inst, "c");
    const double ac = std::abs(a_inner(ctx, a, c));
    const double bc = std::abs(a_inner(ctx, b, c));
    const double na = a_norm_vec(ctx, a);
    const double nb = a_norm_vec(ctx, b);
    const double nc = a_norm_vec(ctx, c);
    const double rhs = nc * nc * (std::max(na * na, nb * nb) + std::abs(a_inner(ctx, a, b)));
    e.le("lemma", ac * ac + bc * bc, rhs);
  } else if (id == "C20") {
    const ComplexMatrix re = re_a(ctx, op(inst, "T"));
    e.eq("re-part", sc.N(re), a_operator_norm(ctx, re));
  } else if (id == "C21") {
    const ComplexMatrix& t = op(inst, "T");
    e.eq("radius", sc.W(t), omega_a_fast(ctx, t, theta).value);
  } else if (id == "C22") {
    const ComplexMatrix& t = op(inst, "T");
    const double n = a_operator_norm(ctx, t);
    const double om = sc.N(t);
    const double g = gamma_a(ctx, t);
    e.le("norm<=Omega", n, om);
    e.le("Omega<=gamma", om, g);
    e.le("gamma<=sqrt2*norm", g, root2 * n);
  } else if (id == "C23") {
    const ComplexMatrix& t = op(inst, "T");
    e.eq("selfadjoint", sc.N(t), root2 * a_operator_norm(ctx, t));
  } else if (id == "C24") {
    const ComplexMatrix& t = op(inst, "T");
    e.eq("scaling", sc.W(t), root2 * omega_a_fast(ctx, t, theta).value);
  } else if (id == "C25") {
    const ComplexMatrix& t = op(inst, "T");
    e.eq("normal", sc.W(t), sc.N(t));
  } else if (id == "C26") {
    const ComplexMatrix& t = op(inst, "T");
    const double target = 2.0 * root2;
    e.eq("Omega", sc.N(t), target);
    e.eq("w_Omega", sc.W(t), target);
    if (sc.desc().id == "big_omega") e.eq("is_normal", is_a_normal(ctx, t) ? 1.0 : 0.0, 0.0);
  } else {
    throw Error(Errc::InvalidArgument, "no evaluator for " + id);
  }
}

bool is_general(std::string_view id) {
  const int k = std::stoi(std::string(id.substr(1)));
  return k <= 16 || k == 27;
}

}  // namespace

const std::vector<CheckSpec>& catalog() {
  static const std::vector<CheckSpec> c = build_catalog();
  return c;
}

const CheckSpec& find_check(std::string_view id) {
  for (const auto& s : catalog())
    if (s.id == id) return s;
  throw Error(Errc::InvalidArgument, "unknown check id " + std::string(id));
}

SeminormDescriptor seminorm_by_id(std::string_view id, std::optional<double> alpha) {
  if (id == "a_norm") return a_norm_seminorm();
  if (id == "a_alpha") return a_alpha_seminorm(alpha.value_or(0.5));
  if (id == "big_omega") return big_omega_seminorm();
  if (id == "big_omega_pair") return big_omega_pair_seminorm();
  throw Error(Errc::InvalidArgument, "unknown seminorm id " + std::string(id));
}

double inequality_slack(double lhs, double rhs) {
  return std::clamp((rhs - lhs) / std::max(rhs, kTiny), -kHuge, kHuge);
}

double equality_slack(double lhs, double rhs) {
  if (lhs == rhs) return 0.0;  // not -0.0
  return std::clamp(-std::abs(lhs - rhs) / std::max({std::abs(lhs), std::abs(rhs), kTiny}), -kHuge,
                    kHuge);
}

}  // namespace shnr

namespace shnr {

Instance make_instance(const CheckSpec& spec, std::size_t dim, std::size_t rank, std::uint64_t seed,
                       std::size_t index) {
  if (spec.pinned) return pinned_instance(spec);
  Rng rng(derive_seed(seed, spec.id, dim, rank, index));
  Instance inst;
  inst.a = random_psd(dim, rank, rng.bits());
  const SemiHilbertContext ctx = build_context(inst.a);
  const auto member = [&] { return normalized(random_member(ctx, rng)); };
  const auto nilpotent_or_random = [&] {
    if (ctx.rank() >= 2) {
      inst.variant = "nilpotent";
      return normalized(random_nilpotent_member(ctx, rng));
    }
    return member();
  };

  const std::string& id = spec.id;
  if (spec.arity == Arity::Vectors) {
    inst.vectors["a"] = random_vector(dim, rng);
    inst.vectors["b"] = random_vector(dim, rng);
    inst.vectors["c"] = random_vector(dim, rng);
    return inst;
  }
  if (id == "C10" || id == "C23") {
    inst.variant = "selfadjoint";
    inst.operators["T"] = normalized(random_a_selfadjoint(ctx, rng));
  } else if (id == "C25") {
    inst.variant = "normal";
    inst.operators["T"] = normalized(random_a_normal(ctx, rng));
  } else if (id == "C17") {
    switch (index % 3) {
      case 0: inst.operators["T"] = member(); break;
      case 1: inst.operators["T"] = nilpotent_or_random(); break;
      default:
        inst.variant = "normal";
        inst.operators["T"] = normalized(random_a_normal(ctx, rng));
    }
  } else if (id == "C27") {
    inst.operators["T"] = index % 2 == 0 ? nilpotent_or_random() : member();
  } else {
    inst.operators["T"] = member();
  }
  if (spec.arity == Arity::TS || spec.arity == Arity::TSX) inst.operators["S"] = member();
  if (spec.arity == Arity::TSX) inst.operators["X"] = member();
  if (id == "C04") inst.operators["U"] = random_a_unitary(ctx, rng);
  if (id == "C20" || id == "C21") {
    constexpr double kAlphas[] = {0.0, 0.25, 0.5, 0.75, 1.0};
    inst.alpha = kAlphas[index % 5];
  }
  return inst;
}

Instance pinned_instance(const CheckSpec& spec) {
  if (!spec.pinned) throw Error(Errc::InvalidArgument, spec.id + " has no pinned instance");
  Instance inst;
  inst.variant = "pinned";
  inst.a = ComplexMatrix::identity(3);
  inst.operators["T"] = ComplexMatrix{{0, 1, 0}, {0, 0, 0}, {0, 0, 2}};
  return inst;
}

std::vector<Comparison> evaluate_check(const CheckSpec& spec, const Instance& inst,
                                       const EvalSettings& settings) {
  const SemiHilbertContext ctx = build_context(inst.a, settings.rtol);
  std::vector<Comparison> out;
  Emitter e(out);
  for (const auto& sid : spec.seminorm_ids) {
    const SeminormDescriptor desc = seminorm_by_id(sid, inst.alpha);
    e.set_seminorm(sid);
    const Scope sc(ctx, desc, settings);
    if (is_general(spec.id)) {
      run_general(spec.id, inst, sc, e);
    } else {
      run_special(spec.id, inst, sc, e);
    }
  }
  return out;
}

}  // namespace shnr
