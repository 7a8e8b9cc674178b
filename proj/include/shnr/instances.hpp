#pragma once

#include <cstdint>
#include <random>
#include <string_view>

#include "shnr/matrix.hpp"
#include "shnr/semihilbert.hpp"

namespace shnr {

/// Seeded generator with conversions written out explicitly so that
/// streams do not depend on the standard library's distribution code.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform on [0, 1).
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  /// Standard normal (Box-Muller).
  double normal();
  /// Circular complex normal with E|z|^2 = 1.
  Complex complex_normal();
  std::uint64_t bits() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

/// Mixes a base seed with a tag and up to three indices (splitmix64 over
/// an FNV-1a hash of the tag).
std::uint64_t derive_seed(std::uint64_t base, std::string_view tag, std::uint64_t i = 0,
                          std::uint64_t j = 0, std::uint64_t k = 0);

ComplexMatrix ginibre(std::size_t rows, std::size_t cols, Rng& rng);
/// Haar-like unitary from Gram-Schmidt on a Ginibre matrix.
ComplexMatrix random_unitary(std::size_t n, Rng& rng);
Vector random_unit_vector(std::size_t n, Rng& rng);
Vector random_vector(std::size_t n, Rng& rng);

/// Hermitian PSD n x n matrix with exactly `rank` eigenvalues in
/// [0.2, 1.0] and the rest zero. Errors: RankOutOfRange.
ComplexMatrix random_psd(std::size_t n, std::size_t rank, std::uint64_t seed);

/// Member T = G - P G (I - P) for a Ginibre G: block lower triangular with
/// respect to R(A) + ker A, so T(ker A) lies in ker A.
ComplexMatrix random_member(const SemiHilbertContext& ctx, Rng& rng);
ComplexMatrix random_member(const SemiHilbertContext& ctx, std::uint64_t seed);

/// Re_A of a random member.
ComplexMatrix random_a_selfadjoint(const SemiHilbertContext& ctx, Rng& rng);
/// lift(B B^*) plus a block living on ker A.
ComplexMatrix random_a_positive(const SemiHilbertContext& ctx, Rng& rng);
/// lift(W) + (I - P) for a unitary W on R(A).
ComplexMatrix random_a_unitary(const SemiHilbertContext& ctx, Rng& rng);
/// lift(U D U^*) plus a block acting only on ker A; satisfies
/// T^# T = T T^#.
ComplexMatrix random_a_normal(const SemiHilbertContext& ctx, Rng& rng);
/// lift(u v^*) with u orthogonal to v, plus a block mapping into ker A; then
/// A T^2 = 0. Needs rank(A) >= 2 (RankOutOfRange otherwise).
ComplexMatrix random_nilpotent_member(const SemiHilbertContext& ctx, Rng& rng);

/// t / ||t||_2 (zero stays zero).
ComplexMatrix normalized(ComplexMatrix t);

}  // namespace shnr
