#pragma once

#include "afinv/bigint.hpp"

#include <optional>
#include <string>
#include <vector>

namespace afinv {

/// Finitely generated abelian group in invariant-factor normal form
/// Z_{g_1} + ... + Z_{g_r} + Z^free_rank with g_i >= 2 and g_i | g_{i+1}.
/// The normal form is canonical, so equality is structural.
class AbelianGroup {
 public:
  /// The trivial group.
  AbelianGroup() = default;

  /// Throws InvalidArgument unless `torsion` already is a divisibility chain
  /// of entries >= 2.
  AbelianGroup(std::vector<BigInt> torsion, unsigned free_rank);

  /// Group presented by a Smith diagonal: units are dropped, zeros become
  /// free summands.  The nonzero entries must form a divisibility chain.
  static AbelianGroup from_smith_diagonal(const std::vector<BigInt>& diagonal);

  /// Z_{n_1} + ... + Z_{n_k} for arbitrary positive orders, brought to
  /// normal form.
  static AbelianGroup from_cyclic_orders(const std::vector<BigInt>& orders);

  const std::vector<BigInt>& torsion() const { return torsion_; }
  unsigned free_rank() const { return free_rank_; }
  bool is_finite() const { return free_rank_ == 0; }
  bool is_trivial() const { return torsion_.empty() && free_rank_ == 0; }

  /// Product of the torsion coefficients; nullopt for infinite groups.
  std::optional<BigInt> order() const;

  /// Largest torsion coefficient (1 when torsion-free).
  BigInt exponent() const;

  /// e.g. "Z_2 ⊕ Z_4 ⊕ Z^1"; the trivial group prints as "0".
  std::string to_string() const;

  friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;

 private:
  std::vector<BigInt> torsion_;
  unsigned free_rank_ = 0;
};

/// Mazur's list: Z_1..Z_10, Z_12, Z_2 + Z_{2k} for k = 1..4.
bool is_mazur_admissible(const AbelianGroup& g);

}  // namespace afinv
