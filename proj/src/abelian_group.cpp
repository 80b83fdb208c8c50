#include "afinv/abelian_group.hpp"

#include "afinv/error.hpp"
#include "afinv/exact_linalg.hpp"

namespace afinv {

AbelianGroup::AbelianGroup(std::vector<BigInt> torsion, unsigned free_rank)
    : torsion_(std::move(torsion)), free_rank_(free_rank) {
  for (std::size_t i = 0; i < torsion_.size(); ++i) {
    if (torsion_[i] < 2)
      throw Error(ErrorKind::InvalidArgument, "torsion coefficients must be >= 2");
    if (i > 0 && !divides(torsion_[i - 1], torsion_[i]))
      throw Error(ErrorKind::InvalidArgument,
                  "torsion coefficients must form a divisibility chain");
  }
}

AbelianGroup AbelianGroup::from_smith_diagonal(const std::vector<BigInt>& diagonal) {
  std::vector<BigInt> torsion;
  unsigned free_rank = 0;
  for (const auto& d : diagonal) {
    if (d == 0)
      ++free_rank;
    else if (abs(d) != 1)
      torsion.push_back(abs(d));
  }
  return AbelianGroup(std::move(torsion), free_rank);
}

AbelianGroup AbelianGroup::from_cyclic_orders(const std::vector<BigInt>& orders) {
  if (orders.empty()) return {};
  const auto n = static_cast<Index>(orders.size());
  IntMatrix d = IntMatrix::Zero(n, n);
  for (Index i = 0; i < n; ++i) {
    if (orders[static_cast<std::size_t>(i)] <= 0)
      throw Error(ErrorKind::InvalidArgument, "cyclic orders must be positive");
    d(i, i) = orders[static_cast<std::size_t>(i)];
  }
  return from_smith_diagonal(snf(d).diagonal);
}

std::optional<BigInt> AbelianGroup::order() const {
  if (free_rank_ > 0) return std::nullopt;
  BigInt n = 1;
  for (const auto& g : torsion_) n *= g;
  return n;
}

BigInt AbelianGroup::exponent() const {
  return torsion_.empty() ? BigInt(1) : torsion_.back();
}

std::string AbelianGroup::to_string() const {
  if (is_trivial()) return "0";
  std::string out;
  for (const auto& g : torsion_) {
    if (!out.empty()) out += " ⊕ ";
    out += "Z_" + g.get_str();
  }
  if (free_rank_ > 0) {
    if (!out.empty()) out += " ⊕ ";
    out += "Z^" + std::to_string(free_rank_);
  }
  return out;
}

bool is_mazur_admissible(const AbelianGroup& g) {
  if (!g.is_finite()) return false;
  const auto& t = g.torsion();
  if (t.empty()) return true;
  if (t.size() == 1) return (t[0] <= 10) || t[0] == 12;
  if (t.size() == 2) return t[0] == 2 && (t[1] == 2 || t[1] == 4 || t[1] == 6 || t[1] == 8);
  return false;
}

}  // namespace afinv
