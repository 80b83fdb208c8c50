#include "afinv/bigint.hpp"

#include <algorithm>
#include <limits>

namespace afinv {

std::string to_string(const BigInt& x) { return x.get_str(); }

std::string to_string(const Rational& x) {
  Rational c = x;
  c.canonicalize();
  return c.get_str();
}

std::optional<std::int64_t> to_int64(const BigInt& x) {
  static const BigInt lo(std::to_string(std::numeric_limits<std::int64_t>::min()));
  static const BigInt hi(std::to_string(std::numeric_limits<std::int64_t>::max()));
  if (x < lo || x > hi) return std::nullopt;
  return std::stoll(x.get_str());
}

std::vector<std::pair<BigInt, unsigned>> factorize(BigInt n) {
  std::vector<std::pair<BigInt, unsigned>> out;
  n = abs(n);
  if (n < 2) return out;
  auto strip = [&](const BigInt& p) {
    unsigned e = 0;
    while (divides(p, n)) {
      n /= p;
      ++e;
    }
    if (e > 0) out.emplace_back(p, e);
  };
  strip(BigInt(2));
  strip(BigInt(3));
  // 6k +- 1 wheel
  for (BigInt p = 5; p * p <= n; p += 6) {
    strip(p);
    strip(BigInt(p + 2));
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::vector<BigInt> divisors(const BigInt& n) {
  std::vector<BigInt> ds{BigInt(1)};
  for (const auto& [prime, exp] : factorize(n)) {
    const std::size_t base = ds.size();
    BigInt pk = 1;
    for (unsigned e = 1; e <= exp; ++e) {
      pk *= prime;
      for (std::size_t i = 0; i < base; ++i) ds.push_back(ds[i] * pk);
    }
  }
  std::sort(ds.begin(), ds.end());
  return ds;
}

}  // namespace afinv
