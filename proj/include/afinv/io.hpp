#pragma once

// Text formats shared by the CLI and fixtures, and JSON encoders.
//
//   matrix      rows separated by ';', entries by ','         5,2;2,1
//   polynomial  coefficients constant first                  -1,1   (x - 1)
//   rational    integer or p/q                              -1, 21952/9
//   surd        (p+sqrt(d))/q, (p-sqrt(d))/q, sqrt(d)        (1+sqrt(5))/2
//   curve       lambda=<rational>  or  a=<int>,b=<int>
//
// Whitespace between tokens is ignored.  Parse failures raise ParseError
// carrying the byte offset.

#include "afinv/abelian_group.hpp"
#include "afinv/af_invariant.hpp"
#include "afinv/contfrac.hpp"
#include "afinv/elliptic.hpp"
#include "afinv/exact_linalg.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <string_view>

namespace afinv {

BigInt parse_integer(std::string_view text);
Rational parse_rational(std::string_view text);
IntMatrix parse_matrix(std::string_view text);
IntPolynomial parse_polynomial(std::string_view text);
QuadraticIrrational parse_surd(std::string_view text);

struct CurveSpec {
  std::optional<LegendreParameter> lambda;
  /// Integral model; for lambda specs this is legendre_to_weierstrass().curve.
  CurveQ curve;
  std::optional<WeierstrassModel> model;
};

/// Accepts `lambda=<rational>` or `a=<int>,b=<int>`.  SingularLambda and
/// SingularCurve propagate from the constructors.
CurveSpec parse_curve_spec(std::string_view text);

std::string format_matrix(const IntMatrix& m);
std::string format_polynomial(const IntPolynomial& p);
/// Human form, e.g. "x^2 - x - 1".
std::string pretty_polynomial(const IntPolynomial& p);
std::string pretty_matrix(const IntMatrix& m);

using Json = nlohmann::json;

/// Integers fitting in int64 are JSON numbers, larger ones decimal strings.
Json to_json(const BigInt& x);
/// Canonical "p/q" string (bare integer when the denominator is 1).
Json to_json(const Rational& x);
Json to_json(const IntMatrix& m);
Json to_json(const AbelianGroup& g);
Json to_json(const std::vector<BigInt>& v);

/// Inverse of to_json(AbelianGroup); throws InvalidArgument on bad shape.
AbelianGroup group_from_json(const Json& j);

}  // namespace afinv
