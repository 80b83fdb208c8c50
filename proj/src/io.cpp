#include "afinv/io.hpp"

#include "afinv/error.hpp"

#include <cctype>
#include <sstream>

namespace afinv {

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  std::size_t position() const { return pos_; }

  bool accept(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  bool accept(std::string_view word) {
    skip_space();
    if (text_.substr(pos_, word.size()) == word) {
      pos_ += word.size();
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  void expect(std::string_view word) {
    if (!accept(word)) fail("expected '" + std::string(word) + "'");
  }
  void expect_end() {
    if (!at_end()) fail("unexpected trailing input");
  }

  BigInt integer() {
    skip_space();
    const std::size_t start = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
    const std::size_t digits = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == digits) {
      pos_ = start;
      fail("expected an integer");
    }
    std::string token(text_.substr(start, pos_ - start));
    if (token[0] == '+') token.erase(0, 1);
    return BigInt(token);
  }

  Rational rational() {
    const BigInt num = integer();
    if (!accept('/')) return Rational(num);
    const std::size_t den_pos = position();
    const BigInt den = integer();
    if (den == 0) throw ParseError(den_pos, "zero denominator");
    return make_rational(num, den);
  }

  [[noreturn]] void fail(const std::string& message) const { throw ParseError(pos_, message); }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

BigInt parse_integer(std::string_view text) {
  Cursor c(text);
  BigInt v = c.integer();
  c.expect_end();
  return v;
}

Rational parse_rational(std::string_view text) {
  Cursor c(text);
  Rational v = c.rational();
  c.expect_end();
  return v;
}

IntMatrix parse_matrix(std::string_view text) {
  Cursor c(text);
  std::vector<std::vector<BigInt>> rows(1);
  std::vector<std::size_t> row_pos{0};
  for (;;) {
    rows.back().push_back(c.integer());
    if (c.accept(',')) continue;
    if (c.accept(';')) {
      row_pos.push_back(c.position());
      rows.emplace_back();
      continue;
    }
    c.expect_end();
    break;
  }
  const std::size_t n = rows.size();
  for (std::size_t i = 0; i < n; ++i)
    if (rows[i].size() != n)
      throw ParseError(row_pos[i], "row " + std::to_string(i + 1) + " has " +
                                       std::to_string(rows[i].size()) +
                                       " entries, expected " + std::to_string(n) +
                                       " for a square matrix");
  IntMatrix m(static_cast<Index>(n), static_cast<Index>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      m(static_cast<Index>(i), static_cast<Index>(j)) = rows[i][j];
  return m;
}

IntPolynomial parse_polynomial(std::string_view text) {
  Cursor c(text);
  std::vector<BigInt> coeffs{c.integer()};
  while (c.accept(',')) coeffs.push_back(c.integer());
  c.expect_end();
  return IntPolynomial(std::move(coeffs));
}

QuadraticIrrational parse_surd(std::string_view text) {
  Cursor c(text);
  auto radicand = [&] {
    c.expect("sqrt");
    c.expect('(');
    BigInt d = c.integer();
    c.expect(')');
    return d;
  };
  if (c.peek() == 's') {
    BigInt d = radicand();
    c.expect_end();
    return QuadraticIrrational(0, d, 1);
  }
  c.expect('(');
  BigInt p = 0;
  bool negative_root = false;
  if (c.peek() == 's') {
    // (sqrt(d))/q
  } else {
    p = c.integer();
    if (c.accept('-'))
      negative_root = true;
    else
      c.expect('+');
  }
  BigInt d = radicand();
  c.expect(')');
  BigInt q = 1;
  if (c.accept('/')) {
    const std::size_t qpos = c.position();
    q = c.integer();
    if (q == 0) throw ParseError(qpos, "zero denominator");
  }
  c.expect_end();
  // (p - sqrt d)/q = (-p + sqrt d)/(-q)
  if (negative_root) return QuadraticIrrational(-p, d, -q);
  return QuadraticIrrational(p, d, q);
}

CurveSpec parse_curve_spec(std::string_view text) {
  Cursor c(text);
  if (c.accept("lambda")) {
    c.expect('=');
    Rational lam = c.rational();
    c.expect_end();
    LegendreParameter param(lam);
    WeierstrassModel model = legendre_to_weierstrass(param);
    CurveQ curve = model.curve;
    return CurveSpec{param, curve, model};
  }
  if (c.peek() == 'a') {
    c.expect('a');
    c.expect('=');
    BigInt a = c.integer();
    c.expect(',');
    c.expect('b');
    c.expect('=');
    BigInt b = c.integer();
    c.expect_end();
    return CurveSpec{std::nullopt, CurveQ(a, b), std::nullopt};
  }
  c.fail("expected 'lambda=<rational>' or 'a=<int>,b=<int>'");
}

std::string format_matrix(const IntMatrix& m) {
  std::string out;
  for (Index i = 0; i < m.rows(); ++i) {
    if (i > 0) out += ';';
    for (Index j = 0; j < m.cols(); ++j) {
      if (j > 0) out += ',';
      out += m(i, j).get_str();
    }
  }
  return out;
}

std::string format_polynomial(const IntPolynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    if (i > 0) out += ',';
    out += p.coeffs()[i].get_str();
  }
  return out;
}

std::string pretty_polynomial(const IntPolynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  const auto& c = p.coeffs();
  for (std::size_t k = c.size(); k-- > 0;) {
    if (c[k] == 0) continue;
    const bool neg = c[k] < 0;
    const BigInt mag = abs(c[k]);
    if (out.empty())
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    if (k == 0 || mag != 1) out += mag.get_str();
    if (k >= 1) out += "x";
    if (k >= 2) out += "^" + std::to_string(k);
  }
  return out;
}

std::string pretty_matrix(const IntMatrix& m) {
  std::ostringstream os;
  os << '[';
  for (Index i = 0; i < m.rows(); ++i) {
    os << (i ? ", [" : "[");
    for (Index j = 0; j < m.cols(); ++j) os << (j ? ", " : "") << m(i, j).get_str();
    os << ']';
  }
  os << ']';
  return os.str();
}

Json to_json(const BigInt& x) {
  if (auto v = to_int64(x)) return *v;
  return x.get_str();
}

Json to_json(const Rational& x) { return to_string(x); }

Json to_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Index j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json to_json(const std::vector<BigInt>& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

Json to_json(const AbelianGroup& g) {
  return Json{{"torsion", to_json(g.torsion())}, {"free_rank", g.free_rank()}};
}

AbelianGroup group_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("torsion") || !j["torsion"].is_array())
    throw Error(ErrorKind::InvalidArgument, "group must be {\"torsion\": [...], \"free_rank\": n}");
  std::vector<BigInt> torsion;
  for (const auto& t : j["torsion"]) {
    if (t.is_number_integer())
      torsion.emplace_back(std::to_string(t.get<long long>()));
    else if (t.is_string())
      torsion.emplace_back(parse_integer(t.get<std::string>()));
    else
      throw Error(ErrorKind::InvalidArgument, "torsion entries must be integers");
  }
  const unsigned free_rank = j.value("free_rank", 0U);
  return AbelianGroup(std::move(torsion), free_rank);
}

}  // namespace afinv
