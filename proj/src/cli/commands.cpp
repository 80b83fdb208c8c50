#include "afinv/af_invariant.hpp"
#include "afinv/cli.hpp"
#include "afinv/contfrac.hpp"
#include "afinv/zeta.hpp"

#include <algorithm>
#include <sstream>

namespace afinv::cli {

Json error_json(const Error& e) {
  Json j{{"error", std::string(error_name(e.kind()))}, {"message", e.what()}};
  if (const auto* pe = dynamic_cast<const ParseError*>(&e)) j["position"] = pe->position();
  return j;
}

namespace {

std::string join(const std::vector<BigInt>& v, const char* sep = ", ") {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) out += sep;
    out += v[i].get_str();
  }
  return out;
}

std::string join(const std::vector<Rational>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) out += ", ";
    out += to_string(v[i]);
  }
  return out;
}

Json rationals_json(const std::vector<Rational>& v) {
  Json out = Json::array();
  for (const auto& r : v) out.push_back(to_json(r));
  return out;
}

Json curve_json(const CurveQ& e) {
  return Json{{"a", to_json(e.a())},
              {"b", to_json(e.b())},
              {"discriminant", to_json(e.discriminant())},
              {"j", to_json(e.j_invariant())}};
}

std::string curve_text(const CurveQ& e) {
  std::ostringstream os;
  os << "y^2 = x^3";
  if (e.a() != 0) {
    os << (e.a() < 0 ? " - " : " + ");
    if (abs(e.a()) != 1) os << abs(e.a()).get_str();
    os << "x";
  }
  if (e.b() != 0) os << (e.b() < 0 ? " - " : " + ") << abs(e.b()).get_str();
  return os.str();
}

}  // namespace

CommandResult cmd_snf(std::string_view matrix) {
  const IntMatrix m = parse_matrix(matrix);
  const auto s = snf(m);
  const bool verified = (s.p_left * m * s.q_right).eval() == s.diagonal_matrix();
  CommandResult r;
  r.json = Json{{"matrix", to_json(m)},
                {"diagonal", to_json(s.diagonal)},
                {"p_left", to_json(s.p_left)},
                {"q_right", to_json(s.q_right)},
                {"verified", verified}};
  std::ostringstream os;
  os << "M = " << pretty_matrix(m) << "\n"
     << "D = diag(" << join(s.diagonal) << ")\n"
     << "P = " << pretty_matrix(s.p_left) << "\n"
     << "Q = " << pretty_matrix(s.q_right) << "\n"
     << "P*M*Q = D: " << (verified ? "verified" : "FAILED") << "\n";
  r.text = os.str();
  r.exit_code = verified ? 0 : 1;
  return r;
}

CommandResult cmd_abelianize(std::string_view matrix, std::string_view polynomial) {
  const auto a = validate_incidence(parse_matrix(matrix));
  const auto p = parse_polynomial(polynomial);
  const AbelianGroup g = abelianize(a, p);
  CommandResult r;
  r.json = Json{{"matrix", to_json(a.matrix())},
                {"polynomial", format_polynomial(p)},
                {"group", to_json(g)}};
  if (auto ord = g.order()) r.json["order"] = to_json(*ord);
  r.text = "Ab_{" + pretty_polynomial(p) + "}(" + pretty_matrix(a.matrix()) +
           ") = " + g.to_string() + "\n";
  return r;
}

CommandResult cmd_bowen_franks(std::string_view matrix) {
  const auto a = validate_incidence(parse_matrix(matrix));
  const AbelianGroup g = bowen_franks(a);
  const BigInt det = determinant(mat_poly_eval(IntPolynomial::x_minus_one(), a.matrix()));
  CommandResult r;
  r.json = Json{{"matrix", to_json(a.matrix())},
                {"group", to_json(g)},
                {"det_a_minus_i", to_json(det)}};
  std::ostringstream os;
  os << "BF(" << pretty_matrix(a.matrix()) << ") = " << g.to_string() << "\n"
     << "det(A - I) = " << det.get_str() << "\n";
  if (auto ord = g.order()) {
    r.json["order"] = to_json(*ord);
    os << "|group| = " << ord->get_str() << "\n";
  }
  r.text = os.str();
  return r;
}

CommandResult cmd_probe(std::string_view matrix, std::string_view polynomial, unsigned trials,
                        unsigned steps, std::uint64_t seed) {
  const auto a = validate_incidence(parse_matrix(matrix));
  const auto p = parse_polynomial(polynomial);
  const ProbeReport rep = invariance_probe(a, p, trials, seed, steps);
  CommandResult r;
  Json failed = Json::array();
  for (auto t : rep.failed_trials) failed.push_back(t);
  r.json = Json{{"matrix", to_json(rep.matrix)},
                {"polynomial", format_polynomial(rep.polynomial)},
                {"trials", rep.trials},
                {"failures", rep.failures},
                {"failed_trials", failed},
                {"steps", rep.steps},
                {"seed", rep.seed},
                {"group", to_json(rep.group)}};
  std::ostringstream os;
  os << "Ab_{" << pretty_polynomial(p) << "}(" << pretty_matrix(a.matrix())
     << ") = " << rep.group.to_string() << "\n"
     << rep.trials << " conjugations B A B^-1 (steps " << rep.steps << ", seed " << rep.seed
     << "): " << rep.failures << " failures\n";
  r.text = os.str();
  r.exit_code = rep.failures == 0 ? 0 : 1;
  return r;
}

CommandResult cmd_cf(std::string_view surd, bool with_matrix) {
  const QuadraticIrrational theta = parse_surd(surd);
  const PeriodicCF cf = expand(theta);
  CommandResult r;
  r.json = Json{{"theta", Json{{"p", to_json(theta.p_num())},
                               {"d", to_json(theta.d_rad())},
                               {"q", to_json(theta.q_den())}}},
                {"preperiod", to_json(cf.preperiod)},
                {"period", to_json(cf.period)},
                {"note",
                 "period starts at the first recurring (P,Q) state; other offsets give "
                 "cyclic rotations and similar incidence matrices"}};
  std::ostringstream os;
  os << "theta = (" << theta.p_num().get_str() << " + sqrt(" << theta.d_rad().get_str()
     << "))/" << theta.q_den().get_str() << "\n"
     << "preperiod: [" << join(cf.preperiod) << "]\n"
     << "period:    [" << join(cf.period) << "]\n";
  if (with_matrix) {
    const auto a = incidence_from_period(cf);
    r.json["matrix"] = to_json(a.matrix());
    r.json["positivity_power"] = a.positivity_power();
    os << "incidence matrix: " << pretty_matrix(a.matrix()) << "\n";
  }
  r.text = os.str();
  return r;
}

CommandResult cmd_torsion(std::string_view curve) {
  const CurveSpec spec = parse_curve_spec(curve);
  const TorsionResult t = torsion_subgroup(spec.curve);
  CommandResult r;
  Json points = Json::array();
  for (const auto& p : t.points)
    if (!p.is_infinity()) points.push_back(Json::array({to_json(p.x()), to_json(p.y())}));
  const bool mazur = is_mazur_admissible(t.group);
  r.json = Json{{"curve", curve_json(spec.curve)},
                {"group", to_json(t.group)},
                {"points", points},
                {"includes_infinity", true},
                {"order", t.points.size()},
                {"mazur_admissible", mazur}};
  std::ostringstream os;
  if (spec.lambda) {
    r.json["lambda"] = to_json(spec.lambda->value());
    r.json["model"] = Json{{"shift", to_json(spec.model->shift)},
                           {"scale", to_json(spec.model->scale)}};
    os << "E_lambda, lambda = " << to_string(spec.lambda->value()) << "\n";
  }
  os << "model: " << curve_text(spec.curve) << "\n"
     << "j = " << to_string(spec.curve.j_invariant()) << "\n"
     << "E_tors(Q) = " << t.group.to_string() << "\n"
     << "points: O";
  for (const auto& p : t.points)
    if (!p.is_infinity()) os << ", (" << to_string(p.x()) << ", " << to_string(p.y()) << ")";
  os << "\n";
  r.text = os.str();
  r.exit_code = mazur ? 0 : 1;
  return r;
}

CommandResult cmd_jmap(std::string_view spec) {
  CommandResult r;
  std::ostringstream os;
  const auto eq = spec.find('=');
  const std::string_view key = spec.substr(0, eq == std::string_view::npos ? 0 : eq);
  if (key == "lambda") {
    const LegendreParameter lam(parse_rational(spec.substr(eq + 1)));
    const Rational j = j_from_lambda(lam);
    const auto orbit = lambda_orbit(lam);
    r.json = Json{{"lambda", to_json(lam.value())},
                  {"j", to_json(j)},
                  {"orbit", rationals_json(orbit)},
                  {"orbit_size", orbit.size()}};
    os << "j(E_" << to_string(lam.value()) << ") = " << to_string(j) << "\n"
       << "orbit (" << orbit.size() << "): {" << join(orbit) << "}\n";
  } else if (key == "j") {
    const Rational j = parse_rational(spec.substr(eq + 1));
    const auto lambdas = rational_lambdas_from_j(j);
    r.json = Json{{"j", to_json(j)}, {"lambdas", rationals_json(lambdas)}};
    os << "rational lambda with j = " << to_string(j) << ": {" << join(lambdas) << "}\n";
  } else {
    throw ParseError(0, "expected 'lambda=<rational>' or 'j=<rational>'");
  }
  r.text = os.str();
  return r;
}

namespace {

Json zeta_report_json(const LocalZetaReport& z) {
  Json flags = Json::array();
  for (bool f : z.match_flags) flags.push_back(f);
  Json alpha = z.op.alpha ? Json(*z.op.alpha) : Json(nullptr);
  return Json{
      {"prime", to_json(z.curve.prime)},
      {"a_p", to_json(z.curve.a_p)},
      {"curve_counts", to_json(z.curve.counts)},
      {"curve_factor",
       Json{{"hasse_weil", to_json(z.curve.numerator)},
            {"zeta_numerator", to_json(z.curve.numerator)},
            {"zeta_denominator", to_json(z.curve.denominator)},
            {"series", to_json(z.curve.closed_form_series)},
            {"exp_series_agrees", z.curve.agree}}},
      {"operator_counts", to_json(z.op.counts)},
      {"operator_params",
       Json{{"trace_power", to_json(z.op.trace_power)},
            {"tr2_minus_4", to_json(z.op.trace_discriminant)},
            {"branch", std::string(branch_name(z.op.branch))},
            {"alpha", alpha}}},
      {"match_flags", flags}};
}

}  // namespace

CommandResult cmd_zeta(std::string_view curve, std::string_view matrix,
                       std::vector<BigInt> primes, unsigned order, std::optional<int> alpha) {
  const CurveSpec spec = parse_curve_spec(curve);
  const auto a = validate_incidence(parse_matrix(matrix));
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());

  CommandResult r;
  Json reports = Json::array();
  std::ostringstream os;
  os << "curve: " << curve_text(spec.curve) << "   A = " << pretty_matrix(a.matrix()) << "\n";
  for (const auto& p : primes) {
    try {
      const LocalZetaReport z = compare_local(spec.curve, a, p, order, alpha);
      reports.push_back(zeta_report_json(z));
      os << "p = " << p.get_str() << ": a_p = " << z.curve.a_p.get_str()
         << ", branch " << branch_name(z.op.branch) << "\n"
         << "  #E(F_p^n): [" << join(z.curve.counts) << "]\n"
         << "  |K_0|:     [" << join(z.op.counts) << "]\n"
         << "  match:     [";
      for (std::size_t i = 0; i < z.match_flags.size(); ++i)
        os << (i ? ", " : "") << (z.match_flags[i] ? "yes" : "no");
      os << "]\n";
    } catch (const Error& e) {
      Json env = error_json(e);
      env["prime"] = to_json(p);
      if (is_prime(p) && is_bad_operator_prime(a, p)) {
        env["operator_branch"] = "bad";
        env["notice"] = p.get_str() + " divides tr(A)^2 - 4 (bad operator branch)";
      }
      reports.push_back(std::move(env));
      os << "p = " << p.get_str() << ": " << error_name(e.kind()) << ": " << e.what() << "\n";
    }
  }
  r.json = Json{{"curve", curve_json(spec.curve)},
                {"matrix", to_json(a.matrix())},
                {"order", order},
                {"reports", reports}};
  r.text = os.str();
  return r;
}

}  // namespace afinv::cli
