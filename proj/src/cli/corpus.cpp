#include "afinv/af_invariant.hpp"
#include "afinv/cli.hpp"
#include "afinv/contfrac.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#ifndef AFINV_DEFAULT_CORPUS
#define AFINV_DEFAULT_CORPUS "data/corpus.json"
#endif

namespace afinv::cli {

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Match: return "match";
    case Verdict::Mismatch: return "mismatch";
    case Verdict::NotComputed: return "not_computed";
  }
  return "not_computed";
}

namespace {

CorpusEntry entry_from_json(const Json& j, std::size_t index) {
  CorpusEntry e;
  e.label = "entry " + std::to_string(index);
  if (!j.is_object()) {
    e.load_error = "corpus entry must be an object";
    return e;
  }
  try {
    e.label = j.value("label", e.label);
    const bool has_lambda = j.contains("lambda");
    const bool has_curve = j.contains("curve");
    if (has_lambda == has_curve) {
      e.load_error = "exactly one of \"lambda\" or \"curve\" is required";
      return e;
    }
    e.curve = has_lambda ? "lambda=" + j["lambda"].get<std::string>()
                         : j["curve"].get<std::string>();
    const bool has_theta = j.contains("theta");
    const bool has_matrix = j.contains("matrix");
    if (has_theta == has_matrix) {
      e.load_error = "exactly one of \"theta\" or \"matrix\" is required";
      return e;
    }
    e.incidence_kind = has_theta ? CorpusEntry::IncidenceKind::Theta
                                 : CorpusEntry::IncidenceKind::Matrix;
    e.incidence = j[has_theta ? "theta" : "matrix"].get<std::string>();
    if (j.contains("polynomials"))
      e.polynomials = j["polynomials"].get<std::vector<std::string>>();
    else
      e.polynomials = {"-1,1"};
    if (j.contains("expected_torsion") && !j["expected_torsion"].is_null())
      e.expected_torsion = group_from_json(j["expected_torsion"]);
  } catch (const Json::exception& ex) {
    e.load_error = std::string("malformed entry: ") + ex.what();
  } catch (const Error& ex) {
    e.load_error = std::string("malformed entry: ") + ex.what();
  }
  return e;
}

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream is(s);
  std::vector<std::string> out;
  for (std::string tok; is >> tok;) out.push_back(tok);
  return out;
}

// One CSV record; double quotes group fields, "" is a literal quote.
std::vector<std::string> csv_fields(const std::string& line) {
  std::vector<std::string> out(1);
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        out.back() += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        out.back() += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      out.emplace_back();
    } else if (c != '\r') {
      out.back() += c;
    }
  }
  return out;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t") - b + 1);
}

}  // namespace

std::vector<CorpusEntry> parse_corpus_json(const Json& doc) {
  if (!doc.is_array()) throw Error(ErrorKind::InvalidArgument, "corpus must be a JSON array");
  std::vector<CorpusEntry> out;
  for (std::size_t i = 0; i < doc.size(); ++i) out.push_back(entry_from_json(doc[i], i));
  return out;
}

std::vector<CorpusEntry> parse_corpus_csv(std::string_view text) {
  std::istringstream is{std::string(text)};
  std::string line;
  std::vector<CorpusEntry> out;
  bool header = true;
  std::size_t index = 0;
  while (std::getline(is, line)) {
    if (trim(line).empty()) continue;
    if (header) {
      header = false;
      continue;
    }
    const auto f = csv_fields(line);
    CorpusEntry e;
    e.label = "entry " + std::to_string(index++);
    if (f.size() != 5) {
      e.load_error = "expected 5 columns (label,lambda,theta,poly,expected), got " +
                     std::to_string(f.size());
      out.push_back(std::move(e));
      continue;
    }
    e.label = trim(f[0]);
    const std::string curve = trim(f[1]);
    e.curve = (curve.rfind("lambda=", 0) == 0 || curve.rfind("a=", 0) == 0) ? curve
                                                                              : "lambda=" + curve;
    e.incidence_kind = CorpusEntry::IncidenceKind::Theta;
    e.incidence = trim(f[2]);
    e.polynomials = split_ws(f[3]);
    if (e.polynomials.empty()) e.polynomials = {"-1,1"};
    const auto expected = split_ws(f[4]);
    if (!expected.empty()) {
      try {
        std::vector<BigInt> orders;
        for (const auto& tok : expected) orders.push_back(parse_integer(tok));
        e.expected_torsion = AbelianGroup::from_cyclic_orders(orders);
      } catch (const Error& ex) {
        e.load_error = std::string("bad expected column: ") + ex.what();
      }
    }
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<CorpusEntry> load_corpus(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidArgument, "cannot open corpus file " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  const bool csv = path.size() >= 4 && path.compare(path.size() - 4, 4, ".csv") == 0;
  if (csv) return parse_corpus_csv(buf.str());
  Json doc;
  try {
    doc = Json::parse(buf.str());
  } catch (const Json::parse_error& ex) {
    throw Error(ErrorKind::Parse, std::string("corpus is not valid JSON: ") + ex.what());
  }
  return parse_corpus_json(doc);
}

std::string default_corpus_path() {
  if (const char* env = std::getenv(kCorpusEnvVar); env != nullptr && *env != '\0') return env;
  return AFINV_DEFAULT_CORPUS;
}

ConjectureReport evaluate_entry(const CorpusEntry& entry) {
  ConjectureReport r;
  r.entry = entry;
  if (entry.load_error) {
    r.error = Json{{"error", "InvalidArgument"}, {"message", *entry.load_error}};
    return r;
  }
  try {
    std::vector<IntPolynomial> polys;
    for (const auto& text : entry.polynomials) {
      polys.push_back(parse_polynomial(text));
      require_unit_constant_term(polys.back());
    }
    const CurveSpec spec = parse_curve_spec(entry.curve);
    const IncidenceMatrix a = entry.incidence_kind == CorpusEntry::IncidenceKind::Theta
                                  ? incidence_from_period(expand(parse_surd(entry.incidence)))
                                  : validate_incidence(parse_matrix(entry.incidence));
    r.curve = spec.curve;
    r.j = spec.curve.j_invariant();
    r.matrix = a.matrix();
    const TorsionResult t = torsion_subgroup(spec.curve);
    r.computed_torsion = t.group;
    r.torsion_points = t.points;
    for (const auto& p : polys) {
      InvariantCheck c{p, abelianize(a, p), Verdict::NotComputed};
      if (p == IntPolynomial::x_minus_one())
        c.verdict = (c.group == r.computed_torsion) ? Verdict::Match : Verdict::Mismatch;
      r.invariants.push_back(std::move(c));
    }
    if (entry.expected_torsion) r.expected_ok = (*entry.expected_torsion == r.computed_torsion);
  } catch (const Error& e) {
    r.error = error_json(e);
  }
  return r;
}

Json report_json(const ConjectureReport& r) {
  Json j{{"label", r.entry.label}, {"curve_spec", r.entry.curve}, {"incidence", r.entry.incidence}};
  j["expected_torsion"] =
      r.entry.expected_torsion ? to_json(*r.entry.expected_torsion) : Json(nullptr);
  if (r.error) {
    j["error"] = *r.error;
    return j;
  }
  j["curve"] = Json{{"a", to_json(r.curve->a())}, {"b", to_json(r.curve->b())}};
  j["j"] = to_json(r.j);
  j["matrix"] = to_json(r.matrix);
  j["torsion"] = to_json(r.computed_torsion);
  Json points = Json::array();
  for (const auto& p : r.torsion_points)
    if (!p.is_infinity())
      points.push_back(Json::array({to_json(p.x()), to_json(p.y())}));
  j["torsion_points"] = points;
  Json inv = Json::array();
  for (const auto& c : r.invariants)
    inv.push_back(Json{{"polynomial", format_polynomial(c.polynomial)},
                       {"group", to_json(c.group)},
                       {"verdict", std::string(verdict_name(c.verdict))}});
  j["invariants"] = inv;
  j["expected_ok"] = r.expected_ok ? Json(*r.expected_ok) : Json(nullptr);
  j["extension_torsion"] = "not computed";
  return j;
}

CommandResult cmd_conjecture(const std::vector<CorpusEntry>& entries) {
  CommandResult r;
  Json reports = Json::array();
  std::ostringstream os;
  unsigned expected_failures = 0;
  for (const auto& entry : entries) {
    const ConjectureReport rep = evaluate_entry(entry);
    reports.push_back(report_json(rep));
    os << "[" << rep.entry.label << "]\n";
    if (rep.error) {
      os << "  error: " << (*rep.error)["error"].get<std::string>() << ": "
         << (*rep.error)["message"].get<std::string>() << "\n";
      continue;
    }
    os << "  j = " << to_string(rep.j) << ", A = " << pretty_matrix(rep.matrix) << "\n"
       << "  E_tors = " << rep.computed_torsion.to_string();
    if (rep.expected_ok) {
      os << (*rep.expected_ok ? " (as expected)" : " (EXPECTED " +
                                                       rep.entry.expected_torsion->to_string() + ")");
      if (!*rep.expected_ok) ++expected_failures;
    }
    os << "\n";
    for (const auto& c : rep.invariants)
      os << "  Ab_{" << pretty_polynomial(c.polynomial) << "} = " << c.group.to_string() << "  "
         << verdict_name(c.verdict) << "\n";
  }
  r.json = Json{{"reports", reports}, {"expected_failures", expected_failures}};
  r.text = os.str();
  r.exit_code = expected_failures == 0 ? 0 : 1;
  return r;
}

CommandResult cmd_conjecture(const std::string& corpus_path) {
  CommandResult r = cmd_conjecture(load_corpus(corpus_path));
  r.json["corpus"] = corpus_path;
  return r;
}

}  // namespace afinv::cli
