#include "afinv/cli.hpp"
#include "afinv/io.hpp"

#include "test_util.hpp"

#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <functional>

namespace afinv {
namespace {

using testing::ints;
using testing::M;
using testing::poly;

Json Group(std::initializer_list<long> torsion, unsigned free_rank = 0) {
  return to_json(AbelianGroup(ints(torsion), free_rank));
}

std::size_t ParsePosition(const std::function<void()>& f) {
  try {
    f();
  } catch (const ParseError& e) {
    return e.position();
  }
  ADD_FAILURE() << "no ParseError thrown";
  return 0;
}

TEST(Parse, Integers) {
  EXPECT_EQ(parse_integer("42"), 42);
  EXPECT_EQ(parse_integer(" -7 "), -7);
  EXPECT_EQ(parse_integer("+3"), 3);
  EXPECT_EQ(parse_integer("123456789012345678901234567890"),
            BigInt("123456789012345678901234567890"));
  EXPECT_EQ(ParsePosition([] { parse_integer("12x"); }), 2u);
  EXPECT_EQ(ParsePosition([] { parse_integer("-"); }), 0u);
}

TEST(Parse, Rationals) {
  EXPECT_EQ(parse_rational("-1"), Rational(-1));
  EXPECT_EQ(parse_rational("4/6"), Rational(2, 3));
  EXPECT_EQ(parse_rational("21952/9"), Rational(21952, 9));
  EXPECT_EQ(ParsePosition([] { parse_rational("1/0"); }), 2u);
}

TEST(Parse, Matrices) {
  EXPECT_EQ(parse_matrix("5,2;2,1"), M({{5, 2}, {2, 1}}));
  EXPECT_EQ(parse_matrix(" 1 , 0 ; 0 , 1 "), identity<BigInt>(2));
  EXPECT_EQ(parse_matrix("-3"), M({{-3}}));
  EXPECT_EQ(ParsePosition([] { parse_matrix("1,2;3"); }), 4u);
  EXPECT_EQ(ParsePosition([] { parse_matrix("1,2,3"); }), 0u);
  EXPECT_EQ(ParsePosition([] { parse_matrix("1,;2,3"); }), 2u);
}

TEST(Parse, Polynomials) {
  EXPECT_EQ(parse_polynomial("-1,1"), poly({-1, 1}));
  EXPECT_EQ(parse_polynomial("1,-2,0,1"), poly({1, -2, 0, 1}));
  EXPECT_EQ(parse_polynomial("3,0,0"), poly({3}));
  EXPECT_EQ(ParsePosition([] { parse_polynomial("1,,2"); }), 2u);
}

TEST(Parse, Surds) {
  const auto a = parse_surd("(1+sqrt(5))/2");
  EXPECT_EQ(a.minimal_polynomial(), (IntQuadratic{1, -1, -1}));
  EXPECT_EQ(parse_surd("sqrt(2)").minimal_polynomial(), (IntQuadratic{1, 0, -2}));
  EXPECT_EQ(parse_surd("(1+sqrt(2))/1").floor(), 2);
  EXPECT_EQ(parse_surd("(1+sqrt(2))").floor(), 2);
  EXPECT_EQ(parse_surd("(3-sqrt(2))/1").floor(), 1);
  EXPECT_EQ(parse_surd("(sqrt(3))/2").floor(), 0);
  EXPECT_THROW(parse_surd("sqrt(4)"), Error);
  EXPECT_EQ(ParsePosition([] { parse_surd("(1+sqrt(5))/0"); }), 12u);
  EXPECT_EQ(ParsePosition([] { parse_surd("(1*sqrt(5))/2"); }), 2u);
}

TEST(Parse, CurveSpecs) {
  const CurveSpec l = parse_curve_spec("lambda=-1");
  ASSERT_TRUE(l.lambda.has_value());
  EXPECT_EQ(l.curve.a(), -1);
  EXPECT_EQ(l.curve.b(), 0);
  const CurveSpec ab = parse_curve_spec("a=4, b=0");
  EXPECT_FALSE(ab.lambda.has_value());
  EXPECT_EQ(ab.curve.a(), 4);
  EXPECT_THROW(parse_curve_spec("lambda=1"), Error);
  EXPECT_THROW(parse_curve_spec("a=0,b=0"), Error);
  EXPECT_THROW(parse_curve_spec("mu=3"), ParseError);
}

TEST(Format, RoundTrips) {
  const IntMatrix m = M({{5, -2}, {0, 1}});
  EXPECT_EQ(format_matrix(m), "5,-2;0,1");
  EXPECT_EQ(parse_matrix(format_matrix(m)), m);
  EXPECT_EQ(format_polynomial(poly({-1, 1})), "-1,1");
  EXPECT_EQ(pretty_polynomial(poly({-1, -1, 1})), "x^2 - x - 1");
  EXPECT_EQ(pretty_polynomial(poly({1, -2, 0, 1})), "x^3 - 2x + 1");
  EXPECT_EQ(pretty_matrix(M({{5, 2}, {2, 1}})), "[[5, 2], [2, 1]]");
}

TEST(Json, Encoding) {
  EXPECT_EQ(to_json(BigInt(-5)), Json(-5));
  EXPECT_EQ(to_json(pow(BigInt(10), 30)), Json("1000000000000000000000000000000"));
  EXPECT_EQ(to_json(Rational(21952, 9)), Json("21952/9"));
  EXPECT_EQ(to_json(Rational(-1)), Json("-1"));
  const AbelianGroup g(ints({2, 4}), 1);
  EXPECT_EQ(group_from_json(to_json(g)), g);
  EXPECT_THROW(group_from_json(Json::array()), Error);
}

TEST(Commands, Snf) {
  const auto r = cli::cmd_snf("4,2;2,0");
  EXPECT_EQ(r.json["diagonal"], Json::array({2, 2}));
  EXPECT_TRUE(r.json["verified"].get<bool>());
  EXPECT_EQ(cli::cmd_snf("1,0;0,1").json["diagonal"], Json::array({1, 1}));
  EXPECT_EQ(cli::cmd_snf("6,2;2,2").json["diagonal"], Json::array({2, 4}));
  EXPECT_EQ(r.exit_code, 0);
}

TEST(Commands, Abelianize) {
  EXPECT_EQ(cli::cmd_abelianize("5,2;2,1", "-1,1").json["group"], Group({2, 2}));
  EXPECT_EQ(cli::cmd_abelianize("2,1;1,1", "-1,1").json["group"], Group({}));
  EXPECT_EQ(cli::cmd_abelianize("5,2;2,1", "1,1").json["group"], Group({2, 4}));
  EXPECT_EQ(cli::cmd_abelianize("5,2;2,1", "1,1").text,
            "Ab_{x + 1}([[5, 2], [2, 1]]) = Z_2 ⊕ Z_4\n");
  EXPECT_THROW(cli::cmd_abelianize("5,2;2,1", "0,1"), Error);
}

TEST(Commands, BowenFranksAndProbe) {
  const auto bf = cli::cmd_bowen_franks("3,2;1,1");
  EXPECT_EQ(bf.json["group"], Group({2}));
  EXPECT_EQ(bf.json["det_a_minus_i"], Json(-2));
  const auto pr = cli::cmd_probe("5,2;2,1", "-1,1", 20, 20, cli::kDefaultSeed);
  EXPECT_EQ(pr.json["failures"], Json(0));
  EXPECT_EQ(pr.exit_code, 0);
}

TEST(Commands, Cf) {
  const auto r = cli::cmd_cf("(1+sqrt(2))/1", true);
  EXPECT_EQ(r.json["period"], Json::array({2}));
  EXPECT_EQ(r.json["preperiod"], Json::array());
  EXPECT_EQ(r.json["matrix"], to_json(M({{5, 2}, {2, 1}})));
  EXPECT_EQ(cli::cmd_cf("(1+sqrt(5))/2", false).json["period"], Json::array({1}));
  EXPECT_FALSE(cli::cmd_cf("(1+sqrt(5))/2", false).json.contains("matrix"));
  try {
    cli::cmd_cf("sqrt(4)", false);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(cli::error_json(e)["error"], Json("NotIrrational"));
  }
}

TEST(Commands, Torsion) {
  const auto r = cli::cmd_torsion("lambda=-1");
  EXPECT_EQ(r.json["group"], Group({2, 2}));
  EXPECT_EQ(r.json["points"].size(), 3u);
  EXPECT_TRUE(r.json["mazur_admissible"].get<bool>());
  EXPECT_EQ(cli::cmd_torsion("a=-4,b=0").json["group"], Group({2, 2}));
  EXPECT_EQ(cli::cmd_torsion("a=4,b=0").json["group"], Group({4}));
  try {
    cli::cmd_torsion("lambda=1");
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::SingularLambda);
  }
}

TEST(Commands, Jmap) {
  const auto l = cli::cmd_jmap("lambda=-1");
  EXPECT_EQ(l.json["j"], Json("1728"));
  EXPECT_EQ(l.json["orbit"], Json::array({"-1", "1/2", "2"}));
  EXPECT_EQ(cli::cmd_jmap("j=1728").json["lambdas"], Json::array({"-1", "1/2", "2"}));
  EXPECT_EQ(cli::cmd_jmap("j=0").json["lambdas"], Json::array());
  EXPECT_THROW(cli::cmd_jmap("x=2"), ParseError);
}

TEST(Commands, Zeta) {
  const auto r = cli::cmd_zeta("lambda=-1", "5,2;2,1", ints({5, 3}), 3, std::nullopt);
  const auto& reps = r.json["reports"];
  ASSERT_EQ(reps.size(), 2u);
  EXPECT_EQ(reps[0]["prime"], Json(3));
  EXPECT_EQ(reps[0]["a_p"], Json(0));
  EXPECT_EQ(reps[1]["a_p"], Json(-2));
  EXPECT_EQ(reps[1]["curve_counts"][0], Json(8));
  EXPECT_EQ(reps[1]["operator_counts"][0], Json(6720));
  EXPECT_EQ(reps[1]["match_flags"][0], Json(false));

  const auto empty = cli::cmd_zeta("lambda=-1", "5,2;2,1", ints({3}), 0, std::nullopt);
  EXPECT_EQ(empty.json["reports"][0]["curve_counts"], Json::array());
  EXPECT_EQ(empty.json["reports"][0]["operator_counts"], Json::array());

  const auto two = cli::cmd_zeta("lambda=-1", "5,2;2,1", ints({2}), 3, std::nullopt);
  EXPECT_EQ(two.json["reports"][0]["error"], Json("UnsupportedCharacteristic"));
  EXPECT_EQ(two.json["reports"][0]["operator_branch"], Json("bad"));
}

TEST(Commands, JsonIsDeterministic) {
  EXPECT_EQ(cli::cmd_zeta("lambda=-1", "5,2;2,1", ints({3, 5, 7}), 4, std::nullopt).json.dump(),
            cli::cmd_zeta("lambda=-1", "5,2;2,1", ints({7, 5, 3}), 4, std::nullopt).json.dump());
  EXPECT_EQ(cli::cmd_probe("5,2;2,1", "1,1", 10, 20, 5).json.dump(),
            cli::cmd_probe("5,2;2,1", "1,1", 10, 20, 5).json.dump());
}

cli::CorpusEntry TableRow() {
  cli::CorpusEntry e;
  e.label = "row";
  e.curve = "lambda=-1";
  e.incidence = "(1+sqrt(2))/1";
  e.polynomials = {"-1,1", "1,1"};
  e.expected_torsion = AbelianGroup(ints({2, 2}), 0);
  return e;
}

TEST(Conjecture, TableRowMatches) {
  const auto r = cli::evaluate_entry(TableRow());
  ASSERT_FALSE(r.error.has_value());
  EXPECT_EQ(r.j, 1728);
  EXPECT_EQ(r.matrix, M({{5, 2}, {2, 1}}));
  EXPECT_EQ(r.computed_torsion, AbelianGroup(ints({2, 2}), 0));
  ASSERT_EQ(r.invariants.size(), 2u);
  EXPECT_EQ(r.invariants[0].verdict, cli::Verdict::Match);
  EXPECT_EQ(r.invariants[1].verdict, cli::Verdict::NotComputed);
  EXPECT_EQ(r.expected_ok, true);
}

TEST(Conjecture, EmptyCorpus) {
  const auto r = cli::cmd_conjecture(std::vector<cli::CorpusEntry>{});
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.json["reports"], Json::array());
}

TEST(Conjecture, BadPolynomialIsAnEntryError) {
  cli::CorpusEntry e = TableRow();
  e.polynomials = {"0,1"};
  const auto rep = cli::evaluate_entry(e);
  ASSERT_TRUE(rep.error.has_value());
  EXPECT_EQ((*rep.error)["error"], Json("BadConstantTerm"));
  const auto r = cli::cmd_conjecture(std::vector<cli::CorpusEntry>{e, TableRow()});
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_TRUE(r.json["reports"][0].contains("error"));
  EXPECT_FALSE(r.json["reports"][1].contains("error"));
}

TEST(Conjecture, ExpectedMismatchSetsExitCode) {
  cli::CorpusEntry e = TableRow();
  e.expected_torsion = AbelianGroup(ints({4}), 0);
  const auto r = cli::cmd_conjecture(std::vector<cli::CorpusEntry>{e});
  EXPECT_EQ(r.exit_code, 1);
  EXPECT_EQ(r.json["expected_failures"], Json(1));
}

TEST(Conjecture, JsonAndCsvCorpora) {
  const auto json_entries = cli::parse_corpus_json(Json::parse(R"([
    {"label": "row", "lambda": "-1", "theta": "(1+sqrt(2))/1",
     "polynomials": ["-1,1"], "expected_torsion": {"torsion": [2, 2], "free_rank": 0}},
    {"label": "by matrix", "curve": "a=4,b=0", "matrix": "3,2;1,1"},
    {"label": "broken", "lambda": "-1"}
  ])"));
  ASSERT_EQ(json_entries.size(), 3u);
  EXPECT_FALSE(json_entries[0].load_error.has_value());
  EXPECT_EQ(json_entries[1].incidence_kind, cli::CorpusEntry::IncidenceKind::Matrix);
  EXPECT_EQ(json_entries[1].polynomials, std::vector<std::string>{"-1,1"});
  EXPECT_TRUE(json_entries[2].load_error.has_value());

  const auto by_matrix = cli::evaluate_entry(json_entries[1]);
  ASSERT_FALSE(by_matrix.error.has_value());
  EXPECT_EQ(by_matrix.invariants[0].verdict, cli::Verdict::Mismatch);  // Z_4 vs Z_2

  const auto csv = cli::parse_corpus_csv(
      "label,lambda,theta,poly,expected\n"
      "\"k = Q(i), R = O_k\",-1,(1+sqrt(2))/1,-1,1 1,1,2 2\n");
  ASSERT_EQ(csv.size(), 1u);
  // unquoted commas split the poly column, so this row is malformed
  EXPECT_TRUE(csv[0].load_error.has_value());

  const auto csv_ok = cli::parse_corpus_csv(
      "label,lambda,theta,poly,expected\n"
      "\"k = Q(i), R = O_k\",-1,(1+sqrt(2))/1,\"-1,1 1,1\",2 2\n");
  ASSERT_EQ(csv_ok.size(), 1u);
  EXPECT_EQ(csv_ok[0].label, "k = Q(i), R = O_k");
  EXPECT_EQ(csv_ok[0].polynomials, (std::vector<std::string>{"-1,1", "1,1"}));
  EXPECT_EQ(csv_ok[0].expected_torsion, AbelianGroup(ints({2, 2}), 0));
  EXPECT_EQ(cli::cmd_conjecture(csv_ok).exit_code, 0);
}

TEST(Conjecture, LoadsFilesByExtension) {
  const std::string path = ::testing::TempDir() + "afinv_corpus_test.csv";
  {
    std::ofstream out(path);
    out << "label,lambda,theta,poly,expected\nrow,-1,(1+sqrt(2))/1,\"-1,1\",2 2\n";
  }
  const auto r = cli::cmd_conjecture(path);
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.json["reports"][0]["invariants"][0]["verdict"], Json("match"));
  std::remove(path.c_str());
  EXPECT_THROW(cli::load_corpus(path), Error);
}

}  // namespace
}  // namespace afinv
