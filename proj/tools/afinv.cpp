// afinv: command-line front end.  See README.md for the command reference.

#include "afinv/cli.hpp"

#include <CLI11.hpp>

#include <iostream>

namespace {

std::vector<afinv::BigInt> parse_prime_list(const std::string& text) {
  std::vector<afinv::BigInt> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto end = text.find(',', start);
    out.push_back(afinv::parse_integer(text.substr(start, end - start)));
    if (end == std::string::npos) break;
    start = end + 1;
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace afinv;
  CLI::App app{"Abelianized AF-algebra invariants, CM torsion and local zeta data"};
  app.require_subcommand(1);

  std::string format = "text";
  std::uint64_t seed = cli::kDefaultSeed;
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
  app.add_option("--seed", seed, "Seed for randomized commands")->capture_default_str();

  std::string matrix, poly = "-1,1", surd, curve, spec, corpus, primes = "3,5,7";
  unsigned trials = 100, steps = afinv::kDefaultConjugationSteps, order = 3;
  std::optional<int> alpha;
  bool with_matrix = false;

  auto* snf = app.add_subcommand("snf", "Smith normal form with P, Q certificates");
  snf->add_option("matrix", matrix, "Matrix, e.g. 4,2;2,0")->required();

  auto* ab = app.add_subcommand("abelianize", "Z^n / p(A) Z^n for an incidence matrix");
  ab->add_option("matrix", matrix)->required();
  ab->add_option("--poly", poly, "Coefficients constant first (x-1 is -1,1)")->capture_default_str();

  auto* bf = app.add_subcommand("bowen-franks", "Z^n / (A - I) Z^n and |det(A - I)|");
  bf->add_option("matrix", matrix)->required();

  auto* probe = app.add_subcommand("probe", "Check invariance under random GL_n(Z) conjugation");
  probe->add_option("matrix", matrix)->required();
  probe->add_option("--poly", poly)->capture_default_str();
  probe->add_option("--trials", trials)->capture_default_str();
  probe->add_option("--steps", steps, "Elementary factors per conjugator")->capture_default_str();

  auto* cf = app.add_subcommand("cf", "Periodic continued fraction of a quadratic irrational");
  cf->add_option("surd", surd, "(p+sqrt(d))/q or sqrt(d)")->required();
  cf->add_flag("--matrix", with_matrix, "Also print the incidence matrix of the period");

  auto* tor = app.add_subcommand("torsion", "Rational torsion subgroup");
  tor->add_option("curve", curve, "lambda=<r> or a=<int>,b=<int>")->required();

  auto* jmap = app.add_subcommand("jmap", "j-invariant, lambda orbit, rational lambdas from j");
  jmap->add_option("spec", spec, "lambda=<r> or j=<r>")->required();

  auto* zeta = app.add_subcommand("zeta", "Curve-side vs operator-side local zeta data");
  zeta->add_option("curve", curve)->required();
  zeta->add_option("matrix", matrix)->required();
  zeta->add_option("--primes", primes)->capture_default_str();
  zeta->add_option("--order", order)->capture_default_str();
  zeta->add_option("--alpha", alpha, "alpha in {-1,0,1} for the bad branch");

  auto* conj = app.add_subcommand("conjecture", "Run the torsion-table corpus");
  conj->add_option("corpus", corpus,
                   std::string("Corpus file (.json or .csv); default $") + cli::kCorpusEnvVar);

  CLI11_PARSE(app, argc, argv);

  const bool json = format == "json";
  try {
    cli::CommandResult r;
    if (*snf)
      r = cli::cmd_snf(matrix);
    else if (*ab)
      r = cli::cmd_abelianize(matrix, poly);
    else if (*bf)
      r = cli::cmd_bowen_franks(matrix);
    else if (*probe)
      r = cli::cmd_probe(matrix, poly, trials, steps, seed);
    else if (*cf)
      r = cli::cmd_cf(surd, with_matrix);
    else if (*tor)
      r = cli::cmd_torsion(curve);
    else if (*jmap)
      r = cli::cmd_jmap(spec);
    else if (*zeta)
      r = cli::cmd_zeta(curve, matrix, parse_prime_list(primes), order, alpha);
    else
      r = cli::cmd_conjecture(corpus.empty() ? cli::default_corpus_path() : corpus);

    if (json)
      std::cout << r.json.dump(2) << "\n";
    else
      std::cout << r.text;
    return r.exit_code;
  } catch (const Error& e) {
    if (json)
      std::cout << cli::error_json(e).dump(2) << "\n";
    else
      std::cerr << "error: " << error_name(e.kind()) << ": " << e.what() << "\n";
    return 2;
  }
}
