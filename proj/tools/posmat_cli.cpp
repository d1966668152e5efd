// posmat: property suites, automorphism decomposition and generators for
// G_n(R) over exact ordered rings. Exit codes: 0 pass, 1 mathematical
// failure or rejection, 2 usage/parse error.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "posmat/error.hpp"
#include "posmat/suites.hpp"

using namespace posmat;

namespace {

struct Options {
  std::string ring = "Q";
  int n = 3;
  int trials = 100;
  std::optional<std::uint64_t> seed;
  int words = 50;
  int length = 8;
  std::string output;
  bool force_k = false;
  std::string suite;
  std::string input;
  std::string kind;
};

std::uint64_t resolve_seed(const Options& o) {
  if (o.seed) return *o.seed;
  if (const char* env = std::getenv("POSMAT_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw ParseError("POSMAT_SEED is not an unsigned integer");
    }
  }
  return 0;
}

Json read_input(const std::string& path) {
  std::stringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    buf << in.rdbuf();
  }
  try {
    return Json::parse(buf.str());
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(e.what());
  }
}

void emit(const Options& o, const Json& j) {
  const std::string text = j.dump(2) + "\n";
  if (o.output.empty() || o.output == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(o.output);
  if (!out) throw ParseError("cannot write " + o.output);
  out << text;
}

int cmd_verify(const Options& o) {
  SuiteConfig cfg{parse_ring(o.ring), o.n, o.trials, resolve_seed(o)};
  if (cfg.n < 3) throw ParseError("--n must be at least 3");
  const auto& names = suite_names();
  if (std::find(names.begin(), names.end(), o.suite) == names.end()) throw ParseError("unknown suite " + o.suite);
  const SuiteReport r = run_suite(o.suite, cfg);
  emit(o, to_json(r));
  return r.ok() ? 0 : 1;
}

int cmd_decompose(const Options& o, const CLI::App& sub) {
  const AutomorphismDescription desc = description_from_json(read_input(o.input));
  if (sub.count("--ring") > 0 && parse_ring(o.ring) != desc.ring) throw ParseError("--ring does not match the input");
  if (sub.count("--n") > 0 && o.n != desc.n) throw ParseError("--n does not match the input");
  const std::uint64_t seed = resolve_seed(o);
  auto oracle = obfuscated_oracle(desc, seed);
  DecomposeConfig cfg;
  cfg.seed = seed;
  cfg.word_count = o.words;
  cfg.force_k_normalize = o.force_k;
  const DecompositionReport r = decompose(oracle.oracle, cfg);
  emit(o, to_json(r));
  return r.verdict == DecompositionReport::Verdict::OK ? 0 : 1;
}

int cmd_factor(const Options& o) {
  const Matrix m = matrix_from_json(read_input(o.input));
  const auto mono = monomial_recognize(m);
  if (!mono) {
    emit(o, Json{{"error", "NotMonomial"}, {"matrix", to_json(m)}});
    return 1;
  }
  emit(o, to_json(factor_monomial(*mono)));
  return 0;
}

int cmd_gen(const Options& o) {
  const RingId ring = parse_ring(o.ring);
  if (o.n < 1) throw ParseError("--n must be positive");
  Rng rng(resolve_seed(o));
  if (o.kind == "word") {
    if (o.length < 0) throw ParseError("--length must be nonnegative");
    emit(o, to_json(random_word(o.n, ring, o.length, rng)));
    return 0;
  }
  if (o.n < 3) throw ParseError("automorphisms need --n >= 3");
  emit(o, to_json(random_description(o.n, ring, rng)));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact ordered-ring matrix semigroups and automorphism decomposition"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--ring", o.ring, "Q, DYADIC, RATFUN or SKEW");
    sub->add_option("--n", o.n, "matrix size");
    sub->add_option("--seed", o.seed, "master seed (falls back to POSMAT_SEED)");
    sub->add_option("--output", o.output, "write JSON here instead of stdout");
  };

  auto* verify = app.add_subcommand("verify", "run a property suite");
  verify->add_option("suite", o.suite, "suite id: ring-axioms, 1-5, 7-13, theorem-identities")->required();
  common(verify);
  verify->add_option("--trials", o.trials, "trials per check family");

  auto* decompose_cmd = app.add_subcommand("decompose", "decompose an automorphism description");
  decompose_cmd->add_option("input", o.input, "description JSON file, or - for stdin")->required();
  common(decompose_cmd);
  decompose_cmd->add_option("--words", o.words, "residual words");
  decompose_cmd->add_flag("--force-k", o.force_k, "run K-normalization for every n");

  auto* factor = app.add_subcommand("factor", "factor a monomial matrix into generators");
  factor->add_option("input", o.input, "matrix JSON file, or - for stdin")->required();
  factor->add_option("--output", o.output, "write JSON here instead of stdout");

  auto* gen = app.add_subcommand("gen", "generate seeded words or automorphism descriptions");
  gen->add_option("kind", o.kind, "word or oracle")->required()->check(CLI::IsMember({"word", "oracle"}));
  common(gen);
  gen->add_option("--length", o.length, "word length");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*verify) return cmd_verify(o);
    if (*decompose_cmd) return cmd_decompose(o, *decompose_cmd);
    if (*factor) return cmd_factor(o);
    return cmd_gen(o);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const UnsupportedRing& e) {
    std::cerr << "UnsupportedRing: " << e.what() << "\n";
    return 2;
  } catch (const InvalidTriple& e) {
    std::cerr << "InvalidTriple: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
