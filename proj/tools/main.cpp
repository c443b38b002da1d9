// Command-line surface for the exact free-metabelian-group toolkit:
//   phi        — Magnus matrix of a word
//   apply      — image of a word under an IA-endomorphism
//   certify    — machine-checked fixed-point-freeness certificate for alpha_n
//   oracle     — brute-force fixed-point search up to a word length
//   lie-kernel — graded injectivity table of the Lie-algebra derivation
//
// Exit codes: 0 success, 1 mathematically alarming outcome (failed
// certificate or nonempty fixed-point list), 2 usage error.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include "metabelian/json_io.hpp"

namespace {

using metabelian::ordered_json;

constexpr int kExitSuccess = 0;
constexpr int kExitAlarm = 1;
constexpr int kExitUsage = 2;

int worker_count_from_env() {
  const char* env = std::getenv("METABELIAN_WORKERS");
  if (env == nullptr || *env == '\0') return 0;  // default: hardware concurrency
  try {
    int workers = std::stoi(env);
    if (workers < 1) throw std::invalid_argument("nonpositive");
    return workers;
  } catch (const std::exception&) {
    throw std::invalid_argument("METABELIAN_WORKERS must be a positive integer");
  }
}

metabelian::IAEndomorphism load_endomorphism(const std::string& path, int expected_rank) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open endomorphism file: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument("invalid JSON in " + path + ": " + e.what());
  }
  metabelian::IAEndomorphism e = metabelian::endomorphism_from_json(j);
  if (e.rank() != expected_rank) {
    throw std::invalid_argument("endomorphism rank " + std::to_string(e.rank()) +
                                " does not match --n " + std::to_string(expected_rank));
  }
  return e;
}

void print_json(const ordered_json& j) { std::cout << j.dump(2) << "\n"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computations in free metabelian groups via the Magnus representation"};
  app.require_subcommand(1);

  int n = 0;
  int max_len = 0;
  int max_degree = 0;
  std::string word_text;
  std::string endo_path;

  CLI::App* cmd_phi = app.add_subcommand("phi", "Magnus matrix of a word");
  cmd_phi->add_option("--n", n, "rank (number of generators, >= 2)")->required();
  cmd_phi->add_option("word", word_text, "word in g1..gn (may be empty)");

  CLI::App* cmd_apply = app.add_subcommand("apply", "apply an IA-endomorphism to a word");
  cmd_apply->add_option("--n", n, "rank (>= 2)")->required();
  cmd_apply->add_option("--endo", endo_path, "endomorphism JSON file")->required();
  cmd_apply->add_option("word", word_text, "word in g1..gn (may be empty)");

  CLI::App* cmd_certify = app.add_subcommand("certify", "fixed-point-freeness certificate for alpha_n");
  cmd_certify->add_option("--n", n, "rank (>= 3)")->required();

  CLI::App* cmd_oracle = app.add_subcommand("oracle", "brute-force fixed-point search");
  cmd_oracle->add_option("--n", n, "rank (>= 3 for the default alpha_n)")->required();
  cmd_oracle->add_option("--max-len", max_len, "maximum word length")->required();
  cmd_oracle->add_option("--endo", endo_path, "endomorphism JSON file (default: alpha_n)");

  CLI::App* cmd_lie = app.add_subcommand("lie-kernel", "graded kernel check of the Lie derivation");
  cmd_lie->add_option("--n", n, "rank (>= 3)")->required();
  cmd_lie->add_option("--max-degree", max_degree, "highest degree to check (>= 1)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitSuccess : kExitUsage;
  }

  try {
    if (cmd_phi->parsed()) {
      if (n < 2) throw std::invalid_argument("phi needs --n >= 2");
      print_json(metabelian::to_json(metabelian::phi(metabelian::parse_word(n, word_text))));
      return kExitSuccess;
    }

    if (cmd_apply->parsed()) {
      if (n < 2) throw std::invalid_argument("apply needs --n >= 2");
      metabelian::IAEndomorphism e = load_endomorphism(endo_path, n);
      std::cout << e.apply(metabelian::parse_word(n, word_text)).to_string() << "\n";
      return kExitSuccess;
    }

    if (cmd_certify->parsed()) {
      metabelian::Certificate cert = metabelian::certify_no_fixed_points(n);
      print_json(metabelian::to_json(cert));
      return cert.conclusion ? kExitSuccess : kExitAlarm;
    }

    if (cmd_oracle->parsed()) {
      metabelian::IAEndomorphism e =
          endo_path.empty() ? metabelian::alpha_n(n) : load_endomorphism(endo_path, n);
      metabelian::SearchReport report =
          metabelian::search_fixed_points(e, max_len, worker_count_from_env());
      print_json(metabelian::to_json(report));
      return report.fixed_points_found.empty() ? kExitSuccess : kExitAlarm;
    }

    if (cmd_lie->parsed()) {
      metabelian::KernelReport report = metabelian::kernel_trivial_up_to(n, max_degree);
      print_json(metabelian::to_json(report));
      return report.trivial ? kExitSuccess : kExitAlarm;
    }
  } catch (const metabelian::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
