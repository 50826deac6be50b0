#include <CLI11.hpp>
#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "asorbit/canonical_form.hpp"
#include "asorbit/checks.hpp"
#include "asorbit/io.hpp"
#include "asorbit/matrix.hpp"
#include "asorbit/poset.hpp"
#include "asorbit/rank_control.hpp"

namespace {

using namespace asorbit;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitVerifyFailure = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_output(const std::string& out_path, const std::string& content) {
  if (out_path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + out_path + "'");
  out << content;
}

int cmd_canonicalize(const std::string& path) {
  std::string text;
  try {
    text = read_file(path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  Matrix m(1, 1);
  try {
    m = parse_matrix(text);
  } catch (const ParseError& e) {
    std::cerr << "error: " << path << ":" << e.what() << "\n";
    return kExitUsage;
  }
  try {
    const ASMatrix a(std::move(m));
    const Canonicalization canon = canonicalize(a);
    std::cout << "involution: " << monomial_to_involution(canon.monomial).cycles_str() << "\n";
    std::cout << "monomial:\n" << format_matrix(canon.monomial.to_matrix());
    std::cout << "witness:\n" << format_matrix(canon.witness.underlying());
    std::cout << "rank_control:\n" << rank_control(a.underlying()).to_text();
    return kExitOk;
  } catch (const std::exception& e) {
    std::cerr << "error: " << path << ": " << e.what() << "\n";
    return kExitUsage;
  }
}

int cmd_poset(int n, const std::string& format, const std::string& out_path) {
  if (n > 10)
    std::cerr << "warning: n=" << n << " has " << involution_count(n)
              << " involutions; this may take a very long time\n";
  const OrbitPoset poset = build_poset(n);
  std::string content;
  if (format == "text")
    content = poset_to_text(poset);
  else if (format == "json")
    content = poset_to_json(poset).dump(2) + "\n";
  else
    content = poset_to_dot(poset);
  write_output(out_path, content);
  return kExitOk;
}

int cmd_rank(int n, const std::string& involution_text) {
  Involution p = Involution::identity(n);
  try {
    p = Involution::parse(involution_text, n);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  const CanonicWord word = canonic_word(p);
  const int inv = inversions(word);
  const auto fixed = p.fixed_points();
  int fixed_sum = 0;
  for (int a : fixed) fixed_sum += n - (a + 1);
  const int a_count = count_A_of(p);
  const int by_a = dim_by_A(p);
  const int by_word = dim_by_secfm(p);

  std::cout << "involution: " << p.cycles_str() << " in S_" << n << "\n";
  std::cout << "canonic word:";
  if (word.letters.empty()) std::cout << " (empty)";
  for (int v : word.letters) std::cout << ' ' << v + 1;
  std::cout << "\n";
  std::cout << "inversions: " << inv << "\n";
  std::cout << "fixed points:";
  if (fixed.empty()) std::cout << " none";
  for (int v : fixed) std::cout << ' ' << v + 1;
  std::cout << "\n";
  std::cout << "fixed-point sum: " << fixed_sum << "\n";
  std::cout << "A: " << a_count << "\n";
  std::cout << "dim (rank-control formula): " << by_a << "\n";
  std::cout << "dim (word formula): " << by_word << "\n";
  if (a_count != inv + fixed_sum || by_a != by_word) {
    std::cout << "error: the two formulas disagree\n";
    return kExitVerifyFailure;
  }
  return kExitOk;
}

struct CheckSpec {
  std::string name;
  int max_n;
};

const std::vector<CheckSpec> kCheckSpecs = {
    {"grading", kGradingMaxN},   {"dimension", kDimensionMaxN}, {"secfm", kSecfmMaxN},
    {"bruhat", kBruhatMaxN},     {"invariance", kInvarianceMaxN}, {"pfaffian", kPfaffianMaxN},
    {"intervals", kIntervalsMaxN}};

int cmd_verify(int n, std::vector<std::string> requested, std::uint64_t seed, int trials,
               int jobs) {
  const bool explicit_checks = !requested.empty();
  for (const std::string& name : requested) {
    bool known = false;
    for (const CheckSpec& spec : kCheckSpecs) known = known || spec.name == name;
    if (!known) {
      std::cerr << "error: unknown check '" << name << "'\n";
      return kExitUsage;
    }
  }
  std::vector<const CheckSpec*> selected;
  std::vector<const CheckSpec*> skipped;
  for (const CheckSpec& spec : kCheckSpecs) {
    const bool wanted =
        !explicit_checks ||
        std::find(requested.begin(), requested.end(), spec.name) != requested.end();
    if (!wanted) continue;
    if (n > spec.max_n) {
      if (explicit_checks) {
        std::cerr << "error: check '" << spec.name << "' supports n <= " << spec.max_n << "\n";
        return kExitUsage;
      }
      skipped.push_back(&spec);
      continue;
    }
    selected.push_back(&spec);
  }

  std::cout << "verify: n=" << n << " seed=" << seed << " trials=" << trials << " jobs=" << jobs
            << "\n";
  std::vector<CheckResult> results;
  for (const CheckSpec* spec : selected) {
    CheckResult r;
    if (spec->name == "grading")
      r = check_grading(n, jobs);
    else if (spec->name == "dimension")
      r = check_dimension(n, jobs);
    else if (spec->name == "secfm")
      r = check_secfm(n, jobs);
    else if (spec->name == "bruhat")
      r = check_bruhat(n, seed);
    else if (spec->name == "invariance")
      r = check_invariance(n, seed, trials, jobs);
    else if (spec->name == "pfaffian")
      r = check_pfaffian(n, seed, trials, jobs);
    else
      r = check_intervals(n);
    results.push_back(r);
    std::cout << "  " << r.name << std::string(11 - r.name.size(), ' ')
              << (r.passed ? "PASS" : "FAIL") << "  " << r.detail << "\n";
  }
  for (const CheckSpec* spec : skipped)
    std::cout << "  " << spec->name << std::string(11 - spec->name.size(), ' ')
              << "skipped (supports n <= " << spec->max_n << ")\n";

  int passed = 0;
  for (const CheckResult& r : results) passed += r.passed ? 1 : 0;
  std::cout << "verify: " << passed << "/" << results.size() << " checks passed\n";
  return verify_exit_code(results);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Canonical forms of anti-symmetric rational matrices under upper-triangular "
               "congruence, their involution labels, and the orbit poset"};
  app.require_subcommand(1);

  auto* canonicalize_cmd =
      app.add_subcommand("canonicalize", "Canonicalize an anti-symmetric matrix file");
  std::string input_path;
  canonicalize_cmd->add_option("file", input_path, "matrix file: line 1 is n, then n rows")
      ->required();

  auto* poset_cmd = app.add_subcommand("poset", "Build and export the orbit poset");
  int poset_n = 0;
  std::string format = "text";
  std::string out_path;
  poset_cmd->add_option("--n", poset_n, "size of the symmetric group")
      ->required()
      ->check(CLI::PositiveNumber);
  poset_cmd->add_option("--format", format, "output format")
      ->required()
      ->check(CLI::IsMember({"text", "json", "dot"}));
  poset_cmd->add_option("--out", out_path, "write to a file instead of stdout");

  auto* verify_cmd = app.add_subcommand("verify", "Run verification suites");
  int verify_n = 0;
  std::vector<std::string> checks;
  std::uint64_t seed = 0;
  int trials = 20;
  int jobs = 1;
  verify_cmd->add_option("--n", verify_n, "size of the symmetric group")
      ->required()
      ->check(CLI::PositiveNumber);
  verify_cmd->add_option("--checks", checks,
                         "comma-separated subset of grading,dimension,secfm,bruhat,"
                         "invariance,pfaffian,intervals (default: all within bounds)")
      ->delimiter(',');
  verify_cmd->add_option("--seed", seed, "seed for randomized checks");
  verify_cmd->add_option("--trials", trials, "random congruences per involution")
      ->check(CLI::PositiveNumber);
  verify_cmd->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);

  auto* rank_cmd = app.add_subcommand("rank", "Rank data of one involution");
  int rank_n = 0;
  std::string involution_text;
  rank_cmd->add_option("--n", rank_n, "size of the symmetric group")
      ->required()
      ->check(CLI::PositiveNumber);
  rank_cmd->add_option("involution", involution_text, "\"e\" or \"(i,j)(k,l)...\"")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (canonicalize_cmd->parsed()) return cmd_canonicalize(input_path);
    if (poset_cmd->parsed()) return cmd_poset(poset_n, format, out_path);
    if (verify_cmd->parsed()) return cmd_verify(verify_n, checks, seed, trials, jobs);
    if (rank_cmd->parsed()) return cmd_rank(rank_n, involution_text);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
