// Command-line front end: Schubert arithmetic, growth diagrams and verification sweeps.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bruhat_taquin.hpp"

namespace bt = bruhat_taquin;

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitBadInput = 2;

struct SchubertArgs {
  std::string sub;
  std::vector<std::string> perms;
  std::string format = "text";
};

struct GrowthArgs {
  std::string base, delta, gamma;
  std::optional<int> k;
  std::string render = "ascii";
};

struct VerifyArgs {
  int n = 4;
  std::string k = "all";
  std::string suite;
  int jobs = 1;
  std::string out;
  std::size_t sample = 0;
  std::uint64_t seed = 0;
  bool timing = false;
};

std::string aligned_expansion(const bt::SchubertExpansion& e) {
  std::size_t width = 0;
  for (const auto& [w, c] : e.terms()) width = std::max(width, w.to_string().size());
  std::ostringstream out;
  for (const auto& [w, c] : e.terms()) {
    std::string name = w.to_string();
    name.resize(width + 2, ' ');
    out << name << c << "\n";
  }
  return out.str();
}

int run_schubert(const SchubertArgs& a, const bt::SchubertOracle& oracle) {
  if (a.sub == "poly") {
    if (a.perms.size() != 1) throw bt::Error(bt::ErrorCode::ParseError, "schubert poly takes one permutation");
    const bt::Polynomial p = oracle.schubert_polynomial(bt::Permutation::parse(a.perms[0]));
    if (a.format == "json") std::cout << bt::json(p).dump() << "\n";
    else std::cout << p.to_string() << "\n";
    return 0;
  }
  if (a.perms.size() != 2) throw bt::Error(bt::ErrorCode::ParseError, "schubert product takes two permutations");
  const auto e = oracle.structure_constants(bt::Permutation::parse(a.perms[0]), bt::Permutation::parse(a.perms[1]));
  if (a.format == "json") std::cout << bt::expansion_as_object(e).dump() << "\n";
  else std::cout << aligned_expansion(e);
  return 0;
}

int run_growth(const GrowthArgs& a) {
  const bt::Permutation base = bt::Permutation::parse(a.base);
  const bt::ChainWord delta = bt::parse_chain(base, a.delta, a.k);
  const bt::ChainWord gamma = bt::parse_chain(delta.top(), a.gamma, a.k);
  const bt::GrowthDiagram d = bt::fill_growth(delta, gamma);
  const std::vector<bt::Rule> tags = d.fired_in_order();
  const std::string jdt = d.bottom_row().to_string();
  if (a.render == "json") {
    bt::json j = d;
    j["jdt"] = jdt;
    j["tags"] = tags;
    std::cout << j.dump() << "\n";
    return 0;
  }
  std::cout << (a.render == "tikz" ? bt::render_tikz(d) : bt::render_ascii(d));
  std::cout << "jdt: " << jdt << "\ntags:";
  for (bt::Rule r : tags) std::cout << " " << bt::to_string(r);
  std::cout << "\n";
  return 0;
}

std::vector<int> parse_ks(const std::string& text, int n) {
  if (text == "all") return {};
  std::vector<int> ks;
  std::stringstream in(text);
  std::string part;
  while (std::getline(in, part, ',')) {
    try {
      std::size_t used = 0;
      const int k = std::stoi(part, &used);
      if (used != part.size() || k < 1 || k >= n) throw std::invalid_argument(part);
      ks.push_back(k);
    } catch (const std::exception&) {
      throw bt::Error(bt::ErrorCode::ParseError, "--k expects 'all' or a comma list of values in 1.." + std::to_string(n - 1));
    }
  }
  return ks;
}

int run_verify(const VerifyArgs& a, const bt::SchubertOracle& oracle) {
  bt::SweepOptions o;
  o.suite = a.suite;
  o.n = a.n;
  o.ks = parse_ks(a.k, a.n);
  o.jobs = a.jobs;
  o.sample = a.sample;
  o.seed = a.seed;
  o.timing = a.timing;

  std::ofstream file;
  if (!a.out.empty()) {
    file.open(a.out, std::ios::trunc);
    if (!file) throw bt::Error(bt::ErrorCode::ParseError, "cannot open " + a.out + " for writing");
  }
  std::ostream& out = a.out.empty() ? std::cout : file;
  const bt::SweepReport r = bt::run_sweep(o, oracle, [&](const bt::json& rec) { out << rec.dump() << "\n" << std::flush; });
  out << bt::summary_record(o, r).dump() << "\n";
  out.flush();
  if (!out) {
    std::cerr << "error: failed writing report\n";
    return kExitFailure;
  }
  const auto& s = r.summary;
  std::cerr << a.suite << " n=" << a.n << ": " << s.instances << " instances, " << s.pass << " pass, " << s.fail << " fail, " << s.skipped << " skipped";
  if (s.counterexample) std::cerr << ", " << s.counterexample << " counterexample(s)";
  std::cerr << "\n";
  return r.ok() ? 0 : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generalized jeu de taquin on k-Bruhat chains, with Schubert structure-constant checks"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string cache_path;
  if (const char* env = std::getenv("BRUHAT_TAQUIN_CACHE")) cache_path = env;
  app.add_option("--cache", cache_path, "Persistent Schubert polynomial cache (default: $BRUHAT_TAQUIN_CACHE)");

  SchubertArgs sa;
  auto* schubert = app.add_subcommand("schubert", "Schubert polynomials and products");
  schubert->add_option("what", sa.sub, "poly | product")->required()->check(CLI::IsMember({"poly", "product"}));
  schubert->add_option("perms", sa.perms, "Permutations in one-line notation")->required();
  schubert->add_option("--format", sa.format)->check(CLI::IsMember({"json", "text"}));

  GrowthArgs ga;
  auto* growth = app.add_subcommand("growth", "Fill a growth diagram and print the jdt chain");
  growth->add_option("--base", ga.base, "Bottom-left permutation")->required();
  growth->add_option("--delta", ga.delta, "Left edge, e.g. \"2_4@1\" (default: empty)");
  growth->add_option("--gamma", ga.gamma, "Top edge, e.g. \"1_2 2_3\"")->required();
  growth->add_option("--k", ga.k, "Column for steps written without @l");
  growth->add_option("--render", ga.render)->check(CLI::IsMember({"ascii", "tikz", "json"}));

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Run a verification sweep, streaming JSON Lines");
  verify->add_option("--n", va.n, "Permutations in S_n")->check(CLI::Range(1, 9));
  verify->add_option("--k", va.k, "'all' or a comma list");
  verify->add_option("--suite", va.suite)->required()->check(CLI::IsMember(bt::suite_names()));
  verify->add_option("--jobs", va.jobs)->check(CLI::PositiveNumber);
  verify->add_option("--out", va.out, "Report file (default: stdout)");
  verify->add_option("--sample", va.sample, "Seeded random sample of instances");
  verify->add_option("--seed", va.seed);
  verify->add_flag("--timing", va.timing, "Add elapsed time to the summary line");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitBadInput;
  }

  bt::SchubertOracle oracle;
  if (!cache_path.empty()) {
    const auto loaded = bt::load_cache(cache_path, oracle);
    if (!loaded.ok) std::cerr << "warning: " << loaded.warning << "\n";
  }

  int code = 0;
  try {
    if (*schubert) code = run_schubert(sa, oracle);
    else if (*growth) code = run_growth(ga);
    else code = run_verify(va, oracle);
  } catch (const bt::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  }

  if (!cache_path.empty()) {
    const auto saved = bt::save_cache(cache_path, oracle);
    if (!saved.ok) std::cerr << "warning: " << saved.warning << "\n";
  }
  return code;
}
