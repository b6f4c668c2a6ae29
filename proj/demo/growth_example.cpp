// Fill one growth diagram, then count jdt images over a whole interval and compare with
// the Schubert structure constants.

#include <iostream>

#include "bruhat_taquin.hpp"

using namespace bruhat_taquin;

int main() {
  const Permutation base = Permutation::parse("2143");
  const ChainWord delta = parse_chain(base, "2_4@1");
  const ChainWord gamma = parse_chain(delta.top(), "1_2 2_3", 2);
  const GrowthDiagram d = fill_growth(delta, gamma);

  std::cout << render_ascii(d);
  std::cout << "jdt: " << d.bottom_row().to_string() << "\n";
  std::cout << "tags:";
  for (Rule r : d.fired_in_order()) std::cout << " " << to_string(r);
  std::cout << "\n\n";

  // v = 1324 is a 2-semi-shuffle, so a (PL) chain from the identity is available.
  SchubertOracle oracle;
  const BruhatInterval I{Permutation::parse("1324"), Permutation::parse("3412"), 2};
  const ChainWord pl = build_PL_chain(I.v, I.k);
  std::cout << "interval [" << I.v.to_string() << ", " << I.w.to_string() << "]_" << I.k << ", Delta = " << pl.to_string_with_columns() << "\n";
  for (const auto& r : speclrr_records(oracle, pl, I)) {
    if (!r.target) continue;
    std::cout << "  lambda " << r.lambda.to_string() << ", target " << r.target->to_string() << ": " << r.count << " chains, c = " << r.oracle
              << (r.pass() ? "" : "  MISMATCH") << "\n";
  }
}
