// One PASS/FAIL line per acceptance criterion; exits 1 if any fails.

#include <cstdio>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "ordvec/coherence.hpp"
#include "ordvec/random_instances.hpp"
#include "ordvec/suite.hpp"

using namespace ordvec;

namespace {

struct Line {
  bool pass;
  std::string detail;
};

Line from_suite(const std::map<std::string, suite::CheckResult>& results, const std::string& name) {
  const auto& r = results.at(name);
  std::string detail = name + ", " + std::to_string(r.cases) + " cases";
  if (r.status != suite::Status::Pass) detail += ": " + r.reason + " " + r.counterexample.dump();
  return {r.status == suite::Status::Pass, detail};
}

// 100 random positive pairs, each under its own random closed cone, taken as
// given (no rescaling), plus the lexicographic pair.
Line literal_pair_scan(std::uint64_t seed, std::size_t& incoherent, std::string& first) {
  Sampler rng(seed, 10);
  incoherent = 0;
  for (int i = 0; i < 100; ++i) {
    auto dim = static_cast<std::size_t>(rng.integer(1, 6));
    RandomCone k = random_cone(rng, dim);
    RVector v = random_cone_element(rng, k), w = random_cone_element(rng, k);
    PairScanReport rep = pair_coherence_scan(k.cone, {{v, w}});
    if (rep.incoherent.empty()) continue;
    if (incoherent++ == 0) {
      const auto& t = rep.verdicts.front().witness;
      first = "v = " + v.str() + ", w = " + w.str() + ", witness " + t.str();
    }
  }
  bool lex = !pair_coherence_scan(Cone::lex2(), {{RVector{1, 1}, RVector{0, 1}}}).incoherent.empty();
  std::string detail = std::to_string(100 - incoherent) + "/100 pairs coherent, lexicographic pair " +
                       (lex ? "incoherent" : "coherent");
  if (incoherent > 0) detail += "; first incoherent pair " + first;
  return {incoherent == 0 && lex, detail};
}

}  // namespace

int main() {
  suite::Options opts;
  opts.seed = 42;
  suite::Report rep = suite::run_suite(opts);
  std::map<std::string, suite::CheckResult> results;
  for (const auto& r : rep.results) results.emplace(r.name, r);

  std::size_t incoherent = 0;
  std::string first;
  const std::vector<std::pair<std::string, Line>> lines{
      {"delta-basis identity", from_suite(results, "delta_basis.l1_identity")},
      {"lexicographic counterexample", from_suite(results, "lex.counterexample")},
      {"free-group instance", from_suite(results, "f2.incoherence")},
      {"principal-ideal chain", from_suite(results, "principal_ideal.chain")},
      {"coherence duality", from_suite(results, "coherence.duality")},
      {"additivity equivalence", from_suite(results, "coherence.additivity")},
      {"operator-norm squeeze", from_suite(results, "functionals.operator_norm_squeeze")},
      {"norm axioms and domination", from_suite(results, "p_M.norm_axioms")},
      {"LP trustworthiness", from_suite(results, "lp.trustworthiness")},
      {"Archimedean pair scan", literal_pair_scan(opts.seed, incoherent, first)},
      {"truncation monotonicity", from_suite(results, "truncation.monotone")},
  };

  bool all = true;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const auto& [title, line] = lines[i];
    std::printf("%s  %2zu. %s (%s)\n", line.pass ? "PASS" : "FAIL", i + 1, title.c_str(), line.detail.c_str());
    all = all && line.pass;
    if (i == 9) {
      Line norm = from_suite(results, "archimedean.normalized_pairs");
      std::printf("        note: with v, w rescaled to unit norm for the order unit v + w: %s (%s)\n",
                  norm.pass ? "pass" : "fail", norm.detail.c_str());
    }
  }
  std::printf("%s\n", all ? "all criteria passed" : "some criteria failed");
  return all ? 0 : 1;
}
