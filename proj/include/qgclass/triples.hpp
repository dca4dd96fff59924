#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "json.hpp"
#include "qgclass/root_system.hpp"

namespace qgclass {

// A Belavin-Drinfeld triple (Gamma1, Gamma2, tau) over a fixed root
// system. Indices are 0-based internally; all JSON I/O is 1-based to
// match the usual alpha_1..alpha_n numbering.
struct AdmissibleTriple {
  std::shared_ptr<const RootSystem> rs;
  std::vector<int> gamma1;  // sorted
  std::vector<int> gamma2;  // sorted
  std::map<int, int> tau;

  bool is_empty() const { return gamma1.empty(); }
};

struct AdmissibilityResult {
  bool ok = false;
  std::string reason;  // set when !ok: which condition failed
  explicit operator bool() const { return ok; }
};

// Checks bijection, isometry and nilpotency. Out-of-range indices throw;
// a well-formed but inadmissible candidate reports the failed condition.
AdmissibilityResult is_admissible(const RootSystem& rs, const std::vector<int>& gamma1,
                                  const std::vector<int>& gamma2,
                                  const std::map<int, int>& tau);

// Validating constructor; throws std::invalid_argument on inadmissible input.
AdmissibleTriple make_triple(std::shared_ptr<const RootSystem> rs,
                             std::vector<int> gamma1, std::vector<int> gamma2,
                             std::map<int, int> tau);

// Complete, duplicate-free, canonically ordered (|Gamma1|, then lexicographic
// on Gamma1, Gamma2 and the graph of tau). The empty triple comes first.
std::vector<AdmissibleTriple> enumerate_admissible_triples(
    std::shared_ptr<const RootSystem> rs);

bool triple_less(const AdmissibleTriple& a, const AdmissibleTriple& b);
bool triple_equal(const AdmissibleTriple& a, const AdmissibleTriple& b);

// One entry per (alpha, tau^k(alpha)) with alpha a positive root supported
// on Gamma1 and k >= 1, iterating while the image stays supported on Gamma1.
struct TauPair {
  Root source;
  Root image;
  int power = 1;
};
std::vector<TauPair> extend_tau_pairs(const AdmissibleTriple& triple);

// Maximal tau-orbit chains of simple-root indices (0-based); they partition
// {0..rank-1}. Valid for every type.
std::vector<std::vector<int>> tau_orbit_chains(const AdmissibleTriple& triple);

// Strings in the sl(n) sense: members are 1-based simple-root indices, the
// weight is the sum of members, and the formal string {alpha_n} of weight
// n = rank+1 is appended last.
struct TauString {
  std::vector<int> members;
  int weight = 0;
  bool is_formal = false;
};
std::vector<TauString> strings(const AdmissibleTriple& triple);

// N = gcd of all string weights, formal string included. Type A only.
int gcd_invariant(const AdmissibleTriple& triple);

nlohmann::json triple_to_json(const AdmissibleTriple& triple);

// Accepts {"gamma1": [...], "gamma2": [...], "tau": [[a,b], ...]} with
// optional "type"/"rank" fields that must then match `rs`.
AdmissibleTriple triple_from_json(const nlohmann::json& j,
                                  std::shared_ptr<const RootSystem> rs);
// Self-contained variant: "type" and "rank" are required.
AdmissibleTriple triple_from_json(const nlohmann::json& j);

}  // namespace qgclass
