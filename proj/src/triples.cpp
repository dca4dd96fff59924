#include "qgclass/triples.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace qgclass {

namespace {

void check_index_range(const RootSystem& rs, const std::vector<int>& g,
                       const char* name) {
  for (int i : g)
    if (i < 0 || i >= rs.rank())
      throw std::invalid_argument(std::string(name) + " index out of range");
}

std::vector<int> sorted_unique(std::vector<int> v, const char* name) {
  std::sort(v.begin(), v.end());
  if (std::adjacent_find(v.begin(), v.end()) != v.end())
    throw std::invalid_argument(std::string(name) + " has repeated indices");
  return v;
}

}  // namespace

AdmissibilityResult is_admissible(const RootSystem& rs, const std::vector<int>& gamma1,
                                  const std::vector<int>& gamma2,
                                  const std::map<int, int>& tau) {
  check_index_range(rs, gamma1, "gamma1");
  check_index_range(rs, gamma2, "gamma2");
  std::vector<int> g1 = sorted_unique(gamma1, "gamma1");
  std::vector<int> g2 = sorted_unique(gamma2, "gamma2");

  if (g1.size() != g2.size()) return {false, "bijection: |gamma1| != |gamma2|"};

  std::set<int> domain, image;
  for (const auto& [a, b] : tau) {
    if (a < 0 || a >= rs.rank() || b < 0 || b >= rs.rank())
      throw std::invalid_argument("tau index out of range");
    domain.insert(a);
    if (!image.insert(b).second) return {false, "bijection: tau is not injective"};
  }
  if (domain != std::set<int>(g1.begin(), g1.end()))
    return {false, "bijection: tau is not total on gamma1"};
  if (image != std::set<int>(g2.begin(), g2.end()))
    return {false, "bijection: image of tau is not gamma2"};

  const auto& simple = rs.simple_roots();
  for (int a : g1)
    for (int b : g1) {
      int ta = tau.at(a), tb = tau.at(b);
      if (rs.inner(simple[a], simple[b]) != rs.inner(simple[ta], simple[tb]))
        return {false, "isometry: <tau a, tau b> != <a, b> for a=alpha_" +
                           std::to_string(a + 1) + ", b=alpha_" + std::to_string(b + 1)};
    }

  std::set<int> g1set(g1.begin(), g1.end());
  for (int a : g1) {
    int x = a;
    bool exits = false;
    for (size_t step = 0; step <= g1.size(); ++step) {
      x = tau.at(x);
      if (!g1set.count(x)) {
        exits = true;  // x lies in gamma2 \ gamma1
        break;
      }
    }
    if (!exits)
      return {false, "nilpotency: orbit of alpha_" + std::to_string(a + 1) +
                         " never leaves gamma1"};
  }
  return {true, ""};
}

AdmissibleTriple make_triple(std::shared_ptr<const RootSystem> rs,
                             std::vector<int> gamma1, std::vector<int> gamma2,
                             std::map<int, int> tau) {
  if (!rs) throw std::invalid_argument("null root system");
  AdmissibilityResult check = is_admissible(*rs, gamma1, gamma2, tau);
  if (!check) throw std::invalid_argument("triple is not admissible: " + check.reason);
  AdmissibleTriple t;
  t.rs = std::move(rs);
  t.gamma1 = sorted_unique(std::move(gamma1), "gamma1");
  t.gamma2 = sorted_unique(std::move(gamma2), "gamma2");
  t.tau = std::move(tau);
  return t;
}

bool triple_less(const AdmissibleTriple& a, const AdmissibleTriple& b) {
  if (a.gamma1.size() != b.gamma1.size()) return a.gamma1.size() < b.gamma1.size();
  if (a.gamma1 != b.gamma1) return a.gamma1 < b.gamma1;
  if (a.gamma2 != b.gamma2) return a.gamma2 < b.gamma2;
  return a.tau < b.tau;
}

bool triple_equal(const AdmissibleTriple& a, const AdmissibleTriple& b) {
  return a.gamma1 == b.gamma1 && a.gamma2 == b.gamma2 && a.tau == b.tau;
}

std::vector<AdmissibleTriple> enumerate_admissible_triples(
    std::shared_ptr<const RootSystem> rs) {
  if (!rs) throw std::invalid_argument("null root system");
  const int n = rs->rank();

  std::vector<std::vector<int>> subsets;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<int> s;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) s.push_back(i);
    subsets.push_back(std::move(s));
  }

  std::vector<AdmissibleTriple> out;
  for (const auto& g1 : subsets)
    for (const auto& g2 : subsets) {
      if (g1.size() != g2.size()) continue;
      std::vector<int> arrangement = g2;
      std::sort(arrangement.begin(), arrangement.end());
      do {
        std::map<int, int> tau;
        for (size_t i = 0; i < g1.size(); ++i) tau[g1[i]] = arrangement[i];
        if (is_admissible(*rs, g1, g2, tau).ok) {
          AdmissibleTriple t;
          t.rs = rs;
          t.gamma1 = g1;
          t.gamma2 = g2;
          t.tau = std::move(tau);
          out.push_back(std::move(t));
        }
      } while (std::next_permutation(arrangement.begin(), arrangement.end()));
    }

  std::sort(out.begin(), out.end(), triple_less);
  return out;
}

std::vector<TauPair> extend_tau_pairs(const AdmissibleTriple& triple) {
  AdmissibilityResult check =
      is_admissible(*triple.rs, triple.gamma1, triple.gamma2, triple.tau);
  if (!check) throw std::invalid_argument("triple is not admissible: " + check.reason);

  const RootSystem& rs = *triple.rs;
  std::vector<bool> in_g1(rs.rank(), false);
  for (int i : triple.gamma1) in_g1[i] = true;
  auto supported_on_g1 = [&](const std::vector<int>& coeffs) {
    for (int i = 0; i < rs.rank(); ++i)
      if (coeffs[i] != 0 && !in_g1[i]) return false;
    return true;
  };

  std::vector<TauPair> out;
  for (const Root& alpha : rs.positive_roots()) {
    if (!supported_on_g1(alpha.coeffs)) continue;
    std::vector<int> current = alpha.coeffs;
    for (int k = 1;; ++k) {
      // tau acts linearly on coefficient vectors supported on gamma1.
      std::vector<int> image(rs.rank(), 0);
      for (int i = 0; i < rs.rank(); ++i)
        if (current[i] != 0) image[triple.tau.at(i)] += current[i];
      if (!rs.is_positive_root(image))
        throw std::logic_error(
            "internal inconsistency: tau image of a root is not a root");
      out.push_back({rs.root_from_coeffs(alpha.coeffs), rs.root_from_coeffs(image), k});
      if (!supported_on_g1(image)) break;
      current = std::move(image);
    }
  }
  return out;
}

std::vector<std::vector<int>> tau_orbit_chains(const AdmissibleTriple& triple) {
  const int n = triple.rs->rank();
  std::vector<bool> in_g1(n, false), has_preimage(n, false);
  for (int i : triple.gamma1) in_g1[i] = true;
  for (const auto& [a, b] : triple.tau) has_preimage[b] = true;

  std::vector<std::vector<int>> chains;
  int covered = 0;
  for (int start = 0; start < n; ++start) {
    if (has_preimage[start]) continue;
    std::vector<int> chain{start};
    int x = start;
    while (in_g1[x]) {
      x = triple.tau.at(x);
      chain.push_back(x);
    }
    covered += static_cast<int>(chain.size());
    chains.push_back(std::move(chain));
  }
  if (covered != n)
    throw std::logic_error("internal inconsistency: chains do not partition indices");
  return chains;
}

std::vector<TauString> strings(const AdmissibleTriple& triple) {
  if (triple.rs->type() != TypeLabel::A)
    throw std::invalid_argument("strings and weights are defined for type A only");
  std::vector<TauString> out;
  for (const auto& chain : tau_orbit_chains(triple)) {
    TauString s;
    for (int i : chain) {
      s.members.push_back(i + 1);
      s.weight += i + 1;
    }
    out.push_back(std::move(s));
  }
  TauString formal;
  formal.members = {triple.rs->rank() + 1};
  formal.weight = triple.rs->rank() + 1;
  formal.is_formal = true;
  out.push_back(std::move(formal));
  return out;
}

int gcd_invariant(const AdmissibleTriple& triple) {
  int g = 0;
  for (const TauString& s : strings(triple)) g = std::gcd(g, s.weight);
  return g;
}

nlohmann::json triple_to_json(const AdmissibleTriple& triple) {
  nlohmann::json g1 = nlohmann::json::array(), g2 = nlohmann::json::array(),
                 tau = nlohmann::json::array();
  for (int i : triple.gamma1) g1.push_back(i + 1);
  for (int i : triple.gamma2) g2.push_back(i + 1);
  for (const auto& [a, b] : triple.tau) tau.push_back({a + 1, b + 1});
  return {{"type", type_to_string(triple.rs->type())},
          {"rank", triple.rs->rank()},
          {"gamma1", g1},
          {"gamma2", g2},
          {"tau", tau}};
}

namespace {

std::vector<int> indices_from_json(const nlohmann::json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_array())
    throw std::invalid_argument(std::string("triple JSON needs array field '") + key + "'");
  std::vector<int> out;
  for (const auto& x : j[key]) out.push_back(x.get<int>() - 1);
  return out;
}

}  // namespace

AdmissibleTriple triple_from_json(const nlohmann::json& j,
                                  std::shared_ptr<const RootSystem> rs) {
  if (!j.is_object()) throw std::invalid_argument("triple JSON must be an object");
  if (j.contains("type") && type_from_string(j["type"].get<std::string>()) != rs->type())
    throw std::invalid_argument("triple JSON type does not match the requested type");
  if (j.contains("rank") && j["rank"].get<int>() != rs->rank())
    throw std::invalid_argument("triple JSON rank does not match the requested rank");

  std::vector<int> g1 = indices_from_json(j, "gamma1");
  std::vector<int> g2 = indices_from_json(j, "gamma2");
  if (!j.contains("tau") || !j["tau"].is_array())
    throw std::invalid_argument("triple JSON needs array field 'tau'");
  std::map<int, int> tau;
  for (const auto& pair : j["tau"]) {
    if (!pair.is_array() || pair.size() != 2)
      throw std::invalid_argument("tau entries must be [from, to] pairs");
    tau[pair[0].get<int>() - 1] = pair[1].get<int>() - 1;
  }
  return make_triple(std::move(rs), std::move(g1), std::move(g2), std::move(tau));
}

AdmissibleTriple triple_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("type") || !j.contains("rank"))
    throw std::invalid_argument("self-contained triple JSON needs 'type' and 'rank'");
  auto rs = build_root_system_shared(type_from_string(j["type"].get<std::string>()),
                                     j["rank"].get<int>());
  return triple_from_json(j, std::move(rs));
}

}  // namespace qgclass
