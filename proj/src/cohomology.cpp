#include "qgclass/cohomology.hpp"

#include <algorithm>
#include <stdexcept>

namespace qgclass {

std::string structure_kind_to_string(StructureKind k) {
  switch (k) {
    case StructureKind::nontwisted: return "nontwisted";
    case StructureKind::twisted: return "twisted";
    case StructureKind::skew: return "skew";
  }
  throw std::logic_error("unreachable structure kind");
}

StructureKind structure_kind_from_string(const std::string& s) {
  if (s == "nontwisted") return StructureKind::nontwisted;
  if (s == "twisted") return StructureKind::twisted;
  if (s == "skew") return StructureKind::skew;
  throw std::invalid_argument("unknown structure kind '" + s + "'");
}

std::string group_to_string(Group g) {
  switch (g) {
    case Group::automatic: return "default";
    case Group::GL: return "GL";
    case Group::SL: return "SL";
  }
  throw std::logic_error("unreachable group");
}

Group group_from_string(const std::string& s) {
  if (s == "GL" || s == "gl") return Group::GL;
  if (s == "SL" || s == "sl") return Group::SL;
  if (s == "default" || s.empty()) return Group::automatic;
  throw std::invalid_argument("unknown group '" + s + "' (expected GL or SL)");
}

std::string double_type_to_string(DoubleType d) {
  switch (d) {
    case DoubleType::direct_sum: return "direct_sum";
    case DoubleType::sqrt_extension: return "sqrt_extension";
    case DoubleType::dual_numbers: return "dual_numbers";
  }
  throw std::logic_error("unreachable double type");
}

StructureDescriptor make_descriptor(StructureKind kind,
                                    std::optional<AdmissibleTriple> triple, Group group) {
  if (group != Group::automatic) {
    if (!triple || triple->rs->type() != TypeLabel::A)
      throw std::invalid_argument("GL/SL groups are meaningful for type A only");
  }
  StructureDescriptor d;
  d.kind = kind;
  d.triple = std::move(triple);
  d.group = group;
  d.scaling = (kind == StructureKind::twisted) ? HalfLaurent::sqrt_hbar()
                                               : HalfLaurent::one();
  return d;
}

namespace {

void require_admissible(const AdmissibleTriple& triple) {
  AdmissibilityResult check =
      is_admissible(*triple.rs, triple.gamma1, triple.gamma2, triple.tau);
  if (!check) throw std::invalid_argument("triple is not admissible: " + check.reason);
}

bool joint_branch_string(const AdmissibleTriple& triple) {
  const int n = triple.rs->rank();
  for (const auto& chain : tau_orbit_chains(triple)) {
    bool has_last = false, has_prev = false;
    for (int i : chain) {
      if (i == n - 1) has_last = true;
      if (i == n - 2) has_prev = true;
    }
    if (has_last && has_prev) return true;
  }
  return false;
}

}  // namespace

CohomologyReport nontwisted_cardinality(const AdmissibleTriple& triple, Group group) {
  require_admissible(triple);
  const TypeLabel type = triple.rs->type();
  if (group != Group::automatic && type != TypeLabel::A)
    throw std::invalid_argument("GL/SL groups are meaningful for type A only");

  CohomologyReport report;
  report.double_type = DoubleType::direct_sum;
  switch (type) {
    case TypeLabel::A:
      if (group == Group::SL) {
        const int n = triple.rs->rank() + 1;
        report.representatives = sl_representatives(n, triple);
        report.cardinality = Cardinality::of(static_cast<long>(report.representatives.size()));
        report.source = "sl-gcd-theorem";
      } else {
        report.cardinality = Cardinality::of(1);
        report.source = "nontwisted-table/A-GL";
      }
      break;
    case TypeLabel::B:
      report.cardinality = Cardinality::of(1);
      report.source = "nontwisted-table/B";
      break;
    case TypeLabel::C:
      report.cardinality = Cardinality::of(1);
      report.source = "nontwisted-table/C";
      break;
    case TypeLabel::D:
      if (joint_branch_string(triple)) {
        report.cardinality = Cardinality::of(2);
        report.source = "nontwisted-table/D-joint-string";
      } else {
        report.cardinality = Cardinality::of(1);
        report.source = "nontwisted-table/D-split-string";
      }
      break;
  }
  return report;
}

std::vector<std::vector<HalfLaurent>> sl_representatives(int n,
                                                         const AdmissibleTriple& triple) {
  require_admissible(triple);
  if (triple.rs->type() != TypeLabel::A || triple.rs->rank() != n - 1)
    throw std::invalid_argument("representatives are defined for sl(n) triples");
  const int count = gcd_invariant(triple);

  std::vector<std::vector<HalfLaurent>> out;
  for (int j = 0; j < count; ++j) {
    std::vector<HalfLaurent> diag(n, HalfLaurent::one());
    diag[0] = HalfLaurent::hbar_power(j);
    out.push_back(std::move(diag));
  }
  if (static_cast<int>(out.size()) != count)
    throw std::logic_error("internal error: representative count disagrees with N");
  // Determinant classes must be pairwise distinct mod N-th powers.
  for (int i = 0; i < count; ++i)
    for (int j = i + 1; j < count; ++j) {
      HalfLaurent det_i = HalfLaurent::one(), det_j = HalfLaurent::one();
      for (const auto& x : out[i]) det_i *= x;
      for (const auto& x : out[j]) det_j *= x;
      if (nth_power_class(det_i, count) == nth_power_class(det_j, count))
        throw std::logic_error("internal error: representative classes collide");
    }
  return out;
}

TwistedAdmissibility twisted_admissible(const AdmissibleTriple& triple) {
  require_admissible(triple);
  const TypeLabel type = triple.rs->type();
  const int n = triple.rs->rank();

  if (triple.is_empty()) return {true, "drinfeld-jimbo"};

  switch (type) {
    case TypeLabel::A: {
      // s tau = tau^{-1} s for the diagram flip s(alpha_i) = alpha_{n+1-i}.
      auto s = [n](int i) { return n - 1 - i; };
      std::vector<int> s_g1;
      for (int i : triple.gamma1) s_g1.push_back(s(i));
      std::sort(s_g1.begin(), s_g1.end());
      if (s_g1 != triple.gamma2) return {false, "twisted-table/A-other"};
      std::map<int, int> tau_inv;
      for (const auto& [a, b] : triple.tau) tau_inv[b] = a;
      for (const auto& [a, b] : triple.tau)
        if (s(b) != tau_inv.at(s(a))) return {false, "twisted-table/A-other"};
      return {true, "twisted-table/A-s-conjugation"};
    }
    case TypeLabel::B:
      return {false, "twisted-table/B-not-dj"};
    case TypeLabel::C:
      return {false, "twisted-table/C-not-dj"};
    case TypeLabel::D: {
      if (n % 2 == 0) return {false, "twisted-table/D-even-not-dj"};
      const int a = n - 2, b = n - 1;  // branch endpoints, 0-based
      const auto& g1 = triple.gamma1;
      const auto& tau = triple.tau;
      if (g1.size() == 1) {
        if (g1[0] == a && tau.at(a) == b) return {true, "twisted-table/D-odd-family-a"};
        if (g1[0] == b && tau.at(b) == a) return {true, "twisted-table/D-odd-family-b"};
      } else if (g1.size() == 2) {
        // {alpha_{n-1}, alpha_k} with tau: alpha_{n-1} -> alpha_k -> alpha_n,
        // and the mirrored family through alpha_n.
        if (g1[0] == a || g1[1] == a) {
          int k = (g1[0] == a) ? g1[1] : g1[0];
          if (k != b && tau.at(a) == k && tau.at(k) == b)
            return {true, "twisted-table/D-odd-family-c"};
        }
        if (g1[0] == b || g1[1] == b) {
          int k = (g1[0] == b) ? g1[1] : g1[0];
          if (k != a && tau.at(b) == k && tau.at(k) == a)
            return {true, "twisted-table/D-odd-family-d"};
        }
      }
      return {false, "twisted-table/D-odd-not-listed"};
    }
  }
  throw std::logic_error("unreachable type label");
}

CohomologyReport twisted_cardinality(const AdmissibleTriple& triple, Group group) {
  require_admissible(triple);
  if (group == Group::SL)
    throw std::invalid_argument(
        "twisted cohomology is unsupported for SL(n); results exist for GL(n) only");
  if (group == Group::GL && triple.rs->type() != TypeLabel::A)
    throw std::invalid_argument("GL/SL groups are meaningful for type A only");

  TwistedAdmissibility adm = twisted_admissible(triple);
  CohomologyReport report;
  report.double_type = DoubleType::sqrt_extension;
  report.source = adm.rule;
  if (!adm) {
    report.cardinality = Cardinality::empty_set();
    return report;
  }
  bool d_odd_family = adm.rule.rfind("twisted-table/D-odd-family", 0) == 0;
  report.cardinality = Cardinality::of(d_odd_family ? 2 : 1);
  return report;
}

DoubleType double_type(const StructureDescriptor& descriptor) {
  switch (descriptor.kind) {
    case StructureKind::nontwisted: return DoubleType::direct_sum;
    case StructureKind::twisted: return DoubleType::sqrt_extension;
    case StructureKind::skew: return DoubleType::dual_numbers;
  }
  throw std::logic_error("unreachable structure kind");
}

CohomologyReport frobenius_cardinality(const RMatrix& r) {
  if (!is_triangular(r))
    throw std::invalid_argument("frobenius cohomology requires a triangular r-matrix");

  CohomologyReport report;
  report.double_type = DoubleType::dual_numbers;

  const RootSystem& rs = r.algebra->root_system();
  if (rs.type() == TypeLabel::A && rs.rank() == 1) {
    RMatrix jordan = jordan_rmatrix(r.algebra);
    if (r.tensor == jordan.tensor) {
      report.cardinality = Cardinality::of(1);
      report.source = "frobenius/jordan";
      return report;
    }
  }
  report.cardinality = Cardinality::unsupported();
  report.source = "frobenius/unclassified";
  return report;
}

nlohmann::json report_to_json(const CohomologyReport& report) {
  nlohmann::json j;
  switch (report.cardinality.kind) {
    case Cardinality::Kind::count: j["cardinality"] = report.cardinality.value; break;
    case Cardinality::Kind::empty_set: j["cardinality"] = "empty"; break;
    case Cardinality::Kind::unsupported: j["cardinality"] = "unsupported"; break;
  }
  j["double"] = double_type_to_string(report.double_type);
  j["source"] = report.source;
  if (!report.representatives.empty()) {
    nlohmann::json reps = nlohmann::json::array();
    for (const auto& diag : report.representatives) {
      nlohmann::json entries = nlohmann::json::array();
      for (const auto& x : diag) entries.push_back(x.to_json());
      reps.push_back(entries);
    }
    j["representatives"] = reps;
  }
  return j;
}

}  // namespace qgclass
