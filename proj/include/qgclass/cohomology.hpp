#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "qgclass/rmatrix.hpp"
#include "qgclass/triples.hpp"

namespace qgclass {

enum class StructureKind { nontwisted, twisted, skew };
enum class Group { automatic, GL, SL };
enum class DoubleType { direct_sum, sqrt_extension, dual_numbers };

std::string structure_kind_to_string(StructureKind k);
StructureKind structure_kind_from_string(const std::string& s);
std::string group_to_string(Group g);
Group group_from_string(const std::string& s);
std::string double_type_to_string(DoubleType d);

struct StructureDescriptor {
  StructureKind kind = StructureKind::nontwisted;
  std::optional<AdmissibleTriple> triple;
  Group group = Group::automatic;
  HalfLaurent scaling = HalfLaurent::one();  // forced to sqrt(hbar) when twisted
};
StructureDescriptor make_descriptor(StructureKind kind,
                                    std::optional<AdmissibleTriple> triple,
                                    Group group = Group::automatic);

struct Cardinality {
  enum class Kind { count, empty_set, unsupported };
  Kind kind = Kind::count;
  long value = 0;

  static Cardinality of(long n) { return {Kind::count, n}; }
  static Cardinality empty_set() { return {Kind::empty_set, 0}; }
  static Cardinality unsupported() { return {Kind::unsupported, 0}; }
  bool operator==(const Cardinality& other) const = default;
};

struct CohomologyReport {
  Cardinality cardinality;
  // Diagonal matrices over the half-Laurent ring (SL non-twisted case only).
  std::vector<std::vector<HalfLaurent>> representatives;
  DoubleType double_type = DoubleType::direct_sum;
  std::string source;  // which classification rule produced the answer
};

// Non-twisted cohomology size. Type A answers depend on the group: GL
// (also the default) is trivial, SL is the GCD invariant with diagonal
// representatives. B and C are trivial; D has two classes exactly when
// one tau-orbit joins the two branch-endpoint roots.
CohomologyReport nontwisted_cardinality(const AdmissibleTriple& triple, Group group);

// diag(hbar^j, 1, ..., 1) for j = 0..N-1; their determinant classes in
// C((hbar))*/(C((hbar))*)^N are pairwise distinct.
std::vector<std::vector<HalfLaurent>> sl_representatives(int n,
                                                         const AdmissibleTriple& triple);

struct TwistedAdmissibility {
  bool ok = false;
  std::string rule;  // matched table row
  explicit operator bool() const { return ok; }
};
TwistedAdmissibility twisted_admissible(const AdmissibleTriple& triple);

CohomologyReport twisted_cardinality(const AdmissibleTriple& triple, Group group);

DoubleType double_type(const StructureDescriptor& descriptor);

// Only the Jordan example is classified; any other triangular r-matrix
// reports UNSUPPORTED, and non-triangular input is rejected.
CohomologyReport frobenius_cardinality(const RMatrix& r);

nlohmann::json report_to_json(const CohomologyReport& report);

}  // namespace qgclass
