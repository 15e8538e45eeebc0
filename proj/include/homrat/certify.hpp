#pragma once

// Rationality certificates for homogeneous varieties G/H.
//
// certify() runs an ordered rule system over a (GroupSpec, SubgroupSpec)
// pair. Reduction rules (R-RAD, R-FACTOR, R-PARAB, R-SPECIAL) replace the
// pair by smaller ones; terminal rules close a branch. A rule succeeds only
// when all of its children succeed, and the engine backtracks otherwise, so
// the resulting status does not depend on the order of terminal rules.
//
// Every node records the facts it relied on; validate_certificate()
// recomputes those facts from the input pair along the reduction path and
// re-checks each rule's condition with its own predicate.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "homrat/bds.hpp"
#include "homrat/rootsys.hpp"

namespace homrat {

/// Input data inconsistent with itself (dim H > dim G, contradictory flags).
class SpecError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Tri { Unknown, Yes, No };

std::string to_string(Tri t);

struct GroupSpec {
  SemisimpleType semisimple_type;
  int radical_dim = 0;
  int characteristic = 0;
};

/// H lies in a Borel subgroup (e.g. H solvable).
struct BorelContained {
  int dim = 0;
};

struct MaxRank {
  MaxRankSubgroup subgroup;
};

/// H = S x| U(H) described by abstract invariants.
struct General {
  SemisimpleType levi_type;
  int levi_central_torus = 0;
  int unipotent_radical_dim = 0;
  bool connected = false;
  Tri in_proper_parabolic = Tri::Unknown;
  Tri action_kernel_zero_dim = Tri::Unknown;
  Tri subregular = Tri::Unknown;  // A1 subgroup in the subregular unipotent class
};

using SubgroupSpec = std::variant<BorelContained, MaxRank, General>;

/// Invariants of G'/H' where G' = G/R(G) and H' is the image of H. Fields
/// needing the Levi split of H are empty for BorelContained.
struct QuotientInvariants {
  int t_G = 0;
  int u_G = 0;
  std::optional<int> t_H;
  std::optional<int> u_H;
  std::optional<int> uH_rad;
  int dim_quotient = 0;
  std::optional<int> dim_BGU;  // u_G - u_H
  std::optional<int> dim_UGB;  // (t_G - t_H) + (u_G - u_H)
};

/// Throws SpecError naming the violated inequality.
QuotientInvariants compute_invariants(const GroupSpec& g, const SubgroupSpec& h);

using PremiseValue = std::variant<std::int64_t, std::string>;

struct Premise {
  std::string name;
  PremiseValue value;

  friend bool operator==(const Premise&, const Premise&) = default;
};

struct CertificateNode {
  std::string rule_id;
  std::string paper_ref;
  std::vector<Premise> premises;
  std::vector<CertificateNode> children;

  friend bool operator==(const CertificateNode&, const CertificateNode&) = default;
};

enum class Status { Rational, Unknown };

std::string to_string(Status s);

struct Verdict {
  Status status = Status::Unknown;
  std::optional<CertificateNode> certificate;
  std::optional<std::string> frontier;
  std::string note;
  QuotientInvariants invariants;
  std::vector<std::string> alternatives;  // other terminal rules closing the root pair
};

// Rule identifiers.
namespace rules {
inline constexpr const char* kRad = "R-RAD";
inline constexpr const char* kFactor = "R-FACTOR";
inline constexpr const char* kTrivial = "R-TRIVIAL";
inline constexpr const char* kTh0 = "R-TH0";
inline constexpr const char* kThB0 = "R-THB0";
inline constexpr const char* kUGH3 = "R-UGH3";
inline constexpr const char* kTU6 = "R-TU6";
inline constexpr const char* kThB = "R-THB";
inline constexpr const char* kUGH4 = "R-UGH4";
inline constexpr const char* kThBRank = "R-THBRANK";
inline constexpr const char* kThA = "R-THA";
inline constexpr const char* kDim13 = "R-DIM13";
inline constexpr const char* kDim14 = "R-DIM14";
inline constexpr const char* kParab = "R-PARAB";
inline constexpr const char* kSpecial = "R-SPECIAL";
inline constexpr const char* kB23C3G2 = "R-B23C3G2";
}  // namespace rules

namespace frontier {
inline constexpr const char* kG2RegularA1 = "G2-REGULAR-A1";
inline constexpr const char* kA3RegularA1 = "A3-REGULAR-A1";
inline constexpr const char* kBeyondCriteria = "BEYOND-CRITERIA";
}  // namespace frontier

/// Theorem label recorded in paper_ref for each rule; empty if unknown.
std::string rule_reference(const std::string& rule_id);

bool is_reduction_rule(const std::string& rule_id);

/// Default terminal order: shortest certificates first.
std::vector<std::string> default_terminal_order();

struct CertifyOptions {
  std::vector<std::string> terminal_order = default_terminal_order();
  /// Wherever R-THA applies, certify by its expanded induction (tha_proof_trace).
  bool expand_trace = false;
};

Verdict certify(const GroupSpec& g, const SubgroupSpec& h, const CertifyOptions& options = {});

struct ValidationResult {
  bool valid = false;
  std::string path;  // "root/1/0" of the first failing node
  std::string reason;

  explicit operator bool() const { return valid; }
};

ValidationResult validate_certificate(const GroupSpec& g, const SubgroupSpec& h, const Verdict& v);
ValidationResult validate_certificate(const GroupSpec& g, const SubgroupSpec& h,
                                      const CertificateNode& root);

/// The induction behind R-THA, one node per chain step. Throws SpecError
/// when a factor of g is outside the types R-THA covers.
CertificateNode tha_proof_trace(const GroupSpec& g, const MaxRankSubgroup& h);

}  // namespace homrat
