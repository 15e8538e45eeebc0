#pragma once

// Finite root systems: classification labels, Cartan data, positive-root
// generation, highest roots, marks and comarks.
//
// Node numbering follows Bourbaki for every family (see docs/numbering.md).
// Roots are integer vectors in the simple-root basis; lengths come from an
// integer symmetric form in which the shortest roots have squared length 2.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace homrat {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

/// A simple type label such as B3 or G2. Validity (family rank ranges) is
/// checked by validate(); SemisimpleType applies the low-rank aliases.
struct SimpleType {
  Family family = Family::A;
  int rank = 1;

  friend auto operator<=>(const SimpleType&, const SimpleType&) = default;

  std::string str() const;
};

/// Throws std::invalid_argument unless `t` is one of the catalogued
/// (non-aliased) ranges: A n>=1, B n>=2, C n>=2, D n>=3, E 6..8, F4, G2.
void validate(const SimpleType& t);

/// Canonical component order: family ascending, then rank descending.
/// "A2+2A1" and "A1+C2" are written in this order.
bool canonical_less(const SimpleType& a, const SimpleType& b);

/// Multiset of simple types, identifying a semisimple group up to isogeny.
/// Components are stored normalized (B1,C1 -> A1; D2 -> 2A1; D3 -> A3;
/// B2 -> C2) and in canonical order, so == is multiset equality.
class SemisimpleType {
 public:
  SemisimpleType() = default;
  explicit SemisimpleType(std::vector<SimpleType> components);
  SemisimpleType(std::initializer_list<SimpleType> components)
      : SemisimpleType(std::vector<SimpleType>(components)) {}

  const std::vector<SimpleType>& components() const { return components_; }
  bool empty() const { return components_.empty(); }
  std::size_t size() const { return components_.size(); }
  int rank() const;

  /// "A2+2A1"; the trivial group prints as "trivial".
  std::string str() const;

  /// Multiset union.
  SemisimpleType operator+(const SemisimpleType& other) const;

  friend bool operator==(const SemisimpleType&, const SemisimpleType&) = default;
  /// Total order used for canonical output: lexicographic on components.
  friend std::strong_ordering operator<=>(const SemisimpleType& a, const SemisimpleType& b);

 private:
  std::vector<SimpleType> components_;
};

/// Raised by parse_type with the byte offset of the offending component.
class ParseError : public std::invalid_argument {
 public:
  ParseError(std::size_t position, std::string token, const std::string& message);

  std::size_t position() const { return position_; }
  const std::string& token() const { return token_; }
  const std::string& message() const { return message_; }

 private:
  std::size_t position_;
  std::string token_;
  std::string message_;
};

/// Parses `comp ("+" comp)*` with `comp := [0-9]* [A-G] [0-9]+`; whitespace
/// is ignored and a leading integer repeats the component.
SemisimpleType parse_type(std::string_view text);

using IntMatrix = std::vector<std::vector<int>>;

/// Exact rational, always reduced with a positive denominator.
struct Ratio {
  std::int64_t num = 0;
  std::int64_t den = 1;

  static Ratio make(std::int64_t num, std::int64_t den);
  friend bool operator==(const Ratio&, const Ratio&) = default;
  std::string str() const;
};

struct RootVector {
  std::vector<int> coords;

  int height() const;
  friend auto operator<=>(const RootVector&, const RootVector&) = default;
};

/// Integer symmetric form on the simple roots of `t`: shortest roots have
/// squared length 2, off-diagonal entry of a bond is -max(|a|^2,|b|^2)/2.
IntMatrix gram_matrix(const SimpleType& t);

/// Rank x rank Cartan matrix, entry (i,j) = 2(a_i,a_j)/(a_j,a_j). For G2 this
/// is [[2,-1],[-3,2]] with node 1 short.
IntMatrix cartan_matrix(const SimpleType& t);

/// Cartan matrix of an arbitrary integer symmetric form.
IntMatrix cartan_from_gram(const IntMatrix& gram);

struct RootSystem {
  SimpleType simple_type;
  IntMatrix cartan;
  IntMatrix gram;
  std::vector<RootVector> positive_roots;  // sorted by height, then coords
  RootVector highest_root;
  std::vector<int> marks;
  std::vector<int> comarks;
  std::vector<Ratio> root_lengths;  // long simple roots have squared length 2

  int rank() const { return simple_type.rank; }
  int num_positive_roots() const { return static_cast<int>(positive_roots.size()); }
  int dim() const { return rank() + 2 * num_positive_roots(); }
  int coxeter_number() const;

  /// Squared length of a root in the integer form of `gram`.
  int norm(const RootVector& r) const;
};

/// Closure generation of the positive roots from the Cartan data.
RootSystem generate_roots(const SimpleType& t);

/// One closure step: all roots reachable from `roots` by adding a simple
/// root allowed by the root-string criterion. Returns the enlarged set.
std::vector<RootVector> closure_step(const IntMatrix& cartan, const std::vector<RootVector>& roots);

int num_positive_roots(const SimpleType& t);

struct GroupInvariants {
  int rank = 0;           // t, semisimple rank
  int num_pos_roots = 0;  // u
  int dim = 0;
  int central_torus = 0;
};

GroupInvariants group_invariants(const SemisimpleType& t, int central_torus = 0);

/// Small helper shared by validators: 0 or a prime.
bool is_valid_characteristic(std::int64_t p);
bool is_prime(std::int64_t n);

}  // namespace homrat
