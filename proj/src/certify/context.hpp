#pragma once

// Internal to the certify module: the pairs a rule looks at, and the
// structural derivation of child pairs shared by the engine and validator.

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "homrat/certify.hpp"

namespace homrat::detail {

struct PairContext {
  GroupSpec g;
  SubgroupSpec h;
};

/// P/H for an unnamed parabolic P: only an upper bound on its dimension is
/// known, together with the characteristic and connectedness of H.
struct BoundContext {
  int characteristic = 0;
  int dim_bound = 0;
  bool connected = false;
};

using Context = std::variant<PairContext, BoundContext>;

std::string yes_no(bool b);

/// Throws SpecError when the pair is internally inconsistent.
void check_consistency(const GroupSpec& g, const SubgroupSpec& h);

/// Smallest dim G/P over proper parabolics P; empty for the trivial group.
std::optional<int> min_flag_dim(const SemisimpleType& g);

/// ThA's type list for one adjoint factor.
bool tha_covers(const SimpleType& t, int characteristic);

/// H semisimple of type A1 (General variant only).
bool is_semisimple_a1(const SubgroupSpec& h);

/// Child pairs of a reduction rule, or nullopt if the rule's structural
/// shape does not fit (the conditions themselves are checked elsewhere).
std::optional<std::vector<Context>> derive_children(const std::string& rule, const Context& ctx);

std::string describe_move(const BdsMove& m);  // "ss:2", "levi:1"

}  // namespace homrat::detail
