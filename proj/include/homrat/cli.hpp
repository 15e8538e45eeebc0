#pragma once

// Command-line front end. run() is the whole program minus process setup so
// that tests can drive it with in-memory streams.
//
// Exit codes: 0 success, 2 parse and input errors and invalid certificates,
// 1 internal invariant violations.

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "homrat/certify.hpp"
#include "homrat/serialize.hpp"

namespace homrat::cli {

/// Accepts "trivial" (and, where `allow_empty`, the empty string) on top of
/// parse_type.
SemisimpleType parse_type_or_trivial(std::string_view text, bool allow_empty = false);

/// Parses the subgroup grammar against ambient semisimple type `g`. Throws
/// ParseError with a position inside `text`.
SubgroupSpec parse_subgroup(std::string_view text, const SemisimpleType& g);

struct TableColumn {
  std::string group;
  int n = 0;
  int dim_G = 0;
  int crude_dim_H = 0;         // 3n
  int dim_quotient_upper = 0;  // dim G - 3n
  int rank_bound = 0;          // n + n + 8
  bool bound_holds() const { return dim_quotient_upper < rank_bound; }
};

/// Throws std::invalid_argument for kinds other than "b23c3g2".
std::vector<TableColumn> table(const std::string& kind);

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace homrat::cli
