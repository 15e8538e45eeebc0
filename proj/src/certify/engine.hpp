#pragma once

#include <optional>
#include <string>
#include <vector>

#include "context.hpp"

namespace homrat::detail {

struct RuleAttempt {
  std::vector<Premise> premises;
  std::vector<Context> children;
};

/// The rule's premises and child contexts if its condition holds at ctx.
std::optional<RuleAttempt> try_rule(const std::string& id, const Context& ctx);

CertificateNode make_node(const std::string& id, std::vector<Premise> premises);

/// Backtracking search: R-RAD, R-FACTOR, then options.terminal_order.
std::optional<CertificateNode> prove(const Context& ctx, const CertifyOptions& options);

}  // namespace homrat::detail
