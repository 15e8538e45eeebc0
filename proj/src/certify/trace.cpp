#include "engine.hpp"

namespace homrat {

namespace {

using detail::Context;
using detail::PairContext;

std::string pick_rule(const PairContext& ctx) {
  const auto& m = std::get<MaxRank>(ctx.h).subgroup;
  if (ctx.g.radical_dim > 0) return rules::kRad;
  if (m.chain().empty()) return rules::kTrivial;
  if (ctx.g.semisimple_type.size() > 1) return rules::kFactor;
  const SimpleType t = ctx.g.semisimple_type.components().front();
  if (!detail::tha_covers(t, ctx.g.characteristic))
    throw SpecError(t.str() + " is outside the types covered by R-THA in characteristic " +
                    std::to_string(ctx.g.characteristic));
  const BdsMove& first = m.chain().front();
  if (first.kind == MoveKind::LeviRemove) return rules::kParab;
  if (t.family == Family::C) return rules::kSpecial;
  return m.central_torus() == 0 ? rules::kB23C3G2 : rules::kParab;
}

CertificateNode trace(const Context& ctx) {
  const auto& pair = std::get<PairContext>(ctx);
  const std::string id = pick_rule(pair);
  auto attempt = detail::try_rule(id, ctx);
  if (!attempt)
    throw std::logic_error("induction step " + id + " does not apply to " +
                           pair.g.semisimple_type.str());
  CertificateNode node = detail::make_node(id, std::move(attempt->premises));
  for (const auto& child : attempt->children) node.children.push_back(trace(child));
  return node;
}

}  // namespace

CertificateNode tha_proof_trace(const GroupSpec& g, const MaxRankSubgroup& h) {
  if (h.ambient() != g.semisimple_type)
    throw SpecError("subgroup was built in " + h.ambient().str() + ", not in " + g.semisimple_type.str());
  return trace(PairContext{g, MaxRank{h}});
}

}  // namespace homrat
