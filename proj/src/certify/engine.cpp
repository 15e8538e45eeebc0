#include <algorithm>

#include "context.hpp"
#include "engine.hpp"

namespace homrat::detail {

namespace {

using I = std::int64_t;

struct PairView {
  const GroupSpec& g;
  const SubgroupSpec& h;
  QuotientInvariants q;
  bool connected;
  bool split;  // Levi split known (not BorelContained)
};

bool subgroup_connected(const SubgroupSpec& h) {
  if (const auto* gen = std::get_if<General>(&h)) return gen->connected;
  return true;
}

Premise p(std::string name, I v) { return {std::move(name), v}; }
Premise p(std::string name, std::string v) { return {std::move(name), std::move(v)}; }

// Conditions shared by the notA-based rules: char 0, G semisimple, H connected.
bool low_dim_setting(const PairView& v) {
  return v.g.characteristic == 0 && v.g.radical_dim == 0 && v.connected;
}

std::optional<RuleAttempt> pair_rule(const std::string& id, const PairContext& ctx) {
  const PairView v{ctx.g, ctx.h, compute_invariants(ctx.g, ctx.h), subgroup_connected(ctx.h),
                   !std::holds_alternative<BorelContained>(ctx.h)};
  const auto& q = v.q;
  const I ch = v.g.characteristic;
  RuleAttempt a;

  if (id == rules::kRad) {
    if (v.g.radical_dim <= 0) return std::nullopt;
    a.premises = {p("radical_dim", v.g.radical_dim)};
  } else if (id == rules::kFactor) {
    if (!std::holds_alternative<MaxRank>(v.h) || v.g.radical_dim != 0 ||
        v.g.semisimple_type.size() < 2)
      return std::nullopt;
    a.premises = {p("group", v.g.semisimple_type.str()),
                  p("num_factors", static_cast<I>(v.g.semisimple_type.size()))};
  } else if (id == rules::kTrivial) {
    if (v.g.radical_dim != 0 || q.dim_quotient != 0) return std::nullopt;
    a.premises = {p("dim_quotient", 0)};
  } else if (id == rules::kTh0) {
    if (std::holds_alternative<BorelContained>(v.h)) {
      a.premises = {p("borel_contained", "yes")};
    } else if (const auto* m = std::get_if<MaxRank>(&v.h)) {
      if (!m->subgroup.semisimple_part().empty()) return std::nullopt;
      a.premises = {p("solvable", "yes")};
    } else {
      const auto& gen = std::get<General>(v.h);
      if (!gen.levi_type.empty() || !gen.connected) return std::nullopt;
      a.premises = {p("solvable", "yes"), p("connected", "yes")};
    }
  } else if (id == rules::kThB0) {
    if (ch != 0 || v.g.radical_dim != 0 || q.dim_quotient > 5) return std::nullopt;
    a.premises = {p("characteristic", ch), p("dim_quotient", q.dim_quotient)};
  } else if (id == rules::kUGH3) {
    if (!low_dim_setting(v) || !v.split || *q.dim_BGU > 3) return std::nullopt;
    a.premises = {p("characteristic", ch), p("connected", "yes"), p("dim_BGU", *q.dim_BGU)};
  } else if (id == rules::kTU6) {
    if (!low_dim_setting(v) || !v.split || *q.dim_UGB > 5) return std::nullopt;
    a.premises = {p("characteristic", ch), p("connected", "yes"), p("dim_UGB", *q.dim_UGB)};
  } else if (id == rules::kThB) {
    if (!low_dim_setting(v) || q.dim_quotient > 10) return std::nullopt;
    a.premises = {p("characteristic", ch), p("connected", "yes"), p("dim_quotient", q.dim_quotient)};
  } else if (id == rules::kUGH4) {
    if (!low_dim_setting(v) || !v.split || *q.uH_rad != 0 || *q.dim_BGU > 4) return std::nullopt;
    a.premises = {p("characteristic", ch), p("connected", "yes"), p("uH_rad", 0),
                  p("dim_BGU", *q.dim_BGU)};
  } else if (id == rules::kThBRank) {
    if (!low_dim_setting(v) || !v.split || *q.uH_rad != 0) return std::nullopt;
    std::string kernel = "unknown";
    if (const auto* m = std::get_if<MaxRank>(&v.h)) {
      // The kernel is the largest normal subgroup of G inside H: finite iff
      // no simple factor of G is contained in H.
      const auto parts = m->subgroup.split_by_factor();
      kernel = yes_no(!parts.empty() && std::none_of(parts.begin(), parts.end(), [](const auto& f) {
                        return f.chain().empty();
                      }));
    } else {
      kernel = to_string(std::get<General>(v.h).action_kernel_zero_dim);
    }
    if (kernel != "yes" || q.dim_quotient >= q.t_G + *q.t_H + 8) return std::nullopt;
    a.premises = {p("characteristic", ch),     p("connected", "yes"), p("uH_rad", 0),
                  p("kernel_zero_dim", "yes"), p("t_G", q.t_G),       p("t_H", *q.t_H),
                  p("dim_quotient", q.dim_quotient)};
  } else if (id == rules::kThA) {
    if (!std::holds_alternative<MaxRank>(v.h)) return std::nullopt;
    const auto& comps = v.g.semisimple_type.components();
    if (!std::all_of(comps.begin(), comps.end(), [&](const SimpleType& t) { return tha_covers(t, ch); }))
      return std::nullopt;
    a.premises = {p("characteristic", ch), p("group", v.g.semisimple_type.str())};
  } else if (id == rules::kDim13 || id == rules::kDim14) {
    if (!low_dim_setting(v)) return std::nullopt;
    const I dim_G = group_invariants(v.g.semisimple_type).dim;
    if (id == rules::kDim13) {
      if (dim_G > 13) return std::nullopt;
      a.premises = {p("characteristic", ch), p("connected", "yes"), p("dim_G", dim_G)};
    } else {
      if (dim_G != 14) return std::nullopt;
      std::string status = "not-G2-A1";
      if (v.g.semisimple_type == SemisimpleType{{Family::G, 2}} && is_semisimple_a1(v.h)) {
        const auto& gen = std::get<General>(v.h);
        if (gen.in_proper_parabolic == Tri::Yes) status = "in-parabolic";
        else if (gen.subregular == Tri::Yes) status = "subregular";
        else return std::nullopt;
      }
      a.premises = {p("characteristic", ch), p("connected", "yes"), p("dim_G", dim_G),
                    p("exception_status", status)};
    }
  } else if (id == rules::kParab) {
    if (const auto* m = std::get_if<MaxRank>(&v.h)) {
      if (v.g.radical_dim != 0 || v.g.semisimple_type.size() != 1 || m->subgroup.central_torus() < 1)
        return std::nullopt;
      const auto w = levi_first_witness(m->subgroup);
      if (!w) return std::nullopt;
      a.premises = {p("h_torus", m->subgroup.central_torus()),
                    p("levi_witness", describe_move(w->chain().front()))};
    } else if (const auto* gen = std::get_if<General>(&v.h)) {
      if (v.g.radical_dim != 0 || gen->in_proper_parabolic != Tri::Yes) return std::nullopt;
      const auto flag = min_flag_dim(v.g.semisimple_type);
      if (!flag) return std::nullopt;
      a.premises = {p("in_proper_parabolic", "yes"), p("dim_quotient", q.dim_quotient),
                    p("min_dim_G_mod_P", *flag)};
    } else {
      return std::nullopt;
    }
  } else if (id == rules::kSpecial) {
    const auto* m = std::get_if<MaxRank>(&v.h);
    if (!m || v.g.radical_dim != 0 || v.g.semisimple_type.size() != 1 || ch == 2 ||
        m->subgroup.chain().empty())
      return std::nullopt;
    const SimpleType t = v.g.semisimple_type.components().front();
    const BdsMove& first = m->subgroup.chain().front();
    if (t.family != Family::C || first.kind != MoveKind::SemisimpleRemove ||
        first.comark_at_node.value_or(0) != 1)
      return std::nullopt;
    a.premises = {p("characteristic", ch),
                  p("group", t.str()),
                  p("first_move", describe_move(first)),
                  p("comark", 1),
                  p("m_type", first.result.str()),
                  p("involution_centralizer", "asserted")};
  } else if (id == rules::kB23C3G2) {
    const auto* m = std::get_if<MaxRank>(&v.h);
    if (!m || ch != 0 || v.g.radical_dim != 0 || v.g.semisimple_type.size() != 1 ||
        m->subgroup.chain().empty() || m->subgroup.central_torus() != 0)
      return std::nullopt;
    const SimpleType t = v.g.semisimple_type.components().front();
    if (!(t == SimpleType{Family::B, 3} || t == SimpleType{Family::G, 2})) return std::nullopt;
    const I dim_G = group_invariants(v.g.semisimple_type).dim;
    const I n = t.rank;
    if (dim_G - 3 * n >= 2 * n + 8) return std::nullopt;
    a.premises = {p("characteristic", ch),          p("group", t.str()),
                  p("dim_G", dim_G),                p("crude_dim_H_lower", 3 * n),
                  p("dim_quotient_upper", dim_G - 3 * n), p("rank_bound", 2 * n + 8)};
  } else {
    return std::nullopt;
  }

  auto children = derive_children(id, ctx);
  if (!children) return std::nullopt;
  a.children = std::move(*children);
  return a;
}

std::optional<RuleAttempt> bound_rule(const std::string& id, const BoundContext& b) {
  RuleAttempt a;
  const I ch = b.characteristic;
  if (id == rules::kTrivial) {
    if (b.dim_bound != 0) return std::nullopt;
    a.premises = {p("dim_quotient_bound", 0)};
  } else if (id == rules::kThB0) {
    if (ch != 0 || b.dim_bound > 5) return std::nullopt;
    a.premises = {p("characteristic", ch), p("dim_quotient_bound", b.dim_bound)};
  } else if (id == rules::kThB) {
    if (ch != 0 || !b.connected || b.dim_bound > 10) return std::nullopt;
    a.premises = {p("characteristic", ch), p("connected", "yes"), p("dim_quotient_bound", b.dim_bound)};
  } else {
    return std::nullopt;
  }
  return a;
}

}  // namespace

std::optional<RuleAttempt> try_rule(const std::string& id, const Context& ctx) {
  if (const auto* pair = std::get_if<PairContext>(&ctx)) return pair_rule(id, *pair);
  return bound_rule(id, std::get<BoundContext>(ctx));
}

CertificateNode make_node(const std::string& id, std::vector<Premise> premises) {
  return CertificateNode{id, rule_reference(id), std::move(premises), {}};
}

std::optional<CertificateNode> prove(const Context& ctx, const CertifyOptions& options) {
  if (options.expand_trace && try_rule(rules::kThA, ctx)) {
    const auto& pair = std::get<PairContext>(ctx);
    return tha_proof_trace(pair.g, std::get<MaxRank>(pair.h).subgroup);
  }
  std::vector<std::string> order{rules::kRad, rules::kFactor};
  order.insert(order.end(), options.terminal_order.begin(), options.terminal_order.end());
  for (const auto& id : order) {
    auto attempt = try_rule(id, ctx);
    if (!attempt) continue;
    CertificateNode node = make_node(id, std::move(attempt->premises));
    bool ok = true;
    for (const auto& child : attempt->children) {
      auto sub = prove(child, options);
      if (!sub) {
        ok = false;
        break;
      }
      node.children.push_back(std::move(*sub));
    }
    if (!ok) continue;
    return node;
  }
  return std::nullopt;
}

}  // namespace homrat::detail

namespace homrat {

Verdict certify(const GroupSpec& g, const SubgroupSpec& h, const CertifyOptions& options) {
  detail::check_consistency(g, h);
  Verdict v;
  v.invariants = compute_invariants(g, h);
  const detail::Context root = detail::PairContext{g, h};

  if (auto node = detail::prove(root, options)) {
    v.status = Status::Rational;
    // Other terminal rules that would close the root pair on their own.
    for (const auto& id : options.terminal_order) {
      if (id == node->rule_id || is_reduction_rule(id)) continue;
      if (detail::try_rule(id, root)) v.alternatives.push_back(id);
    }
    v.certificate = std::move(node);
    return v;
  }

  v.status = Status::Unknown;
  const bool char0 = g.characteristic == 0;
  const auto* gen = std::get_if<General>(&h);
  const bool semisimple_a1_outside_parabolic = gen && detail::is_semisimple_a1(h) && gen->connected &&
                                               gen->in_proper_parabolic != Tri::Yes &&
                                               gen->subregular != Tri::Yes;
  if (char0 && semisimple_a1_outside_parabolic &&
      g.semisimple_type == SemisimpleType{{Family::G, 2}}) {
    v.frontier = frontier::kG2RegularA1;
    v.note = "G2 over a regular A1: the 11-dimensional case left open";
  } else if (char0 && semisimple_a1_outside_parabolic &&
             g.semisimple_type == SemisimpleType{{Family::A, 3}}) {
    v.frontier = frontier::kA3RegularA1;
    v.note = "A3 over a regular A1; the adjoint case PGL4/PGL2 is known rational from outside "
             "these criteria and is not encoded as a rule";
  } else {
    v.frontier = frontier::kBeyondCriteria;
    v.note = "no rule applies";
  }
  return v;
}

}  // namespace homrat
