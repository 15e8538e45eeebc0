#include <algorithm>
#include <map>

#include "context.hpp"

namespace homrat {

std::string to_string(Tri t) {
  switch (t) {
    case Tri::Yes: return "yes";
    case Tri::No: return "no";
    case Tri::Unknown: break;
  }
  return "unknown";
}

std::string to_string(Status s) { return s == Status::Rational ? "Rational" : "Unknown"; }

std::string rule_reference(const std::string& rule_id) {
  static const std::map<std::string, std::string> refs = {
      {rules::kRad, "lemma mod radical: G/H ~ G'/H' x P^s with s <= dim R(G)"},
      {rules::kFactor, "lemma reduction to adjoint factors: G/H ~ (G_1/H_1) x ... x (G_l/H_l) x P^s"},
      {rules::kTrivial, "H = G: the quotient is a point"},
      {rules::kTh0, "Th0: H contained in a Borel subgroup"},
      {rules::kThB0, "ThB0: dim(G/H) <= 5"},
      {rules::kUGH3, "lemma uGH3(c): u_G - u_H <= 3"},
      {rules::kTU6, "lemma tu6(b): (t_G - t_H) + (u_G - u_H) <= 5"},
      {rules::kThB, "ThB: H connected, dim(G/H) <= 10"},
      {rules::kUGH4, "lemma uGH4: H reductive, u_G - u_H <= 4"},
      {rules::kThBRank, "ThBrank: H reductive, finite kernel, dim(G/H) < t_G + t_H + 8"},
      {rules::kThA, "ThA: H of maximal rank; adjoint factors of type A, C (p != 2), B3 or G2 (p = 0)"},
      {rules::kDim13, "prop. dim G <= 13: G/H rational for connected H"},
      {rules::kDim14, "prop. dim G = 14: G/H rational except G2 with semisimple A1 outside parabolics"},
      {rules::kParab, "cor. subparabolic: G/H ~ (G/P) x (P/H)"},
      {rules::kSpecial, "PropB(c,d): G/H ~ (G/M) x (M/H), G/M rational for p != 2"},
      {rules::kB23C3G2, "cor. B23C3G2: semisimple maximal-rank H in B3 or G2, dim(G/H) < n + n + 8"},
  };
  const auto it = refs.find(rule_id);
  return it == refs.end() ? std::string{} : it->second;
}

bool is_reduction_rule(const std::string& rule_id) {
  return rule_id == rules::kRad || rule_id == rules::kFactor || rule_id == rules::kParab ||
         rule_id == rules::kSpecial;
}

std::vector<std::string> default_terminal_order() {
  return {rules::kTrivial, rules::kTh0,    rules::kThB0,    rules::kUGH3,  rules::kTU6,
          rules::kThB,     rules::kUGH4,   rules::kThBRank, rules::kThA,   rules::kDim13,
          rules::kDim14,   rules::kParab,  rules::kSpecial};
}

namespace {

int num_pos_roots(const SemisimpleType& t) { return group_invariants(t).num_pos_roots; }

}  // namespace

QuotientInvariants compute_invariants(const GroupSpec& g, const SubgroupSpec& h) {
  if (!is_valid_characteristic(g.characteristic))
    throw SpecError("characteristic " + std::to_string(g.characteristic) + " is neither 0 nor prime");
  if (g.radical_dim < 0) throw SpecError("radical_dim >= 0 violated");

  const GroupInvariants gi = group_invariants(g.semisimple_type);
  QuotientInvariants q;
  q.t_G = gi.rank;
  q.u_G = gi.num_pos_roots;
  const int dim_G = gi.dim + g.radical_dim;

  if (const auto* b = std::get_if<BorelContained>(&h)) {
    if (b->dim < 0) throw SpecError("dim H >= 0 violated");
    if (b->dim > q.t_G + q.u_G + g.radical_dim)
      throw SpecError("dim H <= dim B violated: " + std::to_string(b->dim) + " > " +
                      std::to_string(q.t_G + q.u_G + g.radical_dim));
    q.dim_quotient = dim_G - b->dim;
    return q;
  }

  int uH_rad = 0;
  if (const auto* m = std::get_if<MaxRank>(&h)) {
    if (m->subgroup.ambient() != g.semisimple_type)
      throw SpecError("maximal-rank subgroup was built in " + m->subgroup.ambient().str() +
                      ", not in " + g.semisimple_type.str());
    q.t_H = m->subgroup.semisimple_part().rank() + m->subgroup.central_torus();
    q.u_H = num_pos_roots(m->subgroup.semisimple_part());
  } else {
    const auto& gen = std::get<General>(h);
    if (gen.levi_central_torus < 0) throw SpecError("levi_central_torus >= 0 violated");
    if (gen.unipotent_radical_dim < 0) throw SpecError("unipotent_radical_dim >= 0 violated");
    uH_rad = gen.unipotent_radical_dim;
    q.t_H = gen.levi_type.rank() + gen.levi_central_torus;
    q.u_H = num_pos_roots(gen.levi_type) + uH_rad;
  }
  q.uH_rad = uH_rad;
  if (*q.t_H > q.t_G)
    throw SpecError("t_H <= t_G violated: " + std::to_string(*q.t_H) + " > " + std::to_string(q.t_G));
  if (*q.u_H > q.u_G)
    throw SpecError("u_H <= u_G violated: " + std::to_string(*q.u_H) + " > " + std::to_string(q.u_G));
  const int dim_H = *q.t_H + 2 * *q.u_H - uH_rad;
  if (dim_H > dim_G)
    throw SpecError("dim H <= dim G violated: " + std::to_string(dim_H) + " > " + std::to_string(dim_G));
  q.dim_BGU = q.u_G - *q.u_H;
  q.dim_UGB = (q.t_G - *q.t_H) + *q.dim_BGU;
  q.dim_quotient = (q.t_G - *q.t_H) + 2 * *q.dim_BGU + uH_rad;
  return q;
}

namespace detail {

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::optional<int> min_flag_dim(const SemisimpleType& g) {
  std::optional<int> best;
  for (const auto& c : g.components()) {
    const int u = num_positive_roots(c);
    for (const auto& m : levi_moves(c)) {
      const int d = u - num_pos_roots(m.result);
      if (!best || d < *best) best = d;
    }
  }
  return best;
}

bool tha_covers(const SimpleType& t, int characteristic) {
  switch (t.family) {
    case Family::A: return true;
    case Family::C: return characteristic != 2;
    case Family::B: return t.rank == 3 && characteristic == 0;
    case Family::G: return characteristic == 0;
    default: return false;
  }
}

bool is_semisimple_a1(const SubgroupSpec& h) {
  const auto* gen = std::get_if<General>(&h);
  return gen && gen->levi_type == SemisimpleType{{Family::A, 1}} && gen->levi_central_torus == 0 &&
         gen->unipotent_radical_dim == 0;
}

void check_consistency(const GroupSpec& g, const SubgroupSpec& h) {
  const QuotientInvariants q = compute_invariants(g, h);
  const auto* gen = std::get_if<General>(&h);
  if (!gen) return;

  if (gen->subregular == Tri::Yes && !is_semisimple_a1(h))
    throw SpecError("subregular=yes requires H semisimple of type A1 (levi=A1,torus=0,unip=0)");
  if (gen->in_proper_parabolic == Tri::No && gen->connected) {
    if (gen->unipotent_radical_dim > 0)
      throw SpecError("parabolic=no contradicts unip>0: a connected H outside proper parabolics is reductive");
    if (gen->levi_central_torus > 0)
      throw SpecError("parabolic=no contradicts torus>0: a connected H outside proper parabolics is semisimple");
    if (gen->levi_type.empty() && !g.semisimple_type.empty())
      throw SpecError("parabolic=no contradicts a solvable connected H, which lies in a Borel subgroup");
  }
  if (gen->in_proper_parabolic == Tri::Yes) {
    const auto flag = min_flag_dim(g.semisimple_type);
    if (!flag) throw SpecError("parabolic=yes but the trivial group has no proper parabolic subgroup");
    if (q.dim_quotient < *flag)
      throw SpecError("parabolic=yes contradicts dim(G/H) = " + std::to_string(q.dim_quotient) +
                      " < " + std::to_string(*flag) + " = smallest dim(G/P)");
    if (gen->subregular == Tri::Yes && g.semisimple_type == SemisimpleType{{Family::G, 2}})
      throw SpecError("subregular=yes contradicts parabolic=yes in G2");
  }
}

std::string describe_move(const BdsMove& m) {
  std::string s = to_string(m.kind) + ":" + std::to_string(m.node);
  if (m.component != 0) s += "@" + std::to_string(m.component);
  return s;
}

std::optional<std::vector<Context>> derive_children(const std::string& rule, const Context& ctx) {
  const auto* pair = std::get_if<PairContext>(&ctx);
  if (!pair) {
    // A bare dimension bound only closes by a terminal rule.
    if (is_reduction_rule(rule)) return std::nullopt;
    return std::vector<Context>{};
  }
  const GroupSpec& g = pair->g;

  if (rule == rules::kRad) {
    if (g.radical_dim <= 0) return std::nullopt;
    GroupSpec child = g;
    child.radical_dim = 0;
    SubgroupSpec h = pair->h;
    if (auto* b = std::get_if<BorelContained>(&h)) {
      // The image of H lies in a Borel subgroup of G/R(G).
      const GroupInvariants gi = group_invariants(g.semisimple_type);
      b->dim = std::min(b->dim, gi.rank + gi.num_pos_roots);
    }
    return std::vector<Context>{PairContext{child, h}};
  }

  if (rule == rules::kFactor) {
    const auto* m = std::get_if<MaxRank>(&pair->h);
    if (!m || g.radical_dim != 0 || g.semisimple_type.size() < 2) return std::nullopt;
    std::vector<Context> out;
    const auto parts = m->subgroup.split_by_factor();
    for (const auto& part : parts)
      out.push_back(PairContext{GroupSpec{part.ambient(), 0, g.characteristic}, MaxRank{part}});
    return out;
  }

  if (rule == rules::kParab) {
    if (g.radical_dim != 0) return std::nullopt;
    if (const auto* m = std::get_if<MaxRank>(&pair->h)) {
      if (g.semisimple_type.size() != 1 || m->subgroup.central_torus() < 1) return std::nullopt;
      const auto w = levi_first_witness(m->subgroup);
      if (!w) return std::nullopt;
      GroupSpec levi{w->chain().front().result, 1, g.characteristic};
      return std::vector<Context>{PairContext{levi, MaxRank{w->descend()}}};
    }
    if (const auto* gen = std::get_if<General>(&pair->h)) {
      if (gen->in_proper_parabolic != Tri::Yes) return std::nullopt;
      const auto flag = min_flag_dim(g.semisimple_type);
      if (!flag) return std::nullopt;
      const int d = compute_invariants(g, pair->h).dim_quotient;
      return std::vector<Context>{BoundContext{g.characteristic, d - *flag, gen->connected}};
    }
    return std::nullopt;
  }

  if (rule == rules::kSpecial) {
    const auto* m = std::get_if<MaxRank>(&pair->h);
    if (!m || g.radical_dim != 0 || g.semisimple_type.size() != 1 || m->subgroup.chain().empty())
      return std::nullopt;
    const BdsMove& first = m->subgroup.chain().front();
    if (first.kind != MoveKind::SemisimpleRemove) return std::nullopt;
    GroupSpec sub{first.result, 0, g.characteristic};
    return std::vector<Context>{PairContext{sub, MaxRank{m->subgroup.descend()}}};
  }

  return std::vector<Context>{};
}

}  // namespace detail
}  // namespace homrat
