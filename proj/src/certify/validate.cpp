#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "context.hpp"

// The validator recomputes every fact it checks from the pair at hand, with
// its own arithmetic, and re-evaluates each rule condition independently of
// the engine. Only the structural derivation of child pairs is shared.

namespace homrat {

namespace {

using detail::BoundContext;
using detail::Context;
using detail::PairContext;
using Facts = std::map<std::string, PremiseValue>;
using I = std::int64_t;

int positive_roots_of(const SemisimpleType& t) {
  int n = 0;
  for (const auto& c : t.components()) n += static_cast<int>(generate_roots(c).positive_roots.size());
  return n;
}

Facts pair_facts(const PairContext& ctx) {
  const auto& g = ctx.g;
  Facts f;
  const int t_G = g.semisimple_type.rank();
  const int u_G = positive_roots_of(g.semisimple_type);
  const I dim_G = t_G + 2 * u_G;  // dimension of G/R(G)
  f["characteristic"] = I{g.characteristic};
  f["radical_dim"] = I{g.radical_dim};
  f["group"] = g.semisimple_type.str();
  f["num_factors"] = static_cast<I>(g.semisimple_type.size());
  f["t_G"] = I{t_G};
  f["dim_G"] = dim_G;

  if (const auto* b = std::get_if<BorelContained>(&ctx.h)) {
    f["borel_contained"] = std::string("yes");
    f["connected"] = std::string("unknown");
    // H need not contain R(G) here, so the radical stays in dim G.
    f["dim_quotient"] = dim_G + g.radical_dim - b->dim;
    return f;
  }

  int t_H = 0, u_H = 0, uH_rad = 0;
  if (const auto* m = std::get_if<MaxRank>(&ctx.h)) {
    const auto& s = m->subgroup;
    t_H = s.semisimple_part().rank() + s.central_torus();
    u_H = positive_roots_of(s.semisimple_part());
    f["connected"] = std::string("yes");
    f["solvable"] = std::string(s.semisimple_part().empty() ? "yes" : "no");
    f["h_torus"] = I{s.central_torus()};
    bool all_moved = g.semisimple_type.size() > 0;
    for (const auto& part : s.split_by_factor()) all_moved = all_moved && !part.chain().empty();
    f["kernel_zero_dim"] = std::string(all_moved ? "yes" : "no");
    bool covered = true;
    for (const auto& c : g.semisimple_type.components()) {
      const bool ok = c.family == Family::A ||
                      (c.family == Family::C && g.characteristic != 2) ||
                      (c.family == Family::B && c.rank == 3 && g.characteristic == 0) ||
                      (c.family == Family::G && g.characteristic == 0);
      covered = covered && ok;
    }
    f["tha_types"] = std::string(covered ? "yes" : "no");
    if (g.semisimple_type.size() == 1 && s.central_torus() > 0) {
      if (const auto w = levi_first_witness(s)) f["levi_witness"] = detail::describe_move(w->chain().front());
    }
    if (!s.chain().empty()) {
      const BdsMove& first = s.chain().front();
      f["first_move"] = detail::describe_move(first);
      f["first_kind"] = to_string(first.kind);
      f["comark"] = I{first.comark_at_node.value_or(0)};
      f["m_type"] = first.result.str();
    }
    f["chain_length"] = static_cast<I>(s.chain().size());
    f["involution_centralizer"] = std::string("asserted");
    // Maximal rank rules out a semisimple A1 in G2.
    f["exception_status"] = std::string("not-G2-A1");
    if (g.semisimple_type.size() == 1) {
      const int n = g.semisimple_type.rank();
      f["crude_dim_H_lower"] = I{3 * n};
      f["dim_quotient_upper"] = dim_G - 3 * n;
      f["rank_bound"] = I{2 * n + 8};
    }
  } else {
    const auto& gen = std::get<General>(ctx.h);
    t_H = gen.levi_type.rank() + gen.levi_central_torus;
    u_H = positive_roots_of(gen.levi_type) + gen.unipotent_radical_dim;
    uH_rad = gen.unipotent_radical_dim;
    f["connected"] = std::string(gen.connected ? "yes" : "no");
    f["solvable"] = std::string(gen.levi_type.empty() ? "yes" : "no");
    f["kernel_zero_dim"] = to_string(gen.action_kernel_zero_dim);
    f["in_proper_parabolic"] = to_string(gen.in_proper_parabolic);
    const bool sa1 = gen.levi_type == SemisimpleType{{Family::A, 1}} && gen.levi_central_torus == 0 &&
                     gen.unipotent_radical_dim == 0;
    std::string status = "not-G2-A1";
    if (sa1 && g.semisimple_type == SemisimpleType{{Family::G, 2}}) {
      status = gen.in_proper_parabolic == Tri::Yes ? "in-parabolic"
               : gen.subregular == Tri::Yes        ? "subregular"
                                                   : "open";
    }
    f["exception_status"] = status;
    // Smallest G/P: remove one simple root from one factor.
    std::optional<I> flag;
    for (const auto& c : g.semisimple_type.components()) {
      const int u = positive_roots_of(SemisimpleType{c});
      for (const auto& lm : levi_moves(c)) {
        const I d = u - positive_roots_of(lm.result);
        if (!flag || d < *flag) flag = d;
      }
    }
    if (flag) f["min_dim_G_mod_P"] = *flag;
  }
  f["t_H"] = I{t_H};
  f["uH_rad"] = I{uH_rad};
  f["dim_BGU"] = I{u_G - u_H};
  f["dim_UGB"] = I{t_G - t_H + u_G - u_H};
  f["dim_quotient"] = I{(t_G - t_H) + 2 * (u_G - u_H) + uH_rad};
  return f;
}

Facts bound_facts(const BoundContext& b) {
  return {{"characteristic", I{b.characteristic}},
          {"dim_quotient_bound", I{b.dim_bound}},
          {"connected", std::string(b.connected ? "yes" : "no")}};
}

struct FactView {
  const Facts& f;
  bool has(const std::string& k) const { return f.count(k) > 0; }
  I num(const std::string& k) const {
    const auto it = f.find(k);
    if (it == f.end()) return -1;
    if (const auto* v = std::get_if<I>(&it->second)) return *v;
    return -1;
  }
  std::string str(const std::string& k) const {
    const auto it = f.find(k);
    if (it == f.end()) return {};
    if (const auto* v = std::get_if<std::string>(&it->second)) return *v;
    return {};
  }
  bool yes(const std::string& k) const { return str(k) == "yes"; }
};

struct RuleCheck {
  std::vector<std::string> required;
  std::function<bool(const FactView&, bool maxrank, bool general, bool bound)> holds;
};

const std::map<std::string, RuleCheck>& rule_checks() {
  static const std::map<std::string, RuleCheck> checks = {
      {rules::kRad,
       {{"radical_dim"}, [](const FactView& v, bool, bool, bool b) { return !b && v.num("radical_dim") > 0; }}},
      {rules::kFactor,
       {{"num_factors"},
        [](const FactView& v, bool mr, bool, bool) {
          return mr && v.num("radical_dim") == 0 && v.num("num_factors") >= 2;
        }}},
      {rules::kTrivial,
       {{},
        [](const FactView& v, bool, bool, bool b) {
          return b ? v.num("dim_quotient_bound") == 0
                   : v.num("radical_dim") == 0 && v.num("dim_quotient") == 0;
        }}},
      {rules::kTh0,
       {{},
        [](const FactView& v, bool, bool, bool b) {
          return !b && (v.yes("borel_contained") || (v.yes("solvable") && v.yes("connected")));
        }}},
      {rules::kThB0,
       {{"characteristic"},
        [](const FactView& v, bool, bool, bool b) {
          if (v.num("characteristic") != 0) return false;
          return b ? v.num("dim_quotient_bound") <= 5
                   : v.num("radical_dim") == 0 && v.num("dim_quotient") <= 5;
        }}},
      {rules::kUGH3,
       {{"characteristic", "connected", "dim_BGU"},
        [](const FactView& v, bool mr, bool gen, bool) {
          return (mr || gen) && v.num("characteristic") == 0 && v.num("radical_dim") == 0 &&
                 v.yes("connected") && v.num("dim_BGU") <= 3;
        }}},
      {rules::kTU6,
       {{"characteristic", "connected", "dim_UGB"},
        [](const FactView& v, bool mr, bool gen, bool) {
          return (mr || gen) && v.num("characteristic") == 0 && v.num("radical_dim") == 0 &&
                 v.yes("connected") && v.num("dim_UGB") <= 5;
        }}},
      {rules::kThB,
       {{"characteristic", "connected"},
        [](const FactView& v, bool, bool, bool b) {
          if (v.num("characteristic") != 0 || !v.yes("connected")) return false;
          return b ? v.num("dim_quotient_bound") <= 10
                   : v.num("radical_dim") == 0 && v.num("dim_quotient") <= 10;
        }}},
      {rules::kUGH4,
       {{"characteristic", "connected", "uH_rad", "dim_BGU"},
        [](const FactView& v, bool mr, bool gen, bool) {
          return (mr || gen) && v.num("characteristic") == 0 && v.num("radical_dim") == 0 &&
                 v.yes("connected") && v.num("uH_rad") == 0 && v.num("dim_BGU") <= 4;
        }}},
      {rules::kThBRank,
       {{"characteristic", "connected", "uH_rad", "kernel_zero_dim", "t_G", "t_H", "dim_quotient"},
        [](const FactView& v, bool mr, bool gen, bool) {
          return (mr || gen) && v.num("characteristic") == 0 && v.num("radical_dim") == 0 &&
                 v.yes("connected") && v.num("uH_rad") == 0 && v.yes("kernel_zero_dim") &&
                 v.num("dim_quotient") < v.num("t_G") + v.num("t_H") + 8;
        }}},
      {rules::kThA,
       {{"characteristic", "group"},
        [](const FactView& v, bool mr, bool, bool) { return mr && v.yes("tha_types"); }}},
      {rules::kDim13,
       {{"characteristic", "connected", "dim_G"},
        [](const FactView& v, bool, bool, bool b) {
          return !b && v.num("characteristic") == 0 && v.num("radical_dim") == 0 &&
                 v.yes("connected") && v.num("dim_G") <= 13;
        }}},
      {rules::kDim14,
       {{"characteristic", "connected", "dim_G", "exception_status"},
        [](const FactView& v, bool, bool, bool b) {
          const std::string s = v.has("exception_status") ? v.str("exception_status") : "not-G2-A1";
          return !b && v.num("characteristic") == 0 && v.num("radical_dim") == 0 &&
                 v.yes("connected") && v.num("dim_G") == 14 && s != "open";
        }}},
      {rules::kParab,
       {{},
        [](const FactView& v, bool mr, bool gen, bool) {
          if (v.num("radical_dim") != 0) return false;
          if (mr) return v.num("num_factors") == 1 && v.num("h_torus") >= 1 && v.has("levi_witness");
          return gen && v.yes("in_proper_parabolic") && v.has("min_dim_G_mod_P");
        }}},
      {rules::kSpecial,
       {{"characteristic", "group", "first_move", "comark", "m_type", "involution_centralizer"},
        [](const FactView& v, bool mr, bool, bool) {
          const std::string grp = v.str("group");
          return mr && v.num("radical_dim") == 0 && v.num("num_factors") == 1 &&
                 !grp.empty() && grp.front() == 'C' && v.num("characteristic") != 2 &&
                 v.str("first_kind") == "ss" && v.num("comark") == 1;
        }}},
      {rules::kB23C3G2,
       {{"characteristic", "group", "dim_G", "crude_dim_H_lower", "dim_quotient_upper", "rank_bound"},
        [](const FactView& v, bool mr, bool, bool) {
          const std::string grp = v.str("group");
          return mr && v.num("characteristic") == 0 && v.num("radical_dim") == 0 &&
                 (grp == "B3" || grp == "G2") && v.num("h_torus") == 0 && v.num("chain_length") > 0 &&
                 v.num("dim_quotient_upper") < v.num("rank_bound");
        }}},
  };
  return checks;
}

std::string value_str(const PremiseValue& v) {
  if (const auto* i = std::get_if<I>(&v)) return std::to_string(*i);
  return std::get<std::string>(v);
}

ValidationResult fail(const std::string& path, std::string reason) { return {false, path, std::move(reason)}; }

ValidationResult check(const CertificateNode& node, const Context& ctx, const std::string& path) {
  const auto& checks = rule_checks();
  const auto it = checks.find(node.rule_id);
  if (it == checks.end()) return fail(path, "unknown rule " + node.rule_id);
  if (node.paper_ref != rule_reference(node.rule_id))
    return fail(path, "reference does not match rule " + node.rule_id);

  const bool bound = std::holds_alternative<BoundContext>(ctx);
  const Facts facts = bound ? bound_facts(std::get<BoundContext>(ctx)) : pair_facts(std::get<PairContext>(ctx));
  bool maxrank = false, general = false;
  if (const auto* pair = std::get_if<PairContext>(&ctx)) {
    maxrank = std::holds_alternative<MaxRank>(pair->h);
    general = std::holds_alternative<General>(pair->h);
  }

  std::set<std::string> names;
  for (const auto& p : node.premises) {
    if (!names.insert(p.name).second) return fail(path, "duplicate premise " + p.name);
    const auto f = facts.find(p.name);
    if (f == facts.end()) return fail(path, "premise " + p.name + " is not a fact here");
    if (!(f->second == p.value))
      return fail(path, "premise " + p.name + " = " + value_str(p.value) + " but recomputed " +
                            value_str(f->second));
  }
  if (node.premises.empty() && node.rule_id != rules::kTrivial)
    return fail(path, node.rule_id + " records no premises");
  std::vector<std::string> required = it->second.required;
  if (node.rule_id == rules::kParab) {
    // The two forms of R-PARAB record different witnesses.
    if (maxrank) required = {"h_torus", "levi_witness"};
    else required = {"in_proper_parabolic", "dim_quotient", "min_dim_G_mod_P"};
  }
  for (const auto& req : required)
    if (!names.count(req)) return fail(path, node.rule_id + " is missing premise " + req);
  if (!it->second.holds(FactView{facts}, maxrank, general, bound))
    return fail(path, "condition of " + node.rule_id + " does not hold");

  const auto children = detail::derive_children(node.rule_id, ctx);
  if (!children) return fail(path, node.rule_id + " does not reduce this pair");
  if (children->size() != node.children.size())
    return fail(path, node.rule_id + " needs " + std::to_string(children->size()) + " children, found " +
                          std::to_string(node.children.size()));
  for (std::size_t i = 0; i < children->size(); ++i) {
    auto r = check(node.children[i], (*children)[i], path + "/" + std::to_string(i));
    if (!r) return r;
  }
  return {true, {}, {}};
}

}  // namespace

ValidationResult validate_certificate(const GroupSpec& g, const SubgroupSpec& h,
                                      const CertificateNode& root) {
  try {
    return check(root, PairContext{g, h}, "root");
  } catch (const std::exception& e) {
    return fail("root", std::string("pair rejected: ") + e.what());
  }
}

ValidationResult validate_certificate(const GroupSpec& g, const SubgroupSpec& h, const Verdict& v) {
  if (v.status == Status::Rational) {
    if (!v.certificate) return fail("root", "Rational verdict without a certificate");
    return validate_certificate(g, h, *v.certificate);
  }
  if (v.certificate) return fail("root", "Unknown verdict carries a certificate");
  if (!v.frontier) return fail("root", "Unknown verdict without a frontier tag");
  return {true, {}, {}};
}

}  // namespace homrat
