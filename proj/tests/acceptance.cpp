// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "catalog.hpp"
#include "homrat/cli.hpp"

using namespace homrat;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

int cli_run(const std::vector<std::string>& args, std::string& out) {
  std::ostringstream o, e;
  const int code = cli::run(args, o, e);
  out = o.str() + e.str();
  return code;
}

General regular_a1() {
  General gen;
  gen.levi_type = parse_type("A1");
  gen.connected = true;
  gen.in_proper_parabolic = Tri::No;
  gen.action_kernel_zero_dim = Tri::Yes;
  return gen;
}

// Stratum of criterion 4, shared by 6 and 7.
std::vector<testing::CatalogPair> sweep_pairs() { return testing::maxrank_catalog(4, 2); }

Outcome dimension_table() {
  Outcome r;
  const std::pair<const char*, int> want[] = {{"B3", 21}, {"G2", 14}, {"A3", 15}, {"A2+2A1", 14}};
  // One untimed call absorbs process-wide first-use costs; each group is then
  // timed as the median of five calls so a single scheduler stall does not count.
  std::string warm;
  cli_run({"invariants", "--group", "A1"}, warm);
  for (const auto& [g, dim] : want) {
    std::string out;
    int code = 0;
    std::vector<double> times;
    for (int rep = 0; rep < 5; ++rep) {
      out.clear();
      const auto t0 = Clock::now();
      code = cli_run({"invariants", "--group", g, "--json"}, out);
      times.push_back(seconds_since(t0));
    }
    std::sort(times.begin(), times.end());
    const double s = times[times.size() / 2];
    if (code != 0) {
      r.fail(std::string(g) + ": exit " + std::to_string(code));
      continue;
    }
    const int got = Json::parse(out)["dim"].get<int>();
    if (got != dim) r.fail(std::string(g) + ": dim " + std::to_string(got) + " != " + std::to_string(dim));
    if (s >= 1e-3) r.fail(std::string(g) + ": took " + std::to_string(s * 1e3) + " ms");
  }
  return r;
}

Outcome root_counts() {
  Outcome r;
  const auto t0 = Clock::now();
  int checked = 0;
  for (int n = 1; n <= 8; ++n) {
    std::vector<std::pair<SimpleType, int>> cases = {{{Family::A, n}, n * (n + 1) / 2}};
    if (n >= 2) {
      cases.push_back({{Family::B, n}, n * n});
      cases.push_back({{Family::C, n}, n * n});
    }
    if (n >= 3) cases.push_back({{Family::D, n}, n * (n - 1)});
    if (n == 6) cases.push_back({{Family::E, 6}, 36});
    if (n == 7) cases.push_back({{Family::E, 7}, 63});
    if (n == 8) cases.push_back({{Family::E, 8}, 120});
    if (n == 4) cases.push_back({{Family::F, 4}, 24});
    if (n == 2) cases.push_back({{Family::G, 2}, 6});
    for (const auto& [t, want] : cases) {
      ++checked;
      const int got = generate_roots(t).num_positive_roots();
      if (got != want) r.fail(t.str() + ": " + std::to_string(got) + " != " + std::to_string(want));
    }
  }
  const double s = seconds_since(t0);
  if (s >= 1.0) r.fail("sweep took " + std::to_string(s) + " s");
  r.detail = r.ok ? std::to_string(checked) + " types in " + std::to_string(s * 1e3) + " ms" : r.detail;
  return r;
}

Outcome propb_cn() {
  Outcome r;
  for (int n = 2; n <= 6; ++n) {
    std::set<SemisimpleType> want, got;
    for (int m = 1; m < n; ++m) want.insert(SemisimpleType{{Family::C, m}, {Family::C, n - m}});
    for (const auto& mv : semisimple_moves({Family::C, n})) {
      got.insert(mv.result);
      if (mv.comark_at_node != 1) r.fail("C" + std::to_string(n) + " node " + std::to_string(mv.node) + ": comark != 1");
    }
    if (got != want) r.fail("C" + std::to_string(n) + ": result set differs");
  }
  return r;
}

Outcome thb_sweep(const std::vector<testing::CatalogPair>& pairs, std::vector<Verdict>& verdicts) {
  Outcome r;
  const auto t0 = Clock::now();
  int stratum = 0;
  for (const auto& [g, h] : pairs) {
    verdicts.push_back(certify(g, MaxRank{h}));
    const auto& v = verdicts.back();
    if (v.invariants.dim_quotient > 10) continue;
    ++stratum;
    if (v.status != Status::Rational)
      r.fail("Unknown for " + g.semisimple_type.str() + " / " + h.semisimple_part().str());
  }
  const double s = seconds_since(t0);
  if (s >= 10.0) r.fail("sweep took " + std::to_string(s) + " s");
  if (r.ok)
    r.detail = std::to_string(pairs.size()) + " pairs, " + std::to_string(stratum) + " with dim <= 10, " +
               std::to_string(s) + " s";
  return r;
}

Outcome frontier_fidelity() {
  Outcome r;
  const auto g2 = certify({parse_type("G2"), 0, 0}, regular_a1());
  if (g2.status != Status::Unknown || g2.frontier != std::string(frontier::kG2RegularA1))
    r.fail("G2 regular A1 not tagged " + std::string(frontier::kG2RegularA1));
  const auto a3 = certify({parse_type("A3"), 0, 0}, regular_a1());
  if (a3.status != Status::Unknown || a3.frontier != std::string(frontier::kA3RegularA1))
    r.fail("A3 regular A1 not tagged " + std::string(frontier::kA3RegularA1));
  auto sub = regular_a1();
  sub.in_proper_parabolic = Tri::Unknown;
  sub.subregular = Tri::Yes;
  if (certify({parse_type("G2"), 0, 0}, sub).status != Status::Rational) r.fail("G2 subregular A1 not Rational");
  return r;
}

// Twenty tampering operations, each applied to a fresh valid certificate.
std::vector<std::function<bool(Verdict&)>> tamperings() {
  using F = std::function<bool(Verdict&)>;
  auto first_int = [](CertificateNode& n) -> std::int64_t* {
    for (auto& p : n.premises)
      if (auto* i = std::get_if<std::int64_t>(&p.value)) return i;
    return nullptr;
  };
  auto first_str = [](CertificateNode& n) -> std::string* {
    for (auto& p : n.premises)
      if (auto* s = std::get_if<std::string>(&p.value)) return s;
    return nullptr;
  };
  auto leaf = [](CertificateNode& n) -> CertificateNode& {
    CertificateNode* cur = &n;
    while (!cur->children.empty()) cur = &cur->children.front();
    return *cur;
  };
  return {
      F([=](Verdict& v) { auto* i = first_int(*v.certificate); if (!i) return false; *i += 50; return true; }),
      F([=](Verdict& v) { auto* i = first_int(*v.certificate); if (!i) return false; *i = -1; return true; }),
      F([=](Verdict& v) { auto* s = first_str(*v.certificate); if (!s) return false; *s = "forged"; return true; }),
      F([](Verdict& v) { v.certificate->rule_id = "R-UNHEARD-OF"; return true; }),
      F([](Verdict& v) { v.certificate->paper_ref = "some other lemma"; return true; }),
      F([](Verdict& v) { v.certificate->paper_ref.clear(); return true; }),
      F([](Verdict& v) { if (v.certificate->premises.empty()) return false; v.certificate->premises.pop_back(); return true; }),
      F([](Verdict& v) { v.certificate->premises.push_back({"invented_fact", std::int64_t{1}}); return true; }),
      F([](Verdict& v) { if (v.certificate->premises.empty()) return false; v.certificate->premises.push_back(v.certificate->premises.front()); return true; }),
      F([](Verdict& v) {
        auto& p = v.certificate->premises;
        if (p.empty()) return false;
        if (auto* i = std::get_if<std::int64_t>(&p[0].value)) p[0].value = std::to_string(*i);
        else p[0].value = std::int64_t{0};
        return true;
      }),
      F([](Verdict& v) { v.certificate->children.push_back(*v.certificate); return true; }),
      F([](Verdict& v) { if (v.certificate->children.empty()) return false; v.certificate->children.clear(); return true; }),
      F([=](Verdict& v) { auto& l = leaf(*v.certificate); auto* i = first_int(l); if (!i) return false; *i += 7; return true; }),
      F([=](Verdict& v) { auto& l = leaf(*v.certificate); l.rule_id = l.rule_id == rules::kThB0 ? rules::kTh0 : rules::kThB0; l.paper_ref = rule_reference(l.rule_id); return true; }),
      F([](Verdict& v) { v.certificate->rule_id = rules::kDim13; v.certificate->paper_ref = rule_reference(rules::kDim13); v.certificate->children.clear(); return true; }),
      F([](Verdict& v) { v.certificate->rule_id = rules::kThA; v.certificate->paper_ref = rule_reference(rules::kThA); v.certificate->children.clear(); return true; }),
      F([](Verdict& v) { v.certificate->rule_id = rules::kTrivial; v.certificate->paper_ref = rule_reference(rules::kTrivial); v.certificate->premises = {}; v.certificate->children.clear(); return true; }),
      F([](Verdict& v) { v.status = Status::Unknown; return true; }),
      F([](Verdict& v) { v.certificate.reset(); return true; }),
      F([](Verdict& v) { for (auto& p : v.certificate->premises) p.name += "_x"; return !v.certificate->premises.empty(); }),
  };
}

Outcome soundness(const std::vector<testing::CatalogPair>& pairs, const std::vector<Verdict>& verdicts) {
  Outcome r;
  int rational = 0;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (verdicts[i].status != Status::Rational) continue;
    ++rational;
    const auto res = validate_certificate(pairs[i].g, MaxRank{pairs[i].h}, verdicts[i]);
    if (!res.valid)
      r.fail("rejected " + pairs[i].g.semisimple_type.str() + " / " + pairs[i].h.semisimple_part().str() +
             " at " + res.path + ": " + res.reason);
  }

  // Hosts for tampering: certificates with children and with premises.
  struct Host {
    GroupSpec g;
    SubgroupSpec h;
  };
  const auto g2 = parse_type("G2");
  const std::vector<Host> hosts = {
      {{parse_type("F4"), 0, 0}, MaxRank{MaxRankSubgroup::identity(parse_type("F4")).apply(MoveKind::LeviRemove, 1)}},
      {{g2, 0, 0}, MaxRank{MaxRankSubgroup::identity(g2).apply(MoveKind::SemisimpleRemove, 1)}},
      {{parse_type("A2"), 2, 0}, BorelContained{3}},
  };
  int rejected = 0, applied = 0;
  const auto ops = tamperings();
  for (std::size_t k = 0; k < ops.size(); ++k) {
    bool done = false;
    for (const auto& host : hosts) {
      Verdict v = certify(host.g, host.h);
      if (!v.certificate || !validate_certificate(host.g, host.h, v).valid) {
        r.fail("host certificate invalid before tampering");
        continue;
      }
      if (!ops[k](v)) continue;
      done = true;
      ++applied;
      if (!validate_certificate(host.g, host.h, v).valid) ++rejected;
      else r.fail("tampering #" + std::to_string(k + 1) + " accepted");
      break;
    }
    if (!done) r.fail("tampering #" + std::to_string(k + 1) + " not applicable");
  }
  if (applied != 20) r.fail(std::to_string(applied) + " tamperings applied, expected 20");
  if (r.ok)
    r.detail = std::to_string(rational) + " valid certificates, " + std::to_string(rejected) + "/20 tampered rejected";
  return r;
}

Outcome order_stability(const std::vector<testing::CatalogPair>& pairs, const std::vector<Verdict>& verdicts) {
  Outcome r;
  CertifyOptions reversed;
  std::reverse(reversed.terminal_order.begin(), reversed.terminal_order.end());
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto v = certify(pairs[i].g, MaxRank{pairs[i].h}, reversed);
    if (v.status != verdicts[i].status)
      r.fail("status differs for " + pairs[i].g.semisimple_type.str() + " / " + pairs[i].h.semisimple_part().str());
  }
  return r;
}

Outcome table_command() {
  Outcome r;
  std::string out;
  if (cli_run({"table", "b23c3g2", "--json"}, out) != 0) {
    r.fail("exit status");
    return r;
  }
  const Json j = Json::parse(out);
  const std::map<std::string, std::vector<int>> want = {{"G2", {14, 6, 8, 12}}, {"B3", {21, 9, 12, 14}}};
  for (const auto& col : j["columns"]) {
    const auto it = want.find(col["group"].get<std::string>());
    if (it == want.end()) {
      r.fail("unexpected column");
      continue;
    }
    const std::vector<int> got = {col["dim_G"], col["crude_dim_H_lower"], col["dim_quotient_upper"], col["rank_bound"]};
    if (got != it->second) r.fail(it->first + " column differs");
    if (!col["bound_holds"].get<bool>()) r.fail(it->first + ": bound does not hold");
  }
  if (j["columns"].size() != 2) r.fail("expected two columns");
  return r;
}

}  // namespace

int main() {
  int failures = 0;
  auto report = [&](int id, const char* name, const Outcome& o) {
    std::printf("%s  %d  %s%s%s\n", o.ok ? "PASS" : "FAIL", id, name, o.detail.empty() ? "" : "  -- ",
                o.detail.c_str());
    if (!o.ok) ++failures;
  };

  report(1, "invariants: dim B3=21, G2=14, A3=15, A2+2A1=14 (< 1 ms each)", dimension_table());
  report(2, "positive-root counts match closed formulas, rank <= 8 (< 1 s)", root_counts());
  report(3, "C_n semisimple moves = {C_m + C_{n-m}}, comark 1, 2 <= n <= 6", propb_cn());

  const auto pairs = sweep_pairs();
  std::vector<Verdict> verdicts;
  report(4, "rank <= 4, depth <= 2, char 0: dim(G/H) <= 10 always Rational (< 10 s)", thb_sweep(pairs, verdicts));
  report(5, "frontier tags G2-REGULAR-A1 / A3-REGULAR-A1; subregular A1 in G2 Rational", frontier_fidelity());
  report(6, "all sweep certificates validate; 20 tampered certificates rejected", soundness(pairs, verdicts));
  report(7, "reversed terminal-rule order gives identical statuses", order_stability(pairs, verdicts));
  report(8, "table b23c3g2 = (14/21, 6/9, 8/12, 12/14)", table_command());
  return failures == 0 ? 0 : 1;
}
