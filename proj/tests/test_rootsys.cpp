#include <doctest.h>

#include <chrono>
#include <set>

#include "catalog.hpp"
#include "homrat/rootsys.hpp"

using namespace homrat;

namespace {

// Closed formulas for |positive roots|, dimension and Coxeter number.
int expected_pos_roots(const SimpleType& t) {
  const int n = t.rank;
  switch (t.family) {
    case Family::A: return n * (n + 1) / 2;
    case Family::B:
    case Family::C: return n * n;
    case Family::D: return n * (n - 1);
    case Family::E: return n == 6 ? 36 : n == 7 ? 63 : 120;
    case Family::F: return 24;
    case Family::G: return 6;
  }
  return -1;
}

int expected_coxeter(const SimpleType& t) {
  const int n = t.rank;
  switch (t.family) {
    case Family::A: return n + 1;
    case Family::B:
    case Family::C: return 2 * n;
    case Family::D: return 2 * n - 2;
    case Family::E: return n == 6 ? 12 : n == 7 ? 18 : 30;
    case Family::F: return 12;
    case Family::G: return 6;
  }
  return -1;
}

// Highest-root coefficients in Bourbaki numbering, entered by hand.
std::vector<int> expected_marks(const SimpleType& t) {
  const int n = t.rank;
  switch (t.family) {
    case Family::A: return std::vector<int>(n, 1);
    case Family::B: {
      std::vector<int> m(n, 2);
      m[0] = 1;
      return m;
    }
    case Family::C: {
      std::vector<int> m(n, 2);
      m[n - 1] = 1;
      return m;
    }
    case Family::D: {
      std::vector<int> m(n, 2);
      m[0] = m[n - 2] = m[n - 1] = 1;
      return m;
    }
    case Family::E:
      if (n == 6) return {1, 2, 2, 3, 2, 1};
      if (n == 7) return {2, 2, 3, 4, 3, 2, 1};
      return {2, 3, 4, 6, 5, 4, 3, 2};
    case Family::F: return {2, 3, 4, 2};
    case Family::G: return {3, 2};
  }
  return {};
}

// Highest coroot coefficients for the non-simply-laced families.
std::vector<int> expected_comarks(const SimpleType& t) {
  const int n = t.rank;
  switch (t.family) {
    case Family::B: {
      std::vector<int> m(n, 2);
      m[0] = m[n - 1] = 1;
      return m;
    }
    case Family::C: return std::vector<int>(n, 1);
    case Family::F: return {2, 3, 2, 1};
    case Family::G: return {1, 2};
    default: return expected_marks(t);
  }
}

std::vector<SimpleType> all_types_up_to_8() {
  std::vector<SimpleType> out;
  for (int n = 1; n <= 8; ++n) out.push_back({Family::A, n});
  for (int n = 2; n <= 8; ++n) out.push_back({Family::B, n});
  for (int n = 2; n <= 8; ++n) out.push_back({Family::C, n});
  for (int n = 3; n <= 8; ++n) out.push_back({Family::D, n});
  for (int n = 6; n <= 8; ++n) out.push_back({Family::E, n});
  out.push_back({Family::F, 4});
  out.push_back({Family::G, 2});
  return out;
}

// Weyl-orbit oracle: all roots are images of simple roots under simple
// reflections s_i(b) = b - <b, a_i^v> a_i.
std::set<std::vector<int>> orbit_positive_roots(const IntMatrix& cartan) {
  const std::size_t n = cartan.size();
  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> stack;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<int> e(n, 0);
    e[i] = 1;
    stack.push_back(e);
  }
  while (!stack.empty()) {
    auto b = stack.back();
    stack.pop_back();
    if (!seen.insert(b).second) continue;
    for (std::size_t i = 0; i < n; ++i) {
      int pairing = 0;
      for (std::size_t j = 0; j < n; ++j) pairing += b[j] * cartan[j][i];
      auto r = b;
      r[i] -= pairing;
      if (!seen.count(r)) stack.push_back(r);
    }
  }
  std::set<std::vector<int>> pos;
  for (const auto& r : seen)
    if (std::all_of(r.begin(), r.end(), [](int c) { return c >= 0; })) pos.insert(r);
  return pos;
}

}  // namespace

TEST_CASE("parse_type reads components, repetition and aliases") {
  CHECK(parse_type("G2") == SemisimpleType{{Family::G, 2}});
  CHECK(parse_type("A2+2A1") == SemisimpleType{{Family::A, 2}, {Family::A, 1}, {Family::A, 1}});
  CHECK(parse_type("A1 + A2 + A1").str() == "A2+2A1");
  CHECK(parse_type("C1") == parse_type("A1"));
  CHECK(parse_type("B1") == parse_type("A1"));
  CHECK(parse_type("D2") == parse_type("2A1"));
  CHECK(parse_type("D3") == parse_type("A3"));
  CHECK(parse_type("B2") == parse_type("C2"));
  CHECK(parse_type("A1+C2").str() == "A1+C2");
  CHECK(SemisimpleType{}.str() == "trivial");
}

TEST_CASE("parse_type errors carry the offending token and offset") {
  auto position_of = [](std::string_view s) -> std::pair<std::size_t, std::string> {
    try {
      parse_type(s);
    } catch (const ParseError& e) {
      return {e.position(), e.token()};
    }
    return {std::string::npos, ""};
  };
  CHECK(position_of("A2+X3") == std::pair<std::size_t, std::string>{3, "X3"});
  CHECK(position_of("E9").second == "E9");
  CHECK(position_of("G3").first == 0);
  CHECK(position_of("A0").second == "A0");
  CHECK(position_of("A1+").first == 2);
  CHECK(position_of("").first == 0);
  CHECK(position_of("A1+ F5").first == 4);
  CHECK(position_of("A").second == "A");
}

TEST_CASE("Cartan matrices of small types") {
  CHECK(cartan_matrix({Family::A, 1}) == IntMatrix{{2}});
  CHECK(cartan_matrix({Family::A, 2}) == IntMatrix{{2, -1}, {-1, 2}});
  CHECK(cartan_matrix({Family::G, 2}) == IntMatrix{{2, -1}, {-3, 2}});
  CHECK(cartan_matrix({Family::B, 3}) == IntMatrix{{2, -1, 0}, {-1, 2, -2}, {0, -1, 2}});
  CHECK(cartan_matrix({Family::C, 3}) == IntMatrix{{2, -1, 0}, {-1, 2, -1}, {0, -2, 2}});
  CHECK(cartan_matrix({Family::F, 4}) ==
        IntMatrix{{2, -1, 0, 0}, {-1, 2, -2, 0}, {0, -1, 2, -1}, {0, 0, -1, 2}});
  CHECK(cartan_matrix({Family::D, 4}) ==
        IntMatrix{{2, -1, 0, 0}, {-1, 2, -1, -1}, {0, -1, 2, 0}, {0, -1, 0, 2}});
}

TEST_CASE("small root systems match hand computation") {
  const RootSystem a2 = generate_roots({Family::A, 2});
  std::set<std::vector<int>> got;
  for (const auto& r : a2.positive_roots) got.insert(r.coords);
  CHECK(got == std::set<std::vector<int>>{{1, 0}, {0, 1}, {1, 1}});
  CHECK(a2.highest_root.coords == std::vector<int>{1, 1});
  CHECK(a2.marks == std::vector<int>{1, 1});

  const RootSystem g2 = generate_roots({Family::G, 2});
  CHECK(g2.num_positive_roots() == 6);
  CHECK(g2.marks == std::vector<int>{3, 2});
  CHECK(g2.comarks == std::vector<int>{1, 2});
  CHECK(g2.root_lengths == std::vector<Ratio>{Ratio::make(2, 3), Ratio::make(2, 1)});

  const RootSystem c3 = generate_roots({Family::C, 3});
  CHECK(c3.num_positive_roots() == 9);
  CHECK(c3.marks == std::vector<int>{2, 2, 1});
  CHECK(c3.comarks == std::vector<int>{1, 1, 1});

  CHECK(generate_roots({Family::B, 3}).root_lengths ==
        std::vector<Ratio>{Ratio::make(2, 1), Ratio::make(2, 1), Ratio::make(1, 1)});
}

TEST_CASE("closure generation agrees with the Weyl-orbit oracle up to rank 8") {
  for (const auto& t : all_types_up_to_8()) {
    CAPTURE(t.str());
    const RootSystem rs = generate_roots(t);
    std::set<std::vector<int>> got;
    for (const auto& r : rs.positive_roots) got.insert(r.coords);
    CHECK(got.size() == rs.positive_roots.size());
    CHECK(got == orbit_positive_roots(rs.cartan));
  }
}

TEST_CASE("positive-root counts, dimensions and Coxeter numbers follow the closed formulas") {
  for (const auto& t : all_types_up_to_8()) {
    CAPTURE(t.str());
    const RootSystem rs = generate_roots(t);
    const int u = expected_pos_roots(t);
    CHECK(rs.num_positive_roots() == u);
    CHECK(num_positive_roots(t) == u);
    CHECK(rs.dim() == t.rank + 2 * u);
    CHECK(rs.coxeter_number() == expected_coxeter(t));
    int sum = 0;
    for (int m : rs.marks) sum += m;
    CHECK(sum + 1 == expected_coxeter(t));
    CHECK(2 * u == expected_coxeter(t) * t.rank);
  }
}

TEST_CASE("marks and comarks match the tables") {
  for (const auto& t : all_types_up_to_8()) {
    CAPTURE(t.str());
    const RootSystem rs = generate_roots(t);
    CHECK(rs.marks == expected_marks(t));
    CHECK(rs.comarks == expected_comarks(t));
    for (int m : rs.marks) CHECK(m >= 1);
    const bool simply_laced = t.family == Family::A || t.family == Family::D || t.family == Family::E;
    if (simply_laced) CHECK(rs.comarks == rs.marks);
    // Comark integrality: mark * |a_i|^2 / |theta|^2 is an integer.
    const int long_len = rs.norm(rs.highest_root);
    for (int i = 0; i < t.rank; ++i) CHECK((rs.marks[i] * rs.gram[i][i]) % long_len == 0);
  }
}

TEST_CASE("closure is idempotent and the highest root is the unique dominant one") {
  for (const auto& t : all_types_up_to_8()) {
    CAPTURE(t.str());
    const RootSystem rs = generate_roots(t);
    const auto again = closure_step(rs.cartan, rs.positive_roots);
    CHECK(std::set<RootVector>(again.begin(), again.end()) ==
          std::set<RootVector>(rs.positive_roots.begin(), rs.positive_roots.end()));
    int dominating = 0;
    for (const auto& cand : rs.positive_roots) {
      bool dom = true;
      for (const auto& r : rs.positive_roots)
        for (int i = 0; i < t.rank; ++i) dom = dom && cand.coords[i] >= r.coords[i];
      if (dom) {
        ++dominating;
        CHECK(cand == rs.highest_root);
      }
    }
    CHECK(dominating == 1);
  }
}

TEST_CASE("group invariants") {
  CHECK(group_invariants(parse_type("G2")).dim == 14);
  CHECK(group_invariants(parse_type("G2")).num_pos_roots == 6);
  CHECK(group_invariants(parse_type("B3")).dim == 21);
  CHECK(group_invariants(parse_type("B3")).num_pos_roots == 9);
  CHECK(group_invariants(parse_type("A3")).dim == 15);
  CHECK(group_invariants(parse_type("A2+2A1")).dim == 14);
  CHECK(group_invariants(SemisimpleType{}).dim == 0);
  const auto with_torus = group_invariants(parse_type("A2"), 2);
  CHECK(with_torus.dim == 10);
  CHECK(with_torus.central_torus == 2);

  for (const auto& t : testing::semisimple_types(4)) {
    const auto gi = group_invariants(t);
    int rank = 0, u = 0;
    for (const auto& c : t.components()) {
      rank += c.rank;
      u += expected_pos_roots(c);
    }
    CHECK(gi.rank == rank);
    CHECK(gi.num_pos_roots == u);
    CHECK(gi.dim == rank + 2 * u);
  }
}

TEST_CASE("characteristic validity") {
  CHECK(is_valid_characteristic(0));
  CHECK(is_valid_characteristic(2));
  CHECK(is_valid_characteristic(7919));
  CHECK_FALSE(is_valid_characteristic(1));
  CHECK_FALSE(is_valid_characteristic(4));
  CHECK_FALSE(is_valid_characteristic(-3));
}
