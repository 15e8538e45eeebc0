#include "homrat/rootsys.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <utility>

namespace homrat {

namespace {

struct Diagram {
  std::vector<int> lengths;
  std::vector<std::pair<int, int>> bonds;
};

// Bourbaki diagrams, 0-based node indices.
Diagram diagram_of(const SimpleType& t) {
  validate(t);
  const int n = t.rank;
  Diagram d;
  d.lengths.assign(n, 2);
  auto path = [&](int upto) {
    for (int i = 0; i + 1 < upto; ++i) d.bonds.emplace_back(i, i + 1);
  };
  switch (t.family) {
    case Family::A:
      path(n);
      break;
    case Family::B:
      path(n);
      for (int i = 0; i + 1 < n; ++i) d.lengths[i] = 4;
      break;
    case Family::C:
      path(n);
      d.lengths[n - 1] = 4;
      break;
    case Family::D:
      path(n - 1);
      d.bonds.emplace_back(n - 3, n - 1);
      break;
    case Family::E: {
      const std::pair<int, int> e8[] = {{0, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {1, 3}};
      for (const auto& [a, b] : e8)
        if (a < n && b < n) d.bonds.emplace_back(a, b);
      break;
    }
    case Family::F:
      path(4);
      d.lengths = {4, 4, 2, 2};
      break;
    case Family::G:
      d.bonds.emplace_back(0, 1);
      d.lengths = {2, 6};
      break;
  }
  return d;
}

int max_entry(const std::vector<int>& v) { return *std::max_element(v.begin(), v.end()); }

}  // namespace

IntMatrix gram_matrix(const SimpleType& t) {
  const Diagram d = diagram_of(t);
  const int n = t.rank;
  IntMatrix g(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) g[i][i] = d.lengths[i];
  for (const auto& [a, b] : d.bonds) {
    const int v = -std::max(d.lengths[a], d.lengths[b]) / 2;
    g[a][b] = g[b][a] = v;
  }
  return g;
}

IntMatrix cartan_from_gram(const IntMatrix& gram) {
  const std::size_t n = gram.size();
  IntMatrix c(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) c[i][j] = 2 * gram[i][j] / gram[j][j];
  return c;
}

IntMatrix cartan_matrix(const SimpleType& t) { return cartan_from_gram(gram_matrix(t)); }

std::vector<RootVector> closure_step(const IntMatrix& cartan, const std::vector<RootVector>& roots) {
  const int n = static_cast<int>(cartan.size());
  std::set<RootVector> known(roots.begin(), roots.end());
  std::vector<RootVector> out = roots;
  for (const auto& beta : roots) {
    for (int i = 0; i < n; ++i) {
      // p: how far the a_i-string through beta extends downwards.
      int p = 0;
      RootVector down = beta;
      while (true) {
        down.coords[i] -= 1;
        if (down.coords[i] < 0 || !known.contains(down)) break;
        ++p;
      }
      int pairing = 0;
      for (int j = 0; j < n; ++j) pairing += beta.coords[j] * cartan[j][i];
      const int q = p - pairing;
      if (q <= 0) continue;
      RootVector up = beta;
      up.coords[i] += 1;
      if (known.insert(up).second) out.push_back(std::move(up));
    }
  }
  return out;
}

int RootSystem::norm(const RootVector& r) const {
  int s = 0;
  for (int i = 0; i < rank(); ++i)
    for (int j = 0; j < rank(); ++j) s += r.coords[i] * gram[i][j] * r.coords[j];
  return s;
}

int RootSystem::coxeter_number() const {
  int h = 1;
  for (int m : marks) h += m;
  return h;
}

namespace {

RootSystem build_roots(const SimpleType& t) {
  RootSystem rs;
  rs.simple_type = t;
  rs.gram = gram_matrix(t);
  rs.cartan = cartan_from_gram(rs.gram);
  const int n = t.rank;

  std::vector<RootVector> roots;
  for (int i = 0; i < n; ++i) {
    RootVector r{std::vector<int>(n, 0)};
    r.coords[i] = 1;
    roots.push_back(std::move(r));
  }
  while (true) {
    auto next = closure_step(rs.cartan, roots);
    if (next.size() == roots.size()) break;
    roots = std::move(next);
  }
  std::sort(roots.begin(), roots.end(), [](const RootVector& a, const RootVector& b) {
    const int ha = a.height(), hb = b.height();
    return ha != hb ? ha < hb : a < b;
  });
  rs.positive_roots = std::move(roots);

  rs.highest_root = rs.positive_roots.back();
  for (const auto& r : rs.positive_roots)
    for (int i = 0; i < n; ++i)
      if (r.coords[i] > rs.highest_root.coords[i])
        throw std::logic_error("highest root is not dominant for " + t.str());
  rs.marks = rs.highest_root.coords;

  std::vector<int> lens(n);
  for (int i = 0; i < n; ++i) lens[i] = rs.gram[i][i];
  const int long_len = max_entry(lens);
  for (int i = 0; i < n; ++i) {
    rs.root_lengths.push_back(Ratio::make(2 * lens[i], long_len));
    const int scaled = lens[i] * rs.marks[i];
    if (scaled % long_len != 0) throw std::logic_error("non-integral comark for " + t.str());
    rs.comarks.push_back(scaled / long_len);
  }
  return rs;
}

}  // namespace

namespace {

// Root systems are immutable per type, so the closure is computed once.
const RootSystem& cached_roots(const SimpleType& t) {
  validate(t);
  static std::mutex mu;
  static std::map<std::pair<Family, int>, RootSystem> cache;
  const std::lock_guard<std::mutex> lock(mu);
  const auto key = std::make_pair(t.family, t.rank);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, build_roots(t)).first;
  return it->second;
}

}  // namespace

RootSystem generate_roots(const SimpleType& t) { return cached_roots(t); }

int num_positive_roots(const SimpleType& t) { return cached_roots(t).num_positive_roots(); }

GroupInvariants group_invariants(const SemisimpleType& t, int central_torus) {
  if (central_torus < 0) throw std::invalid_argument("central torus dimension must be >= 0");
  GroupInvariants g;
  g.central_torus = central_torus;
  for (const auto& c : t.components()) {
    g.rank += c.rank;
    g.num_pos_roots += num_positive_roots(c);
  }
  g.dim = g.rank + central_torus + 2 * g.num_pos_roots;
  return g;
}

}  // namespace homrat
