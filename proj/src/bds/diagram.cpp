#include <algorithm>
#include <cstdlib>
#include <functional>
#include <numeric>

#include "homrat/bds.hpp"

namespace homrat {

std::string to_string(MoveKind k) { return k == MoveKind::SemisimpleRemove ? "ss" : "levi"; }

ExtendedDiagram extended_diagram(const SimpleType& t) {
  const RootSystem rs = generate_roots(t);
  const int n = t.rank;
  ExtendedDiagram d;
  d.base = t;
  d.gram.assign(n + 1, std::vector<int>(n + 1, 0));
  int long_len = 0;
  for (int i = 0; i < n; ++i) long_len = std::max(long_len, rs.gram[i][i]);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) d.gram[i + 1][j + 1] = rs.gram[i][j];
  // Node 0 is -a0; its pairing with a_i is -(a0, a_i).
  d.gram[0][0] = long_len;
  for (int i = 0; i < n; ++i) {
    int s = 0;
    for (int j = 0; j < n; ++j) s += rs.marks[j] * rs.gram[j][i];
    d.gram[0][i + 1] = d.gram[i + 1][0] = -s;
  }
  d.cartan = cartan_from_gram(d.gram);
  d.marks_ext.push_back(1);
  d.marks_ext.insert(d.marks_ext.end(), rs.marks.begin(), rs.marks.end());
  for (int a = 0; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b)
      if (d.gram[a][b] != 0)
        d.edges.push_back({a, b, std::max(std::abs(d.cartan[a][b]), std::abs(d.cartan[b][a]))});
  return d;
}

namespace {

IntMatrix submatrix(const IntMatrix& m, const std::vector<int>& idx) {
  IntMatrix out(idx.size(), std::vector<int>(idx.size()));
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = 0; j < idx.size(); ++j) out[i][j] = m[idx[i]][idx[j]];
  return out;
}

std::vector<SimpleType> candidates_of_rank(int r) {
  std::vector<SimpleType> c{{Family::A, r}};
  if (r >= 2) c.push_back({Family::C, r});
  if (r >= 3) c.push_back({Family::B, r});
  if (r >= 4) c.push_back({Family::D, r});
  if (r >= 6 && r <= 8) c.push_back({Family::E, r});
  if (r == 4) c.push_back({Family::F, 4});
  if (r == 2) c.push_back({Family::G, 2});
  return c;
}

// Is there a relabelling p with model[i][j] == target[p(i)][p(j)]?
bool same_cartan(const IntMatrix& model, const IntMatrix& target) {
  const int n = static_cast<int>(model.size());
  if (static_cast<int>(target.size()) != n) return false;

  // Visit model nodes in BFS order so each node after the first has an
  // already-mapped neighbour; candidates are then neighbours of its image.
  std::vector<int> order, parent(n, -1);
  std::vector<bool> seen(n, false);
  for (int root = 0; root < n; ++root) {
    if (seen[root]) continue;
    seen[root] = true;
    order.push_back(root);
    for (std::size_t h = order.size() - 1; h < order.size(); ++h)
      for (int v = 0; v < n; ++v)
        if (!seen[v] && model[order[h]][v] != 0) {
          seen[v] = true;
          parent[v] = order[h];
          order.push_back(v);
        }
  }

  std::vector<int> image(n, -1);
  std::vector<bool> used(n, false);
  std::function<bool(int)> place = [&](int k) -> bool {
    if (k == n) return true;
    const int v = order[k];
    for (int w = 0; w < n; ++w) {
      if (used[w]) continue;
      if (parent[v] >= 0 && target[image[parent[v]]][w] == 0) continue;
      bool ok = true;
      for (int prev = 0; prev < k && ok; ++prev) {
        const int u = order[prev];
        ok = model[u][v] == target[image[u]][w] && model[v][u] == target[w][image[u]];
      }
      if (!ok) continue;
      image[v] = w;
      used[w] = true;
      if (place(k + 1)) return true;
      used[w] = false;
    }
    return false;
  };
  return place(0);
}

}  // namespace

SemisimpleType recognize_diagram(const IntMatrix& gram, const std::vector<int>& nodes) {
  std::vector<SimpleType> found;
  std::vector<bool> done(nodes.size(), false);
  for (std::size_t s = 0; s < nodes.size(); ++s) {
    if (done[s]) continue;
    std::vector<int> comp{nodes[s]};
    done[s] = true;
    for (std::size_t h = 0; h < comp.size(); ++h)
      for (std::size_t t = 0; t < nodes.size(); ++t)
        if (!done[t] && gram[comp[h]][nodes[t]] != 0) {
          done[t] = true;
          comp.push_back(nodes[t]);
        }
    const IntMatrix cartan = cartan_from_gram(submatrix(gram, comp));
    const int r = static_cast<int>(comp.size());
    bool matched = false;
    for (const auto& cand : candidates_of_rank(r)) {
      if (same_cartan(cartan_matrix(cand), cartan)) {
        found.push_back(cand);
        matched = true;
        break;
      }
    }
    if (!matched) throw std::logic_error("unrecognized diagram component of rank " + std::to_string(r));
  }
  return SemisimpleType(std::move(found));
}

std::vector<BdsMove> semisimple_moves(const SimpleType& t) {
  const ExtendedDiagram d = extended_diagram(t);
  const RootSystem rs = generate_roots(t);
  std::vector<BdsMove> moves;
  for (int i = 1; i < d.num_nodes(); ++i) {
    if (!is_prime(d.marks_ext[i])) continue;
    std::vector<int> rest;
    for (int j = 0; j < d.num_nodes(); ++j)
      if (j != i) rest.push_back(j);
    BdsMove m;
    m.kind = MoveKind::SemisimpleRemove;
    m.acts_on = t;
    m.node = i;
    m.result = recognize_diagram(d.gram, rest);
    m.torus_delta = 0;
    m.comark_at_node = rs.comarks[i - 1];
    moves.push_back(std::move(m));
  }
  return moves;
}

std::vector<BdsMove> levi_moves(const SimpleType& t) {
  const IntMatrix g = gram_matrix(t);
  std::vector<BdsMove> moves;
  for (int i = 0; i < t.rank; ++i) {
    std::vector<int> rest;
    for (int j = 0; j < t.rank; ++j)
      if (j != i) rest.push_back(j);
    BdsMove m;
    m.kind = MoveKind::LeviRemove;
    m.acts_on = t;
    m.node = i + 1;
    m.result = recognize_diagram(g, rest);
    m.torus_delta = 1;
    moves.push_back(std::move(m));
  }
  return moves;
}

}  // namespace homrat
