#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <utility>

#include "homrat/bds.hpp"

namespace homrat {

namespace {

std::vector<BdsMove> moves_of(const SimpleType& t, MoveKind kind) {
  return kind == MoveKind::SemisimpleRemove ? semisimple_moves(t) : levi_moves(t);
}

}  // namespace

void MaxRankSubgroup::sort_slots(std::vector<Slot>& slots) {
  std::sort(slots.begin(), slots.end(), [](const Slot& a, const Slot& b) {
    if (a.type != b.type) return canonical_less(a.type, b.type);
    return a.lineage < b.lineage;
  });
}

std::vector<MaxRankSubgroup::Slot> MaxRankSubgroup::initial_slots() const {
  std::vector<Slot> slots;
  const auto& comps = ambient_.components();
  for (std::size_t i = 0; i < comps.size(); ++i) slots.push_back({comps[i], {static_cast<int>(i)}});
  return slots;
}

std::vector<std::vector<MaxRankSubgroup::Slot>> MaxRankSubgroup::replay() const {
  std::vector<std::vector<Slot>> history{initial_slots()};
  for (const auto& m : chain_) {
    std::vector<Slot> slots = history.back();
    if (m.component < 0 || m.component >= static_cast<int>(slots.size()) ||
        slots[m.component].type != m.acts_on)
      throw std::invalid_argument("move " + to_string(m.kind) + ":" + std::to_string(m.node) +
                                  " does not match component " + std::to_string(m.component));
    const Slot acted = slots[m.component];
    slots.erase(slots.begin() + m.component);
    const auto& parts = m.result.components();
    for (std::size_t j = 0; j < parts.size(); ++j) {
      Slot s{parts[j], acted.lineage};
      s.lineage.push_back(static_cast<int>(j));
      slots.push_back(std::move(s));
    }
    sort_slots(slots);
    history.push_back(std::move(slots));
  }
  return history;
}

MaxRankSubgroup MaxRankSubgroup::identity(const SemisimpleType& ambient) {
  MaxRankSubgroup h;
  h.ambient_ = ambient;
  h.semisimple_part_ = ambient;
  return h;
}

MaxRankSubgroup MaxRankSubgroup::from_chain(const SemisimpleType& ambient,
                                            const std::vector<BdsMove>& chain) {
  MaxRankSubgroup h = identity(ambient);
  for (const auto& m : chain) {
    h = h.apply(m.kind, m.node, m.component);
    if (!(h.chain_.back() == m))
      throw std::invalid_argument("recorded move " + to_string(m.kind) + ":" +
                                  std::to_string(m.node) + " on " + m.acts_on.str() +
                                  " disagrees with the diagram");
  }
  return h;
}

MaxRankSubgroup MaxRankSubgroup::apply(MoveKind kind, int node, int component) const {
  const auto slots = replay().back();
  if (component < 0 || component >= static_cast<int>(slots.size()))
    throw std::invalid_argument("no component " + std::to_string(component) + " in " +
                                semisimple_part_.str());
  const SimpleType target = slots[component].type;
  for (auto m : moves_of(target, kind)) {
    if (m.node != node) continue;
    m.component = component;
    MaxRankSubgroup next = *this;
    next.chain_.push_back(m);
    std::vector<SimpleType> types;
    const auto history = next.replay();
    for (const auto& s : history.back()) types.push_back(s.type);
    next.semisimple_part_ = SemisimpleType(std::move(types));
    next.central_torus_ = central_torus_ + m.torus_delta;
    return next;
  }
  throw std::invalid_argument("no " + to_string(kind) + " move at node " + std::to_string(node) +
                              " of " + target.str());
}

bool MaxRankSubgroup::simply_connected_cover_splits() const {
  return std::all_of(chain_.begin(), chain_.end(), [](const BdsMove& m) {
    return m.kind != MoveKind::SemisimpleRemove || m.comark_at_node.value_or(1) == 1;
  });
}

std::vector<MaxRankSubgroup> MaxRankSubgroup::split_by_factor() const {
  const auto history = replay();
  const auto& comps = ambient_.components();
  std::vector<std::vector<BdsMove>> chains(comps.size());
  for (std::size_t k = 0; k < chain_.size(); ++k) {
    const auto& slots = history[k];
    const int factor = slots[chain_[k].component].lineage.front();
    int local = 0;
    for (int s = 0; s < chain_[k].component; ++s)
      if (slots[s].lineage.front() == factor) ++local;
    BdsMove m = chain_[k];
    m.component = local;
    chains[factor].push_back(std::move(m));
  }
  std::vector<MaxRankSubgroup> out;
  for (std::size_t i = 0; i < comps.size(); ++i)
    out.push_back(from_chain(SemisimpleType({comps[i]}), chains[i]));
  return out;
}

MaxRankSubgroup MaxRankSubgroup::descend() const {
  if (ambient_.size() != 1 || chain_.empty())
    throw std::logic_error("descend needs a simple ambient group and a non-empty chain");
  std::vector<BdsMove> rest(chain_.begin() + 1, chain_.end());
  return from_chain(chain_.front().result, rest);
}

std::vector<MaxRankSubgroup> enumerate_maximal_rank(const SemisimpleType& t, int depth) {
  if (depth < 1) throw std::invalid_argument("depth must be >= 1");
  using Key = std::pair<SemisimpleType, int>;
  std::map<Key, MaxRankSubgroup> found;
  std::set<Key> seen{{t, 0}};
  std::vector<MaxRankSubgroup> frontier{MaxRankSubgroup::identity(t)};

  for (int level = 0; level < depth && !frontier.empty(); ++level) {
    std::vector<MaxRankSubgroup> next;
    for (const auto& h : frontier) {
      const auto& comps = h.semisimple_part().components();
      for (std::size_t slot = 0; slot < comps.size(); ++slot) {
        for (auto kind : {MoveKind::SemisimpleRemove, MoveKind::LeviRemove}) {
          for (const auto& m : moves_of(comps[slot], kind)) {
            MaxRankSubgroup child = h.apply(kind, m.node, static_cast<int>(slot));
            Key key{child.semisimple_part(), child.central_torus()};
            if (!seen.insert(key).second) continue;
            found.emplace(key, child);
            next.push_back(std::move(child));
          }
        }
      }
    }
    frontier = std::move(next);
  }

  std::vector<MaxRankSubgroup> out;
  out.reserve(found.size());
  for (auto& [key, h] : found) out.push_back(std::move(h));
  return out;
}

std::vector<MaxRankSubgroup> enumerate_maximal_rank(const SemisimpleType& t) {
  return enumerate_maximal_rank(t, std::max(1, t.rank()));
}

std::optional<MaxRankSubgroup> levi_first_witness(const MaxRankSubgroup& h) {
  if (h.ambient().size() != 1 || h.chain().empty()) return std::nullopt;
  if (h.chain().front().kind == MoveKind::LeviRemove) return h;
  if (h.central_torus() < 1) return std::nullopt;

  const SimpleType g = h.ambient().components().front();
  for (const auto& m : levi_moves(g)) {
    const SemisimpleType& levi = m.result;
    const int torus_in_levi = h.central_torus() - 1;
    std::vector<BdsMove> lifted{m};
    if (levi == h.semisimple_part() && torus_in_levi == 0) {
      return MaxRankSubgroup::from_chain(h.ambient(), lifted);
    }
    if (levi.empty()) continue;
    for (const auto& cand : enumerate_maximal_rank(levi, 2 * levi.rank())) {
      if (cand.semisimple_part() == h.semisimple_part() && cand.central_torus() == torus_in_levi) {
        lifted.insert(lifted.end(), cand.chain().begin(), cand.chain().end());
        return MaxRankSubgroup::from_chain(h.ambient(), lifted);
      }
    }
  }
  return std::nullopt;
}

}  // namespace homrat
