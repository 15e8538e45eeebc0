#pragma once

// Extended Dynkin diagrams and the Borel-de Siebenthal enumeration of
// connected subgroups of maximal rank.
//
// A maximal-rank subgroup is described by a chain of moves starting from
// the ambient group. Each move acts on one simple component ("slot") of the
// current semisimple part:
//   - SemisimpleRemove deletes a node of prime mark from the extended
//     diagram of that component (torus unchanged),
//   - LeviRemove deletes a node from its ordinary diagram (torus + 1).
// Slots are ordered canonically by (type, lineage), where the lineage of a
// slot is the list of indices leading to it from the ambient factors. This
// makes slot indices, factor splitting and descent into the first move's
// result deterministic.

#include <optional>
#include <string>
#include <vector>

#include "homrat/rootsys.hpp"

namespace homrat {

struct DiagramEdge {
  int a = 0;
  int b = 0;
  int multiplicity = 1;  // max |Cartan entry| across the bond
};

struct ExtendedDiagram {
  SimpleType base;
  IntMatrix gram;    // (rank+1)^2, node 0 is -highest root
  IntMatrix cartan;  // derived from gram
  std::vector<int> marks_ext;
  std::vector<DiagramEdge> edges;

  int num_nodes() const { return static_cast<int>(marks_ext.size()); }
};

ExtendedDiagram extended_diagram(const SimpleType& t);

/// Identify the semisimple type of the subdiagram of `gram` on `nodes`
/// (connected components matched against the catalog up to relabelling).
SemisimpleType recognize_diagram(const IntMatrix& gram, const std::vector<int>& nodes);

enum class MoveKind { SemisimpleRemove, LeviRemove };

std::string to_string(MoveKind k);  // "ss" / "levi"

struct BdsMove {
  MoveKind kind = MoveKind::LeviRemove;
  int component = 0;  // slot index in the semisimple part before the move
  SimpleType acts_on;
  int node = 1;  // Bourbaki index, 1-based
  SemisimpleType result;
  int torus_delta = 0;
  std::optional<int> comark_at_node;  // SemisimpleRemove only

  friend bool operator==(const BdsMove&, const BdsMove&) = default;
};

/// SemisimpleRemove moves at every node whose extended mark is prime.
std::vector<BdsMove> semisimple_moves(const SimpleType& t);

/// LeviRemove moves at every ordinary node.
std::vector<BdsMove> levi_moves(const SimpleType& t);

class MaxRankSubgroup {
 public:
  MaxRankSubgroup() = default;

  /// H = G.
  static MaxRankSubgroup identity(const SemisimpleType& ambient);

  /// Applies (kind, node) to slot `component`; throws std::invalid_argument
  /// when the slot or node does not exist or the node admits no such move.
  MaxRankSubgroup apply(MoveKind kind, int node, int component = 0) const;

  /// Replays `chain` from `ambient`, checking every recorded move.
  static MaxRankSubgroup from_chain(const SemisimpleType& ambient, const std::vector<BdsMove>& chain);

  const SemisimpleType& ambient() const { return ambient_; }
  const SemisimpleType& semisimple_part() const { return semisimple_part_; }
  int central_torus() const { return central_torus_; }
  const std::vector<BdsMove>& chain() const { return chain_; }

  /// True iff every SemisimpleRemove in the chain has comark 1.
  bool simply_connected_cover_splits() const;

  /// Per ambient factor (canonical order): the subgroup restricted to it.
  std::vector<MaxRankSubgroup> split_by_factor() const;

  /// The same subgroup seen inside the result of the first move (whose
  /// ambient must be simple and chain non-empty).
  MaxRankSubgroup descend() const;

  friend bool operator==(const MaxRankSubgroup& a, const MaxRankSubgroup& b) {
    return a.ambient_ == b.ambient_ && a.chain_ == b.chain_;
  }

 private:
  struct Slot {
    SimpleType type;
    std::vector<int> lineage;
  };
  static void sort_slots(std::vector<Slot>& slots);
  std::vector<Slot> initial_slots() const;
  std::vector<std::vector<Slot>> replay() const;  // slot lists before each move and at the end

  SemisimpleType ambient_;
  std::vector<BdsMove> chain_;
  SemisimpleType semisimple_part_;
  int central_torus_ = 0;
};

/// Breadth-first closure of both move kinds up to `depth` steps, deduplicated
/// by (semisimple part, central torus), one witness chain per entry, sorted
/// by semisimple part then torus. H = G is not listed.
std::vector<MaxRankSubgroup> enumerate_maximal_rank(const SemisimpleType& t, int depth);
std::vector<MaxRankSubgroup> enumerate_maximal_rank(const SemisimpleType& t);  // depth = rank

/// For a simple ambient: a chain whose first move is a LeviRemove reaching
/// the same (semisimple part, torus) as `h`. Returns `h` itself when its
/// chain already starts with a Levi move.
std::optional<MaxRankSubgroup> levi_first_witness(const MaxRankSubgroup& h);

}  // namespace homrat
