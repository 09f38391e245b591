#ifndef MTSPACE_BOX_HPP
#define MTSPACE_BOX_HPP

#include <optional>
#include <vector>

#include "mtspace/signature.hpp"
#include "mtspace/theory.hpp"
#include "mtspace/valueset.hpp"

namespace mts {

/// A product of per-cell value sets. It denotes the set of theory vectors
/// whose cell values lie in the respective sets, minus the all-zero vector
/// (structures are nonempty).
class Box {
public:
  Box(Signature sig, std::vector<ValueSet> cells);

  static Box whole_space(const Signature& sig);
  static Box singleton(const TheoryVector& t);
  /// The constraint box of the basic sentence at level n: cells below n
  /// pinned exactly, the rest "at least n" (infinity admitted).
  static Box basic(const TheoryVector& t, std::uint64_t n);

  const Signature& sig() const { return sig_; }
  const std::vector<ValueSet>& cells() const { return cells_; }
  const ValueSet& cell(CellIndex c) const { return cells_[c]; }

  bool contains(const TheoryVector& t) const;
  bool is_empty() const;
  CardCount cardinality() const;

  Box intersect(const Box& o) const;
  /// Disjoint boxes covering exactly this minus o.
  std::vector<Box> minus(const Box& o) const;
  /// Replaces one cell's value set.
  Box with_cell(CellIndex c, ValueSet vs) const;

  /// Some member, when nonempty.
  std::optional<TheoryVector> some_member() const;

  std::uint64_t stabilization_component() const;

  friend bool operator==(const Box&, const Box&) = default;

private:
  Signature sig_;
  std::vector<ValueSet> cells_;
};

struct SubsetResult {
  bool subset = false;
  std::optional<TheoryVector> counterexample; // a member of b outside the cover
};

/// Decides b ⊆ union(cover) exactly, by recursive splitting; on failure
/// produces a concrete member of b not covered.
SubsetResult boxes_subset(const Box& b, const std::vector<Box>& cover);

} // namespace mts

#endif
