#ifndef MTSPACE_STRUCTURE_HPP
#define MTSPACE_STRUCTURE_HPP

#include <cstddef>
#include <vector>

#include "mtspace/sentence.hpp"
#include "mtspace/signature.hpp"
#include "mtspace/theory.hpp"

namespace mts {

/// A finite structure for a monadic signature: a nonempty universe
/// {0, ..., size-1} and, for each predicate, the subset where it holds.
class FiniteStructure {
public:
  /// `membership[j]` lists the elements satisfying predicate j.
  FiniteStructure(Signature sig, std::size_t universe_size,
                  std::vector<std::vector<std::size_t>> membership);

  /// Deterministic layout: elements of cell 0 first, then cell 1, etc.
  static FiniteStructure from_cell_counts(const Signature& sig,
                                          const std::vector<std::size_t>& counts);

  const Signature& sig() const { return sig_; }
  std::size_t size() const { return size_; }
  bool holds(std::size_t pred, std::size_t element) const { return membership_[pred][element]; }

  /// Cell of an element (bit j = sign of predicate j).
  CellIndex cell_of(std::size_t element) const;

private:
  Signature sig_;
  std::size_t size_;
  std::vector<std::vector<bool>> membership_;
};

/// Tarski satisfaction. The sentence must be closed and its predicates must
/// belong to m's signature.
bool model_check(const FiniteStructure& m, const Sentence& s);

/// The complete theory of a finite structure: its cell-count vector.
TheoryVector theory_of_structure(const FiniteStructure& m);

/// A structure whose cell c has min(t(c), cap) elements (cap elements when
/// t(c) is infinite). For any sentence of quantifier rank r and cap >= r the
/// verdict of model_check matches membership of the sentence in t.
FiniteStructure realize(const TheoryVector& t, unsigned cap);

} // namespace mts

#endif
