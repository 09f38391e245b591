#ifndef MTSPACE_FAMILY_HPP
#define MTSPACE_FAMILY_HPP

#include <string>
#include <vector>

#include "mtspace/box.hpp"
#include "mtspace/normalform.hpp"
#include "mtspace/sentence.hpp"
#include "mtspace/signature.hpp"
#include "mtspace/theory.hpp"

namespace mts {

/// A family of theories: a finite union of boxes over one signature. Empty
/// boxes are dropped on construction; duplicate or overlapping boxes are
/// allowed in the representation, the denotation is the set union.
class Family {
public:
  explicit Family(Signature sig, std::vector<Box> boxes = {});

  const Signature& sig() const { return sig_; }
  const std::vector<Box>& boxes() const { return boxes_; }
  bool is_empty_family() const { return boxes_.empty(); }

  bool contains(const TheoryVector& t) const;

  /// Exact count of distinct member theories.
  CardCount cardinality() const;

  /// All distinct members whose finite cells are at most `bound` (infinite
  /// cells included as such), in ascending vector order.
  std::vector<TheoryVector> enumerate_members(std::uint64_t bound) const;

private:
  Signature sig_;
  std::vector<Box> boxes_;
};

/// The sub-family of members containing the sentence, computed through the
/// counting normal form of s.
Family neighborhood(const Family& f, const Sentence& s,
                    std::uint64_t budget = default_qe_budget());

/// Exact count of distinct theories in neighborhood(f, s).
CardCount neighborhood_count(const Family& f, const Sentence& s,
                             std::uint64_t budget = default_qe_budget());

/// cardinality(), under its neighbourhood-counting name.
CardCount family_cardinality(const Family& f);

Family family_union(const Family& a, const Family& b);
Family family_intersect(const Family& a, const Family& b);
Family family_difference(const Family& a, const Family& b);
Family intersect_with_box(const Family& f, const Box& box);

/// a ⊆ b as denoted sets; on failure reports a member of a outside b.
SubsetResult family_subset(const Family& a, const Family& b);
bool family_equal_sets(const Family& a, const Family& b);

/// Pairwise grid-disjoint boxes with the same union.
std::vector<Box> disjoint_boxes(const std::vector<Box>& boxes);

/// Converts a normal form into boxes denoting exactly its satisfying
/// vectors.
std::vector<Box> normal_form_boxes(const NormalForm& nf);

/// The family of all finite-model theories over sig (every cell ranges over
/// all naturals, no infinity flags).
Family all_finite_model_theories(const Signature& sig);

/// Family file format: `signature P Q`, then `box` blocks of
/// `cell <pattern> = <value set>` lines; `#` comments; omitted cells
/// default to 0.
Family parse_family_file(const std::string& text);
std::string print_family_file(const Family& f);

} // namespace mts

#endif
