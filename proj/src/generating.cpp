#include "mtspace/generating.hpp"

#include <algorithm>

#include "mtspace/errors.hpp"
#include "mtspace/normalform.hpp"

namespace mts {

Family isolated_points(const Family& f) {
  return family_difference(f, accumulation_points(f));
}

bool is_isolated_point(const Family& f, const TheoryVector& t) {
  if (!f.contains(t)) return false;
  std::uint64_t n = stabilization_bound(f, &t);
  return intersect_with_box(f, Box::basic(t, n)).cardinality() == CardCount::fin(1);
}

bool is_generating(const Family& sub, const Family& whole) {
  if (sub.sig() != whole.sig())
    throw SignatureError("families over different signatures");
  SubsetResult inc = family_subset(sub, whole);
  if (!inc.subset)
    throw PreconditionError("is_generating: sub is not a subfamily of whole (member " +
                            inc.counterexample->to_string() + " is outside)");
  if (!is_e_closed(whole)) throw PreconditionError("is_generating: whole is not E-closed");
  return family_equal_sets(closure(sub), whole);
}

std::optional<Family> least_generating_set(const Family& f) {
  if (!is_e_closed(f)) throw PreconditionError("least_generating_set: family is not E-closed");
  Family candidate = isolated_points(f);
  if (is_generating(candidate, f)) return candidate;
  return std::nullopt;
}

Witnessed is_relatively_finitely_axiomatizable(const TheoryVector& t, const Family& f) {
  if (!f.contains(t))
    throw PreconditionError("theory " + t.to_string() + " is not a member of the family");
  if (!is_isolated_point(f, t)) return {false, std::nullopt};
  return {true, basic_sentence(t, stabilization_bound(f, &t))};
}

std::optional<Sentence> t_complete_sentence(const TheoryVector& t, const Family& f) {
  Witnessed w = is_relatively_finitely_axiomatizable(t, f);
  return w.witness;
}

std::pair<Signature, Family> expand_with_markers(const Family& f) {
  CardCount count = f.cardinality();
  if (!count.is_finite())
    throw PreconditionError("expand_with_markers requires a finite, explicit family");
  std::uint64_t bound = stabilization_bound(f);
  std::vector<TheoryVector> members = f.enumerate_members(bound);

  // fresh marker names M1..Mm, extending the prefix on collision
  std::string prefix = "M";
  auto collides = [&](const std::string& p) {
    for (std::size_t i = 1; i <= members.size(); ++i)
      if (f.sig().has_symbol(p + std::to_string(i))) return true;
    return false;
  };
  while (collides(prefix)) prefix += "M";

  std::vector<std::string> symbols = f.sig().symbols();
  for (std::size_t i = 1; i <= members.size(); ++i) symbols.push_back(prefix + std::to_string(i));
  Signature extended(std::move(symbols));

  const std::size_t base = f.sig().size();
  std::vector<Box> boxes;
  for (std::size_t i = 0; i < members.size(); ++i) {
    // member i lives in the cells where marker i holds and the others fail
    std::vector<Card> cards(extended.cell_count(), Card::fin(0));
    for (CellIndex c = 0; c < members[i].cell_count(); ++c) {
      CellIndex lifted = c | (CellIndex{1} << (base + i));
      cards[lifted] = members[i].at(c);
    }
    boxes.push_back(Box::singleton(TheoryVector(extended, std::move(cards))));
  }
  return {extended, Family(extended, std::move(boxes))};
}

} // namespace mts
