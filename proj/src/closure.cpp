#include "mtspace/closure.hpp"

#include <algorithm>

#include "mtspace/errors.hpp"

namespace mts {

std::uint64_t stabilization_bound(const Family& f, const TheoryVector* t) {
  std::uint64_t m = 0;
  for (const Box& b : f.boxes()) m = std::max(m, b.stabilization_component());
  if (t) m = std::max(m, t->max_finite_value());
  return m + 1;
}

bool is_accumulation_point(const Family& f, const TheoryVector& t) {
  if (t.sig() != f.sig())
    throw SignatureError("family and theory vector have different signatures");
  std::uint64_t n = stabilization_bound(f, &t);
  return intersect_with_box(f, Box::basic(t, n)).cardinality().is_infinite();
}

Family accumulation_points(const Family& f) {
  std::vector<Box> acc;
  for (const Box& b : f.boxes()) {
    for (CellIndex c = 0; c < b.cells().size(); ++c) {
      if (!b.cell(c).nats_infinite()) continue;
      std::vector<ValueSet> cells;
      cells.reserve(b.cells().size());
      for (CellIndex d = 0; d < b.cells().size(); ++d) {
        if (d == c) cells.push_back(ValueSet::inf_only());
        else cells.push_back(b.cell(d).limit_closure());
      }
      acc.emplace_back(f.sig(), std::move(cells));
    }
  }
  return Family(f.sig(), std::move(acc));
}

Family closure(const Family& f) { return family_union(f, accumulation_points(f)); }

Family new_accumulation_points(const Family& f) {
  return family_difference(accumulation_points(f), f);
}

bool is_e_closed(const Family& f) {
  return family_subset(accumulation_points(f), f).subset;
}

bool is_approximated_by(const TheoryVector& t, const Family& f) {
  return !f.contains(t) && is_accumulation_point(f, t);
}

CardCount e_spectrum(const Family& f) { return new_accumulation_points(f).cardinality(); }

} // namespace mts
