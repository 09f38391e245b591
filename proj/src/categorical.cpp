#include "mtspace/categorical.hpp"

#include <algorithm>
#include <numeric>

#include "mtspace/errors.hpp"
#include "mtspace/normalform.hpp"

namespace mts {

namespace {

Box cell_at_least_box(const Signature& sig, CellIndex c, std::uint64_t m) {
  return Box::whole_space(sig).with_cell(c, ValueSet::ray(m).with_inf(true));
}

Box cell_exactly_box(const Signature& sig, CellIndex c, std::uint64_t v) {
  return Box::whole_space(sig).with_cell(c, ValueSet::single(v));
}

std::uint64_t cell_period_lcm(const Family& f, CellIndex c) {
  std::uint64_t l = 1;
  for (const Box& b : f.boxes()) {
    std::uint64_t d = std::max<std::uint64_t>(b.cell(c).period(), 1);
    l = std::lcm(l, d);
    if (l > 100'000) throw BudgetError("cell periods too large for the greedy construction");
  }
  return l;
}

} // namespace

TheoryVector build_accumulation_point(const Family& f, TieBreak tie_break) {
  if (!f.cardinality().is_infinite())
    throw PreconditionError("build_accumulation_point requires an infinite family");

  Family g = f;
  std::vector<Card> result(f.sig().cell_count(), Card::fin(0));
  for (CellIndex c = 0; c < f.sig().cell_count(); ++c) {
    const std::uint64_t scan_stop = stabilization_bound(g) + cell_period_lcm(g, c) + 1;
    std::uint64_t v = 0;
    bool infinite_cell = false;
    for (;;) {
      const std::uint64_t m = v + 1;
      Family g_pos = intersect_with_box(g, cell_at_least_box(g.sig(), c, m));
      Family g_neg = intersect_with_box(g, cell_exactly_box(g.sig(), c, m - 1));
      bool pos_inf = g_pos.cardinality().is_infinite();
      bool neg_inf = g_neg.cardinality().is_infinite();
      bool take_positive =
          pos_inf && (!neg_inf || tie_break == TieBreak::PreferPositive);
      if (take_positive) {
        g = std::move(g_pos);
        v = m;
        if (v > scan_stop) { // the positive side stays infinite forever
          infinite_cell = true;
          break;
        }
      } else if (neg_inf) {
        g = std::move(g_neg);
        break;
      } else {
        throw Error("internal: infinite family split into two finite sides");
      }
    }
    result[c] = infinite_cell ? Card::inf() : Card::fin(v);
  }
  return TheoryVector(f.sig(), std::move(result));
}

std::optional<ApproximatingSubfamily> approximating_subfamily(const Family& f) {
  if (!f.cardinality().is_infinite()) return std::nullopt;
  TheoryVector point = build_accumulation_point(f, TieBreak::PreferPositive);
  Family family = f.contains(point)
                      ? family_difference(f, Family(f.sig(), {Box::singleton(point)}))
                      : f;
  return ApproximatingSubfamily{std::move(family), std::move(point)};
}

bool is_e_categorical(const Family& f) {
  if (!f.cardinality().is_infinite()) return false;
  return accumulation_points(f).cardinality() == CardCount::fin(1);
}

bool is_e_minimal(const Family& f) { return is_e_categorical(f); }

EMinimalCheck check_e_minimal_direct(const Family& f) {
  const std::uint64_t stop = stabilization_bound(f);
  for (CellIndex c = 0; c < f.sig().cell_count(); ++c) {
    for (std::uint64_t m = 1; m <= stop; ++m) {
      Family pos = intersect_with_box(f, cell_at_least_box(f.sig(), c, m));
      Family neg = family_difference(f, pos);
      if (pos.cardinality().is_infinite() && neg.cardinality().is_infinite())
        return {false, cell_at_least(f.sig(), c, m)};
    }
  }
  return {true, std::nullopt};
}

std::vector<Family> partition_e_categorical(const Family& f) {
  if (!is_e_closed(f))
    throw PreconditionError("partition_e_categorical requires an E-closed family");
  Family acc = accumulation_points(f);
  CardCount count = acc.cardinality();
  if (!count.is_finite() || count.value() == 0)
    throw PreconditionError("partition_e_categorical requires finitely many (and at least one) "
                            "accumulation points, got " + count.to_string());

  std::vector<TheoryVector> points = acc.enumerate_members(stabilization_bound(acc));
  std::uint64_t level = 1;
  for (const TheoryVector& t : points) level = std::max(level, t.max_finite_value() + 1);

  std::vector<Family> parts;
  parts.reserve(points.size());
  for (const TheoryVector& t : points)
    parts.push_back(intersect_with_box(f, Box::basic(t, level)));

  Family rest = f;
  for (const Family& part : parts) rest = family_difference(rest, part);
  parts[0] = family_union(parts[0], rest);
  return parts;
}

std::optional<std::vector<Sentence>> spectrum_witnesses(const Family& f, std::uint64_t k) {
  if (k == 0) return std::vector<Sentence>{};
  Family acc = accumulation_points(f);
  CardCount count = acc.cardinality();
  if (count.is_finite() && count.value() < k) return std::nullopt;

  std::uint64_t max_period = 1;
  for (const Box& b : acc.boxes())
    for (const ValueSet& vs : b.cells())
      max_period = std::max<std::uint64_t>(max_period, vs.period());
  std::uint64_t bound = stabilization_bound(acc) + k * max_period;
  std::vector<TheoryVector> points = acc.enumerate_members(bound);
  points.resize(std::min<std::size_t>(points.size(), k));
  if (points.size() < k) return std::nullopt; // cannot happen for infinite acc

  std::uint64_t level = 1;
  for (const TheoryVector& t : points) level = std::max(level, t.max_finite_value() + 1);
  std::vector<Sentence> witnesses;
  witnesses.reserve(points.size());
  for (const TheoryVector& t : points) witnesses.push_back(basic_sentence(t, level));
  return witnesses;
}

} // namespace mts
