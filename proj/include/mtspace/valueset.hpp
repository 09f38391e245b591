#ifndef MTSPACE_VALUESET_HPP
#define MTSPACE_VALUESET_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mtspace/card.hpp"

namespace mts {

/// An ultimately periodic subset of the naturals plus an infinity flag:
/// an explicit finite part below a threshold, and from the threshold on a
/// set of residues modulo a period. These are the one-dimensional semilinear
/// sets; they are closed under union, intersection and complement (within
/// the naturals plus infinity), and the representation is canonical, so
/// semantically equal sets compare equal structurally.
class ValueSet {
public:
  ValueSet() = default; // empty

  static ValueSet finite(std::vector<std::uint64_t> values);
  static ValueSet single(std::uint64_t v) { return finite({v}); }
  static ValueSet ray(std::uint64_t from);
  static ValueSet progression(std::uint64_t from, std::uint64_t step);
  static ValueSet all_naturals() { return ray(0); }
  static ValueSet any();      // naturals + infinity
  static ValueSet inf_only(); // just the infinity flag

  ValueSet with_inf(bool flag = true) const;

  bool contains(std::uint64_t x) const;
  bool contains_inf() const { return inf_; }
  bool nats_empty() const { return explicit_.empty() && period_ == 0; }
  bool nats_infinite() const { return period_ > 0; }
  bool is_empty() const { return nats_empty() && !inf_; }

  CardCount nat_count() const;
  /// Naturals plus one extra value when the infinity flag is set.
  CardCount value_count() const;

  std::optional<std::uint64_t> min_nat() const { return min_nat_at_least(0); }
  std::optional<std::uint64_t> min_nat_at_least(std::uint64_t x0) const;
  std::vector<std::uint64_t> values_up_to(std::uint64_t bound) const;

  ValueSet unite(const ValueSet& o) const;
  ValueSet intersect(const ValueSet& o) const;
  ValueSet complement() const; // within naturals + infinity
  ValueSet minus(const ValueSet& o) const { return intersect(o.complement()); }

  /// Adds the infinity flag when the naturals part is infinite; the set of
  /// limit values of this set within N ∪ {inf}.
  ValueSet limit_closure() const;

  /// Beyond max(threshold, period) the intersection with any ray [n, inf)
  /// has the same cardinality; closure and isolation checks stabilize there.
  std::uint64_t stabilization_component() const;

  const std::vector<std::uint64_t>& explicit_values() const { return explicit_; }
  std::uint64_t threshold() const { return threshold_; }
  std::uint64_t period() const { return period_; }
  const std::vector<std::uint64_t>& residues() const { return residues_; }

  friend bool operator==(const ValueSet&, const ValueSet&) = default;

  /// Literal syntax: `{1,3,5}`, `7`, `2..`, `1..9`, `0.. step 2`,
  /// `1..9 step 4`, unions with `|`, `inf`, `any`, `{}`.
  static ValueSet parse(const std::string& text);
  std::string to_string() const;

private:
  ValueSet(std::vector<std::uint64_t> expl, std::uint64_t threshold, std::uint64_t period,
           std::vector<std::uint64_t> residues, bool inf);
  void normalize();
  bool tail_contains(std::uint64_t x) const;

  std::vector<std::uint64_t> explicit_; // sorted, all < threshold_
  std::uint64_t threshold_ = 0;
  std::uint64_t period_ = 0;            // 0 = no periodic part
  std::vector<std::uint64_t> residues_; // sorted, nonempty iff period_ > 0
  bool inf_ = false;
};

} // namespace mts

#endif
