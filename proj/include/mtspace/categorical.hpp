#ifndef MTSPACE_CATEGORICAL_HPP
#define MTSPACE_CATEGORICAL_HPP

#include <optional>
#include <vector>

#include "mtspace/closure.hpp"
#include "mtspace/family.hpp"

namespace mts {

enum class TieBreak { PreferPositive, PreferNegative };

/// Greedy construction of an accumulation point of an infinite family:
/// over the canonical enumeration of basic constraints (cells in index
/// order, thresholds increasing) keep a side with an infinite subfamily,
/// breaking ties with `tie_break`. Rejects finite families.
TheoryVector build_accumulation_point(const Family& f, TieBreak tie_break);

struct ApproximatingSubfamily {
  Family family;      // f minus the constructed point, when it was a member
  TheoryVector point; // approximated by `family`
};

/// An approximating subfamily exists iff f is infinite; the finite case is
/// reported as absence, not an error.
std::optional<ApproximatingSubfamily> approximating_subfamily(const Family& f);

/// An infinite family with exactly one accumulation point (whether or not
/// that point is already a member).
bool is_e_categorical(const Family& f);

/// Equivalent to e-categoricity for infinite families; false on finite
/// families.
bool is_e_minimal(const Family& f);

struct EMinimalCheck {
  bool e_minimal = false;
  std::optional<Sentence> split_witness; // a sentence splitting f into two infinite parts
};

/// The definition checked directly on basic constraint sentences up to the
/// stabilization bound: every split leaves a finite side. Vacuously true on
/// finite families.
EMinimalCheck check_e_minimal_direct(const Family& f);

/// Splits an E-closed family with finitely many (and at least one)
/// accumulation points into that many disjoint e-categorical parts; members
/// near no accumulation point are attached to the first part.
std::vector<Family> partition_e_categorical(const Family& f);

/// k pairwise inconsistent sentences, each with an infinite neighbourhood in
/// f, when they exist; their existence certifies e-spectrum >= k.
std::optional<std::vector<Sentence>> spectrum_witnesses(const Family& f, std::uint64_t k);

} // namespace mts

#endif
