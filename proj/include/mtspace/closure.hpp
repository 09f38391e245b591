#ifndef MTSPACE_CLOSURE_HPP
#define MTSPACE_CLOSURE_HPP

#include "mtspace/family.hpp"

namespace mts {

/// A level past every explicit value, period and threshold in f (and past
/// t's finite cells when given): basic-sentence neighbourhood counts are
/// constant from this level on.
std::uint64_t stabilization_bound(const Family& f, const TheoryVector* t = nullptr);

/// True iff every basic-sentence neighbourhood of t in f is infinite
/// (equivalently, every sentence of t holds in infinitely many members).
/// Decided exactly by a single count at the stabilization bound.
bool is_accumulation_point(const Family& f, const TheoryVector& t);

/// The family of all accumulation points of f. For each box and each cell
/// with infinitely many naturals, that cell goes to infinity and every other
/// cell relaxes to its limit closure.
Family accumulation_points(const Family& f);

/// f together with its accumulation points; idempotent, monotone, extensive,
/// and additive over unions.
Family closure(const Family& f);

/// Accumulation points that are not members: the theories the family newly
/// approximates.
Family new_accumulation_points(const Family& f);

bool is_e_closed(const Family& f);

/// t is approximated by f: not a member, yet every sentence of t lies in
/// some member — equivalently t is an accumulation point of f.
bool is_approximated_by(const TheoryVector& t, const Family& f);

/// Exact count of new accumulation points.
CardCount e_spectrum(const Family& f);

} // namespace mts

#endif
