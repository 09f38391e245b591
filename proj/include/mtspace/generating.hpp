#ifndef MTSPACE_GENERATING_HPP
#define MTSPACE_GENERATING_HPP

#include <optional>
#include <utility>

#include "mtspace/closure.hpp"
#include "mtspace/family.hpp"

namespace mts {

/// The members isolated inside f by some sentence. Every member of a box
/// family is either isolated or an accumulation point, so this is exactly
/// f minus its accumulation points.
Family isolated_points(const Family& f);

/// True iff some basic-sentence neighbourhood of t in f is the singleton
/// {t}; decided at the stabilization bound.
bool is_isolated_point(const Family& f, const TheoryVector& t);

/// closure(sub) denotes the same set as whole. Requires sub ⊆ whole and
/// whole E-closed.
bool is_generating(const Family& sub, const Family& whole);

/// The least generating set of an E-closed family, when one exists: the
/// isolated points, if they generate. The isolated points are contained in
/// every generating set, so when they do not generate nothing smaller can.
std::optional<Family> least_generating_set(const Family& f);

/// t is isolated in f by a sentence; the witness is the isolating basic
/// sentence. Requires t to be a member.
Witnessed is_relatively_finitely_axiomatizable(const TheoryVector& t, const Family& f);

/// A sentence whose neighbourhood in f is exactly {t}, when one exists.
std::optional<Sentence> t_complete_sentence(const TheoryVector& t, const Family& f);

/// Expands an explicit finite family with one fresh marker predicate per
/// member (complete on that member, empty on the others). Every member of
/// the result is isolated, so the result is its own least generating set.
std::pair<Signature, Family> expand_with_markers(const Family& f);

} // namespace mts

#endif
