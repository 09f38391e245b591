#ifndef MTSPACE_NORMALFORM_HPP
#define MTSPACE_NORMALFORM_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "mtspace/sentence.hpp"
#include "mtspace/signature.hpp"
#include "mtspace/theory.hpp"

namespace mts {

/// "At least `threshold` elements lie in the union of `cells`."
struct AtomicConstraint {
  std::vector<CellIndex> cells; // sorted, distinct
  std::uint64_t threshold = 1;  // >= 1

  friend bool operator==(const AtomicConstraint&, const AtomicConstraint&) = default;
  friend auto operator<=>(const AtomicConstraint&, const AtomicConstraint&) = default;
};

struct Literal {
  bool positive = true;
  AtomicConstraint constraint;

  friend bool operator==(const Literal&, const Literal&) = default;
};

/// A counting normal form: a DNF over signed counting constraints. An empty
/// clause is true; a form with no clauses is false.
class NormalForm {
public:
  using Clause = std::vector<Literal>;

  NormalForm(Signature sig, std::vector<Clause> clauses)
      : sig_(std::move(sig)), clauses_(std::move(clauses)) {}

  const Signature& sig() const { return sig_; }
  const std::vector<Clause>& clauses() const { return clauses_; }

  friend bool operator==(const NormalForm&, const NormalForm&) = default;

private:
  Signature sig_;
  std::vector<Clause> clauses_;
};

/// The per-call work guard for quantifier elimination; defaults to
/// 50'000'000 and can be overridden with the MTSPACE_QE_BUDGET environment
/// variable.
std::uint64_t default_qe_budget();

/// Quantifier elimination by capped bucket enumeration: equivalent to s on
/// every finite structure, and on every theory vector via `evaluate`.
/// Throws BudgetError when the estimated work exceeds `budget`. The cap is
/// the quantifier rank; `min_cap` can force a higher one (the result is
/// equivalent for any cap at or above the rank).
NormalForm to_normal_form(const Sentence& s, const Signature& sig,
                          std::uint64_t budget = default_qe_budget(),
                          std::uint64_t min_cap = 0);

/// Membership of the normal form in the theory t: a positive constraint
/// holds iff the (infinity-absorbing) sum of its cells' values reaches the
/// threshold.
bool evaluate(const NormalForm& nf, const TheoryVector& t);

/// The membership test "s belongs to t"; exactly one of holds(t, s),
/// holds(t, !s) is true.
bool holds(const TheoryVector& t, const Sentence& s,
           std::uint64_t budget = default_qe_budget());

/// The canonical neighbourhood generator: asserts "exactly t(c)" for cells
/// below n and "at least n" for the rest. t satisfies it for every n >= 1,
/// and for finite t with n > total it isolates t among all theory vectors.
Sentence basic_sentence(const TheoryVector& t, std::uint64_t n);

/// "At least m elements lie in cell c" as a sentence (m >= 1).
Sentence cell_at_least(const Signature& sig, CellIndex c, std::uint64_t m);

/// Stable textual form: clauses separated by ` | `, literals `#(P&!Q)>=n`
/// and `!#(...)>=n` separated by ` & `; `true` / `false` for the trivial
/// forms.
std::string print_normal_form(const NormalForm& nf);

} // namespace mts

#endif
