#ifndef MTSPACE_THEORY_HPP
#define MTSPACE_THEORY_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mtspace/card.hpp"
#include "mtspace/sentence.hpp"
#include "mtspace/signature.hpp"

namespace mts {

/// A complete monadic theory, encoded as the map from cells to cardinalities.
/// Two vectors are equal iff pointwise equal; for theories of finitely many
/// unary predicates this equality is elementary equivalence.
class TheoryVector {
public:
  TheoryVector(Signature sig, std::vector<Card> cards);

  const Signature& sig() const { return sig_; }
  Card at(CellIndex c) const { return cards_[c]; }
  const std::vector<Card>& cards() const { return cards_; }
  std::size_t cell_count() const { return cards_.size(); }

  /// Sum of all cell cardinalities (infinity absorbing); always >= 1.
  Card total() const;

  /// Largest finite cell value (0 when all cells are infinite).
  std::uint64_t max_finite_value() const;

  friend bool operator==(const TheoryVector&, const TheoryVector&) = default;

  /// Lexicographic by cell index, finite values before infinity. Used for
  /// deterministic enumeration orders.
  friend bool operator<(const TheoryVector& a, const TheoryVector& b);

  /// Inline form `cell=card,...` with zero cells omitted, e.g. "!P=0,P=inf"
  /// prints as "P=inf".
  std::string to_string() const;

private:
  Signature sig_;
  std::vector<Card> cards_;
};

/// Parses the inline theory form `cell=card,...` over a known signature;
/// omitted cells default to 0.
TheoryVector parse_theory(const std::string& text, const Signature& sig);

/// Like parse_theory but infers the signature from the cell patterns
/// (symbols in order of first appearance; a lone `u` pattern denotes the
/// empty signature).
std::pair<TheoryVector, Signature> parse_theory_infer(const std::string& text);

/// True iff every cell is finite, i.e. the theory has a finite model.
bool is_finite_model_theory(const TheoryVector& t);

/// True iff the theory has only infinite models but every sentence in it has
/// a finite model; over a finite monadic signature this holds exactly when
/// some cell is infinite.
bool is_pseudo_finite(const TheoryVector& t);

/// Replaces every infinite cell by n; every sentence of t with quantifier
/// rank <= n survives into the result.
TheoryVector finite_approximation(const TheoryVector& t, std::uint64_t n);

/// How predicates added by restrict_and_pad are interpreted.
enum class PadMode {
  FlipEmptyComplete, // padded predicate made empty iff nonempty in t
  AllEmpty,          // padded predicates all empty
};

/// Restricts t to `sub` (summing cell values over the forgotten predicates)
/// and re-expands to `target`, each padded predicate forced empty or
/// complete according to `mode`. Requires sub ⊆ target ⊆ t.sig as symbol
/// sets.
TheoryVector restrict_and_pad(const TheoryVector& t, const Signature& sub,
                              const Signature& target,
                              PadMode mode = PadMode::FlipEmptyComplete);

/// A yes/no verdict with an optional witnessing sentence.
struct Witnessed {
  bool value = false;
  std::optional<Sentence> witness;
};

/// A sentence whose unique model theory (over t's signature) is t; defined
/// exactly for finite-model theories.
Sentence complete_sentence(const TheoryVector& t);

/// True, with a complete sentence as witness, iff all cells are finite.
Witnessed is_finitely_axiomatizable(const TheoryVector& t);

} // namespace mts

#endif
