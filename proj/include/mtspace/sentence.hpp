#ifndef MTSPACE_SENTENCE_HPP
#define MTSPACE_SENTENCE_HPP

#include <memory>
#include <set>
#include <string>

namespace mts {

enum class NodeKind { Pred, Eq, Not, And, Or, Implies, Iff, Forall, Exists };

struct SentenceNode;
using NodePtr = std::shared_ptr<const SentenceNode>;

/// One node of a first-order monadic formula with equality. Nodes are
/// immutable and shared; formulas are cheap to copy.
struct SentenceNode {
  NodeKind kind;
  std::string name; // Pred: predicate name; Forall/Exists: bound variable
  std::string var1; // Pred: argument; Eq: left-hand variable
  std::string var2; // Eq: right-hand variable
  NodePtr lhs;      // Not/Forall/Exists: body; binary ops: left
  NodePtr rhs;      // binary ops: right
};

/// A monadic first-order formula. Top-level values handed to the semantic
/// operations must be closed; subformulas built along the way may be open.
class Sentence {
public:
  Sentence() = default;
  explicit Sentence(NodePtr root) : root_(std::move(root)) {}

  const SentenceNode& node() const { return *root_; }
  const NodePtr& ptr() const { return root_; }
  bool empty() const { return root_ == nullptr; }

  friend bool operator==(const Sentence& a, const Sentence& b);
  friend bool operator!=(const Sentence& a, const Sentence& b) { return !(a == b); }

private:
  NodePtr root_;
};

// Builders.
Sentence pred(std::string name, std::string var);
Sentence eq(std::string var1, std::string var2);
Sentence lnot(Sentence s);
Sentence land(Sentence a, Sentence b);
Sentence lor(Sentence a, Sentence b);
Sentence implies(Sentence a, Sentence b);
Sentence iff(Sentence a, Sentence b);
Sentence forall(std::string var, Sentence body);
Sentence exists(std::string var, Sentence body);

/// Left fold of a nonempty list with `land`/`lor`.
Sentence conjunction(const std::vector<Sentence>& parts);
Sentence disjunction(const std::vector<Sentence>& parts);

/// Quantifier rank: 0 for quantifier-free, else 1 + max over quantified
/// subformulas.
unsigned qrank(const Sentence& s);

/// Predicate names occurring in s.
std::set<std::string> predicates(const Sentence& s);

/// Variables free in s (empty iff s is closed).
std::set<std::string> free_variables(const Sentence& s);

/// Renders s in the concrete grammar; parse_sentence(print_sentence(s))
/// is structurally equal to s.
std::string print_sentence(const Sentence& s);

} // namespace mts

#endif
