#include "mtspace/structure.hpp"

#include <algorithm>

#include "mtspace/errors.hpp"

namespace mts {

FiniteStructure::FiniteStructure(Signature sig, std::size_t universe_size,
                                 std::vector<std::vector<std::size_t>> membership)
    : sig_(std::move(sig)), size_(universe_size) {
  if (size_ == 0) throw PreconditionError("structures have nonempty universes");
  if (membership.size() != sig_.size())
    throw SignatureError("membership lists do not match the signature");
  membership_.assign(sig_.size(), std::vector<bool>(size_, false));
  for (std::size_t j = 0; j < membership.size(); ++j) {
    for (std::size_t e : membership[j]) {
      if (e >= size_)
        throw PreconditionError("membership element " + std::to_string(e) + " out of range");
      membership_[j][e] = true;
    }
  }
}

FiniteStructure FiniteStructure::from_cell_counts(const Signature& sig,
                                                  const std::vector<std::size_t>& counts) {
  std::vector<std::vector<std::size_t>> membership(sig.size());
  std::size_t next = 0;
  for (CellIndex c = 0; c < counts.size(); ++c) {
    for (std::size_t i = 0; i < counts[c]; ++i, ++next) {
      for (std::size_t j = 0; j < sig.size(); ++j)
        if (Signature::cell_sign(c, j)) membership[j].push_back(next);
    }
  }
  return FiniteStructure(sig, next, std::move(membership));
}

CellIndex FiniteStructure::cell_of(std::size_t element) const {
  CellIndex c = 0;
  for (std::size_t j = 0; j < sig_.size(); ++j)
    if (membership_[j][element]) c |= (CellIndex{1} << j);
  return c;
}

namespace {

struct Env {
  std::vector<std::pair<const std::string*, std::size_t>> frames;

  std::size_t lookup(const std::string& var) const {
    for (auto it = frames.rbegin(); it != frames.rend(); ++it)
      if (*it->first == var) return it->second;
    throw SignatureError("unbound variable '" + var + "'");
  }
};

bool eval(const FiniteStructure& m, const NodePtr& n, Env& env) {
  switch (n->kind) {
    case NodeKind::Pred: {
      auto j = m.sig().index_of(n->name);
      if (!j) throw SignatureError("predicate '" + n->name + "' not in the structure's signature");
      return m.holds(*j, env.lookup(n->var1));
    }
    case NodeKind::Eq:
      return env.lookup(n->var1) == env.lookup(n->var2);
    case NodeKind::Not:
      return !eval(m, n->lhs, env);
    case NodeKind::And:
      return eval(m, n->lhs, env) && eval(m, n->rhs, env);
    case NodeKind::Or:
      return eval(m, n->lhs, env) || eval(m, n->rhs, env);
    case NodeKind::Implies:
      return !eval(m, n->lhs, env) || eval(m, n->rhs, env);
    case NodeKind::Iff:
      return eval(m, n->lhs, env) == eval(m, n->rhs, env);
    case NodeKind::Forall:
    case NodeKind::Exists: {
      bool universal = n->kind == NodeKind::Forall;
      env.frames.emplace_back(&n->name, 0);
      for (std::size_t e = 0; e < m.size(); ++e) {
        env.frames.back().second = e;
        bool v = eval(m, n->lhs, env);
        if (universal && !v) {
          env.frames.pop_back();
          return false;
        }
        if (!universal && v) {
          env.frames.pop_back();
          return true;
        }
      }
      env.frames.pop_back();
      return universal;
    }
  }
  return false;
}

} // namespace

bool model_check(const FiniteStructure& m, const Sentence& s) {
  if (s.empty()) throw PreconditionError("empty sentence");
  if (!free_variables(s).empty())
    throw PreconditionError("model_check requires a closed sentence");
  Env env;
  return eval(m, s.ptr(), env);
}

TheoryVector theory_of_structure(const FiniteStructure& m) {
  std::vector<Card> cards(m.sig().cell_count(), Card::fin(0));
  std::vector<std::uint64_t> counts(m.sig().cell_count(), 0);
  for (std::size_t e = 0; e < m.size(); ++e) ++counts[m.cell_of(e)];
  for (CellIndex c = 0; c < counts.size(); ++c) cards[c] = Card::fin(counts[c]);
  return TheoryVector(m.sig(), std::move(cards));
}

FiniteStructure realize(const TheoryVector& t, unsigned cap) {
  if (cap == 0) throw PreconditionError("realize requires cap >= 1");
  std::vector<std::size_t> counts(t.cell_count());
  for (CellIndex c = 0; c < t.cell_count(); ++c) {
    Card v = t.at(c);
    counts[c] = v.is_inf() ? cap : static_cast<std::size_t>(std::min<std::uint64_t>(v.value(), cap));
  }
  return FiniteStructure::from_cell_counts(t.sig(), counts);
}

} // namespace mts
