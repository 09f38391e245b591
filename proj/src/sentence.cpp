#include "mtspace/sentence.hpp"

#include <algorithm>
#include <vector>

#include "mtspace/errors.hpp"

namespace mts {

namespace {

NodePtr make(NodeKind kind, std::string name, std::string var1, std::string var2,
             NodePtr lhs, NodePtr rhs) {
  auto n = std::make_shared<SentenceNode>();
  n->kind = kind;
  n->name = std::move(name);
  n->var1 = std::move(var1);
  n->var2 = std::move(var2);
  n->lhs = std::move(lhs);
  n->rhs = std::move(rhs);
  return n;
}

bool equal_nodes(const NodePtr& a, const NodePtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->kind != b->kind || a->name != b->name || a->var1 != b->var1 || a->var2 != b->var2)
    return false;
  return equal_nodes(a->lhs, b->lhs) && equal_nodes(a->rhs, b->rhs);
}

} // namespace

bool operator==(const Sentence& a, const Sentence& b) { return equal_nodes(a.root_, b.root_); }

Sentence pred(std::string name, std::string var) {
  return Sentence(make(NodeKind::Pred, std::move(name), std::move(var), {}, nullptr, nullptr));
}
Sentence eq(std::string var1, std::string var2) {
  return Sentence(make(NodeKind::Eq, {}, std::move(var1), std::move(var2), nullptr, nullptr));
}
Sentence lnot(Sentence s) {
  return Sentence(make(NodeKind::Not, {}, {}, {}, s.ptr(), nullptr));
}
Sentence land(Sentence a, Sentence b) {
  return Sentence(make(NodeKind::And, {}, {}, {}, a.ptr(), b.ptr()));
}
Sentence lor(Sentence a, Sentence b) {
  return Sentence(make(NodeKind::Or, {}, {}, {}, a.ptr(), b.ptr()));
}
Sentence implies(Sentence a, Sentence b) {
  return Sentence(make(NodeKind::Implies, {}, {}, {}, a.ptr(), b.ptr()));
}
Sentence iff(Sentence a, Sentence b) {
  return Sentence(make(NodeKind::Iff, {}, {}, {}, a.ptr(), b.ptr()));
}
Sentence forall(std::string var, Sentence body) {
  return Sentence(make(NodeKind::Forall, std::move(var), {}, {}, body.ptr(), nullptr));
}
Sentence exists(std::string var, Sentence body) {
  return Sentence(make(NodeKind::Exists, std::move(var), {}, {}, body.ptr(), nullptr));
}

Sentence conjunction(const std::vector<Sentence>& parts) {
  if (parts.empty()) throw PreconditionError("conjunction of an empty list");
  Sentence acc = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) acc = land(acc, parts[i]);
  return acc;
}

Sentence disjunction(const std::vector<Sentence>& parts) {
  if (parts.empty()) throw PreconditionError("disjunction of an empty list");
  Sentence acc = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) acc = lor(acc, parts[i]);
  return acc;
}

namespace {

unsigned qrank_node(const NodePtr& n) {
  if (!n) return 0;
  switch (n->kind) {
    case NodeKind::Pred:
    case NodeKind::Eq:
      return 0;
    case NodeKind::Not:
      return qrank_node(n->lhs);
    case NodeKind::And:
    case NodeKind::Or:
    case NodeKind::Implies:
    case NodeKind::Iff:
      return std::max(qrank_node(n->lhs), qrank_node(n->rhs));
    case NodeKind::Forall:
    case NodeKind::Exists:
      return 1 + qrank_node(n->lhs);
  }
  return 0;
}

void collect_preds(const NodePtr& n, std::set<std::string>& out) {
  if (!n) return;
  if (n->kind == NodeKind::Pred) out.insert(n->name);
  collect_preds(n->lhs, out);
  collect_preds(n->rhs, out);
}

void collect_free(const NodePtr& n, std::vector<std::string>& bound, std::set<std::string>& out) {
  if (!n) return;
  auto is_bound = [&](const std::string& v) {
    return std::find(bound.begin(), bound.end(), v) != bound.end();
  };
  switch (n->kind) {
    case NodeKind::Pred:
      if (!is_bound(n->var1)) out.insert(n->var1);
      return;
    case NodeKind::Eq:
      if (!is_bound(n->var1)) out.insert(n->var1);
      if (!is_bound(n->var2)) out.insert(n->var2);
      return;
    case NodeKind::Forall:
    case NodeKind::Exists:
      bound.push_back(n->name);
      collect_free(n->lhs, bound, out);
      bound.pop_back();
      return;
    default:
      collect_free(n->lhs, bound, out);
      collect_free(n->rhs, bound, out);
      return;
  }
}

// Precedence levels: <-> 1, -> 2, | 3, & 4, ! 5, atoms 6.
// Quantifiers print at level 0 (maximal right scope) and need parentheses
// in any tighter context.
void print_node(const NodePtr& n, int context, std::string& out) {
  auto wrap = [&](int level, auto&& body) {
    bool parens = level < context;
    if (parens) out += '(';
    body();
    if (parens) out += ')';
  };
  switch (n->kind) {
    case NodeKind::Pred:
      out += n->name;
      out += '(';
      out += n->var1;
      out += ')';
      return;
    case NodeKind::Eq:
      out += n->var1;
      out += " = ";
      out += n->var2;
      return;
    case NodeKind::Not:
      if (n->lhs->kind == NodeKind::Eq) { // print !(x = y) as x != y
        wrap(6, [&] {
          out += n->lhs->var1;
          out += " != ";
          out += n->lhs->var2;
        });
        return;
      }
      wrap(5, [&] {
        out += '!';
        print_node(n->lhs, 5, out);
      });
      return;
    case NodeKind::And:
      wrap(4, [&] {
        print_node(n->lhs, 4, out);
        out += " & ";
        print_node(n->rhs, 5, out);
      });
      return;
    case NodeKind::Or:
      wrap(3, [&] {
        print_node(n->lhs, 3, out);
        out += " | ";
        print_node(n->rhs, 4, out);
      });
      return;
    case NodeKind::Implies:
      wrap(2, [&] {
        print_node(n->lhs, 3, out);
        out += " -> ";
        print_node(n->rhs, 2, out);
      });
      return;
    case NodeKind::Iff:
      wrap(1, [&] {
        print_node(n->lhs, 2, out);
        out += " <-> ";
        print_node(n->rhs, 1, out);
      });
      return;
    case NodeKind::Forall:
    case NodeKind::Exists:
      wrap(0, [&] {
        out += n->kind == NodeKind::Forall ? "forall " : "exists ";
        out += n->name;
        out += ". ";
        print_node(n->lhs, 0, out);
      });
      return;
  }
}

} // namespace

unsigned qrank(const Sentence& s) { return qrank_node(s.ptr()); }

std::set<std::string> predicates(const Sentence& s) {
  std::set<std::string> out;
  collect_preds(s.ptr(), out);
  return out;
}

std::set<std::string> free_variables(const Sentence& s) {
  std::set<std::string> out;
  std::vector<std::string> bound;
  collect_free(s.ptr(), bound, out);
  return out;
}

std::string print_sentence(const Sentence& s) {
  if (s.empty()) return "";
  std::string out;
  print_node(s.ptr(), 0, out);
  return out;
}

} // namespace mts
