#include "mtspace/normalform.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>
#include <optional>

#include "mtspace/errors.hpp"
#include "mtspace/structure.hpp"

namespace mts {

namespace {

// Clause as one interval of admissible counts per cell; hi absent means
// unbounded (and then an infinite cell value is admitted).
struct Interval {
  std::uint64_t lo = 0;
  std::optional<std::uint64_t> hi;

  friend bool operator==(const Interval&, const Interval&) = default;
  friend auto operator<=>(const Interval&, const Interval&) = default;
};

using GridClause = std::vector<Interval>;

bool interval_contains(const Interval& a, const Interval& b) {
  if (a.lo > b.lo) return false;
  if (!a.hi) return true;
  return b.hi && *b.hi <= *a.hi;
}

bool clause_contains(const GridClause& a, const GridClause& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!interval_contains(a[i], b[i])) return false;
  return true;
}

// Merge overlapping or adjacent intervals along one cell for clauses that
// agree everywhere else.
bool merge_pass(std::vector<GridClause>& clauses, std::size_t cell) {
  std::map<GridClause, std::vector<Interval>> groups;
  for (const GridClause& cl : clauses) {
    GridClause key = cl;
    key[cell] = Interval{};
    groups[key].push_back(cl[cell]);
  }
  std::vector<GridClause> merged;
  bool changed = false;
  for (auto& [key, ivs] : groups) {
    std::sort(ivs.begin(), ivs.end(), [](const Interval& a, const Interval& b) {
      if (a.lo != b.lo) return a.lo < b.lo;
      if (a.hi.has_value() != b.hi.has_value()) return !a.hi.has_value();
      return a.hi < b.hi;
    });
    std::vector<Interval> out;
    for (const Interval& iv : ivs) {
      if (!out.empty()) {
        Interval& last = out.back();
        bool joinable = !last.hi || iv.lo <= *last.hi + 1;
        if (joinable) {
          if (last.hi && (!iv.hi || *iv.hi > *last.hi)) last.hi = iv.hi;
          continue;
        }
      }
      out.push_back(iv);
    }
    if (out.size() != ivs.size()) changed = true;
    for (const Interval& iv : out) {
      GridClause cl = key;
      cl[cell] = iv;
      merged.push_back(std::move(cl));
    }
  }
  clauses = std::move(merged);
  return changed;
}

// Within a clause whose other cells are all pinned to zero, a lower bound of
// one is implied by nonemptiness of the universe and can be dropped.
bool drop_implied_lower_bounds(std::vector<GridClause>& clauses) {
  bool changed = false;
  for (GridClause& cl : clauses) {
    for (std::size_t c = 0; c < cl.size(); ++c) {
      if (cl[c].lo != 1) continue;
      bool others_zero = true;
      for (std::size_t d = 0; d < cl.size(); ++d) {
        if (d == c) continue;
        if (!(cl[d].lo == 0 && cl[d].hi && *cl[d].hi == 0)) {
          others_zero = false;
          break;
        }
      }
      if (others_zero) {
        cl[c].lo = 0;
        changed = true;
      }
    }
  }
  return changed;
}

bool subsumption_pass(std::vector<GridClause>& clauses) {
  std::vector<GridClause> kept;
  for (const GridClause& cl : clauses) {
    bool subsumed = false;
    for (const GridClause& other : clauses) {
      if (&other == &cl) continue;
      if (other == cl) { // keep only the first of equal clauses
        subsumed = &other < &cl;
      } else {
        subsumed = clause_contains(other, cl);
      }
      if (subsumed) break;
    }
    if (!subsumed) kept.push_back(cl);
  }
  bool changed = kept.size() != clauses.size();
  clauses = std::move(kept);
  return changed;
}

void simplify(std::vector<GridClause>& clauses, std::size_t cells) {
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t c = 0; c < cells; ++c) changed |= merge_pass(clauses, c);
    changed |= subsumption_pass(clauses);
    changed |= drop_implied_lower_bounds(clauses);
  }
}

NormalForm::Clause to_literals(const GridClause& cl) {
  NormalForm::Clause out;
  for (CellIndex c = 0; c < cl.size(); ++c) {
    if (cl[c].lo >= 1) out.push_back({true, {{c}, cl[c].lo}});
    if (cl[c].hi) out.push_back({false, {{c}, *cl[c].hi + 1}});
  }
  return out;
}

std::uint64_t literal_rank(const Literal& l) { return l.positive ? 0 : 1; }

void canonicalize(std::vector<NormalForm::Clause>& clauses) {
  auto literal_less = [](const Literal& a, const Literal& b) {
    if (a.constraint != b.constraint) return a.constraint < b.constraint;
    return literal_rank(a) < literal_rank(b);
  };
  for (auto& cl : clauses) std::sort(cl.begin(), cl.end(), literal_less);
  auto clause_less = [&](const NormalForm::Clause& a, const NormalForm::Clause& b) {
    return std::lexicographical_compare(
        a.begin(), a.end(), b.begin(), b.end(), [&](const Literal& x, const Literal& y) {
          return literal_less(x, y);
        });
  };
  std::sort(clauses.begin(), clauses.end(), clause_less);
  clauses.erase(std::unique(clauses.begin(), clauses.end()), clauses.end());
}

Card constraint_sum(const AtomicConstraint& a, const TheoryVector& t) {
  Card sum = Card::fin(0);
  for (CellIndex c : a.cells) {
    if (c >= t.cell_count())
      throw SignatureError("constraint cell index out of range for the signature");
    sum += t.at(c);
  }
  return sum;
}

} // namespace

std::uint64_t default_qe_budget() {
  if (const char* env = std::getenv("MTSPACE_QE_BUDGET")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
  }
  return 50'000'000ull;
}

NormalForm to_normal_form(const Sentence& s, const Signature& sig, std::uint64_t budget,
                          std::uint64_t min_cap) {
  for (const std::string& p : predicates(s))
    if (!sig.has_symbol(p))
      throw SignatureError("sentence predicate '" + p + "' not in the signature");
  if (!free_variables(s).empty())
    throw PreconditionError("to_normal_form requires a closed sentence");

  const unsigned r = qrank(s);
  const std::uint64_t cap = std::max<std::uint64_t>({1, r, min_cap});
  const std::size_t cells = sig.cell_count();

  // Work estimate: bucket count times the cost of one model check on a
  // realization of at most cap elements per cell.
  long double buckets = std::pow(static_cast<long double>(cap + 1), static_cast<long double>(cells));
  long double per_check = std::pow(static_cast<long double>(std::max<std::uint64_t>(1, cap * cells)),
                                   static_cast<long double>(cap));
  if (buckets * per_check > static_cast<long double>(budget))
    throw BudgetError("quantifier elimination refused: estimated work " +
                      std::to_string(static_cast<double>(buckets * per_check)) +
                      " exceeds budget " + std::to_string(budget) +
                      " (set MTSPACE_QE_BUDGET to override)");

  std::vector<GridClause> true_buckets;
  std::vector<std::uint64_t> bucket(cells, 0);
  for (;;) {
    bool all_zero = std::all_of(bucket.begin(), bucket.end(), [](std::uint64_t v) { return v == 0; });
    if (!all_zero) {
      std::vector<std::size_t> counts(cells);
      for (std::size_t c = 0; c < cells; ++c) counts[c] = static_cast<std::size_t>(bucket[c]);
      FiniteStructure m = FiniteStructure::from_cell_counts(sig, counts);
      if (model_check(m, s)) {
        GridClause cl(cells);
        for (std::size_t c = 0; c < cells; ++c) {
          if (bucket[c] < cap) cl[c] = {bucket[c], bucket[c]};
          else cl[c] = {cap, std::nullopt};
        }
        true_buckets.push_back(std::move(cl));
      }
    }
    std::size_t i = 0;
    while (i < cells && bucket[i] == cap) bucket[i++] = 0;
    if (i == cells) break;
    ++bucket[i];
  }

  simplify(true_buckets, cells);

  std::vector<NormalForm::Clause> clauses;
  clauses.reserve(true_buckets.size());
  for (const GridClause& cl : true_buckets) clauses.push_back(to_literals(cl));
  canonicalize(clauses);
  return NormalForm(sig, std::move(clauses));
}

bool evaluate(const NormalForm& nf, const TheoryVector& t) {
  if (nf.sig() != t.sig())
    throw SignatureError("normal form and theory vector have different signatures");
  for (const auto& clause : nf.clauses()) {
    bool ok = true;
    for (const Literal& lit : clause) {
      bool ge = constraint_sum(lit.constraint, t) >= Card::fin(lit.constraint.threshold);
      if (ge != lit.positive) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  }
  return false;
}

bool holds(const TheoryVector& t, const Sentence& s, std::uint64_t budget) {
  return evaluate(to_normal_form(s, t.sig(), budget), t);
}

namespace {

Sentence cell_membership(const Signature& sig, CellIndex cell, const std::string& var) {
  std::vector<Sentence> parts;
  for (std::size_t j = 0; j < sig.size(); ++j) {
    Sentence atom = pred(sig.symbol(j), var);
    parts.push_back(Signature::cell_sign(cell, j) ? atom : lnot(atom));
  }
  if (parts.empty()) return eq(var, var);
  return conjunction(parts);
}

Sentence at_least(const Signature& sig, CellIndex cell, std::uint64_t m) {
  std::vector<std::string> vars;
  for (std::uint64_t i = 0; i < m; ++i) vars.push_back("x" + std::to_string(i));
  std::vector<Sentence> parts;
  for (std::size_t i = 0; i < vars.size(); ++i)
    for (std::size_t j = i + 1; j < vars.size(); ++j) parts.push_back(lnot(eq(vars[i], vars[j])));
  for (const std::string& v : vars)
    if (sig.size() > 0) parts.push_back(cell_membership(sig, cell, v));
  Sentence body = parts.empty() ? eq(vars[0], vars[0]) : conjunction(parts);
  for (auto it = vars.rbegin(); it != vars.rend(); ++it) body = exists(*it, body);
  return body;
}

} // namespace

Sentence cell_at_least(const Signature& sig, CellIndex c, std::uint64_t m) {
  if (m == 0) throw PreconditionError("cell_at_least requires m >= 1");
  return at_least(sig, c, m);
}

Sentence basic_sentence(const TheoryVector& t, std::uint64_t n) {
  if (n == 0) throw PreconditionError("basic_sentence requires n >= 1");
  const Signature& sig = t.sig();
  std::vector<Sentence> parts;
  for (CellIndex c = 0; c < t.cell_count(); ++c) {
    Card v = t.at(c);
    if (v.is_fin() && v.value() < n) {
      std::uint64_t exact = v.value();
      if (exact == 0) {
        parts.push_back(lnot(at_least(sig, c, 1)));
      } else {
        parts.push_back(land(at_least(sig, c, exact), lnot(at_least(sig, c, exact + 1))));
      }
    } else {
      parts.push_back(at_least(sig, c, n));
    }
  }
  return conjunction(parts);
}

std::string print_normal_form(const NormalForm& nf) {
  if (nf.clauses().empty()) return "false";
  if (std::any_of(nf.clauses().begin(), nf.clauses().end(),
                  [](const NormalForm::Clause& c) { return c.empty(); }))
    return "true";
  std::string out;
  for (const auto& clause : nf.clauses()) {
    if (!out.empty()) out += " | ";
    std::string cl;
    for (const Literal& lit : clause) {
      if (!cl.empty()) cl += " & ";
      if (!lit.positive) cl += '!';
      cl += "#(";
      for (std::size_t i = 0; i < lit.constraint.cells.size(); ++i) {
        if (i) cl += '|';
        cl += nf.sig().cell_name(lit.constraint.cells[i]);
      }
      cl += ")>=" + std::to_string(lit.constraint.threshold);
    }
    out += cl;
  }
  return out;
}

} // namespace mts
