#include "mtspace/oracle.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "mtspace/categorical.hpp"
#include "mtspace/closure.hpp"
#include "mtspace/errors.hpp"
#include "mtspace/normalform.hpp"
#include "mtspace/structure.hpp"

namespace mts::oracle {

namespace {

// Per-cell candidate values (finite up to bound, then infinity) of one box
// restricted by the basic constraint of t at level n; empty optional when
// some cell admits nothing.
std::optional<std::vector<std::vector<Card>>> sigma_candidates(const Box& box,
                                                               const TheoryVector& t,
                                                               std::uint64_t n,
                                                               std::uint64_t bound) {
  std::vector<std::vector<Card>> lists(box.cells().size());
  for (CellIndex c = 0; c < box.cells().size(); ++c) {
    const ValueSet& vs = box.cell(c);
    Card want = t.at(c);
    if (want.is_fin() && want.value() < n) {
      if (vs.contains(want.value())) lists[c].push_back(want);
    } else {
      for (std::uint64_t v : vs.values_up_to(bound))
        if (v >= n) lists[c].push_back(Card::fin(v));
      if (vs.contains_inf()) lists[c].push_back(Card::inf());
    }
    if (lists[c].empty()) return std::nullopt;
  }
  return lists;
}

} // namespace

std::uint64_t count_basic_neighborhood(const Family& f, const TheoryVector& t, std::uint64_t n,
                                       std::uint64_t bound) {
  std::vector<std::vector<std::vector<Card>>> box_lists;
  std::uint64_t total_grid = 0;
  for (const Box& box : f.boxes()) {
    auto lists = sigma_candidates(box, t, n, bound);
    if (!lists) continue;
    std::uint64_t grid = 1;
    for (const auto& l : *lists) grid *= l.size();
    total_grid += grid;
    box_lists.push_back(std::move(*lists));
  }
  if (box_lists.empty()) return 0;

  if (total_grid <= 500'000) {
    // straight enumeration with set-based deduplication
    std::set<std::vector<Card>> seen;
    for (const auto& lists : box_lists) {
      std::vector<std::size_t> idx(lists.size(), 0);
      for (;;) {
        std::vector<Card> v(lists.size());
        for (std::size_t c = 0; c < lists.size(); ++c) v[c] = lists[c][idx[c]];
        seen.insert(std::move(v));
        std::size_t i = 0;
        while (i < idx.size() && idx[i] + 1 == lists[i].size()) idx[i++] = 0;
        if (i == idx.size()) break;
        ++idx[i];
      }
    }
    return seen.size();
  }

  // Large grids: inclusion-exclusion over boxes with explicit sorted value
  // lists per cell. (The all-zero vector never satisfies a basic constraint,
  // so no correction is needed.)
  std::uint64_t count = 0;
  const std::size_t nboxes = box_lists.size();
  for (std::size_t mask = 1; mask < (std::size_t{1} << nboxes); ++mask) {
    std::vector<std::vector<Card>> inter;
    bool first = true;
    for (std::size_t i = 0; i < nboxes; ++i) {
      if (!(mask >> i & 1)) continue;
      if (first) {
        inter = box_lists[i];
        first = false;
        continue;
      }
      for (std::size_t c = 0; c < inter.size(); ++c) {
        std::vector<Card> merged;
        std::set_intersection(inter[c].begin(), inter[c].end(), box_lists[i][c].begin(),
                              box_lists[i][c].end(), std::back_inserter(merged));
        inter[c] = std::move(merged);
      }
    }
    std::uint64_t product = 1;
    for (const auto& l : inter) product *= l.size();
    if (__builtin_popcountll(mask) % 2 == 1) count += product;
    else count -= product;
  }
  return count;
}

bool brute_accumulation_check(const Family& f, const TheoryVector& t, std::uint64_t depth,
                              std::uint64_t bound) {
  for (std::uint64_t n = 1; n <= depth; ++n) {
    std::uint64_t c1 = count_basic_neighborhood(f, t, n, bound);
    if (c1 == 0) return false;
    std::uint64_t c2 = count_basic_neighborhood(f, t, n, 2 * bound);
    if (c2 == c1) return false; // stopped growing: finite neighbourhood
  }
  return true;
}

bool brute_qe_check(const Sentence& s, const Signature& sig, std::size_t max_size,
                    std::string* counterexample) {
  NormalForm nf = to_normal_form(s, sig);
  const std::size_t cells = sig.cell_count();
  for (std::size_t n = 1; n <= max_size; ++n) {
    std::vector<std::size_t> assign(n, 0); // element -> cell
    for (;;) {
      std::vector<std::vector<std::size_t>> membership(sig.size());
      for (std::size_t e = 0; e < n; ++e)
        for (std::size_t j = 0; j < sig.size(); ++j)
          if (Signature::cell_sign(assign[e], j)) membership[j].push_back(e);
      FiniteStructure m(sig, n, membership);
      bool direct = model_check(m, s);
      bool symbolic = evaluate(nf, theory_of_structure(m));
      if (direct != symbolic) {
        if (counterexample) {
          std::string desc = "structure of size " + std::to_string(n) + " with cells";
          for (std::size_t e = 0; e < n; ++e)
            desc += " " + sig.cell_name(assign[e]);
          desc += ": model_check=" + std::string(direct ? "true" : "false") +
                  " normal_form=" + std::string(symbolic ? "true" : "false");
          *counterexample = desc;
        }
        return false;
      }
      std::size_t i = 0;
      while (i < n && assign[i] + 1 == cells) assign[i++] = 0;
      if (i == n) break;
      ++assign[i];
    }
  }
  return true;
}

Signature random_signature(std::mt19937_64& rng, const GenOptions& opt) {
  static const std::vector<std::string> pool = {"P", "Q", "R", "S"};
  unsigned k = std::uniform_int_distribution<unsigned>(0, opt.max_predicates)(rng);
  return Signature(std::vector<std::string>(pool.begin(), pool.begin() + k));
}

ValueSet random_value_set(std::mt19937_64& rng, const GenOptions& opt) {
  std::uniform_int_distribution<int> kind(0, 3);
  std::uniform_int_distribution<std::uint64_t> value(0, opt.max_value);
  std::uniform_int_distribution<std::uint64_t> period(1, opt.max_period);
  std::bernoulli_distribution with_inf(opt.inf_probability);
  ValueSet vs;
  switch (kind(rng)) {
    case 0: { // small explicit set
      std::vector<std::uint64_t> values;
      std::uniform_int_distribution<int> count(1, 3);
      for (int i = count(rng); i > 0; --i) values.push_back(value(rng));
      vs = ValueSet::finite(std::move(values));
      break;
    }
    case 1:
      vs = ValueSet::ray(value(rng));
      break;
    case 2:
      vs = ValueSet::progression(value(rng), period(rng));
      break;
    case 3: // union of an explicit value and a progression
      vs = ValueSet::single(value(rng)).unite(ValueSet::progression(value(rng), period(rng)));
      break;
  }
  if (with_inf(rng)) vs = vs.with_inf(true);
  return vs;
}

Family random_family(std::mt19937_64& rng, const Signature& sig, const GenOptions& opt) {
  std::uniform_int_distribution<unsigned> boxes(1, opt.max_boxes);
  std::vector<Box> out;
  for (unsigned i = boxes(rng); i > 0; --i) {
    std::vector<ValueSet> cells;
    for (CellIndex c = 0; c < sig.cell_count(); ++c) cells.push_back(random_value_set(rng, opt));
    out.emplace_back(sig, std::move(cells));
  }
  return Family(sig, std::move(out));
}

TheoryVector random_theory(std::mt19937_64& rng, const Signature& sig, const GenOptions& opt) {
  std::uniform_int_distribution<std::uint64_t> value(0, opt.max_value);
  std::bernoulli_distribution inf(opt.inf_probability);
  for (;;) {
    std::vector<Card> cards;
    int inf_cells = 0;
    for (CellIndex c = 0; c < sig.cell_count(); ++c) {
      if (inf(rng)) {
        cards.push_back(Card::inf());
        ++inf_cells;
      } else {
        cards.push_back(Card::fin(value(rng)));
      }
    }
    if (opt.max_inf_cells >= 0 && inf_cells > opt.max_inf_cells) continue;
    bool nonzero = std::any_of(cards.begin(), cards.end(),
                               [](Card c) { return !(c == Card::fin(0)); });
    if (!nonzero) continue;
    return TheoryVector(sig, std::move(cards));
  }
}

namespace {

Sentence random_formula(std::mt19937_64& rng, const Signature& sig, unsigned qbudget,
                        std::vector<std::string>& vars, unsigned depth) {
  std::uniform_int_distribution<int> pick(0, 9);
  auto var_of = [&](std::size_t i) { return vars[i]; };
  auto random_var = [&]() {
    return var_of(std::uniform_int_distribution<std::size_t>(0, vars.size() - 1)(rng));
  };
  auto quantify = [&]() {
    std::string v = "v" + std::to_string(vars.size());
    vars.push_back(v);
    Sentence body = random_formula(rng, sig, qbudget - 1, vars, depth + 1);
    vars.pop_back();
    return std::bernoulli_distribution(0.5)(rng) ? forall(v, body) : exists(v, body);
  };
  if (vars.empty()) return quantify(); // atoms need a variable in scope
  if (depth >= 4 || (qbudget == 0 && pick(rng) < 6)) {
    // leaf
    if (sig.size() > 0 && std::bernoulli_distribution(0.6)(rng)) {
      std::uniform_int_distribution<std::size_t> p(0, sig.size() - 1);
      return pred(sig.symbol(p(rng)), random_var());
    }
    return eq(random_var(), random_var());
  }
  switch (pick(rng)) {
    case 0:
    case 1:
      if (qbudget > 0) return quantify();
      [[fallthrough]];
    case 2:
      return lnot(random_formula(rng, sig, qbudget, vars, depth + 1));
    case 3:
    case 4:
      return land(random_formula(rng, sig, qbudget, vars, depth + 1),
                  random_formula(rng, sig, qbudget, vars, depth + 1));
    case 5:
    case 6:
      return lor(random_formula(rng, sig, qbudget, vars, depth + 1),
                 random_formula(rng, sig, qbudget, vars, depth + 1));
    case 7:
      return implies(random_formula(rng, sig, qbudget, vars, depth + 1),
                     random_formula(rng, sig, qbudget, vars, depth + 1));
    case 8:
      return iff(random_formula(rng, sig, qbudget, vars, depth + 1),
                 random_formula(rng, sig, qbudget, vars, depth + 1));
    default:
      if (sig.size() > 0) return pred(sig.symbol(0), random_var());
      return eq(random_var(), random_var());
  }
}

} // namespace

Sentence random_sentence(std::mt19937_64& rng, const Signature& sig, unsigned max_qrank) {
  std::vector<std::string> vars;
  return random_formula(rng, sig, std::max(1u, max_qrank), vars, 0);
}

namespace {

// Greedy structural minimization of a failing family.
Family shrink_family(Family f, const std::function<bool(const Family&)>& still_fails) {
  bool improved = true;
  while (improved) {
    improved = false;
    std::vector<Family> candidates;
    const auto& boxes = f.boxes();
    for (std::size_t i = 0; i < boxes.size(); ++i) {
      std::vector<Box> dropped;
      for (std::size_t j = 0; j < boxes.size(); ++j)
        if (j != i) dropped.push_back(boxes[j]);
      candidates.emplace_back(f.sig(), std::move(dropped));
    }
    for (std::size_t i = 0; i < boxes.size(); ++i) {
      for (CellIndex c = 0; c < boxes[i].cells().size(); ++c) {
        const ValueSet& vs = boxes[i].cell(c);
        std::vector<ValueSet> simpler;
        if (vs.nats_infinite())
          simpler.push_back(ValueSet::finite(vs.values_up_to(vs.stabilization_component() + 1))
                                .with_inf(vs.contains_inf()));
        if (vs.contains_inf()) simpler.push_back(vs.with_inf(false));
        if (vs.explicit_values().size() > 1) {
          auto values = vs.explicit_values();
          values.pop_back();
          simpler.push_back(ValueSet::finite(values).with_inf(vs.contains_inf()));
        }
        for (ValueSet& alt : simpler) {
          std::vector<Box> copy = boxes;
          copy[i] = boxes[i].with_cell(c, std::move(alt));
          candidates.emplace_back(f.sig(), std::move(copy));
        }
      }
    }
    for (Family& cand : candidates) {
      if (still_fails(cand)) {
        f = std::move(cand);
        improved = true;
        break;
      }
    }
  }
  return f;
}

using PropertyFn =
    std::function<std::optional<Counterexample>(std::uint64_t budget, std::uint64_t seed)>;

Counterexample family_counterexample(const std::string& property, std::uint64_t seed,
                                     const Family& f, const std::string& note,
                                     const std::function<bool(const Family&)>& still_fails) {
  Family minimal = shrink_family(f, still_fails);
  return {property, seed, note + "\n" + print_family_file(minimal)};
}

std::optional<Counterexample> single_family_property(
    const std::string& name, std::uint64_t budget, std::uint64_t seed, const GenOptions& opt,
    const std::function<bool(const Family&)>& fails, const std::string& note) {
  for (std::uint64_t trial = 0; trial < budget; ++trial) {
    std::mt19937_64 rng(seed + trial);
    Signature sig = random_signature(rng, opt);
    Family f = random_family(rng, sig, opt);
    bool failed;
    try {
      failed = fails(f);
    } catch (const BudgetError&) {
      continue;
    }
    if (failed) return family_counterexample(name, seed + trial, f, note, fails);
  }
  return std::nullopt;
}

const std::map<std::string, PropertyFn>& property_registry() {
  static const std::map<std::string, PropertyFn> registry = [] {
    std::map<std::string, PropertyFn> reg;
    GenOptions opt;

    reg["closure-idempotent"] = [opt](std::uint64_t budget, std::uint64_t seed) {
      return single_family_property(
          "closure-idempotent", budget, seed, opt,
          [](const Family& f) {
            Family once = closure(f);
            return !family_equal_sets(closure(once), once);
          },
          "closure(closure(f)) differs from closure(f) for:");
    };

    reg["closure-extensive"] = [opt](std::uint64_t budget, std::uint64_t seed) {
      return single_family_property(
          "closure-extensive", budget, seed, opt,
          [](const Family& f) { return !family_subset(f, closure(f)).subset; },
          "f is not contained in closure(f) for:");
    };

    reg["cor2.3"] = [opt](std::uint64_t budget, std::uint64_t seed) {
      return single_family_property(
          "cor2.3", budget, seed, opt,
          [](const Family& f) {
            bool approximated_exists =
                !(new_accumulation_points(f).cardinality() == CardCount::fin(0));
            return approximated_exists == is_e_closed(f);
          },
          "an approximated theory exists iff the family is not E-closed; violated for:");
    };

    reg["thm7.3-equivalence"] = [opt](std::uint64_t budget, std::uint64_t seed) {
      return single_family_property(
          "thm7.3-equivalence", budget, seed, opt,
          [](const Family& f) {
            if (!f.cardinality().is_infinite()) return false;
            return check_e_minimal_direct(f).e_minimal != is_e_categorical(f);
          },
          "bounded e-minimality check disagrees with e-categoricity for:");
    };

    reg["closure-monotone"] = [opt](std::uint64_t budget, std::uint64_t seed)
        -> std::optional<Counterexample> {
      for (std::uint64_t trial = 0; trial < budget; ++trial) {
        std::mt19937_64 rng(seed + trial);
        Signature sig = random_signature(rng, opt);
        Family f = random_family(rng, sig, opt);
        Family g = random_family(rng, sig, opt);
        if (!family_subset(closure(f), closure(family_union(f, g))).subset)
          return Counterexample{"closure-monotone", seed + trial,
                                "closure not monotone for f:\n" + print_family_file(f) +
                                    "under union with g:\n" + print_family_file(g)};
      }
      return std::nullopt;
    };

    reg["thm1.2-additivity"] = [opt](std::uint64_t budget, std::uint64_t seed)
        -> std::optional<Counterexample> {
      for (std::uint64_t trial = 0; trial < budget; ++trial) {
        std::mt19937_64 rng(seed + trial);
        Signature sig = random_signature(rng, opt);
        Family f = random_family(rng, sig, opt);
        Family g = random_family(rng, sig, opt);
        Family lhs = closure(family_union(f, g));
        Family rhs = family_union(closure(f), closure(g));
        if (!family_equal_sets(lhs, rhs))
          return Counterexample{"thm1.2-additivity", seed + trial,
                                "closure(f + g) != closure(f) + closure(g) for f:\n" +
                                    print_family_file(f) + "and g:\n" + print_family_file(g)};
      }
      return std::nullopt;
    };

    reg["prop1.1-agreement"] = [opt](std::uint64_t budget, std::uint64_t seed)
        -> std::optional<Counterexample> {
      GenOptions topt = opt;
      topt.max_inf_cells = 2;
      for (std::uint64_t trial = 0; trial < budget; ++trial) {
        std::mt19937_64 rng(seed + trial);
        Signature sig = random_signature(rng, topt);
        Family f = random_family(rng, sig, topt);
        TheoryVector t = random_theory(rng, sig, topt);
        std::uint64_t depth = stabilization_bound(f, &t);
        bool symbolic = is_accumulation_point(f, t);
        bool brute = brute_accumulation_check(f, t, depth, 50);
        if (symbolic != brute)
          return Counterexample{"prop1.1-agreement", seed + trial,
                                "symbolic=" + std::string(symbolic ? "true" : "false") +
                                    " brute=" + std::string(brute ? "true" : "false") +
                                    " for theory " + t.to_string() + " in:\n" +
                                    print_family_file(f)};
      }
      return std::nullopt;
    };

    reg["qe-soundness"] = [opt](std::uint64_t budget, std::uint64_t seed)
        -> std::optional<Counterexample> {
      for (std::uint64_t trial = 0; trial < budget; ++trial) {
        std::mt19937_64 rng(seed + trial);
        Signature sig = random_signature(rng, opt);
        Sentence s = random_sentence(rng, sig, 2);
        std::string why;
        if (!brute_qe_check(s, sig, 3, &why))
          return Counterexample{"qe-soundness", seed + trial,
                                "normal form differs from model checking for sentence '" +
                                    print_sentence(s) + "': " + why};
      }
      return std::nullopt;
    };

    reg["prop6.3-bounds"] = [opt](std::uint64_t budget, std::uint64_t seed)
        -> std::optional<Counterexample> {
      GenOptions fopt = opt;
      fopt.inf_probability = 0.0; // members all finite, so new points = all points
      for (std::uint64_t trial = 0; trial < budget; ++trial) {
        std::mt19937_64 rng(seed + trial);
        Signature sig = random_signature(rng, fopt);
        Family f = random_family(rng, sig, fopt);
        for (std::uint64_t k = 2; k <= 3; ++k) {
          auto witnesses = spectrum_witnesses(f, k);
          if (!witnesses) continue;
          CardCount sp = e_spectrum(f);
          if (sp.is_finite() && sp.value() < k)
            return Counterexample{"prop6.3-bounds", seed + trial,
                                  std::to_string(k) +
                                      " pairwise inconsistent infinite neighbourhoods but "
                                      "e-spectrum " +
                                      sp.to_string() + " for:\n" + print_family_file(f)};
        }
      }
      return std::nullopt;
    };

    return reg;
  }();
  return registry;
}

} // namespace

std::vector<std::string> property_names() {
  std::vector<std::string> names;
  for (const auto& [name, fn] : property_registry()) names.push_back(name);
  return names;
}

std::optional<Counterexample> search_counterexample(const std::string& property,
                                                    std::uint64_t budget, std::uint64_t seed) {
  auto it = property_registry().find(property);
  if (it == property_registry().end()) {
    std::string known;
    for (const std::string& n : property_names()) known += " " + n;
    throw PreconditionError("unknown property '" + property + "'; known:" + known);
  }
  return it->second(budget, seed);
}

} // namespace mts::oracle
