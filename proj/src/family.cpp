#include "mtspace/family.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "mtspace/errors.hpp"

namespace mts {

namespace {
constexpr std::uint64_t kEnumerationGuard = 50'000'000;
}

Family::Family(Signature sig, std::vector<Box> boxes) : sig_(std::move(sig)) {
  for (Box& b : boxes) {
    if (b.sig() != sig_) throw SignatureError("box signature differs from the family's");
    if (!b.is_empty()) boxes_.push_back(std::move(b));
  }
}

bool Family::contains(const TheoryVector& t) const {
  if (t.sig() != sig_) throw SignatureError("family and theory vector have different signatures");
  return std::any_of(boxes_.begin(), boxes_.end(), [&](const Box& b) { return b.contains(t); });
}

CardCount Family::cardinality() const {
  CardCount total = CardCount::fin(0);
  for (const Box& b : disjoint_boxes(boxes_)) total += b.cardinality();
  return total;
}

std::vector<TheoryVector> Family::enumerate_members(std::uint64_t bound) const {
  std::set<TheoryVector> members;
  for (const Box& b : boxes_) {
    std::vector<std::vector<Card>> candidates(b.cells().size());
    std::uint64_t grid = 1;
    for (CellIndex c = 0; c < b.cells().size(); ++c) {
      for (std::uint64_t v : b.cell(c).values_up_to(bound)) candidates[c].push_back(Card::fin(v));
      if (b.cell(c).contains_inf()) candidates[c].push_back(Card::inf());
      grid *= std::max<std::uint64_t>(candidates[c].size(), 1);
      if (grid > kEnumerationGuard)
        throw BudgetError("member enumeration too large (over " +
                          std::to_string(kEnumerationGuard) + " grid points)");
      if (candidates[c].empty()) {
        grid = 0;
        break;
      }
    }
    if (grid == 0) continue;
    std::vector<std::size_t> idx(candidates.size(), 0);
    for (;;) {
      std::vector<Card> cards(candidates.size());
      bool nonzero = false;
      for (std::size_t c = 0; c < candidates.size(); ++c) {
        cards[c] = candidates[c][idx[c]];
        nonzero = nonzero || !(cards[c] == Card::fin(0));
      }
      if (nonzero) members.insert(TheoryVector(sig_, std::move(cards)));
      std::size_t i = 0;
      while (i < idx.size() && idx[i] + 1 == candidates[i].size()) idx[i++] = 0;
      if (i == idx.size()) break;
      ++idx[i];
    }
  }
  return {members.begin(), members.end()};
}

CardCount family_cardinality(const Family& f) { return f.cardinality(); }

std::vector<Box> disjoint_boxes(const std::vector<Box>& boxes) {
  std::vector<Box> disjoint;
  for (const Box& b : boxes) {
    std::vector<Box> pieces{b};
    for (const Box& d : disjoint) {
      std::vector<Box> next;
      for (const Box& p : pieces) {
        if (p.intersect(d).is_empty()) {
          next.push_back(p);
        } else {
          for (Box& q : p.minus(d)) next.push_back(std::move(q));
        }
      }
      pieces = std::move(next);
      if (pieces.empty()) break;
    }
    for (Box& p : pieces) disjoint.push_back(std::move(p));
  }
  return disjoint;
}

Family family_union(const Family& a, const Family& b) {
  if (a.sig() != b.sig()) throw SignatureError("uniting families over different signatures");
  std::vector<Box> boxes = a.boxes();
  boxes.insert(boxes.end(), b.boxes().begin(), b.boxes().end());
  return Family(a.sig(), std::move(boxes));
}

Family family_intersect(const Family& a, const Family& b) {
  if (a.sig() != b.sig()) throw SignatureError("intersecting families over different signatures");
  std::vector<Box> boxes;
  for (const Box& x : a.boxes())
    for (const Box& y : b.boxes()) {
      Box i = x.intersect(y);
      if (!i.is_empty()) boxes.push_back(std::move(i));
    }
  return Family(a.sig(), std::move(boxes));
}

Family family_difference(const Family& a, const Family& b) {
  if (a.sig() != b.sig()) throw SignatureError("subtracting families over different signatures");
  std::vector<Box> pieces = a.boxes();
  for (const Box& d : b.boxes()) {
    std::vector<Box> next;
    for (const Box& p : pieces) {
      if (p.intersect(d).is_empty()) {
        next.push_back(p);
      } else {
        for (Box& q : p.minus(d)) next.push_back(std::move(q));
      }
    }
    pieces = std::move(next);
    if (pieces.empty()) break;
  }
  return Family(a.sig(), std::move(pieces));
}

Family intersect_with_box(const Family& f, const Box& box) {
  std::vector<Box> boxes;
  for (const Box& b : f.boxes()) {
    Box i = b.intersect(box);
    if (!i.is_empty()) boxes.push_back(std::move(i));
  }
  return Family(f.sig(), std::move(boxes));
}

SubsetResult family_subset(const Family& a, const Family& b) {
  if (a.sig() != b.sig()) throw SignatureError("comparing families over different signatures");
  for (const Box& box : a.boxes()) {
    SubsetResult r = boxes_subset(box, b.boxes());
    if (!r.subset) return r;
  }
  return {true, std::nullopt};
}

bool family_equal_sets(const Family& a, const Family& b) {
  return family_subset(a, b).subset && family_subset(b, a).subset;
}

namespace {

// Boxes denoting the vectors satisfying one literal.
std::vector<Box> literal_boxes(const Signature& sig, const Literal& lit) {
  const auto& cells = lit.constraint.cells;
  const std::uint64_t n = lit.constraint.threshold;
  std::vector<Box> out;
  if (lit.positive) {
    if (cells.empty()) return {}; // at least n >= 1 elements of nothing: false
    // sum over the cell set >= n: some distribution of n over the cells fits
    std::vector<std::uint64_t> parts(cells.size(), 0);
    parts[0] = n;
    for (;;) {
      Box b = Box::whole_space(sig);
      for (std::size_t i = 0; i < cells.size(); ++i)
        b = b.with_cell(cells[i], ValueSet::ray(parts[i]).with_inf(true));
      out.push_back(std::move(b));
      // next composition of n
      std::size_t i = 0;
      while (i + 1 < parts.size() && parts[i] == 0) ++i;
      if (i + 1 >= parts.size()) break;
      std::uint64_t head = parts[i];
      parts[i] = 0;
      parts[i + 1] += 1;
      parts[0] = head - 1;
    }
  } else {
    if (cells.empty()) return {Box::whole_space(sig)}; // negation of false
    // sum over the cell set <= n-1 and all those cells finite
    std::vector<std::uint64_t> parts(cells.size(), 0);
    for (;;) {
      std::uint64_t sum = 0;
      for (std::uint64_t p : parts) sum += p;
      if (sum <= n - 1) {
        Box b = Box::whole_space(sig);
        for (std::size_t i = 0; i < cells.size(); ++i)
          b = b.with_cell(cells[i], ValueSet::single(parts[i]));
        out.push_back(std::move(b));
      }
      std::size_t i = 0;
      while (i < parts.size() && parts[i] == n - 1) parts[i++] = 0;
      if (i == parts.size()) break;
      ++parts[i];
    }
  }
  return out;
}

} // namespace

std::vector<Box> normal_form_boxes(const NormalForm& nf) {
  const Signature& sig = nf.sig();
  std::vector<Box> result;
  for (const auto& clause : nf.clauses()) {
    std::vector<Box> boxes{Box::whole_space(sig)};
    for (const Literal& lit : clause) {
      std::vector<Box> lits = literal_boxes(sig, lit);
      std::vector<Box> next;
      for (const Box& b : boxes)
        for (const Box& l : lits) {
          Box i = b.intersect(l);
          if (!i.is_empty()) next.push_back(std::move(i));
        }
      boxes = std::move(next);
      if (boxes.empty()) break;
    }
    for (Box& b : boxes) result.push_back(std::move(b));
  }
  return result;
}

Family neighborhood(const Family& f, const Sentence& s, std::uint64_t budget) {
  for (const std::string& p : predicates(s))
    if (!f.sig().has_symbol(p))
      throw SignatureError("sentence predicate '" + p + "' not in the family's signature");
  NormalForm nf = to_normal_form(s, f.sig(), budget);
  std::vector<Box> boxes;
  for (const Box& nb : normal_form_boxes(nf))
    for (const Box& fb : f.boxes()) {
      Box i = fb.intersect(nb);
      if (!i.is_empty()) boxes.push_back(std::move(i));
    }
  return Family(f.sig(), std::move(boxes));
}

CardCount neighborhood_count(const Family& f, const Sentence& s, std::uint64_t budget) {
  return neighborhood(f, s, budget).cardinality();
}

Family all_finite_model_theories(const Signature& sig) {
  return Family(sig, {Box(sig, std::vector<ValueSet>(sig.cell_count(), ValueSet::all_naturals()))});
}

namespace {

std::string strip_comment_and_trim(const std::string& line) {
  std::string s = line.substr(0, line.find('#'));
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

std::vector<std::string> split_words(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> words;
  std::string w;
  while (in >> w) words.push_back(w);
  return words;
}

} // namespace

Family parse_family_file(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;

  std::optional<Signature> sig;
  std::vector<Box> boxes;
  std::optional<std::vector<ValueSet>> current;

  auto flush = [&]() {
    if (current) {
      boxes.emplace_back(*sig, std::move(*current));
      current.reset();
    }
  };

  while (std::getline(in, line)) {
    ++lineno;
    std::string s = strip_comment_and_trim(line);
    if (s.empty()) continue;
    std::vector<std::string> words = split_words(s);
    if (words[0] == "signature") {
      if (sig) throw ParseError("duplicate signature line", lineno);
      sig = Signature(std::vector<std::string>(words.begin() + 1, words.end()));
    } else if (words[0] == "box") {
      if (!sig) throw ParseError("'box' before 'signature'", lineno);
      if (words.size() != 1) throw ParseError("'box' takes no arguments", lineno);
      flush();
      current = std::vector<ValueSet>(sig->cell_count(), ValueSet::single(0));
    } else if (words[0] == "cell") {
      if (!current) throw ParseError("'cell' outside a box", lineno);
      std::size_t eq = s.find('=');
      if (eq == std::string::npos) throw ParseError("expected 'cell <pattern> = <values>'", lineno);
      std::vector<std::string> lhs = split_words(s.substr(0, eq));
      if (lhs.size() != 2) throw ParseError("expected one cell pattern before '='", lineno);
      CellIndex c = sig->parse_cell(lhs[1]);
      (*current)[c] = ValueSet::parse(s.substr(eq + 1));
    } else {
      throw ParseError("unknown directive '" + words[0] + "'", lineno);
    }
  }
  if (!sig) throw ParseError("missing 'signature' line", 0);
  flush();
  return Family(*sig, std::move(boxes));
}

std::string print_family_file(const Family& f) {
  std::string out = "signature";
  for (const std::string& s : f.sig().symbols()) out += " " + s;
  out += '\n';
  for (const Box& b : f.boxes()) {
    out += "box\n";
    for (CellIndex c = 0; c < b.cells().size(); ++c) {
      if (b.cell(c) == ValueSet::single(0)) continue;
      out += "  cell " + f.sig().cell_name(c) + " = " + b.cell(c).to_string() + '\n';
    }
  }
  return out;
}

} // namespace mts
