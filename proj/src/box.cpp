#include "mtspace/box.hpp"

#include <algorithm>

#include "mtspace/errors.hpp"

namespace mts {

Box::Box(Signature sig, std::vector<ValueSet> cells)
    : sig_(std::move(sig)), cells_(std::move(cells)) {
  if (cells_.size() != sig_.cell_count())
    throw PreconditionError("box has " + std::to_string(cells_.size()) +
                            " cells, signature needs " + std::to_string(sig_.cell_count()));
}

Box Box::whole_space(const Signature& sig) {
  return Box(sig, std::vector<ValueSet>(sig.cell_count(), ValueSet::any()));
}

Box Box::singleton(const TheoryVector& t) {
  std::vector<ValueSet> cells;
  cells.reserve(t.cell_count());
  for (Card v : t.cards())
    cells.push_back(v.is_inf() ? ValueSet::inf_only() : ValueSet::single(v.value()));
  return Box(t.sig(), std::move(cells));
}

Box Box::basic(const TheoryVector& t, std::uint64_t n) {
  if (n == 0) throw PreconditionError("basic box requires n >= 1");
  std::vector<ValueSet> cells;
  cells.reserve(t.cell_count());
  for (Card v : t.cards()) {
    if (v.is_fin() && v.value() < n) cells.push_back(ValueSet::single(v.value()));
    else cells.push_back(ValueSet::ray(n).with_inf(true));
  }
  return Box(t.sig(), std::move(cells));
}

bool Box::contains(const TheoryVector& t) const {
  if (t.sig() != sig_) throw SignatureError("box and theory vector have different signatures");
  for (CellIndex c = 0; c < cells_.size(); ++c) {
    Card v = t.at(c);
    bool in = v.is_inf() ? cells_[c].contains_inf() : cells_[c].contains(v.value());
    if (!in) return false;
  }
  return true;
}

bool Box::is_empty() const { return cardinality() == CardCount::fin(0); }

CardCount Box::cardinality() const {
  CardCount product = CardCount::fin(1);
  bool all_contain_zero = true;
  for (const ValueSet& vs : cells_) {
    product = product * vs.value_count();
    all_contain_zero = all_contain_zero && vs.contains(0);
  }
  if (product.is_finite() && all_contain_zero) {
    // the all-zero grid point is not a theory vector
    return CardCount::fin(product.value() - 1);
  }
  return product;
}

Box Box::intersect(const Box& o) const {
  if (o.sig_ != sig_) throw SignatureError("intersecting boxes over different signatures");
  std::vector<ValueSet> cells;
  cells.reserve(cells_.size());
  for (CellIndex c = 0; c < cells_.size(); ++c) cells.push_back(cells_[c].intersect(o.cells_[c]));
  return Box(sig_, std::move(cells));
}

std::vector<Box> Box::minus(const Box& o) const {
  if (o.sig_ != sig_) throw SignatureError("subtracting boxes over different signatures");
  std::vector<Box> pieces;
  for (CellIndex i = 0; i < cells_.size(); ++i) {
    ValueSet diff = cells_[i].minus(o.cells_[i]);
    if (diff.is_empty()) continue;
    std::vector<ValueSet> cells;
    cells.reserve(cells_.size());
    for (CellIndex j = 0; j < cells_.size(); ++j) {
      if (j < i) cells.push_back(cells_[j].intersect(o.cells_[j]));
      else if (j == i) cells.push_back(diff);
      else cells.push_back(cells_[j]);
    }
    Box piece(sig_, std::move(cells));
    if (!piece.is_empty()) pieces.push_back(std::move(piece));
  }
  return pieces;
}

Box Box::with_cell(CellIndex c, ValueSet vs) const {
  std::vector<ValueSet> cells = cells_;
  cells[c] = std::move(vs);
  return Box(sig_, std::move(cells));
}

std::optional<TheoryVector> Box::some_member() const {
  if (is_empty()) return std::nullopt;
  std::vector<Card> cards;
  cards.reserve(cells_.size());
  for (const ValueSet& vs : cells_) {
    if (auto v = vs.min_nat()) cards.push_back(Card::fin(*v));
    else cards.push_back(Card::inf()); // nonempty set without naturals has the flag
  }
  // ensure a nonempty universe: bump one cell off zero if needed
  bool all_zero = std::all_of(cards.begin(), cards.end(),
                              [](Card c) { return c == Card::fin(0); });
  if (all_zero) {
    for (CellIndex c = 0; c < cells_.size(); ++c) {
      if (auto v = cells_[c].min_nat_at_least(1)) {
        cards[c] = Card::fin(*v);
        break;
      }
      if (cells_[c].contains_inf()) {
        cards[c] = Card::inf();
        break;
      }
    }
  }
  return TheoryVector(sig_, std::move(cards));
}

std::uint64_t Box::stabilization_component() const {
  std::uint64_t m = 0;
  for (const ValueSet& vs : cells_) m = std::max(m, vs.stabilization_component());
  return m;
}

SubsetResult boxes_subset(const Box& b, const std::vector<Box>& cover) {
  if (b.is_empty()) return {true, std::nullopt};
  std::vector<Box> useful;
  for (const Box& c : cover)
    if (!b.intersect(c).is_empty()) useful.push_back(c);
  if (useful.empty()) return {false, b.some_member()};
  const Box first = useful.front();
  useful.erase(useful.begin());
  for (const Box& piece : b.minus(first)) {
    SubsetResult r = boxes_subset(piece, useful);
    if (!r.subset) return r;
  }
  return {true, std::nullopt};
}

} // namespace mts
