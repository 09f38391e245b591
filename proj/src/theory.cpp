#include "mtspace/theory.hpp"

#include <algorithm>
#include <cctype>

#include "mtspace/errors.hpp"
#include "mtspace/normalform.hpp"

namespace mts {

TheoryVector::TheoryVector(Signature sig, std::vector<Card> cards)
    : sig_(std::move(sig)), cards_(std::move(cards)) {
  if (cards_.size() != sig_.cell_count())
    throw PreconditionError("theory vector has " + std::to_string(cards_.size()) +
                            " cells, signature needs " + std::to_string(sig_.cell_count()));
  if (total() == Card::fin(0))
    throw PreconditionError("theory vector has empty total (structures are nonempty)");
}

Card TheoryVector::total() const {
  Card sum = Card::fin(0);
  for (Card c : cards_) sum += c;
  return sum;
}

std::uint64_t TheoryVector::max_finite_value() const {
  std::uint64_t m = 0;
  for (Card c : cards_)
    if (c.is_fin()) m = std::max(m, c.value());
  return m;
}

bool operator<(const TheoryVector& a, const TheoryVector& b) {
  for (std::size_t i = 0; i < std::min(a.cards_.size(), b.cards_.size()); ++i) {
    if (a.cards_[i] == b.cards_[i]) continue;
    return a.cards_[i] < b.cards_[i];
  }
  return a.cards_.size() < b.cards_.size();
}

std::string TheoryVector::to_string() const {
  std::string out;
  for (CellIndex c = 0; c < cards_.size(); ++c) {
    if (cards_[c] == Card::fin(0)) continue;
    if (!out.empty()) out += ',';
    out += sig_.cell_name(c) + "=" + cards_[c].to_string();
  }
  if (out.empty()) out = sig_.cell_name(0) + "=0"; // unreachable for valid vectors
  return out;
}

namespace {

struct Entry {
  std::string pattern;
  Card card;
};

std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

Card parse_card(const std::string& text, std::size_t pos_hint) {
  std::string v = trim(text);
  if (v == "inf") return Card::inf();
  if (v.empty() || !std::all_of(v.begin(), v.end(), [](char c) {
        return std::isdigit(static_cast<unsigned char>(c));
      }))
    throw ParseError("expected a natural number or 'inf', got '" + v + "'", pos_hint);
  return Card::fin(std::stoull(v));
}

std::vector<Entry> split_entries(const std::string& text) {
  std::vector<Entry> entries;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    std::string item = text.substr(start, comma == std::string::npos ? std::string::npos
                                                                     : comma - start);
    if (!trim(item).empty()) {
      std::size_t eq = item.find('=');
      if (eq == std::string::npos)
        throw ParseError("expected 'cell=card' entry in '" + item + "'", start);
      entries.push_back({trim(item.substr(0, eq)), parse_card(item.substr(eq + 1), start)});
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (entries.empty()) throw ParseError("empty theory literal", 0);
  return entries;
}

} // namespace

TheoryVector parse_theory(const std::string& text, const Signature& sig) {
  std::vector<Card> cards(sig.cell_count(), Card::fin(0));
  for (const Entry& e : split_entries(text)) cards[sig.parse_cell(e.pattern)] = e.card;
  return TheoryVector(sig, std::move(cards));
}

std::pair<TheoryVector, Signature> parse_theory_infer(const std::string& text) {
  std::vector<Entry> entries = split_entries(text);
  std::vector<std::string> symbols;
  bool universe_only = std::all_of(entries.begin(), entries.end(),
                                   [](const Entry& e) { return e.pattern == "u"; });
  if (!universe_only) {
    for (const Entry& e : entries) {
      std::size_t i = 0;
      while (i < e.pattern.size()) {
        if (e.pattern[i] == '!') {
          ++i;
          continue;
        }
        std::size_t start = i;
        while (i < e.pattern.size() && e.pattern[i] != '!') ++i;
        std::string name = e.pattern.substr(start, i - start);
        if (std::find(symbols.begin(), symbols.end(), name) == symbols.end())
          symbols.push_back(name);
      }
    }
  }
  Signature sig(symbols);
  return {parse_theory(text, sig), sig};
}

bool is_finite_model_theory(const TheoryVector& t) {
  return std::all_of(t.cards().begin(), t.cards().end(), [](Card c) { return c.is_fin(); });
}

bool is_pseudo_finite(const TheoryVector& t) { return !is_finite_model_theory(t); }

TheoryVector finite_approximation(const TheoryVector& t, std::uint64_t n) {
  if (n == 0) throw PreconditionError("finite_approximation requires n >= 1");
  std::vector<Card> cards = t.cards();
  for (Card& c : cards)
    if (c.is_inf()) c = Card::fin(n);
  return TheoryVector(t.sig(), std::move(cards));
}

TheoryVector restrict_and_pad(const TheoryVector& t, const Signature& sub,
                              const Signature& target, PadMode mode) {
  if (!sub.subset_of(target))
    throw SignatureError("restrict_and_pad: sub signature is not included in target");
  if (!target.subset_of(t.sig()))
    throw SignatureError("restrict_and_pad: target signature is not included in the theory's");

  // Restrict: sum cell values over the forgotten predicates' sign splits.
  std::vector<Card> restricted(sub.cell_count(), Card::fin(0));
  for (CellIndex c = 0; c < t.cell_count(); ++c) {
    CellIndex s = 0;
    for (std::size_t j = 0; j < sub.size(); ++j) {
      std::size_t orig = *t.sig().index_of(sub.symbol(j));
      if (Signature::cell_sign(c, orig)) s |= (CellIndex{1} << j);
    }
    restricted[s] += t.at(c);
  }

  // Forced sign for each padded predicate.
  std::vector<std::optional<bool>> forced(target.size());
  for (std::size_t j = 0; j < target.size(); ++j) {
    const std::string& name = target.symbol(j);
    if (sub.has_symbol(name)) continue;
    if (mode == PadMode::AllEmpty) {
      forced[j] = false;
      continue;
    }
    Card in_pred = Card::fin(0);
    std::size_t orig = *t.sig().index_of(name);
    for (CellIndex c = 0; c < t.cell_count(); ++c)
      if (Signature::cell_sign(c, orig)) in_pred += t.at(c);
    bool nonempty_in_t = in_pred > Card::fin(0);
    forced[j] = !nonempty_in_t; // empty iff nonempty in t, complete iff empty in t
  }

  std::vector<Card> cards(target.cell_count(), Card::fin(0));
  for (CellIndex tau = 0; tau < target.cell_count(); ++tau) {
    bool admissible = true;
    CellIndex s = 0;
    for (std::size_t j = 0; j < target.size() && admissible; ++j) {
      bool sign = Signature::cell_sign(tau, j);
      if (forced[j].has_value() && sign != *forced[j]) admissible = false;
    }
    if (!admissible) continue;
    for (std::size_t j = 0; j < sub.size(); ++j) {
      std::size_t tj = *target.index_of(sub.symbol(j));
      if (Signature::cell_sign(tau, tj)) s |= (CellIndex{1} << j);
    }
    cards[tau] = restricted[s];
  }
  return TheoryVector(target, std::move(cards));
}

Sentence complete_sentence(const TheoryVector& t) {
  if (!is_finite_model_theory(t))
    throw PreconditionError(
        "complete_sentence: theory has an infinite cell, no complete sentence exists");
  return basic_sentence(t, t.total().value() + 1);
}

Witnessed is_finitely_axiomatizable(const TheoryVector& t) {
  if (!is_finite_model_theory(t)) return {false, std::nullopt};
  return {true, complete_sentence(t)};
}

} // namespace mts
