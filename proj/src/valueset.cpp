#include "mtspace/valueset.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "mtspace/errors.hpp"

namespace mts {

namespace {

constexpr std::uint64_t kMaxPeriodLcm = 1'000'000;
constexpr std::uint64_t kMaxExplicitSpan = 1'000'000;

bool sorted_contains(const std::vector<std::uint64_t>& v, std::uint64_t x) {
  return std::binary_search(v.begin(), v.end(), x);
}

} // namespace

ValueSet::ValueSet(std::vector<std::uint64_t> expl, std::uint64_t threshold, std::uint64_t period,
                   std::vector<std::uint64_t> residues, bool inf)
    : explicit_(std::move(expl)), threshold_(threshold), period_(period),
      residues_(std::move(residues)), inf_(inf) {
  normalize();
}

bool ValueSet::tail_contains(std::uint64_t x) const {
  return period_ > 0 && sorted_contains(residues_, x % period_);
}

void ValueSet::normalize() {
  std::sort(explicit_.begin(), explicit_.end());
  explicit_.erase(std::unique(explicit_.begin(), explicit_.end()), explicit_.end());
  // entries at or above the threshold are governed by the periodic part
  explicit_.erase(std::remove_if(explicit_.begin(), explicit_.end(),
                                 [&](std::uint64_t x) { return x >= threshold_; }),
                  explicit_.end());
  std::sort(residues_.begin(), residues_.end());
  residues_.erase(std::unique(residues_.begin(), residues_.end()), residues_.end());
  if (period_ == 0) residues_.clear();
  if (residues_.empty()) period_ = 0;

  if (period_ > 0) {
    std::vector<bool> tail(period_, false);
    for (std::uint64_t r : residues_) tail[r] = true;
    for (std::uint64_t d = 1; d <= period_; ++d) {
      if (period_ % d != 0) continue;
      bool ok = true;
      for (std::uint64_t r = 0; r < period_ && ok; ++r) ok = tail[r] == tail[r % d];
      if (ok) {
        std::vector<std::uint64_t> reduced;
        for (std::uint64_t r = 0; r < d; ++r)
          if (tail[r]) reduced.push_back(r);
        period_ = d;
        residues_ = std::move(reduced);
        break;
      }
    }
  }

  while (threshold_ > 0) {
    std::uint64_t x = threshold_ - 1;
    bool predicted = tail_contains(x);
    bool actual = !explicit_.empty() && explicit_.back() == x;
    if (predicted != actual) break;
    threshold_ = x;
    if (actual) explicit_.pop_back();
  }
}

ValueSet ValueSet::finite(std::vector<std::uint64_t> values) {
  std::uint64_t m = 0;
  for (std::uint64_t v : values) m = std::max(m, v + 1);
  return ValueSet(std::move(values), m, 0, {}, false);
}

ValueSet ValueSet::ray(std::uint64_t from) { return ValueSet({}, from, 1, {0}, false); }

ValueSet ValueSet::progression(std::uint64_t from, std::uint64_t step) {
  if (step == 0) return single(from);
  return ValueSet({}, from, step, {from % step}, false);
}

ValueSet ValueSet::any() { return ValueSet({}, 0, 1, {0}, true); }

ValueSet ValueSet::inf_only() { return ValueSet({}, 0, 0, {}, true); }

ValueSet ValueSet::with_inf(bool flag) const {
  ValueSet out = *this;
  out.inf_ = flag;
  return out;
}

bool ValueSet::contains(std::uint64_t x) const {
  if (x < threshold_) return sorted_contains(explicit_, x);
  return tail_contains(x);
}

CardCount ValueSet::nat_count() const {
  if (period_ > 0) return CardCount::aleph0();
  return CardCount::fin(explicit_.size());
}

CardCount ValueSet::value_count() const {
  return nat_count() + CardCount::fin(inf_ ? 1 : 0);
}

std::optional<std::uint64_t> ValueSet::min_nat_at_least(std::uint64_t x0) const {
  auto it = std::lower_bound(explicit_.begin(), explicit_.end(), x0);
  if (it != explicit_.end()) return *it;
  if (period_ == 0) return std::nullopt;
  std::uint64_t start = std::max(threshold_, x0);
  for (std::uint64_t x = start; x < start + period_; ++x)
    if (tail_contains(x)) return x;
  return std::nullopt;
}

std::vector<std::uint64_t> ValueSet::values_up_to(std::uint64_t bound) const {
  std::vector<std::uint64_t> out;
  for (std::uint64_t v : explicit_) {
    if (v > bound) break;
    out.push_back(v);
  }
  for (std::uint64_t x = threshold_; x <= bound && period_ > 0; ++x)
    if (tail_contains(x)) out.push_back(x);
  return out;
}

namespace {

template <typename F>
ValueSet pointwise(const ValueSet& a, const ValueSet& b, F op) {
  std::uint64_t da = std::max<std::uint64_t>(a.period(), 1);
  std::uint64_t db = std::max<std::uint64_t>(b.period(), 1);
  std::uint64_t d = std::lcm(da, db);
  if (d > kMaxPeriodLcm)
    throw BudgetError("value set periods too large to combine (lcm " + std::to_string(d) + ")");
  std::uint64_t m = std::max(a.threshold(), b.threshold());
  std::vector<std::uint64_t> expl;
  for (std::uint64_t x = 0; x < m; ++x)
    if (op(a.contains(x), b.contains(x))) expl.push_back(x);
  std::vector<std::uint64_t> residues;
  for (std::uint64_t x = m; x < m + d; ++x)
    if (op(a.contains(x), b.contains(x))) residues.push_back(x % d);
  bool inf = op(a.contains_inf(), b.contains_inf());
  return ValueSet(std::move(expl), m, d, std::move(residues), inf);
}

} // namespace

ValueSet ValueSet::unite(const ValueSet& o) const {
  return pointwise(*this, o, [](bool x, bool y) { return x || y; });
}

ValueSet ValueSet::intersect(const ValueSet& o) const {
  return pointwise(*this, o, [](bool x, bool y) { return x && y; });
}

ValueSet ValueSet::complement() const {
  std::uint64_t d = std::max<std::uint64_t>(period_, 1);
  std::vector<std::uint64_t> expl;
  for (std::uint64_t x = 0; x < threshold_; ++x)
    if (!contains(x)) expl.push_back(x);
  std::vector<std::uint64_t> residues;
  for (std::uint64_t r = 0; r < d; ++r)
    if (!tail_contains(threshold_ + r)) residues.push_back((threshold_ + r) % d);
  return ValueSet(std::move(expl), threshold_, d, std::move(residues), !inf_);
}

ValueSet ValueSet::limit_closure() const {
  return nats_infinite() ? with_inf(true) : *this;
}

std::uint64_t ValueSet::stabilization_component() const {
  return std::max(threshold_, period_);
}

namespace {

std::uint64_t parse_nat(const std::string& text, std::size_t& pos) {
  std::size_t start = pos;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
  if (pos == start) throw ParseError("expected a natural number", start);
  return std::stoull(text.substr(start, pos - start));
}

void skip_ws(const std::string& text, std::size_t& pos) {
  while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
}

bool eat(const std::string& text, std::size_t& pos, const std::string& word) {
  skip_ws(text, pos);
  if (text.compare(pos, word.size(), word) == 0) {
    pos += word.size();
    return true;
  }
  return false;
}

void add_range(std::vector<std::uint64_t>& values, std::uint64_t a, std::uint64_t b,
               std::uint64_t step, std::size_t pos) {
  if (b < a) throw ParseError("descending range", pos);
  if ((b - a) / std::max<std::uint64_t>(step, 1) > kMaxExplicitSpan)
    throw ParseError("range too large", pos);
  for (std::uint64_t x = a;; x += step) {
    values.push_back(x);
    if (b - x < step) break;
  }
}

} // namespace

ValueSet ValueSet::parse(const std::string& text) {
  ValueSet acc; // empty
  std::size_t pos = 0;
  bool first = true;
  while (true) {
    skip_ws(text, pos);
    if (pos >= text.size()) {
      if (first) throw ParseError("empty value set literal", pos);
      break;
    }
    if (!first) {
      if (!eat(text, pos, "|")) throw ParseError("expected '|' between value set pieces", pos);
      skip_ws(text, pos);
    }
    first = false;
    if (eat(text, pos, "any")) {
      acc = acc.unite(any());
      continue;
    }
    if (eat(text, pos, "inf")) {
      acc = acc.with_inf(true);
      continue;
    }
    if (eat(text, pos, "{")) {
      std::vector<std::uint64_t> values;
      skip_ws(text, pos);
      if (!eat(text, pos, "}")) {
        while (true) {
          skip_ws(text, pos);
          std::uint64_t a = parse_nat(text, pos);
          if (eat(text, pos, "..")) {
            skip_ws(text, pos);
            std::uint64_t b = parse_nat(text, pos);
            add_range(values, a, b, 1, pos);
          } else {
            values.push_back(a);
          }
          if (eat(text, pos, ",")) continue;
          if (eat(text, pos, "}")) break;
          throw ParseError("expected ',' or '}' in value set", pos);
        }
      }
      acc = acc.unite(finite(std::move(values)));
      continue;
    }
    skip_ws(text, pos);
    std::uint64_t a = parse_nat(text, pos);
    if (eat(text, pos, "..")) {
      skip_ws(text, pos);
      std::optional<std::uint64_t> b;
      if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
        b = parse_nat(text, pos);
      std::uint64_t step = 1;
      if (eat(text, pos, "step")) {
        skip_ws(text, pos);
        step = parse_nat(text, pos);
        if (step == 0) throw ParseError("step must be positive", pos);
      }
      if (b) {
        std::vector<std::uint64_t> values;
        add_range(values, a, *b, step, pos);
        acc = acc.unite(finite(std::move(values)));
      } else {
        acc = acc.unite(progression(a, step));
      }
    } else {
      acc = acc.unite(single(a));
    }
  }
  return acc;
}

std::string ValueSet::to_string() const {
  if (is_empty()) return "{}";
  if (*this == any()) return "any";
  std::vector<std::string> pieces;
  if (!explicit_.empty()) {
    if (explicit_.size() == 1) {
      pieces.push_back(std::to_string(explicit_[0]));
    } else {
      std::string p = "{";
      for (std::size_t i = 0; i < explicit_.size(); ++i) {
        if (i) p += ',';
        p += std::to_string(explicit_[i]);
      }
      p += '}';
      pieces.push_back(p);
    }
  }
  if (period_ > 0) {
    std::vector<std::uint64_t> firsts;
    for (std::uint64_t x = threshold_; x < threshold_ + period_; ++x)
      if (tail_contains(x)) firsts.push_back(x);
    std::sort(firsts.begin(), firsts.end());
    for (std::uint64_t f : firsts) {
      std::string p = std::to_string(f) + "..";
      if (period_ > 1) p += " step " + std::to_string(period_);
      pieces.push_back(p);
    }
  }
  if (inf_) pieces.push_back("inf");
  std::string out;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    if (i) out += " | ";
    out += pieces[i];
  }
  return out;
}

} // namespace mts
