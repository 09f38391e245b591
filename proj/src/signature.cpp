#include "mtspace/signature.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_set>

#include "mtspace/errors.hpp"

namespace mts {

namespace {
constexpr std::size_t kMaxSymbols = 16; // 2^16 cells; plenty at desk scale
}

bool valid_symbol_name(const std::string& name) {
  if (name.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(name[0]))) return false;
  for (char ch : name) {
    if (!std::isalnum(static_cast<unsigned char>(ch)) && ch != '_') return false;
  }
  return name != "forall" && name != "exists";
}

Signature::Signature(std::vector<std::string> symbols) : symbols_(std::move(symbols)) {
  if (symbols_.size() > kMaxSymbols) {
    throw SignatureError("signature too large: " + std::to_string(symbols_.size()) +
                         " symbols (limit " + std::to_string(kMaxSymbols) + ")");
  }
  std::unordered_set<std::string> seen;
  for (const auto& s : symbols_) {
    if (!valid_symbol_name(s)) throw SignatureError("invalid predicate name '" + s + "'");
    if (!seen.insert(s).second) throw SignatureError("duplicate predicate name '" + s + "'");
  }
}

std::optional<std::size_t> Signature::index_of(const std::string& name) const {
  auto it = std::find(symbols_.begin(), symbols_.end(), name);
  if (it == symbols_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - symbols_.begin());
}

bool Signature::subset_of(const Signature& other) const {
  return std::all_of(symbols_.begin(), symbols_.end(),
                     [&](const std::string& s) { return other.has_symbol(s); });
}

std::string Signature::cell_name(CellIndex c) const {
  if (symbols_.empty()) return "u";
  std::string out;
  for (std::size_t j = 0; j < symbols_.size(); ++j) {
    if (!cell_sign(c, j)) out += '!';
    out += symbols_[j];
  }
  return out;
}

CellIndex Signature::parse_cell(const std::string& pattern) const {
  std::size_t pos = 0;
  auto fail = [&](const std::string& why) -> CellIndex {
    throw ParseError("bad cell pattern '" + pattern + "': " + why, pos);
  };
  if (symbols_.empty()) {
    if (pattern != "u") fail("expected 'u' for the empty signature");
    return 0;
  }
  CellIndex cell = 0;
  for (std::size_t j = 0; j < symbols_.size(); ++j) {
    bool neg = pos < pattern.size() && pattern[pos] == '!';
    if (neg) ++pos;
    const std::string& sym = symbols_[j];
    if (pattern.compare(pos, sym.size(), sym) != 0) {
      fail("expected symbol '" + sym + "' (patterns list all symbols in signature order)");
    }
    pos += sym.size();
    if (!neg) cell |= (CellIndex{1} << j);
  }
  if (pos != pattern.size()) fail("trailing characters");
  return cell;
}

} // namespace mts
