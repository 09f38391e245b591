#ifndef MTSPACE_SIGNATURE_HPP
#define MTSPACE_SIGNATURE_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace mts {

/// Index of a cell: a maximal conjunction of signed predicates.
/// Bit j of the index gives the sign of the j-th predicate.
using CellIndex = std::size_t;

/// An ordered finite list of distinct unary predicate names. The order is
/// canonical: cell indices depend on it.
class Signature {
public:
  Signature() = default;
  explicit Signature(std::vector<std::string> symbols);

  std::size_t size() const { return symbols_.size(); }
  std::size_t cell_count() const { return std::size_t{1} << symbols_.size(); }
  const std::vector<std::string>& symbols() const { return symbols_; }
  const std::string& symbol(std::size_t j) const { return symbols_[j]; }

  std::optional<std::size_t> index_of(const std::string& name) const;
  bool has_symbol(const std::string& name) const { return index_of(name).has_value(); }

  /// Symbol-set inclusion (order-insensitive).
  bool subset_of(const Signature& other) const;

  /// True iff predicate j is positive in cell c.
  static bool cell_sign(CellIndex c, std::size_t j) { return (c >> j) & 1u; }

  /// Canonical pattern of a cell, e.g. "P!Q"; "u" for the empty signature.
  std::string cell_name(CellIndex c) const;

  /// Parses a cell pattern: all symbols in signature order, each with an
  /// optional leading '!'. For the empty signature the pattern is "u".
  CellIndex parse_cell(const std::string& pattern) const;

  friend bool operator==(const Signature&, const Signature&) = default;

private:
  std::vector<std::string> symbols_;
};

/// True iff `name` is a valid predicate name: [A-Za-z][A-Za-z0-9_]*,
/// excluding the sentence keywords.
bool valid_symbol_name(const std::string& name);

} // namespace mts

#endif
