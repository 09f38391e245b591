#ifndef MTSPACE_ORACLE_HPP
#define MTSPACE_ORACLE_HPP

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "mtspace/family.hpp"
#include "mtspace/sentence.hpp"

namespace mts::oracle {

/// Brute count of distinct members of f satisfying the basic sentence of t
/// at level n, with finite coordinates capped at `bound`. Counts by direct
/// per-vector constraint checks, independent of the symbolic counting path.
std::uint64_t count_basic_neighborhood(const Family& f, const TheoryVector& t, std::uint64_t n,
                                       std::uint64_t bound);

/// Literal reading of the accumulation-point characterization: for each
/// n <= depth the basic neighbourhood must keep growing as the enumeration
/// bound doubles. A test heuristic; exact on box families once depth and
/// bound pass the stabilization values.
bool brute_accumulation_check(const Family& f, const TheoryVector& t, std::uint64_t depth,
                              std::uint64_t bound);

/// Checks model_check(m, s) == evaluate(to_normal_form(s), theory_of(m)) on
/// every structure over sig up to max_size elements. On failure describes a
/// counterexample structure in *counterexample when given.
bool brute_qe_check(const Sentence& s, const Signature& sig, std::size_t max_size,
                    std::string* counterexample = nullptr);

struct GenOptions {
  unsigned max_predicates = 2;
  unsigned max_boxes = 3;
  std::uint64_t max_value = 4;
  std::uint64_t max_period = 3;
  double inf_probability = 0.3; // per value set / per cell
  int max_inf_cells = -1;       // cap for random theories; negative = none
};

Signature random_signature(std::mt19937_64& rng, const GenOptions& opt);
ValueSet random_value_set(std::mt19937_64& rng, const GenOptions& opt);
Family random_family(std::mt19937_64& rng, const Signature& sig, const GenOptions& opt);
TheoryVector random_theory(std::mt19937_64& rng, const Signature& sig, const GenOptions& opt);
Sentence random_sentence(std::mt19937_64& rng, const Signature& sig, unsigned max_qrank);

struct Counterexample {
  std::string property;
  std::uint64_t seed = 0;
  std::string description;
};

/// Registered property identifiers for search_counterexample.
std::vector<std::string> property_names();

/// Runs up to `budget` randomized trials of the named property; returns a
/// (greedily minimized) counterexample artifact, or nothing. Throws
/// PreconditionError for unknown property names.
std::optional<Counterexample> search_counterexample(const std::string& property,
                                                    std::uint64_t budget,
                                                    std::uint64_t seed = 2026);

} // namespace mts::oracle

#endif
