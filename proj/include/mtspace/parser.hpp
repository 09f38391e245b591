#ifndef MTSPACE_PARSER_HPP
#define MTSPACE_PARSER_HPP

#include <string>
#include <utility>

#include "mtspace/sentence.hpp"
#include "mtspace/signature.hpp"

namespace mts {

/// Parses a closed sentence over `sig`.
///
/// Grammar (ASCII): quantifiers `forall x.` / `exists x.` with maximal right
/// scope; connectives `!`, `&`, `|`, `->`, `<->` in decreasing binding order;
/// atoms `P(x)`, `x = y`, and `x != y` (sugar for `!(x = y)`).
///
/// Throws ParseError on malformed input, SignatureError on predicates not in
/// `sig` or unbound variables.
Sentence parse_sentence(const std::string& text, const Signature& sig);

/// Like parse_sentence, but infers the signature from the predicate names in
/// order of first appearance.
std::pair<Sentence, Signature> parse_sentence_infer(const std::string& text);

} // namespace mts

#endif
