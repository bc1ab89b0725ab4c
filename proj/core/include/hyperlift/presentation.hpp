#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hyperlift/groups.hpp"

namespace hyperlift {

/// Word in x, y and their inverses. Letters: 0 = x, 1 = x^-1, 2 = y, 3 = y^-1.
using Word = std::vector<int>;

/// Parses words such as "x^4", "(xy)^2", "yx^2y^-1x^2" or "Xyxy" (capitals
/// are inverses). Throws InvalidInput on malformed text.
Word parse_word(std::string_view text);
/// Comma-separated list of words.
std::vector<Word> parse_relators(std::string_view text);
std::string word_to_string(const Word& w);

/// Value of w in g with x -> gx, y -> gy.
int evaluate(const FiniteGroup& g, const Word& w, int gx, int gy);

/// Generating pair of g satisfying every relator, if |g| == required_order.
std::optional<std::pair<int, int>> presentation_witness(const FiniteGroup& g, const std::vector<Word>& relators,
                                                        int required_order);
bool presentation_holds(const FiniteGroup& g, const std::vector<Word>& relators, int required_order);

/// Order of <x, y | relators> by coset enumeration over the trivial
/// subgroup. Throws BoundExceeded past max_cosets live cosets.
int presented_order(const std::vector<Word>& relators, int max_cosets = 200000);
/// The presented group itself (regular representation), labelled by
/// shortest words.
FiniteGroup presented_group(const std::vector<Word>& relators, int max_cosets = 200000);

}  // namespace hyperlift
