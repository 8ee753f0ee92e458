#pragma once

#include "condec/cd_check.hpp"
#include "condec/generator.hpp"

#include <cstddef>
#include <set>

namespace condec::oracle {

/// Decomposability straight from the definition: materialize every
/// P_{i+k}(K), compose them, and test the composition against K.
/// Exponential in the worst case; intended for cross-checking only.
CdVerdict cd_by_definition(const Generator &g, const AlphabetFamily &family);

struct BoundedLanguage {
    std::set<Word> words;
    std::size_t depth = 0;
};

/// Default cap on explored prefixes for enumerate_words.
inline constexpr std::size_t kDefaultEnumerationLimit = 5'000'000;

/// {w ∈ L_m(g) : |w| <= depth}. Throws InvalidArgument when more than
/// `limit` prefixes would have to be explored.
BoundedLanguage enumerate_words(const Generator &g, std::size_t depth,
                                std::size_t limit = kDefaultEnumerationLimit);

} // namespace condec::oracle
