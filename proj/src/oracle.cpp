#include "condec/oracle.hpp"

#include "condec/operations.hpp"

#include <cassert>

namespace condec::oracle {

CdVerdict cd_by_definition(const Generator &g, const AlphabetFamily &family) {
    family.validate();
    if (g.alphabet() != family.global())
        throw InvalidArgument("generator alphabet " + to_string(g.alphabet()) +
                              " differs from the union of local alphabets");
    Generator composition = project(g, family.locals[0] | family.coordinator);
    for (std::size_t i = 1; i < family.locals.size(); ++i)
        composition = parallel(composition, project(g, family.locals[i] | family.coordinator));
    // K ⊆ ∥ P_{i+k}(K) always holds; only the other inclusion can fail.
    assert(!language_subset(g, composition));
    auto w = language_subset(composition, g);
    if (!w)
        return {};
    return {false, std::move(w->word), std::nullopt};
}

BoundedLanguage enumerate_words(const Generator &g, std::size_t depth, std::size_t limit) {
    BoundedLanguage out;
    out.depth = depth;
    if (g.num_states() == 0)
        return out;
    std::size_t explored = 0;
    Word prefix;
    auto visit = [&](auto &&self, StateId q) -> void {
        if (++explored > limit)
            throw InvalidArgument("enumerate_words: exploration limit exceeded");
        if (g.is_marked(q))
            out.words.insert(prefix);
        if (prefix.size() == depth)
            return;
        for (std::size_t e = 0; e < g.num_events(); ++e) {
            StateId t = g.next(q, e);
            if (t == kNoState)
                continue;
            prefix.push_back(g.alphabet()[e]);
            self(self, t);
            prefix.pop_back();
        }
    };
    visit(visit, g.initial());
    return out;
}

} // namespace condec::oracle
