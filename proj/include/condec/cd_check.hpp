#pragma once

#include "condec/generator.hpp"

#include <optional>

namespace condec {

/// G̃ = f_{1+k}(G) ∥ f_{2+k}(G): two copies of G in which each copy renames
/// the other side's private events to tilde copies.
struct TildeSystem {
    Generator g_tilde;
    /// Tilde copies of (E1 \ Ek) ∪ (E2 \ Ek).
    Alphabet tilde_events;
    /// E = E1 ∪ E2; erase() keeps exactly these events.
    Alphabet plain_events;

    /// P̃: drops tilde events.
    Word erase(const Word &w) const;
};

TildeSystem build_tilde(const Generator &g, const Alphabet &e1, const Alphabet &e2,
                        const Alphabet &ek);

struct CdVerdict {
    bool decomposable = true;
    /// Shortest-route word in the composition of projections but not in K.
    std::optional<Word> witness;
    /// For n-ary checks, the 0-based index of the first failing local alphabet.
    std::optional<std::size_t> failing_index;
};

/// Conditional decomposability of L_m(g) w.r.t. (e1, e2, ek) via the
/// inclusion L_m(G̃) ⊆ P̃⁻¹(L_m(g)). The generator is trimmed and minimized
/// internally; completion happens on the fly inside the inclusion test.
CdVerdict is_cd2(const Generator &g, const Alphabet &e1, const Alphabet &e2,
                 const Alphabet &ek);

/// n-ary check: one two-alphabet check per i with (E_i, ∪_{j≠i} E_j, E_k).
/// Reports the smallest failing i.
CdVerdict is_cd(const Generator &g, const AlphabetFamily &family);

} // namespace condec
