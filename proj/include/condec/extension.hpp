#pragma once

#include "condec/generator.hpp"

#include <vector>

namespace condec {

struct ExtensionTrace {
    /// Events added to E_k, in the order they were added.
    std::vector<Event> added;
    std::size_t restarts = 0;
    Alphabet final_ek;
    /// Result of re-running the decomposability check under final_ek.
    bool verified = false;
};

/// Grows E_k until L_m(g) is conditionally decomposable w.r.t. (e1, e2, E_k).
///
/// Explores trim(G̃) ∥ G breadth-first (tilde events first, then plain events,
/// each in canonical order). A plain event enabled in trim(G̃) but not in G is
/// added to E_k and the exploration restarts from scratch with the new G̃.
///
/// Two cases fall outside that rule and are resolved by adding the smallest
/// event outside E_k occurring (plain or as a tilde copy) on the offending
/// path: the blocked event is already in E_k, or the exploration completes
/// but reaches a pair with G̃ marked and G unmarked.
ExtensionTrace extend2(const Generator &g, const Alphabet &e1, const Alphabet &e2,
                       const Alphabet &ek);

/// Repeats extend2 over i = 1..n with (E_i, ∪_{j≠i} E_j, current E_k) until
/// a full pass adds nothing.
ExtensionTrace extend_n(const Generator &g, const AlphabetFamily &family);

} // namespace condec
