#pragma once

#include "condec/generator.hpp"

#include <optional>

namespace condec {

/// Restriction to states that are reachable and co-reachable. When the
/// marked language is empty the result is the bare initial state.
Generator trim(const Generator &g);

/// Restriction to reachable states, ids renumbered in BFS order.
Generator accessible(const Generator &g);

/// Same structure with `q` as initial state, restricted to what q reaches.
Generator rerooted(const Generator &g, StateId q);

/// Total transition function over `over` (which must contain g's alphabet).
/// Adds at most one unmarked sink state, and only when something is missing.
Generator complete(const Generator &g, const Alphabet &over);

/// Swaps marked and unmarked states. Requires a complete generator.
Generator complement(const Generator &g);

/// Synchronous product: shared events move both sides, private events
/// interleave. Only the accessible part is built; ids follow BFS order and
/// names are "(p,q)".
Generator parallel(const Generator &g1, const Generator &g2);

/// Minimal deterministic generator for the natural projection onto
/// `target` (which must be a subset of g's alphabet). Preserves both the
/// generated and the marked language.
Generator project(const Generator &g, const Alphabet &target);

/// Inverse projection: adds a self-loop for every event in `extra` (which
/// must be disjoint from g's alphabet) at every state.
Generator lift_selfloops(const Generator &g, const Alphabet &extra);

/// Relabels every event outside `keep` to its tilde copy. Structure is
/// unchanged. Rejects generators that already contain tilde events.
Generator rename_tilde(const Generator &g, const Alphabet &keep);

/// Minimal partial DFA preserving both L and L_m.
Generator minimize(const Generator &g);

/// Marks every state of trim(g), so L_m of the result is the prefix
/// closure of L_m(g). Empty marked language stays empty.
Generator prefix_closure(const Generator &g);

/// Marks every reachable state, so L_m of the result is L(g).
Generator mark_all(const Generator &g);

/// Shortest marked word, or nullopt if L_m(g) is empty.
std::optional<Witness> is_empty(const Generator &g);

struct NonblockingResult {
    bool nonblocking = true;
    std::optional<Witness> witness;
};

/// Nonblocking iff every reachable state can reach a marked state. On
/// failure the witness is a shortest word into a reachable deadlock (no
/// event enabled, unmarked); without deadlocks, a shortest word into any
/// state that cannot reach a marked one.
NonblockingResult is_nonblocking(const Generator &g);

/// nullopt iff L_m(g1) ⊆ L_m(g2); otherwise the shortest word of the
/// difference. Both generators must share the same alphabet.
std::optional<Witness> language_subset(const Generator &g1, const Generator &g2);

/// L_m equality; alphabets must agree.
bool marked_equivalent(const Generator &g1, const Generator &g2);
/// L and L_m equality; alphabets must agree.
bool language_equivalent(const Generator &g1, const Generator &g2);

/// Erases every event outside `keep`.
Word project_word(const Word &w, const Alphabet &keep);

} // namespace condec
