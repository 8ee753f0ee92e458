#pragma once

#include "condec/alphabet.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace condec {

using StateId = std::uint32_t;
inline constexpr StateId kNoState = static_cast<StateId>(-1);

/// Deterministic partial automaton with marked states (Q, E, δ, q0, F).
///
/// States are dense ids 0..num_states()-1 with a parallel name table.
/// Transitions are stored densely, indexed by (state, event index in
/// alphabet()). The first state added becomes the initial state unless
/// set_initial() says otherwise.
class Generator {
public:
    Generator() = default;
    explicit Generator(Alphabet alphabet);

    const Alphabet &alphabet() const { return alphabet_; }
    std::size_t num_events() const { return alphabet_.size(); }
    std::size_t num_states() const { return names_.size(); }
    std::size_t num_transitions() const;

    StateId initial() const { return initial_; }
    bool is_marked(StateId q) const { return marked_[q]; }
    const std::string &name(StateId q) const { return names_[q]; }
    std::size_t num_marked() const;

    /// Target of (q, event index), or kNoState when undefined.
    StateId next(StateId q, std::size_t event) const {
        return delta_[static_cast<std::size_t>(q) * alphabet_.size() + event];
    }
    /// Target of (q, e); kNoState when undefined or e is not in the alphabet.
    StateId next(StateId q, const Event &e) const;

    /// State reached by `word` from the initial state, if the run exists.
    std::optional<StateId> run(const Word &word) const;
    /// Membership in L(G).
    bool generates(const Word &word) const { return run(word).has_value(); }
    /// Membership in L_m(G).
    bool accepts(const Word &word) const;

    bool is_complete() const;

    StateId add_state(std::string name, bool marked = false);
    void set_initial(StateId q);
    void set_marked(StateId q, bool marked = true);
    /// Throws InvalidArgument on a duplicate (src, event) pair or bad ids.
    void add_transition(StateId src, std::size_t event, StateId dst);
    void add_transition(StateId src, const Event &e, StateId dst);

    /// Name lookup, linear in the number of states.
    std::optional<StateId> find_state(const std::string &name) const;

private:
    void check_state(StateId q) const;

    Alphabet alphabet_;
    std::vector<std::string> names_;
    std::vector<bool> marked_;
    std::vector<StateId> delta_;
    StateId initial_ = 0;
};

/// Shortest-word evidence attached to a failed check.
enum class WitnessKind {
    MarkedWord,           // a word of a nonempty marked language
    InCompositionNotInK,  // in the composition of projections, not in K
    BlockingString,       // reaches a state that cannot reach a marked state
    InclusionViolation,   // in L_m(g1) but not in L_m(g2)
};

const char *to_string(WitnessKind kind);

struct Witness {
    Word word;
    WitnessKind kind;
};

} // namespace condec
