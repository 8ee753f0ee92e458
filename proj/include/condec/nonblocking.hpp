#pragma once

#include "condec/cd_check.hpp"
#include "condec/generator.hpp"

#include <optional>
#include <vector>

namespace condec {

/// G = G_1 ∥ … ∥ G_n ∥ G_k with the coordinator over E_k ⊇ E_s.
struct CoordinatedSystem {
    std::vector<Generator> components;
    Generator coordinator;

    AlphabetFamily family() const;
    /// Throws InvalidArgument unless n >= 2 and E_s ⊆ E_k ⊆ ∪E_i.
    void validate() const;
    /// The full composition of all components and the coordinator.
    Generator compose() const;
};

struct NonblockingReport {
    /// condition1[i]: G_i ∥ G_k ∥ (∥_{j≠i} P_k(G_j)) is nonblocking.
    std::vector<bool> condition1;
    /// Blocking witness for each failed condition-1 entry.
    std::vector<std::optional<Word>> condition1_witness;
    /// Conditional decomposability of the prefix closure of L_m(G).
    CdVerdict condition2;
    bool overall = false;
    /// Ground truth from the full composition, when requested.
    std::optional<bool> direct;
    std::optional<Word> direct_witness;
};

/// Decides nonblockingness of a coordinated system by the two-condition
/// characterization. With compute_direct, also checks the full composition
/// and throws std::logic_error if the two disagree.
NonblockingReport coordinated_nonblocking(const CoordinatedSystem &sys, bool compute_direct);

enum class CoordinatorMode {
    /// Caller provides G_k with L_m(G_k) ⊆ ∥_i P_k(L_m(G_i)).
    SubsetSupplied,
    /// G_k is built as ∥_i P_k(G_i).
    Intersection,
};

/// Raised when a corollary premise fails; carries the offending word.
class PremiseViolation : public InvalidArgument {
public:
    PremiseViolation(const std::string &what, Witness witness)
        : InvalidArgument(what), witness_(std::move(witness)) {}
    const Witness &witness() const { return witness_; }

private:
    Witness witness_;
};

/// Simplified check for the two coordinator choices: condition 1 becomes
/// "each G_i ∥ G_k is nonblocking". In SubsetSupplied mode the premise and the
/// nonblockingness of every input generator are verified first; in
/// Intersection mode condition 2 is evaluated on the components alone.
NonblockingReport corollary_coordinator(const std::vector<Generator> &components,
                                        const Alphabet &ek, CoordinatorMode mode,
                                        const Generator *supplied_coordinator,
                                        bool compute_direct);

/// The intersection coordinator ∥_i P_k(G_i), with P_k(G_i) over E_i ∩ E_k.
Generator intersection_coordinator(const std::vector<Generator> &components,
                                   const Alphabet &ek);

struct ObserverCounterexample {
    /// s ∈ prefix closure of L.
    Word s;
    /// t ∈ P(L) extending P(s) with no matching extension of s inside L.
    Word t;
};

struct ObserverResult {
    bool is_observer = true;
    /// Shortest-s counterexample.
    std::optional<ObserverCounterexample> counterexample;
    /// One counterexample per violating state pair, in BFS order of s.
    std::vector<ObserverCounterexample> all;
};

/// Decides whether P: E* → ek* is an L_m(g)-observer.
ObserverResult observer_check(const Generator &g, const Alphabet &ek);

struct NonconflictResult {
    bool nonconflicting = true;
    std::optional<Witness> witness;
};

/// overline(L_m(g1)) ∥ overline(L_m(g2)) = overline(L_m(g1) ∥ L_m(g2)).
NonconflictResult nonconflicting(const Generator &g1, const Generator &g2);

} // namespace condec
