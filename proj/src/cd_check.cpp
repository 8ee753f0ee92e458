#include "condec/cd_check.hpp"

#include "condec/operations.hpp"
#include "search_tree.hpp"

#include <deque>
#include <unordered_map>

namespace condec {

namespace {

void validate_pair(const Generator &g, const Alphabet &e1, const Alphabet &e2,
                   const Alphabet &ek) {
    AlphabetFamily{{e1, e2}, ek}.validate();
    if (g.alphabet() != (e1 | e2))
        throw InvalidArgument("generator alphabet " + to_string(g.alphabet()) +
                              " differs from E1 ∪ E2 = " + to_string(e1 | e2));
}

// Visited set for the step-5 product. Dense when the state space is small
// enough, hashed otherwise.
class VisitedIndex {
public:
    static constexpr std::uint32_t kUnseen = static_cast<std::uint32_t>(-1);
    static constexpr std::uint64_t kDenseLimit = std::uint64_t{1} << 26;

    explicit VisitedIndex(std::uint64_t bound) {
        if (bound <= kDenseLimit)
            dense_.assign(bound, kUnseen);
    }
    std::uint32_t get(std::uint64_t key) const {
        if (!dense_.empty())
            return dense_[key];
        auto it = sparse_.find(key);
        return it == sparse_.end() ? kUnseen : it->second;
    }
    void set(std::uint64_t key, std::uint32_t node) {
        if (!dense_.empty())
            dense_[key] = node;
        else
            sparse_[key] = node;
    }

private:
    std::vector<std::uint32_t> dense_;
    std::unordered_map<std::uint64_t, std::uint32_t> sparse_;
};

// Steps 2–5: search L_m(G̃) ∩ co(P̃⁻¹(L_m(g))) for a shortest word. The
// second component is g completed with a sink (id n) and lifted by tilde
// self-loops; neither is materialized.
std::optional<Word> find_violation(const Generator &g, const TildeSystem &ts) {
    const Generator &gt = ts.g_tilde;
    constexpr std::size_t kLifted = static_cast<std::size_t>(-1);
    std::vector<std::size_t> to_g(gt.num_events());
    for (std::size_t e = 0; e < gt.num_events(); ++e) {
        const Event &ev = gt.alphabet()[e];
        to_g[e] = ev.tilde ? kLifted : *g.alphabet().index_of(ev);
    }

    const StateId sink = static_cast<StateId>(g.num_states());
    const std::uint64_t width = g.num_states() + 1;
    VisitedIndex visited(gt.num_states() * width);
    detail::SearchTree tree;
    std::deque<std::pair<StateId, StateId>> queue{{gt.initial(), g.initial()}};
    visited.set(std::uint64_t{gt.initial()} * width + g.initial(), detail::SearchTree::kRoot);

    while (!queue.empty()) {
        auto [x, q] = queue.front();
        queue.pop_front();
        const std::uint32_t here = visited.get(std::uint64_t{x} * width + q);
        if (gt.is_marked(x) && (q == sink || !g.is_marked(q)))
            return tree.word_to(here, gt.alphabet());
        for (std::size_t e = 0; e < gt.num_events(); ++e) {
            StateId x2 = gt.next(x, e);
            if (x2 == kNoState)
                continue;
            StateId q2 = q;
            if (to_g[e] != kLifted && q != sink) {
                q2 = g.next(q, to_g[e]);
                if (q2 == kNoState)
                    q2 = sink;
            }
            const std::uint64_t key = std::uint64_t{x2} * width + q2;
            if (visited.get(key) != VisitedIndex::kUnseen)
                continue;
            visited.set(key, tree.add(here, static_cast<std::uint32_t>(e)));
            queue.emplace_back(x2, q2);
        }
    }
    return std::nullopt;
}

// Two-alphabet check on an already-normalized generator.
CdVerdict check_pair(const Generator &g, const Alphabet &e1, const Alphabet &e2,
                     const Alphabet &ek) {
    TildeSystem ts = build_tilde(g, e1, e2, ek);
    auto hit = find_violation(g, ts);
    if (!hit)
        return {};
    detail::ensure(ts.g_tilde.accepts(*hit), "violation is not in L_m(G̃)");
    Word w = ts.erase(*hit);
    detail::ensure(!g.accepts(w), "CD witness belongs to K");
    return {false, std::move(w), std::nullopt};
}

Generator normalized(const Generator &g) {
    return minimize(trim(g));
}

} // namespace

Word TildeSystem::erase(const Word &w) const {
    return project_word(w, plain_events);
}

TildeSystem build_tilde(const Generator &g, const Alphabet &e1, const Alphabet &e2,
                        const Alphabet &ek) {
    validate_pair(g, e1, e2, ek);
    Generator first = rename_tilde(g, e1 | ek);
    Generator second = rename_tilde(g, e2 | ek);
    TildeSystem ts{parallel(first, second), tilded((e1 - ek) | (e2 - ek)), e1 | e2};
    return ts;
}

CdVerdict is_cd2(const Generator &g, const Alphabet &e1, const Alphabet &e2,
                 const Alphabet &ek) {
    validate_pair(g, e1, e2, ek);
    return check_pair(normalized(g), e1, e2, ek);
}

CdVerdict is_cd(const Generator &g, const AlphabetFamily &family) {
    family.validate();
    if (g.alphabet() != family.global())
        throw InvalidArgument("generator alphabet " + to_string(g.alphabet()) +
                              " differs from the union of local alphabets " +
                              to_string(family.global()));
    const Generator norm = normalized(g);
    for (std::size_t i = 0; i < family.locals.size(); ++i) {
        CdVerdict v = check_pair(norm, family.locals[i], family.others(i), family.coordinator);
        if (!v.decomposable) {
            v.failing_index = i;
            return v;
        }
    }
    return {};
}

} // namespace condec
