#include "condec/extension.hpp"

#include "condec/cd_check.hpp"
#include "condec/operations.hpp"
#include "search_tree.hpp"

#include <unordered_map>

namespace condec {

namespace {

struct Exploration {
    // Event to add, if the exploration of H found a reason to extend.
    std::optional<Event> addition;
};

// Smallest base of an event outside ek that occurs on `path`.
Event first_private_event(const Word &path, const Alphabet &ek) {
    Alphabet candidates;
    for (const Event &e : path)
        if (!ek.contains(e.plain()))
            candidates.insert(e.plain());
    detail::ensure(!candidates.empty(), "offending path uses only coordinator events");
    return candidates[0];
}

Exploration explore(const Generator &g, const Alphabet &e1, const Alphabet &e2,
                    const Alphabet &ek) {
    const TildeSystem ts = build_tilde(g, e1, e2, ek);
    const Generator h = trim(ts.g_tilde);

    // Scan order: tilde events, then plain events.
    std::vector<std::size_t> order;
    for (std::size_t e = 0; e < h.num_events(); ++e)
        if (h.alphabet()[e].tilde)
            order.push_back(e);
    for (std::size_t e = 0; e < h.num_events(); ++e)
        if (!h.alphabet()[e].tilde)
            order.push_back(e);

    const std::uint64_t width = g.num_states();
    std::unordered_map<std::uint64_t, std::uint32_t> seen;
    std::vector<std::pair<StateId, StateId>> pairs{{h.initial(), g.initial()}};
    detail::SearchTree tree;
    std::vector<std::uint32_t> node{detail::SearchTree::kRoot};
    seen.emplace(std::uint64_t{h.initial()} * width + g.initial(), 0);
    std::optional<Word> marking_mismatch;

    for (std::size_t head = 0; head < pairs.size(); ++head) {
        auto [x, q] = pairs[head];
        if (!marking_mismatch && h.is_marked(x) && !g.is_marked(q))
            marking_mismatch = tree.word_to(node[head], h.alphabet());
        for (std::size_t e : order) {
            StateId x2 = h.next(x, e);
            if (x2 == kNoState)
                continue;
            const Event &ev = h.alphabet()[e];
            StateId q2 = q;
            if (!ev.tilde) {
                q2 = g.next(q, ev);
                if (q2 == kNoState) {
                    if (!ek.contains(ev))
                        return {ev};
                    Word path = tree.word_to(node[head], h.alphabet());
                    path.push_back(ev);
                    return {first_private_event(path, ek)};
                }
            }
            auto [it, fresh] = seen.try_emplace(std::uint64_t{x2} * width + q2,
                                                static_cast<std::uint32_t>(pairs.size()));
            if (fresh) {
                pairs.emplace_back(x2, q2);
                node.push_back(tree.add(node[head], static_cast<std::uint32_t>(e)));
            }
        }
    }
    if (marking_mismatch)
        return {first_private_event(*marking_mismatch, ek)};
    return {};
}

} // namespace

ExtensionTrace extend2(const Generator &g, const Alphabet &e1, const Alphabet &e2,
                       const Alphabet &ek) {
    AlphabetFamily{{e1, e2}, ek}.validate();
    const Generator norm = minimize(trim(g));
    ExtensionTrace trace;
    trace.final_ek = ek;
    while (auto add = explore(norm, e1, e2, trace.final_ek).addition) {
        trace.final_ek.insert(*add);
        trace.added.push_back(*add);
        ++trace.restarts;
    }
    trace.verified = is_cd2(norm, e1, e2, trace.final_ek).decomposable;
    detail::ensure(trace.verified, "extension result is not conditionally decomposable");
    return trace;
}

ExtensionTrace extend_n(const Generator &g, const AlphabetFamily &family) {
    family.validate();
    if (g.alphabet() != family.global())
        throw InvalidArgument("generator alphabet " + to_string(g.alphabet()) +
                              " differs from the union of local alphabets " +
                              to_string(family.global()));
    const Generator norm = minimize(trim(g));
    ExtensionTrace trace;
    trace.final_ek = family.coordinator;
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t i = 0; i < family.locals.size(); ++i) {
            ExtensionTrace step =
                extend2(norm, family.locals[i], family.others(i), trace.final_ek);
            if (step.added.empty())
                continue;
            changed = true;
            trace.added.insert(trace.added.end(), step.added.begin(), step.added.end());
            trace.restarts += step.restarts;
            trace.final_ek = step.final_ek;
        }
    }
    AlphabetFamily final_family = family;
    final_family.coordinator = trace.final_ek;
    trace.verified = is_cd(norm, final_family).decomposable;
    detail::ensure(trace.verified, "n-ary extension result is not conditionally decomposable");
    return trace;
}

} // namespace condec
