#include "condec/operations.hpp"

#include "search_tree.hpp"

#include <deque>
#include <map>
#include <unordered_map>

namespace condec {

namespace {

constexpr std::size_t kNotIn = static_cast<std::size_t>(-1);

std::vector<bool> reachable_from(const Generator &g, StateId start) {
    std::vector<bool> seen(g.num_states(), false);
    std::vector<StateId> stack{start};
    seen[start] = true;
    while (!stack.empty()) {
        StateId q = stack.back();
        stack.pop_back();
        for (std::size_t e = 0; e < g.num_events(); ++e) {
            StateId t = g.next(q, e);
            if (t != kNoState && !seen[t]) {
                seen[t] = true;
                stack.push_back(t);
            }
        }
    }
    return seen;
}

std::vector<bool> coreachable(const Generator &g) {
    std::vector<std::vector<StateId>> preds(g.num_states());
    for (StateId q = 0; q < g.num_states(); ++q)
        for (std::size_t e = 0; e < g.num_events(); ++e)
            if (StateId t = g.next(q, e); t != kNoState)
                preds[t].push_back(q);
    std::vector<bool> alive(g.num_states(), false);
    std::vector<StateId> stack;
    for (StateId q = 0; q < g.num_states(); ++q)
        if (g.is_marked(q)) {
            alive[q] = true;
            stack.push_back(q);
        }
    while (!stack.empty()) {
        StateId q = stack.back();
        stack.pop_back();
        for (StateId p : preds[q])
            if (!alive[p]) {
                alive[p] = true;
                stack.push_back(p);
            }
    }
    return alive;
}

// Copies the states selected by `keep` in ascending id order.
Generator restrict_to(const Generator &g, const std::vector<bool> &keep) {
    Generator out(g.alphabet());
    std::vector<StateId> remap(g.num_states(), kNoState);
    for (StateId q = 0; q < g.num_states(); ++q)
        if (keep[q])
            remap[q] = out.add_state(g.name(q), g.is_marked(q));
    for (StateId q = 0; q < g.num_states(); ++q) {
        if (!keep[q])
            continue;
        for (std::size_t e = 0; e < g.num_events(); ++e) {
            StateId t = g.next(q, e);
            if (t != kNoState && keep[t])
                out.add_transition(remap[q], e, remap[t]);
        }
    }
    out.set_initial(remap[g.initial()]);
    return out;
}

// Reachable part with ids assigned in BFS order (events in canonical order).
Generator bfs_renumbered(const Generator &g, StateId start) {
    std::vector<StateId> order{start};
    std::vector<StateId> remap(g.num_states(), kNoState);
    remap[start] = 0;
    for (std::size_t head = 0; head < order.size(); ++head)
        for (std::size_t e = 0; e < g.num_events(); ++e) {
            StateId t = g.next(order[head], e);
            if (t != kNoState && remap[t] == kNoState) {
                remap[t] = static_cast<StateId>(order.size());
                order.push_back(t);
            }
        }
    Generator out(g.alphabet());
    for (StateId q : order)
        out.add_state(g.name(q), g.is_marked(q));
    for (StateId q : order)
        for (std::size_t e = 0; e < g.num_events(); ++e)
            if (StateId t = g.next(q, e); t != kNoState)
                out.add_transition(remap[q], e, remap[t]);
    return out;
}

std::vector<std::size_t> event_map(const Alphabet &from, const Alphabet &to) {
    std::vector<std::size_t> map(from.size(), kNotIn);
    for (std::size_t e = 0; e < from.size(); ++e)
        if (auto idx = to.index_of(from[e]))
            map[e] = *idx;
    return map;
}

std::string unique_name(const Generator &g, const std::string &wanted) {
    std::string name = wanted;
    for (int i = 1; g.find_state(name); ++i)
        name = wanted + "_" + std::to_string(i);
    return name;
}

} // namespace

Generator trim(const Generator &g) {
    std::vector<bool> keep = reachable_from(g, g.initial());
    std::vector<bool> alive = coreachable(g);
    for (StateId q = 0; q < g.num_states(); ++q)
        keep[q] = keep[q] && alive[q];
    if (!keep[g.initial()]) {
        Generator out(g.alphabet());
        out.add_state(g.name(g.initial()), false);
        return out;
    }
    return restrict_to(g, keep);
}

Generator accessible(const Generator &g) {
    return bfs_renumbered(g, g.initial());
}

Generator rerooted(const Generator &g, StateId q) {
    if (q >= g.num_states())
        throw InvalidArgument("rerooted: state id out of range");
    return bfs_renumbered(g, q);
}

Generator complete(const Generator &g, const Alphabet &over) {
    if (!g.alphabet().is_subset_of(over))
        throw InvalidArgument("complete: alphabet " + to_string(g.alphabet()) +
                              " is not contained in " + to_string(over));
    Generator out(over);
    for (StateId q = 0; q < g.num_states(); ++q)
        out.add_state(g.name(q), g.is_marked(q));
    out.set_initial(g.initial());
    std::vector<std::size_t> to_out = event_map(g.alphabet(), over);
    for (StateId q = 0; q < g.num_states(); ++q)
        for (std::size_t e = 0; e < g.num_events(); ++e)
            if (StateId t = g.next(q, e); t != kNoState)
                out.add_transition(q, to_out[e], t);
    if (out.is_complete())
        return out;
    StateId sink = out.add_state(unique_name(g, "sink"), false);
    for (StateId q = 0; q < out.num_states(); ++q)
        for (std::size_t e = 0; e < over.size(); ++e)
            if (out.next(q, e) == kNoState)
                out.add_transition(q, e, sink);
    return out;
}

Generator complement(const Generator &g) {
    if (!g.is_complete())
        throw InvalidArgument("complement: generator is not complete; call complete() first");
    Generator out = g;
    for (StateId q = 0; q < g.num_states(); ++q)
        out.set_marked(q, !g.is_marked(q));
    return out;
}

Generator parallel(const Generator &g1, const Generator &g2) {
    const Alphabet all = g1.alphabet() | g2.alphabet();
    const std::vector<std::size_t> in1 = event_map(all, g1.alphabet());
    const std::vector<std::size_t> in2 = event_map(all, g2.alphabet());

    Generator out(all);
    std::unordered_map<std::uint64_t, StateId> ids;
    std::vector<std::pair<StateId, StateId>> pairs;
    auto intern = [&](StateId p, StateId q) {
        std::uint64_t key = (std::uint64_t{p} << 32) | q;
        auto [it, fresh] = ids.try_emplace(key, static_cast<StateId>(pairs.size()));
        if (fresh) {
            pairs.emplace_back(p, q);
            out.add_state("(" + g1.name(p) + "," + g2.name(q) + ")",
                          g1.is_marked(p) && g2.is_marked(q));
        }
        return it->second;
    };

    intern(g1.initial(), g2.initial());
    for (std::size_t head = 0; head < pairs.size(); ++head) {
        auto [p, q] = pairs[head];
        for (std::size_t e = 0; e < all.size(); ++e) {
            StateId p2 = in1[e] == kNotIn ? p : g1.next(p, in1[e]);
            StateId q2 = in2[e] == kNotIn ? q : g2.next(q, in2[e]);
            if (p2 == kNoState || q2 == kNoState)
                continue;
            StateId target = intern(p2, q2);
            out.add_transition(static_cast<StateId>(head), e, target);
        }
    }
    return out;
}

Generator project(const Generator &g, const Alphabet &target) {
    if (!target.is_subset_of(g.alphabet()))
        throw InvalidArgument("project: target " + to_string(target) +
                              " is not a subset of " + to_string(g.alphabet()));
    const std::vector<std::size_t> to_target = event_map(g.alphabet(), target);

    using Subset = std::vector<StateId>;
    auto close = [&](Subset seeds) {
        std::vector<bool> in(g.num_states(), false);
        for (StateId q : seeds)
            in[q] = true;
        for (std::size_t head = 0; head < seeds.size(); ++head)
            for (std::size_t e = 0; e < g.num_events(); ++e) {
                if (to_target[e] != kNotIn)
                    continue;
                StateId t = g.next(seeds[head], e);
                if (t != kNoState && !in[t]) {
                    in[t] = true;
                    seeds.push_back(t);
                }
            }
        Subset closed;
        for (StateId q = 0; q < g.num_states(); ++q)
            if (in[q])
                closed.push_back(q);
        return closed;
    };

    Generator det(target);
    std::map<Subset, StateId> ids;
    std::vector<Subset> subsets;
    auto intern = [&](Subset s) {
        auto [it, fresh] = ids.try_emplace(s, static_cast<StateId>(subsets.size()));
        if (fresh) {
            std::string name = "{";
            bool marked = false;
            for (std::size_t i = 0; i < s.size(); ++i) {
                name += (i ? "," : "") + g.name(s[i]);
                marked = marked || g.is_marked(s[i]);
            }
            det.add_state(name + "}", marked);
            subsets.push_back(std::move(s));
        }
        return it->second;
    };

    intern(close({g.initial()}));
    for (std::size_t head = 0; head < subsets.size(); ++head) {
        for (std::size_t e = 0; e < g.num_events(); ++e) {
            if (to_target[e] == kNotIn)
                continue;
            Subset step;
            for (StateId q : subsets[head])
                if (StateId t = g.next(q, e); t != kNoState)
                    step.push_back(t);
            if (step.empty())
                continue;
            std::sort(step.begin(), step.end());
            step.erase(std::unique(step.begin(), step.end()), step.end());
            StateId dst = intern(close(std::move(step)));
            det.add_transition(static_cast<StateId>(head), to_target[e], dst);
        }
    }
    return minimize(det);
}

Generator lift_selfloops(const Generator &g, const Alphabet &extra) {
    Alphabet overlap = g.alphabet() & extra;
    if (!overlap.empty())
        throw InvalidArgument("lift_selfloops: events " + to_string(overlap) +
                              " already belong to the generator");
    const Alphabet all = g.alphabet() | extra;
    Generator out(all);
    for (StateId q = 0; q < g.num_states(); ++q)
        out.add_state(g.name(q), g.is_marked(q));
    out.set_initial(g.initial());
    const std::vector<std::size_t> to_out = event_map(g.alphabet(), all);
    for (StateId q = 0; q < g.num_states(); ++q) {
        for (std::size_t e = 0; e < g.num_events(); ++e)
            if (StateId t = g.next(q, e); t != kNoState)
                out.add_transition(q, to_out[e], t);
        for (const Event &x : extra)
            out.add_transition(q, x, q);
    }
    return out;
}

Generator rename_tilde(const Generator &g, const Alphabet &keep) {
    if (g.alphabet().has_tilde())
        throw InvalidArgument("rename_tilde: generator already contains tilde events");
    if (!keep.is_subset_of(g.alphabet()))
        throw InvalidArgument("rename_tilde: " + to_string(keep) + " is not a subset of " +
                              to_string(g.alphabet()));
    const Alphabet renamed = g.alphabet() - keep;
    const Alphabet all = keep | tilded(renamed);
    std::vector<std::size_t> to_out(g.num_events());
    for (std::size_t e = 0; e < g.num_events(); ++e) {
        const Event &ev = g.alphabet()[e];
        to_out[e] = *all.index_of(keep.contains(ev) ? ev : ev.tilded());
    }
    Generator out(all);
    for (StateId q = 0; q < g.num_states(); ++q)
        out.add_state(g.name(q), g.is_marked(q));
    out.set_initial(g.initial());
    for (StateId q = 0; q < g.num_states(); ++q)
        for (std::size_t e = 0; e < g.num_events(); ++e)
            if (StateId t = g.next(q, e); t != kNoState)
                out.add_transition(q, to_out[e], t);
    return out;
}

Generator minimize(const Generator &g) {
    const Generator reach = accessible(g);
    const std::size_t n = reach.num_states();
    const std::size_t m = reach.num_events();
    const StateId sink = static_cast<StateId>(n);
    auto succ = [&](StateId q, std::size_t e) -> StateId {
        if (q == sink)
            return sink;
        StateId t = reach.next(q, e);
        return t == kNoState ? sink : t;
    };

    // Moore refinement over the sink-completed automaton, starting from the
    // split {sink}, {marked}, {unmarked}.
    std::vector<std::uint32_t> block(n + 1);
    for (StateId q = 0; q < n; ++q)
        block[q] = reach.is_marked(q) ? 1 : 2;
    block[sink] = 0;
    std::size_t num_blocks = 0;
    for (;;) {
        std::map<std::vector<std::uint32_t>, std::uint32_t> signatures;
        std::vector<std::uint32_t> refined(n + 1);
        std::vector<std::uint32_t> sig(m + 1);
        for (StateId q = 0; q <= n; ++q) {
            sig[0] = block[q];
            for (std::size_t e = 0; e < m; ++e)
                sig[e + 1] = block[succ(q, e)];
            auto [it, fresh] = signatures.try_emplace(
                sig, static_cast<std::uint32_t>(signatures.size()));
            refined[q] = it->second;
        }
        block.swap(refined);
        if (signatures.size() == num_blocks)
            break;
        num_blocks = signatures.size();
    }

    // Quotient without the sink block; ids by BFS from the initial block,
    // names from the first member of each block.
    const std::uint32_t sink_block = block[sink];
    std::vector<StateId> representative(num_blocks, kNoState);
    for (StateId q = 0; q < n; ++q)
        if (representative[block[q]] == kNoState)
            representative[block[q]] = q;
    Generator quotient(reach.alphabet());
    std::vector<StateId> block_id(num_blocks, kNoState);
    std::vector<std::uint32_t> order{block[reach.initial()]};
    block_id[order[0]] = quotient.add_state(reach.name(representative[order[0]]),
                                            reach.is_marked(representative[order[0]]));
    for (std::size_t head = 0; head < order.size(); ++head) {
        StateId rep = representative[order[head]];
        for (std::size_t e = 0; e < m; ++e) {
            std::uint32_t b = block[succ(rep, e)];
            if (b == sink_block)
                continue;
            if (block_id[b] == kNoState) {
                block_id[b] = quotient.add_state(reach.name(representative[b]),
                                                 reach.is_marked(representative[b]));
                order.push_back(b);
            }
            quotient.add_transition(block_id[order[head]], e, block_id[b]);
        }
    }
    return quotient;
}

Generator prefix_closure(const Generator &g) {
    Generator out = trim(g);
    if (out.num_marked() == 0)
        return out;
    for (StateId q = 0; q < out.num_states(); ++q)
        out.set_marked(q, true);
    return out;
}

Generator mark_all(const Generator &g) {
    Generator out = accessible(g);
    for (StateId q = 0; q < out.num_states(); ++q)
        out.set_marked(q, true);
    return out;
}

std::optional<Witness> is_empty(const Generator &g) {
    detail::SearchTree tree;
    std::vector<std::uint32_t> node(g.num_states(), 0);
    std::vector<bool> seen(g.num_states(), false);
    std::deque<StateId> queue{g.initial()};
    seen[g.initial()] = true;
    while (!queue.empty()) {
        StateId q = queue.front();
        queue.pop_front();
        if (g.is_marked(q)) {
            Word w = tree.word_to(node[q], g.alphabet());
            detail::ensure(g.accepts(w), "is_empty witness is not marked");
            return Witness{std::move(w), WitnessKind::MarkedWord};
        }
        for (std::size_t e = 0; e < g.num_events(); ++e) {
            StateId t = g.next(q, e);
            if (t != kNoState && !seen[t]) {
                seen[t] = true;
                node[t] = tree.add(node[q], static_cast<std::uint32_t>(e));
                queue.push_back(t);
            }
        }
    }
    return std::nullopt;
}

NonblockingResult is_nonblocking(const Generator &g) {
    const std::vector<bool> alive = coreachable(g);
    detail::SearchTree tree;
    std::vector<std::uint32_t> node(g.num_states(), 0);
    std::vector<bool> seen(g.num_states(), false);
    std::deque<StateId> queue{g.initial()};
    seen[g.initial()] = true;
    std::optional<StateId> first_blocked;
    std::optional<StateId> deadlock;
    while (!queue.empty() && !deadlock) {
        StateId q = queue.front();
        queue.pop_front();
        bool enabled = false;
        for (std::size_t e = 0; e < g.num_events(); ++e) {
            StateId t = g.next(q, e);
            if (t == kNoState)
                continue;
            enabled = true;
            if (!seen[t]) {
                seen[t] = true;
                node[t] = tree.add(node[q], static_cast<std::uint32_t>(e));
                queue.push_back(t);
            }
        }
        if (!alive[q]) {
            if (!first_blocked)
                first_blocked = q;
            if (!enabled)
                deadlock = q;
        }
    }
    if (!first_blocked)
        return {true, std::nullopt};
    // Prefer a word ending in a deadlock; livelocks only get the shortest
    // word into the blocking region.
    const StateId q = deadlock ? *deadlock : *first_blocked;
    Word w = tree.word_to(node[q], g.alphabet());
    detail::ensure(g.run(w) == q, "blocking witness does not reach its state");
    return {false, Witness{std::move(w), WitnessKind::BlockingString}};
}

std::optional<Witness> language_subset(const Generator &g1, const Generator &g2) {
    if (g1.alphabet() != g2.alphabet())
        throw InvalidArgument("language_subset: alphabets differ (" + to_string(g1.alphabet()) +
                              " vs " + to_string(g2.alphabet()) + ")");
    // On-the-fly product of g1 with the complement of complete(g2); the
    // completion sink is the extra id n2.
    const std::uint64_t n2 = g2.num_states() + 1;
    const StateId sink = static_cast<StateId>(g2.num_states());
    detail::SearchTree tree;
    std::unordered_map<std::uint64_t, std::uint32_t> seen;
    std::deque<std::pair<StateId, StateId>> queue{{g1.initial(), g2.initial()}};
    seen.emplace(std::uint64_t{g1.initial()} * n2 + g2.initial(), detail::SearchTree::kRoot);
    while (!queue.empty()) {
        auto [p, q] = queue.front();
        queue.pop_front();
        const std::uint32_t here = seen[std::uint64_t{p} * n2 + q];
        if (g1.is_marked(p) && (q == sink || !g2.is_marked(q))) {
            Word w = tree.word_to(here, g1.alphabet());
            detail::ensure(g1.accepts(w) && !g2.accepts(w), "inclusion witness");
            return Witness{std::move(w), WitnessKind::InclusionViolation};
        }
        for (std::size_t e = 0; e < g1.num_events(); ++e) {
            StateId p2 = g1.next(p, e);
            if (p2 == kNoState)
                continue;
            StateId q2 = q == sink ? sink : g2.next(q, e);
            if (q2 == kNoState)
                q2 = sink;
            auto key = std::uint64_t{p2} * n2 + q2;
            if (seen.contains(key))
                continue;
            seen.emplace(key, tree.add(here, static_cast<std::uint32_t>(e)));
            queue.emplace_back(p2, q2);
        }
    }
    return std::nullopt;
}

bool marked_equivalent(const Generator &g1, const Generator &g2) {
    return !language_subset(g1, g2) && !language_subset(g2, g1);
}

bool language_equivalent(const Generator &g1, const Generator &g2) {
    return marked_equivalent(g1, g2) && marked_equivalent(mark_all(g1), mark_all(g2));
}

Word project_word(const Word &w, const Alphabet &keep) {
    Word out;
    for (const Event &e : w)
        if (keep.contains(e))
            out.push_back(e);
    return out;
}

} // namespace condec
