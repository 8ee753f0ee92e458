#include "condec/nonblocking.hpp"

#include "condec/operations.hpp"
#include "search_tree.hpp"

#include <map>
#include <unordered_map>

namespace condec {

namespace {

Generator compose_all(const std::vector<Generator> &gs) {
    Generator out = gs.front();
    for (std::size_t i = 1; i < gs.size(); ++i)
        out = parallel(out, gs[i]);
    return out;
}

AlphabetFamily family_of(const std::vector<Generator> &components, const Alphabet &ek) {
    AlphabetFamily family;
    for (const Generator &g : components)
        family.locals.push_back(g.alphabet());
    family.coordinator = ek;
    return family;
}

void record_condition1(NonblockingReport &report, const Generator &h) {
    NonblockingResult r = is_nonblocking(h);
    report.condition1.push_back(r.nonblocking);
    report.condition1_witness.push_back(r.witness ? std::optional<Word>(r.witness->word)
                                                  : std::nullopt);
}

void finish(NonblockingReport &report, const Generator &full, bool compute_direct) {
    report.overall = report.condition2.decomposable;
    for (bool ok : report.condition1)
        report.overall = report.overall && ok;
    if (!compute_direct)
        return;
    NonblockingResult direct = is_nonblocking(full);
    report.direct = direct.nonblocking;
    if (direct.witness)
        report.direct_witness = direct.witness->word;
    detail::ensure(report.overall == direct.nonblocking,
                   "two-condition verdict disagrees with the direct nonblocking check");
}

} // namespace

AlphabetFamily CoordinatedSystem::family() const {
    return family_of(components, coordinator.alphabet());
}

void CoordinatedSystem::validate() const {
    family().validate();
}

Generator CoordinatedSystem::compose() const {
    return parallel(compose_all(components), coordinator);
}

NonblockingReport coordinated_nonblocking(const CoordinatedSystem &sys, bool compute_direct) {
    sys.validate();
    const Alphabet &ek = sys.coordinator.alphabet();
    const std::size_t n = sys.components.size();

    std::vector<Generator> abstractions;
    abstractions.reserve(n);
    for (const Generator &g : sys.components)
        abstractions.push_back(project(g, g.alphabet() & ek));

    NonblockingReport report;
    for (std::size_t i = 0; i < n; ++i) {
        Generator h = parallel(sys.components[i], sys.coordinator);
        for (std::size_t j = 0; j < n; ++j)
            if (j != i)
                h = parallel(h, abstractions[j]);
        record_condition1(report, h);
    }
    const Generator full = sys.compose();
    report.condition2 = is_cd(prefix_closure(full), sys.family());
    finish(report, full, compute_direct);
    return report;
}

Generator intersection_coordinator(const std::vector<Generator> &components,
                                   const Alphabet &ek) {
    std::vector<Generator> abstractions;
    for (const Generator &g : components)
        abstractions.push_back(project(g, g.alphabet() & ek));
    return minimize(compose_all(abstractions));
}

NonblockingReport corollary_coordinator(const std::vector<Generator> &components,
                                        const Alphabet &ek, CoordinatorMode mode,
                                        const Generator *supplied_coordinator,
                                        bool compute_direct) {
    const AlphabetFamily family = family_of(components, ek);
    family.validate();
    const Generator plant = compose_all(components);
    const Generator meet = intersection_coordinator(components, ek);

    Generator gk;
    Generator condition2_source;
    if (mode == CoordinatorMode::Intersection) {
        gk = meet;
        condition2_source = plant;
    } else {
        if (supplied_coordinator == nullptr)
            throw InvalidArgument("subset-supplied mode requires a coordinator generator");
        gk = *supplied_coordinator;
        if (gk.alphabet() != ek)
            throw InvalidArgument("coordinator alphabet " + to_string(gk.alphabet()) +
                                  " differs from E_k = " + to_string(ek));
        for (std::size_t i = 0; i < components.size(); ++i)
            if (auto r = is_nonblocking(components[i]); !r.nonblocking)
                throw PremiseViolation("component " + std::to_string(i + 1) + " is blocking",
                                       *r.witness);
        if (auto r = is_nonblocking(gk); !r.nonblocking)
            throw PremiseViolation("coordinator is blocking", *r.witness);
        if (auto w = language_subset(gk, meet))
            throw PremiseViolation(
                "coordinator marks a word outside the intersection of the projections", *w);
        condition2_source = parallel(plant, gk);
    }

    NonblockingReport report;
    for (const Generator &g : components)
        record_condition1(report, parallel(g, gk));
    report.condition2 = is_cd(prefix_closure(condition2_source), family);
    finish(report, parallel(plant, gk), compute_direct);
    return report;
}

ObserverResult observer_check(const Generator &g, const Alphabet &ek) {
    if (!ek.is_subset_of(g.alphabet()))
        throw InvalidArgument("observer: " + to_string(ek) + " is not a subset of " +
                              to_string(g.alphabet()));
    ObserverResult result;
    const Generator t = trim(g);
    if (t.num_marked() == 0)
        return result;
    const Generator d = project(t, ek);

    std::map<StateId, Generator> projected_residual;
    std::map<StateId, Generator> observed_residual;
    auto residual_of = [&](StateId q) -> const Generator & {
        auto it = projected_residual.find(q);
        if (it == projected_residual.end())
            it = projected_residual.emplace(q, project(rerooted(t, q), ek)).first;
        return it->second;
    };
    auto observed_of = [&](StateId x) -> const Generator & {
        auto it = observed_residual.find(x);
        if (it == observed_residual.end())
            it = observed_residual.emplace(x, rerooted(d, x)).first;
        return it->second;
    };

    const std::uint64_t width = d.num_states();
    std::unordered_map<std::uint64_t, std::size_t> seen;
    std::vector<std::pair<StateId, StateId>> pairs{{t.initial(), d.initial()}};
    std::vector<std::uint32_t> node{detail::SearchTree::kRoot};
    detail::SearchTree tree;
    seen.emplace(std::uint64_t{t.initial()} * width + d.initial(), 0);

    for (std::size_t head = 0; head < pairs.size(); ++head) {
        auto [q, x] = pairs[head];
        if (auto w = language_subset(observed_of(x), residual_of(q))) {
            Word s = tree.word_to(node[head], t.alphabet());
            Word ts = project_word(s, ek);
            ts.insert(ts.end(), w->word.begin(), w->word.end());
            result.all.push_back({std::move(s), std::move(ts)});
        }
        for (std::size_t e = 0; e < t.num_events(); ++e) {
            StateId q2 = t.next(q, e);
            if (q2 == kNoState)
                continue;
            StateId x2 = x;
            if (ek.contains(t.alphabet()[e])) {
                x2 = d.next(x, t.alphabet()[e]);
                detail::ensure(x2 != kNoState, "projection lost an observable step");
            }
            auto [it, fresh] = seen.try_emplace(std::uint64_t{q2} * width + x2, pairs.size());
            if (fresh) {
                pairs.emplace_back(q2, x2);
                node.push_back(tree.add(node[head], static_cast<std::uint32_t>(e)));
            }
        }
    }
    result.is_observer = result.all.empty();
    if (!result.is_observer)
        result.counterexample = result.all.front();
    return result;
}

NonconflictResult nonconflicting(const Generator &g1, const Generator &g2) {
    NonblockingResult r = is_nonblocking(parallel(trim(g1), trim(g2)));
    return {r.nonblocking, r.witness};
}

} // namespace condec
