#include "support/testkit.hpp"

#include <doctest.h>

using namespace testkit;

namespace {

std::vector<Word> sample_words(const WordSet &set) {
    return {set.begin(), set.end()};
}

} // namespace

TEST_CASE("events and alphabets keep canonical order") {
    Alphabet a{Event("b"), Event("a", true), Event("a"), Event("b")};
    REQUIRE(a.size() == 3);
    CHECK(a[0] == Event("a"));
    CHECK(a[1] == Event("b"));
    CHECK(a[2] == Event("a", true));
    CHECK(Event("a") != Event("a", true));
    CHECK(Event::parse("~c") == Event("c", true));
    CHECK(Event::parse("~c").str() == "~c");
    CHECK_THROWS_AS(Event("has space"), InvalidArgument);
    CHECK_THROWS_AS(Event(""), InvalidArgument);
    CHECK_THROWS_AS(Event("~x"), InvalidArgument);
    CHECK((abc("abc") & abc("bcd")) == abc("bc"));
    CHECK((abc("abc") - abc("bcd")) == abc("a"));
    CHECK(to_string(parse_word("c d b")) == "c d b");
    CHECK(parse_word("").empty());
}

TEST_CASE("alphabet family validation names the violated inclusion") {
    AlphabetFamily ok{{abc("abd"), abc("acd")}, abc("ad")};
    CHECK_NOTHROW(ok.validate());
    CHECK(ok.shared() == abc("ad"));
    AlphabetFamily missing_shared{{abc("abd"), abc("acd")}, abc("a")};
    CHECK_THROWS_WITH_AS(missing_shared.validate(), doctest::Contains("E_s"), InvalidArgument);
    AlphabetFamily too_big{{abc("ab"), abc("bc")}, abc("bz")};
    CHECK_THROWS_WITH_AS(too_big.validate(), doctest::Contains("E_k"), InvalidArgument);
    AlphabetFamily single{{abc("ab")}, abc("")};
    CHECK_THROWS_AS(single.validate(), InvalidArgument);
}

TEST_CASE("generator rejects nondeterminism and unknown events") {
    Generator g(abc("ab"));
    StateId q0 = g.add_state("q0");
    StateId q1 = g.add_state("q1", true);
    g.add_transition(q0, Event("a"), q1);
    CHECK_THROWS_AS(g.add_transition(q0, Event("a"), q0), InvalidArgument);
    CHECK_THROWS_AS(g.add_transition(q0, Event("z"), q0), InvalidArgument);
    CHECK(g.accepts(w("a")));
    CHECK_FALSE(g.accepts(w("")));
    CHECK_FALSE(g.generates(w("b")));
}

TEST_CASE("trim") {
    SUBCASE("removes an unreachable state and keeps the language") {
        Generator g = example_l();
        StateId orphan = g.add_state("orphan", true);
        g.add_transition(orphan, Event("a"), g.initial());
        REQUIRE(g.num_states() == 10);
        Generator t = trim(g);
        CHECK(t.num_states() == 9);
        CHECK_FALSE(t.find_state("orphan"));
        CHECK(bounded(t, 4) == words({"ba", "cdb", "dcb"}));
    }
    SUBCASE("empty marked language leaves the bare initial state") {
        Generator g(abc("ab"));
        StateId q0 = g.add_state("q0");
        StateId q1 = g.add_state("q1");
        g.add_transition(q0, Event("a"), q1);
        Generator t = trim(g);
        CHECK(t.num_states() == 1);
        CHECK(t.num_transitions() == 0);
        CHECK(t.num_marked() == 0);
    }
    SUBCASE("random generators: trim is nonblocking and L(trim) = closure of L_m") {
        std::mt19937_64 rng(7);
        for (int i = 0; i < 60; ++i) {
            Generator g = random_generator(rng, abc("abc"));
            Generator t = trim(g);
            // An empty marked language leaves a blocking initial state.
            CHECK(is_nonblocking(t).nonblocking == is_empty(g).has_value());
            // Every co-reachable state reaches a marked one within |Q| steps.
            if (is_empty(g))
                for (const Word &x : bounded_generated(t, 8))
                    CHECK(extendable(t, x, g.num_states()));
            CHECK(bounded(t, 8) == bounded(g, 8));
        }
    }
}

TEST_CASE("complete") {
    SUBCASE("already complete: unchanged") {
        Generator g(abc("a"));
        g.add_state("q", true);
        g.add_transition(0, Event("a"), 0);
        Generator c = complete(g, abc("a"));
        CHECK(serialize_gen(c) == serialize_gen(g));
    }
    SUBCASE("prefix tree of {ba}: one sink absorbs |Q'||E| - |delta| transitions") {
        Generator g = prefix_tree(abc("ab"), {"ba"});
        Generator c = complete(g, abc("ab"));
        CHECK(c.num_states() == g.num_states() + 1);
        const StateId sink = static_cast<StateId>(g.num_states());
        std::size_t into_sink = 0;
        for (StateId q = 0; q < c.num_states(); ++q)
            for (std::size_t e = 0; e < c.num_events(); ++e)
                into_sink += c.next(q, e) == sink;
        CHECK(into_sink == c.num_states() * 2 - g.num_transitions());
        CHECK(into_sink == 6);
        CHECK_FALSE(c.is_marked(sink));
        CHECK(c.is_complete());
    }
    SUBCASE("growing the alphabet routes new events to the sink") {
        Generator g(abc("a"));
        g.add_state("q0");
        g.add_state("q1", true);
        g.add_transition(0, Event("a"), 1);
        Generator c = complete(g, abc("ab"));
        const StateId sink = 2;
        for (StateId q = 0; q < 2; ++q)
            CHECK(c.next(q, Event("b")) == sink);
        CHECK(bounded(c, 6) == bounded(g, 6));
    }
    SUBCASE("alphabet must grow") {
        CHECK_THROWS_AS(complete(prefix_tree(abc("ab"), {"ab"}), abc("a")), InvalidArgument);
    }
}

TEST_CASE("complement") {
    const Generator c = complete(prefix_tree(abc("ab"), {"ba"}), abc("ab"));
    const Generator co = complement(c);
    for (const char *x : {"", "a", "b", "ab"})
        CHECK(co.accepts(w(x)));
    CHECK_FALSE(co.accepts(w("ba")));
    // Depth-3 membership oracle: exactly the words other than "ba".
    for (const Word &x : all_words(abc("ab"), 3))
        CHECK(co.accepts(x) == (x != w("ba")));
    CHECK(serialize_gen(complement(co)) == serialize_gen(c));

    Generator all(abc("ab"));
    all.add_state("q", true);
    all.add_transition(0, Event("a"), 0);
    all.add_transition(0, Event("b"), 0);
    CHECK_FALSE(is_empty(all).has_value() == false);
    CHECK_FALSE(is_empty(complement(all)).has_value());

    CHECK_THROWS_AS(complement(prefix_tree(abc("ab"), {"ba"})), InvalidArgument);
}

TEST_CASE("parallel") {
    SUBCASE("{ab} over {a,b} with {a} over {a}") {
        Generator g1 = prefix_tree(abc("ab"), {"ab"});
        Generator g2 = prefix_tree(abc("a"), {"a"});
        Generator p = parallel(g1, g2);
        CHECK(bounded(p, 6) == words({"ab"}));
        CHECK(bounded(p, 6) == compose_sets(bounded(g1, 6), abc("ab"), bounded(g2, 6), abc("a"), 6));
    }
    SUBCASE("identical sides") {
        Generator g = example_l();
        CHECK(language_equivalent(parallel(g, g), g));
    }
    SUBCASE("disjoint one-state loops give the full shuffle") {
        Generator ga(abc("a"));
        ga.add_state("x", true);
        ga.add_transition(0, Event("a"), 0);
        Generator gb(abc("b"));
        gb.add_state("y", true);
        gb.add_transition(0, Event("b"), 0);
        Generator p = parallel(ga, gb);
        CHECK(bounded_generated(p, 4).size() == all_words(abc("ab"), 4).size());
        CHECK(p.name(p.initial()) == "(x,y)");
    }
    SUBCASE("definition of the synchronous product, by enumeration") {
        std::mt19937_64 rng(11);
        for (int i = 0; i < 80; ++i) {
            Alphabet a1 = i % 2 ? abc("abc") : abc("ab");
            Alphabet a2 = i % 3 ? abc("bcd") : abc("cd");
            Generator g1 = random_generator(rng, a1);
            Generator g2 = random_generator(rng, a2);
            Generator p = parallel(g1, g2);
            for (const Word &x : all_words(a1 | a2, 5)) {
                bool expected = g1.accepts(erase_outside(x, a1)) && g2.accepts(erase_outside(x, a2));
                CHECK(p.accepts(x) == expected);
                bool gen = g1.generates(erase_outside(x, a1)) && g2.generates(erase_outside(x, a2));
                CHECK(p.generates(x) == gen);
            }
        }
    }
}

TEST_CASE("project") {
    const Generator l = example_l();
    CHECK(bounded(project(l, abc("abc")), 6) == words({"ba", "cb"}));
    CHECK(bounded(project(l, abc("abd")), 6) == words({"ba", "db"}));
    CHECK(bounded(project(l, abc("ab")), 6) == words({"ba", "b"}));
    CHECK(language_equivalent(project(l, l.alphabet()), l));
    CHECK(project(l, abc("abc")).alphabet() == abc("abc"));
    CHECK_THROWS_AS(project(l, abc("abz")), InvalidArgument);

    SUBCASE("random: projected words are exactly those with a preimage") {
        std::mt19937_64 rng(5);
        for (int i = 0; i < 60; ++i) {
            Generator g = random_generator(rng, abc("abcd"));
            Alphabet target = i % 2 ? abc("ac") : abc("bcd");
            Generator p = project(g, target);
            for (const Word &t : all_words(target, 4))
                CHECK(p.accepts(t) == has_preimage(g, t, target));
            // Generated language: projection of L(g) = projection of L_m(mark_all(g)).
            Generator gm = mark_all(g);
            for (const Word &t : all_words(target, 4))
                CHECK(p.generates(t) == has_preimage(gm, t, target));
        }
    }
}

TEST_CASE("lift_selfloops") {
    const Generator g = prefix_tree(abc("ab"), {"ab"});
    CHECK(serialize_gen(lift_selfloops(g, Alphabet{})) == serialize_gen(g));

    const Alphabet extra{Event("c", true)};
    Generator lifted = lift_selfloops(g, extra);
    for (const char *x : {"~cab", "a~cb", "ab~c"}) {
        Word word;
        for (std::size_t i = 0; x[i]; ++i) {
            if (x[i] == '~') {
                word.emplace_back(std::string(1, x[++i]), true);
            } else {
                word.emplace_back(std::string(1, x[i]));
            }
        }
        CHECK(lifted.accepts(word));
    }
    for (const Word &x : all_words(lifted.alphabet(), 4))
        CHECK(lifted.accepts(x) == (erase_outside(x, g.alphabet()) == w("ab")));
    CHECK(language_equivalent(project(lifted, g.alphabet()), g));
    CHECK_THROWS_AS(lift_selfloops(g, abc("b")), InvalidArgument);
}

TEST_CASE("rename_tilde") {
    const Generator g = example_l();
    CHECK(serialize_gen(rename_tilde(g, g.alphabet())) == serialize_gen(g));

    Generator r = rename_tilde(g, abc("abd"));
    CHECK(r.alphabet() == Alphabet{Event("a"), Event("b"), Event("d"), Event("c", true)});
    CHECK(r.num_states() == g.num_states());
    CHECK(r.num_transitions() == g.num_transitions());
    CHECK(r.accepts(parse_word("~c d b", true)));
    CHECK_THROWS_AS(rename_tilde(r, abc("ab")), InvalidArgument);

    std::mt19937_64 rng(3);
    for (int i = 0; i < 40; ++i) {
        Generator h = random_generator(rng, abc("abcd"));
        Alphabet keep = i % 2 ? abc("ab") : abc("acd");
        Generator f = rename_tilde(h, keep);
        CHECK(marked_equivalent(project(f, keep), project(h, keep)));
        CHECK(project_set(bounded(f, 6), keep) == project_set(bounded(h, 6), keep));
    }
}

namespace {

// Brute force: smallest quotient of the reachable part of g, over all set
// partitions of its states, that is deterministic and language-equivalent.
std::size_t smallest_quotient(const Generator &g) {
    const Generator r = accessible(g);
    const std::size_t n = r.num_states();
    std::vector<std::uint32_t> block(n, 0);
    std::size_t best = n;
    auto try_partition = [&](std::size_t blocks) {
        Generator q(r.alphabet());
        for (std::size_t b = 0; b < blocks; ++b)
            q.add_state("b" + std::to_string(b));
        for (StateId s = 0; s < n; ++s) {
            if (r.is_marked(s))
                q.set_marked(block[s]);
            for (std::size_t e = 0; e < r.num_events(); ++e) {
                StateId t = r.next(s, e);
                if (t == kNoState)
                    continue;
                StateId have = q.next(block[s], e);
                if (have == kNoState)
                    q.add_transition(block[s], e, block[t]);
                else if (have != block[t])
                    return;
            }
        }
        q.set_initial(block[r.initial()]);
        if (language_equivalent(q, r))
            best = std::min(best, blocks);
    };
    // Restricted-growth strings enumerate every set partition once.
    auto rec = [&](auto &&self, std::size_t i, std::size_t used) -> void {
        if (i == n) {
            try_partition(used);
            return;
        }
        for (std::uint32_t b = 0; b <= used; ++b) {
            block[i] = b;
            self(self, i + 1, std::max<std::size_t>(used, b + 1));
        }
    };
    rec(rec, 0, 0);
    return best;
}

} // namespace

TEST_CASE("minimize") {
    SUBCASE("bisimilar branches merge") {
        Generator g(abc("abc"));
        StateId q0 = g.add_state("q0");
        StateId p1 = g.add_state("p1");
        StateId p2 = g.add_state("p2", true);
        StateId r1 = g.add_state("r1");
        StateId r2 = g.add_state("r2", true);
        g.add_transition(q0, Event("a"), p1);
        g.add_transition(p1, Event("b"), p2);
        g.add_transition(q0, Event("c"), r1);
        g.add_transition(r1, Event("b"), r2);
        Generator m = minimize(g);
        CHECK(m.num_states() == 3);
        CHECK(language_equivalent(m, g));
        CHECK(minimize(m).num_states() == m.num_states());
    }
    SUBCASE("dead but generating states are kept apart from the sink") {
        Generator g(abc("ab"));
        g.add_state("q0", true);
        g.add_state("dead");
        g.add_transition(0, Event("a"), 1);
        Generator m = minimize(g);
        CHECK(m.num_states() == 2);
        CHECK(m.generates(w("a")));
    }
    SUBCASE("random tiny inputs match the smallest brute-force quotient") {
        std::mt19937_64 rng(21);
        RandomSpec spec;
        spec.max_states = 4;
        for (int i = 0; i < 120; ++i) {
            Generator g = random_generator(rng, abc("ab"), spec);
            Generator m = minimize(g);
            CHECK(language_equivalent(m, g));
            CHECK(bounded(m, 8) == bounded(g, 8));
            CHECK(m.num_states() == smallest_quotient(g));
            CHECK(minimize(m).num_states() == m.num_states());
        }
    }
}

TEST_CASE("is_empty returns a shortest marked word") {
    Generator none(abc("ab"));
    none.add_state("q");
    none.add_transition(0, Event("a"), 0);
    CHECK_FALSE(is_empty(none).has_value());

    auto hit = is_empty(prefix_tree(abc("abcd"), {"ba", "cdb"}));
    REQUIRE(hit);
    CHECK(hit->word == w("ba"));
    CHECK(hit->kind == WitnessKind::MarkedWord);

    Generator eps(abc("a"));
    eps.add_state("q", true);
    REQUIRE(is_empty(eps));
    CHECK(is_empty(eps)->word.empty());
}

TEST_CASE("is_nonblocking") {
    std::mt19937_64 rng(2);
    for (int i = 0; i < 30; ++i) {
        Generator g = random_generator(rng, abc("abc"));
        CHECK(is_nonblocking(trim(g)).nonblocking == is_empty(g).has_value());
    }

    Generator chain(abc("ab"));
    chain.add_state("q0");
    chain.add_state("q1", true);
    chain.add_state("q2");
    chain.add_transition(0, Event("a"), 1);
    chain.add_transition(1, Event("b"), 2);
    NonblockingResult r = is_nonblocking(chain);
    CHECK_FALSE(r.nonblocking);
    REQUIRE(r.witness);
    CHECK(r.witness->word == w("ab"));
    CHECK(r.witness->kind == WitnessKind::BlockingString);

    // Nothing is co-reachable; the witness runs into the deadlock.
    Generator nothing(abc("a"));
    nothing.add_state("q0");
    nothing.add_state("q1");
    nothing.add_transition(0, Event("a"), 1);
    NonblockingResult n = is_nonblocking(nothing);
    CHECK_FALSE(n.nonblocking);
    REQUIRE(n.witness);
    CHECK(n.witness->word == w("a"));

    // Livelock only: shortest word into the blocking region.
    Generator spin(abc("ab"));
    spin.add_state("q0", true);
    spin.add_state("q1");
    spin.add_transition(0, Event("b"), 1);
    spin.add_transition(1, Event("a"), 1);
    NonblockingResult s = is_nonblocking(spin);
    CHECK_FALSE(s.nonblocking);
    REQUIRE(s.witness);
    CHECK(s.witness->word == w("b"));

    std::mt19937_64 wrng(3);
    for (int i = 0; i < 60; ++i) {
        Generator g = random_generator(wrng, abc("abc"));
        NonblockingResult res = is_nonblocking(g);
        if (res.nonblocking)
            continue;
        REQUIRE(res.witness);
        CHECK(g.generates(res.witness->word));
        CHECK_FALSE(extendable(g, res.witness->word, g.num_states()));
    }
}

TEST_CASE("language_subset") {
    const Generator l = example_l();
    CHECK_FALSE(language_subset(l, l));
    const Generator ba = prefix_tree(abc("abcd"), {"ba"});
    CHECK_FALSE(language_subset(ba, l));
    auto w1 = language_subset(l, ba);
    REQUIRE(w1);
    CHECK(w1->word == w("cdb"));
    CHECK(w1->kind == WitnessKind::InclusionViolation);

    Generator empty(abc("abcd"));
    empty.add_state("q");
    CHECK_FALSE(language_subset(empty, l));
    CHECK_THROWS_AS(language_subset(l, prefix_tree(abc("ab"), {"ba"})), InvalidArgument);

    std::mt19937_64 rng(17);
    for (int i = 0; i < 80; ++i) {
        Generator g1 = random_generator(rng, abc("abc"));
        Generator g2 = random_generator(rng, abc("abc"));
        auto v = language_subset(g1, g2);
        WordSet b1 = bounded(g1, 6);
        WordSet b2 = bounded(g2, 6);
        bool bounded_subset = std::includes(b2.begin(), b2.end(), b1.begin(), b1.end());
        if (!v) {
            CHECK(bounded_subset);
        } else {
            CHECK(g1.accepts(v->word));
            CHECK_FALSE(g2.accepts(v->word));
            // Shortest: no strictly shorter word of the difference exists.
            for (const Word &x : sample_words(b1))
                if (x.size() < v->word.size())
                    CHECK(g2.accepts(x));
        }
    }
}
