#include "condec/gen_format.hpp"

#include <cctype>
#include <optional>
#include <sstream>
#include <unordered_map>
#include <vector>

namespace condec {

ParseError::ParseError(std::size_t line, std::size_t column, const std::string &message)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) +
                         ": " + message),
      line_(line), column_(column) {
}

namespace {

struct Token {
    std::string text;
    std::size_t column;
};

std::vector<Token> tokenize(std::string_view line) {
    std::vector<Token> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        if (line[i] == '#')
            break;
        if (std::isspace(static_cast<unsigned char>(line[i]))) {
            ++i;
            continue;
        }
        std::size_t start = i;
        while (i < line.size() && line[i] != '#' &&
               !std::isspace(static_cast<unsigned char>(line[i])))
            ++i;
        tokens.push_back({std::string(line.substr(start, i - start)), start + 1});
    }
    return tokens;
}

class Parser {
public:
    explicit Parser(ParseOptions options) : options_(options) {}

    GenFile run(std::string_view text) {
        std::size_t line_no = 0;
        std::size_t pos = 0;
        while (pos <= text.size()) {
            std::size_t end = text.find('\n', pos);
            if (end == std::string_view::npos)
                end = text.size();
            ++line_no;
            line_ = line_no;
            std::string_view line = text.substr(pos, end - pos);
            if (!line.empty() && line.back() == '\r')
                line.remove_suffix(1);
            auto tokens = tokenize(line);
            if (!tokens.empty())
                statement(tokens);
            pos = end + 1;
        }
        if (!name_)
            fail(line_, 1, "missing 'generator' line");
        if (!states_declared_)
            fail(line_, 1, "missing 'states' line");
        if (!initial_declared_)
            fail(line_, 1, "missing 'initial' line");
        return {*name_, std::move(g_)};
    }

private:
    [[noreturn]] void fail(std::size_t line, std::size_t column, const std::string &msg) const {
        throw ParseError(line, column, msg);
    }

    void expect_count(const std::vector<Token> &t, std::size_t n) const {
        if (t.size() != n)
            fail(line_, t.size() > n ? t[n].column : t.back().column + t.back().text.size(),
                 "'" + t[0].text + "' expects " + std::to_string(n - 1) + " argument(s)");
    }

    StateId state(const Token &tok) const {
        auto it = state_ids_.find(tok.text);
        if (it == state_ids_.end())
            fail(line_, tok.column, "undeclared state '" + tok.text + "'");
        return it->second;
    }

    void statement(const std::vector<Token> &t) {
        const std::string &kw = t[0].text;
        if (kw != "generator" && !name_)
            fail(line_, t[0].column, "expected 'generator' as the first statement");
        if (kw == "generator") {
            if (name_)
                fail(line_, t[0].column, "duplicate 'generator' line");
            expect_count(t, 2);
            name_ = t[1].text;
        } else if (kw == "alphabet") {
            if (alphabet_declared_)
                fail(line_, t[0].column, "duplicate 'alphabet' line");
            std::vector<Event> events;
            for (std::size_t i = 1; i < t.size(); ++i) {
                Event e;
                try {
                    e = Event::parse(t[i].text);
                } catch (const InvalidArgument &) {
                    fail(line_, t[i].column, "invalid event name '" + t[i].text + "'");
                }
                if (e.tilde && !options_.allow_tilde)
                    fail(line_, t[i].column,
                         "tilde event '" + t[i].text + "' is not allowed in user input");
                for (const Event &seen : events)
                    if (seen == e)
                        fail(line_, t[i].column, "duplicate event '" + t[i].text + "'");
                events.push_back(std::move(e));
            }
            g_ = Generator(Alphabet(std::move(events)));
            alphabet_declared_ = true;
        } else if (kw == "states") {
            if (!alphabet_declared_)
                fail(line_, t[0].column, "'states' must follow 'alphabet'");
            if (states_declared_)
                fail(line_, t[0].column, "duplicate 'states' line");
            if (t.size() < 2)
                fail(line_, t[0].column, "'states' needs at least one state");
            for (std::size_t i = 1; i < t.size(); ++i) {
                if (state_ids_.contains(t[i].text))
                    fail(line_, t[i].column, "duplicate state '" + t[i].text + "'");
                state_ids_.emplace(t[i].text, g_.add_state(t[i].text));
            }
            states_declared_ = true;
        } else if (kw == "initial") {
            require_states(t[0]);
            if (initial_declared_)
                fail(line_, t[0].column, "duplicate 'initial' line");
            expect_count(t, 2);
            g_.set_initial(state(t[1]));
            initial_declared_ = true;
        } else if (kw == "marked") {
            require_states(t[0]);
            if (marked_declared_)
                fail(line_, t[0].column, "duplicate 'marked' line");
            for (std::size_t i = 1; i < t.size(); ++i)
                g_.set_marked(state(t[i]));
            marked_declared_ = true;
        } else if (kw == "trans") {
            require_states(t[0]);
            expect_count(t, 4);
            StateId src = state(t[1]);
            StateId dst = state(t[3]);
            std::optional<std::size_t> idx;
            try {
                idx = g_.alphabet().index_of(Event::parse(t[2].text));
            } catch (const InvalidArgument &) {
            }
            if (!idx)
                fail(line_, t[2].column, "undeclared event '" + t[2].text + "'");
            if (g_.next(src, *idx) != kNoState)
                fail(line_, t[0].column, "duplicate transition from '" + t[1].text + "' on '" +
                                             t[2].text + "'");
            g_.add_transition(src, *idx, dst);
        } else {
            fail(line_, t[0].column, "unknown statement '" + kw + "'");
        }
    }

    void require_states(const Token &kw) const {
        if (!states_declared_)
            fail(line_, kw.column, "'" + kw.text + "' must follow 'states'");
    }

    ParseOptions options_;
    std::size_t line_ = 0;
    std::optional<std::string> name_;
    bool alphabet_declared_ = false;
    bool states_declared_ = false;
    bool initial_declared_ = false;
    bool marked_declared_ = false;
    Generator g_;
    std::unordered_map<std::string, StateId> state_ids_;
};

std::string dot_quote(const std::string &s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\')
            out += '\\';
        out += c;
    }
    return out + "\"";
}

} // namespace

GenFile parse_gen_file(std::string_view text, ParseOptions options) {
    return Parser(options).run(text);
}

Generator parse_gen(std::string_view text, ParseOptions options) {
    return parse_gen_file(text, options).generator;
}

std::string serialize_gen(const Generator &g, const std::string &name) {
    std::ostringstream out;
    out << "generator " << name << "\nalphabet";
    for (const Event &e : g.alphabet())
        out << ' ' << e.str();
    out << "\nstates";
    for (StateId q = 0; q < g.num_states(); ++q)
        out << ' ' << g.name(q);
    out << "\ninitial " << g.name(g.initial()) << "\nmarked";
    for (StateId q = 0; q < g.num_states(); ++q)
        if (g.is_marked(q))
            out << ' ' << g.name(q);
    out << '\n';
    for (StateId q = 0; q < g.num_states(); ++q)
        for (std::size_t e = 0; e < g.num_events(); ++e)
            if (StateId t = g.next(q, e); t != kNoState)
                out << "trans " << g.name(q) << ' ' << g.alphabet()[e].str() << ' '
                    << g.name(t) << '\n';
    return out.str();
}

std::string export_dot(const Generator &g, const std::string &name) {
    std::ostringstream out;
    out << "digraph " << dot_quote(name) << " {\n"
        << "  rankdir=LR;\n"
        << "  node [shape=circle];\n"
        << "  __init [shape=point];\n";
    for (StateId q = 0; q < g.num_states(); ++q) {
        out << "  " << dot_quote(g.name(q));
        if (g.is_marked(q))
            out << " [shape=doublecircle]";
        out << ";\n";
    }
    out << "  __init -> " << dot_quote(g.name(g.initial())) << ";\n";
    for (StateId q = 0; q < g.num_states(); ++q)
        for (std::size_t e = 0; e < g.num_events(); ++e)
            if (StateId t = g.next(q, e); t != kNoState)
                out << "  " << dot_quote(g.name(q)) << " -> " << dot_quote(g.name(t))
                    << " [label=" << dot_quote(g.alphabet()[e].str()) << "];\n";
    out << "}\n";
    return out.str();
}

} // namespace condec
