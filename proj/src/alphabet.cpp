#include "condec/alphabet.hpp"

#include <algorithm>
#include <cctype>
#include <iterator>
#include <sstream>

namespace condec {

bool is_valid_event_base(std::string_view base) {
    if (base.empty() || base.front() == '~')
        return false;
    return std::none_of(base.begin(), base.end(),
                        [](unsigned char c) { return std::isspace(c) || c == '#'; });
}

Event::Event(std::string base_, bool tilde_) : base(std::move(base_)), tilde(tilde_) {
    if (!is_valid_event_base(base))
        throw InvalidArgument("invalid event name '" + base + "'");
}

Event Event::parse(std::string_view text) {
    if (!text.empty() && text.front() == '~')
        return Event(std::string(text.substr(1)), true);
    return Event(std::string(text), false);
}

std::string Event::str() const {
    return tilde ? "~" + base : base;
}

std::string to_string(const Word &word) {
    std::string out;
    for (const Event &e : word) {
        if (!out.empty())
            out += ' ';
        out += e.str();
    }
    return out;
}

Word parse_word(std::string_view text, bool allow_tilde) {
    Word word;
    std::istringstream in{std::string(text)};
    std::string token;
    while (in >> token) {
        Event e = Event::parse(token);
        if (e.tilde && !allow_tilde)
            throw InvalidArgument("tilde event '" + token + "' not allowed here");
        word.push_back(std::move(e));
    }
    return word;
}

Alphabet::Alphabet(std::initializer_list<Event> events)
    : Alphabet(std::vector<Event>(events)) {
}

Alphabet::Alphabet(std::vector<Event> events) : events_(std::move(events)) {
    std::sort(events_.begin(), events_.end());
    events_.erase(std::unique(events_.begin(), events_.end()), events_.end());
}

Alphabet Alphabet::of(std::initializer_list<std::string_view> names) {
    std::vector<Event> events;
    for (std::string_view n : names)
        events.emplace_back(std::string(n));
    return Alphabet(std::move(events));
}

std::optional<std::size_t> Alphabet::index_of(const Event &e) const {
    auto it = std::lower_bound(events_.begin(), events_.end(), e);
    if (it == events_.end() || *it != e)
        return std::nullopt;
    return static_cast<std::size_t>(it - events_.begin());
}

bool Alphabet::is_subset_of(const Alphabet &other) const {
    return std::includes(other.events_.begin(), other.events_.end(),
                         events_.begin(), events_.end());
}

bool Alphabet::has_tilde() const {
    return !events_.empty() && events_.back().tilde;
}

void Alphabet::insert(const Event &e) {
    auto it = std::lower_bound(events_.begin(), events_.end(), e);
    if (it == events_.end() || *it != e)
        events_.insert(it, e);
}

Alphabet operator|(const Alphabet &a, const Alphabet &b) {
    std::vector<Event> out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return Alphabet(std::move(out));
}

Alphabet operator&(const Alphabet &a, const Alphabet &b) {
    std::vector<Event> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return Alphabet(std::move(out));
}

Alphabet operator-(const Alphabet &a, const Alphabet &b) {
    std::vector<Event> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return Alphabet(std::move(out));
}

Alphabet tilded(const Alphabet &a) {
    std::vector<Event> out;
    out.reserve(a.size());
    for (const Event &e : a)
        out.push_back(e.tilded());
    return Alphabet(std::move(out));
}

std::string to_string(const Alphabet &a) {
    std::string out = "{";
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (i)
            out += ',';
        out += a[i].str();
    }
    return out + "}";
}

Alphabet AlphabetFamily::global() const {
    Alphabet all;
    for (const Alphabet &a : locals)
        all = all | a;
    return all;
}

Alphabet AlphabetFamily::shared() const {
    Alphabet out;
    for (std::size_t i = 0; i < locals.size(); ++i)
        for (std::size_t j = i + 1; j < locals.size(); ++j)
            out = out | (locals[i] & locals[j]);
    return out;
}

Alphabet AlphabetFamily::others(std::size_t skip) const {
    Alphabet out;
    for (std::size_t j = 0; j < locals.size(); ++j)
        if (j != skip)
            out = out | locals[j];
    return out;
}

void AlphabetFamily::validate() const {
    if (locals.size() < 2)
        throw InvalidArgument("alphabet family needs at least two local alphabets");
    for (const Alphabet &a : locals)
        if (a.has_tilde())
            throw InvalidArgument("local alphabet " + to_string(a) + " contains tilde events");
    if (coordinator.has_tilde())
        throw InvalidArgument("coordinator alphabet contains tilde events");
    Alphabet missing = shared() - coordinator;
    if (!missing.empty())
        throw InvalidArgument("shared events " + to_string(missing) +
                              " are not in the coordinator alphabet (E_s ⊆ E_k violated)");
    Alphabet extra = coordinator - global();
    if (!extra.empty())
        throw InvalidArgument("coordinator events " + to_string(extra) +
                              " are not in any local alphabet (E_k ⊆ ∪E_i violated)");
}

} // namespace condec
