#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace condec {

/// Thrown when an operation's documented precondition does not hold.
class InvalidArgument : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An event symbol. Tilde-tagged events are the renamed copies introduced by
/// the decomposability test; `(x, tilde)` and `(x, plain)` are distinct.
struct Event {
    std::string base;
    bool tilde = false;

    Event() = default;
    Event(std::string base_, bool tilde_ = false);

    /// Parses "x" or "~x".
    static Event parse(std::string_view text);

    /// Renders plain events as the base, tilde events as "~base".
    std::string str() const;

    Event tilded() const { return Event(base, true); }
    Event plain() const { return Event(base, false); }

    // Canonical order: plain before tilde, then by base.
    std::strong_ordering operator<=>(const Event &other) const {
        if (tilde != other.tilde)
            return tilde <=> other.tilde;
        return base <=> other.base;
    }
    bool operator==(const Event &other) const = default;
};

bool is_valid_event_base(std::string_view base);

using Word = std::vector<Event>;

/// Space-separated rendering; the empty word renders as "".
std::string to_string(const Word &word);

/// Inverse of to_string. Accepts tilde events only when allow_tilde is set.
Word parse_word(std::string_view text, bool allow_tilde = false);

/// Finite event set with canonical iteration order.
class Alphabet {
public:
    Alphabet() = default;
    Alphabet(std::initializer_list<Event> events);
    explicit Alphabet(std::vector<Event> events);

    /// Builds an alphabet of plain events from bare names, e.g. {"a", "b"}.
    static Alphabet of(std::initializer_list<std::string_view> names);

    std::size_t size() const { return events_.size(); }
    bool empty() const { return events_.empty(); }
    const Event &operator[](std::size_t i) const { return events_[i]; }
    auto begin() const { return events_.begin(); }
    auto end() const { return events_.end(); }
    const std::vector<Event> &events() const { return events_; }

    std::optional<std::size_t> index_of(const Event &e) const;
    bool contains(const Event &e) const { return index_of(e).has_value(); }
    bool is_subset_of(const Alphabet &other) const;
    bool has_tilde() const;

    void insert(const Event &e);

    bool operator==(const Alphabet &other) const = default;

private:
    std::vector<Event> events_;
};

Alphabet operator|(const Alphabet &a, const Alphabet &b);
Alphabet operator&(const Alphabet &a, const Alphabet &b);
Alphabet operator-(const Alphabet &a, const Alphabet &b);

/// Alphabet of the tilde copies of every event in `a`.
Alphabet tilded(const Alphabet &a);

std::string to_string(const Alphabet &a);

/// Local alphabets E_1..E_n plus the coordinator alphabet E_k.
struct AlphabetFamily {
    std::vector<Alphabet> locals;
    Alphabet coordinator;

    /// Union of all local alphabets.
    Alphabet global() const;

    /// Events shared by at least two local alphabets.
    Alphabet shared() const;

    /// Union of all locals except the one at `skip`.
    Alphabet others(std::size_t skip) const;

    /// Throws InvalidArgument naming the violated condition: n >= 2,
    /// shared() ⊆ coordinator ⊆ global(), and no tilde events.
    void validate() const;
};

} // namespace condec
