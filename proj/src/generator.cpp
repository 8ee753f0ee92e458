#include "condec/generator.hpp"

#include <algorithm>

namespace condec {

Generator::Generator(Alphabet alphabet) : alphabet_(std::move(alphabet)) {
}

std::size_t Generator::num_transitions() const {
    return static_cast<std::size_t>(
        std::count_if(delta_.begin(), delta_.end(), [](StateId t) { return t != kNoState; }));
}

std::size_t Generator::num_marked() const {
    return static_cast<std::size_t>(std::count(marked_.begin(), marked_.end(), true));
}

StateId Generator::next(StateId q, const Event &e) const {
    auto idx = alphabet_.index_of(e);
    return idx ? next(q, *idx) : kNoState;
}

std::optional<StateId> Generator::run(const Word &word) const {
    if (names_.empty())
        return std::nullopt;
    StateId q = initial_;
    for (const Event &e : word) {
        q = next(q, e);
        if (q == kNoState)
            return std::nullopt;
    }
    return q;
}

bool Generator::accepts(const Word &word) const {
    auto q = run(word);
    return q && marked_[*q];
}

bool Generator::is_complete() const {
    return std::find(delta_.begin(), delta_.end(), kNoState) == delta_.end();
}

StateId Generator::add_state(std::string name, bool marked) {
    auto id = static_cast<StateId>(names_.size());
    names_.push_back(std::move(name));
    marked_.push_back(marked);
    delta_.resize(delta_.size() + alphabet_.size(), kNoState);
    return id;
}

void Generator::check_state(StateId q) const {
    if (q >= names_.size())
        throw InvalidArgument("state id " + std::to_string(q) + " out of range");
}

void Generator::set_initial(StateId q) {
    check_state(q);
    initial_ = q;
}

void Generator::set_marked(StateId q, bool marked) {
    check_state(q);
    marked_[q] = marked;
}

void Generator::add_transition(StateId src, std::size_t event, StateId dst) {
    check_state(src);
    check_state(dst);
    if (event >= alphabet_.size())
        throw InvalidArgument("event index out of range");
    StateId &slot = delta_[static_cast<std::size_t>(src) * alphabet_.size() + event];
    if (slot != kNoState)
        throw InvalidArgument("duplicate transition from '" + names_[src] + "' on '" +
                              alphabet_[event].str() + "'");
    slot = dst;
}

void Generator::add_transition(StateId src, const Event &e, StateId dst) {
    auto idx = alphabet_.index_of(e);
    if (!idx)
        throw InvalidArgument("event '" + e.str() + "' is not in the alphabet");
    add_transition(src, *idx, dst);
}

std::optional<StateId> Generator::find_state(const std::string &name) const {
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end())
        return std::nullopt;
    return static_cast<StateId>(it - names_.begin());
}

const char *to_string(WitnessKind kind) {
    switch (kind) {
    case WitnessKind::MarkedWord:
        return "MarkedWord";
    case WitnessKind::InCompositionNotInK:
        return "InCompositionNotInK";
    case WitnessKind::BlockingString:
        return "BlockingString";
    case WitnessKind::InclusionViolation:
        return "InclusionViolation";
    }
    return "?";
}

} // namespace condec
