#pragma once

#include "condec/alphabet.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace condec::detail {

// BFS parent pointers. Node 0 is the root; every other node records its
// parent and the event index that reached it.
class SearchTree {
public:
    static constexpr std::uint32_t kRoot = 0;

    SearchTree() { nodes_.push_back({kRoot, 0}); }

    std::uint32_t add(std::uint32_t parent, std::uint32_t event) {
        nodes_.push_back({parent, event});
        return static_cast<std::uint32_t>(nodes_.size() - 1);
    }

    std::size_t size() const { return nodes_.size(); }

    Word word_to(std::uint32_t node, const Alphabet &alphabet) const {
        Word w;
        while (node != kRoot) {
            w.push_back(alphabet[nodes_[node].event]);
            node = nodes_[node].parent;
        }
        std::reverse(w.begin(), w.end());
        return w;
    }

private:
    struct Node {
        std::uint32_t parent;
        std::uint32_t event;
    };
    std::vector<Node> nodes_;
};

// Witnesses are re-checked by simulation; a failure here is a library bug.
inline void ensure(bool condition, const char *what) {
    if (!condition)
        throw std::logic_error(std::string("internal witness check failed: ") + what);
}

} // namespace condec::detail
