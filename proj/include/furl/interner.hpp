#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "furl/edge.hpp"

namespace furl {

// Maps input tokens to dense NodeIds in first-appearance order. Deterministic:
// the same file always yields the same assignment.
class NodeInterner {
public:
    NodeId intern(std::string_view token) {
        auto it = ids_.find(token);
        if (it != ids_.end()) return it->second;
        NodeId id = static_cast<NodeId>(tokens_.size());
        tokens_.emplace_back(token);
        ids_.emplace(tokens_.back(), id);
        return id;
    }

    const std::string& token(NodeId id) const { return tokens_.at(id); }
    std::size_t size() const { return tokens_.size(); }

private:
    struct StringHash {
        using is_transparent = void;
        std::size_t operator()(std::string_view s) const noexcept {
            return std::hash<std::string_view>{}(s);
        }
    };
    std::unordered_map<std::string, NodeId, StringHash, std::equal_to<>> ids_;
    std::vector<std::string> tokens_;
};

}  // namespace furl
