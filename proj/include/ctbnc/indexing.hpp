#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace ctbnc {

// Shared dense index over the variables of a problem (attributes plus the
// class variable). Name -> index and index -> name are mutual inverses.
class NodeIndexing {
public:
    NodeIndexing() = default;
    NodeIndexing(std::vector<std::string> names, std::string class_name, std::string time_name);

    std::size_t size() const { return names_.size(); }
    const std::vector<std::string>& names() const { return names_; }
    const std::string& name_of(std::size_t index) const;
    std::optional<std::size_t> find(const std::string& name) const;
    std::size_t index_of(const std::string& name) const;

    std::size_t class_index() const { return class_index_; }
    const std::string& class_name() const { return names_[class_index_]; }
    const std::string& time_name() const { return time_name_; }

    // Node indices of the attribute variables, in index order.
    std::vector<std::size_t> attribute_indices() const;

    bool operator==(const NodeIndexing& other) const {
        return names_ == other.names_ && class_index_ == other.class_index_ &&
               time_name_ == other.time_name_;
    }

private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, std::size_t> by_name_;
    std::size_t class_index_ = 0;
    std::string time_name_;
};

} // namespace ctbnc
