#include "ctbnc/indexing.hpp"

#include "ctbnc/errors.hpp"

namespace ctbnc {

NodeIndexing::NodeIndexing(std::vector<std::string> names, std::string class_name,
                           std::string time_name)
    : names_(std::move(names)), time_name_(std::move(time_name)) {
    for (std::size_t i = 0; i < names_.size(); ++i) {
        auto [it, inserted] = by_name_.emplace(names_[i], i);
        if (!inserted) throw ArgumentError("duplicate variable name: " + names_[i]);
    }
    auto it = by_name_.find(class_name);
    if (it == by_name_.end()) {
        throw ArgumentError("class variable '" + class_name + "' is not among the variables");
    }
    class_index_ = it->second;
}

const std::string& NodeIndexing::name_of(std::size_t index) const {
    if (index >= names_.size()) throw ArgumentError("variable index out of range");
    return names_[index];
}

std::optional<std::size_t> NodeIndexing::find(const std::string& name) const {
    auto it = by_name_.find(name);
    if (it == by_name_.end()) return std::nullopt;
    return it->second;
}

std::size_t NodeIndexing::index_of(const std::string& name) const {
    auto found = find(name);
    if (!found) throw ArgumentError("unknown variable name: " + name);
    return *found;
}

std::vector<std::size_t> NodeIndexing::attribute_indices() const {
    std::vector<std::size_t> out;
    out.reserve(names_.size() > 0 ? names_.size() - 1 : 0);
    for (std::size_t i = 0; i < names_.size(); ++i) {
        if (i != class_index_) out.push_back(i);
    }
    return out;
}

} // namespace ctbnc
