#include "ctbnc/domain.hpp"

#include "ctbnc/errors.hpp"

namespace ctbnc {

StateDomain::StateDomain(std::vector<std::string> states) {
    for (auto& s : states) intern(s);
    (void)states;
}

StateDomain StateDomain::placeholder(std::size_t cardinality) {
    StateDomain d;
    for (std::size_t i = 0; i < cardinality; ++i) d.intern("s" + std::to_string(i));
    return d;
}

const std::string& StateDomain::state(std::size_t index) const {
    if (index >= states_.size()) throw ArgumentError("state index out of range");
    return states_[index];
}

std::optional<std::size_t> StateDomain::find(const std::string& name) const {
    auto it = by_name_.find(name);
    if (it == by_name_.end()) return std::nullopt;
    return it->second;
}

std::size_t StateDomain::index_of(const std::string& name) const {
    auto found = find(name);
    if (!found) throw ArgumentError("unknown state value: " + name);
    return *found;
}

std::size_t StateDomain::intern(const std::string& name) {
    auto it = by_name_.find(name);
    if (it != by_name_.end()) return it->second;
    std::size_t index = states_.size();
    states_.push_back(name);
    by_name_.emplace(name, index);
    return index;
}

} // namespace ctbnc
