#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace ctbnc {

// Ordered finite domain of state names for one discrete variable.
class StateDomain {
public:
    StateDomain() = default;
    explicit StateDomain(std::vector<std::string> states);

    // Domain of anonymous states s0..s{n-1}, used for models loaded from
    // .ctbn files, which carry cardinalities but no state names.
    static StateDomain placeholder(std::size_t cardinality);

    std::size_t size() const { return states_.size(); }
    bool empty() const { return states_.empty(); }
    const std::string& state(std::size_t index) const;
    const std::vector<std::string>& states() const { return states_; }
    std::optional<std::size_t> find(const std::string& name) const;
    std::size_t index_of(const std::string& name) const;

    // Interns a state name, keeping first-encounter order; returns its index.
    std::size_t intern(const std::string& name);

    bool operator==(const StateDomain& other) const { return states_ == other.states_; }

private:
    std::vector<std::string> states_;
    std::unordered_map<std::string, std::size_t> by_name_;
};

} // namespace ctbnc
