#pragma once

#include "ctbnc/domain.hpp"
#include "ctbnc/indexing.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace ctbnc {

using StateCode = std::uint16_t;

// One multivariate sample path: strictly increasing timestamps, one full
// assignment of attribute states per timestamp, and an optional class label.
// State values are codes into the owning Dataset's domains.
class Trajectory {
public:
    Trajectory() = default;
    Trajectory(std::string id, std::vector<double> times,
               std::vector<StateCode> states, std::size_t attribute_count,
               std::optional<StateCode> label);

    const std::string& id() const { return id_; }
    std::size_t row_count() const { return times_.size(); }
    std::size_t attribute_count() const { return attribute_count_; }
    double time(std::size_t row) const { return times_[row]; }
    const std::vector<double>& times() const { return times_; }
    StateCode state(std::size_t row, std::size_t attribute) const {
        return states_[row * attribute_count_ + attribute];
    }
    const std::optional<StateCode>& label() const { return label_; }

    void set_id(std::string id) { id_ = std::move(id); }
    void set_label(std::optional<StateCode> label) { label_ = label; }
    void scale_times(double factor);
    Trajectory truncated(std::size_t rows) const;

private:
    std::string id_;
    std::vector<double> times_;
    std::vector<StateCode> states_; // row-major, row_count x attribute_count
    std::size_t attribute_count_ = 0;
    std::optional<StateCode> label_;
};

// A collection of trajectories sharing one NodeIndexing and one set of
// state domains (attribute domains plus the class label domain).
class Dataset {
public:
    Dataset() = default;
    Dataset(NodeIndexing indexing, std::vector<StateDomain> domains);

    const NodeIndexing& indexing() const { return indexing_; }
    const StateDomain& domain(std::size_t node) const { return domains_[node]; }
    std::vector<StateDomain>& domains() { return domains_; }
    const std::vector<StateDomain>& domains() const { return domains_; }
    const StateDomain& class_domain() const { return domains_[indexing_.class_index()]; }

    std::size_t size() const { return trajectories_.size(); }
    bool empty() const { return trajectories_.empty(); }
    const Trajectory& trajectory(std::size_t i) const { return trajectories_[i]; }
    const std::vector<Trajectory>& trajectories() const { return trajectories_; }
    std::vector<Trajectory>& trajectories() { return trajectories_; }

    // Node index of the attribute shown in trajectory column c, and back.
    std::size_t attribute_node(std::size_t column) const { return attribute_nodes_[column]; }
    std::size_t column_of_node(std::size_t node) const;
    std::size_t attribute_count() const { return attribute_nodes_.size(); }
    const std::vector<std::size_t>& attribute_nodes() const { return attribute_nodes_; }

    std::optional<std::string> label_text(const Trajectory& t) const;

    void add(Trajectory t);

    // Subset copy preserving trajectory order; indices must be valid.
    Dataset subset(const std::vector<std::size_t>& indices) const;

private:
    NodeIndexing indexing_;
    std::vector<StateDomain> domains_; // one per node, class included
    std::vector<std::size_t> attribute_nodes_;
    std::vector<Trajectory> trajectories_;
};

// Cross-validation fold membership loaded from a partition file.
struct PartitionSpec {
    std::size_t fold_count = 0;
    std::map<std::string, std::size_t> fold_of; // trajectory id -> fold

    std::vector<std::vector<std::string>> folds() const;
};

} // namespace ctbnc
