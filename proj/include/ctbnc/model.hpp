#pragma once

#include "ctbnc/domain.hpp"
#include "ctbnc/indexing.hpp"
#include "ctbnc/trajectory.hpp"

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace ctbnc {

// Square rate matrix for one parent configuration: nonnegative off-diagonal
// rates, nonpositive diagonal, rows summing to zero.
class Cim {
public:
    Cim() = default;
    explicit Cim(std::size_t cardinality)
        : cardinality_(cardinality), entries_(cardinality * cardinality, 0.0) {}

    std::size_t cardinality() const { return cardinality_; }
    double at(std::size_t i, std::size_t j) const { return entries_[i * cardinality_ + j]; }
    double& at(std::size_t i, std::size_t j) { return entries_[i * cardinality_ + j]; }
    const std::vector<double>& entries() const { return entries_; }

    double exit_rate(std::size_t state) const { return -at(state, state); }

    void validate(double row_sum_tol) const;

private:
    std::size_t cardinality_ = 0;
    std::vector<double> entries_;
};

// The equivalent (q, theta) parameterization: per-state exit rates plus a
// row-stochastic transition matrix with zero diagonal.
struct QTheta {
    std::vector<double> exit_rate;      // q[i] = -cim[i][i]
    std::vector<double> theta;          // row-major, zero diagonal
    std::size_t cardinality = 0;

    double theta_at(std::size_t i, std::size_t j) const { return theta[i * cardinality + j]; }
};

// Splits a CIM into exit rates and transition probabilities. Throws
// ValidationError naming the state when a row is absorbing (zero exit rate).
QTheta q_theta_decomposition(const Cim& cim);

// Rebuilds diag(q) * (Theta - I).
Cim cim_from_q_theta(const QTheta& qt);

// Mixed-radix configuration index with the first-listed parent varying
// fastest; bijective onto [0, prod(cards)).
std::size_t parent_config_index(std::span<const std::size_t> parent_states,
                                std::span<const std::size_t> parent_cards);

std::size_t parent_config_count(std::span<const std::size_t> parent_cards);

class CtbnNode {
public:
    CtbnNode() = default;

    // Continuous-time attribute node.
    CtbnNode(std::string name, StateDomain domain, std::vector<std::size_t> parents,
             std::vector<Cim> cims);
    // Static class node with a prior over its states.
    CtbnNode(std::string name, StateDomain domain, std::vector<double> prior);

    const std::string& name() const { return name_; }
    const StateDomain& domain() const { return domain_; }
    std::size_t cardinality() const { return domain_.size(); }
    bool is_static() const { return is_static_; }
    const std::vector<std::size_t>& parents() const { return parents_; }
    const std::vector<Cim>& cims() const { return cims_; }
    const Cim& cim(std::size_t config) const { return cims_.at(config); }
    const std::vector<double>& prior() const { return prior_; }

private:
    std::string name_;
    StateDomain domain_;
    bool is_static_ = false;
    std::vector<std::size_t> parents_;  // node indices; first varies fastest
    std::vector<Cim> cims_;             // one per parent configuration
    std::vector<double> prior_;         // class node only
};

// A continuous-time Bayesian network classifier: one static class node plus
// continuous-time attribute nodes, indexed by a shared NodeIndexing.
class CtbncModel {
public:
    CtbncModel() = default;
    CtbncModel(NodeIndexing indexing, std::vector<CtbnNode> nodes);

    const NodeIndexing& indexing() const { return indexing_; }
    std::size_t node_count() const { return nodes_.size(); }
    const CtbnNode& node(std::size_t index) const { return nodes_[index]; }
    const std::vector<CtbnNode>& nodes() const { return nodes_; }
    std::size_t class_index() const { return indexing_.class_index(); }
    const CtbnNode& class_node() const { return nodes_[class_index()]; }
    std::size_t class_cardinality() const { return class_node().cardinality(); }

    // True when state names are anonymous placeholders from a .ctbn file.
    bool placeholder_states() const { return placeholder_states_; }
    void mark_placeholder_states() { placeholder_states_ = true; }

    std::size_t parent_config_count_of(std::size_t node) const;
    std::vector<std::size_t> parent_cards_of(std::size_t node) const;

    // Structure-family predicates.
    bool is_ctnb() const;
    bool is_max_k(std::size_t k) const;
    bool is_actnb(std::size_t k) const;

    // Checks every model invariant (class static and parentless, CIM table
    // sizes, CIM row sums within tol, prior normalization within tol).
    void validate(double tol = 1e-9) const;

private:
    NodeIndexing indexing_;
    std::vector<CtbnNode> nodes_;
    bool placeholder_states_ = false;
};

// Per-class binary models for the one-model-one-class modality.
struct OneVsRestEnsemble {
    std::vector<CtbncModel> members;       // one per class value, class order
    std::vector<std::string> target_names; // member k discriminates target_names[k]
};

// Translates a dataset's state codes into a model's state indices. Built once
// per (model, dataset) pair. Models with placeholder state names bind each
// variable's dataset values in lexicographic order.
class DatasetBinding {
public:
    DatasetBinding(const CtbncModel& model, const Dataset& dataset);

    std::size_t attribute_count() const { return attr_maps_.size(); }
    // Model state index of the dataset code for attribute column c.
    std::size_t attr_state(std::size_t column, StateCode code) const {
        return attr_maps_[column][code];
    }
    // Model node index for attribute column c.
    std::size_t node_of_column(std::size_t column) const { return node_of_column_[column]; }
    // Model class state for a dataset label code.
    std::size_t class_state(StateCode label_code) const { return class_map_.at(label_code); }
    // Class state names in model order (used for reporting).
    const std::vector<std::string>& class_names() const { return class_names_; }

private:
    std::vector<std::vector<std::size_t>> attr_maps_; // per column, code -> model state
    std::vector<std::size_t> node_of_column_;
    std::vector<std::size_t> class_map_;
    std::vector<std::string> class_names_;
};

} // namespace ctbnc
