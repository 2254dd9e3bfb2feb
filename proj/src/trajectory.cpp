#include "ctbnc/trajectory.hpp"

#include "ctbnc/errors.hpp"

#include <algorithm>

namespace ctbnc {

Trajectory::Trajectory(std::string id, std::vector<double> times,
                       std::vector<StateCode> states, std::size_t attribute_count,
                       std::optional<StateCode> label)
    : id_(std::move(id)), times_(std::move(times)), states_(std::move(states)),
      attribute_count_(attribute_count), label_(label) {
    if (times_.empty()) throw ValidationError("trajectory '" + id_ + "' has no rows");
    if (states_.size() != times_.size() * attribute_count_) {
        throw ValidationError("trajectory '" + id_ + "' has misaligned state rows");
    }
    for (std::size_t j = 0; j < times_.size(); ++j) {
        if (!std::isfinite(times_[j]) || times_[j] < 0.0) {
            throw ValidationError("trajectory '" + id_ + "' has a negative or non-finite time");
        }
        if (j > 0 && !(times_[j] > times_[j - 1])) {
            throw ValidationError("trajectory '" + id_ + "' has non-increasing times");
        }
    }
}

void Trajectory::scale_times(double factor) {
    for (auto& t : times_) t *= factor;
}

Trajectory Trajectory::truncated(std::size_t rows) const {
    rows = std::max<std::size_t>(1, std::min(rows, row_count()));
    Trajectory out;
    out.id_ = id_;
    out.times_.assign(times_.begin(), times_.begin() + rows);
    out.states_.assign(states_.begin(), states_.begin() + rows * attribute_count_);
    out.attribute_count_ = attribute_count_;
    out.label_ = label_;
    return out;
}

Dataset::Dataset(NodeIndexing indexing, std::vector<StateDomain> domains)
    : indexing_(std::move(indexing)), domains_(std::move(domains)) {
    if (domains_.size() != indexing_.size()) {
        throw ArgumentError("one state domain required per variable");
    }
    attribute_nodes_ = indexing_.attribute_indices();
}

std::size_t Dataset::column_of_node(std::size_t node) const {
    for (std::size_t c = 0; c < attribute_nodes_.size(); ++c) {
        if (attribute_nodes_[c] == node) return c;
    }
    throw ArgumentError("node " + std::to_string(node) + " is not an attribute");
}

std::optional<std::string> Dataset::label_text(const Trajectory& t) const {
    if (!t.label()) return std::nullopt;
    return class_domain().state(*t.label());
}

void Dataset::add(Trajectory t) {
    if (t.attribute_count() != attribute_nodes_.size()) {
        throw ArgumentError("trajectory attribute count does not match the dataset indexing");
    }
    trajectories_.push_back(std::move(t));
}

Dataset Dataset::subset(const std::vector<std::size_t>& indices) const {
    Dataset out(indexing_, domains_);
    out.trajectories_.reserve(indices.size());
    for (std::size_t i : indices) out.trajectories_.push_back(trajectories_.at(i));
    return out;
}

std::vector<std::vector<std::string>> PartitionSpec::folds() const {
    std::vector<std::vector<std::string>> out(fold_count);
    for (const auto& [id, fold] : fold_of) out.at(fold).push_back(id);
    return out;
}

} // namespace ctbnc
