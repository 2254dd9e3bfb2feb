#include "ctbnc/model.hpp"

#include "ctbnc/errors.hpp"
#include "ctbnc/util.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

namespace ctbnc {

void Cim::validate(double row_sum_tol) const {
    for (std::size_t i = 0; i < cardinality_; ++i) {
        double sum = 0.0;
        for (std::size_t j = 0; j < cardinality_; ++j) {
            double v = at(i, j);
            if (!std::isfinite(v)) throw ValidationError("CIM entry is not finite");
            if (i == j) {
                if (v > 0.0) throw ValidationError("CIM diagonal entry is positive");
            } else if (v < 0.0) {
                throw ValidationError("CIM off-diagonal entry is negative");
            }
            sum += v;
        }
        if (std::fabs(sum) > row_sum_tol) {
            throw ValidationError("CIM row " + std::to_string(i) + " sums to " + format_double(sum) +
                                  ", expected 0");
        }
    }
}

QTheta q_theta_decomposition(const Cim& cim) {
    QTheta qt;
    qt.cardinality = cim.cardinality();
    qt.exit_rate.resize(qt.cardinality);
    qt.theta.assign(qt.cardinality * qt.cardinality, 0.0);
    for (std::size_t i = 0; i < qt.cardinality; ++i) {
        double q = cim.exit_rate(i);
        if (!(q > 0.0)) {
            throw ValidationError("cannot decompose CIM: state " + std::to_string(i) +
                                  " is absorbing (exit rate " + format_double(q) + ")");
        }
        qt.exit_rate[i] = q;
        for (std::size_t j = 0; j < qt.cardinality; ++j) {
            if (j != i) qt.theta[i * qt.cardinality + j] = cim.at(i, j) / q;
        }
    }
    return qt;
}

Cim cim_from_q_theta(const QTheta& qt) {
    Cim cim(qt.cardinality);
    for (std::size_t i = 0; i < qt.cardinality; ++i) {
        cim.at(i, i) = -qt.exit_rate[i];
        for (std::size_t j = 0; j < qt.cardinality; ++j) {
            if (j != i) cim.at(i, j) = qt.exit_rate[i] * qt.theta_at(i, j);
        }
    }
    return cim;
}

std::size_t parent_config_index(std::span<const std::size_t> parent_states,
                                std::span<const std::size_t> parent_cards) {
    if (parent_states.size() != parent_cards.size()) {
        throw ArgumentError("parent state/cardinality arity mismatch");
    }
    std::size_t index = 0;
    std::size_t stride = 1;
    for (std::size_t k = 0; k < parent_states.size(); ++k) {
        if (parent_states[k] >= parent_cards[k]) {
            throw ArgumentError("parent state index " + std::to_string(parent_states[k]) +
                                " out of range for cardinality " + std::to_string(parent_cards[k]));
        }
        index += parent_states[k] * stride;
        stride *= parent_cards[k];
    }
    return index;
}

std::size_t parent_config_count(std::span<const std::size_t> parent_cards) {
    std::size_t count = 1;
    for (std::size_t card : parent_cards) count *= card;
    return count;
}

CtbnNode::CtbnNode(std::string name, StateDomain domain, std::vector<std::size_t> parents,
                   std::vector<Cim> cims)
    : name_(std::move(name)), domain_(std::move(domain)), is_static_(false),
      parents_(std::move(parents)), cims_(std::move(cims)) {}

CtbnNode::CtbnNode(std::string name, StateDomain domain, std::vector<double> prior)
    : name_(std::move(name)), domain_(std::move(domain)), is_static_(true),
      prior_(std::move(prior)) {}

CtbncModel::CtbncModel(NodeIndexing indexing, std::vector<CtbnNode> nodes)
    : indexing_(std::move(indexing)), nodes_(std::move(nodes)) {
    if (nodes_.size() != indexing_.size()) {
        throw ArgumentError("model needs one node per indexed variable");
    }
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
        if (nodes_[i].name() != indexing_.name_of(i)) {
            throw ArgumentError("node order does not match the indexing: expected '" +
                                indexing_.name_of(i) + "', found '" + nodes_[i].name() + "'");
        }
    }
}

std::vector<std::size_t> CtbncModel::parent_cards_of(std::size_t node) const {
    std::vector<std::size_t> cards;
    cards.reserve(nodes_[node].parents().size());
    for (std::size_t p : nodes_[node].parents()) cards.push_back(nodes_[p].cardinality());
    return cards;
}

std::size_t CtbncModel::parent_config_count_of(std::size_t node) const {
    auto cards = parent_cards_of(node);
    return parent_config_count(cards);
}

bool CtbncModel::is_ctnb() const {
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
        if (i == class_index()) continue;
        const auto& parents = nodes_[i].parents();
        if (parents.size() != 1 || parents[0] != class_index()) return false;
    }
    return true;
}

bool CtbncModel::is_max_k(std::size_t k) const {
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
        if (i == class_index()) continue;
        if (nodes_[i].parents().size() > k) return false;
    }
    return true;
}

bool CtbncModel::is_actnb(std::size_t k) const {
    if (!is_max_k(k)) return false;
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
        if (i == class_index()) continue;
        const auto& parents = nodes_[i].parents();
        if (std::find(parents.begin(), parents.end(), class_index()) == parents.end()) return false;
    }
    return true;
}

void CtbncModel::validate(double tol) const {
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
        const CtbnNode& node = nodes_[i];
        if (i == class_index()) {
            if (!node.is_static()) throw ValidationError("class node must be static");
            if (!node.parents().empty()) throw ValidationError("class node must have no parents");
            if (!node.cims().empty()) throw ValidationError("class node must have no CIMs");
            if (node.prior().size() != node.cardinality()) {
                throw ValidationError("class prior size does not match its cardinality");
            }
            double sum = 0.0;
            for (double p : node.prior()) {
                if (!(p >= 0.0) || !std::isfinite(p)) {
                    throw ValidationError("class prior entries must be finite and nonnegative");
                }
                sum += p;
            }
            if (std::fabs(sum - 1.0) > tol) {
                throw ValidationError("class prior sums to " + format_double(sum) + ", expected 1");
            }
            continue;
        }
        if (node.is_static()) {
            throw ValidationError("attribute node '" + node.name() + "' cannot be static");
        }
        if (node.cardinality() < 2) {
            throw ValidationError("attribute node '" + node.name() + "' needs at least 2 states");
        }
        std::set<std::size_t> seen;
        for (std::size_t p : node.parents()) {
            if (p >= nodes_.size()) throw ValidationError("parent index out of range");
            if (p == i) throw ValidationError("node '" + node.name() + "' cannot be its own parent");
            if (!seen.insert(p).second) {
                throw ValidationError("duplicate parent on node '" + node.name() + "'");
            }
        }
        std::size_t expected = parent_config_count_of(i);
        if (node.cims().size() != expected) {
            throw ValidationError("node '" + node.name() + "' has " +
                                  std::to_string(node.cims().size()) + " CIMs, expected " +
                                  std::to_string(expected));
        }
        for (const Cim& cim : node.cims()) {
            if (cim.cardinality() != node.cardinality()) {
                throw ValidationError("CIM cardinality mismatch on node '" + node.name() + "'");
            }
            cim.validate(tol);
        }
    }
}

namespace {

constexpr std::size_t kUnmapped = std::numeric_limits<std::size_t>::max();

std::vector<std::size_t> lexicographic_map(const StateDomain& data_domain, std::size_t model_card,
                                           const std::string& variable) {
    if (data_domain.size() > model_card) {
        throw ValidationError("variable '" + variable + "' shows " +
                              std::to_string(data_domain.size()) +
                              " distinct values but the loaded model allows " +
                              std::to_string(model_card));
    }
    std::vector<std::string> sorted = data_domain.states();
    std::sort(sorted.begin(), sorted.end());
    std::vector<std::size_t> map(data_domain.size(), kUnmapped);
    for (std::size_t rank = 0; rank < sorted.size(); ++rank) {
        map[data_domain.index_of(sorted[rank])] = rank;
    }
    return map;
}

} // namespace

DatasetBinding::DatasetBinding(const CtbncModel& model, const Dataset& dataset) {
    std::size_t columns = dataset.attribute_count();
    attr_maps_.resize(columns);
    node_of_column_.resize(columns);
    for (std::size_t c = 0; c < columns; ++c) {
        const std::string& name = dataset.indexing().name_of(dataset.attribute_node(c));
        auto node_index = model.indexing().find(name);
        if (!node_index || *node_index == model.class_index()) {
            throw ValidationError("model has no attribute named '" + name + "'");
        }
        node_of_column_[c] = *node_index;
        const StateDomain& data_domain = dataset.domain(dataset.attribute_node(c));
        const CtbnNode& node = model.node(*node_index);
        if (model.placeholder_states()) {
            attr_maps_[c] = lexicographic_map(data_domain, node.cardinality(), name);
        } else {
            attr_maps_[c].assign(data_domain.size(), kUnmapped);
            for (std::size_t code = 0; code < data_domain.size(); ++code) {
                auto state = node.domain().find(data_domain.state(code));
                if (state) attr_maps_[c][code] = *state;
            }
        }
    }
    const StateDomain& data_class = dataset.class_domain();
    std::size_t class_card = model.class_cardinality();
    if (model.placeholder_states()) {
        class_map_ = lexicographic_map(data_class, class_card, dataset.indexing().class_name());
        // Report real labels when the data exhibits the full class domain.
        if (data_class.size() == class_card) {
            class_names_.resize(class_card);
            for (std::size_t code = 0; code < data_class.size(); ++code) {
                class_names_[class_map_[code]] = data_class.state(code);
            }
        } else {
            class_names_ = model.class_node().domain().states();
        }
    } else {
        class_map_.assign(data_class.size(), kUnmapped);
        for (std::size_t code = 0; code < data_class.size(); ++code) {
            auto state = model.class_node().domain().find(data_class.state(code));
            if (state) class_map_[code] = *state;
        }
        class_names_ = model.class_node().domain().states();
    }
}

} // namespace ctbnc
