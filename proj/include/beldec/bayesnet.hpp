#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace beldec {

struct BnNode {
  std::string name;
  std::vector<std::string> states;   // >= 2
  std::vector<std::string> parents;  // declaration order fixes CPT row order
  // One row per parent-state combination, lexicographic with the first parent
  // most significant; each row is a distribution over this node's states.
  std::vector<std::vector<double>> cpt;
};

class Network {
public:
  explicit Network(std::vector<BnNode> nodes);

  const std::vector<BnNode>& nodes() const { return nodes_; }
  std::optional<int> index_of(std::string_view name) const;
  const BnNode& node(int i) const { return nodes_.at(static_cast<std::size_t>(i)); }

private:
  std::vector<BnNode> nodes_;
};

// Problems found in the network definition; empty means valid.
std::vector<std::string> validate(const Network& net);
void validate_or_throw(const Network& net);

struct Evidence {
  std::map<std::string, std::string> hard;
  // Likelihood over the node's states; a distribution sums to 1 within 1e-9.
  std::map<std::string, std::vector<double>> soft;
};

using Marginals = std::map<std::string, std::vector<double>>;

// Exact posterior marginals by variable elimination (min-degree ordering).
Marginals infer(const Network& net, const Evidence& ev);
std::vector<double> infer_node(const Network& net, const Evidence& ev, const std::string& query);
// Fixed elimination order (query excluded automatically); for order-invariance checks.
std::vector<double> infer_node_with_order(const Network& net, const Evidence& ev,
                                          const std::string& query,
                                          const std::vector<std::string>& order);

// Reference path: marginals by full joint enumeration. Guarded to joint state
// spaces of at most 10^6.
Marginals joint_enumerate(const Network& net, const Evidence& ev);

// Soft evidence for `node` from BetP values matched to its states by label
// and normalized.
Evidence bind_betp(const Network& net, const std::string& node,
                   const std::vector<std::pair<std::string, double>>& betp_entries);

}  // namespace beldec
