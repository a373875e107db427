#include "beldec/bayesnet.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <sstream>

#include "beldec/errors.hpp"

namespace beldec {

namespace {

constexpr double kRowTolerance = 1e-9;

struct Factor {
  std::vector<int> vars;  // node indices, ascending
  std::vector<int> card;
  std::vector<double> vals;  // last var fastest

  std::size_t size() const { return vals.size(); }
};

std::size_t index_of_assignment(const Factor& f, const std::vector<int>& full_state) {
  std::size_t idx = 0;
  for (std::size_t k = 0; k < f.vars.size(); ++k)
    idx = idx * static_cast<std::size_t>(f.card[k]) +
          static_cast<std::size_t>(full_state[static_cast<std::size_t>(f.vars[k])]);
  return idx;
}

// Iterates all assignments of f.vars, writing them into full_state.
template <typename Fn>
void for_each_assignment(const Factor& f, std::vector<int>& full_state, Fn&& fn) {
  std::vector<int> local(f.vars.size(), 0);
  while (true) {
    for (std::size_t k = 0; k < f.vars.size(); ++k)
      full_state[static_cast<std::size_t>(f.vars[k])] = local[k];
    fn();
    std::size_t k = f.vars.size();
    while (k > 0) {
      --k;
      if (++local[k] < f.card[k]) break;
      local[k] = 0;
      if (k == 0) return;
    }
    if (f.vars.empty()) return;
  }
}

Factor multiply(const Factor& a, const Factor& b, int n_nodes, const std::vector<int>& all_card) {
  Factor out;
  std::set<int> vars(a.vars.begin(), a.vars.end());
  vars.insert(b.vars.begin(), b.vars.end());
  out.vars.assign(vars.begin(), vars.end());
  std::size_t total = 1;
  for (int v : out.vars) {
    out.card.push_back(all_card[static_cast<std::size_t>(v)]);
    total *= static_cast<std::size_t>(all_card[static_cast<std::size_t>(v)]);
  }
  out.vals.assign(total, 0.0);
  std::vector<int> full(static_cast<std::size_t>(n_nodes), 0);
  for_each_assignment(out, full, [&] {
    out.vals[index_of_assignment(out, full)] =
        a.vals[index_of_assignment(a, full)] * b.vals[index_of_assignment(b, full)];
  });
  return out;
}

Factor sum_out(const Factor& f, int var, int n_nodes, const std::vector<int>& all_card) {
  Factor out;
  for (std::size_t k = 0; k < f.vars.size(); ++k) {
    if (f.vars[k] == var) continue;
    out.vars.push_back(f.vars[k]);
    out.card.push_back(f.card[k]);
  }
  std::size_t total = 1;
  for (int c : out.card) total *= static_cast<std::size_t>(c);
  out.vals.assign(total, 0.0);
  std::vector<int> full(static_cast<std::size_t>(n_nodes), 0);
  for_each_assignment(f, full, [&] {
    out.vals[index_of_assignment(out, full)] += f.vals[index_of_assignment(f, full)];
  });
  return out;
}

int state_index(const BnNode& node, std::string_view state) {
  for (std::size_t i = 0; i < node.states.size(); ++i)
    if (node.states[i] == state) return static_cast<int>(i);
  throw ValidationError("node '" + node.name + "' has no state '" + std::string(state) + "'");
}

void check_evidence(const Network& net, const Evidence& ev) {
  for (const auto& [name, state] : ev.hard) {
    auto idx = net.index_of(name);
    if (!idx) throw ValidationError("evidence on unknown node '" + name + "'");
    state_index(net.node(*idx), state);
    if (ev.soft.count(name))
      throw ValidationError("node '" + name + "' has both hard and soft evidence");
  }
  for (const auto& [name, dist] : ev.soft) {
    auto idx = net.index_of(name);
    if (!idx) throw ValidationError("evidence on unknown node '" + name + "'");
    const BnNode& node = net.node(*idx);
    if (dist.size() != node.states.size())
      throw ValidationError("soft evidence on '" + name + "' has wrong length");
    double sum = 0.0;
    for (double v : dist) {
      if (v < 0.0) throw ValidationError("soft evidence on '" + name + "' has a negative entry");
      sum += v;
    }
    if (std::abs(sum - 1.0) > kRowTolerance)
      throw ValidationError("soft evidence on '" + name + "' does not sum to 1");
  }
}

std::vector<int> cardinalities(const Network& net) {
  std::vector<int> card;
  for (const auto& n : net.nodes()) card.push_back(static_cast<int>(n.states.size()));
  return card;
}

std::vector<Factor> build_factors(const Network& net, const Evidence& ev) {
  validate_or_throw(net);
  check_evidence(net, ev);
  const auto card = cardinalities(net);
  const int n = static_cast<int>(net.nodes().size());
  std::vector<Factor> factors;

  for (int v = 0; v < n; ++v) {
    const BnNode& node = net.node(v);
    Factor f;
    std::set<int> vars{v};
    std::vector<int> parent_idx;
    for (const auto& p : node.parents) {
      const int pi = *net.index_of(p);
      vars.insert(pi);
      parent_idx.push_back(pi);
    }
    f.vars.assign(vars.begin(), vars.end());
    std::size_t total = 1;
    for (int fv : f.vars) {
      f.card.push_back(card[static_cast<std::size_t>(fv)]);
      total *= static_cast<std::size_t>(card[static_cast<std::size_t>(fv)]);
    }
    f.vals.assign(total, 0.0);
    std::vector<int> full(static_cast<std::size_t>(n), 0);
    for_each_assignment(f, full, [&] {
      std::size_t row = 0;
      for (int pi : parent_idx)
        row = row * static_cast<std::size_t>(card[static_cast<std::size_t>(pi)]) +
              static_cast<std::size_t>(full[static_cast<std::size_t>(pi)]);
      f.vals[index_of_assignment(f, full)] =
          node.cpt[row][static_cast<std::size_t>(full[static_cast<std::size_t>(v)])];
    });
    factors.push_back(std::move(f));
  }

  for (const auto& [name, state] : ev.hard) {
    const int v = *net.index_of(name);
    Factor f;
    f.vars = {v};
    f.card = {card[static_cast<std::size_t>(v)]};
    f.vals.assign(static_cast<std::size_t>(f.card[0]), 0.0);
    f.vals[static_cast<std::size_t>(state_index(net.node(v), state))] = 1.0;
    factors.push_back(std::move(f));
  }
  for (const auto& [name, dist] : ev.soft) {
    const int v = *net.index_of(name);
    Factor f;
    f.vars = {v};
    f.card = {card[static_cast<std::size_t>(v)]};
    f.vals = dist;
    factors.push_back(std::move(f));
  }
  return factors;
}

std::vector<double> eliminate_to_query(std::vector<Factor> factors, int query, const Network& net,
                                       const std::vector<int>& fixed_order) {
  const auto card = cardinalities(net);
  const int n = static_cast<int>(net.nodes().size());

  std::vector<int> to_eliminate;
  if (!fixed_order.empty()) {
    to_eliminate = fixed_order;
    std::erase(to_eliminate, query);
  }

  auto eliminate_var = [&](int var) {
    Factor product;
    bool have = false;
    std::vector<Factor> rest;
    for (auto& f : factors) {
      if (std::find(f.vars.begin(), f.vars.end(), var) != f.vars.end()) {
        product = have ? multiply(product, f, n, card) : std::move(f);
        have = true;
      } else {
        rest.push_back(std::move(f));
      }
    }
    if (have) rest.push_back(sum_out(product, var, n, card));
    factors = std::move(rest);
  };

  if (!fixed_order.empty()) {
    for (int v : to_eliminate) eliminate_var(v);
  } else {
    // Min-degree: repeatedly eliminate the variable with the fewest
    // co-occurring neighbors; ties go to the lowest node index.
    while (true) {
      std::set<int> remaining;
      for (const auto& f : factors)
        for (int v : f.vars)
          if (v != query) remaining.insert(v);
      if (remaining.empty()) break;
      int best = -1;
      std::size_t best_deg = 0;
      for (int v : remaining) {
        std::set<int> nbrs;
        for (const auto& f : factors)
          if (std::find(f.vars.begin(), f.vars.end(), v) != f.vars.end())
            nbrs.insert(f.vars.begin(), f.vars.end());
        nbrs.erase(v);
        if (best < 0 || nbrs.size() < best_deg) {
          best = v;
          best_deg = nbrs.size();
        }
      }
      eliminate_var(best);
    }
  }

  std::vector<double> result(static_cast<std::size_t>(card[static_cast<std::size_t>(query)]), 1.0);
  for (const auto& f : factors) {
    if (f.vars.empty()) {
      for (double& r : result) r *= f.vals[0];
    } else if (f.vars.size() == 1 && f.vars[0] == query) {
      for (std::size_t s = 0; s < result.size(); ++s) result[s] *= f.vals[s];
    } else {
      throw ComputeError("elimination order did not cover every non-query variable");
    }
  }
  const double z = std::accumulate(result.begin(), result.end(), 0.0);
  if (z <= 0.0)
    throw ComputeError("evidence has zero probability under the network");
  for (double& r : result) r /= z;
  return result;
}

}  // namespace

Network::Network(std::vector<BnNode> nodes) : nodes_(std::move(nodes)) {}

std::optional<int> Network::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < nodes_.size(); ++i)
    if (nodes_[i].name == name) return static_cast<int>(i);
  return std::nullopt;
}

std::vector<std::string> validate(const Network& net) {
  std::vector<std::string> issues;
  std::set<std::string> names;
  for (const auto& n : net.nodes())
    if (!names.insert(n.name).second) issues.push_back("duplicate node '" + n.name + "'");

  for (const auto& n : net.nodes()) {
    if (n.states.size() < 2) issues.push_back("node '" + n.name + "' needs at least 2 states");
    std::size_t rows = 1;
    bool parents_ok = true;
    for (const auto& p : n.parents) {
      auto idx = net.index_of(p);
      if (!idx) {
        issues.push_back("node '" + n.name + "' has dangling parent '" + p + "'");
        parents_ok = false;
        continue;
      }
      rows *= net.node(*idx).states.size();
    }
    if (!parents_ok) continue;
    if (n.cpt.size() != rows) {
      std::ostringstream msg;
      msg << "node '" << n.name << "' CPT has " << n.cpt.size() << " rows, expected " << rows;
      issues.push_back(msg.str());
      continue;
    }
    for (std::size_t r = 0; r < n.cpt.size(); ++r) {
      if (n.cpt[r].size() != n.states.size()) {
        std::ostringstream msg;
        msg << "node '" << n.name << "' CPT row " << r << " has wrong width";
        issues.push_back(msg.str());
        continue;
      }
      double sum = 0.0;
      bool neg = false;
      for (double v : n.cpt[r]) {
        if (v < 0.0) neg = true;
        sum += v;
      }
      if (neg) issues.push_back("node '" + n.name + "' CPT has a negative probability");
      if (std::abs(sum - 1.0) > kRowTolerance) {
        std::ostringstream msg;
        msg << "node '" << n.name << "' CPT row " << r << " sums to " << sum << ", expected 1";
        issues.push_back(msg.str());
      }
    }
  }

  // Kahn's algorithm over parent edges.
  const int n = static_cast<int>(net.nodes().size());
  std::vector<int> indeg(static_cast<std::size_t>(n), 0);
  std::vector<std::vector<int>> children(static_cast<std::size_t>(n));
  bool edges_ok = true;
  for (int v = 0; v < n; ++v) {
    for (const auto& p : net.node(v).parents) {
      auto idx = net.index_of(p);
      if (!idx) {
        edges_ok = false;
        continue;
      }
      children[static_cast<std::size_t>(*idx)].push_back(v);
      ++indeg[static_cast<std::size_t>(v)];
    }
  }
  if (edges_ok) {
    std::vector<int> queue;
    for (int v = 0; v < n; ++v)
      if (indeg[static_cast<std::size_t>(v)] == 0) queue.push_back(v);
    int seen = 0;
    while (!queue.empty()) {
      const int v = queue.back();
      queue.pop_back();
      ++seen;
      for (int c : children[static_cast<std::size_t>(v)])
        if (--indeg[static_cast<std::size_t>(c)] == 0) queue.push_back(c);
    }
    if (seen != n) issues.push_back("network has a directed cycle");
  }
  return issues;
}

void validate_or_throw(const Network& net) {
  const auto issues = validate(net);
  if (issues.empty()) return;
  std::string msg = "invalid network:";
  for (const auto& i : issues) msg += "\n  - " + i;
  throw ValidationError(msg);
}

std::vector<double> infer_node(const Network& net, const Evidence& ev, const std::string& query) {
  auto idx = net.index_of(query);
  if (!idx) throw ValidationError("unknown query node '" + query + "'");
  return eliminate_to_query(build_factors(net, ev), *idx, net, {});
}

std::vector<double> infer_node_with_order(const Network& net, const Evidence& ev,
                                          const std::string& query,
                                          const std::vector<std::string>& order) {
  auto idx = net.index_of(query);
  if (!idx) throw ValidationError("unknown query node '" + query + "'");
  std::vector<int> fixed;
  for (const auto& name : order) {
    auto i = net.index_of(name);
    if (!i) throw ValidationError("unknown node '" + name + "' in elimination order");
    fixed.push_back(*i);
  }
  return eliminate_to_query(build_factors(net, ev), *idx, net, fixed);
}

Marginals infer(const Network& net, const Evidence& ev) {
  Marginals out;
  for (const auto& n : net.nodes()) out[n.name] = infer_node(net, ev, n.name);
  return out;
}

Marginals joint_enumerate(const Network& net, const Evidence& ev) {
  validate_or_throw(net);
  check_evidence(net, ev);
  const auto card = cardinalities(net);
  const std::size_t n = net.nodes().size();
  std::size_t total = 1;
  for (int c : card) {
    total *= static_cast<std::size_t>(c);
    if (total > 1000000) throw ComputeError("joint state space too large to enumerate");
  }

  std::vector<std::optional<int>> hard_state(n);
  std::vector<const std::vector<double>*> soft_dist(n, nullptr);
  for (const auto& [name, state] : ev.hard)
    hard_state[static_cast<std::size_t>(*net.index_of(name))] =
        state_index(net.node(*net.index_of(name)), state);
  for (const auto& [name, dist] : ev.soft)
    soft_dist[static_cast<std::size_t>(*net.index_of(name))] = &dist;

  Marginals acc;
  for (const auto& node : net.nodes())
    acc[node.name].assign(node.states.size(), 0.0);

  std::vector<int> state(n, 0);
  double z = 0.0;
  while (true) {
    double w = 1.0;
    for (std::size_t v = 0; v < n && w > 0.0; ++v) {
      const BnNode& node = net.node(static_cast<int>(v));
      std::size_t row = 0;
      for (const auto& p : node.parents) {
        const std::size_t pi = static_cast<std::size_t>(*net.index_of(p));
        row = row * static_cast<std::size_t>(card[pi]) + static_cast<std::size_t>(state[pi]);
      }
      w *= node.cpt[row][static_cast<std::size_t>(state[v])];
      if (hard_state[v] && *hard_state[v] != state[v]) w = 0.0;
      if (soft_dist[v]) w *= (*soft_dist[v])[static_cast<std::size_t>(state[v])];
    }
    if (w > 0.0) {
      z += w;
      for (std::size_t v = 0; v < n; ++v)
        acc[net.node(static_cast<int>(v)).name][static_cast<std::size_t>(state[v])] += w;
    }
    std::size_t k = n;
    bool done = true;
    while (k > 0) {
      --k;
      if (++state[k] < card[k]) {
        done = false;
        break;
      }
      state[k] = 0;
    }
    if (done) break;
  }
  if (z <= 0.0) throw ComputeError("evidence has zero probability under the network");
  for (auto& [name, dist] : acc)
    for (double& v : dist) v /= z;
  return acc;
}

Evidence bind_betp(const Network& net, const std::string& node,
                   const std::vector<std::pair<std::string, double>>& betp_entries) {
  auto idx = net.index_of(node);
  if (!idx) throw ValidationError("unknown node '" + node + "'");
  const BnNode& n = net.node(*idx);
  std::vector<double> dist;
  double sum = 0.0;
  for (const auto& state : n.states) {
    const auto it = std::find_if(betp_entries.begin(), betp_entries.end(),
                                 [&](const auto& e) { return e.first == state; });
    if (it == betp_entries.end())
      throw ValidationError("no BetP entry matching state '" + state + "' of node '" + node + "'");
    if (it->second < 0.0)
      throw ValidationError("negative BetP value for state '" + state + "'");
    dist.push_back(it->second);
    sum += it->second;
  }
  if (sum <= 0.0) throw ValidationError("BetP vector for node '" + node + "' is all zero");
  for (double& v : dist) v /= sum;
  Evidence ev;
  ev.soft[node] = std::move(dist);
  return ev;
}

}  // namespace beldec
