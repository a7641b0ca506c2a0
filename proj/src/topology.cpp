#include "dmpc/topology.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "dmpc/errors.hpp"

namespace dmpc {

namespace {

std::vector<std::pair<int, int>> sorted_unique(std::vector<std::pair<int, int>> edges) {
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return edges;
}

}  // namespace

TopologyGraph TopologyGraph::predecessor_following(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i <= n; ++i) e.emplace_back(i - 1, i);
  return from_edges(n, std::move(e));
}

TopologyGraph TopologyGraph::bidirectional(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i <= n; ++i) e.emplace_back(i - 1, i);
  for (int i = 1; i < n; ++i) e.emplace_back(i + 1, i);
  return from_edges(n, std::move(e));
}

TopologyGraph TopologyGraph::two_predecessor(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i <= n; ++i) {
    e.emplace_back(i - 1, i);
    if (i >= 2) e.emplace_back(i - 2, i);
  }
  return from_edges(n, std::move(e));
}

TopologyGraph TopologyGraph::leader_broadcast(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i <= n; ++i) e.emplace_back(0, i);
  return from_edges(n, std::move(e));
}

TopologyGraph TopologyGraph::from_edges(int n, std::vector<std::pair<int, int>> edges) {
  TopologyGraph g;
  g.n_followers = n;
  g.edges = sorted_unique(std::move(edges));
  g.validate_shape();
  return g;
}

bool TopologyGraph::has_edge(int from, int to) const {
  return std::binary_search(edges.begin(), edges.end(), std::make_pair(from, to));
}

void TopologyGraph::validate_shape() const {
  if (n_followers < 1) throw ScenarioError("topology needs at least one follower");
  for (const auto& [j, i] : edges) {
    if (j == i) throw ScenarioError("topology edge (" + std::to_string(j) + ", " + std::to_string(i) +
                                    ") is a self-loop");
    if (j < 0 || j > n_followers || i < 0 || i > n_followers)
      throw ScenarioError("topology edge (" + std::to_string(j) + ", " + std::to_string(i) +
                          ") references a vehicle outside 0.." + std::to_string(n_followers));
    if (i == 0) throw ScenarioError("the leader does not receive; edge (" + std::to_string(j) + ", 0)");
  }
}

TopologyMatrices build_matrices(const TopologyGraph& g) {
  g.validate_shape();
  const int n = g.n_followers;
  TopologyMatrices m;
  m.adjacency = Eigen::MatrixXd::Zero(n, n);
  m.adjacency_pre = Eigen::MatrixXd::Zero(n, n);
  m.pinning = Eigen::MatrixXd::Zero(n, n);

  for (const auto& [j, i] : g.edges) {
    if (j == 0) {
      m.pinning(i - 1, i - 1) = 1.0;
      continue;
    }
    m.adjacency(i - 1, j - 1) = 1.0;
    if (j < i) m.adjacency_pre(i - 1, j - 1) = 1.0;
  }

  m.in_degree = m.adjacency.rowwise().sum().asDiagonal();
  m.in_degree_pre = m.adjacency_pre.rowwise().sum().asDiagonal();
  m.laplacian = m.in_degree - m.adjacency;
  m.laplacian_pre = m.in_degree_pre - m.adjacency_pre;
  m.pinning_pre = m.pinning;
  return m;
}

VehicleSets vehicle_sets(const TopologyGraph& g, int vehicle) {
  g.validate_shape();
  if (vehicle < 1 || vehicle > g.n_followers)
    throw ContractViolation("vehicle_sets: index " + std::to_string(vehicle) + " is not a follower");

  VehicleSets s;
  for (const auto& [j, i] : g.edges) {
    if (i == vehicle && j >= 1) s.receive.push_back(j);
    if (i == vehicle && j == 0) s.hears_leader = true;
    if (j == vehicle && i >= 1) s.share.push_back(i);
  }
  if (s.hears_leader) s.info.push_back(0);
  s.info.insert(s.info.end(), s.receive.begin(), s.receive.end());
  std::sort(s.info.begin(), s.info.end());
  for (int j : s.info)
    if (j < vehicle) s.info_pre.push_back(j);
  return s;
}

std::string Assumption1Report::summary() const {
  if (ok) return "ok";
  std::string out;
  for (const auto& v : violations) {
    if (!out.empty()) out += "; ";
    out += "vehicle " + std::to_string(v.vehicle) + ": " + v.detail;
  }
  return out;
}

Assumption1Report validate_assumption1(const TopologyGraph& g) {
  g.validate_shape();
  const int n = g.n_followers;
  Assumption1Report report;

  // Clause (a): reachability from vertex 0 along directed edges.
  std::vector<char> reached(n + 1, 0);
  reached[0] = 1;
  std::deque<int> frontier{0};
  while (!frontier.empty()) {
    const int j = frontier.front();
    frontier.pop_front();
    for (const auto& [from, to] : g.edges) {
      if (from == j && !reached[to]) {
        reached[to] = 1;
        frontier.push_back(to);
      }
    }
  }
  for (int i = 1; i <= n; ++i) {
    if (!reached[i]) {
      report.violations.push_back({Assumption1Violation::Clause::Unreachable, i,
                                   "not reachable from the leader"});
      report.violations.back().vehicle = i;
    }
  }

  // Clause (b): each follower hears at least one preceding vehicle.
  for (int i = 1; i <= n; ++i) {
    bool has_pre = false;
    for (const auto& [j, to] : g.edges)
      if (to == i && j < i) has_pre = true;
    if (!has_pre) {
      Assumption1Violation v;
      v.vehicle = i;
      v.clause = Assumption1Violation::Clause::NoPredecessor;
      v.detail = "receives from no preceding vehicle";
      report.violations.push_back(v);
    }
  }

  report.ok = report.violations.empty();
  return report;
}

Eigen::MatrixXd terminal_error_matrix(const TopologyGraph& g, double dt, double delta_h) {
  const Assumption1Report a1 = validate_assumption1(g);
  if (!a1.ok) throw ScenarioError("terminal_error_matrix requires Assumption 1: " + a1.summary());

  const int n = g.n_followers;
  Eigen::MatrixXd t = Eigen::MatrixXd::Zero(2 * n, 2 * n);
  for (int i = 1; i <= n; ++i) {
    const VehicleSets s = vehicle_sets(g, i);
    const double inv = 1.0 / static_cast<double>(s.info_pre.size());
    for (int j : s.info_pre) {
      if (j == 0) continue;  // the leader's terminal error is identically zero
      Eigen::Matrix2d delta;
      delta << 1.0, dt - static_cast<double>(i - j) * delta_h,
               0.0, 1.0;
      t.block<2, 2>(2 * (i - 1), 2 * (j - 1)) = inv * delta;
    }
  }
  return t;
}

int nilpotency_index(const Eigen::MatrixXd& t) {
  if (t.rows() != t.cols() || t.rows() % 2 != 0)
    throw ContractViolation("nilpotency_index expects a square 2N x 2N matrix");
  const int n = static_cast<int>(t.rows()) / 2;

  Eigen::MatrixXd power = Eigen::MatrixXd::Identity(t.rows(), t.cols());
  for (int k = 1; k <= n; ++k) {
    power = power * t;
    if (power.cwiseAbs().maxCoeff() <= 1e-12) return k;
  }
  throw ContractViolation("matrix is not nilpotent within N powers; Assumption 1 violated upstream");
}

}  // namespace dmpc
