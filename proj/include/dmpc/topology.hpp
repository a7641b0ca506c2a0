#pragma once

#include <Eigen/Dense>
#include <string>
#include <utility>
#include <vector>

namespace dmpc {

/// Directed communication graph over vehicles 0..N. An edge (j, i) means
/// vehicle i receives vehicle j's broadcast. Vehicle 0 is the (virtual) leader;
/// index order is physical order, so j < i means j drives ahead of i.
struct TopologyGraph {
  int n_followers = 0;
  std::vector<std::pair<int, int>> edges;  // (from j, to i), sorted, unique

  static TopologyGraph predecessor_following(int n);
  static TopologyGraph bidirectional(int n);
  static TopologyGraph two_predecessor(int n);
  static TopologyGraph leader_broadcast(int n);
  static TopologyGraph from_edges(int n, std::vector<std::pair<int, int>> edges);

  bool has_edge(int from, int to) const;
  /// Structural checks only: index range and self-loops.
  void validate_shape() const;
};

/// Matrices over the follower block (indices 1..N mapped to rows/cols 0..N-1).
struct TopologyMatrices {
  Eigen::MatrixXd adjacency;         // M
  Eigen::MatrixXd adjacency_pre;     // M_pre: edges from preceding followers only
  Eigen::MatrixXd in_degree;         // D
  Eigen::MatrixXd in_degree_pre;     // D_pre
  Eigen::MatrixXd laplacian;         // L = D - M
  Eigen::MatrixXd laplacian_pre;     // L_pre = D_pre - M_pre
  Eigen::MatrixXd pinning;           // P: who hears the leader
  Eigen::MatrixXd pinning_pre;       // the leader precedes everyone, so P_pre = P
};

/// Neighbor sets of one follower.
struct VehicleSets {
  std::vector<int> receive;   // followers i hears
  std::vector<int> share;     // followers that hear i
  bool hears_leader = false;  // whether 0 is in the information set
  std::vector<int> info;      // receive plus the leader when pinned
  std::vector<int> info_pre;  // members of info preceding i (always includes 0 if pinned)
};

struct Assumption1Violation {
  enum class Clause { Unreachable, NoPredecessor };
  int vehicle = 0;
  Clause clause = Clause::Unreachable;
  std::string detail;
};

struct Assumption1Report {
  bool ok = false;
  std::vector<Assumption1Violation> violations;
  std::string summary() const;
};

TopologyMatrices build_matrices(const TopologyGraph& g);

VehicleSets vehicle_sets(const TopologyGraph& g, int vehicle);

/// Checks (a) every follower is reachable from the leader along directed edges
/// and (b) every follower receives from at least one preceding vehicle.
Assumption1Report validate_assumption1(const TopologyGraph& g);

/// The 2N x 2N block matrix driving the predicted terminal-output error: block
/// (i, j) is (1/|info_pre(i)|) * [[1, dt - (i-j) delta_h], [0, 1]] for each
/// preceding follower j that i hears, zero otherwise. The leader's column is
/// absorbed (its terminal error is identically zero), so the matrix is strictly
/// lower block triangular and therefore nilpotent of index <= N.
Eigen::MatrixXd terminal_error_matrix(const TopologyGraph& g, double dt, double delta_h);

/// Smallest k with T^k = 0 (entries below 1e-12 after an exact structural
/// check). Throws if no such k <= N exists.
int nilpotency_index(const Eigen::MatrixXd& t);

}  // namespace dmpc
