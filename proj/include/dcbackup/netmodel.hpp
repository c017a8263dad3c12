#ifndef DCBACKUP_NETMODEL_HPP
#define DCBACKUP_NETMODEL_HPP

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dcbackup {

using NodeId = int;

// Per-unit storage price and capacity of a data-center node.
// Capacities and amounts share the same unit as item sizes
// (wavelength-channel quanta: one channel moves one quantum per second).
struct DcInfo {
  long long storage_capacity = 0;   // S_v
  long long storage_unit_cost = 0;  // W_v
  bool operator==(const DcInfo&) const = default;
};

// Undirected fiber link. Endpoints are stored normalized (u < v).
struct Link {
  NodeId u = 0;
  NodeId v = 0;
  long long capacity = 0;  // wavelength channels available
  long long cost = 0;      // cost of one wavelength on this link
  bool operator==(const Link&) const = default;
};

// Optical backbone graph plus data-center annotations.
// Immutable after construction; the constructor validates:
//   - link endpoints are distinct and declared
//   - no duplicate undirected link between a node pair
//   - capacities/costs non-negative, dc annotations on declared nodes
class Network {
 public:
  Network() = default;
  Network(std::vector<NodeId> nodes, std::vector<Link> links,
          std::map<NodeId, DcInfo> dc_nodes);

  const std::vector<NodeId>& nodes() const { return nodes_; }
  const std::vector<Link>& links() const { return links_; }
  const std::map<NodeId, DcInfo>& dc_nodes() const { return dc_nodes_; }

  bool has_node(NodeId n) const;
  // Index into links() for the undirected pair, or -1 if absent.
  int link_index(NodeId a, NodeId b) const;
  // Neighbors of n as (neighbor, link index), sorted by neighbor id.
  const std::vector<std::pair<NodeId, int>>& neighbors(NodeId n) const;

  bool operator==(const Network& other) const;

 private:
  std::vector<NodeId> nodes_;
  std::vector<Link> links_;
  std::map<NodeId, DcInfo> dc_nodes_;
  std::map<NodeId, std::vector<std::pair<NodeId, int>>> adjacency_;
  std::map<std::pair<NodeId, NodeId>, int> link_by_pair_;
};

// Simple path through the network. nodes are pairwise distinct,
// link_indices[i] joins nodes[i] and nodes[i+1], cost = sum of link costs.
struct Path {
  std::vector<NodeId> nodes;
  std::vector<int> link_indices;
  long long cost = 0;

  NodeId source() const { return nodes.front(); }
  NodeId destination() const { return nodes.back(); }
  bool operator==(const Path&) const = default;
};

// One user's data to evacuate: size C_d stored at `source`, with the
// candidate transmission paths it may use (all start at `source`).
struct DataItem {
  int id = 0;
  NodeId source = 0;
  long long size = 0;  // C_d >= 1
  std::vector<Path> candidate_paths;
};

// A disaster scenario ready for planning.
struct Instance {
  Network network;
  NodeId affected_dc = 0;
  std::vector<NodeId> safe_dcs;  // sorted ascending, no duplicates
  std::vector<DataItem> data_items;
  long long epsilon1 = 0;              // seconds available for the transfer
  std::optional<long long> pn;         // max used paths per (item, destination); nullopt = unlimited
  long long vn = 0;                    // max backup DCs per item
  long long lambda_big_m = 0;          // linking constant, must exceed every N/B upper bound
  int max_hops = 0;                    // hop bound used when generating candidate paths
};

// Smallest value of the linking constant that is valid by construction:
// 1 + max(max_v S_v, max_e B_e, max_d C_d).
long long default_lambda(const Network& network, const std::vector<DataItem>& items);

struct Violation {
  std::string subject;  // field or entity the violation is about
  std::string rule;     // invariant that failed
};

std::string format_violations(const std::vector<Violation>& violations);

// Pure check of all Instance/DataItem invariants. Empty report means valid.
std::vector<Violation> validate_instance(const Instance& instance);

// Parse error for the line-oriented file formats; carries a 1-based line number.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// Topology file format (line oriented, '#' comments):
//   node <id> [dc storage=<int> wcost=<int>]
//   link <u> <v> cap=<int> cost=<int>
Network parse_topology(const std::string& text);
std::string serialize_topology(const Network& network);

// The 19-node / 33-link U.S. InternetMCI backbone with per-wavelength
// link costs and data centers at nodes 3, 9, 12, 14, 18. Link capacities
// and DC storage figures are left at 0; a generator fills them.
Network builtin_internetmci();

// Instance file format (line oriented, '#' comments):
//   affected <id>
//   safe <id> <id> ...
//   epsilon1 <int>
//   pn <int|all>
//   vn <int>
//   lambda <int|auto>
//   maxhops <int>
//   item <size>          (repeated; item ids follow file order)
// Candidate paths are regenerated from the topology, not listed.
Instance parse_instance(const std::string& text, const Network& topology);
std::string serialize_instance(const Instance& instance);

}  // namespace dcbackup

#endif
