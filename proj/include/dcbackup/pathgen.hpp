#ifndef DCBACKUP_PATHGEN_HPP
#define DCBACKUP_PATHGEN_HPP

#include <map>
#include <vector>

#include "dcbackup/netmodel.hpp"

namespace dcbackup {

// All simple paths from src to dst using at most max_hops links,
// in lexicographic order of the node sequence. A disconnected pair
// yields an empty list.
std::vector<Path> enumerate_simple_paths(const Network& network, NodeId src,
                                         NodeId dst, int max_hops);

// Candidate path sets for one affected node: for each safe DC v the
// simple paths affected -> v. Every data item sourced at `affected`
// shares this set.
std::map<NodeId, std::vector<Path>> build_candidate_sets(
    const Network& network, NodeId affected, const std::vector<NodeId>& safe_dcs,
    int max_hops);

// The per-item candidate list: concatenation of the per-destination lists
// in ascending destination order.
std::vector<Path> flatten_candidate_sets(
    const std::map<NodeId, std::vector<Path>>& sets);

}  // namespace dcbackup

#endif
