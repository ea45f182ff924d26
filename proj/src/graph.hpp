// Plain directed-graph helpers shared by the automaton algorithms.
#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace obaire::detail
{
  using node = std::uint32_t;
  using adjacency = std::vector<std::vector<node>>;
  using node_set = boost::dynamic_bitset<>;

  struct scc_decomposition
  {
    std::vector<std::uint32_t> component;   // node -> scc index
    std::vector<std::vector<node>> members; // scc index -> nodes
    std::vector<bool> nontrivial;           // has at least one edge inside
  };

  /// Tarjan's algorithm restricted to \a alive nodes (all when empty).
  /// Nodes outside \a alive get component npos.
  scc_decomposition strongly_connected(const adjacency& g,
                                       const node_set& alive = {});

  inline constexpr std::uint32_t npos = static_cast<std::uint32_t>(-1);

  node_set reachable_from(const adjacency& g, const std::vector<node>& from,
                          const node_set& alive = {});

  /// Nodes that can reach some node of \a targets (targets included).
  node_set coreachable(const adjacency& g, const node_set& targets);

  /// Shortest path from any node in \a from to \a to, staying in \a alive.
  /// Returns the node sequence (including both endpoints).
  std::optional<std::vector<node>> shortest_path(const adjacency& g,
                                                 const std::vector<node>& from,
                                                 node to,
                                                 const node_set& alive = {});

  /// A cycle through \a start visiting every node of \a must, staying inside
  /// \a within, which must be strongly connected and contain them. The
  /// result starts at \a start and does not repeat it at the end.
  std::vector<node> covering_cycle(const adjacency& g, node start,
                                   const std::vector<node>& must,
                                   const node_set& within);

  /// Calls \a visit on every loop (node set that is strongly connected and
  /// carries at least one edge) inside \a within that contains \a required.
  /// Each loop is visited once. Stops early and returns false when \a visit
  /// returns false.
  bool for_each_loop(const adjacency& g, const node_set& within,
                     const node_set& required,
                     const std::function<bool(const node_set&)>& visit);
}
