// A language read off a deterministic complete transition structure, with
// acceptance given either by marked states (Buchi or co-Buchi) or by an
// explicit family of accepted loops (Muller). Topological questions are
// answered on the structure through the sets of states lying on accepted
// and on rejected loops. A table given by priorities is handled without
// listing loops.
#pragma once

#include <optional>
#include <vector>

#include "graph.hpp"
#include "obaire/core.hpp"
#include "obaire/determinize.hpp"

namespace obaire::detail
{
  /// The loops S with low <= S <= high.
  struct loop_interval
  {
    state_set low;
    state_set high;
  };

  class det_language
  {
  public:
    enum class kind
    {
      buchi,
      cobuchi,
      muller,
    };

    /// Nondeterministic Buchi input is determinized.
    static det_language of(const acceptor& a, const limits& lim = {});

    kind acceptance() const noexcept { return kind_; }
    const muller_automaton& structure() const noexcept { return m_; }
    const adjacency& graph() const noexcept { return g_; }
    const state_set& reachable() const noexcept { return reach_; }
    const state_set& marks() const noexcept { return marks_; }

    bool accepts_loop(const state_set& s) const;

    /// Reachable states lying on some accepted (rejected) loop.
    const state_set& accepted_core() const noexcept { return acc_core_; }
    const state_set& rejected_core() const noexcept { return rej_core_; }

    /// Reachable states whose residual language is everything / non-empty.
    const state_set& universal() const noexcept { return universal_; }
    const state_set& nonempty() const noexcept { return nonempty_; }

    bool is_open() const { return acc_core_.is_subset_of(universal_); }
    bool is_closed() const { return !rej_core_.intersects(nonempty_); }
    bool is_pi2() const;
    bool is_sigma2() const;

    /// Büchi-mode automata for the language and for its complement.
    buchi_automaton language() const;
    buchi_automaton complement_language() const;

    /// Intervals whose loops are exactly the accepted reachable loops.
    std::vector<loop_interval> accepted_intervals() const;

    /// The same structure accepting the complement.
    muller_automaton complement_structure() const;

  private:
    det_language(muller_automaton m, kind k, state_set marks,
                 std::optional<buchi_automaton> source,
                 std::size_t max_loops);

    bool no_accepted_below_rejected() const;

    muller_automaton m_;
    kind kind_;
    state_set marks_;
    std::optional<buchi_automaton> source_;
    std::size_t max_loops_;
    adjacency g_;
    state_set reach_;
    std::vector<state_set> loops_; // Muller kind only
    std::vector<bool> accepted_;
    state_set acc_core_, rej_core_, universal_, nonempty_;
  };

  /// Deterministic complete structure of a deterministic Büchi-mode
  /// automaton; missing transitions go to a fresh non-final sink. The
  /// returned marks are the finals resized to the structure.
  std::pair<muller_automaton, state_set>
  completed_structure(const buchi_automaton& a);

  /// Deterministic Büchi automaton on the reachable part of \a m accepting
  /// the runs that visit \a finals infinitely often. States in \a sink
  /// (which must be closed under successors) are merged into one accepting
  /// state with self-loops.
  buchi_automaton structure_dba(const muller_automaton& m,
                                const state_set& finals,
                                const state_set& sink);

  /// Deterministic Büchi automaton on the reachable states of \a m inside
  /// \a keep (all final); transitions leaving \a keep are dropped.
  buchi_automaton structure_safety(const muller_automaton& m,
                                   const state_set& keep);

  adjacency graph_of(const muller_automaton& m);

  /// Nodes on nontrivial SCCs of \a g restricted to \a alive.
  node_set cyclic_nodes(const adjacency& g, const node_set& alive);
}
