#pragma once

#include <cstddef>

#include "obaire/automata.hpp"
#include "obaire/core.hpp"

namespace obaire
{
  inline constexpr std::size_t default_max_states = 100'000;

  /// Limits applied by every construction that may blow up.
  struct limits
  {
    std::size_t max_states = default_max_states;
    std::size_t max_loops = 2'000'000;
  };

  /// Safra's construction with node names renumbered by age after every
  /// step. The table is given by priorities: a step that removes the node
  /// named e, or marks the node named f with f < e, has priority 2e - 1 or
  /// 2f (least over the nodes concerned). Deterministic input gets
  /// priorities straight from its final states.
  ///
  /// Throws capacity_error when more than limits::max_states macro-states
  /// would be built.
  muller_automaton determinize(const buchi_automaton& a, const limits& lim = {});

  /// Guesses a designated set and the point after which the run stays in
  /// it, then checks that every state of the set recurs. Designated loops
  /// are grouped into intervals [R, X] (every loop between R and X is
  /// designated) and each interval gets one copy. In priority form there is
  /// one copy per even priority.
  buchi_automaton muller_to_buchi(const muller_automaton& m);

  /// Same structure; the table is complemented against the reachable loops,
  /// or every priority is raised by one.
  muller_automaton complement(const muller_automaton& m,
                              const limits& lim = {});

  buchi_automaton complement(const buchi_automaton& a, const limits& lim = {});

  /// Deterministic Büchi automaton for the complement of a co-Büchi
  /// automaton (nondeterministic allowed), by a breakpoint construction.
  buchi_automaton cobuchi_complement(const buchi_automaton& a,
                                     const limits& lim = {});

  /// L(a) is a subset of L(b).
  bool included(const buchi_automaton& a, const buchi_automaton& b,
                const limits& lim = {});

  bool equivalent(const buchi_automaton& a, const buchi_automaton& b,
                  const limits& lim = {});

  /// Büchi automaton for the complement of any acceptor.
  buchi_automaton complement_of(const acceptor& a, const limits& lim = {});
  bool included(const acceptor& a, const acceptor& b, const limits& lim = {});
  bool equivalent(const acceptor& a, const acceptor& b,
                  const limits& lim = {});

  buchi_automaton to_buchi(const acceptor& a);
  muller_automaton to_muller(const acceptor& a, const limits& lim = {});
}
