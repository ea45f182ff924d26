#pragma once

#include <cstddef>
#include <optional>
#include <variant>
#include <vector>

#include "obaire/automata.hpp"
#include "obaire/word.hpp"

namespace obaire
{
  /// Either kind of omega-acceptor accepted by the high-level operations.
  using acceptor = std::variant<buchi_automaton, muller_automaton>;

  const alphabet& alphabet_of(const acceptor& a);

  // --- Membership and emptiness ------------------------------------------

  /// Exact membership of x = u.v^omega, by cycle search in the product of
  /// the automaton with the lasso shape of x.
  bool member(const buchi_automaton& a, const up_word& x);
  bool member(const muller_automaton& a, const up_word& x);
  bool member(const acceptor& a, const up_word& x);

  bool is_empty(const buchi_automaton& a);
  bool is_empty(const muller_automaton& a);
  bool is_empty(const acceptor& a);

  /// Some accepted word, or nullopt if the language is empty.
  std::optional<up_word> accepted_word(const buchi_automaton& a);
  std::optional<up_word> accepted_word(const muller_automaton& a);

  // --- Basic automata ------------------------------------------------------

  buchi_automaton universal_automaton(const alphabet& sigma);
  buchi_automaton empty_automaton(const alphabet& sigma);
  /// The clopen cylinder w . Sigma^omega.
  buchi_automaton cylinder_automaton(const alphabet& sigma, const word& w);

  finite_automaton epsilon_language(const alphabet& sigma);
  finite_automaton empty_language(const alphabet& sigma);
  finite_automaton all_words(const alphabet& sigma);
  finite_automaton finite_language(const alphabet& sigma,
                                   const std::vector<word>& words);

  // --- Constructions -------------------------------------------------------

  /// Nondeterministic Buchi automaton for the language of \a a. Co-Buchi
  /// input is converted (2n states), Buchi input returned as is.
  buchi_automaton as_buchi(const buchi_automaton& a);

  /// Disjoint sum with a fresh initial state.
  buchi_automaton union_of(const buchi_automaton& a,
                           const buchi_automaton& b);
  buchi_automaton union_of(const std::vector<buchi_automaton>& parts,
                           const alphabet& sigma);

  /// Product with the two-phase flag; only reachable pairs are built.
  buchi_automaton intersection(const buchi_automaton& a,
                               const buchi_automaton& b);

  /// Language W . L.
  buchi_automaton concat_left(const finite_automaton& w,
                              const buchi_automaton& l);

  /// Removes unreachable states, and in Buchi mode with \a coreachable also
  /// the states from which no accepting lasso can be reached.
  buchi_automaton trim(const buchi_automaton& a, bool coreachable = false);
  muller_automaton trim(const muller_automaton& a);
  finite_automaton trim(const finite_automaton& a);

  /// Deterministic Buchi form of a Muller automaton whose table is every
  /// loop meeting \a finals.
  buchi_automaton as_deterministic_buchi(const muller_automaton& structure,
                                         const state_set& finals);

  // --- Muller structure helpers -------------------------------------------

  state_set reachable_states(const muller_automaton& a);

  /// Every loop (non-empty set of states that is the infinity set of some
  /// run) among the states reachable from the initial state. Sorted.
  /// Throws capacity_error beyond \a cap loops.
  std::vector<state_set> reachable_loops(const muller_automaton& a,
                                         std::size_t cap = 2'000'000);

  /// The table as a list: table() itself, or in priority form the
  /// designated reachable loops. Throws capacity_error beyond \a cap loops.
  std::vector<state_set> designated_loops(const muller_automaton& a,
                                          std::size_t cap = 2'000'000);

  /// True iff \a s is a loop of the transition graph of \a a.
  bool is_loop(const muller_automaton& a, const state_set& s);

  /// The set of states on the cycle reached by the run on \a x.
  state_set infinity_set(const muller_automaton& a, const up_word& x);
}
