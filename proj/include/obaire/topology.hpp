#pragma once

#include "obaire/core.hpp"
#include "obaire/determinize.hpp"

namespace obaire
{
  struct borel_class_report
  {
    bool is_open = false;
    bool is_closed = false;
    bool is_sigma2 = false;
    bool is_pi2 = false;
  };

  /// Topological closure. Nondeterministic Büchi input is trimmed to the
  /// states that can still reach an accepting lasso and every state is made
  /// final; deterministic input of other kinds keeps the states with a
  /// non-empty residual.
  buchi_automaton closure(const buchi_automaton& a);
  buchi_automaton closure(const acceptor& a, const limits& lim = {});

  /// Topological interior: a deterministic Büchi automaton accepting the
  /// words that reach a state whose residual language is everything. Those
  /// states are merged into one accepting sink.
  buchi_automaton interior(const acceptor& a, const limits& lim = {});

  /// Words with infinitely many prefixes in L(w), as a deterministic
  /// complete Büchi automaton over the subset automaton of w.
  buchi_automaton w_delta(const finite_automaton& w);

  borel_class_report classify(const acceptor& a, const limits& lim = {});

  /// Deterministic complete Büchi automaton for a language in the second
  /// Borel level. The result is checked for equivalence with \a a before it
  /// is returned (construction_error otherwise).
  ///
  /// Throws precondition_error when L(a) is not a countable intersection of
  /// open sets.
  buchi_automaton to_dba(const acceptor& a, const limits& lim = {});

  /// Equivalent to closure(a) being universal.
  bool is_dense(const acceptor& a, const limits& lim = {});
}
