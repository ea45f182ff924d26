#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "obaire/core.hpp"
#include "obaire/determinize.hpp"

namespace obaire
{
  /// A closed set with empty interior.
  struct closed_piece
  {
    buchi_automaton closed;
  };

  /// The union over n of the closed sets L_n = { x : the run of the
  /// deterministic complete co-Büchi automaton \a dca on x visits its
  /// finals at most n times }, optionally preceded by a prefix language.
  /// Every state of dca reaches a final state, so no L_n has interior.
  struct cobuchi_family
  {
    buchi_automaton dca;
    std::optional<finite_automaton> prefix;
  };

  using meager_component = std::variant<closed_piece, cobuchi_family>;

  struct meager_union
  {
    /// Accepts the union of the components. Deterministic co-Büchi when
    /// every component has a deterministic form, Büchi otherwise.
    buchi_automaton automaton;
    std::vector<meager_component> certificate;
  };

  struct baire_decomposition
  {
    acceptor source;
    buchi_automaton open_part;
    meager_union meager_part;
    std::vector<std::string> case_trace;
  };

  /// Safety automaton for level \a n of a co-Büchi family (the prefix
  /// language is not applied).
  buchi_automaton level_automaton(const cobuchi_family& f, unsigned n);

  /// Language of one certificate component as a Büchi automaton.
  buchi_automaton component_automaton(const meager_component& c);

  inline constexpr unsigned default_level_checks = 3;

  /// Open part B and meager part C with L(A) delta L(B) inside L(C). The
  /// result is verified before it is returned (construction_error if not).
  baire_decomposition automatic_baire(const acceptor& a,
                                      const limits& lim = {});

  /// For a deterministic complete co-Büchi automaton.
  baire_decomposition baire_sigma2(const buchi_automaton& d,
                                   const limits& lim = {});

  baire_decomposition baire_complement(const baire_decomposition& d,
                                       const limits& lim = {});
  baire_decomposition baire_union(const std::vector<baire_decomposition>& ds,
                                  const limits& lim = {});

  /// Throws construction_error naming the first violated invariant.
  void verify_decomposition(const baire_decomposition& d,
                            const limits& lim = {},
                            unsigned levels = default_level_checks);

  struct meagerness
  {
    bool meager = false;
    /// A word of the open part when the language is not meager.
    std::optional<up_word> witness;
  };

  meagerness meager_check(const acceptor& a, const limits& lim = {});
  bool is_meager(const acceptor& a, const limits& lim = {});
  bool is_comeager(const acceptor& a, const limits& lim = {});
}
