#pragma once

#include <initializer_list>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "obaire/core.hpp"
#include "obaire/harness.hpp"
#include "obaire/word.hpp"

namespace fixtures
{
  using namespace obaire;

  inline const alphabet& ab()
  {
    static const alphabet sigma = alphabet::of_chars("ab");
    return sigma;
  }

  struct edge
  {
    state from;
    char letter;
    state to;
  };

  inline buchi_automaton nba(std::size_t n, state init,
                             std::initializer_list<state> finals,
                             std::initializer_list<edge> edges,
                             acceptance_mode mode = acceptance_mode::buchi)
  {
    auto t = make_successor_table(n, ab().size());
    for (const auto& e : edges)
      add_edge(t, e.from, ab().index_of(std::string(1, e.letter)), e.to);
    state_set f(n);
    for (state q : finals)
      f.set(q);
    return buchi_automaton(ab(), std::move(t), init, std::move(f), mode);
  }

  // delta[q] = {a-successor, b-successor}
  inline muller_automaton dma(std::vector<std::vector<state>> delta,
                              std::vector<std::vector<state>> table)
  {
    const auto n = delta.size();
    std::vector<state_set> t;
    for (const auto& s : table)
      {
        state_set x(n);
        for (state q : s)
          x.set(q);
        t.push_back(std::move(x));
      }
    return muller_automaton(ab(), std::move(delta), 0, std::move(t));
  }

  inline up_word w(const char* text) { return parse_up_word(text, ab()); }

  inline buchi_automaton empty_set() { return empty_automaton(ab()); }
  inline buchi_automaton everything() { return universal_automaton(ab()); }
  inline buchi_automaton starts_with_a()
  {
    return nba(2, 0, {1}, {{0, 'a', 1}, {1, 'a', 1}, {1, 'b', 1}});
  }
  inline buchi_automaton only_a_omega() { return nba(1, 0, {0}, {{0, 'a', 0}}); }
  /// Complement of {a^omega}: some b occurs.
  inline buchi_automaton some_b()
  {
    return nba(2, 0, {1}, {{0, 'a', 0}, {0, 'b', 1}, {1, 'a', 1}, {1, 'b', 1}});
  }
  inline buchi_automaton finitely_many_b()
  {
    return nba(2, 0, {1}, {{0, 'a', 0}, {0, 'b', 0}, {0, 'a', 1}, {1, 'a', 1}});
  }
  inline buchi_automaton finitely_many_a()
  {
    return nba(2, 0, {1}, {{0, 'a', 0}, {0, 'b', 0}, {0, 'b', 1}, {1, 'b', 1}});
  }
  /// Deterministic: state 1 is entered on a.
  inline buchi_automaton infinitely_many_a()
  {
    return nba(2, 0, {1}, {{0, 'a', 1}, {0, 'b', 0}, {1, 'a', 1}, {1, 'b', 0}});
  }
  inline buchi_automaton a_omega_or_starts_with_b()
  {
    return nba(3, 0, {1, 2},
               {{0, 'a', 1}, {1, 'a', 1}, {0, 'b', 2}, {2, 'a', 2},
                {2, 'b', 2}});
  }
  inline buchi_automaton infinitely_many_b()
  {
    return nba(2, 0, {1}, {{0, 'b', 1}, {0, 'a', 0}, {1, 'b', 1}, {1, 'a', 0}});
  }
  /// Nondeterministic: guesses an a and then another one, forever.
  inline buchi_automaton infinitely_many_a_nd()
  {
    return nba(2, 0, {1}, {{0, 'a', 0}, {0, 'b', 0}, {0, 'a', 1}, {1, 'a', 1},
                           {1, 'b', 0}});
  }
  inline buchi_automaton only_b_omega() { return nba(1, 0, {0}, {{0, 'b', 0}}); }
  inline buchi_automaton starts_with_b()
  {
    return nba(2, 0, {1}, {{0, 'b', 1}, {1, 'a', 1}, {1, 'b', 1}});
  }
  /// State 1 is q_a (entered on a), state 0 is q_b.
  inline muller_automaton infinitely_many_a_dma()
  {
    return dma({{1, 0}, {1, 0}}, {{1}, {0, 1}});
  }
  /// Deterministic complete co-Büchi: final state 1 is entered on b.
  inline buchi_automaton finitely_many_b_dca()
  {
    return nba(2, 0, {1}, {{0, 'a', 0}, {0, 'b', 1}, {1, 'a', 0}, {1, 'b', 1}},
               acceptance_mode::cobuchi);
  }

  /// First lasso of the (p, q) corpus on which the naive oracle separates
  /// the two acceptors.
  inline std::optional<up_word> disagreement(const acceptor& x,
                                             const acceptor& y,
                                             std::size_t p = 3,
                                             std::size_t q = 3)
  {
    for (const auto& u : lasso_corpus(ab(), p, q).words)
      if (naive_member(x, u) != naive_member(y, u))
        return u;
    return std::nullopt;
  }

  /// b.(finitely many a) union a.(infinitely many b), as a Muller automaton.
  /// States: 0 start, 1/2 after b (last a / last b), 3/4 after a (same).
  inline muller_automaton neither_sigma2_nor_pi2()
  {
    return dma({{3, 2}, {1, 2}, {1, 2}, {3, 4}, {3, 4}},
               {{2}, {4}, {3, 4}});
  }
}
