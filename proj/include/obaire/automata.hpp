#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "obaire/alphabet.hpp"

namespace obaire
{
  using state = std::uint32_t;
  using state_set = boost::dynamic_bitset<>;

  /// succ[q][a] is the sorted, duplicate-free list of a-successors of q.
  using successor_table = std::vector<std::vector<std::vector<state>>>;

  successor_table make_successor_table(std::size_t states,
                                       std::size_t symbols);
  void add_edge(successor_table& t, state from, symbol a, state to);

  /// Set with the given members over a universe of \a n states.
  state_set make_state_set(std::size_t n, std::initializer_list<state> members);
  std::vector<state> members(const state_set& s);

  enum class acceptance_mode
  {
    buchi,
    cobuchi,
  };

  /// Shared shape of finite-word and Buchi automata: a nondeterministic
  /// transition graph with one initial state and a set of marked states.
  class marked_automaton
  {
  public:
    const obaire::alphabet& alphabet() const noexcept { return sigma_; }
    std::size_t size() const noexcept { return succ_.size(); }
    state initial() const noexcept { return initial_; }
    const state_set& finals() const noexcept { return finals_; }
    bool is_final(state q) const { return finals_.test(q); }
    std::span<const state> successors(state q, symbol a) const
    {
      return succ_[q][a];
    }
    const successor_table& transitions() const noexcept { return succ_; }
    std::size_t edge_count() const;

    bool is_deterministic() const;
    bool is_complete() const;

  protected:
    marked_automaton(obaire::alphabet sigma, successor_table succ,
                     state initial, state_set finals);

    obaire::alphabet sigma_;
    successor_table succ_;
    state initial_;
    state_set finals_;
  };

  /// Nondeterministic automaton over infinite words.
  ///
  /// In buchi mode a run is accepting when it visits finals() infinitely
  /// often. In cobuchi mode a run is accepting when it visits finals()
  /// finitely often.
  class buchi_automaton : public marked_automaton
  {
  public:
    buchi_automaton(obaire::alphabet sigma, successor_table succ,
                    state initial, state_set finals,
                    acceptance_mode mode = acceptance_mode::buchi);

    acceptance_mode mode() const noexcept { return mode_; }
    bool is_buchi() const noexcept { return mode_ == acceptance_mode::buchi; }
    bool is_cobuchi() const noexcept
    {
      return mode_ == acceptance_mode::cobuchi;
    }

    /// Same graph and acceptance set, different initial state.
    buchi_automaton with_initial(state q) const;

    /// The deterministic successor. Requires is_deterministic().
    state step(state q, symbol a) const { return succ_[q][a].front(); }

  private:
    acceptance_mode mode_;
  };

  /// Nondeterministic automaton over finite words.
  class finite_automaton : public marked_automaton
  {
  public:
    finite_automaton(obaire::alphabet sigma, successor_table succ,
                     state initial, state_set finals);

    bool accepts(const word& w) const;
  };

  /// Deterministic complete Muller automaton. A run is accepting when the
  /// set of states it visits infinitely often is a member of the table.
  ///
  /// The table is either listed explicitly or given by a priority per
  /// state: then a set is designated when its least priority is even.
  class muller_automaton
  {
  public:
    /// \a delta[q][a] is the unique a-successor of q.
    muller_automaton(obaire::alphabet sigma,
                     std::vector<std::vector<state>> delta, state initial,
                     std::vector<state_set> table);

    static muller_automaton with_priorities(
      obaire::alphabet sigma, std::vector<std::vector<state>> delta,
      state initial, std::vector<unsigned> priority);

    const obaire::alphabet& alphabet() const noexcept { return sigma_; }
    std::size_t size() const noexcept { return delta_.size(); }
    state initial() const noexcept { return initial_; }
    state step(state q, symbol a) const { return delta_[q][a]; }
    const std::vector<std::vector<state>>& transitions() const noexcept
    {
      return delta_;
    }
    /// Sorted, duplicate-free. Throws precondition_error in priority form.
    const std::vector<state_set>& table() const;
    bool designated(const state_set& s) const;

    bool has_priorities() const noexcept { return !priority_.empty(); }
    /// One entry per state in priority form, empty otherwise.
    const std::vector<unsigned>& priorities() const noexcept
    {
      return priority_;
    }

    muller_automaton with_initial(state q) const;
    muller_automaton with_table(std::vector<state_set> table) const;

    /// Adds a non-accepting sink for missing transitions. \a delta entries
    /// equal to \a missing are redirected to the sink.
    static muller_automaton complete(obaire::alphabet sigma,
                                     std::vector<std::vector<state>> delta,
                                     state missing, state initial,
                                     std::vector<state_set> table);

  private:
    obaire::alphabet sigma_;
    std::vector<std::vector<state>> delta_;
    state initial_;
    std::vector<state_set> table_;
    std::vector<unsigned> priority_;
  };
}
