#include "obaire/automata.hpp"

#include <algorithm>
#include <climits>

#include "obaire/errors.hpp"

namespace obaire
{
  successor_table make_successor_table(std::size_t states,
                                       std::size_t symbols)
  {
    return successor_table(states, std::vector<std::vector<state>>(symbols));
  }

  void add_edge(successor_table& t, state from, symbol a, state to)
  {
    auto& v = t.at(from).at(a);
    auto it = std::lower_bound(v.begin(), v.end(), to);
    if (it == v.end() || *it != to)
      v.insert(it, to);
  }

  state_set make_state_set(std::size_t n, std::initializer_list<state> ms)
  {
    state_set s(n);
    for (state q : ms)
      s.set(q);
    return s;
  }

  std::vector<state> members(const state_set& s)
  {
    std::vector<state> out;
    out.reserve(s.count());
    for (auto i = s.find_first(); i != state_set::npos; i = s.find_next(i))
      out.push_back(static_cast<state>(i));
    return out;
  }

  marked_automaton::marked_automaton(obaire::alphabet sigma,
                                     successor_table succ, state initial,
                                     state_set finals)
    : sigma_(std::move(sigma)), succ_(std::move(succ)), initial_(initial),
      finals_(std::move(finals))
  {
    const std::size_t n = succ_.size();
    if (n == 0)
      throw input_error("automaton must have at least one state");
    if (initial_ >= n)
      throw input_error("initial state out of range");
    if (finals_.size() != n)
      throw input_error("final-state set has the wrong universe size");
    for (auto& row : succ_)
      {
        if (row.size() != sigma_.size())
          throw input_error("transition row does not match alphabet size");
        for (auto& v : row)
          {
            std::sort(v.begin(), v.end());
            v.erase(std::unique(v.begin(), v.end()), v.end());
            if (!v.empty() && v.back() >= n)
              throw input_error("transition target out of range");
          }
      }
  }

  std::size_t marked_automaton::edge_count() const
  {
    std::size_t c = 0;
    for (const auto& row : succ_)
      for (const auto& v : row)
        c += v.size();
    return c;
  }

  bool marked_automaton::is_deterministic() const
  {
    for (const auto& row : succ_)
      for (const auto& v : row)
        if (v.size() > 1)
          return false;
    return true;
  }

  bool marked_automaton::is_complete() const
  {
    for (const auto& row : succ_)
      for (const auto& v : row)
        if (v.empty())
          return false;
    return true;
  }

  buchi_automaton::buchi_automaton(obaire::alphabet sigma,
                                   successor_table succ, state initial,
                                   state_set finals, acceptance_mode mode)
    : marked_automaton(std::move(sigma), std::move(succ), initial,
                       std::move(finals)),
      mode_(mode)
  {
  }

  buchi_automaton buchi_automaton::with_initial(state q) const
  {
    return buchi_automaton(sigma_, succ_, q, finals_, mode_);
  }

  finite_automaton::finite_automaton(obaire::alphabet sigma,
                                     successor_table succ, state initial,
                                     state_set finals)
    : marked_automaton(std::move(sigma), std::move(succ), initial,
                       std::move(finals))
  {
  }

  bool finite_automaton::accepts(const word& w) const
  {
    state_set cur(size());
    cur.set(initial_);
    for (symbol a : w)
      {
        if (a >= sigma_.size())
          throw input_error("symbol outside alphabet");
        state_set next(size());
        for (state q : members(cur))
          for (state r : succ_[q][a])
            next.set(r);
        cur = std::move(next);
      }
    return cur.intersects(finals_);
  }

  muller_automaton::muller_automaton(obaire::alphabet sigma,
                                     std::vector<std::vector<state>> delta,
                                     state initial,
                                     std::vector<state_set> table)
    : sigma_(std::move(sigma)), delta_(std::move(delta)), initial_(initial),
      table_(std::move(table))
  {
    const std::size_t n = delta_.size();
    if (n == 0)
      throw input_error("automaton must have at least one state");
    if (initial_ >= n)
      throw input_error("initial state out of range");
    for (const auto& row : delta_)
      {
        if (row.size() != sigma_.size())
          throw input_error("Muller automata must be complete and "
                            "deterministic");
        for (state r : row)
          if (r >= n)
            throw input_error("transition target out of range");
      }
    for (const auto& s : table_)
      if (s.size() != n)
        throw input_error("table member has the wrong universe size");
    std::sort(table_.begin(), table_.end());
    table_.erase(std::unique(table_.begin(), table_.end()), table_.end());
  }

  muller_automaton muller_automaton::with_priorities(
    obaire::alphabet sigma, std::vector<std::vector<state>> delta,
    state initial, std::vector<unsigned> priority)
  {
    if (priority.size() != delta.size())
      throw input_error("one priority per state expected");
    muller_automaton m(std::move(sigma), std::move(delta), initial, {});
    m.priority_ = std::move(priority);
    return m;
  }

  const std::vector<state_set>& muller_automaton::table() const
  {
    if (has_priorities())
      throw precondition_error("table is given by priorities");
    return table_;
  }

  bool muller_automaton::designated(const state_set& s) const
  {
    if (!has_priorities())
      return std::binary_search(table_.begin(), table_.end(), s);
    if (s.size() != size() || !s.any())
      return false;
    unsigned least = UINT_MAX;
    for (auto q = s.find_first(); q != state_set::npos; q = s.find_next(q))
      least = std::min(least, priority_[q]);
    return least % 2 == 0;
  }

  muller_automaton muller_automaton::with_initial(state q) const
  {
    muller_automaton m(sigma_, delta_, q, table_);
    m.priority_ = priority_;
    return m;
  }

  muller_automaton
  muller_automaton::with_table(std::vector<state_set> table) const
  {
    return muller_automaton(sigma_, delta_, initial_, std::move(table));
  }

  muller_automaton
  muller_automaton::complete(obaire::alphabet sigma,
                             std::vector<std::vector<state>> delta,
                             state missing, state initial,
                             std::vector<state_set> table)
  {
    bool needs_sink = false;
    for (const auto& row : delta)
      for (state r : row)
        needs_sink |= r == missing;
    if (!needs_sink)
      return muller_automaton(std::move(sigma), std::move(delta), initial,
                              std::move(table));
    const auto sink = static_cast<state>(delta.size());
    for (auto& row : delta)
      for (state& r : row)
        if (r == missing)
          r = sink;
    delta.emplace_back(sigma.size(), sink);
    for (auto& s : table)
      s.resize(delta.size());
    return muller_automaton(std::move(sigma), std::move(delta), initial,
                            std::move(table));
  }
}
