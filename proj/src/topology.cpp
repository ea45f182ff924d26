#include "obaire/topology.hpp"

#include <unordered_map>

#include "det_language.hpp"
#include "obaire/errors.hpp"

namespace obaire
{
  using detail::det_language;

  buchi_automaton closure(const buchi_automaton& a)
  {
    if (a.is_cobuchi())
      return closure(acceptor(a));
    auto t = trim(a, true);
    if (is_empty(t))
      return empty_automaton(a.alphabet());
    state_set all(t.size());
    all.set();
    return buchi_automaton(t.alphabet(), t.transitions(), t.initial(),
                           std::move(all));
  }

  buchi_automaton closure(const acceptor& a, const limits& lim)
  {
    if (auto b = std::get_if<buchi_automaton>(&a); b && b->is_buchi())
      return closure(*b);
    auto d = det_language::of(a, lim);
    return detail::structure_safety(d.structure(), d.nonempty());
  }

  buchi_automaton interior(const acceptor& a, const limits& lim)
  {
    auto d = det_language::of(a, lim);
    return detail::structure_dba(d.structure(), state_set(d.structure().size()),
                                 d.universal());
  }

  buchi_automaton w_delta(const finite_automaton& w)
  {
    const auto& sigma = w.alphabet();
    std::unordered_map<state_set, state> index;
    std::vector<state_set> subsets;
    auto intern = [&](state_set s) {
      auto [it, fresh] = index.emplace(s, static_cast<state>(subsets.size()));
      if (fresh)
        subsets.push_back(std::move(s));
      return it->second;
    };
    intern(make_state_set(w.size(), {w.initial()}));
    std::vector<std::vector<state>> rows;
    for (std::size_t i = 0; i < subsets.size(); ++i)
      {
        std::vector<state> row;
        for (symbol s = 0; s < sigma.size(); ++s)
          {
            state_set next(w.size());
            for (state q : members(subsets[i]))
              for (state r : w.successors(q, s))
                next.set(r);
            row.push_back(intern(std::move(next)));
          }
        rows.push_back(std::move(row));
      }
    auto t = make_successor_table(subsets.size(), sigma.size());
    state_set fin(subsets.size());
    for (state i = 0; i < subsets.size(); ++i)
      {
        if (subsets[i].intersects(w.finals()))
          fin.set(i);
        for (symbol s = 0; s < sigma.size(); ++s)
          add_edge(t, i, s, rows[i][s]);
      }
    return buchi_automaton(sigma, std::move(t), 0, std::move(fin));
  }

  borel_class_report classify(const acceptor& a, const limits& lim)
  {
    auto d = det_language::of(a, lim);
    borel_class_report r;
    r.is_open = d.is_open();
    r.is_closed = d.is_closed();
    r.is_pi2 = d.is_pi2();
    r.is_sigma2 = d.is_sigma2();
    if ((r.is_open && !r.is_sigma2) || (r.is_closed && !r.is_pi2))
      throw construction_error("inconsistent Borel classification");
    return r;
  }

  namespace
  {
    // Breakpoint construction: a state is a structure state together with
    // the states of its SCC visited since the last reset. It is final when
    // that set contains an accepted loop; the successor of a final state
    // starts afresh.
    buchi_automaton breakpoint_dba(const det_language& d, const limits& lim)
    {
      const auto& m = d.structure();
      const auto& sigma = m.alphabet();
      auto sccs = detail::strongly_connected(d.graph());
      std::unordered_map<state_set, bool> verdict;
      auto holds_accepted_loop = [&](const state_set& v) {
        auto it = verdict.find(v);
        if (it != verdict.end())
          return it->second;
        bool found = false;
        auto inner = detail::strongly_connected(d.graph(), v);
        for (std::size_t c = 0; c < inner.members.size() && !found; ++c)
          if (inner.nontrivial[c])
            {
              state_set comp(m.size());
              for (auto q : inner.members[c])
                comp.set(q);
              found = d.accepts_loop(comp);
            }
        verdict.emplace(v, found);
        return found;
      };

      struct key
      {
        state q;
        state_set seen;
        bool operator==(const key&) const = default;
      };
      struct key_hash
      {
        std::size_t operator()(const key& k) const noexcept
        {
          return std::hash<state_set>()(k.seen) * 31 + k.q;
        }
      };
      std::unordered_map<key, state, key_hash> index;
      std::vector<key> keys;
      auto intern = [&](key k) {
        auto [it, fresh] = index.emplace(k, static_cast<state>(keys.size()));
        if (fresh)
          {
            if (keys.size() >= lim.max_states)
              throw capacity_error("breakpoint construction exceeded "
                                   + std::to_string(lim.max_states)
                                   + " states");
            keys.push_back(std::move(k));
          }
        return it->second;
      };
      auto fresh_set = [&](state q) {
        return make_state_set(m.size(), {q});
      };
      intern({m.initial(), fresh_set(m.initial())});
      std::vector<bool> final_state;
      std::vector<std::vector<state>> rows;
      for (std::size_t i = 0; i < keys.size(); ++i)
        {
          const bool fin = holds_accepted_loop(keys[i].seen);
          final_state.push_back(fin);
          std::vector<state> row;
          for (symbol s = 0; s < sigma.size(); ++s)
            {
              const state q = keys[i].q;
              const state r = m.step(q, s);
              state_set next = fresh_set(r);
              if (!fin && sccs.component[q] == sccs.component[r])
                next |= keys[i].seen;
              row.push_back(intern({r, std::move(next)}));
            }
          rows.push_back(std::move(row));
        }
      auto t = make_successor_table(keys.size(), sigma.size());
      state_set fin(keys.size());
      for (state i = 0; i < keys.size(); ++i)
        {
          if (final_state[i])
            fin.set(i);
          for (symbol s = 0; s < sigma.size(); ++s)
            add_edge(t, i, s, rows[i][s]);
        }
      return buchi_automaton(sigma, std::move(t), 0, std::move(fin));
    }
  }

  buchi_automaton to_dba(const acceptor& a, const limits& lim)
  {
    auto d = det_language::of(a, lim);
    if (!d.is_pi2())
      throw precondition_error("language is not deterministic Büchi "
                               "recognizable");
    buchi_automaton result = [&] {
      switch (d.acceptance())
        {
        case det_language::kind::buchi:
          return detail::structure_dba(d.structure(), d.marks(),
                                       state_set(d.structure().size()));
        case det_language::kind::cobuchi:
          // Every SCC accepts all of its loops or none of them.
          return detail::structure_dba(d.structure(), d.accepted_core(),
                                       state_set(d.structure().size()));
        case det_language::kind::muller:
          break;
        }
      return breakpoint_dba(d, lim);
    }();
    if (!equivalent(acceptor(result), a, lim))
      throw construction_error("deterministic Büchi conversion is not "
                               "equivalent to its input");
    return result;
  }

  bool is_dense(const acceptor& a, const limits& lim)
  {
    return equivalent(acceptor(closure(a, lim)),
                      acceptor(universal_automaton(alphabet_of(a))), lim);
  }
}
