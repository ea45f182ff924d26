#include "obaire/determinize.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>

#include <boost/functional/hash.hpp>

#include "graph.hpp"
#include "obaire/errors.hpp"

namespace obaire
{
  namespace
  {
    // --- Safra trees -------------------------------------------------------
    //
    // Node names are kept compact: after every step the surviving nodes are
    // renumbered 1, 2, ... by age, so a tree over n states uses names 1..n.

    struct safra_node
    {
      unsigned name = 0;
      bool marked = false;
      state_set label;
      std::vector<safra_node> children; // oldest first
    };

    using tree_key = std::vector<std::uint32_t>;

    void encode(const safra_node& v, tree_key& out)
    {
      out.push_back(v.name);
      out.push_back(static_cast<std::uint32_t>(v.label.count()));
      for (state q : members(v.label))
        out.push_back(q);
      out.push_back(static_cast<std::uint32_t>(v.children.size()));
      for (const auto& c : v.children)
        encode(c, out);
    }

    struct key_hash
    {
      std::size_t operator()(const tree_key& k) const noexcept
      {
        return boost::hash_range(k.begin(), k.end());
      }
    };

    class safra_builder
    {
    public:
      explicit safra_builder(const buchi_automaton& a)
        : a_(a), n_(static_cast<unsigned>(a.size()))
      {
      }

      safra_node initial() const
      {
        safra_node root;
        root.name = 1;
        root.label = state_set(n_);
        root.label.set(a_.initial());
        return root;
      }

      /// Priority of every step that does not remove or mark a node.
      unsigned quiet_priority() const { return 2 * n_ + 1; }

      // Returns the priority of the step, or nothing when the successor
      // tree is empty. Let e be the least name removed and f the least
      // name marked: the priority is 2f if f < e and 2e - 1 otherwise.
      std::optional<unsigned> step(const safra_node& from, symbol s,
                                   safra_node& to) const
      {
        to = from;
        unmark(to);
        unsigned next = n_ + 1;
        spawn(to, next);
        std::vector<unsigned> before;
        names(to, before);
        advance(to, s);
        merge_horizontally(to, to.label);
        if (!to.label.any())
          return std::nullopt;
        prune_empty(to);
        collapse(to);
        std::vector<unsigned> after;
        names(to, after);
        std::sort(after.begin(), after.end());
        unsigned e = n_ + 1, f = n_ + 1;
        for (unsigned nm : before)
          if (nm <= n_ && !std::binary_search(after.begin(), after.end(), nm))
            e = std::min(e, nm);
        std::vector<unsigned> marks;
        marked_names(to, marks);
        for (unsigned nm : marks)
          f = std::min(f, nm);
        std::map<unsigned, unsigned> rename;
        for (unsigned nm : after)
          rename.emplace(nm, static_cast<unsigned>(rename.size() + 1));
        relabel(to, rename);
        check(to);
        return f < e ? 2 * f : 2 * e - 1;
      }

    private:
      static void names(const safra_node& v, std::vector<unsigned>& out)
      {
        out.push_back(v.name);
        for (const auto& c : v.children)
          names(c, out);
      }

      static void marked_names(const safra_node& v, std::vector<unsigned>& out)
      {
        if (v.marked)
          out.push_back(v.name);
        for (const auto& c : v.children)
          marked_names(c, out);
      }

      static void unmark(safra_node& v)
      {
        v.marked = false;
        for (auto& c : v.children)
          unmark(c);
      }

      static void relabel(safra_node& v,
                          const std::map<unsigned, unsigned>& rename)
      {
        v.name = rename.at(v.name);
        for (auto& c : v.children)
          relabel(c, rename);
      }

      // Every node whose label meets the final states gets a new youngest
      // child labelled with that intersection.
      void spawn(safra_node& v, unsigned& next) const
      {
        for (auto& c : v.children)
          spawn(c, next);
        auto fin = v.label & a_.finals();
        if (!fin.any())
          return;
        safra_node child;
        child.name = next++;
        child.label = std::move(fin);
        v.children.push_back(std::move(child));
      }

      void advance(safra_node& v, symbol s) const
      {
        state_set next(n_);
        for (state q : members(v.label))
          for (state r : a_.successors(q, s))
            next.set(r);
        v.label = std::move(next);
        for (auto& c : v.children)
          advance(c, s);
      }

      // A state kept by an older sibling is removed from younger ones.
      static void merge_horizontally(safra_node& v, const state_set& allowed)
      {
        v.label &= allowed;
        state_set rest = v.label;
        for (auto& c : v.children)
          {
            merge_horizontally(c, rest);
            rest -= c.label;
          }
      }

      static void prune_empty(safra_node& v)
      {
        std::erase_if(v.children,
                      [](const safra_node& c) { return !c.label.any(); });
        for (auto& c : v.children)
          prune_empty(c);
      }

      static void collapse(safra_node& v)
      {
        if (v.children.empty())
          return;
        state_set below(v.label.size());
        for (const auto& c : v.children)
          below |= c.label;
        if (below == v.label)
          {
            v.children.clear();
            v.marked = true;
            return;
          }
        for (auto& c : v.children)
          collapse(c);
      }

      // Children are pairwise disjoint and their union is a proper subset
      // of the parent label.
      static void check(const safra_node& v)
      {
        if (v.children.empty())
          return;
        state_set below(v.label.size());
        for (const auto& c : v.children)
          {
            if (!c.label.any() || below.intersects(c.label)
                || !c.label.is_subset_of(v.label))
              throw construction_error("Safra tree invariant violated");
            below |= c.label;
            check(c);
          }
        if (below == v.label)
          throw construction_error("Safra tree invariant violated");
      }

      const buchi_automaton& a_;
      unsigned n_;
    };

    muller_automaton determinize_deterministic(const buchi_automaton& a)
    {
      const auto missing = static_cast<state>(-1);
      std::vector<std::vector<state>> delta(a.size());
      std::vector<unsigned> prio(a.size());
      for (state q = 0; q < a.size(); ++q)
        {
          for (symbol s = 0; s < a.alphabet().size(); ++s)
            {
              auto succ = a.successors(q, s);
              delta[q].push_back(succ.empty() ? missing : succ.front());
            }
          // Büchi: a final state decides. Co-Büchi: a final state rejects.
          if (a.is_buchi())
            prio[q] = a.is_final(q) ? 0 : 1;
          else
            prio[q] = a.is_final(q) ? 1 : 2;
        }
      const bool sink = std::any_of(delta.begin(), delta.end(), [&](auto& r) {
        return std::find(r.begin(), r.end(), missing) != r.end();
      });
      if (sink)
        {
          const auto id = static_cast<state>(delta.size());
          for (auto& row : delta)
            std::replace(row.begin(), row.end(), missing, id);
          delta.emplace_back(a.alphabet().size(), id);
          prio.push_back(1);
        }
      return muller_automaton::with_priorities(a.alphabet(), std::move(delta),
                                               a.initial(), std::move(prio));
    }
  }

  muller_automaton determinize(const buchi_automaton& a, const limits& lim)
  {
    if (a.is_deterministic())
      return determinize_deterministic(a);
    if (a.is_cobuchi())
      return determinize(as_buchi(a), lim);

    // A state is a tree together with the priority of the step into it.
    safra_builder builder(a);
    std::unordered_map<tree_key, state, key_hash> index;
    std::vector<std::pair<safra_node, unsigned>> states;
    std::vector<std::vector<state>> delta;
    constexpr state no_state = static_cast<state>(-1);

    auto intern = [&](const safra_node& t, unsigned c) {
      tree_key k;
      encode(t, k);
      k.push_back(c);
      auto [it, fresh] = index.emplace(std::move(k),
                                       static_cast<state>(states.size()));
      if (fresh)
        {
          if (states.size() >= lim.max_states)
            throw capacity_error("determinization exceeded "
                                 + std::to_string(lim.max_states)
                                 + " macro-states");
          states.emplace_back(t, c);
        }
      return it->second;
    };

    intern(builder.initial(), builder.quiet_priority());
    bool sink = false;
    for (std::size_t i = 0; i < states.size(); ++i)
      {
        std::vector<state> row;
        for (symbol s = 0; s < a.alphabet().size(); ++s)
          {
            safra_node next;
            if (auto c = builder.step(states[i].first, s, next))
              row.push_back(intern(next, *c));
            else
              {
                row.push_back(no_state);
                sink = true;
              }
          }
        delta.push_back(std::move(row));
      }

    std::vector<unsigned> prio;
    for (const auto& st : states)
      prio.push_back(st.second);
    if (sink)
      {
        const auto id = static_cast<state>(delta.size());
        for (auto& row : delta)
          std::replace(row.begin(), row.end(), no_state, id);
        delta.emplace_back(a.alphabet().size(), id);
        prio.push_back(1);
      }
    return muller_automaton::with_priorities(a.alphabet(), std::move(delta), 0,
                                             std::move(prio));
  }

  namespace
  {
    // A pair (R, X) with R a subset of X such that every loop S with
    // R <= S <= X is designated.
    struct interval
    {
      state_set low;
      state_set high;
    };

    // Greedy cover of the designated loops by intervals. An interval is
    // valid when no rejected loop lies between its bounds.
    std::vector<interval> interval_cover(const detail::adjacency& g,
                                         std::vector<state_set> designated,
                                         const std::vector<state_set>& rejected)
    {
      std::sort(designated.begin(), designated.end(),
                [](const state_set& a, const state_set& b) {
                  return a.count() > b.count();
                });
      auto valid = [&](const state_set& low, const state_set& high) {
        for (const auto& r : rejected)
          if (low.is_subset_of(r) && r.is_subset_of(high))
            return false;
        return true;
      };
      auto sccs = detail::strongly_connected(g);
      std::vector<interval> out;
      for (const auto& s : designated)
        {
          bool covered = false;
          for (const auto& iv : out)
            if (iv.low.is_subset_of(s) && s.is_subset_of(iv.high))
              {
                covered = true;
                break;
              }
          if (covered)
            continue;
          interval iv{s, s};
          for (detail::node x : sccs.members[sccs.component[s.find_first()]])
            {
              if (iv.high.test(x))
                continue;
              auto wider = iv.high;
              wider.set(x);
              if (valid(iv.low, wider))
                iv.high = std::move(wider);
            }
          for (state y : members(iv.low))
            {
              auto lower = iv.low;
              lower.reset(y);
              if (valid(lower, iv.high))
                iv.low = std::move(lower);
            }
          out.push_back(std::move(iv));
        }
      return out;
    }
  }

  namespace
  {
    // One copy per even priority p, restricted to priorities >= p, with the
    // states of priority p final.
    buchi_automaton parity_to_buchi(const muller_automaton& m)
    {
      const auto& sigma = m.alphabet();
      const auto& prio = m.priorities();
      std::set<unsigned> evens;
      for (unsigned p : prio)
        if (p % 2 == 0)
          evens.insert(p);
      const std::size_t n = m.size();
      auto t = make_successor_table(n * (evens.size() + 1), sigma.size());
      state_set fin(t.size());
      for (state q = 0; q < n; ++q)
        for (symbol s = 0; s < sigma.size(); ++s)
          add_edge(t, q, s, m.step(q, s));
      state offset = static_cast<state>(n);
      for (unsigned p : evens)
        {
          for (state q = 0; q < n; ++q)
            {
              if (prio[q] < p)
                continue;
              if (prio[q] == p)
                fin.set(offset + q);
              for (symbol s = 0; s < sigma.size(); ++s)
                {
                  state r = m.step(q, s);
                  if (prio[r] < p)
                    continue;
                  add_edge(t, offset + q, s, offset + r);
                  add_edge(t, q, s, offset + r);
                }
            }
          offset += static_cast<state>(n);
        }
      return trim(buchi_automaton(sigma, std::move(t), m.initial(),
                                  std::move(fin)),
                  true);
    }
  }

  buchi_automaton muller_to_buchi(const muller_automaton& m0)
  {
    const auto m = trim(m0);
    if (m.has_priorities())
      return parity_to_buchi(m);
    const auto& sigma = m.alphabet();
    detail::adjacency g(m.size());
    for (state q = 0; q < m.size(); ++q)
      {
        g[q] = m.transitions()[q];
        std::sort(g[q].begin(), g[q].end());
        g[q].erase(std::unique(g[q].begin(), g[q].end()), g[q].end());
      }
    std::vector<state_set> designated, rejected;
    for (auto& loop : reachable_loops(m))
      (m.designated(loop) ? designated : rejected).push_back(std::move(loop));
    const auto cover = interval_cover(g, std::move(designated), rejected);

    std::size_t n = m.size();
    for (const auto& iv : cover)
      n += iv.high.count() * std::max<std::size_t>(1, iv.low.count());
    auto t = make_successor_table(n, sigma.size());
    state_set fin(n);
    for (state q = 0; q < m.size(); ++q)
      for (symbol s = 0; s < sigma.size(); ++s)
        add_edge(t, q, s, m.step(q, s));

    auto offset = static_cast<state>(m.size());
    const auto none = static_cast<state>(-1);
    for (const auto& iv : cover)
      {
        auto xs = members(iv.high);
        auto rs = members(iv.low);
        const std::size_t k = std::max<std::size_t>(1, rs.size());
        std::vector<state> pos(m.size(), none);
        for (std::size_t i = 0; i < xs.size(); ++i)
          pos[xs[i]] = static_cast<state>(i);
        // Copy state (xs[i], j): inside X, waiting for rs[j].
        auto id = [&](std::size_t i, std::size_t j) {
          return static_cast<state>(offset + i * k + j);
        };
        for (std::size_t i = 0; i < xs.size(); ++i)
          {
            if (rs.empty())
              fin.set(id(i, 0));
            else if (xs[i] == rs[0])
              fin.set(id(i, 0));
            for (symbol s = 0; s < sigma.size(); ++s)
              {
                state r = m.step(xs[i], s);
                if (pos[r] == none)
                  continue;
                for (std::size_t j = 0; j < k; ++j)
                  {
                    std::size_t nj = j;
                    if (!rs.empty() && xs[i] == rs[j])
                      nj = (j + 1) % k;
                    add_edge(t, id(i, j), s, id(pos[r], nj));
                  }
              }
          }
        for (state q = 0; q < m.size(); ++q)
          for (symbol s = 0; s < sigma.size(); ++s)
            {
              state r = m.step(q, s);
              if (pos[r] != none)
                add_edge(t, q, s, id(pos[r], 0));
            }
        offset += static_cast<state>(xs.size() * k);
      }
    return trim(buchi_automaton(sigma, std::move(t), m.initial(),
                                std::move(fin)),
                true);
  }

  muller_automaton complement(const muller_automaton& m, const limits& lim)
  {
    if (m.has_priorities())
      {
        auto prio = m.priorities();
        for (auto& p : prio)
          ++p;
        return muller_automaton::with_priorities(m.alphabet(), m.transitions(),
                                                 m.initial(), std::move(prio));
      }
    std::vector<state_set> table;
    for (auto& loop : reachable_loops(m, lim.max_loops))
      if (!m.designated(loop))
        table.push_back(std::move(loop));
    return m.with_table(std::move(table));
  }

  namespace
  {
    // Every state final and every state on an accepting lasso: the language
    // is closed, a word is rejected once its subset becomes empty.
    buchi_automaton safety_complement(const buchi_automaton& a,
                                      const limits& lim)
    {
      const auto& sigma = a.alphabet();
      std::unordered_map<state_set, state> index;
      std::vector<state_set> subsets;
      auto intern = [&](state_set s) {
        auto [it, fresh] = index.emplace(s, static_cast<state>(subsets.size()));
        if (fresh)
          {
            if (subsets.size() >= lim.max_states)
              throw capacity_error("subset construction exceeded "
                                   + std::to_string(lim.max_states)
                                   + " states");
            subsets.push_back(std::move(s));
          }
        return it->second;
      };
      intern(make_state_set(a.size(), {a.initial()}));
      std::vector<std::vector<state>> rows;
      for (std::size_t i = 0; i < subsets.size(); ++i)
        {
          std::vector<state> row;
          for (symbol s = 0; s < sigma.size(); ++s)
            {
              state_set next(a.size());
              for (state q : members(subsets[i]))
                for (state r : a.successors(q, s))
                  next.set(r);
              row.push_back(intern(std::move(next)));
            }
          rows.push_back(std::move(row));
        }
      auto t = make_successor_table(subsets.size(), sigma.size());
      state_set fin(subsets.size());
      for (state i = 0; i < subsets.size(); ++i)
        {
          if (!subsets[i].any())
            fin.set(i);
          for (symbol s = 0; s < sigma.size(); ++s)
            add_edge(t, i, s, rows[i][s]);
        }
      return buchi_automaton(sigma, std::move(t), 0, std::move(fin));
    }
  }

  buchi_automaton cobuchi_complement(const buchi_automaton& a,
                                     const limits& lim)
  {
    if (!a.is_cobuchi())
      throw precondition_error("co-Büchi automaton expected");
    const auto& sigma = a.alphabet();
    if (a.is_deterministic() && a.is_complete())
      return buchi_automaton(sigma, a.transitions(), a.initial(), a.finals());
    // (S, O): S all current states, O those whose run avoided the finals
    // since the last time O ran empty. Final states are the resets.
    using key = std::pair<state_set, state_set>;
    struct key_hash
    {
      std::size_t operator()(const key& k) const noexcept
      {
        std::hash<state_set> h;
        return h(k.first) * 31 + h(k.second);
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
    const state_set good = ~a.finals();
    auto image = [&](const state_set& from, symbol s) {
      state_set next(a.size());
      for (state q : members(from))
        for (state r : a.successors(q, s))
          next.set(r);
      return next;
    };
    intern({make_state_set(a.size(), {a.initial()}), state_set(a.size())});
    std::vector<std::vector<state>> rows;
    for (std::size_t i = 0; i < keys.size(); ++i)
      {
        std::vector<state> row;
        for (symbol s = 0; s < sigma.size(); ++s)
          {
            state_set all = image(keys[i].first, s);
            state_set kept = keys[i].second.any() ? image(keys[i].second, s)
                                                  : all;
            kept &= good;
            row.push_back(intern({std::move(all), std::move(kept)}));
          }
        rows.push_back(std::move(row));
      }
    auto t = make_successor_table(keys.size(), sigma.size());
    state_set fin(keys.size());
    for (state i = 0; i < keys.size(); ++i)
      {
        if (!keys[i].second.any())
          fin.set(i);
        for (symbol s = 0; s < sigma.size(); ++s)
          add_edge(t, i, s, rows[i][s]);
      }
    return buchi_automaton(sigma, std::move(t), 0, std::move(fin));
  }

  buchi_automaton complement(const buchi_automaton& a, const limits& lim)
  {
    if (a.is_cobuchi())
      return cobuchi_complement(a, lim);
    if (a.is_deterministic())
      {
        // Complete, then read the same graph with co-Buchi acceptance.
        const auto sink = static_cast<state>(a.size());
        auto t = a.transitions();
        t.emplace_back(a.alphabet().size());
        for (auto& row : t)
          for (auto& v : row)
            if (v.empty())
              v.push_back(sink);
        auto fin = a.finals();
        fin.resize(a.size() + 1);
        return as_buchi(buchi_automaton(a.alphabet(), std::move(t),
                                        a.initial(), std::move(fin),
                                        acceptance_mode::cobuchi));
      }
    auto t = trim(a, true);
    if (t.finals().count() == t.size())
      return safety_complement(t, lim);
    return muller_to_buchi(complement(determinize(a, lim), lim));
  }

  bool included(const buchi_automaton& a, const buchi_automaton& b,
                const limits& lim)
  {
    require_same_alphabet(a.alphabet(), b.alphabet(), "inclusion");
    if (is_empty(a))
      return true;
    return is_empty(intersection(a, complement(b, lim)));
  }

  bool equivalent(const buchi_automaton& a, const buchi_automaton& b,
                  const limits& lim)
  {
    require_same_alphabet(a.alphabet(), b.alphabet(), "equivalence");
    return included(a, b, lim) && included(b, a, lim);
  }

  buchi_automaton complement_of(const acceptor& a, const limits& lim)
  {
    if (auto b = std::get_if<buchi_automaton>(&a))
      return complement(*b, lim);
    return muller_to_buchi(complement(std::get<muller_automaton>(a), lim));
  }

  bool included(const acceptor& a, const acceptor& b, const limits& lim)
  {
    require_same_alphabet(alphabet_of(a), alphabet_of(b), "inclusion");
    if (is_empty(a))
      return true;
    return is_empty(intersection(to_buchi(a), complement_of(b, lim)));
  }

  bool equivalent(const acceptor& a, const acceptor& b, const limits& lim)
  {
    return included(a, b, lim) && included(b, a, lim);
  }

  buchi_automaton to_buchi(const acceptor& a)
  {
    if (auto b = std::get_if<buchi_automaton>(&a))
      return as_buchi(*b);
    return muller_to_buchi(std::get<muller_automaton>(a));
  }

  muller_automaton to_muller(const acceptor& a, const limits& lim)
  {
    if (auto m = std::get_if<muller_automaton>(&a))
      return *m;
    return determinize(std::get<buchi_automaton>(a), lim);
  }
}
