#include "obaire/core.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <tuple>
#include <unordered_map>
#include <unordered_set>

#include "graph.hpp"
#include "obaire/errors.hpp"

namespace obaire
{
  using detail::adjacency;
  using detail::node;

  namespace
  {
    adjacency graph_of(const marked_automaton& a)
    {
      adjacency g(a.size());
      for (state q = 0; q < a.size(); ++q)
        {
          for (const auto& v : a.transitions()[q])
            g[q].insert(g[q].end(), v.begin(), v.end());
          std::sort(g[q].begin(), g[q].end());
          g[q].erase(std::unique(g[q].begin(), g[q].end()), g[q].end());
        }
      return g;
    }

    adjacency graph_of(const muller_automaton& a)
    {
      adjacency g(a.size());
      for (state q = 0; q < a.size(); ++q)
        {
          g[q] = a.transitions()[q];
          std::sort(g[q].begin(), g[q].end());
          g[q].erase(std::unique(g[q].begin(), g[q].end()), g[q].end());
        }
      return g;
    }

    void check_word(const alphabet& sigma, const up_word& x)
    {
      for (symbol s : x.prefix())
        if (s >= sigma.size())
          throw input_error("word symbol outside the automaton alphabet");
      for (symbol s : x.period())
        if (s >= sigma.size())
          throw input_error("word symbol outside the automaton alphabet");
    }

    // Lasso positions 0..|u|+|v|-1; the successor of the last one is |u|.
    struct lasso_shape
    {
      std::size_t prefix;
      std::size_t length;

      explicit lasso_shape(const up_word& x)
        : prefix(x.prefix().size()),
          length(x.prefix().size() + x.period().size())
      {
      }
      std::size_t next(std::size_t pos) const
      {
        return pos + 1 == length ? prefix : pos + 1;
      }
    };

    // Follows the unique run of a deterministic automaton on x and returns
    // the states on its cycle.
    template <typename Step>
    state_set deterministic_cycle(std::size_t n, state init,
                                  const up_word& x, Step step)
    {
      lasso_shape shape(x);
      std::map<std::pair<state, std::size_t>, std::size_t> seen;
      std::vector<state> trace;
      state q = init;
      std::size_t pos = 0;
      for (;;)
        {
          auto [it, fresh] = seen.emplace(std::make_pair(q, pos), trace.size());
          if (!fresh)
            {
              state_set cyc(n);
              for (std::size_t i = it->second; i < trace.size(); ++i)
                cyc.set(trace[i]);
              return cyc;
            }
          trace.push_back(q);
          q = step(q, x.at(pos));
          pos = shape.next(pos);
        }
    }

    word symbols_along(const marked_automaton& a,
                       const std::vector<node>& path)
    {
      word out;
      for (std::size_t i = 0; i + 1 < path.size(); ++i)
        {
          for (symbol s = 0; s < a.alphabet().size(); ++s)
            {
              auto succ = a.successors(path[i], s);
              if (std::binary_search(succ.begin(), succ.end(), path[i + 1]))
                {
                  out.push_back(s);
                  break;
                }
            }
        }
      return out;
    }

    word symbols_along(const muller_automaton& a,
                       const std::vector<node>& path)
    {
      word out;
      for (std::size_t i = 0; i + 1 < path.size(); ++i)
        for (symbol s = 0; s < a.alphabet().size(); ++s)
          if (a.step(path[i], s) == path[i + 1])
            {
              out.push_back(s);
              break;
            }
      return out;
    }

    template <typename Automaton>
    up_word lasso_through(const Automaton& a, const adjacency& g,
                          node entry, const std::vector<node>& must,
                          const detail::node_set& within)
    {
      auto stem = *detail::shortest_path(g, {a.initial()}, entry);
      auto cycle = detail::covering_cycle(g, entry, must, within);
      cycle.push_back(entry);
      return up_word(symbols_along(a, stem), symbols_along(a, cycle));
    }
  }

  const alphabet& alphabet_of(const acceptor& a)
  {
    return std::visit([](const auto& x) -> const alphabet& {
      return x.alphabet();
    }, a);
  }

  bool member(const buchi_automaton& a, const up_word& x)
  {
    check_word(a.alphabet(), x);
    if (a.is_cobuchi() && !(a.is_deterministic() && a.is_complete()))
      return member(as_buchi(a), x);
    if (a.is_cobuchi())
      {
        auto cyc = deterministic_cycle(a.size(), a.initial(), x,
                                       [&](state q, symbol s) {
                                         return a.step(q, s);
                                       });
        return !cyc.intersects(a.finals());
      }
    lasso_shape shape(x);
    const std::size_t len = shape.length;
    auto id = [&](state q, std::size_t pos) {
      return static_cast<node>(q * len + pos);
    };
    adjacency g(a.size() * len);
    for (state q = 0; q < a.size(); ++q)
      for (std::size_t pos = 0; pos < len; ++pos)
        for (state r : a.successors(q, x.at(pos)))
          g[id(q, pos)].push_back(id(r, shape.next(pos)));
    auto reach = detail::reachable_from(g, {id(a.initial(), 0)});
    auto sccs = detail::strongly_connected(g, reach);
    for (std::size_t c = 0; c < sccs.members.size(); ++c)
      {
        if (!sccs.nontrivial[c])
          continue;
        for (node v : sccs.members[c])
          if (a.is_final(static_cast<state>(v / len)))
            return true;
      }
    return false;
  }

  bool member(const muller_automaton& a, const up_word& x)
  {
    return a.designated(infinity_set(a, x));
  }

  bool member(const acceptor& a, const up_word& x)
  {
    return std::visit([&](const auto& m) { return member(m, x); }, a);
  }

  state_set infinity_set(const muller_automaton& a, const up_word& x)
  {
    check_word(a.alphabet(), x);
    return deterministic_cycle(a.size(), a.initial(), x,
                               [&](state q, symbol s) {
                                 return a.step(q, s);
                               });
  }

  std::optional<up_word> accepted_word(const buchi_automaton& a)
  {
    auto g = graph_of(a);
    auto reach = detail::reachable_from(g, {a.initial()});
    if (a.is_cobuchi())
      {
        auto alive = reach & ~a.finals();
        auto sccs = detail::strongly_connected(g, alive);
        for (std::size_t c = 0; c < sccs.members.size(); ++c)
          if (sccs.nontrivial[c])
            {
              detail::node_set within(a.size());
              for (node v : sccs.members[c])
                within.set(v);
              node entry = sccs.members[c].front();
              return lasso_through(a, g, entry, {entry}, within);
            }
        return std::nullopt;
      }
    auto sccs = detail::strongly_connected(g, reach);
    for (std::size_t c = 0; c < sccs.members.size(); ++c)
      {
        if (!sccs.nontrivial[c])
          continue;
        for (node v : sccs.members[c])
          if (a.is_final(v))
            {
              detail::node_set within(a.size());
              for (node w : sccs.members[c])
                within.set(w);
              return lasso_through(a, g, v, {v}, within);
            }
      }
    return std::nullopt;
  }

  std::optional<up_word> accepted_word(const muller_automaton& a)
  {
    auto g = graph_of(a);
    auto reach = reachable_states(a);
    if (a.has_priorities())
      {
        const auto& prio = a.priorities();
        std::set<unsigned> evens;
        for (state q : members(reach))
          if (prio[q] % 2 == 0)
            evens.insert(prio[q]);
        for (unsigned p : evens)
          {
            detail::node_set alive(a.size());
            for (state q : members(reach))
              if (prio[q] >= p)
                alive.set(q);
            auto sccs = detail::strongly_connected(g, alive);
            for (std::size_t c = 0; c < sccs.members.size(); ++c)
              {
                if (!sccs.nontrivial[c])
                  continue;
                detail::node_set within(a.size());
                for (node v : sccs.members[c])
                  within.set(v);
                for (node v : sccs.members[c])
                  if (prio[v] == p)
                    return lasso_through(a, g, v, {v}, within);
              }
          }
        return std::nullopt;
      }
    for (const auto& s : a.table())
      {
        if (!s.any() || !s.is_subset_of(reach) || !is_loop(a, s))
          continue;
        auto ms = members(s);
        return lasso_through(a, g, ms.front(), ms, s);
      }
    return std::nullopt;
  }

  bool is_empty(const buchi_automaton& a)
  {
    return !accepted_word(a).has_value();
  }

  bool is_empty(const muller_automaton& a)
  {
    if (a.has_priorities())
      return !accepted_word(a).has_value();
    auto reach = reachable_states(a);
    for (const auto& s : a.table())
      if (s.any() && s.is_subset_of(reach) && is_loop(a, s))
        return false;
    return true;
  }

  bool is_empty(const acceptor& a)
  {
    return std::visit([](const auto& m) { return is_empty(m); }, a);
  }

  buchi_automaton universal_automaton(const alphabet& sigma)
  {
    auto t = make_successor_table(1, sigma.size());
    for (symbol s = 0; s < sigma.size(); ++s)
      add_edge(t, 0, s, 0);
    return buchi_automaton(sigma, std::move(t), 0, make_state_set(1, {0}));
  }

  buchi_automaton empty_automaton(const alphabet& sigma)
  {
    return buchi_automaton(sigma, make_successor_table(1, sigma.size()), 0,
                           state_set(1));
  }

  buchi_automaton cylinder_automaton(const alphabet& sigma, const word& w)
  {
    const std::size_t n = w.size() + 1;
    auto t = make_successor_table(n, sigma.size());
    for (std::size_t i = 0; i < w.size(); ++i)
      add_edge(t, static_cast<state>(i), w[i], static_cast<state>(i + 1));
    for (symbol s = 0; s < sigma.size(); ++s)
      add_edge(t, static_cast<state>(w.size()), s,
               static_cast<state>(w.size()));
    state_set fin(n);
    fin.set(w.size());
    return buchi_automaton(sigma, std::move(t), 0, std::move(fin));
  }

  finite_automaton epsilon_language(const alphabet& sigma)
  {
    return finite_automaton(sigma, make_successor_table(1, sigma.size()), 0,
                            make_state_set(1, {0}));
  }

  finite_automaton empty_language(const alphabet& sigma)
  {
    return finite_automaton(sigma, make_successor_table(1, sigma.size()), 0,
                            state_set(1));
  }

  finite_automaton all_words(const alphabet& sigma)
  {
    auto t = make_successor_table(1, sigma.size());
    for (symbol s = 0; s < sigma.size(); ++s)
      add_edge(t, 0, s, 0);
    return finite_automaton(sigma, std::move(t), 0, make_state_set(1, {0}));
  }

  finite_automaton finite_language(const alphabet& sigma,
                                   const std::vector<word>& words)
  {
    // Prefix tree.
    std::vector<std::map<symbol, state>> children(1);
    std::vector<bool> accept(1, false);
    for (const auto& w : words)
      {
        state cur = 0;
        for (symbol s : w)
          {
            if (s >= sigma.size())
              throw input_error("word symbol outside alphabet");
            auto it = children[cur].find(s);
            if (it == children[cur].end())
              {
                auto fresh = static_cast<state>(children.size());
                children[cur][s] = fresh;
                children.emplace_back();
                accept.push_back(false);
                cur = fresh;
              }
            else
              cur = it->second;
          }
        accept[cur] = true;
      }
    auto t = make_successor_table(children.size(), sigma.size());
    state_set fin(children.size());
    for (state q = 0; q < children.size(); ++q)
      {
        for (auto [s, r] : children[q])
          add_edge(t, q, s, r);
        if (accept[q])
          fin.set(q);
      }
    return finite_automaton(sigma, std::move(t), 0, std::move(fin));
  }

  buchi_automaton as_buchi(const buchi_automaton& a)
  {
    if (a.is_buchi())
      return a;
    // Copy 0 simulates freely; copy 1 commits to never seeing a final
    // state again.
    const auto n = static_cast<state>(a.size());
    auto t = make_successor_table(2 * n, a.alphabet().size());
    state_set fin(2 * n);
    for (state q = 0; q < n; ++q)
      {
        if (!a.is_final(q))
          fin.set(n + q);
        for (symbol s = 0; s < a.alphabet().size(); ++s)
          for (state r : a.successors(q, s))
            {
              add_edge(t, q, s, r);
              if (!a.is_final(r))
                {
                  add_edge(t, q, s, n + r);
                  if (!a.is_final(q))
                    add_edge(t, n + q, s, n + r);
                }
            }
      }
    return trim(buchi_automaton(a.alphabet(), std::move(t), a.initial(),
                                std::move(fin)));
  }

  buchi_automaton union_of(const buchi_automaton& a0,
                           const buchi_automaton& b0)
  {
    require_same_alphabet(a0.alphabet(), b0.alphabet(), "union");
    return union_of(std::vector<buchi_automaton>{a0, b0}, a0.alphabet());
  }

  buchi_automaton union_of(const std::vector<buchi_automaton>& parts0,
                           const alphabet& sigma)
  {
    std::vector<buchi_automaton> parts;
    for (const auto& p : parts0)
      {
        require_same_alphabet(p.alphabet(), sigma, "union");
        auto b = trim(as_buchi(p), true);
        if (b.finals().any())
          parts.push_back(std::move(b));
      }
    if (parts.empty())
      return empty_automaton(sigma);
    if (parts.size() == 1)
      return parts.front();
    std::size_t n = 1;
    for (const auto& p : parts)
      n += p.size();
    auto t = make_successor_table(n, sigma.size());
    state_set fin(n);
    state offset = 1;
    for (const auto& p : parts)
      {
        for (state q = 0; q < p.size(); ++q)
          {
            if (p.is_final(q))
              fin.set(offset + q);
            for (symbol s = 0; s < sigma.size(); ++s)
              for (state r : p.successors(q, s))
                {
                  add_edge(t, offset + q, s, offset + r);
                  if (q == p.initial())
                    add_edge(t, 0, s, offset + r);
                }
          }
        offset += static_cast<state>(p.size());
      }
    return trim(buchi_automaton(sigma, std::move(t), 0, std::move(fin)));
  }

  buchi_automaton intersection(const buchi_automaton& a0,
                               const buchi_automaton& b0)
  {
    require_same_alphabet(a0.alphabet(), b0.alphabet(), "intersection");
    const auto a = trim(as_buchi(a0), true);
    const auto b = trim(as_buchi(b0), true);
    const auto& sigma = a.alphabet();
    if (!a.finals().any() || !b.finals().any())
      return empty_automaton(sigma);

    struct key_hash
    {
      std::size_t operator()(std::uint64_t k) const noexcept
      {
        return std::hash<std::uint64_t>()(k * 0x9E3779B97F4A7C15ULL);
      }
    };
    const std::uint64_t nb = b.size();
    auto key = [&](state p, state q, int flag) {
      return (static_cast<std::uint64_t>(p) * nb + q) * 2 + flag;
    };
    std::unordered_map<std::uint64_t, state, key_hash> index;
    std::vector<std::tuple<state, state, int>> todo_states;
    auto get = [&](state p, state q, int flag) {
      auto [it, fresh] = index.emplace(key(p, q, flag),
                                       static_cast<state>(todo_states.size()));
      if (fresh)
        todo_states.emplace_back(p, q, flag);
      return it->second;
    };
    get(a.initial(), b.initial(), 0);
    std::vector<std::vector<std::vector<state>>> succ;
    for (std::size_t i = 0; i < todo_states.size(); ++i)
      {
        auto [p, q, flag] = todo_states[i];
        int next_flag = flag;
        if (flag == 0 && a.is_final(p))
          next_flag = 1;
        else if (flag == 1 && b.is_final(q))
          next_flag = 0;
        std::vector<std::vector<state>> row(sigma.size());
        for (symbol s = 0; s < sigma.size(); ++s)
          for (state p2 : a.successors(p, s))
            for (state q2 : b.successors(q, s))
              row[s].push_back(get(p2, q2, next_flag));
        succ.push_back(std::move(row));
      }
    state_set fin(todo_states.size());
    for (std::size_t i = 0; i < todo_states.size(); ++i)
      {
        auto [p, q, flag] = todo_states[i];
        if (flag == 0 && a.is_final(p))
          fin.set(i);
      }
    return trim(buchi_automaton(sigma, std::move(succ), 0, std::move(fin)),
                true);
  }

  buchi_automaton concat_left(const finite_automaton& w,
                              const buchi_automaton& l0)
  {
    require_same_alphabet(w.alphabet(), l0.alphabet(), "concat_left");
    const auto l = as_buchi(l0);
    const auto& sigma = w.alphabet();
    const auto nw = static_cast<state>(w.size());
    const std::size_t n = w.size() + l.size();
    auto t = make_successor_table(n, sigma.size());
    state_set fin(n);
    for (state q = 0; q < w.size(); ++q)
      for (symbol s = 0; s < sigma.size(); ++s)
        {
          for (state r : w.successors(q, s))
            add_edge(t, q, s, r);
          // After a word of W ending in q, the omega part starts.
          if (w.is_final(q))
            for (state r : l.successors(l.initial(), s))
              add_edge(t, q, s, nw + r);
        }
    for (state q = 0; q < l.size(); ++q)
      {
        if (l.is_final(q))
          fin.set(nw + q);
        for (symbol s = 0; s < sigma.size(); ++s)
          for (state r : l.successors(q, s))
            add_edge(t, nw + q, s, nw + r);
      }
    return trim(buchi_automaton(sigma, std::move(t), w.initial(),
                                std::move(fin)),
                true);
  }

  namespace
  {
    template <typename Automaton, typename Make>
    auto restrict_to(const Automaton& a, const detail::node_set& keep,
                     Make make)
    {
      std::vector<state> rename(a.size(), detail::npos);
      state next = 0;
      for (state q = 0; q < a.size(); ++q)
        if (keep.test(q))
          rename[q] = next++;
      auto t = make_successor_table(next, a.alphabet().size());
      state_set fin(next);
      for (state q = 0; q < a.size(); ++q)
        {
          if (rename[q] == detail::npos)
            continue;
          if (a.is_final(q))
            fin.set(rename[q]);
          for (symbol s = 0; s < a.alphabet().size(); ++s)
            for (state r : a.successors(q, s))
              if (rename[r] != detail::npos)
                add_edge(t, rename[q], s, rename[r]);
        }
      return make(std::move(t), rename[a.initial()], std::move(fin));
    }
  }

  buchi_automaton trim(const buchi_automaton& a, bool coreachable)
  {
    auto g = graph_of(a);
    auto keep = detail::reachable_from(g, {a.initial()});
    if (coreachable && a.is_buchi())
      {
        auto sccs = detail::strongly_connected(g, keep);
        detail::node_set good(a.size());
        for (std::size_t c = 0; c < sccs.members.size(); ++c)
          if (sccs.nontrivial[c])
            for (node v : sccs.members[c])
              if (a.is_final(v))
                good.set(v);
        keep &= detail::coreachable(g, good);
        if (!keep.test(a.initial()))
          return empty_automaton(a.alphabet());
      }
    if (keep.count() == a.size())
      return a;
    return restrict_to(a, keep, [&](successor_table t, state init,
                                    state_set fin) {
      return buchi_automaton(a.alphabet(), std::move(t), init,
                             std::move(fin), a.mode());
    });
  }

  finite_automaton trim(const finite_automaton& a)
  {
    auto g = graph_of(a);
    auto keep = detail::reachable_from(g, {a.initial()});
    keep &= detail::coreachable(g, a.finals());
    if (!keep.test(a.initial()))
      return empty_language(a.alphabet());
    return restrict_to(a, keep, [&](successor_table t, state init,
                                    state_set fin) {
      return finite_automaton(a.alphabet(), std::move(t), init,
                              std::move(fin));
    });
  }

  muller_automaton trim(const muller_automaton& a)
  {
    auto keep = reachable_states(a);
    if (keep.count() == a.size())
      return a;
    std::vector<state> rename(a.size(), detail::npos);
    state next = 0;
    for (state q = 0; q < a.size(); ++q)
      if (keep.test(q))
        rename[q] = next++;
    std::vector<std::vector<state>> delta;
    for (state q = 0; q < a.size(); ++q)
      if (keep.test(q))
        {
          std::vector<state> row;
          for (state r : a.transitions()[q])
            row.push_back(rename[r]);
          delta.push_back(std::move(row));
        }
    if (a.has_priorities())
      {
        std::vector<unsigned> prio;
        for (state q : members(keep))
          prio.push_back(a.priorities()[q]);
        return muller_automaton::with_priorities(a.alphabet(), std::move(delta),
                                                 rename[a.initial()],
                                                 std::move(prio));
      }
    std::vector<state_set> table;
    for (const auto& s : a.table())
      {
        if (!s.is_subset_of(keep))
          continue;
        state_set t(next);
        for (state q : members(s))
          t.set(rename[q]);
        table.push_back(std::move(t));
      }
    return muller_automaton(a.alphabet(), std::move(delta),
                            rename[a.initial()], std::move(table));
  }

  buchi_automaton as_deterministic_buchi(const muller_automaton& m,
                                         const state_set& finals)
  {
    auto t = make_successor_table(m.size(), m.alphabet().size());
    for (state q = 0; q < m.size(); ++q)
      for (symbol s = 0; s < m.alphabet().size(); ++s)
        add_edge(t, q, s, m.step(q, s));
    return buchi_automaton(m.alphabet(), std::move(t), m.initial(), finals);
  }

  state_set reachable_states(const muller_automaton& a)
  {
    return detail::reachable_from(graph_of(a), {a.initial()});
  }

  bool is_loop(const muller_automaton& a, const state_set& s)
  {
    if (!s.any())
      return false;
    auto sccs = detail::strongly_connected(graph_of(a), s);
    return sccs.members.size() == 1 && sccs.nontrivial[0];
  }

  std::vector<state_set> designated_loops(const muller_automaton& a,
                                          std::size_t cap)
  {
    if (!a.has_priorities())
      return a.table();
    auto loops = reachable_loops(a, cap);
    std::erase_if(loops, [&](const state_set& l) { return !a.designated(l); });
    return loops;
  }

  std::vector<state_set> reachable_loops(const muller_automaton& a,
                                         std::size_t cap)
  {
    auto g = graph_of(a);
    std::vector<state_set> out;
    detail::for_each_loop(g, reachable_states(a), state_set(a.size()),
                          [&](const state_set& loop) {
                            out.push_back(loop);
                            if (out.size() > cap)
                              throw capacity_error(
                                "loop enumeration exceeded "
                                + std::to_string(cap) + " loops");
                            return true;
                          });
    std::sort(out.begin(), out.end());
    return out;
  }
}
