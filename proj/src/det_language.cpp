#include "det_language.hpp"

#include <algorithm>
#include <set>

#include "obaire/errors.hpp"

namespace obaire::detail
{
  adjacency graph_of(const muller_automaton& m)
  {
    adjacency g(m.size());
    for (state q = 0; q < m.size(); ++q)
      {
        g[q] = m.transitions()[q];
        std::sort(g[q].begin(), g[q].end());
        g[q].erase(std::unique(g[q].begin(), g[q].end()), g[q].end());
      }
    return g;
  }

  node_set cyclic_nodes(const adjacency& g, const node_set& alive)
  {
    node_set out(g.size());
    if (!alive.any())
      return out;
    auto sccs = strongly_connected(g, alive);
    for (std::size_t c = 0; c < sccs.members.size(); ++c)
      if (sccs.nontrivial[c])
        for (node v : sccs.members[c])
          out.set(v);
    return out;
  }

  namespace
  {
    // Union of the nontrivial SCCs (inside alive) that meet marks.
    node_set marked_components(const adjacency& g, const node_set& alive,
                               const node_set& marks)
    {
      node_set out(g.size());
      auto sccs = strongly_connected(g, alive);
      for (std::size_t c = 0; c < sccs.members.size(); ++c)
        {
          if (!sccs.nontrivial[c])
            continue;
          bool hit = std::any_of(sccs.members[c].begin(),
                                 sccs.members[c].end(),
                                 [&](node v) { return marks.test(v); });
          if (hit)
            for (node v : sccs.members[c])
              out.set(v);
        }
      return out;
    }

    // States on a loop whose least priority has the given parity.
    node_set parity_core(const adjacency& g, const node_set& alive,
                         const std::vector<unsigned>& prio, unsigned parity)
    {
      node_set out(g.size());
      std::set<unsigned> ps;
      for (auto v = alive.find_first(); v != node_set::npos;
           v = alive.find_next(v))
        if (prio[v] % 2 == parity)
          ps.insert(prio[v]);
      for (unsigned p : ps)
        {
          node_set within(g.size()), marks(g.size());
          for (auto v = alive.find_first(); v != node_set::npos;
               v = alive.find_next(v))
            {
              within[v] = prio[v] >= p;
              marks[v] = prio[v] == p;
            }
          out |= marked_components(g, within, marks);
        }
      return out;
    }

    // Some loop of least priority with parity \a outer contains a loop of
    // the other parity. Such loops sit in an SCC of the states of priority
    // at least p that contains a state of priority p.
    bool nested_loops(const adjacency& g, const node_set& alive,
                      const std::vector<unsigned>& prio, unsigned outer)
    {
      std::set<unsigned> ps;
      for (auto v = alive.find_first(); v != node_set::npos;
           v = alive.find_next(v))
        if (prio[v] % 2 == outer)
          ps.insert(prio[v]);
      for (unsigned p : ps)
        {
          node_set within(g.size());
          for (auto v = alive.find_first(); v != node_set::npos;
               v = alive.find_next(v))
            within[v] = prio[v] >= p;
          auto sccs = strongly_connected(g, within);
          for (std::size_t c = 0; c < sccs.members.size(); ++c)
            {
              if (!sccs.nontrivial[c])
                continue;
              node_set comp(g.size());
              bool top = false;
              for (node v : sccs.members[c])
                {
                  comp.set(v);
                  top |= prio[v] == p;
                }
              if (top && parity_core(g, comp, prio, 1 - outer).any())
                return true;
            }
        }
      return false;
    }

    successor_table table_of(const muller_automaton& m)
    {
      auto t = make_successor_table(m.size(), m.alphabet().size());
      for (state q = 0; q < m.size(); ++q)
        for (symbol s = 0; s < m.alphabet().size(); ++s)
          add_edge(t, q, s, m.step(q, s));
      return t;
    }
  }

  std::pair<muller_automaton, state_set>
  completed_structure(const buchi_automaton& a)
  {
    const auto missing = static_cast<state>(-1);
    std::vector<std::vector<state>> delta(a.size());
    for (state q = 0; q < a.size(); ++q)
      for (symbol s = 0; s < a.alphabet().size(); ++s)
        {
          auto succ = a.successors(q, s);
          delta[q].push_back(succ.empty() ? missing : succ.front());
        }
    auto m = muller_automaton::complete(a.alphabet(), std::move(delta),
                                        missing, a.initial(), {});
    auto marks = a.finals();
    marks.resize(m.size());
    return {std::move(m), std::move(marks)};
  }

  det_language det_language::of(const acceptor& a, const limits& lim)
  {
    if (auto m = std::get_if<muller_automaton>(&a))
      return det_language(*m, kind::muller, state_set(m->size()),
                          std::nullopt, lim.max_loops);
    const auto& b = std::get<buchi_automaton>(a);
    if (b.is_cobuchi() && !(b.is_deterministic() && b.is_complete()))
      {
        // Same structure as the deterministic complement, dual acceptance.
        auto [m, marks] = completed_structure(cobuchi_complement(b, lim));
        return det_language(std::move(m), kind::cobuchi, std::move(marks), b,
                            lim.max_loops);
      }
    if (b.is_cobuchi())
      {
        std::vector<std::vector<state>> delta(b.size());
        for (state q = 0; q < b.size(); ++q)
          for (symbol s = 0; s < b.alphabet().size(); ++s)
            delta[q].push_back(b.step(q, s));
        muller_automaton m(b.alphabet(), std::move(delta), b.initial(), {});
        return det_language(std::move(m), kind::cobuchi, b.finals(), b,
                            lim.max_loops);
      }
    if (b.is_deterministic())
      {
        auto [m, marks] = completed_structure(b);
        return det_language(std::move(m), kind::buchi, std::move(marks), b,
                            lim.max_loops);
      }
    auto m = determinize(b, lim);
    return det_language(std::move(m), kind::muller, state_set(m.size()), b,
                        lim.max_loops);
  }

  det_language::det_language(muller_automaton m, kind k, state_set marks,
                             std::optional<buchi_automaton> source,
                             std::size_t max_loops)
    : m_(std::move(m)), kind_(k), marks_(std::move(marks)),
      source_(std::move(source)), max_loops_(max_loops)
  {
    g_ = graph_of(m_);
    reach_ = reachable_states(m_);
    const std::size_t n = m_.size();
    acc_core_ = rej_core_ = state_set(n);
    switch (kind_)
      {
      case kind::buchi:
        acc_core_ = marked_components(g_, reach_, marks_);
        rej_core_ = cyclic_nodes(g_, reach_ - marks_);
        break;
      case kind::cobuchi:
        acc_core_ = cyclic_nodes(g_, reach_ - marks_);
        rej_core_ = marked_components(g_, reach_, marks_);
        break;
      case kind::muller:
        if (m_.has_priorities())
          {
            acc_core_ = parity_core(g_, reach_, m_.priorities(), 0);
            rej_core_ = parity_core(g_, reach_, m_.priorities(), 1);
            break;
          }
        loops_ = reachable_loops(m_, max_loops_);
        for (const auto& l : loops_)
          {
            bool acc = m_.designated(l);
            accepted_.push_back(acc);
            (acc ? acc_core_ : rej_core_) |= l;
          }
        break;
      }
    nonempty_ = coreachable(g_, acc_core_) & reach_;
    universal_ = reach_ - coreachable(g_, rej_core_);
  }

  bool det_language::accepts_loop(const state_set& s) const
  {
    switch (kind_)
      {
      case kind::buchi:
        return s.intersects(marks_);
      case kind::cobuchi:
        return !s.intersects(marks_);
      case kind::muller:
        break;
      }
    return m_.designated(s);
  }

  // No accepted loop is contained in a rejected loop (Muller kind).
  bool det_language::no_accepted_below_rejected() const
  {
    for (std::size_t i = 0; i < loops_.size(); ++i)
      {
        if (!accepted_[i])
          continue;
        for (std::size_t j = 0; j < loops_.size(); ++j)
          if (!accepted_[j] && loops_[i].is_subset_of(loops_[j]))
            return false;
      }
    return true;
  }

  bool det_language::is_pi2() const
  {
    switch (kind_)
      {
      case kind::buchi:
        return true;
      case kind::cobuchi:
        return !acc_core_.intersects(rej_core_);
      case kind::muller:
        break;
      }
    if (m_.has_priorities())
      return !nested_loops(g_, reach_, m_.priorities(), 1);
    return no_accepted_below_rejected();
  }

  bool det_language::is_sigma2() const
  {
    switch (kind_)
      {
      case kind::buchi:
        return !acc_core_.intersects(rej_core_);
      case kind::cobuchi:
        return true;
      case kind::muller:
        break;
      }
    if (m_.has_priorities())
      return !nested_loops(g_, reach_, m_.priorities(), 0);
    for (std::size_t i = 0; i < loops_.size(); ++i)
      {
        if (accepted_[i])
          continue;
        for (std::size_t j = 0; j < loops_.size(); ++j)
          if (accepted_[j] && loops_[i].is_subset_of(loops_[j]))
            return false;
      }
    return true;
  }

  buchi_automaton det_language::language() const
  {
    switch (kind_)
      {
      case kind::buchi:
        return *source_;
      case kind::cobuchi:
        return as_buchi(*source_);
      case kind::muller:
        break;
      }
    if (source_)
      return *source_;
    return muller_to_buchi(m_);
  }

  buchi_automaton det_language::complement_language() const
  {
    switch (kind_)
      {
      case kind::buchi:
        return as_buchi(buchi_automaton(m_.alphabet(), table_of(m_),
                                        m_.initial(), marks_,
                                        acceptance_mode::cobuchi));
      case kind::cobuchi:
        return buchi_automaton(m_.alphabet(), table_of(m_), m_.initial(),
                               marks_);
      case kind::muller:
        break;
      }
    return muller_to_buchi(complement_structure());
  }

  muller_automaton det_language::complement_structure() const
  {
    std::vector<unsigned> prio(m_.size());
    switch (kind_)
      {
      case kind::buchi:
        for (state q = 0; q < m_.size(); ++q)
          prio[q] = marks_.test(q) ? 1 : 2;
        return muller_automaton::with_priorities(m_.alphabet(),
                                                 m_.transitions(),
                                                 m_.initial(), std::move(prio));
      case kind::cobuchi:
        for (state q = 0; q < m_.size(); ++q)
          prio[q] = marks_.test(q) ? 0 : 1;
        return muller_automaton::with_priorities(m_.alphabet(),
                                                 m_.transitions(),
                                                 m_.initial(), std::move(prio));
      case kind::muller:
        break;
      }
    if (m_.has_priorities())
      return complement(m_);
    std::vector<state_set> rejected;
    for (std::size_t i = 0; i < loops_.size(); ++i)
      if (!accepted_[i])
        rejected.push_back(loops_[i]);
    return m_.with_table(std::move(rejected));
  }

  std::vector<loop_interval> det_language::accepted_intervals() const
  {
    std::vector<loop_interval> out;
    const std::size_t n = m_.size();
    switch (kind_)
      {
      case kind::buchi:
        for (state q : members(marks_ & reach_))
          out.push_back({make_state_set(n, {q}), reach_});
        return out;
      case kind::cobuchi:
        out.push_back({state_set(n), reach_ - marks_});
        return out;
      case kind::muller:
        break;
      }
    if (m_.has_priorities())
      {
        const auto& prio = m_.priorities();
        for (state q : members(reach_))
          {
            if (prio[q] % 2 != 0)
              continue;
            state_set high(n);
            for (state r : members(reach_))
              high[r] = prio[r] >= prio[q];
            out.push_back({make_state_set(n, {q}), std::move(high)});
          }
        return out;
      }
    for (std::size_t i = 0; i < loops_.size(); ++i)
      if (accepted_[i])
        out.push_back({loops_[i], loops_[i]});
    return out;
  }

  buchi_automaton structure_dba(const muller_automaton& m,
                                const state_set& finals,
                                const state_set& sink)
  {
    const auto& sigma = m.alphabet();
    const auto none = static_cast<state>(-1);
    std::vector<state> id(m.size(), none);
    std::vector<state> order;
    state sink_id = none;
    auto visit = [&](state q) {
      if (sink.test(q))
        {
          if (sink_id == none)
            {
              sink_id = static_cast<state>(order.size());
              order.push_back(q);
            }
          return sink_id;
        }
      if (id[q] == none)
        {
          id[q] = static_cast<state>(order.size());
          order.push_back(q);
        }
      return id[q];
    };
    visit(m.initial());
    std::vector<std::vector<state>> rows;
    for (std::size_t i = 0; i < order.size(); ++i)
      {
        std::vector<state> row;
        for (symbol s = 0; s < sigma.size(); ++s)
          row.push_back(i == sink_id ? sink_id
                                     : visit(m.step(order[i], s)));
        rows.push_back(std::move(row));
      }
    auto t = make_successor_table(order.size(), sigma.size());
    state_set fin(order.size());
    for (state i = 0; i < order.size(); ++i)
      {
        if (i == sink_id || finals.test(order[i]))
          fin.set(i);
        for (symbol s = 0; s < sigma.size(); ++s)
          add_edge(t, i, s, rows[i][s]);
      }
    return buchi_automaton(sigma, std::move(t), 0, std::move(fin));
  }

  buchi_automaton structure_safety(const muller_automaton& m,
                                   const state_set& keep)
  {
    const auto& sigma = m.alphabet();
    if (!keep.test(m.initial()))
      return empty_automaton(sigma);
    const auto none = static_cast<state>(-1);
    std::vector<state> id(m.size(), none);
    std::vector<state> order{m.initial()};
    id[m.initial()] = 0;
    std::vector<std::pair<state, std::pair<symbol, state>>> edges;
    for (std::size_t i = 0; i < order.size(); ++i)
      for (symbol s = 0; s < sigma.size(); ++s)
        {
          state r = m.step(order[i], s);
          if (!keep.test(r))
            continue;
          if (id[r] == none)
            {
              id[r] = static_cast<state>(order.size());
              order.push_back(r);
            }
          edges.push_back({static_cast<state>(i), {s, id[r]}});
        }
    auto t = make_successor_table(order.size(), sigma.size());
    for (const auto& [from, e] : edges)
      add_edge(t, from, e.first, e.second);
    state_set fin(order.size());
    fin.set();
    return buchi_automaton(sigma, std::move(t), 0, std::move(fin));
  }
}
