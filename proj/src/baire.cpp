#include "obaire/baire.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include <boost/functional/hash.hpp>

#include "det_language.hpp"
#include "obaire/errors.hpp"
#include "obaire/topology.hpp"

namespace obaire
{
  using detail::det_language;

  namespace
  {
    muller_automaton structure_of(const buchi_automaton& d)
    {
      std::vector<std::vector<state>> delta(d.size());
      for (state q = 0; q < d.size(); ++q)
        for (symbol s = 0; s < d.alphabet().size(); ++s)
          delta[q].push_back(d.step(q, s));
      return muller_automaton(d.alphabet(), std::move(delta), d.initial(), {});
    }

    buchi_automaton cobuchi_on(const muller_automaton& m, state_set finals)
    {
      auto t = make_successor_table(m.size(), m.alphabet().size());
      for (state q = 0; q < m.size(); ++q)
        for (symbol s = 0; s < m.alphabet().size(); ++s)
          add_edge(t, q, s, m.step(q, s));
      return buchi_automaton(m.alphabet(), std::move(t), m.initial(),
                             std::move(finals), acceptance_mode::cobuchi);
    }

    // Complete deterministic co-Büchi automaton for a closed language: the
    // subset automaton of its safety form, the empty subset being the only
    // final state.
    buchi_automaton safety_dca(const buchi_automaton& closed,
                               const limits& lim)
    {
      const auto a = closure(closed);
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
      return buchi_automaton(sigma, std::move(t), 0, std::move(fin),
                             acceptance_mode::cobuchi);
    }

    std::optional<buchi_automaton> dca_form(const meager_component& c,
                                            const limits& lim)
    {
      if (auto p = std::get_if<closed_piece>(&c))
        return safety_dca(p->closed, lim);
      const auto& f = std::get<cobuchi_family>(c);
      if (f.prefix)
        return std::nullopt;
      return f.dca;
    }

    struct tuple_hash
    {
      std::size_t operator()(const std::vector<state>& v) const noexcept
      {
        return boost::hash_range(v.begin(), v.end());
      }
    };

    // Round-robin union of deterministic complete co-Büchi automata: the
    // last coordinate names the component being watched; it moves on
    // whenever that component visits a final state.
    buchi_automaton dca_union(const std::vector<buchi_automaton>& parts,
                              const alphabet& sigma, const limits& lim)
    {
      const std::size_t m = parts.size();
      if (m == 0)
        {
          auto t = make_successor_table(1, sigma.size());
          for (symbol s = 0; s < sigma.size(); ++s)
            add_edge(t, 0, s, 0);
          return buchi_automaton(sigma, std::move(t), 0,
                                 make_state_set(1, {0}),
                                 acceptance_mode::cobuchi);
        }
      if (m == 1)
        return parts.front();
      std::unordered_map<std::vector<state>, state, tuple_hash> index;
      std::vector<std::vector<state>> keys;
      auto intern = [&](std::vector<state> k) {
        auto [it, fresh] = index.emplace(k, static_cast<state>(keys.size()));
        if (fresh)
          {
            if (keys.size() >= lim.max_states)
              throw capacity_error("union product exceeded "
                                   + std::to_string(lim.max_states)
                                   + " states");
            keys.push_back(std::move(k));
          }
        return it->second;
      };
      std::vector<state> init;
      for (const auto& p : parts)
        init.push_back(p.initial());
      init.push_back(0);
      intern(std::move(init));
      std::vector<bool> bad;
      std::vector<std::vector<state>> rows;
      for (std::size_t i = 0; i < keys.size(); ++i)
        {
          const auto watched = keys[i][m];
          const bool hit = parts[watched].is_final(keys[i][watched]);
          bad.push_back(hit);
          std::vector<state> row;
          for (symbol s = 0; s < sigma.size(); ++s)
            {
              std::vector<state> next(m + 1);
              for (std::size_t j = 0; j < m; ++j)
                next[j] = parts[j].step(keys[i][j], s);
              next[m] = hit ? static_cast<state>((watched + 1) % m) : watched;
              row.push_back(intern(std::move(next)));
            }
          rows.push_back(std::move(row));
        }
      auto t = make_successor_table(keys.size(), sigma.size());
      state_set fin(keys.size());
      for (state i = 0; i < keys.size(); ++i)
        {
          if (bad[i])
            fin.set(i);
          for (symbol s = 0; s < sigma.size(); ++s)
            add_edge(t, i, s, rows[i][s]);
        }
      return buchi_automaton(sigma, std::move(t), 0, std::move(fin),
                             acceptance_mode::cobuchi);
    }

    // Product of deterministic Büchi automata, final when some coordinate
    // is final. Missing transitions drop the coordinate.
    buchi_automaton dba_union(const std::vector<buchi_automaton>& parts,
                              const alphabet& sigma, const limits& lim)
    {
      const auto none = static_cast<state>(-1);
      std::unordered_map<std::vector<state>, state, tuple_hash> index;
      std::vector<std::vector<state>> keys;
      auto intern = [&](std::vector<state> k) {
        auto [it, fresh] = index.emplace(k, static_cast<state>(keys.size()));
        if (fresh)
          {
            if (keys.size() >= lim.max_states)
              throw capacity_error("union product exceeded "
                                   + std::to_string(lim.max_states)
                                   + " states");
            keys.push_back(std::move(k));
          }
        return it->second;
      };
      std::vector<state> init;
      for (const auto& p : parts)
        init.push_back(p.initial());
      intern(std::move(init));
      std::vector<std::pair<state, std::pair<symbol, state>>> edges;
      std::vector<bool> fin_flag;
      for (std::size_t i = 0; i < keys.size(); ++i)
        {
          bool fin = false;
          for (std::size_t j = 0; j < parts.size(); ++j)
            fin |= keys[i][j] != none && parts[j].is_final(keys[i][j]);
          fin_flag.push_back(fin);
          for (symbol s = 0; s < sigma.size(); ++s)
            {
              std::vector<state> next(parts.size(), none);
              bool alive = false;
              for (std::size_t j = 0; j < parts.size(); ++j)
                {
                  if (keys[i][j] == none)
                    continue;
                  auto succ = parts[j].successors(keys[i][j], s);
                  if (succ.empty())
                    continue;
                  next[j] = succ.front();
                  alive = true;
                }
              if (alive)
                edges.push_back({static_cast<state>(i),
                                 {s, intern(std::move(next))}});
            }
        }
      auto t = make_successor_table(keys.size(), sigma.size());
      for (const auto& [from, e] : edges)
        add_edge(t, from, e.first, e.second);
      state_set fin(keys.size());
      for (state i = 0; i < keys.size(); ++i)
        if (fin_flag[i])
          fin.set(i);
      return buchi_automaton(sigma, std::move(t), 0, std::move(fin));
    }

    meager_union make_meager(std::vector<meager_component> comps,
                             const alphabet& sigma, const limits& lim)
    {
      std::vector<buchi_automaton> dcas;
      bool all = true;
      for (const auto& c : comps)
        {
          auto d = dca_form(c, lim);
          if (!d)
            {
              all = false;
              break;
            }
          dcas.push_back(std::move(*d));
        }
      if (all)
        return {dca_union(dcas, sigma, lim), std::move(comps)};
      std::vector<buchi_automaton> parts;
      for (const auto& c : comps)
        parts.push_back(component_automaton(c));
      return {union_of(parts, sigma), std::move(comps)};
    }

    // Complement as an acceptor that keeps determinism where there is some.
    acceptor complement_acceptor(const acceptor& a, const limits& lim)
    {
      if (auto m = std::get_if<muller_automaton>(&a))
        return complement(*m, lim);
      const auto& b = std::get<buchi_automaton>(a);
      if (b.is_cobuchi())
        return cobuchi_complement(b, lim);
      if (b.is_deterministic())
        {
          auto [m, marks] = detail::completed_structure(b);
          return cobuchi_on(m, std::move(marks));
        }
      return complement(determinize(b, lim), lim);
    }

    buchi_automaton complement_meager(const meager_union& c,
                                      const limits& lim)
    {
      const auto& a = c.automaton;
      if (a.is_cobuchi() || a.is_deterministic())
        return complement(a, lim);
      std::optional<buchi_automaton> acc;
      for (const auto& comp : c.certificate)
        {
          auto d = dca_form(comp, lim);
          auto k = d ? complement(*d, lim)
                     : complement(component_automaton(comp), lim);
          acc = acc ? intersection(*acc, k) : k;
        }
      if (!acc)
        return universal_automaton(a.alphabet());
      return *acc;
    }

    bool empty3(const buchi_automaton& x, const buchi_automaton& y,
                const buchi_automaton& z)
    {
      if (is_empty(x) || is_empty(y) || is_empty(z))
        return true;
      auto xy = trim(intersection(x, y), true);
      if (is_empty(xy))
        return true;
      return is_empty(intersection(xy, z));
    }

    void verify_with(const baire_decomposition& d, const det_language& src,
                     const limits& lim, unsigned levels)
    {
      const auto& sigma = alphabet_of(d.source);
      require_same_alphabet(sigma, d.open_part.alphabet(), "decomposition");
      require_same_alphabet(sigma, d.meager_part.automaton.alphabet(),
                            "decomposition");
      if (!classify(acceptor(d.open_part), lim).is_open)
        throw construction_error("open part is not open");
      for (const auto& comp : d.meager_part.certificate)
        {
          if (auto p = std::get_if<closed_piece>(&comp))
            {
              auto r = classify(acceptor(p->closed), lim);
              if (!r.is_closed)
                throw construction_error("closed piece is not closed");
              if (!is_empty(interior(acceptor(p->closed), lim)))
                throw construction_error("closed piece has interior");
              continue;
            }
          const auto& f = std::get<cobuchi_family>(comp);
          for (unsigned n = 0; n <= levels; ++n)
            {
              auto lvl = level_automaton(f, n);
              if (!classify(acceptor(lvl), lim).is_closed)
                throw construction_error("level set is not closed");
              if (!is_empty(interior(acceptor(lvl), lim)))
                throw construction_error("level set has interior");
            }
        }
      const auto not_c = complement_meager(d.meager_part, lim);
      const auto not_b = complement(d.open_part, lim);
      if (!empty3(src.language(), not_b, not_c))
        throw construction_error("source minus open part is not covered "
                                 "by the meager part");
      if (!empty3(d.open_part, src.complement_language(), not_c))
        throw construction_error("open part minus source is not covered "
                                 "by the meager part");
    }

    // Keeps only the inclusion-maximal sets.
    std::vector<state_set> maximal(std::vector<state_set> sets)
    {
      std::sort(sets.begin(), sets.end(),
                [](const state_set& a, const state_set& b) {
                  return a.count() > b.count()
                         || (a.count() == b.count() && a < b);
                });
      sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
      std::vector<state_set> out;
      for (auto& s : sets)
        if (std::none_of(out.begin(), out.end(), [&](const state_set& o) {
              return s.is_subset_of(o);
            }))
          out.push_back(std::move(s));
      return out;
    }

    // Co-Büchi form of a language in the second Borel level from below.
    buchi_automaton cobuchi_form(const det_language& d, const limits& lim)
    {
      if (d.acceptance() == det_language::kind::cobuchi)
        return cobuchi_on(d.structure(), d.marks());
      if (!d.accepted_core().intersects(d.rejected_core()))
        {
          // Acceptance depends only on the final SCC.
          state_set fin = d.accepted_core();
          fin.flip();
          return cobuchi_on(d.structure(), std::move(fin));
        }
      // Flip a deterministic Büchi automaton for the complement.
      auto dba = to_dba(acceptor(d.complement_structure()), lim);
      auto [m, marks] = detail::completed_structure(dba);
      return cobuchi_on(m, std::move(marks));
    }

    baire_decomposition open_case(const acceptor& a, const det_language& d)
    {
      buchi_automaton b = [&] {
        if (auto x = std::get_if<buchi_automaton>(&a); x && x->is_buchi())
          return *x;
        return detail::structure_dba(d.structure(),
                                     state_set(d.structure().size()),
                                     d.universal());
      }();
      return {a, std::move(b), make_meager({}, alphabet_of(a), {}), {"open"}};
    }

    baire_decomposition closed_case(const acceptor& a, const det_language& d,
                                    const limits& lim)
    {
      const auto& m = d.structure();
      auto b = detail::structure_dba(m, state_set(m.size()), d.universal());
      auto rest = detail::structure_safety(m, d.nonempty() - d.universal());
      std::vector<meager_component> comps;
      if (!is_empty(rest))
        comps.push_back(closed_piece{std::move(rest)});
      return {a, std::move(b), make_meager(std::move(comps), m.alphabet(), lim),
              {"closed"}};
    }

    // The decomposition algebra carried out on one deterministic structure.
    // An open part is the set of runs reaching a successor-closed set U; a
    // meager piece is the set of runs whose infinity set lies inside Y.
    baire_decomposition muller_case(const acceptor& a, const det_language& d,
                                    const limits& lim)
    {
      const auto& m = d.structure();
      const auto& g = d.graph();
      const auto& reach = d.reachable();
      const std::size_t n = m.size();
      auto coreach = [&](const state_set& s) {
        return detail::coreachable(g, s) & reach;
      };
      std::unordered_set<state_set> pieces;
      auto add_piece = [&](const state_set& y) {
        auto core = detail::cyclic_nodes(g, y & reach);
        if (core.any())
          pieces.insert(std::move(core));
      };

      // Per state q: A_q (q visited infinitely often) and its complement.
      std::vector<state_set> open_pos(n, state_set(n)), open_neg(n, state_set(n));
      const auto states = members(reach);
      for (state q : states)
        {
          auto live = coreach(make_state_set(n, {q}));
          auto dead = reach - live;
          auto not_q = live;
          not_q.reset(q);
          add_piece(not_q);                    // co-Büchi part of not A_q
          auto v = reach - coreach(dead);      // open part of A_q
          add_piece(reach - (dead | v));
          auto w = reach - coreach(v);         // open part of not A_q
          add_piece(reach - (v | w));
          open_pos[q] = std::move(v);
          open_neg[q] = std::move(w);
        }

      // One term per interval [R, X] of accepted loops: the complement of
      // the union of not A_q (q in R) and A_q (q outside X).
      state_set open(n);
      for (const auto& iv : d.accepted_intervals())
        {
          state_set u(n);
          for (state q : states)
            {
              if (iv.low.test(q))
                u |= open_neg[q];
              if (!iv.high.test(q))
                u |= open_pos[q];
            }
          auto t = reach - coreach(u);
          add_piece(reach - (u | t));
          open |= t;
        }

      auto b = detail::structure_dba(m, state_set(n), open);
      std::vector<meager_component> comps;
      for (auto& y : maximal({pieces.begin(), pieces.end()}))
        {
          y.flip();
          comps.push_back(cobuchi_family{cobuchi_on(m, std::move(y)), {}});
        }
      return {a, std::move(b), make_meager(std::move(comps), m.alphabet(), lim),
              {"muller", "per-state-sigma2", "complement", "union",
               "complement", "union"}};
    }

    baire_decomposition sigma2_unverified(const buchi_automaton& dd)
    {
      if (!dd.is_cobuchi() || !dd.is_deterministic() || !dd.is_complete())
        throw precondition_error("expected a deterministic complete co-Büchi "
                                 "automaton");
      const auto d = trim(dd);
      const auto m = structure_of(d);
      const auto g = detail::graph_of(m);
      const auto reach = reachable_states(m);
      const auto live = detail::coreachable(g, d.finals());
      const auto dead = reach - live;
      auto b = detail::structure_dba(m, state_set(m.size()), dead);

      std::vector<meager_component> comps;
      if ((reach & live).any())
        {
          // Dead states collapse into one final sink.
          const auto n = static_cast<state>(d.size());
          auto t = make_successor_table(n + 1, d.alphabet().size());
          for (state q = 0; q <= n; ++q)
            for (symbol s = 0; s < d.alphabet().size(); ++s)
              {
                state r = q == n ? n : d.step(q, s);
                add_edge(t, q, s, r < n && dead.test(r) ? n : r);
              }
          auto fin = d.finals();
          fin.resize(n + 1);
          fin.set(n);
          state init = dead.test(d.initial()) ? n : d.initial();
          auto c = trim(buchi_automaton(d.alphabet(), std::move(t), init,
                                        std::move(fin),
                                        acceptance_mode::cobuchi));
          comps.push_back(cobuchi_family{std::move(c), {}});
        }
      return {dd, std::move(b), make_meager(std::move(comps), d.alphabet(), {}),
              {"sigma2"}};
    }
  }

  buchi_automaton level_automaton(const cobuchi_family& f, unsigned n)
  {
    const auto& d = f.dca;
    if (!d.is_deterministic() || !d.is_complete())
      throw precondition_error("level sets need a deterministic complete "
                               "automaton");
    const auto& sigma = d.alphabet();
    const unsigned width = n + 1;
    auto id = [&](state q, unsigned c) {
      return static_cast<state>(q * width + c);
    };
    const std::size_t size = d.size() * width;
    auto t = make_successor_table(size, sigma.size());
    for (state q = 0; q < d.size(); ++q)
      for (unsigned c = 0; c < width; ++c)
        for (symbol s = 0; s < sigma.size(); ++s)
          {
            state r = d.step(q, s);
            unsigned nc = c + (d.is_final(r) ? 1 : 0);
            if (nc <= n)
              add_edge(t, id(q, c), s, id(r, nc));
          }
    state_set fin(size);
    fin.set();
    const unsigned c0 = d.is_final(d.initial()) ? 1 : 0;
    if (c0 > n)
      return empty_automaton(sigma);
    return trim(buchi_automaton(sigma, std::move(t), id(d.initial(), c0),
                                std::move(fin)));
  }

  buchi_automaton component_automaton(const meager_component& c)
  {
    if (auto p = std::get_if<closed_piece>(&c))
      return p->closed;
    const auto& f = std::get<cobuchi_family>(c);
    auto base = as_buchi(f.dca);
    if (f.prefix)
      return concat_left(*f.prefix, base);
    return base;
  }

  void verify_decomposition(const baire_decomposition& d, const limits& lim,
                            unsigned levels)
  {
    verify_with(d, det_language::of(d.source, lim), lim, levels);
  }

  baire_decomposition automatic_baire(const acceptor& a, const limits& lim)
  {
    const auto d = det_language::of(a, lim);
    baire_decomposition out = [&] {
      if (d.is_open())
        return open_case(a, d);
      if (d.is_closed())
        return closed_case(a, d, lim);
      if (d.is_sigma2())
        {
          auto r = sigma2_unverified(cobuchi_form(d, lim));
          r.source = a;
          return r;
        }
      return muller_case(a, d, lim);
    }();
    verify_with(out, d, lim, default_level_checks);
    return out;
  }

  baire_decomposition baire_sigma2(const buchi_automaton& d, const limits& lim)
  {
    auto out = sigma2_unverified(d);
    verify_decomposition(out, lim);
    return out;
  }

  baire_decomposition baire_complement(const baire_decomposition& d,
                                       const limits& lim)
  {
    const auto b = det_language::of(d.open_part, lim);
    const auto& m = b.structure();
    auto open = detail::structure_dba(m, state_set(m.size()),
                                      b.reachable() - b.nonempty());
    auto comps = d.meager_part.certificate;
    auto boundary = detail::structure_safety(m, b.nonempty() - b.universal());
    if (!is_empty(boundary))
      comps.push_back(closed_piece{std::move(boundary)});
    baire_decomposition out{complement_acceptor(d.source, lim),
                            std::move(open),
                            make_meager(std::move(comps), m.alphabet(), lim),
                            d.case_trace};
    out.case_trace.push_back("complement");
    verify_decomposition(out, lim);
    return out;
  }

  baire_decomposition baire_union(const std::vector<baire_decomposition>& ds,
                                  const limits& lim)
  {
    if (ds.empty())
      throw precondition_error("union of no decompositions");
    const auto& sigma = alphabet_of(ds.front().source);
    std::vector<buchi_automaton> sources, opens;
    std::vector<meager_component> comps;
    bool deterministic = true;
    for (const auto& d : ds)
      {
        require_same_alphabet(sigma, alphabet_of(d.source), "union");
        sources.push_back(to_buchi(d.source));
        opens.push_back(d.open_part);
        deterministic &= d.open_part.is_deterministic();
        comps.insert(comps.end(), d.meager_part.certificate.begin(),
                     d.meager_part.certificate.end());
      }
    auto open = deterministic ? dba_union(opens, sigma, lim)
                              : union_of(opens, sigma);
    std::vector<std::string> trace;
    for (const auto& d : ds)
      trace.insert(trace.end(), d.case_trace.begin(), d.case_trace.end());
    trace.push_back("union");
    baire_decomposition out{union_of(sources, sigma), std::move(open),
                            make_meager(std::move(comps), sigma, lim),
                            std::move(trace)};
    verify_decomposition(out, lim);
    return out;
  }

  meagerness meager_check(const acceptor& a, const limits& lim)
  {
    auto d = automatic_baire(a, lim);
    auto w = accepted_word(d.open_part);
    return {!w.has_value(), std::move(w)};
  }

  bool is_meager(const acceptor& a, const limits& lim)
  {
    return meager_check(a, lim).meager;
  }

  bool is_comeager(const acceptor& a, const limits& lim)
  {
    return is_meager(complement_acceptor(a, lim), lim);
  }
}
