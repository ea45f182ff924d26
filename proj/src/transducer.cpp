#include "obaire/transducer.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "det_language.hpp"
#include "graph.hpp"
#include "obaire/errors.hpp"
#include "obaire/topology.hpp"

namespace obaire
{
  using detail::adjacency;
  using detail::node;

  two_tape_transducer::two_tape_transducer(alphabet input, alphabet output,
                                           std::size_t states, state initial,
                                           state_set finals,
                                           std::vector<transducer_edge> edges,
                                           bool synchronous)
    : in_(std::move(input)), out_(std::move(output)), n_(states),
      initial_(initial), finals_(std::move(finals)), edges_(std::move(edges)),
      synchronous_(synchronous)
  {
    if (n_ == 0)
      throw input_error("a transducer needs at least one state");
    if (initial_ >= n_)
      throw input_error("initial state out of range");
    if (finals_.size() != n_)
      throw input_error("final set does not match the state count");
    for (const auto& e : edges_)
      {
        if (e.from >= n_ || e.to >= n_)
          throw input_error("transition endpoint out of range");
        for (symbol s : e.input)
          if (s >= in_.size())
            throw input_error("input symbol out of range");
        for (symbol s : e.output)
          if (s >= out_.size())
            throw input_error("output symbol out of range");
        if (synchronous_ && (e.input.size() != 1 || e.output.size() != 1))
          throw input_error("synchronous transducer with a label that is "
                            "not a letter pair");
      }
  }

  two_tape_transducer two_tape_transducer::with_initial(state q) const
  {
    return two_tape_transducer(in_, out_, n_, q, finals_, edges_,
                               synchronous_);
  }

  two_tape_transducer two_tape_transducer::with_finals(state_set f) const
  {
    return two_tape_transducer(in_, out_, n_, initial_, std::move(f), edges_,
                               synchronous_);
  }

  two_tape_transducer letter_normal_form(const two_tape_transducer& t)
  {
    std::vector<transducer_edge> edges;
    std::size_t n = t.size();
    for (const auto& e : t.edges())
      {
        const std::size_t len = std::max(e.input.size(), e.output.size());
        if (len <= 1)
          {
            edges.push_back(e);
            continue;
          }
        state cur = e.from;
        for (std::size_t i = 0; i < len; ++i)
          {
            state next = i + 1 == len ? e.to : static_cast<state>(n++);
            word in, out;
            if (i < e.input.size())
              in.push_back(e.input[i]);
            if (i < e.output.size())
              out.push_back(e.output[i]);
            edges.push_back({cur, std::move(in), std::move(out), next});
            cur = next;
          }
      }
    auto fin = t.finals();
    fin.resize(n);
    return two_tape_transducer(t.input_alphabet(), t.output_alphabet(), n,
                               t.initial(), std::move(fin), std::move(edges),
                               t.synchronous());
  }

  namespace
  {
    constexpr int no_letter = -1;

    struct letter_edge
    {
      state from;
      int in;
      int out;
      state to;
    };

    // Normalized transducer with per-state edge lists.
    struct letter_graph
    {
      two_tape_transducer t;
      std::vector<std::vector<letter_edge>> out;

      explicit letter_graph(const two_tape_transducer& t0)
        : t(letter_normal_form(t0)), out(t.size())
      {
        for (const auto& e : t.edges())
          out[e.from].push_back(
            {e.from, e.input.empty() ? no_letter : int(e.input.front()),
             e.output.empty() ? no_letter : int(e.output.front()), e.to});
      }
    };

    // Three recurring obligations: a final state, a letter on the first
    // tape, a letter on the second one. Phase 3 means all were met.
    unsigned advance(unsigned k, bool final_state, bool first, bool second)
    {
      if (k == 3)
        k = 0;
      if (k == 0 && final_state)
        k = 1;
      if (k == 1 && first)
        k = 2;
      if (k == 2 && second)
        k = 3;
      return k;
    }

    struct labelled
    {
      node from;
      int letter;
      node to;
    };

    // Removes letterless edges. Final states are kept as they are, so every
    // final state must only be entered by lettered edges.
    buchi_automaton buchi_without_epsilon(const alphabet& sigma,
                                          std::size_t n, node init,
                                          const state_set& finals,
                                          const std::vector<labelled>& edges)
    {
      adjacency eps(n);
      std::vector<std::vector<std::pair<int, node>>> lettered(n);
      for (const auto& e : edges)
        if (e.letter == no_letter)
          eps[e.from].push_back(e.to);
        else
          lettered[e.from].push_back({e.letter, e.to});
      auto t = make_successor_table(n, sigma.size());
      for (node v = 0; v < n; ++v)
        {
          auto cl = detail::reachable_from(eps, {v});
          for (auto w = cl.find_first(); w != state_set::npos;
               w = cl.find_next(w))
            for (const auto& [a, r] : lettered[w])
              add_edge(t, v, static_cast<symbol>(a), r);
        }
      return trim(buchi_automaton(sigma, std::move(t), init, finals), true);
    }

    finite_automaton finite_without_epsilon(const alphabet& sigma,
                                            std::size_t n, node init,
                                            const state_set& finals,
                                            const std::vector<labelled>& edges)
    {
      adjacency eps(n);
      std::vector<std::vector<std::pair<int, node>>> lettered(n);
      for (const auto& e : edges)
        if (e.letter == no_letter)
          eps[e.from].push_back(e.to);
        else
          lettered[e.from].push_back({e.letter, e.to});
      auto t = make_successor_table(n, sigma.size());
      state_set fin(n);
      for (node v = 0; v < n; ++v)
        {
          auto cl = detail::reachable_from(eps, {v});
          if (cl.intersects(finals))
            fin.set(v);
          for (auto w = cl.find_first(); w != state_set::npos;
               w = cl.find_next(w))
            for (const auto& [a, r] : lettered[w])
              add_edge(t, v, static_cast<symbol>(a), r);
        }
      return trim(finite_automaton(sigma, std::move(t), init, std::move(fin)));
    }

    // Projection onto one tape; the other tape must still be infinite.
    buchi_automaton projection(const letter_graph& lg, bool input_tape)
    {
      const auto& t = lg.t;
      const std::size_t n = t.size() * 4;
      auto id = [](state q, unsigned k) { return static_cast<node>(q * 4 + k); };
      std::vector<labelled> edges;
      state_set fin(n);
      for (state q = 0; q < t.size(); ++q)
        for (unsigned k = 0; k < 4; ++k)
          {
            if (k == 3)
              fin.set(id(q, k));
            for (const auto& e : lg.out[q])
              {
                const int here = input_tape ? e.in : e.out;
                const int other = input_tape ? e.out : e.in;
                unsigned nk = advance(k, t.finals().test(q),
                                      other != no_letter, here != no_letter);
                edges.push_back({id(q, k), here, id(e.to, nk)});
              }
          }
      const auto& sigma = input_tape ? t.input_alphabet() : t.output_alphabet();
      return buchi_without_epsilon(sigma, n, id(t.initial(), 0), fin, edges);
    }

    finite_automaton input_projection_to(const letter_graph& lg, state q)
    {
      const auto& t = lg.t;
      std::vector<labelled> edges;
      for (const auto& row : lg.out)
        for (const auto& e : row)
          edges.push_back({e.from, e.in, e.to});
      return finite_without_epsilon(t.input_alphabet(), t.size(), t.initial(),
                                    make_state_set(t.size(), {q}), edges);
    }

    finite_automaton runs_writing(const letter_graph& lg, const word& u,
                                  state q)
    {
      const auto& t = lg.t;
      const std::size_t w = u.size() + 1;
      auto id = [&](state p, std::size_t k) {
        return static_cast<node>(p * w + k);
      };
      std::vector<labelled> edges;
      for (state p = 0; p < t.size(); ++p)
        for (std::size_t k = 0; k < w; ++k)
          for (const auto& e : lg.out[p])
            {
              if (e.out == no_letter)
                edges.push_back({id(p, k), e.in, id(e.to, k)});
              else if (k < u.size() && symbol(e.out) == u[k])
                edges.push_back({id(p, k), e.in, id(e.to, k + 1)});
            }
      return finite_without_epsilon(t.input_alphabet(), t.size() * w,
                                    id(t.initial(), 0),
                                    make_state_set(t.size() * w,
                                                   {id(q, u.size())}),
                                    edges);
    }

    struct lasso_pos
    {
      const up_word& x;
      std::size_t length;

      explicit lasso_pos(const up_word& w)
        : x(w), length(w.prefix().size() + w.period().size())
      {
      }
      symbol at(std::size_t i) const { return x.at(i); }
      std::size_t next(std::size_t i) const
      {
        return i + 1 == length ? x.prefix().size() : i + 1;
      }
    };

    void check_over(const up_word& x, const alphabet& sigma, const char* what)
    {
      for (symbol s : x.prefix())
        if (s >= sigma.size())
          throw input_error(std::string(what) + " symbol outside alphabet");
      for (symbol s : x.period())
        if (s >= sigma.size())
          throw input_error(std::string(what) + " symbol outside alphabet");
    }

    bool has_accepting_cycle(const adjacency& g, node init,
                             const state_set& good)
    {
      auto reach = detail::reachable_from(g, {init});
      auto sccs = detail::strongly_connected(g, reach);
      for (std::size_t c = 0; c < sccs.members.size(); ++c)
        if (sccs.nontrivial[c])
          for (node v : sccs.members[c])
            if (good.test(v))
              return true;
      return false;
    }

    // Configuration graph of the computations on input x, one node per
    // (state, position, phase) followed by one node per transition used.
    struct run_graph
    {
      adjacency g;
      std::vector<int> output; // per node, letter written (edge nodes)
      state_set good;
      node init;
      std::size_t configs;
    };

    run_graph runs_on(const letter_graph& lg, const up_word& x,
                      bool need_output)
    {
      const auto& t = lg.t;
      lasso_pos pos(x);
      const std::size_t configs = t.size() * pos.length * 4;
      auto id = [&](state q, std::size_t i, unsigned k) {
        return static_cast<node>((q * pos.length + i) * 4 + k);
      };
      run_graph r;
      r.configs = configs;
      r.g.resize(configs);
      r.output.assign(configs, no_letter);
      for (state q = 0; q < t.size(); ++q)
        for (std::size_t i = 0; i < pos.length; ++i)
          for (unsigned k = 0; k < 4; ++k)
            for (const auto& e : lg.out[q])
              {
                std::size_t ni = i;
                if (e.in != no_letter)
                  {
                    if (symbol(e.in) != pos.at(i))
                      continue;
                    ni = pos.next(i);
                  }
                unsigned nk = advance(k, t.finals().test(q),
                                      !need_output || e.out != no_letter,
                                      e.in != no_letter);
                auto en = static_cast<node>(r.g.size());
                r.g.emplace_back(1, id(e.to, ni, nk));
                r.output.push_back(e.out);
                r.g[id(q, i, k)].push_back(en);
              }
      r.good = state_set(r.g.size());
      for (state q = 0; q < t.size(); ++q)
        for (std::size_t i = 0; i < pos.length; ++i)
          r.good.set(id(q, i, 3));
      r.init = id(t.initial(), 0, 0);
      return r;
    }

    // A good node on a cycle reachable from the start, with its component.
    std::optional<std::pair<node, std::size_t>>
    accepting_node(const run_graph& r, const detail::scc_decomposition& sccs)
    {
      for (std::size_t c = 0; c < sccs.members.size(); ++c)
        if (sccs.nontrivial[c])
          for (node v : sccs.members[c])
            if (r.good.test(v))
              return std::pair{v, c};
      return std::nullopt;
    }

    bool has_computation(const run_graph& r)
    {
      auto reach = detail::reachable_from(r.g, {r.init});
      return accepting_node(r, detail::strongly_connected(r.g, reach))
        .has_value();
    }

    std::optional<up_word> some_output(const run_graph& r)
    {
      auto reach = detail::reachable_from(r.g, {r.init});
      auto sccs = detail::strongly_connected(r.g, reach);
      auto found = accepting_node(r, sccs);
      if (!found)
        return std::nullopt;
      auto [v, c] = *found;
      state_set within(r.g.size());
      for (node w : sccs.members[c])
        within.set(w);
      auto stem = *detail::shortest_path(r.g, {r.init}, v);
      auto cycle = detail::covering_cycle(r.g, v, {v}, within);
      word u, p;
      for (node w : stem)
        if (r.output[w] != no_letter)
          u.push_back(symbol(r.output[w]));
      for (node w : cycle)
        if (r.output[w] != no_letter)
          p.push_back(symbol(r.output[w]));
      return up_word(std::move(u), std::move(p));
    }

    // Whether some successful computation on x writes a word other than y.
    bool other_output_exists(const letter_graph& lg, const up_word& x,
                             const up_word& y)
    {
      const auto& t = lg.t;
      lasso_pos px(x), py(y);
      const std::size_t tracked = t.size() * px.length * py.length;
      auto tid = [&](state q, std::size_t i, std::size_t j) {
        return static_cast<node>((q * px.length + i) * py.length + j);
      };
      auto did = [&](state q, std::size_t i, unsigned k) {
        return static_cast<node>(tracked + (q * px.length + i) * 4 + k);
      };
      adjacency g(tracked + t.size() * px.length * 4);
      state_set good(g.size());
      for (state q = 0; q < t.size(); ++q)
        for (std::size_t i = 0; i < px.length; ++i)
          for (const auto& e : lg.out[q])
            {
              std::size_t ni = i;
              if (e.in != no_letter)
                {
                  if (symbol(e.in) != px.at(i))
                    continue;
                  ni = px.next(i);
                }
              for (std::size_t j = 0; j < py.length; ++j)
                {
                  if (e.out == no_letter)
                    g[tid(q, i, j)].push_back(tid(e.to, ni, j));
                  else if (symbol(e.out) == py.at(j))
                    g[tid(q, i, j)].push_back(tid(e.to, ni, py.next(j)));
                  else
                    g[tid(q, i, j)].push_back(did(e.to, ni, 0));
                }
              for (unsigned k = 0; k < 4; ++k)
                g[did(q, i, k)].push_back(
                  did(e.to, ni,
                      advance(k, t.finals().test(q), e.out != no_letter,
                              e.in != no_letter)));
            }
      for (state q = 0; q < t.size(); ++q)
        for (std::size_t i = 0; i < px.length; ++i)
          good.set(did(q, i, 3));
      return has_accepting_cycle(g, tid(t.initial(), 0, 0), good);
    }

    void poll(const continuity_options& o)
    {
      if (o.cancel && o.cancel->load())
        throw cancelled_error("continuity construction cancelled");
    }

    buchi_automaton union_or_empty(const std::vector<buchi_automaton>& parts,
                                   const alphabet& sigma)
    {
      std::vector<buchi_automaton> kept;
      for (const auto& p : parts)
        if (!is_empty(p))
          kept.push_back(p);
      return union_of(kept, sigma);
    }
    struct prefixed
    {
      finite_automaton head;
      buchi_automaton tail;
    };

    // Union of the languages head . tail. Co-Büchi when every tail is, so
    // that the complement stays deterministic Büchi without Safra trees.
    buchi_automaton prefixed_union(const std::vector<prefixed>& parts,
                                   const alphabet& sigma)
    {
      bool cobuchi = true;
      for (const auto& p : parts)
        cobuchi = cobuchi && p.tail.is_cobuchi();
      if (!cobuchi)
        {
          std::vector<buchi_automaton> bs;
          for (const auto& p : parts)
            bs.push_back(concat_left(p.head, as_buchi(p.tail)));
          return union_or_empty(bs, sigma);
        }
      std::size_t n = 1;
      for (const auto& p : parts)
        n += p.head.size() + p.tail.size();
      auto t = make_successor_table(n, sigma.size());
      state_set bad(n);
      bad.set(0);
      std::size_t base = 1;
      for (const auto& p : parts)
        {
          const auto& c = p.head;
          const auto& w = p.tail;
          const std::size_t wb = base + c.size();
          auto from_head = [&](state c0, state at) {
            for (symbol a = 0; a < sigma.size(); ++a)
              {
                for (state r : c.successors(c0, a))
                  add_edge(t, at, a, static_cast<state>(base + r));
                if (c.finals().test(c0))
                  for (state r : w.successors(w.initial(), a))
                    add_edge(t, at, a, static_cast<state>(wb + r));
              }
          };
          from_head(c.initial(), 0);
          for (state q = 0; q < c.size(); ++q)
            {
              bad.set(base + q);
              from_head(q, static_cast<state>(base + q));
            }
          for (state q = 0; q < w.size(); ++q)
            {
              if (w.finals().test(q))
                bad.set(wb + q);
              for (symbol a = 0; a < sigma.size(); ++a)
                for (state r : w.successors(q, a))
                  add_edge(t, static_cast<state>(wb + q), a,
                           static_cast<state>(wb + r));
            }
          base = wb + w.size();
        }
      return buchi_automaton(sigma, std::move(t), 0, std::move(bad),
                             acceptance_mode::cobuchi);
    }
  }

  bool relation_membership(const two_tape_transducer& t,
                           const up_word_pair& p)
  {
    check_over(p.input, t.input_alphabet(), "input");
    check_over(p.output, t.output_alphabet(), "output");
    letter_graph lg(t);
    lasso_pos px(p.input), py(p.output);
    const auto& n = lg.t;
    auto id = [&](state q, std::size_t i, std::size_t j, unsigned k) {
      return static_cast<node>(((q * px.length + i) * py.length + j) * 4 + k);
    };
    adjacency g(n.size() * px.length * py.length * 4);
    state_set good(g.size());
    for (state q = 0; q < n.size(); ++q)
      for (std::size_t i = 0; i < px.length; ++i)
        for (std::size_t j = 0; j < py.length; ++j)
          for (unsigned k = 0; k < 4; ++k)
            {
              if (k == 3)
                good.set(id(q, i, j, k));
              for (const auto& e : lg.out[q])
                {
                  std::size_t ni = i, nj = j;
                  if (e.in != no_letter)
                    {
                      if (symbol(e.in) != px.at(i))
                        continue;
                      ni = px.next(i);
                    }
                  if (e.out != no_letter)
                    {
                      if (symbol(e.out) != py.at(j))
                        continue;
                      nj = py.next(j);
                    }
                  g[id(q, i, j, k)].push_back(
                    id(e.to, ni, nj,
                       advance(k, n.finals().test(q), e.in != no_letter,
                               e.out != no_letter)));
                }
            }
    return has_accepting_cycle(g, id(n.initial(), 0, 0, 0), good);
  }

  buchi_automaton dom(const two_tape_transducer& t)
  {
    return projection(letter_graph(t), true);
  }

  buchi_automaton im(const two_tape_transducer& t)
  {
    return projection(letter_graph(t), false);
  }

  up_word evaluate(const two_tape_transducer& t, const up_word& x)
  {
    check_over(x, t.input_alphabet(), "input");
    letter_graph lg(t);
    auto y = some_output(runs_on(lg, x, true));
    if (!y)
      {
        if (has_computation(runs_on(lg, x, false)))
          throw domain_error("every successful computation on "
                             + format_up_word(x, t.input_alphabet())
                             + " writes a finite output");
        throw domain_error(format_up_word(x, t.input_alphabet())
                           + " is outside the domain");
      }
    if (other_output_exists(lg, x, *y))
      throw functionality_error(
        "input " + format_up_word(x, t.input_alphabet())
        + " has an output other than "
        + format_up_word(*y, t.output_alphabet()));
    return *y;
  }

  bool functionality_check_sync(const two_tape_transducer& t)
  {
    if (!t.synchronous())
      throw precondition_error("functionality check needs a synchronous "
                               "transducer");
    const std::size_t n = t.size();
    // (p, q, diverged, phase); phase 2 once both copies saw a final state.
    auto id = [&](state p, state q, bool d, unsigned k) {
      return static_cast<node>(((p * n + q) * 2 + d) * 3 + k);
    };
    std::vector<std::vector<const transducer_edge*>> out(n);
    for (const auto& e : t.edges())
      out[e.from].push_back(&e);
    adjacency g(n * n * 6);
    state_set good(g.size());
    for (state p = 0; p < n; ++p)
      for (state q = 0; q < n; ++q)
        for (int d = 0; d < 2; ++d)
          for (unsigned k = 0; k < 3; ++k)
            {
              if (d && k == 2)
                good.set(id(p, q, d, k));
              unsigned nk = k == 2 ? 0 : k;
              if (nk == 0 && t.finals().test(p))
                nk = 1;
              if (nk == 1 && t.finals().test(q))
                nk = 2;
              for (const auto* e1 : out[p])
                for (const auto* e2 : out[q])
                  if (e1->input == e2->input)
                    g[id(p, q, d, k)].push_back(
                      id(e1->to, e2->to, d || e1->output != e2->output, nk));
            }
    return !has_accepting_cycle(g, id(t.initial(), t.initial(), false, 0),
                                good);
  }

  finite_automaton prefix_runs(const two_tape_transducer& t, const word& u,
                               state q)
  {
    letter_graph lg(t);
    if (q >= lg.t.size())
      throw input_error("state out of range");
    return runs_writing(lg, u, q);
  }

  buchi_automaton preimage_basic(const two_tape_transducer& t, const word& u)
  {
    for (symbol s : u)
      if (s >= t.output_alphabet().size())
        throw input_error("output symbol outside alphabet");
    letter_graph lg(t);
    std::vector<buchi_automaton> parts;
    for (state q = 0; q < lg.t.size(); ++q)
      {
        auto w = runs_writing(lg, u, q);
        if (!w.finals().any())
          continue;
        auto l = projection(letter_graph(lg.t.with_initial(q)), true);
        if (is_empty(l))
          continue;
        parts.push_back(concat_left(w, l));
      }
    return union_or_empty(parts, t.input_alphabet());
  }

  finite_behavior_result finite_behavior(const two_tape_transducer& t,
                                         state q)
  {
    if (q >= t.size())
      throw input_error("state out of range");
    letter_graph lg(t);
    return {t.with_finals(make_state_set(t.size(), {q})),
            input_projection_to(lg, q)};
  }

  continuity_certificate continuity_restriction(const two_tape_transducer& t,
                                                const continuity_options& o)
  {
    const auto& sigma = t.input_alphabet();
    letter_graph lg(t);
    const std::size_t n = lg.t.size();
    std::vector<std::optional<baire_decomposition>> parts(n);
    std::vector<prefixed> errors;
    for (state q = 0; q < n; ++q)
      {
        poll(o);
        auto c = input_projection_to(lg, q);
        if (!c.finals().any())
          continue;
        auto l = projection(letter_graph(lg.t.with_initial(q)), true);
        if (is_empty(l))
          continue;
        parts[q] = automatic_baire(acceptor(l), o.lim);
        const auto& w = parts[q]->meager_part.automaton;
        if (!is_empty(w))
          errors.push_back({std::move(c), w});
      }
    poll(o);
    continuity_certificate cert{universal_automaton(sigma),
                                prefixed_union(errors, sigma), false, {}};
    if (!is_empty(cert.error_set))
      {
        auto good = complement(cert.error_set, o.lim);
        poll(o);
        cert.g = good.is_deterministic() ? good
                                         : to_dba(acceptor(good), o.lim);
      }
    poll(o);
    if (o.check_density)
      {
        if (!is_dense(acceptor(cert.g), o.lim))
          throw construction_error("continuity set is not dense");
        cert.density_checked = true;
      }

    for (const auto& u : words_up_to(t.output_alphabet(), o.prefix_bound))
      {
        poll(o);
        std::vector<buchi_automaton> opens;
        std::vector<prefixed> meagers;
        for (state q = 0; q < n; ++q)
          {
            if (!parts[q])
              continue;
            auto w = runs_writing(lg, u, q);
            if (!w.finals().any())
              continue;
            opens.push_back(concat_left(w, parts[q]->open_part));
            const auto& m = parts[q]->meager_part.automaton;
            if (!is_empty(m))
              meagers.push_back({w, m});
          }
        per_prefix_data d{u, preimage_basic(t, u),
                          union_or_empty(opens, sigma),
                          prefixed_union(meagers, sigma)};
        if (!classify(acceptor(d.open), o.lim).is_open)
          throw construction_error("prefix open part is not open");
        if (!is_empty(intersection(d.meager, cert.g)))
          throw construction_error("prefix error set meets the continuity "
                                   "set");
        auto not_f = complement(d.meager, o.lim);
        auto lhs = trim(intersection(d.preimage, not_f), true);
        auto rhs = trim(intersection(d.open, not_f), true);
        if (!is_empty(intersection(lhs, complement(d.open, o.lim)))
            || !is_empty(intersection(rhs, complement(d.preimage, o.lim))))
          throw construction_error("prefix preimage differs from its open "
                                   "part outside the error set");
        cert.per_n.push_back(std::move(d));
      }
    return cert;
  }

  std::vector<up_word> lassos_up_to(const alphabet& sigma,
                                    std::size_t max_prefix,
                                    std::size_t max_period)
  {
    std::set<up_word> seen;
    std::vector<up_word> out;
    for (const auto& u : words_up_to(sigma, max_prefix))
      for (std::size_t len = 1; len <= max_period; ++len)
        for (const auto& v : words_of_length(sigma, len))
          {
            up_word w(u, v);
            if (seen.insert(w).second)
              out.push_back(std::move(w));
          }
    return out;
  }

  probe_report restricted_continuity_probe(const two_tape_transducer& t,
                                           const buchi_automaton& g,
                                           const up_word& x,
                                           std::size_t n_max,
                                           std::size_t k_max,
                                           std::size_t lasso_bound)
  {
    require_same_alphabet(t.input_alphabet(), g.alphabet(), "probe");
    const auto domain = dom(t);
    if (!member(g, x) || !member(domain, x))
      throw precondition_error("probe point outside the restricted domain");
    const auto fx = evaluate(t, x);
    const auto base = lassos_up_to(t.input_alphabet(), lasso_bound,
                                   lasso_bound);

    std::map<up_word, std::optional<up_word>> images;
    auto image = [&](const up_word& y) -> const std::optional<up_word>& {
      auto it = images.find(y);
      if (it != images.end())
        return it->second;
      std::optional<up_word> fy;
      if (member(g, y) && member(domain, y))
        fy = evaluate(t, y);
      return images.emplace(y, std::move(fy)).first->second;
    };

    probe_report report;
    std::size_t level = 0;
    for (std::size_t k = 0; k <= k_max && level <= n_max; ++k)
      {
        std::vector<up_word> near;
        for (const auto& y : base)
          {
            auto l = common_prefix_length(x, y);
            if (!l || *l > k)
              near.push_back(y);
          }
        const auto head = x.take(k + 1);
        for (const auto& z : base)
          {
            word u = head;
            u.insert(u.end(), z.prefix().begin(), z.prefix().end());
            near.emplace_back(std::move(u), z.period());
          }
        // Smallest output agreement among the neighbours at this radius.
        std::optional<std::size_t> worst;
        std::optional<up_word> witness;
        for (const auto& y : near)
          {
            const auto& fy = image(y);
            if (!fy)
              continue;
            ++report.candidates;
            auto l = common_prefix_length(fx, *fy);
            if (l && (!worst || *l < *worst))
              {
                worst = l;
                witness = y;
              }
          }
        while (level <= n_max && (!worst || *worst > level))
          {
            report.modulus.push_back(k);
            ++level;
          }
        if (k == k_max && level <= n_max)
          report.violation = probe_violation{level, x, *witness, fx,
                                             *image(*witness)};
      }
    return report;
  }
}
