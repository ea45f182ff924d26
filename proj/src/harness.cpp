#include "obaire/harness.hpp"

#include <chrono>
#include <deque>

#include "json.hpp"

#include "obaire/errors.hpp"
#include "obaire/topology.hpp"

namespace obaire
{
  namespace
  {
    // Positions of a lasso unfolded once: 0 .. |u|+|v|-1, the last one
    // looping back to |u|.
    struct unfolded
    {
      word letters;
      std::size_t loop_start;

      explicit unfolded(const up_word& x) : loop_start(x.prefix().size())
      {
        letters = x.prefix();
        letters.insert(letters.end(), x.period().begin(), x.period().end());
      }
      std::size_t next(std::size_t i) const
      {
        return i + 1 == letters.size() ? loop_start : i + 1;
      }
    };

    // Breadth-first search in an explicit successor list.
    std::vector<bool> bfs(const std::vector<std::vector<std::size_t>>& g,
                          const std::vector<std::size_t>& from,
                          const std::vector<bool>& allowed)
    {
      std::vector<bool> seen(g.size(), false);
      std::deque<std::size_t> todo;
      for (auto v : from)
        if (allowed[v] && !seen[v])
          {
            seen[v] = true;
            todo.push_back(v);
          }
      while (!todo.empty())
        {
          auto v = todo.front();
          todo.pop_front();
          for (auto w : g[v])
            if (allowed[w] && !seen[w])
              {
                seen[w] = true;
                todo.push_back(w);
              }
        }
      return seen;
    }

    bool naive_nondeterministic(const buchi_automaton& a, const up_word& x)
    {
      unfolded u(x);
      const std::size_t len = u.letters.size();
      const std::size_t n = a.size() * len;
      auto id = [&](state q, std::size_t i) { return q * len + i; };
      std::vector<std::vector<std::size_t>> g(n);
      for (state q = 0; q < a.size(); ++q)
        for (std::size_t i = 0; i < len; ++i)
          for (state r : a.successors(q, u.letters[i]))
            g[id(q, i)].push_back(id(r, u.next(i)));
      std::vector<bool> all(n, true);
      auto reach = bfs(g, {id(a.initial(), 0)}, all);
      // A node is good when it may be visited infinitely often.
      std::vector<bool> allowed(n, true);
      if (a.is_cobuchi())
        for (state q = 0; q < a.size(); ++q)
          for (std::size_t i = 0; i < len; ++i)
            allowed[id(q, i)] = !a.is_final(q);
      for (state q = 0; q < a.size(); ++q)
        for (std::size_t i = 0; i < len; ++i)
          {
            const auto v = id(q, i);
            if (!reach[v] || !allowed[v])
              continue;
            if (a.is_buchi() && !a.is_final(q))
              continue;
            if (bfs(g, g[v], allowed)[v])
              return true;
          }
      return false;
    }

    bool naive_muller(const muller_automaton& a, const up_word& x)
    {
      unfolded u(x);
      const std::size_t len = u.letters.size();
      std::vector<std::size_t> first_seen(a.size() * len, SIZE_MAX);
      std::vector<state> trace;
      state q = a.initial();
      std::size_t i = 0;
      for (std::size_t t = 0;; ++t)
        {
          if (i >= u.loop_start)
            {
              auto key = q * len + i;
              if (first_seen[key] != SIZE_MAX)
                {
                  state_set inf(a.size());
                  for (std::size_t s = first_seen[key]; s < trace.size(); ++s)
                    inf.set(trace[s]);
                  return a.designated(inf);
                }
              first_seen[key] = t;
            }
          trace.push_back(q);
          q = a.step(q, u.letters[i]);
          i = u.next(i);
        }
    }

    std::string fmt(const up_word& w, const alphabet& sigma)
    {
      return format_up_word(w, sigma);
    }

    double since(std::chrono::steady_clock::time_point t0)
    {
      return std::chrono::duration<double>(std::chrono::steady_clock::now()
                                           - t0)
        .count();
    }
  }

  bool naive_member(const acceptor& a, const up_word& x)
  {
    const auto& sigma = alphabet_of(a);
    for (symbol s : x.prefix())
      if (s >= sigma.size())
        throw input_error("word symbol outside alphabet");
    for (symbol s : x.period())
      if (s >= sigma.size())
        throw input_error("word symbol outside alphabet");
    if (auto m = std::get_if<muller_automaton>(&a))
      return naive_muller(*m, x);
    return naive_nondeterministic(std::get<buchi_automaton>(a), x);
  }

  lasso_corpus::lasso_corpus(alphabet s, std::size_t p, std::size_t q)
    : sigma(std::move(s)), max_prefix(p), max_period(q),
      words(lassos_up_to(sigma, p, q))
  {
  }

  std::string check_report::to_json(const alphabet& sigma) const
  {
    nlohmann::json j;
    j["command"] = command;
    j["verdict"] = pass ? "pass" : "fail";
    j["partial"] = partial;
    auto& ce = j["counterexamples"] = nlohmann::json::array();
    for (const auto& w : counterexamples)
      ce.push_back(fmt(w, sigma));
    j["notes"] = notes;
    j["seconds"] = seconds;
    return j.dump();
  }

  check_report oracle_compare(const acceptor& a1, const acceptor& a2,
                              const lasso_corpus& corpus)
  {
    const auto t0 = std::chrono::steady_clock::now();
    require_same_alphabet(alphabet_of(a1), alphabet_of(a2), "oracle-compare");
    require_same_alphabet(alphabet_of(a1), corpus.sigma, "oracle-compare");
    check_report r;
    r.command = "oracle-compare";
    for (const auto& x : corpus.words)
      {
        const bool m1 = naive_member(a1, x), m2 = naive_member(a2, x);
        if (m1 != m2)
          {
            r.pass = false;
            r.counterexamples.push_back(x);
            r.notes.push_back(fmt(x, corpus.sigma) + " is accepted by the "
                              + (m1 ? "first" : "second")
                              + " automaton only");
            break;
          }
      }
    r.notes.push_back(std::to_string(corpus.words.size())
                      + " lassos compared");
    r.seconds = since(t0);
    return r;
  }

  namespace
  {
    void delta_checks(check_report& r, const acceptor& a,
                      const buchi_automaton& b, const buchi_automaton& c,
                      const limits& lim)
    {
      const auto& sigma = alphabet_of(a);
      if (!classify(acceptor(b), lim).is_open)
        {
          r.pass = false;
          r.notes.push_back("B is not open");
        }
      const auto not_c = complement(c, lim);
      const auto not_b = complement(b, lim);
      const auto not_a = complement_of(a, lim);
      const auto a_b = trim(intersection(to_buchi(a), not_b), true);
      if (auto w = accepted_word(intersection(a_b, not_c)))
        {
          r.pass = false;
          r.counterexamples.push_back(*w);
          r.notes.push_back(fmt(*w, sigma)
                            + " is in A, not in B and not in C");
        }
      const auto b_a = trim(intersection(b, not_a), true);
      if (auto w = accepted_word(intersection(b_a, not_c)))
        {
          r.pass = false;
          r.counterexamples.push_back(*w);
          r.notes.push_back(fmt(*w, sigma)
                            + " is in B, not in A and not in C");
        }
    }

    void nowhere_dense(check_report& r, const buchi_automaton& piece,
                       const std::string& what, const limits& lim)
    {
      if (!classify(acceptor(piece), lim).is_closed)
        {
          r.pass = false;
          r.notes.push_back(what + " is not closed");
        }
      auto inner = interior(acceptor(piece), lim);
      if (auto w = accepted_word(inner))
        {
          r.pass = false;
          r.counterexamples.push_back(*w);
          r.notes.push_back(what + " has interior around "
                            + fmt(*w, piece.alphabet()));
        }
    }
  }

  check_report check_baire_triple(const acceptor& a, const buchi_automaton& b,
                                  const meager_union& c, const limits& lim,
                                  unsigned levels)
  {
    const auto t0 = std::chrono::steady_clock::now();
    require_same_alphabet(alphabet_of(a), b.alphabet(), "check-baire");
    require_same_alphabet(alphabet_of(a), c.automaton.alphabet(),
                          "check-baire");
    check_report r;
    r.command = "check-baire";
    delta_checks(r, a, b, c.automaton, lim);
    std::size_t k = 0;
    for (const auto& comp : c.certificate)
      {
        const auto name = "component " + std::to_string(k++);
        if (auto p = std::get_if<closed_piece>(&comp))
          {
            nowhere_dense(r, p->closed, name, lim);
            continue;
          }
        const auto& f = std::get<cobuchi_family>(comp);
        for (unsigned n = 0; n <= levels; ++n)
          nowhere_dense(r, level_automaton(f, n),
                        name + " level " + std::to_string(n), lim);
      }
    if (c.certificate.empty() && !is_empty(c.automaton))
      {
        r.partial = true;
        r.notes.push_back("C is nonempty but has no certificate");
      }
    r.seconds = since(t0);
    return r;
  }

  check_report check_baire_triple(const acceptor& a, const buchi_automaton& b,
                                  const buchi_automaton& c, const limits& lim)
  {
    const auto t0 = std::chrono::steady_clock::now();
    require_same_alphabet(alphabet_of(a), b.alphabet(), "check-baire");
    require_same_alphabet(alphabet_of(a), c.alphabet(), "check-baire");
    check_report r;
    r.command = "check-baire";
    delta_checks(r, a, b, c, lim);
    if (!is_empty(c))
      {
        r.partial = true;
        r.notes.push_back("no certificate for C: meagerness not checked");
      }
    r.seconds = since(t0);
    return r;
  }

  // --- Random instances ------------------------------------------------------

  buchi_automaton random_nba(rng_type& rng, const alphabet& sigma,
                             const random_shape& shape)
  {
    std::uniform_int_distribution<std::size_t> size(1, shape.max_states);
    std::bernoulli_distribution edge(shape.edge_probability);
    std::bernoulli_distribution fin(shape.final_probability);
    const std::size_t n = size(rng);
    auto t = make_successor_table(n, sigma.size());
    state_set f(n);
    for (state q = 0; q < n; ++q)
      {
        if (fin(rng))
          f.set(q);
        for (symbol a = 0; a < sigma.size(); ++a)
          for (state r = 0; r < n; ++r)
            if (edge(rng))
              add_edge(t, q, a, r);
      }
    return buchi_automaton(sigma, std::move(t), 0, std::move(f));
  }

  muller_automaton random_dma(rng_type& rng, const alphabet& sigma,
                              std::size_t max_states)
  {
    std::uniform_int_distribution<std::size_t> size(1, max_states);
    const std::size_t n = size(rng);
    std::uniform_int_distribution<state> target(0, static_cast<state>(n - 1));
    std::vector<std::vector<state>> delta(n);
    for (auto& row : delta)
      for (symbol a = 0; a < sigma.size(); ++a)
        row.push_back(target(rng));
    muller_automaton m(sigma, std::move(delta), 0, {});
    std::bernoulli_distribution pick(0.5);
    std::vector<state_set> table;
    for (auto& loop : reachable_loops(m))
      if (pick(rng))
        table.push_back(std::move(loop));
    return m.with_table(std::move(table));
  }

  two_tape_transducer random_sync_functional(rng_type& rng,
                                             const alphabet& in,
                                             const alphabet& out,
                                             std::size_t max_states)
  {
    std::uniform_int_distribution<std::size_t> size(1, max_states);
    std::bernoulli_distribution fin(0.5), present(0.85), extra(0.2);
    std::uniform_int_distribution<symbol> letter(
      0, static_cast<symbol>(out.size() - 1));
    for (;;)
      {
        const std::size_t n = size(rng);
        std::uniform_int_distribution<state> target(0,
                                                    static_cast<state>(n - 1));
        std::vector<transducer_edge> edges;
        state_set f(n);
        for (state q = 0; q < n; ++q)
          {
            if (fin(rng))
              f.set(q);
            for (symbol a = 0; a < in.size(); ++a)
              {
                const std::size_t before = edges.size();
                if (present(rng))
                  edges.push_back({q, {a}, {letter(rng)}, target(rng)});
                if (extra(rng))
                  {
                    transducer_edge e{q, {a}, {letter(rng)}, target(rng)};
                    if (edges.size() == before
                        || edges.back().output != e.output
                        || edges.back().to != e.to)
                      edges.push_back(std::move(e));
                  }
              }
          }
        two_tape_transducer t(in, out, n, 0, std::move(f), std::move(edges),
                              true);
        if (functionality_check_sync(t) && !is_empty(dom(t)))
          return t;
      }
  }

  up_word random_lasso(rng_type& rng, const alphabet& sigma, std::size_t p,
                       std::size_t q)
  {
    std::uniform_int_distribution<std::size_t> plen(0, p), qlen(1, q);
    std::uniform_int_distribution<symbol> letter(
      0, static_cast<symbol>(sigma.size() - 1));
    word u(plen(rng)), v(qlen(rng));
    for (auto& s : u)
      s = letter(rng);
    for (auto& s : v)
      s = letter(rng);
    return up_word(std::move(u), std::move(v));
  }

  two_tape_transducer identity_transducer(const alphabet& sigma)
  {
    std::vector<transducer_edge> edges;
    for (symbol a = 0; a < sigma.size(); ++a)
      edges.push_back({0, {a}, {a}, 0});
    return two_tape_transducer(sigma, sigma, 1, 0, make_state_set(1, {0}),
                               std::move(edges), true);
  }

  two_tape_transducer b_counter_transducer()
  {
    const auto ab = alphabet::of_chars("ab");
    constexpr symbol a = 0, b = 1;
    // State 4 guesses the branch. States 0 and 1 write b and 1 is final
    // after each b; states 2 and 3 write a, and 3 accepts a tail of a's.
    std::vector<transducer_edge> edges = {
      {4, {a}, {b}, 0}, {4, {b}, {b}, 1}, {4, {a}, {a}, 2}, {4, {b}, {a}, 2},
      {4, {a}, {a}, 3}, {0, {a}, {b}, 0}, {0, {b}, {b}, 1}, {1, {a}, {b}, 0},
      {1, {b}, {b}, 1}, {2, {a}, {a}, 2}, {2, {b}, {a}, 2}, {2, {a}, {a}, 3},
      {3, {a}, {a}, 3}};
    return two_tape_transducer(ab, ab, 5, 4, make_state_set(5, {1, 3}),
                               std::move(edges), true);
  }
}
