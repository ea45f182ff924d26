#include "graph.hpp"

#include <algorithm>
#include <deque>

namespace obaire::detail
{
  namespace
  {
    bool is_alive(const node_set& alive, node n)
    {
      return alive.empty() || alive.test(n);
    }
  }

  scc_decomposition strongly_connected(const adjacency& g,
                                       const node_set& alive)
  {
    const std::size_t n = g.size();
    scc_decomposition out;
    out.component.assign(n, npos);
    std::vector<std::uint32_t> index(n, npos), low(n, 0);
    std::vector<bool> on_stack(n, false);
    std::vector<node> stack;
    std::uint32_t counter = 0;

    struct frame
    {
      node v;
      std::size_t edge;
    };
    std::vector<frame> call;

    for (node root = 0; root < n; ++root)
      {
        if (index[root] != npos || !is_alive(alive, root))
          continue;
        call.push_back({root, 0});
        index[root] = low[root] = counter++;
        stack.push_back(root);
        on_stack[root] = true;
        while (!call.empty())
          {
            auto& f = call.back();
            const auto& succ = g[f.v];
            if (f.edge < succ.size())
              {
                node w = succ[f.edge++];
                if (!is_alive(alive, w))
                  continue;
                if (index[w] == npos)
                  {
                    index[w] = low[w] = counter++;
                    stack.push_back(w);
                    on_stack[w] = true;
                    call.push_back({w, 0});
                  }
                else if (on_stack[w])
                  low[f.v] = std::min(low[f.v], index[w]);
                continue;
              }
            node v = f.v;
            call.pop_back();
            if (!call.empty())
              low[call.back().v] = std::min(low[call.back().v], low[v]);
            if (low[v] != index[v])
              continue;
            auto id = static_cast<std::uint32_t>(out.members.size());
            out.members.emplace_back();
            node w;
            do
              {
                w = stack.back();
                stack.pop_back();
                on_stack[w] = false;
                out.component[w] = id;
                out.members.back().push_back(w);
              }
            while (w != v);
            std::sort(out.members.back().begin(), out.members.back().end());
          }
      }

    out.nontrivial.assign(out.members.size(), false);
    for (std::size_t c = 0; c < out.members.size(); ++c)
      {
        const auto& ms = out.members[c];
        if (ms.size() > 1)
          {
            out.nontrivial[c] = true;
            continue;
          }
        node v = ms.front();
        out.nontrivial[c] =
          std::find(g[v].begin(), g[v].end(), v) != g[v].end();
      }
    return out;
  }

  node_set reachable_from(const adjacency& g, const std::vector<node>& from,
                          const node_set& alive)
  {
    node_set seen(g.size());
    std::vector<node> todo;
    for (node s : from)
      if (is_alive(alive, s) && !seen.test(s))
        {
          seen.set(s);
          todo.push_back(s);
        }
    while (!todo.empty())
      {
        node v = todo.back();
        todo.pop_back();
        for (node w : g[v])
          if (is_alive(alive, w) && !seen.test(w))
            {
              seen.set(w);
              todo.push_back(w);
            }
      }
    return seen;
  }

  node_set coreachable(const adjacency& g, const node_set& targets)
  {
    adjacency rev(g.size());
    for (node v = 0; v < g.size(); ++v)
      for (node w : g[v])
        rev[w].push_back(v);
    std::vector<node> from;
    for (auto i = targets.find_first(); i != node_set::npos;
         i = targets.find_next(i))
      from.push_back(static_cast<node>(i));
    return reachable_from(rev, from);
  }

  std::optional<std::vector<node>> shortest_path(const adjacency& g,
                                                 const std::vector<node>& from,
                                                 node to,
                                                 const node_set& alive)
  {
    std::vector<node> parent(g.size(), npos);
    node_set seen(g.size());
    std::deque<node> queue;
    for (node s : from)
      if (is_alive(alive, s) && !seen.test(s))
        {
          seen.set(s);
          queue.push_back(s);
        }
    while (!queue.empty())
      {
        node v = queue.front();
        queue.pop_front();
        if (v == to)
          {
            std::vector<node> path{v};
            while (parent[path.back()] != npos)
              path.push_back(parent[path.back()]);
            std::reverse(path.begin(), path.end());
            return path;
          }
        for (node w : g[v])
          if (is_alive(alive, w) && !seen.test(w))
            {
              seen.set(w);
              parent[w] = v;
              queue.push_back(w);
            }
      }
    return std::nullopt;
  }

  namespace
  {
    // Path of length >= 1 from v to w (v == w allowed) inside within.
    std::vector<node> step_path(const adjacency& g, node v, node w,
                                const node_set& within)
    {
      std::vector<node> starts;
      for (node x : g[v])
        if (within.test(x))
          starts.push_back(x);
      auto p = shortest_path(g, starts, w, within);
      std::vector<node> out{v};
      out.insert(out.end(), p->begin(), p->end());
      return out;
    }
  }

  std::vector<node> covering_cycle(const adjacency& g, node start,
                                   const std::vector<node>& must,
                                   const node_set& within)
  {
    std::vector<node> cycle{start};
    node cur = start;
    node_set visited(g.size());
    visited.set(start);
    auto extend = [&](node target) {
      auto p = step_path(g, cur, target, within);
      for (std::size_t i = 1; i < p.size(); ++i)
        {
          cycle.push_back(p[i]);
          visited.set(p[i]);
        }
      cur = target;
    };
    for (node m : must)
      if (!visited.test(m))
        extend(m);
    extend(start);
    cycle.pop_back();
    return cycle;
  }

  bool for_each_loop(const adjacency& g, const node_set& within,
                     const node_set& required,
                     const std::function<bool(const node_set&)>& visit)
  {
    auto sccs = strongly_connected(g, within);
    for (std::size_t c = 0; c < sccs.members.size(); ++c)
      {
        if (!sccs.nontrivial[c])
          continue;
        node_set comp(g.size());
        for (node v : sccs.members[c])
          comp.set(v);
        if (!required.is_subset_of(comp))
          continue;
        if (!visit(comp))
          return false;
        // Proper sub-loops, partitioned by the first free node they omit.
        auto req = required;
        for (node v : sccs.members[c])
          {
            if (required.test(v))
              continue;
            auto sub = comp;
            sub.reset(v);
            if (!for_each_loop(g, sub, req, visit))
              return false;
            req.set(v);
          }
      }
    return true;
  }
}
