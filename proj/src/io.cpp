#include "obaire/io.hpp"

#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>

#include "obaire/errors.hpp"

namespace obaire
{
  namespace
  {
    struct token
    {
      std::string text;
      std::size_t col; // 1-based
    };

    struct line
    {
      std::size_t number;
      std::vector<token> tokens;
    };

    // Whitespace separated tokens; braces stand alone; `#` ends the line.
    std::vector<line> tokenize(std::string_view text)
    {
      std::vector<line> out;
      std::size_t number = 0;
      std::size_t pos = 0;
      while (pos <= text.size())
        {
          auto end = text.find('\n', pos);
          if (end == std::string_view::npos)
            end = text.size();
          auto raw = text.substr(pos, end - pos);
          ++number;
          line l{number, {}};
          std::size_t i = 0;
          while (i < raw.size())
            {
              char c = raw[i];
              if (c == '#')
                break;
              if (c == ' ' || c == '\t' || c == '\r')
                {
                  ++i;
                  continue;
                }
              if (c == '{' || c == '}')
                {
                  l.tokens.push_back({std::string(1, c), i + 1});
                  ++i;
                  continue;
                }
              std::size_t j = i;
              while (j < raw.size() && raw[j] != ' ' && raw[j] != '\t'
                     && raw[j] != '\r' && raw[j] != '{' && raw[j] != '}'
                     && raw[j] != '#')
                ++j;
              l.tokens.push_back({std::string(raw.substr(i, j - i)), i + 1});
              i = j;
            }
          if (!l.tokens.empty())
            out.push_back(std::move(l));
          pos = end + 1;
        }
      return out;
    }

    [[noreturn]] void fail(const line& l, const token& t, const std::string& m)
    {
      throw parse_error(m, l.number, t.col);
    }

    std::size_t number_of(const line& l, const token& t)
    {
      std::size_t v = 0;
      auto [p, ec] = std::from_chars(t.text.data(),
                                     t.text.data() + t.text.size(), v);
      if (ec != std::errc() || p != t.text.data() + t.text.size())
        fail(l, t, "expected a number, got '" + t.text + "'");
      return v;
    }

    state state_of(const line& l, const token& t, std::size_t n)
    {
      auto v = number_of(l, t);
      if (v >= n)
        fail(l, t, "state " + t.text + " out of range");
      return static_cast<state>(v);
    }

    bool is_key(const line& l)
    {
      const auto& t = l.tokens.front().text;
      return t.size() > 1 && t.back() == ':';
    }

    std::string key_of(const line& l)
    {
      const auto& t = l.tokens.front().text;
      return t.substr(0, t.size() - 1);
    }

    alphabet alphabet_from(const line& l)
    {
      std::vector<std::string> names;
      for (std::size_t i = 1; i < l.tokens.size(); ++i)
        names.push_back(l.tokens[i].text);
      if (names.empty())
        fail(l, l.tokens.front(), "empty alphabet");
      try
        {
          return alphabet(std::move(names));
        }
      catch (const input_error& e)
        {
          fail(l, l.tokens.front(), e.what());
        }
    }

    symbol symbol_of(const line& l, const token& t, const alphabet& sigma)
    {
      auto s = sigma.find(t.text);
      if (!s)
        fail(l, t, "unknown symbol '" + t.text + "'");
      return *s;
    }

    template <class T>
    const T& need(const std::optional<T>& v, const char* what,
                  std::size_t line_no)
    {
      if (!v)
        throw parse_error(std::string("missing header '") + what + "'",
                          line_no, 1);
      return *v;
    }

    std::string join_states(const state_set& s)
    {
      std::string out;
      for (state q : members(s))
        {
          if (!out.empty())
            out += ' ';
          out += std::to_string(q);
        }
      return out;
    }

    std::string join_names(const alphabet& sigma)
    {
      std::string out;
      for (const auto& n : sigma.names())
        {
          if (!out.empty())
            out += ' ';
          out += n;
        }
      return out;
    }
  }

  acceptor parse_oaut(std::string_view text)
  {
    auto lines = tokenize(text);
    std::optional<alphabet> sigma;
    std::optional<std::size_t> n;
    std::optional<state> init;
    std::string mode = "buchi";
    std::optional<line> finals_line, table_line;
    std::vector<line> edges;
    std::size_t last = 1;
    for (auto& l : lines)
      {
        last = l.number;
        if (!is_key(l))
          {
            edges.push_back(l);
            continue;
          }
        const auto key = key_of(l);
        if (key == "alphabet")
          sigma = alphabet_from(l);
        else if (key == "states")
          {
            if (l.tokens.size() != 2)
              fail(l, l.tokens.front(), "states: expects one number");
            n = number_of(l, l.tokens[1]);
            if (*n == 0)
              fail(l, l.tokens[1], "at least one state is required");
          }
        else if (key == "initial")
          {
            if (l.tokens.size() != 2)
              fail(l, l.tokens.front(), "initial: expects one state");
            init = static_cast<state>(number_of(l, l.tokens[1]));
          }
        else if (key == "acceptance")
          {
            if (l.tokens.size() != 2)
              fail(l, l.tokens.front(), "acceptance: expects one word");
            mode = l.tokens[1].text;
            if (mode != "buchi" && mode != "cobuchi" && mode != "muller")
              fail(l, l.tokens[1], "unknown acceptance '" + mode + "'");
          }
        else if (key == "finals")
          finals_line = l;
        else if (key == "table")
          table_line = l;
        else
          fail(l, l.tokens.front(), "unknown header '" + key + "'");
      }
    const auto& s = need(sigma, "alphabet", last);
    const auto size = need(n, "states", last);
    const auto start = need(init, "initial", last);
    if (start >= size)
      throw parse_error("initial state out of range", last, 1);

    auto t = make_successor_table(size, s.size());
    for (const auto& l : edges)
      {
        if (l.tokens.size() != 3)
          fail(l, l.tokens.front(), "expected 'source symbol target'");
        add_edge(t, state_of(l, l.tokens[0], size),
                 symbol_of(l, l.tokens[1], s),
                 state_of(l, l.tokens[2], size));
      }

    if (mode == "muller")
      {
        if (finals_line)
          fail(*finals_line, finals_line->tokens.front(),
               "finals: given for a Muller automaton");
        std::vector<state_set> table;
        if (table_line)
          {
            const auto& l = *table_line;
            std::optional<state_set> cur;
            for (std::size_t i = 1; i < l.tokens.size(); ++i)
              {
                const auto& tk = l.tokens[i];
                if (tk.text == "{")
                  {
                    if (cur)
                      fail(l, tk, "nested '{'");
                    cur = state_set(size);
                  }
                else if (tk.text == "}")
                  {
                    if (!cur)
                      fail(l, tk, "unmatched '}'");
                    table.push_back(std::move(*cur));
                    cur.reset();
                  }
                else
                  {
                    if (!cur)
                      fail(l, tk, "state outside '{...}'");
                    cur->set(state_of(l, tk, size));
                  }
              }
            if (cur)
              fail(l, l.tokens.back(), "unterminated '{'");
          }
        std::vector<std::vector<state>> delta(size);
        for (state q = 0; q < size; ++q)
          for (symbol a = 0; a < s.size(); ++a)
            {
              if (t[q][a].size() != 1)
                throw parse_error("Muller automaton needs exactly one "
                                  "transition for state "
                                  + std::to_string(q) + " and symbol "
                                  + s.name(a),
                                  last, 1);
              delta[q].push_back(t[q][a].front());
            }
        return muller_automaton(s, std::move(delta), start, std::move(table));
      }

    if (table_line)
      fail(*table_line, table_line->tokens.front(),
           "table: given for a Büchi automaton");
    state_set fin(size);
    if (finals_line)
      for (std::size_t i = 1; i < finals_line->tokens.size(); ++i)
        fin.set(state_of(*finals_line, finals_line->tokens[i], size));
    return buchi_automaton(s, std::move(t), start, std::move(fin),
                           mode == "cobuchi" ? acceptance_mode::cobuchi
                                             : acceptance_mode::buchi);
  }

  namespace
  {
    constexpr std::size_t max_listed_loops = 100'000;
  }

  std::string emit_oaut(const acceptor& a)
  {
    std::ostringstream o;
    const auto& sigma = alphabet_of(a);
    o << "alphabet: " << join_names(sigma) << '\n';
    if (auto m = std::get_if<muller_automaton>(&a))
      {
        o << "states: " << m->size() << "\ninitial: " << m->initial()
          << "\nacceptance: muller\ntable:";
        // The format lists the table; priority form is expanded.
        for (const auto& s : designated_loops(*m, max_listed_loops))
          o << " {" << join_states(s) << '}';
        o << '\n';
        for (state q = 0; q < m->size(); ++q)
          for (symbol s = 0; s < sigma.size(); ++s)
            o << q << ' ' << sigma.name(s) << ' ' << m->step(q, s) << '\n';
        return o.str();
      }
    const auto& b = std::get<buchi_automaton>(a);
    o << "states: " << b.size() << "\ninitial: " << b.initial()
      << "\nacceptance: " << (b.is_cobuchi() ? "cobuchi" : "buchi")
      << "\nfinals:";
    for (state q : members(b.finals()))
      o << ' ' << q;
    o << '\n';
    for (state q = 0; q < b.size(); ++q)
      for (symbol s = 0; s < sigma.size(); ++s)
        for (state r : b.successors(q, s))
          o << q << ' ' << sigma.name(s) << ' ' << r << '\n';
    return o.str();
  }

  namespace
  {
    word word_of(const line& l, const token& t, std::string_view text,
                 const alphabet& sigma)
    {
      word w;
      if (text == "-")
        return w;
      if (text.empty())
        fail(l, t, "empty word must be written '-'");
      if (sigma.single_char())
        {
          for (char c : text)
            {
              auto s = sigma.find(std::string_view(&c, 1));
              if (!s)
                fail(l, t, std::string("unknown symbol '") + c + "'");
              w.push_back(*s);
            }
          return w;
        }
      std::size_t pos = 0;
      while (pos <= text.size())
        {
          auto end = text.find('.', pos);
          if (end == std::string_view::npos)
            end = text.size();
          auto name = text.substr(pos, end - pos);
          auto s = sigma.find(name);
          if (!s)
            fail(l, t, "unknown symbol '" + std::string(name) + "'");
          w.push_back(*s);
          pos = end + 1;
        }
      return w;
    }

    std::string word_text(const word& w, const alphabet& sigma)
    {
      if (w.empty())
        return "-";
      std::string out;
      for (symbol s : w)
        {
          if (!out.empty() && !sigma.single_char())
            out += '.';
          out += sigma.name(s);
        }
      return out;
    }
  }

  two_tape_transducer parse_otrans(std::string_view text)
  {
    auto lines = tokenize(text);
    std::optional<alphabet> in, out;
    std::optional<std::size_t> n;
    std::optional<state> init;
    std::optional<line> finals_line;
    bool sync = false;
    std::vector<line> edges;
    std::size_t last = 1;
    for (auto& l : lines)
      {
        last = l.number;
        if (!is_key(l))
          {
            edges.push_back(l);
            continue;
          }
        const auto key = key_of(l);
        if (key == "input")
          in = alphabet_from(l);
        else if (key == "output")
          out = alphabet_from(l);
        else if (key == "states")
          {
            if (l.tokens.size() != 2)
              fail(l, l.tokens.front(), "states: expects one number");
            n = number_of(l, l.tokens[1]);
            if (*n == 0)
              fail(l, l.tokens[1], "at least one state is required");
          }
        else if (key == "initial")
          {
            if (l.tokens.size() != 2)
              fail(l, l.tokens.front(), "initial: expects one state");
            init = static_cast<state>(number_of(l, l.tokens[1]));
          }
        else if (key == "finals")
          finals_line = l;
        else if (key == "synchronous")
          {
            if (l.tokens.size() != 2
                || (l.tokens[1].text != "yes" && l.tokens[1].text != "no"))
              fail(l, l.tokens.front(), "synchronous: expects yes or no");
            sync = l.tokens[1].text == "yes";
          }
        else
          fail(l, l.tokens.front(), "unknown header '" + key + "'");
      }
    const auto& a_in = need(in, "input", last);
    const auto& a_out = need(out, "output", last);
    const auto size = need(n, "states", last);
    const auto start = need(init, "initial", last);
    if (start >= size)
      throw parse_error("initial state out of range", last, 1);
    state_set fin(size);
    if (finals_line)
      for (std::size_t i = 1; i < finals_line->tokens.size(); ++i)
        fin.set(state_of(*finals_line, finals_line->tokens[i], size));
    std::vector<transducer_edge> es;
    for (const auto& l : edges)
      {
        if (l.tokens.size() != 3)
          fail(l, l.tokens.front(), "expected 'source u|v target'");
        const auto& lab = l.tokens[1];
        auto bar = lab.text.find('|');
        if (bar == std::string::npos)
          fail(l, lab, "label must have the form u|v");
        std::string_view whole = lab.text;
        auto u = word_of(l, lab, whole.substr(0, bar), a_in);
        auto v = word_of(l, lab, whole.substr(bar + 1), a_out);
        if (sync && (u.size() != 1 || v.size() != 1))
          fail(l, lab, "synchronous transducer needs one letter per tape");
        es.push_back({state_of(l, l.tokens[0], size), std::move(u),
                      std::move(v), state_of(l, l.tokens[2], size)});
      }
    return two_tape_transducer(a_in, a_out, size, start, std::move(fin),
                               std::move(es), sync);
  }

  std::string emit_otrans(const two_tape_transducer& t)
  {
    std::ostringstream o;
    o << "input: " << join_names(t.input_alphabet()) << '\n'
      << "output: " << join_names(t.output_alphabet()) << '\n'
      << "states: " << t.size() << '\n'
      << "initial: " << t.initial() << '\n'
      << "finals:";
    for (state q : members(t.finals()))
      o << ' ' << q;
    o << "\nsynchronous: " << (t.synchronous() ? "yes" : "no") << '\n';
    for (const auto& e : t.edges())
      o << e.from << ' ' << word_text(e.input, t.input_alphabet()) << '|'
        << word_text(e.output, t.output_alphabet()) << ' ' << e.to << '\n';
    return o.str();
  }

  // --- HOA -------------------------------------------------------------------

  namespace
  {
    std::size_t ap_count(std::size_t symbols)
    {
      std::size_t k = 0;
      while ((std::size_t(1) << k) < symbols)
        ++k;
      return k;
    }

    std::string hoa_label(symbol s, std::size_t k)
    {
      if (k == 0)
        return "t";
      std::string out;
      for (std::size_t i = 0; i < k; ++i)
        {
          if (i)
            out += '&';
          if (!((s >> i) & 1))
            out += '!';
          out += std::to_string(i);
        }
      return out;
    }

    std::string quoted(const std::string& s)
    {
      std::string out = "\"";
      for (char c : s)
        {
          if (c == '"' || c == '\\')
            out += '\\';
          out += c;
        }
      return out + '"';
    }

    // Label expressions over AP indices: t, f, n, !e, e&e, e|e, (e).
    class label_parser
    {
    public:
      label_parser(std::string_view s, std::size_t line_no, std::size_t col)
        : s_(s), line_(line_no), col_(col)
      {
      }

      bool eval(std::uint64_t valuation)
      {
        v_ = valuation;
        i_ = 0;
        bool r = disj();
        skip();
        if (i_ != s_.size())
          error("unexpected character in label");
        return r;
      }

    private:
      [[noreturn]] void error(const std::string& m)
      {
        throw parse_error(m, line_, col_ + i_);
      }
      void skip()
      {
        while (i_ < s_.size() && (s_[i_] == ' ' || s_[i_] == '\t'))
          ++i_;
      }
      bool disj()
      {
        bool r = conj();
        skip();
        while (i_ < s_.size() && s_[i_] == '|')
          {
            ++i_;
            r = conj() || r;
            skip();
          }
        return r;
      }
      bool conj()
      {
        bool r = unary();
        skip();
        while (i_ < s_.size() && s_[i_] == '&')
          {
            ++i_;
            r = unary() && r;
            skip();
          }
        return r;
      }
      bool unary()
      {
        skip();
        if (i_ >= s_.size())
          error("truncated label");
        char c = s_[i_];
        if (c == '!')
          {
            ++i_;
            return !unary();
          }
        if (c == '(')
          {
            ++i_;
            bool r = disj();
            skip();
            if (i_ >= s_.size() || s_[i_] != ')')
              error("missing ')'");
            ++i_;
            return r;
          }
        if (c == 't' || c == 'f')
          {
            ++i_;
            return c == 't';
          }
        if (c >= '0' && c <= '9')
          {
            std::size_t n = 0;
            while (i_ < s_.size() && s_[i_] >= '0' && s_[i_] <= '9')
              n = n * 10 + std::size_t(s_[i_++] - '0');
            if (n >= 64)
              error("atomic proposition index too large");
            return (v_ >> n) & 1;
          }
        error(std::string("unexpected '") + c + "' in label");
      }

      std::string_view s_;
      std::size_t line_, col_;
      std::size_t i_ = 0;
      std::uint64_t v_ = 0;
    };

    // Splits a header value into whitespace separated items, keeping quoted
    // strings together (quotes removed).
    std::vector<std::string> hoa_items(std::string_view s, std::size_t line_no)
    {
      std::vector<std::string> out;
      std::size_t i = 0;
      while (i < s.size())
        {
          if (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')
            {
              ++i;
              continue;
            }
          if (s[i] == '"')
            {
              std::string v;
              ++i;
              while (i < s.size() && s[i] != '"')
                {
                  if (s[i] == '\\' && i + 1 < s.size())
                    ++i;
                  v += s[i++];
                }
              if (i >= s.size())
                throw parse_error("unterminated string", line_no, i + 1);
              ++i;
              out.push_back(std::move(v));
              continue;
            }
          std::size_t j = i;
          while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r')
            ++j;
          out.emplace_back(s.substr(i, j - i));
          i = j;
        }
      return out;
    }
  }

  buchi_automaton parse_hoa(std::string_view text)
  {
    std::vector<std::pair<std::size_t, std::string_view>> lines;
    {
      std::size_t pos = 0, no = 0;
      while (pos <= text.size())
        {
          auto end = text.find('\n', pos);
          if (end == std::string_view::npos)
            end = text.size();
          ++no;
          lines.push_back({no, text.substr(pos, end - pos)});
          pos = end + 1;
        }
    }
    std::optional<std::size_t> n, k;
    std::optional<state> start;
    std::optional<std::vector<std::string>> names;
    bool all_final = false, seen_acc = false, body = false, done = false;
    std::size_t i = 0;
    auto trimmed = [](std::string_view s) {
      while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
        s.remove_prefix(1);
      while (!s.empty()
             && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
      return s;
    };
    auto count_of = [](const std::string& v, std::size_t no) {
      std::size_t x = 0;
      auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), x);
      if (ec != std::errc() || p != v.data() + v.size())
        throw parse_error("expected a number, got '" + v + "'", no, 1);
      return x;
    };
    for (; i < lines.size() && !body; ++i)
      {
        auto [no, raw] = lines[i];
        auto l = trimmed(raw);
        if (l.empty())
          continue;
        if (l == "--BODY--")
          {
            body = true;
            break;
          }
        auto colon = l.find(':');
        if (colon == std::string_view::npos)
          throw parse_error("expected a header line", no, 1);
        auto key = l.substr(0, colon);
        auto items = hoa_items(l.substr(colon + 1), no);
        if (key == "HOA")
          {
            if (items.size() != 1 || items[0] != "v1")
              throw parse_error("only HOA v1 is supported", no, 1);
          }
        else if (key == "States")
          n = count_of(items.at(0), no);
        else if (key == "Start")
          {
            if (start)
              throw parse_error("several initial states are not supported",
                                no, 1);
            start = static_cast<state>(count_of(items.at(0), no));
          }
        else if (key == "AP")
          {
            if (items.empty())
              throw parse_error("AP: needs a count", no, 1);
            k = count_of(items[0], no);
            if (*k > 16)
              throw parse_error("too many atomic propositions", no, 1);
          }
        else if (key == "Acceptance")
          {
            std::string rest;
            for (std::size_t j = 1; j < items.size(); ++j)
              rest += items[j];
            seen_acc = true;
            if (items.size() >= 2 && items[0] == "1" && rest == "Inf(0)")
              all_final = false;
            else if (items.size() >= 2 && items[0] == "0" && rest == "t")
              all_final = true;
            else
              throw parse_error("only state-based Büchi acceptance "
                                "'1 Inf(0)' is supported",
                                no, colon + 2);
          }
        else if (key == "obaire-alphabet")
          names = items;
        else if (key == "acc-name" || key == "name" || key == "tool"
                 || key == "properties")
          continue;
        else if (!key.empty() && key.front() >= 'a' && key.front() <= 'z')
          continue; // unknown optional header
        else
          throw parse_error("unsupported header '" + std::string(key) + "'",
                            no, 1);
      }
    if (!body)
      throw parse_error("missing --BODY--", lines.back().first, 1);
    if (!seen_acc)
      throw parse_error("missing Acceptance header", lines.back().first, 1);
    const std::size_t size = n.value_or(0);
    if (size == 0)
      throw parse_error("missing or zero States header", 1, 1);
    const std::size_t aps = k.value_or(0);
    std::vector<std::string> sym_names;
    if (names)
      {
        sym_names = *names;
        if (sym_names.empty() || sym_names.size() > (std::size_t(1) << aps)
            || ap_count(sym_names.size()) != aps)
          throw parse_error("obaire-alphabet does not fit the AP count", 1, 1);
      }
    else
      for (std::uint64_t v = 0; v < (std::uint64_t(1) << aps); ++v)
        {
          std::string s;
          for (std::size_t b = 0; b < aps; ++b)
            s += ((v >> b) & 1) ? '1' : '0';
          sym_names.push_back(aps == 0 ? "_" : s);
        }
    alphabet sigma(sym_names);

    auto t = make_successor_table(size, sigma.size());
    state_set fin(size);
    std::optional<state> cur;
    for (++i; i < lines.size(); ++i)
      {
        auto [no, raw] = lines[i];
        auto l = trimmed(raw);
        if (l.empty())
          continue;
        if (l == "--END--")
          {
            done = true;
            break;
          }
        if (l.substr(0, 6) == "State:")
          {
            auto rest = trimmed(l.substr(6));
            std::size_t j = 0;
            while (j < rest.size() && rest[j] >= '0' && rest[j] <= '9')
              ++j;
            if (j == 0)
              throw parse_error("State: needs a number", no, 7);
            auto q = count_of(std::string(rest.substr(0, j)), no);
            if (q >= size)
              throw parse_error("state out of range", no, 7);
            cur = static_cast<state>(q);
            auto acc = rest.find('{');
            if (acc != std::string_view::npos)
              {
                auto close = rest.find('}', acc);
                if (close == std::string_view::npos)
                  throw parse_error("unterminated acceptance set", no, 1);
                auto inside = trimmed(rest.substr(acc + 1, close - acc - 1));
                if (inside == "0")
                  fin.set(q);
                else if (!inside.empty())
                  throw parse_error("only acceptance set 0 is supported", no,
                                    1);
              }
            if (all_final)
              fin.set(q);
            continue;
          }
        if (!cur)
          throw parse_error("edge before any State:", no, 1);
        std::string_view label = "t";
        std::size_t label_col = 1;
        std::string_view rest = l;
        if (!rest.empty() && rest.front() == '[')
          {
            auto close = rest.find(']');
            if (close == std::string_view::npos)
              throw parse_error("unterminated label", no, 1);
            label = rest.substr(1, close - 1);
            label_col = 2;
            rest = trimmed(rest.substr(close + 1));
          }
        else
          throw parse_error("implicit edge labels are not supported", no, 1);
        if (rest.find('{') != std::string_view::npos)
          throw parse_error("transition-based acceptance is not supported",
                            no, 1);
        auto dst = count_of(std::string(rest), no);
        if (dst >= size)
          throw parse_error("edge target out of range", no, 1);
        label_parser lp(label, no, label_col);
        for (symbol s = 0; s < sigma.size(); ++s)
          if (lp.eval(s))
            add_edge(t, *cur, s, static_cast<state>(dst));
      }
    if (!done)
      throw parse_error("missing --END--", lines.back().first, 1);
    return buchi_automaton(sigma, std::move(t), start.value_or(0),
                           std::move(fin));
  }

  std::string emit_hoa(const buchi_automaton& a0)
  {
    const auto a = as_buchi(a0);
    const auto& sigma = a.alphabet();
    const auto k = ap_count(sigma.size());
    std::ostringstream o;
    o << "HOA: v1\nStates: " << a.size() << "\nStart: " << a.initial()
      << "\nAP: " << k;
    for (std::size_t i = 0; i < k; ++i)
      o << " \"p" << i << '"';
    o << "\nacc-name: Buchi\nAcceptance: 1 Inf(0)\n"
      << "properties: state-acc\nobaire-alphabet:";
    for (const auto& nm : sigma.names())
      o << ' ' << quoted(nm);
    o << "\n--BODY--\n";
    for (state q = 0; q < a.size(); ++q)
      {
        o << "State: " << q;
        if (a.is_final(q))
          o << " {0}";
        o << '\n';
        for (symbol s = 0; s < sigma.size(); ++s)
          for (state r : a.successors(q, s))
            o << '[' << hoa_label(s, k) << "] " << r << '\n';
      }
    o << "--END--\n";
    return o.str();
  }

  std::string emit_dot(const acceptor& a)
  {
    std::ostringstream o;
    const auto& sigma = alphabet_of(a);
    o << "digraph automaton {\n  rankdir=LR;\n  init [shape=point];\n";
    auto edge = [&](state q, symbol s, state r) {
      o << "  " << q << " -> " << r << " [label=" << quoted(sigma.name(s))
        << "];\n";
    };
    if (auto m = std::get_if<muller_automaton>(&a))
      {
        o << "  init -> " << m->initial() << ";\n";
        for (state q = 0; q < m->size(); ++q)
          o << "  " << q << " [shape=circle];\n";
        for (state q = 0; q < m->size(); ++q)
          for (symbol s = 0; s < sigma.size(); ++s)
            edge(q, s, m->step(q, s));
      }
    else
      {
        const auto& b = std::get<buchi_automaton>(a);
        o << "  init -> " << b.initial() << ";\n";
        for (state q = 0; q < b.size(); ++q)
          o << "  " << q << " [shape="
            << (b.is_final(q) ? "doublecircle" : "circle") << "];\n";
        for (state q = 0; q < b.size(); ++q)
          for (symbol s = 0; s < sigma.size(); ++s)
            for (state r : b.successors(q, s))
              edge(q, s, r);
      }
    o << "}\n";
    return o.str();
  }

  std::string read_file(const std::string& path)
  {
    std::ifstream in(path, std::ios::binary);
    if (!in)
      throw input_error("cannot open '" + path + "'");
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
  }

  void write_file(const std::string& path, std::string_view content)
  {
    std::ofstream out(path, std::ios::binary);
    if (!out)
      throw input_error("cannot write '" + path + "'");
    out << content;
    if (!out)
      throw input_error("write to '" + path + "' failed");
  }
}
