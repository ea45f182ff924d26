#include "obaire/word.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numeric>

#include "obaire/errors.hpp"

namespace obaire
{
  namespace
  {
    // Length of the primitive root of w.
    std::size_t primitive_root_length(const word& w)
    {
      const std::size_t n = w.size();
      for (std::size_t d = 1; d < n; ++d)
        {
          if (n % d)
            continue;
          bool ok = true;
          for (std::size_t i = d; i < n && ok; ++i)
            ok = w[i] == w[i - d];
          if (ok)
            return d;
        }
      return n;
    }
  }

  up_word::up_word(word prefix, word period)
    : prefix_(std::move(prefix)), period_(std::move(period))
  {
    if (period_.empty())
      throw input_error("period of an ultimately periodic word must be "
                        "non-empty");
    period_.resize(primitive_root_length(period_));
    // Absorb the tail of the prefix into the period by rotation.
    while (!prefix_.empty() && prefix_.back() == period_.back())
      {
        prefix_.pop_back();
        std::rotate(period_.rbegin(), period_.rbegin() + 1, period_.rend());
      }
  }

  symbol up_word::at(std::size_t i) const
  {
    if (i < prefix_.size())
      return prefix_[i];
    return period_[(i - prefix_.size()) % period_.size()];
  }

  word up_word::take(std::size_t n) const
  {
    word out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
      out.push_back(at(i));
    return out;
  }

  up_word up_word::prepend(const word& w) const
  {
    word p = w;
    p.insert(p.end(), prefix_.begin(), prefix_.end());
    return up_word(std::move(p), period_);
  }

  namespace
  {
    struct word_lexer
    {
      std::string_view text;
      const alphabet& sigma;
      std::size_t pos = 0;

      [[noreturn]] void fail(const std::string& what) const
      {
        throw parse_error(what, 1, pos + 1);
      }

      void skip_ws()
      {
        while (pos < text.size()
               && std::isspace(static_cast<unsigned char>(text[pos])))
          ++pos;
      }

      // Reads symbols up to '(' / ')' / end.
      word read_symbols()
      {
        word out;
        for (;;)
          {
            skip_ws();
            if (pos >= text.size() || text[pos] == '(' || text[pos] == ')')
              return out;
            std::size_t start = pos;
            if (sigma.single_char())
              ++pos;
            else
              while (pos < text.size()
                     && !std::isspace(static_cast<unsigned char>(text[pos]))
                     && text[pos] != '(' && text[pos] != ')')
                ++pos;
            auto name = text.substr(start, pos - start);
            auto s = sigma.find(name);
            if (!s)
              {
                pos = start;
                fail("symbol '" + std::string(name)
                     + "' is not in the alphabet");
              }
            out.push_back(*s);
          }
      }
    };
  }

  up_word parse_up_word(std::string_view text, const alphabet& sigma)
  {
    word_lexer lx{text, sigma};
    word prefix = lx.read_symbols();
    lx.skip_ws();
    if (lx.pos >= text.size() || text[lx.pos] != '(')
      lx.fail("expected '(' opening the period");
    ++lx.pos;
    word period = lx.read_symbols();
    lx.skip_ws();
    if (lx.pos >= text.size() || text[lx.pos] != ')')
      lx.fail("expected ')' closing the period");
    ++lx.pos;
    lx.skip_ws();
    if (lx.pos != text.size())
      lx.fail("trailing characters after the period");
    if (period.empty())
      lx.fail("period must be non-empty");
    return up_word(std::move(prefix), std::move(period));
  }

  std::string format_up_word(const up_word& w, const alphabet& sigma)
  {
    std::string out = sigma.format(w.prefix());
    if (!sigma.single_char() && !out.empty())
      out += ' ';
    out += '(';
    out += sigma.format(w.period());
    out += ')';
    return out;
  }

  std::optional<std::size_t> common_prefix_length(const up_word& x,
                                                  const up_word& y)
  {
    if (x == y)
      return std::nullopt;
    // Canonical forms differ, so a mismatch occurs before both words have
    // entered a common period window.
    const std::size_t horizon =
      std::max(x.prefix().size(), y.prefix().size())
      + std::lcm(x.period().size(), y.period().size());
    for (std::size_t i = 0; i < horizon; ++i)
      if (x.at(i) != y.at(i))
        return i;
    throw construction_error("distinct canonical words agree on the whole "
                             "comparison horizon");
  }

  double prefix_distance_value::to_double() const
  {
    if (!exponent)
      return 0.0;
    return std::ldexp(1.0, -static_cast<int>(*exponent));
  }

  prefix_distance_value prefix_distance(const up_word& x, const up_word& y)
  {
    return {common_prefix_length(x, y)};
  }
}
