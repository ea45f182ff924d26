#include "obaire/alphabet.hpp"

#include <algorithm>
#include <set>

#include "obaire/errors.hpp"

namespace obaire
{
  alphabet::alphabet(std::vector<std::string> names)
    : names_(std::move(names))
  {
    if (names_.empty())
      throw input_error("alphabet must not be empty");
    std::set<std::string> seen;
    for (const auto& n : names_)
      {
        if (n.empty())
          throw input_error("empty symbol name");
        if (n.find_first_of(" \t\r\n()|") != std::string::npos)
          throw input_error("symbol name '" + n + "' contains a reserved "
                            "character");
        if (n == "-")
          throw input_error("'-' is reserved for the empty word");
        if (!seen.insert(n).second)
          throw input_error("duplicate symbol '" + n + "'");
      }
  }

  alphabet alphabet::of_chars(std::string_view chars)
  {
    std::vector<std::string> names;
    for (char c : chars)
      names.emplace_back(1, c);
    return alphabet(std::move(names));
  }

  std::optional<symbol> alphabet::find(std::string_view name) const
  {
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end())
      return std::nullopt;
    return static_cast<symbol>(it - names_.begin());
  }

  symbol alphabet::index_of(std::string_view name) const
  {
    if (auto s = find(name))
      return *s;
    throw input_error("symbol '" + std::string(name)
                      + "' is not in the alphabet");
  }

  bool alphabet::single_char() const noexcept
  {
    return std::all_of(names_.begin(), names_.end(),
                       [](const std::string& n) { return n.size() == 1; });
  }

  std::string alphabet::format(const word& w) const
  {
    std::string out;
    bool sep = !single_char();
    for (std::size_t i = 0; i < w.size(); ++i)
      {
        if (sep && i)
          out += ' ';
        out += name(w[i]);
      }
    return out;
  }

  void require_same_alphabet(const alphabet& a, const alphabet& b,
                             std::string_view what)
  {
    if (a != b)
      throw input_error(std::string(what) + ": alphabet mismatch");
  }

  std::vector<word> words_of_length(const alphabet& sigma, std::size_t n)
  {
    std::vector<word> out;
    word w(n, 0);
    const auto k = static_cast<symbol>(sigma.size());
    for (;;)
      {
        out.push_back(w);
        std::size_t i = n;
        while (i > 0)
          {
            if (++w[i - 1] < k)
              break;
            w[i - 1] = 0;
            --i;
          }
        if (i == 0)
          break;
      }
    return out;
  }

  std::vector<word> words_up_to(const alphabet& sigma, std::size_t max_len)
  {
    std::vector<word> out;
    for (std::size_t n = 0; n <= max_len; ++n)
      {
        auto layer = words_of_length(sigma, n);
        out.insert(out.end(), layer.begin(), layer.end());
      }
    return out;
  }
}
