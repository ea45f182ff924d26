#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace obaire
{
  using symbol = std::uint32_t;
  using word = std::vector<symbol>;

  /// Ordered finite set of distinct symbol names. The order fixes the
  /// length-lexicographic enumeration of finite words.
  class alphabet
  {
  public:
    explicit alphabet(std::vector<std::string> names);

    /// Alphabet whose symbols are the single characters of \a chars.
    static alphabet of_chars(std::string_view chars);

    std::size_t size() const noexcept { return names_.size(); }
    const std::string& name(symbol s) const { return names_.at(s); }
    const std::vector<std::string>& names() const noexcept { return names_; }

    std::optional<symbol> find(std::string_view name) const;
    /// Like find(), but throws input_error for unknown names.
    symbol index_of(std::string_view name) const;

    /// True when every symbol name is one character long, which allows the
    /// compact word syntax `ab(ba)`.
    bool single_char() const noexcept;

    std::string format(const word& w) const;

    bool operator==(const alphabet&) const = default;

  private:
    std::vector<std::string> names_;
  };

  /// Throws input_error unless both alphabets are identical.
  void require_same_alphabet(const alphabet& a, const alphabet& b,
                             std::string_view what);

  /// All words of length exactly \a n, in lexicographic order.
  std::vector<word> words_of_length(const alphabet& sigma, std::size_t n);

  /// Length-lexicographic enumeration of all words of length <= max_len.
  std::vector<word> words_up_to(const alphabet& sigma, std::size_t max_len);
}
