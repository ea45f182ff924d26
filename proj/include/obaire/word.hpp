#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "obaire/alphabet.hpp"

namespace obaire
{
  /// An ultimately periodic infinite word prefix . period^omega.
  ///
  /// Instances are always kept in canonical form: the period is primitive
  /// and the prefix is as short as possible. Two values therefore denote the
  /// same infinite word iff they compare equal.
  class up_word
  {
  public:
    up_word(word prefix, word period);

    const word& prefix() const noexcept { return prefix_; }
    const word& period() const noexcept { return period_; }

    /// The letter at 0-based position \a i.
    symbol at(std::size_t i) const;

    /// The first \a n letters.
    word take(std::size_t n) const;

    /// The word w . this.
    up_word prepend(const word& w) const;

    bool operator==(const up_word&) const = default;
    auto operator<=>(const up_word&) const = default;

  private:
    word prefix_;
    word period_;
  };

  /// Parses the literal syntax `u(v)`, e.g. `ab(ba)` or `(ab)`. When the
  /// alphabet has multi-character symbols, symbols are separated by spaces:
  /// `foo (bar baz)`.
  up_word parse_up_word(std::string_view text, const alphabet& sigma);

  std::string format_up_word(const up_word& w, const alphabet& sigma);

  /// Length of the longest common prefix, or nullopt when the words are
  /// equal.
  std::optional<std::size_t> common_prefix_length(const up_word& x,
                                                  const up_word& y);

  /// Exact dyadic distance 2^-l, represented by its exponent l. nullopt
  /// stands for distance 0.
  struct prefix_distance_value
  {
    std::optional<std::size_t> exponent;

    bool is_zero() const noexcept { return !exponent.has_value(); }
    double to_double() const;
    /// True iff this distance is strictly below 2^-k.
    bool less_than_pow2(std::size_t k) const noexcept
    {
      return !exponent || *exponent > k;
    }
  };

  prefix_distance_value prefix_distance(const up_word& x, const up_word& y);
}
