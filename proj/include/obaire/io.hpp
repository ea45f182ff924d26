#pragma once

#include <string>
#include <string_view>

#include "obaire/core.hpp"
#include "obaire/transducer.hpp"

namespace obaire
{
  /// Native automaton format:
  ///
  ///     alphabet: a b
  ///     states: 2
  ///     initial: 0
  ///     acceptance: buchi          # or cobuchi, muller
  ///     finals: 1                  # buchi / cobuchi
  ///     table: {0 1} {1}           # muller
  ///     0 a 1
  ///
  /// `#` starts a comment. Syntax errors throw parse_error.
  acceptor parse_oaut(std::string_view text);
  std::string emit_oaut(const acceptor& a);

  /// Transducer format: header lines `input:`, `output:`, `states:`,
  /// `initial:`, `finals:`, `synchronous: yes|no`, then `src u|v dst`.
  /// `-` is the empty word; symbols of multi-character alphabets are
  /// separated by `.`.
  two_tape_transducer parse_otrans(std::string_view text);
  std::string emit_otrans(const two_tape_transducer& t);

  /// HOA with state-based Büchi acceptance. Symbols are encoded in binary
  /// over ceil(log2 |alphabet|) atomic propositions; the alphabet names are
  /// kept in an `obaire-alphabet:` header.
  buchi_automaton parse_hoa(std::string_view text);
  std::string emit_hoa(const buchi_automaton& a);

  std::string emit_dot(const acceptor& a);

  std::string read_file(const std::string& path);
  void write_file(const std::string& path, std::string_view content);
}
