#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "obaire/baire.hpp"
#include "obaire/core.hpp"
#include "obaire/transducer.hpp"

namespace obaire
{
  /// Membership by direct simulation, sharing no code with member().
  bool naive_member(const acceptor& a, const up_word& x);

  /// Every canonical lasso u(v) with |u| <= max_prefix, 1 <= |v| <= max_period.
  struct lasso_corpus
  {
    alphabet sigma;
    std::size_t max_prefix;
    std::size_t max_period;
    std::vector<up_word> words;

    lasso_corpus(alphabet s, std::size_t p, std::size_t q);
  };

  struct check_report
  {
    std::string command;
    bool pass = true;
    /// Set when some part could not be checked (missing certificate).
    bool partial = false;
    std::vector<up_word> counterexamples;
    std::vector<std::string> notes;
    double seconds = 0;

    /// One JSON object, no trailing newline.
    std::string to_json(const alphabet& sigma) const;
  };

  check_report oracle_compare(const acceptor& a1, const acceptor& a2,
                              const lasso_corpus& corpus);

  /// Openness of B, emptiness of (A delta B) minus C, and the closed/empty
  /// interior checks of the certificate (levels up to \a levels).
  check_report check_baire_triple(const acceptor& a,
                                  const buchi_automaton& b,
                                  const meager_union& c,
                                  const limits& lim = {},
                                  unsigned levels = default_level_checks);
  /// Without a certificate the per-level part is skipped and the report is
  /// marked partial.
  check_report check_baire_triple(const acceptor& a,
                                  const buchi_automaton& b,
                                  const buchi_automaton& c,
                                  const limits& lim = {});

  // --- Random instances ----------------------------------------------------

  using rng_type = std::mt19937_64;

  struct random_shape
  {
    std::size_t max_states = 5;
    double edge_probability = 0.35;
    double final_probability = 0.4;
  };

  /// Nondeterministic Büchi automaton with 1..max_states states.
  buchi_automaton random_nba(rng_type& rng, const alphabet& sigma,
                             const random_shape& shape = {});

  /// Deterministic complete Muller automaton; each reachable loop is
  /// designated with probability 1/2.
  muller_automaton random_dma(rng_type& rng, const alphabet& sigma,
                              std::size_t max_states = 5);

  /// Synchronous functional transducer with 1..max_states states and a
  /// nonempty domain.
  two_tape_transducer random_sync_functional(rng_type& rng,
                                             const alphabet& in,
                                             const alphabet& out,
                                             std::size_t max_states = 4);

  /// Uniform lasso with prefix and period lengths in [0, p] and [1, q].
  up_word random_lasso(rng_type& rng, const alphabet& sigma, std::size_t p,
                       std::size_t q);

  // --- Reference transducers -----------------------------------------------

  two_tape_transducer identity_transducer(const alphabet& sigma);
  /// Over {a, b}: b^omega on inputs with infinitely many b, a^omega on the
  /// others.
  two_tape_transducer b_counter_transducer();
}
