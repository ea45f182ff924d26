#pragma once

#include <atomic>
#include <optional>
#include <string>
#include <vector>

#include "obaire/baire.hpp"
#include "obaire/core.hpp"
#include "obaire/determinize.hpp"

namespace obaire
{
  struct transducer_edge
  {
    state from;
    word input;
    word output;
    state to;
  };

  /// Büchi automaton whose transitions carry a pair of finite words, one
  /// per tape. A computation is successful when it visits a final state
  /// infinitely often and both tapes receive an infinite word.
  class two_tape_transducer
  {
  public:
    two_tape_transducer(alphabet input, alphabet output, std::size_t states,
                        state initial, state_set finals,
                        std::vector<transducer_edge> edges,
                        bool synchronous = false);

    const alphabet& input_alphabet() const noexcept { return in_; }
    const alphabet& output_alphabet() const noexcept { return out_; }
    std::size_t size() const noexcept { return n_; }
    state initial() const noexcept { return initial_; }
    const state_set& finals() const noexcept { return finals_; }
    const std::vector<transducer_edge>& edges() const noexcept
    {
      return edges_;
    }
    bool synchronous() const noexcept { return synchronous_; }

    two_tape_transducer with_initial(state q) const;
    two_tape_transducer with_finals(state_set f) const;

  private:
    alphabet in_, out_;
    std::size_t n_;
    state initial_;
    state_set finals_;
    std::vector<transducer_edge> edges_;
    bool synchronous_;
  };

  /// Copy in which every transition reads at most one letter per tape.
  /// Longer labels are spread over fresh intermediate states appended after
  /// the original ones; the relation is unchanged.
  two_tape_transducer letter_normal_form(const two_tape_transducer& t);

  struct up_word_pair
  {
    up_word input;
    up_word output;
  };

  bool relation_membership(const two_tape_transducer& t,
                           const up_word_pair& p);

  buchi_automaton dom(const two_tape_transducer& t);
  buchi_automaton im(const two_tape_transducer& t);

  /// The output on \a x. Throws domain_error when x has no image and
  /// functionality_error when a second output exists.
  up_word evaluate(const two_tape_transducer& t, const up_word& x);

  /// Synchronous transducers only (precondition_error otherwise).
  bool functionality_check_sync(const two_tape_transducer& t);

  /// Inputs whose image starts with \a u.
  buchi_automaton preimage_basic(const two_tape_transducer& t, const word& u);

  /// Input words read along some partial computation from the initial state
  /// to \a q that writes exactly \a u.
  finite_automaton prefix_runs(const two_tape_transducer& t, const word& u,
                               state q);

  struct finite_behavior_result
  {
    /// The transducer read over finite words with \a q as only final state.
    two_tape_transducer pairs;
    /// Input projection of pairs.
    finite_automaton inputs;
  };

  finite_behavior_result finite_behavior(const two_tape_transducer& t,
                                         state q);

  struct per_prefix_data
  {
    word prefix;
    buchi_automaton preimage;
    buchi_automaton open;   // V_n
    buchi_automaton meager; // F_n
  };

  struct continuity_certificate
  {
    buchi_automaton g;
    /// The meager set whose complement is L(g).
    buchi_automaton error_set;
    bool density_checked = false;
    std::vector<per_prefix_data> per_n;
  };

  struct continuity_options
  {
    /// Per-prefix diagnostics for every output word up to this length.
    std::size_t prefix_bound = 3;
    bool check_density = true;
    limits lim;
    /// Checked between steps; a set flag aborts with cancelled_error.
    const std::atomic<bool>* cancel = nullptr;
  };

  continuity_certificate continuity_restriction(const two_tape_transducer& t,
                                                const continuity_options& o = {});

  struct probe_violation
  {
    std::size_t n;
    up_word x, y, fx, fy;
  };

  struct probe_report
  {
    /// modulus[n] is the least k that worked for level n.
    std::vector<std::size_t> modulus;
    std::optional<probe_violation> violation;
    std::size_t candidates = 0;
  };

  /// Bounded search for a continuity modulus of t restricted to L(g) at x.
  /// At distance below 2^-k the neighbours tried are the lassos within
  /// \a lasso_bound and the words x[0..k] z with z such a lasso.
  probe_report restricted_continuity_probe(const two_tape_transducer& t,
                                           const buchi_automaton& g,
                                           const up_word& x,
                                           std::size_t n_max,
                                           std::size_t k_max,
                                           std::size_t lasso_bound);

  /// All canonical lassos u(v) with |u| <= max_prefix, 1 <= |v| <= max_period,
  /// without repetitions, in a fixed order.
  std::vector<up_word> lassos_up_to(const alphabet& sigma,
                                    std::size_t max_prefix,
                                    std::size_t max_period);
}
