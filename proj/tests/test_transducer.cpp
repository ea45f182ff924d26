#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "obaire/errors.hpp"
#include "obaire/topology.hpp"
#include "obaire/transducer.hpp"

using namespace obaire;
using namespace fixtures;

namespace
{
  constexpr symbol a = 0, b = 1;

  // Every letter written twice.
  two_tape_transducer doubling()
  {
    return two_tape_transducer(ab(), ab(), 1, 0, make_state_set(1, {0}),
                               {{0, {a}, {a, a}, 0}, {0, {b}, {b, b}, 0}});
  }

  // Writes b first, then copies the input.
  two_tape_transducer shift_right()
  {
    return two_tape_transducer(ab(), ab(), 2, 0, make_state_set(2, {1}),
                               {{0, {}, {b}, 1},
                                {1, {a}, {a}, 1},
                                {1, {b}, {b}, 1}});
  }

  // Relates every input to both a^w and b^w.
  two_tape_transducer two_outputs()
  {
    return two_tape_transducer(
      ab(), ab(), 3, 0, make_state_set(3, {1, 2}),
      {{0, {a}, {a}, 1}, {0, {b}, {a}, 1}, {0, {a}, {b}, 2}, {0, {b}, {b}, 2},
       {1, {a}, {a}, 1}, {1, {b}, {a}, 1}, {2, {a}, {b}, 2}, {2, {b}, {b}, 2}},
      true);
  }

  // Outputs only finitely many letters.
  two_tape_transducer finite_output()
  {
    return two_tape_transducer(ab(), ab(), 1, 0, make_state_set(1, {0}),
                               {{0, {a}, {}, 0}, {0, {b}, {}, 0}});
  }

  two_tape_transducer no_finals(const two_tape_transducer& t)
  {
    return t.with_finals(state_set(t.size()));
  }
}

TEST(Relation, Membership)
{
  auto id = identity_transducer(ab());
  EXPECT_TRUE(relation_membership(id, {w("(ab)"), w("(ab)")}));
  EXPECT_FALSE(relation_membership(id, {w("(a)"), w("(b)")}));
  auto f = b_counter_transducer();
  EXPECT_TRUE(relation_membership(f, {w("(ab)"), w("(b)")}));
  EXPECT_FALSE(relation_membership(f, {w("(ab)"), w("(a)")}));
  EXPECT_TRUE(relation_membership(f, {w("ab(a)"), w("(a)")}));
  EXPECT_TRUE(relation_membership(doubling(), {w("ab(a)"), w("aabb(a)")}));
  EXPECT_TRUE(relation_membership(shift_right(), {w("(a)"), w("b(a)")}));
  EXPECT_FALSE(relation_membership(finite_output(), {w("(a)"), w("(a)")}));
  EXPECT_THROW(relation_membership(id, {w("(a)"), up_word({}, {2})}),
               input_error);
}

TEST(Relation, DomainAndImage)
{
  auto id = identity_transducer(ab());
  EXPECT_TRUE(equivalent(dom(id), everything()));
  EXPECT_TRUE(equivalent(im(id), everything()));
  auto f = b_counter_transducer();
  EXPECT_TRUE(equivalent(dom(f), everything()));
  EXPECT_TRUE(equivalent(im(f), union_of(only_a_omega(), only_b_omega())));
  EXPECT_TRUE(is_empty(dom(no_finals(f))));
  EXPECT_TRUE(is_empty(im(no_finals(f))));
  EXPECT_TRUE(is_empty(dom(finite_output())));
  EXPECT_TRUE(equivalent(im(shift_right()), starts_with_b()));
}

TEST(Evaluate, Examples)
{
  auto id = identity_transducer(ab());
  EXPECT_EQ(evaluate(id, w("ab(ba)")), w("ab(ba)"));
  auto f = b_counter_transducer();
  EXPECT_EQ(evaluate(f, w("(ab)")), w("(b)"));
  EXPECT_EQ(evaluate(f, w("ab(a)")), w("(a)"));
  EXPECT_EQ(evaluate(doubling(), w("ab(ba)")), w("aabb(bbaa)"));
  EXPECT_EQ(evaluate(shift_right(), w("(a)")), w("b(a)"));
}

TEST(Evaluate, Errors)
{
  EXPECT_THROW(evaluate(no_finals(identity_transducer(ab())), w("(a)")),
               domain_error);
  EXPECT_THROW(evaluate(finite_output(), w("(a)")), domain_error);
  EXPECT_THROW(evaluate(two_outputs(), w("(a)")), functionality_error);
}

TEST(Functionality, Synchronous)
{
  EXPECT_TRUE(functionality_check_sync(identity_transducer(ab())));
  EXPECT_TRUE(functionality_check_sync(b_counter_transducer()));
  EXPECT_FALSE(functionality_check_sync(two_outputs()));
  EXPECT_TRUE(functionality_check_sync(no_finals(two_outputs())));
  EXPECT_THROW(functionality_check_sync(doubling()), precondition_error);
  rng_type rng(51);
  for (int i = 0; i < 20; ++i)
    EXPECT_TRUE(functionality_check_sync(
      random_sync_functional(rng, ab(), ab(), 4)));
}

TEST(LetterNormalForm, KeepsRelation)
{
  for (const auto& t : {doubling(), shift_right()})
    {
      auto n = letter_normal_form(t);
      for (const auto& e : n.edges())
        {
          EXPECT_LE(e.input.size(), 1u);
          EXPECT_LE(e.output.size(), 1u);
        }
      for (const auto& x : lassos_up_to(ab(), 2, 2))
        EXPECT_EQ(evaluate(n, x), evaluate(t, x));
    }
}

TEST(Preimage, Examples)
{
  auto id = identity_transducer(ab());
  EXPECT_TRUE(equivalent(preimage_basic(id, {a}), starts_with_a()));
  EXPECT_TRUE(equivalent(preimage_basic(id, {}), everything()));
  auto f = b_counter_transducer();
  EXPECT_TRUE(equivalent(preimage_basic(f, {b}), infinitely_many_b()));
  EXPECT_TRUE(equivalent(preimage_basic(f, {a, a}), finitely_many_b()));
  EXPECT_TRUE(is_empty(preimage_basic(f, {a, b})));
  EXPECT_TRUE(equivalent(preimage_basic(shift_right(), {b, a}),
                         starts_with_a()));
  EXPECT_TRUE(equivalent(preimage_basic(doubling(), {a, a, b}),
                         preimage_basic(id, {a, b})));
}

TEST(Preimage, AgreesWithEvaluate)
{
  const lasso_corpus corpus(ab(), 3, 3);
  rng_type rng(52);
  for (int i = 0; i < 6; ++i)
    {
      auto t = random_sync_functional(rng, ab(), ab(), 4);
      auto domain = dom(t);
      for (const auto& u : words_up_to(ab(), 2))
        {
          auto p = preimage_basic(t, u);
          for (const auto& x : corpus.words)
            {
              bool expected = member(domain, x)
                && evaluate(t, x).take(u.size()) == u;
              ASSERT_EQ(member(p, x), expected)
                << "instance " << i << ", prefix " << ab().format(u);
            }
        }
    }
}

TEST(FiniteBehavior, PrefixRuns)
{
  auto id = identity_transducer(ab());
  auto r = prefix_runs(id, {a, b}, id.initial());
  EXPECT_TRUE(r.accepts({a, b}));
  EXPECT_FALSE(r.accepts({a}));
  EXPECT_FALSE(r.accepts({b, a}));

  auto s = prefix_runs(shift_right(), {b}, 1);
  EXPECT_TRUE(s.accepts({}));
  EXPECT_FALSE(s.accepts({a}));

  // The doubling transducer cannot stop halfway through a letter.
  EXPECT_FALSE(prefix_runs(doubling(), {a}, 0).accepts({a}));
  EXPECT_TRUE(prefix_runs(doubling(), {a, a}, 0).accepts({a}));

  auto f = b_counter_transducer();
  EXPECT_TRUE(prefix_runs(f, {b, b}, 1).accepts({a, b}));
  EXPECT_FALSE(prefix_runs(f, {b, b}, 1).accepts({b, a}));
}

TEST(FiniteBehavior, InputProjection)
{
  auto f = b_counter_transducer();
  auto fb = finite_behavior(f, 3);
  EXPECT_TRUE(fb.inputs.accepts({a}));
  EXPECT_TRUE(fb.inputs.accepts({b, a, a}));
  EXPECT_FALSE(fb.inputs.accepts({a, b}));
  EXPECT_FALSE(fb.inputs.accepts({}));
  EXPECT_EQ(fb.pairs.finals(), make_state_set(fb.pairs.size(), {3}));
}

TEST(Continuity, Identity)
{
  auto c = continuity_restriction(identity_transducer(ab()));
  EXPECT_TRUE(c.density_checked);
  EXPECT_TRUE(classify(c.g).is_pi2);
  EXPECT_TRUE(equivalent(closure(c.g), everything()));
  EXPECT_TRUE(is_empty(intersection(c.g, c.error_set)));
  EXPECT_TRUE(is_meager(c.error_set));
}

TEST(Continuity, BCounter)
{
  auto t = b_counter_transducer();
  continuity_options o;
  o.prefix_bound = 2;
  auto c = continuity_restriction(t, o);
  EXPECT_TRUE(classify(c.g).is_pi2);
  EXPECT_TRUE(equivalent(closure(c.g), everything()));
  EXPECT_TRUE(is_empty(intersection(c.g, c.error_set)));
  // f is continuous on the inputs with infinitely many b only.
  EXPECT_TRUE(included(c.g, infinitely_many_b()));
  EXPECT_FALSE(member(c.g, w("(a)")));
  EXPECT_EQ(c.per_n.size(), words_up_to(ab(), 2).size());
  for (const auto& p : c.per_n)
    {
      EXPECT_TRUE(classify(p.open).is_open);
      auto diff = union_of(intersection(p.preimage, complement(p.open)),
                           intersection(p.open, complement(p.preimage)));
      EXPECT_TRUE(included(diff, p.meager)) << ab().format(p.prefix);
      EXPECT_TRUE(is_empty(intersection(p.meager, c.g)));
    }
}

TEST(Continuity, Probe)
{
  auto t = b_counter_transducer();
  auto c = continuity_restriction(t);
  auto x = accepted_word(c.g);
  ASSERT_TRUE(x);
  auto r = restricted_continuity_probe(t, c.g, *x, 4, 12, 4);
  EXPECT_FALSE(r.violation);
  EXPECT_EQ(r.modulus.size(), 5u);
  EXPECT_THROW(restricted_continuity_probe(t, only_a_omega(), w("(b)"), 2, 4,
                                           2),
               precondition_error);
  EXPECT_GT(r.candidates, 0u);

  auto bad = restricted_continuity_probe(t, everything(), w("(ab)"), 4, 12, 4);
  ASSERT_TRUE(bad.violation);
  EXPECT_EQ(bad.violation->fx, w("(b)"));
  EXPECT_EQ(bad.violation->fy, w("(a)"));

  auto id = identity_transducer(ab());
  auto ok = restricted_continuity_probe(id, everything(), w("a(b)"), 3, 6, 3);
  EXPECT_FALSE(ok.violation);
  EXPECT_EQ(ok.modulus, (std::vector<std::size_t>{0, 1, 2, 3}));
}

TEST(Continuity, Cancellation)
{
  std::atomic<bool> stop{true};
  continuity_options o;
  o.cancel = &stop;
  EXPECT_THROW(continuity_restriction(b_counter_transducer(), o),
               cancelled_error);
}

TEST(Lassos, Enumeration)
{
  auto l = lassos_up_to(ab(), 0, 1);
  EXPECT_EQ(l, (std::vector<up_word>{w("(a)"), w("(b)")}));
  auto m = lassos_up_to(ab(), 2, 2);
  std::set<up_word> distinct(m.begin(), m.end());
  EXPECT_EQ(distinct.size(), m.size());
  EXPECT_EQ(lassos_up_to(ab(), 2, 2), m);
  EXPECT_EQ(m.size(), lasso_corpus(ab(), 2, 2).words.size());
}
