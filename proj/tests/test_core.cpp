#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "obaire/errors.hpp"

using namespace obaire;
using namespace fixtures;

TEST(Words, CanonicalForm)
{
  EXPECT_EQ(w("ab(ab)"), w("(ab)"));
  EXPECT_EQ(w("(abab)"), w("(ab)"));
  EXPECT_EQ(w("a(a)"), w("(a)"));
  EXPECT_EQ(format_up_word(w("abb(ab)"), ab()), "ab(ba)");
  EXPECT_EQ(w("ab(ba)").take(5), (word{0, 1, 1, 0, 1}));
}

TEST(Words, ParseErrors)
{
  EXPECT_THROW(w("ab"), input_error);
  EXPECT_THROW(w("a()"), input_error);
  EXPECT_THROW(w("(c)"), input_error);
}

TEST(Words, PrefixDistance)
{
  EXPECT_TRUE(prefix_distance(w("(ab)"), w("(ab)")).is_zero());
  EXPECT_EQ(prefix_distance(w("(a)"), w("(b)")).exponent, 0u);
  EXPECT_DOUBLE_EQ(prefix_distance(w("(a)"), w("(b)")).to_double(), 1.0);
  EXPECT_EQ(prefix_distance(w("ab(a)"), w("ab(b)")).exponent, 2u);
  EXPECT_EQ(common_prefix_length(w("(ab)"), w("ababab(b)")), 6u);
}

TEST(Membership, Examples)
{
  EXPECT_TRUE(member(everything(), w("(ab)")));
  EXPECT_FALSE(member(starts_with_a(), w("(b)")));
  EXPECT_FALSE(member(infinitely_many_a(), w("a(b)")));
  EXPECT_TRUE(member(infinitely_many_a(), w("(ab)")));
  EXPECT_THROW(member(everything(), up_word({}, {2})), input_error);
}

TEST(Membership, MullerTable)
{
  auto m = infinitely_many_a_dma();
  EXPECT_TRUE(member(m, w("(ab)")));
  EXPECT_TRUE(member(m, w("b(a)")));
  EXPECT_FALSE(member(m, w("a(b)")));
  EXPECT_EQ(infinity_set(m, w("(ab)")), make_state_set(2, {0, 1}));
}

TEST(Membership, PriorityForm)
{
  // Same structure as infinitely_many_a_dma: q_a has priority 0.
  auto m = muller_automaton::with_priorities(ab(), {{1, 0}, {1, 0}}, 0, {1, 0});
  EXPECT_TRUE(m.has_priorities());
  EXPECT_TRUE(member(m, w("(ab)")));
  EXPECT_FALSE(member(m, w("(b)")));
  EXPECT_THROW(m.table(), precondition_error);
  EXPECT_EQ(designated_loops(m), infinitely_many_a_dma().table());
}

TEST(Membership, NondeterministicCobuchi)
{
  // Guesses the last b: finitely many b.
  auto a = nba(2, 0, {0}, {{0, 'a', 0}, {0, 'b', 0}, {0, 'a', 1}, {1, 'a', 1}},
               acceptance_mode::cobuchi);
  EXPECT_TRUE(member(a, w("bb(a)")));
  EXPECT_FALSE(member(a, w("(ab)")));
  EXPECT_FALSE(disagreement(a, finitely_many_b()));
}

TEST(Emptiness, Examples)
{
  EXPECT_TRUE(is_empty(nba(1, 0, {}, {{0, 'a', 0}})));
  EXPECT_FALSE(is_empty(everything()));
  EXPECT_TRUE(is_empty(nba(2, 0, {1}, {{0, 'a', 0}, {1, 'b', 1}})));
}

TEST(Emptiness, WitnessIsAccepted)
{
  rng_type rng(11);
  for (int i = 0; i < 100; ++i)
    {
      auto a = random_nba(rng, ab());
      auto x = accepted_word(a);
      EXPECT_EQ(x.has_value(), !is_empty(a));
      if (x)
        EXPECT_TRUE(naive_member(a, *x));
    }
  auto m = infinitely_many_a_dma();
  ASSERT_TRUE(accepted_word(m));
  EXPECT_TRUE(member(m, *accepted_word(m)));
  EXPECT_TRUE(is_empty(m.with_table({})));
}

TEST(BooleanOperations, Examples)
{
  EXPECT_TRUE(member(union_of(starts_with_a(), starts_with_b()), w("(b)")));
  auto both = intersection(infinitely_many_a(), infinitely_many_b());
  EXPECT_TRUE(member(both, w("(ab)")));
  EXPECT_FALSE(member(both, w("a(b)")));
}

TEST(BooleanOperations, RandomAgainstOracle)
{
  rng_type rng(12);
  random_shape small{3, 0.4, 0.4};
  const lasso_corpus corpus(ab(), 3, 3);
  for (int i = 0; i < 40; ++i)
    {
      auto a = random_nba(rng, ab(), small);
      auto b = random_nba(rng, ab(), small);
      auto u = union_of(a, b);
      auto n = intersection(a, b);
      for (const auto& x : corpus.words)
        {
          const bool in_a = naive_member(a, x), in_b = naive_member(b, x);
          ASSERT_EQ(naive_member(u, x), in_a || in_b);
          ASSERT_EQ(naive_member(n, x), in_a && in_b);
        }
    }
}

TEST(Concatenation, Examples)
{
  auto l = only_b_omega();
  EXPECT_FALSE(disagreement(concat_left(epsilon_language(ab()), l), l));
  EXPECT_TRUE(is_empty(concat_left(empty_language(ab()), l)));
  auto two = concat_left(finite_language(ab(), {{0}, {0, 0}}), l);
  for (const auto& x : lasso_corpus(ab(), 3, 3).words)
    EXPECT_EQ(naive_member(two, x), x == w("a(b)") || x == w("aa(b)"));
}

TEST(Trim, Examples)
{
  auto t = starts_with_a();
  EXPECT_EQ(trim(t).size(), t.size());
  auto extra = nba(3, 0, {1}, {{0, 'a', 1}, {1, 'a', 1}, {1, 'b', 1},
                              {2, 'b', 1}});
  EXPECT_EQ(trim(extra).size(), 2u);
  EXPECT_FALSE(disagreement(trim(extra), extra));
  rng_type rng(13);
  for (int i = 0; i < 30; ++i)
    {
      auto a = random_nba(rng, ab(), {4, 0.35, 0.4});
      EXPECT_FALSE(disagreement(trim(a, true), a));
    }
}

TEST(Automata, ConstructionErrors)
{
  EXPECT_THROW(nba(2, 3, {}, {}), input_error);
  EXPECT_THROW(muller_automaton(ab(), {{0}}, 0, {}), input_error);
  EXPECT_THROW(muller_automaton(ab(), {{0, 1}}, 0, {}), input_error);
}

TEST(Automata, CylinderAndLoops)
{
  auto c = cylinder_automaton(ab(), {0, 1});
  EXPECT_TRUE(member(c, w("ab(b)")));
  EXPECT_FALSE(member(c, w("(a)")));
  auto loops = reachable_loops(infinitely_many_a_dma());
  EXPECT_EQ(loops.size(), 3u);
  EXPECT_TRUE(is_loop(infinitely_many_a_dma(), make_state_set(2, {0, 1})));
}

TEST(NaiveOracle, AgreesWithMembership)
{
  rng_type rng(14);
  for (int i = 0; i < 500; ++i)
    {
      acceptor a = i % 2 ? acceptor(random_nba(rng, ab()))
                         : acceptor(random_dma(rng, ab()));
      auto x = random_lasso(rng, ab(), 3, 3);
      ASSERT_EQ(member(a, x), naive_member(a, x));
    }
}
