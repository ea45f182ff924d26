#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "obaire/determinize.hpp"
#include "obaire/errors.hpp"

using namespace obaire;
using namespace fixtures;

TEST(Determinize, DeterministicInput)
{
  auto m = determinize(starts_with_a());
  EXPECT_FALSE(disagreement(m, starts_with_a()));
}

TEST(Determinize, GuessTheLastB)
{
  auto m = determinize(finitely_many_b());
  EXPECT_FALSE(member(m, w("(ab)")));
  EXPECT_FALSE(member(m, w("a(b)")));
  EXPECT_TRUE(member(m, w("ab(a)")));
  EXPECT_FALSE(disagreement(m, finitely_many_b()));
}

TEST(Determinize, ResultIsCompleteAndDeterministic)
{
  auto m = determinize(infinitely_many_a_nd());
  for (state q = 0; q < m.size(); ++q)
    ASSERT_EQ(m.transitions()[q].size(), ab().size());
  EXPECT_FALSE(disagreement(m, infinitely_many_a()));
}

TEST(Determinize, RandomAgainstOracle)
{
  rng_type rng(21);
  for (int i = 0; i < 150; ++i)
    {
      auto a = random_nba(rng, ab(), {4, 0.35, 0.4});
      auto d = disagreement(determinize(a), a);
      ASSERT_FALSE(d) << "instance " << i << " on " << format_up_word(*d, ab());
    }
}

TEST(Determinize, CapacityError)
{
  limits lim;
  lim.max_states = 2;
  auto a = nba(3, 0, {2}, {{0, 'a', 0}, {0, 'b', 0}, {0, 'a', 1}, {1, 'b', 2},
                           {2, 'a', 2}, {2, 'b', 0}});
  EXPECT_THROW(determinize(a, lim), capacity_error);
}

TEST(MullerToBuchi, Examples)
{
  auto all = muller_automaton(ab(), {{0, 0}}, 0, {make_state_set(1, {0})});
  EXPECT_FALSE(disagreement(muller_to_buchi(all), everything()));
  auto m = infinitely_many_a_dma();
  auto b = muller_to_buchi(m);
  EXPECT_TRUE(member(b, w("(ab)")));
  EXPECT_FALSE(member(b, w("(b)")));
  EXPECT_FALSE(disagreement(determinize(b), m));
}

TEST(MullerToBuchi, RandomTables)
{
  rng_type rng(22);
  for (int i = 0; i < 100; ++i)
    {
      auto m = random_dma(rng, ab());
      ASSERT_FALSE(disagreement(muller_to_buchi(m), m));
    }
}

TEST(MullerToBuchi, PriorityForm)
{
  rng_type rng(23);
  for (int i = 0; i < 60; ++i)
    {
      auto m = determinize(random_nba(rng, ab()));
      ASSERT_TRUE(m.has_priorities());
      ASSERT_FALSE(disagreement(muller_to_buchi(m), m));
    }
}

TEST(Complement, Examples)
{
  auto c = complement(infinitely_many_a());
  EXPECT_TRUE(member(c, w("a(b)")));
  EXPECT_FALSE(member(c, w("(ab)")));
  rng_type rng(24);
  for (int i = 0; i < 60; ++i)
    {
      auto a = random_nba(rng, ab(), {3, 0.4, 0.4});
      auto c1 = complement(a);
      ASSERT_TRUE(is_empty(intersection(a, c1)));
      ASSERT_FALSE(disagreement(complement(c1), a));
      for (const auto& x : lasso_corpus(ab(), 2, 2).words)
        ASSERT_NE(naive_member(a, x), naive_member(c1, x));
    }
}

TEST(Complement, MullerBothForms)
{
  rng_type rng(25);
  for (int i = 0; i < 60; ++i)
    {
      muller_automaton m = i % 2 ? random_dma(rng, ab())
                                 : determinize(random_nba(rng, ab()));
      auto c = complement(m);
      for (const auto& x : lasso_corpus(ab(), 3, 3).words)
        ASSERT_NE(naive_member(m, x), naive_member(c, x));
    }
}

TEST(Complement, CobuchiBreakpoint)
{
  rng_type rng(26);
  for (int i = 0; i < 100; ++i)
    {
      auto b = random_nba(rng, ab());
      buchi_automaton a(ab(), b.transitions(), b.initial(), b.finals(),
                        acceptance_mode::cobuchi);
      auto c = cobuchi_complement(a);
      ASSERT_TRUE(c.is_deterministic());
      for (const auto& x : lasso_corpus(ab(), 3, 3).words)
        ASSERT_NE(naive_member(a, x), naive_member(c, x));
    }
  EXPECT_THROW(cobuchi_complement(everything()), precondition_error);
}

TEST(Equivalence, Examples)
{
  EXPECT_TRUE(equivalent(starts_with_a(), starts_with_a()));
  EXPECT_FALSE(equivalent(starts_with_a(), starts_with_b()));
  ASSERT_FALSE(disagreement(infinitely_many_a(), infinitely_many_a_nd()));
  EXPECT_TRUE(equivalent(infinitely_many_a(), infinitely_many_a_nd()));
  EXPECT_TRUE(included(only_a_omega(), infinitely_many_a()));
  EXPECT_FALSE(included(infinitely_many_a(), only_a_omega()));
  EXPECT_TRUE(equivalent(acceptor(infinitely_many_a_dma()),
                         acceptor(infinitely_many_a())));
}

TEST(Equivalence, AlphabetMismatch)
{
  EXPECT_THROW(equivalent(everything(),
                          universal_automaton(alphabet::of_chars("abc"))),
               input_error);
}
