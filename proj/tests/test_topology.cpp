#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "obaire/determinize.hpp"
#include "obaire/errors.hpp"
#include "obaire/topology.hpp"

using namespace obaire;
using namespace fixtures;

namespace
{
  bool universal(const buchi_automaton& a)
  {
    return equivalent(a, everything());
  }

  void expect_class(const acceptor& a, bool open, bool closed, bool sigma2,
                    bool pi2)
  {
    auto r = classify(a);
    EXPECT_EQ(r.is_open, open);
    EXPECT_EQ(r.is_closed, closed);
    EXPECT_EQ(r.is_sigma2, sigma2);
    EXPECT_EQ(r.is_pi2, pi2);
  }
}

TEST(Closure, Examples)
{
  EXPECT_TRUE(universal(closure(infinitely_many_a())));
  EXPECT_TRUE(equivalent(closure(only_a_omega()), only_a_omega()));
  EXPECT_TRUE(equivalent(closure(starts_with_a()), starts_with_a()));
  EXPECT_TRUE(universal(closure(acceptor(finitely_many_b_dca()))));
  EXPECT_TRUE(universal(closure(acceptor(infinitely_many_a_dma()))));
}

TEST(Closure, ContainsLanguageAndIsClosed)
{
  rng_type rng(31);
  for (int i = 0; i < 40; ++i)
    {
      acceptor a = i % 2 ? acceptor(random_nba(rng, ab()))
                         : acceptor(random_dma(rng, ab()));
      auto c = closure(a);
      ASSERT_TRUE(included(a, acceptor(c)));
      ASSERT_TRUE(classify(acceptor(c)).is_closed);
    }
}

TEST(Interior, Examples)
{
  EXPECT_TRUE(is_empty(interior(only_a_omega())));
  EXPECT_TRUE(is_empty(interior(finitely_many_b())));
  EXPECT_TRUE(equivalent(interior(some_b()), some_b()));
  EXPECT_TRUE(equivalent(interior(a_omega_or_starts_with_b()),
                         starts_with_b()));
}

TEST(Interior, InsideLanguageAndOpen)
{
  rng_type rng(32);
  for (int i = 0; i < 40; ++i)
    {
      auto a = random_nba(rng, ab());
      auto o = interior(a);
      ASSERT_TRUE(included(acceptor(o), acceptor(a)));
      ASSERT_TRUE(classify(acceptor(o)).is_open);
    }
}

TEST(WDelta, Examples)
{
  EXPECT_TRUE(universal(w_delta(all_words(ab()))));
  EXPECT_TRUE(is_empty(w_delta(empty_language(ab()))));
  // a*: a single state looping on a.
  auto t = make_successor_table(1, 2);
  add_edge(t, 0, 0, 0);
  finite_automaton a_star(ab(), std::move(t), 0, make_state_set(1, {0}));
  EXPECT_FALSE(disagreement(w_delta(a_star), only_a_omega()));
}

TEST(Classify, Fixtures)
{
  expect_class(starts_with_a(), true, true, true, true);
  expect_class(only_a_omega(), false, true, true, true);
  expect_class(some_b(), true, false, true, true);
  expect_class(infinitely_many_a(), false, false, false, true);
  expect_class(finitely_many_a(), false, false, true, false);
  expect_class(everything(), true, true, true, true);
  expect_class(empty_set(), true, true, true, true);
  expect_class(neither_sigma2_nor_pi2(), false, false, false, false);
  expect_class(infinitely_many_a_dma(), false, false, false, true);
  expect_class(finitely_many_b_dca(), false, false, true, false);
}

TEST(Classify, PriorityAndTableFormsAgree)
{
  rng_type rng(33);
  for (int i = 0; i < 80; ++i)
    {
      auto m = determinize(random_nba(rng, ab()));
      auto loops = designated_loops(m);
      if (loops.size() > 500)
        continue;
      auto explicit_form = m.with_table(loops);
      auto r1 = classify(m), r2 = classify(explicit_form);
      ASSERT_EQ(r1.is_open, r2.is_open);
      ASSERT_EQ(r1.is_closed, r2.is_closed);
      ASSERT_EQ(r1.is_sigma2, r2.is_sigma2);
      ASSERT_EQ(r1.is_pi2, r2.is_pi2);
    }
}

TEST(Classify, ComplementSwapsLevels)
{
  rng_type rng(34);
  for (int i = 0; i < 40; ++i)
    {
      auto m = random_dma(rng, ab());
      auto r = classify(m), c = classify(complement(m));
      ASSERT_EQ(r.is_open, c.is_closed);
      ASSERT_EQ(r.is_sigma2, c.is_pi2);
    }
}

TEST(ToDba, Examples)
{
  auto d = to_dba(starts_with_a());
  EXPECT_TRUE(d.is_deterministic());
  EXPECT_TRUE(equivalent(d, starts_with_a()));
  auto inf_a = to_dba(infinitely_many_a_dma());
  EXPECT_TRUE(inf_a.is_deterministic());
  EXPECT_TRUE(inf_a.is_complete());
  EXPECT_FALSE(disagreement(inf_a, infinitely_many_a()));
  EXPECT_TRUE(equivalent(to_dba(only_a_omega()), only_a_omega()));
  EXPECT_THROW(to_dba(finitely_many_b()), precondition_error);
}

TEST(ToDba, RandomPi2)
{
  rng_type rng(35);
  int converted = 0;
  for (int i = 0; i < 80; ++i)
    {
      auto m = random_dma(rng, ab());
      if (!classify(m).is_pi2)
        continue;
      auto d = to_dba(m);
      ASSERT_TRUE(d.is_deterministic());
      ASSERT_FALSE(disagreement(d, m));
      ++converted;
    }
  EXPECT_GT(converted, 10);
}

TEST(Density, Examples)
{
  EXPECT_TRUE(is_dense(infinitely_many_a()));
  EXPECT_TRUE(is_dense(finitely_many_b()));
  EXPECT_FALSE(is_dense(starts_with_a()));
  EXPECT_FALSE(is_dense(empty_set()));
}
