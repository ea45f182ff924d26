#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "obaire/baire.hpp"
#include "obaire/errors.hpp"
#include "obaire/topology.hpp"

using namespace obaire;
using namespace fixtures;

namespace
{
  bool same(const buchi_automaton& x, const acceptor& y)
  {
    return equivalent(acceptor(x), y);
  }

  // Starts with a, or finitely many b. State 1 cannot reach the final state.
  buchi_automaton a_or_fin_b_dca()
  {
    return nba(4, 0, {3},
               {{0, 'a', 1}, {0, 'b', 2}, {1, 'a', 1}, {1, 'b', 1},
                {2, 'a', 2}, {2, 'b', 3}, {3, 'a', 2}, {3, 'b', 3}},
               acceptance_mode::cobuchi);
  }

  buchi_automaton random_dca(rng_type& rng, std::size_t n)
  {
    std::uniform_int_distribution<state> to(0, static_cast<state>(n - 1));
    std::bernoulli_distribution fin(0.35);
    auto t = make_successor_table(n, 2);
    state_set f(n);
    for (state q = 0; q < n; ++q)
      {
        add_edge(t, q, 0, to(rng));
        add_edge(t, q, 1, to(rng));
        if (fin(rng))
          f.set(q);
      }
    return buchi_automaton(ab(), std::move(t), 0, std::move(f),
                           acceptance_mode::cobuchi);
  }

  void expect_valid(const baire_decomposition& d)
  {
    auto r = check_baire_triple(d.source, d.open_part, d.meager_part);
    EXPECT_TRUE(r.pass) << r.to_json(ab());
    EXPECT_FALSE(r.partial);
    EXPECT_TRUE(classify(d.open_part).is_open);
  }
}

TEST(AutomaticBaire, Universal)
{
  auto d = automatic_baire(everything());
  EXPECT_TRUE(same(d.open_part, everything()));
  EXPECT_TRUE(is_empty(d.meager_part.automaton));
  EXPECT_EQ(d.case_trace, std::vector<std::string>{"open"});
}

TEST(AutomaticBaire, SingleWord)
{
  auto d = automatic_baire(only_a_omega());
  EXPECT_TRUE(is_empty(d.open_part));
  EXPECT_TRUE(same(d.meager_part.automaton, only_a_omega()));
  EXPECT_EQ(d.case_trace, std::vector<std::string>{"closed"});
  expect_valid(d);
}

TEST(AutomaticBaire, FinitelyManyB)
{
  auto d = automatic_baire(finitely_many_b());
  EXPECT_TRUE(is_empty(d.open_part));
  EXPECT_TRUE(same(d.meager_part.automaton, finitely_many_b()));
  for (const auto& c : d.meager_part.certificate)
    if (auto f = std::get_if<cobuchi_family>(&c))
      for (unsigned n = 0; n <= 3; ++n)
        {
          auto level = level_automaton(*f, n);
          EXPECT_TRUE(classify(level).is_closed);
          EXPECT_TRUE(is_empty(interior(level)));
        }
  expect_valid(d);
}

TEST(AutomaticBaire, MullerCase)
{
  auto d = automatic_baire(neither_sigma2_nor_pi2());
  ASSERT_FALSE(d.case_trace.empty());
  EXPECT_EQ(d.case_trace.front(), "muller");
  // b.fin(a) is meager, a.inf(b) is comeager inside a.S^w.
  EXPECT_TRUE(same(d.open_part, starts_with_a()));
  expect_valid(d);
}

TEST(AutomaticBaire, RandomCorpus)
{
  rng_type rng(41);
  for (int i = 0; i < 60; ++i)
    {
      acceptor a = i % 2 ? acceptor(random_nba(rng, ab()))
                         : acceptor(random_dma(rng, ab()));
      auto d = automatic_baire(a);
      auto r = check_baire_triple(a, d.open_part, d.meager_part);
      ASSERT_TRUE(r.pass) << "instance " << i << ": " << r.to_json(ab());
      ASSERT_TRUE(classify(d.open_part).is_open);
    }
}

TEST(BaireSigma2, Examples)
{
  auto all = nba(1, 0, {}, {{0, 'a', 0}, {0, 'b', 0}}, acceptance_mode::cobuchi);
  auto d = baire_sigma2(all);
  EXPECT_TRUE(same(d.open_part, everything()));
  EXPECT_TRUE(is_empty(d.meager_part.automaton));

  auto f = baire_sigma2(finitely_many_b_dca());
  EXPECT_TRUE(is_empty(f.open_part));
  EXPECT_TRUE(same(f.meager_part.automaton, finitely_many_b()));

  auto m = baire_sigma2(a_or_fin_b_dca());
  EXPECT_TRUE(same(m.open_part, starts_with_a()));
  expect_valid(m);

  EXPECT_THROW(baire_sigma2(finitely_many_b()), precondition_error);
}

TEST(BaireSigma2, RandomCobuchi)
{
  rng_type rng(42);
  for (int i = 0; i < 60; ++i)
    {
      auto dca = random_dca(rng, 1 + i % 5);
      auto d = baire_sigma2(dca);
      auto r = check_baire_triple(dca, d.open_part, d.meager_part);
      ASSERT_TRUE(r.pass) << "instance " << i << ": " << r.to_json(ab());
    }
}

TEST(BaireComplement, Examples)
{
  auto u = baire_complement(automatic_baire(everything()));
  EXPECT_TRUE(is_empty(u.open_part));
  EXPECT_TRUE(is_empty(u.meager_part.automaton));

  auto s = baire_complement(automatic_baire(only_a_omega()));
  EXPECT_TRUE(same(s.open_part, everything()));
  EXPECT_TRUE(member(s.meager_part.automaton, w("(a)")));
  EXPECT_EQ(s.case_trace.back(), "complement");
  expect_valid(s);
}

TEST(BaireComplement, DoubleComplementOnCorpus)
{
  rng_type rng(43);
  for (int i = 0; i < 30; ++i)
    {
      auto a = random_nba(rng, ab());
      auto d = baire_complement(baire_complement(automatic_baire(a)));
      auto r = check_baire_triple(a, d.open_part, d.meager_part);
      ASSERT_TRUE(r.pass) << "instance " << i << ": " << r.to_json(ab());
    }
}

TEST(BaireUnion, Examples)
{
  auto da = automatic_baire(only_a_omega());
  auto db = automatic_baire(only_b_omega());
  auto u = baire_union({da, db});
  EXPECT_TRUE(is_empty(u.open_part));
  EXPECT_TRUE(same(u.meager_part.automaton,
                   union_of(only_a_omega(), only_b_omega())));
  expect_valid(u);

  auto e = baire_union({automatic_baire(starts_with_a()),
                        automatic_baire(empty_set())});
  EXPECT_TRUE(same(e.open_part, starts_with_a()));

  auto other = automatic_baire(universal_automaton(alphabet::of_chars("abc")));
  EXPECT_THROW(baire_union({da, other}), input_error);
}

TEST(BaireUnion, RandomPairs)
{
  rng_type rng(44);
  for (int i = 0; i < 30; ++i)
    {
      auto a = random_nba(rng, ab()), b = random_nba(rng, ab());
      auto u = baire_union({automatic_baire(a), automatic_baire(b)});
      auto r = check_baire_triple(union_of(a, b), u.open_part, u.meager_part);
      ASSERT_TRUE(r.pass) << "instance " << i << ": " << r.to_json(ab());
    }
}

TEST(Meagerness, Examples)
{
  EXPECT_TRUE(is_meager(empty_set()));
  EXPECT_FALSE(is_meager(everything()));
  EXPECT_TRUE(is_meager(finitely_many_b()));
  EXPECT_FALSE(is_meager(infinitely_many_a()));
  EXPECT_TRUE(is_meager(finitely_many_b_dca()));
  EXPECT_FALSE(is_meager(infinitely_many_a_dma()));

  EXPECT_TRUE(is_comeager(everything()));
  EXPECT_TRUE(is_comeager(infinitely_many_a()));
  EXPECT_FALSE(is_comeager(starts_with_a()));
  EXPECT_FALSE(is_comeager(finitely_many_b()));
}

TEST(Meagerness, WitnessLiesInOpenPart)
{
  rng_type rng(45);
  for (int i = 0; i < 60; ++i)
    {
      auto a = random_nba(rng, ab());
      auto m = meager_check(a);
      ASSERT_EQ(m.witness.has_value(), !m.meager);
      if (m.witness)
        ASSERT_TRUE(member(automatic_baire(a).open_part, *m.witness));
    }
}

TEST(Meagerness, AntitoneUnderInclusion)
{
  rng_type rng(46);
  random_shape small{3, 0.4, 0.4};
  for (int i = 0; i < 60; ++i)
    {
      auto a = random_nba(rng, ab(), small), b = random_nba(rng, ab(), small);
      auto both = intersection(a, b);
      if (is_meager(a))
        ASSERT_TRUE(is_meager(both));
    }
}

TEST(CheckTriple, RejectsBadTriples)
{
  // B = S^w for the empty language: the difference is not covered.
  auto r = check_baire_triple(empty_set(), everything(), empty_set());
  EXPECT_FALSE(r.pass);
  EXPECT_FALSE(r.counterexamples.empty());
  EXPECT_FALSE(r.partial);

  // Without a certificate a nonempty C cannot be shown meager.
  auto bare = check_baire_triple(only_a_omega(), empty_set(), only_a_omega());
  EXPECT_TRUE(bare.pass);
  EXPECT_TRUE(bare.partial);

  auto ok = check_baire_triple(empty_set(), empty_set(), empty_set());
  EXPECT_TRUE(ok.pass);

  // A covering set that is not meager is caught by the certificate check.
  auto d = automatic_baire(only_a_omega());
  d.meager_part.certificate.push_back(closed_piece{starts_with_a()});
  EXPECT_FALSE(check_baire_triple(only_a_omega(), d.open_part,
                                  d.meager_part).pass);
}

TEST(CheckTriple, VerifyDetectsTampering)
{
  auto d = automatic_baire(finitely_many_b());
  d.open_part = everything();
  EXPECT_THROW(verify_decomposition(d), construction_error);
}
