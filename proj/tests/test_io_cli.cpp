#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

#include <unistd.h>

#include "fixtures.hpp"
#include "obaire/cli.hpp"
#include "obaire/errors.hpp"
#include "obaire/io.hpp"

using namespace obaire;
using namespace fixtures;
namespace fs = std::filesystem;

namespace
{
  const char* fin_b_text = R"(# finitely many b
alphabet: a b
states: 2
initial: 0
acceptance: buchi
finals: 1
0 a 0
0 b 0
0 a 1
1 a 1
)";

  struct cli_result
  {
    int code;
    std::string out, err;
  };

  class Cli : public ::testing::Test
  {
  protected:
    fs::path dir;

    void SetUp() override
    {
      const auto* info = ::testing::UnitTest::GetInstance()->current_test_info();
      dir = fs::temp_directory_path()
        / (std::string("obaire_") + info->name() + "_"
           + std::to_string(::getpid()));
      fs::create_directories(dir);
    }

    void TearDown() override { fs::remove_all(dir); }

    std::string put(const std::string& name, const std::string& text)
    {
      auto p = (dir / name).string();
      write_file(p, text);
      return p;
    }

    std::string put(const std::string& name, const acceptor& a)
    {
      return put(name, emit_oaut(a));
    }

    static cli_result run(std::vector<std::string> args)
    {
      std::ostringstream out, err;
      int code = run_cli(args, out, err);
      return {code, out.str(), err.str()};
    }
  };
}

TEST(Oaut, RoundTrip)
{
  const std::vector<acceptor> fixtures = {
    starts_with_a(), finitely_many_b(), infinitely_many_a_dma(),
    finitely_many_b_dca(), neither_sigma2_nor_pi2(), empty_set()};
  for (const auto& a : fixtures)
    {
      auto text = emit_oaut(a);
      auto back = parse_oaut(text);
      EXPECT_EQ(emit_oaut(back), text);
      EXPECT_TRUE(equivalent(back, a));
    }
  rng_type rng(61);
  for (int i = 0; i < 30; ++i)
    {
      acceptor a = i % 2 ? acceptor(random_nba(rng, ab()))
                         : acceptor(random_dma(rng, ab()));
      auto text = emit_oaut(a);
      ASSERT_EQ(emit_oaut(parse_oaut(text)), text);
    }
}

TEST(Oaut, ParsesHandWritten)
{
  auto a = parse_oaut(fin_b_text);
  EXPECT_TRUE(equivalent(a, finitely_many_b()));
  auto m = parse_oaut("alphabet: a b\nstates: 2\ninitial: 0\n"
                      "acceptance: muller\ntable: {1} {0 1}\n"
                      "0 a 1\n0 b 0\n1 a 1\n1 b 0\n");
  ASSERT_TRUE(std::holds_alternative<muller_automaton>(m));
  EXPECT_TRUE(equivalent(m, infinitely_many_a()));
}

TEST(Oaut, ParseErrorsCarryPosition)
{
  auto line_of = [](const std::string& text) -> std::size_t {
    try
      {
        parse_oaut(text);
      }
    catch (const parse_error& e)
      {
        return e.line();
      }
    return 0;
  };
  EXPECT_EQ(line_of("alphabet: a b\nstates: x\n"), 2u);
  EXPECT_EQ(line_of("alphabet: a b\nstates: 2\ninitial: 0\n"
                    "acceptance: buchi\nfinals: 1\n0 c 1\n"),
            6u);
  EXPECT_EQ(line_of("alphabet: a b\nstates: 2\ninitial: 0\n"
                    "acceptance: rabin\n"),
            4u);
  EXPECT_NE(line_of("alphabet: a b\nstates: 2\ninitial: 0\n"
                    "acceptance: buchi\nfinals: 1\n0 a 7\n"),
            0u);
}

TEST(Otrans, RoundTrip)
{
  for (const auto& t : {identity_transducer(ab()), b_counter_transducer()})
    {
      auto text = emit_otrans(t);
      auto back = parse_otrans(text);
      EXPECT_EQ(emit_otrans(back), text);
      EXPECT_EQ(back.synchronous(), t.synchronous());
      for (const auto& x : lassos_up_to(ab(), 2, 2))
        EXPECT_EQ(evaluate(back, x), evaluate(t, x));
    }
  auto d = parse_otrans("input: a b\noutput: a b\nstates: 1\ninitial: 0\n"
                        "finals: 0\nsynchronous: no\n0 a|aa 0\n0 b|- 0\n"
                        "0 b|b 0\n");
  EXPECT_FALSE(d.synchronous());
  EXPECT_TRUE(relation_membership(d, {w("b(a)"), w("(a)")}));
  EXPECT_THROW(parse_otrans("input: a b\noutput: a b\nstates: 1\n"
                            "initial: 0\nfinals: 0\nsynchronous: yes\n"
                            "0 a|aa 0\n"),
               input_error);
}

TEST(Hoa, RoundTrip)
{
  for (const auto& a : {starts_with_a(), finitely_many_b(), everything()})
    {
      auto back = parse_hoa(emit_hoa(a));
      EXPECT_EQ(back.alphabet().size(), a.alphabet().size());
      EXPECT_TRUE(equivalent(back, a));
    }
  auto abc = alphabet::of_chars("abc");
  auto t = make_successor_table(2, 3);
  add_edge(t, 0, 2, 1);
  add_edge(t, 1, 0, 1);
  add_edge(t, 1, 1, 0);
  buchi_automaton c(abc, std::move(t), 0, make_state_set(2, {1}));
  EXPECT_TRUE(equivalent(parse_hoa(emit_hoa(c)), c));
  EXPECT_THROW(parse_hoa("HOA: v1\nStates: 1\n--BODY--\n"), input_error);
}

TEST_F(Cli, MemberAndEmpty)
{
  auto f = put("infa.oaut", infinitely_many_a());
  auto r = run({"member", f, "--word", "(ab)"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "true\n");
  EXPECT_EQ(run({"member", f, "-w", "a(b)"}).out, "false\n");
  auto e = run({"empty", f});
  EXPECT_EQ(e.code, 0);
  EXPECT_NE(e.out.find("empty: false"), std::string::npos);
}

TEST_F(Cli, MeagerAndClassify)
{
  auto f = put("finb.oaut", fin_b_text);
  auto r = run({"meager", f});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "meager: true\n");
  auto c = run({"comeager", put("infa.oaut", infinitely_many_a())});
  EXPECT_EQ(c.out, "comeager: true\n");
  auto k = run({"classify", f});
  EXPECT_EQ(k.out, "open: false\nclosed: false\nsigma2: true\npi2: false\n");
}

TEST_F(Cli, UsageErrors)
{
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"member", put("x.oaut", fin_b_text)}).code, 2);
  EXPECT_EQ(run({"member", (dir / "missing.oaut").string(), "-w", "(a)"}).code,
            2);
  auto bad = run({"meager", put("bad.oaut", "alphabet: a b\nstates: x\n")});
  EXPECT_EQ(bad.code, 2);
  EXPECT_NE(bad.err.find("line 2"), std::string::npos);
  EXPECT_EQ(run({"--bounds", "3", "oracle-compare", put("a.oaut", fin_b_text),
                 put("b.oaut", fin_b_text)})
              .code,
            2);
}

TEST_F(Cli, CapacityExit)
{
  auto f = put("finb.oaut", fin_b_text);
  EXPECT_EQ(run({"--max-states", "2", "determinize", f}).code, 3);
  EXPECT_EQ(run({"determinize", f}).code, 0);
}

TEST_F(Cli, CheckBaire)
{
  auto a = put("a.oaut", fin_b_text);
  auto dir_b = (dir / "out").string();
  ASSERT_EQ(run({"baire", a, "--out-dir", dir_b}).code, 0);
  auto good = run({"check-baire", a, dir_b + "/B.oaut", dir_b + "/C.oaut"});
  EXPECT_EQ(good.code, 0) << good.out;
  auto corrupted = put("b.oaut", everything());
  auto bad = run({"check-baire", a, corrupted, dir_b + "/C.oaut"});
  EXPECT_EQ(bad.code, 1);
  EXPECT_NE(bad.out.find("\"verdict\":\"fail\""), std::string::npos);
}

TEST_F(Cli, OracleCompare)
{
  auto a = put("a.oaut", starts_with_a());
  auto b = put("b.oaut", starts_with_b());
  EXPECT_EQ(run({"oracle-compare", a, a}).code, 0);
  auto r = run({"--bounds", "2,2", "oracle-compare", a, b});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("\"verdict\":\"fail\""), std::string::npos);
}

TEST_F(Cli, Transducers)
{
  auto t = put("f.otrans", emit_otrans(b_counter_transducer()));
  auto e = run({"eval", t, "-w", "(ab)"});
  EXPECT_EQ(e.code, 0);
  EXPECT_EQ(e.out, "(b)\n");
  auto g = (dir / "g.oaut").string();
  ASSERT_EQ(run({"restrict", t, "-o", g}).code, 0);
  auto pt = accepted_word(to_buchi(parse_oaut(read_file(g))));
  ASSERT_TRUE(pt);
  auto ok = run({"probe", t, g, "-w", format_up_word(*pt, ab())});
  EXPECT_EQ(ok.code, 0) << ok.out;
  auto all = put("all.oaut", everything());
  auto bad = run({"probe", t, all, "-w", "(ab)"});
  EXPECT_EQ(bad.code, 1);
  EXPECT_NE(bad.out.find("\"verdict\":\"fail\""), std::string::npos);
  EXPECT_EQ(run({"preimage", t, "-p", "b"}).code, 0);
  auto nf = put("nf.otrans", "input: a b\noutput: a b\nstates: 3\ninitial: 0\n"
                             "finals: 1 2\nsynchronous: yes\n0 a|a 1\n"
                             "0 a|b 2\n1 a|a 1\n2 a|b 2\n");
  EXPECT_EQ(run({"eval", nf, "-w", "(a)"}).code, 1);
}

TEST_F(Cli, GenCorpusIsDeterministic)
{
  auto one = run({"--seed", "9", "gen-corpus", "--count", "4"});
  auto two = run({"--seed", "9", "gen-corpus", "--count", "4"});
  auto other = run({"--seed", "10", "gen-corpus", "--count", "4"});
  EXPECT_EQ(one.code, 0);
  EXPECT_EQ(one.out, two.out);
  EXPECT_NE(one.out, other.out);
  auto d = (dir / "corpus").string();
  ASSERT_EQ(run({"gen-corpus", "--kind", "transducer", "--count", "3",
                 "--out-dir", d})
              .code,
            0);
  EXPECT_TRUE(fs::exists(d + "/transducer_002.otrans"));
}
