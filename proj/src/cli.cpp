#include "obaire/cli.hpp"

#include <filesystem>
#include <functional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "obaire/baire.hpp"
#include "obaire/errors.hpp"
#include "obaire/harness.hpp"
#include "obaire/io.hpp"
#include "obaire/topology.hpp"

namespace obaire
{
  namespace
  {
    struct settings
    {
      std::size_t max_states = limits{}.max_states;
      std::string bounds = "3,3";
      std::uint64_t seed = 1;
      std::string output;
      std::string format = "oaut";

      limits lim() const
      {
        limits l;
        l.max_states = max_states;
        return l;
      }

      std::pair<std::size_t, std::size_t> bound_pair() const
      {
        auto comma = bounds.find(',');
        try
          {
            if (comma == std::string::npos)
              throw std::invalid_argument("");
            std::size_t used = 0;
            auto p = std::stoul(bounds.substr(0, comma), &used);
            if (used != comma)
              throw std::invalid_argument("");
            auto rest = bounds.substr(comma + 1);
            auto q = std::stoul(rest, &used);
            if (used != rest.size() || q == 0)
              throw std::invalid_argument("");
            return {p, q};
          }
        catch (const std::logic_error&)
          {
            throw input_error("--bounds expects P,Q with Q >= 1, got '"
                              + bounds + "'");
          }
      }
    };

    acceptor load_acceptor(const std::string& path)
    {
      auto text = read_file(path);
      auto start = text.find_first_not_of(" \t\r\n");
      if (start != std::string::npos && text.compare(start, 4, "HOA:") == 0)
        return parse_hoa(text);
      return parse_oaut(text);
    }

    buchi_automaton load_buchi(const std::string& path)
    {
      auto a = load_acceptor(path);
      if (auto b = std::get_if<buchi_automaton>(&a))
        return *b;
      return to_buchi(a);
    }

    finite_automaton load_finite(const std::string& path)
    {
      auto a = load_acceptor(path);
      auto b = std::get_if<buchi_automaton>(&a);
      if (!b)
        throw input_error("a finite automaton is read from a Büchi or "
                          "co-Büchi file");
      return finite_automaton(b->alphabet(), b->transitions(), b->initial(),
                              b->finals());
    }

    word parse_finite_word(const std::string& text, const alphabet& sigma)
    {
      word w;
      if (text.empty() || text == "-")
        return w;
      if (sigma.single_char())
        {
          for (char c : text)
            w.push_back(sigma.index_of(std::string_view(&c, 1)));
          return w;
        }
      std::stringstream s(text);
      std::string part;
      while (std::getline(s, part, '.'))
        w.push_back(sigma.index_of(part));
      return w;
    }

    void emit(const acceptor& a, const settings& s, std::ostream& out)
    {
      std::string text;
      if (s.format == "oaut")
        text = emit_oaut(a);
      else if (s.format == "dot")
        text = emit_dot(a);
      else if (s.format == "hoa")
        {
          auto b = std::get_if<buchi_automaton>(&a);
          if (!b)
            throw input_error("HOA output is available for Büchi automata "
                              "only");
          text = emit_hoa(*b);
        }
      else
        throw input_error("unknown format '" + s.format + "'");
      if (s.output.empty())
        out << text;
      else
        write_file(s.output, text);
    }

    const char* yes(bool b) { return b ? "true" : "false"; }

    using json = nlohmann::json;
  }

  int run_cli(const std::vector<std::string>& args, std::ostream& out,
              std::ostream& err)
  {
    CLI::App app{"Automatic Baire property and continuity tools for "
                 "omega-regular languages and rational functions",
                 "obaire"};
    app.require_subcommand(1);
    app.fallthrough();
    settings s;
    app.add_option("--max-states", s.max_states,
                   "Cap on the states of any construction")
      ->check(CLI::PositiveNumber);
    app.add_option("--bounds", s.bounds,
                   "Lasso corpus bounds P,Q (prefix, period)");
    app.add_option("--seed", s.seed, "Random seed");
    app.add_option("-o,--output", s.output, "Write the automaton here");
    app.add_option("--format", s.format, "oaut, hoa or dot")
      ->check(CLI::IsMember({"oaut", "hoa", "dot"}));

    std::function<int()> action;
    std::string file, file2, file3, text, dir;

    auto sub = [&](const char* name, const char* help) {
      auto* c = app.add_subcommand(name, help);
      c->fallthrough();
      return c;
    };
    auto needs_file = [&](CLI::App* c, std::string& target, const char* n) {
      c->add_option(n, target, "Input file")->required();
    };

    // --- ω-automata ----------------------------------------------------------

    {
      auto* c = sub("member", "Decide whether a lasso word is accepted");
      needs_file(c, file, "automaton");
      c->add_option("-w,--word", text, "Word u(v)")->required();
      c->callback([&] {
        action = [&] {
          auto a = load_acceptor(file);
          out << yes(member(a, parse_up_word(text, alphabet_of(a)))) << '\n';
          return int(exit_pass);
        };
      });
    }
    {
      auto* c = sub("empty", "Decide emptiness");
      needs_file(c, file, "automaton");
      c->callback([&] {
        action = [&] {
          auto a = load_acceptor(file);
          auto w = std::visit([](const auto& m) { return accepted_word(m); },
                              a);
          out << "empty: " << yes(!w) << '\n';
          if (w)
            out << "witness: " << format_up_word(*w, alphabet_of(a)) << '\n';
          return int(exit_pass);
        };
      });
    }
    {
      auto* c = sub("classify", "Position in the first Borel levels");
      needs_file(c, file, "automaton");
      c->callback([&] {
        action = [&] {
          auto r = classify(load_acceptor(file), s.lim());
          out << "open: " << yes(r.is_open) << "\nclosed: "
              << yes(r.is_closed) << "\nsigma2: " << yes(r.is_sigma2)
              << "\npi2: " << yes(r.is_pi2) << '\n';
          return int(exit_pass);
        };
      });
    }
    auto unary = [&](const char* name, const char* help,
                     std::function<acceptor(const acceptor&)> f) {
      auto* c = sub(name, help);
      needs_file(c, file, "automaton");
      c->callback([&, f] {
        action = [&, f] {
          emit(f(load_acceptor(file)), s, out);
          return int(exit_pass);
        };
      });
    };
    unary("closure", "Topological closure", [&](const acceptor& a) {
      return acceptor(closure(a, s.lim()));
    });
    unary("interior", "Topological interior", [&](const acceptor& a) {
      return acceptor(interior(a, s.lim()));
    });
    unary("complement", "Complement as a Büchi automaton",
          [&](const acceptor& a) { return acceptor(complement_of(a, s.lim())); });
    unary("determinize", "Equivalent deterministic Muller automaton",
          [&](const acceptor& a) { return acceptor(to_muller(a, s.lim())); });
    {
      auto* c = sub("wdelta", "Words with infinitely many prefixes in W "
                              "(the file is read as a finite automaton)");
      needs_file(c, file, "automaton");
      c->callback([&] {
        action = [&] {
          emit(acceptor(w_delta(load_finite(file))), s, out);
          return int(exit_pass);
        };
      });
    }
    {
      auto* c = sub("baire", "Open part and meager part of the language");
      needs_file(c, file, "automaton");
      c->add_option("--out-dir", dir, "Write B.oaut and C.oaut here");
      c->callback([&] {
        action = [&] {
          auto d = automatic_baire(load_acceptor(file), s.lim());
          const auto& sigma = alphabet_of(d.source);
          for (std::size_t i = 0; i < d.case_trace.size(); ++i)
            out << json{{"step", i}, {"case", d.case_trace[i]}}.dump() << '\n';
          json summary{{"open_states", d.open_part.size()},
                       {"meager_states", d.meager_part.automaton.size()},
                       {"components", d.meager_part.certificate.size()}};
          if (auto w = accepted_word(d.open_part))
            summary["open_witness"] = format_up_word(*w, sigma);
          out << summary.dump() << '\n';
          if (!dir.empty())
            {
              std::filesystem::create_directories(dir);
              write_file(dir + "/B.oaut", emit_oaut(acceptor(d.open_part)));
              write_file(dir + "/C.oaut",
                         emit_oaut(acceptor(d.meager_part.automaton)));
            }
          return int(exit_pass);
        };
      });
    }
    auto meager_cmd = [&](const char* name, bool co) {
      auto* c = sub(name, co ? "Decide comeagerness" : "Decide meagerness");
      needs_file(c, file, "automaton");
      c->callback([&, name, co] {
        action = [&, name, co] {
          auto a = load_acceptor(file);
          if (co)
            {
              auto na = acceptor(complement_of(a, s.lim()));
              auto m = meager_check(na, s.lim());
              out << name << ": " << yes(m.meager) << '\n';
              if (m.witness)
                out << "witness outside: "
                    << format_up_word(*m.witness, alphabet_of(a)) << '\n';
              return int(exit_pass);
            }
          auto m = meager_check(a, s.lim());
          out << name << ": " << yes(m.meager) << '\n';
          if (m.witness)
            out << "witness: " << format_up_word(*m.witness, alphabet_of(a))
                << '\n';
          return int(exit_pass);
        };
      });
    };
    meager_cmd("meager", false);
    meager_cmd("comeager", true);

    // --- Transducers ---------------------------------------------------------

    auto load_t = [&]() { return parse_otrans(read_file(file)); };
    {
      auto* c = sub("eval", "Image of a lasso word");
      needs_file(c, file, "transducer");
      c->add_option("-w,--word", text, "Word u(v)")->required();
      c->callback([&] {
        action = [&] {
          auto t = load_t();
          auto y = evaluate(t, parse_up_word(text, t.input_alphabet()));
          out << format_up_word(y, t.output_alphabet()) << '\n';
          return int(exit_pass);
        };
      });
    }
    {
      auto* c = sub("dom", "Domain as a Büchi automaton");
      needs_file(c, file, "transducer");
      c->callback([&] {
        action = [&] {
          emit(acceptor(dom(load_t())), s, out);
          return int(exit_pass);
        };
      });
    }
    {
      auto* c = sub("im", "Image as a Büchi automaton");
      needs_file(c, file, "transducer");
      c->callback([&] {
        action = [&] {
          emit(acceptor(im(load_t())), s, out);
          return int(exit_pass);
        };
      });
    }
    {
      auto* c = sub("preimage", "Inputs whose image starts with a prefix");
      needs_file(c, file, "transducer");
      c->add_option("-p,--prefix", text, "Output prefix ('-' for empty)")
        ->required();
      c->callback([&] {
        action = [&] {
          auto t = load_t();
          emit(acceptor(preimage_basic(
                 t, parse_finite_word(text, t.output_alphabet()))),
               s, out);
          return int(exit_pass);
        };
      });
    }
    std::size_t prefix_bound = 3;
    bool no_density = false;
    {
      auto* c = sub("restrict", "Dense Pi^0_2 set on which the function is "
                                "continuous");
      needs_file(c, file, "transducer");
      c->add_option("--prefix-bound", prefix_bound,
                    "Diagnostics for output prefixes up to this length");
      c->add_flag("--no-density", no_density, "Skip the density check");
      c->callback([&] {
        action = [&] {
          auto t = load_t();
          continuity_options o;
          o.prefix_bound = prefix_bound;
          o.check_density = !no_density;
          o.lim = s.lim();
          auto cert = continuity_restriction(t, o);
          for (const auto& d : cert.per_n)
            out << json{{"prefix", d.prefix.empty()
                                     ? std::string("-")
                                     : t.output_alphabet().format(d.prefix)},
                        {"preimage_states", d.preimage.size()},
                        {"open_states", d.open.size()},
                        {"meager_states", d.meager.size()}}
                     .dump()
                << '\n';
          out << json{{"g_states", cert.g.size()},
                      {"error_states", cert.error_set.size()},
                      {"density_checked", cert.density_checked}}
                   .dump()
              << '\n';
          if (!s.output.empty())
            write_file(s.output, emit_oaut(acceptor(cert.g)));
          return int(exit_pass);
        };
      });
    }
    std::size_t n_max = 4, k_max = 12, lasso_bound = 4;
    {
      auto* c = sub("probe", "Search for a continuity violation of the "
                             "restriction at a point");
      needs_file(c, file, "transducer");
      c->add_option("restriction", file2, "Automaton for the restriction")
        ->required();
      c->add_option("-w,--word", text, "Point u(v)")->required();
      c->add_option("--n-max", n_max);
      c->add_option("--k-max", k_max);
      c->add_option("--lasso-bound", lasso_bound);
      c->callback([&] {
        action = [&] {
          auto t = load_t();
          auto g = load_buchi(file2);
          const auto& in = t.input_alphabet();
          const auto& o = t.output_alphabet();
          auto r = restricted_continuity_probe(t, g, parse_up_word(text, in),
                                               n_max, k_max, lasso_bound);
          json j{{"modulus", r.modulus}, {"candidates", r.candidates}};
          j["verdict"] = r.violation ? "fail" : "pass";
          if (r.violation)
            {
              const auto& v = *r.violation;
              j["violation"] = json{{"n", v.n},
                                    {"x", format_up_word(v.x, in)},
                                    {"y", format_up_word(v.y, in)},
                                    {"fx", format_up_word(v.fx, o)},
                                    {"fy", format_up_word(v.fy, o)}};
            }
          out << j.dump() << '\n';
          return int(r.violation ? exit_fail : exit_pass);
        };
      });
    }

    // --- Checks and corpora --------------------------------------------------

    {
      auto* c = sub("check-baire", "Verify an open/meager decomposition");
      needs_file(c, file, "a");
      c->add_option("b", file2, "Open part")->required();
      c->add_option("c", file3, "Meager part")->required();
      c->callback([&] {
        action = [&] {
          auto a = load_acceptor(file);
          auto r = check_baire_triple(a, load_buchi(file2), load_buchi(file3),
                                      s.lim());
          out << r.to_json(alphabet_of(a)) << '\n';
          return int(r.pass ? exit_pass : exit_fail);
        };
      });
    }
    {
      auto* c = sub("oracle-compare", "Compare two automata on all lassos "
                                      "within --bounds");
      needs_file(c, file, "first");
      c->add_option("second", file2, "Second automaton")->required();
      c->callback([&] {
        action = [&] {
          auto a = load_acceptor(file);
          auto b = load_acceptor(file2);
          auto [p, q] = s.bound_pair();
          auto r = oracle_compare(a, b, lasso_corpus(alphabet_of(a), p, q));
          out << r.to_json(alphabet_of(a)) << '\n';
          return int(r.pass ? exit_pass : exit_fail);
        };
      });
    }
    std::string kind = "nba";
    std::size_t count = 10, states = 5;
    {
      auto* c = sub("gen-corpus", "Random automata or transducers");
      c->add_option("--kind", kind, "nba, dma or transducer")
        ->check(CLI::IsMember({"nba", "dma", "transducer"}));
      c->add_option("--count", count);
      c->add_option("--states", states, "Maximal state count")
        ->check(CLI::PositiveNumber);
      c->add_option("--out-dir", dir, "One file per instance");
      c->callback([&] {
        action = [&] {
          rng_type rng(s.seed);
          const auto ab = alphabet::of_chars("ab");
          if (!dir.empty())
            std::filesystem::create_directories(dir);
          for (std::size_t i = 0; i < count; ++i)
            {
              std::string body, ext = ".oaut";
              if (kind == "nba")
                {
                  random_shape shape;
                  shape.max_states = states;
                  body = emit_oaut(acceptor(random_nba(rng, ab, shape)));
                }
              else if (kind == "dma")
                body = emit_oaut(acceptor(random_dma(rng, ab, states)));
              else
                {
                  body = emit_otrans(random_sync_functional(rng, ab, ab,
                                                            states));
                  ext = ".otrans";
                }
              if (dir.empty())
                out << "# instance " << i << '\n' << body;
              else
                {
                  char name[32];
                  std::snprintf(name, sizeof name, "%s_%03zu", kind.c_str(),
                                i);
                  write_file(dir + "/" + name + ext, body);
                }
            }
          return int(exit_pass);
        };
      });
    }

    std::vector<std::string> argv(args.rbegin(), args.rend());
    try
      {
        app.parse(argv);
      }
    catch (const CLI::ParseError& e)
      {
        int code = app.exit(e, out, err);
        return code == 0 ? int(exit_pass) : int(exit_usage);
      }
    try
      {
        return action ? action() : int(exit_usage);
      }
    catch (const capacity_error& e)
      {
        err << "capacity: " << e.what() << '\n';
        return exit_capacity;
      }
    catch (const domain_error& e)
      {
        err << "domain: " << e.what() << '\n';
        return exit_fail;
      }
    catch (const functionality_error& e)
      {
        err << "not functional: " << e.what() << '\n';
        return exit_fail;
      }
    catch (const construction_error& e)
      {
        err << "self-check failed: " << e.what() << '\n';
        return exit_fail;
      }
    catch (const error& e)
      {
        err << "error: " << e.what() << '\n';
        return exit_usage;
      }
    catch (const std::filesystem::filesystem_error& e)
      {
        err << "error: " << e.what() << '\n';
        return exit_usage;
      }
  }
}
