#include "hecke_lab/cli.hpp"

#include <CLI11.hpp>

#include <functional>
#include <sstream>

#include "hecke_lab/cache.hpp"
#include "hecke_lab/lab.hpp"

namespace hecke_lab {

namespace {

enum class Format { Text, Json, Latex };

struct Globals {
  std::string format = "text";
  std::string cache_dir = ".hecke-lab-cache";
  bool no_cache = false;
  int threads = 1;

  Format fmt() const {
    if (format == "json") return Format::Json;
    if (format == "latex") return Format::Latex;
    return Format::Text;
  }
  DiskCache cache() const { return DiskCache(no_cache ? std::filesystem::path() : std::filesystem::path(cache_dir)); }
};

// A mathematical negative; maps to exit code 1.
struct Negative {};

// "e" (or "id") denotes the identity of the given rank.
Permutation parse_perm(const std::string& text, int rank_for_identity = 0) {
  if ((text == "e" || text == "id") && rank_for_identity > 0) return Permutation::identity(rank_for_identity);
  return Permutation::parse(text);
}

void print_json(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

Json poly_json(const LaurentQ& p) { return Json{{"text", p.to_pretty_string()}, {"coeffs", to_json(p)}}; }

std::string hecke_text(const HeckeElement& a, bool latex) {
  std::string out;
  for (const auto& [w, c] : a.terms()) {
    if (!out.empty()) out += " + ";
    const std::string cs = latex ? c.to_latex() : c.to_pretty_string();
    const std::string t = latex ? "T_{" + w.to_string() + "}" : "T[" + w.to_string() + "]";
    if (c == LaurentQ(1))
      out += t;
    else
      out += "(" + cs + ")" + (latex ? "" : "*") + t;
  }
  return out.empty() ? "0" : out;
}

void emit_symfunc(std::ostream& out, Format fmt, const SymmetricFunction& f) {
  switch (fmt) {
    case Format::Json: print_json(out, to_json(f)); break;
    case Format::Latex: out << f.to_latex() << '\n'; break;
    case Format::Text: out << f.to_string() << '\n'; break;
  }
}

std::string pairs_text(const std::vector<std::pair<int, int>>& ps) {
  std::string out;
  for (const auto& [i, j] : ps) out += (out.empty() ? "" : " ") + std::string("(") + std::to_string(i) + "," + std::to_string(j) + ")";
  return out.empty() ? "(none)" : out;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Kazhdan-Lusztig polynomials, Hecke characters and chromatic quasisymmetric functions", "hecke-lab"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"text", "json", "latex"}));
  app.add_option("--cache-dir", g.cache_dir, "Cache directory");
  app.add_flag("--no-cache", g.no_cache, "Do not read or write the disk cache");
  app.add_option("--threads", g.threads, "Worker threads for batch computations")->check(CLI::Range(1, 256));

  std::function<void()> action;
  auto sub = [&](const char* name, const char* help) {
    CLI::App* s = app.add_subcommand(name, help);
    s->fallthrough();
    return s;
  };

  // kl
  std::string w_text, z_text, lambda_text, m_text, basis_text, name_text;
  int s_index = 0, n_value = 0;
  bool general = false, expect = false;

  {
    auto* c = sub("kl", "Kazhdan-Lusztig polynomial P_{z,w}, or the whole row of w");
    c->add_option("--w", w_text, "Permutation w")->required();
    c->add_option("--z", z_text, "Permutation z (\"e\" for the identity)");
    c->callback([&] {
      action = [&] {
        const Permutation w = parse_perm(w_text);
        auto table = cached_kl_row(g.cache(), w);
        if (!z_text.empty()) {
          const Permutation z = parse_perm(z_text, w.size());
          if (z.size() != w.size()) throw SizeMismatch("z and w have different sizes");
          const LaurentQ p = table->poly(z, w);
          switch (g.fmt()) {
            case Format::Json: print_json(out, {{"z", z.to_string()}, {"w", w.to_string()}, {"poly", poly_json(p)}}); break;
            case Format::Latex: out << "P_{" << z.to_string() << "," << w.to_string() << "}(q) = " << p.to_latex() << '\n'; break;
            case Format::Text: out << p.to_pretty_string() << '\n'; break;
          }
          return;
        }
        Json entries = Json::array();
        for (const auto& [z, p] : table->row(w)) {
          const LaurentQ lp = p->to_laurent();
          if (g.fmt() == Format::Json)
            entries.push_back({{"z", z.to_string()}, {"poly", poly_json(lp)}});
          else if (g.fmt() == Format::Latex)
            out << "P_{" << z.to_string() << "," << w.to_string() << "} = " << lp.to_latex() << " \\\\\n";
          else
            out << z.to_string() << ": " << lp.to_pretty_string() << '\n';
        }
        if (g.fmt() == Format::Json) print_json(out, {{"w", w.to_string()}, {"entries", entries}});
      };
    });
  }
  {
    auto* c = sub("cprime", "q^{l(w)/2} C'_w in the T basis");
    c->add_option("--w", w_text, "Permutation w")->required();
    c->callback([&] {
      action = [&] {
        const Permutation w = parse_perm(w_text);
        cached_kl_row(g.cache(), w);
        const HeckeElement a = cprime(w);
        switch (g.fmt()) {
          case Format::Json: {
            Json terms = Json::array();
            for (const auto& [z, c2] : a.terms()) terms.push_back({{"z", z.to_string()}, {"coeff", to_json(c2)}});
            print_json(out, {{"w", w.to_string()}, {"length", w.length()}, {"terms", terms}});
            break;
          }
          case Format::Latex:
            out << "q^{" << w.length() << "/2} C'_{" << w.to_string() << "} = " << hecke_text(a, true) << '\n';
            break;
          case Format::Text: out << hecke_text(a, false) << '\n'; break;
        }
      };
    });
  }
  {
    auto* c = sub("chi", "Character value chi^lambda(T_w)");
    c->add_option("--lambda", lambda_text, "Partition, e.g. 2,1")->required();
    c->add_option("--w", w_text, "Permutation w")->required();
    c->callback([&] {
      action = [&] {
        const Partition lambda = Partition::parse(lambda_text);
        const Permutation w = parse_perm(w_text);
        const LaurentQ v = chi(lambda, w);
        switch (g.fmt()) {
          case Format::Json:
            print_json(out, {{"lambda", lambda.parts()}, {"w", w.to_string()}, {"value", poly_json(v)}});
            break;
          case Format::Latex: out << "\\chi^{" << lambda.to_string() << "}(T_{" << w.to_string() << "}) = " << v.to_latex() << '\n'; break;
          case Format::Text: out << v.to_pretty_string() << '\n'; break;
        }
      };
    });
  }
  {
    auto* c = sub("ch", "Frobenius character of q^{l(w)/2} C'_w");
    c->add_option("--w", w_text, "Permutation w")->required();
    c->add_option("--basis", basis_text, "Target basis m, e, h, p or s (default s)");
    c->callback([&] {
      action = [&] {
        const Permutation w = parse_perm(w_text);
        const Basis b = basis_text.empty() ? Basis::s : parse_basis(basis_text);
        cached_kl_row(g.cache(), w);
        if (w.size() <= CharacterTable::kMaxRank) cached_character_table(g.cache(), w.size());
        emit_symfunc(out, g.fmt(), ch_cprime(w).to(b));
      };
    });
  }
  {
    auto* c = sub("csf", "Chromatic quasisymmetric function of the indifference graph of m");
    c->add_option("--m", m_text, "Hessenberg function, e.g. 2,3,3")->required();
    c->add_option("--basis", basis_text, "Target basis m, e, h, p or s (default m)");
    c->callback([&] {
      action = [&] {
        const HessenbergFunction m = HessenbergFunction::parse(m_text);
        const Basis b = basis_text.empty() ? Basis::m : parse_basis(basis_text);
        emit_symfunc(out, g.fmt(), csf(m).to(b));
      };
    });
  }
  {
    auto* c = sub("smooth-reduce", "Codominant permutation with the same Hessenberg function");
    c->add_option("--w", w_text, "Smooth permutation w")->required();
    c->callback([&] {
      action = [&] {
        const Permutation w = parse_perm(w_text);
        const Permutation v = smooth_reduce(w);
        if (g.fmt() == Format::Json)
          print_json(out, {{"w", w.to_string()}, {"reduced", v.to_string()}, {"m", hessenberg_of_smooth(w).to_string()}});
        else
          out << v.to_string() << '\n';
      };
    });
  }
  {
    auto* c = sub("moment-graph", "Transpositions below w in Bruhat order");
    c->add_option("--w", w_text, "Permutation w")->required();
    c->callback([&] {
      action = [&] {
        const Permutation w = parse_perm(w_text);
        const MomentGraph mg = moment_graph(w);
        if (g.fmt() == Format::Json) {
          Json ts = Json::array();
          for (const auto& [i, j] : mg.transpositions) ts.push_back({i, j});
          print_json(out, {{"w", w.to_string()}, {"n", mg.n}, {"smooth", is_smooth(w)}, {"transpositions", ts}});
        } else {
          out << pairs_text(mg.transpositions) << '\n';
        }
      };
    });
  }
  {
    auto* c = sub("modular", "The relation for C'_w C'_s with w smooth and sw < w < ws");
    c->add_option("--w", w_text, "Smooth permutation w")->required();
    c->add_option("--s", s_index, "Index i of s = s_i")->required();
    c->callback([&] {
      action = [&] {
        const Permutation w = parse_perm(w_text);
        const ModularRelation r = modular_relation(w, s_index);
        const std::string kind = r.kind == ModularCase::Smooth ? "smooth" : "singular";
        if (g.fmt() == Format::Json) {
          Json j{{"w", w.to_string()}, {"s", r.s}, {"ws", r.ws.to_string()}, {"case", kind},
                 {"identity", r.identity()}, {"verified", r.verified}};
          j["z"] = r.z ? Json(r.z->to_string()) : Json(nullptr);
          print_json(out, j);
        } else {
          out << "case: " << kind << " (ws = " << r.ws.to_string() << ")\n";
          if (r.z) out << "z: " << r.z->to_string() << '\n';
          out << r.identity() << (r.verified ? "  [verified]" : "  [not recomputed]") << '\n';
        }
      };
    });
  }
  {
    auto* c = sub("counterexample", "Search for m0, m2 with (1+q) csf(m1) = csf(m2) + q csf(m0)");
    c->add_option("--m", m_text, "Hessenberg function m1")->required();
    c->add_flag("--general", general, "Also scan q^a csf(m0) for all a, without the edge filter");
    c->add_flag("--expect", expect, "Exit with status 1 when nothing is found");
    c->callback([&] {
      action = [&] {
        const HessenbergFunction m1 = HessenbergFunction::parse(m_text);
        auto batch = cached_csf_batch(g.cache(), m1.size(), g.threads);
        const CounterexampleResult r = counterexample_search(m1, *batch, general);
        if (g.fmt() == Format::Json) {
          Json sols = Json::array();
          for (const auto& s : r.solutions) sols.push_back({{"m0", s.m0.to_string()}, {"m2", s.m2.to_string()}, {"a", s.a}});
          print_json(out, {{"m1", m1.to_string()}, {"general", general}, {"status", r.found() ? "found" : "not_found"},
                           {"candidates", r.candidates}, {"solutions", sols}});
        } else if (!r.found()) {
          out << "NOT FOUND\n";
        } else {
          out << "FOUND\n";
          for (const auto& s : r.solutions)
            out << "m0 = " << s.m0.to_string() << ", m2 = " << s.m2.to_string() << (s.a == 1 ? "" : ", a = " + std::to_string(s.a)) << '\n';
        }
        if (expect && !r.found()) throw Negative{};
      };
    });
  }
  {
    auto* c = sub("decompose", "Write ch(C'_w) as an N[q]-combination of codominant characters");
    c->add_option("--w", w_text, "Permutation w")->required();
    c->add_flag("--expect", expect, "Exit with status 1 when no decomposition is found");
    c->callback([&] {
      action = [&] {
        const Permutation w = parse_perm(w_text);
        cached_kl_row(g.cache(), w);
        if (w.size() <= CharacterTable::kMaxRank) cached_character_table(g.cache(), w.size());
        const Decomposition d = decompose_codominant(w);
        if (g.fmt() == Format::Json) {
          Json terms = Json::array();
          for (const auto& t : d.terms) terms.push_back({{"w", t.w.to_string()}, {"coeff", poly_json(t.coeff)}});
          print_json(out, {{"w", w.to_string()}, {"status", d.found ? "found" : "unknown"}, {"terms", terms}});
        } else if (!d.found) {
          out << "UNKNOWN\n";
        } else {
          for (const auto& t : d.terms)
            out << t.w.to_string() << ": " << (g.fmt() == Format::Latex ? t.coeff.to_latex() : t.coeff.to_pretty_string()) << '\n';
        }
        if (expect && !d.found) throw Negative{};
      };
    });
  }
  {
    auto* c = sub("check", "Run one exhaustive check");
    c->add_option("--name", name_text, "Check name")->required()->check(CLI::IsMember(check_names()));
    c->add_option("--n", n_value, "Rank")->required();
    c->add_flag("--expect", expect, "Exit with status 1 when the check fails");
    c->callback([&] {
      action = [&] {
        const CheckReport r = run_check(name_text, n_value);
        if (g.fmt() == Format::Json)
          print_json(out, r.to_json());
        else
          out << r.to_text() << '\n';
        if (expect && !r.passed) throw Negative{};
      };
    });
  }
  {
    auto* c = sub("hessenberg", "List the Hessenberg functions on [n] with their codominant permutations");
    c->add_option("--n", n_value, "n")->required()->check(CLI::Range(1, Permutation::kMaxRank));
    c->callback([&] {
      action = [&] {
        const auto ms = enumerate_hessenberg(n_value);
        if (g.fmt() == Format::Json) {
          Json list = Json::array();
          for (const auto& m : ms)
            list.push_back({{"m", m.to_string()}, {"w", codominant_of_hessenberg(m).to_string()}, {"edges", m.edge_count()}});
          print_json(out, {{"n", n_value}, {"count", ms.size()}, {"functions", list}});
        } else {
          for (const auto& m : ms) out << m.to_string() << "  " << codominant_of_hessenberg(m).to_string() << '\n';
        }
      };
    });
  }

  std::vector<std::string> argv_store{"hecke-lab"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    action();
  } catch (const Negative&) {
    return 1;
  } catch (const InternalContradiction& e) {
    err << "internal contradiction: " << e.what() << '\n';
    return 1;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}

}  // namespace hecke_lab
