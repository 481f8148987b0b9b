// Command-line front end: puzzle expansions, the Mondrian game, quantum
// products, classical oracles, cross-check sweeps and OG numerology.
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "schubert/engine.hpp"
#include "schubert/indexing.hpp"
#include "schubert/mondrian.hpp"
#include "schubert/og.hpp"
#include "schubert/oracle.hpp"
#include "schubert/pieces.hpp"
#include "schubert/quantum.hpp"
#include "schubert/render.hpp"
#include "schubert/trace.hpp"

using namespace schubert;

namespace {

struct Space {
  bool grassmannian = false;
  std::vector<int> steps;  // k for g(k,n); k1<k2[<k3] for fl(...)
  int n = 0;
};

Space parse_space(const std::string& text) {
  Space s;
  auto fail = [&] { throw CLI::ValidationError("space", "expected g(k,n) or fl(a,b[,c];n), got '" + text + "'"); };
  if (text.rfind("g(", 0) == 0 && text.back() == ')') {
    s.grassmannian = true;
    std::string body = text.substr(2, text.size() - 3);
    auto comma = body.find(',');
    if (comma == std::string::npos) fail();
    s.steps = {std::stoi(body.substr(0, comma))};
    s.n = std::stoi(body.substr(comma + 1));
  } else if (text.rfind("fl(", 0) == 0 && text.back() == ')') {
    std::string body = text.substr(3, text.size() - 4);
    auto semi = body.find(';');
    if (semi == std::string::npos) fail();
    std::istringstream is(body.substr(0, semi));
    std::string item;
    while (std::getline(is, item, ',')) s.steps.push_back(std::stoi(item));
    s.n = std::stoi(body.substr(semi + 1));
  } else {
    fail();
  }
  if (s.steps.empty() || s.n < 1) fail();
  for (size_t i = 0; i < s.steps.size(); ++i) {
    if (s.steps[i] < 1 || s.steps[i] >= s.n) fail();
    if (i && s.steps[i] <= s.steps[i - 1]) fail();
  }
  return s;
}

std::vector<int> space_contents(const Space& s) {
  // digit counts, index = digit value
  const int r = static_cast<int>(s.steps.size());
  std::vector<int> counts(static_cast<size_t>(r) + 1);
  counts[0] = s.n - s.steps.back();
  for (int i = 1; i <= r; ++i)
    counts[static_cast<size_t>(r + 1 - i)] =
        s.steps[static_cast<size_t>(i - 1)] - (i >= 2 ? s.steps[static_cast<size_t>(i - 2)] : 0);
  return counts;
}

void check_theory_space(Theory th, const Space& s) {
  if (theory_steps(th) != static_cast<int>(s.steps.size()))
    throw CLI::ValidationError("--theory", "theory " + theory_name(th) + " needs a " +
                                               std::to_string(theory_steps(th)) +
                                               "-step space");
}

void validate_class_string(const std::string& str, const Space& s) {
  auto counts = space_contents(s);
  FlagString(s.steps, s.n, str);  // throws on mismatch
  (void)counts;
}

int cmd_lr(const Space& space, Theory theory, KVariant kvariant, const std::string& alpha,
           const std::string& beta, const std::optional<std::string>& gamma, bool count_puzzles,
           const std::string& render_dir, const std::string& render_format, bool trace,
           const std::string& trace_render_dir, bool json_out, unsigned threads) {
  check_theory_space(theory, space);
  validate_class_string(alpha, space);
  validate_class_string(beta, space);
  if (gamma) validate_class_string(*gamma, space);
  const bool want_trace_or_render = trace || !render_dir.empty() || !trace_render_dir.empty();
  KVariant kv = kvariant;
  if (theory == Theory::K && trace && kv == KVariant::Original) {
    std::cerr << "note: --trace uses the alternate K pieces (the original K piece "
                 "spans beyond the staircase shapes)\n";
    kv = KVariant::Alternate;
  }
  const PieceSet& ps = piece_set_for(theory, kv);
  EnumerateOptions opts;
  opts.gamma_filter = gamma;
  opts.threads = threads;

  if (count_puzzles || want_trace_or_render) {
    auto fillings = enumerate_fillings(space.n, alpha, beta, ps, opts);
    if (count_puzzles) {
      std::cout << fillings.size() << "\n";
    }
    if (!render_dir.empty()) {
      std::filesystem::create_directories(render_dir);
      for (size_t i = 0; i < fillings.size(); ++i) {
        const bool svg = render_format != "ascii";
        std::string name = alpha + "_" + beta + "_" + std::to_string(i) + (svg ? ".svg" : ".txt");
        std::ofstream out(std::filesystem::path(render_dir) / name);
        out << render(fillings[i], ps, svg ? RenderFormat::Svg : RenderFormat::Ascii);
      }
    }
    if (trace) {
      for (size_t i = 0; i < fillings.size(); ++i) {
        std::cout << "# filling " << i << " gamma=" << fillings[i].gamma << "\n";
        std::cout << trace_to_tsv(trace_filling(fillings[i], ps));
      }
    }
    if (!trace_render_dir.empty()) {
      std::filesystem::create_directories(trace_render_dir);
      for (size_t i = 0; i < fillings.size(); ++i)
        for (int s = 0; s <= num_degeneration_steps(space.n); ++s) {
          std::string name = alpha + "_" + beta + "_" + std::to_string(i) + "_step" +
                             std::to_string(s) + ".svg";
          std::ofstream out(std::filesystem::path(trace_render_dir) / name);
          out << render_trace_frame(fillings[i], ps, s);
        }
    }
    if (count_puzzles || trace || !trace_render_dir.empty()) return 0;
  }

  auto expansion = expand_product(alpha, beta, ps, opts);
  if (json_out) {
    nlohmann::json j;
    j["space"] = space.grassmannian ? "g" : "fl";
    j["n"] = space.n;
    j["steps"] = space.steps;
    j["theory"] = theory_name(theory);
    j["alpha"] = alpha;
    j["beta"] = beta;
    nlohmann::json exp = nlohmann::json::object();
    for (const auto& [g, c] : expansion) exp[g] = coefficient_to_string(c);
    j["expansion"] = exp;
    std::cout << j.dump(2) << "\n";
  } else {
    for (const auto& [g, c] : expansion)
      std::cout << g << '\t' << coefficient_to_string(c) << "\n";
  }
  return 0;
}

SchubertIndex parse_class(const std::string& text, int k, int n) {
  return SchubertIndex(k, n, parse_partition(text));
}

int cmd_mondrian(const Space& space, const std::string& lambda, const std::string& mu,
                 bool trace, const std::string& render_dir, bool json_out) {
  if (!space.grassmannian)
    throw CLI::ValidationError("--space", "the Mondrian game runs on Grassmannians g(k,n)");
  const int k = space.steps[0], n = space.n;
  auto a = parse_class(lambda, k, n);
  auto b = parse_class(mu, k, n);
  std::vector<std::string> lines;
  auto result = play(a, b, k, n, trace ? &lines : nullptr);
  if (trace)
    for (const auto& line : lines) std::cout << "# " << line << "\n";
  if (!render_dir.empty()) {
    std::filesystem::create_directories(render_dir);
    auto start = init_product(a, b, k, n);
    if (start) {
      // Breadth-first frames of the whole game tree.
      std::vector<MondrianTableau> frontier{*start};
      int frame = 0;
      while (!frontier.empty()) {
        std::vector<MondrianTableau> next;
        for (const auto& node : frontier) {
          std::ofstream out(std::filesystem::path(render_dir) /
                            ("node" + std::to_string(frame++) + ".svg"));
          out << mondrian_to_svg(node);
          if (!node.terminal())
            for (auto& child : step(node)) next.push_back(std::move(child));
        }
        frontier = std::move(next);
      }
    }
  }
  if (json_out) {
    nlohmann::json j;
    for (const auto& [cls, c] : result) j[cls.to_string()] = c.str();
    std::cout << j.dump(2) << "\n";
  } else {
    for (const auto& [cls, c] : result) std::cout << cls.to_string() << '\t' << c << "\n";
  }
  return 0;
}

int cmd_quantum(const Space& space, int d, const std::vector<std::string>& classes,
                bool json_out) {
  if (!space.grassmannian)
    throw CLI::ValidationError("--space", "quantum products live on Grassmannians g(k,n)");
  const int k = space.steps[0], n = space.n;
  if (classes.size() == 3) {
    if (d < 0) throw CLI::ValidationError("-d", "three classes need an explicit degree");
    auto a = parse_class(classes[0], k, n);
    auto b = parse_class(classes[1], k, n);
    auto c = parse_class(classes[2], k, n);
    std::cout << gw_invariant(a, b, c, k, n, d) << "\n";
    return 0;
  }
  if (classes.size() != 2)
    throw CLI::ValidationError("classes", "expected two classes (product) or three (invariant)");
  auto a = parse_class(classes[0], k, n);
  auto b = parse_class(classes[1], k, n);
  auto exp = quantum_product(a, b, k, n);
  if (json_out) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& [key, c] : exp)
      j.push_back({{"d", key.first}, {"class", key.second.to_string()}, {"coeff", c.str()}});
    std::cout << j.dump(2) << "\n";
  } else {
    for (const auto& [key, c] : exp)
      std::cout << "q^" << key.first << '\t' << key.second.to_string() << '\t' << c << "\n";
  }
  return 0;
}

int cmd_oracle(const Space& space, const std::string& method,
               const std::vector<std::string>& args) {
  if (method == "lr") {
    if (!space.grassmannian || args.size() != 3)
      throw CLI::ValidationError("oracle", "lr needs g(k,n) and three partitions");
    const int k = space.steps[0], n = space.n;
    std::cout << lr_tableaux(parse_class(args[0], k, n), parse_class(args[1], k, n),
                             parse_class(args[2], k, n), k, n)
              << "\n";
    return 0;
  }
  if (method == "pieri") {
    if (!space.grassmannian || args.size() != 2)
      throw CLI::ValidationError("oracle", "pieri needs g(k,n), a special index p and a partition");
    const int k = space.steps[0], n = space.n;
    for (const auto& [cls, c] : pieri_multiply(std::stoi(args[0]), parse_class(args[1], k, n), k, n))
      std::cout << cls.to_string() << '\t' << c << "\n";
    return 0;
  }
  if (method == "giambelli") {
    if (!space.grassmannian || args.size() != 1)
      throw CLI::ValidationError("oracle", "giambelli needs g(k,n) and one partition");
    const int k = space.steps[0], n = space.n;
    for (const auto& [cls, c] : giambelli_expand(parse_class(args[0], k, n), k, n))
      std::cout << cls.to_string() << '\t' << c << "\n";
    return 0;
  }
  if (method == "flag") {
    if (args.size() != 2) throw CLI::ValidationError("oracle", "flag needs two class strings");
    for (const auto& [g, c] : flag_structure_constants_str(args[0], args[1], space.steps, space.n))
      std::cout << g << '\t' << c << "\n";
    return 0;
  }
  throw CLI::ValidationError("--method", "unknown oracle '" + method + "'");
}

// Sweeps all pairs in the space comparing the named methods; prints the
// first counterexample (exit 2) or "OK <count> products".
int cmd_crosscheck(const Space& space, Theory theory) {
  check_theory_space(theory, space);
  const int n = space.n;
  auto classes = boundary_strings(n, space_contents(space));
  long count = 0;
  for (const auto& a : classes) {
    for (const auto& b : classes) {
      ++count;
      switch (theory) {
        case Theory::H: {
          auto puz = expand_int(a, b, piece_set_for(Theory::H));
          const int k = space.steps[0];
          auto la = string_to_partition(a), lb = string_to_partition(b);
          auto lr = lr_product(la, lb, k, n);
          auto gia = giambelli_product(la, lb, k, n);
          auto game = play(la, lb, k, n);
          std::map<std::string, BigInt> lr_s, gia_s, game_s;
          for (const auto& [cls, c] : lr) lr_s[partition_to_string(cls)] = c;
          for (const auto& [cls, c] : gia) gia_s[partition_to_string(cls)] = c;
          for (const auto& [cls, c] : game) game_s[partition_to_string(cls)] = c;
          if (puz != lr_s || puz != gia_s || puz != game_s) {
            std::cout << "MISMATCH at " << a << " * " << b << "\n";
            auto dump = [&](const char* name, const std::map<std::string, BigInt>& m) {
              std::cout << name << ":";
              for (const auto& [g, c] : m) std::cout << ' ' << g << '=' << c;
              std::cout << "\n";
            };
            dump("puzzles", puz);
            dump("lr_tableaux", lr_s);
            dump("giambelli", gia_s);
            dump("mondrian", game_s);
            return 2;
          }
          break;
        }
        case Theory::K: {
          auto orig = expand_int(a, b, piece_set_for(Theory::K, KVariant::Original));
          auto alt = expand_int(a, b, piece_set_for(Theory::K, KVariant::Alternate));
          if (orig != alt) {
            std::cout << "MISMATCH (variants) at " << a << " * " << b << "\n";
            return 2;
          }
          for (const auto& [g, c] : orig) {
            int defect = string_inversions(g) - string_inversions(a) - string_inversions(b);
            BigInt expected_sign = defect % 2 == 0 ? 1 : -1;
            if ((c > 0 ? BigInt(1) : BigInt(-1)) != expected_sign) {
              std::cout << "SIGN LAW fails at " << a << " * " << b << " -> " << g << " = " << c
                        << "\n";
              return 2;
            }
          }
          break;
        }
        case Theory::HT: {
          auto ht = expand_poly(a, b, piece_set_for(Theory::HT));
          auto h = expand_int(a, b, piece_set_for(Theory::H));
          for (const auto& [g, c] : ht) {
            BigInt expect = h.count(g) ? h.at(g) : BigInt(0);
            if (c.specialize_to_ordinary() != expect) {
              std::cout << "MISMATCH (y->0) at " << a << " * " << b << " -> " << g << "\n";
              return 2;
            }
          }
          break;
        }
        case Theory::KT: {
          auto kt = expand_poly(a, b, piece_set_for(Theory::KT));
          auto kk = expand_int(a, b, piece_set_for(Theory::K));
          std::map<std::string, BigInt> spec;
          for (const auto& [g, c] : kt)
            if (BigInt s = c.specialize_to_ordinary(); s != 0) spec[g] = s;
          if (spec != kk) {
            std::cout << "MISMATCH (t->1) at " << a << " * " << b << "\n";
            return 2;
          }
          break;
        }
        case Theory::H2:
        case Theory::H3: {
          auto puz = expand_int(a, b, piece_set_for(theory));
          auto oracle = flag_structure_constants_str(a, b, space.steps, n);
          if (puz != oracle) {
            std::cout << "MISMATCH (puzzle vs flag oracle) at " << a << " * " << b << "\n";
            auto dump = [&](const char* name, const std::map<std::string, BigInt>& m) {
              std::cout << name << ":";
              for (const auto& [g, c] : m) std::cout << ' ' << g << '=' << c;
              std::cout << "\n";
            };
            dump("puzzles", puz);
            dump("oracle", oracle);
            return 2;
          }
          break;
        }
        case Theory::HT2: {
          auto ht2 = expand_poly(a, b, piece_set_for(Theory::HT2));
          auto h2 = expand_int(a, b, piece_set_for(Theory::H2));
          for (const auto& [g, c] : ht2) {
            BigInt expect = h2.count(g) ? h2.at(g) : BigInt(0);
            if (c.specialize_to_ordinary() != expect) {
              std::cout << "MISMATCH (y->0) at " << a << " * " << b << " -> " << g << "\n";
              return 2;
            }
          }
          break;
        }
      }
    }
  }
  std::cout << "OK " << count << " products\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Littlewood-Richardson calculators: puzzles, Mondrian tableaux, "
               "quantum reductions and classical oracles"};
  app.require_subcommand(1);

  std::string space_text, theory_text = "h", kvariant_text = "original";
  std::string alpha, beta, gamma_text, render_dir, render_format = "svg", trace_render_dir;
  bool count_puzzles = false, do_trace = false, json_out = false;
  unsigned threads = 0;

  auto* lr = app.add_subcommand("lr", "Expand a product of two classes via puzzles");
  lr->add_option("--space", space_text, "g(k,n) or fl(a,b[,c];n)")->required();
  lr->add_option("--theory", theory_text, "h | k | ht | kt | h2 | h3 | ht2");
  lr->add_option("--k-variant", kvariant_text, "original | alternate (K pieces)");
  lr->add_option("--gamma", gamma_text, "restrict to one boundary class");
  lr->add_flag("--count-puzzles", count_puzzles, "print the number of fillings only");
  lr->add_option("--render-dir", render_dir, "write one image per filling");
  lr->add_option("--render-format", render_format, "svg | ascii");
  lr->add_flag("--trace", do_trace, "print degeneration traces (step\\talpha\\tbeta)");
  lr->add_option("--trace-render-dir", trace_render_dir, "write one SVG frame per step");
  lr->add_flag("--json", json_out, "emit a single JSON object");
  lr->add_option("--threads", threads, "worker threads (default: SCHUBERT_THREADS or all)");
  lr->add_option("alpha", alpha, "first class string")->required();
  lr->add_option("beta", beta, "second class string")->required();

  std::string m_lambda, m_mu;
  auto* mond = app.add_subcommand("mondrian", "Play the Grassmannian Mondrian game");
  mond->add_option("--space", space_text, "g(k,n)")->required();
  mond->add_flag("--trace", do_trace, "print every game node");
  mond->add_option("--render-dir", render_dir, "write one SVG board per game node");
  mond->add_flag("--json", json_out);
  mond->add_option("lambda", m_lambda, "partition, e.g. 2,1")->required();
  mond->add_option("mu", m_mu, "partition")->required();

  int degree = -1;
  std::vector<std::string> q_classes;
  auto* quant = app.add_subcommand("quantum", "Gromov-Witten invariant or quantum product");
  quant->add_option("--space", space_text, "g(k,n)")->required();
  quant->add_option("-d,--degree", degree, "curve degree (required with three classes)");
  quant->add_flag("--json", json_out);
  quant->add_option("classes", q_classes, "two or three partitions")->expected(2, 3);

  std::string method;
  std::vector<std::string> o_args;
  auto* orc = app.add_subcommand("oracle", "Run a classical oracle directly");
  orc->add_option("--space", space_text, "g(k,n) or fl(...)")->required();
  orc->add_option("--method", method, "lr | pieri | giambelli | flag")->required();
  orc->add_option("args", o_args, "method arguments");

  auto* cross = app.add_subcommand("crosscheck",
                                   "Sweep all pairs in a space comparing methods");
  cross->add_option("--space", space_text)->required();
  cross->add_option("--theory", theory_text);

  auto* og = app.add_subcommand("og", "Orthogonal Grassmannian numerology");
  std::string og_op, og_lambda, og_mu;
  int og_m = 0, og_k = 0, og_su = 0, og_sv = 0, og_sw = 0;
  std::string og_c = "1";
  og->add_option("op", og_op, "assoc | discrepancy | bfromc")->required();
  og->add_option("--m", og_m, "isotropic flag parameter m");
  og->add_option("--k", og_k, "subspace dimension k");
  og->add_option("--lambda", og_lambda, "strictly decreasing partition");
  og->add_option("--mu", og_mu, "subpartition of the associated partition");
  og->add_option("--c", og_c, "type C coefficient");
  og->add_option("--su", og_su, "sign changes of u");
  og->add_option("--sv", og_sv, "sign changes of v");
  og->add_option("--sw", og_sw, "sign changes of w");

  CLI11_PARSE(app, argc, argv);

  try {
    verify_engine_conventions();
    if (lr->parsed()) {
      Space s = parse_space(space_text);
      auto th = theory_from_name(theory_text);
      if (!th) throw CLI::ValidationError("--theory", "unknown theory '" + theory_text + "'");
      KVariant kv = kvariant_text == "alternate" ? KVariant::Alternate : KVariant::Original;
      std::optional<std::string> gamma;
      if (!gamma_text.empty()) gamma = gamma_text;
      return cmd_lr(s, *th, kv, alpha, beta, gamma, count_puzzles, render_dir, render_format,
                    do_trace, trace_render_dir, json_out, threads);
    }
    if (mond->parsed())
      return cmd_mondrian(parse_space(space_text), m_lambda, m_mu, do_trace, render_dir, json_out);
    if (quant->parsed()) return cmd_quantum(parse_space(space_text), degree, q_classes, json_out);
    if (orc->parsed()) return cmd_oracle(parse_space(space_text), method, o_args);
    if (cross->parsed()) {
      auto th = theory_from_name(theory_text);
      if (!th) throw CLI::ValidationError("--theory", "unknown theory '" + theory_text + "'");
      return cmd_crosscheck(parse_space(space_text), *th);
    }
    if (og->parsed()) {
      if (og_op == "assoc") {
        auto assoc = associated_partition(parse_partition(og_lambda), og_m);
        std::cout << format_partition(assoc) << "\n";
        return 0;
      }
      if (og_op == "discrepancy") {
        std::cout << discrepancy(parse_partition(og_lambda), parse_partition(og_mu), og_k, og_m)
                  << "\n";
        return 0;
      }
      if (og_op == "bfromc") {
        Rational c(og_c);
        std::cout << typeB_from_typeC(c, og_su, og_sv, og_sw) << "\n";
        return 0;
      }
      throw CLI::ValidationError("op", "unknown og operation '" + og_op + "'");
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 1;
}
