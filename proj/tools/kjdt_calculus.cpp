#include <CLI11.hpp>

#include <iostream>
#include <optional>

#include "kjdt/table.hpp"
#include "kjdt/verify.hpp"

using namespace kjdt;
using nlohmann::json;

namespace {

// exit codes
constexpr int kVerifyFailed = 1;
constexpr int kBadInput = 2;

bool g_json = false;

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

IncreasingTableau read_tableau(const std::string& path) { return parse_tableau_any(read_file(path)); }

void print_tableau(const IncreasingTableau& t) {
  if (g_json) emit(to_json(t));
  else std::cout << to_text(t);
}

std::string csv_of(const std::map<Partition, long long>& d) {
  std::string out = "nu,d\n";
  for (const auto& [nu, v] : d) out += "\"" + nu.to_string() + "\"," + std::to_string(v) + "\n";
  return out;
}

json json_of(const std::map<Partition, long long>& d) {
  json rows = json::array();
  for (const auto& [nu, v] : d) rows.push_back({{"nu", nu.to_string()}, {"value", v}});
  return rows;
}

struct ShapeArgs {
  std::string lambda, mu, nu, rect;
};

// -- paper-examples ---------------------------------------------------------

struct Replay {
  std::string name;
  std::string expected_file;
  std::function<std::string(const std::string& dir)> compute;
};

std::string slurp(const std::string& dir, const std::string& rel) { return read_file(dir + "/" + rel); }

std::vector<Replay> replays() {
  auto tab = [](const std::string& dir, const std::string& rel) { return parse_tableau(slurp(dir, rel)); };
  std::vector<Replay> r;
  r.push_back({"first slide", "first_slide/output.txt", [=](const std::string& d) {
                 const auto order = parse_slide_script(slurp(d, "first_slide/corners.txt"));
                 return to_text(kjdt::kjdt(tab(d, "first_slide/input.txt"), order.steps.at(0)));
               }});
  for (const char* which : {"a", "b"}) {
    const std::string w = which;
    r.push_back({"rectification order " + w, "two_rectifications/result_" + w + ".txt", [=](const std::string& d) {
                   return to_text(krect(tab(d, "two_rectifications/input.txt"),
                                        parse_slide_script(slurp(d, "two_rectifications/order_" + w + ".txt"))));
                 }});
  }
  r.push_back({"LR witnesses", "two_witnesses/witnesses.txt", [](const std::string&) {
                 return to_text(lr_witnesses(Partition{2, 2}, Partition{2, 1}, Partition{3, 2, 2, 1}, {4, 3}));
               }});
  r.push_back({"growth diagram", "growth/table.txt", [=](const std::string& d) {
                 return build_growth_diagram(tab(d, "growth/left.txt"), tab(d, "growth/top.txt")).to_text();
               }});
  r.push_back({"growth bottom row", "growth/rectified.txt", [=](const std::string& d) {
                 const auto g = build_growth_diagram(tab(d, "growth/left.txt"), tab(d, "growth/top.txt"));
                 return to_text(from_shape_sequence({g.bottom_row()}));
               }});
  r.push_back({"infusion first", "infusion/first.txt", [=](const std::string& d) {
                 return to_text(kinfusion(tab(d, "infusion/T.txt"), tab(d, "infusion/U.txt")).first);
               }});
  r.push_back({"infusion second", "infusion/second.txt", [=](const std::string& d) {
                 return to_text(kinfusion(tab(d, "infusion/T.txt"), tab(d, "infusion/U.txt")).second);
               }});
  r.push_back({"evacuation", "evacuation/output.txt",
               [=](const std::string& d) { return to_text(k_evacuation(tab(d, "evacuation/input.txt"))); }});
  r.push_back({"evacuation triangle", "evacuation/triangle.txt", [=](const std::string& d) {
                 return triangular_growth_diagram(tab(d, "evacuation/input.txt")).to_text();
               }});
  r.push_back({"pieri fillings", "pieri/fillings.txt", [](const std::string&) {
                 return to_text(t_pieri_fillings(SkewShape(Partition{6, 5, 2, 2}, Partition{5, 3, 2}), 4));
               }});
  r.push_back({"product difference", "product_difference/d.csv", [](const std::string&) {
                 return csv_of(product_difference(Partition{4, 2, 1}, Partition{3, 3, 2}, {4, 5}));
               }});
  r.push_back({"coefficient table", "coefficients.csv", [=](const std::string& d) {
                 // recompute count and signed for each listed triple
                 std::istringstream in(slurp(d, "coefficients.csv"));
                 std::string line, out;
                 std::getline(in, line);
                 out = line + "\n";
                 while (std::getline(in, line)) {
                   if (line.empty()) continue;
                   std::vector<std::string> f;
                   std::string cur;
                   bool quoted = false;
                   for (char ch : line) {
                     if (ch == '"') quoted = !quoted;
                     else if (ch == ',' && !quoted) {
                       f.push_back(cur);
                       cur.clear();
                     } else cur += ch;
                   }
                   f.push_back(cur);
                   if (f.size() < 4) throw error(errc::parse_error, "bad coefficients.csv row: " + line);
                   const auto c = lr_coefficient(parse_partition(f[0]), parse_partition(f[1]), parse_partition(f[2]),
                                                 parse_rectangle(f[3]));
                   out += "\"" + f[0] + "\",\"" + f[1] + "\",\"" + f[2] + "\"," + f[3] + "," + std::to_string(c.count) +
                          "," + std::to_string(c.value) + "\n";
                 }
                 return out;
               }});
  for (const char* which : {"a", "b"}) {
    const std::string w = which;
    r.push_back({"dual equivalence " + w, "dual_equivalence/second_" + w + ".txt", [=](const std::string& d) {
                   return to_text(kinfusion(tab(d, "dual_equivalence/left_" + w + ".txt"), tab(d, "dual_equivalence/U.txt")).second);
                 }});
  }
  return r;
}

int run_examples(const std::string& dir) {
  bool all = true;
  json report = json::array();
  for (const auto& ex : replays()) {
    const std::string want = slurp(dir, ex.expected_file);
    std::string got;
    std::string problem;
    try {
      got = ex.compute(dir);
    } catch (const error& e) {
      problem = std::string(to_string(e.code())) + ": " + e.what();
    }
    const bool ok = problem.empty() && got == want;
    all = all && ok;
    if (g_json) {
      json item{{"name", ex.name}, {"file", ex.expected_file}, {"ok", ok}};
      if (!ok) item["got"] = problem.empty() ? got : problem;
      report.push_back(std::move(item));
      continue;
    }
    std::cout << (ok ? "ok       " : "MISMATCH ") << ex.name << " (" << ex.expected_file << ")\n";
    if (!ok) std::cout << "--- expected\n" << want << "--- got\n" << (problem.empty() ? got : problem + "\n");
  }
  if (g_json) emit({{"passed", all}, {"examples", report}});
  return all ? 0 : kVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"K-theoretic jeu de taquin calculator"};
  app.require_subcommand(1);
  app.add_flag("--json", g_json, "emit one JSON document instead of text");

  // rectify
  std::string rect_in, order_file;
  auto* rectify = app.add_subcommand("rectify", "K-rectify a tableau file");
  rectify->add_option("tableau", rect_in, "tableau file (text or JSON)")->required();
  rectify->add_option("--order-file", order_file, "slide script, one set of inner corners per line");

  std::string evac_in;
  auto* evacuate = app.add_subcommand("evacuate", "K-evacuation of a straight-shape tableau");
  evacuate->add_option("tableau", evac_in)->required();
  bool show_triangle = false;
  evacuate->add_flag("--diagram", show_triangle, "print the triangular growth diagram");

  std::string inf_t, inf_u;
  bool reverse = false;
  auto* infuse = app.add_subcommand("infuse", "K-infusion of an abutting pair");
  infuse->add_option("inner", inf_t)->required();
  infuse->add_option("outer", inf_u)->required();
  infuse->add_flag("--reverse", reverse, "reverse infusion (slide the outer tableau inward via reverse slides)");

  ShapeArgs ca;
  bool witnesses = false, oracle = false, no_prune = false, growth = false;
  auto* coeff = app.add_subcommand("coeff", "structure constant for (lambda, mu, nu)");
  coeff->add_option("--lambda", ca.lambda)->required();
  coeff->add_option("--mu", ca.mu)->required();
  coeff->add_option("--nu", ca.nu)->required();
  coeff->add_option("--rect", ca.rect, "ambient rectangle RxC")->required();
  coeff->add_flag("--witnesses", witnesses, "list the tableaux counted");
  coeff->add_flag("--oracle", oracle, "cross-check against the Grothendieck polynomial expansion");
  coeff->add_flag("--growth", growth, "cross-check against the growth diagram count");
  coeff->add_flag("--no-prune", no_prune, "plain enumeration without search pruning");

  std::string ex_rect, ex_rule = "main", ex_lambda, ex_mu;
  int jobs = 1;
  auto* expand = app.add_subcommand("expand", "coefficient table for a rectangle");
  expand->add_option("--rect", ex_rect)->required();
  expand->add_option("--rule", ex_rule, "main, growth, oracle or pieri")->capture_default_str();
  expand->add_option("--lambda", ex_lambda, "restrict to one pair (needs --mu)");
  expand->add_option("--mu", ex_mu);
  expand->add_option("--jobs", jobs)->check(CLI::PositiveNumber);

  ShapeArgs pa;
  int t_row = 0;
  bool fillings = false;
  auto* pieri = app.add_subcommand("pieri", "product with a single row by the closed form");
  pieri->add_option("--lambda", pa.lambda)->required();
  pieri->add_option("--t", t_row, "row length")->required();
  pieri->add_option("--nu", pa.nu)->required();
  pieri->add_option("--rect", pa.rect);
  pieri->add_flag("--fillings", fillings, "list the t-Pieri fillings");

  ShapeArgs da;
  auto* proddiff = app.add_subcommand("proddiff", "G_{meet} G_{join} - G_lambda G_mu");
  proddiff->add_option("--lambda", da.lambda)->required();
  proddiff->add_option("--mu", da.mu)->required();
  proddiff->add_option("--rect", da.rect)->required();

  std::string suite, v_rect = "3x3";
  auto* verify = app.add_subcommand("verify", "run a property suite exhaustively");
  verify->add_option("suite", suite, "suite name or 'all'")->required();
  verify->add_option("--rect", v_rect)->capture_default_str();
  verify->add_option("--jobs", jobs)->check(CLI::PositiveNumber);

  std::string data_dir = KJDT_TESTDATA_DIR;
  auto* examples = app.add_subcommand("paper-examples", "replay the worked examples against the golden files");
  examples->add_option("--data-dir", data_dir)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error=ParseError message=" << e.what() << "\n";
    return kBadInput;
  }

  try {
    if (*rectify) {
      const auto t = read_tableau(rect_in);
      print_tableau(order_file.empty() ? krect(t) : krect(t, parse_slide_script(read_file(order_file))));
      return 0;
    }
    if (*evacuate) {
      const auto t = read_tableau(evac_in);
      if (show_triangle && !g_json) std::cout << triangular_growth_diagram(t).to_text() << "\n";
      print_tableau(k_evacuation(t));
      return 0;
    }
    if (*infuse) {
      const auto t = read_tableau(inf_t);
      const auto u = read_tableau(inf_u);
      const auto out = reverse ? krevinfusion(t, u) : kinfusion(t, u);
      if (g_json) emit({{"first", to_json(out.first)}, {"second", to_json(out.second)}});
      else std::cout << to_text(out.first) << "\n" << to_text(out.second);
      return 0;
    }
    if (*coeff) {
      const auto lam = parse_partition(ca.lambda), mu = parse_partition(ca.mu), nu = parse_partition(ca.nu);
      const auto box = parse_rectangle(ca.rect);
      const LrOptions opts{!no_prune};
      const auto c = lr_coefficient(lam, mu, nu, box, opts);
      std::optional<long long> from_oracle, from_growth;
      if (oracle) from_oracle = oracle_coefficient(lam, mu, nu, box);
      if (growth) from_growth = growth_coefficient(lam, mu, nu, box).value;
      const bool agree = (!from_oracle || *from_oracle == c.value) && (!from_growth || *from_growth == c.value);
      if (g_json) {
        json j{{"lambda", lam.to_string()}, {"mu", mu.to_string()}, {"nu", nu.to_string()}, {"rect", box.to_string()},
               {"count", c.count}, {"signed", c.value}};
        if (from_oracle) j["oracle"] = *from_oracle;
        if (from_growth) j["growth"] = *from_growth;
        if (witnesses) {
          j["witnesses"] = json::array();
          for (const auto& w : lr_witnesses(lam, mu, nu, box, opts)) j["witnesses"].push_back(to_json(w));
        }
        j["agree"] = agree;
        emit(j);
      } else {
        std::cout << "count=" << c.count << " signed=" << c.value << "\n";
        if (from_oracle) std::cout << "oracle=" << *from_oracle << "\n";
        if (from_growth) std::cout << "growth=" << *from_growth << "\n";
        if (witnesses) {
          const auto ws = lr_witnesses(lam, mu, nu, box, opts);
          if (!ws.empty()) std::cout << "\n" << to_text(ws);
        }
      }
      if (!agree) {
        std::cerr << "error=VerificationFailed message=cross-check disagrees with the rule\n";
        return kVerifyFailed;
      }
      return 0;
    }
    if (*expand) {
      const auto box = parse_rectangle(ex_rect);
      const Rule rule = parse_rule(ex_rule);
      CoefficientTable table;
      if (!ex_lambda.empty() || !ex_mu.empty()) {
        if (ex_lambda.empty() || ex_mu.empty()) throw error(errc::parse_error, "--lambda and --mu go together");
        table = build_table(box, rule, {{parse_partition(ex_lambda), parse_partition(ex_mu)}}, jobs);
      } else {
        table = cached_table(box, rule, jobs);
      }
      if (g_json) emit(table.to_json());
      else std::cout << table.to_csv();
      return 0;
    }
    if (*pieri) {
      const auto lam = parse_partition(pa.lambda), nu = parse_partition(pa.nu);
      const auto c = pa.rect.empty() ? pieri_coefficient(lam, t_row, nu)
                                     : pieri_coefficient(lam, t_row, nu, parse_rectangle(pa.rect));
      std::vector<IncreasingTableau> fs;
      if (fillings && contains(nu, lam)) fs = t_pieri_fillings(SkewShape(nu, lam), t_row);
      if (g_json) {
        json j{{"lambda", lam.to_string()}, {"t", t_row}, {"nu", nu.to_string()}, {"count", c.count}, {"signed", c.value}};
        if (fillings) {
          j["fillings"] = json::array();
          for (const auto& f : fs) j["fillings"].push_back(to_json(f));
        }
        emit(j);
      } else {
        std::cout << "count=" << c.count << " signed=" << c.value << "\n";
        if (!fs.empty()) std::cout << "\n" << to_text(fs);
      }
      return 0;
    }
    if (*proddiff) {
      const auto lam = parse_partition(da.lambda), mu = parse_partition(da.mu);
      const auto d = product_difference(lam, mu, parse_rectangle(da.rect));
      const bool signs = satisfies_sign_conjecture(d, lam, mu);
      if (g_json) emit({{"meet", meet(lam, mu).to_string()}, {"join", join(lam, mu).to_string()}, {"terms", json_of(d)},
                        {"signs_alternate", signs}});
      else std::cout << csv_of(d);
      return 0;
    }
    if (*verify) {
      const auto box = parse_rectangle(v_rect);
      std::vector<std::string> names = suite == "all" ? suite_names() : std::vector<std::string>{suite};
      bool all = true;
      json report = json::array();
      for (const auto& name : names) {
        const auto r = run_suite(name, box, jobs);
        all = all && r.passed;
        if (g_json) {
          json item{{"suite", r.name}, {"rect", box.to_string()}, {"passed", r.passed}, {"checked", r.checked}};
          if (!r.passed) item["counterexample"] = r.counterexample;
          report.push_back(std::move(item));
        } else {
          std::cout << name << " " << box.to_string() << " " << (r.passed ? "PASS" : "FAIL") << " checked=" << r.checked;
          if (!r.passed) std::cout << " counterexample=" << r.counterexample;
          std::cout << "\n";
        }
      }
      if (g_json) emit({{"passed", all}, {"suites", report}});
      return all ? 0 : kVerifyFailed;
    }
    if (*examples) return run_examples(data_dir);
  } catch (const error& e) {
    std::cerr << "error=" << to_string(e.code()) << " message=" << e.what() << "\n";
    return kBadInput;
  }
  return 0;
}
