#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "rankcodes/json_io.hpp"
#include "rankcodes/verify_paper.hpp"

using namespace rankcodes;

namespace {

bigint effective_budget() {
  if (const char* env = std::getenv("RANKCODE_BUDGET")) {
    try {
      bigint b(env);
      if (b > 0) return b;
    } catch (...) {
    }
    throw std::invalid_argument("RANKCODE_BUDGET must be a positive integer");
  }
  return kDefaultBudget;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << "\n";
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw std::invalid_argument("cannot write " + out_path);
  out << text;
  if (!text.empty() && text.back() != '\n') out << "\n";
}

int singleton_bound(std::size_t n, std::size_t m, std::size_t t) {
  return static_cast<int>(n) - static_cast<int>((t + m - 1) / m) + 1;
}

int cmd_construct(const std::string& what, std::uint32_t q, std::size_t n,
                  std::size_t m, long t, long k, std::uint64_t seed,
                  const std::string& in_path, const std::string& out_path) {
  AnyCode result = [&]() -> AnyCode {
    if (what == "gabidulin") {
      if (k < 1) throw std::invalid_argument("k >= 1 violated");
      if (static_cast<std::size_t>(k) > n) throw std::invalid_argument("k <= n violated");
      if (n > m) throw std::invalid_argument("n <= m violated");
      FieldPtr f = Field::extension(q, static_cast<std::uint32_t>(m));
      std::vector<gfelem> v;
      gfelem x = 1;
      for (std::size_t i = 0; i < n; ++i) {
        v.push_back(x);
        x = f->mul(x, f->gen());
      }
      return gabidulin(f, n, static_cast<std::size_t>(k), v);
    }
    if (what == "random") {
      if (k > 0) {
        if (static_cast<std::size_t>(k) > n) throw std::invalid_argument("k <= n violated");
        if (n > m) throw std::invalid_argument("n <= m violated");
        FieldPtr f = Field::extension(q, static_cast<std::uint32_t>(m));
        return random_vector_code(f, n, static_cast<std::size_t>(k), seed);
      }
      if (t < 1 || static_cast<std::size_t>(t) >= n * m)
        throw std::invalid_argument("1 <= t < n*m violated");
      if (n > m) throw std::invalid_argument("n <= m violated");
      return random_matrix_code(Field::prime(q), n, m, static_cast<std::size_t>(t), seed);
    }
    if (what == "extend") {
      if (in_path.empty()) throw std::invalid_argument("extend requires --in <code-file>");
      AnyCode base = load_code(in_path);
      if (!std::holds_alternative<VectorCode>(base))
        throw std::invalid_argument("extend applies to vector codes");
      return extend(std::get<VectorCode>(base));
    }
    throw std::invalid_argument("unknown construction: " + what);
  }();

  std::visit(
      [&](const auto& c) {
        std::size_t dim = c.dim();
        std::size_t nn = c.n(), mm = c.m();
        std::size_t tdim =
            std::holds_alternative<MatrixCode>(result) ? dim : dim * mm;
        std::cerr << "q=" << c.q() << " n=" << nn << " m=" << mm
                  << " dim=" << dim << " singleton-bound d <= "
                  << singleton_bound(nn, mm, tdim) << "\n";
      },
      result);
  emit(code_to_json(result).dump(2), out_path);
  return 0;
}

int cmd_analyze(const std::string& path, bool weights, const std::string& checks,
                const std::string& format, const std::string& out_path) {
  const bigint budget = effective_budget();
  AnyCode code = load_code(path);
  CodeReport rep = std::visit(
      [&](const auto& c) { return classify(c, budget); }, code);
  json j = report_to_json(rep);

  std::vector<CheckResult> rows;
  {
    MacWilliamsResult mw = macwilliams_check(rep.dist, rep.dist_dual);
    CheckResult c{"macwilliams"};
    c.ok = mw.ok;
    rows.push_back(c);
    CheckResult s{"singleton"};
    s.ok = rep.d <= rep.singleton_bound;
    rows.push_back(s);
  }
  if (checks == "all") {
    for (const auto& c : identity_checks(rep)) rows.push_back(c);
  }
  j["checks"] = checks_to_json(rows);

  if (weights) {
    GenWeightProfile p = std::visit(
        [&](const auto& c) {
          if constexpr (std::is_same_v<std::decay_t<decltype(c)>, MatrixCode>)
            return generalized_weights_matrix(c, budget);
          else
            return generalized_weights_vector(c, budget);
        },
        code);
    j["generalized_weights"] = profile_to_json(p);
  }

  if (format == "csv") {
    emit(distributions_to_csv(rep.dist, rep.dist_dual), out_path);
  } else if (format == "text") {
    std::ostringstream s;
    s << "q=" << rep.q << " n=" << rep.n << " m=" << rep.m << " t=" << rep.t
      << "\nd=" << rep.d << " d_dual=" << rep.d_dual << " rdef=" << rep.rdef
      << " rdef_dual=" << rep.rdef_dual << "\nclass=" << rep.cls
      << " dually_amrd=" << (rep.dually_amrd ? "true" : "false") << "\n";
    if (weights) s << "weights=" << j["generalized_weights"].dump() << "\n";
    emit(s.str(), out_path);
  } else {
    emit(j.dump(2), out_path);
  }

  for (const auto& c : rows)
    if (c.applicable && !c.ok) return 1;
  return 0;
}

int cmd_dual(const std::string& path, const std::string& out_path) {
  AnyCode code = load_code(path);
  AnyCode d = std::visit([](const auto& c) -> AnyCode { return dual(c); }, code);
  emit(code_to_json(d).dump(2), out_path);
  return 0;
}

int cmd_verify_paper(const std::string& only, bool inject_failure) {
  const bigint budget = effective_budget();
  std::vector<ClaimResult> rows = paper_claims(only, inject_failure, budget);
  bool all = true;
  for (const auto& r : rows) {
    std::cout << (r.pass ? "PASS" : "FAIL") << "  " << r.id << "  "
              << r.description;
    if (!r.pass) {
      std::cout << "  [" << r.detail << "]";
      all = false;
    }
    std::cout << "\n";
  }
  std::cout << (all ? "all claims passed" : "some claims FAILED") << " ("
            << rows.size() << " rows)\n";
  return all ? 0 : 1;
}

int cmd_search(std::uint32_t q, std::size_t n, std::size_t m, std::size_t t,
               bool exhaustive, std::uint64_t seeds, const std::string& out_path) {
  const bigint budget = effective_budget();
  if (n > m) throw std::invalid_argument("n <= m violated");
  if (t < 1 || t >= n * m) throw std::invalid_argument("1 <= t < n*m violated");
  FieldPtr f = Field::prime(q);
  std::vector<MatrixCode> witnesses;
  std::uint64_t examined = 0;
  auto consider = [&](const MatrixCode& code) {
    ++examined;
    CodeReport rep = classify(code, budget);
    if (!rep.dually_amrd) return;
    for (const auto& w : witnesses)
      if (w == code) return;
    witnesses.push_back(code);
  };
  if (exhaustive) {
    for_each_subspace(f, n * m, t, budget, [&](const Subspace& s) {
      consider(MatrixCode::from_flat(f, n, m, s.basis()));
    });
  } else {
    for (std::uint64_t seed = 1; seed <= seeds; ++seed)
      consider(random_matrix_code(f, n, m, t, seed));
  }
  json j;
  j["params"] = {{"q", q}, {"n", n}, {"m", m}, {"t", t}};
  j["examined"] = examined;
  j["count"] = witnesses.size();
  json arr = json::array();
  for (const auto& w : witnesses) arr.push_back(code_to_json(w));
  j["witnesses"] = arr;
  emit(j.dump(2), out_path);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rank-metric code construction, analysis, and verification"};
  app.require_subcommand(1);

  // construct
  auto* construct = app.add_subcommand("construct", "build a code file");
  std::string what, in_path, out_path;
  std::uint32_t q = 2;
  std::size_t n = 0, m = 0;
  long t = 0, k = 0;
  std::uint64_t seed = 0;
  construct->add_option("what", what, "gabidulin | random | extend")->required();
  construct->add_option("--q", q);
  construct->add_option("--n", n);
  construct->add_option("--m", m);
  construct->add_option("--t", t);
  construct->add_option("--k", k);
  construct->add_option("--seed", seed);
  construct->add_option("--in", in_path);
  construct->add_option("--out", out_path);

  // analyze
  auto* analyze = app.add_subcommand("analyze", "full report for a code file");
  std::string an_path, an_checks = "basic", an_format = "json", an_out;
  bool an_weights = false;
  analyze->add_option("file", an_path)->required();
  analyze->add_flag("--weights", an_weights);
  analyze->add_option("--checks", an_checks)
      ->check(CLI::IsMember({"all", "basic"}));
  analyze->add_option("--format", an_format)
      ->check(CLI::IsMember({"json", "csv", "text"}));
  analyze->add_option("--out", an_out);

  // dual
  auto* dualc = app.add_subcommand("dual", "write the dual code");
  std::string d_path, d_out;
  dualc->add_option("file", d_path)->required();
  dualc->add_option("--out", d_out);

  // verify-paper
  auto* verify = app.add_subcommand("verify-paper", "run the claim catalog");
  std::string only;
  bool inject = false;
  verify->add_option("--only", only);
  verify->add_flag("--inject-failure", inject)->group("");  // hidden, test-only

  // search
  auto* search = app.add_subcommand("search", "hunt for dually AMRD codes");
  std::uint32_t s_q = 2;
  std::size_t s_n = 0, s_m = 0, s_t = 0;
  bool s_exhaustive = false;
  std::uint64_t s_seeds = 100;
  std::string s_out;
  search->add_option("--q", s_q)->required();
  search->add_option("--n", s_n)->required();
  search->add_option("--m", s_m)->required();
  search->add_option("--t", s_t)->required();
  search->add_flag("--exhaustive", s_exhaustive);
  search->add_option("--seeds", s_seeds);
  search->add_option("--out", s_out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (construct->parsed())
      return cmd_construct(what, q, n, m, t, k, seed, in_path, out_path);
    if (analyze->parsed())
      return cmd_analyze(an_path, an_weights, an_checks, an_format, an_out);
    if (dualc->parsed()) return cmd_dual(d_path, d_out);
    if (verify->parsed()) return cmd_verify_paper(only, inject);
    if (search->parsed())
      return cmd_search(s_q, s_n, s_m, s_t, s_exhaustive, s_seeds, s_out);
  } catch (const budget_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const json::exception& e) {
    std::cerr << "error: malformed input: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
