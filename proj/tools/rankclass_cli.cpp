// rankclass: command-line front end for the rankclass library.
//
// Exit codes: 0 success, 1 a verification check failed, 2 unparsable input,
// 3 well-formed input outside an operation's domain.

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "rankclass/rankclass.hpp"

namespace rc = rankclass;
using nlohmann::json;

namespace {

constexpr int kExitCheckFailed = 1;
constexpr int kExitParse = 2;
constexpr int kExitDomain = 3;

json terms_json(const std::map<rc::Partition, rc::Integer>& terms) {
  json out = json::array();
  for (const auto& [p, c] : terms) out.push_back({{"partition", p.parts()}, {"coefficient", c.get_str()}});
  return out;
}

json report_json(const rc::CheckReport& r) {
  return {{"name", r.name}, {"expected", r.expected}, {"actual", r.actual}, {"passed", r.passed}};
}

void print_reports(const std::vector<rc::CheckReport>& reports, bool as_json) {
  for (const auto& r : reports) {
    if (as_json) {
      std::cout << report_json(r).dump() << '\n';
    } else if (r.passed) {
      std::cout << "PASS " << r.name << ": " << r.actual << '\n';
    } else {
      std::cout << "FAIL " << r.name << ": expected " << r.expected << ", got " << r.actual << '\n';
    }
  }
}

struct Options {
  bool json = false;
  std::string perm, window, rank_set, diagram, family = "auto";
  std::vector<int> context;
  bool bruteforce = false;
  std::string lhs, rhs, cls;
  std::string scope;
  int max_n = 4;
};

int run_stanley(const Options& o) {
  const rc::Permutation w = rc::parse_permutation(o.perm);
  const rc::SchurExpansion f = rc::stanley(w);
  if (o.json) {
    std::cout << json{{"command", "stanley"}, {"permutation", rc::to_string(w)}, {"schur", rc::to_string(f)},
                      {"terms", terms_json(f.terms())}}
                     .dump()
              << '\n';
  } else {
    std::cout << rc::to_string(f) << '\n';
  }
  return 0;
}

int run_affine_stanley(const Options& o) {
  const rc::AffinePermutation f = rc::parse_affine(o.window);
  const rc::MonomialExpansion m = rc::affine_stanley(f);
  const rc::SchurExpansion s = rc::monomial_to_schur(m);
  if (o.json) {
    std::cout << json{{"command", "affine-stanley"}, {"window", rc::to_string(f)}, {"schur", rc::to_string(s)},
                      {"monomial", rc::to_string(m)}, {"terms", terms_json(s.terms())}}
                     .dump()
              << '\n';
  } else {
    std::cout << rc::to_string(s) << '\n';
  }
  return 0;
}

int run_rank_class(const Options& o) {
  const rc::RankSet m = rc::parse_rank_set(o.rank_set);
  const rc::Permutation w = rc::w_of_rank_set(m);
  int k = m.size(), n = m.ambient_n();
  if (!o.context.empty()) {
    if (o.context.size() != 2) throw rc::Error(rc::ErrorKind::Parse, "--context takes K,N");
    k = o.context[0];
    n = o.context[1];
  }
  const rc::SchubertClass cls = rc::phi(rc::stanley(w), k, n);
  const rc::Integer degree = rc::class_degree(cls);
  if (o.json) {
    std::cout << json{{"command", "rank-class"}, {"rank_set", rc::to_string(m)}, {"w", rc::to_string(w)},
                      {"class", rc::to_string(cls)}, {"degree", degree.get_str()}}
                     .dump()
              << '\n';
  } else {
    std::cout << "w_M: " << rc::to_string(w) << '\n'
              << "class: " << rc::to_string(cls) << '\n'
              << "degree: " << degree.get_str() << '\n';
  }
  return 0;
}

int run_diagram_specht(const Options& o) {
  const rc::Diagram d = rc::parse_diagram(o.diagram);
  const rc::SchurExpansion s =
      o.bruteforce ? rc::specht_bruteforce(d) : rc::specht_schur(d, rc::parse_family(o.family));
  if (o.json) {
    json out{{"command", "diagram-specht"}, {"diagram", rc::to_string(d)}, {"schur", rc::to_string(s)},
             {"terms", terms_json(s.terms())}};
    if (rc::is_schur_nonnegative(s)) out["dimension"] = rc::specht_dim(s).get_str();
    std::cout << out.dump() << '\n';
  } else {
    std::cout << rc::to_string(s) << '\n';
  }
  return 0;
}

int run_schubert_mult(const Options& o) {
  const rc::SchubertClass x = rc::class_product(rc::parse_schubert(o.lhs), rc::parse_schubert(o.rhs));
  if (o.json) {
    std::cout << json{{"command", "schubert-mult"}, {"class", rc::to_string(x)}, {"terms", terms_json(x.terms())}}
                     .dump()
              << '\n';
  } else {
    std::cout << rc::to_string(x) << '\n';
  }
  return 0;
}

int run_schubert_degree(const Options& o) {
  const rc::SchubertClass x = rc::parse_schubert(o.cls);
  const rc::Integer degree = rc::class_degree(x);
  if (o.json) {
    std::cout << json{{"command", "schubert-degree"}, {"class", rc::to_string(x)}, {"degree", degree.get_str()}}
                     .dump()
              << '\n';
  } else {
    std::cout << degree.get_str() << '\n';
  }
  return 0;
}

int run_verify(const Options& o) {
  const auto reports = o.scope == "paper" ? rc::replay_counterexample() : rc::run_all(o.max_n);
  print_reports(reports, o.json);
  return rc::all_passed(reports) ? 0 : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Schubert calculus for rank varieties, Stanley symmetric functions and Specht modules"};
  app.require_subcommand(1);
  Options o;
  app.add_flag("--json", o.json, "Emit one JSON object per result");

  auto* stanley = app.add_subcommand("stanley", "Schur expansion of the Stanley symmetric function F_w");
  stanley->add_option("w", o.perm, "Permutation in one-line notation (digits, or comma-separated)")->required();

  auto* affine = app.add_subcommand("affine-stanley", "Schur expansion of the affine Stanley function");
  affine->add_option("window", o.window, "Window such as 5,2,7,4;n=4")->required();

  auto* rank = app.add_subcommand("rank-class", "w_M, Schubert class and degree of a rank variety");
  rank->add_option("rankset", o.rank_set, "Rank set such as [1,3],[3,6],[4,5];n=6")->required();
  rank->add_option("--context", o.context, "Evaluate phi in Gr(K,N) instead of Gr(#M,n)")->delimiter(',');

  auto* specht = app.add_subcommand("diagram-specht", "Frobenius characteristic of a diagram's Specht module");
  specht->add_option("diagram", o.diagram, "Diagram such as (1,1),(2,2);box=2x2")->required();
  specht->add_option("--family", o.family, "auto, skew, perm:<w>, product or dual");
  specht->add_flag("--bruteforce", o.bruteforce, "Use the group-algebra computation (at most 6 cells)");

  auto* schubert = app.add_subcommand("schubert", "Schubert class arithmetic");
  schubert->require_subcommand(1);
  auto* mult = schubert->add_subcommand("mult", "Product of two classes");
  mult->add_option("a", o.lhs, "Class such as 1*o[1]@Gr(2,4)")->required();
  mult->add_option("b", o.rhs, "Class in the same Grassmannian")->required();
  auto* degree = schubert->add_subcommand("degree", "Degree of a class");
  degree->add_option("class", o.cls, "Class such as 1*o[1]@Gr(2,4)")->required();

  auto* verify = app.add_subcommand("verify", "Run verification checks");
  verify->add_option("scope", o.scope, "paper or suite")->required()->check(CLI::IsMember({"paper", "suite"}));
  verify->add_option("--max-n", o.max_n, "Largest size for the invariant suites")->check(CLI::Range(0, 6));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitParse;
  }

  try {
    if (*stanley) return run_stanley(o);
    if (*affine) return run_affine_stanley(o);
    if (*rank) return run_rank_class(o);
    if (*specht) return run_diagram_specht(o);
    if (*mult) return run_schubert_mult(o);
    if (*degree) return run_schubert_degree(o);
    if (*verify) return run_verify(o);
  } catch (const rc::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.kind() == rc::ErrorKind::Parse ? kExitParse : kExitDomain;
  }
  return kExitParse;
}
