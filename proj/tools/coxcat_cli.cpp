// Command-line front end: build a finite Coxeter group, inspect the
// bipartite root ordering and the associahedron fan, export JSON/CSV/text,
// and run the verification suite.
//
// Exit codes: 0 success, 1 verification failure, 2 usage/config error.

#include "coxcat/json_io.hpp"

#include <CLI11.hpp>

#include <iostream>

namespace {

using namespace coxcat;

struct CliOptions {
  RunConfig config;
  std::string format = "text";
};

int print_json_or_text(const OrderedJson& j, const std::string& format) {
  if (format == "json") {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << j.dump(2) << "\n";  // text falls back to pretty JSON
  }
  return 0;
}

int cmd_info(const CliOptions& opt) {
  Session s(opt.config);
  OrderedJson j = export_info(s);
  if (opt.format == "json") {
    std::cout << j.dump(2) << "\n";
  } else if (opt.format == "csv") {
    std::cout << "field,value\n";
    for (auto& [k, v] : j.items()) std::cout << k << "," << v.dump() << "\n";
  } else {
    std::cout << "type            " << j["type"].get<std::string>() << "\n"
              << "rank            " << j["rank"] << "\n"
              << "|W|             " << j["group_order"] << "\n"
              << "coxeter number  " << j["coxeter_number"] << "\n"
              << "positive roots  " << j["num_positive_roots"] << "\n"
              << "catalan         " << j["catalan"] << "\n";
  }
  return 0;
}

int cmd_verify(const CliOptions& opt) {
  Session s(opt.config);
  VerifyOptions vopt;
  vopt.seed = opt.config.seed;
  std::vector<CheckResult> results = run_verification(s, vopt);
  bool all_ok = true;
  if (opt.format == "json") {
    std::cout << verification_json(results).dump(2) << "\n";
    for (const CheckResult& r : results) all_ok &= (r.status != CheckResult::kFail);
  } else {
    for (const CheckResult& r : results) {
      const char* tag = r.status == CheckResult::kPass   ? "PASS"
                        : r.status == CheckResult::kFail ? "FAIL"
                                                         : "SKIP";
      std::cout << "[" << tag << "] " << r.name;
      if (!r.detail.empty()) std::cout << " (" << r.detail << ")";
      std::cout << "\n";
      all_ok &= (r.status != CheckResult::kFail);
    }
  }
  return all_ok ? 0 : 1;
}

int cmd_export(const CliOptions& opt, const std::string& what) {
  Session s(opt.config);
  OrderedJson j;
  if (what == "roots") {
    j = export_roots(s);
    if (opt.format == "csv") {
      std::cout << "rho_index,vector\n";
      for (const auto& r : j["roots"]) {
        std::cout << r["rho_index"] << "," << r["vector"].dump() << "\n";
      }
      return 0;
    }
  } else if (what == "order") {
    j = export_order(s);
  } else if (what == "facets") {
    j = export_facets(s);
  } else if (what == "climbing") {
    j = export_climbing(s);
  } else if (what == "classes") {
    j = export_classes(s);
  } else {
    throw CLI::ValidationError("unknown export target: " + what);
  }
  return print_json_or_text(j, opt.format);
}

int cmd_order(const CliOptions& opt, const std::string& check_list) {
  Session s(opt.config);
  if (check_list.empty()) {
    return print_json_or_text(export_order(s), opt.format);
  }
  // --check takes a comma-separated list of 1-based rho indices and runs
  // the ordered-root-set criterion on it.
  std::vector<int> roots;
  std::stringstream ss(check_list);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    int i = std::stoi(tok);
    if (i < 1 || i > s.order().num_positive()) {
      throw BadSpec("rho index out of range: " + tok);
    }
    roots.push_back(s.order().root_of_rho(i));
  }
  PapiResult res = s.word_order().papi_check(roots);
  if (res.valid()) {
    std::vector<int> word = s.word_order().word_from_ordered_roots(roots);
    std::cout << "valid; word:";
    for (int l : word) std::cout << " " << (l + 1);
    std::cout << "\n";
    return 0;
  }
  const auto& v = *res.violation;
  std::cout << "violation of condition "
            << (v.clause == PapiViolation::Clause::kBetween ? "(i)" : "(ii)")
            << " on triple rho_" << s.order().rho_index_of_root(v.triple.sigma)
            << ", rho_" << s.order().rho_index_of_root(v.triple.tau) << " -> rho_"
            << s.order().rho_index_of_root(v.triple.rho) << "\n";
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite Coxeter groups: bipartite root orderings, the "
               "associahedron fan, climbing and falling elements"};
  app.require_subcommand(1);

  CliOptions opt;
  app.add_option("--type", opt.config.group_spec, "group symbol, e.g. A3, B4, H3, I2(7)");
  app.add_option("--coxeter-matrix", opt.config.matrix_file,
                 "file with rank then the Coxeter matrix");
  app.add_option("--tol", opt.config.tolerance, "numeric tolerance (0, 1e-3)");
  app.add_option("--format", opt.format, "output format: text, json, csv")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--budget", opt.config.budget, "maximum group order to enumerate");
  app.add_option("--seed", opt.config.seed, "seed for randomised probes");

  auto* info = app.add_subcommand("info", "group summary: rank, |W|, h, Catalan number");
  auto* verify = app.add_subcommand("verify", "run the full verification suite");
  std::string what;
  auto* exp = app.add_subcommand("export", "export roots|order|facets|climbing|classes");
  exp->add_option("what", what, "what to export")->required();
  std::string check_list;
  auto* order = app.add_subcommand("order", "show the bipartite ordering");
  order->add_option("--check", check_list,
                    "comma-separated 1-based rho indices to test as an ordered root set");
  auto* facets = app.add_subcommand("facets", "emit the facet list as JSON");
  auto* classes = app.add_subcommand("classes", "emit the equivalence classes as JSON");

  try {
    app.parse(argc, argv);
    if (opt.config.group_spec.empty() && opt.config.matrix_file.empty()) {
      std::cerr << "error: --type or --coxeter-matrix is required\n";
      return 2;
    }
    if (info->parsed()) return cmd_info(opt);
    if (verify->parsed()) return cmd_verify(opt);
    if (exp->parsed()) return cmd_export(opt, what);
    if (order->parsed()) return cmd_order(opt, check_list);
    if (facets->parsed()) {
      CliOptions o = opt;
      o.format = "json";
      return cmd_export(o, "facets");
    }
    if (classes->parsed()) {
      CliOptions o = opt;
      o.format = "json";
      return cmd_export(o, "classes");
    }
    return 2;
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const coxcat::BadSpec& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const coxcat::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
