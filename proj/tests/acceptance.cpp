// Acceptance gate: one line per criterion, exit 1 if any fails.

#include "coxcat/verify.hpp"

#include <iostream>
#include <map>
#include <set>

using namespace coxcat;

namespace {

std::vector<std::string> small_types() {  // |W| <= 1152
  std::vector<std::string> out = {"A1", "A2", "A3", "A4", "B2", "B3",
                                  "B4", "D4", "F4", "H3"};
  for (int m = 3; m <= 12; ++m) out.push_back("I2(" + std::to_string(m) + ")");
  return out;
}

std::vector<std::string> all_types() {
  auto out = small_types();
  out.push_back("H4");
  return out;
}

std::map<std::string, std::unique_ptr<Session>> g_sessions;

Session& session(const std::string& type) {
  auto it = g_sessions.find(type);
  if (it == g_sessions.end()) {
    RunConfig cfg;
    cfg.group_spec = type;
    it = g_sessions.emplace(type, std::make_unique<Session>(cfg)).first;
  }
  return *it->second;
}

bool g_all_ok = true;

void report(int num, const std::string& title, bool ok, const std::string& detail = "") {
  std::cout << (ok ? "[PASS] " : "[FAIL] ") << "criterion " << num << ": " << title;
  if (!detail.empty()) std::cout << " — " << detail;
  std::cout << std::endl;
  g_all_ok &= ok;
}

int element_count_from_facets(Session& s, bool falling) {
  std::set<PermKey> keys;
  for (const Facet& f : s.facets()) {
    std::vector<int> word = falling ? falling_word(f, s.order(), s.dual())
                                    : climbing_word(f, s.order(), s.word_order());
    keys.insert(perm_key_of(s.sys(), evaluate_word(s.sys(), word)));
  }
  return static_cast<int>(keys.size());
}

void criterion1() {
  std::string bad;
  for (const std::string& type : all_types()) {
    Session& s = session(type);
    long long cat = catalan_number(s.order());
    long long facets = static_cast<long long>(s.facets().size());
    long long climbing = element_count_from_facets(s, false);
    long long falling = element_count_from_facets(s, true);
    if (facets != cat || climbing != cat || falling != cat) {
      bad = type + ": facets=" + std::to_string(facets) +
            " climbing=" + std::to_string(climbing) +
            " falling=" + std::to_string(falling) + " catalan=" + std::to_string(cat);
      break;
    }
    if (type == "H4" && cat != 280) { bad = "H4 catalan != 280"; break; }
  }
  report(1, "facet, climbing and falling counts all equal the Catalan number",
         bad.empty(), bad);
}

void criterion2() {
  std::string bad;
  for (const std::string& type : small_types()) {
    Session& s = session(type);
    const Group& g = s.group();
    std::set<PermKey> scan, from_facets, sort_set;
    for (int w = 0; w < g.size(); ++w) {
      if (s.word_order().is_climbing(g.inversions(w), s.order())) {
        scan.insert(g.element(w).perm_key);
      }
      if (sortable(g, w, s.order())) sort_set.insert(g.element(w).perm_key);
    }
    for (const Facet& f : s.facets()) {
      Mat m = evaluate_word(s.sys(), climbing_word(f, s.order(), s.word_order()));
      from_facets.insert(perm_key_of(s.sys(), m));
    }
    if (scan != from_facets || scan != sort_set) { bad = type; break; }
  }
  report(2, "exhaustive climbing scan = facet-generated set = sortable set",
         bad.empty(), bad);
}

void criterion3() {
  std::string bad;
  for (const std::string& type : small_types()) {
    try {
      Session& s = session(type);
      const Group& g = s.group();
      for (const EquivClass& cls : s.classes()) {  // throws on either inclusion failing
        if (g.mult(cls.falling, g.longest()) != cls.max_element) {
          throw IntervalViolation("max is not falling . w0");
        }
        if (!s.word_order().is_climbing(g.inversions(cls.min_element), s.order())) {
          throw IntervalViolation("min is not climbing");
        }
      }
    } catch (const Error& e) {
      bad = type + ": " + e.what();
      break;
    }
  }
  report(3, "every class is the weak-order interval [climbing min, falling . w0]",
         bad.empty(), bad);
}

void criterion4() {
  std::string bad;
  for (const std::string& type : small_types()) {
    Session& s = session(type);
    if (s.group().size() > 240) continue;
    VerifyOptions opt;
    CheckResult r = check_papi_sweep(s, opt);
    if (r.status != CheckResult::kPass) { bad = type + ": " + r.detail; break; }
  }
  report(4, "every reduced word passes the ordering criterion and round-trips",
         bad.empty(), bad);
}

void criterion5() {
  std::string bad;
  for (const std::string& type : all_types()) {
    auto rep = session(type).order().verify_sign_table();
    if (!rep.ok()) {
      bad = type + ": " + std::to_string(rep.violations.size()) + " violations";
      break;
    }
  }
  report(5, "sign table holds for all index pairs in every type", bad.empty(), bad);
}

void criterion6() {
  std::string bad;
  for (const std::string& type : all_types()) {
    try {
      session(type).dual();  // build_dual checks every identity to 1e-8
    } catch (const Error& e) {
      bad = type + ": " + e.what();
      break;
    }
  }
  report(6, "dual simple system and reversed sequences match in every type",
         bad.empty(), bad);
}

void criterion7() {
  std::string bad;
  for (const std::string& type : all_types()) {
    CheckResult r = check_wall_crossing(session(type));
    if (r.status != CheckResult::kPass) { bad = type + ": " + r.detail; break; }
  }
  report(7, "crossing the last wall keeps the element climbing, in the neighbour facet",
         bad.empty(), bad);
}

void criterion8() {
  std::string bad;
  for (const std::string& type : small_types()) {
    CheckResult r = check_partition(session(type));
    if (r.status != CheckResult::kPass) { bad = type + ": " + r.detail; break; }
  }
  report(8, "chambers partition over facets; identity first, longest element last",
         bad.empty(), bad);
}

void criterion9() {
  Session& s = session("A2");
  std::set<std::vector<int>> indices;
  for (const Facet& f : s.facets()) indices.insert(f.indices);
  bool facets_ok = indices == std::set<std::vector<int>>{
                                  {1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 5}};
  std::set<std::vector<int>> words;
  for (const Facet& f : s.facets()) {
    words.insert(climbing_word(f, s.order(), s.word_order()));
  }
  bool climbing_ok = words == std::set<std::vector<int>>{
                                  {}, {0}, {1}, {0, 1}, {0, 1, 0}};
  report(9, "A2 pentagon: golden facets and climbing set", facets_ok && climbing_ok,
         facets_ok ? (climbing_ok ? "" : "climbing set") : "facet indices");
}

}  // namespace

int main() {
  try {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
  } catch (const std::exception& e) {
    std::cout << "[FAIL] unexpected exception: " << e.what() << std::endl;
    return 1;
  }
  return g_all_ok ? 0 : 1;
}
