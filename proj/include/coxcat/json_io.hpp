#pragma once

#include "coxcat/verify.hpp"

#include <nlohmann/json.hpp>

#include <cstdio>

namespace coxcat {

using OrderedJson = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

/// Rounds to 12 significant digits so exported decimals are stable across
/// runs and platforms.
inline double round12(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return std::strtod(buf, nullptr);
}

inline OrderedJson vector_json(const Vec& v) {
  OrderedJson arr = OrderedJson::array();
  for (int i = 0; i < v.size(); ++i) arr.push_back(round12(v(i)));
  return arr;
}

/// 0-based internal word -> 1-based generator letters.
inline OrderedJson word_json(const std::vector<int>& word) {
  OrderedJson arr = OrderedJson::array();
  for (int s : word) arr.push_back(s + 1);
  return arr;
}

inline OrderedJson export_roots(const Session& s) {
  OrderedJson out;
  out["schema_version"] = kSchemaVersion;
  out["type"] = s.sys().name();
  OrderedJson roots = OrderedJson::array();
  for (int i = 1; i <= s.order().num_positive(); ++i) {
    int id = s.order().root_of_rho(i);
    OrderedJson rec;
    rec["rho_index"] = i;
    rec["vector"] = vector_json(s.sys().positive_root(id));
    rec["simple_coefficients"] = vector_json(s.sys().expansion(s.sys().positive_root(id)));
    roots.push_back(std::move(rec));
  }
  out["roots"] = std::move(roots);
  return out;
}

inline OrderedJson export_order(const Session& s) {
  const BipartiteOrder& o = s.order();
  OrderedJson out;
  out["schema_version"] = kSchemaVersion;
  out["type"] = s.sys().name();
  out["rank"] = s.sys().rank();
  out["coxeter_number"] = o.coxeter_number();
  out["num_positive_roots"] = o.num_positive();
  out["left_block"] = word_json(o.left_block());
  out["right_block"] = word_json(o.right_block());
  out["w0_word"] = word_json(o.longest_word());
  OrderedJson rho = OrderedJson::array(), mu = OrderedJson::array();
  for (int i = 1; i <= o.sequence_length(); ++i) {
    rho.push_back(vector_json(o.rho(i)));
    mu.push_back(vector_json(o.mu(i)));
  }
  out["rho"] = std::move(rho);
  out["mu"] = std::move(mu);
  return out;
}

inline OrderedJson export_facets(const Session& s) {
  OrderedJson out;
  out["schema_version"] = kSchemaVersion;
  out["type"] = s.sys().name();
  OrderedJson facets = OrderedJson::array();
  for (const Facet& f : s.facets()) {
    OrderedJson rec;
    rec["indices"] = f.indices;
    rec["N"] = facet_N(f.rays, s.order());
    facets.push_back(std::move(rec));
  }
  out["facets"] = std::move(facets);
  return out;
}

inline OrderedJson export_climbing(const Session& s) {
  OrderedJson out;
  out["schema_version"] = kSchemaVersion;
  out["type"] = s.sys().name();
  OrderedJson arr = OrderedJson::array();
  for (const Facet& f : s.facets()) {
    OrderedJson rec;
    rec["facet"] = f.indices;
    rec["word"] = word_json(climbing_word(f, s.order(), s.word_order()));
    arr.push_back(std::move(rec));
  }
  out["climbing"] = std::move(arr);
  return out;
}

inline OrderedJson export_classes(const Session& s) {
  OrderedJson out;
  out["schema_version"] = kSchemaVersion;
  out["type"] = s.sys().name();
  OrderedJson arr = OrderedJson::array();
  for (const EquivClass& cls : s.classes()) {
    OrderedJson rec;
    rec["facet"] = s.facets()[cls.facet].indices;
    OrderedJson members = OrderedJson::array();
    for (int w : cls.members) members.push_back(word_json(s.group().element(w).word));
    rec["members"] = std::move(members);
    rec["min_word"] = word_json(s.group().element(cls.min_element).word);
    rec["max_word"] = word_json(s.group().element(cls.max_element).word);
    rec["falling_word"] = word_json(s.group().element(cls.falling).word);
    arr.push_back(std::move(rec));
  }
  out["classes"] = std::move(arr);
  return out;
}

inline OrderedJson export_info(const Session& s) {
  OrderedJson out;
  out["schema_version"] = kSchemaVersion;
  out["type"] = s.sys().name();
  out["rank"] = s.sys().rank();
  out["group_order"] = s.group().size();
  out["coxeter_number"] = s.order().coxeter_number();
  out["num_positive_roots"] = s.order().num_positive();
  out["catalan"] = catalan_number(s.order());
  return out;
}

inline OrderedJson verification_json(const std::vector<CheckResult>& results) {
  OrderedJson arr = OrderedJson::array();
  for (const CheckResult& r : results) {
    OrderedJson rec;
    rec["check"] = r.name;
    rec["status"] = r.status == CheckResult::kPass   ? "pass"
                    : r.status == CheckResult::kFail ? "fail"
                                                     : "skipped";
    if (!r.detail.empty()) rec["detail"] = r.detail;
    arr.push_back(std::move(rec));
  }
  return arr;
}

}  // namespace coxcat
