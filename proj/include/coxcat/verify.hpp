#pragma once

#include "coxcat/session.hpp"

#include <random>
#include <set>
#include <sstream>

namespace coxcat {

struct CheckResult {
  std::string name;
  enum Status { kPass, kFail, kSkip } status;
  std::string detail;
};

struct VerifyOptions {
  /// Reduced-word sweeps (every reduced word of every element) only run for
  /// groups up to this order.
  std::size_t word_sweep_max_order = 240;
  /// Exhaustive climbing scans and sortability cross-checks cap here; larger
  /// groups are covered by the single-word facet checks only.
  std::size_t scan_max_order = 1152;
  std::uint64_t seed = 1;
  int probe_count = 1000;
  int span_samples = 200;
};

namespace detail {

inline CheckResult pass(std::string name, std::string detail = "") {
  return {std::move(name), CheckResult::kPass, std::move(detail)};
}
inline CheckResult fail(std::string name, std::string detail) {
  return {std::move(name), CheckResult::kFail, std::move(detail)};
}
inline CheckResult skip(std::string name, std::string detail) {
  return {std::move(name), CheckResult::kSkip, std::move(detail)};
}

}  // namespace detail

inline CheckResult check_sign_table(const Session& s) {
  auto rep = s.order().verify_sign_table();
  if (rep.ok()) return detail::pass("sign-table");
  std::ostringstream os;
  os << rep.violations.size() << " violations, worst " << rep.max_deviation;
  return detail::fail("sign-table", os.str());
}

inline CheckResult check_order_invariants(const Session& s) {
  const BipartiteOrder& o = s.order();
  const CoxeterSystem& sys = s.sys();
  const int n = sys.rank();
  const int len = o.sequence_length();
  const Mat& c = o.coxeter_transform();
  const double tol = 1e-8;
  auto bad = [](const std::string& what) {
    return detail::fail("order-invariants", what);
  };

  for (int i = 1; i + n <= len; ++i) {
    if (!approx_eq(o.rho(i + n), Vec(c * o.rho(i)), tol)) return bad("rho recurrence");
    if (!approx_eq(o.mu(i + n), Vec(c * o.mu(i)), tol)) return bad("mu recurrence");
  }
  for (int i = 1; i <= len; ++i) {
    if (std::abs(o.rho(i).dot(o.mu(i)) - 1.0) > tol) return bad("rho_i . mu_i != 1");
    if (!approx_eq(o.mu(i), Vec(o.mu_map() * o.rho(i)), tol)) return bad("mu != mu_map rho");
    Vec back = 0.5 * (Mat::Identity(n, n) - c) * o.mu(i);
    if (!approx_eq(o.rho(i), back, tol)) return bad("rho != (1/2)(I-c) mu");
  }
  for (int j = 1; j <= n; ++j) {
    if (!approx_eq(o.mu(j), sys.beta(o.generator_order()[j - 1]), tol)) {
      return bad("mu_j != beta_j for j <= n");
    }
  }

  // The w0 word's stepwise inversion order reproduces rho_1..rho_{nh/2}.
  std::vector<int> inv = inversions_from_word(sys, o.longest_word());
  if (static_cast<int>(inv.size()) != o.num_positive()) return bad("w0 word length");
  for (int i = 1; i <= o.num_positive(); ++i) {
    if (inv[i - 1] != o.root_of_rho(i)) return bad("w0 inversion order != rho order");
  }

  // Tail rays positively scale w0(beta_j): they span the opposite chamber.
  Mat w0 = evaluate_word(sys, o.longest_word());
  for (int k = 1; k <= n; ++k) {
    Vec ray = o.mu(o.num_positive() + k);
    bool matched = false;
    for (int j = 0; j < n && !matched; ++j) {
      Vec img = w0 * sys.beta(j);
      double scale = ray.norm() / img.norm();
      matched = approx_eq(ray, Vec(scale * img), 1e-7);
    }
    if (!matched) return bad("tail mu is not a ray of w0(C)");
  }
  for (int i = o.num_positive() + 1; i <= len; ++i) {
    if (!o.rho_is_negative(i)) return bad("tail rho not flagged negative");
  }
  return detail::pass("order-invariants");
}

inline CheckResult check_papi_sweep(const Session& s, const VerifyOptions& opt) {
  const Group& g = s.group();
  if (static_cast<std::size_t>(g.size()) > opt.word_sweep_max_order) {
    return detail::skip("papi-sweep", "group order " + std::to_string(g.size()) +
                                          " exceeds sweep budget");
  }
  long long words = 0;
  std::string failure;
  for_each_reduced_word(g, [&](int id, const std::vector<int>& word) {
    if (!failure.empty()) return;
    ++words;
    std::vector<int> roots = inversions_from_word(s.sys(), word);
    if (!s.word_order().papi_check(roots).valid()) {
      failure = "word of element " + std::to_string(id) + " rejected";
      return;
    }
    if (s.word_order().word_from_ordered_roots(roots) != word) {
      failure = "round trip failed for element " + std::to_string(id);
    }
  });
  if (!failure.empty()) return detail::fail("papi-sweep", failure);
  return detail::pass("papi-sweep", std::to_string(words) + " reduced words");
}

inline CheckResult check_papi_probe(const Session& s, const VerifyOptions& opt) {
  const Group& g = s.group();
  if (static_cast<std::size_t>(g.size()) > opt.word_sweep_max_order) {
    return detail::skip("papi-probe", "group order exceeds sweep budget");
  }
  std::set<std::vector<int>> induced;
  for_each_reduced_word(g, [&](int, const std::vector<int>& word) {
    induced.insert(inversions_from_word(s.sys(), word));
  });
  std::mt19937_64 rng(opt.seed);
  int rejected = 0, accepted = 0;
  for (int k = 0; k < opt.probe_count; ++k) {
    int id = static_cast<int>(rng() % g.size());
    std::vector<int> roots = g.inversions(id).to_vector();
    std::shuffle(roots.begin(), roots.end(), rng);
    bool valid = s.word_order().papi_check(roots).valid();
    bool word_induced = induced.count(roots) > 0;
    if (valid != word_induced) {
      return detail::fail("papi-probe", "criterion disagrees with brute force");
    }
    (valid ? accepted : rejected)++;
  }
  return detail::pass("papi-probe", std::to_string(accepted) + " accepted, " +
                                        std::to_string(rejected) + " rejected");
}

inline CheckResult check_facet_count(const Session& s) {
  long long cat = catalan_number(s.order());
  if (static_cast<long long>(s.facets().size()) != cat) {
    return detail::fail("facet-count", std::to_string(s.facets().size()) + " facets vs Catalan " +
                                           std::to_string(cat));
  }
  return detail::pass("facet-count", std::to_string(cat) + " facets");
}

/// Static facet geometry: the face opposite the last vertex lies in the wall
/// rho_{i-n}, and the facet sits in the closure of mu Z_i \ mu Z_{i-1}.
inline CheckResult check_facet_walls(const Session& s) {
  const BipartiteOrder& o = s.order();
  const int n = s.sys().rank();
  const double tol = 1e-8;
  for (std::size_t f = 0; f < s.facets().size(); ++f) {
    const Facet& fac = s.facets()[f];
    int i = fac.last_index();
    if (i <= n) continue;  // fundamental facet
    Vec wall = o.rho(i - n);
    for (std::size_t k = 0; k + 1 < fac.rays.size(); ++k) {
      if (std::abs(wall.dot(fac.rays[k])) > tol) {
        return detail::fail("facet-walls", "vertex not on opposite wall");
      }
    }
    for (const Vec& ray : fac.rays) {
      if (wall.dot(ray) > tol) return detail::fail("facet-walls", "facet leaves rho^-");
      if (!filtration_contains(ray, i, o)) {
        return detail::fail("facet-walls", "facet leaves mu Z_i");
      }
    }
    int g = neighbor_across(static_cast<int>(f), s.facets(), o);
    for (const Vec& ray : s.facets()[g].rays) {
      if (!filtration_contains(ray, i - 1, o)) {
        return detail::fail("facet-walls", "neighbour leaves mu Z_{i-1}");
      }
    }
  }
  return detail::pass("facet-walls");
}

/// mu Z_i halfspace membership coincides with lying in the positive span of
/// V_i, spot-checked on random vectors via the facets with indices <= i.
inline CheckResult check_filtration_span(const Session& s, const VerifyOptions& opt) {
  const BipartiteOrder& o = s.order();
  const int n = s.sys().rank();
  std::mt19937_64 rng(opt.seed + 1);
  std::normal_distribution<double> gauss;
  for (int k = 0; k < opt.span_samples; ++k) {
    Vec x(n);
    for (int j = 0; j < n; ++j) x(j) = gauss(rng);
    int i = n + static_cast<int>(rng() % (o.num_positive() + 1));
    bool half = filtration_contains(x, i, o);
    bool span = false;
    for (const Facet& f : s.facets()) {
      if (f.last_index() > i) continue;
      if (((f.ray_inv * x).array() >= -s.sys().tol()).all()) { span = true; break; }
    }
    if (half != span) {
      return detail::fail("filtration-span",
                          "halfspace and span membership disagree at i=" + std::to_string(i));
    }
  }
  return detail::pass("filtration-span", std::to_string(opt.span_samples) + " samples");
}

inline CheckResult check_partition(const Session& s) {
  const Group& g = s.group();
  const CoxeterSystem& sys = s.sys();
  std::vector<int> fiber(s.facets().size(), 0);
  int id_facet = -1, w0_facet = -1;
  for (int w = 0; w < g.size(); ++w) {
    int f = facet_of_chamber(g.element(w).transform * sys.base_point(), s.facets(),
                             sys.tol());
    ++fiber[f];
    if (w == g.identity()) id_facet = f;
    if (w == g.longest()) w0_facet = f;
  }
  long long total = 0;
  for (int c : fiber) {
    if (c < 1) return detail::fail("fan-partition", "empty fiber");
    total += c;
  }
  if (total != g.size()) return detail::fail("fan-partition", "fiber sizes do not sum to |W|");
  if (id_facet != 0) return detail::fail("fan-partition", "identity not in first facet");
  if (w0_facet != static_cast<int>(s.facets().size()) - 1) {
    return detail::fail("fan-partition", "w0 not in last facet");
  }
  return detail::pass("fan-partition");
}

inline CheckResult check_climbing_bijection(const Session& s, const VerifyOptions& opt) {
  std::set<PermKey> from_facets;
  for (const Facet& f : s.facets()) {
    std::vector<int> word = climbing_word(f, s.order(), s.word_order());
    Mat m = evaluate_word(s.sys(), word);
    std::vector<int> got;
    for (int id : inversion_set_from_base_point(s.sys(), m)) {
      got.push_back(s.order().rho_index_of_root(id));
    }
    std::sort(got.begin(), got.end());
    if (got != facet_N(f.rays, s.order())) {
      return detail::fail("climbing-bijection", "inversion set differs from N(V_F)");
    }
    IndexSet inv(s.sys().num_positive_roots());
    for (int i : got) inv.set(s.order().root_of_rho(i));
    if (!s.word_order().is_climbing(inv, s.order())) {
      return detail::fail("climbing-bijection", "facet element is not climbing");
    }
    if (!from_facets.insert(perm_key_of(s.sys(), m)).second) {
      return detail::fail("climbing-bijection", "two facets share a climbing element");
    }
  }
  if (from_facets.size() != s.facets().size()) {
    return detail::fail("climbing-bijection", "climbing count != facet count");
  }
  if (static_cast<std::size_t>(s.group().size()) > opt.scan_max_order) {
    return detail::pass("climbing-bijection",
                        std::to_string(from_facets.size()) + " climbing elements (scan skipped)");
  }
  const Group& g = s.group();
  std::set<PermKey> from_scan;
  for (int w = 0; w < g.size(); ++w) {
    if (s.word_order().is_climbing(g.inversions(w), s.order())) {
      from_scan.insert(g.element(w).perm_key);
    }
  }
  if (from_scan != from_facets) {
    return detail::fail("climbing-bijection", "exhaustive scan disagrees with facet set");
  }
  return detail::pass("climbing-bijection",
                      std::to_string(from_facets.size()) + " climbing elements");
}

inline CheckResult check_sortable_agreement(const Session& s, const VerifyOptions& opt) {
  const Group& g = s.group();
  if (static_cast<std::size_t>(g.size()) > opt.scan_max_order) {
    return detail::skip("sortable-agreement", "group order exceeds scan budget");
  }
  for (int w = 0; w < g.size(); ++w) {
    bool climb = s.word_order().is_climbing(g.inversions(w), s.order());
    if (climb != sortable(g, w, s.order())) {
      return detail::fail("sortable-agreement",
                          "element " + std::to_string(w) + " disagrees");
    }
  }
  return detail::pass("sortable-agreement");
}

/// For each non-fundamental facet, R(rho_{i-n}) x_F is again climbing and
/// its chamber lies in the wall-neighbour facet.
inline CheckResult check_wall_crossing(const Session& s) {
  const BipartiteOrder& o = s.order();
  const CoxeterSystem& sys = s.sys();
  const int n = sys.rank();
  for (std::size_t f = 0; f < s.facets().size(); ++f) {
    const Facet& fac = s.facets()[f];
    int i = fac.last_index();
    if (i <= n) continue;
    Mat x = evaluate_word(sys, climbing_word(fac, o, s.word_order()));
    Vec wall = o.rho(i - n);
    Mat y = sys.reflection(wall / wall.norm()) * x;
    IndexSet inv(sys.num_positive_roots());
    for (int id : inversion_set_from_base_point(sys, y)) inv.set(id);
    if (!s.word_order().is_climbing(inv, o)) {
      return detail::fail("wall-crossing", "R(rho_{i-n}) x_F is not climbing");
    }
    int g = neighbor_across(static_cast<int>(f), s.facets(), o);
    if (facet_of_chamber(y * sys.base_point(), s.facets(), sys.tol()) != g) {
      return detail::fail("wall-crossing", "crossed element lands in the wrong facet");
    }
  }
  return detail::pass("wall-crossing");
}

inline CheckResult check_dual_identities(const Session& s) {
  try {
    s.dual();
  } catch (const DualMismatch& e) {
    return detail::fail("dual-identities", e.what());
  }
  return detail::pass("dual-identities");
}

inline CheckResult check_classes(const Session& s) {
  try {
    const auto& classes = s.classes();
    std::set<int> falling;
    const Group& g = s.group();
    for (const EquivClass& cls : classes) {
      IndexSet inv = g.inversions(cls.falling);
      if (!s.word_order().is_falling(inv, s.order())) {
        return detail::fail("class-intervals", "class falling element is not falling");
      }
      falling.insert(cls.falling);
      // The maximum must also be the unique weak-order-maximal member.
      for (int w : cls.members) {
        if (!g.weak_order_leq(w, cls.max_element)) {
          return detail::fail("class-intervals", "max is not weak-order maximal");
        }
      }
    }
    if (falling.size() != classes.size()) {
      return detail::fail("class-intervals", "falling elements are not distinct");
    }
  } catch (const IntervalViolation& e) {
    return detail::fail("class-intervals", e.what());
  }
  return detail::pass("class-intervals", std::to_string(s.classes().size()) + " classes");
}

inline std::vector<CheckResult> run_verification(const Session& s,
                                                 const VerifyOptions& opt = {}) {
  std::vector<CheckResult> out;
  out.push_back(check_sign_table(s));
  out.push_back(check_order_invariants(s));
  out.push_back(check_papi_sweep(s, opt));
  out.push_back(check_papi_probe(s, opt));
  out.push_back(check_facet_count(s));
  out.push_back(check_facet_walls(s));
  out.push_back(check_filtration_span(s, opt));
  out.push_back(check_partition(s));
  out.push_back(check_climbing_bijection(s, opt));
  out.push_back(check_sortable_agreement(s, opt));
  out.push_back(check_wall_crossing(s));
  out.push_back(check_dual_identities(s));
  out.push_back(check_classes(s));
  return out;
}

}  // namespace coxcat
