#include "coxcat/session.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

using namespace coxcat;

namespace {

Session make(const char* name) {
  RunConfig cfg;
  cfg.group_spec = name;
  return Session(cfg);
}

std::vector<std::vector<int>> indices_of(const std::vector<Facet>& facets) {
  std::vector<std::vector<int>> out;
  for (const auto& f : facets) out.push_back(f.indices);
  return out;
}

// Oracle: test every n-subset of sequence indices directly against the
// definition, later indices applied on the left.
std::vector<std::vector<int>> facets_by_scan(const BipartiteOrder& o) {
  const CoxeterSystem& sys = o.system();
  const int n = sys.rank();
  const int len = o.sequence_length();
  std::vector<std::vector<int>> out;
  std::vector<int> pick;
  auto rec = [&](auto&& self, int next) -> void {
    if (static_cast<int>(pick.size()) == n) {
      Mat prod = Mat::Identity(n, n);
      for (int i : pick) {
        Vec r = o.rho(i);
        prod = sys.reflection(r / r.norm()) * prod;
      }
      if (approx_eq(prod, o.coxeter_transform(), 1e-8)) out.push_back(pick);
      return;
    }
    for (int i = next; i <= len; ++i) {
      pick.push_back(i);
      self(self, i + 1);
      pick.pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

}  // namespace

TEST_CASE("facet enumeration, small cases") {
  auto a1 = make("A1");
  CHECK(indices_of(a1.facets()) ==
        std::vector<std::vector<int>>{{1}, {2}});

  auto a2 = make("A2");
  CHECK(indices_of(a2.facets()) ==
        std::vector<std::vector<int>>{{1, 2}, {1, 5}, {2, 3}, {3, 4}, {4, 5}});

  auto b2 = make("B2");
  CHECK(b2.facets().size() == 6);
}

TEST_CASE("facet enumeration matches the exhaustive scan") {
  for (const char* name : {"A2", "B2", "I2(5)", "I2(8)", "A3", "B3", "H3"}) {
    auto s = make(name);
    INFO(name);
    CHECK(indices_of(s.facets()) == facets_by_scan(s.order()));
  }
}

TEST_CASE("first and last facets") {
  for (const char* name : {"A3", "B3", "D4", "I2(7)"}) {
    auto s = make(name);
    const int n = s.sys().rank();
    const int np = s.order().num_positive();
    std::vector<int> first, last;
    for (int k = 1; k <= n; ++k) {
      first.push_back(k);
      last.push_back(np + k);
    }
    CHECK(s.facets().front().indices == first);
    CHECK(s.facets().back().indices == last);
  }
}

TEST_CASE("N of the A2 facets") {
  auto s = make("A2");
  const auto& o = s.order();
  auto N = [&](int f) { return facet_N(s.facets()[f].rays, o); };
  CHECK(N(0).empty());                         // {1,2}: fundamental chamber
  CHECK(N(1) == std::vector<int>{3});          // {1,5}
  CHECK(N(2) == std::vector<int>{1});          // {2,3}
  CHECK(N(3) == std::vector<int>{1, 2});       // {3,4}
  CHECK(N(4) == std::vector<int>{1, 2, 3});    // {4,5}: all of them
}

TEST_CASE("N is monotone in the defining rays") {
  // adding rays only shrinks N, and each single ray already excludes itself
  auto s = make("B3");
  const auto& o = s.order();
  for (const Facet& f : s.facets()) {
    auto full = facet_N(f.rays, o);
    for (const Vec& ray : f.rays) {
      auto single = facet_N({ray}, o);
      CHECK(std::includes(single.begin(), single.end(), full.begin(), full.end()));
    }
  }
  for (int i = 1; i <= o.num_positive(); ++i) {
    auto single = facet_N({o.mu(i)}, o);
    CHECK(std::find(single.begin(), single.end(), i) == single.end());
  }
}

TEST_CASE("facet of a chamber point") {
  auto s = make("A2");
  const auto& g = s.group();
  auto chamber = [&](std::vector<int> word) {
    return Vec(evaluate_word(s.sys(), word) * s.sys().base_point());
  };
  double tol = s.sys().tol();
  CHECK(facet_of_chamber(s.sys().base_point(), s.facets(), tol) == 0);
  CHECK(facet_of_chamber(chamber(g.element(g.longest()).word), s.facets(), tol) == 4);
  CHECK(facet_of_chamber(chamber({1, 0}), s.facets(), tol) == 1);  // s2 s1 -> {1,5}
  CHECK(facet_of_chamber(chamber({1}), s.facets(), tol) == 1);
  CHECK(facet_of_chamber(chamber({0}), s.facets(), tol) == 2);
  CHECK(facet_of_chamber(chamber({0, 1}), s.facets(), tol) == 3);

  // fiber sizes over the five facets
  std::vector<int> sizes(s.facets().size(), 0);
  for (int w = 0; w < g.size(); ++w) {
    ++sizes[facet_of_chamber(Vec(g.element(w).transform * s.sys().base_point()),
                             s.facets(), tol)];
  }
  std::sort(sizes.begin(), sizes.end());
  CHECK(sizes == std::vector<int>{1, 1, 1, 1, 2});

  CHECK_THROWS_AS(facet_of_chamber(Vec(s.order().mu(1)), s.facets(), tol), NoFacet);
}

TEST_CASE("every chamber lands in exactly one facet") {
  for (const char* name : {"A3", "B3", "I2(6)"}) {
    auto s = make(name);
    const auto& g = s.group();
    std::vector<int> sizes(s.facets().size(), 0);
    for (int w = 0; w < g.size(); ++w) {
      int f = facet_of_chamber(Vec(g.element(w).transform * s.sys().base_point()),
                               s.facets(), s.sys().tol());
      ++sizes[f];
    }
    for (int c : sizes) CHECK(c >= 1);
  }
}

TEST_CASE("filtration cones") {
  auto s = make("A2");
  const auto& o = s.order();
  CHECK(filtration_roots(2, o) == std::vector<int>{1, 2, 3});
  CHECK(filtration_roots(3, o) == std::vector<int>{2, 3});
  CHECK(filtration_roots(4, o) == std::vector<int>{3});
  CHECK(filtration_roots(5, o).empty());
  CHECK_THROWS_AS(filtration_roots(1, o), IndexRange);
  CHECK_THROWS_AS(filtration_roots(6, o), IndexRange);

  // the cones are nested and all contain the fundamental chamber
  for (const char* name : {"A2", "B3", "H3"}) {
    auto t = make(name);
    const auto& ot = t.order();
    const int n = t.sys().rank();
    for (int i = n; i <= ot.num_positive() + n; ++i) {
      CHECK(filtration_contains(t.sys().base_point(), i, ot));
      // the consecutive facet {i-n+1..i} sits inside the i-th cone
      for (int j = i - n + 1; j <= std::min(i, ot.num_positive()); ++j) {
        CHECK(filtration_contains(ot.mu(j), i, ot));
      }
    }
  }
}

TEST_CASE("neighbor across the last wall") {
  auto s = make("A2");
  // facet order: 0:{1,2} 1:{1,5} 2:{2,3} 3:{3,4} 4:{4,5}
  CHECK(neighbor_across(3, s.facets(), s.order()) == 2);  // {3,4} -> {2,3}
  CHECK(neighbor_across(4, s.facets(), s.order()) == 3);  // {4,5} -> {3,4}
  CHECK(neighbor_across(1, s.facets(), s.order()) == 0);  // {1,5} -> {1,2}
  CHECK(neighbor_across(2, s.facets(), s.order()) == 0);  // {2,3} -> {1,2}
  CHECK_THROWS_AS(neighbor_across(0, s.facets(), s.order()), IndexRange);

  // the neighbour differs in exactly one index and has a smaller last index
  for (const char* name : {"A3", "B3"}) {
    auto t = make(name);
    for (std::size_t f = 0; f < t.facets().size(); ++f) {
      if (t.facets()[f].last_index() <= t.sys().rank()) continue;
      int g = neighbor_across(static_cast<int>(f), t.facets(), t.order());
      std::vector<int> a = t.facets()[f].indices, b = t.facets()[g].indices;
      std::vector<int> diff;
      std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(),
                                    std::back_inserter(diff));
      CHECK(diff.size() == 2);
      CHECK(diff[1] == t.facets()[f].last_index());
    }
  }
}

TEST_CASE("reflection length") {
  auto s = make("B3");
  CHECK(reflection_length(Mat(Mat::Identity(3, 3))) == 0);
  CHECK(reflection_length(s.sys().simple_reflection(0)) == 1);
  CHECK(reflection_length(s.order().coxeter_transform()) == 3);
}
