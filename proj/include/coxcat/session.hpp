#pragma once

#include "coxcat/catalan.hpp"

#include <memory>

namespace coxcat {

struct RunConfig {
  std::string group_spec;
  std::string matrix_file;  // overrides group_spec when nonempty
  double tolerance = kDefaultTol;
  std::size_t budget = 200000;
  std::uint64_t seed = 1;

  void validate() const {
    if (!(tolerance > 0.0 && tolerance < 1e-3)) {
      throw BadSpec("tolerance must lie in (0, 1e-3)");
    }
    if (budget < 1) throw BadSpec("budget must be >= 1");
  }
};

/// One group's worth of built state.  Heavy pieces (the enumerated group,
/// the facet list, the dual system) are built on first use.  Not movable:
/// the members hold pointers into each other.
class Session {
 public:
  explicit Session(RunConfig config)
      : config_(validated(std::move(config))),
        sys_(config_.matrix_file.empty()
                 ? CoxeterSystem::from_symbol(config_.group_spec, config_.tolerance)
                 : CoxeterSystem::from_file(config_.matrix_file, config_.tolerance)),
        order_(sys_),
        word_order_(sys_) {}

  Session(const Session&) = delete;
  Session& operator=(const Session&) = delete;

  const RunConfig& config() const { return config_; }
  const CoxeterSystem& sys() const { return sys_; }
  const BipartiteOrder& order() const { return order_; }
  const WordOrder& word_order() const { return word_order_; }

  const Group& group() const {
    if (!group_) group_ = std::make_unique<Group>(Group::enumerate(sys_, config_.budget));
    return *group_;
  }

  const std::vector<Facet>& facets() const {
    if (!facets_) facets_ = std::make_unique<std::vector<Facet>>(enumerate_facets(order_));
    return *facets_;
  }

  const DualSystem& dual() const {
    if (!dual_) dual_ = std::make_unique<DualSystem>(build_dual(order_));
    return *dual_;
  }

  const std::vector<EquivClass>& classes() const {
    if (!classes_) {
      classes_ = std::make_unique<std::vector<EquivClass>>(
          build_classes(group(), order_, facets(), word_order_, dual()));
    }
    return *classes_;
  }

 private:
  static RunConfig validated(RunConfig c) {
    c.validate();
    return c;
  }

  RunConfig config_;
  CoxeterSystem sys_;
  BipartiteOrder order_;
  WordOrder word_order_;
  mutable std::unique_ptr<Group> group_;
  mutable std::unique_ptr<std::vector<Facet>> facets_;
  mutable std::unique_ptr<DualSystem> dual_;
  mutable std::unique_ptr<std::vector<EquivClass>> classes_;
};

/// Visits every (element, reduced word) pair of the group, building words
/// letter by letter through the left-descent sets.
template <typename Visitor>
void for_each_reduced_word(const Group& grp, Visitor&& visit) {
  std::vector<int> word;
  auto rec = [&](auto&& self, int origin, int id) -> void {
    if (id == grp.identity()) {
      visit(origin, word);
      return;
    }
    for (int s : grp.left_descents(id)) {
      word.push_back(s);
      self(self, origin, grp.left_mult(s, id));
      word.pop_back();
    }
  };
  for (int w = 0; w < grp.size(); ++w) rec(rec, w, w);
}

/// Visits every reduced word of a single element.
template <typename Visitor>
void for_each_reduced_word_of(const Group& grp, int id, Visitor&& visit) {
  std::vector<int> word;
  auto rec = [&](auto&& self, int cur) -> void {
    if (cur == grp.identity()) {
      visit(word);
      return;
    }
    for (int s : grp.left_descents(cur)) {
      word.push_back(s);
      self(self, grp.left_mult(s, cur));
      word.pop_back();
    }
  };
  rec(rec, id);
}

}  // namespace coxcat
