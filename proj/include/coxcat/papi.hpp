#pragma once

#include "coxcat/bipartite.hpp"

#include <algorithm>
#include <optional>

namespace coxcat {

/// A dependency rho = a sigma + b tau among positive roots, a, b > 0.
/// Fields are positive-root ids; sigma < tau canonically.
struct PositiveTriple {
  int sigma, tau, rho;
  double a, b;
};

/// All positive triples of the system, by brute force over root pairs: for
/// each pair {sigma, tau} and each further root rho in their 2-plane, solve
/// the 2x2 system and keep solutions with both coefficients positive.
inline std::vector<PositiveTriple> positive_triples(const CoxeterSystem& sys) {
  std::vector<PositiveTriple> out;
  const int np = sys.num_positive_roots();
  const double tol = sys.tol();
  for (int s = 0; s < np; ++s) {
    for (int t = s + 1; t < np; ++t) {
      const Vec& vs = sys.positive_root(s);
      const Vec& vt = sys.positive_root(t);
      Eigen::Matrix2d gram;
      gram << vs.dot(vs), vs.dot(vt), vt.dot(vs), vt.dot(vt);
      if (std::abs(gram.determinant()) < tol) continue;  // parallel pair
      for (int r = 0; r < np; ++r) {
        if (r == s || r == t) continue;
        const Vec& vr = sys.positive_root(r);
        Eigen::Vector2d rhs(vs.dot(vr), vt.dot(vr));
        Eigen::Vector2d ab = gram.inverse() * rhs;
        if (ab(0) > tol && ab(1) > tol &&
            (vr - ab(0) * vs - ab(1) * vt).norm() < 1e3 * tol) {
          out.push_back({s, t, r, ab(0), ab(1)});
        }
      }
    }
  }
  return out;
}

struct PapiViolation {
  enum class Clause { kBetween, kParent };  // condition (i) / condition (ii)
  Clause clause;
  PositiveTriple triple;
};

struct PapiResult {
  std::optional<PapiViolation> violation;
  bool valid() const { return !violation.has_value(); }
};

/// Papi's criterion and its constructive converse, against a precomputed
/// triple table.
class WordOrder {
 public:
  explicit WordOrder(const CoxeterSystem& sys)
      : sys_(&sys), triples_(positive_triples(sys)) {}

  const CoxeterSystem& system() const { return *sys_; }
  const std::vector<PositiveTriple>& triples() const { return triples_; }

  /// Checks an ordered set of distinct positive roots (given by ids) against
  /// both clauses of the criterion, for every recorded triple.
  PapiResult papi_check(const std::vector<int>& ordered_roots) const {
    std::vector<int> pos(sys_->num_positive_roots(), -1);
    for (std::size_t p = 0; p < ordered_roots.size(); ++p) {
      pos[ordered_roots[p]] = static_cast<int>(p);
    }
    for (const auto& tr : triples_) {
      int ps = pos[tr.sigma], pt = pos[tr.tau], pr = pos[tr.rho];
      if (ps >= 0 && pt >= 0) {
        // (i) rho must be present, strictly between its parents
        int lo = std::min(ps, pt), hi = std::max(ps, pt);
        if (pr < 0 || pr <= lo || pr >= hi) {
          return {PapiViolation{PapiViolation::Clause::kBetween, tr}};
        }
      }
      if (pr >= 0) {
        // (ii) some parent must precede rho
        bool ok = (ps >= 0 && ps < pr) || (pt >= 0 && pt < pr);
        if (!ok) return {PapiViolation{PapiViolation::Clause::kParent, tr}};
      }
    }
    return {};
  }

  /// Constructive converse: extracts the reduced word whose stepwise
  /// inversion order reproduces the given ordered root set.  The k-th letter
  /// is the index of the simple root u^{-1}(rho_k), u being the product so
  /// far; NotSimple signals an input that fails the criterion.
  std::vector<int> word_from_ordered_roots(const std::vector<int>& ordered_roots) const {
    std::vector<int> word;
    Mat u = Mat::Identity(sys_->rank(), sys_->rank());
    for (int id : ordered_roots) {
      Vec pulled = u.transpose() * sys_->positive_root(id);
      int letter = sys_->simple_index(pulled);
      if (letter < 0) throw NotSimple("pulled-back root is not simple");
      word.push_back(letter);
      u = u * sys_->simple_reflection(letter);
    }
    return word;
  }

  /// Climbing: the inversion set read in increasing rho order is a valid
  /// word-induced order.  The criterion and the constructive extraction must
  /// agree; a mismatch is a bug, not a query result.
  bool is_climbing(const IndexSet& inversions, const BipartiteOrder& order) const {
    return check_sorted(inversions, order, /*ascending=*/true);
  }

  /// Falling: same, with the rho order reversed.
  bool is_falling(const IndexSet& inversions, const BipartiteOrder& order) const {
    return check_sorted(inversions, order, /*ascending=*/false);
  }

 private:
  bool check_sorted(const IndexSet& inversions, const BipartiteOrder& order,
                    bool ascending) const {
    std::vector<int> ids = inversions.to_vector();
    std::sort(ids.begin(), ids.end(), [&](int a, int b) {
      int ra = order.rho_index_of_root(a), rb = order.rho_index_of_root(b);
      return ascending ? ra < rb : ra > rb;
    });
    bool valid = papi_check(ids).valid();
    bool extractable = true;
    try {
      word_from_ordered_roots(ids);
    } catch (const NotSimple&) {
      extractable = false;
    }
    if (valid != extractable) throw Error("criterion and word extraction disagree");
    return valid;
  }

  const CoxeterSystem* sys_;
  std::vector<PositiveTriple> triples_;
};

/// Lemma-style decomposition of a non-simple positive root: picks a simple
/// root alpha_i with rho . alpha_i > 0 and returns rho = sigma + b alpha_i
/// with sigma = s_i(rho) positive and b = 2 (rho . alpha_i).
inline PositiveTriple nonsimple_decomposition(const CoxeterSystem& sys, int root_id) {
  if (sys.is_simple_root(root_id)) throw IsSimple("root is simple");
  const Vec& rho = sys.positive_root(root_id);
  for (int i = 0; i < sys.rank(); ++i) {
    double d = rho.dot(sys.alpha(i));
    if (d > sys.tol()) {
      auto [sid, sign] = sys.find_root(sys.simple_reflection(i) * rho);
      if (sid < 0 || sign < 0) continue;
      return {sid, i, root_id, 1.0, 2.0 * d};
    }
  }
  throw Error("no simple root with positive inner product");
}

}  // namespace coxcat
