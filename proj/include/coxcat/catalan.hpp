#pragma once

#include "coxcat/associahedron.hpp"

#include <cmath>
#include <set>

namespace coxcat {

/// The dual construction: the simple system of the opposite chamber w0(C),
/// ordered so that c^{-1} = R(a'_1) ... R(a'_n) is again bipartite, together
/// with its rho'/mu' sequences.  Running the climbing machinery here yields
/// the falling elements of the original system.
struct DualSystem {
  Mat alpha;              // rows a'_i, unit
  Mat beta;               // rows b'_i = mu_{nh/2+n-i+1}
  std::vector<int> perm;  // a'_i = -alpha_{perm[i]}
  Mat c_inv;
  std::vector<Vec> rho, mu;  // 0-based storage of rho'_i, mu'_i, i = 1 .. nh/2+n

  const Vec& rho_at(int i) const { return rho[i - 1]; }
  const Vec& mu_at(int i) const { return mu[i - 1]; }
};

inline DualSystem build_dual(const BipartiteOrder& order) {
  const CoxeterSystem& sys = order.system();
  const int n = sys.rank();
  const int len = order.sequence_length();
  const double tol = sys.tol();

  DualSystem d;
  d.beta.resize(n, n);
  for (int i = 1; i <= n; ++i) d.beta.row(i - 1) = order.mu(len - i + 1);
  d.alpha = d.beta.inverse().transpose();

  // Each dual simple root must be the negative of a primal one, with the
  // blocks swapped: {b'_1..b'_{n-s}} a permutation of -{beta_{s+1}..beta_n}
  // and {b'_{n-s+1}..b'_n} of -{beta_1..beta_s}.
  const int s = static_cast<int>(order.left_block().size());
  d.perm.assign(n, -1);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (approx_eq(Vec(d.alpha.row(i)), Vec(-sys.alpha(j)), 1e3 * tol)) {
        d.perm[i] = j;
        break;
      }
    }
    if (d.perm[i] < 0) throw DualMismatch("dual simple root is not a negated primal one");
    bool in_left = std::find(order.left_block().begin(), order.left_block().end(),
                             d.perm[i]) != order.left_block().end();
    if ((i < n - s) == in_left) throw DualMismatch("dual blocks are not swapped");
    if (!approx_eq(Vec(d.beta.row(i)), Vec(-sys.beta(d.perm[i])), 1e3 * tol)) {
      throw DualMismatch("dual basis vector is not a negated primal one");
    }
  }

  d.c_inv = Mat::Identity(n, n);
  std::vector<Mat> refl(n);
  for (int i = 0; i < n; ++i) {
    refl[i] = sys.reflection(d.alpha.row(i));
    d.c_inv = d.c_inv * refl[i];
  }
  if (!approx_eq(d.c_inv, Mat(order.coxeter_transform().transpose()), 1e-8)) {
    throw DualMismatch("dual factorisation does not give c^{-1}");
  }

  Mat prefix = Mat::Identity(n, n);
  for (int i = 1; i <= len; ++i) {
    int g = (i - 1) % n;
    d.rho.push_back(prefix * Vec(d.alpha.row(g)));
    d.mu.push_back(prefix * Vec(d.beta.row(g)));
    prefix = prefix * refl[g];
  }

  // rho'_i = -rho_{nh/2-i+1} and mu'_j = mu_{nh/2+n-j+1}
  for (int i = 1; i <= order.num_positive(); ++i) {
    if (!approx_eq(d.rho_at(i), Vec(-order.rho(order.num_positive() - i + 1)), 1e-8)) {
      throw DualMismatch("rho' does not reverse and negate rho");
    }
  }
  for (int j = 1; j <= len; ++j) {
    if (!approx_eq(d.mu_at(j), order.mu(len - j + 1), 1e-8)) {
      throw DualMismatch("mu' does not reverse mu");
    }
  }
  return d;
}

/// Word of the climbing element of a facet: extract the reduced word of
/// N(V_F) read in increasing rho order.
inline std::vector<int> climbing_word(const Facet& f, const BipartiteOrder& order,
                                      const WordOrder& wo) {
  std::vector<int> rho_ids = facet_N(f.rays, order);
  std::vector<int> roots;
  for (int i : rho_ids) roots.push_back(order.root_of_rho(i));
  if (!wo.papi_check(roots).valid()) {
    throw PapiFailure("N(V_F) fails the word-order criterion");
  }
  return wo.word_from_ordered_roots(roots);
}

/// Word (in the standard generators) of the falling element attached to a
/// facet: the climbing construction run in the dual system, on the dual
/// index tuple i -> nh/2+n-i+1.  The letters come out of the dual simple
/// system and are mapped back through the block-swap permutation.
inline std::vector<int> falling_word(const Facet& f, const BipartiteOrder& order,
                                     const DualSystem& dual) {
  const CoxeterSystem& sys = order.system();
  const int len = order.sequence_length();
  const double tol = sys.tol();

  std::vector<Vec> rays;  // geometrically the same rays as V_F
  for (int i : f.indices) rays.push_back(dual.mu_at(len - i + 1));

  std::vector<int> picks;
  for (int k = 1; k <= order.num_positive(); ++k) {
    bool all = true;
    for (const Vec& mu : rays) {
      if (dual.rho_at(k).dot(mu) > tol) { all = false; break; }
    }
    if (all) picks.push_back(k);
  }

  std::vector<int> word;
  Mat u = Mat::Identity(sys.rank(), sys.rank());
  for (int k : picks) {
    Vec pulled = u.transpose() * dual.rho_at(k);
    int letter = -1;
    for (int i = 0; i < sys.rank(); ++i) {
      if (approx_eq(pulled, Vec(dual.alpha.row(i)), 1e3 * tol)) { letter = i; break; }
    }
    if (letter < 0) throw NotSimple("dual pulled-back root is not dual-simple");
    word.push_back(dual.perm[letter]);  // same reflection, standard label
    u = u * sys.reflection(dual.alpha.row(letter));
  }
  return word;
}

/// Degrees of the group, recovered from the eigenvalue angles of c:
/// eigenvalue exp(2 pi i m / h) contributes the degree m + 1.
inline std::vector<int> degrees(const BipartiteOrder& order) {
  Eigen::EigenSolver<Mat> es(order.coxeter_transform());
  const int h = order.coxeter_number();
  std::vector<int> out;
  for (int k = 0; k < es.eigenvalues().size(); ++k) {
    double angle = std::arg(es.eigenvalues()(k));
    if (angle <= 0) angle += 2.0 * std::numbers::pi;
    double m = angle * h / (2.0 * std::numbers::pi);
    int mi = static_cast<int>(std::lround(m));
    if (std::abs(m - mi) > 1e-6 || mi < 1 || mi >= h) {
      throw NonInteger("eigenvalue angle of c is not a multiple of 2 pi / h");
    }
    out.push_back(mi + 1);
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// W-Catalan number, prod_i (h + d_i) / d_i over the degrees.
inline long long catalan_number(const BipartiteOrder& order) {
  const int h = order.coxeter_number();
  double prod = 1.0;
  for (int d : degrees(order)) prod *= static_cast<double>(h + d) / d;
  long long rounded = std::llround(prod);
  if (std::abs(prod - static_cast<double>(rounded)) > 1e-6) {
    throw NonInteger("Catalan product is not an integer");
  }
  return rounded;
}

/// Independent c-sortability oracle: greedy scan of repetitions of the
/// bipartite word for c, taking a letter whenever it is a left descent of
/// the remainder; sortable iff the per-repetition support sets are nested.
inline bool sortable(const Group& grp, int id, const BipartiteOrder& order) {
  const auto& cword = order.generator_order();
  int v = id;
  std::set<int> prev;
  bool first = true;
  while (v != grp.identity()) {
    std::set<int> support;
    for (int s : cword) {
      if (grp.inversions(v).test(s)) {  // alpha_s in Inv(v): left descent
        support.insert(s);
        v = grp.left_mult(s, v);
      }
    }
    if (!first && !std::includes(prev.begin(), prev.end(),
                                 support.begin(), support.end())) {
      return false;
    }
    prev = std::move(support);
    first = false;
  }
  return true;
}

struct EquivClass {
  int facet;                 // index into the facet list
  std::vector<int> members;  // element ids
  int min_element;           // the climbing element x_F
  int max_element;           // f . w0, f falling
  int falling;               // f itself
};

/// Partitions the group by facet, builds each class's climbing minimum and
/// falling-translate maximum, and verifies the interval property in both
/// directions.
inline std::vector<EquivClass> build_classes(const Group& grp,
                                             const BipartiteOrder& order,
                                             const std::vector<Facet>& facets,
                                             const WordOrder& wo,
                                             const DualSystem& dual) {
  const CoxeterSystem& sys = grp.system();
  std::vector<EquivClass> classes(facets.size());
  std::vector<int> facet_of(grp.size());
  for (int w = 0; w < grp.size(); ++w) {
    int f = facet_of_chamber(grp.element(w).transform * sys.base_point(), facets,
                             sys.tol());
    facet_of[w] = f;
    classes[f].members.push_back(w);
  }
  int w0 = grp.longest();
  for (std::size_t f = 0; f < facets.size(); ++f) {
    EquivClass& cls = classes[f];
    cls.facet = static_cast<int>(f);
    if (cls.members.empty()) throw Error("facet with no chamber");
    cls.min_element = grp.index_of(evaluate_word(sys, climbing_word(facets[f], order, wo)));
    cls.falling = grp.index_of(evaluate_word(sys, falling_word(facets[f], order, dual)));
    cls.max_element = grp.mult(cls.falling, w0);
    if (facet_of[cls.min_element] != cls.facet || facet_of[cls.max_element] != cls.facet) {
      throw IntervalViolation("class extremes do not lie in their facet");
    }
    for (int w : cls.members) {
      if (!grp.weak_order_leq(cls.min_element, w) ||
          !grp.weak_order_leq(w, cls.max_element)) {
        throw IntervalViolation("class member outside [min, max]");
      }
    }
  }
  // Converse inclusion: anything weakly between min and max is a member.
  for (int w = 0; w < grp.size(); ++w) {
    for (const EquivClass& cls : classes) {
      if (grp.weak_order_leq(cls.min_element, w) &&
          grp.weak_order_leq(w, cls.max_element) && facet_of[w] != cls.facet) {
        throw IntervalViolation("weak-order interval leaks outside the class");
      }
    }
  }
  return classes;
}

}  // namespace coxcat
