#pragma once

#include "coxcat/papi.hpp"

namespace coxcat {

/// A facet of the fan coarsening: a strictly increasing n-tuple of rho
/// indices (1-based) whose reflections factor c, last index first:
///   c = R(rho_{i_n}) ... R(rho_{i_1}).
/// Carries its vertex rays mu_{i_1}, ..., mu_{i_n} and the inverse of the
/// ray matrix for fast cone-membership tests.
struct Facet {
  std::vector<int> indices;
  std::vector<Vec> rays;
  Mat ray_inv;
  int last_index() const { return indices.back(); }
};

/// Minimal number of reflections whose product is m: the codimension of the
/// fixed space.
inline int reflection_length(const Mat& m, double tol = 1e-7) {
  // Absolute singular-value cutoff: a relative rank threshold miscounts when
  // m - I is entirely roundoff noise.
  Eigen::JacobiSVD<Mat> svd(m - Mat::Identity(m.rows(), m.cols()));
  int r = 0;
  for (int i = 0; i < svd.singularValues().size(); ++i) {
    if (svd.singularValues()(i) > tol) ++r;
  }
  return r;
}

namespace detail {

inline Facet make_facet(const BipartiteOrder& order, const std::vector<int>& indices) {
  Facet f;
  f.indices = indices;
  const int n = order.system().rank();
  Mat rays(n, n);
  for (int k = 0; k < n; ++k) {
    f.rays.push_back(order.mu(indices[k]));
    rays.col(k) = f.rays.back();
  }
  Eigen::FullPivLU<Mat> lu(rays);
  if (!lu.isInvertible()) throw Error("facet rays are linearly dependent");
  f.ray_inv = lu.inverse();
  return f;
}

inline void facet_dfs(const BipartiteOrder& order, std::vector<Mat>& refl,
                      int next, const Mat& partial, std::vector<int>& chosen,
                      std::vector<Facet>& out) {
  const int n = order.system().rank();
  const int len = order.sequence_length();
  const int k = static_cast<int>(chosen.size());
  if (k == n) {
    if (is_identity(partial * order.coxeter_transform().transpose(), 1e-7)) {
      out.push_back(make_facet(order, chosen));
    }
    return;
  }
  for (int i = next; i <= len - (n - k - 1); ++i) {
    Mat grown = refl[i - 1] * partial;  // later indices multiply on the left
    // The remaining slots must exactly absorb c . grown^{-1}: prune on
    // reflection length and on parity.
    int rem = n - k - 1;
    int need = reflection_length(order.coxeter_transform() * grown.transpose());
    if (need > rem || ((rem - need) & 1)) continue;
    chosen.push_back(i);
    facet_dfs(order, refl, i + 1, grown, chosen, out);
    chosen.pop_back();
  }
}

}  // namespace detail

/// Enumerates the facets in lexicographic index order.  Depth-first over
/// increasing indices with reflection-length pruning; the first facet is the
/// fundamental one {1..n} and the last is {nh/2+1 .. nh/2+n}.
inline std::vector<Facet> enumerate_facets(const BipartiteOrder& order) {
  const CoxeterSystem& sys = order.system();
  std::vector<Mat> refl;
  refl.reserve(order.sequence_length());
  for (int i = 1; i <= order.sequence_length(); ++i) {
    Vec r = order.rho(i);
    refl.push_back(sys.reflection(r / r.norm()));
  }
  std::vector<Facet> out;
  std::vector<int> chosen;
  detail::facet_dfs(order, refl, 1, Mat::Identity(sys.rank(), sys.rank()), chosen, out);
  return out;
}

/// N(A): positive roots nonpositive against every ray in A, as 1-based rho
/// indices in increasing order.  Dot products within tolerance of zero count
/// as zero and are kept.
inline std::vector<int> facet_N(const std::vector<Vec>& rays, const BipartiteOrder& order) {
  std::vector<int> out;
  const double tol = order.system().tol();
  for (int i = 1; i <= order.num_positive(); ++i) {
    bool all = true;
    for (const Vec& mu : rays) {
      if (order.rho(i).dot(mu) > tol) { all = false; break; }
    }
    if (all) out.push_back(i);
  }
  return out;
}

/// The unique facet whose rays express the chamber point with strictly
/// positive coordinates.  The point must be chamber-interior (e.g. w(v0)).
inline int facet_of_chamber(const Vec& point, const std::vector<Facet>& facets,
                            double tol) {
  int found = -1;
  for (std::size_t f = 0; f < facets.size(); ++f) {
    Vec coords = facets[f].ray_inv * point;
    if ((coords.array() > tol).all()) {
      if (found != -1) throw MultipleFacets("chamber point interior to two facets");
      found = static_cast<int>(f);
    }
  }
  if (found == -1) throw NoFacet("chamber point not interior to any facet");
  return found;
}

/// Defining roots of the filtration cone mu Z_i, as 1-based rho indices
/// {i-n+1, ..., nh/2}.  Empty at i = nh/2+n (whole space); all of Pi+ at
/// i = n (the fundamental chamber).
inline std::vector<int> filtration_roots(int i, const BipartiteOrder& order) {
  const int n = order.system().rank();
  if (i < n || i > order.num_positive() + n) {
    throw IndexRange("filtration index out of range");
  }
  std::vector<int> out;
  for (int j = i - n + 1; j <= order.num_positive(); ++j) out.push_back(j);
  return out;
}

inline bool filtration_contains(const Vec& x, int i, const BipartiteOrder& order) {
  const double tol = order.system().tol();
  for (int j : filtration_roots(i, order)) {
    if (x.dot(order.rho(j)) < -tol) return false;
  }
  return true;
}

/// The unique facet other than F sharing the face opposite F's last vertex.
inline int neighbor_across(int facet_idx, const std::vector<Facet>& facets,
                           const BipartiteOrder& order) {
  const Facet& f = facets[facet_idx];
  if (f.last_index() <= order.system().rank()) {
    throw IndexRange("fundamental facet has no wall neighbour of this kind");
  }
  std::vector<int> face(f.indices.begin(), f.indices.end() - 1);
  for (std::size_t g = 0; g < facets.size(); ++g) {
    if (static_cast<int>(g) == facet_idx) continue;
    bool contains = true;
    for (int idx : face) {
      if (std::find(facets[g].indices.begin(), facets[g].indices.end(), idx) ==
          facets[g].indices.end()) {
        contains = false;
        break;
      }
    }
    if (contains) return static_cast<int>(g);
  }
  throw FacetNotFound("no facet shares the opposite face");
}

}  // namespace coxcat
