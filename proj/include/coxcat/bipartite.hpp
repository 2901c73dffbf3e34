#pragma once

#include "coxcat/group.hpp"

#include <optional>

namespace coxcat {

struct SignTableViolation {
  char clause;  // 'a', 'b', 'c' or 'd'
  int i, j;     // 1-based sequence indices
  double value;
};

struct SignTableReport {
  std::vector<SignTableViolation> violations;
  double max_deviation = 0.0;
  bool ok() const { return violations.empty(); }
};

/// The bipartite reflection ordering: 2-coloured generator blocks, the
/// bipartite Coxeter element c of order h, the sequences
///
///   rho_i = R(a_1) R(a_2) ... R(a_{i-1}) a_i     (i = 1 .. nh/2 + n)
///   mu_i  = R(a_1) R(a_2) ... R(a_{i-1}) b_i
///
/// with the generators indexed cyclically modulo n, plus the linear map
/// mu = 2(I - c)^{-1} and the bipartite reduced word for w0.
///
/// rho_1 .. rho_{nh/2} run through the positive roots exactly once; the last
/// n entries are negative roots.  Immutable after construction.
class BipartiteOrder {
 public:
  explicit BipartiteOrder(const CoxeterSystem& sys) : sys_(&sys) {
    colour_diagram();
    build_coxeter_element();
    build_sequences();
    build_mu_map();
    build_longest_word();
  }

  const CoxeterSystem& system() const { return *sys_; }
  const std::vector<int>& left_block() const { return left_; }
  const std::vector<int>& right_block() const { return right_; }
  /// Left block then right block; the cyclic index order of the sequences.
  const std::vector<int>& generator_order() const { return gen_order_; }

  const Mat& coxeter_transform() const { return c_; }
  int coxeter_number() const { return h_; }
  int num_positive() const { return nh2_; }            // nh/2
  int sequence_length() const { return nh2_ + sys_->rank(); }

  /// 1-based access, i in 1 .. nh/2 + n.
  const Vec& rho(int i) const { return rho_[check(i)]; }
  const Vec& mu(int i) const { return mu_[check(i)]; }
  bool rho_is_negative(int i) const { return check(i) >= static_cast<std::size_t>(nh2_); }

  const Mat& mu_map() const { return mu_map_; }

  /// Position of a positive root in the rho order (1 .. nh/2).
  int rho_index_of_root(int root_id) const { return rho_of_root_[root_id]; }
  /// Positive-root id at rho position i (1 .. nh/2).
  int root_of_rho(int i) const { return root_of_rho_[i - 1]; }

  const std::vector<int>& longest_word() const { return w0_word_; }

  SignTableReport verify_sign_table() const {
    SignTableReport rep;
    const int n = sys_->rank();
    const int len = sequence_length();
    auto note = [&](char clause, int i, int j, double v, bool bad) {
      if (bad) {
        rep.violations.push_back({clause, i, j, v});
        rep.max_deviation = std::max(rep.max_deviation, std::abs(v));
      }
    };
    const double tol = sys_->tol();
    // (a) mu_i . rho_j = -mu_{j+n} . rho_i
    for (int i = 1; i <= len; ++i) {
      for (int j = 1; j + n <= len; ++j) {
        double v = mu(i).dot(rho(j)) + mu(j + n).dot(rho(i));
        note('a', i, j, v, std::abs(v) > tol);
      }
    }
    // (b) mu_i . rho_j >= 0 for 1 <= i <= j <= nh/2
    for (int i = 1; i <= nh2_; ++i) {
      for (int j = i; j <= nh2_; ++j) {
        double v = mu(i).dot(rho(j));
        note('b', i, j, v, v < -tol);
      }
    }
    // (c) mu_{i+t} . rho_i = 0 for 1 <= t <= n-1
    for (int i = 1; i <= nh2_; ++i) {
      for (int t = 1; t <= n - 1 && i + t <= len; ++t) {
        double v = mu(i + t).dot(rho(i));
        note('c', i + t, i, v, std::abs(v) > tol);
      }
    }
    // (d) mu_j . rho_i <= 0 for 1 <= i < j <= nh/2
    for (int i = 1; i <= nh2_; ++i) {
      for (int j = i + 1; j <= nh2_; ++j) {
        double v = mu(j).dot(rho(i));
        note('d', j, i, v, v > tol);
      }
    }
    return rep;
  }

 private:
  std::size_t check(int i) const {
    if (i < 1 || i > sequence_length()) throw IndexRange("sequence index out of range");
    return static_cast<std::size_t>(i - 1);
  }

  void colour_diagram() {
    const int n = sys_->rank();
    const auto& m = sys_->coxeter_matrix();
    std::vector<int> colour(n, -1);
    for (int start = 0; start < n; ++start) {
      if (colour[start] != -1) continue;
      colour[start] = 0;  // lowest-index vertex of each component goes left
      std::vector<int> queue{start};
      for (std::size_t head = 0; head < queue.size(); ++head) {
        int v = queue[head];
        for (int u = 0; u < n; ++u) {
          if (u == v || m(v, u) < 3) continue;
          if (colour[u] == -1) {
            colour[u] = 1 - colour[v];
            queue.push_back(u);
          } else if (colour[u] == colour[v]) {
            throw OddCycle("Coxeter diagram has an odd cycle");
          }
        }
      }
    }
    for (int v = 0; v < n; ++v) (colour[v] == 0 ? left_ : right_).push_back(v);
    gen_order_ = left_;
    gen_order_.insert(gen_order_.end(), right_.begin(), right_.end());
  }

  void build_coxeter_element() {
    const int n = sys_->rank();
    c_ = Mat::Identity(n, n);
    for (int g : gen_order_) c_ = c_ * sys_->simple_reflection(g);
    Mat p = c_;
    h_ = 1;
    while (!is_identity(p, 1e-8)) {
      p = p * c_;
      if (++h_ > 1000) throw Error("Coxeter element order did not close");
    }
    nh2_ = n * h_ / 2;
  }

  void build_sequences() {
    const int n = sys_->rank();
    const int len = nh2_ + n;
    Mat prefix = Mat::Identity(n, n);
    for (int i = 1; i <= len; ++i) {
      int g = gen_order_[(i - 1) % n];
      rho_.push_back(prefix * sys_->alpha(g));
      mu_.push_back(prefix * sys_->beta(g));
      prefix = prefix * sys_->simple_reflection(g);
    }

    if (sys_->num_positive_roots() != nh2_) {
      throw SequenceMismatch("positive-root count differs from nh/2");
    }
    rho_of_root_.assign(nh2_, 0);
    root_of_rho_.assign(nh2_, -1);
    for (int i = 1; i <= len; ++i) {
      auto [id, sign] = sys_->find_root(rho_[i - 1]);
      if (id < 0) throw SequenceMismatch("rho entry is not a root");
      if (i <= nh2_) {
        if (sign < 0 || rho_of_root_[id] != 0) {
          throw SequenceMismatch("rho_1..rho_{nh/2} do not enumerate the positive roots");
        }
        rho_of_root_[id] = i;
        root_of_rho_[i - 1] = id;
      } else if (sign > 0) {
        throw SequenceMismatch("tail rho entry is not a negative root");
      }
    }
  }

  void build_mu_map() {
    const int n = sys_->rank();
    Mat im_c = Mat::Identity(n, n) - c_;
    if (std::abs(im_c.determinant()) < 1e-10) {
      throw SingularMap("I - c is singular");
    }
    mu_map_ = 2.0 * im_c.inverse();
  }

  void build_longest_word() {
    const int reps = h_ / 2;
    for (int r = 0; r < reps; ++r) {
      w0_word_.insert(w0_word_.end(), gen_order_.begin(), gen_order_.end());
    }
    if (h_ % 2 == 1) {
      w0_word_.insert(w0_word_.end(), gen_order_.begin(), gen_order_.end());
      w0_word_.resize(static_cast<std::size_t>(nh2_));  // trailing left block
    }
    Mat w0 = evaluate_word(*sys_, w0_word_);
    if (!is_identity(w0 * w0, 1e-7)) throw Error("w0 word does not square to identity");
  }

  const CoxeterSystem* sys_;
  std::vector<int> left_, right_, gen_order_;
  Mat c_;
  int h_ = 0, nh2_ = 0;
  std::vector<Vec> rho_, mu_;
  Mat mu_map_;
  std::vector<int> rho_of_root_, root_of_rho_;
  std::vector<int> w0_word_;
};

}  // namespace coxcat
