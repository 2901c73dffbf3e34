#pragma once

#include "coxcat/base.hpp"

#include <cctype>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>
#include <utility>

namespace coxcat {

/// A finite Coxeter system realised in R^n: Coxeter matrix, unit simple
/// roots alpha_i (rows of a triangular factor of the Gram matrix), the dual
/// basis beta_j with alpha_i . beta_j = delta_ij, and the positive roots.
///
/// The fundamental chamber is the positive span of the beta's; its interior
/// point v0 = beta_1 + ... + beta_n drives all inversion-set tests.
class CoxeterSystem {
 public:
  static CoxeterSystem from_matrix(const Eigen::MatrixXi& cox, double tol = kDefaultTol,
                                   std::string name = "custom") {
    return CoxeterSystem(cox, tol, std::move(name));
  }

  /// Parses a type symbol: "A3", "B4", "D4", "F4", "H3", "I2(m)", ...
  static CoxeterSystem from_symbol(const std::string& spec, double tol = kDefaultTol) {
    return CoxeterSystem(matrix_for_symbol(spec), tol, spec);
  }

  /// Plain-text file: n, then n*n Coxeter matrix entries, whitespace-separated.
  static CoxeterSystem from_file(const std::string& path, double tol = kDefaultTol) {
    std::ifstream in(path);
    if (!in) throw BadSpec("cannot open Coxeter matrix file: " + path);
    int n = 0;
    if (!(in >> n) || n < 1) throw BadSpec("bad rank in matrix file");
    Eigen::MatrixXi m(n, n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (!(in >> m(i, j))) throw BadSpec("truncated matrix file");
      }
    }
    return CoxeterSystem(m, tol, "file:" + path);
  }

  int rank() const { return n_; }
  const std::string& name() const { return name_; }
  double tol() const { return tol_; }
  const Eigen::MatrixXi& coxeter_matrix() const { return cox_; }

  /// Row i is alpha_i (0-based).
  const Mat& simple_roots() const { return alpha_; }
  /// Row j is beta_j.
  const Mat& dual_basis() const { return beta_; }

  Vec alpha(int i) const { return alpha_.row(i); }
  Vec beta(int j) const { return beta_.row(j); }

  /// v0 = beta_1 + ... + beta_n, interior to the fundamental chamber.
  const Vec& base_point() const { return v0_; }

  /// Reflection in the hyperplane orthogonal to a unit root.
  Mat reflection(const Vec& root) const {
    if (std::abs(root.norm() - 1.0) > 1e-6) {
      throw Error("reflection requires a unit root");
    }
    return Mat::Identity(n_, n_) - 2.0 * root * root.transpose();
  }

  Mat simple_reflection(int i) const { return refl_[i]; }

  int num_positive_roots() const { return static_cast<int>(roots_.size()); }
  const Vec& positive_root(int id) const { return roots_[id]; }
  const std::vector<Vec>& positive_roots() const { return roots_; }

  /// Coefficients of v in the simple-root basis (coefficient j = beta_j . v).
  Vec expansion(const Vec& v) const { return beta_ * v; }

  /// Looks up +-v among the positive roots.  Returns {id, sign} with
  /// id = -1 when v is not a root.
  std::pair<int, int> find_root(const Vec& v) const {
    for (int id = 0; id < num_positive_roots(); ++id) {
      if (approx_eq(v, roots_[id], match_tol_)) return {id, +1};
      if (approx_eq(v, -roots_[id], match_tol_)) return {id, -1};
    }
    return {-1, 0};
  }

  /// Index i when v = alpha_i, otherwise -1.  Root ids 0..n-1 are the simple
  /// roots, in order.
  int simple_index(const Vec& v) const {
    for (int i = 0; i < n_; ++i) {
      if (approx_eq(v, Vec(alpha_.row(i)), match_tol_)) return i;
    }
    return -1;
  }

  bool is_simple_root(int id) const { return id < n_; }

 private:
  CoxeterSystem(const Eigen::MatrixXi& cox, double tol, std::string name)
      : name_(std::move(name)), cox_(cox), tol_(tol), match_tol_(1e3 * tol) {
    n_ = static_cast<int>(cox.rows());
    if (cox.cols() != n_ || n_ < 1) throw BadSpec("Coxeter matrix must be square");
    for (int i = 0; i < n_; ++i) {
      if (cox(i, i) != 1) throw BadSpec("Coxeter matrix diagonal must be 1");
      for (int j = 0; j < n_; ++j) {
        if (cox(i, j) != cox(j, i)) throw BadSpec("Coxeter matrix must be symmetric");
        if (i != j && cox(i, j) < 2) throw BadSpec("off-diagonal entries must be >= 2");
      }
    }

    Mat gram(n_, n_);
    for (int i = 0; i < n_; ++i) {
      for (int j = 0; j < n_; ++j) {
        gram(i, j) = (i == j) ? 1.0 : -std::cos(std::numbers::pi / cox(i, j));
      }
    }
    Eigen::LLT<Mat> llt(gram);
    if (llt.info() != Eigen::Success ||
        Mat(llt.matrixL()).determinant() < 1e-8) {
      throw NonFiniteGroup("Gram matrix is not positive definite: group is infinite");
    }
    alpha_ = llt.matrixL();  // rows are the simple roots, unit by G_ii = 1
    beta_ = alpha_.inverse().transpose();
    v0_ = beta_.colwise().sum().transpose();

    refl_.reserve(n_);
    for (int i = 0; i < n_; ++i) refl_.push_back(reflection(alpha_.row(i)));

    enumerate_roots();
  }

  void enumerate_roots() {
    for (int i = 0; i < n_; ++i) roots_.push_back(alpha_.row(i));
    // Orbit closure of the simple roots under the simple reflections,
    // with every root stored as its positive representative.
    for (std::size_t head = 0; head < roots_.size(); ++head) {
      Vec r = roots_[head];
      for (int s = 0; s < n_; ++s) {
        Vec img = refl_[s] * r;
        Vec coeff = expansion(img);
        int sign = 0;
        for (int j = 0; j < n_ && sign == 0; ++j) {
          if (coeff(j) > tol_) sign = +1;
          else if (coeff(j) < -tol_) sign = -1;
        }
        if (sign == 0) throw Error("root with no definite sign");
        if (sign < 0) img = -img;
        if (find_root(img).first == -1) roots_.push_back(img);
      }
    }
  }

  static Eigen::MatrixXi chain(int n) {
    Eigen::MatrixXi m = Eigen::MatrixXi::Constant(n, n, 2);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    for (int i = 0; i + 1 < n; ++i) m(i, i + 1) = m(i + 1, i) = 3;
    return m;
  }

  static Eigen::MatrixXi matrix_for_symbol(const std::string& spec) {
    // Grammar: ([A-H])([0-9]+) or I2(m).
    if (spec.size() >= 5 && spec.compare(0, 3, "I2(") == 0 && spec.back() == ')') {
      int m = 0;
      try {
        m = std::stoi(spec.substr(3, spec.size() - 4));
      } catch (...) {
        throw BadSpec("bad group symbol: " + spec);
      }
      if (m < 2) throw BadSpec("I2(m) requires m >= 2");
      Eigen::MatrixXi cm = chain(2);
      cm(0, 1) = cm(1, 0) = m;
      return cm;
    }
    if (spec.size() < 2 || !std::isalpha(static_cast<unsigned char>(spec[0]))) {
      throw BadSpec("bad group symbol: " + spec);
    }
    char family = spec[0];
    int n = 0;
    try {
      std::size_t used = 0;
      n = std::stoi(spec.substr(1), &used);
      if (used + 1 != spec.size()) throw BadSpec("bad group symbol: " + spec);
    } catch (const BadSpec&) {
      throw;
    } catch (...) {
      throw BadSpec("bad group symbol: " + spec);
    }
    if (n < 1) throw BadSpec("rank must be positive: " + spec);
    Eigen::MatrixXi m;
    switch (family) {
      case 'A':
        m = chain(n);
        break;
      case 'B':
      case 'C':
        if (n < 2) throw BadSpec("B requires rank >= 2");
        m = chain(n);
        m(n - 2, n - 1) = m(n - 1, n - 2) = 4;
        break;
      case 'D':
        if (n < 3) throw BadSpec("D requires rank >= 3");
        m = chain(n - 1);
        m.conservativeResize(n, n);
        for (int i = 0; i < n; ++i) { m(i, n - 1) = m(n - 1, i) = 2; }
        m(n - 1, n - 1) = 1;
        m(n - 3, n - 1) = m(n - 1, n - 3) = 3;
        break;
      case 'E':
        if (n < 6 || n > 8) throw BadSpec("E requires rank 6..8");
        m = chain(n - 1);
        m.conservativeResize(n, n);
        for (int i = 0; i < n; ++i) { m(i, n - 1) = m(n - 1, i) = 2; }
        m(n - 1, n - 1) = 1;
        m(2, n - 1) = m(n - 1, 2) = 3;  // node attached to the third chain vertex
        break;
      case 'F':
        if (n != 4) throw BadSpec("F requires rank 4");
        m = chain(4);
        m(1, 2) = m(2, 1) = 4;
        break;
      case 'G':
        if (n != 2) throw BadSpec("G requires rank 2");
        m = chain(2);
        m(0, 1) = m(1, 0) = 6;
        break;
      case 'H':
        if (n < 2 || n > 4) throw BadSpec("H requires rank 2..4");
        m = chain(n);
        m(0, 1) = m(1, 0) = 5;
        break;
      default:
        throw BadSpec("bad group symbol: " + spec);
    }
    return m;
  }

  std::string name_;
  Eigen::MatrixXi cox_;
  int n_ = 0;
  double tol_;
  double match_tol_;  // root lookup tolerance, looser than dot-product tol
  Mat alpha_, beta_;
  Vec v0_;
  std::vector<Mat> refl_;
  std::vector<Vec> roots_;
};

}  // namespace coxcat
