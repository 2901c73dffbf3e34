#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace coxcat {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

/// Global default tolerance for floating-point equality of vectors and dot
/// products.  Rank <= 4 keeps conditioning benign, so a single epsilon works.
inline constexpr double kDefaultTol = 1e-9;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct BadSpec : Error { using Error::Error; };
struct NonFiniteGroup : Error { using Error::Error; };
struct BudgetExceeded : Error { using Error::Error; };
struct NotReduced : Error { using Error::Error; };
struct OddCycle : Error { using Error::Error; };
struct SequenceMismatch : Error { using Error::Error; };
struct SingularMap : Error { using Error::Error; };
struct NotSimple : Error { using Error::Error; };
struct IsSimple : Error { using Error::Error; };
struct PapiFailure : Error { using Error::Error; };
struct NoFacet : Error { using Error::Error; };
struct MultipleFacets : Error { using Error::Error; };
struct FacetNotFound : Error { using Error::Error; };
struct IndexRange : Error { using Error::Error; };
struct DualMismatch : Error { using Error::Error; };
struct IntervalViolation : Error { using Error::Error; };
struct NonInteger : Error { using Error::Error; };

/// Small dynamic bitset keyed by positive-root ids.  All set logic on
/// inversion sets goes through this so equality and containment are exact.
class IndexSet {
 public:
  IndexSet() = default;
  explicit IndexSet(int universe)
      : size_(universe), words_((universe + 63) / 64, 0) {}

  int universe() const { return size_; }

  void set(int i) { words_[i >> 6] |= std::uint64_t(1) << (i & 63); }
  void reset(int i) { words_[i >> 6] &= ~(std::uint64_t(1) << (i & 63)); }
  bool test(int i) const {
    return (words_[i >> 6] >> (i & 63)) & 1;
  }

  bool subset_of(const IndexSet& o) const {
    for (std::size_t k = 0; k < words_.size(); ++k) {
      if (words_[k] & ~o.words_[k]) return false;
    }
    return true;
  }

  int count() const {
    int c = 0;
    for (auto w : words_) c += __builtin_popcountll(w);
    return c;
  }

  bool operator==(const IndexSet& o) const = default;

  std::vector<int> to_vector() const {
    std::vector<int> out;
    for (int i = 0; i < size_; ++i) {
      if (test(i)) out.push_back(i);
    }
    return out;
  }

 private:
  int size_ = 0;
  std::vector<std::uint64_t> words_;
};

inline bool approx_eq(const Vec& a, const Vec& b, double tol) {
  return (a - b).lpNorm<Eigen::Infinity>() < tol;
}

inline bool approx_eq(const Mat& a, const Mat& b, double tol) {
  return (a - b).lpNorm<Eigen::Infinity>() < tol;
}

inline bool is_identity(const Mat& m, double tol) {
  return approx_eq(m, Mat::Identity(m.rows(), m.cols()), tol);
}

}  // namespace coxcat
