#pragma once

#include "coxcat/coxeter_system.hpp"

#include <unordered_map>

namespace coxcat {

/// Canonical element identity: the signed permutation the element induces on
/// the positive-root list.  Entry k holds +-(j+1) when the element maps root k
/// to +-root j.  Hashing and equality on these keys are exact, which keeps
/// floating point out of all downstream set logic.
using PermKey = std::vector<std::int16_t>;

struct PermKeyHash {
  std::size_t operator()(const PermKey& k) const {
    std::size_t h = 1469598103934665603ull;
    for (auto v : k) {
      h ^= static_cast<std::size_t>(static_cast<std::uint16_t>(v));
      h *= 1099511628211ull;
    }
    return h;
  }
};

inline PermKey perm_key_of(const CoxeterSystem& sys, const Mat& transform) {
  PermKey key(sys.num_positive_roots());
  for (int k = 0; k < sys.num_positive_roots(); ++k) {
    auto [j, sign] = sys.find_root(transform * sys.positive_root(k));
    if (j < 0) throw Error("transform does not permute the roots");
    key[k] = static_cast<std::int16_t>(sign * (j + 1));
  }
  return key;
}

/// Key of the composite u . v (v applied first).
inline PermKey compose_keys(const PermKey& u, const PermKey& v) {
  PermKey out(v.size());
  for (std::size_t k = 0; k < v.size(); ++k) {
    int j = v[k];
    int m = u[std::abs(j) - 1];
    out[k] = static_cast<std::int16_t>(j > 0 ? m : -m);
  }
  return out;
}

struct GroupElement {
  Mat transform;
  PermKey perm_key;
  std::vector<int> word;  // a shortest word, 0-based generator indices
};

/// The whole group, enumerated breadth-first under right multiplication by
/// the simple generators.  Element 0 is the identity; words are shortest.
class Group {
 public:
  static Group enumerate(const CoxeterSystem& sys, std::size_t budget = 200000) {
    Group g;
    g.sys_ = &sys;
    const int n = sys.rank();
    const int np = sys.num_positive_roots();

    std::vector<PermKey> gen_keys(n);
    for (int s = 0; s < n; ++s) gen_keys[s] = perm_key_of(sys, sys.simple_reflection(s));

    GroupElement id;
    id.transform = Mat::Identity(n, n);
    id.perm_key.resize(np);
    for (int k = 0; k < np; ++k) id.perm_key[k] = static_cast<std::int16_t>(k + 1);
    g.els_.push_back(std::move(id));
    g.inv_.push_back(IndexSet(np));
    g.index_[g.els_[0].perm_key] = 0;

    for (std::size_t head = 0; head < g.els_.size(); ++head) {
      for (int s = 0; s < n; ++s) {
        // w' = w . s acts by w'(x) = w(s(x)).
        PermKey key = compose_keys(g.els_[head].perm_key, gen_keys[s]);
        auto it = g.index_.find(key);
        if (it == g.index_.end()) {
          if (g.els_.size() >= budget) {
            throw BudgetExceeded("group enumeration exceeded budget of " +
                                 std::to_string(budget) + " elements");
          }
          GroupElement el;
          el.transform = g.els_[head].transform * sys.simple_reflection(s);
          el.perm_key = std::move(key);
          el.word = g.els_[head].word;
          el.word.push_back(s);
          // Inv(ws) = Inv(w) u {w(alpha_s)} when the length goes up.
          IndexSet inv = g.inv_[head];
          inv.set(std::abs(g.els_[head].perm_key[s]) - 1);
          int id_new = static_cast<int>(g.els_.size());
          g.index_[el.perm_key] = id_new;
          g.els_.push_back(std::move(el));
          g.inv_.push_back(std::move(inv));
        }
      }
    }

    // Multiplication tables by generators, via exact key composition.
    g.right_.assign(n, std::vector<int>(g.els_.size()));
    g.left_.assign(n, std::vector<int>(g.els_.size()));
    for (std::size_t w = 0; w < g.els_.size(); ++w) {
      for (int s = 0; s < n; ++s) {
        g.right_[s][w] = g.index_.at(compose_keys(g.els_[w].perm_key, gen_keys[s]));
        g.left_[s][w] = g.index_.at(compose_keys(gen_keys[s], g.els_[w].perm_key));
      }
    }

    g.longest_ = 0;
    for (std::size_t w = 0; w < g.els_.size(); ++w) {
      if (g.els_[w].word.size() > g.els_[g.longest_].word.size()) {
        g.longest_ = static_cast<int>(w);
      }
    }
    return g;
  }

  const CoxeterSystem& system() const { return *sys_; }
  int size() const { return static_cast<int>(els_.size()); }
  const GroupElement& element(int id) const { return els_[id]; }
  int identity() const { return 0; }
  int longest() const { return longest_; }
  int length(int id) const { return static_cast<int>(els_[id].word.size()); }

  int index_of_key(const PermKey& key) const {
    auto it = index_.find(key);
    if (it == index_.end()) throw Error("element not in group");
    return it->second;
  }
  int index_of(const Mat& transform) const {
    return index_of_key(perm_key_of(*sys_, transform));
  }

  int right_mult(int id, int gen) const { return right_[gen][id]; }
  int left_mult(int gen, int id) const { return left_[gen][id]; }

  int mult(int a, int b) const {
    return index_of_key(compose_keys(els_[a].perm_key, els_[b].perm_key));
  }

  /// Inversion set as a bitset over positive-root ids.
  const IndexSet& inversions(int id) const { return inv_[id]; }

  /// Generators s with l(s w) < l(w); equivalently alpha_s in Inv(w).
  std::vector<int> left_descents(int id) const {
    std::vector<int> out;
    for (int s = 0; s < sys_->rank(); ++s) {
      if (inv_[id].test(s)) out.push_back(s);
    }
    return out;
  }

  /// u <=_L w in the left weak order: Inv(u) subset of Inv(w).
  bool weak_order_leq(int u, int w) const {
    return inv_[u].subset_of(inv_[w]);
  }

 private:
  const CoxeterSystem* sys_ = nullptr;
  std::vector<GroupElement> els_;
  std::vector<IndexSet> inv_;
  std::unordered_map<PermKey, int, PermKeyHash> index_;
  std::vector<std::vector<int>> right_, left_;
  int longest_ = 0;
};

/// Ordered inversion roots of a reduced word: entry k is
/// s_{i_1} ... s_{i_{k-1}}(alpha_{i_k}).  Throws NotReduced when a repeated
/// or negative root shows up, which happens exactly when the word is not
/// reduced.
inline std::vector<int> inversions_from_word(const CoxeterSystem& sys,
                                             const std::vector<int>& word) {
  std::vector<int> out;
  IndexSet seen(sys.num_positive_roots());
  Mat u = Mat::Identity(sys.rank(), sys.rank());
  for (int letter : word) {
    if (letter < 0 || letter >= sys.rank()) throw BadSpec("generator index out of range");
    auto [id, sign] = sys.find_root(u * sys.alpha(letter));
    if (id < 0) throw Error("word image is not a root");
    if (sign < 0) throw NotReduced("word produces a negative root");
    if (seen.test(id)) throw NotReduced("word repeats a root");
    seen.set(id);
    out.push_back(id);
    u = u * sys.simple_reflection(letter);
  }
  return out;
}

/// Evaluates a word to its orthogonal transformation.
inline Mat evaluate_word(const CoxeterSystem& sys, const std::vector<int>& word) {
  Mat u = Mat::Identity(sys.rank(), sys.rank());
  for (int letter : word) u = u * sys.simple_reflection(letter);
  return u;
}

/// Definitional form of the inversion set, via the base point:
/// { positive lambda : lambda . w(v0) < 0 }.  The BFS-composed sets are
/// checked against this in the tests.
inline std::vector<int> inversion_set_from_base_point(const CoxeterSystem& sys,
                                                      const Mat& transform) {
  std::vector<int> out;
  Vec img = transform * sys.base_point();
  for (int id = 0; id < sys.num_positive_roots(); ++id) {
    double d = sys.positive_root(id).dot(img);
    if (std::abs(d) < sys.tol()) throw Error("base point image lies on a wall");
    if (d < 0) out.push_back(id);
  }
  return out;
}

}  // namespace coxcat
