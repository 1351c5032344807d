#ifndef HNK_COMBINAT_HPP
#define HNK_COMBINAT_HPP

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace hnk {

/// A strictly increasing subset of {1, ..., n}.
///
/// Elements are 1-based. Ordering is lexicographic on the element list, so
/// sorting a list of equal-size subsets reproduces `subsets_lex`.
class IndexSubset {
 public:
  IndexSubset() = default;
  /// Throws std::domain_error unless `elements` is strictly increasing and
  /// contained in [1, n].
  IndexSubset(int n, std::vector<int> elements);
  IndexSubset(int n, std::initializer_list<int> elements)
      : IndexSubset(n, std::vector<int>(elements)) {}

  int n() const { return n_; }
  int size() const { return static_cast<int>(elements_.size()); }
  bool empty() const { return elements_.empty(); }
  std::span<const int> elements() const { return elements_; }
  int operator[](int pos) const { return elements_[pos]; }
  auto begin() const { return elements_.begin(); }
  auto end() const { return elements_.end(); }

  bool contains(int i) const;
  /// {1..n} minus this subset.
  IndexSubset complement() const;
  /// 0-based positions, for indexing matrices.
  std::vector<int> zero_based() const;
  std::string to_string() const;

  auto operator<=>(const IndexSubset&) const = default;

 private:
  std::vector<int> elements_;
  int n_ = 0;
};

/// C(n, r); zero outside 0 <= r <= n.
std::size_t binomial(int n, int r);

/// All r-subsets of {1..n} in lexicographic order. Position in the list is
/// the coordinate index used for wedge bases and matrix rows/columns.
std::vector<IndexSubset> subsets_lex(int n, int r);

/// Position of `s` within subsets_lex(s.n(), s.size()).
std::size_t subset_rank(const IndexSubset& s);

/// (-1)^(inversions of seq). Throws std::domain_error on repeated entries.
int perm_sign(std::span<const int> seq);

/// Sign of the permutation taking (I, i, J) to (1, ..., n).
int eps_IiJ(const IndexSubset& I, int i, const IndexSubset& J);

/// Sign of the permutation taking (I, J) to (1, ..., i-hat, ..., n).
int eps_IJ(const IndexSubset& I, const IndexSubset& J, int i);

/// Sign of moving i from the front of (i, I) into sorted position.
int eps_iI(int i, const IndexSubset& I);

/// Sign of the concatenation (H, K) as a permutation of its sorted entries.
int concat_sign(const IndexSubset& H, const IndexSubset& K);

}  // namespace hnk

#endif  // HNK_COMBINAT_HPP
