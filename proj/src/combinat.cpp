#include "hnk/combinat.hpp"

#include <algorithm>
#include <stdexcept>

namespace hnk {

IndexSubset::IndexSubset(int n, std::vector<int> elements)
    : elements_(std::move(elements)), n_(n) {
  if (n < 0) throw std::domain_error("IndexSubset: negative ambient size");
  for (std::size_t pos = 0; pos < elements_.size(); ++pos) {
    const int e = elements_[pos];
    if (e < 1 || e > n)
      throw std::domain_error("IndexSubset: element " + std::to_string(e) +
                              " outside [1, " + std::to_string(n) + "]");
    if (pos > 0 && elements_[pos - 1] >= e)
      throw std::domain_error("IndexSubset: elements not strictly increasing");
  }
}

bool IndexSubset::contains(int i) const {
  return std::binary_search(elements_.begin(), elements_.end(), i);
}

IndexSubset IndexSubset::complement() const {
  std::vector<int> out;
  out.reserve(n_ - size());
  for (int i = 1; i <= n_; ++i)
    if (!contains(i)) out.push_back(i);
  return IndexSubset(n_, std::move(out));
}

std::vector<int> IndexSubset::zero_based() const {
  std::vector<int> out(elements_.size());
  std::transform(elements_.begin(), elements_.end(), out.begin(),
                 [](int e) { return e - 1; });
  return out;
}

std::string IndexSubset::to_string() const {
  std::string s = "{";
  for (std::size_t pos = 0; pos < elements_.size(); ++pos) {
    if (pos) s += ",";
    s += std::to_string(elements_[pos]);
  }
  return s + "}";
}

std::size_t binomial(int n, int r) {
  if (n < 0 || r < 0 || r > n) return 0;
  r = std::min(r, n - r);
  std::size_t out = 1;
  for (int j = 1; j <= r; ++j) out = out * static_cast<std::size_t>(n - r + j) / j;
  return out;
}

std::vector<IndexSubset> subsets_lex(int n, int r) {
  if (n < 0 || r < 0 || r > n)
    throw std::domain_error("subsets_lex: need 0 <= r <= n, got n=" +
                            std::to_string(n) + " r=" + std::to_string(r));
  std::vector<IndexSubset> out;
  out.reserve(binomial(n, r));
  std::vector<int> cur(r);
  for (int j = 0; j < r; ++j) cur[j] = j + 1;
  while (true) {
    out.emplace_back(n, cur);
    // Advance the rightmost position that still has room.
    int pos = r - 1;
    while (pos >= 0 && cur[pos] == n - r + pos + 1) --pos;
    if (pos < 0) break;
    ++cur[pos];
    for (int j = pos + 1; j < r; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

std::size_t subset_rank(const IndexSubset& s) {
  const int n = s.n();
  const int r = s.size();
  std::size_t rank = 0;
  int prev = 0;
  for (int pos = 0; pos < r; ++pos) {
    for (int x = prev + 1; x < s[pos]; ++x) rank += binomial(n - x, r - pos - 1);
    prev = s[pos];
  }
  return rank;
}

int perm_sign(std::span<const int> seq) {
  int inversions = 0;
  for (std::size_t a = 0; a < seq.size(); ++a) {
    for (std::size_t b = a + 1; b < seq.size(); ++b) {
      if (seq[a] == seq[b]) throw std::domain_error("perm_sign: repeated entry");
      if (seq[a] > seq[b]) ++inversions;
    }
  }
  return inversions % 2 == 0 ? 1 : -1;
}

namespace {

void require_partition(const IndexSubset& I, const IndexSubset& J, int n,
                       int excluded) {
  if (I.n() != n || J.n() != n)
    throw std::domain_error("signature: subsets from different ambient sets");
  if (I.size() + J.size() + (excluded ? 1 : 0) != n)
    throw std::domain_error("signature: subsets do not partition {1..n}");
  for (int i = 1; i <= n; ++i) {
    const int hits = (I.contains(i) ? 1 : 0) + (J.contains(i) ? 1 : 0) +
                     (i == excluded ? 1 : 0);
    if (hits != 1)
      throw std::domain_error("signature: subsets do not partition {1..n}");
  }
}

}  // namespace

int eps_IiJ(const IndexSubset& I, int i, const IndexSubset& J) {
  const int n = I.n();
  if (i < 1 || i > n) throw std::domain_error("eps_IiJ: i out of range");
  require_partition(I, J, n, i);
  std::vector<int> seq(I.begin(), I.end());
  seq.push_back(i);
  seq.insert(seq.end(), J.begin(), J.end());
  return perm_sign(seq);
}

int eps_IJ(const IndexSubset& I, const IndexSubset& J, int i) {
  const int n = I.n();
  if (i < 1 || i > n) throw std::domain_error("eps_IJ: i out of range");
  require_partition(I, J, n, i);
  std::vector<int> seq(I.begin(), I.end());
  seq.insert(seq.end(), J.begin(), J.end());
  return perm_sign(seq);
}

int eps_iI(int i, const IndexSubset& I) {
  if (I.contains(i)) throw std::domain_error("eps_iI: i is an element of I");
  const auto smaller = std::count_if(I.begin(), I.end(), [i](int e) { return e < i; });
  return smaller % 2 == 0 ? 1 : -1;
}

int concat_sign(const IndexSubset& H, const IndexSubset& K) {
  std::vector<int> seq(H.begin(), H.end());
  seq.insert(seq.end(), K.begin(), K.end());
  return perm_sign(seq);
}

}  // namespace hnk
