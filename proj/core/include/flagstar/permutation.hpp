#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace flagstar {

/// Element of S_n in one-line notation w(1), ..., w(n).
///
/// Composition is fixed library-wide as (u * v)(i) = u(v(i)). Right
/// multiplication by a transposition t_ab therefore swaps the entries in
/// positions a and b of the one-line word.
class Permutation {
 public:
  Permutation() = default;

  /// Throws std::invalid_argument unless `word` is a bijection of {1..n}.
  explicit Permutation(std::vector<int> word);

  static Permutation identity(int n);
  /// w0(i) = n - i + 1.
  static Permutation longest(int n);
  /// s_i, the transposition of i and i + 1.
  static Permutation simple(int n, int i);
  static Permutation transposition(int n, int a, int b);

  /// Parses "2,1,3" or, for n <= 9, the compact form "213".
  static Permutation parse(std::string_view text);

  int size() const { return static_cast<int>(word_.size()); }
  /// One-based evaluation w(i).
  int operator()(int i) const { return word_[i - 1]; }
  const std::vector<int>& word() const { return word_; }

  /// Number of inversions.
  int length() const;
  Permutation inverse() const;
  /// Swap the entries in positions a and b (right multiplication by t_ab).
  Permutation swap_positions(int a, int b) const;

  /// A reduced word (i_1, ..., i_l) with w = s_{i_1} * ... * s_{i_l},
  /// obtained by peeling the leftmost descent on the right.
  std::vector<int> reduced_word() const;
  /// Every reduced word of w. Exponential; intended for n <= 5.
  std::vector<std::vector<int>> reduced_words() const;

  std::string to_string() const;

  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> word_;
};

int length(const Permutation& w);

/// (u * v)(i) = u(v(i)). Throws std::invalid_argument on size mismatch.
Permutation compose(const Permutation& u, const Permutation& v);

/// All n! permutations in lexicographic order of their one-line words.
std::vector<Permutation> all_permutations(int n);

}  // namespace flagstar
