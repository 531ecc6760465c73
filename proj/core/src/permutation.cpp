#include "flagstar/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace flagstar {

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) {
  const int n = size();
  std::vector<bool> seen(static_cast<size_t>(n) + 1, false);
  for (int value : word_) {
    if (value < 1 || value > n || seen[value]) {
      throw std::invalid_argument("permutation word is not a bijection of {1..n}");
    }
    seen[value] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> word(static_cast<size_t>(n));
  std::iota(word.begin(), word.end(), 1);
  return Permutation(std::move(word));
}

Permutation Permutation::longest(int n) {
  std::vector<int> word(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) word[i] = n - i;
  return Permutation(std::move(word));
}

Permutation Permutation::simple(int n, int i) { return transposition(n, i, i + 1); }

Permutation Permutation::transposition(int n, int a, int b) {
  if (a < 1 || b < 1 || a > n || b > n) {
    throw std::invalid_argument("transposition index out of range");
  }
  return identity(n).swap_positions(a, b);
}

Permutation Permutation::parse(std::string_view text) {
  std::vector<int> word;
  if (text.find(',') != std::string_view::npos) {
    size_t start = 0;
    while (start <= text.size()) {
      size_t end = text.find(',', start);
      if (end == std::string_view::npos) end = text.size();
      std::string token(text.substr(start, end - start));
      if (token.empty()) throw std::invalid_argument("empty entry in permutation");
      word.push_back(std::stoi(token));
      start = end + 1;
    }
  } else {
    for (char c : text) {
      if (c < '1' || c > '9') throw std::invalid_argument("bad permutation character");
      word.push_back(c - '0');
    }
  }
  return Permutation(std::move(word));
}

int Permutation::length() const {
  int inversions = 0;
  for (size_t i = 0; i < word_.size(); ++i) {
    for (size_t j = i + 1; j < word_.size(); ++j) {
      if (word_[i] > word_[j]) ++inversions;
    }
  }
  return inversions;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(word_.size());
  for (size_t i = 0; i < word_.size(); ++i) inv[word_[i] - 1] = static_cast<int>(i) + 1;
  return Permutation(std::move(inv));
}

Permutation Permutation::swap_positions(int a, int b) const {
  Permutation out = *this;
  std::swap(out.word_[a - 1], out.word_[b - 1]);
  return out;
}

std::vector<int> Permutation::reduced_word() const {
  std::vector<int> reversed;
  Permutation w = *this;
  for (;;) {
    int descent = 0;
    for (int i = 1; i < size(); ++i) {
      if (w(i) > w(i + 1)) {
        descent = i;
        break;
      }
    }
    if (descent == 0) break;
    reversed.push_back(descent);
    w = w.swap_positions(descent, descent + 1);
  }
  return {reversed.rbegin(), reversed.rend()};
}

namespace {

void collect_reduced_words(const Permutation& w, std::vector<int>& suffix,
                           std::vector<std::vector<int>>& out) {
  bool any = false;
  for (int i = 1; i < w.size(); ++i) {
    if (w(i) > w(i + 1)) {
      any = true;
      suffix.push_back(i);
      collect_reduced_words(w.swap_positions(i, i + 1), suffix, out);
      suffix.pop_back();
    }
  }
  if (!any) out.emplace_back(suffix.rbegin(), suffix.rend());
}

}  // namespace

std::vector<std::vector<int>> Permutation::reduced_words() const {
  std::vector<std::vector<int>> out;
  std::vector<int> suffix;
  collect_reduced_words(*this, suffix, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::string Permutation::to_string() const {
  std::string out;
  const bool compact = size() <= 9;
  for (size_t i = 0; i < word_.size(); ++i) {
    if (!compact && i > 0) out += ',';
    out += std::to_string(word_[i]);
  }
  return out;
}

int length(const Permutation& w) { return w.length(); }

Permutation compose(const Permutation& u, const Permutation& v) {
  if (u.size() != v.size()) throw std::invalid_argument("compose: size mismatch");
  std::vector<int> word(static_cast<size_t>(u.size()));
  for (int i = 1; i <= u.size(); ++i) word[i - 1] = u(v(i));
  return Permutation(std::move(word));
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> word(static_cast<size_t>(n));
  std::iota(word.begin(), word.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(word);
  } while (std::next_permutation(word.begin(), word.end()));
  return out;
}

}  // namespace flagstar
