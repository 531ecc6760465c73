#include "flagstar/schubert.hpp"

#include <algorithm>
#include <stdexcept>

#include "flagstar/parallel.hpp"

namespace flagstar {

Polynomial divided_difference(int i, const Polynomial& f) {
  if (i < 1 || i >= kMaxRank) throw std::invalid_argument("divided_difference: bad index");
  if (!f.uses_only({VarKind::x})) throw std::invalid_argument("divided_difference: expects x variables");
  const Var a = Var::x(i);
  const Var b = Var::x(i + 1);
  const Polynomial swapped = relabel(f, [&] {
    VarMap map;
    for (const Var& v : f.variables()) map[v] = v == a ? b : (v == b ? a : v);
    map[a] = b;
    map[b] = a;
    return map;
  }());
  const Polynomial numerator = f - swapped;
  try {
    return divide_exact(numerator, Polynomial::variable(a) - Polynomial::variable(b));
  } catch (const std::domain_error&) {
    throw std::logic_error("divided_difference: inexact division");
  }
}

namespace {

Polynomial staircase(int n) {
  Monomial m;
  for (int i = 1; i < n; ++i) m.set(Var::x(i), n - i);
  return Polynomial::monomial(m);
}

}  // namespace

Polynomial schubert_polynomial_from_word(int n, std::span<const int> word) {
  Polynomial p = staircase(n);
  for (auto it = word.rbegin(); it != word.rend(); ++it) p = divided_difference(*it, p);
  return p;
}

Polynomial schubert_polynomial(const Permutation& w) {
  const int n = w.size();
  const auto word = compose(w.inverse(), Permutation::longest(n)).reduced_word();
  return schubert_polynomial_from_word(n, word);
}

int pairing_index(const Permutation& v, const Permutation& w) {
  if (v.size() != w.size()) throw std::invalid_argument("pairing_index: size mismatch");
  return v == compose(Permutation::longest(w.size()), w) ? 1 : 0;
}

SchubertBasis::SchubertBasis(int n) : n_(n) {
  if (n < 1 || n > kMaxRank) throw std::invalid_argument("SchubertBasis: n out of range");
  order_ = all_permutations(n);
  std::stable_sort(order_.begin(), order_.end(), [](const Permutation& a, const Permutation& b) {
    return a.length() < b.length();
  });
  for (std::size_t i = 0; i < order_.size(); ++i) {
    index_.emplace(order_[i], i);
    lengths_.push_back(order_[i].length());
  }
  const Permutation w0 = Permutation::longest(n);
  for (const auto& w : order_) dual_.push_back(index_.at(compose(w0, w)));

  // Top-down over the weak order: S_w = d_i S_{w s_i} for an ascent i of w.
  polynomials_.resize(order_.size());
  polynomials_.back() = staircase(n);
  for (std::size_t k = order_.size() - 1; k-- > 0;) {
    const Permutation& w = order_[k];
    int ascent = 1;
    while (w(ascent) > w(ascent + 1)) ++ascent;
    const std::size_t above = index_.at(w.swap_positions(ascent, ascent + 1));
    polynomials_[k] = divided_difference(ascent, polynomials_[above]);
  }
}

std::size_t SchubertBasis::index(const Permutation& w) const {
  auto it = index_.find(w);
  if (it == index_.end()) throw std::out_of_range("permutation not in basis: " + w.to_string());
  return it->second;
}

std::size_t SchubertBasis::simple_index(int r) const { return index(Permutation::simple(n_, r)); }

std::vector<Integer> classical_expansion(const SchubertBasis& basis, const Polynomial& f) {
  if (!f.uses_only({VarKind::x})) throw std::invalid_argument("classical_expansion: expects x variables");
  std::vector<Integer> coords(basis.size());
  int max_length = 0;
  for (const auto& t : f.terms()) max_length = std::max(max_length, t.monomial.total_degree());
  max_length = std::min(max_length, basis.top_length());

  // D_w f = d_i D_{s_i w} f for a left descent i of w.
  std::vector<Polynomial> derived(basis.size());
  derived[basis.identity_index()] = f;
  coords[basis.identity_index()] = f.constant_term();
  for (std::size_t k = 1; k < basis.size() && basis.length(k) <= max_length; ++k) {
    const Permutation& w = basis.at(k);
    const Permutation inv = w.inverse();
    int descent = 1;
    while (inv(descent) < inv(descent + 1)) ++descent;
    const Permutation shorter = compose(Permutation::simple(w.size(), descent), w);
    const Polynomial& source = derived[basis.index(shorter)];
    if (source.is_zero()) continue;
    derived[k] = divided_difference(descent, source);
    coords[k] = derived[k].constant_term();
  }
  return coords;
}

std::vector<std::vector<std::vector<Integer>>> classical_structure_constants(const SchubertBasis& basis) {
  const std::size_t size = basis.size();
  std::vector<std::vector<std::vector<Integer>>> table(size, std::vector<std::vector<Integer>>(size));
  parallel_for(size, [&](std::size_t u) {
    for (std::size_t v = 0; v < size; ++v) {
      table[u][v] = classical_expansion(basis, basis.polynomial(u) * basis.polynomial(v));
    }
  });
  return table;
}

}  // namespace flagstar
