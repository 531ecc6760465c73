#include "flagstar/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <stdexcept>

namespace flagstar {

namespace {

constexpr int kFamilySlots = kMaxRank;
constexpr int kMuSlot = 5 * kFamilySlots;
constexpr int kZSlot = kMuSlot + 1;
static_assert(kZSlot < kSlots);

char family_letter(VarKind kind) {
  switch (kind) {
    case VarKind::X: return 'X';
    case VarKind::Y: return 'Y';
    case VarKind::x: return 'x';
    case VarKind::Q: return 'Q';
    case VarKind::q: return 'q';
    default: return '?';
  }
}

}  // namespace

int Var::slot() const {
  switch (kind) {
    case VarKind::mu: return kMuSlot;
    case VarKind::z: return kZSlot;
    default:
      if (index < 1 || index > kMaxRank) {
        throw std::out_of_range("variable index outside 1.." + std::to_string(kMaxRank));
      }
      return static_cast<int>(kind) * kFamilySlots + index - 1;
  }
}

Var Var::from_slot(int slot) {
  if (slot == kMuSlot) return mu();
  if (slot == kZSlot) return z();
  return {static_cast<VarKind>(slot / kFamilySlots), slot % kFamilySlots + 1};
}

std::string Var::name() const {
  if (kind == VarKind::mu) return "mu";
  if (kind == VarKind::z) return "z";
  return family_letter(kind) + std::to_string(index);
}

Var Var::parse(std::string_view name) {
  if (name == "mu") return mu();
  if (name == "z") return z();
  if (name.size() < 2) throw std::invalid_argument("unknown variable '" + std::string(name) + "'");
  VarKind kind;
  switch (name[0]) {
    case 'X': kind = VarKind::X; break;
    case 'Y': kind = VarKind::Y; break;
    case 'x': kind = VarKind::x; break;
    case 'Q': kind = VarKind::Q; break;
    case 'q': kind = VarKind::q; break;
    default: throw std::invalid_argument("unknown variable '" + std::string(name) + "'");
  }
  int index = 0;
  for (char c : name.substr(1)) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw std::invalid_argument("unknown variable '" + std::string(name) + "'");
    }
    index = index * 10 + (c - '0');
  }
  Var v{kind, index};
  (void)v.slot();  // range check
  return v;
}

int Var::weight() const {
  switch (kind) {
    case VarKind::Q:
    case VarKind::q: return 4;
    case VarKind::z: return 0;
    default: return 2;
  }
}

// ---------------------------------------------------------------------------

Monomial Monomial::of(Var v, int exponent) {
  Monomial m;
  m.set(v, exponent);
  return m;
}

void Monomial::set(Var v, int exponent) {
  const int slot = v.slot();
  if (slot == kZSlot) {
    if (exponent < -1 || exponent > 1) throw std::domain_error("z exponent outside {-1,0,1}");
  } else if (exponent < 0 || exponent > std::numeric_limits<std::int8_t>::max()) {
    throw std::domain_error("exponent out of range for " + v.name());
  }
  exps_[slot] = static_cast<std::int8_t>(exponent);
}

bool Monomial::is_one() const {
  return std::all_of(exps_.begin(), exps_.end(), [](std::int8_t e) { return e == 0; });
}

int Monomial::grading() const {
  int g = 0;
  for (int s = 0; s < kZSlot; ++s) g += exps_[s] * (s >= 3 * kFamilySlots && s < kMuSlot ? 4 : 2);
  return g;
}

int Monomial::total_degree() const {
  int d = 0;
  for (int s = 0; s < kSlots; ++s) d += exps_[s];
  return d;
}

std::vector<Var> Monomial::variables() const {
  std::vector<Var> out;
  for (int s = 0; s < kSlots; ++s) {
    if (exps_[s] != 0) out.push_back(Var::from_slot(s));
  }
  return out;
}

bool Monomial::uses_only(std::initializer_list<VarKind> kinds) const {
  for (int s = 0; s < kSlots; ++s) {
    if (exps_[s] == 0) continue;
    const VarKind k = Var::from_slot(s).kind;
    if (std::find(kinds.begin(), kinds.end(), k) == kinds.end()) return false;
  }
  return true;
}

bool Monomial::divides(const Monomial& other) const {
  for (int s = 0; s < kSlots; ++s) {
    if (exps_[s] > other.exps_[s]) return false;
  }
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial out;
  for (int s = 0; s < kSlots; ++s) {
    const int e = exps_[s] + other.exps_[s];
    if (s == kZSlot) {
      if (e < -1 || e > 1) throw std::domain_error("z exponent outside {-1,0,1}");
    } else if (e > std::numeric_limits<std::int8_t>::max()) {
      throw std::domain_error("exponent overflow");
    }
    out.exps_[s] = static_cast<std::int8_t>(e);
  }
  return out;
}

Monomial Monomial::operator/(const Monomial& other) const {
  Monomial out;
  for (int s = 0; s < kSlots; ++s) out.exps_[s] = static_cast<std::int8_t>(exps_[s] - other.exps_[s]);
  return out;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial out;
  for (int s = 0; s < kSlots; ++s) out.exps_[s] = std::max(exps_[s], other.exps_[s]);
  return out;
}

bool Monomial::coprime(const Monomial& other) const {
  for (int s = 0; s < kSlots; ++s) {
    if (exps_[s] > 0 && other.exps_[s] > 0) return false;
  }
  return true;
}

Monomial Monomial::parameter_part() const {
  Monomial out;
  for (int s = 3 * kFamilySlots; s < kMuSlot; ++s) out.exps_[s] = exps_[s];
  return out;
}

Monomial Monomial::ring_part() const {
  Monomial out = *this;
  for (int s = 3 * kFamilySlots; s < kMuSlot; ++s) out.exps_[s] = 0;
  return out;
}

namespace {

// Parameters first, then ring variables, each in slot order.
std::vector<int> print_order() {
  std::vector<int> order;
  for (int s = 3 * kFamilySlots; s < kMuSlot; ++s) order.push_back(s);
  for (int s = 0; s < 3 * kFamilySlots; ++s) order.push_back(s);
  order.push_back(kMuSlot);
  order.push_back(kZSlot);
  return order;
}

const std::vector<int>& cached_print_order() {
  static const std::vector<int> order = print_order();
  return order;
}

}  // namespace

std::string Monomial::to_string() const {
  std::string out;
  for (int s : cached_print_order()) {
    const int e = exps_[s];
    if (e == 0) continue;
    if (!out.empty()) out += '*';
    out += Var::from_slot(s).name();
    if (e != 1) out += '^' + std::to_string(e);
  }
  return out.empty() ? "1" : out;
}

std::string Monomial::to_latex() const {
  std::string out;
  for (int s : cached_print_order()) {
    const int e = exps_[s];
    if (e == 0) continue;
    const Var v = Var::from_slot(s);
    if (v.kind == VarKind::mu) {
      out += "\\mu";
    } else if (v.kind == VarKind::z) {
      out += "z";
    } else {
      out += family_letter(v.kind);
      out += "_" + std::to_string(v.index);
    }
    if (e != 1) {
      const std::string es = std::to_string(e);
      out += es.size() == 1 ? "^" + es : "^{" + es + "}";
    }
  }
  return out;
}

std::strong_ordering canonical_compare(const Monomial& a, const Monomial& b) {
  if (auto c = a.grading() <=> b.grading(); c != 0) return c;
  const auto& ea = a.exponents();
  const auto& eb = b.exponents();
  for (int s = 0; s < kSlots; ++s) {
    if (ea[s] != eb[s]) return ea[s] <=> eb[s];
  }
  return std::strong_ordering::equal;
}

// ---------------------------------------------------------------------------

namespace {

bool term_greater(const Polynomial::Term& a, const Polynomial::Term& b) {
  return canonical_compare(a.monomial, b.monomial) == std::strong_ordering::greater;
}

}  // namespace

Polynomial::Polynomial(const Integer& constant) {
  if (constant != 0) terms_.push_back({Monomial(), constant});
}

Polynomial Polynomial::variable(Var v, int exponent) { return monomial(Monomial::of(v, exponent)); }

Polynomial Polynomial::monomial(const Monomial& m, const Integer& coeff) {
  Polynomial p;
  if (coeff != 0) p.terms_.push_back({m, coeff});
  return p;
}

Polynomial Polynomial::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), term_greater);
  Polynomial p;
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().monomial == t.monomial) {
      p.terms_.back().coeff += t.coeff;
    } else {
      if (!p.terms_.empty() && p.terms_.back().coeff == 0) p.terms_.pop_back();
      p.terms_.push_back(std::move(t));
    }
  }
  if (!p.terms_.empty() && p.terms_.back().coeff == 0) p.terms_.pop_back();
  return p;
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Polynomial parse() {
    std::vector<Polynomial::Term> terms;
    skip_space();
    int sign = 1;
    if (peek() == '-') {
      sign = -1;
      ++pos_;
    } else if (peek() == '+') {
      ++pos_;
    }
    for (;;) {
      auto term = parse_term();
      term.coeff *= sign;
      terms.push_back(std::move(term));
      skip_space();
      if (pos_ >= text_.size()) break;
      const char c = text_[pos_++];
      if (c == '+') {
        sign = 1;
      } else if (c == '-') {
        sign = -1;
      } else {
        fail("expected '+' or '-'");
      }
    }
    return Polynomial::from_terms(std::move(terms));
  }

 private:
  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) {
    throw std::invalid_argument("polynomial parse error at offset " + std::to_string(pos_) + ": " +
                                what + " in '" + std::string(text_) + "'");
  }

  Integer parse_integer() {
    skip_space();
    const size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  Polynomial::Term parse_term() {
    Polynomial::Term term{Monomial(), 1};
    for (;;) {
      const char c = peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        term.coeff *= parse_integer();
      } else if (std::isalpha(static_cast<unsigned char>(c))) {
        const size_t start = pos_;
        while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        const Var v = Var::parse(text_.substr(start, pos_ - start));
        int exponent = 1;
        if (peek() == '^') {
          ++pos_;
          int sign = 1;
          if (peek() == '-') {
            sign = -1;
            ++pos_;
          }
          exponent = sign * static_cast<int>(parse_integer());
        }
        term.monomial = term.monomial * Monomial::of(v, exponent);
      } else {
        fail("expected factor");
      }
      if (peek() != '*') break;
      ++pos_;
    }
    return term;
  }

  std::string_view text_;
  size_t pos_ = 0;
};

}  // namespace

Polynomial Polynomial::parse(std::string_view text) { return Parser(text).parse(); }

Integer Polynomial::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m, [](const Term& t, const Monomial& key) {
    return canonical_compare(t.monomial, key) == std::strong_ordering::greater;
  });
  if (it != terms_.end() && it->monomial == m) return it->coeff;
  return 0;
}

bool Polynomial::uses_only(std::initializer_list<VarKind> kinds) const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [&](const Term& t) { return t.monomial.uses_only(kinds); });
}

std::vector<Var> Polynomial::variables() const {
  std::array<bool, kSlots> seen{};
  for (const auto& t : terms_) {
    for (int s = 0; s < kSlots; ++s) seen[s] = seen[s] || t.monomial.exponent_at(s) != 0;
  }
  std::vector<Var> out;
  for (int s = 0; s < kSlots; ++s) {
    if (seen[s]) out.push_back(Var::from_slot(s));
  }
  return out;
}

bool Polynomial::is_homogeneous(int n) const {
  if (terms_.empty()) return true;
  const int d = terms_.front().monomial.weighted_degree(n);
  return std::all_of(terms_.begin(), terms_.end(),
                     [&](const Term& t) { return t.monomial.weighted_degree(n) == d; });
}

int Polynomial::degree(int n) const {
  return terms_.empty() ? 0 : terms_.front().monomial.weighted_degree(n);
}

namespace {

std::vector<Polynomial::Term> merge(const std::vector<Polynomial::Term>& a,
                                    const std::vector<Polynomial::Term>& b, int sign) {
  std::vector<Polynomial::Term> out;
  out.reserve(a.size() + b.size());
  size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size()) {
      out.push_back(a[i++]);
      continue;
    }
    if (i == a.size()) {
      out.push_back({b[j].monomial, sign > 0 ? b[j].coeff : Integer(-b[j].coeff)});
      ++j;
      continue;
    }
    const auto c = canonical_compare(a[i].monomial, b[j].monomial);
    if (c == std::strong_ordering::greater) {
      out.push_back(a[i++]);
    } else if (c == std::strong_ordering::less) {
      out.push_back({b[j].monomial, sign > 0 ? b[j].coeff : Integer(-b[j].coeff)});
      ++j;
    } else {
      Integer sum = a[i].coeff;
      if (sign > 0) {
        sum += b[j].coeff;
      } else {
        sum -= b[j].coeff;
      }
      if (sum != 0) out.push_back({a[i].monomial, std::move(sum)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  if (other.terms_.empty()) return *this;
  if (terms_.empty()) return *this = other;
  terms_ = merge(terms_, other.terms_, 1);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  if (other.terms_.empty()) return *this;
  terms_ = merge(terms_, other.terms_, -1);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.terms_.empty() || b.terms_.empty()) return {};
  if (a.terms_.size() == 1 && a.terms_[0].monomial.is_one()) return b * a.terms_[0].coeff;
  if (b.terms_.size() == 1 && b.terms_[0].monomial.is_one()) return a * b.terms_[0].coeff;
  std::vector<Polynomial::Term> products;
  products.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& s : a.terms_) {
    for (const auto& t : b.terms_) products.push_back({s.monomial * t.monomial, s.coeff * t.coeff});
  }
  return Polynomial::from_terms(std::move(products));
}

Polynomial& Polynomial::operator*=(const Polynomial& other) { return *this = *this * other; }

Polynomial& Polynomial::operator*=(const Integer& scalar) {
  if (scalar == 0) {
    terms_.clear();
  } else if (scalar != 1) {
    for (auto& t : terms_) t.coeff *= scalar;
  }
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& t : out.terms_) t.coeff = -t.coeff;
  return out;
}

Polynomial Polynomial::pow(int exponent) const {
  if (exponent < 0) throw std::domain_error("negative power of a polynomial");
  Polynomial result(1);
  Polynomial base = *this;
  while (exponent > 0) {
    if (exponent & 1) result *= base;
    exponent >>= 1;
    if (exponent > 0) base *= base;
  }
  return result;
}

Polynomial Polynomial::shifted(const Monomial& m) const {
  // The canonical order is multiplicative, so the term order is preserved.
  Polynomial out;
  out.terms_.reserve(terms_.size());
  for (const auto& t : terms_) out.terms_.push_back({t.monomial * m, t.coeff});
  return out;
}

Polynomial Polynomial::set_zero(Var v) const {
  return filter([&](const Monomial& m) { return m.exponent(v) == 0; });
}

Polynomial Polynomial::set_zero(VarKind kind) const {
  return filter([&](const Monomial& m) {
    for (const Var& v : m.variables()) {
      if (v.kind == kind) return false;
    }
    return true;
  });
}

Polynomial Polynomial::coefficient_of(Var v, int exponent) const {
  std::vector<Term> terms;
  for (const auto& t : terms_) {
    if (t.monomial.exponent(v) != exponent) continue;
    Monomial m = t.monomial;
    m.set(v, 0);
    terms.push_back({m, t.coeff});
  }
  return from_terms(std::move(terms));
}

Polynomial Polynomial::substitute(const std::map<Var, Polynomial>& images) const {
  std::map<std::pair<Var, int>, Polynomial> powers;
  auto power = [&](Var v, const Polynomial& base, int e) -> const Polynomial& {
    auto key = std::make_pair(v, e);
    auto it = powers.find(key);
    if (it == powers.end()) it = powers.emplace(key, base.pow(e)).first;
    return it->second;
  };
  Polynomial out;
  std::vector<Term> pending;
  for (const auto& t : terms_) {
    Monomial kept;
    Polynomial factor(t.coeff);
    for (const Var& v : t.monomial.variables()) {
      const int e = t.monomial.exponent(v);
      auto it = images.find(v);
      if (it == images.end()) {
        kept.set(v, e);
      } else {
        if (e < 0) throw std::domain_error("cannot substitute into a negative power");
        factor *= power(v, it->second, e);
      }
    }
    out += factor.shifted(kept);
  }
  return out;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    const bool negative = t.coeff < 0;
    const Integer magnitude = negative ? Integer(-t.coeff) : t.coeff;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (t.monomial.is_one()) {
      out += magnitude.str();
    } else {
      if (magnitude != 1) out += magnitude.str() + '*';
      out += t.monomial.to_string();
    }
  }
  return out;
}

std::string Polynomial::to_latex() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    const bool negative = t.coeff < 0;
    const Integer magnitude = negative ? Integer(-t.coeff) : t.coeff;
    if (negative) {
      out += '-';
    } else if (!first) {
      out += '+';
    }
    first = false;
    if (t.monomial.is_one()) {
      out += magnitude.str();
    } else {
      if (magnitude != 1) out += magnitude.str();
      out += t.monomial.to_latex();
    }
  }
  return out;
}

Polynomial relabel(const Polynomial& p, const VarMap& map) {
  const auto vars = p.variables();
  std::vector<Var> targets;
  for (const Var& v : vars) {
    auto it = map.find(v);
    if (it == map.end()) throw std::invalid_argument("relabel: unmapped variable " + v.name());
    if (std::find(targets.begin(), targets.end(), it->second) != targets.end()) {
      throw std::invalid_argument("relabel: map is not injective on " + it->second.name());
    }
    targets.push_back(it->second);
  }
  std::vector<Polynomial::Term> terms;
  terms.reserve(p.size());
  for (const auto& t : p.terms()) {
    Monomial m;
    for (const Var& v : t.monomial.variables()) m.set(map.at(v), t.monomial.exponent(v));
    terms.push_back({m, t.coeff});
  }
  return Polynomial::from_terms(std::move(terms));
}

Polynomial rename_kind(const Polynomial& p, VarKind from, VarKind to) {
  VarMap map;
  for (const Var& v : p.variables()) map[v] = v.kind == from ? Var{to, v.index} : v;
  return relabel(p, map);
}

Polynomial divide_exact(const Polynomial& num, const Polynomial& den) {
  if (den.is_zero()) throw std::domain_error("division by the zero polynomial");
  const auto& lead = den.leading_term();
  Polynomial remainder = num;
  std::vector<Polynomial::Term> quotient;
  while (!remainder.is_zero()) {
    const auto& top = remainder.leading_term();
    if (!lead.monomial.divides(top.monomial) || top.coeff % lead.coeff != 0) {
      throw std::domain_error("inexact polynomial division");
    }
    Polynomial::Term q{top.monomial / lead.monomial, top.coeff / lead.coeff};
    remainder -= den.shifted(q.monomial) * q.coeff;
    quotient.push_back(std::move(q));
  }
  return Polynomial::from_terms(std::move(quotient));
}

}  // namespace flagstar
