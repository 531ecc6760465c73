#include "flagstar/groebner.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace flagstar {

namespace {

using Term = RationalPolynomial::Term;

// a[start..] - c * m * g, where the leading terms cancel by construction and
// are skipped on both sides.
std::vector<Term> subtract_multiple(const std::vector<Term>& a, std::size_t start, const Rational& c,
                                    const Monomial& m, const std::vector<Term>& g, const MonomialOrder& order) {
  std::vector<Term> out;
  out.reserve(a.size() - start + g.size());
  std::size_t i = start + 1;
  std::size_t j = 1;
  while (i < a.size() || j < g.size()) {
    if (j >= g.size()) {
      out.push_back(a[i++]);
      continue;
    }
    Monomial gm = g[j].monomial * m;
    if (i >= a.size()) {
      out.push_back({gm, -c * g[j].coeff});
      ++j;
      continue;
    }
    const auto cmp = order.compare(a[i].monomial, gm);
    if (cmp == std::strong_ordering::greater) {
      out.push_back(a[i++]);
    } else if (cmp == std::strong_ordering::less) {
      out.push_back({gm, -c * g[j].coeff});
      ++j;
    } else {
      Rational v = a[i].coeff - c * g[j].coeff;
      if (v != 0) out.push_back({gm, std::move(v)});
      ++i;
      ++j;
    }
  }
  return out;
}

const RationalPolynomial* find_reducer(const std::vector<RationalPolynomial>& basis, const Monomial& m) {
  for (const auto& g : basis) {
    if (g.leading().monomial.divides(m)) return &g;
  }
  return nullptr;
}

RationalPolynomial full_reduce(RationalPolynomial f, const std::vector<RationalPolynomial>& basis,
                               const MonomialOrder& order) {
  std::vector<Term> rest = std::move(f.mutable_terms());
  std::vector<Term> remainder;
  std::size_t pos = 0;
  while (pos < rest.size()) {
    const Term& lead = rest[pos];
    const RationalPolynomial* g = find_reducer(basis, lead.monomial);
    if (!g) {
      remainder.push_back(lead);
      ++pos;
      continue;
    }
    const Rational c = lead.coeff / g->leading().coeff;
    const Monomial m = lead.monomial / g->leading().monomial;
    rest = subtract_multiple(rest, pos, c, m, g->terms(), order);
    pos = 0;
  }
  RationalPolynomial out;
  out.mutable_terms() = std::move(remainder);
  return out;
}

RationalPolynomial s_polynomial(const RationalPolynomial& f, const RationalPolynomial& g,
                                const MonomialOrder& order) {
  const Monomial l = f.leading().monomial.lcm(g.leading().monomial);
  // (l / lt f) f / lc f - (l / lt g) g / lc g, leading terms cancel.
  std::vector<Term> a;
  const Monomial mf = l / f.leading().monomial;
  const Rational cf = 1 / f.leading().coeff;
  a.reserve(f.terms().size());
  for (const auto& t : f.terms()) a.push_back({t.monomial * mf, t.coeff * cf});
  const Rational cg = 1 / g.leading().coeff;
  RationalPolynomial out;
  out.mutable_terms() = subtract_multiple(a, 0, cg, l / g.leading().monomial, g.terms(), order);
  return out;
}

void make_monic(RationalPolynomial& p) {
  if (p.is_zero()) return;
  const Rational lc = p.leading().coeff;
  if (lc == 1) return;
  for (auto& t : p.mutable_terms()) t.coeff /= lc;
}

}  // namespace

MonomialOrder::MonomialOrder(std::vector<std::vector<Var>> blocks)
    : blocks_(std::move(blocks)), covered_(kSlots, false) {
  for (const auto& block : blocks_) {
    std::vector<int> slots;
    for (const Var& v : block) {
      if (covered_[v.slot()]) throw std::invalid_argument("MonomialOrder: variable listed twice: " + v.name());
      covered_[v.slot()] = true;
      slots.push_back(v.slot());
    }
    slots_.push_back(std::move(slots));
  }
}

MonomialOrder MonomialOrder::block_grevlex(const std::vector<Var>& ring, const std::vector<Var>& parameters) {
  std::vector<std::vector<Var>> blocks{ring};
  if (!parameters.empty()) blocks.push_back(parameters);
  return MonomialOrder(std::move(blocks));
}

std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  for (const auto& slots : slots_) {
    int da = 0;
    int db = 0;
    for (int s : slots) {
      da += a.exponent_at(s);
      db += b.exponent_at(s);
    }
    if (da != db) return da <=> db;
    for (auto it = slots.rbegin(); it != slots.rend(); ++it) {
      const int ea = a.exponent_at(*it);
      const int eb = b.exponent_at(*it);
      if (ea != eb) return eb <=> ea;
    }
  }
  return std::strong_ordering::equal;
}

bool MonomialOrder::covers(const Monomial& m) const {
  for (int s = 0; s < kSlots; ++s) {
    if (m.exponent_at(s) != 0 && !covered_[s]) return false;
  }
  return true;
}

RationalPolynomial::RationalPolynomial(const Polynomial& p, const MonomialOrder& order) {
  terms_.reserve(p.size());
  for (const auto& t : p.terms()) {
    if (!order.covers(t.monomial)) {
      throw std::invalid_argument("monomial " + t.monomial.to_string() + " uses a variable outside the order");
    }
    terms_.push_back({t.monomial, Rational(t.coeff)});
  }
  std::sort(terms_.begin(), terms_.end(), [&](const Term& a, const Term& b) {
    return order.compare(a.monomial, b.monomial) == std::strong_ordering::greater;
  });
}

Polynomial RationalPolynomial::to_polynomial() const {
  std::vector<Polynomial::Term> out;
  for (const auto& t : terms_) {
    if (!is_integral(t.coeff)) throw std::domain_error("non-integral coefficient " + t.coeff.str());
    out.push_back({t.monomial, to_integer(t.coeff)});
  }
  return Polynomial::from_terms(std::move(out));
}

Polynomial RationalPolynomial::primitive() const {
  if (terms_.empty()) return Polynomial();
  Integer den = 1;
  for (const auto& t : terms_) den = boost::multiprecision::lcm(den, boost::multiprecision::denominator(t.coeff));
  Integer content = 0;
  for (const auto& t : terms_) {
    content = boost::multiprecision::gcd(content, to_integer(t.coeff * den));
  }
  if (terms_.front().coeff < 0) content = -content;
  std::vector<Polynomial::Term> out;
  for (const auto& t : terms_) out.push_back({t.monomial, to_integer(t.coeff * den) / content});
  return Polynomial::from_terms(std::move(out));
}

std::string RationalPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    Rational c = t.coeff;
    if (first) {
      if (c < 0) {
        os << "-";
        c = -c;
      }
    } else {
      os << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    }
    first = false;
    if (t.monomial.is_one()) {
      os << c.str();
    } else {
      if (c != 1) os << c.str() << "*";
      os << t.monomial.to_string();
    }
  }
  return os.str();
}

RationalPolynomial GroebnerBasis::normal_form(const Polynomial& f) const {
  return full_reduce(RationalPolynomial(f, order_), generators_, order_);
}

RationalPolynomial GroebnerBasis::normal_form(RationalPolynomial f) const {
  return full_reduce(std::move(f), generators_, order_);
}

std::vector<Polynomial> GroebnerBasis::primitive_generators() const {
  std::vector<Polynomial> out;
  for (const auto& g : generators_) out.push_back(g.primitive());
  return out;
}

std::vector<Monomial> GroebnerBasis::leading_monomials() const {
  std::vector<Monomial> out;
  for (const auto& g : generators_) out.push_back(g.leading().monomial);
  return out;
}

std::optional<std::vector<Monomial>> GroebnerBasis::standard_monomials(const std::vector<Var>& ring) const {
  std::vector<Monomial> leads;
  for (const auto& g : generators_) {
    Monomial m;
    for (const Var& v : ring) m.set(v, g.leading().monomial.exponent(v));
    leads.push_back(m);
  }
  auto is_standard = [&](const Monomial& m) {
    for (const auto& l : leads) {
      if (l.divides(m)) return false;
    }
    return true;
  };

  constexpr int kMaxDegree = 64;
  std::vector<Monomial> out;
  std::vector<Monomial> layer{Monomial()};
  for (int degree = 0; degree <= kMaxDegree; ++degree) {
    std::vector<Monomial> standard;
    for (const auto& m : layer) {
      if (is_standard(m)) standard.push_back(m);
    }
    if (standard.empty()) return out;
    out.insert(out.end(), standard.begin(), standard.end());
    // Next layer: only multiples of standard monomials can be standard.
    std::vector<Monomial> next;
    for (const auto& m : standard) {
      for (const Var& v : ring) {
        Monomial up = m;
        up.set(v, m.exponent(v) + 1);
        if (std::find(next.begin(), next.end(), up) == next.end()) next.push_back(up);
      }
    }
    layer = std::move(next);
  }
  return std::nullopt;
}

bool GroebnerBasis::s_pairs_reduce_to_zero() const {
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    for (std::size_t j = i + 1; j < generators_.size(); ++j) {
      if (!normal_form(s_polynomial(generators_[i], generators_[j], order_)).is_zero()) return false;
    }
  }
  return true;
}

GroebnerBasis buchberger(const std::vector<Polynomial>& generators, const MonomialOrder& order) {
  std::vector<RationalPolynomial> basis;
  struct Pair {
    std::size_t i;
    std::size_t j;
    Monomial lcm;
  };
  std::vector<Pair> pairs;

  auto add = [&](RationalPolynomial h) {
    make_monic(h);
    const std::size_t t = basis.size();
    const Monomial& lt = h.leading().monomial;
    // Gebauer-Moeller: drop old pairs whose lcm is a strict chain through h.
    std::erase_if(pairs, [&](const Pair& p) {
      if (!lt.divides(p.lcm)) return false;
      const Monomial li = basis[p.i].leading().monomial.lcm(lt);
      const Monomial lj = basis[p.j].leading().monomial.lcm(lt);
      return !(li == p.lcm) && !(lj == p.lcm);
    });
    for (std::size_t i = 0; i < t; ++i) {
      const Monomial& li = basis[i].leading().monomial;
      if (li.coprime(lt)) continue;
      pairs.push_back({i, t, li.lcm(lt)});
    }
    basis.push_back(std::move(h));
  };

  for (const auto& g : generators) {
    RationalPolynomial r = full_reduce(RationalPolynomial(g, order), basis, order);
    if (!r.is_zero()) add(std::move(r));
  }

  while (!pairs.empty()) {
    auto best = std::min_element(pairs.begin(), pairs.end(), [&](const Pair& a, const Pair& b) {
      return order.compare(a.lcm, b.lcm) == std::strong_ordering::less;
    });
    const Pair p = *best;
    pairs.erase(best);
    RationalPolynomial r = full_reduce(s_polynomial(basis[p.i], basis[p.j], order), basis, order);
    if (!r.is_zero()) add(std::move(r));
  }

  // Minimalize, then interreduce.
  std::vector<RationalPolynomial> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (i == j) continue;
      const Monomial& a = basis[j].leading().monomial;
      const Monomial& b = basis[i].leading().monomial;
      if (a.divides(b) && (!(a == b) || j < i)) redundant = true;
    }
    if (!redundant) minimal.push_back(basis[i]);
  }
  std::vector<RationalPolynomial> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<RationalPolynomial> others;
    for (std::size_t j = 0; j < minimal.size(); ++j) {
      if (j != i) others.push_back(minimal[j]);
    }
    RationalPolynomial tail;
    tail.mutable_terms().assign(minimal[i].terms().begin() + 1, minimal[i].terms().end());
    RationalPolynomial r = full_reduce(std::move(tail), others, order);
    RationalPolynomial g;
    g.mutable_terms().push_back(minimal[i].leading());
    for (auto& t : r.mutable_terms()) g.mutable_terms().push_back(std::move(t));
    make_monic(g);
    reduced.push_back(std::move(g));
  }
  std::sort(reduced.begin(), reduced.end(), [&](const RationalPolynomial& a, const RationalPolynomial& b) {
    return order.compare(a.leading().monomial, b.leading().monomial) == std::strong_ordering::less;
  });
  return GroebnerBasis(order, std::move(reduced), true);
}

MonomialOrder presentation_order(int n, VarKind ring_kind, bool with_parameters) {
  const int count = ring_kind == VarKind::Y ? n - 1 : n;
  std::vector<Var> ring;
  for (int i = count; i >= 1; --i) ring.push_back(Var{ring_kind, i});
  std::vector<Var> parameters;
  if (with_parameters) {
    for (int j = n; j >= 1; --j) parameters.push_back(Var::q(j));
  }
  return MonomialOrder::block_grevlex(ring, parameters);
}

Polynomial elementary_symmetric(int n, int k, VarKind kind) {
  // e_k(v_1..v_m) = e_k(v_1..v_{m-1}) + v_m e_{k-1}(v_1..v_{m-1})
  std::vector<Polynomial> e(static_cast<std::size_t>(k) + 1);
  e[0] = Polynomial(1);
  for (int m = 1; m <= n; ++m) {
    const Polynomial v = Polynomial::variable(Var{kind, m});
    for (int j = std::min(k, m); j >= 1; --j) e[j] += v * e[j - 1];
  }
  return e[k];
}

GroebnerBasis classical_ideal_basis(int n, VarKind kind) {
  std::vector<Polynomial> gens;
  for (int k = 1; k <= n; ++k) gens.push_back(elementary_symmetric(n, k, kind));
  return buchberger(gens, presentation_order(n, kind, false));
}

}  // namespace flagstar

namespace flagstar {

GroebnerBasis periodic_ideal_basis(int n, Presentation p) {
  const RelationSet rel = periodic_relations(n, p);
  return buchberger(rel.ideal_generators(), presentation_order(n, p == Presentation::X ? VarKind::X : VarKind::Y));
}

GroebnerBasis chart_ideal_basis(int n, int k) {
  const RelationSet rel = chart_relations(n, k, Presentation::Y);
  return buchberger(rel.ideal_generators(), presentation_order(n, VarKind::Y));
}

CheckResult verify_rank(int n) {
  return timed_check("groebner.rank", "", [&](CheckResult& r) {
    std::vector<Var> ring;
    for (int i = n - 1; i >= 1; --i) ring.push_back(Var::Y(i));
    std::size_t expected = 1;
    for (int i = 2; i <= n; ++i) expected *= static_cast<std::size_t>(i);
    for (int k = 1; k <= n; ++k) {
      ++r.cases;
      const auto standard = chart_ideal_basis(n, k).standard_monomials(ring);
      if (!standard || standard->size() != expected) {
        r.fail({{"k", std::to_string(k)},
                {"standard_monomials", standard ? std::to_string(standard->size()) : "infinite"},
                {"expected", std::to_string(expected)}});
      }
    }
  });
}

CheckResult verify_classical_ideal(int n) {
  return timed_check("groebner.classical_ideal", "(iii)", [&](CheckResult& r) {
    const GroebnerBasis classical = classical_ideal_basis(n, VarKind::X);
    std::vector<Polynomial> limit;
    for (const auto& g : periodic_relations(n, Presentation::X).ideal_generators()) {
      const Polynomial at_zero = g.set_zero(VarKind::q);
      if (!at_zero.is_zero()) limit.push_back(at_zero);
    }
    const GroebnerBasis deformed = buchberger(limit, presentation_order(n, VarKind::X, false));
    for (const auto& g : limit) {
      ++r.cases;
      if (!classical.contains(g)) r.fail({{"generator", g.to_string()}, {"direction", "limit in S(X)"}});
    }
    for (int k = 1; k <= n; ++k) {
      ++r.cases;
      const Polynomial e = elementary_symmetric(n, k, VarKind::X);
      if (!deformed.contains(e)) r.fail({{"generator", e.to_string()}, {"direction", "S(X) in limit"}});
    }
  });
}

CheckResult verify_presentation(const GroebnerBasis& ideal, const SchubertBasis& basis,
                                const std::vector<Polynomial>& representatives, const ProductTable<KElement>& star) {
  return timed_check("groebner.presentation", "", [&](CheckResult& r) {
    const std::size_t size = basis.size();
    std::vector<std::optional<std::vector<std::pair<std::string, std::string>>>> failures(size);
    parallel_for(size, [&](std::size_t u) {
      for (std::size_t v = u; v < size; ++v) {
        Polynomial f = representatives[u] * representatives[v];
        for (std::size_t w = 0; w < size; ++w) {
          const Polynomial& c = star[u][v][w].poly();
          if (!c.is_zero()) f -= c * representatives[w];
        }
        const auto nf = ideal.normal_form(f);
        if (!nf.is_zero() && !failures[u]) {
          failures[u] = std::vector<std::pair<std::string, std::string>>{
              {"u", basis.at(u).to_string()}, {"v", basis.at(v).to_string()}, {"normal_form", nf.to_string()}};
        }
      }
    });
    r.cases = size * (size + 1) / 2;
    for (const auto& f : failures) {
      if (f) {
        r.fail(*f);
        break;
      }
    }
  });
}

}  // namespace flagstar
