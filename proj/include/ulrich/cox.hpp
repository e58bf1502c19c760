#ifndef ULRICH_COX_HPP
#define ULRICH_COX_HPP

#include <array>
#include <map>
#include <utility>
#include <vector>

#include "ulrich/cohomology.hpp"
#include "ulrich/matrix.hpp"

namespace ulrich {

// z^zp * w^wq * t0^k0 * t1^k1 with deg z = (1,0), deg w = (1,e), deg t_i = (0,1).
struct Monomial {
  long zp = 0;
  long wq = 0;
  long k0 = 0;
  long k1 = 0;

  friend bool operator==(const Monomial& x, const Monomial& y) {
    return x.zp == y.zp && x.wq == y.wq && x.k0 == y.k0 && x.k1 == y.k1;
  }
  // Basis order: ascending lexicographic on (wq, zp, k1); k0 is determined in fixed degree.
  friend bool operator<(const Monomial& x, const Monomial& y) {
    if (x.wq != y.wq) return x.wq < y.wq;
    if (x.zp != y.zp) return x.zp < y.zp;
    if (x.k1 != y.k1) return x.k1 < y.k1;
    return x.k0 < y.k0;
  }
};

inline Monomial operator*(const Monomial& x, const Monomial& y) {
  return {x.zp + y.zp, x.wq + y.wq, x.k0 + y.k0, x.k1 + y.k1};
}

inline DivisorClass monomial_degree(long e, const Monomial& m) {
  return {e, Int(m.zp) + m.wq, Int(m.wq) * e + m.k0 + m.k1};
}

// All monomials of degree D in basis order; |basis| == h0(D).
std::vector<Monomial> monomial_basis(const DivisorClass& d);

// Position lookup for one degree.
class BasisIndex {
 public:
  explicit BasisIndex(const DivisorClass& d) : degree_(d), basis_(monomial_basis(d)) {
    for (std::size_t i = 0; i < basis_.size(); ++i) index_.emplace(basis_[i], i);
  }
  const DivisorClass& degree() const { return degree_; }
  const std::vector<Monomial>& basis() const { return basis_; }
  std::size_t size() const { return basis_.size(); }
  std::size_t index_of(const Monomial& m) const {
    auto it = index_.find(m);
    if (it == index_.end()) throw std::logic_error("monomial outside basis");
    return it->second;
  }

 private:
  DivisorClass degree_;
  std::vector<Monomial> basis_;
  std::map<Monomial, std::size_t> index_;
};

// Bigraded form: coefficients on the monomial basis of its degree, zeros omitted.
template <class F>
struct Form {
  DivisorClass degree;
  std::vector<std::pair<Monomial, typename F::Elem>> terms;  // sorted by basis order

  bool is_zero() const { return terms.empty(); }
};

// Coefficients drawn in basis order, one draw per basis monomial.
template <class F>
Form<F> sample_form(const F& f, const DivisorClass& d, Rng& rng) {
  Form<F> s;
  s.degree = d;
  for (const Monomial& m : monomial_basis(d)) {
    auto c = f.sample(rng);
    if (!f.is_zero(c)) s.terms.emplace_back(m, std::move(c));
  }
  return s;
}

template <class F>
Form<F> multiply(const F& f, const Form<F>& x, const Form<F>& y) {
  require_same_surface(x.degree, y.degree);
  Form<F> z;
  z.degree = x.degree + y.degree;
  std::map<Monomial, typename F::Elem> acc;
  for (const auto& [mx, cx] : x.terms)
    for (const auto& [my, cy] : y.terms) {
      const Monomial m = mx * my;
      auto it = acc.find(m);
      if (it == acc.end())
        acc.emplace(m, f.mul(cx, cy));
      else
        it->second = f.add(it->second, f.mul(cx, cy));
    }
  for (auto& [m, c] : acc)
    if (!f.is_zero(c)) z.terms.emplace_back(m, std::move(c));
  return z;
}

// Point with all four coordinates nonzero, i.e. in the dense torus orbit.
template <class F>
using TorusPoint = std::array<typename F::Elem, 4>;  // z, w, t0, t1

template <class F>
TorusPoint<F> sample_torus_point(const F& f, Rng& rng) {
  TorusPoint<F> p;
  for (auto& c : p) c = f.sample_nonzero(rng);
  return p;
}

template <class F>
typename F::Elem power(const F& f, typename F::Elem base, long k) {
  auto r = f.one();
  for (long i = 0; i < k; ++i) r = f.mul(r, base);
  return r;
}

template <class F>
typename F::Elem evaluate(const F& f, const Form<F>& s, const TorusPoint<F>& pt) {
  auto total = f.zero();
  for (const auto& [m, c] : s.terms) {
    auto v = f.mul(power(f, pt[0], m.zp), power(f, pt[1], m.wq));
    v = f.mul(v, power(f, pt[2], m.k0));
    v = f.mul(v, power(f, pt[3], m.k1));
    total = f.add(total, f.mul(c, v));
  }
  return total;
}

// Matrix of "multiply by s" from basis(source) to basis(source + deg s),
// columns indexed by the source basis order.
template <class F>
Dense<F> multiplication_matrix(const F& f, const Form<F>& s, const BasisIndex& source,
                               const BasisIndex& target) {
  if (!(target.degree() == source.degree() + s.degree))
    throw std::logic_error("multiplication_matrix: degree mismatch");
  Dense<F> m(target.size(), source.size());
  for (auto& v : m.a) v = f.zero();
  for (std::size_t j = 0; j < source.size(); ++j) {
    const Monomial& mj = source.basis()[j];
    for (const auto& [mono, c] : s.terms) {
      const std::size_t i = target.index_of(mono * mj);
      m.at(i, j) = f.add(m.at(i, j), c);
    }
  }
  return m;
}

template <class F>
Dense<F> multiplication_matrix(const F& f, const Form<F>& s, const DivisorClass& source) {
  BasisIndex src(source);
  BasisIndex dst(source + s.degree);
  return multiplication_matrix(f, s, src, dst);
}

}  // namespace ulrich

#endif
