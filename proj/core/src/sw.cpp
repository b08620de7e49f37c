#include "mingenus/sw.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "mingenus/error.hpp"

namespace mingenus {

Int surgery_sw(const SurgerySequence& seq, Int initial) {
  Int v = initial;
  for (Int p : seq.coefficients) v = checked::mul(v, p);
  return v;
}

LaurentPolynomial::LaurentPolynomial(std::map<Int, Int> terms) {
  for (const auto& [e, c] : terms) add_term(e, c);
}

LaurentPolynomial LaurentPolynomial::monomial(Int coefficient, Int exponent) {
  LaurentPolynomial p;
  p.add_term(exponent, coefficient);
  return p;
}

void LaurentPolynomial::add_term(Int exponent, Int coefficient) {
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, coefficient);
  if (!inserted) {
    it->second = checked::add(it->second, coefficient);
    if (it->second == 0) terms_.erase(it);
  }
}

Int LaurentPolynomial::coefficient(Int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? 0 : it->second;
}

Int LaurentPolynomial::min_exponent() const {
  if (terms_.empty()) throw PreconditionViolated("zero polynomial has no exponents");
  return terms_.begin()->first;
}

Int LaurentPolynomial::max_exponent() const {
  if (terms_.empty()) throw PreconditionViolated("zero polynomial has no exponents");
  return terms_.rbegin()->first;
}

Int LaurentPolynomial::at_one() const {
  Int s = 0;
  for (const auto& [e, c] : terms_) s = checked::add(s, c);
  return s;
}

Int LaurentPolynomial::evaluate_nonnegative(Int t) const {
  Int s = 0;
  for (const auto& [e, c] : terms_) {
    if (e < 0 && t != 1 && t != -1) throw PreconditionViolated("negative exponent at a non-unit point");
    Int pw = 1;
    const Int k = e < 0 ? -e : e;
    for (Int i = 0; i < k; ++i) pw = checked::mul(pw, t);
    s = checked::add(s, checked::mul(c, pw));
  }
  return s;
}

LaurentPolynomial LaurentPolynomial::substitute_power(Int k) const {
  LaurentPolynomial out;
  for (const auto& [e, c] : terms_) out.add_term(checked::mul(e, k), c);
  return out;
}

bool LaurentPolynomial::is_symmetric() const {
  return std::all_of(terms_.begin(), terms_.end(), [&](const auto& t) { return coefficient(-t.first) == t.second; });
}

LaurentPolynomial operator+(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  LaurentPolynomial out = a;
  for (const auto& [e, c] : b.terms_) out.add_term(e, c);
  return out;
}

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  LaurentPolynomial out;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) out.add_term(checked::add(ea, eb), checked::mul(ca, cb));
  return out;
}

std::string LaurentPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto [e, c] = *it;
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    const Int mag = c < 0 ? -c : c;
    if (mag != 1 || e == 0) os << mag;
    if (e != 0) {
      os << "t";
      if (e != 1) os << "^" << e;
    }
  }
  return os.str();
}

LaurentPolynomial alexander_torus_2q(Int m) {
  if (m < 0) throw PreconditionViolated("alexander_torus_2q: m must be >= 0");
  LaurentPolynomial p;
  for (Int j = 0; j <= 2 * m; ++j) p = p + LaurentPolynomial::monomial(j % 2 == 0 ? 1 : -1, m - j);
  return p;
}

LaurentPolynomial knot_surgery_polynomial(Int n, Int m) {
  if (n < 2) throw PreconditionViolated("knot_surgery_polynomial: n must be >= 2");
  LaurentPolynomial p = alexander_torus_2q(m).substitute_power(2);
  const LaurentPolynomial factor = LaurentPolynomial({{1, 1}, {-1, -1}});
  for (Int i = 0; i < n - 2; ++i) p = p * factor;
  return p;
}

std::vector<BasicClass> xn_basic_classes(Int n) {
  if (n < 1) throw PreconditionViolated("xn_basic_classes: n must be >= 1");
  // Seven +-1 surgeries followed by one n-surgery on a class of invariant 1.
  SurgerySequence seq{{1, 1, 1, 1, 1, 1, 1, n}};
  const Int value = surgery_sw(seq, 1);
  return {{"s", {2, 2}, value}, {"-s", {-2, -2}, checked::neg(value)}};
}

std::vector<BasicClass> enk_basic_classes(Int n, Int m) {
  if (n < 2 || m < 0) throw PreconditionViolated("enk_basic_classes: needs n >= 2 and m >= 0");
  const EnkLayout layout{n};
  const auto poly = knot_surgery_polynomial(n, m);
  std::vector<BasicClass> out;
  for (auto it = poly.terms().rbegin(); it != poly.terms().rend(); ++it) {
    BasicClass b;
    b.id = it->first == 0 ? "0F" : std::to_string(it->first) + "F";
    b.kappa.assign(layout.rank(), 0);
    b.kappa[layout.section()] = it->first;
    b.sw_value = it->second;
    out.push_back(std::move(b));
  }
  return out;
}

std::vector<BasicClass> e2p_basic_classes(Int p) {
  if (p < 1 || p % 2 == 0) throw Inapplicable("e2p_basic_classes: p must be odd and >= 1");
  const EnkLayout layout{2};
  std::vector<BasicClass> out;
  for (Int j = 0; j < p; ++j) {
    const Int r = p - 1 - 2 * j;
    BasicClass b;
    b.id = std::to_string(r) + "f";
    b.kappa.assign(layout.rank(), 0);
    b.kappa[0] = r;
    b.sw_value = 1;
    out.push_back(std::move(b));
  }
  return out;
}

bool basic_classes_symmetric(const std::vector<BasicClass>& classes) {
  std::multiset<std::vector<Int>> plus, minus;
  for (const auto& b : classes) {
    plus.insert(b.kappa);
    std::vector<Int> neg = b.kappa;
    for (auto& x : neg) x = checked::neg(x);
    minus.insert(std::move(neg));
  }
  return plus == minus;
}

}  // namespace mingenus
