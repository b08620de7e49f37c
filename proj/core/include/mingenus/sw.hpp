#pragma once

// Seiberg-Witten bookkeeping: multiplicativity under (p,1) torus surgeries
// and basic-class generators for the fixture families.

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "mingenus/lattice.hpp"
#include "mingenus/model.hpp"

namespace mingenus {

/// The p of each (p,1) torus surgery, in order.
struct SurgerySequence {
  std::vector<Int> coefficients;

  friend bool operator==(const SurgerySequence&, const SurgerySequence&) = default;
};

/// initial * product of the coefficients.
Int surgery_sw(const SurgerySequence& seq, Int initial);

/// Integer Laurent polynomial, exponent -> nonzero coefficient.
class LaurentPolynomial {
 public:
  LaurentPolynomial() = default;
  explicit LaurentPolynomial(std::map<Int, Int> terms);
  static LaurentPolynomial monomial(Int coefficient, Int exponent);

  const std::map<Int, Int>& terms() const noexcept { return terms_; }
  Int coefficient(Int exponent) const;
  bool is_zero() const noexcept { return terms_.empty(); }
  Int min_exponent() const;
  Int max_exponent() const;

  /// Sum of coefficients (value at t = 1).
  Int at_one() const;
  /// Value at an integer point t; exponents must be >= 0 unless t = +-1.
  Int evaluate_nonnegative(Int t) const;
  /// p(t^k).
  LaurentPolynomial substitute_power(Int k) const;
  /// p(t^-1) == p(t).
  bool is_symmetric() const;

  friend LaurentPolynomial operator+(const LaurentPolynomial& a, const LaurentPolynomial& b);
  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);
  friend bool operator==(const LaurentPolynomial&, const LaurentPolynomial&) = default;

  std::string to_string() const;

 private:
  void add_term(Int exponent, Int coefficient);
  std::map<Int, Int> terms_;
};

/// Alexander polynomial of the (2, 2m+1) torus knot:
/// sum_{j=0}^{2m} (-1)^j t^(m-j). m = 0 gives the unknot, 1.
LaurentPolynomial alexander_torus_2q(Int m);

/// Delta_{K_m}(t^2) (t - t^-1)^(n-2): the exponents are the multiples of the
/// fiber class carrying basic classes of E(n)_{K_m}.
LaurentPolynomial knot_surgery_polynomial(Int n, Int m);

/// Two classes +-s with kappa = (2, 2) on the genus-2 generators x, y and
/// invariants n, -n.
std::vector<BasicClass> xn_basic_classes(Int n);

/// Coordinate layout of the E(n)_{K_m} lattice used by the fixtures:
/// section S, fiber F, then 2n-2 hyperbolic pairs (x_i, y_i), then n copies
/// of -E8.
struct EnkLayout {
  Int n = 2;
  std::size_t section() const { return 0; }
  std::size_t fiber() const { return 1; }
  std::size_t hyperbolic_x(std::size_t i) const { return 2 + 2 * i; }
  std::size_t hyperbolic_y(std::size_t i) const { return 3 + 2 * i; }
  std::size_t hyperbolic_count() const { return static_cast<std::size_t>(2 * n - 2); }
  std::size_t e8_start(std::size_t j) const { return 2 + 2 * hyperbolic_count() + 8 * j; }
  std::size_t rank() const { return 2 + 2 * hyperbolic_count() + 8 * static_cast<std::size_t>(n); }
};

/// Basic classes r[F] of E(n)_{K_m}, one per nonzero coefficient of
/// knot_surgery_polynomial(n, m), top exponent first, then descending.
/// kappa_r(x) = r Q(F, x), i.e. r on the section and 0 elsewhere.
std::vector<BasicClass> enk_basic_classes(Int n, Int m);

/// Basic classes (p-1-2j) f, j = 0..p-1, of E(2)_p on the block <sigma, f>
/// (coordinates 0 and 1 of a 22-dimensional layout); invariant 1 each.
std::vector<BasicClass> e2p_basic_classes(Int p);

/// Covectors of the basic classes as a set is closed under negation.
bool basic_classes_symmetric(const std::vector<BasicClass>& classes);

}  // namespace mingenus
