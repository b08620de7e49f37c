#pragma once

// Exact integer bilinear-form arithmetic on second homology lattices.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include <boost/container/small_vector.hpp>

namespace mingenus {

using Int = std::int64_t;

namespace checked {

Int add(Int a, Int b);
Int sub(Int a, Int b);
Int mul(Int a, Int b);
Int neg(Int a);

}  // namespace checked

/// Integer coordinate vector of a second-homology class in a fixed basis.
class HomologyClass {
 public:
  using Storage = boost::container::small_vector<Int, 6>;

  HomologyClass() = default;
  explicit HomologyClass(std::size_t rank) : coords_(rank, 0) {}
  HomologyClass(std::initializer_list<Int> coords) : coords_(coords) {}
  explicit HomologyClass(std::span<const Int> coords) : coords_(coords.begin(), coords.end()) {}

  static HomologyClass unit(std::size_t rank, std::size_t index);

  std::size_t rank() const noexcept { return coords_.size(); }
  Int operator[](std::size_t i) const { return coords_[i]; }
  Int& operator[](std::size_t i) { return coords_[i]; }
  std::span<const Int> coords() const noexcept { return {coords_.data(), coords_.size()}; }
  std::vector<Int> to_vector() const { return {coords_.begin(), coords_.end()}; }

  bool is_zero() const noexcept;
  Int max_abs() const;

  auto begin() const noexcept { return coords_.begin(); }
  auto end() const noexcept { return coords_.end(); }
  auto begin() noexcept { return coords_.begin(); }
  auto end() noexcept { return coords_.end(); }

  friend HomologyClass operator+(const HomologyClass& a, const HomologyClass& b);
  friend HomologyClass operator-(const HomologyClass& a, const HomologyClass& b);
  friend HomologyClass operator-(const HomologyClass& a);
  friend HomologyClass operator*(Int k, const HomologyClass& a);

  friend bool operator==(const HomologyClass& a, const HomologyClass& b) {
    return a.coords_ == b.coords_;
  }
  friend std::strong_ordering operator<=>(const HomologyClass& a, const HomologyClass& b);

  std::string to_string() const;

 private:
  Storage coords_;
};

std::ostream& operator<<(std::ostream& os, const HomologyClass& a);

struct HomologyClassHash {
  std::size_t operator()(const HomologyClass& a) const noexcept;
};

/// Symmetric nondegenerate integer Gram matrix together with its inertia.
///
/// The signature is computed once at construction by exact rational
/// congruence diagonalization; no floating point is involved anywhere.
class IntersectionForm {
 public:
  IntersectionForm() = default;

  /// Row-major Gram matrix. Throws InvalidForm if it is not square,
  /// not symmetric, or degenerate.
  explicit IntersectionForm(std::vector<std::vector<Int>> gram);

  static IntersectionForm diagonal(std::span<const Int> entries);
  static IntersectionForm diagonal(std::initializer_list<Int> entries);
  /// The rank-2 form [[0,1],[1,0]].
  static IntersectionForm hyperbolic();
  /// Negative definite E8 lattice (negated Cartan matrix).
  static IntersectionForm e8_negative();
  /// diag(1, -1, ..., -1) with k negative entries.
  static IntersectionForm cp2_blowup(std::size_t k);

  IntersectionForm direct_sum(const IntersectionForm& other) const;

  std::size_t rank() const noexcept { return rank_; }
  Int entry(std::size_t i, std::size_t j) const { return gram_[i * rank_ + j]; }
  std::vector<std::vector<Int>> gram() const;

  std::size_t b2_plus() const noexcept { return b2_plus_; }
  std::size_t b2_minus() const noexcept { return b2_minus_; }
  Int signature() const noexcept { return static_cast<Int>(b2_plus_) - static_cast<Int>(b2_minus_); }

  bool is_diagonal() const;
  /// Every diagonal entry even.
  bool is_even() const;

  friend bool operator==(const IntersectionForm& a, const IntersectionForm& b) {
    return a.rank_ == b.rank_ && a.gram_ == b.gram_;
  }

 private:
  std::size_t rank_ = 0;
  std::vector<Int> gram_;
  std::size_t b2_plus_ = 0;
  std::size_t b2_minus_ = 0;
};

Int pairing(const IntersectionForm& form, const HomologyClass& a, const HomologyClass& b);
Int square(const IntersectionForm& form, const HomologyClass& a);

/// Q(a, x) = Q(x, x) mod 2 for every basis vector x.
bool is_characteristic(const IntersectionForm& form, const HomologyClass& a);

/// Squares for which reflection in an embedded sphere is realized by a
/// self-diffeomorphism.
bool is_licensed_mirror_square(Int s);

/// a - 2 (Q(s,a) / Q(s,s)) s. Requires Q(s,s) in {+-1, +-2}.
HomologyClass reflect(const IntersectionForm& form, const HomologyClass& mirror, const HomologyClass& a);

/// Gram matrix of `vectors` under `form`.
std::vector<std::vector<Int>> gram_of(const IntersectionForm& form, std::span<const HomologyClass> vectors);

/// Leading principal minors of a symmetric integer matrix, by fraction-free
/// (Bareiss) elimination without pivoting. Stops after the first non-positive
/// minor; the returned list then ends with that minor.
std::vector<Int> leading_minors_until_nonpositive(const std::vector<std::vector<Int>>& m);

bool is_positive_definite_span(const IntersectionForm& form, std::span<const HomologyClass> vectors);

/// Exact determinant (fraction-free elimination with pivoting).
Int determinant(const std::vector<std::vector<Int>>& m);

/// The class c with Q(c, x) = kappa(x) for all basis x; requires the form to
/// be unimodular so that c is integral.
HomologyClass dual_class(const IntersectionForm& form, std::span<const Int> kappa);

/// kappa(a) for a covector given by its values on the basis.
Int evaluate(std::span<const Int> covector, const HomologyClass& a);

}  // namespace mingenus
