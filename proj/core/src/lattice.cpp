#include "mingenus/lattice.hpp"

#include <algorithm>
#include <array>
#include <ostream>
#include <sstream>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

#include "mingenus/error.hpp"

namespace mingenus {

namespace mp = boost::multiprecision;

namespace checked {

Int add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in addition");
  return r;
}

Int sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer overflow in subtraction");
  return r;
}

Int mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in multiplication");
  return r;
}

Int neg(Int a) { return sub(0, a); }

}  // namespace checked

namespace {

Int to_int(const mp::cpp_int& v) {
  if (v > std::numeric_limits<Int>::max() || v < std::numeric_limits<Int>::min())
    throw OverflowError("value does not fit in 64 bits");
  return static_cast<Int>(v);
}

void require_same_rank(std::size_t expected, const HomologyClass& a, const char* what) {
  if (a.rank() != expected) {
    std::ostringstream os;
    os << what << ": class has " << a.rank() << " coordinates, form has rank " << expected;
    throw DimensionMismatch(os.str());
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// HomologyClass

HomologyClass HomologyClass::unit(std::size_t rank, std::size_t index) {
  HomologyClass e(rank);
  e[index] = 1;
  return e;
}

bool HomologyClass::is_zero() const noexcept {
  return std::all_of(coords_.begin(), coords_.end(), [](Int x) { return x == 0; });
}

Int HomologyClass::max_abs() const {
  Int m = 0;
  for (Int x : coords_) m = std::max(m, x < 0 ? checked::neg(x) : x);
  return m;
}

HomologyClass operator+(const HomologyClass& a, const HomologyClass& b) {
  if (a.rank() != b.rank()) throw DimensionMismatch("sum of classes of different rank");
  HomologyClass r(a.rank());
  for (std::size_t i = 0; i < a.rank(); ++i) r[i] = checked::add(a[i], b[i]);
  return r;
}

HomologyClass operator-(const HomologyClass& a, const HomologyClass& b) {
  if (a.rank() != b.rank()) throw DimensionMismatch("difference of classes of different rank");
  HomologyClass r(a.rank());
  for (std::size_t i = 0; i < a.rank(); ++i) r[i] = checked::sub(a[i], b[i]);
  return r;
}

HomologyClass operator-(const HomologyClass& a) {
  HomologyClass r(a.rank());
  for (std::size_t i = 0; i < a.rank(); ++i) r[i] = checked::neg(a[i]);
  return r;
}

HomologyClass operator*(Int k, const HomologyClass& a) {
  HomologyClass r(a.rank());
  for (std::size_t i = 0; i < a.rank(); ++i) r[i] = checked::mul(k, a[i]);
  return r;
}

std::strong_ordering operator<=>(const HomologyClass& a, const HomologyClass& b) {
  return std::lexicographical_compare_three_way(a.coords_.begin(), a.coords_.end(), b.coords_.begin(),
                                                b.coords_.end());
}

std::string HomologyClass::to_string() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const HomologyClass& a) {
  os << '(';
  for (std::size_t i = 0; i < a.rank(); ++i) os << (i ? "," : "") << a[i];
  return os << ')';
}

std::size_t HomologyClassHash::operator()(const HomologyClass& a) const noexcept {
  std::size_t h = 0xcbf29ce484222325ull;
  for (Int x : a) {
    h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

// ---------------------------------------------------------------------------
// IntersectionForm

namespace {

// Inertia (positive, negative, zero counts) of a symmetric rational matrix by
// congruence diagonalization.
std::array<std::size_t, 3> inertia(std::vector<std::vector<mp::cpp_rational>> m) {
  const std::size_t n = m.size();
  std::size_t pos = 0, negc = 0;
  std::vector<bool> done(n, false);
  std::size_t remaining = n;
  while (remaining > 0) {
    std::size_t p = n;
    for (std::size_t i = 0; i < n; ++i)
      if (!done[i] && m[i][i] != 0) {
        p = i;
        break;
      }
    if (p == n) {
      // All remaining diagonal entries vanish: use an off-diagonal entry.
      std::size_t oi = n, oj = n;
      for (std::size_t i = 0; i < n && oi == n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (!done[i] && !done[j] && i != j && m[i][j] != 0) {
            oi = i;
            oj = j;
            break;
          }
      if (oi == n) break;  // remaining block is zero
      // Congruence: row/col oi += row/col oj, making the diagonal 2 m[oi][oj].
      for (std::size_t k = 0; k < n; ++k) m[oi][k] += m[oj][k];
      for (std::size_t k = 0; k < n; ++k) m[k][oi] += m[k][oj];
      p = oi;
    }
    const mp::cpp_rational pivot = m[p][p];
    if (pivot > 0)
      ++pos;
    else
      ++negc;
    for (std::size_t i = 0; i < n; ++i) {
      if (done[i] || i == p || m[i][p] == 0) continue;
      const mp::cpp_rational f = m[i][p] / pivot;
      for (std::size_t k = 0; k < n; ++k) m[i][k] -= f * m[p][k];
      for (std::size_t k = 0; k < n; ++k) m[k][i] -= f * m[k][p];
    }
    done[p] = true;
    --remaining;
  }
  return {pos, negc, n - pos - negc};
}

}  // namespace

IntersectionForm::IntersectionForm(std::vector<std::vector<Int>> gram) : rank_(gram.size()) {
  if (rank_ == 0) throw InvalidForm("intersection form must have positive rank");
  gram_.reserve(rank_ * rank_);
  for (const auto& row : gram) {
    if (row.size() != rank_) throw InvalidForm("Gram matrix is not square");
    gram_.insert(gram_.end(), row.begin(), row.end());
  }
  for (std::size_t i = 0; i < rank_; ++i)
    for (std::size_t j = i + 1; j < rank_; ++j)
      if (entry(i, j) != entry(j, i)) throw InvalidForm("Gram matrix is not symmetric");

  std::vector<std::vector<mp::cpp_rational>> q(rank_, std::vector<mp::cpp_rational>(rank_));
  for (std::size_t i = 0; i < rank_; ++i)
    for (std::size_t j = 0; j < rank_; ++j) q[i][j] = entry(i, j);
  const auto [pos, negc, zero] = inertia(std::move(q));
  if (zero != 0) throw InvalidForm("intersection form is degenerate");
  b2_plus_ = pos;
  b2_minus_ = negc;
}

IntersectionForm IntersectionForm::diagonal(std::span<const Int> entries) {
  std::vector<std::vector<Int>> g(entries.size(), std::vector<Int>(entries.size(), 0));
  for (std::size_t i = 0; i < entries.size(); ++i) g[i][i] = entries[i];
  return IntersectionForm(std::move(g));
}

IntersectionForm IntersectionForm::diagonal(std::initializer_list<Int> entries) {
  return diagonal(std::span<const Int>(entries.begin(), entries.size()));
}

IntersectionForm IntersectionForm::hyperbolic() { return IntersectionForm({{0, 1}, {1, 0}}); }

IntersectionForm IntersectionForm::e8_negative() {
  // Bourbaki numbering: chain 1-3-4-5-6-7-8 with node 2 attached to node 4.
  static constexpr std::array<std::pair<int, int>, 7> edges{
      {{1, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8}, {2, 4}}};
  std::vector<std::vector<Int>> g(8, std::vector<Int>(8, 0));
  for (int i = 0; i < 8; ++i) g[i][i] = -2;
  for (auto [a, b] : edges) {
    g[a - 1][b - 1] = 1;
    g[b - 1][a - 1] = 1;
  }
  return IntersectionForm(std::move(g));
}

IntersectionForm IntersectionForm::cp2_blowup(std::size_t k) {
  std::vector<Int> d(k + 1, -1);
  d[0] = 1;
  return diagonal(d);
}

IntersectionForm IntersectionForm::direct_sum(const IntersectionForm& other) const {
  const std::size_t n = rank_ + other.rank_;
  std::vector<std::vector<Int>> g(n, std::vector<Int>(n, 0));
  for (std::size_t i = 0; i < rank_; ++i)
    for (std::size_t j = 0; j < rank_; ++j) g[i][j] = entry(i, j);
  for (std::size_t i = 0; i < other.rank_; ++i)
    for (std::size_t j = 0; j < other.rank_; ++j) g[rank_ + i][rank_ + j] = other.entry(i, j);
  return IntersectionForm(std::move(g));
}

std::vector<std::vector<Int>> IntersectionForm::gram() const {
  std::vector<std::vector<Int>> g(rank_, std::vector<Int>(rank_));
  for (std::size_t i = 0; i < rank_; ++i)
    for (std::size_t j = 0; j < rank_; ++j) g[i][j] = entry(i, j);
  return g;
}

bool IntersectionForm::is_diagonal() const {
  for (std::size_t i = 0; i < rank_; ++i)
    for (std::size_t j = 0; j < rank_; ++j)
      if (i != j && entry(i, j) != 0) return false;
  return true;
}

bool IntersectionForm::is_even() const {
  for (std::size_t i = 0; i < rank_; ++i)
    if (entry(i, i) % 2 != 0) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Operations

Int pairing(const IntersectionForm& form, const HomologyClass& a, const HomologyClass& b) {
  require_same_rank(form.rank(), a, "pairing");
  require_same_rank(form.rank(), b, "pairing");
  Int total = 0;
  const std::size_t n = form.rank();
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] == 0) continue;
    Int row = 0;
    for (std::size_t j = 0; j < n; ++j) {
      const Int g = form.entry(i, j);
      if (g != 0 && b[j] != 0) row = checked::add(row, checked::mul(g, b[j]));
    }
    total = checked::add(total, checked::mul(a[i], row));
  }
  return total;
}

Int square(const IntersectionForm& form, const HomologyClass& a) { return pairing(form, a, a); }

bool is_characteristic(const IntersectionForm& form, const HomologyClass& a) {
  require_same_rank(form.rank(), a, "is_characteristic");
  for (std::size_t i = 0; i < form.rank(); ++i) {
    Int qa = 0;
    for (std::size_t j = 0; j < form.rank(); ++j)
      qa = checked::add(qa, checked::mul(form.entry(i, j), a[j]));
    if (checked::sub(qa, form.entry(i, i)) % 2 != 0) return false;
  }
  return true;
}

bool is_licensed_mirror_square(Int s) { return s == 1 || s == -1 || s == 2 || s == -2; }

HomologyClass reflect(const IntersectionForm& form, const HomologyClass& mirror, const HomologyClass& a) {
  const Int s2 = square(form, mirror);
  if (!is_licensed_mirror_square(s2)) {
    throw ReflectionNotLicensed("reflection in " + mirror.to_string() + " of square " + std::to_string(s2) +
                                " is not induced by a sphere (square must be +-1 or +-2)");
  }
  const Int sa = pairing(form, mirror, a);
  const Int twice = checked::mul(2, sa);
  // |s2| divides 2, so the quotient is exact.
  const Int coeff = twice / s2;
  return a - coeff * mirror;
}

std::vector<std::vector<Int>> gram_of(const IntersectionForm& form, std::span<const HomologyClass> vectors) {
  const std::size_t k = vectors.size();
  std::vector<std::vector<Int>> g(k, std::vector<Int>(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i; j < k; ++j) g[i][j] = g[j][i] = pairing(form, vectors[i], vectors[j]);
  return g;
}

std::vector<Int> leading_minors_until_nonpositive(const std::vector<std::vector<Int>>& m) {
  const std::size_t n = m.size();
  std::vector<std::vector<mp::cpp_int>> a(n, std::vector<mp::cpp_int>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m[i][j];
  // After step k of Bareiss elimination a[k][k] is the (k+1)-th leading minor.
  std::vector<Int> minors;
  mp::cpp_int prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    minors.push_back(to_int(a[k][k]));
    if (a[k][k] <= 0) break;
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return minors;
}

bool is_positive_definite_span(const IntersectionForm& form, std::span<const HomologyClass> vectors) {
  if (vectors.empty()) throw PreconditionViolated("is_positive_definite_span: empty list of vectors");
  const auto minors = leading_minors_until_nonpositive(gram_of(form, vectors));
  return minors.size() == vectors.size() && minors.back() > 0;
}

Int determinant(const std::vector<std::vector<Int>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  std::vector<std::vector<mp::cpp_int>> a(n, std::vector<mp::cpp_int>(n));
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i].size() != n) throw DimensionMismatch("determinant of a non-square matrix");
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m[i][j];
  }
  int sign = 1;
  mp::cpp_int prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && a[swap_row][k] == 0) ++swap_row;
      if (swap_row == n) return 0;
      std::swap(a[k], a[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return to_int(sign * a[n - 1][n - 1]);
}

HomologyClass dual_class(const IntersectionForm& form, std::span<const Int> kappa) {
  const std::size_t n = form.rank();
  if (kappa.size() != n) throw DimensionMismatch("dual_class: covector length differs from rank");
  // Gauss-Jordan on [G | kappa] over the rationals.
  std::vector<std::vector<mp::cpp_rational>> a(n, std::vector<mp::cpp_rational>(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = form.entry(i, j);
    a[i][n] = kappa[i];
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = col;
    while (p < n && a[p][col] == 0) ++p;
    if (p == n) throw InvalidForm("dual_class: degenerate form");
    std::swap(a[p], a[col]);
    const mp::cpp_rational pivot = a[col][col];
    for (std::size_t j = col; j <= n; ++j) a[col][j] /= pivot;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || a[i][col] == 0) continue;
      const mp::cpp_rational f = a[i][col];
      for (std::size_t j = col; j <= n; ++j) a[i][j] -= f * a[col][j];
    }
  }
  HomologyClass c(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (mp::denominator(a[i][n]) != 1) throw InvalidForm("dual_class: form is not unimodular over this covector");
    c[i] = to_int(mp::numerator(a[i][n]));
  }
  return c;
}

Int evaluate(std::span<const Int> covector, const HomologyClass& a) {
  if (covector.size() != a.rank()) throw DimensionMismatch("covector length differs from class rank");
  Int total = 0;
  for (std::size_t i = 0; i < a.rank(); ++i) total = checked::add(total, checked::mul(covector[i], a[i]));
  return total;
}

}  // namespace mingenus
