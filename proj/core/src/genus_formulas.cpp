#include "mingenus/genus_formulas.hpp"

#include <cstdlib>

#include "mingenus/error.hpp"
#include "mingenus/reduction.hpp"

namespace mingenus {

namespace {

Int abs_checked(Int x) { return x < 0 ? checked::neg(x) : x; }

// n(n-1)/2 for n >= 0.
Int choose2(Int n) { return checked::mul(n, n - 1) / 2; }

}  // namespace

GenusResult GenusResult::exact_value(Int genus, Justification why) {
  GenusResult r;
  r.lower = genus;
  r.upper = genus;
  r.exact = true;
  why.value = genus;
  r.provenance.push_back(std::move(why));
  return r;
}

GenusResult GenusResult::zero_class() {
  GenusResult r = exact_value(0, {"convention", "zero-class", 0, "the zero class bounds an embedded sphere"});
  r.zero_convention = true;
  return r;
}

void GenusResult::check() const {
  if (lower < 0) throw PreconditionViolated("genus lower bound is negative");
  if (upper && lower > *upper)
    throw PreconditionViolated("genus lower bound " + std::to_string(lower) + " exceeds upper bound " +
                               std::to_string(*upper));
  if (exact && (!upper || *upper != lower)) throw PreconditionViolated("exact genus result without lower == upper");
}

Int genus_cp2(Int d) {
  const Int n = abs_checked(d);
  if (n == 0) return 0;
  return checked::mul(n - 1, n - 2) / 2;
}

Int genus_cp2_cp2bar(Int a, Int b) {
  Int x = abs_checked(a);
  Int y = abs_checked(b);
  if (x == y) return 0;
  if (x < y) std::swap(x, y);
  return checked::sub(checked::mul(x - 1, x - 2) / 2, choose2(y));
}

Int genus_s2xs2(Int u, Int v) {
  if (u == 0 || v == 0) return 0;
  return checked::mul(abs_checked(u) - 1, abs_checked(v) - 1);
}

Int genus_xn(Int a, Int b) {
  if (a == 0 && b == 0) return 0;
  return checked::mul(abs_checked(a) + 1, abs_checked(b) + 1);
}

Int genus_blowup_canonical(Int a, std::span<const Int> b) {
  Int total = 0;
  for (Int bi : b) {
    if (bi < 0) throw PreconditionViolated("blow-up multiplicities must be non-negative");
    total = checked::add(total, bi);
  }
  if (total > a) throw PreconditionViolated("line arrangement needs a >= sum of multiplicities");
  if (a == 0) return 0;
  for (Int bi : b)
    if (bi == a) return 0;  // one pencil: a disjoint spheres, tubed
  Int twice = checked::mul(a - 1, a - 2);
  for (Int bi : b) twice = checked::sub(twice, checked::mul(bi, bi - 1));
  return twice / 2;
}

Int genus_blowup_printed_doubled(Int a, std::span<const Int> b) {
  Int twice = checked::mul(a - 1, a - 2);
  for (std::size_t i = 0; i < b.size(); ++i) {
    const Int offset = i == 0 ? 2 : 1;
    twice = checked::sub(twice, checked::mul(b[i], b[i] - offset));
  }
  return twice;
}

Int genus_cp2k_nonnegative(const HomologyClass& a) {
  const auto red = reduce_nonnegative(a);
  const auto& c = red.canonical;
  std::vector<Int> b(c.begin() + 1, c.end());
  return genus_blowup_canonical(c[0], b);
}

}  // namespace mingenus
