#include "mingenus/bounds.hpp"

#include <algorithm>
#include <limits>

#include "mingenus/error.hpp"

namespace mingenus {

namespace {

Int abs_checked(Int x) { return x < 0 ? checked::neg(x) : x; }

bool is_rank3_blowup(const HomologyClass& a) { return a.rank() == 3; }

}  // namespace

std::string to_string(BoundSource source) {
  switch (source) {
    case BoundSource::adjunction:
      return "adjunction";
    case BoundSource::char_sphere_lemma:
      return "char-sphere-lemma";
    case BoundSource::furuta_char:
      return "furuta-char";
    case BoundSource::trivial:
      return "trivial";
  }
  return "unknown";
}

Int BoundCertificate::input(const std::string& key) const {
  for (const auto& [k, v] : inputs)
    if (k == key) return v;
  throw NotFound("certificate has no input '" + key + "'");
}

Int ceil_half(Int x) { return x >= 0 ? (x + 1) / 2 : -((-x) / 2); }

bool BoundCertificate::verify() const {
  switch (source) {
    case BoundSource::adjunction: {
      const Int l = ceil_half(checked::add(checked::add(abs_checked(input("kappa")), input("square")), 2));
      return value == std::max<Int>(l, 0) && value > 0;
    }
    case BoundSource::char_sphere_lemma:
      return value == 1 && input("square") < -1;
    case BoundSource::furuta_char: {
      const Int n = input("n");
      return input("square") == -8 * n - 1 && value == ceil_half(n);
    }
    case BoundSource::trivial:
      return value == 0;
  }
  return false;
}

bool adjunction_hypotheses_hold(const ManifoldModel& model) {
  if (!model.flags.simple_type || !model.flags.adjunction_applicable || model.b1 != 0) return false;
  if (model.basic_classes.empty()) return false;
  const auto bp = model.form.b2_plus();
  const auto bm = model.form.b2_minus();
  return bp > 1 || (bp == 1 && bm <= 9);
}

BoundCertificate adjunction_lower(const ManifoldModel& model, const HomologyClass& a) {
  if (!adjunction_hypotheses_hold(model))
    throw Inapplicable("adjunction inequality does not apply to " + model.name +
                       " (needs simple type, b1 = 0, b2+ > 1 or b2+ = 1 with b2- <= 9, and a basic class)");
  const Int sq = square(model.form, a);
  BoundCertificate best;
  best.source = BoundSource::trivial;
  best.value = 0;
  Int best_raw = std::numeric_limits<Int>::min();
  for (const auto& s : model.basic_classes) {
    const Int k = evaluate(s.kappa, a);
    const Int l = ceil_half(checked::add(checked::add(abs_checked(k), sq), 2));
    if (l > best_raw) {
      best_raw = l;
      best.basic_class_id = s.id;
      best.inputs = {{"kappa", k}, {"square", sq}};
    }
  }
  if (best_raw > 0) {
    best.value = best_raw;
    best.source = BoundSource::adjunction;
  }
  return best;
}

std::optional<BoundCertificate> characteristic_sphere_obstruction(const HomologyClass& a) {
  if (!is_rank3_blowup(a)) throw DimensionMismatch("characteristic_sphere_obstruction needs a rank-3 class");
  const auto form = IntersectionForm::cp2_blowup(2);
  if (!is_characteristic(form, a)) return std::nullopt;
  const Int sq = square(form, a);
  if (sq >= -1) return std::nullopt;
  BoundCertificate c;
  c.value = 1;
  c.source = BoundSource::char_sphere_lemma;
  c.inputs = {{"square", sq}};
  return c;
}

std::optional<BoundCertificate> furuta_char_bound(const HomologyClass& a) {
  if (!is_rank3_blowup(a)) throw DimensionMismatch("furuta_char_bound needs a rank-3 class");
  const auto form = IntersectionForm::cp2_blowup(2);
  if (!is_characteristic(form, a)) return std::nullopt;
  const Int sq = square(form, a);
  if (sq >= 0) return std::nullopt;
  const Int m = checked::neg(sq) - 1;  // 8n
  if (m % 8 != 0) return std::nullopt;
  const Int n = m / 8;
  BoundCertificate c;
  c.value = ceil_half(n);
  c.source = BoundSource::furuta_char;
  c.inputs = {{"square", sq}, {"n", n}};
  return c;
}

bool furuta_check(Int b2, Int sigma) {
  const Int s = abs_checked(sigma);
  const Int five_quarters = (checked::mul(5, s) + 3) / 4;
  return b2 >= five_quarters + 2 && sigma % 16 == 0;
}

Int e2p_third_entry_lower(Int p) {
  if (p < 1 || p % 2 == 0) throw Inapplicable("e2p_third_entry_lower: p must be odd and >= 1");
  return ceil_half(checked::add(p, 3));
}

}  // namespace mingenus
