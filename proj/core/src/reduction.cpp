#include "mingenus/reduction.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>
#include <unordered_set>

#include "mingenus/error.hpp"

namespace mingenus {

namespace {

void require_blowup_rank(const HomologyClass& a) {
  if (a.rank() != 3 && a.rank() != 4)
    throw DimensionMismatch("reduction handles classes of rank 3 or 4, got rank " + std::to_string(a.rank()));
}

std::string join(std::span<const Int> xs) {
  std::ostringstream os;
  for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? " " : "") << xs[i];
  return os.str();
}

HomologyClass all_ones(std::size_t rank) {
  HomologyClass s(rank);
  for (auto& x : s) x = 1;
  return s;
}

// Appends the normalization moves for `current` to `trace` and returns the
// normalized class.
HomologyClass normalize_into(const IntersectionForm& form, HomologyClass current, ReductionTrace& trace) {
  for (std::size_t i = 0; i < current.rank(); ++i) {
    if (current[i] < 0) {
      Move m = Move::flip(i);
      current = m.apply(form, current);
      trace.steps.push_back(std::move(m));
    }
  }
  std::vector<std::size_t> perm(current.rank());
  std::iota(perm.begin(), perm.end(), 0);
  std::stable_sort(perm.begin() + 1, perm.end(),
                   [&](std::size_t x, std::size_t y) { return current[x] > current[y]; });
  if (!std::is_sorted(perm.begin(), perm.end())) {
    Move m = Move::permute(perm);
    current = m.apply(form, current);
    trace.steps.push_back(std::move(m));
  }
  return current;
}

Int b_sum(const HomologyClass& a) {
  Int s = 0;
  for (std::size_t i = 1; i < a.rank(); ++i) s = checked::add(s, a[i]);
  return s;
}

}  // namespace

// ---------------------------------------------------------------------------
// Move / ReductionTrace

Move Move::flip(std::size_t index) {
  Move m;
  m.kind = Kind::sign_flip;
  m.index = index;
  return m;
}

Move Move::permute(std::vector<std::size_t> permutation) {
  Move m;
  m.kind = Kind::permute;
  m.permutation = std::move(permutation);
  return m;
}

Move Move::reflect(HomologyClass mirror) {
  Move m;
  m.kind = Kind::reflect;
  m.mirror = std::move(mirror);
  return m;
}

HomologyClass Move::apply(const IntersectionForm& form, const HomologyClass& a) const {
  switch (kind) {
    case Kind::sign_flip: {
      if (index >= a.rank()) throw DimensionMismatch("sign flip index out of range");
      // Reflection in the basis sphere of square +-1.
      return mingenus::reflect(form, HomologyClass::unit(a.rank(), index), a);
    }
    case Kind::permute: {
      if (permutation.size() != a.rank()) throw DimensionMismatch("permutation length differs from rank");
      HomologyClass r(a.rank());
      for (std::size_t i = 0; i < a.rank(); ++i) r[i] = a[permutation[i]];
      return r;
    }
    case Kind::reflect:
      return mingenus::reflect(form, mirror, a);
  }
  return a;
}

HomologyClass ReductionTrace::replay(const IntersectionForm& form) const {
  HomologyClass current = start;
  for (const auto& m : steps) current = m.apply(form, current);
  return current;
}

std::vector<HomologyClass> ReductionTrace::path(const IntersectionForm& form) const {
  std::vector<HomologyClass> out{start};
  for (const auto& m : steps) out.push_back(m.apply(form, out.back()));
  return out;
}

std::size_t ReductionTrace::reflection_count() const {
  return static_cast<std::size_t>(
      std::count_if(steps.begin(), steps.end(), [](const Move& m) { return m.kind == Move::Kind::reflect; }));
}

std::string ReductionTrace::to_text(const IntersectionForm& form) const {
  std::ostringstream os;
  os << "start " << join(start.coords()) << '\n';
  HomologyClass current = start;
  for (const auto& m : steps) {
    current = m.apply(form, current);
    switch (m.kind) {
      case Move::Kind::sign_flip:
        os << "flip " << m.index;
        break;
      case Move::Kind::permute: {
        os << "permute";
        for (auto p : m.permutation) os << ' ' << p;
        break;
      }
      case Move::Kind::reflect:
        os << "reflect " << join(m.mirror.coords());
        break;
    }
    os << " -> " << join(current.coords()) << '\n';
  }
  os << "end " << join(end.coords()) << '\n';
  return os.str();
}

ReductionTrace ReductionTrace::from_text(std::string_view text) {
  ReductionTrace trace;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  bool saw_start = false, saw_end = false;
  auto read_ints = [&](std::istringstream& ls) {
    std::vector<Int> xs;
    std::string tok;
    while (ls >> tok) {
      if (tok == "->") break;
      try {
        std::size_t used = 0;
        xs.push_back(std::stoll(tok, &used));
        if (used != tok.size()) throw std::invalid_argument(tok);
      } catch (const std::exception&) {
        throw ParseError("expected an integer, got '" + tok + "'", line_no, 1);
      }
    }
    return xs;
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string word;
    ls >> word;
    if (word == "start") {
      const auto xs = read_ints(ls);
      trace.start = HomologyClass(std::span<const Int>(xs));
      saw_start = true;
    } else if (word == "end") {
      const auto xs = read_ints(ls);
      trace.end = HomologyClass(std::span<const Int>(xs));
      saw_end = true;
    } else if (word == "flip") {
      const auto xs = read_ints(ls);
      if (xs.size() != 1 || xs[0] < 0) throw ParseError("flip takes one index", line_no, 1);
      trace.steps.push_back(Move::flip(static_cast<std::size_t>(xs[0])));
    } else if (word == "permute") {
      const auto xs = read_ints(ls);
      std::vector<std::size_t> perm;
      for (Int x : xs) {
        if (x < 0) throw ParseError("negative permutation index", line_no, 1);
        perm.push_back(static_cast<std::size_t>(x));
      }
      trace.steps.push_back(Move::permute(std::move(perm)));
    } else if (word == "reflect") {
      const auto xs = read_ints(ls);
      trace.steps.push_back(Move::reflect(HomologyClass(std::span<const Int>(xs))));
    } else {
      throw ParseError("unknown trace move '" + word + "'", line_no, 1);
    }
  }
  if (!saw_start || !saw_end) throw ParseError("trace needs start and end lines", line_no, 1);
  return trace;
}

// ---------------------------------------------------------------------------
// Reductions

IntersectionForm blowup_form_for(const HomologyClass& a) {
  require_blowup_rank(a);
  return IntersectionForm::cp2_blowup(a.rank() - 1);
}

Reduction normalize(const HomologyClass& a) {
  const auto form = blowup_form_for(a);
  ReductionTrace trace;
  trace.start = a;
  trace.end = normalize_into(form, a, trace);
  return {trace.end, std::move(trace)};
}

bool is_nonnegative_canonical(const HomologyClass& a) {
  for (std::size_t i = 0; i < a.rank(); ++i)
    if (a[i] < 0) return false;
  for (std::size_t i = 2; i < a.rank(); ++i)
    if (a[i] > a[i - 1]) return false;
  return a[0] >= b_sum(a);
}

Reduction reduce_nonnegative(const HomologyClass& a) {
  const auto form = blowup_form_for(a);
  if (square(form, a) < 0) throw WrongRoutine("reduce_nonnegative: class " + a.to_string() + " has negative square");
  const HomologyClass mirror = all_ones(a.rank());
  ReductionTrace trace;
  trace.start = a;
  HomologyClass current = normalize_into(form, a, trace);
  // a strictly decreases with every reflection, so this terminates.
  while (current[0] < b_sum(current)) {
    Move m = Move::reflect(mirror);
    current = m.apply(form, current);
    trace.steps.push_back(std::move(m));
    current = normalize_into(form, current, trace);
  }
  trace.end = current;
  return {current, std::move(trace)};
}

Reduction reduce_negative_rank3(const HomologyClass& a) {
  if (a.rank() != 3) throw DimensionMismatch("reduce_negative_rank3 needs a rank-3 class");
  const auto form = blowup_form_for(a);
  if (square(form, a) >= 0) throw WrongRoutine("reduce_negative_rank3: class " + a.to_string() + " has square >= 0");
  const HomologyClass mirror{2, 1, 1};
  ReductionTrace trace;
  trace.start = a;
  HomologyClass current = normalize_into(form, a, trace);
  for (int iter = 0;; ++iter) {
    const Int d = checked::sub(checked::mul(2, current[0]), b_sum(current));
    if (d >= 0) break;
    if (iter >= kReductionIterationCap)
      throw NonTermination("reduce_negative_rank3: no fixpoint for " + a.to_string() + " within " +
                           std::to_string(kReductionIterationCap) + " iterations");
    Move m = Move::reflect(mirror);
    current = m.apply(form, current);
    trace.steps.push_back(std::move(m));
    current = normalize_into(form, current, trace);
  }
  trace.end = current;
  return {current, std::move(trace)};
}

Reduction reduce_negative_rank4(const HomologyClass& a) {
  if (a.rank() != 4) throw DimensionMismatch("reduce_negative_rank4 needs a rank-4 class");
  const auto form = blowup_form_for(a);
  if (square(form, a) >= 0) throw WrongRoutine("reduce_negative_rank4: class " + a.to_string() + " has square >= 0");
  const HomologyClass mirror = all_ones(4);
  ReductionTrace trace;
  trace.start = a;
  HomologyClass current = normalize_into(form, a, trace);
  for (int iter = 0;; ++iter) {
    // Reflection in (1,1,1,1) sends a to a + c with c = a - sum(b); take it
    // only when |a + c| < a.
    const Int c = checked::sub(current[0], b_sum(current));
    const Int next_a = checked::add(current[0], c);
    if (c >= 0 || next_a <= -current[0]) break;
    if (iter >= kReductionIterationCap)
      throw NonTermination("reduce_negative_rank4: no fixpoint for " + a.to_string() + " within " +
                           std::to_string(kReductionIterationCap) + " iterations");
    Move m = Move::reflect(mirror);
    current = m.apply(form, current);
    trace.steps.push_back(std::move(m));
    current = normalize_into(form, current, trace);
  }
  trace.end = current;
  return {current, std::move(trace)};
}

Reduction reduce(const HomologyClass& a) {
  const auto form = blowup_form_for(a);
  if (square(form, a) >= 0) return reduce_nonnegative(a);
  return a.rank() == 3 ? reduce_negative_rank3(a) : reduce_negative_rank4(a);
}

// ---------------------------------------------------------------------------
// Orbit enumeration

std::vector<HomologyClass> orbit_bfs(const ManifoldModel& model, const HomologyClass& a, Int bound) {
  if (a.rank() != model.rank()) throw DimensionMismatch("orbit_bfs: class rank differs from model rank");
  if (bound < a.max_abs())
    throw PreconditionViolated("orbit_bfs: bound " + std::to_string(bound) + " does not contain " + a.to_string());

  for (const auto& s : model.reflection_spheres)
    if (!is_licensed_mirror_square(square(model.form, s)))
      throw ReflectionNotLicensed("model sphere " + s.to_string() + " has unlicensed square");

  std::vector<std::pair<std::size_t, std::size_t>> swaps;
  for (std::size_t i = 0; i < model.permutable.size(); ++i)
    for (std::size_t j = i + 1; j < model.permutable.size(); ++j)
      swaps.emplace_back(model.permutable[i], model.permutable[j]);

  std::unordered_set<HomologyClass, HomologyClassHash> seen{a};
  std::deque<HomologyClass> queue{a};
  auto visit = [&](HomologyClass&& next) {
    if (next.max_abs() > bound) return;
    if (seen.insert(next).second) queue.push_back(std::move(next));
  };
  while (!queue.empty()) {
    HomologyClass current = std::move(queue.front());
    queue.pop_front();
    for (const auto& s : model.reflection_spheres) visit(reflect(model.form, s, current));
    for (auto [i, j] : swaps) {
      HomologyClass next = current;
      std::swap(next[i], next[j]);
      visit(std::move(next));
    }
  }
  std::vector<HomologyClass> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace mingenus
