#include "mingenus/profile.hpp"

#include <algorithm>
#include <limits>

#include "mingenus/error.hpp"
#include "mingenus/evaluator.hpp"

namespace mingenus {

namespace {

constexpr Int kUnknown = std::numeric_limits<Int>::max();

struct Candidate {
  HomologyClass v;
  Int sq = 0;
  Int lower = 0;
  Int upper = kUnknown;
};

std::size_t box_points(std::size_t dim, Int bound) {
  const std::size_t side = static_cast<std::size_t>(2 * bound + 1);
  std::size_t total = 1;
  for (std::size_t i = 0; i < dim; ++i) {
    if (total > std::numeric_limits<std::size_t>::max() / side) return std::numeric_limits<std::size_t>::max();
    total *= side;
  }
  return total;
}

bool block_has_positive_part(const ManifoldModel& model, const std::vector<std::size_t>& block) {
  std::vector<std::vector<Int>> g(block.size(), std::vector<Int>(block.size()));
  for (std::size_t i = 0; i < block.size(); ++i)
    for (std::size_t j = 0; j < block.size(); ++j) g[i][j] = model.form.entry(block[i], block[j]);
  try {
    return IntersectionForm(g).b2_plus() > 0;
  } catch (const InvalidForm&) {
    return true;  // degenerate block: enumerate it anyway
  }
}

// Odometer over coords in [-bound, bound] on the given indices.
template <typename F>
void for_each_in_box(std::size_t rank, const std::vector<std::size_t>& indices, Int bound, F&& f) {
  HomologyClass v(rank);
  for (auto i : indices) v[i] = -bound;
  while (true) {
    f(v);
    std::size_t k = 0;
    while (k < indices.size() && v[indices[k]] == bound) v[indices[k++]] = -bound;
    if (k == indices.size()) return;
    ++v[indices[k]];
  }
}

bool first_nonzero_positive(const HomologyClass& v) {
  for (Int x : v)
    if (x != 0) return x > 0;
  return false;
}

struct SearchResult {
  std::vector<Int> keys;
  std::vector<std::size_t> picks;
};

// Lexicographically smallest nondecreasing key tuple over k pairwise
// orthogonal candidates.
std::optional<SearchResult> lex_search(const ManifoldModel& model, const std::vector<Candidate>& cands,
                                       const std::vector<Int>& key, std::size_t k) {
  std::vector<std::size_t> order(cands.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    if (key[x] != key[y]) return key[x] < key[y];
    if (cands[x].sq != cands[y].sq) return cands[x].sq < cands[y].sq;
    return cands[x].v < cands[y].v;
  });
  std::vector<Int> sorted_keys(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) sorted_keys[i] = key[order[i]];

  std::optional<SearchResult> best;
  std::vector<std::size_t> picks;
  std::vector<Int> prefix;
  auto dominated = [&](std::size_t i, std::size_t depth) {
    if (!best) return false;
    // prefix followed by the smallest keys still available
    for (std::size_t d = 0; d < k; ++d) {
      const Int x = d < depth ? prefix[d] : sorted_keys[i + (d - depth)];
      if (x != best->keys[d]) return x > best->keys[d];
    }
    return true;
  };
  auto dfs = [&](auto&& self, std::size_t depth, std::size_t start) -> void {
    if (depth == k) {
      best = SearchResult{prefix, {}};
      for (auto p : picks) best->picks.push_back(order[p]);
      return;
    }
    for (std::size_t i = start; i + (k - depth) <= order.size(); ++i) {
      if (dominated(i, depth)) break;
      const auto& v = cands[order[i]].v;
      bool orthogonal = true;
      for (auto p : picks)
        if (pairing(model.form, cands[order[p]].v, v) != 0) {
          orthogonal = false;
          break;
        }
      if (!orthogonal) continue;
      picks.push_back(i);
      prefix.push_back(sorted_keys[i]);
      self(self, depth + 1, i + 1);
      picks.pop_back();
      prefix.pop_back();
    }
  };
  dfs(dfs, 0, 0);
  return best;
}

}  // namespace

bool is_allowed(const ManifoldModel& model, std::span<const HomologyClass> vectors) {
  if (vectors.size() != model.form.b2_plus())
    throw DimensionMismatch("allowed sequence needs " + std::to_string(model.form.b2_plus()) + " vectors, got " +
                            std::to_string(vectors.size()));
  for (const auto& v : vectors)
    if (v.rank() != model.rank()) throw DimensionMismatch("allowed sequence vector has the wrong rank");
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    if (square(model.form, vectors[i]) % 2 != 0) return false;
    for (std::size_t j = i + 1; j < vectors.size(); ++j)
      if (pairing(model.form, vectors[i], vectors[j]) != 0) return false;
  }
  return is_positive_definite_span(model.form, vectors);
}

std::vector<Int> lex_min(const std::vector<std::vector<Int>>& tuples) {
  if (tuples.empty()) throw PreconditionViolated("lex_min of an empty list");
  for (const auto& t : tuples)
    if (t.size() != tuples.front().size()) throw PreconditionViolated("lex_min: tuples of different lengths");
  return *std::min_element(tuples.begin(), tuples.end());
}

bool Profile::is_exact() const {
  return std::all_of(exact.begin(), exact.end(), [](bool b) { return b; });
}

Profile profile_search(const ManifoldModel& model, const ProfileOptions& options, const GenusEvaluator& evaluator) {
  const std::size_t k = model.form.b2_plus();
  if (k == 0) throw PreconditionViolated("profile_search: b2+ is 0");
  if (options.norm_bound < 1) throw PreconditionViolated("profile_search: norm bound must be >= 1");

  std::vector<std::vector<std::size_t>> regions;
  if (options.restrict_to_blocks && !model.profile_blocks.empty()) {
    for (const auto& b : model.profile_blocks)
      if (block_has_positive_part(model, b)) regions.push_back(b);
  } else {
    std::vector<std::size_t> all(model.rank());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    regions.push_back(std::move(all));
  }
  for (const auto& reg : regions)
    if (box_points(reg.size(), options.norm_bound) > options.max_box_points)
      throw CapExceeded("profile_search: box of dimension " + std::to_string(reg.size()) + " and bound " +
                        std::to_string(options.norm_bound) + " exceeds the enumeration cap");

  std::vector<Candidate> cands;
  for (const auto& reg : regions) {
    for_each_in_box(model.rank(), reg, options.norm_bound, [&](const HomologyClass& v) {
      if (!first_nonzero_positive(v)) return;
      const Int sq = square(model.form, v);
      if (sq <= 0 || sq % 2 != 0) return;
      const auto g = evaluator(v);
      cands.push_back({v, sq, g.lower, g.upper.value_or(kUnknown)});
    });
  }

  std::vector<Int> lower_keys, upper_keys;
  for (const auto& c : cands) {
    lower_keys.push_back(c.lower);
    upper_keys.push_back(c.upper);
  }
  const auto lo = lex_search(model, cands, lower_keys, k);
  if (!lo)
    throw NotFound("no allowed sequence for " + model.name + " with coordinates bounded by " +
                   std::to_string(options.norm_bound));
  const auto up = lex_search(model, cands, upper_keys, k);

  Profile p;
  p.radius = options.norm_bound;
  p.restricted = options.restrict_to_blocks && !model.profile_blocks.empty();
  p.candidates = cands.size();
  p.lower = lo->keys;
  for (auto i : lo->picks) p.lower_witness.vectors.push_back(cands[i].v);
  for (std::size_t d = 0; d < k; ++d) {
    const Int u = up->keys[d];
    p.upper.push_back(u == kUnknown ? std::nullopt : std::optional<Int>(u));
    // Entry d is pinned only when every earlier entry is.
    p.exact.push_back(u != kUnknown && u == p.lower[d] && (d == 0 || p.exact[d - 1]));
  }
  for (auto i : up->picks) p.upper_witness.vectors.push_back(cands[i].v);
  return p;
}

Profile profile_search(const ManifoldModel& model, const ProfileOptions& options) {
  return profile_search(model, options, [&](const HomologyClass& v) { return evaluate_genus(model, v); });
}

}  // namespace mingenus
