#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "growth.hpp"
#include "slides.hpp"
#include "tableau.hpp"

namespace kjdt {

/// Number of witnesses and the coefficient with its sign attached.
struct SignedCoefficient {
  long long count = 0;
  long long value = 0;

  friend bool operator==(const SignedCoefficient&, const SignedCoefficient&) = default;
};

inline int sign_for(int exponent) { return exponent % 2 == 0 ? 1 : -1; }

inline SignedCoefficient with_sign(long long count, int exponent) { return {count, sign_for(exponent) * count}; }

struct LrOptions {
  bool prune = true;
};

namespace detail {

// Increasing tableaux on nu/lam using exactly the labels 1..|mu| whose
// rectification is S_mu. With pruning, partial fillings are discarded when
// - a cell with a filled cell above it gets a label <= mu_1 (the labels <= mu_1
//   must form a horizontal strip),
// - the longest increasing subsequence of the filled part of the reading
//   word already exceeds mu_1, or cannot reach it with the cells left.
// Leaves must also have LIS = mu_1 and a mu_1-Pieri filling below mu_1 before
// the rectification is computed.
template <class Visitor>
void for_each_lr_witness(const Partition& lam, const Partition& mu, const Partition& nu, bool prune,
                         Visitor&& visit) {
  if (!contains(nu, lam)) return;
  const SkewShape shape(nu, lam);
  const int q = mu.size();
  const int n = shape.size();
  if (n < q) return;
  const IncreasingTableau target = superstandard(mu);
  const int t = mu[0];

  if (!prune) {
    for_each_increasing(shape, q, true, [&](const IncreasingTableau& cand) {
      if (krect(cand) == target) return detail::keep_going(visit, cand);
      return true;
    });
    return;
  }

  if (n == 0) {
    const IncreasingTableau empty = detail::assemble(shape, {}, {});
    if (krect(empty) == target) detail::keep_going(visit, empty);
    return;
  }

  const FillPlan plan = make_fill_plan(shape);
  std::vector<int> values(static_cast<std::size_t>(n), 0);
  std::vector<int> uses(static_cast<std::size_t>(q) + 1, 0);
  int distinct = 0;
  bool stop = false;

  // Reading order of the filled prefix: current row prefix, then completed
  // rows from the bottom up.
  std::vector<int> word;
  word.reserve(static_cast<std::size_t>(n));
  auto prefix_lis = [&](int filled) {
    word.clear();
    int i = filled;
    while (i > 0) {
      const int row = plan.cells[static_cast<std::size_t>(i - 1)].row;
      int start = i - 1;
      while (start > 0 && plan.cells[static_cast<std::size_t>(start - 1)].row == row) --start;
      for (int j = start; j < i; ++j) word.push_back(values[static_cast<std::size_t>(j)]);
      i = start;
    }
    return lis(std::span<const int>(word));
  };

  auto rec = [&](auto&& self, int i) -> void {
    if (i == n) {
      if (distinct != q) return;
      IncreasingTableau cand = detail::assemble(shape, plan, values);
      if (lis(cand) != t) return;
      if (t > 0 && !is_t_pieri_filling(split_at_label(cand, t).first, t)) return;
      if (krect(cand) != target) return;
      if (!detail::keep_going(visit, cand)) stop = true;
      return;
    }
    const auto k = static_cast<std::size_t>(i);
    int lo = 1;
    if (plan.left[k] >= 0) lo = std::max(lo, values[static_cast<std::size_t>(plan.left[k])] + 1);
    if (plan.up[k] >= 0) lo = std::max({lo, values[static_cast<std::size_t>(plan.up[k])] + 1, t + 1});
    const int hi = q - plan.reach[k] + 1;
    for (int v = lo; v <= hi && !stop; ++v) {
      auto& u = uses[static_cast<std::size_t>(v)];
      if (u++ == 0) ++distinct;
      if (q - distinct <= n - i - 1) {
        values[k] = v;
        const int l = prefix_lis(i + 1);
        if (l <= t && l + (n - i - 1) >= t) self(self, i + 1);
      }
      if (--u == 0) --distinct;
    }
  };
  rec(rec, 0);
}

}  // namespace detail

inline void require_all_fit(const Rectangle& ambient, std::initializer_list<const Partition*> shapes) {
  for (const Partition* p : shapes) require_fits(ambient, *p);
}

/// Count of increasing tableaux on nu/lam rectifying to S_mu, with sign
/// (-1)^{|nu|-|lam|-|mu|}.
inline SignedCoefficient lr_coefficient(const Partition& lam, const Partition& mu, const Partition& nu,
                                        const Rectangle& ambient, LrOptions opts = {}) {
  require_all_fit(ambient, {&lam, &mu, &nu});
  long long count = 0;
  detail::for_each_lr_witness(lam, mu, nu, opts.prune, [&](const IncreasingTableau&) { ++count; });
  return with_sign(count, nu.size() - lam.size() - mu.size());
}

inline std::vector<IncreasingTableau> lr_witnesses(const Partition& lam, const Partition& mu, const Partition& nu,
                                                   const Rectangle& ambient, LrOptions opts = {}) {
  require_all_fit(ambient, {&lam, &mu, &nu});
  std::vector<IncreasingTableau> out;
  detail::for_each_lr_witness(lam, mu, nu, opts.prune, [&](const IncreasingTableau& t) { out.push_back(t); });
  return out;
}

/// Same coefficient counted as growth diagrams.
inline SignedCoefficient growth_coefficient(const Partition& lam, const Partition& mu, const Partition& nu,
                                            const Rectangle& ambient) {
  require_all_fit(ambient, {&lam, &mu, &nu});
  return with_sign(kgrowth_count(lam, mu, nu), nu.size() - lam.size() - mu.size());
}

inline long long binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// Closed form for mu a single row of length t: nonzero only when nu/lam is
/// a horizontal strip with at least t boxes, spread over r rows.
inline SignedCoefficient pieri_coefficient(const Partition& lam, int t, const Partition& nu) {
  if (t < 0) throw error(errc::precondition_violated, "row length must be nonnegative");
  if (!contains(nu, lam)) return {};
  const SkewShape shape(nu, lam);
  const int n = shape.size();
  if (t == 0) return n == 0 ? SignedCoefficient{1, 1} : SignedCoefficient{};
  if (n < t || !is_horizontal_strip(shape)) return {};
  return with_sign(binomial(row_count(shape) - 1, n - t), n - t);
}

inline SignedCoefficient pieri_coefficient(const Partition& lam, int t, const Partition& nu, const Rectangle& ambient) {
  require_all_fit(ambient, {&lam, &nu});
  if (t > ambient.cols) throw error(errc::shape_exceeds_rectangle, "row of length " + std::to_string(t) + " does not fit");
  return pieri_coefficient(lam, t, nu);
}

/// The t-Pieri fillings of a horizontal strip: bottom nonempty row gets 1..k,
/// each higher row runs consecutively from e or e+1 where e ends the row
/// below. Ordered by the set of rows starting at e (listed bottom to top),
/// lexicographically.
inline std::vector<IncreasingTableau> t_pieri_fillings(const SkewShape& shape, int t) {
  std::vector<IncreasingTableau> out;
  if (t <= 0 || shape.size() < t || !is_horizontal_strip(shape)) return out;
  std::vector<int> rows_used;
  for (int r = shape.outer().length() - 1; r >= 0; --r)
    if (shape.outer()[r] > shape.inner()[r]) rows_used.push_back(r);
  const int extra = static_cast<int>(rows_used.size()) - 1;
  const int selected = shape.size() - t;
  if (selected > extra) return out;

  std::vector<int> chosen;
  auto emit = [&] {
    std::vector<std::vector<int>> rows(static_cast<std::size_t>(shape.outer().length()));
    for (int r = 0; r < shape.outer().length(); ++r) rows[static_cast<std::size_t>(r)].assign(static_cast<std::size_t>(shape.outer()[r]), 0);
    int last = 0;
    std::size_t pick = 0;
    for (std::size_t k = 0; k < rows_used.size(); ++k) {
      const int r = rows_used[k];
      int start = last + 1;
      if (k > 0 && pick < chosen.size() && chosen[pick] == static_cast<int>(k)) {
        start = last;
        ++pick;
      }
      for (int c = shape.inner()[r]; c < shape.outer()[r]; ++c)
        rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = start + (c - shape.inner()[r]);
      last = rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(shape.outer()[r] - 1)];
    }
    out.emplace_back(shape, std::move(rows));
  };
  auto rec = [&](auto&& self, int from) -> void {
    if (static_cast<int>(chosen.size()) == selected) {
      emit();
      return;
    }
    for (int k = from; k <= extra; ++k) {
      chosen.push_back(k);
      self(self, k + 1);
      chosen.pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

using CoefficientRule = std::function<SignedCoefficient(const Partition&, const Partition&, const Partition&)>;

/// Memo of coefficients for one rectangle, filled lazily through a rule.
class CoefficientCache {
 public:
  explicit CoefficientCache(Rectangle ambient, CoefficientRule rule = {}) : ambient_(ambient), rule_(std::move(rule)) {
    if (!rule_) {
      rule_ = [amb = ambient_](const Partition& l, const Partition& m, const Partition& n) {
        return lr_coefficient(l, m, n, amb);
      };
    }
  }

  const Rectangle& ambient() const noexcept { return ambient_; }

  SignedCoefficient get(const Partition& lam, const Partition& mu, const Partition& nu) {
    auto key = std::tuple{lam, mu, nu};
    auto it = memo_.find(key);
    if (it == memo_.end()) it = memo_.emplace(std::move(key), rule_(lam, mu, nu)).first;
    return it->second;
  }

  /// Nonzero signed coefficients of G_lam G_mu over partitions in the rectangle.
  std::map<Partition, long long> expansion(const Partition& lam, const Partition& mu) {
    require_all_fit(ambient_, {&lam, &mu});
    std::map<Partition, long long> out;
    for (const Partition& nu : enumerate_partitions_in(ambient_)) {
      if (nu.size() < lam.size() + mu.size() || !contains(nu, lam) || !contains(nu, mu)) continue;
      const long long v = get(lam, mu, nu).value;
      if (v != 0) out.emplace(nu, v);
    }
    return out;
  }

 private:
  Rectangle ambient_;
  CoefficientRule rule_;
  std::map<std::tuple<Partition, Partition, Partition>, SignedCoefficient> memo_;
};

inline std::map<Partition, long long> product_expansion(const Partition& lam, const Partition& mu,
                                                        const Rectangle& ambient) {
  CoefficientCache cache(ambient);
  return cache.expansion(lam, mu);
}

/// d = G_{lam∧mu} G_{lam∨mu} - G_lam G_mu, nonzero entries only.
inline std::map<Partition, long long> product_difference(const Partition& lam, const Partition& mu,
                                                         CoefficientCache& cache) {
  auto d = cache.expansion(meet(lam, mu), join(lam, mu));
  for (const auto& [nu, v] : cache.expansion(lam, mu)) d[nu] -= v;
  for (auto it = d.begin(); it != d.end();) it = it->second == 0 ? d.erase(it) : std::next(it);
  return d;
}

inline std::map<Partition, long long> product_difference(const Partition& lam, const Partition& mu,
                                                         const Rectangle& ambient) {
  CoefficientCache cache(ambient);
  return product_difference(lam, mu, cache);
}

/// Every term has sign (-1)^{|nu|-|lam|-|mu|} (or is zero).
inline bool satisfies_sign_conjecture(const std::map<Partition, long long>& d, const Partition& lam,
                                      const Partition& mu) {
  for (const auto& [nu, v] : d)
    if (sign_for(nu.size() - lam.size() - mu.size()) * v < 0) return false;
  return true;
}

/// First nu where the coefficient of nu differs between the two sides.
struct AlgebraCheck {
  bool ok = true;
  std::optional<Partition> witness;
  long long left = 0;
  long long right = 0;
};

inline AlgebraCheck check_commutativity(const Partition& lam, const Partition& mu, CoefficientCache& cache) {
  const auto a = cache.expansion(lam, mu);
  const auto b = cache.expansion(mu, lam);
  for (const Partition& nu : enumerate_partitions_in(cache.ambient())) {
    auto ia = a.find(nu);
    auto ib = b.find(nu);
    const long long x = ia == a.end() ? 0 : ia->second;
    const long long y = ib == b.end() ? 0 : ib->second;
    if (x != y) return {false, nu, x, y};
  }
  return {};
}

/// (G_a G_b) G_c against G_a (G_b G_c), truncated to the rectangle.
inline AlgebraCheck check_associativity(const Partition& a, const Partition& b, const Partition& c,
                                        CoefficientCache& cache) {
  std::map<Partition, long long> left, right;
  for (const auto& [sigma, x] : cache.expansion(a, b))
    for (const auto& [nu, y] : cache.expansion(sigma, c)) left[nu] += x * y;
  for (const auto& [tau, x] : cache.expansion(b, c))
    for (const auto& [nu, y] : cache.expansion(a, tau)) right[nu] += x * y;
  for (const Partition& nu : enumerate_partitions_in(cache.ambient())) {
    const long long x = left.count(nu) ? left[nu] : 0;
    const long long y = right.count(nu) ? right[nu] : 0;
    if (x != y) return {false, nu, x, y};
  }
  return {};
}

inline AlgebraCheck check_commutativity(const Partition& lam, const Partition& mu, const Rectangle& ambient) {
  CoefficientCache cache(ambient);
  return check_commutativity(lam, mu, cache);
}

inline AlgebraCheck check_associativity(const Partition& a, const Partition& b, const Partition& c,
                                        const Rectangle& ambient) {
  CoefficientCache cache(ambient);
  return check_associativity(a, b, c, cache);
}

}  // namespace kjdt
