#pragma once

#include <algorithm>
#include <functional>
#include <span>
#include <type_traits>
#include <utility>
#include <vector>

#include "shapes.hpp"

namespace kjdt {

namespace detail {

// Visitors may return void or bool; false stops the enumeration.
template <class F, class... Args>
bool keep_going(F& f, Args&&... args) {
  if constexpr (std::is_same_v<std::invoke_result_t<F&, Args...>, bool>) {
    return std::invoke(f, std::forward<Args>(args)...);
  } else {
    std::invoke(f, std::forward<Args>(args)...);
    return true;
  }
}

}  // namespace detail

struct trusted_t {
  explicit trusted_t() = default;
};
inline constexpr trusted_t trusted{};

/// A filling of a skew shape whose entries strictly increase along rows and
/// down columns. Stored densely: rows()[r] has outer[r] slots, slots of the
/// inner shape hold 0.
class IncreasingTableau {
 public:
  IncreasingTableau() = default;

  IncreasingTableau(SkewShape shape, std::vector<std::vector<int>> rows)
      : shape_(std::move(shape)), rows_(std::move(rows)) {
    validate();
  }

  /// Skips validation; for producers that maintain the invariants themselves.
  IncreasingTableau(trusted_t, SkewShape shape, std::vector<std::vector<int>> rows)
      : shape_(std::move(shape)), rows_(std::move(rows)) {}

  const SkewShape& shape() const noexcept { return shape_; }
  const Partition& outer() const noexcept { return shape_.outer(); }
  const Partition& inner() const noexcept { return shape_.inner(); }
  const std::vector<std::vector<int>>& rows() const noexcept { return rows_; }
  int cell_count() const noexcept { return shape_.size(); }
  bool empty() const noexcept { return shape_.size() == 0; }

  /// Entry at a cell of the skew shape; 0 for inner cells and boxes outside.
  int at(Box b) const noexcept {
    if (!shape_.outer().has_box(b)) return 0;
    return rows_[static_cast<std::size_t>(b.row)][static_cast<std::size_t>(b.col)];
  }

  int max_entry() const noexcept {
    int m = 0;
    for (const auto& row : rows_)
      for (int v : row) m = std::max(m, v);
    return m;
  }

  /// True iff the values used are exactly {1, ..., max}.
  bool is_canonical() const {
    std::vector<char> seen(static_cast<std::size_t>(max_entry()) + 1, 0);
    for (const auto& row : rows_)
      for (int v : row)
        if (v > 0) seen[static_cast<std::size_t>(v)] = 1;
    return std::all_of(seen.begin() + 1, seen.end(), [](char s) { return s != 0; });
  }

  /// True iff every label occurs exactly once and the labels are 1..|cells|.
  bool is_standard() const { return is_canonical() && max_entry() == cell_count(); }

  std::vector<Box> cells_with(int label) const {
    std::vector<Box> out;
    for (const Box& b : shape_.cells())
      if (at(b) == label) out.push_back(b);
    return out;
  }

  friend bool operator==(const IncreasingTableau& a, const IncreasingTableau& b) {
    return a.shape_ == b.shape_ && a.rows_ == b.rows_;
  }
  friend auto operator<=>(const IncreasingTableau& a, const IncreasingTableau& b) {
    if (auto c = a.shape_ <=> b.shape_; c != 0) return c;
    return a.rows_ <=> b.rows_;
  }

 private:
  void validate() const {
    const Partition& nu = shape_.outer();
    const Partition& lam = shape_.inner();
    if (static_cast<int>(rows_.size()) != nu.length())
      throw error(errc::invalid_tableau, "row count does not match outer shape " + nu.to_string());
    for (int r = 0; r < nu.length(); ++r) {
      const auto& row = rows_[static_cast<std::size_t>(r)];
      if (static_cast<int>(row.size()) != nu[r])
        throw error(errc::invalid_tableau, "row " + std::to_string(r) + " has the wrong length");
      for (int c = 0; c < nu[r]; ++c) {
        int v = row[static_cast<std::size_t>(c)];
        if (c < lam[r]) {
          if (v != 0) throw error(errc::invalid_tableau, "inner cell holds an entry");
          continue;
        }
        if (v <= 0) throw error(errc::invalid_tableau, "entries must be positive");
        if (c > lam[r] && row[static_cast<std::size_t>(c - 1)] >= v)
          throw error(errc::invalid_tableau, "row " + std::to_string(r) + " is not strictly increasing");
        if (r > 0 && c >= lam[r - 1] && rows_[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c)] >= v)
          throw error(errc::invalid_tableau, "column " + std::to_string(c) + " is not strictly increasing");
      }
    }
    if (shape_.size() > 0 && max_entry() > shape_.size())
      throw error(errc::invalid_tableau, "largest entry exceeds the number of cells");
  }

  SkewShape shape_;
  std::vector<std::vector<int>> rows_;
};

/// Builds a tableau from rows of entries, 0 marking inner cells. The inner
/// shape is read off from the leading zeros of each row.
inline IncreasingTableau tableau_from_rows(std::vector<std::vector<int>> rows) {
  std::vector<int> outer, inner;
  for (const auto& row : rows) {
    outer.push_back(static_cast<int>(row.size()));
    int z = 0;
    while (z < static_cast<int>(row.size()) && row[static_cast<std::size_t>(z)] == 0) ++z;
    inner.push_back(z);
  }
  return IncreasingTableau(SkewShape(Partition(outer), Partition(inner)), std::move(rows));
}

/// Standard tableau of straight shape filling rows consecutively.
inline IncreasingTableau superstandard(const Partition& mu) {
  std::vector<std::vector<int>> rows;
  int next = 1;
  for (int part : mu.parts()) {
    std::vector<int> row(static_cast<std::size_t>(part));
    for (int& v : row) v = next++;
    rows.push_back(std::move(row));
  }
  return IncreasingTableau(trusted, SkewShape(mu), std::move(rows));
}

inline bool is_superstandard(const IncreasingTableau& t) {
  return t.shape().is_straight() && t == superstandard(t.outer());
}

/// Rows read left to right, starting from the bottom row.
inline std::vector<int> reading_word(const IncreasingTableau& t) {
  std::vector<int> word;
  word.reserve(static_cast<std::size_t>(t.cell_count()));
  for (int r = t.outer().length() - 1; r >= 0; --r)
    for (int c = t.inner()[r]; c < t.outer()[r]; ++c) word.push_back(t.at({r, c}));
  return word;
}

/// Length of the longest strictly increasing subsequence (patience sorting).
inline int lis(std::span<const int> word) {
  std::vector<int> tails;
  for (int v : word) {
    auto it = std::lower_bound(tails.begin(), tails.end(), v);
    if (it == tails.end())
      tails.push_back(v);
    else
      *it = v;
  }
  return static_cast<int>(tails.size());
}

inline int lis(const IncreasingTableau& t) {
  auto w = reading_word(t);
  return lis(std::span<const int>(w));
}

/// Chain of shapes lam = chain[0] ⊂ chain[1] ⊂ ... with rook-strip steps.
struct ShapeSequence {
  std::vector<Partition> chain;

  friend bool operator==(const ShapeSequence&, const ShapeSequence&) = default;
};

inline ShapeSequence shape_sequence(const IncreasingTableau& t) {
  if (!t.is_canonical())
    throw error(errc::precondition_violated, "shape sequences need labels 1..max without gaps");
  const int m = t.max_entry();
  ShapeSequence seq;
  seq.chain.reserve(static_cast<std::size_t>(m) + 1);
  for (int i = 0; i <= m; ++i) {
    std::vector<int> rows(static_cast<std::size_t>(t.outer().length()));
    for (int r = 0; r < t.outer().length(); ++r) {
      int len = t.inner()[r];
      while (len < t.outer()[r] && t.at({r, len}) <= i) ++len;
      rows[static_cast<std::size_t>(r)] = len;
    }
    seq.chain.emplace_back(std::move(rows));
  }
  return seq;
}

inline IncreasingTableau from_shape_sequence(const ShapeSequence& seq) {
  if (seq.chain.empty()) throw error(errc::invalid_chain, "empty chain");
  for (std::size_t i = 1; i < seq.chain.size(); ++i) {
    const Partition& lo = seq.chain[i - 1];
    const Partition& hi = seq.chain[i];
    if (lo == hi || !is_rook_strip(hi, lo))
      throw error(errc::invalid_chain,
                  "step " + lo.to_string() + " -> " + hi.to_string() + " is not a nonempty rook strip");
  }
  const Partition& nu = seq.chain.back();
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(nu.length()));
  for (int r = 0; r < nu.length(); ++r) rows[static_cast<std::size_t>(r)].assign(static_cast<std::size_t>(nu[r]), 0);
  for (std::size_t i = 1; i < seq.chain.size(); ++i)
    for (const Box& b : difference_cells(seq.chain[i], seq.chain[i - 1]))
      rows[static_cast<std::size_t>(b.row)][static_cast<std::size_t>(b.col)] = static_cast<int>(i);
  return IncreasingTableau(trusted, SkewShape(nu, seq.chain.front()), std::move(rows));
}

/// Splits t into the entries <= a (on (lam ∪ A)/lam) and the rest (on
/// nu/(lam ∪ A)); labels are kept as they are.
inline std::pair<IncreasingTableau, IncreasingTableau> split_at_label(const IncreasingTableau& t, int a) {
  const Partition& nu = t.outer();
  std::vector<int> mid(static_cast<std::size_t>(nu.length()));
  for (int r = 0; r < nu.length(); ++r) {
    int len = t.inner()[r];
    while (len < nu[r] && t.at({r, len}) <= a) ++len;
    mid[static_cast<std::size_t>(r)] = len;
  }
  Partition middle(mid);
  std::vector<std::vector<int>> low(static_cast<std::size_t>(middle.length()));
  std::vector<std::vector<int>> high = t.rows();
  for (int r = 0; r < middle.length(); ++r) {
    auto& row = low[static_cast<std::size_t>(r)];
    row.assign(static_cast<std::size_t>(middle[r]), 0);
    for (int c = t.inner()[r]; c < middle[r]; ++c) {
      row[static_cast<std::size_t>(c)] = t.at({r, c});
      high[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = 0;
    }
  }
  return {IncreasingTableau(trusted, SkewShape(middle, t.inner()), std::move(low)),
          IncreasingTableau(trusted, SkewShape(nu, middle), std::move(high))};
}

namespace detail {

struct FillPlan {
  std::vector<Box> cells;
  std::vector<int> left;    // index of the cell to the left inside the skew shape, or -1
  std::vector<int> up;      // index of the cell above inside the skew shape, or -1
  std::vector<int> reach;   // longest right/down chain of cells starting here, inclusive
};

inline FillPlan make_fill_plan(const SkewShape& shape) {
  FillPlan plan;
  plan.cells = shape.cells();
  const std::size_t n = plan.cells.size();
  plan.left.assign(n, -1);
  plan.up.assign(n, -1);
  plan.reach.assign(n, 1);
  auto index_of = [&](Box b) -> int {
    if (!shape.has_cell(b)) return -1;
    auto it = std::lower_bound(plan.cells.begin(), plan.cells.end(), b);
    return static_cast<int>(it - plan.cells.begin());
  };
  for (std::size_t i = 0; i < n; ++i) {
    Box b = plan.cells[i];
    plan.left[i] = index_of({b.row, b.col - 1});
    plan.up[i] = index_of({b.row - 1, b.col});
  }
  for (std::size_t k = n; k-- > 0;) {
    Box b = plan.cells[k];
    int right = index_of({b.row, b.col + 1});
    int down = index_of({b.row + 1, b.col});
    int best = 0;
    if (right >= 0) best = std::max(best, plan.reach[static_cast<std::size_t>(right)]);
    if (down >= 0) best = std::max(best, plan.reach[static_cast<std::size_t>(down)]);
    plan.reach[k] = best + 1;
  }
  return plan;
}

inline IncreasingTableau assemble(const SkewShape& shape, const FillPlan& plan, const std::vector<int>& values) {
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(shape.outer().length()));
  for (int r = 0; r < shape.outer().length(); ++r)
    rows[static_cast<std::size_t>(r)].assign(static_cast<std::size_t>(shape.outer()[r]), 0);
  for (std::size_t i = 0; i < plan.cells.size(); ++i)
    rows[static_cast<std::size_t>(plan.cells[i].row)][static_cast<std::size_t>(plan.cells[i].col)] = values[i];
  return IncreasingTableau(trusted, shape, std::move(rows));
}

}  // namespace detail

/// Depth-first generation of increasing fillings of `shape` with values in
/// {1..max_label}, cells filled row-major. With `surjective`, only fillings
/// using every value 1..max_label are produced.
template <class Visitor>
void for_each_increasing(const SkewShape& shape, int max_label, bool surjective, Visitor&& visit) {
  const int n = shape.size();
  if (max_label < 0) return;
  if (surjective && max_label > n) return;
  if (n == 0) {
    if (!surjective || max_label == 0) detail::keep_going(visit, detail::assemble(shape, {}, {}));
    return;
  }
  const detail::FillPlan plan = detail::make_fill_plan(shape);
  std::vector<int> values(static_cast<std::size_t>(n), 0);
  std::vector<int> uses(static_cast<std::size_t>(max_label) + 1, 0);
  int distinct = 0;
  bool stop = false;

  auto rec = [&](auto&& self, int i) -> void {
    if (i == n) {
      if (surjective && distinct != max_label) return;
      if (!detail::keep_going(visit, detail::assemble(shape, plan, values))) stop = true;
      return;
    }
    const auto k = static_cast<std::size_t>(i);
    int lo = 1;
    if (plan.left[k] >= 0) lo = std::max(lo, values[static_cast<std::size_t>(plan.left[k])] + 1);
    if (plan.up[k] >= 0) lo = std::max(lo, values[static_cast<std::size_t>(plan.up[k])] + 1);
    const int hi = max_label - plan.reach[k] + 1;
    for (int v = lo; v <= hi && !stop; ++v) {
      auto& u = uses[static_cast<std::size_t>(v)];
      if (u++ == 0) ++distinct;
      if (!surjective || max_label - distinct <= n - i - 1) {
        values[k] = v;
        self(self, i + 1);
      }
      if (--u == 0) --distinct;
    }
  };
  rec(rec, 0);
}

template <class Visitor>
void for_each_increasing(const SkewShape& shape, Visitor&& visit) {
  for (int q = 0; q <= shape.size(); ++q) {
    bool stop = false;
    for_each_increasing(shape, q, true, [&](const IncreasingTableau& t) {
      if (!detail::keep_going(visit, t)) stop = true;
      return !stop;
    });
    if (stop) return;
  }
}

inline std::vector<IncreasingTableau> enumerate_inc(const SkewShape& shape, int max_label, bool surjective) {
  std::vector<IncreasingTableau> out;
  for_each_increasing(shape, max_label, surjective, [&](const IncreasingTableau& t) { out.push_back(t); });
  return out;
}

/// Every canonical increasing tableau of the shape (labels 1..q, each used).
inline std::vector<IncreasingTableau> enumerate_inc(const SkewShape& shape) {
  std::vector<IncreasingTableau> out;
  for_each_increasing(shape, [&](const IncreasingTableau& t) { out.push_back(t); });
  return out;
}

/// Horizontal-strip fillings built bottom row first with 1..k, each higher row
/// continuing from the last entry e of the row below, starting at e ("selected"
/// row) or e+1, consecutively; the largest entry must be t.
inline bool is_t_pieri_filling(const IncreasingTableau& t, int top) {
  if (top <= 0 || t.empty() || !is_horizontal_strip(t.shape())) return false;
  if (t.max_entry() != top || !t.is_canonical()) return false;
  int last = 0;
  bool first_row = true;
  for (int r = t.outer().length() - 1; r >= 0; --r) {
    const int begin = t.inner()[r], end = t.outer()[r];
    if (begin == end) continue;
    const int start = t.at({r, begin});
    if (first_row) {
      if (start != 1) return false;
    } else if (start != last && start != last + 1) {
      return false;
    }
    for (int c = begin; c < end; ++c)
      if (t.at({r, c}) != start + (c - begin)) return false;
    last = t.at({r, end - 1});
    first_row = false;
  }
  return true;
}

}  // namespace kjdt
