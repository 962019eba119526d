#pragma once

#include <algorithm>
#include <array>
#include <span>
#include <vector>

#include "tableau.hpp"

namespace kjdt {

inline constexpr int kHole = -1;

/// Working grid for a slide: 0 marks a box with no entry (outside the shape
/// or in the inner shape), kHole a vacated box, positive values are labels.
class SlideState {
 public:
  SlideState() = default;
  SlideState(int rows, int cols)
      : rows_(rows), cols_(cols), cells_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), 0) {}

  static SlideState from_tableau(const IncreasingTableau& t, int rows, int cols) {
    SlideState s(rows, cols);
    for (const Box& b : t.shape().cells()) s.set(b, t.at(b));
    return s;
  }

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }
  bool in_bounds(Box b) const noexcept { return b.row >= 0 && b.col >= 0 && b.row < rows_ && b.col < cols_; }
  int at(Box b) const noexcept { return in_bounds(b) ? cells_[index(b)] : 0; }
  void set(Box b, int v) { cells_[index(b)] = v; }

  std::vector<Box> holes() const {
    std::vector<Box> out;
    for (int r = 0; r < rows_; ++r)
      for (int c = 0; c < cols_; ++c)
        if (at({r, c}) == kHole) out.push_back({r, c});
    return out;
  }

  friend bool operator==(const SlideState&, const SlideState&) = default;

 private:
  std::size_t index(Box b) const noexcept {
    return static_cast<std::size_t>(b.row) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(b.col);
  }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<int> cells_;
};

/// Exchanges holes and `symbol` on every connected component of the boxes
/// holding either one. Each component must be an alternating short ribbon;
/// single boxes are left alone.
inline void switch_in_place(SlideState& state, int symbol) {
  const int rows = state.rows(), cols = state.cols();
  auto active = [&](Box b) {
    int v = state.at(b);
    return v == kHole || v == symbol;
  };
  std::vector<char> seen(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), 0);
  auto mark = [&](Box b) -> char& {
    return seen[static_cast<std::size_t>(b.row) * static_cast<std::size_t>(cols) + static_cast<std::size_t>(b.col)];
  };
  std::vector<Box> component;
  constexpr std::array<Box, 4> steps{{{0, 1}, {1, 0}, {0, -1}, {-1, 0}}};

  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      Box start{r, c};
      if (mark(start) || !active(start)) continue;
      component.clear();
      component.push_back(start);
      mark(start) = 1;
      for (std::size_t k = 0; k < component.size(); ++k) {
        Box b = component[k];
        for (Box d : steps) {
          Box n{b.row + d.row, b.col + d.col};
          if (!state.in_bounds(n) || mark(n) || !active(n)) continue;
          if (state.at(n) == state.at(b))
            throw error(errc::not_a_short_ribbon, "adjacent boxes carry the same symbol");
          mark(n) = 1;
          component.push_back(n);
        }
      }
      if (component.size() == 1) continue;

      std::vector<int> per_row(static_cast<std::size_t>(rows), 0), per_col(static_cast<std::size_t>(cols), 0);
      for (Box b : component) {
        if (++per_row[static_cast<std::size_t>(b.row)] > 2 || ++per_col[static_cast<std::size_t>(b.col)] > 2)
          throw error(errc::not_a_short_ribbon, "ribbon has more than two boxes in a row or column");
        if (active({b.row + 1, b.col}) && active({b.row, b.col + 1}) && active({b.row + 1, b.col + 1}))
          throw error(errc::not_a_short_ribbon, "ribbon contains a 2x2 square");
      }
      for (Box b : component) state.set(b, state.at(b) == kHole ? symbol : kHole);
    }
  }
}

inline SlideState switch_symbols(SlideState state, int symbol) {
  switch_in_place(state, symbol);
  return state;
}

struct SlideResult {
  IncreasingTableau tableau;
  std::vector<Box> vacated;  // where the holes ended up
};

namespace detail {

inline std::vector<Box> normalized(std::span<const Box> boxes) {
  std::vector<Box> out(boxes.begin(), boxes.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Same exchange as switch_in_place, driven from the hole list instead of a
// scan of the grid: on a valid ribbon every box with a neighbour of the other
// symbol flips and nothing else moves. Used by the slides; the component
// search above stays as the reference and for validation.
struct SwitchScratch {
  std::vector<Box> became_label, became_hole;
};

inline void switch_near_holes(SlideState& state, std::vector<Box>& holes, int symbol, SwitchScratch& scratch) {
  constexpr std::array<Box, 4> steps{{{0, 1}, {1, 0}, {0, -1}, {-1, 0}}};
  auto& became_label = scratch.became_label;
  auto& became_hole = scratch.became_hole;
  became_label.clear();
  became_hole.clear();
  for (Box h : holes) {
    bool touched = false;
    for (Box d : steps) {
      Box n{h.row + d.row, h.col + d.col};
      if (state.at(n) != symbol) continue;
      touched = true;
      if (std::find(became_hole.begin(), became_hole.end(), n) == became_hole.end()) became_hole.push_back(n);
    }
    if (touched) became_label.push_back(h);
  }
  if (became_label.empty()) return;
  for (Box b : became_label) state.set(b, symbol);
  for (Box b : became_hole) state.set(b, kHole);
  std::erase_if(holes, [&](Box b) { return state.at(b) != kHole; });
  holes.insert(holes.end(), became_hole.begin(), became_hole.end());
}

inline IncreasingTableau read_back(const SlideState& s, const Partition& inner, const Partition& outer) {
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(outer.length()));
  for (int r = 0; r < outer.length(); ++r) {
    auto& row = rows[static_cast<std::size_t>(r)];
    row.assign(static_cast<std::size_t>(outer[r]), 0);
    for (int c = inner[r]; c < outer[r]; ++c) row[static_cast<std::size_t>(c)] = s.at({r, c});
  }
  return IncreasingTableau(trusted, SkewShape(outer, inner), std::move(rows));
}

}  // namespace detail

/// K-theoretic jeu de taquin slide into the given inner corners: holes are
/// switched past the labels 1, 2, ..., max in turn and then dropped.
inline SlideResult kjdt_slide(const IncreasingTableau& t, std::span<const Box> corners) {
  const auto chosen = detail::normalized(corners);
  if (chosen.empty()) throw error(errc::precondition_violated, "a slide needs at least one corner");
  const auto legal = inner_corners(t.shape());
  for (Box b : chosen)
    if (!std::binary_search(legal.begin(), legal.end(), b))
      throw error(errc::not_an_inner_corner,
                  "(" + std::to_string(b.row) + "," + std::to_string(b.col) + ") is not an inner corner");

  const Partition& nu = t.outer();
  SlideState state = SlideState::from_tableau(t, nu.length(), nu.width());
  for (Box b : chosen) state.set(b, kHole);
  std::vector<Box> holes = chosen;
  detail::SwitchScratch scratch;
  const int top = t.max_entry();
  for (int s = 1; s <= top; ++s) detail::switch_near_holes(state, holes, s, scratch);

  std::vector<int> inner_rows = t.inner().parts();
  for (Box b : chosen) inner_rows[static_cast<std::size_t>(b.row)] = b.col;
  std::vector<int> outer_rows(static_cast<std::size_t>(nu.length()));
  for (int r = 0; r < nu.length(); ++r) {
    const int start = r < static_cast<int>(inner_rows.size()) ? inner_rows[static_cast<std::size_t>(r)] : 0;
    int end = start;
    while (end < nu[r] && state.at({r, end}) > 0) ++end;
    for (int c = end; c < nu[r]; ++c)
      if (state.at({r, c}) != kHole)
        throw error(errc::precondition_violated, "slide left a label behind a hole");
    outer_rows[static_cast<std::size_t>(r)] = end;
  }
  Partition new_inner(std::move(inner_rows));
  Partition new_outer(std::move(outer_rows));
  return {detail::read_back(state, new_inner, new_outer), state.holes()};
}

inline IncreasingTableau kjdt(const IncreasingTableau& t, std::span<const Box> corners) {
  return kjdt_slide(t, corners).tableau;
}

inline IncreasingTableau kjdt(const IncreasingTableau& t, std::initializer_list<Box> corners) {
  return kjdt_slide(t, std::span<const Box>(corners.begin(), corners.size())).tableau;
}

/// Reverse slide from outer corners of the ambient rectangle: holes are
/// switched past max, max-1, ..., 1 and end up enlarging the inner shape.
inline SlideResult krevjdt_slide(const IncreasingTableau& t, std::span<const Box> corners, const Rectangle& ambient) {
  const auto chosen = detail::normalized(corners);
  if (chosen.empty()) throw error(errc::precondition_violated, "a slide needs at least one corner");
  const auto legal = outer_corners(t.shape(), ambient);
  for (Box b : chosen)
    if (!std::binary_search(legal.begin(), legal.end(), b))
      throw error(errc::not_an_outer_corner,
                  "(" + std::to_string(b.row) + "," + std::to_string(b.col) + ") is not an outer corner");

  SlideState state = SlideState::from_tableau(t, ambient.rows, ambient.cols);
  for (Box b : chosen) state.set(b, kHole);
  std::vector<Box> holes = chosen;
  detail::SwitchScratch scratch;
  for (int s = t.max_entry(); s >= 1; --s) detail::switch_near_holes(state, holes, s, scratch);

  std::vector<int> outer_rows(static_cast<std::size_t>(ambient.rows));
  for (int r = 0; r < ambient.rows; ++r) outer_rows[static_cast<std::size_t>(r)] = t.outer()[r];
  for (Box b : chosen) outer_rows[static_cast<std::size_t>(b.row)] = b.col + 1;
  Partition new_outer(std::move(outer_rows));

  std::vector<int> inner_rows(static_cast<std::size_t>(ambient.rows));
  for (int r = 0; r < ambient.rows; ++r) {
    int end = t.inner()[r];
    while (end < new_outer[r] && state.at({r, end}) == kHole) ++end;
    for (int c = end; c < new_outer[r]; ++c)
      if (state.at({r, c}) <= 0) throw error(errc::precondition_violated, "reverse slide left a gap");
    inner_rows[static_cast<std::size_t>(r)] = end;
  }
  Partition new_inner(std::move(inner_rows));
  return {detail::read_back(state, new_inner, new_outer), state.holes()};
}

inline IncreasingTableau krevjdt(const IncreasingTableau& t, std::span<const Box> corners, const Rectangle& ambient) {
  return krevjdt_slide(t, corners, ambient).tableau;
}

/// Corner sets used by successive slides during a rectification.
struct RectificationOrder {
  std::vector<std::vector<Box>> steps;

  friend bool operator==(const RectificationOrder&, const RectificationOrder&) = default;
};

inline IncreasingTableau krect(const IncreasingTableau& t, const RectificationOrder& order) {
  IncreasingTableau cur = t;
  for (const auto& step : order.steps) cur = kjdt(cur, step);
  if (!cur.inner().empty())
    throw error(errc::incomplete_order, "order leaves inner shape " + cur.inner().to_string());
  return cur;
}

/// Rectification using every current inner corner at each step.
inline IncreasingTableau krect(const IncreasingTableau& t) {
  IncreasingTableau cur = t;
  while (!cur.inner().empty()) cur = kjdt(cur, inner_corners(cur.shape()));
  return cur;
}

inline RectificationOrder greedy_order(const Partition& inner) {
  RectificationOrder order;
  Partition cur = inner;
  while (!cur.empty()) {
    auto corners = inner_corners(SkewShape(cur, cur));
    std::vector<int> rows = cur.parts();
    for (Box b : corners) rows[static_cast<std::size_t>(b.row)] = b.col;
    order.steps.push_back(std::move(corners));
    cur = Partition(std::move(rows));
  }
  return order;
}

/// Every rectification order for the inner shape (each step a nonempty
/// subset of the current inner corners), depth first, at most `cap` of them.
template <class Visitor>
void for_each_rect_order(const SkewShape& shape, std::size_t cap, Visitor&& visit) {
  RectificationOrder order;
  std::size_t emitted = 0;
  bool stop = false;
  auto rec = [&](auto&& self, const Partition& cur) -> void {
    if (stop) return;
    if (cur.empty()) {
      if (emitted >= cap) {
        stop = true;
        return;
      }
      ++emitted;
      if (!detail::keep_going(visit, std::as_const(order))) stop = true;
      return;
    }
    const auto corners = inner_corners(SkewShape(cur, cur));
    const unsigned subsets = 1u << corners.size();
    for (unsigned mask = 1; mask < subsets && !stop; ++mask) {
      std::vector<Box> step;
      std::vector<int> rows = cur.parts();
      for (std::size_t i = 0; i < corners.size(); ++i) {
        if (!(mask >> i & 1u)) continue;
        step.push_back(corners[i]);
        rows[static_cast<std::size_t>(corners[i].row)] = corners[i].col;
      }
      order.steps.push_back(std::move(step));
      self(self, Partition(std::move(rows)));
      order.steps.pop_back();
    }
  };
  rec(rec, shape.inner());
}

inline std::vector<RectificationOrder> enumerate_rect_orders(const SkewShape& shape, std::size_t cap) {
  std::vector<RectificationOrder> out;
  for_each_rect_order(shape, cap, [&](const RectificationOrder& o) { out.push_back(o); });
  return out;
}

}  // namespace kjdt
