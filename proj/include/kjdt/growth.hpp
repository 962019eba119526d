#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "slides.hpp"

namespace kjdt {

// Squares are labelled
//
//     alpha  beta
//     gamma  delta
//
// with shapes growing upward and to the right.

namespace detail {

inline void require_square_part(const Partition& big, const Partition& small, const char* what) {
  if (!is_rook_strip(big, small))
    throw error(errc::precondition_violated,
                std::string(what) + ": " + big.to_string() + "/" + small.to_string() + " is not a rook strip");
}

inline IncreasingTableau ones_on(const Partition& outer, const Partition& inner) {
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(outer.length()));
  for (int r = 0; r < outer.length(); ++r) {
    rows[static_cast<std::size_t>(r)].assign(static_cast<std::size_t>(outer[r]), 0);
    for (int c = inner[r]; c < outer[r]; ++c) rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = 1;
  }
  return IncreasingTableau(trusted, SkewShape(outer, inner), std::move(rows));
}

}  // namespace detail

/// delta from (gamma, alpha, beta): slide the 1's filling beta/alpha into the
/// boxes of alpha/gamma.
inline Partition local_rule_forward(const Partition& gamma, const Partition& alpha, const Partition& beta) {
  detail::require_square_part(alpha, gamma, "alpha/gamma");
  detail::require_square_part(beta, alpha, "beta/alpha");
  if (alpha == gamma) return beta;
  const auto corners = difference_cells(alpha, gamma);
  return kjdt(detail::ones_on(beta, alpha), corners).outer();
}

/// alpha from (gamma, delta, beta): reverse-slide the 1's filling delta/gamma
/// into the boxes of beta/delta.
inline Partition local_rule_backward(const Partition& gamma, const Partition& delta, const Partition& beta) {
  detail::require_square_part(delta, gamma, "delta/gamma");
  detail::require_square_part(beta, delta, "beta/delta");
  if (beta == delta) return gamma;
  const auto corners = difference_cells(beta, delta);
  const Rectangle ambient{beta.length(), beta.width()};
  return krevjdt(detail::ones_on(delta, gamma), corners, ambient).inner();
}

/// Fomin's rule for single-box growth.
inline Partition classical_local_rule(const Partition& gamma, const Partition& alpha, const Partition& beta) {
  if (!contains(alpha, gamma) || !contains(beta, alpha) || alpha.size() != gamma.size() + 1 ||
      beta.size() != alpha.size() + 1)
    throw error(errc::precondition_violated, "classical rule needs single-box steps");
  std::vector<Partition> between;
  for (Box b : difference_cells(beta, gamma)) {
    std::vector<int> rows = gamma.parts();
    if (static_cast<int>(rows.size()) <= b.row) rows.resize(static_cast<std::size_t>(b.row) + 1, 0);
    if (rows[static_cast<std::size_t>(b.row)] != b.col) continue;
    rows[static_cast<std::size_t>(b.row)] += 1;
    if (b.row > 0 && rows[static_cast<std::size_t>(b.row - 1)] < rows[static_cast<std::size_t>(b.row)]) continue;
    between.emplace_back(std::move(rows));
  }
  for (const Partition& p : between)
    if (p != alpha) return p;
  return alpha;
}

/// True iff the square satisfies containment, the rook-strip condition on all
/// four edges, and delta = local_rule_forward(gamma, alpha, beta).
inline bool is_valid_square(const Partition& alpha, const Partition& beta, const Partition& gamma,
                            const Partition& delta) {
  if (!is_rook_strip(alpha, gamma) || !is_rook_strip(beta, alpha) || !is_rook_strip(beta, delta) ||
      !is_rook_strip(delta, gamma))
    return false;
  return local_rule_forward(gamma, alpha, beta) == delta;
}

/// Rectangular grid of shapes, row 0 on top.
class GrowthDiagram {
 public:
  GrowthDiagram() = default;
  explicit GrowthDiagram(std::vector<std::vector<Partition>> grid) : grid_(std::move(grid)) {}

  int rows() const noexcept { return static_cast<int>(grid_.size()); }
  int cols() const noexcept { return grid_.empty() ? 0 : static_cast<int>(grid_.front().size()); }
  const Partition& at(int r, int c) const { return grid_[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]; }
  const std::vector<std::vector<Partition>>& grid() const noexcept { return grid_; }

  std::vector<Partition> top_row() const { return grid_.front(); }
  std::vector<Partition> bottom_row() const { return grid_.back(); }
  /// Left column read bottom to top.
  std::vector<Partition> left_column() const { return column(0); }
  /// Right column read bottom to top.
  std::vector<Partition> right_column() const { return column(cols() - 1); }

  /// Reflection across the antidiagonal (bottom row <-> left column).
  GrowthDiagram reflected() const {
    const int h = rows(), w = cols();
    std::vector<std::vector<Partition>> out(static_cast<std::size_t>(w), std::vector<Partition>(static_cast<std::size_t>(h)));
    for (int i = 0; i < w; ++i)
      for (int j = 0; j < h; ++j) out[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = at(h - 1 - j, w - 1 - i);
    return GrowthDiagram(std::move(out));
  }

  /// Top-left coordinates of the first square violating the local rules.
  std::optional<std::pair<int, int>> first_invalid_square() const {
    for (int r = 0; r + 1 < rows(); ++r)
      for (int c = 0; c + 1 < cols(); ++c)
        if (!is_valid_square(at(r, c), at(r, c + 1), at(r + 1, c), at(r + 1, c + 1))) return std::pair{r, c};
    return std::nullopt;
  }

  bool is_valid() const {
    for (int r = 0; r < rows(); ++r)
      for (int c = 0; c + 1 < cols(); ++c)
        if (!is_rook_strip(at(r, c + 1), at(r, c))) return false;
    for (int c = 0; c < cols(); ++c)
      for (int r = 0; r + 1 < rows(); ++r)
        if (!is_rook_strip(at(r, c), at(r + 1, c))) return false;
    return !first_invalid_square().has_value();
  }

  /// One line per row, top row first, shapes separated by '|'.
  std::string to_text() const {
    std::string out;
    for (const auto& row : grid_) {
      for (std::size_t c = 0; c < row.size(); ++c) {
        if (c) out += '|';
        out += row[c].to_string();
      }
      out += '\n';
    }
    return out;
  }

  friend bool operator==(const GrowthDiagram&, const GrowthDiagram&) = default;

 private:
  std::vector<Partition> column(int c) const {
    std::vector<Partition> out;
    for (int r = rows() - 1; r >= 0; --r) out.push_back(at(r, c));
    return out;
  }

  std::vector<std::vector<Partition>> grid_;
};

/// Growth diagram of the rectification of `top` (on nu/lam) in the order
/// encoded by `left` (straight, of shape lam): the largest label of `left`
/// gives the first slide.
inline GrowthDiagram build_growth_diagram(const IncreasingTableau& left, const IncreasingTableau& top) {
  if (!left.shape().is_straight()) throw error(errc::not_straight_shape, "left tableau must have straight shape");
  if (top.inner() != left.outer())
    throw error(errc::precondition_violated, "top tableau must extend the shape of the left tableau");
  const auto top_chain = shape_sequence(top).chain;
  const auto left_chain = shape_sequence(left).chain;
  const std::size_t h = left_chain.size(), w = top_chain.size();
  std::vector<std::vector<Partition>> grid(h, std::vector<Partition>(w));
  grid[0] = top_chain;
  for (std::size_t i = 0; i < h; ++i) grid[h - 1 - i][0] = left_chain[i];
  for (std::size_t i = 0; i + 1 < h; ++i)
    for (std::size_t j = 0; j + 1 < w; ++j)
      grid[i + 1][j + 1] = local_rule_forward(grid[i + 1][j], grid[i][j], grid[i][j + 1]);
  return GrowthDiagram(std::move(grid));
}

/// Tableau encoded by a chain that may contain repeated shapes (labels for
/// empty steps are simply absent).
inline IncreasingTableau tableau_from_chain(const std::vector<Partition>& chain) {
  const Partition& nu = chain.back();
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(nu.length()));
  for (int r = 0; r < nu.length(); ++r) rows[static_cast<std::size_t>(r)].assign(static_cast<std::size_t>(nu[r]), 0);
  for (std::size_t i = 1; i < chain.size(); ++i)
    for (const Box& b : difference_cells(chain[i], chain[i - 1]))
      rows[static_cast<std::size_t>(b.row)][static_cast<std::size_t>(b.col)] = static_cast<int>(i);
  return IncreasingTableau(SkewShape(nu, chain.front()), std::move(rows));
}

/// Number of growth diagrams whose left column encodes S_lam, bottom row
/// encodes S_mu and top right corner is nu. Columns are completed left to
/// right; each new column is grown upward by choosing beta over the rook
/// strips addable to alpha, and completions are memoized per column.
inline long long kgrowth_count(const Partition& lam, const Partition& mu, const Partition& nu) {
  if (!contains(nu, lam) || !contains(nu, mu) || nu.size() < lam.size() + mu.size()) return 0;
  const auto left = shape_sequence(superstandard(lam)).chain;
  const auto bottom = shape_sequence(superstandard(mu)).chain;
  const std::size_t h = left.size();
  const int width = static_cast<int>(bottom.size()) - 1;

  std::map<std::pair<int, std::vector<Partition>>, long long> memo;

  auto count_from = [&](auto&& self, int j, const std::vector<Partition>& col) -> long long {
    if (j == width) return col.back() == nu ? 1 : 0;
    auto key = std::pair{j, col};
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    long long total = 0;
    std::vector<Partition> next(h);
    next[0] = bottom[static_cast<std::size_t>(j) + 1];
    auto grow = [&](auto&& grow_self, std::size_t r) -> void {
      if (r + 1 == h) {
        if (col.back() != next.back()) total += self(self, j + 1, next);
        return;
      }
      const Partition& gamma = col[r];
      const Partition& alpha = col[r + 1];
      const Partition& delta = next[r];
      const auto addable = addable_boxes(alpha);
      const unsigned subsets = 1u << addable.size();
      for (unsigned mask = 0; mask < subsets; ++mask) {
        std::vector<int> rows = alpha.parts();
        rows.resize(static_cast<std::size_t>(alpha.length()) + 1, 0);
        bool fits = true;
        for (std::size_t i = 0; i < addable.size() && fits; ++i) {
          if (!(mask >> i & 1u)) continue;
          const Box b = addable[i];
          if (b.col >= nu[b.row]) fits = false;
          rows[static_cast<std::size_t>(b.row)] = b.col + 1;
        }
        if (!fits) continue;
        Partition beta(std::move(rows));
        if (!contains(beta, delta) || !is_rook_strip(beta, delta)) continue;
        if (local_rule_forward(gamma, alpha, beta) != delta) continue;
        next[r + 1] = std::move(beta);
        grow_self(grow_self, r + 1);
      }
    };
    grow(grow, 0);
    memo.emplace(std::move(key), total);
    return total;
  };
  return count_from(count_from, 0, left);
}

/// Erase the 1 in the corner, lower every other entry by one, and slide
/// into the vacated corner.
inline IncreasingTableau delta(const IncreasingTableau& t) {
  if (!t.shape().is_straight()) throw error(errc::not_straight_shape, "delta needs a straight shape");
  if (t.empty()) throw error(errc::precondition_violated, "delta needs a nonempty tableau");
  if (t.at({0, 0}) != 1) throw error(errc::precondition_violated, "corner entry must be 1");
  std::vector<std::vector<int>> rows = t.rows();
  for (auto& row : rows)
    for (int& v : row) v -= 1;
  const Partition corner{1};
  return kjdt(IncreasingTableau(trusted, SkewShape(t.outer(), corner), std::move(rows)), {Box{0, 0}});
}

namespace detail {

inline std::vector<IncreasingTableau> delta_orbit(const IncreasingTableau& t) {
  if (!t.shape().is_straight()) throw error(errc::not_straight_shape, "evacuation needs a straight shape");
  if (!t.is_canonical()) throw error(errc::precondition_violated, "evacuation needs labels 1..max");
  std::vector<IncreasingTableau> orbit{t};
  while (!orbit.back().empty()) orbit.push_back(delta(orbit.back()));
  return orbit;
}

}  // namespace detail

inline IncreasingTableau k_evacuation(const IncreasingTableau& t) {
  const auto orbit = detail::delta_orbit(t);
  ShapeSequence seq;
  for (auto it = orbit.rbegin(); it != orbit.rend(); ++it) seq.chain.push_back(it->outer());
  return from_shape_sequence(seq);
}

/// Staircase of shapes: row i lists the shape sequence of delta^i(T) starting
/// in column i. Cells left of the staircase are undefined.
class TriangularGrowthDiagram {
 public:
  TriangularGrowthDiagram() = default;
  explicit TriangularGrowthDiagram(std::vector<std::vector<Partition>> rows) : rows_(std::move(rows)) {}

  int size() const noexcept { return static_cast<int>(rows_.size()); }
  bool defined(int r, int c) const noexcept { return r >= 0 && c >= r && c < size(); }
  const Partition& at(int r, int c) const {
    return rows_[static_cast<std::size_t>(r)][static_cast<std::size_t>(c - r)];
  }
  const std::vector<std::vector<Partition>>& rows() const noexcept { return rows_; }

  /// Right column read bottom to top.
  std::vector<Partition> right_column() const {
    std::vector<Partition> out;
    for (int r = size() - 1; r >= 0; --r) out.push_back(at(r, size() - 1));
    return out;
  }

  bool is_valid() const {
    for (int r = 0; r < size(); ++r)
      if (!at(r, r).empty()) return false;
    for (int r = 0; r + 1 < size(); ++r)
      for (int c = r + 1; c + 1 < size(); ++c)
        if (!is_valid_square(at(r, c), at(r, c + 1), at(r + 1, c), at(r + 1, c + 1))) return false;
    return true;
  }

  /// Same layout as the rectangular dump; undefined cells are empty fields.
  std::string to_text() const {
    std::string out;
    for (int r = 0; r < size(); ++r) {
      for (int c = 0; c < size(); ++c) {
        if (c) out += '|';
        if (defined(r, c)) out += at(r, c).to_string();
      }
      out += '\n';
    }
    return out;
  }

 private:
  std::vector<std::vector<Partition>> rows_;
};

inline TriangularGrowthDiagram triangular_growth_diagram(const IncreasingTableau& t) {
  const auto orbit = detail::delta_orbit(t);
  std::vector<std::vector<Partition>> rows;
  for (const auto& d : orbit) rows.push_back(shape_sequence(d).chain);
  return TriangularGrowthDiagram(std::move(rows));
}

}  // namespace kjdt
