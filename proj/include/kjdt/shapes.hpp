#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "error.hpp"

namespace kjdt {

/// Matrix coordinates of a box: row 0 is the top row, column 0 the leftmost.
struct Box {
  int row = 0;
  int col = 0;

  friend auto operator<=>(const Box&, const Box&) = default;
};

/// A partition stored as its nonzero parts in weakly decreasing order.
class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] <= 0 || (i > 0 && parts_[i] > parts_[i - 1]))
        throw error(errc::invalid_partition, "parts must be positive and weakly decreasing");
    }
    size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
  }

  const std::vector<int>& parts() const noexcept { return parts_; }
  int size() const noexcept { return size_; }
  int length() const noexcept { return static_cast<int>(parts_.size()); }
  bool empty() const noexcept { return parts_.empty(); }

  /// Row length; rows past the last part have length 0.
  int operator[](int row) const noexcept {
    return row >= 0 && row < length() ? parts_[static_cast<std::size_t>(row)] : 0;
  }

  int width() const noexcept { return (*this)[0]; }

  int column_length(int col) const noexcept {
    int n = 0;
    while (n < length() && parts_[static_cast<std::size_t>(n)] > col) ++n;
    return n;
  }

  bool has_box(Box b) const noexcept { return b.row >= 0 && b.col >= 0 && b.col < (*this)[b.row]; }

  Partition conjugate() const {
    std::vector<int> cols(static_cast<std::size_t>(width()));
    for (int c = 0; c < width(); ++c) cols[static_cast<std::size_t>(c)] = column_length(c);
    return Partition(std::move(cols));
  }

  std::string to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(parts_[i]);
    }
    return out + ")";
  }

  friend bool operator==(const Partition& a, const Partition& b) noexcept { return a.parts_ == b.parts_; }
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) noexcept {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

/// True iff `inner` fits inside `outer` (inner ⊆ outer componentwise).
inline bool contains(const Partition& outer, const Partition& inner) noexcept {
  if (inner.length() > outer.length()) return false;
  for (int r = 0; r < inner.length(); ++r)
    if (inner[r] > outer[r]) return false;
  return true;
}

inline Partition meet(const Partition& a, const Partition& b) {
  std::vector<int> rows(static_cast<std::size_t>(std::min(a.length(), b.length())));
  for (std::size_t r = 0; r < rows.size(); ++r) rows[r] = std::min(a[static_cast<int>(r)], b[static_cast<int>(r)]);
  return Partition(std::move(rows));
}

inline Partition join(const Partition& a, const Partition& b) {
  std::vector<int> rows(static_cast<std::size_t>(std::max(a.length(), b.length())));
  for (std::size_t r = 0; r < rows.size(); ++r) rows[r] = std::max(a[static_cast<int>(r)], b[static_cast<int>(r)]);
  return Partition(std::move(rows));
}

struct Rectangle {
  int rows = 0;
  int cols = 0;

  bool fits(const Partition& p) const noexcept { return p.length() <= rows && p.width() <= cols; }
  Partition as_partition() const { return Partition(std::vector<int>(static_cast<std::size_t>(rows), cols)); }
  std::string to_string() const { return std::to_string(rows) + "x" + std::to_string(cols); }

  friend bool operator==(const Rectangle&, const Rectangle&) = default;
};

inline void require_fits(const Rectangle& rect, const Partition& p) {
  if (!rect.fits(p))
    throw error(errc::shape_exceeds_rectangle, p.to_string() + " does not fit in " + rect.to_string());
}

/// The skew shape outer/inner; cells are those of `outer` not in `inner`.
class SkewShape {
 public:
  SkewShape() = default;
  explicit SkewShape(Partition outer) : outer_(std::move(outer)) {}
  SkewShape(Partition outer, Partition inner) : outer_(std::move(outer)), inner_(std::move(inner)) {
    if (!contains(outer_, inner_))
      throw error(errc::precondition_violated,
                  "inner shape " + inner_.to_string() + " is not contained in " + outer_.to_string());
  }

  const Partition& outer() const noexcept { return outer_; }
  const Partition& inner() const noexcept { return inner_; }
  int size() const noexcept { return outer_.size() - inner_.size(); }
  bool is_straight() const noexcept { return inner_.empty(); }

  bool has_cell(Box b) const noexcept { return outer_.has_box(b) && !inner_.has_box(b); }

  /// Cells in row-major order.
  std::vector<Box> cells() const {
    std::vector<Box> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (int r = 0; r < outer_.length(); ++r)
      for (int c = inner_[r]; c < outer_[r]; ++c) out.push_back({r, c});
    return out;
  }

  std::string to_string() const { return outer_.to_string() + "/" + inner_.to_string(); }

  friend bool operator==(const SkewShape&, const SkewShape&) = default;
  friend auto operator<=>(const SkewShape&, const SkewShape&) = default;

 private:
  Partition outer_;
  Partition inner_;
};

/// Maximally southeast boxes of the inner shape, sorted by row.
inline std::vector<Box> inner_corners(const SkewShape& shape) {
  const Partition& lam = shape.inner();
  std::vector<Box> out;
  for (int r = 0; r < lam.length(); ++r)
    if (lam[r + 1] < lam[r]) out.push_back({r, lam[r] - 1});
  return out;
}

/// Maximally northwest boxes of ambient minus the outer shape.
inline std::vector<Box> outer_corners(const SkewShape& shape, const Rectangle& ambient) {
  require_fits(ambient, shape.outer());
  const Partition& nu = shape.outer();
  std::vector<Box> out;
  for (int r = 0; r < ambient.rows; ++r) {
    if (nu[r] >= ambient.cols) continue;
    if (r == 0 || nu[r - 1] > nu[r]) out.push_back({r, nu[r]});
  }
  return out;
}

/// Boxes that can be added to `p` keeping a partition (no bound on size).
inline std::vector<Box> addable_boxes(const Partition& p) {
  std::vector<Box> out;
  for (int r = 0; r <= p.length(); ++r)
    if (r == 0 || p[r - 1] > p[r]) out.push_back({r, p[r]});
  return out;
}

/// True iff each column of outer/inner holds at most one cell.
inline bool is_horizontal_strip(const SkewShape& shape) {
  for (int r = 1; r < shape.outer().length(); ++r)
    if (shape.outer()[r] > shape.inner()[r - 1]) return false;
  return true;
}

inline int row_count(const SkewShape& shape) {
  int n = 0;
  for (int r = 0; r < shape.outer().length(); ++r)
    if (shape.outer()[r] > shape.inner()[r]) ++n;
  return n;
}

/// outer/inner has no two cells in one row and no two in one column.
inline bool is_rook_strip(const Partition& outer, const Partition& inner) {
  if (!contains(outer, inner)) return false;
  for (int r = 0; r < outer.length(); ++r) {
    if (outer[r] - inner[r] > 1) return false;
    if (r > 0 && outer[r] > inner[r - 1]) return false;
  }
  return true;
}

inline std::vector<Box> difference_cells(const Partition& outer, const Partition& inner) {
  return SkewShape(outer, inner).cells();
}

/// All partitions fitting in the rectangle, ordered by size and then
/// lexicographically by parts.
inline std::vector<Partition> enumerate_partitions_in(const Rectangle& rect) {
  std::vector<Partition> out;
  std::vector<int> rows;
  auto rec = [&](auto&& self, int max_part) -> void {
    out.emplace_back(rows);
    if (static_cast<int>(rows.size()) == rect.rows) return;
    for (int p = 1; p <= max_part; ++p) {
      rows.push_back(p);
      self(self, p);
      rows.pop_back();
    }
  };
  if (rect.rows >= 0 && rect.cols >= 0) rec(rec, rect.cols);
  std::stable_sort(out.begin(), out.end(), [](const Partition& a, const Partition& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

/// All partitions contained in `outer`, in the same order as above.
inline std::vector<Partition> enumerate_partitions_within(const Partition& outer) {
  std::vector<Partition> out;
  for (auto& p : enumerate_partitions_in({outer.length(), outer.width()}))
    if (contains(outer, p)) out.push_back(p);
  return out;
}

}  // namespace kjdt
