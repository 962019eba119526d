#pragma once

#include <algorithm>
#include <bit>
#include <functional>
#include <utility>
#include <climits>
#include <map>
#include <string>
#include <vector>

#include "shapes.hpp"
#include "tableau.hpp"

namespace kjdt {

/// Polynomial in k variables with integer coefficients, keyed by exponent
/// vectors of length k.
class SymmetricPolynomial {
 public:
  using Exponents = std::vector<int>;

  SymmetricPolynomial() = default;
  explicit SymmetricPolynomial(int vars) : vars_(vars) {}

  int vars() const noexcept { return vars_; }
  const std::map<Exponents, long long>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  long long coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? 0 : it->second;
  }

  void add_term(const Exponents& e, long long c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted && (it->second += c) == 0) terms_.erase(it);
  }

  static int degree_of(const Exponents& e) {
    int d = 0;
    for (int x : e) d += x;
    return d;
  }

  int min_degree() const {
    int d = INT_MAX;
    for (const auto& [e, c] : terms_) d = std::min(d, degree_of(e));
    return d;
  }

  SymmetricPolynomial homogeneous_component(int degree) const {
    SymmetricPolynomial out(vars_);
    for (const auto& [e, c] : terms_)
      if (degree_of(e) == degree) out.terms_.emplace(e, c);
    return out;
  }

  /// Product with every term of degree above max_degree dropped.
  SymmetricPolynomial times(const SymmetricPolynomial& other, int max_degree = INT_MAX) const {
    SymmetricPolynomial out(vars_);
    Exponents e(static_cast<std::size_t>(vars_));
    for (const auto& [a, ca] : terms_) {
      const int da = degree_of(a);
      for (const auto& [b, cb] : other.terms_) {
        if (da + degree_of(b) > max_degree) continue;
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = a[i] + b[i];
        out.add_term(e, ca * cb);
      }
    }
    return out;
  }

  SymmetricPolynomial& add_scaled(const SymmetricPolynomial& other, long long scale) {
    for (const auto& [e, c] : other.terms_) add_term(e, c * scale);
    return *this;
  }

  bool is_symmetric() const {
    for (int i = 0; i + 1 < vars_; ++i) {
      for (const auto& [e, c] : terms_) {
        Exponents s = e;
        std::swap(s[static_cast<std::size_t>(i)], s[static_cast<std::size_t>(i) + 1]);
        if (coefficient(s) != c) return false;
      }
    }
    return true;
  }

  /// One `e1,e2,...: coefficient` line per term, exponent vectors ascending.
  std::string to_text() const {
    std::string out;
    for (const auto& [e, c] : terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(e[i]);
      }
      out += ": " + std::to_string(c) + "\n";
    }
    return out;
  }

  friend SymmetricPolynomial operator*(const SymmetricPolynomial& a, const SymmetricPolynomial& b) {
    return a.times(b);
  }
  friend SymmetricPolynomial operator-(SymmetricPolynomial a, const SymmetricPolynomial& b) {
    return a.add_scaled(b, -1);
  }
  friend SymmetricPolynomial operator+(SymmetricPolynomial a, const SymmetricPolynomial& b) {
    return a.add_scaled(b, 1);
  }
  friend bool operator==(const SymmetricPolynomial&, const SymmetricPolynomial&) = default;

 private:
  int vars_ = 0;
  std::map<Exponents, long long> terms_;
};

/// Shape plus a nonempty set of labels per box (sorted ascending).
struct SetValuedTableau {
  Partition shape;
  std::vector<std::vector<std::vector<int>>> cells;

  int entry_count() const {
    int n = 0;
    for (const auto& row : cells)
      for (const auto& s : row) n += static_cast<int>(s.size());
    return n;
  }

  friend bool operator==(const SetValuedTableau&, const SetValuedTableau&) = default;
};

/// Sign and exponent vector of a set-valued tableau.
struct SignedMonomial {
  int sign = 1;
  std::vector<int> exponents;

  friend bool operator==(const SignedMonomial&, const SignedMonomial&) = default;
};

inline SignedMonomial weight(const SetValuedTableau& t, int vars) {
  SignedMonomial m;
  m.exponents.assign(static_cast<std::size_t>(vars), 0);
  for (const auto& row : t.cells)
    for (const auto& s : row)
      for (int v : s) {
        if (v < 1 || v > vars) throw error(errc::precondition_violated, "label outside 1..k");
        ++m.exponents[static_cast<std::size_t>(v - 1)];
      }
  m.sign = (t.entry_count() - t.shape.size()) % 2 == 0 ? 1 : -1;
  return m;
}

namespace detail {

// Row-major search over box contents encoded as bitmasks of {1..k}; bit i
// stands for label i+1. Stops descending once more than max_entries labels
// are used.
template <class Visitor>
void for_each_setvalued_mask(const Partition& shape, int k, bool singletons_only, int max_entries, Visitor&& visit) {
  if (shape.length() > k) return;
  std::vector<Box> cells = SkewShape(shape).cells();
  const int n = static_cast<int>(cells.size());
  std::vector<unsigned> masks(static_cast<std::size_t>(n), 0);
  std::vector<int> row_start(static_cast<std::size_t>(shape.length()) + 1, 0);
  for (int r = 0; r < shape.length(); ++r) row_start[static_cast<std::size_t>(r) + 1] = row_start[static_cast<std::size_t>(r)] + shape[r];
  auto idx = [&](int r, int c) { return row_start[static_cast<std::size_t>(r)] + c; };

  const unsigned full = (1u << k) - 1u;
  auto low = [](unsigned m) { return std::countr_zero(m) + 1; };
  auto high = [](unsigned m) { return 32 - std::countl_zero(m); };

  int used = 0;
  auto rec = [&](auto&& self, int i) -> void {
    if (i == n) {
      visit(std::as_const(masks), std::as_const(cells));
      return;
    }
    const Box b = cells[static_cast<std::size_t>(i)];
    int floor_label = 1;
    if (b.col > 0) floor_label = std::max(floor_label, high(masks[static_cast<std::size_t>(idx(b.row, b.col - 1))]));
    if (b.row > 0) floor_label = std::max(floor_label, high(masks[static_cast<std::size_t>(idx(b.row - 1, b.col))]) + 1);
    const int remaining_after = n - i - 1;
    for (unsigned m = 1; m <= full; ++m) {
      if (low(m) < floor_label) continue;
      const int pc = std::popcount(m);
      if (singletons_only && pc != 1) continue;
      if (used + pc + remaining_after > max_entries) continue;
      masks[static_cast<std::size_t>(i)] = m;
      used += pc;
      self(self, i + 1);
      used -= pc;
    }
  };
  rec(rec, 0);
}

}  // namespace detail

/// Semistandard set-valued tableaux of shape lam with labels in {1..k}:
/// max of a box <= min of the box to its right, < min of the box below.
template <class Visitor>
void for_each_setvalued(const Partition& lam, int k, Visitor&& visit) {
  detail::for_each_setvalued_mask(lam, k, false, INT_MAX,
                                  [&](const std::vector<unsigned>& masks, const std::vector<Box>& cells) {
                                    SetValuedTableau t;
                                    t.shape = lam;
                                    t.cells.resize(static_cast<std::size_t>(lam.length()));
                                    for (std::size_t i = 0; i < cells.size(); ++i) {
                                      std::vector<int> s;
                                      for (int v = 1; v <= k; ++v)
                                        if (masks[i] >> (v - 1) & 1u) s.push_back(v);
                                      t.cells[static_cast<std::size_t>(cells[i].row)].push_back(std::move(s));
                                    }
                                    visit(std::as_const(t));
                                  });
}

inline std::vector<SetValuedTableau> enumerate_setvalued(const Partition& lam, int k) {
  std::vector<SetValuedTableau> out;
  for_each_setvalued(lam, k, [&](const SetValuedTableau& t) { out.push_back(t); });
  return out;
}

namespace detail {

inline SymmetricPolynomial tableau_sum(const Partition& lam, int k, bool singletons_only, int max_degree) {
  SymmetricPolynomial p(k);
  std::vector<int> e(static_cast<std::size_t>(k));
  for_each_setvalued_mask(lam, k, singletons_only, max_degree,
                          [&](const std::vector<unsigned>& masks, const std::vector<Box>&) {
                            std::fill(e.begin(), e.end(), 0);
                            int entries = 0;
                            for (unsigned m : masks)
                              for (int v = 0; v < k; ++v)
                                if (m >> v & 1u) {
                                  ++e[static_cast<std::size_t>(v)];
                                  ++entries;
                                }
                            p.add_term(e, (entries - lam.size()) % 2 == 0 ? 1 : -1);
                          });
  return p;
}

}  // namespace detail

/// Sum of signed weights over set-valued tableaux; terms above max_degree
/// are omitted.
inline SymmetricPolynomial grothendieck_polynomial(const Partition& lam, int k, int max_degree = INT_MAX) {
  return detail::tableau_sum(lam, k, false, max_degree);
}

inline SymmetricPolynomial schur_polynomial(const Partition& lam, int k) {
  return detail::tableau_sum(lam, k, true, INT_MAX);
}

/// Memo of Grothendieck polynomials for one variable count and degree cap.
class GrothendieckBasis {
 public:
  GrothendieckBasis(int vars, int max_degree) : vars_(vars), max_degree_(max_degree) {}

  int vars() const noexcept { return vars_; }
  int max_degree() const noexcept { return max_degree_; }

  const SymmetricPolynomial& get(const Partition& lam) {
    auto it = cache_.find(lam);
    if (it == cache_.end()) it = cache_.emplace(lam, grothendieck_polynomial(lam, vars_, max_degree_)).first;
    return it->second;
  }

  /// Coefficients c with p = sum c[nu] G_nu, exact through degree max_degree.
  /// Works degree by degree from the bottom: the lexicographically largest
  /// monomial of the lowest remaining degree names the next basis element.
  std::map<Partition, long long> expand(SymmetricPolynomial p) {
    std::map<Partition, long long> out;
    while (!p.is_zero()) {
      const int d = p.min_degree();
      if (d > max_degree_) break;
      const auto layer = p.homogeneous_component(d);
      const auto& [lead, c] = *layer.terms().rbegin();
      if (!std::is_sorted(lead.begin(), lead.end(), std::greater<>()))
        throw error(errc::not_in_span, "leading monomial is not a partition; input is not symmetric");
      Partition nu(lead);
      out[nu] += c;
      p.add_scaled(get(nu), -c);
    }
    for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
    return out;
  }

 private:
  int vars_;
  int max_degree_;
  std::map<Partition, SymmetricPolynomial> cache_;
};

inline std::map<Partition, long long> expand_in_g_basis(const SymmetricPolynomial& p, int k,
                                                         int max_degree = INT_MAX) {
  GrothendieckBasis basis(k, max_degree);
  return basis.expand(p);
}

/// Coefficients of G_lam * G_mu in the G basis for every nu inside the
/// rectangle, computed in rows-many variables.
inline std::map<Partition, long long> oracle_expansion(const Partition& lam, const Partition& mu,
                                                       const Rectangle& ambient, GrothendieckBasis& basis) {
  require_fits(ambient, lam);
  require_fits(ambient, mu);
  const auto product = basis.get(lam).times(basis.get(mu), basis.max_degree());
  std::map<Partition, long long> out;
  for (const auto& [nu, c] : basis.expand(product))
    if (ambient.fits(nu)) out.emplace(nu, c);
  return out;
}

inline std::map<Partition, long long> oracle_expansion(const Partition& lam, const Partition& mu,
                                                       const Rectangle& ambient) {
  GrothendieckBasis basis(ambient.rows, ambient.rows * ambient.cols);
  return oracle_expansion(lam, mu, ambient, basis);
}

inline long long oracle_coefficient(const Partition& lam, const Partition& mu, const Partition& nu,
                                    const Rectangle& ambient, int vars) {
  require_fits(ambient, lam);
  require_fits(ambient, mu);
  require_fits(ambient, nu);
  GrothendieckBasis basis(vars, nu.size());
  const auto product = basis.get(lam).times(basis.get(mu), nu.size());
  const auto coeffs = basis.expand(product);
  auto it = coeffs.find(nu);
  return it == coeffs.end() ? 0 : it->second;
}

/// Coefficient of G_nu in G_lam * G_mu using as many variables as the
/// rectangle has rows.
inline long long oracle_coefficient(const Partition& lam, const Partition& mu, const Partition& nu,
                                    const Rectangle& ambient) {
  return oracle_coefficient(lam, mu, nu, ambient, ambient.rows);
}

}  // namespace kjdt
