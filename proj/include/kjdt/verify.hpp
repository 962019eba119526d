#pragma once

#include <atomic>
#include <functional>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "coeff.hpp"
#include "grothendieck.hpp"
#include "growth.hpp"
#include "infusion.hpp"
#include "io.hpp"
#include "slides.hpp"

namespace kjdt {

struct SuiteResult {
  std::string name;
  bool passed = true;
  long long checked = 0;
  std::string counterexample;  // first failure in enumeration order
};

namespace detail {

struct ItemOutcome {
  long long checked = 0;
  std::optional<std::string> failure;
};

// Runs `check` on every item with up to `jobs` threads; counts are summed and
// the reported failure is the one with the smallest item index.
template <class Item>
SuiteResult run_items(std::string name, const std::vector<Item>& items, int jobs,
                      const std::function<ItemOutcome(const Item&)>& check) {
  std::vector<ItemOutcome> out(items.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < items.size(); i = next++) out[i] = check(items[i]);
  };
  const int n = std::max(1, std::min<int>(jobs, static_cast<int>(items.size())));
  if (n == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (int i = 0; i < n; ++i) pool.emplace_back(work);
  }
  SuiteResult r;
  r.name = std::move(name);
  for (const auto& o : out) {
    r.checked += o.checked;
    if (o.failure && r.passed) {
      r.passed = false;
      r.counterexample = *o.failure;
    }
  }
  return r;
}

inline std::string one_line(const IncreasingTableau& t) {
  std::string s = to_text(t);
  for (char& c : s)
    if (c == '\n') c = '/';
  if (!s.empty()) s.pop_back();
  return s.empty() ? "(empty)" : s;
}

inline std::vector<SkewShape> skew_shapes_in(const Rectangle& rect) {
  std::vector<SkewShape> out;
  for (const auto& nu : enumerate_partitions_in(rect))
    for (const auto& lam : enumerate_partitions_within(nu)) out.emplace_back(nu, lam);
  return out;
}

}  // namespace detail

/// kinfusion applied twice is the identity and krevinfusion inverts it, over
/// every abutting pair with outer shape inside the rectangle.
inline SuiteResult verify_infusion_involution(const Rectangle& rect, int jobs = 1) {
  std::vector<std::pair<SkewShape, SkewShape>> items;
  for (const auto& nu : enumerate_partitions_in(rect))
    for (const auto& lam : enumerate_partitions_within(nu))
      for (const auto& alpha : enumerate_partitions_within(lam)) items.emplace_back(SkewShape(lam, alpha), SkewShape(nu, lam));
  return detail::run_items<std::pair<SkewShape, SkewShape>>(
      "involution", items, jobs, [](const std::pair<SkewShape, SkewShape>& item) {
        detail::ItemOutcome o;
        const auto ts = enumerate_inc(item.first);
        const auto us = enumerate_inc(item.second);
        for (const auto& t : ts)
          for (const auto& u : us) {
            ++o.checked;
            const auto once = kinfusion(t, u);
            const auto twice = kinfusion(once.first, once.second);
            if (twice.first != t || twice.second != u || krevinfusion(once.first, once.second) != TableauPair{t, u}) {
              o.failure = "kinfusion pair T=" + detail::one_line(t) + " U=" + detail::one_line(u);
              return o;
            }
          }
        return o;
      });
}

/// k_evacuation is an involution on straight shapes inside the rectangle.
inline SuiteResult verify_evacuation_involution(const Rectangle& rect, int jobs = 1) {
  return detail::run_items<Partition>("involution", enumerate_partitions_in(rect), jobs, [](const Partition& lam) {
    detail::ItemOutcome o;
    for_each_increasing(SkewShape(lam), [&](const IncreasingTableau& t) {
      ++o.checked;
      if (k_evacuation(k_evacuation(t)) == t) return true;
      o.failure = "k_evacuation on " + detail::one_line(t);
      return false;
    });
    return o;
  });
}

inline SuiteResult verify_involution(const Rectangle& rect, int jobs = 1) {
  auto r = verify_infusion_involution(rect, jobs);
  if (!r.passed) return r;
  auto e = verify_evacuation_involution(rect, jobs);
  e.checked += r.checked;
  return e;
}

/// If some rectification order of T gives a superstandard tableau, every
/// order gives that same tableau. Inner shapes are limited to max_inner boxes.
inline SuiteResult verify_well_defined(const Rectangle& rect, int max_inner = 4, int jobs = 1) {
  std::vector<SkewShape> items;
  for (const auto& s : detail::skew_shapes_in(rect))
    if (s.inner().size() <= max_inner) items.push_back(s);
  return detail::run_items<SkewShape>("well-defined", items, jobs, [](const SkewShape& shape) {
    detail::ItemOutcome o;
    const auto orders = enumerate_rect_orders(shape, static_cast<std::size_t>(-1));
    for (const auto& t : enumerate_inc(shape)) {
      ++o.checked;
      std::vector<IncreasingTableau> results;
      results.reserve(orders.size());
      bool any_superstandard = false;
      for (const auto& order : orders) {
        results.push_back(krect(t, order));
        any_superstandard = any_superstandard || is_superstandard(results.back());
      }
      if (!any_superstandard) continue;
      for (const auto& res : results)
        if (res != results.front()) {
          o.failure = "rectifications of " + detail::one_line(t) + " disagree";
          return o;
        }
    }
    return o;
  });
}

/// Every single slide (any nonempty set of inner corners) keeps the longest
/// increasing subsequence of the reading word.
inline SuiteResult verify_lis(const Rectangle& rect, int jobs = 1) {
  std::vector<SkewShape> items;
  for (const auto& s : detail::skew_shapes_in(rect))
    if (!s.inner().empty()) items.push_back(s);
  return detail::run_items<SkewShape>("lis", items, jobs, [](const SkewShape& shape) {
    detail::ItemOutcome o;
    const auto corners = inner_corners(shape);
    const unsigned subsets = 1u << corners.size();
    for_each_increasing(shape, [&](const IncreasingTableau& t) {
      const int before = lis(t);
      for (unsigned mask = 1; mask < subsets; ++mask) {
        std::vector<Box> chosen;
        for (std::size_t i = 0; i < corners.size(); ++i)
          if (mask >> i & 1u) chosen.push_back(corners[i]);
        ++o.checked;
        if (lis(kjdt::kjdt(t, chosen)) != before) {
          o.failure = "slide changes lis of " + detail::one_line(t);
          return false;
        }
      }
      return true;
    });
    return o;
  });
}

/// For every triple inside the rectangle: the signed count equals the
/// Grothendieck-polynomial coefficient, and the growth-diagram count equals
/// the witness count.
inline SuiteResult verify_oracle_equiv(const Rectangle& rect, int jobs = 1) {
  const auto shapes = enumerate_partitions_in(rect);
  std::vector<std::pair<Partition, Partition>> pairs;
  for (const auto& lam : shapes)
    for (const auto& mu : shapes) pairs.emplace_back(lam, mu);
  return detail::run_items<std::pair<Partition, Partition>>(
      "oracle-equiv", pairs, jobs, [&](const std::pair<Partition, Partition>& p) {
        detail::ItemOutcome o;
        const auto& [lam, mu] = p;
        const auto oracle = oracle_expansion(lam, mu, rect);
        for (const auto& nu : shapes) {
          ++o.checked;
          const auto main = lr_coefficient(lam, mu, nu, rect);
          auto it = oracle.find(nu);
          const long long expected = it == oracle.end() ? 0 : it->second;
          const long long grown = kgrowth_count(lam, mu, nu);
          if (main.value != expected || grown != main.count) {
            o.failure = "C(" + lam.to_string() + "," + mu.to_string() + "," + nu.to_string() + "): rule " +
                        std::to_string(main.value) + ", oracle " + std::to_string(expected) + ", growth " +
                        std::to_string(grown);
            return o;
          }
        }
        return o;
      });
}

/// Growth diagrams built from a straight R and a skew T are valid, reflect to
/// valid diagrams, and their bottom row / right column match kinfusion.
inline SuiteResult verify_growth(const Rectangle& rect, int jobs = 1) {
  std::vector<SkewShape> items;
  for (const auto& s : detail::skew_shapes_in(rect))
    if (!s.inner().empty()) items.push_back(s);
  return detail::run_items<SkewShape>("growth", items, jobs, [](const SkewShape& shape) {
    detail::ItemOutcome o;
    const auto rs = enumerate_inc(SkewShape(shape.inner()));
    const auto ts = enumerate_inc(shape);
    for (const auto& r : rs)
      for (const auto& t : ts) {
        ++o.checked;
        const auto g = build_growth_diagram(r, t);
        const auto inf = kinfusion(r, t);
        const bool ok = g.is_valid() && g.reflected().is_valid() &&
                        g.bottom_row() == shape_sequence(inf.first).chain &&
                        g.right_column() == shape_sequence(inf.second).chain;
        if (!ok) {
          o.failure = "growth diagram for R=" + detail::one_line(r) + " T=" + detail::one_line(t);
          return o;
        }
      }
    return o;
  });
}

/// The rule with mu a single row matches the closed form, and the t-Pieri
/// fillings are exactly the witnesses.
inline SuiteResult verify_pieri(const Rectangle& rect, int jobs = 1) {
  std::vector<SkewShape> items = detail::skew_shapes_in(rect);
  return detail::run_items<SkewShape>("pieri", items, jobs, [&](const SkewShape& shape) {
    detail::ItemOutcome o;
    for (int t = 1; t <= rect.cols; ++t) {
      ++o.checked;
      const Partition row{t};
      const auto rule = lr_coefficient(shape.inner(), row, shape.outer(), rect);
      const auto closed = pieri_coefficient(shape.inner(), t, shape.outer());
      auto fillings = t_pieri_fillings(shape, t);
      std::sort(fillings.begin(), fillings.end());
      auto witnesses = lr_witnesses(shape.inner(), row, shape.outer(), rect);
      std::sort(witnesses.begin(), witnesses.end());
      if (rule != closed || fillings != witnesses) {
        o.failure = "t=" + std::to_string(t) + " on " + shape.to_string() + ": rule " + std::to_string(rule.value) +
                    ", closed form " + std::to_string(closed.value);
        return o;
      }
    }
    return o;
  });
}

inline SuiteResult verify_sign_conjecture(const Rectangle& rect, int jobs = 1) {
  const auto shapes = enumerate_partitions_in(rect);
  std::vector<std::pair<Partition, Partition>> pairs;
  for (std::size_t i = 0; i < shapes.size(); ++i)
    for (std::size_t j = i; j < shapes.size(); ++j) pairs.emplace_back(shapes[i], shapes[j]);
  return detail::run_items<std::pair<Partition, Partition>>(
      "sign-conjecture", pairs, jobs, [&](const std::pair<Partition, Partition>& p) {
        detail::ItemOutcome o{1, {}};
        const auto d = product_difference(p.first, p.second, rect);
        if (!satisfies_sign_conjecture(d, p.first, p.second))
          o.failure = "d for " + p.first.to_string() + "," + p.second.to_string() + " has a wrong sign";
        return o;
      });
}

inline SuiteResult verify_commutativity(const Rectangle& rect, int jobs = 1) {
  const auto shapes = enumerate_partitions_in(rect);
  std::vector<std::pair<Partition, Partition>> pairs;
  for (std::size_t i = 0; i < shapes.size(); ++i)
    for (std::size_t j = i + 1; j < shapes.size(); ++j) pairs.emplace_back(shapes[i], shapes[j]);
  return detail::run_items<std::pair<Partition, Partition>>(
      "commutativity", pairs, jobs, [&](const std::pair<Partition, Partition>& p) {
        detail::ItemOutcome o{1, {}};
        CoefficientCache cache(rect);
        const auto c = check_commutativity(p.first, p.second, cache);
        if (!c.ok)
          o.failure = p.first.to_string() + "*" + p.second.to_string() + " differs at " + c.witness->to_string();
        return o;
      });
}

inline SuiteResult verify_associativity(const Rectangle& rect, int jobs = 1) {
  const auto shapes = enumerate_partitions_in(rect);
  // One shared table of products keeps the triple loop cheap.
  auto table = std::make_shared<std::map<std::pair<Partition, Partition>, std::map<Partition, long long>>>();
  for (const auto& a : shapes)
    for (const auto& b : shapes) (*table)[{a, b}] = product_expansion(a, b, rect);
  std::vector<std::tuple<Partition, Partition, Partition>> triples;
  for (const auto& a : shapes)
    for (const auto& b : shapes)
      for (const auto& c : shapes) triples.emplace_back(a, b, c);
  return detail::run_items<std::tuple<Partition, Partition, Partition>>(
      "associativity", triples, jobs, [&](const std::tuple<Partition, Partition, Partition>& t) {
        detail::ItemOutcome o{1, {}};
        const auto& [a, b, c] = t;
        std::map<Partition, long long> left, right;
        for (const auto& [sigma, x] : table->at({a, b}))
          for (const auto& [nu, y] : table->at({sigma, c})) left[nu] += x * y;
        for (const auto& [tau, x] : table->at({b, c}))
          for (const auto& [nu, y] : table->at({a, tau})) right[nu] += x * y;
        std::erase_if(left, [](const auto& kv) { return kv.second == 0; });
        std::erase_if(right, [](const auto& kv) { return kv.second == 0; });
        if (left != right) o.failure = "(" + a.to_string() + "," + b.to_string() + "," + c.to_string() + ")";
        return o;
      });
}

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"involution", "well-defined", "lis",           "oracle-equiv", "growth",
                                              "pieri",      "sign-conjecture", "commutativity", "associativity"};
  return names;
}

inline SuiteResult run_suite(const std::string& name, const Rectangle& rect, int jobs = 1) {
  if (name == "involution") return verify_involution(rect, jobs);
  if (name == "well-defined") return verify_well_defined(rect, 4, jobs);
  if (name == "lis") return verify_lis(rect, jobs);
  if (name == "oracle-equiv") return verify_oracle_equiv(rect, jobs);
  if (name == "growth") return verify_growth(rect, jobs);
  if (name == "pieri") return verify_pieri(rect, jobs);
  if (name == "sign-conjecture") return verify_sign_conjecture(rect, jobs);
  if (name == "commutativity") return verify_commutativity(rect, jobs);
  if (name == "associativity") return verify_associativity(rect, jobs);
  throw error(errc::parse_error, "unknown suite '" + name + "'");
}

}  // namespace kjdt
