#pragma once

#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <tuple>
#include <vector>

#include <json.hpp>

#include "coeff.hpp"
#include "grothendieck.hpp"
#include "io.hpp"

namespace kjdt {

/// Bumped whenever a rule could produce different numbers; cached tables
/// carrying another version are recomputed.
inline constexpr std::string_view kRuleVersion = "kjdt-rule-v1";

enum class Rule { main, growth, oracle, pieri };

inline std::string_view to_string(Rule r) {
  switch (r) {
    case Rule::main: return "main";
    case Rule::growth: return "growth";
    case Rule::oracle: return "oracle";
    case Rule::pieri: return "pieri";
  }
  return "main";
}

inline Rule parse_rule(std::string_view s) {
  if (s == "main") return Rule::main;
  if (s == "growth") return Rule::growth;
  if (s == "oracle") return Rule::oracle;
  if (s == "pieri") return Rule::pieri;
  throw error(errc::parse_error, "unknown rule '" + std::string(s) + "'");
}

/// Signed coefficients for (lam, mu, nu) inside one rectangle. Only nonzero
/// entries are stored; lookups inside the rectangle default to zero and
/// lookups outside it are absent.
class CoefficientTable {
 public:
  using Key = std::tuple<Partition, Partition, Partition>;

  CoefficientTable() = default;
  CoefficientTable(Rectangle rect, Rule rule) : rect_(rect), rule_(rule) {}

  const Rectangle& rectangle() const noexcept { return rect_; }
  Rule rule() const noexcept { return rule_; }
  const std::map<Key, SignedCoefficient>& entries() const noexcept { return entries_; }

  void set(const Partition& lam, const Partition& mu, const Partition& nu, SignedCoefficient c) {
    if (c.count == 0) {
      entries_.erase({lam, mu, nu});
      return;
    }
    entries_[{lam, mu, nu}] = c;
  }

  std::optional<SignedCoefficient> get(const Partition& lam, const Partition& mu, const Partition& nu) const {
    if (!rect_.fits(lam) || !rect_.fits(mu) || !rect_.fits(nu)) return std::nullopt;
    auto it = entries_.find({lam, mu, nu});
    return it == entries_.end() ? SignedCoefficient{} : it->second;
  }

  std::string to_csv() const {
    std::string out = "lambda,mu,nu,count,signed\n";
    for (const auto& [key, c] : entries_) {
      const auto& [lam, mu, nu] = key;
      out += '"' + lam.to_string() + "\",\"" + mu.to_string() + "\",\"" + nu.to_string() + "\"," +
             std::to_string(c.count) + "," + std::to_string(c.value) + "\n";
    }
    return out;
  }

  nlohmann::json to_json() const {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& [key, c] : entries_) {
      const auto& [lam, mu, nu] = key;
      rows.push_back({{"lambda", lam.to_string()}, {"mu", mu.to_string()}, {"nu", nu.to_string()},
                      {"count", c.count}, {"signed", c.value}});
    }
    return {{"rectangle", rect_.to_string()},
            {"rule", std::string(to_string(rule_))},
            {"version", std::string(kRuleVersion)},
            {"entries", std::move(rows)}};
  }

  static CoefficientTable from_json(const nlohmann::json& j) {
    try {
      CoefficientTable t(parse_rectangle(j.at("rectangle").get<std::string>()), parse_rule(j.at("rule").get<std::string>()));
      for (const auto& e : j.at("entries"))
        t.set(parse_partition(e.at("lambda").get<std::string>()), parse_partition(e.at("mu").get<std::string>()),
              parse_partition(e.at("nu").get<std::string>()), {e.at("count").get<long long>(), e.at("signed").get<long long>()});
      return t;
    } catch (const nlohmann::json::exception& e) {
      throw error(errc::parse_error, e.what());
    }
  }

  /// Reads the body written by to_csv (header line required).
  static CoefficientTable from_csv(const std::string& text, Rectangle rect, Rule rule) {
    CoefficientTable t(rect, rule);
    std::istringstream in(text);
    std::string line;
    bool header = false;
    while (std::getline(in, line)) {
      if (line.empty() || line[0] == '#') continue;
      if (!header) {
        if (line != "lambda,mu,nu,count,signed") throw error(errc::parse_error, "unexpected CSV header");
        header = true;
        continue;
      }
      std::vector<std::string> fields;
      std::string cur;
      bool quoted = false;
      for (char ch : line) {
        if (ch == '"') quoted = !quoted;
        else if (ch == ',' && !quoted) {
          fields.push_back(cur);
          cur.clear();
        } else cur += ch;
      }
      fields.push_back(cur);
      if (fields.size() != 5) throw error(errc::parse_error, "CSV row needs 5 fields: " + line);
      t.set(parse_partition(fields[0]), parse_partition(fields[1]), parse_partition(fields[2]),
            {std::stoll(fields[3]), std::stoll(fields[4])});
    }
    return t;
  }

  friend bool operator==(const CoefficientTable&, const CoefficientTable&) = default;

 private:
  Rectangle rect_{};
  Rule rule_ = Rule::main;
  std::map<Key, SignedCoefficient> entries_;
};

namespace detail {

// nu -> coefficient for one (lam, mu) pair under a rule; nonzero only.
inline std::map<Partition, SignedCoefficient> pair_row(const Partition& lam, const Partition& mu, const Rectangle& rect,
                                                       Rule rule, GrothendieckBasis* basis) {
  std::map<Partition, SignedCoefficient> out;
  if (rule == Rule::oracle) {
    for (const auto& [nu, v] : oracle_expansion(lam, mu, rect, *basis)) {
      const int exponent = nu.size() - lam.size() - mu.size();
      out.emplace(nu, SignedCoefficient{sign_for(exponent) * v, v});
    }
    return out;
  }
  if (rule == Rule::pieri && mu.length() > 1) return out;
  for (const Partition& nu : enumerate_partitions_in(rect)) {
    if (nu.size() < lam.size() + mu.size() || !contains(nu, lam) || !contains(nu, mu)) continue;
    SignedCoefficient c;
    switch (rule) {
      case Rule::main: c = lr_coefficient(lam, mu, nu, rect); break;
      case Rule::growth: c = growth_coefficient(lam, mu, nu, rect); break;
      case Rule::pieri: c = pieri_coefficient(lam, mu.width(), nu); break;
      case Rule::oracle: break;
    }
    if (c.count != 0) out.emplace(nu, c);
  }
  return out;
}

}  // namespace detail

/// Fills the table for the given pairs with up to `jobs` threads. Workers
/// write only their own slot; the merge into the table is sequential in pair
/// order, so the result does not depend on scheduling.
inline CoefficientTable build_table(const Rectangle& rect, Rule rule,
                                    const std::vector<std::pair<Partition, Partition>>& pairs, int jobs = 1) {
  for (const auto& [lam, mu] : pairs) {
    require_fits(rect, lam);
    require_fits(rect, mu);
  }
  std::vector<std::map<Partition, SignedCoefficient>> rows(pairs.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    GrothendieckBasis basis(rect.rows, rect.rows * rect.cols);
    for (std::size_t i = next++; i < pairs.size(); i = next++)
      rows[i] = detail::pair_row(pairs[i].first, pairs[i].second, rect, rule, &basis);
  };
  const int n = std::max(1, std::min<int>(jobs, static_cast<int>(pairs.size())));
  if (n == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (int i = 0; i < n; ++i) pool.emplace_back(work);
  }
  CoefficientTable table(rect, rule);
  for (std::size_t i = 0; i < pairs.size(); ++i)
    for (const auto& [nu, c] : rows[i]) table.set(pairs[i].first, pairs[i].second, nu, c);
  return table;
}

inline std::vector<std::pair<Partition, Partition>> all_pairs(const Rectangle& rect) {
  std::vector<std::pair<Partition, Partition>> pairs;
  const auto shapes = enumerate_partitions_in(rect);
  for (const auto& lam : shapes)
    for (const auto& mu : shapes) pairs.emplace_back(lam, mu);
  return pairs;
}

inline CoefficientTable build_table(const Rectangle& rect, Rule rule, int jobs = 1) {
  return build_table(rect, rule, all_pairs(rect), jobs);
}

/// Full-rectangle table, read from and written to $KJDT_CACHE_DIR when set.
/// A cached file whose first line names another rule version is ignored.
inline CoefficientTable cached_table(const Rectangle& rect, Rule rule, int jobs = 1) {
  const char* dir = std::getenv("KJDT_CACHE_DIR");
  if (!dir || !*dir) return build_table(rect, rule, jobs);
  namespace fs = std::filesystem;
  const fs::path path = fs::path(dir) / (std::string(to_string(rule)) + "-" + rect.to_string() + ".csv");
  const std::string stamp = "# " + std::string(kRuleVersion) + " " + std::string(to_string(rule)) + " " + rect.to_string();
  if (std::ifstream in(path); in) {
    std::string first;
    std::getline(in, first);
    if (first == stamp) {
      std::ostringstream rest;
      rest << in.rdbuf();
      return CoefficientTable::from_csv(rest.str(), rect, rule);
    }
  }
  CoefficientTable table = build_table(rect, rule, jobs);
  std::error_code ec;
  fs::create_directories(dir, ec);
  const fs::path tmp = path.string() + ".tmp";
  if (std::ofstream out(tmp, std::ios::binary); out) {
    out << stamp << "\n" << table.to_csv();
    out.close();
    fs::rename(tmp, path, ec);
  }
  return table;
}

}  // namespace kjdt
