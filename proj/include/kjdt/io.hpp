#pragma once

#include <charconv>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "slides.hpp"
#include "tableau.hpp"

namespace kjdt {

namespace detail {

inline std::string_view trim(std::string_view s) {
  const auto ws = " \t\r\n";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  return s.substr(b, s.find_last_not_of(ws) - b + 1);
}

inline int parse_int(std::string_view s, std::string_view what) {
  s = trim(s);
  int v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || p != s.data() + s.size())
    throw error(errc::parse_error, "bad integer '" + std::string(s) + "' in " + std::string(what));
  return v;
}

}  // namespace detail

/// Accepts `(3,2,1)`, `3,2,1` and `()`.
inline Partition parse_partition(std::string_view text) {
  auto s = detail::trim(text);
  if (s.size() >= 2 && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
  s = detail::trim(s);
  std::vector<int> parts;
  while (!s.empty()) {
    const auto comma = s.find(',');
    parts.push_back(detail::parse_int(s.substr(0, comma), text));
    if (comma == std::string_view::npos) break;
    s = s.substr(comma + 1);
    if (detail::trim(s).empty()) throw error(errc::parse_error, "trailing comma in " + std::string(text));
  }
  for (int p : parts)
    if (p < 0) throw error(errc::invalid_partition, "negative part in " + std::string(text));
  return Partition(std::move(parts));
}

/// `RxC`, e.g. `4x3`.
inline Rectangle parse_rectangle(std::string_view text) {
  auto s = detail::trim(text);
  const auto x = s.find_first_of("xX");
  if (x == std::string_view::npos) throw error(errc::parse_error, "rectangle must look like 4x3");
  Rectangle r{detail::parse_int(s.substr(0, x), text), detail::parse_int(s.substr(x + 1), text)};
  if (r.rows < 0 || r.cols < 0) throw error(errc::parse_error, "negative rectangle side");
  return r;
}

/// One line per row, `.` for inner cells.
inline std::string to_text(const IncreasingTableau& t) {
  std::string out;
  for (const auto& row : t.rows()) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out += ' ';
      out += row[c] == 0 ? std::string(".") : std::to_string(row[c]);
    }
    out += '\n';
  }
  return out;
}

inline IncreasingTableau parse_tableau(std::string_view text) {
  std::vector<std::vector<int>> rows;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (detail::trim(line).empty()) continue;
    std::istringstream tokens(line);
    std::string tok;
    std::vector<int> row;
    while (tokens >> tok) {
      if (tok == ".") {
        row.push_back(0);
        continue;
      }
      const int v = detail::parse_int(tok, "tableau row");
      if (v <= 0) throw error(errc::invalid_tableau, "entries must be positive");
      row.push_back(v);
    }
    rows.push_back(std::move(row));
  }
  for (const auto& row : rows) {
    bool seen_label = false;
    for (int v : row) {
      if (v != 0) seen_label = true;
      else if (seen_label) throw error(errc::invalid_tableau, "'.' after a label in the same row");
    }
  }
  return tableau_from_rows(std::move(rows));
}

/// Several tableaux separated by blank lines.
inline std::vector<IncreasingTableau> parse_tableau_list(std::string_view text) {
  std::vector<IncreasingTableau> out;
  std::istringstream in{std::string(text)};
  std::string line, block;
  while (std::getline(in, line)) {
    if (detail::trim(line).empty()) {
      if (!block.empty()) out.push_back(parse_tableau(block));
      block.clear();
    } else {
      block += line + '\n';
    }
  }
  if (!block.empty()) out.push_back(parse_tableau(block));
  return out;
}

inline std::string to_text(const std::vector<IncreasingTableau>& ts) {
  std::string out;
  for (std::size_t i = 0; i < ts.size(); ++i) out += (i ? "\n" : "") + to_text(ts[i]);
  return out;
}

inline nlohmann::json to_json(const Partition& p) { return p.parts(); }

inline nlohmann::json to_json(const IncreasingTableau& t) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : t.rows()) {
    nlohmann::json r = nlohmann::json::array();
    for (int v : row) r.push_back(v == 0 ? nlohmann::json(nullptr) : nlohmann::json(v));
    rows.push_back(std::move(r));
  }
  return {{"outer", t.outer().parts()}, {"inner", t.inner().parts()}, {"rows", std::move(rows)}};
}

inline IncreasingTableau tableau_from_json(const nlohmann::json& j) {
  try {
    Partition outer(j.at("outer").get<std::vector<int>>());
    Partition inner(j.at("inner").get<std::vector<int>>());
    std::vector<std::vector<int>> rows;
    for (const auto& r : j.at("rows")) {
      std::vector<int> row;
      for (const auto& v : r) row.push_back(v.is_null() ? 0 : v.get<int>());
      rows.push_back(std::move(row));
    }
    if (static_cast<int>(rows.size()) != outer.length())
      throw error(errc::invalid_tableau, "row count differs from outer shape");
    for (int r = 0; r < outer.length(); ++r) {
      const auto& row = rows[static_cast<std::size_t>(r)];
      if (static_cast<int>(row.size()) != outer[r]) throw error(errc::invalid_tableau, "row length differs from outer shape");
      for (int c = 0; c < outer[r]; ++c)
        if ((c < inner[r]) != (row[static_cast<std::size_t>(c)] == 0))
          throw error(errc::invalid_tableau, "null cells must be exactly the inner shape");
    }
    return IncreasingTableau(SkewShape(outer, inner), std::move(rows));
  } catch (const nlohmann::json::exception& e) {
    throw error(errc::parse_error, e.what());
  }
}

/// Text or JSON, decided by the first non-blank character.
inline IncreasingTableau parse_tableau_any(std::string_view text) {
  const auto s = detail::trim(text);
  if (!s.empty() && s.front() == '{') {
    try {
      return tableau_from_json(nlohmann::json::parse(s));
    } catch (const nlohmann::json::parse_error& e) {
      throw error(errc::parse_error, e.what());
    }
  }
  return parse_tableau(text);
}

/// One slide per line; every integer on a line is read, taken in pairs as
/// r,c. Blank lines and lines starting with '#' are skipped.
inline RectificationOrder parse_slide_script(std::string_view text) {
  RectificationOrder order;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    const auto s = detail::trim(line);
    if (s.empty() || s.front() == '#') continue;
    std::vector<int> nums;
    std::string cur;
    for (char ch : std::string(s) + ' ') {
      if (ch == '-' || (ch >= '0' && ch <= '9')) {
        cur += ch;
      } else if (ch == ',' || ch == ' ' || ch == '\t' || ch == '(' || ch == ')' || ch == ';') {
        if (!cur.empty()) nums.push_back(detail::parse_int(cur, "slide script"));
        cur.clear();
      } else {
        throw error(errc::parse_error, "unexpected character in slide script: " + std::string(s));
      }
    }
    if (nums.size() % 2 != 0) throw error(errc::parse_error, "odd number of coordinates: " + std::string(s));
    std::vector<Box> step;
    for (std::size_t i = 0; i < nums.size(); i += 2) step.push_back({nums[i], nums[i + 1]});
    order.steps.push_back(std::move(step));
  }
  return order;
}

inline std::string to_slide_script(const RectificationOrder& order) {
  std::string out;
  for (const auto& step : order.steps) {
    for (std::size_t i = 0; i < step.size(); ++i) {
      if (i) out += ' ';
      out += std::to_string(step[i].row) + "," + std::to_string(step[i].col);
    }
    out += '\n';
  }
  return out;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw error(errc::parse_error, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace kjdt
