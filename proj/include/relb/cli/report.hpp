#pragma once

// Reports: command echo, config echo, scalar results and tables of strings.
// Rendered as plain text or JSON; both forms read back into a Report.

#include <istream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "relb/error.hpp"
#include "relb/cli/words.hpp"

namespace relb::cli {

using Fields = std::vector<std::pair<std::string, std::string>>;

struct Table {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;

  bool operator==(const Table&) const = default;
};

struct Report {
  std::string command;
  Fields config;
  Fields results;
  std::vector<Table> tables;
  int exit_status = 0;

  bool operator==(const Report&) const = default;

  void set(std::string key, std::string value) {
    results.emplace_back(std::move(key), std::move(value));
  }
  const std::string& get(const std::string& key) const {
    for (const auto& [k, v] : results)
      if (k == key)
        return v;
    throw PreconditionError("report has no result '" + key + "'");
  }
  const Table& table(const std::string& name) const {
    for (const auto& t : tables)
      if (t.name == name)
        return t;
    throw PreconditionError("report has no table '" + name + "'");
  }
};

// ---- text ------------------------------------------------------------------------

inline std::string render_text(const Report& r) {
  std::ostringstream os;
  os << "relb report\n";
  os << "command: " << r.command << "\n";
  os << "[config]\n";
  for (const auto& [k, v] : r.config)
    os << k << ": " << v << "\n";
  os << "[results]\n";
  for (const auto& [k, v] : r.results)
    os << k << ": " << v << "\n";
  for (const auto& t : r.tables) {
    os << "[table " << t.name << "]\n";
    auto line = [&](const std::vector<std::string>& cells) {
      for (std::size_t i = 0; i < cells.size(); ++i)
        os << (i ? " | " : "") << cells[i];
      os << "\n";
    };
    line(t.columns);
    for (const auto& row : t.rows)
      line(row);
  }
  os << "[end]\n";
  os << "exit: " << r.exit_status << "\n";
  return os.str();
}

namespace detail {

inline std::pair<std::string, std::string> key_value(const std::string& line) {
  auto sep = line.find(": ");
  if (sep == std::string::npos) {
    if (!line.empty() && line.back() == ':')
      return {line.substr(0, line.size() - 1), ""};
    throw ParseError("report line without 'key: value': " + line);
  }
  return {line.substr(0, sep), line.substr(sep + 2)};
}

inline std::vector<std::string> cells(const std::string& line) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (true) {
    auto bar = line.find(" | ", pos);
    if (bar == std::string::npos) {
      out.push_back(line.substr(pos));
      return out;
    }
    out.push_back(line.substr(pos, bar - pos));
    pos = bar + 3;
  }
}

} // namespace detail

inline Report read_text(std::istream& in) {
  Report r;
  std::string line;
  if (!std::getline(in, line) || line != "relb report")
    throw ParseError("not a relb text report");
  if (!std::getline(in, line))
    throw ParseError("truncated report");
  auto [ck, cv] = detail::key_value(line);
  if (ck != "command")
    throw ParseError("report is missing its command line");
  r.command = cv;
  enum { none, config, results, table, end } section = none;
  bool header = false;
  while (std::getline(in, line)) {
    if (line == "[config]") {
      section = config;
    } else if (line == "[results]") {
      section = results;
    } else if (line.rfind("[table ", 0) == 0 && line.back() == ']') {
      section = table;
      r.tables.push_back(Table{line.substr(7, line.size() - 8), {}, {}});
      header = true;
    } else if (line == "[end]") {
      section = end;
    } else if (section == config) {
      r.config.push_back(detail::key_value(line));
    } else if (section == results) {
      r.results.push_back(detail::key_value(line));
    } else if (section == table) {
      auto c = detail::cells(line);
      if (header) {
        r.tables.back().columns = std::move(c);
        header = false;
      } else {
        if (c.size() != r.tables.back().columns.size())
          throw ParseError("table row has the wrong number of cells: " + line);
        r.tables.back().rows.push_back(std::move(c));
      }
    } else if (section == end) {
      auto [k, v] = detail::key_value(line);
      if (k != "exit")
        throw ParseError("unexpected line after [end]: " + line);
      try {
        r.exit_status = std::stoi(v);
      } catch (const std::exception&) {
        throw ParseError("bad exit status '" + v + "'");
      }
      return r;
    } else {
      throw ParseError("unexpected report line: " + line);
    }
  }
  throw ParseError("report has no [end] section");
}

inline Report read_text(const std::string& text) {
  std::istringstream in(text);
  return read_text(in);
}

// ---- JSON --------------------------------------------------------------------------

inline nlohmann::ordered_json to_json(const Report& r) {
  nlohmann::ordered_json j;
  j["command"] = r.command;
  auto fields = [](const Fields& f) {
    auto o = nlohmann::ordered_json::object();
    for (const auto& [k, v] : f)
      o[k] = v;
    return o;
  };
  j["config"] = fields(r.config);
  j["results"] = fields(r.results);
  j["tables"] = nlohmann::ordered_json::array();
  for (const auto& t : r.tables)
    j["tables"].push_back({{"name", t.name}, {"columns", t.columns}, {"rows", t.rows}});
  j["exit"] = r.exit_status;
  return j;
}

inline std::string render_json(const Report& r) { return to_json(r).dump(2) + "\n"; }

inline Report read_json(const std::string& text) {
  nlohmann::ordered_json j;
  try {
    j = nlohmann::ordered_json::parse(text);
    Report r;
    r.command = j.at("command").get<std::string>();
    for (const auto& [k, v] : j.at("config").items())
      r.config.emplace_back(k, v.get<std::string>());
    for (const auto& [k, v] : j.at("results").items())
      r.results.emplace_back(k, v.get<std::string>());
    for (const auto& t : j.at("tables"))
      r.tables.push_back(Table{t.at("name").get<std::string>(),
                               t.at("columns").get<std::vector<std::string>>(),
                               t.at("rows").get<std::vector<std::vector<std::string>>>()});
    r.exit_status = j.at("exit").get<int>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad JSON report: ") + e.what());
  }
}

} // namespace relb::cli
