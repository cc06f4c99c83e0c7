#include "amesh/tables.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <sstream>

#include "amesh/errors.hpp"
#include "json.hpp"
#include "numfmt.hpp"

namespace amesh {

using detail::fmt17;
using json = nlohmann::json;

std::string_view to_string(TableFormat format) {
  return format == TableFormat::csv ? "csv" : "json";
}

TableFormat table_format_from_string(std::string_view text) {
  if (text == "csv") return TableFormat::csv;
  if (text == "json") return TableFormat::json;
  throw DomainError("format must be 'csv' or 'json', got '" + std::string(text) + "'");
}

namespace {

// A table is a type tag, ordered metadata, column names and rows of cells.
// Cells are kept as text so numbers round-trip exactly through both formats.
struct Table {
  std::string type;
  std::vector<std::pair<std::string, std::string>> meta;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  std::vector<bool> numeric;  // per column: emit as JSON number or string

  const std::string& get(const std::string& key) const {
    for (const auto& [k, v] : meta)
      if (k == key) return v;
    throw ParseError("missing header entry", -1, key);
  }
};

std::string quote(const std::string& s) { return json(s).dump(); }

std::string emit(const Table& t, TableFormat format) {
  std::string out;
  if (format == TableFormat::csv) {
    out += "# type: " + t.type + "\n";
    for (const auto& [k, v] : t.meta) out += "# " + k + ": " + v + "\n";
    for (std::size_t j = 0; j < t.columns.size(); ++j) out += (j ? "," : "") + t.columns[j];
    out += '\n';
    for (const auto& row : t.rows) {
      for (std::size_t j = 0; j < row.size(); ++j) out += (j ? "," : "") + row[j];
      out += '\n';
    }
    return out;
  }
  out += "{\n  \"type\": " + quote(t.type) + ",\n  \"meta\": {";
  for (std::size_t j = 0; j < t.meta.size(); ++j)
    out += (j ? ", " : "") + quote(t.meta[j].first) + ": " + quote(t.meta[j].second);
  out += "},\n  \"columns\": [";
  for (std::size_t j = 0; j < t.columns.size(); ++j) out += (j ? ", " : "") + quote(t.columns[j]);
  out += "],\n  \"rows\": [";
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    out += r ? ",\n    [" : "\n    [";
    for (std::size_t j = 0; j < t.rows[r].size(); ++j) {
      out += j ? ", " : "";
      out += t.numeric[j] ? t.rows[r][j] : quote(t.rows[r][j]);
    }
    out += ']';
  }
  out += "\n  ]\n}\n";
  return out;
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string cell;
  std::istringstream in(line);
  while (std::getline(in, cell, sep)) out.push_back(trim(cell));
  if (!line.empty() && line.back() == sep) out.emplace_back();
  return out;
}

Table parse_csv(std::string_view doc) {
  Table t;
  std::istringstream in{std::string(doc)};
  std::string line;
  bool have_columns = false;
  while (std::getline(in, line)) {
    const std::string l = trim(line);
    if (l.empty()) continue;
    if (l.front() == '#') {
      const auto colon = l.find(':');
      if (colon == std::string::npos) throw ParseError("header line without ':'", -1, l);
      const std::string key = trim(std::string_view(l).substr(1, colon - 1));
      const std::string value = trim(std::string_view(l).substr(colon + 1));
      if (key == "type")
        t.type = value;
      else
        t.meta.emplace_back(key, value);
      continue;
    }
    if (!have_columns) {
      t.columns = split(l, ',');
      have_columns = true;
      continue;
    }
    auto cells = split(l, ',');
    if (cells.size() != t.columns.size())
      throw ParseError("row " + std::to_string(t.rows.size()) + " has " +
                           std::to_string(cells.size()) + " cells",
                       -1, "rows");
    t.rows.push_back(std::move(cells));
  }
  if (!have_columns) throw ParseError("missing column header line", -1, "columns");
  return t;
}

Table parse_json(std::string_view doc) {
  json root;
  try {
    root = json::parse(doc);
  } catch (const json::parse_error& e) {
    throw ParseError(e.what(), -1, "");
  }
  Table t;
  try {
    t.type = root.at("type").get<std::string>();
    for (const auto& [k, v] : root.at("meta").items()) t.meta.emplace_back(k, v.get<std::string>());
    t.columns = root.at("columns").get<std::vector<std::string>>();
    for (const auto& row : root.at("rows")) {
      if (!row.is_array() || row.size() != t.columns.size())
        throw ParseError("row has wrong number of cells", -1, "rows");
      std::vector<std::string> cells;
      for (const auto& c : row) {
        if (c.is_string())
          cells.push_back(c.get<std::string>());
        else if (c.is_number_integer())
          cells.push_back(std::to_string(c.get<long long>()));
        else if (c.is_number())
          cells.push_back(fmt17(c.get<double>()));
        else
          throw ParseError("unexpected cell value", -1, "rows");
      }
      t.rows.push_back(std::move(cells));
    }
  } catch (const json::exception& e) {
    throw ParseError(e.what(), -1, "");
  }
  return t;
}

Table parse(std::string_view doc, const std::string& expected_type,
            const std::vector<std::string>& expected_columns) {
  const auto first = doc.find_first_not_of(" \t\r\n");
  Table t = (first != std::string_view::npos && doc[first] == '{') ? parse_json(doc)
                                                                     : parse_csv(doc);
  if (t.type != expected_type)
    throw ParseError("expected a '" + expected_type + "' table, got '" + t.type + "'", -1, "type");
  if (t.columns != expected_columns) throw ParseError("unexpected columns", -1, "columns");
  return t;
}

double to_double(const std::string& s, const std::string& field) {
  try {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ParseError("not a number: '" + s + "'", -1, field);
  }
}

long to_long(const std::string& s, const std::string& field) {
  long v = 0;
  const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || p != s.data() + s.size())
    throw ParseError("not an integer: '" + s + "'", -1, field);
  return v;
}

Family family_from_string(const std::string& s) {
  for (const Family f : {Family::afp, Family::discrete_leja, Family::pseudo_leja})
    if (to_string(f) == s) return f;
  throw ParseError("unknown family '" + s + "'", -1, "family");
}

MeshParams read_params(const Table& t) {
  MeshParams p;
  p.n = static_cast<int>(to_long(t.get("n"), "n"));
  p.m = to_double(t.get("m"), "m");
  try {
    p.kind = point_kind_from_string(t.get("kind"));
  } catch (const DomainError& e) {
    throw ParseError(e.what(), -1, "kind");
  }
  return p;
}

}  // namespace

std::string write_mesh(const Mesh& mesh, TableFormat format) {
  Table t;
  t.type = "mesh";
  t.meta = {{"label", mesh.label},
            {"n", std::to_string(mesh.params.n)},
            {"m", fmt17(mesh.params.m)},
            {"kind", std::string(to_string(mesh.params.kind))},
            {"c_m", fmt17(mesh.c)},
            {"points", std::to_string(mesh.size())}};
  t.columns = {"re", "im", "arc_index", "t"};
  t.numeric = {true, true, true, true};
  for (std::size_t i = 0; i < mesh.size(); ++i)
    t.rows.push_back({fmt17(mesh.points[i].real()), fmt17(mesh.points[i].imag()),
                      std::to_string(mesh.provenance[i].arc), fmt17(mesh.provenance[i].t)});
  return emit(t, format);
}

Mesh read_mesh(std::string_view document) {
  const Table t = parse(document, "mesh", {"re", "im", "arc_index", "t"});
  Mesh mesh;
  mesh.label = t.get("label");
  mesh.params = read_params(t);
  mesh.c = to_double(t.get("c_m"), "c_m");
  for (const auto& r : t.rows) {
    mesh.points.emplace_back(to_double(r[0], "re"), to_double(r[1], "im"));
    const long arc = to_long(r[2], "arc_index");
    if (arc < 0) throw ParseError("negative arc index", -1, "arc_index");
    mesh.provenance.push_back({static_cast<std::size_t>(arc), to_double(r[3], "t")});
  }
  return mesh;
}

std::string write_nodes(const NodeSet& nodes, TableFormat format) {
  Table t;
  t.type = "nodes";
  t.meta = {{"label", nodes.label},
            {"family", std::string(to_string(nodes.family))},
            {"n", std::to_string(nodes.n)},
            {"m", fmt17(nodes.params.m)},
            {"kind", std::string(to_string(nodes.params.kind))}};
  t.columns = {"order", "re", "im"};
  t.numeric = {true, true, true};
  for (std::size_t i = 0; i < nodes.nodes.size(); ++i)
    t.rows.push_back(
        {std::to_string(i + 1), fmt17(nodes.nodes[i].real()), fmt17(nodes.nodes[i].imag())});
  return emit(t, format);
}

NodeSet read_nodes(std::string_view document) {
  const Table t = parse(document, "nodes", {"order", "re", "im"});
  NodeSet out;
  out.label = t.get("label");
  out.family = family_from_string(t.get("family"));
  out.params = read_params(t);
  out.n = out.params.n;
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    const auto& r = t.rows[i];
    if (to_long(r[0], "order") != static_cast<long>(i) + 1)
      throw ParseError("rows out of selection order", -1, "order");
    out.nodes.emplace_back(to_double(r[1], "re"), to_double(r[2], "im"));
  }
  return out;
}

std::string write_report(const std::vector<ReportRow>& rows, TableFormat format) {
  Table t;
  t.type = "lebesgue";
  t.columns = {"domain", "family", "n", "m", "value", "lower", "upper"};
  t.numeric = {false, false, true, true, true, true, true};
  for (const auto& r : rows)
    t.rows.push_back({r.domain, r.family, std::to_string(r.n), fmt17(r.m), fmt17(r.value),
                      fmt17(r.lower), fmt17(r.upper)});
  return emit(t, format);
}

std::vector<ReportRow> read_report(std::string_view document) {
  const Table t =
      parse(document, "lebesgue", {"domain", "family", "n", "m", "value", "lower", "upper"});
  std::vector<ReportRow> rows;
  for (const auto& r : t.rows)
    rows.push_back({r[0], r[1], static_cast<int>(to_long(r[2], "n")), to_double(r[3], "m"),
                    to_double(r[4], "value"), to_double(r[5], "lower"), to_double(r[6], "upper")});
  return rows;
}

}  // namespace amesh
