#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "amesh/chebmesh.hpp"
#include "amesh/extremal.hpp"

namespace amesh {

enum class TableFormat { csv, json };

std::string_view to_string(TableFormat format);
TableFormat table_format_from_string(std::string_view text);

/// One line of a Lebesgue table.  `m` is the factor of the evaluation mesh,
/// the one certifying [lower, upper].
struct ReportRow {
  std::string domain;
  std::string family;
  int n = 0;
  double m = 0.0;
  double value = 0.0;
  double lower = 0.0;
  double upper = 0.0;

  bool operator==(const ReportRow&) const = default;
};

// Writers emit every floating-point number with 17 significant digits.  CSV
// tables carry their metadata as leading "# key: value" lines.  Readers accept
// either format (a document starting with '{' is read as JSON).

/// Columns re, im, arc_index, t; header n, m, kind, c_m, label.
std::string write_mesh(const Mesh& mesh, TableFormat format = TableFormat::csv);
Mesh read_mesh(std::string_view document);

/// Columns order, re, im; header family, n, m, kind, label.  The node set's
/// basis and mesh indices are not part of the table.
std::string write_nodes(const NodeSet& nodes, TableFormat format = TableFormat::csv);
NodeSet read_nodes(std::string_view document);

/// Columns domain, family, n, m, value, lower, upper.
std::string write_report(const std::vector<ReportRow>& rows, TableFormat format = TableFormat::csv);
std::vector<ReportRow> read_report(std::string_view document);

}  // namespace amesh
