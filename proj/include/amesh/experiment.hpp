#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "amesh/chebmesh.hpp"
#include "amesh/extremal.hpp"
#include "amesh/geometry.hpp"
#include "amesh/tables.hpp"

namespace amesh {

/// Node families as named on the command line; `ls` is least squares on the
/// whole extraction mesh.
enum class Method { afp, leja, pleja, ls };

std::string_view to_string(Method method);
Method method_from_string(std::string_view text);
/// Comma-separated list, e.g. "afp,leja,pleja"; duplicates rejected.
std::vector<Method> parse_methods(std::string_view list);
const std::vector<Method>& all_methods();

struct DegreeRange {
  int first = 1;
  int last = 1;
  int step = 1;

  std::vector<int> values() const;
};

/// "n", "a:b" or "a:b:step"; every degree must lie in [1, 200].
DegreeRange parse_degrees(std::string_view text);

/// Gallery name, or else the path of a boundary document.
Boundary resolve_domain(const std::string& domain);

/// Nodes of one family extracted from Z_n^m (pleja uses Z_1^m..Z_n^m).
NodeSet extract_nodes(const Boundary& boundary, Method method, const MeshParams& params);

/// Certified Lebesgue constant of one (family, degree).  The evaluation mesh
/// is the extraction mesh unless eval_m is given.
ReportRow lebesgue_row(const Boundary& boundary, Method method, const MeshParams& params,
                       std::optional<double> eval_m = std::nullopt);

std::vector<ReportRow> lebesgue_table(const Boundary& boundary, const std::vector<Method>& methods,
                                      const DegreeRange& degrees, double m, PointKind kind,
                                      std::optional<double> eval_m = std::nullopt);

/// Writes `content` to a temporary sibling file and renames it into place.
void write_file_atomic(const std::filesystem::path& path, const std::string& content);

/// Worker count from AMESH_WORKERS, else the hardware concurrency (at least 1).
unsigned default_workers();

struct ReproduceOptions {
  std::filesystem::path out_dir = "reproduce";
  int max_degree = 50;
  double m = 4.0;
  double figure_m = 2.0;
  int figure_degree = 20;
  PointKind kind = PointKind::zeros;
  TableFormat format = TableFormat::csv;
  std::uint64_t seed = 0;
  unsigned workers = 1;
};

struct ReproduceSummary {
  std::size_t rows = 0;
  std::vector<std::filesystem::path> files;
  double seconds = 0.0;
};

/// Runs every gallery domain and family for n = 1..max_degree and writes
/// per-job tables, a combined table, figure meshes/nodes and manifest.json.
/// Throws Error naming the failing (domain, family, n) if any run fails.
ReproduceSummary reproduce(const ReproduceOptions& options);

}  // namespace amesh
