#include "amesh/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iterator>
#include <mutex>
#include <sstream>
#include <thread>

#include "amesh/errors.hpp"
#include "amesh/projection.hpp"
#include "json.hpp"
#include "numfmt.hpp"

namespace amesh {

namespace {

constexpr const char* tool_version = "1.0.0";

int parse_int(std::string_view s, std::string_view what) {
  int v = 0;
  const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || p != s.data() + s.size() || s.empty())
    throw DomainError("invalid " + std::string(what) + " '" + std::string(s) + "'");
  return v;
}

std::string format_m(double m) {
  std::ostringstream os;
  os << m;
  return os.str();
}

std::string extension(TableFormat f) { return f == TableFormat::csv ? ".csv" : ".json"; }

}  // namespace

std::string_view to_string(Method method) {
  switch (method) {
    case Method::afp: return "afp";
    case Method::leja: return "leja";
    case Method::pleja: return "pleja";
    case Method::ls: return "ls";
  }
  return "?";
}

Method method_from_string(std::string_view text) {
  for (const Method m : all_methods())
    if (to_string(m) == text) return m;
  throw DomainError("unknown family '" + std::string(text) + "'; valid: afp, leja, pleja, ls");
}

const std::vector<Method>& all_methods() {
  static const std::vector<Method> methods{Method::afp, Method::leja, Method::pleja, Method::ls};
  return methods;
}

std::vector<Method> parse_methods(std::string_view list) {
  std::vector<Method> out;
  std::size_t start = 0;
  while (start <= list.size()) {
    const auto comma = list.find(',', start);
    const auto item = list.substr(start, comma == std::string_view::npos ? list.npos : comma - start);
    const Method m = method_from_string(item);
    if (std::find(out.begin(), out.end(), m) != out.end())
      throw DomainError("family '" + std::string(item) + "' listed twice");
    out.push_back(m);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::vector<int> DegreeRange::values() const {
  std::vector<int> v;
  for (int n = first; n <= last; n += step) v.push_back(n);
  return v;
}

DegreeRange parse_degrees(std::string_view text) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto colon = text.find(':', start);
    parts.push_back(text.substr(start, colon == text.npos ? text.npos : colon - start));
    if (colon == text.npos) break;
    start = colon + 1;
  }
  if (parts.size() > 3) throw DomainError("degrees must look like n, a:b or a:b:step");
  DegreeRange r;
  r.first = parse_int(parts[0], "degree");
  r.last = parts.size() > 1 ? parse_int(parts[1], "degree") : r.first;
  r.step = parts.size() > 2 ? parse_int(parts[2], "degree step") : 1;
  if (r.first < 1 || r.last > 200 || r.first > r.last)
    throw DomainError("degrees must satisfy 1 <= first <= last <= 200");
  if (r.step < 1) throw DomainError("degree step must be positive");
  return r;
}

Boundary resolve_domain(const std::string& domain) {
  const auto& names = gallery_names();
  if (std::find(names.begin(), names.end(), domain) != names.end()) return gallery(domain);
  std::error_code ec;
  if (std::filesystem::exists(domain, ec) && !std::filesystem::is_directory(domain, ec)) {
    std::ifstream in(domain);
    const std::string doc((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return load_boundary(doc);
  }
  return gallery(domain);  // throws LookupError listing the gallery
}

NodeSet extract_nodes(const Boundary& boundary, Method method, const MeshParams& params) {
  params.validate();
  switch (method) {
    case Method::afp: return approximate_fekete(boundary_mesh(boundary, params), params.n);
    case Method::leja: return discrete_leja(boundary_mesh(boundary, params), params.n);
    case Method::pleja: return pseudo_leja(boundary, params.n, params.m, params.kind);
    case Method::ls: break;
  }
  throw UsageError("least squares has no node set; use afp, leja or pleja");
}

ReportRow lebesgue_row(const Boundary& boundary, Method method, const MeshParams& params,
                       std::optional<double> eval_m) {
  params.validate();
  const Mesh mesh = boundary_mesh(boundary, params);
  const Mesh eval_mesh =
      eval_m ? boundary_mesh(boundary, {params.n, *eval_m, params.kind}) : mesh;

  LebesgueReport rep;
  if (method == Method::ls) {
    rep = lebesgue_constant(make_least_squares(mesh, params.n), eval_mesh);
  } else {
    const NodeSet nodes = method == Method::pleja
                              ? pseudo_leja(boundary, params.n, params.m, params.kind)
                          : method == Method::afp ? approximate_fekete(mesh, params.n)
                                                  : discrete_leja(mesh, params.n);
    rep = lebesgue_constant(make_interpolant(nodes), eval_mesh);
  }
  return {boundary.label(), std::string(to_string(method)), params.n, eval_mesh.params.m,
          rep.value, rep.lower, rep.upper};
}

std::vector<ReportRow> lebesgue_table(const Boundary& boundary, const std::vector<Method>& methods,
                                      const DegreeRange& degrees, double m, PointKind kind,
                                      std::optional<double> eval_m) {
  std::vector<ReportRow> rows;
  for (const Method method : methods)
    for (const int n : degrees.values())
      rows.push_back(lebesgue_row(boundary, method, {n, m, kind}, eval_m));
  return rows;
}

void write_file_atomic(const std::filesystem::path& path, const std::string& content) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot open " + tmp.string() + " for writing");
    out << content;
    if (!out.flush()) throw Error("write to " + tmp.string() + " failed");
  }
  std::filesystem::rename(tmp, path);
}

unsigned default_workers() {
  if (const char* env = std::getenv("AMESH_WORKERS")) {
    const int v = std::atoi(env);
    if (v >= 1) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

ReproduceSummary reproduce(const ReproduceOptions& options) {
  using clock = std::chrono::steady_clock;
  const auto t0 = clock::now();
  std::filesystem::create_directories(options.out_dir);
  const auto ext = extension(options.format);
  const auto& domains = gallery_names();
  const auto& methods = all_methods();

  struct Job {
    std::string domain;
    Method method;
    std::vector<ReportRow> rows;
    double seconds = 0.0;
    std::string error;
  };
  std::vector<Job> jobs;
  for (const auto& d : domains)
    for (const Method m : methods) jobs.push_back({d, m, {}, 0.0, {}});

  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  auto worker = [&] {
    for (std::size_t j = next++; j < jobs.size() && !failed; j = next++) {
      Job& job = jobs[j];
      const auto start = clock::now();
      const Boundary boundary = gallery(job.domain);
      int n = 1;
      try {
        for (; n <= options.max_degree; ++n)
          job.rows.push_back(lebesgue_row(boundary, job.method, {n, options.m, options.kind}));
        write_file_atomic(options.out_dir / ("lebesgue_" + job.domain + "_" +
                                             std::string(to_string(job.method)) + ext),
                          write_report(job.rows, options.format));
      } catch (const std::exception& e) {
        job.error = "reproduce failed at (" + job.domain + ", " +
                    std::string(to_string(job.method)) + ", n=" + std::to_string(n) +
                    "): " + e.what();
        failed = true;
      }
      job.seconds = std::chrono::duration<double>(clock::now() - start).count();
    }
  };
  {
    std::vector<std::jthread> pool;
    const unsigned count = std::max(1u, std::min<unsigned>(options.workers, jobs.size()));
    for (unsigned w = 0; w < count; ++w) pool.emplace_back(worker);
  }
  for (const auto& job : jobs)
    if (!job.error.empty()) throw Error(job.error);

  ReproduceSummary summary;
  std::vector<ReportRow> all;
  for (const auto& job : jobs) {
    all.insert(all.end(), job.rows.begin(), job.rows.end());
    summary.files.push_back(options.out_dir / ("lebesgue_" + job.domain + "_" +
                                               std::string(to_string(job.method)) + ext));
  }
  const auto combined = options.out_dir / ("lebesgue" + ext);
  write_file_atomic(combined, write_report(all, options.format));
  summary.files.push_back(combined);
  summary.rows = all.size();

  // Figure data: the degree-20 mesh with m = 2 and its approximate Fekete points.
  const std::string tag = "_n" + std::to_string(options.figure_degree) + "_m" +
                          format_m(options.figure_m);
  for (const auto& d : domains) {
    const Mesh mesh = boundary_mesh(gallery(d), {options.figure_degree, options.figure_m,
                                                 options.kind});
    const auto mesh_path = options.out_dir / ("mesh_" + d + tag + ext);
    const auto nodes_path = options.out_dir / ("nodes_" + d + "_afp" + tag + ext);
    write_file_atomic(mesh_path, write_mesh(mesh, options.format));
    write_file_atomic(nodes_path,
                      write_nodes(approximate_fekete(mesh, options.figure_degree), options.format));
    summary.files.push_back(mesh_path);
    summary.files.push_back(nodes_path);
  }

  summary.seconds = std::chrono::duration<double>(clock::now() - t0).count();

  nlohmann::ordered_json manifest;
  manifest["tool"] = "amesh";
  manifest["version"] = tool_version;
  manifest["seed"] = options.seed;
  manifest["m"] = options.m;
  manifest["c_m"] = detail::fmt17(norming_constant(options.m));
  manifest["kind"] = std::string(to_string(options.kind));
  manifest["degrees"] = {1, options.max_degree};
  manifest["figure"] = {{"n", options.figure_degree}, {"m", options.figure_m}};
  manifest["domains"] = domains;
  std::vector<std::string> fams;
  for (const Method m : methods) fams.emplace_back(to_string(m));
  manifest["families"] = fams;
  manifest["workers"] = options.workers;
  manifest["rows"] = summary.rows;
  auto& jl = manifest["jobs"] = nlohmann::ordered_json::array();
  for (const auto& job : jobs)
    jl.push_back({{"domain", job.domain},
                  {"family", std::string(to_string(job.method))},
                  {"rows", job.rows.size()},
                  {"seconds", job.seconds}});
  manifest["total_seconds"] = summary.seconds;
  const auto manifest_path = options.out_dir / "manifest.json";
  write_file_atomic(manifest_path, manifest.dump(2) + "\n");
  summary.files.push_back(manifest_path);
  return summary;
}

}  // namespace amesh
