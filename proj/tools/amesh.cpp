// amesh: admissible meshes, extremal nodes and certified Lebesgue constants.
//
// Exit status: 0 success, 1 runtime or numerical failure, 2 usage/validation.

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "amesh/errors.hpp"
#include "amesh/experiment.hpp"

namespace fs = std::filesystem;
using namespace amesh;

namespace {

std::string fmt17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void emit(const std::string& text, const std::string& out) {
  if (out.empty() || out == "-")
    std::cout << text;
  else
    write_file_atomic(out, text);
}

std::string ext(TableFormat f) { return f == TableFormat::csv ? ".csv" : ".json"; }

struct Common {
  std::string domain;
  int n = 0;
  double m = 4.0;
  std::string kind = "zeros";
  std::string format = "csv";
  std::string out;
};

void add_common(CLI::App* cmd, Common& c, bool with_n) {
  cmd->add_option("--domain", c.domain, "gallery name or boundary file")->required();
  if (with_n) cmd->add_option("--n", c.n, "polynomial degree")->required();
  cmd->add_option("--m", c.m, "oversampling factor (> 1)")->capture_default_str();
  cmd->add_option("--kind", c.kind, "zeros or extrema")->capture_default_str();
  cmd->add_option("--format", c.format, "csv or json")->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Admissible meshes, extremal node sets and certified Lebesgue constants"};
  app.require_subcommand(1);

  Common mesh_opt;
  auto* mesh_cmd = app.add_subcommand("mesh", "build the admissible mesh Z_n^m");
  add_common(mesh_cmd, mesh_opt, true);
  mesh_cmd->add_option("--out", mesh_opt.out, "output file (stdout if omitted)");

  Common ex_opt;
  std::string ex_families = "afp";
  auto* ex_cmd = app.add_subcommand("extract", "extract node families from the mesh");
  add_common(ex_cmd, ex_opt, true);
  ex_cmd->add_option("--families", ex_families, "comma list of afp, leja, pleja")
      ->capture_default_str();
  ex_cmd->add_option("--out", ex_opt.out, "output directory")->capture_default_str();
  ex_opt.out = ".";

  Common leb_opt;
  std::string leb_degrees = "1:50";
  std::string leb_families = "afp,leja,pleja,ls";
  std::optional<double> eval_m;
  auto* leb_cmd = app.add_subcommand("lebesgue", "certified Lebesgue constants");
  add_common(leb_cmd, leb_opt, false);
  leb_cmd->add_option("--degrees", leb_degrees, "n, a:b or a:b:step")->capture_default_str();
  leb_cmd->add_option("--families", leb_families, "comma list of afp, leja, pleja, ls")
      ->capture_default_str();
  leb_cmd->add_option("--eval-m", eval_m, "factor of an independent evaluation mesh");
  leb_cmd->add_option("--out", leb_opt.out, "output file (stdout if omitted)");

  std::string rep_out = "reproduce";
  std::string rep_format = "csv";
  std::uint64_t rep_seed = 0;
  int rep_max = 50;
  auto* rep_cmd = app.add_subcommand("reproduce", "run the full experiment suite");
  rep_cmd->add_option("--out", rep_out, "output directory")->capture_default_str();
  rep_cmd->add_option("--seed", rep_seed, "seed recorded in the manifest")->capture_default_str();
  rep_cmd->add_option("--format", rep_format, "csv or json")->capture_default_str();
  rep_cmd->add_option("--max-degree", rep_max, "largest degree")->capture_default_str();

  std::string gal_name;
  auto* gal_cmd = app.add_subcommand("gallery", "list gallery domains or print one");
  gal_cmd->add_option("--name", gal_name, "print this domain's boundary document");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*mesh_cmd) {
      const Boundary b = resolve_domain(mesh_opt.domain);
      const MeshParams p{mesh_opt.n, mesh_opt.m, point_kind_from_string(mesh_opt.kind)};
      const auto format = table_format_from_string(mesh_opt.format);
      p.validate();
      const Mesh mesh = boundary_mesh(b, p);
      emit(write_mesh(mesh, format), mesh_opt.out);
      (mesh_opt.out.empty() || mesh_opt.out == "-" ? std::cerr : std::cout)
          << "points: " << mesh.size() << "\nc_m: " << fmt17(mesh.c) << "\n";
    } else if (*ex_cmd) {
      const Boundary b = resolve_domain(ex_opt.domain);
      const MeshParams p{ex_opt.n, ex_opt.m, point_kind_from_string(ex_opt.kind)};
      const auto format = table_format_from_string(ex_opt.format);
      p.validate();
      const auto methods = parse_methods(ex_families);
      for (const Method method : methods)
        if (method == Method::ls) throw UsageError("extract: 'ls' has no node set");
      for (const Method method : methods) {
        const NodeSet nodes = extract_nodes(b, method, p);
        const fs::path path = fs::path(ex_opt.out) /
                              ("nodes_" + b.label() + "_" + std::string(to_string(method)) +
                               "_n" + std::to_string(p.n) + ext(format));
        write_file_atomic(path, write_nodes(nodes, format));
        std::cerr << path.string() << ": " << nodes.nodes.size() << " nodes\n";
      }
    } else if (*leb_cmd) {
      const Boundary b = resolve_domain(leb_opt.domain);
      const auto degrees = parse_degrees(leb_degrees);
      const auto methods = parse_methods(leb_families);
      const auto kind = point_kind_from_string(leb_opt.kind);
      const auto format = table_format_from_string(leb_opt.format);
      MeshParams{1, leb_opt.m, kind}.validate();
      if (eval_m) MeshParams{1, *eval_m, kind}.validate();
      emit(write_report(lebesgue_table(b, methods, degrees, leb_opt.m, kind, eval_m), format),
           leb_opt.out);
    } else if (*rep_cmd) {
      ReproduceOptions opt;
      opt.out_dir = rep_out;
      opt.seed = rep_seed;
      opt.format = table_format_from_string(rep_format);
      if (rep_max < 1 || rep_max > 200) throw DomainError("--max-degree must lie in [1, 200]");
      opt.max_degree = rep_max;
      opt.workers = default_workers();
      const auto s = reproduce(opt);
      std::cerr << s.rows << " rows, " << s.files.size() << " files in " << rep_out << "\n";
    } else if (*gal_cmd) {
      if (gal_name.empty())
        for (const auto& name : gallery_names()) std::cout << name << "\n";
      else
        std::cout << save_boundary(gallery(gal_name)) << "\n";
    }
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const LookupError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
