#include "amesh/errors.hpp"
#include "amesh/tables.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace amesh;

TEST_CASE("mesh tables round-trip in both formats") {
  const Mesh mesh = boundary_mesh(gallery("sun"), {3, 2.5, PointKind::extrema});
  for (const TableFormat f : {TableFormat::csv, TableFormat::json}) {
    const std::string doc = write_mesh(mesh, f);
    const Mesh back = read_mesh(doc);
    CHECK(back.points == mesh.points);
    CHECK(back.label == "sun");
    CHECK(back.params.n == 3);
    CHECK(back.params.m == 2.5);
    CHECK(back.params.kind == PointKind::extrema);
    CHECK(back.c == mesh.c);
    for (std::size_t i = 0; i < mesh.size(); ++i) {
      CHECK(back.provenance[i].arc == mesh.provenance[i].arc);
      CHECK(back.provenance[i].t == mesh.provenance[i].t);
    }
    CHECK(write_mesh(back, f) == doc);
  }
}

TEST_CASE("mesh CSV layout") {
  const Mesh mesh = boundary_mesh(testing::segment_domain(), {1, 2.0, PointKind::zeros});
  const std::string doc = write_mesh(mesh, TableFormat::csv);
  CHECK(doc.rfind("# type: mesh\n# label: segment\n# n: 1\n# m: 2\n# kind: zeros\n", 0) == 0);
  CHECK(doc.find("# c_m: 1.4142135623730949\n") != std::string::npos);
  CHECK(doc.find("re,im,arc_index,t\n-0.70710678118654746,0,0,-0.70710678118654746\n") !=
        std::string::npos);
}

TEST_CASE("node tables round-trip") {
  const Mesh mesh = boundary_mesh(gallery("lune"), {9, 4.0, PointKind::zeros});
  const NodeSet nodes = discrete_leja(mesh, 9);
  for (const TableFormat f : {TableFormat::csv, TableFormat::json}) {
    const std::string doc = write_nodes(nodes, f);
    const NodeSet back = read_nodes(doc);
    CHECK(back.nodes == nodes.nodes);
    CHECK(back.family == Family::discrete_leja);
    CHECK(back.n == 9);
    CHECK(back.label == "lune");
    CHECK(write_nodes(back, f) == doc);
  }
}

TEST_CASE("report tables round-trip") {
  const std::vector<ReportRow> rows{{"cardioid", "afp", 3, 4.0, 1.75, 1.75, 1.8941863505116895},
                                    {"lune", "ls", 50, 16.0, 0.1 + 0.2, 0.30000000000000004, 1e-300}};
  for (const TableFormat f : {TableFormat::csv, TableFormat::json}) {
    const std::string doc = write_report(rows, f);
    CHECK(read_report(doc) == rows);
    CHECK(write_report(read_report(doc), f) == doc);
  }
  CHECK(read_report(write_report({}, TableFormat::csv)).empty());
}

TEST_CASE("malformed tables") {
  CHECK_THROWS_AS(read_mesh("# type: nodes\norder,re,im\n"), ParseError);
  CHECK_THROWS_AS(read_report("# type: lebesgue\ndomain,family,n,m,value,lower,upper\nx,afp,1,4\n"),
                  ParseError);
  CHECK_THROWS_AS(
      read_report("# type: lebesgue\ndomain,family,n,m,value,lower,upper\nx,afp,one,4,1,1,1\n"),
      ParseError);
  CHECK_THROWS_AS(read_report("{\"type\": \"lebesgue\""), ParseError);
  CHECK_THROWS_AS(read_nodes("# type: nodes\n# label: x\n# family: afp\n# n: 1\n# m: 4\n"
                             "# kind: zeros\norder,re,im\n2,0,0\n"),
                  ParseError);
  CHECK_THROWS_AS(table_format_from_string("xml"), DomainError);
}
