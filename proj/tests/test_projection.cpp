#include <cmath>
#include <random>

#include "amesh/errors.hpp"
#include "amesh/projection.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace amesh;

namespace {

std::vector<cplx> random_points(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<cplx> z(count);
  for (auto& v : z) v = testing::unit_square(rng);
  return z;
}

// Random p in P_n through its values: shifted-scaled monomial coefficients.
struct Poly {
  std::vector<cplx> coef;
  BasisSpec spec;
  cplx operator()(cplx z) const {
    cplx s{};
    const cplx u = (z - spec.center) / spec.scale;
    for (auto it = coef.rbegin(); it != coef.rend(); ++it) s = s * u + *it;
    return s;
  }
  std::vector<cplx> at(std::span<const cplx> z) const {
    std::vector<cplx> v;
    for (const auto& x : z) v.push_back((*this)(x));
    return v;
  }
};

Poly random_poly(int n, const BasisSpec& spec, std::mt19937_64& rng) {
  Poly p{std::vector<cplx>(n + 1), spec};
  for (auto& c : p.coef) c = testing::unit_square(rng);
  return p;
}

double sup(std::span<const cplx> v) {
  double s = 0.0;
  for (const auto& x : v) s = std::max(s, std::abs(x));
  return s;
}

}  // namespace

TEST_CASE("interpolation reproduces polynomials") {
  const std::vector<cplx> nodes{cplx(-1, 0.2), cplx(0.4, 0.9), cplx(0.7, -0.5)};
  std::vector<cplx> vals;
  for (const auto& z : nodes) vals.push_back(z * z);
  const auto op = make_interpolant(nodes, vals);
  for (const auto& z : random_points(100, 3)) CHECK(std::abs(op(z) - z * z) <= 1e-12);

  const std::vector<cplx> ones(3, 1.0);
  const auto one = make_interpolant(nodes, ones);
  for (const auto& z : random_points(100, 4)) {
    CHECK(std::abs(one(z) - 1.0) <= 1e-12);
    cplx s{};
    for (const auto& phi : one.fundamental_functions(z)) s += phi;
    CHECK(std::abs(s - 1.0) <= 1e-12);
  }
}

TEST_CASE("AFP nodes beat equispaced nodes on the Runge function") {
  auto runge = [](cplx z) { return 1.0 / (1.0 + 25.0 * z * z); };
  const Mesh mesh = boundary_mesh(testing::segment_domain(), {10, 4.0, PointKind::zeros});
  const NodeSet afp = approximate_fekete(mesh, 10);
  std::vector<cplx> equi;
  for (int i = 0; i <= 10; ++i) equi.push_back(-1.0 + i / 5.0);
  auto values = [&](std::span<const cplx> z) {
    std::vector<cplx> v;
    for (const auto& x : z) v.push_back(runge(x));
    return v;
  };
  const auto p_afp = make_interpolant(afp, values(afp.nodes));
  const auto p_equi = make_interpolant(equi, values(equi));
  double e_afp = 0.0, e_equi = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const cplx x = -1.0 + 2.0 * i / 999.0;
    e_afp = std::max(e_afp, std::abs(p_afp(x) - runge(x)));
    e_equi = std::max(e_equi, std::abs(p_equi(x) - runge(x)));
  }
  CHECK(e_afp < e_equi);
}

TEST_CASE("least squares with n+1 samples is interpolation") {
  const auto pts = random_points(6, 10);
  Mesh mesh;
  mesh.points = pts;
  mesh.provenance.resize(pts.size());
  mesh.params = {5, 4.0, PointKind::zeros};
  std::vector<cplx> f;
  for (const auto& z : pts) f.push_back(std::exp(z));
  const auto ls = make_least_squares(mesh, 5, f);
  const auto ip = make_interpolant(pts, f);
  for (const auto& z : random_points(50, 11)) CHECK(std::abs(ls(z) - ip(z)) <= 1e-10);
}

TEST_CASE("projection identity for random polynomials") {
  std::mt19937_64 rng(77);
  for (const auto& name : {"cardioid", "m_polygon", "sun"}) {
    for (int n : {3, 15, 30}) {
      const Mesh mesh = boundary_mesh(gallery(name), {n, 4.0, PointKind::zeros});
      const Mesh probe = boundary_mesh(gallery(name), {n, 2000.0 / (n * 4.0) + 1.5,
                                                       PointKind::extrema});
      const NodeSet nodes = approximate_fekete(mesh, n);
      const BasisSpec spec = basis_spec(mesh.points, n);
      for (int trial = 0; trial < 50; ++trial) {
        const Poly p = random_poly(n, spec, rng);
        auto ip = make_interpolant(nodes, p.at(nodes.nodes));
        auto ls = make_least_squares(mesh, n, p.at(mesh.points));
        const auto exact = p.at(probe.points);
        const double scale = sup(exact);
        const auto a = ip.evaluate(probe.points);
        const auto b = ls.evaluate(probe.points);
        double ea = 0.0, eb = 0.0;
        for (std::size_t i = 0; i < exact.size(); ++i) {
          ea = std::max(ea, std::abs(a[i] - exact[i]));
          eb = std::max(eb, std::abs(b[i] - exact[i]));
        }
        CAPTURE(name);
        CAPTURE(n);
        CHECK(ea <= 1e-8 * scale);
        CHECK(eb <= 1e-8 * scale);
      }
    }
  }
}

TEST_CASE("constant data gives a constant least-squares fit") {
  const Mesh mesh = boundary_mesh(gallery("lune"), {12, 4.0, PointKind::zeros});
  const std::vector<cplx> c(mesh.size(), cplx(2.5, -1.0));
  const auto ls = make_least_squares(mesh, 12, c);
  for (const auto& z : random_points(50, 5)) CHECK(std::abs(ls(z) - cplx(2.5, -1.0)) <= 1e-10);
}

TEST_CASE("cardinal property of interpolation") {
  for (const auto& name : gallery_names()) {
    const int n = 25;
    const NodeSet nodes = discrete_leja(boundary_mesh(gallery(name), {n, 4.0, PointKind::zeros}), n);
    const auto op = make_interpolant(nodes);
    for (std::size_t j = 0; j < nodes.nodes.size(); ++j) {
      const auto phi = op.fundamental_functions(nodes.nodes[j]);
      for (std::size_t i = 0; i < phi.size(); ++i)
        CHECK(std::abs(phi[i] - (i == j ? 1.0 : 0.0)) <= 1e-10);
      CHECK(lebesgue_function(op, nodes.nodes[j]) >= 1.0 - 1e-10);
    }
  }
}

TEST_CASE("least squares is stationary under coefficient perturbations") {
  const Mesh mesh = boundary_mesh(gallery("curvpolygon"), {6, 4.0, PointKind::zeros});
  std::vector<cplx> f;
  for (const auto& z : mesh.points) f.push_back(std::sin(3.0 * z) + std::conj(z));
  std::vector<double> w(mesh.size());
  for (std::size_t i = 0; i < w.size(); ++i) w[i] = 1.0 + 0.5 * std::sin(static_cast<double>(i));
  const auto op = make_least_squares(mesh, 6, f, w);
  const auto& pi = op.basis_at_samples();
  auto residual = [&](const std::vector<cplx>& c) {
    double r = 0.0;
    for (std::size_t i = 0; i < mesh.size(); ++i) {
      cplx p{};
      for (std::size_t k = 0; k < c.size(); ++k) p += c[k] * pi(i, k);
      r += w[i] * std::norm(f[i] - p);
    }
    return r;
  };
  const double base = residual(op.coefficients());
  for (std::size_t k = 0; k < op.coefficients().size(); ++k) {
    for (const cplx d : {cplx(1e-6), cplx(-1e-6), cplx(0, 1e-6), cplx(0, -1e-6)}) {
      auto c = op.coefficients();
      c[k] += d;
      CHECK(residual(c) >= base);
    }
  }
}

TEST_CASE("Lebesgue function by hand") {
  const std::vector<cplx> nodes{-1.0, 1.0};
  const auto op = make_interpolant(nodes);
  CHECK(lebesgue_function(op, 0.0) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(lebesgue_function(op, 3.0) == doctest::Approx(3.0).epsilon(1e-14));

  const std::vector<cplx> single{cplx(0.3, 0.1)};
  const auto one = make_interpolant(single);
  CHECK(lebesgue_function(one, cplx(5, 5)) == doctest::Approx(1.0).epsilon(1e-14));
  const Mesh mesh = boundary_mesh(testing::circle_domain(), {1, 4.0, PointKind::zeros});
  const auto rep = lebesgue_constant(one, mesh);
  CHECK(rep.value == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("Lebesgue constant at Chebyshev extrema on the interval") {
  const Boundary seg = testing::segment_domain();
  const int n = 10;
  std::vector<cplx> nodes;
  for (const double u : chebyshev_points(n, PointKind::extrema)) nodes.push_back(u);
  const auto op = make_interpolant(nodes, {}, "segment");
  const Mesh eval = boundary_mesh(seg, {n, 16.0, PointKind::zeros});
  const auto rep = lebesgue_constant(op, eval);
  double fine = 0.0;
  for (int i = 0; i <= 100000; ++i) fine = std::max(fine, lebesgue_function(op, -1.0 + 2e-5 * i));
  CHECK(fine >= rep.lower - 1e-12);
  CHECK(fine <= rep.upper + 1e-12);
  const double classical = 2.0 / M_PI * std::log(n) + 0.9625;
  CHECK(std::abs(rep.value - classical) / classical < 0.1);
}

TEST_CASE("report fields and the two formulas") {
  for (const auto& name : gallery_names()) {
    for (int n : {1, 8, 29}) {
      const Mesh mesh = boundary_mesh(gallery(name), {n, 4.0, PointKind::zeros});
      const auto ip = make_interpolant(approximate_fekete(mesh, n));
      const auto ls = make_least_squares(mesh, n);
      for (const auto* op : {&ip, &ls}) {
        const auto rep = lebesgue_constant(*op, mesh);
        CAPTURE(name);
        CAPTURE(n);
        CHECK(std::abs(rep.value - rep.direct_value) <= 1e-10 * rep.value);
        CHECK(rep.lower == rep.value);
        CHECK(rep.upper == norming_constant(4.0) * rep.value);
        CHECK(rep.eval_size == mesh.size());
        CHECK(rep.label == name);
        CHECK(rep.argmax < mesh.size());
        CHECK(lebesgue_function(*op, mesh.points[rep.argmax]) ==
              doctest::Approx(rep.value).epsilon(1e-10));
        // Sandwich.  The m = 16 mesh never exceeds the certified upper bound and
        // its own certificate reaches the lower one; the m = 12 zeros contain
        // the m = 4 zeros, so that refinement cannot drop below the lower bound.
        const auto ref = lebesgue_constant(*op, boundary_mesh(gallery(name), {n, 16.0}));
        CHECK(ref.value <= rep.upper + 1e-9);
        CHECK(ref.upper >= rep.lower - 1e-9);
        const auto nested = lebesgue_constant(*op, boundary_mesh(gallery(name), {n, 12.0}));
        CHECK(nested.value >= rep.lower - 1e-9);
        CHECK(nested.value <= rep.upper + 1e-9);
      }
    }
  }
}

TEST_CASE("certified intervals") {
  const auto [lo, hi] = certified_interval(10.0, 4.0);
  CHECK(lo == 10.0);
  CHECK(hi == doctest::Approx(10.823922002923940).epsilon(1e-15));
  CHECK(certified_interval(0.0, 3.0) == std::pair<double, double>{0.0, 0.0});
  double prev = INFINITY;
  for (double m : {2.0, 4.0, 16.0, 256.0, 1e6}) {
    const auto [a, b] = certified_interval(1.0, m);
    CHECK(b - a < prev);
    prev = b - a;
  }
  CHECK(prev < 1e-10);
  CHECK_THROWS_AS(certified_interval(-1.0, 4.0), DomainError);
}

TEST_CASE("misuse is reported") {
  const Mesh lune = boundary_mesh(gallery("lune"), {4, 4.0, PointKind::zeros});
  const Mesh card = boundary_mesh(gallery("cardioid"), {4, 4.0, PointKind::zeros});
  const auto op = make_least_squares(lune, 4);
  CHECK_THROWS_AS(lebesgue_constant(op, card), UsageError);
  CHECK_THROWS_AS(op(0.0), UsageError);

  const std::vector<cplx> dup{0.0, 1.0, 1.0};
  CHECK_THROWS_AS(make_interpolant(dup), Error);
  NodeSet bare;
  bare.nodes = {0.0, 1.0};
  CHECK_THROWS_AS(make_interpolant(bare), UsageError);
}
