#include "amesh/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "amesh/errors.hpp"
#include "json.hpp"
#include "numfmt.hpp"

namespace amesh {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

bool is_finite(cplx z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

void check_interval(ArcKind kind, double a, double b) {
  if (!std::isfinite(a) || !std::isfinite(b) || !(b > a))
    throw DomainError("arc interval must satisfy a < b");
  if (kind == ArcKind::trigonometric && b - a > two_pi)
    throw DomainError("trigonometric arc interval longer than 2*pi");
}

// Cubic Bezier control points -> power-basis coefficients on t in [0,1].
Arc bezier3(cplx p0, cplx p1, cplx p2, cplx p3) {
  return Arc::algebraic({p0, 3.0 * (p1 - p0), 3.0 * (p0 - 2.0 * p1 + p2),
                         p3 - p0 + 3.0 * (p1 - p2)},
                        0.0, 1.0);
}

Boundary closed_polygon(std::string label, const std::vector<cplx>& vertices) {
  std::vector<Arc> arcs;
  for (std::size_t j = 0; j < vertices.size(); ++j)
    arcs.push_back(segment(vertices[j], vertices[(j + 1) % vertices.size()]));
  return Boundary(std::move(label), std::move(arcs));
}

// Twelve-vertex "M" inscribed in [-1,1]^2, counterclockwise.
Boundary make_m_polygon() {
  return closed_polygon("m_polygon", {{-1.0, -1.0},
                                      {-0.6, -1.0},
                                      {-0.6, 0.2},
                                      {0.0, -0.6},
                                      {0.6, 0.2},
                                      {0.6, -1.0},
                                      {1.0, -1.0},
                                      {1.0, 1.0},
                                      {0.6, 1.0},
                                      {0.0, 0.2},
                                      {-0.6, 1.0},
                                      {-1.0, 1.0}});
}

// Hexagon with vertices on the unit circle; even sides straight, odd sides
// S-shaped cubic Bezier pieces (outward bulge, then inward).
Boundary make_curvpolygon() {
  std::vector<cplx> v;
  for (int j = 0; j < 6; ++j)
    v.push_back(std::polar(1.0, std::numbers::pi / 2.0 + j * std::numbers::pi / 3.0));
  std::vector<Arc> arcs;
  for (int j = 0; j < 6; ++j) {
    const cplx p = v[j];
    const cplx q = v[(j + 1) % 6];
    if (j % 2 == 0) {
      arcs.push_back(segment(p, q));
      continue;
    }
    const cplx d = q - p;
    const cplx outward = cplx(0.0, -1.0) * d / std::abs(d);
    arcs.push_back(bezier3(p, p + d / 3.0 + 0.3 * outward, p + 2.0 * d / 3.0 - 0.2 * outward, q));
  }
  return Boundary("curvpolygon", std::move(arcs));
}

Boundary make_sun() {
  const cplx i(0.0, 1.0);
  std::vector<Arc> arcs;
  arcs.push_back(Arc::trigonometric({0.0, 1.0}, {i}, 0.0, two_pi));
  for (int j = 0; j < 8; ++j) {
    const cplx dir = std::polar(1.0, std::numbers::pi * j / 4.0);
    arcs.push_back(segment(dir, 1.5 * dir));
  }
  return Boundary("sun", std::move(arcs));
}

// B(-1,1.5) minus B(1,1.5).  The circles meet where cos t = 2/3 on the left
// circle; the right circle is traversed clockwise so the loop stays closed.
Boundary make_lune() {
  const cplx i(0.0, 1.0);
  const double alpha = std::acos(2.0 / 3.0);
  const double pi = std::numbers::pi;
  std::vector<Arc> arcs;
  arcs.push_back(Arc::trigonometric({-1.0, 1.5}, {1.5 * i}, alpha, two_pi - alpha));
  arcs.push_back(Arc::trigonometric({1.0, 1.5}, {-1.5 * i}, pi - alpha, pi + alpha));
  return Boundary("lune", std::move(arcs));
}

// (1 - cos t) e^{it} = -1/2 + e^{it} - e^{2it}/2.
Boundary make_cardioid() {
  const cplx i(0.0, 1.0);
  return Boundary("cardioid",
                  {Arc::trigonometric({-0.5, 1.0, -0.5}, {i, -0.5 * i}, 0.0, two_pi)});
}

// cos t cos 2t e^{it} = 1/4 + cos(2t)/2 + e^{4it}/4.
Boundary make_torpedo() {
  const cplx i(0.0, 1.0);
  return Boundary("torpedo", {Arc::trigonometric({0.25, 0.0, 0.5, 0.0, 0.25},
                                                 {0.0, 0.0, 0.0, 0.25 * i}, 0.0, two_pi)});
}

}  // namespace

std::string_view to_string(ArcKind kind) {
  return kind == ArcKind::algebraic ? "algebraic" : "trigonometric";
}

Arc::Arc(ArcKind kind, std::vector<cplx> primary, std::vector<cplx> sines, double a, double b)
    : kind_(kind), primary_(std::move(primary)), sines_(std::move(sines)), lo_(a), hi_(b) {
  check_interval(kind_, a, b);
  if (!std::all_of(primary_.begin(), primary_.end(), is_finite) ||
      !std::all_of(sines_.begin(), sines_.end(), is_finite))
    throw DomainError("arc coefficients must be finite");
  degree_ = static_cast<int>(primary_.size()) - 1;
  if (degree_ < 1) throw DomainError("arc degree must be at least 1");
  if (kind_ == ArcKind::trigonometric) {
    if (sines_.size() != primary_.size() - 1)
      throw DomainError("trigonometric arc needs k+1 cosine and k sine coefficients");
    if (primary_.back() == cplx{} && sines_.back() == cplx{})
      throw DomainError("top trigonometric coefficients a_k, b_k are both zero");
  } else if (primary_.back() == cplx{}) {
    throw DomainError("top algebraic coefficient c_k is zero");
  }
}

Arc Arc::algebraic(std::vector<cplx> coefficients, double a, double b) {
  return Arc(ArcKind::algebraic, std::move(coefficients), {}, a, b);
}

Arc Arc::trigonometric(std::vector<cplx> cos_coefficients, std::vector<cplx> sin_coefficients,
                       double a, double b) {
  return Arc(ArcKind::trigonometric, std::move(cos_coefficients), std::move(sin_coefficients), a,
             b);
}

Boundary::Boundary(std::string label, std::vector<Arc> arcs)
    : label_(std::move(label)), arcs_(std::move(arcs)) {
  if (arcs_.empty()) throw DomainError("boundary needs at least one arc");
}

cplx eval_arc(const Arc& arc, double t) {
  if (!(t >= arc.lo() && t <= arc.hi()))
    throw DomainError("parameter " + detail::fmt17(t) + " outside arc interval [" +
                      detail::fmt17(arc.lo()) + ", " + detail::fmt17(arc.hi()) + "]");
  const auto c = arc.coefficients();
  if (arc.kind() == ArcKind::algebraic) {
    cplx z = c.back();
    for (std::size_t j = c.size() - 1; j-- > 0;) z = z * t + c[j];
    return z;
  }
  const auto s = arc.sin_coefficients();
  cplx z = c[0];
  for (std::size_t j = 1; j < c.size(); ++j) {
    const double jt = static_cast<double>(j) * t;
    z += c[j] * std::cos(jt) + s[j - 1] * std::sin(jt);
  }
  return z;
}

Arc segment(cplx p, cplx q) { return Arc::algebraic({p, q - p}, 0.0, 1.0); }

const std::vector<std::string>& gallery_names() {
  static const std::vector<std::string> names{"m_polygon", "curvpolygon", "sun",
                                              "lune",      "cardioid",    "torpedo"};
  return names;
}

Boundary gallery(std::string_view name) {
  if (name == "m_polygon") return make_m_polygon();
  if (name == "curvpolygon") return make_curvpolygon();
  if (name == "sun") return make_sun();
  if (name == "lune") return make_lune();
  if (name == "cardioid") return make_cardioid();
  if (name == "torpedo") return make_torpedo();
  std::string valid;
  for (const auto& n : gallery_names()) valid += (valid.empty() ? "" : ", ") + n;
  throw LookupError("unknown domain '" + std::string(name) + "'; valid names: " + valid);
}

// ---------------------------------------------------------------------------
// Boundary documents

namespace {

void append_complex_list(std::string& out, std::span<const cplx> values) {
  out += '[';
  for (std::size_t j = 0; j < values.size(); ++j) {
    if (j) out += ", ";
    out += '[' + detail::fmt17(values[j].real()) + ", " + detail::fmt17(values[j].imag()) + ']';
  }
  out += ']';
}

using json = nlohmann::json;

const json& require(const json& obj, const char* field, long arc) {
  if (!obj.is_object() || !obj.contains(field))
    throw ParseError("missing field", arc, field);
  return obj.at(field);
}

double read_number(const json& v, long arc, const std::string& field) {
  if (!v.is_number()) throw ParseError("expected a number", arc, field);
  return v.get<double>();
}

std::vector<cplx> read_complex_list(const json& v, long arc, const std::string& field) {
  if (!v.is_array()) throw ParseError("expected a list of [re, im] pairs", arc, field);
  std::vector<cplx> out;
  for (std::size_t j = 0; j < v.size(); ++j) {
    const auto& pair = v[j];
    const std::string where = field + "[" + std::to_string(j) + "]";
    if (!pair.is_array() || pair.size() != 2)
      throw ParseError("expected [re, im]", arc, where);
    out.emplace_back(read_number(pair[0], arc, where), read_number(pair[1], arc, where));
  }
  return out;
}

Arc read_arc(const json& node, long idx) {
  const auto& kind_node = require(node, "kind", idx);
  if (!kind_node.is_string()) throw ParseError("expected a string", idx, "kind");
  const std::string kind = kind_node.get<std::string>();

  const auto& degree_node = require(node, "degree", idx);
  if (!degree_node.is_number_integer()) throw ParseError("expected an integer", idx, "degree");
  const long degree = degree_node.get<long>();
  if (degree < 1) throw ParseError("degree must be at least 1", idx, "degree");

  const auto& interval = require(node, "interval", idx);
  if (!interval.is_array() || interval.size() != 2)
    throw ParseError("expected [a, b]", idx, "interval");
  const double a = read_number(interval[0], idx, "interval");
  const double b = read_number(interval[1], idx, "interval");
  if (!(b > a)) throw ParseError("interval must satisfy a < b", idx, "interval");

  if (kind == "algebraic") {
    auto c = read_complex_list(require(node, "coefficients", idx), idx, "coefficients");
    if (static_cast<long>(c.size()) != degree + 1)
      throw ParseError("expected degree+1 coefficients", idx, "coefficients");
    if (c.back() == cplx{}) throw ParseError("top coefficient is zero", idx, "coefficients");
    return Arc::algebraic(std::move(c), a, b);
  }
  if (kind == "trigonometric") {
    if (b - a > two_pi)
      throw ParseError("trigonometric interval longer than 2*pi", idx, "interval");
    const auto& coeffs = require(node, "coefficients", idx);
    auto ca = read_complex_list(require(coeffs, "a", idx), idx, "coefficients.a");
    auto cb = read_complex_list(require(coeffs, "b", idx), idx, "coefficients.b");
    if (static_cast<long>(ca.size()) != degree + 1)
      throw ParseError("expected degree+1 cosine coefficients", idx, "coefficients.a");
    if (static_cast<long>(cb.size()) != degree)
      throw ParseError("expected degree sine coefficients", idx, "coefficients.b");
    if (ca.back() == cplx{} && cb.back() == cplx{})
      throw ParseError("top coefficients a_k and b_k are both zero", idx, "coefficients");
    return Arc::trigonometric(std::move(ca), std::move(cb), a, b);
  }
  throw ParseError("kind must be 'algebraic' or 'trigonometric'", idx, "kind");
}

}  // namespace

std::string save_boundary(const Boundary& boundary) {
  std::string out = "{\n  \"label\": " + json(boundary.label()).dump() + ",\n  \"arcs\": [";
  const auto& arcs = boundary.arcs();
  for (std::size_t j = 0; j < arcs.size(); ++j) {
    const Arc& arc = arcs[j];
    out += j ? ",\n    {" : "\n    {";
    out += "\"kind\": \"" + std::string(to_string(arc.kind())) + "\", ";
    out += "\"degree\": " + std::to_string(arc.degree()) + ", ";
    out += "\"interval\": [" + detail::fmt17(arc.lo()) + ", " + detail::fmt17(arc.hi()) + "], ";
    out += "\"coefficients\": ";
    if (arc.kind() == ArcKind::algebraic) {
      append_complex_list(out, arc.coefficients());
    } else {
      out += "{\"a\": ";
      append_complex_list(out, arc.coefficients());
      out += ", \"b\": ";
      append_complex_list(out, arc.sin_coefficients());
      out += '}';
    }
    out += '}';
  }
  out += "\n  ]\n}\n";
  return out;
}

Boundary load_boundary(std::string_view document) {
  json root;
  try {
    root = json::parse(document);
  } catch (const json::parse_error& e) {
    throw ParseError(e.what(), -1, "");
  }
  if (!root.is_object()) throw ParseError("document must be an object", -1, "");
  const auto& label = require(root, "label", -1);
  if (!label.is_string()) throw ParseError("expected a string", -1, "label");
  const auto& arcs_node = require(root, "arcs", -1);
  if (!arcs_node.is_array() || arcs_node.empty())
    throw ParseError("expected a nonempty list", -1, "arcs");
  std::vector<Arc> arcs;
  for (std::size_t j = 0; j < arcs_node.size(); ++j) {
    const long idx = static_cast<long>(j);
    try {
      arcs.push_back(read_arc(arcs_node[j], idx));
    } catch (const DomainError& e) {
      throw ParseError(e.what(), idx, "");
    }
  }
  return Boundary(label.get<std::string>(), std::move(arcs));
}

}  // namespace amesh
