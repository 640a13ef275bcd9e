#include "hypend/cli.hpp"

#include "hypend/disks.hpp"
#include "hypend/ends.hpp"
#include "hypend/expression.hpp"
#include "hypend/kp.hpp"
#include "hypend/lorentz.hpp"
#include "hypend/schwarzian.hpp"
#include "hypend/surfaces.hpp"

#include <json.hpp>

#include <Eigen/Eigenvalues>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <map>
#include <numbers>
#include <set>
#include <sstream>

namespace hypend::cli {

using Json = nlohmann::ordered_json;

namespace {

class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

[[noreturn]] void invalid(const std::string& path, const std::string& what) {
  throw ValidationError(path + ": " + what);
}

// ---------------------------------------------------------------------------
// Request access with validation
// ---------------------------------------------------------------------------

class Request {
 public:
  Request(const Json& doc, Overrides ov) : doc_(doc), ov_(ov) {}

  const std::string& command() const { return command_; }
  void set_command(std::string c) { command_ = std::move(c); }

  bool has(const char* key) const { return doc_.contains(key); }
  const Json& at(const char* key) const {
    if (!doc_.contains(key)) invalid(key, "required field missing");
    return doc_.at(key);
  }

  double tol(double fallback) const {
    if (ov_.tol) return *ov_.tol;
    return has("tol") ? positive(at("tol"), "tol") : fallback;
  }
  std::uint64_t seed(std::uint64_t fallback) const {
    if (ov_.seed) return *ov_.seed;
    if (!has("seed")) return fallback;
    const Json& v = at("seed");
    if (!v.is_number_unsigned()) invalid("seed", "expected a non-negative integer");
    return v.get<std::uint64_t>();
  }
  long long samples(long long fallback) const {
    long long s = fallback;
    if (ov_.samples) s = *ov_.samples;
    else if (has("samples")) s = integer(at("samples"), "samples");
    if (s < 1) invalid("samples", "must be at least 1");
    return s;
  }

  static double number(const Json& v, const std::string& path) {
    if (!v.is_number()) invalid(path, "expected a number");
    const double x = v.get<double>();
    if (!std::isfinite(x)) invalid(path, "expected a finite number");
    return x;
  }
  static double positive(const Json& v, const std::string& path) {
    const double x = number(v, path);
    if (!(x > 0.0)) invalid(path, "must be positive");
    return x;
  }
  static long long integer(const Json& v, const std::string& path) {
    if (!v.is_number_integer()) invalid(path, "expected an integer");
    return v.get<long long>();
  }
  static const Json& array(const Json& v, const std::string& path, std::size_t min_size = 0) {
    if (!v.is_array()) invalid(path, "expected an array");
    if (v.size() < min_size) invalid(path, "expected at least " + std::to_string(min_size) + " entries");
    return v;
  }
  static Eigen::VectorXd numbers(const Json& v, const std::string& path, std::size_t n_min, std::size_t n_max) {
    array(v, path);
    if (v.size() < n_min || v.size() > n_max) {
      const std::string want = n_min == n_max ? std::to_string(n_min) : std::to_string(n_min) + "-" + std::to_string(n_max);
      invalid(path, "expected " + want + " numbers");
    }
    Eigen::VectorXd out(static_cast<Eigen::Index>(v.size()));
    for (std::size_t i = 0; i < v.size(); ++i)
      out[static_cast<Eigen::Index>(i)] = number(v[i], path + "[" + std::to_string(i) + "]");
    return out;
  }
  static Complex complex(const Json& v, const std::string& path) {
    const Eigen::VectorXd c = numbers(v, path, 2, 2);
    return {c[0], c[1]};
  }
  static IdealPoint ideal(const Json& v, const std::string& path) {
    if (v.is_string()) {
      if (v.get<std::string>() != "inf") invalid(path, "expected [re, im] or \"inf\"");
      return IdealPoint::infinity();
    }
    return IdealPoint(complex(v, path));
  }
  static std::vector<IdealPoint> ideals(const Json& v, const std::string& path, std::size_t min_size = 0) {
    array(v, path, min_size);
    std::vector<IdealPoint> out;
    for (std::size_t i = 0; i < v.size(); ++i) out.push_back(ideal(v[i], path + "[" + std::to_string(i) + "]"));
    return out;
  }
  static HPoint uhs(const Json& v, const std::string& path) {
    const Eigen::VectorXd p = numbers(v, path, 3, 3);
    if (!(p[2] > 0.0)) invalid(path, "height must be positive");
    return from_uhs({{p[0], p[1]}, p[2]});
  }
  static std::vector<HPoint> uhs_points(const Json& v, const std::string& path) {
    array(v, path, 1);
    std::vector<HPoint> out;
    for (std::size_t i = 0; i < v.size(); ++i) out.push_back(uhs(v[i], path + "[" + std::to_string(i) + "]"));
    return out;
  }
  static std::string string(const Json& v, const std::string& path) {
    if (!v.is_string()) invalid(path, "expected a string");
    return v.get<std::string>();
  }
  static void keys(const Json& v, const std::string& path, const std::set<std::string>& allowed,
                   const std::set<std::string>& required) {
    if (!v.is_object()) invalid(path, "expected an object");
    for (const auto& [k, _] : v.items())
      if (!allowed.count(k)) invalid(path, "unknown field '" + k + "'");
    for (const auto& k : required)
      if (!v.contains(k)) invalid(path, "required field '" + k + "' missing");
  }

 private:
  const Json& doc_;
  Overrides ov_;
  std::string command_;
};

// ---------------------------------------------------------------------------
// Output helpers
// ---------------------------------------------------------------------------

Json jcomplex(Complex z) { return Json::array({z.real(), z.imag()}); }

Json jideal(const IdealPoint& z) {
  if (z.is_infinite()) return "inf";
  return jcomplex(z.value());
}

Json juhs(const HPoint& x) {
  const UhsPoint p = to_uhs(x);
  return Json::array({p.w.real(), p.w.imag(), p.h});
}

Json jvec(const Eigen::VectorXd& v) {
  Json a = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(v[i]);
  return a;
}

Json jmatrix(const Eigen::Matrix2d& m) { return Json::array({Json::array({m(0, 0), m(0, 1)}), Json::array({m(1, 0), m(1, 1)})}); }

Json jindices(const std::vector<std::size_t>& idx) {
  Json a = Json::array();
  for (std::size_t i : idx) a.push_back(i);
  return a;
}

Json jcircle(const OrientedDisk& D) {
  const CircleDescription c = describe(D);
  if (c.is_line) return Json{{"kind", "line"}, {"line", jvec(c.line)}};
  return Json{{"kind", "circle"},
              {"center", jcomplex(c.center)},
              {"radius", c.radius},
              {"side", c.side == CircleSide::interior ? "interior" : "exterior"}};
}

void round_numbers(Json& j) {
  if (j.is_number_float()) {
    j = round12(j.get<double>());
  } else if (j.is_structured()) {
    for (auto& v : j) round_numbers(v);
  }
}

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

std::string csv_ideal(const IdealPoint& z) {
  if (z.is_infinite()) return "inf,inf";
  return num(z.value().real()) + "," + num(z.value().imag());
}

std::string csv_uhs(const HPoint& x) {
  const UhsPoint p = to_uhs(x);
  return num(p.w.real()) + "," + num(p.w.imag()) + "," + num(p.h);
}

struct Result {
  Json body;
  std::string csv;
};

// ---------------------------------------------------------------------------
// Commands
// ---------------------------------------------------------------------------

const std::set<std::string> kCommon = {"version", "command", "tol", "seed", "samples"};

std::set<std::string> with_common(std::set<std::string> extra) {
  extra.insert(kCommon.begin(), kCommon.end());
  return extra;
}

FiniteComplementDomain domain_of(const Request& req) {
  return FiniteComplementDomain(Request::ideals(req.at("complement"), "complement"));
}

EndOverDomain end_of(const Request& req) {
  FiniteComplementDomain dom = domain_of(req);
  if (dom.size() < 2) invalid("complement", "an end needs at least two ideal points");
  return EndOverDomain(std::move(dom));
}

Result cmd_kp(const Request& req) {
  const FiniteComplementDomain dom = domain_of(req);
  const auto queries = Request::ideals(req.at("queries"), "queries", 1);
  KpOptions opts{req.seed(KpOptions{}.seed)};
  Result r;
  Json values = Json::array();
  r.csv = "re,im,value\n";
  for (const IdealPoint& q : queries) {
    const double v = kp_form(dom, q, opts);
    values.push_back(v);
    r.csv += csv_ideal(q) + "," + num(v) + "\n";
  }
  r.body = Json{{"type", to_string(kp_classify(dom))}, {"values", values}};
  return r;
}

Result cmd_maxdisk(const Request& req) {
  const FiniteComplementDomain dom = domain_of(req);
  const auto queries = Request::ideals(req.at("queries"), "queries", 1);
  KpOptions opts{req.seed(KpOptions{}.seed)};
  Result r;
  Json disks = Json::array();
  for (const IdealPoint& q : queries) {
    const MaxDisk md = kp_max_disk(dom, q, opts);
    disks.push_back(Json{{"pole", jvec(md.disk.pole())},
                         {"boundary", jcircle(md.disk)},
                         {"support", jindices(md.support)},
                         {"form", md.form}});
  }
  r.body = Json{{"disks", disks}};
  return r;
}

Result cmd_height(const Request& req) {
  const EndOverDomain E = end_of(req);
  const auto pts = Request::uhs_points(req.at("points"), "points");
  Result r;
  Json hs = Json::array();
  r.csv = "x,y,h,height\n";
  for (const HPoint& x : pts) {
    const double h = end_height(E, x);
    hs.push_back(h);
    r.csv += csv_uhs(x) + "," + num(h) + "\n";
  }
  r.body = Json{{"heights", hs}};
  return r;
}

Result cmd_project(const Request& req) {
  const EndOverDomain E = end_of(req);
  const auto pts = Request::uhs_points(req.at("points"), "points");
  Result r;
  Json out = Json::array();
  for (const HPoint& x : pts) {
    const EndProjection p = end_project(E, x);
    out.push_back(Json{{"height", p.support.height},
                       {"foot", juhs(p.foot)},
                       {"ideal", jideal(p.ideal)},
                       {"gradient", jvec(p.gradient)},
                       {"active", jindices(p.support.active)}});
  }
  r.body = Json{{"projections", out}};
  return r;
}

Result cmd_horoball_check(const Request& req) {
  const EndOverDomain E = end_of(req);
  const auto pts = Request::uhs_points(req.at("points"), "points");
  Result r;
  Json out = Json::array();
  for (const HPoint& x : pts) {
    const HoroballCheck c = end_horoball_check(E, x);
    out.push_back(Json{{"inside", c.inside}, {"level", c.level}, {"centre", jideal(c.centre)}, {"curvature", c.curvature}});
  }
  r.body = Json{{"checks", out}};
  return r;
}

Result cmd_trace(const Request& req) {
  const EndOverDomain E = end_of(req);
  const HPoint x = Request::uhs(req.at("point"), "point");
  const IdealPoint toward = Request::ideal(req.at("toward"), "toward");
  const double t_max = req.has("t_max") ? Request::positive(req.at("t_max"), "t_max") : 12.0;
  const double dt = req.has("dt") ? Request::positive(req.at("dt"), "dt") : 0.1;
  if (t_max / dt > 1e6) invalid("dt", "too many samples requested");
  const MinkowskiVec v = tangent_unit(x, ideal_lift(toward));
  const RayTrace tr = end_trace_geodesic(E, x, v, t_max, dt);
  Result r;
  Json samples = Json::array();
  r.csv = "t,x,y,h,height,vertical_speed,horizontal_speed\n";
  for (const RaySample& s : tr.samples) {
    samples.push_back(Json{{"t", s.t},
                           {"point", juhs(s.point)},
                           {"height", s.height},
                           {"vertical_speed", s.vertical_speed},
                           {"horizontal_speed", s.horizontal_speed}});
    r.csv += num(s.t) + "," + csv_uhs(s.point) + "," + num(s.height) + "," + num(s.vertical_speed) + "," +
             num(s.horizontal_speed) + "\n";
  }
  r.body = Json{{"downward_start", tr.downward_start}, {"samples", samples}};
  return r;
}

Result cmd_hessian(const Request& req) {
  const EndOverDomain E = end_of(req);
  const auto pts = Request::uhs_points(req.at("points"), "points");
  const double eps = req.has("eps") ? Request::positive(req.at("eps"), "eps") : 1e-3;
  if (eps > 0.1) invalid("eps", "must not exceed 0.1");
  const long long n = req.samples(16);
  Result r;
  Json out = Json::array();
  r.csv = "point,angle,value,ridge\n";
  for (std::size_t k = 0; k < pts.size(); ++k) {
    const HPoint& x = pts[k];
    const EndProjection p = end_project(E, x);
    // Orthonormal basis of the tangent plane orthogonal to the gradient.
    std::vector<MinkowskiVec> basis;
    for (int axis = 0; axis < 4 && basis.size() < 2; ++axis) {
      MinkowskiVec w = MinkowskiVec::Unit(axis);
      w += minkowski_inner(w, x.vec()) * x.vec();
      w -= minkowski_inner(w, p.gradient) * p.gradient;
      for (const auto& b : basis) w -= minkowski_inner(w, b) * b;
      const double n2 = minkowski_norm2(w);
      if (n2 > 1e-6) basis.push_back(w / std::sqrt(n2));
    }
    const double h = p.support.height;
    Json probes = Json::array();
    double lo = std::numeric_limits<double>::infinity();
    for (long long j = 0; j < n; ++j) {
      const double a = std::numbers::pi * static_cast<double>(j) / static_cast<double>(n);
      const MinkowskiVec xi = std::cos(a) * basis[0] + std::sin(a) * basis[1];
      const HessianProbe hp = end_hessian_probe(E, x, xi, eps);
      lo = std::min(lo, hp.value);
      probes.push_back(Json{{"angle", a}, {"value", hp.value}, {"ridge", hp.ridge}});
      r.csv += std::to_string(k) + "," + num(a) + "," + num(hp.value) + "," + (hp.ridge ? "1" : "0") + "\n";
    }
    out.push_back(Json{{"height", h}, {"tanh", std::tanh(h)}, {"coth", 1.0 / std::tanh(h)}, {"min", lo}, {"probes", probes}});
  }
  r.body = Json{{"points", out}};
  return r;
}

Expression parse_expression(const Json& v, const std::string& path) {
  try {
    return Expression::parse(Request::string(v, path));
  } catch (const ValidationError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    invalid(path, e.what());
  }
}

Result cmd_schwarzian(const Request& req) {
  const Expression map = parse_expression(req.at("map"), "map");
  const Complex at = Request::complex(req.at("at"), "at");
  const long long order = req.has("order") ? Request::integer(req.at("order"), "order") : 8;
  if (order < 1 || order > 40) invalid("order", "must lie in [1, 40]");
  const Jet s = schwarzian_jet(map.jet_at(at, static_cast<std::size_t>(order) + 3));
  Json coeffs = Json::array();
  for (const Complex& c : s.coefficients()) coeffs.push_back(jcomplex(c));
  Result r;
  r.body = Json{{"value", jcomplex(s.value())}, {"coefficients", coeffs}};
  return r;
}

Result cmd_solve_schwarzian(const Request& req) {
  const Expression field = parse_expression(req.at("field"), "field");
  const Json& path_json = Request::array(req.at("path"), "path", 1);
  std::vector<Complex> path;
  for (std::size_t i = 0; i < path_json.size(); ++i)
    path.push_back(Request::complex(path_json[i], "path[" + std::to_string(i) + "]"));

  const Json& nj = req.at("normalization");
  if (!nj.is_object()) invalid("normalization", "expected an object");
  SchwarzianNormalization norm;
  if (nj.contains("match")) {
    Request::keys(nj, "normalization", {"z0", "match"}, {"z0", "match"});
    norm.z0 = Request::complex(nj.at("z0"), "normalization.z0");
    const Jet m = parse_expression(nj.at("match"), "normalization.match").jet_at(norm.z0, 2);
    norm.value = m.derivative_at(0);
    norm.first = m.derivative_at(1);
    norm.second = m.derivative_at(2);
  } else {
    Request::keys(nj, "normalization", {"z0", "value", "first", "second"}, {"z0", "value", "first", "second"});
    norm.z0 = Request::complex(nj.at("z0"), "normalization.z0");
    norm.value = Request::complex(nj.at("value"), "normalization.value");
    norm.first = Request::complex(nj.at("first"), "normalization.first");
    norm.second = Request::complex(nj.at("second"), "normalization.second");
  }
  SolveOptions opts;
  opts.abs_tol = opts.rel_tol = req.tol(opts.abs_tol);
  const HolomorphicField f =
      HolomorphicField::from_function([field](const Jet& z) { return field.evaluate(z); });
  const SchwarzianSolution sol = schwarzian_solve(f, path, norm, opts);
  Result r;
  Json verts = Json::array();
  r.csv = "z_re,z_im,phi_re,phi_im,flipped,inverse_re,inverse_im,wronskian_drift\n";
  for (const PathSample& s : sol.vertices) {
    verts.push_back(Json{{"z", jcomplex(s.z)},
                         {"phi", jideal(s.phi)},
                         {"flipped", s.flipped},
                         {"inverse_phi", jcomplex(s.inverse_phi)},
                         {"wronskian_drift", s.wronskian_drift}});
    r.csv += num(s.z.real()) + "," + num(s.z.imag()) + "," + csv_ideal(s.phi) + "," + (s.flipped ? "1" : "0") + "," +
             num(s.inverse_phi.real()) + "," + num(s.inverse_phi.imag()) + "," + num(s.wronskian_drift) + "\n";
  }
  r.body = Json{{"vertices", verts}};
  return r;
}

Result cmd_flow(const Request& req) {
  const Json& aj = Request::array(req.at("A0"), "A0");
  if (aj.size() != 2) invalid("A0", "expected a 2x2 matrix");
  Eigen::Matrix2d A0;
  for (int i = 0; i < 2; ++i) {
    const Eigen::VectorXd row = Request::numbers(aj[static_cast<std::size_t>(i)], "A0[" + std::to_string(i) + "]", 2, 2);
    A0.row(i) = row.transpose();
  }
  std::vector<double> times;
  if (req.has("t") && req.has("times")) invalid("t", "give either t or times, not both");
  if (req.has("times")) {
    const Json& tj = Request::array(req.at("times"), "times", 1);
    for (std::size_t i = 0; i < tj.size(); ++i) times.push_back(Request::number(tj[i], "times[" + std::to_string(i) + "]"));
  } else {
    times.push_back(req.has("t") ? Request::number(req.at("t"), "t") : 0.0);
  }
  for (double t : times)
    if (t < 0.0) invalid("t", "flow time must be non-negative");
  FlowMethod method = FlowMethod::closed_form;
  std::string method_name = "closed_form";
  if (req.has("method")) {
    method_name = Request::string(req.at("method"), "method");
    if (method_name == "rk4") method = FlowMethod::rk4;
    else if (method_name != "closed_form") invalid("method", "expected closed_form or rk4");
  }
  Result r;
  Json states = Json::array();
  r.csv = "t,a11,a12,a21,a22,K,kappa1,kappa2\n";
  for (double t : times) {
    const ShapeFlowResult fr = shape_flow(A0, t, method);
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> eig(0.5 * (fr.A + fr.A.transpose()));
    const Eigen::Vector2d k = eig.eigenvalues();
    states.push_back(Json{{"t", t}, {"A", jmatrix(fr.A)}, {"K", fr.K}, {"eigenvalues", jvec(k)}});
    r.csv += num(t) + "," + num(fr.A(0, 0)) + "," + num(fr.A(0, 1)) + "," + num(fr.A(1, 0)) + "," + num(fr.A(1, 1)) + "," +
             num(fr.K) + "," + num(k[0]) + "," + num(k[1]) + "\n";
  }
  r.body = Json{{"method", method_name}, {"states", states}};
  return r;
}

OrientedDisk disk_of(const Json& v, const std::string& path) {
  if (!v.is_object()) invalid(path, "expected an object");
  if (v.contains("pole")) {
    Request::keys(v, path, {"pole"}, {"pole"});
    const Eigen::VectorXd p = Request::numbers(v.at("pole"), path + ".pole", 4, 4);
    const MinkowskiVec n(p[0], p[1], p[2], p[3]);
    if (std::abs(minkowski_norm2(n) - 1.0) > 1e-8) invalid(path + ".pole", "pole must be a unit spacelike vector");
    return OrientedDisk(n, 1e-8);
  }
  if (v.contains("line")) {
    Request::keys(v, path, {"line", "side"}, {"line"});
    const Eigen::VectorXd l = Request::numbers(v.at("line"), path + ".line", 3, 3);
    if (std::hypot(l[0], l[1]) == 0.0) invalid(path + ".line", "degenerate line");
    bool positive = true;
    if (v.contains("side")) {
      const std::string s = Request::string(v.at("side"), path + ".side");
      if (s != "positive" && s != "negative") invalid(path + ".side", "expected positive or negative");
      positive = s == "positive";
    }
    return disk_from_line(l[0], l[1], l[2], positive);
  }
  Request::keys(v, path, {"center", "radius", "side"}, {"center", "radius"});
  const Complex c = Request::complex(v.at("center"), path + ".center");
  const double rho = Request::positive(v.at("radius"), path + ".radius");
  CircleSide side = CircleSide::interior;
  if (v.contains("side")) {
    const std::string s = Request::string(v.at("side"), path + ".side");
    if (s == "exterior") side = CircleSide::exterior;
    else if (s != "interior") invalid(path + ".side", "expected interior or exterior");
  }
  return disk_from_circle(c, rho, side);
}

Result cmd_apriori(const Request& req) {
  const OrientedDisk D = disk_of(req.at("disk"), "disk");
  const double r = Request::positive(req.at("r"), "r");
  const double check_r = req.has("check_r") ? Request::positive(req.at("check_r"), "check_r") : r;
  const double offset = req.has("offset") ? Request::number(req.at("offset"), "offset") : 0.0;
  std::size_t radial = 10, angular = 10;
  double max_radius = 0.9;
  if (req.has("grid")) {
    const Json& g = req.at("grid");
    Request::keys(g, "grid", {"radial", "angular", "max_radius"}, {});
    if (g.contains("radial")) radial = static_cast<std::size_t>(std::max(1LL, Request::integer(g.at("radial"), "grid.radial")));
    if (g.contains("angular"))
      angular = static_cast<std::size_t>(std::max(1LL, Request::integer(g.at("angular"), "grid.angular")));
    if (g.contains("max_radius")) {
      max_radius = Request::number(g.at("max_radius"), "grid.max_radius");
      if (!(max_radius > 0.0 && max_radius < 1.0)) invalid("grid.max_radius", "must lie in (0, 1)");
    }
  }
  const ExplicitSurface S = ExplicitSurface::plane_equidistant(D, r).offset_by(offset);
  const auto grid = equidistant_grid(S, radial, angular, max_radius);
  AprioriOptions opts;
  opts.tol = req.tol(opts.tol);
  opts.seed = req.seed(opts.seed);
  opts.test_disks = static_cast<std::size_t>(req.samples(static_cast<long long>(opts.test_disks)));
  const AprioriReport rep = surface_apriori_check(S, grid, check_r, opts);
  Result res;
  res.csv = "u1,u2,gauss_re,gauss_im,curvature,full_disk_distance,halfspace_excess,horoball_level\n";
  for (const AprioriSample& s : rep.samples)
    res.csv += num(s.u[0]) + "," + num(s.u[1]) + "," + csv_ideal(s.gauss) + "," + num(s.curvature) + "," +
               num(s.full_disk_distance) + "," + num(s.halfspace_excess) + "," + num(s.horoball_level) + "\n";
  res.body = Json{{"samples", rep.samples.size()},
                  {"curvature_ok", rep.curvature_ok},
                  {"halfspace_ok", rep.halfspace_ok},
                  {"horoball_ok", rep.horoball_ok},
                  {"max_halfspace_excess", rep.max_halfspace_excess},
                  {"max_full_disk_gap", rep.max_full_disk_gap},
                  {"min_horoball_level", rep.min_horoball_level}};
  return res;
}

Model model_of(const Json& v, const std::string& path) {
  try {
    return parse_model(Request::string(v, path));
  } catch (const ValidationError&) {
    throw;
  } catch (const std::exception& e) {
    invalid(path, e.what());
  }
}

Result cmd_models(const Request& req) {
  const Model from = model_of(req.at("from"), "from");
  const Model to = model_of(req.at("to"), "to");
  const Json& pj = Request::array(req.at("points"), "points", 1);
  const std::size_t want = from == Model::hyperboloid ? 4 : 3;
  Result r;
  Json out = Json::array();
  for (std::size_t i = 0; i < pj.size(); ++i) {
    const std::string path = "points[" + std::to_string(i) + "]";
    const Eigen::VectorXd p = Request::numbers(pj[i], path, want, want);
    Eigen::Vector4d in = Eigen::Vector4d::Zero();
    in.head(p.size()) = p;
    const Eigen::Vector4d q = model_convert(in, from, to);
    out.push_back(jvec(to == Model::hyperboloid ? Eigen::VectorXd(q) : Eigen::VectorXd(q.head<3>())));
  }
  r.body = Json{{"points", out}};
  return r;
}

struct CommandSpec {
  std::set<std::string> fields;
  std::set<std::string> required;
  std::function<Result(const Request&)> run;
};

const std::map<std::string, CommandSpec>& commands() {
  static const std::map<std::string, CommandSpec> table = {
      {"kp", {with_common({"complement", "queries"}), {"complement", "queries"}, cmd_kp}},
      {"maxdisk", {with_common({"complement", "queries"}), {"complement", "queries"}, cmd_maxdisk}},
      {"height", {with_common({"complement", "points"}), {"complement", "points"}, cmd_height}},
      {"project", {with_common({"complement", "points"}), {"complement", "points"}, cmd_project}},
      {"trace", {with_common({"complement", "point", "toward", "t_max", "dt"}), {"complement", "point", "toward"}, cmd_trace}},
      {"hessian", {with_common({"complement", "points", "eps"}), {"complement", "points"}, cmd_hessian}},
      {"horoball-check", {with_common({"complement", "points"}), {"complement", "points"}, cmd_horoball_check}},
      {"schwarzian", {with_common({"map", "at", "order"}), {"map", "at"}, cmd_schwarzian}},
      {"solve-schwarzian",
       {with_common({"field", "path", "normalization"}), {"field", "path", "normalization"}, cmd_solve_schwarzian}},
      {"flow", {with_common({"A0", "t", "times", "method"}), {"A0"}, cmd_flow}},
      {"apriori", {with_common({"disk", "r", "check_r", "offset", "grid"}), {"disk", "r"}, cmd_apriori}},
      {"models", {with_common({"points", "from", "to"}), {"points", "from", "to"}, cmd_models}},
  };
  return table;
}

std::string dump(Json doc) {
  round_numbers(doc);
  return doc.dump() + "\n";
}

Outcome failure(int code, const std::string& kind, const std::string& message) {
  Json doc{{"version", kSchemaVersion}, {"error", Json{{"kind", kind}, {"message", message}}}};
  return {code, dump(doc), {}};
}

}  // namespace

double round12(double x) {
  if (!std::isfinite(x) || x == 0.0) return x == 0.0 ? 0.0 : x;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return std::strtod(buf, nullptr);
}

Outcome execute(const std::string& text, const Overrides& overrides) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    return failure(validation_error, "validation", std::string("malformed JSON: ") + e.what());
  }
  try {
    if (!doc.is_object()) invalid("request", "expected a JSON object");
    if (doc.contains("version") && (!doc.at("version").is_string() || doc.at("version") != kSchemaVersion))
      invalid("version", "unsupported version (expected \"v1\")");
    if (!doc.contains("command")) invalid("command", "required field missing");
    const std::string command = Request::string(doc.at("command"), "command");
    const auto it = commands().find(command);
    if (it == commands().end()) invalid("command", "unknown command '" + command + "'");
    Request::keys(doc, "request", it->second.fields, it->second.required);
    if (overrides.tol && !(*overrides.tol > 0.0)) invalid("--tol", "must be positive");
    if (overrides.samples && *overrides.samples < 1) invalid("--samples", "must be at least 1");
    Request req(doc, overrides);
    req.set_command(command);
    req.tol(1.0);
    req.seed(0);
    req.samples(1);
    Result res = it->second.run(req);
    Json out{{"version", kSchemaVersion}, {"command", command}, {"result", std::move(res.body)}};
    return {ok, dump(std::move(out)), std::move(res.csv)};
  } catch (const ValidationError& e) {
    return failure(validation_error, "validation", e.what());
  } catch (const GeometryError& e) {
    return failure(numeric_failure, "geometry", e.what());
  } catch (const NumericError& e) {
    return failure(numeric_failure, "numeric", e.what());
  } catch (const Json::exception& e) {
    return failure(validation_error, "validation", e.what());
  } catch (const std::exception& e) {
    return failure(internal_error, "internal", e.what());
  }
}

}  // namespace hypend::cli
