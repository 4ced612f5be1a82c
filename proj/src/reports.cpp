#include "nashkit/reports.hpp"

#include <sstream>

#include "nashkit/error.hpp"

namespace nashkit::reports {

using io::kSchemaVersion;
using nashkit::to_string;

namespace {

Json envelope(const char* kind) { return {{"schema", kSchemaVersion}, {"report", kind}}; }

void expect_kind(const Json& j, const char* kind) {
  if (j.value("schema", 0) != kSchemaVersion) throw InputError("report has unsupported schema " + j.value("schema", Json()).dump());
  if (j.value("report", std::string()) != kind) throw InputError(std::string("expected a ") + kind + " report");
}

template <class T>
std::string join(const std::vector<T>& xs, const char* sep = ", ") {
  std::ostringstream out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out << sep;
    if constexpr (std::is_same_v<T, Rational>)
      out << to_string(xs[i]);
    else
      out << xs[i];
  }
  return out.str();
}

Json rationals(const std::vector<Rational>& v) { return io::to_json(v); }
std::vector<Rational> rationals_from(const Json& j) { return io::rational_vector_from_json(j); }

Json entries_json(const std::vector<MatrixEntry>& es) {
  Json out = Json::array();
  for (const auto& e : es) out.push_back({{"row", e.row}, {"col", e.col}, {"value", io::to_json(e.value)}});
  return out;
}

std::vector<MatrixEntry> entries_from(const Json& j) {
  std::vector<MatrixEntry> out;
  for (const auto& e : j) out.push_back({e.at("row").get<std::size_t>(), e.at("col").get<std::size_t>(), io::rational_from_json(e.at("value"))});
  return out;
}

Comparison parse_comparison(const std::string& s) {
  for (auto c : {Comparison::LessEq, Comparison::GreaterEq, Comparison::Equal, Comparison::Incomparable})
    if (s == to_string(c)) return c;
  throw InputError("unknown comparison '" + s + "'");
}

LiftStatus parse_lift_status(const std::string& s) {
  for (auto c : {LiftStatus::Lifts, LiftStatus::Contradiction, LiftStatus::Inconclusive})
    if (s == to_string(c)) return c;
  throw InputError("unknown lifting status '" + s + "'");
}

// e and f name the divisors of a curvette witness (obstructing F_f against F_e).
std::string verdict_text(const ObstructionVerdict& v, PointIndex e = 0, PointIndex f = 0) {
  std::ostringstream out;
  out << to_string(v.status);
  if (v.curvette) {
    const auto& w = *v.curvette;
    out << "\n  witness: curvette of F_" << w.curvette << " with ord_F" << f << " = " << to_string(w.order_f)
        << " < ord_F" << e << " = " << to_string(w.order_e);
    if (w.polynomial) out << "\n  curvette equation: " << to_string(*w.polynomial) << " = 0";
  }
  if (v.orders) {
    const auto& w = *v.orders;
    out << "\n  g = " << to_string(w.g) << ": ord_e = " << w.order_e << ", ord_f = " << w.order_f
        << ", ord_f2 = " << w.order_f2 << (w.order_e < w.order_f + w.order_f2 ? "  (ord_e < ord_f + ord_f2)" : "");
  }
  if (v.solution) {
    const auto& w = *v.solution;
    out << "\n  a = (" << join(w.a) << ")";
    if (!w.offending.empty()) out << "\n  negative or non-integral entries at: " << join(w.offending);
    if (w.special_vanishes) out << "\n  a_special = 0: the wedge would lift";
  }
  return out.str();
}

std::string yes(bool b) { return b ? "yes" : "no"; }

ExactMatrix cluster_matrix(const BlowupCluster& c) { return intersection_matrix(simulate(c)); }

}  // namespace

// ---------------------------------------------------------------- graph check

GraphReport GraphReport::build(const DualGraph& g) {
  GraphReport r;
  r.graph = g;
  r.m = intersection_matrix(g);
  r.det = determinant(r.m);
  r.minors = leading_principal_minors(r.m);
  r.negative_definite = is_negative_definite(r.m);
  r.connected = g.is_connected();
  if (r.det != 0) {
    auto rep = check_inverse_nonpositive(r.m);
    r.inverse = rep.inverse;
    r.inverse_all_nonpositive = rep.all_nonpositive;
    r.inverse_all_negative = rep.all_negative;
    r.offending = rep.offending_entries;
  }
  r.key = canonical_key(g);
  if (r.negative_definite && r.connected && !r.inverse_all_negative)
    throw InvariantViolation("connected negative definite lattice with a non-negative inverse entry");
  return r;
}

Json GraphReport::to_json() const {
  Json j = envelope("graph_check");
  j["graph"] = io::to_json(graph);
  j["M"] = io::to_json(m);
  j["det"] = io::to_json(det);
  j["leading_minors"] = rationals(minors);
  j["negative_definite"] = negative_definite;
  j["connected"] = connected;
  j["M_inverse"] = inverse ? io::to_json(*inverse) : Json(nullptr);
  j["inverse_all_nonpositive"] = inverse_all_nonpositive;
  j["inverse_all_negative"] = inverse_all_negative;
  j["offending_entries"] = entries_json(offending);
  j["canonical_key"] = key.bytes;
  return j;
}

GraphReport GraphReport::from_json(const Json& j) {
  expect_kind(j, "graph_check");
  GraphReport r;
  r.graph = io::graph_from_json(j.at("graph"));
  r.m = io::matrix_from_json(j.at("M"));
  r.det = io::rational_from_json(j.at("det"));
  r.minors = rationals_from(j.at("leading_minors"));
  r.negative_definite = j.at("negative_definite").get<bool>();
  r.connected = j.at("connected").get<bool>();
  if (!j.at("M_inverse").is_null()) r.inverse = io::matrix_from_json(j["M_inverse"]);
  r.inverse_all_nonpositive = j.at("inverse_all_nonpositive").get<bool>();
  r.inverse_all_negative = j.at("inverse_all_negative").get<bool>();
  r.offending = entries_from(j.at("offending_entries"));
  r.key = CanonicalKey{j.at("canonical_key").get<std::string>()};
  return r;
}

std::string GraphReport::to_text() const {
  std::ostringstream out;
  out << "graph: " << graph.size() << " vertices, " << graph.edges().size() << " edges"
      << (connected ? ", connected" : ", disconnected") << "\n";
  out << "M = " << to_string(m) << "\n";
  out << "det(M) = " << to_string(det) << "\n";
  out << "leading minors: " << join(minors) << "\n";
  out << "negative definite: " << yes(negative_definite) << "\n";
  if (inverse) {
    out << "M^-1 = " << to_string(*inverse) << "\n";
    if (inverse_all_negative)
      out << "M^-1 entries: all negative\n";
    else if (inverse_all_nonpositive)
      out << "M^-1 entries: all non-positive, some zero\n";
    else
      out << "M^-1 entries: " << offending.size() << " positive\n";
  } else {
    out << "M is singular\n";
  }
  out << "canonical key: " << key.bytes << "\n";
  return out.str();
}

// -------------------------------------------------------------- cluster build

ClusterReport ClusterReport::build(const BlowupCluster& c) {
  ClusterReport r;
  r.cluster = c;
  r.graph = simulate(c);
  r.p = proximity_matrix(c);
  r.m = intersection_matrix(r.graph);
  r.proximity_identity = r.m == intersection_from_proximity(r.p);
  if (!r.proximity_identity) throw InvariantViolation("simulated intersection matrix differs from -P^T P");
  r.det = determinant(r.m);
  r.inverse = inverse_exact(r.m);
  r.canonical = canonical_coeffs(c);
  return r;
}

Json ClusterReport::to_json() const {
  Json j = envelope("cluster_build");
  j["cluster"] = io::to_json(cluster);
  j["graph"] = io::to_json(graph);
  j["P"] = io::to_json(p);
  j["M"] = io::to_json(m);
  j["M_inverse"] = io::to_json(inverse);
  j["det"] = io::to_json(det);
  j["proximity_identity"] = proximity_identity;
  j["canonical_coeffs"] = canonical;
  return j;
}

ClusterReport ClusterReport::from_json(const Json& j) {
  expect_kind(j, "cluster_build");
  ClusterReport r;
  r.cluster = io::cluster_from_json(j.at("cluster"));
  r.graph = io::graph_from_json(j.at("graph"));
  r.p = io::matrix_from_json(j.at("P"));
  r.m = io::matrix_from_json(j.at("M"));
  r.inverse = io::matrix_from_json(j.at("M_inverse"));
  r.det = io::rational_from_json(j.at("det"));
  r.proximity_identity = j.at("proximity_identity").get<bool>();
  r.canonical = j.at("canonical_coeffs").get<std::vector<long>>();
  return r;
}

std::string ClusterReport::to_text() const {
  std::ostringstream out;
  out << "cluster: " << cluster.size() << " points\n";
  for (PointIndex i = 0; i < cluster.size(); ++i) {
    const auto& pt = cluster.points()[i];
    out << "  p_" << i;
    if (!pt.parent)
      out << ": origin";
    else if (pt.satellite_of)
      out << ": satellite on F_" << *pt.parent << " and F_" << *pt.satellite_of;
    else
      out << ": free on F_" << *pt.parent;
    if (pt.tangent) out << ", tangent " << to_string(*pt.tangent);
    out << "\n";
  }
  out << "self-intersections:";
  for (const auto& v : graph.vertices()) out << " " << v.self_int;
  out << "\nedges:";
  for (auto [a, b] : graph.edges()) out << " F_" << a << "-F_" << b;
  out << "\nP = " << to_string(p) << "\n";
  out << "M = " << to_string(m) << "\n";
  out << "M = -P^T P: " << yes(proximity_identity) << "\n";
  out << "det(M) = " << to_string(det) << "\n";
  out << "M^-1 = " << to_string(inverse) << "\n";
  out << "K coefficients: (" << join(canonical) << ")\n";
  return out.str();
}

// --------------------------------------------------------------- val compare

CompareReport CompareReport::build(const BlowupCluster& c, PointIndex e, PointIndex f) {
  if (e >= c.size() || f >= c.size()) throw InputError("component index outside the cluster");
  CompareReport r;
  r.e = e;
  r.f = f;
  auto joint = minimal_joint_model(c, e, f);
  r.joint = joint.original;
  r.m = cluster_matrix(joint.cluster);
  r.inverse = inverse_exact(r.m);
  r.row_e = curvette_orders(joint.cluster, joint.e);
  r.row_f = curvette_orders(joint.cluster, joint.f);
  r.result = compare(c, e, f);
  return r;
}

Json CompareReport::to_json() const {
  Json j = envelope("val_compare");
  j["e"] = e;
  j["f"] = f;
  j["joint_points"] = joint;
  j["row_e"] = io::to_json(row_e);
  j["row_f"] = io::to_json(row_f);
  j["result"] = to_string(result);
  j["M"] = io::to_json(m);
  j["M_inverse"] = io::to_json(inverse);
  return j;
}

CompareReport CompareReport::from_json(const Json& j) {
  expect_kind(j, "val_compare");
  CompareReport r;
  r.e = j.at("e").get<PointIndex>();
  r.f = j.at("f").get<PointIndex>();
  r.joint = j.at("joint_points").get<std::vector<PointIndex>>();
  r.row_e = io::rational_vector_from_json(j.at("row_e"));
  r.row_f = io::rational_vector_from_json(j.at("row_f"));
  r.result = parse_comparison(j.at("result").get<std::string>());
  r.m = io::matrix_from_json(j.at("M"));
  r.inverse = io::matrix_from_json(j.at("M_inverse"));
  return r;
}

std::string CompareReport::to_text() const {
  std::ostringstream out;
  out << "joint model points: " << join(joint) << "\n";
  out << "M = " << to_string(m) << "\nM^-1 = " << to_string(inverse) << "\n";
  out << "curvette orders along F_" << e << ": (" << join(row_e) << ")\n";
  out << "curvette orders along F_" << f << ": (" << join(row_f) << ")\n";
  out << "nu_F" << e << " vs nu_F" << f << ": " << to_string(result) << "\n";
  return out.str();
}

// -------------------------------------------------------------------- val ord

OrdReport OrdReport::build(const BlowupCluster& c, const LocalPolynomial& g) {
  OrdReport r;
  r.g = g;
  auto tr = order_trace(c, g);
  r.multiplicities = tr.multiplicities;
  r.orders = tr.orders;
  r.profile = strict_transform_profile(c, g);
  r.m = cluster_matrix(c);
  r.inverse = inverse_exact(r.m);
  RationalVector t(r.profile.begin(), r.profile.end());
  r.orders_from_profile = -(r.inverse * t);
  for (std::size_t i = 0; i < r.orders.size(); ++i)
    if (r.orders_from_profile[i] != r.orders[i])
      throw InvariantViolation("ord from the blow-up recursion differs from -M^-1 t at F_" + std::to_string(i));
  return r;
}

Json OrdReport::to_json() const {
  Json j = envelope("val_ord");
  j["g"] = io::to_json(g);
  j["multiplicities"] = multiplicities;
  j["orders"] = orders;
  j["profile"] = profile;
  j["orders_from_profile"] = io::to_json(orders_from_profile);
  j["M"] = io::to_json(m);
  j["M_inverse"] = io::to_json(inverse);
  return j;
}

OrdReport OrdReport::from_json(const Json& j) {
  expect_kind(j, "val_ord");
  OrdReport r;
  r.g = io::polynomial_from_json(j.at("g"));
  r.multiplicities = j.at("multiplicities").get<std::vector<int>>();
  r.orders = j.at("orders").get<std::vector<long>>();
  r.profile = j.at("profile").get<std::vector<long>>();
  r.orders_from_profile = io::rational_vector_from_json(j.at("orders_from_profile"));
  r.m = io::matrix_from_json(j.at("M"));
  r.inverse = io::matrix_from_json(j.at("M_inverse"));
  return r;
}

std::string OrdReport::to_text() const {
  std::ostringstream out;
  out << "g = " << to_string(g) << "\n";
  out << "multiplicities at p_i: (" << join(multiplicities) << ")\n";
  out << "ord_F_i(g): (" << join(orders) << ")\n";
  out << "strict transform . F_i: (" << join(profile) << ")\n";
  out << "-M^-1 t: (" << join(orders_from_profile) << ")\n";
  out << "M = " << to_string(m) << "\nM^-1 = " << to_string(inverse) << "\n";
  return out.str();
}

// --------------------------------------------------------------- adj obstruct

ObstructReport ObstructReport::valuative(const BlowupCluster& c, PointIndex e, PointIndex f) {
  ObstructReport r;
  r.mode = "valuative";
  r.e = e;
  r.f = f;
  r.adjacency = "N_F" + std::to_string(f) + " in N_F" + std::to_string(e);
  r.verdict = valuative_obstruction(c, e, f);
  r.m = cluster_matrix(c);
  r.inverse = inverse_exact(r.m);
  return r;
}

ObstructReport ObstructReport::refined(const BlowupCluster& c, PointIndex e, PointIndex f, PointIndex f2,
                                       const LocalPolynomial& g) {
  ObstructReport r;
  r.mode = "refined";
  r.e = e;
  r.f = f;
  r.f2 = f2;
  r.adjacency = "N_F" + std::to_string(e) + " in N_F" + std::to_string(f) + " with a return through F" + std::to_string(f2);
  r.verdict = refined_valuative_obstruction(c, e, f, f2, g);
  r.m = cluster_matrix(c);
  r.inverse = inverse_exact(r.m);
  return r;
}

Json ObstructReport::to_json() const {
  Json j = envelope("adj_obstruct");
  j["mode"] = mode;
  j["e"] = e;
  j["f"] = f;
  j["f2"] = f2 ? Json(*f2) : Json(nullptr);
  j["adjacency"] = adjacency;
  j["verdict"] = io::to_json(verdict);
  j["M"] = io::to_json(m);
  j["M_inverse"] = io::to_json(inverse);
  return j;
}

ObstructReport ObstructReport::from_json(const Json& j) {
  expect_kind(j, "adj_obstruct");
  ObstructReport r;
  r.mode = j.at("mode").get<std::string>();
  r.e = j.at("e").get<PointIndex>();
  r.f = j.at("f").get<PointIndex>();
  if (!j.at("f2").is_null()) r.f2 = j["f2"].get<PointIndex>();
  r.adjacency = j.at("adjacency").get<std::string>();
  r.verdict = io::verdict_from_json(j.at("verdict"));
  r.m = io::matrix_from_json(j.at("M"));
  r.inverse = io::matrix_from_json(j.at("M_inverse"));
  return r;
}

std::string ObstructReport::to_text() const {
  std::ostringstream out;
  out << "adjacency " << adjacency << " (" << mode << " criterion): " << verdict_text(verdict, e, f) << "\n";
  out << "M = " << to_string(m) << "\nM^-1 = " << to_string(inverse) << "\n";
  return out.str();
}

// --------------------------------------------------------------- returns system

ReturnsReport ReturnsReport::build(const ExactMatrix& m, const std::vector<long>& b, std::size_t special,
                                   bool require_indeterminacy) {
  ReturnsReport r;
  r.b = b;
  r.special = special;
  r.require_indeterminacy = require_indeterminacy;
  auto res = returns_system(m, b, special, require_indeterminacy);
  r.a = res.a;
  r.a_printed = res.a_printed;
  r.verdict = res.verdict;
  r.m = m;
  r.inverse = inverse_exact(m);
  return r;
}

Json ReturnsReport::to_json() const {
  Json j = envelope("adj_returns");
  j["b"] = b;
  j["special"] = special;
  j["require_indeterminacy"] = require_indeterminacy;
  j["a"] = io::to_json(a);
  j["a_printed_convention"] = io::to_json(a_printed);
  j["verdict"] = io::to_json(verdict);
  j["M"] = io::to_json(m);
  j["M_inverse"] = io::to_json(inverse);
  return j;
}

ReturnsReport ReturnsReport::from_json(const Json& j) {
  expect_kind(j, "adj_returns");
  ReturnsReport r;
  r.b = j.at("b").get<std::vector<long>>();
  r.special = j.at("special").get<std::size_t>();
  r.require_indeterminacy = j.at("require_indeterminacy").get<bool>();
  r.a = io::rational_vector_from_json(j.at("a"));
  r.a_printed = io::rational_vector_from_json(j.at("a_printed_convention"));
  r.verdict = io::verdict_from_json(j.at("verdict"));
  r.m = io::matrix_from_json(j.at("M"));
  r.inverse = io::matrix_from_json(j.at("M_inverse"));
  return r;
}

std::string ReturnsReport::to_text() const {
  std::ostringstream out;
  out << "returns b = (" << join(b) << "), special component index " << special << "\n";
  out << "M a = b - e_special: a = (" << join(a) << ")\n";
  out << "M a = (1 - b_special, ...), as printed: a = (" << join(a_printed) << ")\n";
  out << "verdict: " << verdict_text(verdict) << "\n";
  out << "M = " << to_string(m) << "\nM^-1 = " << to_string(inverse) << "\n";
  return out.str();
}

// ------------------------------------------------------------------ adj table

TableReport TableReport::build(const BlowupCluster& c) {
  TableReport r;
  r.size = c.size();
  auto table = adjacency_table(c);
  for (PointIndex e = 0; e < c.size(); ++e)
    for (PointIndex f = 0; f < c.size(); ++f)
      if (table[e][f]) r.entries.push_back({e, f, *table[e][f]});
  r.m = cluster_matrix(c);
  r.inverse = inverse_exact(r.m);
  return r;
}

Json TableReport::to_json() const {
  Json j = envelope("adj_table");
  j["size"] = size;
  Json es = Json::array();
  for (const auto& e : entries) es.push_back({{"e", e.e}, {"f", e.f}, {"verdict", io::to_json(e.verdict)}});
  j["entries"] = es;
  j["M"] = io::to_json(m);
  j["M_inverse"] = io::to_json(inverse);
  return j;
}

TableReport TableReport::from_json(const Json& j) {
  expect_kind(j, "adj_table");
  TableReport r;
  r.size = j.at("size").get<std::size_t>();
  for (const auto& e : j.at("entries"))
    r.entries.push_back({e.at("e").get<PointIndex>(), e.at("f").get<PointIndex>(), io::verdict_from_json(e.at("verdict"))});
  r.m = io::matrix_from_json(j.at("M"));
  r.inverse = io::matrix_from_json(j.at("M_inverse"));
  return r;
}

std::string TableReport::to_text() const {
  std::ostringstream out;
  out << "row F_e, column F_f: can N_Ff lie in N_Fe?  R = ruled out, . = not ruled out\n    ";
  for (std::size_t f = 0; f < size; ++f) out << " F" << f;
  out << "\n";
  std::vector<std::vector<char>> grid(size, std::vector<char>(size, '-'));
  for (const auto& e : entries) grid[e.e][e.f] = e.verdict.ruled_out() ? 'R' : '.';
  for (std::size_t e = 0; e < size; ++e) {
    out << "F" << e << (e < 10 ? "  " : " ");
    for (std::size_t f = 0; f < size; ++f) out << (f < 10 ? "  " : "   ") << grid[e][f];
    out << "\n";
  }
  for (const auto& e : entries)
    if (e.verdict.ruled_out() && e.verdict.curvette)
      out << "N_F" << e.f << " in N_F" << e.e << ": witness curvette of F_" << e.verdict.curvette->curvette << " ("
          << to_string(e.verdict.curvette->order_f) << " < " << to_string(e.verdict.curvette->order_e) << ")\n";
  out << "M = " << to_string(m) << "\nM^-1 = " << to_string(inverse) << "\n";
  return out.str();
}

// ---------------------------------------------------------------- euler bound

EulerReport EulerReport::build(const EulerInput& in) {
  EulerReport r;
  r.graph = in.graph;
  r.a = in.a;
  r.attach = in.attach;
  r.certificate = contradiction_certificate(in);
  r.m = intersection_matrix(in.graph);
  return r;
}

Json EulerReport::to_json() const {
  Json j = envelope("euler_bound");
  j["graph"] = io::to_json(graph);
  j["a"] = a;
  j["attach"] = attach;
  const auto& c = certificate;
  j["b0_bound"] = c.b0;
  j["balls_bound"] = c.balls;
  j["tubes_bound"] = c.tubes;
  j["final_bound"] = c.bound;
  j["contradicts_disk"] = c.contradicts_disk;
  j["minimality_flags"] = c.minimality_flags;
  j["certificate_fires"] = c.fires();
  j["M"] = io::to_json(m);
  return j;
}

EulerReport EulerReport::from_json(const Json& j) {
  expect_kind(j, "euler_bound");
  EulerReport r;
  r.graph = io::graph_from_json(j.at("graph"));
  r.a = j.at("a").get<std::vector<long>>();
  r.attach = j.at("attach").get<VertexId>();
  auto& c = r.certificate;
  c.b0 = j.at("b0_bound").get<long>();
  c.balls = j.at("balls_bound").get<long>();
  c.tubes = j.at("tubes_bound").get<long>();
  c.bound = j.at("final_bound").get<long>();
  c.contradicts_disk = j.at("contradicts_disk").get<bool>();
  c.minimality_flags = j.at("minimality_flags").get<std::vector<VertexId>>();
  r.m = io::matrix_from_json(j.at("M"));
  return r;
}

std::string EulerReport::to_text() const {
  std::ostringstream out;
  const auto& c = certificate;
  out << "a = (" << join(a) << "), attach vertex " << attach << "\n";
  out << "disk bound (a_attach - 1): " << c.b0 << "\n";
  out << "ball bound: " << c.balls << "\n";
  out << "tube bound: " << c.tubes << "\n";
  out << "final bound: " << c.bound << " = " << c.b0 << " + " << c.balls << " + " << c.tubes << "\n";
  out << "contradicts a disk (bound < 1): " << yes(c.contradicts_disk) << "\n";
  if (!c.minimality_flags.empty())
    out << "rational -1 curves at vertices " << join(c.minimality_flags)
        << ": resolution not minimal, certificate withheld\n";
  out << "certificate: " << (c.fires() ? "FIRES" : "does not fire") << "\n";
  out << "M = " << to_string(m) << "\n";
  return out.str();
}

// ------------------------------------------------------------------ dfd check

DfdReport DfdReport::build(const WedgeNumericalModel& model) {
  DfdReport r;
  validate(model);
  r.a = effective_a(model);
  r.c = model.c;
  r.d = model.d;
  r.special = model.special;
  r.b_supplied = model.b;
  if (model.b) r.verified = verify_numerical(model);
  r.b = solve_b(model);
  if (model.minimal_target) r.lifting = lifting_verdict(model);
  r.m = cluster_matrix(model.cluster);
  r.inverse = inverse_exact(r.m);
  return r;
}

Json DfdReport::to_json() const {
  Json j = envelope("dfd_check");
  j["a"] = a;
  j["c"] = c;
  j["d"] = d;
  j["special"] = special;
  j["b_supplied"] = b_supplied ? io::to_json(*b_supplied) : Json(nullptr);
  j["verified"] = verified ? Json(*verified) : Json(nullptr);
  j["b"] = io::to_json(b);
  if (lifting) {
    j["lifting"] = {{"status", to_string(lifting->status)},
                    {"lifts", lifting->lifts},
                    {"b", io::to_json(lifting->b)},
                    {"a_special", io::to_json(lifting->a_special)},
                    {"b_special", io::to_json(lifting->b_special)},
                    {"reason", lifting->reason}};
  } else {
    j["lifting"] = nullptr;
  }
  j["M"] = io::to_json(m);
  j["M_inverse"] = io::to_json(inverse);
  return j;
}

DfdReport DfdReport::from_json(const Json& j) {
  expect_kind(j, "dfd_check");
  DfdReport r;
  r.a = j.at("a").get<std::vector<long>>();
  r.c = j.at("c").get<std::vector<long>>();
  r.d = j.at("d").get<std::vector<long>>();
  r.special = j.at("special").get<PointIndex>();
  if (!j.at("b_supplied").is_null()) r.b_supplied = io::rational_vector_from_json(j["b_supplied"]);
  if (!j.at("verified").is_null()) r.verified = j["verified"].get<bool>();
  r.b = io::rational_vector_from_json(j.at("b"));
  if (!j.at("lifting").is_null()) {
    const auto& l = j["lifting"];
    LiftingVerdict v;
    v.status = parse_lift_status(l.at("status").get<std::string>());
    v.lifts = l.at("lifts").get<bool>();
    v.b = io::rational_vector_from_json(l.at("b"));
    v.a_special = io::rational_from_json(l.at("a_special"));
    v.b_special = io::rational_from_json(l.at("b_special"));
    v.reason = l.at("reason").get<std::string>();
    r.lifting = std::move(v);
  }
  r.m = io::matrix_from_json(j.at("M"));
  r.inverse = io::matrix_from_json(j.at("M_inverse"));
  return r;
}

std::string DfdReport::to_text() const {
  std::ostringstream out;
  out << "a = (" << join(a) << ")\nc = (" << join(c) << ")\nd = (" << join(d) << ")\n";
  out << "b = a - M^-1 (c + d) = (" << join(b) << ")\n";
  if (b_supplied)
    out << "supplied b = (" << join(*b_supplied) << "): identity " << (*verified ? "holds" : "FAILS") << "\n";
  if (lifting)
    out << "lifting verdict: " << to_string(lifting->status) << "\n  " << lifting->reason << "\n";
  else
    out << "lifting verdict: not evaluated (target not declared minimal)\n";
  out << "M = " << to_string(m) << "\nM^-1 = " << to_string(inverse) << "\n";
  return out.str();
}

// ------------------------------------------------------------------ pair canon

PairReport PairReport::build(const BlowupCluster& c, PointIndex e, PointIndex f) {
  if (e >= c.size() || f >= c.size()) throw InputError("component index outside the cluster");
  PairReport r;
  r.e = e;
  r.f = f;
  r.pair_graph = nashkit::pair_graph(c, e, f);
  r.key = canonical_key(r.pair_graph);
  if (e != f) r.computed = valuative_obstruction(c, e, f);
  return r;
}

Json PairReport::to_json() const {
  Json j = envelope("pair_canon");
  j["e"] = e;
  j["f"] = f;
  j["pair_graph"] = io::to_json(pair_graph);
  j["canonical_key"] = key.bytes;
  j["computed"] = computed ? io::to_json(*computed) : Json(nullptr);
  j["kb_status"] = kb_status;
  j["kb_verdict"] = kb_verdict ? Json(to_string(*kb_verdict)) : Json(nullptr);
  j["kb_provenance"] = kb_provenance;
  return j;
}

PairReport PairReport::from_json(const Json& j) {
  expect_kind(j, "pair_canon");
  PairReport r;
  r.e = j.at("e").get<PointIndex>();
  r.f = j.at("f").get<PointIndex>();
  r.pair_graph = io::graph_from_json(j.at("pair_graph"));
  r.key = CanonicalKey{j.at("canonical_key").get<std::string>()};
  if (!j.at("computed").is_null()) r.computed = io::verdict_from_json(j["computed"]);
  r.kb_status = j.at("kb_status").get<std::string>();
  if (!j.at("kb_verdict").is_null()) r.kb_verdict = parse_obstruction_status(j["kb_verdict"].get<std::string>());
  r.kb_provenance = j.at("kb_provenance").get<std::string>();
  return r;
}

std::string PairReport::to_text() const {
  std::ostringstream out;
  out << "pair graph (E on F_" << e << ", F on F_" << f << "):";
  for (const auto& v : pair_graph.vertices()) {
    out << " [" << v.id << ": " << v.self_int;
    for (const auto& l : v.labels) out << " " << l;
    out << "]";
  }
  out << "\ncanonical key: " << key.bytes << "\n";
  if (computed) out << "N_F in N_E: " << verdict_text(*computed, e, f) << "\n";
  if (!kb_status.empty()) {
    out << "knowledge base: " << kb_status;
    if (kb_verdict) out << ", " << to_string(*kb_verdict) << " (" << kb_provenance << ")";
    out << "\n";
  }
  return out.str();
}

}  // namespace nashkit::reports
