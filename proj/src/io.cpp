#include "nashkit/io.hpp"

#include <algorithm>
#include <iterator>
#include <set>
#include <sstream>

#include "nashkit/error.hpp"
#include "nashkit/fixtures.hpp"
#include "nashkit/polynomial.hpp"

namespace nashkit::io {

using nashkit::to_string;

std::string to_string(const Diagnostic& d) {
  std::string out;
  if (d.line) out += "line " + std::to_string(*d.line) + ": ";
  if (!d.path.empty()) out += d.path + ": ";
  return out + d.message;
}

namespace {

std::string join_diagnostics(const std::vector<Diagnostic>& ds) {
  std::string out;
  for (const auto& d : ds) {
    if (!out.empty()) out += "\n";
    out += to_string(d);
  }
  return out;
}

// Input iterator that remembers the offset of the last character the
// parser looked at, so parse callbacks can tell where they are.
class TrackingIterator {
 public:
  using iterator_category = std::input_iterator_tag;
  using value_type = char;
  using difference_type = std::ptrdiff_t;
  using pointer = const char*;
  using reference = const char&;

  TrackingIterator(const char* p, const char* base, std::size_t* mark) : p_(p), base_(base), mark_(mark) {}
  reference operator*() const {
    *mark_ = static_cast<std::size_t>(p_ - base_);
    return *p_;
  }
  TrackingIterator& operator++() {
    ++p_;
    return *this;
  }
  TrackingIterator operator++(int) {
    auto old = *this;
    ++p_;
    return old;
  }
  bool operator==(const TrackingIterator& o) const { return p_ == o.p_; }
  bool operator!=(const TrackingIterator& o) const { return p_ != o.p_; }

 private:
  const char* p_;
  const char* base_;
  std::size_t* mark_;
};

std::string escape_pointer_token(const std::string& key) {
  std::string out;
  for (char c : key) {
    if (c == '~')
      out += "~0";
    else if (c == '/')
      out += "~1";
    else
      out += c;
  }
  return out;
}

}  // namespace

DocumentError::DocumentError(std::vector<Diagnostic> diagnostics)
    : InputError(join_diagnostics(diagnostics)), diagnostics_(std::move(diagnostics)) {}

std::optional<std::size_t> ParsedDocument::line_of(const std::string& pointer) const {
  // Fall back to the closest enclosing value that has a position.
  std::string p = pointer;
  for (;;) {
    for (const auto& [path, line] : lines)
      if (path == p) return line;
    if (p.empty()) return std::nullopt;
    p.erase(p.rfind('/'));
  }
}

ParsedDocument parse_document(const std::string& text) {
  std::vector<std::size_t> newlines;
  for (std::size_t i = 0; i < text.size(); ++i)
    if (text[i] == '\n') newlines.push_back(i);
  auto line_at = [&](std::size_t offset) {
    return 1 + static_cast<std::size_t>(std::lower_bound(newlines.begin(), newlines.end(), offset) - newlines.begin());
  };

  struct Frame {
    bool is_array;
    std::size_t index;
    std::string key;
    std::string path;
  };
  std::vector<Frame> stack;
  ParsedDocument doc;
  std::size_t mark = 0;
  auto child_path = [&]() -> std::string {
    if (stack.empty()) return "";
    const Frame& top = stack.back();
    return top.path + "/" + (top.is_array ? std::to_string(top.index) : escape_pointer_token(top.key));
  };
  auto advance = [&]() {
    if (!stack.empty() && stack.back().is_array) ++stack.back().index;
  };

  using Event = Json::parse_event_t;
  auto callback = [&](int, Event event, Json& parsed) {
    switch (event) {
      case Event::object_start:
      case Event::array_start: {
        std::string path = child_path();
        doc.lines.emplace_back(path, line_at(mark));
        stack.push_back({event == Event::array_start, 0, "", path});
        break;
      }
      case Event::key:
        stack.back().key = parsed.get<std::string>();
        break;
      case Event::value:
        doc.lines.emplace_back(child_path(), line_at(mark));
        advance();
        break;
      case Event::object_end:
      case Event::array_end:
        stack.pop_back();
        advance();
        break;
    }
    return true;
  };

  const char* base = text.data();
  try {
    doc.value = Json::parse(TrackingIterator(base, base, &mark), TrackingIterator(base + text.size(), base, &mark),
                            callback);
  } catch (const Json::parse_error& e) {
    std::size_t at = e.byte == 0 ? 0 : e.byte - 1;
    std::string msg = e.what();
    if (auto pos = msg.find("]: "); pos != std::string::npos) msg = msg.substr(pos + 3);
    else if (auto pos2 = msg.find("] "); pos2 != std::string::npos) msg = msg.substr(pos2 + 2);
    throw DocumentError({{"", line_at(at), msg}});
  }
  return doc;
}

namespace {

class Checker {
 public:
  Checker(const ParsedDocument& doc, std::vector<Diagnostic>& out) : doc_(doc), out_(out) {}

  void add(const std::string& path, const std::string& message) { out_.push_back({path, doc_.line_of(path), message}); }
  std::size_t count() const { return out_.size(); }

  bool is_int(const Json& j) const { return j.is_number_integer(); }

  void check_fields(const Json& obj, const std::string& path, const std::set<std::string>& allowed) {
    for (const auto& [k, v] : obj.items())
      if (!allowed.count(k)) add(path + "/" + escape_pointer_token(k), "unknown field '" + k + "'");
  }

  void check_schema(const Json& root) {
    if (!root.contains("schema")) {
      add("", "missing field 'schema' (expected " + std::to_string(kSchemaVersion) + ")");
    } else if (!root["schema"].is_number_integer()) {
      add("/schema", "schema must be an integer");
    } else if (root["schema"].get<long>() != kSchemaVersion) {
      add("/schema", "unsupported schema version " + root["schema"].dump() + " (this build reads " +
                         std::to_string(kSchemaVersion) + ")");
    }
  }

 private:
  const ParsedDocument& doc_;
  std::vector<Diagnostic>& out_;
};

void check_graph(const Json& root, Checker& ck) {
  ck.check_fields(root, "", {"schema", "vertices", "edges", "description"});
  std::set<long long> ids;
  if (!root.contains("vertices") || !root["vertices"].is_array()) {
    ck.add(root.contains("vertices") ? "/vertices" : "", "field 'vertices' must be an array");
    return;
  }
  const auto& vs = root["vertices"];
  if (vs.empty()) ck.add("/vertices", "a dual graph needs at least one vertex");
  for (std::size_t i = 0; i < vs.size(); ++i) {
    const std::string p = "/vertices/" + std::to_string(i);
    const auto& v = vs[i];
    if (!v.is_object()) {
      ck.add(p, "vertex must be an object");
      continue;
    }
    ck.check_fields(v, p, {"id", "self_int", "genus", "labels"});
    if (!v.contains("id") || !ck.is_int(v["id"])) {
      ck.add(v.contains("id") ? p + "/id" : p, "vertex needs an integer 'id'");
    } else if (!ids.insert(v["id"].get<long long>()).second) {
      ck.add(p + "/id", "duplicate vertex id " + v["id"].dump());
    }
    if (!v.contains("self_int") || !ck.is_int(v["self_int"]))
      ck.add(v.contains("self_int") ? p + "/self_int" : p, "vertex needs an integer 'self_int'");
    if (v.contains("genus") && (!ck.is_int(v["genus"]) || v["genus"].get<long long>() < 0))
      ck.add(p + "/genus", "genus must be a non-negative integer");
    if (v.contains("labels")) {
      const auto& ls = v["labels"];
      if (!ls.is_array() || !std::all_of(ls.begin(), ls.end(), [](const Json& l) { return l.is_string(); }))
        ck.add(p + "/labels", "labels must be an array of strings");
    }
  }
  if (!root.contains("edges")) return;
  const auto& es = root["edges"];
  if (!es.is_array()) {
    ck.add("/edges", "field 'edges' must be an array");
    return;
  }
  for (std::size_t k = 0; k < es.size(); ++k) {
    const std::string p = "/edges/" + std::to_string(k);
    const auto& e = es[k];
    if (!e.is_array() || e.size() != 2 || !ck.is_int(e[0]) || !ck.is_int(e[1])) {
      ck.add(p, "edge must be a pair of vertex ids");
      continue;
    }
    auto a = e[0].get<long long>(), b = e[1].get<long long>();
    if (a == b) ck.add(p, "edge " + std::to_string(k) + " is a loop at vertex " + std::to_string(a) + "; components must be smooth");
    for (auto id : {a, b})
      if (!ids.count(id)) ck.add(p, "edge " + std::to_string(k) + " refers to unknown vertex " + std::to_string(id));
  }
}

std::optional<Tangent> tangent_from_json(const Json& j) {
  if (j.is_null()) return std::nullopt;
  if (j.is_number_integer()) return Tangent::finite(Rational(j.get<long>()));
  if (j.is_string()) {
    auto s = j.get<std::string>();
    if (s == "inf" || s == "∞") return Tangent::infinity();
    return Tangent::finite(parse_rational(s));
  }
  throw InputError("tangent must be a rational number, \"inf\" or null");
}

std::optional<PointIndex> index_from_json(const Json& j) {
  if (j.is_null()) return std::nullopt;
  return static_cast<PointIndex>(j.get<long long>());
}

// Returns the parsed points when the structure is sound.
std::optional<std::vector<ClusterPoint>> check_cluster(const Json& root, Checker& ck, const std::string& at) {
  ck.check_fields(root, at, {"schema", "points", "description"});
  if (!root.contains("points") || !root["points"].is_array()) {
    ck.add(root.contains("points") ? at + "/points" : at, "field 'points' must be an array");
    return std::nullopt;
  }
  const auto& ps = root["points"];
  if (ps.empty()) ck.add(at + "/points", "a cluster needs at least the origin");
  if (ps.size() > BlowupCluster::kMaxPoints)
    ck.add(at + "/points", "cluster has " + std::to_string(ps.size()) + " points; limit is " +
                               std::to_string(BlowupCluster::kMaxPoints));
  const std::size_t before = ck.count();
  std::vector<ClusterPoint> points;
  for (std::size_t i = 0; i < ps.size(); ++i) {
    const std::string p = at + "/points/" + std::to_string(i);
    const auto& pt = ps[i];
    if (!pt.is_object()) {
      ck.add(p, "point must be an object");
      continue;
    }
    ck.check_fields(pt, p, {"parent", "satellite_of", "tangent"});
    ClusterPoint cp;
    for (const char* field : {"parent", "satellite_of"}) {
      if (!pt.contains(field) || pt[field].is_null()) continue;
      const auto& v = pt[field];
      if (!ck.is_int(v) || v.get<long long>() < 0) {
        ck.add(p + "/" + field, std::string(field) + " must be a point index or null");
        continue;
      }
      if (static_cast<std::size_t>(v.get<long long>()) >= i) {
        ck.add(p + "/" + field, std::string(field) + " index " + v.dump() + " is not below the point's own index " +
                                    std::to_string(i));
        continue;
      }
      (std::string(field) == "parent" ? cp.parent : cp.satellite_of) = index_from_json(v);
    }
    if (i == 0 && pt.contains("parent") && !pt["parent"].is_null()) ck.add(p + "/parent", "the origin has no parent");
    if (i > 0 && (!pt.contains("parent") || pt["parent"].is_null())) ck.add(p, "point " + std::to_string(i) + " needs a parent");
    if (pt.contains("tangent")) {
      try {
        cp.tangent = tangent_from_json(pt["tangent"]);
      } catch (const InputError& e) {
        ck.add(p + "/tangent", e.what());
      }
    }
    points.push_back(cp);
  }
  if (ck.count() != before) return std::nullopt;
  // Geometric consistency: the first prefix that fails names the point.
  for (std::size_t k = 1; k <= points.size(); ++k) {
    try {
      BlowupCluster(std::vector<ClusterPoint>(points.begin(), points.begin() + static_cast<std::ptrdiff_t>(k)));
    } catch (const InputError& e) {
      ck.add(at + "/points/" + std::to_string(k - 1), e.what());
      return std::nullopt;
    }
  }
  return points;
}

void check_int_array(const Json& root, const char* field, Checker& ck, std::optional<std::size_t> size, bool required) {
  const std::string p = std::string("/") + field;
  if (!root.contains(field)) {
    if (required) ck.add("", std::string("missing field '") + field + "'");
    return;
  }
  const auto& v = root[field];
  if (!v.is_array() || !std::all_of(v.begin(), v.end(), [](const Json& x) { return x.is_number_integer(); })) {
    ck.add(p, std::string(field) + " must be an array of integers");
    return;
  }
  if (size && v.size() != *size)
    ck.add(p, std::string(field) + " has " + std::to_string(v.size()) + " entries for " + std::to_string(*size) + " components");
}

std::optional<BlowupCluster> model_cluster(const Json& root, Checker& ck) {
  if (!root.contains("cluster")) {
    ck.add("", "missing field 'cluster' (a fixture name or a cluster object)");
    return std::nullopt;
  }
  const auto& c = root["cluster"];
  if (c.is_string()) {
    auto fx = fixtures::cluster(c.get<std::string>());
    if (!fx) ck.add("/cluster", "unknown cluster fixture '" + c.get<std::string>() + "'");
    return fx;
  }
  if (!c.is_object()) {
    ck.add("/cluster", "cluster must be a fixture name or an object");
    return std::nullopt;
  }
  auto pts = check_cluster(c, ck, "/cluster");
  if (!pts) return std::nullopt;
  return BlowupCluster(*pts);
}

void check_wedge_model(const Json& root, Checker& ck) {
  ck.check_fields(root, "", {"schema", "cluster", "special", "a", "b", "c", "d", "minimal_target", "assert_b1_lt_1",
                             "assert_no_lift", "description"});
  auto cluster = model_cluster(root, ck);
  std::optional<std::size_t> n;
  if (cluster) n = cluster->size();
  if (!root.contains("special") || !root["special"].is_number_integer())
    ck.add(root.contains("special") ? "/special" : "", "field 'special' must be a point index");
  else if (n && (root["special"].get<long long>() < 0 || static_cast<std::size_t>(root["special"].get<long long>()) >= *n))
    ck.add("/special", "special component " + root["special"].dump() + " is outside the cluster");
  check_int_array(root, "a", ck, n, false);
  check_int_array(root, "c", ck, n, true);
  check_int_array(root, "d", ck, n, true);
  if (root.contains("b")) {
    const auto& b = root["b"];
    if (!b.is_array()) {
      ck.add("/b", "b must be an array of rationals");
    } else {
      for (std::size_t i = 0; i < b.size(); ++i) {
        try {
          rational_from_json(b[i]);
        } catch (const InputError& e) {
          ck.add("/b/" + std::to_string(i), e.what());
        }
      }
      if (n && b.size() != *n)
        ck.add("/b", "b has " + std::to_string(b.size()) + " entries for " + std::to_string(*n) + " components");
    }
  }
  for (const char* flag : {"minimal_target", "assert_b1_lt_1", "assert_no_lift"})
    if (root.contains(flag) && !root[flag].is_boolean()) ck.add(std::string("/") + flag, std::string(flag) + " must be true or false");
  if (root.contains("c") && root["c"].is_array())
    for (std::size_t i = 0; i < root["c"].size(); ++i)
      if (root["c"][i].is_number_integer() && root["c"][i].get<long long>() < 0)
        ck.add("/c/" + std::to_string(i), "c entries are intersection numbers with a nef part and cannot be negative");
  if (root.value("minimal_target", false) && root.contains("d") && root["d"].is_array())
    for (std::size_t i = 0; i < root["d"].size(); ++i)
      if (root["d"][i].is_number_integer() && root["d"][i].get<long long>() < 0)
        ck.add("/d/" + std::to_string(i), "d entries cannot be negative over a minimal target");
}

std::vector<Diagnostic> check(const ParsedDocument& doc, DocumentKind kind) {
  std::vector<Diagnostic> out;
  Checker ck(doc, out);
  const auto& root = doc.value;
  if (!root.is_object()) {
    ck.add("", "document must be a JSON object");
    return out;
  }
  ck.check_schema(root);
  switch (kind) {
    case DocumentKind::Graph:
      check_graph(root, ck);
      break;
    case DocumentKind::Cluster:
      check_cluster(root, ck, "");
      break;
    case DocumentKind::WedgeModel:
      check_wedge_model(root, ck);
      break;
  }
  return out;
}

DocumentKind detect_kind(const Json& root) {
  if (root.is_object()) {
    if (root.contains("cluster")) return DocumentKind::WedgeModel;
    if (root.contains("points")) return DocumentKind::Cluster;
  }
  return DocumentKind::Graph;
}

ParsedDocument parse_and_check(const std::string& text, DocumentKind kind) {
  ParsedDocument doc = parse_document(text);
  auto diags = check(doc, kind);
  if (!diags.empty()) throw DocumentError(std::move(diags));
  return doc;
}

}  // namespace

std::vector<Diagnostic> validate(const ParsedDocument& doc, DocumentKind kind) { return check(doc, kind); }

std::vector<Diagnostic> validate(const std::string& text) {
  try {
    ParsedDocument doc = parse_document(text);
    return check(doc, detect_kind(doc.value));
  } catch (const DocumentError& e) {
    return e.diagnostics();
  }
}

DualGraph read_graph(const std::string& text) { return graph_from_json(parse_and_check(text, DocumentKind::Graph).value); }

BlowupCluster read_cluster(const std::string& text) {
  return cluster_from_json(parse_and_check(text, DocumentKind::Cluster).value);
}

WedgeNumericalModel read_wedge_model(const std::string& text) {
  const Json root = parse_and_check(text, DocumentKind::WedgeModel).value;
  WedgeNumericalModel m;
  const auto& c = root["cluster"];
  m.cluster = c.is_string() ? *fixtures::cluster(c.get<std::string>()) : cluster_from_json(c);
  m.special = root["special"].get<PointIndex>();
  if (root.contains("a")) m.a = root["a"].get<std::vector<long>>();
  m.c = root["c"].get<std::vector<long>>();
  m.d = root["d"].get<std::vector<long>>();
  if (root.contains("b")) m.b = rational_vector_from_json(root["b"]);
  m.minimal_target = root.value("minimal_target", false);
  m.assert_b1_lt_1 = root.value("assert_b1_lt_1", false);
  m.assert_no_lift = root.value("assert_no_lift", false);
  return m;
}

Json to_json(const DualGraph& g) {
  Json vs = Json::array();
  for (const auto& v : g.vertices())
    vs.push_back({{"id", v.id}, {"self_int", v.self_int}, {"genus", v.genus}, {"labels", v.labels}});
  Json es = Json::array();
  for (auto [a, b] : g.edges()) es.push_back({a, b});
  return {{"schema", kSchemaVersion}, {"vertices", vs}, {"edges", es}};
}

DualGraph graph_from_json(const Json& j) {
  std::vector<Vertex> vs;
  for (const auto& v : j.at("vertices")) {
    Vertex vx{v.at("id").get<VertexId>(), v.at("self_int").get<long>(), v.value("genus", 0L), {}};
    if (v.contains("labels")) vx.labels = v["labels"].get<std::set<std::string>>();
    vs.push_back(std::move(vx));
  }
  std::vector<Edge> es;
  if (j.contains("edges"))
    for (const auto& e : j["edges"]) es.emplace_back(e.at(0).get<VertexId>(), e.at(1).get<VertexId>());
  return DualGraph(std::move(vs), std::move(es));
}

Json to_json(const BlowupCluster& c) {
  Json ps = Json::array();
  for (const auto& p : c.points()) {
    Json o = {{"parent", nullptr}, {"satellite_of", nullptr}, {"tangent", nullptr}};
    if (p.parent) o["parent"] = *p.parent;
    if (p.satellite_of) o["satellite_of"] = *p.satellite_of;
    if (p.tangent) o["tangent"] = to_string(*p.tangent);
    ps.push_back(o);
  }
  return {{"schema", kSchemaVersion}, {"points", ps}};
}

BlowupCluster cluster_from_json(const Json& j) {
  std::vector<ClusterPoint> points;
  for (const auto& p : j.at("points")) {
    ClusterPoint cp;
    if (p.contains("parent")) cp.parent = index_from_json(p["parent"]);
    if (p.contains("satellite_of")) cp.satellite_of = index_from_json(p["satellite_of"]);
    if (p.contains("tangent")) cp.tangent = tangent_from_json(p["tangent"]);
    points.push_back(cp);
  }
  return BlowupCluster(std::move(points));
}

Json to_json(const Rational& q) { return to_string(q); }

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw InputError("expected an exact rational (integer or \"p/q\"), got " + j.dump());
}

Json to_json(const RationalVector& v) {
  Json out = Json::array();
  for (const auto& q : v) out.push_back(to_json(q));
  return out;
}

RationalVector rational_vector_from_json(const Json& j) {
  RationalVector v;
  for (const auto& x : j) v.push_back(rational_from_json(x));
  return v;
}

Json to_json(const ExactMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(to_json(m.row(i)));
  return rows;
}

ExactMatrix matrix_from_json(const Json& j) {
  std::vector<RationalVector> rows;
  for (const auto& r : j) rows.push_back(rational_vector_from_json(r));
  return ExactMatrix::from_rows(rows);
}

Json to_json(const LocalPolynomial& p) { return to_string(p); }
LocalPolynomial polynomial_from_json(const Json& j) { return parse_polynomial(j.get<std::string>()); }

Json to_json(const ObstructionVerdict& v) {
  Json out = {{"status", to_string(v.status)}};
  if (v.curvette) {
    const auto& w = *v.curvette;
    out["curvette"] = {{"index", w.curvette}, {"order_e", to_json(w.order_e)}, {"order_f", to_json(w.order_f)},
                       {"polynomial", w.polynomial ? to_json(*w.polynomial) : Json(nullptr)}};
  }
  if (v.orders) {
    const auto& w = *v.orders;
    out["orders"] = {{"g", to_json(w.g)}, {"order_e", w.order_e}, {"order_f", w.order_f}, {"order_f2", w.order_f2}};
  }
  if (v.solution) {
    const auto& w = *v.solution;
    out["solution"] = {{"a", to_json(w.a)}, {"offending", w.offending}, {"special_vanishes", w.special_vanishes}};
  }
  return out;
}

ObstructionVerdict verdict_from_json(const Json& j) {
  ObstructionVerdict v;
  v.status = parse_obstruction_status(j.at("status").get<std::string>());
  if (j.contains("curvette")) {
    const auto& w = j["curvette"];
    CurvetteWitness c{w.at("index").get<PointIndex>(), rational_from_json(w.at("order_e")),
                      rational_from_json(w.at("order_f")), std::nullopt};
    if (!w.at("polynomial").is_null()) c.polynomial = polynomial_from_json(w["polynomial"]);
    v.curvette = std::move(c);
  }
  if (j.contains("orders")) {
    const auto& w = j["orders"];
    v.orders = OrderWitness{polynomial_from_json(w.at("g")), w.at("order_e").get<long>(), w.at("order_f").get<long>(),
                            w.at("order_f2").get<long>()};
  }
  if (j.contains("solution")) {
    const auto& w = j["solution"];
    v.solution = SolutionWitness{rational_vector_from_json(w.at("a")), w.at("offending").get<std::vector<std::size_t>>(),
                                 w.at("special_vanishes").get<bool>()};
  }
  return v;
}

std::string to_dot(const DualGraph& g, const std::string& name) {
  std::ostringstream out;
  out << "graph " << name << " {\n  node [shape=circle];\n";
  for (const auto& v : g.vertices()) {
    out << "  v" << v.id << " [label=\"" << v.self_int;
    if (v.genus) out << "\\ng=" << v.genus;
    for (const auto& l : v.labels) out << "\\n" << l;
    out << "\"];\n";
  }
  for (auto [a, b] : g.edges()) out << "  v" << a << " -- v" << b << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace nashkit::io
