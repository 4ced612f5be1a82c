#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "nashkit/cluster.hpp"
#include "nashkit/dfd.hpp"
#include "nashkit/dual_graph.hpp"
#include "nashkit/exact_matrix.hpp"
#include "nashkit/obstructions.hpp"

namespace nashkit::io {

using Json = nlohmann::json;

/// Every document and report carries "schema": kSchemaVersion.
inline constexpr int kSchemaVersion = 1;

struct Diagnostic {
  std::string path;          // JSON pointer of the offending field, "" for the whole document
  std::optional<std::size_t> line;
  std::string message;

  friend bool operator==(const Diagnostic&, const Diagnostic&) = default;
};
std::string to_string(const Diagnostic& d);

/// Thrown by the document readers; what() lists every diagnostic.
class DocumentError : public InputError {
 public:
  explicit DocumentError(std::vector<Diagnostic> diagnostics);
  const std::vector<Diagnostic>& diagnostics() const { return diagnostics_; }

 private:
  std::vector<Diagnostic> diagnostics_;
};

enum class DocumentKind { Graph, Cluster, WedgeModel };

/// JSON text parsed together with the line of every value.
struct ParsedDocument {
  Json value;
  std::vector<std::pair<std::string, std::size_t>> lines;  // JSON pointer -> line, document order
  std::optional<std::size_t> line_of(const std::string& pointer) const;
};

/// Throws DocumentError for syntax errors (with line and column).
ParsedDocument parse_document(const std::string& text);

/// Schema and invariant checks; empty for a well-formed document. The kind is
/// taken from the fields present ("vertices", "points", "cluster").
std::vector<Diagnostic> validate(const std::string& text);
std::vector<Diagnostic> validate(const ParsedDocument& doc, DocumentKind kind);

DualGraph read_graph(const std::string& text);
BlowupCluster read_cluster(const std::string& text);
WedgeNumericalModel read_wedge_model(const std::string& text);

Json to_json(const DualGraph& g);
Json to_json(const BlowupCluster& c);
DualGraph graph_from_json(const Json& j);
BlowupCluster cluster_from_json(const Json& j);

Json to_json(const Rational& q);
Rational rational_from_json(const Json& j);
Json to_json(const RationalVector& v);
RationalVector rational_vector_from_json(const Json& j);
Json to_json(const ExactMatrix& m);
ExactMatrix matrix_from_json(const Json& j);
Json to_json(const LocalPolynomial& p);
LocalPolynomial polynomial_from_json(const Json& j);
Json to_json(const ObstructionVerdict& v);
ObstructionVerdict verdict_from_json(const Json& j);

/// Graphviz description of the dual graph; vertices show weight, genus and labels.
std::string to_dot(const DualGraph& g, const std::string& name = "dual_graph");

}  // namespace nashkit::io
