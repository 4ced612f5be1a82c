#include "nashkit/euler.hpp"

#include "nashkit/error.hpp"

namespace nashkit {

namespace {

long weight(const DualGraph& g, std::size_t i) { return g.vertices()[i].self_int; }
long genus(const DualGraph& g, std::size_t i) { return g.vertices()[i].genus; }

long off_diagonal_degree(const DualGraph& g, std::size_t i) {
  long s = 0;
  for (std::size_t k = 0; k < g.size(); ++k)
    if (k != i) s += g.multiplicity(i, k);
  return s;
}

}  // namespace

void validate(const EulerInput& in) {
  if (in.a.size() != in.graph.size())
    throw InputError("coefficient vector has " + std::to_string(in.a.size()) + " entries for " +
                     std::to_string(in.graph.size()) + " vertices");
  for (std::size_t i = 0; i < in.a.size(); ++i)
    if (in.a[i] < 0) throw InputError("coefficient a_" + std::to_string(i) + " is negative");
  in.graph.index_of(in.attach);
}

long b0_bound(const EulerInput& in) {
  validate(in);
  long a0 = in.a[in.graph.index_of(in.attach)];
  if (a0 == 0)
    throw InputError("a at the attach component is 0: the wedge lifts and the disk estimate does not apply");
  return a0 - 1;
}

long balls_bound(const EulerInput& in) {
  validate(in);
  const auto& g = in.graph;
  long s = 1;
  for (std::size_t i = 0; i < g.size(); ++i) {
    long row = weight(g, i) + off_diagonal_degree(g, i);
    s += in.a[i] * row;
  }
  return s;
}

long tubes_bound(const EulerInput& in) {
  validate(in);
  const auto& g = in.graph;
  const std::size_t attach = g.index_of(in.attach);
  long s = 0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    long term = 2 - 2 * genus(g, i) - off_diagonal_degree(g, i);
    if (i == attach) term -= 1;
    s += in.a[i] * term;
  }
  return s;
}

long final_bound(const EulerInput& in) {
  validate(in);
  const auto& g = in.graph;
  long s = 0;
  for (std::size_t i = 0; i < g.size(); ++i) s += in.a[i] * (2 - 2 * genus(g, i) + weight(g, i));
  long assembled = b0_bound(in) + balls_bound(in) + tubes_bound(in);
  if (assembled != s)
    throw InvariantViolation("Euler bounds do not assemble: " + std::to_string(assembled) + " vs " + std::to_string(s));
  return s;
}

EulerCertificate contradiction_certificate(const EulerInput& in) {
  EulerCertificate c;
  c.b0 = b0_bound(in);
  c.balls = balls_bound(in);
  c.tubes = tubes_bound(in);
  c.bound = final_bound(in);
  c.contradicts_disk = c.bound < 1;
  for (const auto& v : in.graph.vertices())
    if (v.genus == 0 && v.self_int == -1) c.minimality_flags.push_back(v.id);
  return c;
}

}  // namespace nashkit
