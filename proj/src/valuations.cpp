#include "nashkit/valuations.hpp"

#include <algorithm>
#include <numeric>

namespace nashkit {

ExactMatrix negative_inverse_intersection(const BlowupCluster& cluster) {
  return -inverse_exact(intersection_matrix(simulate(cluster)));
}

ValuationVector curvette_orders(const BlowupCluster& cluster, PointIndex e) {
  if (e >= cluster.size()) throw InputError("point index out of range");
  return negative_inverse_intersection(cluster).row(e);
}

namespace {

void require_coordinates(const BlowupCluster& cluster) {
  for (PointIndex i = 1; i < cluster.size(); ++i)
    if (!cluster.direction(i))
      throw InputError("missing tangent data on free point " + std::to_string(i));
}

// Strict transform of g in the chart of every point.
std::vector<LocalPolynomial> strict_transforms(const BlowupCluster& cluster, const LocalPolynomial& g) {
  if (g.is_zero()) throw InputError("ord of the zero polynomial is undefined");
  require_coordinates(cluster);
  std::vector<LocalPolynomial> local(cluster.size());
  local[0] = g;
  for (PointIndex i = 1; i < cluster.size(); ++i)
    local[i] = local[*cluster.chart_parent(i)].chart_transform(*cluster.direction(i));
  return local;
}

Tangent axis_direction(const BlowupCluster& cluster, PointIndex q, PointIndex component) {
  // x = 0 is the infinite slope, y = 0 the zero slope.
  if (cluster.x_axis(q) == component) return Tangent::infinity();
  return Tangent::finite(0);
}

bool has_chart_child_at(const BlowupCluster& cluster, PointIndex q, const Tangent& dir) {
  for (PointIndex k : cluster.chart_children(q))
    if (cluster.direction(k) == dir) return true;
  return false;
}

}  // namespace

OrderTrace order_trace(const BlowupCluster& cluster, const LocalPolynomial& g) {
  auto local = strict_transforms(cluster, g);
  OrderTrace tr;
  tr.multiplicities.resize(cluster.size());
  tr.orders.resize(cluster.size());
  for (PointIndex j = 0; j < cluster.size(); ++j) {
    tr.multiplicities[j] = local[j].order();
    long v = tr.multiplicities[j];
    for (PointIndex i : cluster.carriers(j)) v += tr.orders[i];
    tr.orders[j] = v;
  }
  return tr;
}

long ord_poly(const BlowupCluster& cluster, const LocalPolynomial& g, PointIndex e) {
  if (e >= cluster.size()) throw InputError("point index out of range");
  if (!cluster.has_coordinates(e))
    throw InputError("missing tangent data on the chain of point " + std::to_string(e));
  auto jm = minimal_joint_model(cluster, e, e);
  for (PointIndex i = 1; i < jm.cluster.size(); ++i)
    if (!jm.cluster.direction(i))
      throw InputError("missing tangent data on free point " + std::to_string(jm.original[i]));
  return order_trace(jm.cluster, g).orders[jm.e];
}

namespace {

// Intersection number at the origin with the line y = 0: order of g(x, 0).
long order_along_y_axis(const LocalPolynomial& g) {
  for (const auto& [exp, c] : g.terms())
    if (exp.second == 0) return exp.first;
  throw InvariantViolation("strict transform contains an exceptional component");
}

}  // namespace

std::vector<long> strict_transform_profile(const BlowupCluster& cluster, const LocalPolynomial& g) {
  auto local = strict_transforms(cluster, g);
  const std::size_t n = cluster.size();
  std::vector<long> t(n, 0);
  for (PointIndex i = 0; i < n; ++i) {
    // Points of F_i right after blowing up p_i, minus those blown up later.
    long here = local[i].order();
    for (PointIndex k : cluster.chart_children(i)) here -= local[i].tangent_multiplicity(*cluster.direction(k));
    t[i] += here;
    // Where F_i passes through a later center q, its strict transform leaves
    // through the axis direction of q; count the meeting there if nothing
    // else is blown up at that spot.
    for (PointIndex q = i + 1; q < n; ++q) {
      if (!cluster.is_proximate(q, i)) continue;
      Tangent dir = axis_direction(cluster, q, i);
      if (!has_chart_child_at(cluster, q, dir)) t[i] += order_along_y_axis(local[q].chart_transform(dir));
    }
  }
  return t;
}

namespace {

// Truncated power series in one variable, coefficient k of t^k, mod t^K.
using Series = std::vector<Rational>;

Series series_mul(const Series& a, const Series& b, std::size_t K) {
  Series r(K, Rational(0));
  for (std::size_t i = 0; i < std::min(a.size(), K); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size() && i + j < K; ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

Series series_inverse(const Series& a, std::size_t K) {
  Series r(K, Rational(0));
  r[0] = 1 / a[0];
  for (std::size_t k = 1; k < K; ++k) {
    Rational acc = 0;
    for (std::size_t j = 1; j <= k && j < a.size(); ++j) acc += a[j] * r[k - j];
    r[k] = -acc / a[0];
  }
  return r;
}

// u^(1/n) for u(0) = 1, through exp(log(u) / n).
Series series_root(const Series& u, long n, std::size_t K) {
  Series du(K, Rational(0));
  for (std::size_t k = 1; k < std::min(u.size(), K + 1); ++k) du[k - 1] = u[k] * static_cast<long>(k);
  Series dlog = series_mul(du, series_inverse(u, K), K);
  Series h(K, Rational(0));  // log(u) / n
  for (std::size_t k = 1; k < K; ++k) h[k] = dlog[k - 1] / (static_cast<long>(k) * n);
  Series w(K, Rational(0));
  w[0] = 1;
  for (std::size_t k = 1; k < K; ++k) {
    Rational acc = 0;
    for (std::size_t j = 1; j <= k; ++j) acc += h[j] * static_cast<long>(j) * w[k - j];
    w[k] = acc / static_cast<long>(k);
  }
  return w;
}

// Solves tau = t * w(t) for t as a series in tau (Lagrange inversion).
Series series_revert(const Series& w, std::size_t K) {
  Series winv = series_inverse(w, K);
  Series power(K, Rational(0));
  power[0] = 1;
  Series t(K, Rational(0));
  for (std::size_t k = 1; k < K; ++k) {
    power = series_mul(power, winv, K);  // w^{-k}
    t[k] = power[k - 1] / static_cast<long>(k);
  }
  return t;
}

Series series_compose(const UniPoly& p, const Series& t, std::size_t K) {
  Series r(K, Rational(0));
  for (std::size_t k = p.size(); k-- > 0;) {
    r = series_mul(r, t, K);
    r[0] += p[k];
  }
  return r;
}

// Implicit equation of the branch (tau^n, s(tau)): unknowns x^a y^b with
// weighted degree n*a + N*b <= n*N.
LocalPolynomial implicitize_branch(long n, const Series& s) {
  const long N = static_cast<long>(s.size()) - 1;
  std::vector<std::pair<int, int>> monomials;
  for (long b = 0; b <= n; ++b)
    for (long a = 0; n * a + N * b <= n * N; ++a) monomials.emplace_back(static_cast<int>(a), static_cast<int>(b));
  const std::size_t rows = static_cast<std::size_t>(n * N) + 1;
  std::vector<Series> spow{Series{1}};
  for (long b = 1; b <= n; ++b) spow.push_back(series_mul(spow.back(), s, rows));
  ExactMatrix sys(rows, monomials.size());
  for (std::size_t c = 0; c < monomials.size(); ++c) {
    auto [a, b] = monomials[c];
    const Series& sb = spow[static_cast<std::size_t>(b)];
    for (std::size_t k = 0; k < sb.size(); ++k) {
      std::size_t row = k + static_cast<std::size_t>(n * a);
      if (row < rows) sys(row, c) = sb[k];
    }
  }
  auto basis = nullspace(sys);
  if (basis.empty()) return {};
  LocalPolynomial f;
  Integer den_lcm = 1, num_gcd = 0;
  for (const auto& q : basis[0]) {
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), q.get_den_mpz_t());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), q.get_num_mpz_t());
  }
  Rational scale(den_lcm, num_gcd);
  scale.canonicalize();
  for (std::size_t c = 0; c < monomials.size(); ++c)
    f += LocalPolynomial::monomial(monomials[c].first, monomials[c].second, basis[0][c] * scale);
  return f;
}

std::size_t leading_order(const UniPoly& p) {
  std::size_t k = 0;
  while (k < p.size() && p[k] == 0) ++k;
  return k;
}

// Branch at t = 0 of the polynomial parametrization (xt, yt), truncated
// after `extra` further terms of the Puiseux expansion.
LocalPolynomial branch_equation(const UniPoly& xt, const UniPoly& yt, std::size_t extra) {
  const bool swapped = leading_order(yt) < leading_order(xt);
  const UniPoly& u = swapped ? yt : xt;  // the coordinate of lower order plays x
  const UniPoly& v = swapped ? xt : yt;
  const std::size_t n = leading_order(u);
  if (n == 0 || n >= u.size()) throw InvariantViolation("degenerate curvette parametrization");
  const std::size_t K = n + extra + 1;
  // u = lead * t^n * unit(t); rescale so the unit starts at 1.
  const Rational lead = u[n];
  Series unit(K, Rational(0));
  for (std::size_t k = n; k < u.size() && k - n < K; ++k) unit[k - n] = u[k] / lead;
  Series w = series_root(unit, static_cast<long>(n), K);
  Series t_of_tau = series_revert(w, K);
  Series s = series_compose(v, t_of_tau, K);
  LocalPolynomial f = implicitize_branch(static_cast<long>(n), s);  // in (x / lead, y)
  LocalPolynomial out;
  for (const auto& [e, c] : f.terms()) {
    Rational coef = c;
    for (int k = 0; k < e.first; ++k) coef /= lead;
    out += swapped ? LocalPolynomial::monomial(e.second, e.first, coef) : LocalPolynomial::monomial(e.first, e.second, coef);
  }
  Integer den_lcm = 1;
  for (const auto& [e, c] : out.terms()) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  return Rational(den_lcm) * out;
}

}  // namespace

LocalPolynomial curvette_polynomial(const BlowupCluster& cluster, PointIndex i) {
  if (i >= cluster.size()) throw InputError("point index out of range");
  if (!cluster.has_coordinates(i))
    throw InputError("missing tangent data on the chain of point " + std::to_string(i));
  auto jm = minimal_joint_model(cluster, i, i);
  const BlowupCluster& chain = jm.cluster;
  const PointIndex top = jm.e;

  // A general slope on F_i: nonzero and not used by any point blown up on it.
  long gamma = 1;
  while (has_chart_child_at(cluster, i, Tangent::finite(gamma))) ++gamma;
  UniPoly xt{0, 1};
  UniPoly yt{0, Rational(gamma)};
  for (PointIndex q = top; q != 0;) {
    const Tangent dir = *chain.direction(q);
    UniPoly x_parent, y_parent;
    if (dir.at_infinity) {
      x_parent = uni_mul(xt, yt);
      y_parent = xt;
    } else {
      x_parent = xt;
      y_parent = uni_mul(xt, uni_add(yt, UniPoly{dir.slope}));
    }
    xt = std::move(x_parent);
    yt = std::move(y_parent);
    q = *chain.chart_parent(q);
  }

  // Verify against the whole cluster when possible, so the point reached on
  // F_i is also away from every later center.
  const bool whole = cluster.has_coordinates();
  const BlowupCluster& check = whole ? cluster : chain;
  std::vector<long> expected(check.size(), 0);
  expected[whole ? i : top] = 1;
  const long self_order = to_long(negative_inverse_intersection(chain)(top, top).get_num());
  for (std::size_t extra = static_cast<std::size_t>(self_order) + 2; extra <= 64 * static_cast<std::size_t>(self_order + 2);
       extra *= 2) {
    LocalPolynomial f = branch_equation(xt, yt, extra);
    if (!f.is_zero() && strict_transform_profile(check, f) == expected) return f;
  }
  throw InvariantViolation("could not build a curvette polynomial for point " + std::to_string(i));
}

GermTouch smooth_germ_touch(const BlowupCluster& cluster, const LocalPolynomial& g) {
  if (g.is_zero() || g.order() != 1) throw InputError("expected a smooth germ through the origin");
  auto tr = order_trace(cluster, g);
  auto t = strict_transform_profile(cluster, g);
  GermTouch out;
  out.centers_touched = std::count_if(tr.multiplicities.begin(), tr.multiplicities.end(), [](int m) { return m >= 1; });
  std::size_t hits = 0;
  for (PointIndex i = 0; i < cluster.size(); ++i)
    if (t[i] > 0) {
      out.last_component = i;
      ++hits;
    }
  if (hits != 1 || t[out.last_component] != 1)
    throw InvariantViolation("smooth germ does not meet the exceptional divisor at a single component transversely");
  return out;
}

const char* to_string(Comparison c) {
  switch (c) {
    case Comparison::LessEq:
      return "LESS_EQ";
    case Comparison::GreaterEq:
      return "GREATER_EQ";
    case Comparison::Equal:
      return "EQUAL";
    case Comparison::Incomparable:
      return "INCOMPARABLE";
  }
  return "?";
}

Comparison compare(const BlowupCluster& cluster, PointIndex e, PointIndex f) {
  if (e >= cluster.size() || f >= cluster.size()) throw InputError("point index out of range");
  if (e == f) return Comparison::Equal;
  auto jm = minimal_joint_model(cluster, e, f);
  auto neg_inv = negative_inverse_intersection(jm.cluster);
  auto re = neg_inv.row(jm.e), rf = neg_inv.row(jm.f);
  bool le = true, ge = true;
  for (std::size_t i = 0; i < re.size(); ++i) {
    if (re[i] > rf[i]) le = false;
    if (re[i] < rf[i]) ge = false;
  }
  if (le && ge) throw InvariantViolation("distinct components with identical valuation rows");
  if (le) return Comparison::LessEq;
  if (ge) return Comparison::GreaterEq;
  return Comparison::Incomparable;
}

}  // namespace nashkit
