#include "nashkit/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <climits>

namespace nashkit {

LocalPolynomial LocalPolynomial::constant(const Rational& c) { return monomial(0, 0, c); }

LocalPolynomial LocalPolynomial::monomial(int a, int b, const Rational& c) {
  if (a < 0 || b < 0) throw InputError("negative exponent");
  LocalPolynomial p;
  p.add_term(a, b, c);
  return p;
}

void LocalPolynomial::add_term(int a, int b, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(Exponent{a, b}, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational LocalPolynomial::coefficient(int a, int b) const {
  auto it = terms_.find({a, b});
  return it == terms_.end() ? Rational(0) : it->second;
}

int LocalPolynomial::order() const {
  if (is_zero()) throw InputError("order of the zero polynomial");
  int m = INT_MAX;
  for (const auto& [e, c] : terms_) m = std::min(m, e.first + e.second);
  return m;
}

LocalPolynomial LocalPolynomial::initial_form() const {
  const int m = order();
  LocalPolynomial h;
  for (const auto& [e, c] : terms_)
    if (e.first + e.second == m) h.add_term(e.first, e.second, c);
  return h;
}

namespace {

// Binomial row of (y + c)^b as coefficients of y^k.
std::vector<Rational> shifted_power(int b, const Rational& c) {
  std::vector<Rational> row{Rational(1)};
  for (int i = 0; i < b; ++i) {
    std::vector<Rational> next(row.size() + 1, Rational(0));
    for (std::size_t k = 0; k < row.size(); ++k) {
      next[k + 1] += row[k];
      next[k] += row[k] * c;
    }
    row = std::move(next);
  }
  return row;
}

}  // namespace

LocalPolynomial LocalPolynomial::chart_transform(const Tangent& direction) const {
  const int m = order();
  LocalPolynomial out;
  for (const auto& [e, coef] : terms_) {
    auto [a, b] = e;
    if (direction.at_infinity) {
      // x^a y^b -> (xy)^a x^b
      out.add_term(a + b - m, a, coef);
    } else {
      auto row = shifted_power(b, direction.slope);
      for (std::size_t k = 0; k < row.size(); ++k) out.add_term(a + b - m, static_cast<int>(k), coef * row[k]);
    }
  }
  return out;
}

int LocalPolynomial::tangent_multiplicity(const Tangent& direction) const {
  const LocalPolynomial h = initial_form();
  if (direction.at_infinity) {
    int mult = INT_MAX;
    for (const auto& [e, c] : h.terms_) mult = std::min(mult, e.first);
    return mult;
  }
  // u(t) = h(1, t); count how often (t - c) divides it.
  int deg = 0;
  for (const auto& [e, c] : h.terms_) deg = std::max(deg, e.second);
  std::vector<Rational> u(static_cast<std::size_t>(deg) + 1, Rational(0));
  for (const auto& [e, c] : h.terms_) u[static_cast<std::size_t>(e.second)] = c;
  int mult = 0;
  const Rational& c = direction.slope;
  while (u.size() > 1) {
    // Horner: remainder of division by (t - c).
    std::vector<Rational> q(u.size() - 1, Rational(0));
    Rational acc = 0;
    for (std::size_t k = u.size(); k-- > 0;) {
      acc = acc * c + u[k];
      if (k > 0) q[k - 1] = acc;
    }
    if (acc != 0) break;
    ++mult;
    u = std::move(q);
  }
  return mult;
}

LocalPolynomial& LocalPolynomial::operator+=(const LocalPolynomial& o) {
  for (const auto& [e, c] : o.terms_) add_term(e.first, e.second, c);
  return *this;
}

LocalPolynomial& LocalPolynomial::operator-=(const LocalPolynomial& o) {
  for (const auto& [e, c] : o.terms_) add_term(e.first, e.second, -c);
  return *this;
}

LocalPolynomial operator*(const LocalPolynomial& a, const LocalPolynomial& b) {
  LocalPolynomial r;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) r.add_term(ea.first + eb.first, ea.second + eb.second, ca * cb);
  return r;
}

LocalPolynomial operator*(const Rational& c, const LocalPolynomial& p) {
  LocalPolynomial r;
  for (const auto& [e, v] : p.terms_) r.add_term(e.first, e.second, c * v);
  return r;
}

namespace {

class PolyParser {
 public:
  explicit PolyParser(std::string_view text) : s_(normalize(text)) {}

  LocalPolynomial parse() {
    LocalPolynomial p;
    skip();
    if (pos_ == s_.size()) fail("empty polynomial");
    bool first = true;
    while (pos_ < s_.size()) {
      int sign = 1;
      if (s_[pos_] == '+' || s_[pos_] == '-') {
        sign = s_[pos_] == '-' ? -1 : 1;
        ++pos_;
        skip();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      p += Rational(sign) * term();
      first = false;
      skip();
    }
    return p;
  }

 private:
  static std::string normalize(std::string_view text) {
    std::string out;
    for (std::size_t i = 0; i < text.size(); ++i) {
      // U+2212 MINUS SIGN
      if (i + 2 < text.size() && static_cast<unsigned char>(text[i]) == 0xE2 &&
          static_cast<unsigned char>(text[i + 1]) == 0x88 && static_cast<unsigned char>(text[i + 2]) == 0x92) {
        out += '-';
        i += 2;
      } else {
        out += text[i];
      }
    }
    return out;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw InputError("polynomial parse error at column " + std::to_string(pos_ + 1) + ": " + what);
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  std::string digits() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return s_.substr(start, pos_ - start);
  }

  LocalPolynomial term() {
    LocalPolynomial t = LocalPolynomial::constant(1);
    for (;;) {
      skip();
      if (pos_ == s_.size()) fail("expected a factor");
      char ch = s_[pos_];
      if (std::isdigit(static_cast<unsigned char>(ch))) {
        std::string num = digits();
        if (pos_ < s_.size() && s_[pos_] == '/') {
          ++pos_;
          num += "/" + digits();
        }
        t = parse_rational(num) * t;
      } else if (ch == 'x' || ch == 'y') {
        ++pos_;
        int e = 1;
        skip();
        if (pos_ < s_.size() && s_[pos_] == '^') {
          ++pos_;
          skip();
          std::string d = digits();
          if (d.size() > 4) fail("exponent too large");
          e = std::stoi(d);
        }
        t = t * (ch == 'x' ? LocalPolynomial::monomial(e, 0) : LocalPolynomial::monomial(0, e));
      } else {
        fail(std::string("unexpected character '") + ch + "'");
      }
      skip();
      if (pos_ < s_.size() && s_[pos_] == '*') {
        ++pos_;
        continue;
      }
      return t;
    }
  }

  std::string s_;
  std::size_t pos_ = 0;
};

}  // namespace

LocalPolynomial parse_polynomial(std::string_view text) { return PolyParser(text).parse(); }

std::string to_string(const LocalPolynomial& p) {
  if (p.is_zero()) return "0";
  std::vector<std::pair<LocalPolynomial::Exponent, Rational>> terms(p.terms().begin(), p.terms().end());
  std::stable_sort(terms.begin(), terms.end(), [](const auto& l, const auto& r) {
    int dl = l.first.first + l.first.second, dr = r.first.first + r.first.second;
    if (dl != dr) return dl < dr;
    return l.first.first > r.first.first;
  });
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms) {
    Rational mag = abs(c);
    if (first)
      out += c < 0 ? "-" : "";
    else
      out += c < 0 ? " - " : " + ";
    first = false;
    std::vector<std::string> factors;
    if (mag != 1 || (e.first == 0 && e.second == 0)) factors.push_back(to_string(mag));
    if (e.first > 0) factors.push_back(e.first == 1 ? "x" : "x^" + std::to_string(e.first));
    if (e.second > 0) factors.push_back(e.second == 1 ? "y" : "y^" + std::to_string(e.second));
    for (std::size_t k = 0; k < factors.size(); ++k) out += (k ? "*" : "") + factors[k];
  }
  return out;
}

UniPoly uni_mul(const UniPoly& a, const UniPoly& b) {
  if (a.empty() || b.empty()) return {};
  UniPoly r(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

UniPoly uni_add(const UniPoly& a, const UniPoly& b) {
  UniPoly r(std::max(a.size(), b.size()), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return r;
}

}  // namespace nashkit
