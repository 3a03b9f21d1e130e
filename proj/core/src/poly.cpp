#include <algorithm>
#include <cctype>

#include "locoh/errors.hpp"
#include "locoh/gring.hpp"

namespace locoh {

Poly::Poly(GradedRing ring) : ring_(std::move(ring)) {}

Poly Poly::constant(const GradedRing& ring, long long c) {
  return constant(ring, Scalar(ring.field(), c));
}

Poly Poly::constant(const GradedRing& ring, const Scalar& c) {
  return monomial(ring, Exponents(ring.num_vars(), 0), c);
}

Poly Poly::monomial(const GradedRing& ring, Exponents e, const Scalar& c) {
  if (e.size() != ring.num_vars()) throw std::invalid_argument("monomial: wrong number of exponents");
  for (int a : e)
    if (a < 0) throw std::invalid_argument("monomial: negative exponent");
  Poly p(ring);
  p.add_term(e, c);
  return p;
}

Poly Poly::variable(const GradedRing& ring, std::size_t index) {
  Exponents e(ring.num_vars(), 0);
  e.at(index) = 1;
  return monomial(ring, std::move(e), Scalar(ring.field(), 1));
}

void Poly::add_term(const Exponents& e, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

bool Poly::is_homogeneous() const {
  if (terms_.empty()) return true;
  const int d = ring_.degree(terms_.begin()->first);
  return std::all_of(terms_.begin(), terms_.end(),
                     [&](const auto& t) { return ring_.degree(t.first) == d; });
}

std::optional<int> Poly::degree() const {
  if (terms_.empty() || !is_homogeneous()) return std::nullopt;
  return ring_.degree(terms_.begin()->first);
}

int Poly::homogeneous_degree() const {
  if (terms_.empty()) throw NonHomogeneousError("the zero polynomial has no degree");
  if (!is_homogeneous()) throw NonHomogeneousError("polynomial '" + to_string() + "' is not homogeneous");
  return ring_.degree(terms_.begin()->first);
}

Poly Poly::pow(unsigned exponent) const {
  Poly result = constant(ring_, 1);
  Poly base = *this;
  while (exponent > 0) {
    if (exponent & 1u) result = result * base;
    exponent >>= 1u;
    if (exponent > 0) base = base * base;
  }
  return result;
}

Poly Poly::operator-() const {
  Poly p(ring_);
  for (const auto& [e, c] : terms_) p.terms_.emplace(e, -c);
  return p;
}

Poly& Poly::operator+=(const Poly& other) {
  if (!(ring_ == other.ring_)) throw std::invalid_argument("adding polynomials from different rings");
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& other) { return *this += -other; }

Poly operator*(const Poly& a, const Poly& b) {
  if (!(a.ring_ == b.ring_)) throw std::invalid_argument("multiplying polynomials from different rings");
  Poly p(a.ring_);
  Exponents e(a.ring_.num_vars());
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      p.add_term(e, ca * cb);
    }
  return p;
}

bool operator==(const Poly& a, const Poly& b) { return a.ring_ == b.ring_ && a.terms_ == b.terms_; }

namespace {

std::string monomial_text(const GradedRing& ring, const Exponents& e) {
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += ring.var_names()[i];
    if (e[i] > 1) out += '^' + std::to_string(e[i]);
  }
  return out;
}

}  // namespace

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<const Terms::value_type*> ordered;
  for (const auto& t : terms_) ordered.push_back(&t);
  GradedLexGreater greater{ring_.weights()};
  std::sort(ordered.begin(), ordered.end(),
            [&](auto* x, auto* y) { return greater(x->first, y->first); });

  std::string out;
  for (const auto* term : ordered) {
    const auto& [e, c] = *term;
    bool negative = false;
    std::string magnitude;
    if (c.field().is_rational()) {
      negative = sgn(c.rational()) < 0;
      mpq_class q = abs(c.rational());
      magnitude = q.get_str();
    } else {
      magnitude = c.to_string();
    }
    const std::string mono = monomial_text(ring_, e);
    std::string body;
    if (mono.empty())
      body = magnitude;
    else if (magnitude == "1")
      body = mono;
    else
      body = magnitude + "*" + mono;
    if (out.empty())
      out = (negative ? "-" : "") + body;
    else
      out += (negative ? " - " : " + ") + body;
  }
  return out;
}

namespace {

class PolyParser {
 public:
  PolyParser(const GradedRing& ring, std::string_view src) : ring_(ring), src_(src) {}

  Poly parse() {
    skip_ws();
    if (pos_ == src_.size()) throw ParseError("empty polynomial", pos_);
    Poly result(ring_);
    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = src_[pos_] == '-';
      ++pos_;
    }
    while (true) {
      Poly t = term();
      result += negative ? -t : t;
      skip_ws();
      if (pos_ == src_.size()) break;
      if (peek() == '+' || peek() == '-') {
        negative = src_[pos_] == '-';
        ++pos_;
        continue;
      }
      throw ParseError(std::string("unexpected character '") + src_[pos_] + "'", pos_);
    }
    return result;
  }

 private:
  char peek() const { return pos_ < src_.size() ? src_[pos_] : '\0'; }

  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  Poly term() {
    Poly t = factor();
    while (true) {
      skip_ws();
      if (peek() != '*') return t;
      ++pos_;
      t = t * factor();
    }
  }

  mpz_class integer(const char* what) {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    if (pos_ == start) throw ParseError(std::string("expected ") + what, start);
    return mpz_class(std::string(src_.substr(start, pos_ - start)));
  }

  Poly factor() {
    skip_ws();
    const std::size_t start = pos_;
    const char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mpz_class num = integer("integer");
      skip_ws();
      if (peek() == '/') {
        ++pos_;
        const std::size_t den_pos = pos_;
        mpz_class den = integer("denominator");
        if (den == 0) throw ParseError("zero denominator", den_pos);
        try {
          return Poly::constant(ring_, Scalar::from_rational(ring_.field(), mpq_class(num, den)));
        } catch (const std::domain_error&) {
          throw ParseError("denominator not invertible in " + ring_.field().name(), den_pos);
        }
      }
      return Poly::constant(ring_, Scalar::from_integer(ring_.field(), num));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
        ++pos_;
      const std::string name(src_.substr(start, pos_ - start));
      const auto index = ring_.var_index(name);
      if (!index) throw UnknownVariableError(name, start);
      skip_ws();
      unsigned exponent = 1;
      if (peek() == '^') {
        ++pos_;
        skip_ws();
        const std::size_t exp_pos = pos_;
        mpz_class e = integer("exponent");
        if (!e.fits_uint_p() || e.get_ui() > 1000000) throw ParseError("exponent too large", exp_pos);
        exponent = static_cast<unsigned>(e.get_ui());
      }
      return Poly::variable(ring_, *index).pow(exponent);
    }
    if (pos_ == src_.size()) throw ParseError("unexpected end of input", pos_);
    throw ParseError(std::string("unexpected character '") + c + "'", pos_);
  }

  const GradedRing& ring_;
  std::string_view src_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(const GradedRing& ring, std::string_view src) { return PolyParser(ring, src).parse(); }

ExactMatrix mult_matrix(const Poly& f, int d) {
  if (f.is_zero()) {
    const std::size_t n = f.ring().strand_dim(d);
    return ExactMatrix(f.ring().field(), n, n);
  }
  return mult_matrix(f, d, d + f.homogeneous_degree());
}

ExactMatrix mult_matrix(const Poly& f, int d, int target) {
  const GradedRing& ring = f.ring();
  const auto& cols = ring.monomial_basis(d);
  const auto& rows = ring.monomial_basis(target);
  ExactMatrix m(ring.field(), rows.size(), cols.size());
  if (f.is_zero() || cols.empty() || rows.empty()) {
    if (!f.is_zero() && f.homogeneous_degree() != target - d)
      throw NonHomogeneousError("mult_matrix: '" + f.to_string() + "' does not have degree " +
                                std::to_string(target - d));
    return m;
  }
  if (f.homogeneous_degree() != target - d)
    throw NonHomogeneousError("mult_matrix: '" + f.to_string() + "' does not have degree " +
                              std::to_string(target - d));
  Exponents product(ring.num_vars());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    for (const auto& [e, coeff] : f.terms()) {
      for (std::size_t i = 0; i < product.size(); ++i) product[i] = cols[c][i] + e[i];
      m.set(ring.monomial_index(product), c, coeff);
    }
  }
  return m;
}

}  // namespace locoh
