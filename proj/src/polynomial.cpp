#include "syzkit/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <sstream>

#include "syzkit/errors.hpp"

namespace syz {

namespace {

bool greater_mono(const RingPtr& ring, const Monomial& a, const Monomial& b) {
  return ring->order().compare(a, b) == std::strong_ordering::greater;
}

void check_ring(const Polynomial& a, const Polynomial& b) {
  if (!same_ring(a.ring(), b.ring())) throw RingMismatch();
}

std::vector<Term> merge(const RingPtr& ring, const std::vector<Term>& a, const std::vector<Term>& b, bool subtract) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    auto c = ring->order().compare(a[i].mono, b[j].mono);
    if (c == std::strong_ordering::greater) {
      out.push_back(a[i++]);
    } else if (c == std::strong_ordering::less) {
      out.push_back(subtract ? Term{b[j].mono, -b[j].coef} : b[j]);
      ++j;
    } else {
      Scalar s = subtract ? a[i].coef - b[j].coef : a[i].coef + b[j].coef;
      if (!s.is_zero()) out.push_back(Term{a[i].mono, std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) out.push_back(subtract ? Term{b[j].mono, -b[j].coef} : b[j]);
  return out;
}

}  // namespace

Polynomial Polynomial::constant(const RingPtr& ring, const Scalar& c) {
  return monomial(ring, ring->one_monomial(), c);
}

Polynomial Polynomial::monomial(const RingPtr& ring, const Monomial& m, const Scalar& c) {
  Polynomial p(ring);
  if (m.num_vars() != ring->num_vars()) throw std::invalid_argument("monomial length does not match ring");
  if (!c.is_zero()) p.terms_.push_back(Term{m, c});
  return p;
}

Polynomial Polynomial::variable(const RingPtr& ring, std::size_t index) {
  return monomial(ring, Monomial::variable(ring->num_vars(), index));
}

Polynomial Polynomial::from_terms(const RingPtr& ring, std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [&](const Term& a, const Term& b) { return greater_mono(ring, a.mono, b.mono); });
  Polynomial p(ring);
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coef += t.coef;
      if (p.terms_.back().coef.is_zero()) p.terms_.pop_back();
    } else if (!t.coef.is_zero()) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

Polynomial Polynomial::from_sorted_terms(const RingPtr& ring, std::vector<Term> terms) {
  Polynomial p(ring);
  p.terms_ = std::move(terms);
  return p;
}

int Polynomial::total_degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

bool Polynomial::is_homogeneous() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [&](const Term& t) { return t.mono.degree() == terms_.front().mono.degree(); });
}

Scalar Polynomial::constant_coef() const {
  if (!terms_.empty() && terms_.back().mono.is_one()) return terms_.back().coef;
  return ring_->field().zero();
}

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  for (auto& t : p.terms_) t.coef = -t.coef;
  return p;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  check_ring(*this, o);
  terms_ = merge(ring_, terms_, o.terms_, false);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  check_ring(*this, o);
  terms_ = merge(ring_, terms_, o.terms_, true);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  check_ring(a, b);
  std::vector<Term> prod;
  prod.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_) prod.push_back(Term{s.mono * t.mono, s.coef * t.coef});
  return Polynomial::from_terms(a.ring_, std::move(prod));
}

Polynomial Polynomial::scaled(const Scalar& c) const {
  if (c.is_zero()) return Polynomial(ring_);
  Polynomial p = *this;
  for (auto& t : p.terms_) t.coef *= c;
  return p;
}

Polynomial Polynomial::times_term(const Monomial& m, const Scalar& c) const {
  if (c.is_zero()) return Polynomial(ring_);
  Polynomial p(ring_);
  p.terms_.reserve(terms_.size());
  for (const auto& t : terms_) p.terms_.push_back(Term{t.mono * m, t.coef * c});
  return p;
}

Polynomial Polynomial::monic() const {
  if (is_zero() || lead_coef().is_one()) return *this;
  return scaled(lead_coef().inverse());
}

Polynomial Polynomial::extended_to(const RingPtr& bigger) const {
  std::size_t extra = bigger->num_vars() - ring_->num_vars();
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) out.push_back(Term{t.mono.extended(extra), t.coef});
  // Adjoining trailing variables at exponent zero preserves grevlex order.
  return from_sorted_terms(bigger, std::move(out));
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    std::string c = t.coef.to_string();
    bool negative = !c.empty() && c[0] == '-';
    if (negative) c.erase(0, 1);
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    bool unit = c == "1";
    if (!unit || t.mono.is_one()) {
      os << c;
      if (!t.mono.is_one()) os << "*";
    }
    bool first_var = true;
    for (std::size_t i = 0; i < t.mono.num_vars(); ++i) {
      if (t.mono[i] == 0) continue;
      if (!first_var) os << "*";
      first_var = false;
      os << ring_->variable_names()[i];
      if (t.mono[i] > 1) os << "^" << t.mono[i];
    }
  }
  return os.str();
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (!same_ring(a.ring_, b.ring_)) return false;
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (!(a.terms_[i].mono == b.terms_[i].mono) || !(a.terms_[i].coef == b.terms_[i].coef)) return false;
  return true;
}

Polynomial poly_op(const Polynomial& f, const Polynomial& g, PolyOpKind kind) {
  switch (kind) {
    case PolyOpKind::add: return f + g;
    case PolyOpKind::sub: return f - g;
    case PolyOpKind::mul: return f * g;
  }
  throw std::invalid_argument("unknown polynomial operation");
}

std::ostream& operator<<(std::ostream& os, const Polynomial& f) { return os << f.to_string(); }

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, const RingPtr& ring) : text_(text), ring_(ring) {}

  Polynomial parse() {
    skip_ws();
    if (at_end()) fail("empty polynomial");
    std::vector<Term> terms;
    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = peek() == '-';
      ++pos_;
      skip_ws();
    }
    terms.push_back(parse_term(negative));
    skip_ws();
    while (!at_end()) {
      char c = peek();
      if (c != '+' && c != '-') fail(std::string("unexpected character '") + c + "'");
      ++pos_;
      skip_ws();
      terms.push_back(parse_term(c == '-'));
      skip_ws();
    }
    return Polynomial::from_terms(ring_, std::move(terms));
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, 0, pos_ + 1); }

  std::string read_digits() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  Term parse_term(bool negative) {
    if (at_end()) fail("missing term");
    mpq_class coef = 1;
    Monomial mono = ring_->one_monomial();
    bool need_factor = true;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      mpz_class num(read_digits());
      mpz_class den = 1;
      skip_ws();
      if (!at_end() && peek() == '/') {
        ++pos_;
        skip_ws();
        std::string d = read_digits();
        if (d.empty()) fail("malformed coefficient denominator");
        den = mpz_class(d);
        if (den == 0) fail("zero denominator");
      }
      coef = mpq_class(num, den);
      coef.canonicalize();
      need_factor = false;
      skip_ws();
      if (!at_end() && peek() == '*') {
        ++pos_;
        skip_ws();
        need_factor = true;
      }
    }
    if (need_factor) {
      parse_factor(mono);
      skip_ws();
      while (!at_end() && peek() == '*') {
        ++pos_;
        skip_ws();
        parse_factor(mono);
        skip_ws();
      }
    }
    if (negative) coef = -coef;
    return Term{mono, ring_->field().from_rational(coef)};
  }

  void parse_factor(Monomial& mono) {
    if (at_end()) fail("missing factor");
    char c = peek();
    if (!(std::isalpha(static_cast<unsigned char>(c)) || c == '_')) fail(std::string("unexpected character '") + c + "'");
    std::size_t start = pos_;
    while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) ++pos_;
    std::string name(text_.substr(start, pos_ - start));
    auto idx = ring_->index_of(name);
    if (!idx) {
      pos_ = start;
      fail("unknown variable '" + name + "'");
    }
    int power = 1;
    skip_ws();
    if (!at_end() && peek() == '^') {
      ++pos_;
      skip_ws();
      std::string digits = read_digits();
      if (digits.empty() || digits.size() > 4) fail("malformed exponent");
      power = std::stoi(digits);
    }
    mono.set(*idx, mono[*idx] + power);
  }

  std::string_view text_;
  const RingPtr& ring_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_poly(std::string_view text, const RingPtr& ring) { return PolyParser(text, ring).parse(); }

}  // namespace syz
