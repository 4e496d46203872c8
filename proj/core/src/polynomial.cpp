#include "closurelab/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace closurelab {

PolyRing::PolyRing(std::uint32_t p, std::vector<std::string> vars, MonomialOrder order)
    : p_(p), vars_(std::move(vars)), order_(order) {}

RingPtr PolyRing::make(std::uint32_t characteristic, std::vector<std::string> variables,
                       MonomialOrder order) {
  if (characteristic != 0 &&
      (characteristic >= (1u << 31) || !isPrime(characteristic)))
    throw std::invalid_argument("PolyRing: characteristic must be 0 or a prime < 2^31");
  if (variables.empty()) throw std::invalid_argument("PolyRing: no variables");
  for (size_t i = 0; i < variables.size(); ++i) {
    if (variables[i].empty()) throw std::invalid_argument("PolyRing: empty variable name");
    for (size_t j = i + 1; j < variables.size(); ++j)
      if (variables[i] == variables[j])
        throw std::invalid_argument("PolyRing: duplicate variable " + variables[i]);
  }
  return RingPtr(new PolyRing(characteristic, std::move(variables), order));
}

int PolyRing::variableIndex(std::string_view name) const {
  for (size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i] == name) return static_cast<int>(i);
  return -1;
}

bool PolyRing::sameStructure(const PolyRing& o) const {
  return p_ == o.p_ && vars_ == o.vars_ && order_ == o.order_;
}

RingPtr PolyRing::withOrder(MonomialOrder order) const {
  return RingPtr(new PolyRing(p_, vars_, order));
}

std::string PolyRing::description() const {
  std::string s = p_ == 0 ? "Q" : "F" + std::to_string(p_);
  s += "[";
  for (size_t i = 0; i < vars_.size(); ++i) {
    if (i) s += ",";
    s += vars_[i];
  }
  s += "]";
  return s;
}

void requireSameRing(const Polynomial& a, const Polynomial& b) {
  if (!a.ring()->sameStructure(*b.ring()))
    throw std::invalid_argument("Polynomial: mixed-ring operands");
}

Polynomial Polynomial::zero(RingPtr ring) { return Polynomial(std::move(ring), {}); }

Polynomial Polynomial::constant(RingPtr ring, long value) {
  FieldScalar c = FieldScalar::ofInt(value, ring->characteristic());
  return constant(std::move(ring), std::move(c));
}

Polynomial Polynomial::constant(RingPtr ring, FieldScalar value) {
  if (value.characteristic() != ring->characteristic())
    throw std::invalid_argument("Polynomial: coefficient field mismatch");
  if (value.isZero()) return zero(std::move(ring));
  Monomial u = Monomial::unit(ring->nvars());
  return Polynomial(std::move(ring), {Term{std::move(u), std::move(value)}});
}

Polynomial Polynomial::variable(RingPtr ring, int index) {
  if (index < 0 || index >= ring->nvars())
    throw std::invalid_argument("Polynomial: variable index out of range");
  std::vector<int> e(static_cast<size_t>(ring->nvars()), 0);
  e[static_cast<size_t>(index)] = 1;
  FieldScalar c = FieldScalar::one(ring->characteristic());
  return Polynomial(std::move(ring), {Term{Monomial(std::move(e)), std::move(c)}});
}

Polynomial Polynomial::monomial(RingPtr ring, Monomial m, FieldScalar coeff) {
  if (m.nvars() != ring->nvars())
    throw std::invalid_argument("Polynomial: monomial arity mismatch");
  if (coeff.characteristic() != ring->characteristic())
    throw std::invalid_argument("Polynomial: coefficient field mismatch");
  if (coeff.isZero()) return zero(std::move(ring));
  return Polynomial(std::move(ring), {Term{std::move(m), std::move(coeff)}});
}

Polynomial Polynomial::fromTerms(RingPtr ring, std::vector<Term> terms) {
  const MonomialOrder& ord = ring->order();
  for (const Term& t : terms) {
    if (t.mono.nvars() != ring->nvars())
      throw std::invalid_argument("Polynomial: monomial arity mismatch");
    if (t.coeff.characteristic() != ring->characteristic())
      throw std::invalid_argument("Polynomial: coefficient field mismatch");
  }
  std::sort(terms.begin(), terms.end(),
            [&](const Term& a, const Term& b) { return ord.greater(a.mono, b.mono); });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (Term& t : terms) {
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coeff = out.back().coeff + t.coeff;
    } else {
      out.push_back(std::move(t));
    }
  }
  std::erase_if(out, [](const Term& t) { return t.coeff.isZero(); });
  return Polynomial(std::move(ring), std::move(out));
}

bool Polynomial::isConstant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.isUnit());
}

int Polynomial::totalDegree() const {
  int d = -1;
  for (const Term& t : terms_) d = std::max(d, t.mono.totalDegree());
  return d;
}

const Term& Polynomial::leadingTerm() const {
  if (terms_.empty()) throw std::invalid_argument("Polynomial: zero has no leading term");
  return terms_.front();
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  requireSameRing(*this, o);
  const MonomialOrder& ord = ring_->order();
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  size_t i = 0, j = 0;
  while (i < terms_.size() && j < o.terms_.size()) {
    int c = ord.compare(terms_[i].mono, o.terms_[j].mono);
    if (c > 0) {
      out.push_back(terms_[i++]);
    } else if (c < 0) {
      out.push_back(o.terms_[j++]);
    } else {
      FieldScalar s = terms_[i].coeff + o.terms_[j].coeff;
      if (!s.isZero()) out.push_back(Term{terms_[i].mono, std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i < terms_.size(); ++i) out.push_back(terms_[i]);
  for (; j < o.terms_.size(); ++j) out.push_back(o.terms_[j]);
  return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::operator-() const {
  std::vector<Term> out(terms_);
  for (Term& t : out) t.coeff = -t.coeff;
  return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::scaled(const FieldScalar& c) const {
  if (c.characteristic() != ring_->characteristic())
    throw std::invalid_argument("Polynomial: coefficient field mismatch");
  if (c.isZero()) return zero(ring_);
  std::vector<Term> out(terms_);
  for (Term& t : out) t.coeff = t.coeff * c;
  return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::timesMonomial(const Monomial& m) const {
  std::vector<Term> out(terms_);
  for (Term& t : out) t.mono = t.mono * m;
  return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  requireSameRing(*this, o);
  std::vector<Term> cross;
  cross.reserve(terms_.size() * o.terms_.size());
  for (const Term& a : terms_)
    for (const Term& b : o.terms_)
      cross.push_back(Term{a.mono * b.mono, a.coeff * b.coeff});
  return fromTerms(ring_, std::move(cross));
}

Polynomial Polynomial::monic() const {
  if (isZero()) return *this;
  return scaled(leadingCoefficient().inverse());
}

bool Polynomial::operator==(const Polynomial& o) const {
  if (!ring_->sameStructure(*o.ring_)) return false;
  if (terms_.size() != o.terms_.size()) return false;
  for (size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].mono != o.terms_[i].mono || terms_[i].coeff != o.terms_[i].coeff)
      return false;
  return true;
}

Polynomial Polynomial::mapToRing(const RingPtr& target) const {
  if (target->characteristic() != ring_->characteristic())
    throw std::invalid_argument("Polynomial: coefficient field mismatch");
  std::vector<int> where(static_cast<size_t>(ring_->nvars()), -1);
  for (int i = 0; i < ring_->nvars(); ++i)
    where[static_cast<size_t>(i)] = target->variableIndex(ring_->variables()[static_cast<size_t>(i)]);
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const Term& t : terms_) {
    std::vector<int> e(static_cast<size_t>(target->nvars()), 0);
    for (int i = 0; i < ring_->nvars(); ++i) {
      int exp = t.mono.exponent(i);
      if (exp == 0) continue;
      if (where[static_cast<size_t>(i)] < 0)
        throw std::invalid_argument("Polynomial: variable " + ring_->variables()[static_cast<size_t>(i)] +
                                    " absent from target ring");
      e[static_cast<size_t>(where[static_cast<size_t>(i)])] = exp;
    }
    out.push_back(Term{Monomial(std::move(e)), t.coeff});
  }
  return fromTerms(target, std::move(out));
}

namespace {

std::string monomialStr(const PolyRing& ring, const Monomial& m) {
  std::string s;
  for (int i = 0; i < m.nvars(); ++i) {
    int e = m.exponent(i);
    if (e == 0) continue;
    if (!s.empty()) s += "*";
    s += ring.variables()[static_cast<size_t>(i)];
    if (e > 1) s += "^" + std::to_string(e);
  }
  return s;
}

} // namespace

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const Term& t : terms_) {
    FieldScalar c = t.coeff;
    bool negative = false;
    if (ring_->characteristic() == 0 && c.rational() < 0) {
      negative = true;
      c = -c;
    }
    if (first) {
      if (negative) s += "-";
      first = false;
    } else {
      s += negative ? " - " : " + ";
    }
    std::string mono = monomialStr(*ring_, t.mono);
    if (mono.empty()) {
      s += c.str();
    } else if (c.isOne()) {
      s += mono;
    } else {
      s += c.str() + "*" + mono;
    }
  }
  return s;
}

// ---------------------------------------------------------------------------
// Parsing

ParseError::ParseError(std::string msg, int errLine, int errColumn)
    : std::runtime_error(msg + " (line " + std::to_string(errLine) + ", column " +
                         std::to_string(errColumn) + ")"),
      message(std::move(msg)), line(errLine), column(errColumn) {}

void TextCursor::advance() {
  if (pos < text.size()) {
    if (text[pos] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
    ++pos;
  }
}

void TextCursor::skipSpace() {
  while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) advance();
}

namespace {

struct PolyParser {
  const RingPtr& ring;
  TextCursor& c;

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError{msg, c.line, c.column}; }

  char peek() {
    c.skipSpace();
    return c.done() ? '\0' : c.current();
  }

  bool accept(char ch) {
    if (peek() == ch) {
      c.advance();
      return true;
    }
    return false;
  }

  long parseInt() {
    c.skipSpace();
    std::string digits;
    while (!c.done() && std::isdigit(static_cast<unsigned char>(c.current()))) {
      digits += c.current();
      c.advance();
    }
    if (digits.empty()) fail("expected integer");
    try {
      return std::stol(digits);
    } catch (const std::out_of_range&) {
      fail("integer literal out of range");
    }
  }

  std::string parseIdent() {
    c.skipSpace();
    std::string name;
    if (!c.done() && (std::isalpha(static_cast<unsigned char>(c.current())) || c.current() == '_')) {
      while (!c.done() &&
             (std::isalnum(static_cast<unsigned char>(c.current())) || c.current() == '_')) {
        name += c.current();
        c.advance();
      }
    }
    if (name.empty()) fail("expected identifier");
    return name;
  }

  // factor := base [ "^" INT ]; base := INT [ "/" INT ] | IDENT | "(" expr ")"
  Polynomial parseBase() {
    char ch = peek();
    if (ch == '\0') fail("unexpected end of polynomial");
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      long num = parseInt();
      if (peek() == '/') {
        c.advance();
        long den = parseInt();
        if (den == 0) fail("zero denominator");
        if (ring->characteristic() == 0)
          return Polynomial::constant(ring, FieldScalar::ofRational(mpq_class(num, den)));
        FieldScalar n = FieldScalar::ofInt(num, ring->characteristic());
        FieldScalar d = FieldScalar::ofInt(den, ring->characteristic());
        return Polynomial::constant(ring, n / d);
      }
      return Polynomial::constant(ring, num);
    }
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      int startLine = c.line, startCol = c.column;
      std::string name = parseIdent();
      int idx = ring->variableIndex(name);
      if (idx < 0) throw ParseError{"unknown variable " + name, startLine, startCol};
      return Polynomial::variable(ring, idx);
    }
    if (ch == '(') {
      c.advance();
      Polynomial inner = parseExpr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    fail(std::string("unexpected character '") + ch + "'");
  }

  Polynomial parseFactor() {
    Polynomial base = parseBase();
    if (peek() == '^') {
      c.advance();
      long e = parseInt();
      Polynomial r = Polynomial::constant(ring, 1);
      for (long k = 0; k < e; ++k) r = r * base;
      return r;
    }
    return base;
  }

  bool startsFactor() {
    char ch = peek();
    return std::isdigit(static_cast<unsigned char>(ch)) ||
           std::isalpha(static_cast<unsigned char>(ch)) || ch == '_' || ch == '(';
  }

  // term := factor { ["*"] factor }
  Polynomial parseTerm() {
    Polynomial p = parseFactor();
    while (true) {
      if (accept('*')) {
        p = p * parseFactor();
      } else if (startsFactor()) {
        p = p * parseFactor();
      } else {
        break;
      }
    }
    return p;
  }

  Polynomial parseExpr() {
    bool neg = false;
    if (accept('-')) {
      neg = true;
    } else {
      accept('+');
    }
    Polynomial p = parseTerm();
    if (neg) p = -p;
    while (true) {
      if (accept('+')) {
        p = p + parseTerm();
      } else if (accept('-')) {
        p = p - parseTerm();
      } else {
        break;
      }
    }
    return p;
  }
};

} // namespace

Polynomial parsePolynomialAt(const RingPtr& ring, TextCursor& cursor) {
  PolyParser parser{ring, cursor};
  return parser.parseExpr();
}

Polynomial parsePolynomial(const RingPtr& ring, std::string_view text) {
  TextCursor cursor{text};
  Polynomial p = parsePolynomialAt(ring, cursor);
  cursor.skipSpace();
  if (!cursor.done()) throw ParseError{"trailing input after polynomial", cursor.line, cursor.column};
  return p;
}

} // namespace closurelab
