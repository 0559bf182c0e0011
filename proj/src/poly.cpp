#include "sbasis/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "sbasis/error.hpp"

namespace sbasis {
namespace {

// Sorts descending under the ring's ordering and merges equal monomials.
std::vector<Term> canonicalize(const PolyRing& ring, std::vector<Term> terms) {
  const auto& ord = ring.order();
  std::sort(terms.begin(), terms.end(),
            [&](const Term& a, const Term& b) { return ord.compare(a.exp, b.exp) > 0; });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().exp == t.exp) {
      out.back().coeff = ring.coeffs().add(out.back().coeff, t.coeff);
    } else {
      if (!out.empty() && out.back().coeff == 0) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().coeff == 0) out.pop_back();
  return out;
}

void requireNonzero(const Polynomial& f, const char* what) {
  if (f.isZero()) throw Error(Errc::ZeroPolynomial, std::string(what) + " of the zero polynomial");
}

}  // namespace

PolyRing::PolyRing(Ring coeffs, std::vector<std::string> vars, MonomialOrdering order)
    : coeffs_(std::move(coeffs)), vars_(std::move(vars)), order_(std::move(order)) {
  if (vars_.empty()) throw Error(Errc::InvalidArgument, "a polynomial ring needs at least one variable");
  if (order_.nvars() != vars_.size()) {
    throw Error(Errc::DimensionMismatch, "ordering dimension differs from the number of variables");
  }
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    const auto& v = vars_[i];
    if (v.empty() || !std::isalpha(static_cast<unsigned char>(v[0]))) {
      throw Error(Errc::InvalidArgument, "invalid variable name '" + v + "'");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (vars_[j] == v) throw Error(Errc::InvalidArgument, "duplicate variable name '" + v + "'");
    }
  }
}

PolyRingPtr makePolyRing(Ring coeffs, std::vector<std::string> vars, MonomialOrdering order) {
  return std::make_shared<const PolyRing>(std::move(coeffs), std::move(vars), std::move(order));
}

PolyRingPtr homogenizedRing(const PolyRingPtr& base) {
  std::string t = "t";
  const auto& vars = base->vars();
  while (std::find(vars.begin(), vars.end(), t) != vars.end()) t += "_";
  std::vector<std::string> hv;
  hv.reserve(vars.size() + 1);
  hv.push_back(t);
  hv.insert(hv.end(), vars.begin(), vars.end());
  return makePolyRing(base->coeffs(), std::move(hv), liftToHomogenized(base->order()));
}

bool sameRing(const PolyRingPtr& a, const PolyRingPtr& b) { return a == b || *a == *b; }

void requireSameRing(const Polynomial& f, const Polynomial& g) {
  if (!sameRing(f.ring(), g.ring())) {
    throw Error(Errc::MixedRing, "polynomials belong to different rings");
  }
}

Polynomial::Polynomial(PolyRingPtr ring) : ring_(std::move(ring)) {}

Polynomial Polynomial::fromTerms(PolyRingPtr ring, std::vector<Term> terms) {
  for (auto& t : terms) {
    if (t.exp.size() != ring->nvars()) {
      throw Error(Errc::DimensionMismatch, "term has wrong number of exponents");
    }
    if (std::any_of(t.exp.begin(), t.exp.end(), [](int e) { return e < 0; })) {
      throw Error(Errc::InvalidArgument, "negative exponent");
    }
    t.coeff = ring->coeffs().normalize(t.coeff);
  }
  auto sorted = canonicalize(*ring, std::move(terms));
  return Polynomial(std::move(ring), std::move(sorted), 0);
}

Polynomial Polynomial::constant(PolyRingPtr ring, const Scalar& c) {
  ExponentVector zero(ring->nvars(), 0);
  return monomial(std::move(ring), c, std::move(zero));
}

Polynomial Polynomial::monomial(PolyRingPtr ring, const Scalar& c, ExponentVector exp) {
  std::vector<Term> ts;
  ts.push_back(Term{c, std::move(exp)});
  return fromTerms(std::move(ring), std::move(ts));
}

Polynomial Polynomial::variable(PolyRingPtr ring, std::size_t index) {
  ExponentVector e(ring->nvars(), 0);
  e.at(index) = 1;
  return monomial(std::move(ring), 1, std::move(e));
}

const Term& Polynomial::leadingTerm() const {
  requireNonzero(*this, "leading term");
  return terms_.front();
}

const ExponentVector& Polynomial::leadingMonomial() const { return leadingTerm().exp; }
const Scalar& Polynomial::leadingCoeff() const { return leadingTerm().coeff; }

int Polynomial::degree() const {
  requireNonzero(*this, "degree");
  int d = 0;
  for (const auto& t : terms_) d = std::max(d, totalDegree(t.exp));
  return d;
}

Polynomial Polynomial::tail() const {
  requireNonzero(*this, "tail");
  return Polynomial(ring_, std::vector<Term>(terms_.begin() + 1, terms_.end()), 0);
}

Polynomial Polynomial::mulTerm(const Scalar& c, std::span<const int> exp) const {
  if (exp.size() != ring_->nvars()) throw Error(Errc::DimensionMismatch, "term has wrong number of exponents");
  const Ring& R = ring_->coeffs();
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Scalar p = R.mul(t.coeff, c);
    if (p == 0) continue;
    ExponentVector e(t.exp.size());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = t.exp[i] + exp[i];
    out.push_back(Term{std::move(p), std::move(e)});
  }
  // multiplication by a monomial preserves the order
  return Polynomial(ring_, std::move(out), 0);
}

Polynomial Polynomial::scaled(const Scalar& c) const {
  return mulTerm(c, ExponentVector(ring_->nvars(), 0));
}

Polynomial Polynomial::combine(const Polynomial& g, bool subtract) const {
  requireSameRing(*this, g);
  const Ring& R = ring_->coeffs();
  const auto& ord = ring_->order();
  std::vector<Term> out;
  out.reserve(terms_.size() + g.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() || j < g.terms_.size()) {
    if (j == g.terms_.size()) {
      out.push_back(terms_[i++]);
      continue;
    }
    if (i == terms_.size()) {
      const Term& t = g.terms_[j++];
      out.push_back(Term{subtract ? R.neg(t.coeff) : t.coeff, t.exp});
      continue;
    }
    auto c = ord.compare(terms_[i].exp, g.terms_[j].exp);
    if (c > 0) {
      out.push_back(terms_[i++]);
    } else if (c < 0) {
      const Term& t = g.terms_[j++];
      out.push_back(Term{subtract ? R.neg(t.coeff) : t.coeff, t.exp});
    } else {
      Scalar s = subtract ? R.sub(terms_[i].coeff, g.terms_[j].coeff) : R.add(terms_[i].coeff, g.terms_[j].coeff);
      if (s != 0) out.push_back(Term{std::move(s), terms_[i].exp});
      ++i;
      ++j;
    }
  }
  return Polynomial(ring_, std::move(out), 0);
}

Polynomial& Polynomial::operator+=(const Polynomial& g) {
  if (g.isZero()) {
    requireSameRing(*this, g);
    return *this;
  }
  *this = combine(g, false);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& g) {
  if (g.isZero()) {
    requireSameRing(*this, g);
    return *this;
  }
  *this = combine(g, true);
  return *this;
}

Polynomial operator*(const Polynomial& f, const Polynomial& g) {
  requireSameRing(f, g);
  if (f.isZero() || g.isZero()) return Polynomial(f.ring());
  if (f.size() == 1) return g.mulTerm(f.terms_.front());
  if (g.size() == 1) return f.mulTerm(g.terms_.front());
  const Ring& R = f.ring_->coeffs();
  std::vector<Term> prods;
  prods.reserve(f.size() * g.size());
  for (const auto& a : f.terms_) {
    for (const auto& b : g.terms_) {
      Scalar c = R.mul(a.coeff, b.coeff);
      if (c == 0) continue;
      prods.push_back(Term{std::move(c), monomialMul(a.exp, b.exp)});
    }
  }
  return Polynomial(f.ring_, canonicalize(*f.ring_, std::move(prods)), 0);
}

Polynomial Polynomial::operator-() const {
  const Ring& R = ring_->coeffs();
  std::vector<Term> out = terms_;
  for (auto& t : out) t.coeff = R.neg(t.coeff);
  return Polynomial(ring_, std::move(out), 0);
}

bool operator==(const Polynomial& f, const Polynomial& g) {
  return sameRing(f.ring_, g.ring_) && f.terms_ == g.terms_;
}

bool Polynomial::invariantsHold() const {
  const Ring& R = ring_->coeffs();
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    const Term& t = terms_[i];
    if (t.coeff == 0 || !R.contains(t.coeff)) return false;
    if (t.exp.size() != ring_->nvars()) return false;
    if (std::any_of(t.exp.begin(), t.exp.end(), [](int e) { return e < 0; })) return false;
    if (i > 0 && ring_->order().compare(terms_[i - 1].exp, t.exp) <= 0) return false;
  }
  return true;
}

Polynomial add(const Polynomial& f, const Polynomial& g) { return f + g; }
Polynomial sub(const Polynomial& f, const Polynomial& g) { return f - g; }
Polynomial mulTerm(const Term& t, const Polynomial& f) { return f.mulTerm(t); }
Polynomial mul(const Polynomial& f, const Polynomial& g) { return f * g; }

LeadingData leadingData(const Polynomial& f) {
  const Term& lt = f.leadingTerm();
  return LeadingData{lt, lt.exp, lt.coeff, lt.exp};
}

int ecart(const Polynomial& f) { return f.degree() - totalDegree(f.leadingMonomial()); }

Polynomial homogenize(const Polynomial& f, const PolyRingPtr& homRing) {
  requireNonzero(f, "homogenization");
  const std::size_t n = f.ring()->nvars();
  if (homRing->nvars() != n + 1 || !(homRing->coeffs() == f.ring()->coeffs())) {
    throw Error(Errc::MixedRing, "target ring is not a homogenization of the source ring");
  }
  const int d = f.degree();
  std::vector<Term> out;
  out.reserve(f.size());
  for (const auto& t : f.terms()) {
    ExponentVector e(n + 1);
    e[0] = d - totalDegree(t.exp);
    std::copy(t.exp.begin(), t.exp.end(), e.begin() + 1);
    out.push_back(Term{t.coeff, std::move(e)});
  }
  return Polynomial::fromTerms(homRing, std::move(out));
}

Polynomial homogenize(const Polynomial& f) { return homogenize(f, homogenizedRing(f.ring())); }

Polynomial dehomogenize(const Polynomial& F, const PolyRingPtr& base) {
  if (F.ring()->nvars() != base->nvars() + 1 || !(F.ring()->coeffs() == base->coeffs())) {
    throw Error(Errc::MixedRing, "base ring does not match the homogenized ring");
  }
  std::vector<Term> out;
  out.reserve(F.size());
  for (const auto& t : F.terms()) out.push_back(Term{t.coeff, ExponentVector(t.exp.begin() + 1, t.exp.end())});
  return Polynomial::fromTerms(base, std::move(out));
}

bool isUnitOfLocalization(const Polynomial& u) {
  if (u.isZero()) return false;
  const Term& lt = u.leadingTerm();
  return lt.coeff == u.ring()->coeffs().one() &&
         std::all_of(lt.exp.begin(), lt.exp.end(), [](int e) { return e == 0; });
}

std::optional<Term> termQuotient(const Ring& ring, const Term& b, const Term& a) {
  if (!divides(a.exp, b.exp)) return std::nullopt;
  auto q = ring.divide(b.coeff, a.coeff);
  if (!q) return std::nullopt;
  return Term{*q, monomialQuotient(b.exp, a.exp)};
}

bool termDivides(const Ring& ring, const Term& a, const Term& b) {
  return termQuotient(ring, b, a).has_value();
}

// ---------------------------------------------------------------- printing

std::string formatMonomial(std::span<const int> exp, const PolyRing& ring) {
  std::string s;
  for (std::size_t i = 0; i < exp.size(); ++i) {
    if (exp[i] == 0) continue;
    if (!s.empty()) s += '*';
    s += ring.vars()[i];
    if (exp[i] != 1) s += "^" + std::to_string(exp[i]);
  }
  return s.empty() ? "1" : s;
}

std::string toString(const Term& t, const PolyRing& ring) {
  const bool isConst = std::all_of(t.exp.begin(), t.exp.end(), [](int e) { return e == 0; });
  if (isConst) return formatScalar(t.coeff);
  const std::string mono = formatMonomial(t.exp, ring);
  if (t.coeff == 1) return mono;
  if (t.coeff == -1) return "-" + mono;
  return formatScalar(t.coeff) + "*" + mono;
}

std::string toString(const Polynomial& f) {
  if (f.isZero()) return "0";
  std::string s;
  for (const auto& t : f.terms()) {
    std::string ts = toString(t, *f.ring());
    if (!s.empty() && ts[0] != '-') s += '+';
    s += ts;
  }
  return s;
}

// ----------------------------------------------------------------- parsing

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, const PolyRingPtr& ring) : text_(text), ring_(ring) {}

  Polynomial parse() {
    skipSpace();
    if (pos_ == text_.size()) throw ParseError(pos_, "empty polynomial");
    Polynomial p = expr();
    skipSpace();
    if (pos_ != text_.size()) throw ParseError(pos_, std::string("unexpected '") + text_[pos_] + "'");
    return p;
  }

 private:
  void skipSpace() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skipSpace();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool startsAtom() {
    skipSpace();
    if (pos_ >= text_.size()) return false;
    char c = text_[pos_];
    return std::isdigit(static_cast<unsigned char>(c)) || std::isalpha(static_cast<unsigned char>(c)) || c == '(';
  }

  Polynomial expr() {
    Polynomial acc(ring_);
    bool first = true;
    while (true) {
      skipSpace();
      bool negate = false;
      if (peek('+') || peek('-')) {
        negate = text_[pos_] == '-';
        ++pos_;
      } else if (!first) {
        break;
      }
      Polynomial t = term();
      acc = negate ? acc - t : acc + t;
      first = false;
      if (!(peek('+') || peek('-'))) break;
    }
    return acc;
  }

  Polynomial term() {
    Polynomial acc = power();
    while (true) {
      if (peek('*')) {
        ++pos_;
        acc = acc * power();
      } else if (peek('/')) {
        std::size_t at = ++pos_;
        Polynomial d = power();
        acc = divideByConstant(acc, d, at);
      } else if (startsAtom()) {
        acc = acc * power();
      } else {
        return acc;
      }
    }
  }

  Polynomial power() {
    Polynomial base = atom();
    if (peek('^')) {
      ++pos_;
      skipSpace();
      int e = readInt("exponent");
      Polynomial r = Polynomial::constant(ring_, 1);
      for (int i = 0; i < e; ++i) r = r * base;
      return r;
    }
    return base;
  }

  Polynomial atom() {
    skipSpace();
    if (pos_ >= text_.size()) throw ParseError(pos_, "unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      if (!peek(')')) throw ParseError(pos_, "expected ')'");
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      mpz_class v(std::string(text_.substr(start, pos_ - start)));
      try {
        return Polynomial::constant(ring_, Scalar(v));
      } catch (const Error& e) {
        throw ParseError(start, std::string("coefficient not in ring: ") + e.what());
      }
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      // longest declared variable name at this position
      std::size_t best = ring_->nvars();
      std::size_t bestLen = 0;
      for (std::size_t i = 0; i < ring_->nvars(); ++i) {
        const auto& v = ring_->vars()[i];
        if (v.size() > bestLen && text_.substr(pos_, v.size()) == v) {
          best = i;
          bestLen = v.size();
        }
      }
      if (best == ring_->nvars()) {
        std::size_t end = pos_;
        while (end < text_.size() && std::isalnum(static_cast<unsigned char>(text_[end]))) ++end;
        throw ParseError(pos_, "unknown variable '" + std::string(text_.substr(pos_, end - pos_)) + "'");
      }
      pos_ += bestLen;
      int e = 1;
      if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) e = readInt("exponent");
      ExponentVector ex(ring_->nvars(), 0);
      ex[best] = e;
      return Polynomial::monomial(ring_, 1, std::move(ex));
    }
    throw ParseError(pos_, std::string("unexpected '") + c + "'");
  }

  int readInt(const char* what) {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError(start, std::string("expected ") + what);
    auto digits = text_.substr(start, pos_ - start);
    if (digits.size() > 6) throw ParseError(start, std::string(what) + " too large");
    return std::stoi(std::string(digits));
  }

  Polynomial divideByConstant(const Polynomial& num, const Polynomial& den, std::size_t at) {
    if (den.isZero() || den.size() != 1 || totalDegree(den.leadingMonomial()) != 0) {
      throw ParseError(at, "division only by nonzero constants");
    }
    const Ring& R = ring_->coeffs();
    const Scalar& d = den.leadingCoeff();
    std::vector<Term> out;
    for (const auto& t : num.terms()) {
      std::optional<Scalar> q;
      if (R.kind() == RingKind::Rationals) {
        q = t.coeff / d;
      } else if (R.kind() == RingKind::IntegersMod && R.isUnit(d)) {
        q = R.divide(t.coeff, d);
      } else if (R.kind() == RingKind::Integers) {
        q = R.divide(t.coeff, d);
      }
      if (!q) throw ParseError(at, "coefficient not in ring after division");
      out.push_back(Term{*q, t.exp});
    }
    return Polynomial::fromTerms(ring_, std::move(out));
  }

  std::string_view text_;
  const PolyRingPtr& ring_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parsePolynomial(std::string_view text, const PolyRingPtr& ring) {
  return PolyParser(text, ring).parse();
}

}  // namespace sbasis
