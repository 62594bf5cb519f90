#include "lefkit/polynomial.hpp"

#include <algorithm>
#include <cctype>

namespace lefkit {

Polynomial::Polynomial(PrimeField field, std::size_t n_vars,
                       std::vector<Term> terms)
    : field_(field), n_vars_(n_vars) {
  for (const Term& t : terms)
    if (t.mono.n_vars() != n_vars_)
      throw Error("polynomial term arity mismatch");
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
    return grevlex_compare(a.mono, b.mono) > 0;
  });
  for (Term& t : terms) {
    if (t.coeff == 0) continue;
    if (!terms_.empty() && terms_.back().mono == t.mono) {
      terms_.back().coeff = field_.add(terms_.back().coeff, t.coeff);
      if (terms_.back().coeff == 0) terms_.pop_back();
    } else {
      terms_.push_back(t);
    }
  }
  terms_.erase(std::remove_if(terms_.begin(), terms_.end(),
                              [](const Term& t) { return t.coeff == 0; }),
               terms_.end());
}

Polynomial Polynomial::constant(PrimeField field, std::size_t n_vars, Fp c) {
  Polynomial f(field, n_vars);
  if (c != 0) f.terms_.push_back({Monomial(n_vars), c});
  return f;
}

Polynomial Polynomial::monomial(PrimeField field, Monomial m, Fp c) {
  Polynomial f(field, m.n_vars());
  if (c != 0) f.terms_.push_back({std::move(m), c});
  return f;
}

Polynomial Polynomial::variable(PrimeField field, std::size_t n_vars,
                                std::size_t k) {
  return monomial(field, Monomial::variable(n_vars, k));
}

const Term& Polynomial::leading_term() const {
  if (terms_.empty()) throw Error("leading term of zero polynomial");
  return terms_.front();
}

int Polynomial::degree() const {
  int d = -1;
  for (const Term& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

bool Polynomial::is_homogeneous() const {
  for (const Term& t : terms_)
    if (t.mono.degree() != terms_.front().mono.degree()) return false;
  return true;
}

void Polynomial::check_arity(const Polynomial& other) const {
  if (n_vars_ != other.n_vars_ || field_ != other.field_)
    throw Error("polynomial operation: ring mismatch");
}

Polynomial Polynomial::add(const Polynomial& other) const {
  check_arity(other);
  Polynomial out(field_, n_vars_);
  out.terms_.reserve(terms_.size() + other.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() && j < other.terms_.size()) {
    int cmp = grevlex_compare(terms_[i].mono, other.terms_[j].mono);
    if (cmp > 0) {
      out.terms_.push_back(terms_[i++]);
    } else if (cmp < 0) {
      out.terms_.push_back(other.terms_[j++]);
    } else {
      Fp c = field_.add(terms_[i].coeff, other.terms_[j].coeff);
      if (c != 0) out.terms_.push_back({terms_[i].mono, c});
      ++i;
      ++j;
    }
  }
  while (i < terms_.size()) out.terms_.push_back(terms_[i++]);
  while (j < other.terms_.size()) out.terms_.push_back(other.terms_[j++]);
  return out;
}

Polynomial Polynomial::sub(const Polynomial& other) const {
  return add(other.negate());
}

Polynomial Polynomial::negate() const {
  Polynomial out(*this);
  for (Term& t : out.terms_) t.coeff = field_.neg(t.coeff);
  return out;
}

Polynomial Polynomial::scale(Fp c) const {
  Polynomial out(field_, n_vars_);
  if (c == 0) return out;
  out.terms_ = terms_;
  for (Term& t : out.terms_) t.coeff = field_.mul(t.coeff, c);
  return out;
}

Polynomial Polynomial::times_term(const Monomial& m, Fp c) const {
  Polynomial out(field_, n_vars_);
  if (c == 0) return out;
  out.terms_.reserve(terms_.size());
  for (const Term& t : terms_)
    out.terms_.push_back({t.mono.times(m), field_.mul(t.coeff, c)});
  return out; // multiplying by a monomial preserves grevlex order
}

Polynomial Polynomial::multiply(const Polynomial& other) const {
  check_arity(other);
  Polynomial acc(field_, n_vars_);
  for (const Term& t : other.terms_) acc = acc.add(times_term(t.mono, t.coeff));
  return acc;
}

Polynomial Polynomial::pow(int e) const {
  if (e < 0) throw Error("polynomial pow: negative exponent");
  Polynomial result = Polynomial::constant(field_, n_vars_, 1);
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1) result = result.multiply(base);
    base = base.multiply(base);
    e >>= 1;
  }
  return result;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return scale(field_.inv(leading_term().coeff));
}

Fp Polynomial::evaluate(const std::vector<Fp>& point) const {
  if (point.size() != n_vars_) throw Error("evaluate: point arity mismatch");
  Fp acc = 0;
  for (const Term& t : terms_) {
    Fp v = t.coeff;
    for (std::size_t i = 0; i < n_vars_; ++i) {
      int e = t.mono.exponent(i);
      if (e > 0) v = field_.mul(v, field_.pow(point[i], e));
    }
    acc = field_.add(acc, v);
  }
  return acc;
}

std::vector<Fp> Polynomial::coefficient_vector(
    const std::vector<Monomial>& basis) const {
  std::vector<Fp> coords(basis.size(), 0);
  std::size_t pos = 0;
  for (const Term& t : terms_) {
    while (pos < basis.size() && basis[pos] != t.mono) ++pos;
    if (pos == basis.size())
      throw Error("coefficient_vector: term not in basis");
    coords[pos] = t.coeff;
  }
  return coords;
}

Polynomial Polynomial::from_coefficient_vector(
    PrimeField field, std::size_t n_vars, const std::vector<Monomial>& basis,
    const std::vector<Fp>& coords) {
  if (basis.size() != coords.size())
    throw Error("from_coefficient_vector: size mismatch");
  Polynomial out(field, n_vars);
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (coords[i] != 0) out.terms_.push_back({basis[i], coords[i]});
  return out; // basis is grevlex descending already
}

bool Polynomial::operator==(const Polynomial& other) const {
  if (n_vars_ != other.n_vars_ || terms_.size() != other.terms_.size())
    return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].coeff != other.terms_[i].coeff ||
        terms_[i].mono != other.terms_[i].mono)
      return false;
  return true;
}

LinearForm::LinearForm(PrimeField field, std::vector<Fp> coefficients)
    : field_(field), coefficients_(std::move(coefficients)) {
  bool nonzero = false;
  for (Fp c : coefficients_) nonzero = nonzero || c != 0;
  if (!nonzero) throw Error("linear form is identically zero");
}

Fp LinearForm::evaluate(const std::vector<Fp>& point) const {
  if (point.size() != coefficients_.size())
    throw Error("linear form evaluate: arity mismatch");
  Fp acc = 0;
  for (std::size_t i = 0; i < coefficients_.size(); ++i)
    acc = field_.add(acc, field_.mul(coefficients_[i], point[i]));
  return acc;
}

Polynomial LinearForm::to_polynomial() const {
  std::vector<Term> terms;
  for (std::size_t i = 0; i < coefficients_.size(); ++i)
    if (coefficients_[i] != 0)
      terms.push_back({Monomial::variable(n_vars(), i), coefficients_[i]});
  return Polynomial(field_, n_vars(), std::move(terms));
}

Polynomial eliminate_variable(const Polynomial& f, const LinearForm& L,
                              std::size_t k) {
  if (L.n_vars() != f.n_vars())
    throw Error("eliminate_variable: arity mismatch");
  if (k >= f.n_vars() || L.coefficient(k) == 0)
    throw Error("eliminate_variable: zero coefficient at eliminated variable");
  const PrimeField& field = f.field();
  std::size_t n_out = f.n_vars() - 1;

  // substitution polynomial in the re-indexed ring
  Fp scale = field.neg(field.inv(L.coefficient(k)));
  std::vector<Term> subst_terms;
  for (std::size_t i = 0; i < f.n_vars(); ++i) {
    if (i == k || L.coefficient(i) == 0) continue;
    std::size_t idx = i < k ? i : i - 1;
    subst_terms.push_back({Monomial::variable(n_out, idx),
                           field.mul(scale, L.coefficient(i))});
  }
  Polynomial subst(field, n_out, std::move(subst_terms));

  int max_exp = 0;
  for (const Term& t : f.terms()) max_exp = std::max(max_exp, t.mono.exponent(k));
  std::vector<Polynomial> subst_pow;
  subst_pow.push_back(Polynomial::constant(field, n_out, 1));
  for (int e = 1; e <= max_exp; ++e)
    subst_pow.push_back(subst_pow.back().multiply(subst));

  Polynomial out(field, n_out);
  for (const Term& t : f.terms()) {
    std::vector<int> e = t.mono.exponents();
    int ek = e[k];
    e.erase(e.begin() + k);
    Polynomial part =
        subst_pow[ek].times_term(Monomial(std::move(e)), t.coeff);
    out = out.add(part);
  }
  return out;
}

std::vector<std::string> default_var_names(std::size_t n_vars,
                                           std::size_t start_index) {
  std::vector<std::string> names;
  names.reserve(n_vars);
  for (std::size_t i = 0; i < n_vars; ++i)
    names.push_back("x" + std::to_string(start_index + i));
  return names;
}

namespace {

struct Cursor {
  const std::string& text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() &&
           (text[pos] == ' ' || text[pos] == '\t' || text[pos] == '\n' ||
            text[pos] == '\r'))
      ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= text.size();
  }
  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }
};

long long parse_integer(Cursor& c) {
  c.skip_ws();
  std::size_t start = c.pos;
  long long v = 0;
  while (c.pos < c.text.size() && std::isdigit(static_cast<unsigned char>(c.text[c.pos]))) {
    v = v * 10 + (c.text[c.pos] - '0');
    if (v > (1ll << 62)) throw ParseError("integer literal too large", start);
    ++c.pos;
  }
  if (c.pos == start) throw ParseError("expected integer", start);
  return v;
}

std::string parse_var_token(Cursor& c) {
  c.skip_ws();
  std::size_t start = c.pos;
  if (c.pos >= c.text.size() ||
      !std::isalpha(static_cast<unsigned char>(c.text[c.pos])))
    throw ParseError("expected variable", start);
  std::string tok;
  tok += c.text[c.pos++];
  while (c.pos < c.text.size() &&
         (std::isalnum(static_cast<unsigned char>(c.text[c.pos])) ||
          c.text[c.pos] == '_'))
    tok += c.text[c.pos++];
  return tok;
}

} // namespace

Polynomial parse_polynomial(const std::string& text,
                            const std::vector<std::string>& var_names,
                            const PrimeField& field) {
  std::size_t n_vars = var_names.size();
  Cursor c{text};
  std::vector<Term> terms;

  bool first = true;
  while (!c.done()) {
    // sign
    bool negative = false;
    char ch = c.peek();
    if (ch == '+' || ch == '-') {
      negative = ch == '-';
      ++c.pos;
    } else if (!first) {
      throw ParseError("expected '+' or '-' between terms", c.pos);
    }
    first = false;

    // optional coefficient
    Fp coeff = 1;
    bool saw_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
      coeff = field.from_int(parse_integer(c));
      saw_coeff = true;
      if (c.peek() == '*') ++c.pos;
    }

    // factors
    std::vector<int> exps(n_vars, 0);
    bool saw_factor = false;
    while (true) {
      char p = c.peek();
      if (!std::isalpha(static_cast<unsigned char>(p))) break;
      std::size_t tok_pos = c.pos;
      std::string tok = parse_var_token(c);
      auto it = std::find(var_names.begin(), var_names.end(), tok);
      if (it == var_names.end())
        throw ParseError("unknown variable '" + tok + "'", tok_pos);
      int exp = 1;
      if (c.peek() == '^') {
        ++c.pos;
        long long e = parse_integer(c);
        if (e < 0 || e > 1024) throw ParseError("exponent out of range", c.pos);
        exp = static_cast<int>(e);
      }
      exps[static_cast<std::size_t>(it - var_names.begin())] += exp;
      saw_factor = true;
      // factors are joined by '*'; only the coefficient may be juxtaposed
      if (c.peek() != '*') break;
      ++c.pos;
    }
    if (!saw_factor && !saw_coeff)
      throw ParseError("expected term", c.pos);
    if (negative) coeff = field.neg(coeff);
    terms.push_back({Monomial(std::move(exps)), coeff});
  }
  return Polynomial(PrimeField(field), n_vars, std::move(terms));
}

std::string polynomial_to_string(const Polynomial& f,
                                 const std::vector<std::string>& var_names) {
  if (f.is_zero()) return "0";
  const PrimeField& field = f.field();
  std::string out;
  bool first = true;
  for (const Term& t : f.terms()) {
    Fp c = t.coeff;
    bool negative = c > field.modulus() / 2;
    Fp mag = negative ? field.neg(c) : c;
    if (first) {
      if (negative) out += "-";
      first = false;
    } else {
      out += negative ? " - " : " + ";
    }
    std::string factors;
    for (std::size_t i = 0; i < f.n_vars(); ++i) {
      int e = t.mono.exponent(i);
      if (e == 0) continue;
      if (!factors.empty()) factors += "*";
      factors += var_names[i];
      if (e > 1) factors += "^" + std::to_string(e);
    }
    if (factors.empty()) {
      out += std::to_string(mag);
    } else {
      if (mag != 1) out += std::to_string(mag) + "*";
      out += factors;
    }
  }
  return out;
}

} // namespace lefkit
