#include "marcs/poly.hpp"

#include <algorithm>
#include <sstream>

namespace marcs {

Polynomial::Polynomial(const FieldSpec& field, std::vector<ElemIndex> coeffs)
    : field_(&field), c_(std::move(coeffs)) {
  for (auto c : c_) {
    if (c >= field.order()) throw Error(ErrorCode::OutOfRange, "coefficient outside the field");
  }
  trim();
}

Polynomial::Polynomial(const FieldSpec& field, std::initializer_list<std::int64_t> int_coeffs) : field_(&field) {
  c_.reserve(int_coeffs.size());
  for (auto v : int_coeffs) c_.push_back(field.from_integer(v));
  trim();
}

Polynomial Polynomial::from_elements(const FieldSpec& field, std::span<const FieldElement> coeffs) {
  std::vector<ElemIndex> raw;
  raw.reserve(coeffs.size());
  for (const auto& c : coeffs) {
    if (c.field_ptr() != &field) throw Error(ErrorCode::FieldMismatch, "coefficient from another field");
    raw.push_back(c.index());
  }
  return Polynomial(field, std::move(raw));
}

Polynomial Polynomial::constant(const FieldElement& c) {
  return Polynomial(c.field(), std::vector<ElemIndex>{c.index()});
}

Polynomial Polynomial::monomial(const FieldElement& c, int degree) {
  std::vector<ElemIndex> raw(static_cast<std::size_t>(degree) + 1, 0);
  raw.back() = c.index();
  return Polynomial(c.field(), std::move(raw));
}

Polynomial Polynomial::x(const FieldSpec& field) { return Polynomial(field, std::vector<ElemIndex>{0, 1}); }

void Polynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

void Polynomial::check_same(const Polynomial& o) const {
  if (field_ != o.field_) throw Error(ErrorCode::FieldMismatch, "polynomials over different fields");
}

FieldElement Polynomial::coeff(int i) const {
  if (i < 0 || i > degree()) return field_->zero();
  return field_->element(c_[static_cast<std::size_t>(i)]);
}

FieldElement Polynomial::leading() const { return is_zero() ? field_->zero() : field_->element(c_.back()); }

std::vector<FieldElement> Polynomial::coeffs() const {
  std::vector<FieldElement> out;
  out.reserve(c_.size());
  for (auto c : c_) out.push_back(field_->element(c));
  return out;
}

ElemIndex Polynomial::eval(ElemIndex x) const {
  ElemIndex acc = 0;
  for (std::size_t i = c_.size(); i-- > 0;) acc = field_->add(field_->mul(acc, x), c_[i]);
  return acc;
}

FieldElement Polynomial::operator()(const FieldElement& x) const {
  if (x.field_ptr() != field_) throw Error(ErrorCode::FieldMismatch, "evaluation point from another field");
  return field_->element(eval(x.index()));
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  check_same(o);
  std::vector<ElemIndex> r(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    const ElemIndex a = i < c_.size() ? c_[i] : 0;
    const ElemIndex b = i < o.c_.size() ? o.c_[i] : 0;
    r[i] = field_->add(a, b);
  }
  return Polynomial(*field_, std::move(r));
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  check_same(o);
  std::vector<ElemIndex> r(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    const ElemIndex a = i < c_.size() ? c_[i] : 0;
    const ElemIndex b = i < o.c_.size() ? o.c_[i] : 0;
    r[i] = field_->sub(a, b);
  }
  return Polynomial(*field_, std::move(r));
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  check_same(o);
  if (is_zero() || o.is_zero()) return Polynomial(*field_);
  std::vector<ElemIndex> r(c_.size() + o.c_.size() - 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] = field_->add(r[i + j], field_->mul(c_[i], o.c_[j]));
  }
  return Polynomial(*field_, std::move(r));
}

Polynomial Polynomial::operator*(const FieldElement& s) const {
  if (s.field_ptr() != field_) throw Error(ErrorCode::FieldMismatch, "scalar from another field");
  std::vector<ElemIndex> r(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] = field_->mul(c_[i], s.index());
  return Polynomial(*field_, std::move(r));
}

Polynomial Polynomial::operator-() const {
  std::vector<ElemIndex> r(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] = field_->neg(c_[i]);
  return Polynomial(*field_, std::move(r));
}

Polynomial Polynomial::operator/(const Polynomial& o) const { return divmod(*this, o).first; }
Polynomial Polynomial::operator%(const Polynomial& o) const { return divmod(*this, o).second; }

std::pair<Polynomial, Polynomial> divmod(const Polynomial& f, const Polynomial& g) {
  if (&f.field() != &g.field()) throw Error(ErrorCode::FieldMismatch, "polynomials over different fields");
  if (g.is_zero()) throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
  const auto& F = f.field();
  if (f.degree() < g.degree()) return {Polynomial(F), f};
  std::vector<ElemIndex> r(f.raw().begin(), f.raw().end());
  const auto gr = g.raw();
  const std::size_t dg = gr.size() - 1;
  const ElemIndex lc_inv = F.inv(gr.back());
  std::vector<ElemIndex> quot(r.size() - dg, 0);
  for (std::size_t k = r.size(); k-- > dg;) {
    const ElemIndex c = F.mul(r[k], lc_inv);
    quot[k - dg] = c;
    if (c == 0) continue;
    for (std::size_t i = 0; i <= dg; ++i) r[k - dg + i] = F.sub(r[k - dg + i], F.mul(c, gr[i]));
  }
  r.resize(dg);
  return {Polynomial(F, std::move(quot)), Polynomial(F, std::move(r))};
}

Polynomial make_monic(const Polynomial& f) {
  if (f.is_zero()) return f;
  return f * f.leading().inv();
}

Polynomial derivative(const Polynomial& f) {
  const auto& F = f.field();
  const auto raw = f.raw();
  std::vector<ElemIndex> r(raw.size() > 1 ? raw.size() - 1 : 0);
  for (std::size_t i = 1; i < raw.size(); ++i) r[i - 1] = F.mul(raw[i], F.from_integer(static_cast<std::int64_t>(i)));
  return Polynomial(F, std::move(r));
}

Polynomial gcd(const Polynomial& f, const Polynomial& g) {
  if (f.is_zero() && g.is_zero()) throw Error(ErrorCode::BothZero, "gcd of two zero polynomials");
  Polynomial a = f, b = g;
  while (!b.is_zero()) {
    Polynomial r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(a);
}

Polynomial powmod(const Polynomial& base, std::uint64_t e, const Polynomial& modulus) {
  Polynomial result = Polynomial::constant(modulus.field().one()) % modulus;
  Polynomial b = base % modulus;
  while (e) {
    if (e & 1) result = (result * b) % modulus;
    e >>= 1;
    if (e) b = (b * b) % modulus;
  }
  return result;
}

Polynomial squarefree_part(const Polynomial& f) {
  if (f.is_zero()) throw Error(ErrorCode::DivisionByZero, "squarefree part of zero");
  const Polynomial d = derivative(f);
  if (d.is_zero() && f.degree() > 0) throw Error(ErrorCode::InseparableInput, "f' = 0");
  if (f.degree() <= 0) return make_monic(f);
  return make_monic(f / gcd(f, d));
}

bool is_squarefree(const Polynomial& f) {
  if (f.is_zero()) return false;
  if (f.degree() <= 0) return true;
  const Polynomial d = derivative(f);
  if (d.is_zero()) return false;
  return gcd(f, d).degree() == 0;
}

std::vector<SquarefreeFactor> squarefree_decomposition(const Polynomial& f) {
  if (f.is_zero()) throw Error(ErrorCode::DivisionByZero, "decomposition of zero");
  std::vector<SquarefreeFactor> out;
  if (f.degree() == 0) return out;
  const Polynomial b = make_monic(f);
  const Polynomial db = derivative(b);
  if (db.is_zero()) throw Error(ErrorCode::InseparableInput, "f' = 0");
  Polynomial c = gcd(b, db);
  Polynomial w = b / c;
  int i = 1;
  while (w.degree() > 0) {
    Polynomial y = gcd(w, c);
    Polynomial z = w / y;
    if (z.degree() > 0) out.push_back({z, i});
    ++i;
    w = std::move(y);
    c = c / w;
  }
  Polynomial check = Polynomial::constant(f.field().one());
  for (const auto& [fac, mult] : out) {
    for (int k = 0; k < mult; ++k) check = check * fac;
  }
  if (c.degree() > 0 || !(check == b)) {
    throw Error(ErrorCode::InseparableInput, "multiplicity divisible by the characteristic");
  }
  return out;
}

namespace {

void split_linear(const Polynomial& g, std::vector<ElemIndex>& roots) {
  const auto& F = g.field();
  if (g.degree() <= 0) return;
  if (g.degree() == 1) {
    const auto raw = g.raw();
    roots.push_back(F.neg(F.mul(raw[0], F.inv(raw[1]))));
    return;
  }
  const Polynomial one = Polynomial::constant(F.one());
  const std::uint64_t half = (std::uint64_t{F.order()} - 1) / 2;
  for (ElemIndex delta = 0; delta < F.order(); ++delta) {
    const Polynomial shifted(F, std::vector<ElemIndex>{delta, 1});
    const Polynomial h = gcd(g, powmod(shifted, half, g) - one);
    if (h.degree() > 0 && h.degree() < g.degree()) {
      split_linear(h, roots);
      split_linear(g / h, roots);
      return;
    }
  }
  throw Error(ErrorCode::OutOfRange, "equal-degree splitting failed");  // not reachable for odd q
}

}  // namespace

std::vector<FieldElement> roots_in_field(const Polynomial& f, RootStrategy strategy) {
  if (f.is_zero()) throw Error(ErrorCode::DivisionByZero, "roots of the zero polynomial");
  const auto& F = f.field();
  if (strategy == RootStrategy::Auto) {
    strategy = F.order() <= 10000 ? RootStrategy::Exhaustive : RootStrategy::GcdSplit;
  }
  if (F.characteristic() == 2) strategy = RootStrategy::Exhaustive;

  std::vector<ElemIndex> roots;
  if (f.degree() > 0) {
    if (strategy == RootStrategy::Exhaustive) {
      for (ElemIndex x = 0; x < F.order(); ++x) {
        if (f.eval(x) == 0) roots.push_back(x);
      }
    } else {
      const Polynomial m = make_monic(f);
      const Polynomial xq = powmod(Polynomial::x(F), F.order(), m);
      const Polynomial diff = xq - Polynomial::x(F);
      const Polynomial g = diff.is_zero() ? m : gcd(m, diff);
      split_linear(g, roots);
      std::sort(roots.begin(), roots.end());
    }
  }
  std::vector<FieldElement> out;
  out.reserve(roots.size());
  for (auto r : roots) out.push_back(F.element(r));
  return out;
}

std::vector<DegreePart> distinct_degree_pattern(const Polynomial& f) {
  if (!is_squarefree(f)) throw Error(ErrorCode::NotSquarefree, "distinct-degree pattern needs squarefree input");
  const auto& F = f.field();
  std::vector<DegreePart> parts;
  Polynomial rest = make_monic(f);
  const Polynomial x = Polynomial::x(F);
  Polynomial h = x % rest;
  for (int d = 1; rest.degree() >= 2 * d; ++d) {
    h = powmod(h, F.order(), rest);
    const Polynomial g = gcd(rest, h - x);
    if (g.degree() > 0) {
      parts.push_back({d, g.degree()});
      rest = rest / g;
      h = h % rest;
    }
  }
  if (rest.degree() > 0) parts.push_back({rest.degree(), rest.degree()});
  return parts;
}

std::string to_string(const Polynomial& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  const auto cs = f.coeffs();
  for (std::size_t i = 0; i < cs.size(); ++i) {
    if (i) os << ',';
    os << to_string(cs[i]);
  }
  return os.str();
}

Polynomial parse_polynomial(const FieldSpec& field, std::string_view text) {
  std::vector<ElemIndex> raw;
  while (true) {
    const auto comma = text.find(',');
    raw.push_back(parse_element(field, text.substr(0, comma)).index());
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return Polynomial(field, std::move(raw));
}

}  // namespace marcs
