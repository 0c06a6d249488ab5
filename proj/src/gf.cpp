#include "marcs/gf.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <sstream>

namespace marcs {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::EvenCharacteristic: return "EvenCharacteristic";
    case ErrorCode::BothZero: return "BothZero";
    case ErrorCode::InseparableInput: return "InseparableInput";
    case ErrorCode::NotSquarefree: return "NotSquarefree";
    case ErrorCode::EqualPoints: return "EqualPoints";
    case ErrorCode::NoAdmissiblePrime: return "NoAdmissiblePrime";
    case ErrorCode::InvalidCurve: return "InvalidCurve";
    case ErrorCode::NotOnCurve: return "NotOnCurve";
    case ErrorCode::SingularPoint: return "SingularPoint";
    case ErrorCode::LineIsComponent: return "LineIsComponent";
    case ErrorCode::InseparableProfile: return "InseparableProfile";
    case ErrorCode::NoWitness: return "NoWitness";
    case ErrorCode::HypothesisFailure: return "HypothesisFailure";
    case ErrorCode::PointInArc: return "PointInArc";
    case ErrorCode::ArcViolation: return "ArcViolation";
    case ErrorCode::PointOnCurve: return "PointOnCurve";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::OutOfRange: return "OutOfRange";
  }
  return "Unknown";
}

namespace {

using Digits = std::vector<std::uint64_t>;

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

// Minimal polynomial helpers over F_p used only to pick the modulus.
struct PrimePoly {
  std::uint64_t p;

  void trim(Digits& f) const {
    while (!f.empty() && f.back() == 0) f.pop_back();
  }

  std::uint64_t inv(std::uint64_t x) const {
    std::uint64_t r = 1, b = x % p, e = p - 2;
    while (e) {
      if (e & 1) r = r * b % p;
      b = b * b % p;
      e >>= 1;
    }
    return r;
  }

  Digits mod(Digits f, const Digits& g) const {
    trim(f);
    const std::uint64_t lc_inv = inv(g.back());
    while (f.size() >= g.size()) {
      const std::uint64_t c = f.back() * lc_inv % p;
      const std::size_t shift = f.size() - g.size();
      for (std::size_t i = 0; i < g.size(); ++i) {
        f[shift + i] = (f[shift + i] + (p - c) * g[i]) % p;
      }
      trim(f);
    }
    return f;
  }

  Digits mulmod(const Digits& f, const Digits& g, const Digits& m) const {
    if (f.empty() || g.empty()) return {};
    Digits r(f.size() + g.size() - 1, 0);
    for (std::size_t i = 0; i < f.size(); ++i)
      for (std::size_t j = 0; j < g.size(); ++j) r[i + j] = (r[i + j] + f[i] * g[j]) % p;
    return mod(std::move(r), m);
  }

  Digits powmod(Digits base, std::uint64_t e, const Digits& m) const {
    Digits r{1};
    base = mod(std::move(base), m);
    while (e) {
      if (e & 1) r = mulmod(r, base, m);
      base = mulmod(base, base, m);
      e >>= 1;
    }
    return r;
  }

  Digits gcd(Digits a, Digits b) const {
    trim(a);
    trim(b);
    while (!b.empty()) {
      Digits r = mod(a, b);
      a = std::move(b);
      b = std::move(r);
    }
    return a;
  }

  // Ben-Or: f of degree a is irreducible iff gcd(f, x^{p^i} - x) = 1 for
  // 1 <= i <= a/2.
  bool irreducible(const Digits& f) const {
    const std::size_t a = f.size() - 1;
    Digits xpow{0, 1};
    for (std::size_t i = 1; i <= a / 2; ++i) {
      xpow = powmod(xpow, p, f);
      Digits t = xpow;
      t.resize(std::max<std::size_t>(t.size(), 2), 0);
      t[1] = (t[1] + p - 1) % p;
      trim(t);
      if (t.empty()) return false;
      if (gcd(f, t).size() > 1) return false;
    }
    return true;
  }
};

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// FieldSpec

FieldSpec::FieldSpec(std::uint32_t p, std::uint32_t a, std::vector<std::uint32_t> modulus)
    : p_(p), a_(a), modulus_(std::move(modulus)) {
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < a; ++i) q *= p;
  q_ = static_cast<std::uint32_t>(q);

  // Smallest generator of the multiplicative group.
  if (q_ == 2) {
    generator_ = 1;
  } else {
    const auto factors = prime_factors(q_ - 1);
    for (ElemIndex g = 1; g < q_; ++g) {
      bool ok = true;
      for (auto f : factors) {
        if (pow_slow(g, (q_ - 1) / f) == 1) {
          ok = false;
          break;
        }
      }
      if (ok) {
        generator_ = g;
        break;
      }
    }
  }
  if (q_ <= kTableLimit) build_tables();
}

void FieldSpec::build_tables() {
  const std::uint32_t n = q_ - 1;
  exp_.assign(2 * std::size_t{n}, 0);
  log_.assign(q_, 0);
  ElemIndex v = 1;
  for (std::uint32_t i = 0; i < n; ++i) {
    exp_[i] = v;
    exp_[i + n] = v;
    log_[v] = i;
    v = mul_digits(v, generator_);
  }
  if (a_ > 1) {
    neg_.resize(q_);
    for (ElemIndex x = 0; x < q_; ++x) neg_[x] = add_digits(0, x, true);
    if (q_ <= kAddTableLimit) {
      add_table_.resize(std::size_t{q_} * q_);
      for (ElemIndex x = 0; x < q_; ++x)
        for (ElemIndex y = 0; y < q_; ++y) add_table_[std::size_t{x} * q_ + y] = add_digits(x, y, false);
    }
  }
  tabled_ = true;
}

std::string FieldSpec::description() const {
  return std::to_string(p_) + "^" + std::to_string(a_);
}

std::vector<std::uint32_t> FieldSpec::digits(ElemIndex x) const {
  std::vector<std::uint32_t> d(a_, 0);
  for (std::uint32_t i = 0; i < a_; ++i) {
    d[i] = x % p_;
    x /= p_;
  }
  return d;
}

ElemIndex FieldSpec::from_digits(std::span<const std::uint32_t> d) const {
  if (d.size() > a_) throw Error(ErrorCode::OutOfRange, "too many coefficients for " + description());
  std::uint64_t v = 0;
  for (std::size_t i = d.size(); i-- > 0;) v = v * p_ + d[i] % p_;
  return static_cast<ElemIndex>(v);
}

ElemIndex FieldSpec::add_digits(ElemIndex x, ElemIndex y, bool subtract) const {
  std::uint64_t out = 0, scale = 1;
  for (std::uint32_t i = 0; i < a_; ++i) {
    const std::uint32_t dx = x % p_, dy = y % p_;
    x /= p_;
    y /= p_;
    const std::uint32_t s = subtract ? (dx + p_ - dy) % p_ : (dx + dy) % p_;
    out += s * scale;
    scale *= p_;
  }
  return static_cast<ElemIndex>(out);
}

ElemIndex FieldSpec::mul_digits(ElemIndex x, ElemIndex y) const {
  if (a_ == 1) return static_cast<ElemIndex>(std::uint64_t{x} * y % p_);
  const auto dx = digits(x), dy = digits(y);
  std::vector<std::uint64_t> r(2 * a_ - 1, 0);
  for (std::uint32_t i = 0; i < a_; ++i) {
    if (dx[i] == 0) continue;
    for (std::uint32_t j = 0; j < a_; ++j) r[i + j] = (r[i + j] + std::uint64_t{dx[i]} * dy[j]) % p_;
  }
  for (std::size_t k = r.size(); k-- > a_;) {
    const std::uint64_t c = r[k];
    if (c == 0) continue;
    for (std::uint32_t i = 0; i < a_; ++i) {
      r[k - a_ + i] = (r[k - a_ + i] + (p_ - c) * modulus_[i]) % p_;
    }
    r[k] = 0;
  }
  std::uint64_t out = 0;
  for (std::size_t i = a_; i-- > 0;) out = out * p_ + r[i];
  return static_cast<ElemIndex>(out);
}

ElemIndex FieldSpec::pow_slow(ElemIndex x, std::uint64_t e) const {
  ElemIndex r = 1;
  while (e) {
    if (e & 1) r = mul_digits(r, x);
    x = mul_digits(x, x);
    e >>= 1;
  }
  return r;
}

ElemIndex FieldSpec::add(ElemIndex x, ElemIndex y) const {
  if (a_ == 1) {
    const std::uint64_t s = std::uint64_t{x} + y;
    return static_cast<ElemIndex>(s >= p_ ? s - p_ : s);
  }
  if (!add_table_.empty()) return add_table_[std::size_t{x} * q_ + y];
  return add_digits(x, y, false);
}

ElemIndex FieldSpec::sub(ElemIndex x, ElemIndex y) const {
  if (a_ == 1) return x >= y ? x - y : static_cast<ElemIndex>(std::uint64_t{x} + p_ - y);
  if (!add_table_.empty()) return add_table_[std::size_t{x} * q_ + neg_[y]];
  return add_digits(x, y, true);
}

ElemIndex FieldSpec::neg(ElemIndex x) const {
  if (a_ == 1) return x == 0 ? 0 : p_ - x;
  if (!neg_.empty()) return neg_[x];
  return add_digits(0, x, true);
}

ElemIndex FieldSpec::mul(ElemIndex x, ElemIndex y) const {
  if (a_ == 1) return static_cast<ElemIndex>(std::uint64_t{x} * y % p_);
  if (x == 0 || y == 0) return 0;
  if (tabled_) return exp_[log_[x] + log_[y]];
  return mul_digits(x, y);
}

ElemIndex FieldSpec::inv(ElemIndex x) const {
  if (x == 0) throw Error(ErrorCode::DivisionByZero, "inverse of zero in " + description());
  if (tabled_) return exp_[(q_ - 1 - log_[x]) % (q_ - 1)];
  return pow_slow(x, q_ - 2);
}

ElemIndex FieldSpec::pow(ElemIndex x, std::uint64_t e) const {
  if (e == 0) return 1;
  if (x == 0) return 0;
  if (tabled_) return exp_[static_cast<std::uint64_t>(log_[x]) * (e % (q_ - 1)) % (q_ - 1)];
  return pow_slow(x, e);
}

ElemIndex FieldSpec::from_integer(std::int64_t value) const {
  std::int64_t r = value % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return static_cast<ElemIndex>(r);
}

int FieldSpec::quadratic_character(ElemIndex x) const {
  if (p_ == 2) throw Error(ErrorCode::EvenCharacteristic, "quadratic character needs odd q");
  if (x == 0) return 0;
  if (tabled_) return (log_[x] % 2 == 0) ? 1 : -1;
  return pow_slow(x, (q_ - 1) / 2) == 1 ? 1 : -1;
}

FieldElement FieldSpec::element(ElemIndex index) const {
  if (index >= q_) throw Error(ErrorCode::OutOfRange, "element encoding outside " + description());
  return FieldElement(*this, index);
}

FieldElement FieldSpec::from_coeffs(std::span<const std::uint32_t> coeffs) const {
  return FieldElement(*this, from_digits(coeffs));
}

FieldElement FieldSpec::from_int(std::int64_t value) const { return FieldElement(*this, from_integer(value)); }
FieldElement FieldSpec::zero() const { return FieldElement(*this, 0); }
FieldElement FieldSpec::one() const { return FieldElement(*this, 1); }
FieldElement FieldSpec::primitive_element() const { return FieldElement(*this, generator_); }

std::vector<FieldElement> FieldSpec::elements() const {
  std::vector<FieldElement> out;
  out.reserve(q_);
  for (ElemIndex i = 0; i < q_; ++i) out.emplace_back(*this, i);
  return out;
}

// ---------------------------------------------------------------------------
// FieldElement

FieldElement::FieldElement(const FieldSpec& field, ElemIndex index) : field_(&field), index_(index) {}

const FieldSpec& FieldElement::field() const {
  if (!field_) throw Error(ErrorCode::FieldMismatch, "element without a field");
  return *field_;
}

const FieldSpec* FieldElement::same_field(const FieldElement& o) const {
  if (!field_ || field_ != o.field_) throw Error(ErrorCode::FieldMismatch, "operands live in different fields");
  return field_;
}

std::vector<std::uint32_t> FieldElement::coeffs() const { return field().digits(index_); }

FieldElement FieldElement::operator+(const FieldElement& o) const {
  const auto* f = same_field(o);
  return FieldElement(*f, f->add(index_, o.index_));
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
  const auto* f = same_field(o);
  return FieldElement(*f, f->sub(index_, o.index_));
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
  const auto* f = same_field(o);
  return FieldElement(*f, f->mul(index_, o.index_));
}

FieldElement FieldElement::operator/(const FieldElement& o) const {
  const auto* f = same_field(o);
  return FieldElement(*f, f->mul(index_, f->inv(o.index_)));
}

FieldElement FieldElement::operator-() const { return FieldElement(field(), field().neg(index_)); }

FieldElement FieldElement::inv() const { return FieldElement(field(), field().inv(index_)); }

FieldElement FieldElement::pow(std::int64_t e) const {
  const auto& f = field();
  if (e < 0) {
    return FieldElement(f, f.pow(f.inv(index_), static_cast<std::uint64_t>(-(e + 1)) + 1));
  }
  return FieldElement(f, f.pow(index_, static_cast<std::uint64_t>(e)));
}

// ---------------------------------------------------------------------------
// Construction and parsing

Field make_field(std::uint32_t p, std::uint32_t a) {
  if (!is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  if (a == 0) throw Error(ErrorCode::OutOfRange, "extension degree must be positive");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < a; ++i) {
    q *= p;
    if (q > std::numeric_limits<std::uint32_t>::max()) {
      throw Error(ErrorCode::OutOfRange, "field order exceeds 32-bit encodings");
    }
  }
  if (a == 1) return std::make_shared<const FieldSpec>(p, 1, std::vector<std::uint32_t>{0, 1});

  const PrimePoly pp{p};
  for (std::uint64_t e = 0; e < q; ++e) {
    Digits f(a + 1, 0);
    std::uint64_t v = e;
    for (std::uint32_t i = 0; i < a; ++i) {
      f[i] = v % p;
      v /= p;
    }
    f[a] = 1;
    if (f[0] == 0) continue;
    if (pp.irreducible(f)) {
      return std::make_shared<const FieldSpec>(p, a, std::vector<std::uint32_t>(f.begin(), f.end()));
    }
  }
  throw Error(ErrorCode::OutOfRange, "no irreducible modulus found");  // unreachable
}

namespace {

std::int64_t parse_int(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  std::int64_t v = 0;
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw Error(ErrorCode::ParseError, "expected an integer, got '" + std::string(s) + "'");
  }
  return v;
}

}  // namespace

Field parse_field(std::string_view text) {
  const auto caret = text.find('^');
  const std::int64_t p = parse_int(text.substr(0, caret));
  const std::int64_t a = caret == std::string_view::npos ? 1 : parse_int(text.substr(caret + 1));
  if (p <= 0 || a <= 0 || p > std::numeric_limits<std::uint32_t>::max() || a > 64) {
    throw Error(ErrorCode::ParseError, "bad field description '" + std::string(text) + "'");
  }
  return make_field(static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(a));
}

bool is_square(const FieldElement& x) {
  const auto& f = x.field();
  if (f.characteristic() == 2) throw Error(ErrorCode::EvenCharacteristic, "is_square needs odd q");
  if (x.is_zero()) return true;
  return f.pow(x.index(), (f.order() - 1) / 2) == 1;
}

FieldElement first_nonsquare(const FieldSpec& field) {
  if (field.characteristic() == 2) throw Error(ErrorCode::EvenCharacteristic, "no non-squares in even q");
  for (ElemIndex i = 1; i < field.order(); ++i) {
    if (field.quadratic_character(i) < 0) return field.element(i);
  }
  throw Error(ErrorCode::OutOfRange, "no non-square found");  // unreachable for odd q
}

std::optional<FieldElement> sqrt(const FieldElement& x) {
  const auto& f = x.field();
  if (f.characteristic() == 2) throw Error(ErrorCode::EvenCharacteristic, "sqrt needs odd q");
  if (x.is_zero()) return x;
  if (!is_square(x)) return std::nullopt;
  const std::uint64_t q = f.order();
  ElemIndex y;
  if (q % 4 == 3) {
    y = f.pow(x.index(), (q + 1) / 4);
  } else {
    // Tonelli-Shanks in the cyclic group of order q - 1 = 2^s t.
    std::uint64_t t = q - 1;
    unsigned s = 0;
    while (t % 2 == 0) {
      t /= 2;
      ++s;
    }
    const ElemIndex z = first_nonsquare(f).index();
    ElemIndex c = f.pow(z, t);
    ElemIndex r = f.pow(x.index(), (t + 1) / 2);
    ElemIndex b = f.pow(x.index(), t);
    unsigned m = s;
    while (b != 1) {
      unsigned i = 0;
      ElemIndex b2 = b;
      while (b2 != 1) {
        b2 = f.mul(b2, b2);
        ++i;
      }
      ElemIndex d = c;
      for (unsigned j = 0; j + i + 1 < m; ++j) d = f.mul(d, d);
      r = f.mul(r, d);
      c = f.mul(d, d);
      b = f.mul(b, c);
      m = i;
    }
    y = r;
  }
  return f.element(std::min(y, f.neg(y)));
}

std::string to_string(const FieldElement& x) {
  const auto& f = x.field();
  if (f.degree() == 1) return std::to_string(x.index());
  std::ostringstream os;
  os << '(';
  const auto d = x.coeffs();
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (i) os << ';';
    os << d[i];
  }
  os << ')';
  return os.str();
}

FieldElement parse_element(const FieldSpec& field, std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  if (!text.empty() && text.front() == '(') {
    if (text.back() != ')') throw Error(ErrorCode::ParseError, "unterminated element '" + std::string(text) + "'");
    text = text.substr(1, text.size() - 2);
    std::vector<std::uint32_t> d;
    while (true) {
      const auto semi = text.find(';');
      d.push_back(field.from_integer(parse_int(text.substr(0, semi))));
      if (semi == std::string_view::npos) break;
      text.remove_prefix(semi + 1);
    }
    if (d.size() > field.degree()) {
      throw Error(ErrorCode::ParseError, "element has more than " + std::to_string(field.degree()) + " coefficients");
    }
    return field.from_coeffs(d);
  }
  return field.from_int(parse_int(text));
}

}  // namespace marcs
