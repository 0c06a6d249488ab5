#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "marcs/gf.hpp"

namespace marcs {

/// Dense univariate polynomial over a finite field, ascending coefficients,
/// trailing zeros stripped.  The zero polynomial has degree -1.
class Polynomial {
 public:
  explicit Polynomial(const FieldSpec& field) : field_(&field) {}
  Polynomial(const FieldSpec& field, std::vector<ElemIndex> coeffs);
  Polynomial(const FieldSpec& field, std::initializer_list<std::int64_t> int_coeffs);
  static Polynomial from_elements(const FieldSpec& field, std::span<const FieldElement> coeffs);
  static Polynomial constant(const FieldElement& c);
  /// c * x^degree
  static Polynomial monomial(const FieldElement& c, int degree);
  static Polynomial x(const FieldSpec& field);

  const FieldSpec& field() const { return *field_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  FieldElement coeff(int i) const;
  FieldElement leading() const;
  std::span<const ElemIndex> raw() const { return c_; }
  std::vector<FieldElement> coeffs() const;

  FieldElement operator()(const FieldElement& x) const;
  ElemIndex eval(ElemIndex x) const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator*(const FieldElement& s) const;
  Polynomial operator-() const;
  /// Quotient of divmod.
  Polynomial operator/(const Polynomial& o) const;
  /// Remainder of divmod.
  Polynomial operator%(const Polynomial& o) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.field_ == b.field_ && a.c_ == b.c_;
  }

 private:
  void trim();
  void check_same(const Polynomial& o) const;

  const FieldSpec* field_;
  std::vector<ElemIndex> c_;
};

/// (quotient, remainder) with deg(remainder) < deg(divisor).
std::pair<Polynomial, Polynomial> divmod(const Polynomial& f, const Polynomial& g);
Polynomial make_monic(const Polynomial& f);
Polynomial derivative(const Polynomial& f);
/// Monic gcd via Euclid; BothZero when both inputs vanish.
Polynomial gcd(const Polynomial& f, const Polynomial& g);
/// base^e mod modulus.
Polynomial powmod(const Polynomial& base, std::uint64_t e, const Polynomial& modulus);

/// f / gcd(f, f') made monic.  InseparableInput when f' = 0 with deg f > 0.
Polynomial squarefree_part(const Polynomial& f);
bool is_squarefree(const Polynomial& f);

struct SquarefreeFactor {
  Polynomial factor;  // monic, squarefree
  int multiplicity;
};

/// Yun decomposition f = lc * prod factor^multiplicity.  Throws
/// InseparableInput when some multiplicity is divisible by p, which shows up
/// as a product that does not reconstruct f.
std::vector<SquarefreeFactor> squarefree_decomposition(const Polynomial& f);

enum class RootStrategy { Auto, Exhaustive, GcdSplit };

/// Roots in the base field, ascending encoding.  Auto evaluates every
/// element for q <= 10^4 and otherwise splits gcd(f, x^q - x).
std::vector<FieldElement> roots_in_field(const Polynomial& f, RootStrategy strategy = RootStrategy::Auto);

struct DegreePart {
  int degree;        // d
  int total_degree;  // e_d: degree of the product of all degree-d factors

  friend bool operator==(const DegreePart&, const DegreePart&) = default;
};

/// Distinct-degree factorization data of a squarefree polynomial, ascending
/// d.  Throws NotSquarefree.
std::vector<DegreePart> distinct_degree_pattern(const Polynomial& f);

/// "c0,c1,...,cn" with element text per coefficient.
std::string to_string(const Polynomial& f);
Polynomial parse_polynomial(const FieldSpec& field, std::string_view text);

}  // namespace marcs
