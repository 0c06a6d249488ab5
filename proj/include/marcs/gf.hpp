#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "marcs/error.hpp"

namespace marcs {

class FieldSpec;
class FieldElement;

/// Shared, immutable handle to a finite field.
using Field = std::shared_ptr<const FieldSpec>;

/// Raw element encoding: the coefficient tuple (c0, ..., c_{a-1}) of the
/// residue class c0 + c1 x + ... mod the field modulus, packed as
/// c0 + c1 p + c2 p^2 + ....  The encoding is canonical, and ascending
/// encodings give the enumeration order of the field.
using ElemIndex = std::uint32_t;

/// F_{p^a} realised as F_p[x]/(modulus).
///
/// Fields with at most kTableLimit elements carry exp/log tables (and an
/// addition table when small enough); larger fields, which only show up
/// as splitting extensions in witness searches, fall back to schoolbook
/// arithmetic on the coefficient digits.  Both paths produce identical
/// results.
class FieldSpec {
 public:
  static constexpr std::uint64_t kTableLimit = std::uint64_t{1} << 20;
  static constexpr std::uint64_t kAddTableLimit = 1024;

  FieldSpec(std::uint32_t p, std::uint32_t a, std::vector<std::uint32_t> modulus);

  std::uint32_t characteristic() const { return p_; }
  std::uint32_t degree() const { return a_; }
  std::uint32_t order() const { return q_; }
  /// Monic modulus, ascending coefficients, length degree()+1.
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }
  /// "p^a" form, e.g. "5^2".
  std::string description() const;

  FieldElement element(ElemIndex index) const;
  FieldElement from_coeffs(std::span<const std::uint32_t> coeffs) const;
  /// Image of an integer in the prime subfield.
  FieldElement from_int(std::int64_t value) const;
  FieldElement zero() const;
  FieldElement one() const;
  /// All q elements, ascending encoding.
  std::vector<FieldElement> elements() const;
  /// Generator of the multiplicative group (smallest encoding), computed at
  /// construction.
  FieldElement primitive_element() const;

  // Raw arithmetic on encodings, for hot loops.
  ElemIndex add(ElemIndex x, ElemIndex y) const;
  ElemIndex sub(ElemIndex x, ElemIndex y) const;
  ElemIndex neg(ElemIndex x) const;
  ElemIndex mul(ElemIndex x, ElemIndex y) const;
  ElemIndex inv(ElemIndex x) const;  // throws DivisionByZero
  ElemIndex pow(ElemIndex x, std::uint64_t e) const;
  ElemIndex from_integer(std::int64_t value) const;
  /// 0 for zero, +1 for nonzero squares, -1 otherwise (q odd).
  int quadratic_character(ElemIndex x) const;

  std::vector<std::uint32_t> digits(ElemIndex x) const;
  ElemIndex from_digits(std::span<const std::uint32_t> digits) const;

 private:
  ElemIndex mul_digits(ElemIndex x, ElemIndex y) const;
  ElemIndex add_digits(ElemIndex x, ElemIndex y, bool subtract) const;
  ElemIndex pow_slow(ElemIndex x, std::uint64_t e) const;
  void build_tables();

  std::uint32_t p_;
  std::uint32_t a_;
  std::uint32_t q_;
  std::vector<std::uint32_t> modulus_;
  ElemIndex generator_ = 0;

  bool tabled_ = false;
  std::vector<ElemIndex> exp_;        // size 2(q-1)
  std::vector<std::uint32_t> log_;    // size q, log_[0] unused
  std::vector<ElemIndex> neg_;        // size q (extension fields only)
  std::vector<ElemIndex> add_table_;  // q*q when q <= kAddTableLimit, a > 1
};

/// A value in a finite field.  Elements borrow their FieldSpec: the field
/// handle must outlive every element created from it.
class FieldElement {
 public:
  FieldElement() = default;
  FieldElement(const FieldSpec& field, ElemIndex index);

  const FieldSpec& field() const;
  const FieldSpec* field_ptr() const { return field_; }
  ElemIndex index() const { return index_; }
  std::vector<std::uint32_t> coeffs() const;
  bool is_zero() const { return index_ == 0; }
  bool is_one() const { return index_ == 1; }

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator/(const FieldElement& o) const;
  FieldElement operator-() const;
  FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
  FieldElement& operator-=(const FieldElement& o) { return *this = *this - o; }
  FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }
  FieldElement inv() const;
  /// Square-and-multiply; negative exponents go through the inverse.
  FieldElement pow(std::int64_t e) const;

  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.field_ == b.field_ && a.index_ == b.index_;
  }
  friend std::strong_ordering operator<=>(const FieldElement& a, const FieldElement& b) {
    return a.index_ <=> b.index_;
  }

 private:
  const FieldSpec* same_field(const FieldElement& o) const;

  const FieldSpec* field_ = nullptr;
  ElemIndex index_ = 0;
};

bool is_prime(std::uint64_t n);

/// F_{p^a} with the first monic irreducible modulus of degree a, candidates
/// ordered by ascending packed encoding of (c0, ..., c_{a-1}).  For a = 1
/// the modulus is x.
Field make_field(std::uint32_t p, std::uint32_t a);

/// Parses "p^a" or a bare prime "p".  Throws ParseError / NotPrime.
Field parse_field(std::string_view text);

/// True iff x = 0 or x^((q-1)/2) = 1.  Throws EvenCharacteristic for p = 2.
bool is_square(const FieldElement& x);

/// Square root with the smaller encoding of {y, -y}; nullopt for
/// non-residues.  Uses x^((q+1)/4) when q = 3 mod 4 and Tonelli-Shanks
/// otherwise.
std::optional<FieldElement> sqrt(const FieldElement& x);

/// First non-square in enumeration order (q odd).
FieldElement first_nonsquare(const FieldSpec& field);

/// Element text: the integer residue for prime fields, "(c0;c1;...)" for
/// extensions.
std::string to_string(const FieldElement& x);
FieldElement parse_element(const FieldSpec& field, std::string_view text);

}  // namespace marcs
