#pragma once

// Free graded algebras over Z/2 with a differential, and the invariants
// built from their augmentations.

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

namespace leglab {

using Degree = std::int64_t;

/// Gamma = Z (modulus 0) or Z/mZ (modulus m > 0).
class GradingGroup {
 public:
  constexpr GradingGroup() = default;
  explicit GradingGroup(std::int64_t modulus);

  std::int64_t modulus() const { return modulus_; }

  /// Canonical representative: the integer itself for Z, [0, m) otherwise.
  Degree reduce(Degree d) const;
  bool equal(Degree a, Degree b) const { return reduce(a - b) == 0; }

  friend bool operator==(const GradingGroup&, const GradingGroup&) = default;

 private:
  std::int64_t modulus_ = 0;
};

/// A word in the generators; the empty word is the unit.
using Monomial = std::vector<int>;

/// Length first, then lexicographic on generator indices.
bool canonical_less(const Monomial& a, const Monomial& b);

/// Element of the tensor algebra over Z/2: a set of monomials kept sorted in
/// canonical order.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Monomial> terms);  // duplicates cancel in pairs

  static Polynomial one() { return Polynomial({Monomial{}}); }
  static Polynomial generator(int i) { return Polynomial({Monomial{i}}); }

  const std::vector<Monomial>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool has_constant() const { return !terms_.empty() && terms_.front().empty(); }
  bool contains(const Monomial& m) const;
  bool involves(int generator) const;

  /// Toggles m (adding over Z/2).
  void add(const Monomial& m);

  Polynomial& operator+=(const Polynomial& other);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  /// Terms of word length exactly k.
  Polynomial component(std::size_t k) const;

 private:
  std::vector<Monomial> terms_;
};

struct DGA {
  std::vector<std::string> names;
  GradingGroup grading;
  std::vector<Degree> degrees;  // reduced representatives
  std::vector<Polynomial> diffs;

  std::size_t size() const { return names.size(); }
  Degree degree_of(const Monomial& m) const;

  /// Appends a generator and returns its index.
  int add_generator(std::string name, Degree degree, Polynomial diff = {});
  std::optional<int> index_of(const std::string& name) const;

  friend bool operator==(const DGA&, const DGA&) = default;
};

/// Renders a polynomial with generator names, e.g. "1 + a7 + a7 a6 a5".
std::string to_string(const DGA& d, const Polynomial& p);

struct Violation {
  enum class Kind { IndexOutOfRange, NotHomogeneous, DifferentialSquare };
  Kind kind;
  int generator;
  std::string message;
  Polynomial witness;  // offending monomials (the bad terms, or the value of d^2)
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

ValidationReport validate_dga(const DGA& d);

/// Leibniz extension of d.diffs to p.
Polynomial apply_differential(const DGA& d, const Polynomial& p);

/// The algebra map sending generator i to images[i] (or to itself when
/// images[i] is empty).
Polynomial substitute(const Polynomial& p, std::span<const std::optional<Polynomial>> images);

/// Aut_0 element a_i -> a_i + c_i.  c_i may only be set on degree-0 generators.
struct ShiftAutomorphism {
  std::vector<bool> shifts;
  friend bool operator==(const ShiftAutomorphism&, const ShiftAutomorphism&) = default;
};

/// d^g = g^{-1} d g.  Throws std::invalid_argument if g shifts a generator of
/// nonzero degree.
DGA conjugate(const DGA& d, const ShiftAutomorphism& g);

inline constexpr int kDefaultMaxDegreeZero = 24;

/// All g in Aut_0 with (d^g)_0 = 0, in binary-counting order over the
/// degree-0 generators (lowest index = least significant bit).  Throws
/// CapExceeded when there are more than max_degree_zero degree-0 generators.
std::vector<ShiftAutomorphism> find_augmentation_shifts(const DGA& d,
                                                        int max_degree_zero = kDefaultMaxDegreeZero);

/// Graded dimensions of H(A_1, d_1): a finitely supported map Gamma -> N.
class PoincarePolynomial {
 public:
  PoincarePolynomial() = default;
  PoincarePolynomial(GradingGroup grading, std::map<Degree, int> coeffs);

  const GradingGroup& grading() const { return grading_; }
  const std::map<Degree, int>& coeffs() const { return coeffs_; }
  int coefficient(Degree d) const;

  /// P(-1); undefined for odd modulus.
  std::optional<std::int64_t> at_minus_one() const;
  /// P(1), the total dimension.
  std::int64_t at_one() const;

  /// "t^-2+t+t^2", "2+t", "0".
  std::string to_string() const;

  friend auto operator<=>(const PoincarePolynomial& a, const PoincarePolynomial& b) {
    return a.coeffs_ <=> b.coeffs_;
  }
  friend bool operator==(const PoincarePolynomial& a, const PoincarePolynomial& b) {
    return a.grading_ == b.grading_ && a.coeffs_ == b.coeffs_;
  }

 private:
  GradingGroup grading_;
  std::map<Degree, int> coeffs_;  // zero coefficients are not stored
};

/// Throws std::invalid_argument if g does not kill the constant terms.
PoincarePolynomial linearized_poincare(const DGA& d, const ShiftAutomorphism& g);

using InvariantSet = std::set<PoincarePolynomial>;

InvariantSet invariant_I(const DGA& d, int max_degree_zero = kDefaultMaxDegreeZero);

/// Algebraic stabilization: two new generators of degrees l and l - 1 with
/// d(a_{n+1}) = a_{n+2}.
DGA stabilize_dga(const DGA& d, Degree l);

/// Conjugates d by the elementary automorphism a_i -> a_i + v.  Throws
/// std::invalid_argument if v involves a_i or is not homogeneous of
/// degree deg(a_i).
DGA apply_elementary(const DGA& d, int i, const Polynomial& v);

/// Reverses every monomial of every differential.
DGA mirror_dga(const DGA& d);

/// Renames new generators so that names stay unique: "a<n+1>", "a<n+2>", ...
std::string fresh_generator_name(const DGA& d);

}  // namespace leglab
