#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "hlwhit/partition.hpp"
#include "hlwhit/ratfunc.hpp"

namespace hlwhit {

enum class Basis { Monomial, Schur, PowerSum, Homogeneous };

std::string basis_name(Basis b);    // "monomial", "schur", ...
char basis_symbol(Basis b);         // 'm', 's', 'p', 'h'
Basis parse_basis(const std::string& name);

using EvaluationPoint = std::vector<Rational>;

// Homogeneous symmetric function of a fixed degree in a fixed number of
// variables: a coefficient map over partitions of the degree, tagged with a
// basis label. Monomial and Schur keys are capped at num_vars parts (longer
// basis elements vanish in that many variables); power-sum and homogeneous
// keys may be arbitrarily long, since those bases are manipulated generically
// and the variable count is imposed only when converting to monomials or
// evaluating.
class SymFunc {
 public:
  using TermMap = std::map<Partition, RatFunc, std::greater<Partition>>;

  SymFunc(int degree, int num_vars, Basis basis);
  static SymFunc one(int num_vars, Basis basis);  // degree-0 constant 1
  static SymFunc basis_element(Basis basis, const Partition& lambda, int num_vars);

  int degree() const { return degree_; }
  int num_vars() const { return num_vars_; }
  Basis basis() const { return basis_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  const RatFunc& coeff(const Partition& key) const;  // zero when absent
  void set_coeff(const Partition& key, RatFunc value);
  void add_coeff(const Partition& key, const RatFunc& value);

  SymFunc scaled(const RatFunc& s) const;
  friend SymFunc operator+(const SymFunc& a, const SymFunc& b);
  friend SymFunc operator-(const SymFunc& a, const SymFunc& b);
  // Syntactic equality: same degree, vars, basis and coefficients.
  friend bool operator==(const SymFunc& a, const SymFunc& b) = default;

  // Coefficient-wise substitution of the formal parameter.
  SymFunc substitute_parameter(const RatFunc& value) const;
  // All coefficients are polynomials in the parameter (den = 1)?
  bool has_polynomial_coeffs() const;

  std::string str(const std::string& coeff_var = "t") const;

 private:
  int degree_;
  int num_vars_;
  Basis basis_;
  TermMap terms_;
  void check_key(const Partition& key) const;
};

// Number of semistandard Young tableaux of the given shape and content,
// by horizontal-strip recursion (memoized). Requires |shape| = |content|.
long kostka_number(const Partition& shape, const Partition& content);

// Exact change of basis. Transition matrices are built once per degree and
// cached (idempotent fill, safe for concurrent readers).
SymFunc convert(const SymFunc& f, Basis target);

// Bilinear pairing making the Schur basis orthonormal. Requires equal degree.
RatFunc pairing(const SymFunc& f, const SymFunc& g);

// Product, in the monomial basis. Requires equal num_vars.
SymFunc multiply(const SymFunc& f, const SymFunc& g);

// Exact substitution of the variables. Point length must equal num_vars.
RatFunc evaluate(const SymFunc& f, const EvaluationPoint& pt);

enum class PlethysmDirection { Divide, Multiply };

// The ring map p_j -> (1 - t^j)^{-1} p_j (Divide) or its inverse (Multiply).
// Input must be in the power-sum basis.
SymFunc plethysm_one_minus_t(const SymFunc& f, PlethysmDirection dir);

}  // namespace hlwhit
