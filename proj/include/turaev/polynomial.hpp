#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <json.hpp>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace turaev {

using Int = boost::multiprecision::cpp_int;
using Json = nlohmann::ordered_json;

// Sparse Laurent polynomial in one variable over Z.  Exponents may be
// negative; zero coefficients are never stored.  Each polynomial carries a
// variable tag ("A" for bracket polynomials, "t" for Jones polynomials);
// mixing tags in arithmetic is a programming error and throws.
class Laurent {
 public:
  Laurent() = default;
  explicit Laurent(std::string var) : var_(std::move(var)) {}

  static Laurent constant(const Int& c, std::string var = "A");
  static Laurent monomial(const Int& c, long exp, std::string var = "A");

  const std::string& var() const { return var_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<long, Int>& terms() const { return terms_; }
  Int coeff(long exp) const;

  // All three throw std::domain_error on the zero polynomial, which has no
  // well-defined degree span.
  long min_exp() const;
  long max_exp() const;
  long span() const;

  Laurent operator-() const;
  Laurent& operator+=(const Laurent& o);
  Laurent& operator-=(const Laurent& o);
  Laurent& operator*=(const Laurent& o) { *this = *this * o; return *this; }
  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
  friend Laurent operator*(const Laurent& a, const Laurent& b);
  bool operator==(const Laurent& o) const;
  bool operator!=(const Laurent& o) const { return !(*this == o); }

  Laurent pow(unsigned long k) const;
  Laurent shifted(long d) const;       // multiply by var^d
  Laurent scaled(const Int& c) const;  // multiply by the constant c
  Laurent with_var(std::string var) const;

  // Evaluate at u, which must be 1 or -1 (the only integers whose negative
  // powers stay integral).
  Int eval_unit(int u) const;

  // Canonical text: ascending exponents, unit coefficients suppressed,
  // e.g. "A^-8 - A^-4 + 1 - A^4 + A^8".
  std::string str() const;

  Json to_json() const;
  static Laurent from_json(const Json& j);

 private:
  void set(long exp, Int c);  // assign, erasing the entry when c == 0

  std::string var_ = "A";
  std::map<long, Int> terms_;
};

// Witness for equality up to multiplication by +-var^shift.
struct UnitWitness {
  int sign = 1;
  long shift = 0;
};

// Decide whether a == sign * var^shift * b and return the witness if so.
// Two zero polynomials compare equal with the trivial witness.
std::optional<UnitWitness> equal_up_to_units(const Laurent& a, const Laurent& b);

// Exact division over Z; throws std::domain_error if b is zero or does not
// divide a exactly (nonzero remainder, or a non-dividing leading coefficient).
Laurent divide_exact(const Laurent& a, const Laurent& b);

// Sparse polynomial in a fixed ordered list of variables, Laurent in each
// (negative exponents permitted; polynomial_in_all_vars() reports whether any
// occur).  Arithmetic requires both operands to declare the same variables.
class MultiPoly {
 public:
  MultiPoly() = default;
  explicit MultiPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

  static MultiPoly constant(const Int& c, std::vector<std::string> vars);
  static MultiPoly monomial(const Int& c, std::vector<long> exps,
                            std::vector<std::string> vars);

  const std::vector<std::string>& vars() const { return vars_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<std::vector<long>, Int>& terms() const { return terms_; }
  Int coeff(const std::vector<long>& exps) const;
  bool polynomial_in_all_vars() const;

  std::size_t var_index(const std::string& var) const;  // throws if absent
  long min_exp(const std::string& var) const;           // throws on zero poly
  long max_exp(const std::string& var) const;

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o) { *this = *this * o; return *this; }
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  bool operator==(const MultiPoly& o) const;
  bool operator!=(const MultiPoly& o) const { return !(*this == o); }

  MultiPoly pow(unsigned long k) const;

  // Split into coefficients of the named variable: result[e] collects the
  // terms with that exponent equal to e, with the exponent zeroed out.
  std::map<long, MultiPoly> group_by(const std::string& var) const;

  // Substitute a Laurent polynomial for every variable.  All values must
  // share one variable tag.  A variable appearing with a negative exponent
  // must be given an invertible value (a single term with coefficient +-1).
  Laurent eval(const std::map<std::string, Laurent>& values) const;

  std::string str() const;

  Json to_json() const;
  static MultiPoly from_json(const Json& j);

 private:
  void set(const std::vector<long>& exps, Int c);
  void check_same_vars(const MultiPoly& o) const;

  std::vector<std::string> vars_;
  std::map<std::vector<long>, Int> terms_;
};

}  // namespace turaev
