#pragma once

#include <cstdint>
#include <deque>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace gridcert {

struct Variable {
  uint32_t index = 0;
  friend bool operator==(Variable a, Variable b) { return a.index == b.index; }
  friend bool operator<(Variable a, Variable b) { return a.index < b.index; }
};

// Append-only name table. Ordinals are assigned in insertion order, so a
// registry built from the same config is identical across runs.
class VariableRegistry {
 public:
  Variable intern(const std::string& name);
  std::optional<Variable> find(const std::string& name) const;
  std::string name(Variable v) const;
  std::size_t size() const;

 private:
  mutable std::mutex mu_;
  std::deque<std::string> names_;
  std::map<std::string, uint32_t> index_;
};

using RegistryPtr = std::shared_ptr<VariableRegistry>;

// Exponent vector, stored sparse as (variable ordinal, exponent) sorted by
// ordinal. Zero exponents are never stored.
class Monomial {
 public:
  Monomial() = default;
  static Monomial one() { return Monomial(); }
  static Monomial var(Variable v, uint32_t exp = 1);

  int degree() const;
  uint32_t exponent(Variable v) const;
  bool contains_any(std::span<const Variable> vars) const;
  Monomial times(const Monomial& other) const;
  // Returns the formal derivative pair (multiplier, reduced monomial), or
  // nullopt when the monomial does not contain v.
  std::optional<std::pair<double, Monomial>> differentiated(Variable v) const;

  const std::vector<std::pair<uint32_t, uint32_t>>& entries() const { return entries_; }
  bool is_one() const { return entries_.empty(); }

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.entries_ == b.entries_; }

 private:
  std::vector<std::pair<uint32_t, uint32_t>> entries_;
};

// Graded lexicographic order: lower total degree first; within a degree,
// larger power on the smallest ordinal first (so 1, x, y, x^2, xy, y^2).
struct GrlexLess {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

double polynomial_prune_tolerance();
void set_polynomial_prune_tolerance(double tol);

// Sparse multivariate polynomial with real coefficients over one registry.
// Values are immutable in spirit: all operations return new polynomials.
class Polynomial {
 public:
  explicit Polynomial(RegistryPtr reg) : reg_(std::move(reg)) {}
  static Polynomial constant(RegistryPtr reg, double c);
  static Polynomial variable(RegistryPtr reg, Variable v);
  static Polynomial term(RegistryPtr reg, const Monomial& m, double c);

  const RegistryPtr& registry() const { return reg_; }
  const std::map<Monomial, double, GrlexLess>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int degree() const;
  double coefficient(const Monomial& m) const;
  double constant_term() const { return coefficient(Monomial::one()); }

  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator-(const Polynomial& other) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& other) const;
  Polynomial operator*(double s) const;
  Polynomial operator+(double c) const;
  Polynomial operator-(double c) const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);

  Polynomial differentiate(Variable v) const;
  // Values indexed by variable ordinal; must cover every variable that
  // appears. Uses Neumaier-compensated summation in grlex term order.
  double evaluate(std::span<const double> values) const;
  double evaluate(const std::map<std::string, double>& point) const;
  // Substitutes 0 for the given variables (drops every term containing them).
  Polynomial with_vars_zeroed(std::span<const Variable> vars) const;
  std::vector<Variable> variables() const;

  std::string to_string() const;
  static Polynomial parse(RegistryPtr reg, const std::string& text);

  friend Polynomial operator*(double s, const Polynomial& p) { return p * s; }

 private:
  void add_term(const Monomial& m, double c);
  void prune();

  RegistryPtr reg_;
  std::map<Monomial, double, GrlexLess> terms_;
};

// A single trigonometric factor a*sin(sum) or a*cos(sum) whose argument is a
// +/-1 integer combination of angle variables, already shifted so the
// expansion point is the origin.
struct TrigTerm {
  enum class Kind { sine, cosine };
  double amplitude = 1.0;
  std::vector<std::pair<Variable, int>> phase;  // coefficients must be +1/-1
  Kind kind = Kind::sine;
};

// Maclaurin expansion of the trig factor truncated at `order` (inclusive).
// order 3: sin u -> u - u^3/6, cos u -> 1 - u^2/2.
Polynomial taylor_recast(const RegistryPtr& reg, const TrigTerm& t, int order);

// Drops every monomial of total degree above max_degree.
Polynomial truncate_degree(const Polynomial& p, int max_degree);

// All monomials of total degree in [min_degree, max_degree] over vars, in
// grlex order.
std::vector<Monomial> monomials_up_to(std::span<const Variable> vars, int max_degree,
                                      int min_degree = 0);

}  // namespace gridcert
