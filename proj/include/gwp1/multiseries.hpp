#pragma once

#include <map>
#include <string>
#include <vector>

#include "gwp1/rational.hpp"
#include "gwp1/uniseries.hpp"

namespace gwp1 {

// Per-variable exactness bookkeeping for sparse Laurent series.
//
// support: the coefficient is exactly zero for exponents outside [slo, shi].
// knowledge: the coefficient is known (stored or zero) for exponents in
// [klo, khi]; outside that interval and inside the support it is unknown.
// A coefficient is effectively known iff it is inside the knowledge interval
// or outside the support.  Canonical form pushes knowledge bounds touching
// the support out to infinity, so the effectively-known set is the interval
// [klo, khi] itself.
struct VarWindow {
  long slo, shi;
  long klo, khi;

  static constexpr long kInf = UniSeries::kInf;

  static VarWindow full_constant() { return {0, 0, -kInf, kInf}; }
  static VarWindow empty_support() { return {kInf, -kInf, -kInf, kInf}; }

  bool support_empty() const { return slo > shi; }
  bool known(long e) const { return (klo <= e && e <= khi) || e < slo || e > shi; }
  bool fully_known() const { return klo <= -kInf && khi >= kInf; }

  void canonicalize();
  friend bool operator==(const VarWindow&, const VarWindow&) = default;
};

// Sparse multivariate Laurent series over Rational with exact per-variable
// windows.  Variables are identified by name and kept sorted; missing
// variables are treated as exponent 0 with full knowledge.  All operations
// compute the tightest sound windows for their result; coefficient queries
// outside the known region raise TruncationError, never return partial data.
class MultiSeries {
 public:
  static constexpr long kInf = UniSeries::kInf;
  using Key = std::vector<long>;

  MultiSeries() = default;  // exact zero with no variables

  static MultiSeries constant(const Rational& c);
  static MultiSeries monomial(const std::vector<std::pair<std::string, long>>& m,
                              const Rational& c);
  static MultiSeries from_uni(const UniSeries& u);

  const std::vector<std::string>& vars() const { return vars_; }
  bool has_var(const std::string& v) const;
  const VarWindow& window(const std::string& v) const;
  const std::map<Key, Rational>& terms() const { return c_; }
  bool no_known_terms() const { return c_.empty(); }
  bool is_exact_zero() const;

  // Exact coefficient of a monomial (variables absent from `mono` mean
  // exponent 0).  Unknown region -> TruncationError.
  Rational coeff(const std::map<std::string, long>& mono) const;

  // The coefficient of var^e as a series in the remaining variables.
  MultiSeries coefficient_of(const std::string& var, long e) const;
  // Coefficient of var^{-1}.
  MultiSeries residue(const std::string& var) const;

  MultiSeries renamed(const std::string& from, const std::string& to) const;
  // Identify two variables: var1^a var2^b -> out^{a+b}.
  MultiSeries diagonal(const std::string& v1, const std::string& v2,
                       const std::string& out) const;
  // Shrink the knowledge interval of a variable, dropping stored terms
  // outside it (deliberate forgetting; used to impose truncation).
  MultiSeries restrict_knowledge(const std::string& var, long klo, long khi) const;

  MultiSeries operator-() const;
  MultiSeries operator*(const Rational& s) const;
  friend MultiSeries operator+(const MultiSeries& a, const MultiSeries& b);
  friend MultiSeries operator-(const MultiSeries& a, const MultiSeries& b);
  friend MultiSeries operator*(const MultiSeries& a, const MultiSeries& b);

  MultiSeries pow(long e) const;  // e >= 0

  std::string str(size_t max_terms = 24) const;

  // Builder access used by the modules assembling series coefficientwise.
  void ensure_var(const std::string& v, const VarWindow& w);
  void add_term(const std::map<std::string, long>& mono, const Rational& c);

 private:
  friend struct MsOps;
  std::vector<std::string> vars_;
  std::vector<VarWindow> win_;
  std::map<Key, Rational> c_;
};

// sum_{k>=0} C(alpha, k) u^k; u must die out under its windows within
// max_pow steps (raises TruncationError otherwise).
MultiSeries binom_pow(const MultiSeries& u, const Rational& alpha, long max_pow = 4096);

// (1 + u)^{-1} = sum (-u)^k, same contract as binom_pow.
MultiSeries geometric_inverse(const MultiSeries& u, long max_pow = 4096);

struct DiffEntry {
  std::map<std::string, long> mono;
  Rational lhs, rhs;
};

struct DiffReport {
  bool equal = true;
  long compared_terms = 0;
  std::vector<DiffEntry> mismatches;
  std::string joint_window;
};

// Compares two series on the intersection of their known regions.
DiffReport compare_series(const MultiSeries& a, const MultiSeries& b,
                          size_t max_mismatches = 16);

// True when the joint knowledge of both operands covers [lo, hi] for `var`.
bool joint_knowledge_covers(const MultiSeries& a, const MultiSeries& b,
                            const std::string& var, long lo, long hi);

}  // namespace gwp1
