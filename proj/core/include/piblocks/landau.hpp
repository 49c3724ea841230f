#pragma once

#include <gmpxx.h>

#include <functional>
#include <memory>
#include <string>
#include <vector>

namespace piblocks {

/// Raised when a gamma evaluation would exceed the digit budget.
struct GammaLimitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Raised when an oracle is queried outside its domain; the message names
/// the offending argument.
struct OracleDomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A monotonic map N -> N used as a bound supplier. Built-in rules are toy
/// stand-ins for recursion testing, not faithful bounds. Monotonicity is
/// re-checked against the previous query on every evaluation.
class BoundOracle {
 public:
  /// Built-ins: "id", "square", "one", "two".
  static BoundOracle builtin(const std::string& name);

  /// Step function from "arg value" lines (both non-negative integers,
  /// ascending args, non-decreasing values >= 1). f(n) is the value at the
  /// largest tabulated argument <= n; querying below the smallest tabulated
  /// argument is a domain error.
  static BoundOracle from_table(const std::string& name,
                                std::vector<std::pair<mpz_class, mpz_class>> rows);

  static std::vector<std::string> builtin_names();

  const std::string& name() const { return name_; }
  mpz_class operator()(const mpz_class& arg) const;

 private:
  BoundOracle(std::string name, std::function<mpz_class(const mpz_class&)> fn);

  std::string name_;
  std::function<mpz_class(const mpz_class&)> fn_;
  struct LastQuery {
    bool set = false;
    mpz_class arg, value;
  };
  std::shared_ptr<LastQuery> last_;
};

struct GammaStep {
  int k = 1;
  mpz_class previous;       // gamma(k-1)
  mpz_class factorial_arg;  // gamma(k-1)! * k
  mpz_class alpha_value;    // alpha(factorial_arg)
  mpz_class beta_base;      // beta(factorial_arg + 1)
  mpz_class beta_term;      // beta_base ^ factorial_arg
  mpz_class value;          // gamma(k)
};

struct GammaTrace {
  int k = 1;
  mpz_class value;
  std::vector<GammaStep> steps;  // k = 2 .. k
};

/// gamma(1) = 1; gamma(k) = gamma(k-1) * max{ alpha(gamma(k-1)! k),
/// beta(gamma(k-1)! k + 1) ^ (gamma(k-1)! k) }, exact. Every intermediate is
/// size-estimated first; exceeding max_digits decimal digits throws
/// GammaLimitError instead of attempting the computation.
GammaTrace gamma_bound(int k, const BoundOracle& alpha, const BoundOracle& beta,
                       long long max_digits);

}  // namespace piblocks
