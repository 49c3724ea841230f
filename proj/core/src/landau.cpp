#include "piblocks/landau.hpp"

#include <cmath>

#include "piblocks/errors.hpp"

namespace piblocks {

namespace {

double log10_mpz(const mpz_class& x) {
  signed long exp2;
  double mant = mpz_get_d_2exp(&exp2, x.get_mpz_t());
  return std::log10(mant) + static_cast<double>(exp2) * std::log10(2.0);
}

long long digit_count(const mpz_class& x) {
  return static_cast<long long>(mpz_sizeinbase(x.get_mpz_t(), 10));
}

}  // namespace

BoundOracle::BoundOracle(std::string name, std::function<mpz_class(const mpz_class&)> fn)
    : name_(std::move(name)), fn_(std::move(fn)), last_(std::make_shared<LastQuery>()) {}

BoundOracle BoundOracle::builtin(const std::string& name) {
  if (name == "id") return BoundOracle(name, [](const mpz_class& n) { return n; });
  if (name == "square")
    return BoundOracle(name, [](const mpz_class& n) { return mpz_class(n * n); });
  if (name == "one") return BoundOracle(name, [](const mpz_class&) { return mpz_class(1); });
  if (name == "two") return BoundOracle(name, [](const mpz_class&) { return mpz_class(2); });
  throw InputError("unknown oracle '" + name + "'; built-ins: id, square, one, two");
}

std::vector<std::string> BoundOracle::builtin_names() {
  return {"id", "square", "one", "two"};
}

BoundOracle BoundOracle::from_table(
    const std::string& name, std::vector<std::pair<mpz_class, mpz_class>> rows) {
  if (rows.empty()) throw InputError("oracle table is empty");
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].second < 1) throw InputError("oracle table values must be positive");
    if (i > 0 && rows[i].first <= rows[i - 1].first)
      throw InputError("oracle table arguments must be strictly ascending");
    if (i > 0 && rows[i].second < rows[i - 1].second)
      throw InputError("oracle table values must be non-decreasing");
  }
  auto table = std::make_shared<std::vector<std::pair<mpz_class, mpz_class>>>(std::move(rows));
  return BoundOracle(name, [table](const mpz_class& n) {
    if (n < (*table)[0].first)
      throw OracleDomainError("oracle undefined at argument " + n.get_str());
    std::size_t lo = 0;
    for (std::size_t i = 0; i < table->size() && (*table)[i].first <= n; ++i) lo = i;
    return (*table)[lo].second;
  });
}

mpz_class BoundOracle::operator()(const mpz_class& arg) const {
  if (arg < 1) throw OracleDomainError("oracle undefined at argument " + arg.get_str());
  mpz_class value = fn_(arg);
  if (last_->set) {
    bool bad = (arg >= last_->arg && value < last_->value) ||
               (arg <= last_->arg && value > last_->value);
    if (bad)
      throw ConsistencyError("oracle '" + name_ + "' violated monotonicity at argument " +
                             arg.get_str());
  }
  last_->set = true;
  last_->arg = arg;
  last_->value = value;
  return value;
}

GammaTrace gamma_bound(int k, const BoundOracle& alpha, const BoundOracle& beta,
                       long long max_digits) {
  if (k < 1) throw InputError("gamma is defined for k >= 1");
  if (max_digits < 1) throw InputError("max digits must be positive");

  GammaTrace trace;
  trace.value = 1;
  for (int kk = 2; kk <= k; ++kk) {
    GammaStep step;
    step.k = kk;
    step.previous = trace.value;

    if (!trace.value.fits_ulong_p())
      throw GammaLimitError("gamma(" + std::to_string(kk - 1) +
                            ") is too large to take its factorial");
    unsigned long n = trace.value.get_ui();
    double fact_digits = std::lgamma(static_cast<double>(n) + 1.0) / std::log(10.0);
    if (fact_digits > static_cast<double>(max_digits))
      throw GammaLimitError("factorial of gamma(" + std::to_string(kk - 1) +
                            ") needs about " + std::to_string(static_cast<long long>(fact_digits)) +
                            " digits, over the limit of " + std::to_string(max_digits));
    mpz_class factorial;
    mpz_fac_ui(factorial.get_mpz_t(), n);
    step.factorial_arg = factorial * kk;

    step.alpha_value = alpha(step.factorial_arg);
    if (digit_count(step.alpha_value) > max_digits)
      throw GammaLimitError("alpha value exceeds the digit limit");

    step.beta_base = beta(step.factorial_arg + 1);
    if (step.beta_base == 1) {
      step.beta_term = 1;
    } else {
      if (!step.factorial_arg.fits_ulong_p())
        throw GammaLimitError("power exponent at k=" + std::to_string(kk) +
                              " does not fit a machine word");
      double pow_digits =
          static_cast<double>(step.factorial_arg.get_ui()) * log10_mpz(step.beta_base);
      if (pow_digits > static_cast<double>(max_digits))
        throw GammaLimitError("beta power at k=" + std::to_string(kk) + " needs about " +
                              std::to_string(static_cast<long long>(pow_digits)) +
                              " digits, over the limit of " + std::to_string(max_digits));
      mpz_pow_ui(step.beta_term.get_mpz_t(), step.beta_base.get_mpz_t(),
                 step.factorial_arg.get_ui());
    }

    const mpz_class& biggest =
        step.alpha_value >= step.beta_term ? step.alpha_value : step.beta_term;
    if (digit_count(trace.value) + digit_count(biggest) > max_digits + 1)
      throw GammaLimitError("gamma(" + std::to_string(kk) + ") exceeds the digit limit");
    step.value = trace.value * biggest;
    trace.value = step.value;
    trace.steps.push_back(std::move(step));
  }
  trace.k = k;
  return trace;
}

}  // namespace piblocks
