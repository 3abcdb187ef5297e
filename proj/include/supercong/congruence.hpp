#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "supercong/kernels.hpp"
#include "supercong/padic.hpp"
#include "supercong/pochhammer.hpp"

namespace supercong {

/// S(m) = sum_{n=0}^{m} (8n+1)(1/4)_n^4/(1)_n^4 is the series behind every case.
enum class CaseTag {
  VanHamme,               // S((p-1)/4) = p G(1/2)G(1/4)/G(3/4) mod p^3, p = 1 (4)
  SwisherOneMod4,         // same closed form mod p^4
  SwisherThreeMod4,       // S((3p-1)/4) = -3p^2/2 (-1)^((3p-1)/4) G(1/2)G(3/4)^2 mod p^3
  GeneralOneMod4,         // S((p^r-1)/4) vs S((p^{r-1}-1)/4), p = 1 (4), mod p^{4r}
  GeneralEvenPower,       // S((p^r-1)/4) = -p^3 S((p^{r-2}-1)/4) mod p^{4r-2}, r even
  GeneralOddPower,        // S((p^r-3)/4) = -p^3 S((p^{r-2}-3)/4) mod p^{r+1}, r odd
  GammaClosedForm,        // S((p^r-3)/4) in closed form mod p^{(3r-1)/2}
  PowerDescent,           // as GeneralOddPower, mod p^{(3r-1)/2}, r > 3
  BoundaryValuation,      // nu_p(G((p^r+1)/4, k)) >= 2(r-1)
  RatioQuarterHalf,       // Pochhammer ratio identities, see RatioIdentity
  RatioOneQuarter,
  RatioQuarterQuarter,
  RatioQuarterQuarterVariant,
  RatioHalfQuarter,
};

/// Report tag, e.g. "THM_1_1".
std::string tag_name(CaseTag tag);
/// Accepts report tags in any case, with or without underscores ("thm1_1").
std::optional<CaseTag> parse_tag(const std::string& text);
const std::vector<CaseTag>& all_tags();

struct TheoremCase {
  CaseTag tag = CaseTag::GammaClosedForm;
  std::uint64_t p = 3;
  long r = 3;  // ignored by the single-prime cases

  bool uses_r() const;
  /// The t of the single-prime cases (1 or 3); empty otherwise.
  std::optional<long> t_parameter() const;
  std::string describe() const;
};

/// Digits compared by the Pochhammer ratio identity cases.
inline constexpr int kRatioPrecision = 4;

struct EngineConfig {
  int guard_digits = 4;
  std::uint64_t desk_cap = kDefaultDeskCap;
  Execution exec = Execution::Parallel;
};

struct CongruenceReport {
  TheoremCase c;
  std::optional<std::uint64_t> truncation;
  long modulus_exponent = 0;
  std::string lhs;
  std::string rhs;
  bool holds = false;
  std::optional<long> excess_valuation;  // nu_p(lhs - rhs) - modulus_exponent
  double wall_ms = 0;
  bool skipped = false;
  bool informational = false;  // verdict reported, never asserted
  std::string note;
  std::optional<long> strong_modulus_exponent;
  std::optional<bool> strong_holds;
  std::optional<long> strong_excess_valuation;
  std::string error;
};

/// Throws DomainError when p or r violate the case's preconditions.
void validate(const TheoremCase& c);
long modulus_exponent(const TheoremCase& c);
/// Upper summation index of the left side (empty for non-series cases).
std::optional<std::uint64_t> truncation(const TheoremCase& c, std::uint64_t desk_cap);
/// The size compared against the desk cap (p^r, p or 3p).
std::uint64_t case_size(const TheoremCase& c, std::uint64_t desk_cap);
bool is_informational(CaseTag tag);

/// S(m) exactly; m <= 2000.
Rational sum_exact(std::uint64_t m);
inline constexpr std::uint64_t kExactSumCap = 2000;

/// S(m) known to the context's precision.
PadicNum sum_padic(std::uint64_t m, const ContextPtr& ctx, Execution exec = Execution::Parallel);

/// Closed-form right side. Gamma factors are evaluated at precision
/// modulus_exponent(c) and the result is moved into ctx.
PadicNum rhs_value(const TheoremCase& c, const ContextPtr& ctx, const EngineConfig& config = {});

/// Runs one case. Cap violations yield a skipped report; precondition
/// violations throw.
CongruenceReport check(const TheoremCase& c, const EngineConfig& config = {});

struct ValuationSweep {
  long bound = 0;
  long min_valuation = kInfinite;
  long argmin = 0;  // first k attaining the minimum
  std::uint64_t count = 0;
  bool holds() const { return min_valuation >= bound; }
};

/// min over k = 1..(p^r-3)/4 of nu_p(G((p^r+1)/4, k)) for the series certificate.
ValuationSweep boundary_valuation_sweep(std::uint64_t p, long r, const EngineConfig& config = {});

struct SeriesSanity {
  long double partial;
  long double limit;
  long double difference;  // limit - partial
};

/// Partial sum S(N) in floating point against 2 sqrt(2) / (sqrt(pi) Gamma(3/4)^2).
SeriesSanity check_infinite_series(std::uint64_t N);

/// Every case, in input order, on up to `workers` threads. Errors are captured
/// in the report; the results do not depend on the worker count.
std::vector<CongruenceReport> batch(const std::vector<TheoremCase>& cases, int workers,
                                    const EngineConfig& config = {});

}  // namespace supercong
