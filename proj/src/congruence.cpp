#include "supercong/congruence.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cmath>
#include <utility>

#include "supercong/certificate.hpp"
#include "supercong/gamma.hpp"
#include "supercong/hyperterm.hpp"

namespace supercong {

namespace {

struct TagInfo {
  CaseTag tag;
  const char* name;
};

constexpr TagInfo kTags[] = {
    {CaseTag::VanHamme, "G2"},
    {CaseTag::SwisherOneMod4, "SWISHER_T1"},
    {CaseTag::SwisherThreeMod4, "SWISHER_T3"},
    {CaseTag::GeneralOneMod4, "G3_ODD_PRIME_1MOD4"},
    {CaseTag::GeneralEvenPower, "G3_EVEN_R"},
    {CaseTag::GeneralOddPower, "G3_ODD_R"},
    {CaseTag::GammaClosedForm, "THM_1_1"},
    {CaseTag::PowerDescent, "THM_1_2"},
    {CaseTag::BoundaryValuation, "LEMMA_3_2"},
    {CaseTag::RatioQuarterHalf, "POCH_RATIO_QUARTER_HALF"},
    {CaseTag::RatioOneQuarter, "POCH_RATIO_ONE_QUARTER"},
    {CaseTag::RatioQuarterQuarter, "POCH_RATIO_QUARTER_QUARTER"},
    {CaseTag::RatioQuarterQuarterVariant, "POCH_RATIO_QUARTER_QUARTER_VARIANT"},
    {CaseTag::RatioHalfQuarter, "POCH_RATIO_HALF_QUARTER"},
};

std::string squash(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c != '_' && c != '-') out += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  return out;
}

std::optional<RatioIdentity> ratio_identity(CaseTag tag) {
  switch (tag) {
    case CaseTag::RatioQuarterHalf: return RatioIdentity::QuarterHalfLength;
    case CaseTag::RatioOneQuarter: return RatioIdentity::OneQuarterLength;
    case CaseTag::RatioQuarterQuarter: return RatioIdentity::QuarterQuarterLength;
    case CaseTag::RatioQuarterQuarterVariant: return RatioIdentity::QuarterQuarterLengthVariant;
    case CaseTag::RatioHalfQuarter: return RatioIdentity::HalfQuarterLength;
    default: return std::nullopt;
  }
}

long odd_sign(std::uint64_t e) { return e % 2 == 0 ? 1 : -1; }

void require(bool ok, const TheoremCase& c, const char* what) {
  if (!ok) throw DomainError(tag_name(c.tag) + " needs " + what);
}

// Exponent of the strengthened verdict, where one is reported.
std::optional<long> strong_exponent(const TheoremCase& c) {
  if (c.tag == CaseTag::GeneralOddPower) return (3 * c.r - 1) / 2;
  return std::nullopt;
}

PadicNum residue_to_padic(const BigInt& residue, const ContextPtr& ctx) {
  const int M = ctx->precision();
  if (residue == 0) return PadicNum::zero_to(ctx, M);
  const long v = valuation(residue, ctx->prime());
  BigInt unit = residue / ctx->power(v);
  return PadicNum::from_parts(ctx, v, unit, static_cast<int>(M - v));
}

double elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
      .count();
}

}  // namespace

std::string tag_name(CaseTag tag) {
  for (const auto& info : kTags) {
    if (info.tag == tag) return info.name;
  }
  return "UNKNOWN";
}

std::optional<CaseTag> parse_tag(const std::string& text) {
  const std::string key = squash(text);
  for (const auto& info : kTags) {
    if (squash(info.name) == key) return info.tag;
  }
  return std::nullopt;
}

const std::vector<CaseTag>& all_tags() {
  static const std::vector<CaseTag> tags = [] {
    std::vector<CaseTag> out;
    for (const auto& info : kTags) out.push_back(info.tag);
    return out;
  }();
  return tags;
}

bool TheoremCase::uses_r() const {
  return tag != CaseTag::VanHamme && tag != CaseTag::SwisherOneMod4 &&
         tag != CaseTag::SwisherThreeMod4;
}

std::optional<long> TheoremCase::t_parameter() const {
  if (tag == CaseTag::VanHamme || tag == CaseTag::SwisherOneMod4) return 1;
  if (tag == CaseTag::SwisherThreeMod4) return 3;
  return std::nullopt;
}

std::string TheoremCase::describe() const {
  std::string out = tag_name(tag) + " p=" + std::to_string(p);
  if (uses_r()) out += " r=" + std::to_string(r);
  return out;
}

bool is_informational(CaseTag tag) {
  return tag == CaseTag::GeneralOneMod4 || tag == CaseTag::GeneralEvenPower ||
         tag == CaseTag::RatioQuarterQuarterVariant;
}

void validate(const TheoremCase& c) {
  if (c.p < 3 || !is_prime_u64(c.p)) {
    throw DomainError("p = " + std::to_string(c.p) + " is not an odd prime");
  }
  const bool one_mod_4 = c.p % 4 == 1;
  const bool odd_r = c.r % 2 != 0;
  switch (c.tag) {
    case CaseTag::VanHamme:
    case CaseTag::SwisherOneMod4:
      require(one_mod_4, c, "p = 1 (mod 4)");
      break;
    case CaseTag::SwisherThreeMod4:
      require(!one_mod_4, c, "p = 3 (mod 4)");
      break;
    case CaseTag::GeneralOneMod4:
      require(one_mod_4, c, "p = 1 (mod 4)");
      require(c.r >= 1, c, "r >= 1");
      break;
    case CaseTag::GeneralEvenPower:
      require(!one_mod_4, c, "p = 3 (mod 4)");
      require(c.r >= 2 && !odd_r, c, "even r >= 2");
      break;
    case CaseTag::GeneralOddPower:
      require(!one_mod_4, c, "p = 3 (mod 4)");
      require(c.r >= 3 && odd_r, c, "odd r >= 3");
      break;
    case CaseTag::PowerDescent:
      require(!one_mod_4, c, "p = 3 (mod 4)");
      require(c.r > 3 && odd_r, c, "odd r > 3");
      break;
    case CaseTag::GammaClosedForm:
    case CaseTag::BoundaryValuation:
    case CaseTag::RatioQuarterHalf:
    case CaseTag::RatioOneQuarter:
    case CaseTag::RatioQuarterQuarter:
    case CaseTag::RatioQuarterQuarterVariant:
    case CaseTag::RatioHalfQuarter:
      require(!one_mod_4, c, "p = 3 (mod 4)");
      require(c.r > 1 && odd_r, c, "odd r > 1");
      break;
  }
}

long modulus_exponent(const TheoremCase& c) {
  switch (c.tag) {
    case CaseTag::VanHamme: return 3;
    case CaseTag::SwisherOneMod4: return 4;
    case CaseTag::SwisherThreeMod4: return 3;
    case CaseTag::GeneralOneMod4: return 4 * c.r;
    case CaseTag::GeneralEvenPower: return 4 * c.r - 2;
    case CaseTag::GeneralOddPower: return c.r + 1;
    case CaseTag::GammaClosedForm:
    case CaseTag::PowerDescent: return (3 * c.r - 1) / 2;
    case CaseTag::BoundaryValuation: return 2 * (c.r - 1);
    default: return kRatioPrecision;
  }
}

std::uint64_t case_size(const TheoremCase& c, std::uint64_t desk_cap) {
  switch (c.tag) {
    case CaseTag::VanHamme:
    case CaseTag::SwisherOneMod4:
      if (c.p > desk_cap) throw CapExceeded("p exceeds the desk cap");
      return c.p;
    case CaseTag::SwisherThreeMod4:
      if (3 * c.p > desk_cap) throw CapExceeded("3p exceeds the desk cap");
      return 3 * c.p;
    default:
      return checked_power(c.p, c.r, desk_cap);
  }
}

std::optional<std::uint64_t> truncation(const TheoremCase& c, std::uint64_t desk_cap) {
  const std::uint64_t size = case_size(c, desk_cap);
  switch (c.tag) {
    case CaseTag::VanHamme:
    case CaseTag::SwisherOneMod4:
    case CaseTag::GeneralOneMod4:
    case CaseTag::GeneralEvenPower:
    case CaseTag::SwisherThreeMod4:
      return (size - 1) / 4;
    case CaseTag::GeneralOddPower:
    case CaseTag::GammaClosedForm:
    case CaseTag::PowerDescent:
      return (size - 3) / 4;
    default:
      return std::nullopt;
  }
}

Rational sum_exact(std::uint64_t m) {
  if (m > kExactSumCap) {
    throw CapExceeded("exact sums are limited to m <= " + std::to_string(kExactSumCap));
  }
  Rational term = 1;
  Rational total = 1;
  for (std::uint64_t n = 0; n < m; ++n) {
    const long j = static_cast<long>(n);
    Rational ratio = make_rational(4 * j + 1, 4 * j + 4);
    ratio = ratio * ratio;
    ratio = ratio * ratio;
    term *= make_rational(8 * j + 9, 8 * j + 1) * ratio;
    total += term;
  }
  return total;
}

PadicNum sum_padic(std::uint64_t m, const ContextPtr& ctx, Execution exec) {
  return residue_to_padic(kernels::ramanujan_sum(exec, m, ctx->prime(), ctx->precision()), ctx);
}

PadicNum rhs_value(const TheoremCase& c, const ContextPtr& ctx, const EngineConfig& config) {
  validate(c);
  if (ctx->prime() != c.p) throw ContextMismatch("context prime differs from the case");
  const std::uint64_t p = c.p;
  const long t = modulus_exponent(c);
  const ContextPtr gctx = make_context(p, static_cast<int>(t));
  auto g = [&](long num, long den) {
    return gamma_rational(make_rational(num, den), gctx, config.exec);
  };
  auto descent = [&](std::uint64_t lower_size, std::uint64_t offset) {
    return -sum_padic((lower_size - offset) / 4, ctx, config.exec).shifted(3);
  };

  switch (c.tag) {
    case CaseTag::VanHamme:
    case CaseTag::SwisherOneMod4:
      return (g(1, 2) * g(1, 4) / g(3, 4)).shifted(1).with_context(ctx);
    case CaseTag::SwisherThreeMod4: {
      const Rational coef = make_rational(-3 * odd_sign((3 * p - 1) / 4), 2);
      const PadicNum g34 = g(3, 4);
      return (PadicNum::from_rational(coef, gctx).shifted(2) * g(1, 2) * g34 * g34)
          .with_context(ctx);
    }
    case CaseTag::GammaClosedForm: {
      const long sign = odd_sign((p - 3) / 4 + static_cast<std::uint64_t>(c.r - 1) / 2);
      const PadicNum g34 = g(3, 4);
      const PadicNum g14 = g(1, 4);
      const PadicNum value = PadicNum::from_integer(64 * sign, gctx).shifted(3 * (c.r - 1) / 2) *
                             g34 * g34 / (g(1, 2) * g14.pow(4));
      return value.with_context(ctx);
    }
    case CaseTag::GeneralOddPower:
    case CaseTag::PowerDescent:
      return descent(checked_power(p, c.r - 2, config.desk_cap), 3);
    case CaseTag::GeneralEvenPower:
      return descent(checked_power(p, c.r - 2, config.desk_cap), 1);
    case CaseTag::GeneralOneMod4: {
      // The conjecture pairs the complex Gamma(1/2) with Gamma_p; Gamma_p(1/2)
      // is the p-adic reading used here.
      const long sign = odd_sign((p * p - 1) / 8);
      const PadicNum g14 = g(1, 4);
      const PadicNum factor =
          (PadicNum::from_integer(sign, gctx) * g(1, 2) * g14 * g14).shifted(1).with_context(ctx);
      const std::uint64_t lower = checked_power(p, c.r - 1, config.desk_cap);
      return factor * sum_padic((lower - 1) / 4, ctx, config.exec);
    }
    default:
      throw DomainError(tag_name(c.tag) + " has no closed-form right side");
  }
}

ValuationSweep boundary_valuation_sweep(std::uint64_t p, long r, const EngineConfig& config) {
  const std::uint64_t pr = checked_power(p, r, config.desk_cap);
  const HyperTerm G = parse_term(kSeriesTermG);
  const long N = static_cast<long>((pr + 1) / 4);
  const long K = static_cast<long>((pr - 3) / 4);
  ValuationSweep out;
  out.bound = 2 * (r - 1);
  out.count = static_cast<std::uint64_t>(K);
  if (config.exec == Execution::Serial) {
    for (long k = 1; k <= K; ++k) {
      const long v = term_valuation(G, N, k, p);
      if (v < out.min_valuation) {
        out.min_valuation = v;
        out.argmin = k;
      }
    }
    return out;
  }
  std::vector<long> values(static_cast<std::size_t>(K));
#pragma omp parallel for schedule(dynamic, 4)
  for (long k = 1; k <= K; ++k) values[k - 1] = term_valuation(G, N, k, p);
  const auto it = std::min_element(values.begin(), values.end());
  if (it != values.end()) {
    out.min_valuation = *it;
    out.argmin = static_cast<long>(it - values.begin()) + 1;
  }
  return out;
}

CongruenceReport check(const TheoremCase& c, const EngineConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  validate(c);
  CongruenceReport rep;
  rep.c = c;
  rep.modulus_exponent = modulus_exponent(c);
  rep.informational = is_informational(c.tag);
  try {
    case_size(c, config.desk_cap);
  } catch (const CapExceeded& e) {
    rep.skipped = true;
    rep.note = std::string("skipped: ") + e.what();
    rep.wall_ms = elapsed_ms(start);
    return rep;
  }

  if (c.tag == CaseTag::BoundaryValuation) {
    const ValuationSweep sweep = boundary_valuation_sweep(c.p, c.r, config);
    rep.lhs = std::to_string(sweep.min_valuation);
    rep.rhs = std::to_string(sweep.bound);
    rep.holds = sweep.holds();
    rep.excess_valuation = sweep.min_valuation - sweep.bound;
    const std::uint64_t boundary = (checked_power(c.p, c.r, config.desk_cap) + 1) / 4;
    rep.note = "minimum of nu_p(G(" + std::to_string(boundary) +
               ", k)) over k = 1.." + std::to_string(sweep.count) + ", first attained at k = " +
               std::to_string(sweep.argmin);
  } else if (const auto id = ratio_identity(c.tag)) {
    const ContextPtr ctx = make_context(c.p, kRatioPrecision);
    const IdentitySides sides = ratio_identity_sides(*id, c.p, c.r, ctx, config.desk_cap);
    rep.lhs = sides.lhs.to_string();
    rep.rhs = sides.rhs.to_string();
    rep.holds = sides_agree(sides);
    if (!sides.lhs.is_zero() && !sides.rhs.is_zero()) {
      const int digits = std::min(sides.lhs.relative_precision(), sides.rhs.relative_precision());
      rep.excess_valuation =
          difference_valuation(sides.lhs / sides.rhs, PadicNum::one(ctx)) - digits;
    }
    rep.note = "ratio compared to 1 modulo p^" + std::to_string(kRatioPrecision);
    if (c.tag == CaseTag::RatioQuarterQuarterVariant) {
      rep.note += "; second Gamma_p argument p^{r-1}/2 + 1/2 instead of p^{r-1}/4 + 1/2";
    }
  } else {
    const long t = rep.modulus_exponent;
    const auto strong = strong_exponent(c);
    const long top = std::max(t, strong.value_or(0));
    const ContextPtr ctx = make_context(c.p, static_cast<int>(top + config.guard_digits));
    rep.truncation = truncation(c, config.desk_cap);
    const PadicNum lhs = sum_padic(*rep.truncation, ctx, config.exec);
    const PadicNum rhs = rhs_value(c, ctx, config);
    if (lhs.absolute_precision() < t || rhs.absolute_precision() < t) {
      throw PrecisionError("working precision fell below the target exponent");
    }
    rep.lhs = lhs.to_string_mod(t);
    rep.rhs = rhs.to_string_mod(t);
    rep.holds = congruent_mod(lhs, rhs, t);
    rep.excess_valuation = difference_valuation(lhs, rhs) - t;
    if (strong) {
      if (lhs.absolute_precision() < *strong || rhs.absolute_precision() < *strong) {
        throw PrecisionError("working precision fell below the strengthened exponent");
      }
      rep.strong_modulus_exponent = *strong;
      rep.strong_holds = congruent_mod(lhs, rhs, *strong);
      rep.strong_excess_valuation = difference_valuation(lhs, rhs) - *strong;
    }
    if (c.tag == CaseTag::GeneralOneMod4) {
      rep.note = "complex Gamma(1/2) read as Gamma_p(1/2)";
    }
  }
  rep.wall_ms = elapsed_ms(start);
  return rep;
}

SeriesSanity check_infinite_series(std::uint64_t N) {
  long double term = 1;
  long double partial = 1;
  for (std::uint64_t n = 0; n < N; ++n) {
    const long double x = static_cast<long double>(n);
    const long double q = (4 * x + 1) / (4 * x + 4);
    term *= (8 * x + 9) / (8 * x + 1) * q * q * q * q;
    partial += term;
  }
  const long double g = std::tgamma(0.75L);
  const long double limit = 2 * std::sqrt(2.0L) / (std::sqrt(std::acos(-1.0L)) * g * g);
  return {partial, limit, limit - partial};
}

std::vector<CongruenceReport> batch(const std::vector<TheoremCase>& cases, int workers,
                                    const EngineConfig& config) {
  std::vector<CongruenceReport> out(cases.size());
  const long count = static_cast<long>(cases.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(std::max(1, workers))
  for (long i = 0; i < count; ++i) {
    try {
      out[i] = check(cases[i], config);
    } catch (const std::exception& e) {
      out[i] = CongruenceReport{};
      out[i].c = cases[i];
      out[i].informational = is_informational(cases[i].tag);
      out[i].error = e.what();
    }
  }
  return out;
}

}  // namespace supercong
