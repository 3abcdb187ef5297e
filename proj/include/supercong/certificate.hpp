#pragma once

#include <optional>
#include <string>
#include <utility>

#include "supercong/hyperterm.hpp"
#include "supercong/kernels.hpp"

namespace supercong {

/// p(k) F(n, k-1) - q(k) F(n, k) = G(n+1, k) - G(n, k)
struct Certificate {
  HyperTerm F;
  HyperTerm G;
  BiPoly p_poly;  // in k only
  BiPoly q_poly;  // in k only

  std::string to_string() const;
};

/// Sections "F:", "G:", "p:", "q:" in any order, each holding one expression
/// that may span lines; '#' starts a comment. Errors carry file positions.
Certificate parse_certificate(const std::string& text);
Certificate load_certificate(const std::string& path);

/// The certificate for (8n+1)(1/4)_n^4/(1)_n^4 with p(k) = 4k-3, q(k) = 4k-2.
Certificate series_certificate();

/// The identity divided by F(n, k) and cleared of denominators, compared as
/// polynomials in n and k.
bool verify_certificate_symbolic(const Certificate& c);

/// First (n, k) with 0 <= k <= n <= n_max where the identity fails exactly
/// (evaluation errors count as failures), in row-major order.
std::optional<std::pair<long, long>> first_grid_failure(const Certificate& c, long n_max,
                                                        Execution exec = Execution::Parallel);

bool verify_certificate_numeric(const Certificate& c, long n_max,
                                Execution exec = Execution::Parallel);

/// (p(k) sum_{n<=N} F(n,k-1) - q(k) sum_{n<=N} F(n,k), G(N+1,k) - G(0,k))
std::pair<Rational, Rational> telescope_sum(const Certificate& c, long N, long k);

/// p(k) = q(k-1), the special case where q(k)F and G form a WZ pair.
bool is_wz_pair(const Certificate& c);

}  // namespace supercong
