// Copyright 2026 The symmean Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "symmean/symmfn.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <string>

#include "symmean/error.hpp"
#include "symmean/forms.hpp"
#include "symmean/summation.hpp"

namespace symmean {
namespace {

// Above this size S_k and M_k are assembled in log space.
constexpr std::size_t kLogSpaceThreshold = 64;

double max_abs(std::span<const double> values) {
  double out = 0.0;
  for (double v : values) out = std::max(out, std::fabs(v));
  return out;
}

double require_scale(const Sample& sample) {
  const double beta = max_abs(sample.values());
  if (beta == 0.0) {
    throw Error(ErrorCode::kDegenerateScale,
                "all-zero sample: elementary symmetric scale is zero");
  }
  return beta;
}

double log_binomial(std::size_t n, std::size_t k) {
  return std::lgamma(static_cast<double>(n) + 1.0) -
         std::lgamma(static_cast<double>(k) + 1.0) -
         std::lgamma(static_cast<double>(n - k) + 1.0);
}

}  // namespace

double binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0.0;
  k = std::min(k, n - k);
  double out = 1.0;
  for (std::size_t i = 1; i <= k; ++i) {
    out = out * static_cast<double>(n - k + i) / static_cast<double>(i);
  }
  return out < 9007199254740992.0 ? std::round(out) : out;
}

double ElementarySymmetric::unscaled(std::size_t k) const {
  return std::pow(scale, static_cast<double>(k)) * scaled.at(k);
}

std::vector<double> ElementarySymmetric::unscaled_all() const {
  std::vector<double> out(scaled.size());
  for (std::size_t k = 0; k < scaled.size(); ++k) out[k] = unscaled(k);
  return out;
}

double SymmetricProfile::unscaled_c(std::size_t k) const {
  return std::pow(scale, static_cast<double>(k)) * C.at(k);
}

SymmetricProfile esf_dp(const Sample& sample) {
  const double beta = require_scale(sample);
  const std::size_t n = sample.size();

  std::vector<double> e(n + 1, 0.0);
  e[0] = 1.0;
  std::size_t seen = 0;
  for (double x : sample.values()) {
    const double y = x / beta;
    ++seen;
    for (std::size_t k = seen; k >= 1; --k) e[k] += y * e[k - 1];
  }

  SymmetricProfile profile;
  profile.n = n;
  profile.positivity = sample.positivity();
  profile.scale = beta;
  profile.C = e;
  profile.S.assign(n + 1, 0.0);
  profile.M.assign(n + 1, std::nullopt);
  profile.S[0] = 1.0;
  const bool log_space = n > kLogSpaceThreshold;
  const double log_beta = std::log(beta);
  for (std::size_t k = 1; k <= n; ++k) {
    const auto kd = static_cast<double>(k);
    if (log_space && e[k] > 0.0) {
      const double log_ratio = std::log(e[k]) - log_binomial(n, k);
      profile.S[k] = std::exp(kd * log_beta + log_ratio);
      profile.M[k] = beta * std::exp(log_ratio / kd);
    } else {
      const double ratio = e[k] / binomial(n, k);
      profile.S[k] = std::pow(beta, kd) * ratio;
      if (ratio > 0.0) profile.M[k] = beta * std::pow(ratio, 1.0 / kd);
    }
  }
  return profile;
}

ElementarySymmetric esf_newton(const Sample& sample, NewtonArithmetic arithmetic) {
  const double beta = require_scale(sample);
  const std::size_t n = sample.size();
  ElementarySymmetric out;
  out.scale = beta;
  out.scaled.assign(n + 1, 0.0);
  out.scaled[0] = 1.0;

  if (arithmetic == NewtonArithmetic::kBinary64) {
    std::vector<double> alpha(n + 1, 0.0);
    for (std::size_t k = 1; k <= n; ++k) {
      CompensatedSum acc;
      for (double x : sample.values()) {
        acc += std::pow(x / beta, static_cast<double>(k));
      }
      alpha[k] = acc.value();
    }
    for (std::size_t k = 1; k <= n; ++k) {
      CompensatedSum acc;
      for (std::size_t i = 1; i <= k; ++i) {
        const double term = out.scaled[k - i] * alpha[i];
        acc += (i % 2 == 1) ? term : -term;
      }
      out.scaled[k] = acc.value() / static_cast<double>(k);
    }
    return out;
  }

  // Lattice integers M_i with x_i = M_i 2^E. The C_k of integers are integers,
  // so every division by k below is exact.
  const DyadicLattice lattice = to_lattice(sample.values());
  std::vector<BigInt> alpha(n + 1, BigInt(0));
  std::vector<BigInt> powers(lattice.mantissas);
  for (std::size_t k = 1; k <= n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      alpha[k] += powers[i];
      powers[i] *= lattice.mantissas[i];
    }
  }
  std::vector<BigInt> e(n + 1, BigInt(0));
  e[0] = 1;
  for (std::size_t k = 1; k <= n; ++k) {
    BigInt acc = 0;
    for (std::size_t i = 1; i <= k; ++i) {
      if (i % 2 == 1) {
        acc += e[k - i] * alpha[i];
      } else {
        acc -= e[k - i] * alpha[i];
      }
    }
    e[k] = acc / static_cast<unsigned long long>(k);
  }

  BigInt largest = 0;
  for (const BigInt& m : lattice.mantissas) largest = std::max(largest, BigInt(abs(m)));
  BigInt denominator = 1;
  for (std::size_t k = 1; k <= n; ++k) {
    denominator *= largest;
    out.scaled[k] = to_double(Rational(e[k], denominator));
  }
  return out;
}

ElementarySymmetric esf_bruteforce(const Sample& sample) {
  const std::size_t n = sample.size();
  if (n > kMaxBruteForceN) {
    throw Error(ErrorCode::kTooLargeForBruteForce,
                "subset enumeration limited to n <= 20, got " + std::to_string(n));
  }
  const double beta = require_scale(sample);
  std::vector<double> y(n);
  for (std::size_t i = 0; i < n; ++i) y[i] = sample[i] / beta;

  std::vector<CompensatedSum> sums(n + 1);
  const std::uint32_t subsets = std::uint32_t{1} << n;
  for (std::uint32_t mask = 0; mask < subsets; ++mask) {
    double product = 1.0;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (std::uint32_t{1} << i)) product *= y[i];
    }
    sums[static_cast<std::size_t>(std::popcount(mask))] += product;
  }
  ElementarySymmetric out;
  out.scale = beta;
  out.scaled.resize(n + 1);
  for (std::size_t k = 0; k <= n; ++k) out.scaled[k] = sums[k].value();
  return out;
}

std::vector<Rational> esf_bruteforce_exact(std::span<const Rational> values) {
  const std::size_t n = values.size();
  if (n > kMaxBruteForceN) {
    throw Error(ErrorCode::kTooLargeForBruteForce,
                "subset enumeration limited to n <= 20, got " + std::to_string(n));
  }
  std::vector<Rational> sums(n + 1, Rational(0));
  const std::uint32_t subsets = std::uint32_t{1} << n;
  for (std::uint32_t mask = 0; mask < subsets; ++mask) {
    Rational product = 1;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (std::uint32_t{1} << i)) product *= values[i];
    }
    sums[static_cast<std::size_t>(std::popcount(mask))] += product;
  }
  return sums;
}

namespace {

double require(const std::optional<double>& value, std::size_t n,
               std::size_t min_n, const char* what) {
  if (value) return *value;
  if (n < min_n) {
    throw Error(ErrorCode::kInsufficientN,
                std::string(what) + " requires n >= " + std::to_string(min_n));
  }
  throw Error(ErrorCode::kPositivityRequired,
              std::string(what) + " requires an all-positive sample");
}

std::optional<double> c_nminus1_from_means(std::size_t n, const MeanSet& means) {
  if (!means.G || !means.H || n < 2) return std::nullopt;
  const auto nd = static_cast<double>(n);
  return std::exp(std::log(nd) + nd * std::log(*means.G) - std::log(*means.H));
}

}  // namespace

double MomentIdentities::c2() const { return require(C2, n, 2, "C_2"); }
double MomentIdentities::c3() const { return require(C3, n, 3, "C_3"); }
double MomentIdentities::c4() const { return require(C4, n, 4, "C_4"); }
double MomentIdentities::c_nminus1() const {
  return require(C_nminus1, n, 2, "C_{n-1}");
}

MomentIdentities moment_identities(const MomentSummary& summary,
                                   const MeanSet& means) {
  MomentIdentities out;
  out.n = summary.n;
  const auto n = static_cast<long>(summary.n);
  if (n >= 2) out.C2 = forms::c2(n, summary.A, summary.m2p);
  if (n >= 3) out.C3 = forms::c3(n, summary.A, summary.m2p, summary.m3p);
  if (n >= 4) {
    out.C4 = forms::c4(n, summary.A, summary.m2p, summary.m3p, summary.m4p);
  }
  out.C_nminus1 = c_nminus1_from_means(summary.n, means);
  return out;
}

MomentIdentities moment_identities(const ExactMoments& exact,
                                   const MeanSet& means) {
  MomentIdentities out;
  out.n = exact.n();
  const auto n = static_cast<long>(exact.n());
  const Rational& a = exact.mean();
  if (n >= 2) out.C2 = exact.lower(forms::c2(n, a, exact.raw(2)), 2);
  if (n >= 3) out.C3 = exact.lower(forms::c3(n, a, exact.raw(2), exact.raw(3)), 3);
  if (n >= 4) {
    out.C4 = exact.lower(
        forms::c4(n, a, exact.raw(2), exact.raw(3), exact.raw(4)), 4);
  }
  out.C_nminus1 = c_nminus1_from_means(exact.n(), means);
  return out;
}

}  // namespace symmean
