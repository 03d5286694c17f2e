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

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "symmean/exact.hpp"
#include "symmean/moments.hpp"
#include "symmean/sample.hpp"

namespace symmean {

inline constexpr std::size_t kMaxBruteForceN = 20;

// C_0..C_n of the sample divided by `scale` (= max|x_i|), so that
// |C_k| <= binom(n, k). The true C_k is scale^k * scaled[k].
struct ElementarySymmetric {
  double scale = 1.0;
  std::vector<double> scaled;

  std::size_t n() const noexcept { return scaled.empty() ? 0 : scaled.size() - 1; }
  double unscaled(std::size_t k) const;
  std::vector<double> unscaled_all() const;
};

struct SymmetricProfile {
  std::size_t n = 0;
  Positivity positivity = Positivity::kAllPositive;
  double scale = 1.0;
  std::vector<double> C;                // scaled, C[0] = 1
  std::vector<double> S;                // unscaled symmetric means, S[0] = 1
  std::vector<std::optional<double>> M; // M[k] = S_k^(1/k) where S_k > 0; M[0] unset

  double unscaled_c(std::size_t k) const;
};

double binomial(std::size_t n, std::size_t k);

// Element-at-a-time product expansion e_k += x e_{k-1}. Only additions of
// positive terms for all-positive input. Throws kDegenerateScale for an
// all-zero sample.
SymmetricProfile esf_dp(const Sample& sample);

enum class NewtonArithmetic {
  kExact,    // integer recursion on the dyadic lattice; no rounding until output
  kBinary64, // plain floating recursion; cancels badly, used as a diagnostic
};

// k C_k = sum_{i=1..k} (-1)^(i-1) C_{k-i} alpha_i.
ElementarySymmetric esf_newton(const Sample& sample,
                               NewtonArithmetic arithmetic = NewtonArithmetic::kExact);

// Enumerates all subsets; n <= 20 or kTooLargeForBruteForce.
ElementarySymmetric esf_bruteforce(const Sample& sample);
std::vector<Rational> esf_bruteforce_exact(std::span<const Rational> values);

// C_2, C_3, C_4 and C_{n-1} through moment identities. Absent components are
// reported by the accessors: kInsufficientN (n too small) or
// kPositivityRequired (C_{n-1} needs G and H).
struct MomentIdentities {
  std::size_t n = 0;
  std::optional<double> C2;
  std::optional<double> C3;
  std::optional<double> C4;
  std::optional<double> C_nminus1;

  double c2() const;
  double c3() const;
  double c4() const;
  double c_nminus1() const;
};

// Evaluated in binary64 from the rounded moments.
MomentIdentities moment_identities(const MomentSummary& summary,
                                   const MeanSet& means);
// Evaluated exactly from the sample's exact moments, rounded once.
MomentIdentities moment_identities(const ExactMoments& exact,
                                   const MeanSet& means);

}  // namespace symmean
