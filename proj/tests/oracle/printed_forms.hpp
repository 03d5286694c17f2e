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

// Formulas exactly as originally displayed, kept only so the regression tests
// can demonstrate where they disagree with enumeration. Never used by the
// library.

#include <vector>

#include "oracle/rational_oracle.hpp"

namespace oracle {

struct RationalMoments {
  long n;
  Q A, m2p, m3p, m4p, s2, m3;
};

inline RationalMoments moments_of(const std::vector<Q>& x) {
  return {static_cast<long>(x.size()), raw_moment(x, 1),     raw_moment(x, 2),
          raw_moment(x, 3),            raw_moment(x, 4),     central_moment(x, 2),
          central_moment(x, 3)};
}

// 24 C_4 as displayed, without the A^2 factor on the second term.
inline Q quartic_printed(const RationalMoments& m) {
  const Q n(m.n);
  return n * n * n * n * m.A * m.A * m.A * m.A - 6 * n * n * n * m.m2p +
         8 * n * n * m.A * m.m3p + 3 * n * n * m.m2p * m.m2p - 6 * n * m.m4p;
}

// Both sides of the displayed fourth-moment inequality (claimed lhs >= rhs).
inline Q newton3_printed_lhs(const RationalMoments& m) {
  return (Q(m.n) * m.A * m.A - m.m2p) * m.m4p;
}
inline Q newton3_printed_rhs(const RationalMoments& m) {
  const Q n(m.n);
  const Q& A = m.A;
  const Q A2 = A * A;
  return (n * n * n * n * A2 * A2 * A2 - n * n * n * (n + 4) * m.m2p * A2 * A2 +
          4 * n * n * (n - 1) * m.m3p * A2 * A + 9 * n * n * m.m2p * m.m2p * A2 +
          4 * n * (n - 5) * m.m2p * m.m3p * A - 3 * n * (n - 2) * m.m2p * m.m2p * m.m2p -
          4 * (n - 3) * m.m3p * m.m3p) /
         (6 * (n - 3));
}

}  // namespace oracle
