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

// Moment-form expressions for elementary symmetric functions and for the
// mean-moment bounds, written once as templates so the same expression can be
// evaluated in binary64 or exactly over Rational.
//
// Naming: A is the mean, m2p..m4p the raw moments, s2/m3/m4 the central
// moments, and g a positive mean-like quantity (G, or (G^n/H)^(1/(n-1))).
// Every function is homogeneous in the sample values; the degree is noted.

namespace symmean::forms {

// C_2 = n(nA^2 - m'_2)/2. Degree 2.
template <typename T>
T c2(long n, const T& A, const T& m2p) {
  const T nn(n);
  return nn * (nn * A * A - m2p) / T(2);
}

// C_3 = (n/3)(m'_3 + (n^2/2)A^3 - (3/2)n A m'_2). Degree 3.
template <typename T>
T c3(long n, const T& A, const T& m2p, const T& m3p) {
  const T nn(n);
  return nn / T(3) *
         (m3p + nn * nn * A * A * A / T(2) - T(3) * nn * A * m2p / T(2));
}

// C_3 = (n/3)(m_3 - (3(n-2)/2) A s^2 + ((n-1)(n-2)/2) A^3). Degree 3.
template <typename T>
T c3_central(long n, const T& A, const T& s2, const T& m3) {
  const T nn(n);
  return nn / T(3) *
         (m3 - T(3 * (n - 2)) * A * s2 / T(2) +
          T((n - 1) * (n - 2)) * A * A * A / T(2));
}

// 24 C_4 = n^4A^4 - 6n^3A^2m'_2 + 8n^2Am'_3 + 3n^2m'_2^2 - 6nm'_4. Degree 4.
// The A^2 on the second term is required for homogeneity.
template <typename T>
T c4(long n, const T& A, const T& m2p, const T& m3p, const T& m4p) {
  const T nn(n);
  const T n2 = nn * nn;
  const T a2 = A * A;
  return (n2 * n2 * a2 * a2 - T(6) * n2 * nn * a2 * m2p +
          T(8) * n2 * A * m3p + T(3) * n2 * m2p * m2p - T(6) * nn * m4p) /
         T(24);
}

// S_2 = (nA^2 - m'_2)/(n-1). Degree 2.
template <typename T>
T s2_moment(long n, const T& A, const T& m2p) {
  return (T(n) * A * A - m2p) / T(n - 1);
}

// (n^2/((n-1)(n-2)))(1 - 3m'_2/(nA^2) + 2m'_3/(n^2A^3)), so that
// A * cbrt(.) = S_3^(1/3). Degree 0; needs A != 0.
template <typename T>
T s3_ratio_bracket(long n, const T& A, const T& m2p, const T& m3p) {
  const T nn(n);
  return nn * nn / T((n - 1) * (n - 2)) *
         (T(1) - T(3) * m2p / (nn * A * A) +
          T(2) * m3p / (nn * nn * A * A * A));
}

// 1 - 3(s/A)^2/(n-1) + 2m_3/((n-1)(n-2)A^3). Degree 0.
template <typename T>
T s3_central_bracket(long n, const T& A, const T& s2, const T& m3) {
  return T(1) - T(3) * s2 / (A * A * T(n - 1)) +
         T(2) * m3 / (T((n - 1) * (n - 2)) * A * A * A);
}

// S_4 = (n^3A^4 - 6n^2m'_2A^2 + 8nm'_3A + 3nm'_2^2 - 6m'_4)
//       / ((n-1)(n-2)(n-3)). Degree 4.
template <typename T>
T s4_moment(long n, const T& A, const T& m2p, const T& m3p, const T& m4p) {
  const T nn(n);
  const T a2 = A * A;
  return (nn * nn * nn * a2 * a2 - T(6) * nn * nn * m2p * a2 +
          T(8) * nn * m3p * A + T(3) * nn * m2p * m2p - T(6) * m4p) /
         T((n - 1) * (n - 2) * (n - 3));
}

// 1 - 6(s/A)^2/(n-1) + 8m_3/((n-1)(n-2)A^3)
//   + 3(ns^4 - 2m_4)/((n-1)(n-2)(n-3)A^4). Degree 0.
template <typename T>
T s4_central_bracket(long n, const T& A, const T& s2, const T& m3,
                     const T& m4) {
  const T a2 = A * A;
  return T(1) - T(6) * s2 / (a2 * T(n - 1)) +
         T(8) * m3 / (T((n - 1) * (n - 2)) * a2 * A) +
         T(3) * (T(n) * s2 * s2 - T(2) * m4) /
             (T((n - 1) * (n - 2) * (n - 3)) * a2 * a2);
}

// 1 - (s/A)^2/(n-1), so that A * sqrt(.) = S_2^(1/2). Degree 0.
template <typename T>
T s2_ratio_bracket(long n, const T& A, const T& s2) {
  return T(1) - s2 / (A * A * T(n - 1));
}

// m'_2 <= nA^2 - (n-1)g^2. Degree 2.
template <typename T>
T raw2_upper(long n, const T& A, const T& g) {
  return T(n) * A * A - T(n - 1) * g * g;
}

// s^2 <= (n-1)(A^2 - g^2). Degree 2.
template <typename T>
T variance_upper(long n, const T& A, const T& g) {
  return T(n - 1) * (A * A - g * g);
}

// A m'_3 <= [(n-2)m'_2^2 + n(n+1)m'_2A^2 - n^2A^4] / (2(n-1)). Degree 4.
template <typename T>
T mean_raw3_upper(long n, const T& A, const T& m2p) {
  const T a2 = A * A;
  return (T(n - 2) * m2p * m2p + T(n * (n + 1)) * m2p * a2 -
          T(n * n) * a2 * a2) /
         T(2 * (n - 1));
}

// The same bound without the -n^2A^4 term: weaker, still valid. Degree 4.
template <typename T>
T mean_raw3_upper_printed(long n, const T& A, const T& m2p) {
  return (T(n - 2) * m2p * m2p + T(n * (n + 1)) * m2p * A * A) /
         T(2 * (n - 1));
}

// A m_3 <= (n-2)s^4/(2(n-1)) + ((n-2)/2)A^2s^2. Degree 4.
template <typename T>
T mean_central3_upper(long n, const T& A, const T& s2) {
  return T(n - 2) * s2 * s2 / T(2 * (n - 1)) +
         T(n - 2) * A * A * s2 / T(2);
}

// m_3 <= (n-2)s^4/(2(n-1)A) + ((n-2)/2)As^2, A > 0. Degree 3.
template <typename T>
T central3_upper(long n, const T& A, const T& s2) {
  return T(n - 2) * s2 * s2 / (T(2 * (n - 1)) * A) +
         T(n - 2) * A * s2 / T(2);
}

// (n-2)As^2. Degree 3.
template <typename T>
T central3_variance_bound(long n, const T& A, const T& s2) {
  return T(n - 2) * A * s2;
}

// (n-1)(n-2)d^3 with d = A, max - A or A - min. Degree 3.
template <typename T>
T central3_cube_bound(long n, const T& d) {
  return T((n - 1) * (n - 2)) * d * d * d;
}

// m'_3 >= (1/2)[3nAm'_2 - n^2A^3 + (n-1)(n-2)g^3]. Degree 3.
template <typename T>
T raw3_lower(long n, const T& A, const T& m2p, const T& g) {
  const T nn(n);
  return (T(3) * nn * A * m2p - nn * nn * A * A * A +
          T((n - 1) * (n - 2)) * g * g * g) /
         T(2);
}

// m_3 >= ((n-1)(n-2)/2)[3As^2/(n-1) - (A^3 - g^3)]. Degree 3.
template <typename T>
T central3_lower(long n, const T& A, const T& s2, const T& g) {
  return T((n - 1) * (n - 2)) / T(2) *
         (T(3) * A * s2 / T(n - 1) - (A * A * A - g * g * g));
}

// Pearson-type lower bound 1 + m_3^2/m_2^3. Degree 0.
template <typename T>
T kurtosis_lower(const T& s2, const T& m3) {
  return T(1) + m3 * m3 / (s2 * s2 * s2);
}

template <typename T>
T kurtosis(const T& s2, const T& m4) {
  return m4 / (s2 * s2);
}

// (1/2)((n-3)/(n-2)) m_3^2/m_2^3 + n/2. Degree 0.
template <typename T>
T kurtosis_upper(long n, const T& s2, const T& m3) {
  return T(n - 3) * m3 * m3 / (T(2 * (n - 2)) * s2 * s2 * s2) + T(n) / T(2);
}

// Newton k = 3 with binomial factors cleared:
// 3(n-3)C_3^2 >= 4(n-2)C_2C_4. Degree 6.
template <typename T>
T newton3_lhs(long n, const T& C3) {
  return T(3 * (n - 3)) * C3 * C3;
}

template <typename T>
T newton3_rhs(long n, const T& C2, const T& C4) {
  return T(4 * (n - 2)) * C2 * C4;
}

}  // namespace symmean::forms
