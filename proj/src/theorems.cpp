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

// Moment-form theorem evaluators. Polynomial and rational expressions in the
// moments are evaluated exactly over the sample's dyadic lattice and rounded
// once; G, H and roots enter as binary64 values lifted exactly.

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "symmean/bounds.hpp"
#include "symmean/error.hpp"
#include "symmean/forms.hpp"

namespace symmean {
namespace {

const std::string kNeedPositive = "requires an all-positive sample";

std::string need_n(int k) { return "requires n >= " + std::to_string(k); }

class Evaluator {
 public:
  explicit Evaluator(const BoundInputs& in)
      : in_(in), ex_(in.exact), n_(static_cast<long>(in.n())) {}

  long n() const { return n_; }
  const Rational& A() const { return ex_.mean(); }
  const Rational& raw(int r) const { return ex_.raw(r); }
  const Rational& central(int r) const { return ex_.central(r); }
  const Rational& min() const { return ex_.min(); }
  const Rational& max() const { return ex_.max(); }

  double lower(const Rational& q, int degree) const { return ex_.lower(q, degree); }
  Rational lift(double value, int degree) const { return ex_.lift(value, degree); }

  double mean() const { return lower(A(), 1); }
  double G() const { return in_.means.geometric(); }
  double H() const { return in_.means.harmonic(); }
  // (G^n/H)^(1/(n-1)) = G (G/H)^(1/(n-1)), i.e. S_{n-1}^(1/(n-1)). The
  // factored form is exact when G = H.
  double g_nminus1() const {
    const auto nd = static_cast<double>(n_);
    return G() * std::exp((std::log(G()) - std::log(H())) / (nd - 1.0));
  }
  double s() const { return std::sqrt(lower(central(2), 2)); }

  // A * bracket^(1/3) for the two printed forms of S_3^(1/3).
  double s3_root_raw() const {
    return mean() * std::cbrt(lower(forms::s3_ratio_bracket(n_, A(), raw(2), raw(3)), 0));
  }
  double s3_root_central() const {
    return mean() *
           std::cbrt(lower(forms::s3_central_bracket(n_, A(), central(2), central(3)), 0));
  }

 private:
  const BoundInputs& in_;
  const ExactMoments& ex_;
  long n_;
};

ScalarBound scalar(std::string name, double lhs, double rhs, Direction d,
                   Tolerance tol) {
  return evaluate_scalar(std::move(name), lhs, rhs, d, tol);
}

TheoremReport inapplicable(std::string id, std::vector<std::string> chains,
                           std::vector<std::pair<std::string, Direction>> scalars,
                           Status status, const std::string& reason) {
  TheoremReport report;
  report.theorem_id = std::move(id);
  for (auto& c : chains) {
    report.chains.push_back(inapplicable_chain(std::move(c), status, reason));
  }
  for (auto& [name, d] : scalars) {
    report.scalar_bounds.push_back(inapplicable_scalar(name, d, status, reason));
  }
  finalize(report);
  return report;
}

constexpr Direction kLe = Direction::kLessEqual;
constexpr Direction kGe = Direction::kGreaterEqual;

}  // namespace

TheoremReport chain_t22(const BoundInputs& in, Tolerance tol) {
  const std::vector<std::string> chains = {"T2.2"};
  const std::vector<std::pair<std::string, Direction>> scalars = {
      {"T2.2.ratio", kLe}, {"2.5", kLe}, {"2.6", kLe},
      {"brunk.min", kLe}, {"brunk.max", kLe}};
  if (in.n() < 2) {
    return inapplicable("T2.2", chains, scalars, Status::kNotApplicable, need_n(2));
  }
  const Evaluator ev(in);
  const long n = ev.n();
  TheoremReport report;
  report.theorem_id = "T2.2";

  if (in.all_positive()) {
    const double g = ev.G();
    const Rational g_l = ev.lift(g, 1);
    report.chains.push_back(evaluate_chain(
        "T2.2",
        {{"G", g},
         {"sqrt((nA^2-m'_2)/(n-1))",
          std::sqrt(ev.lower(forms::s2_moment(n, ev.A(), ev.raw(2)), 2))},
         {"A", ev.mean()}},
        tol));
    report.scalar_bounds.push_back(scalar(
        "T2.2.ratio", g,
        ev.mean() * std::sqrt(ev.lower(forms::s2_ratio_bracket(n, ev.A(), ev.central(2)), 0)),
        kLe, tol));
    report.scalar_bounds.push_back(scalar(
        "2.5", ev.lower(ev.raw(2), 2),
        ev.lower(forms::raw2_upper(n, ev.A(), g_l), 2), kLe, tol));
    report.scalar_bounds.push_back(scalar(
        "2.6", ev.lower(ev.central(2), 2),
        ev.lower(forms::variance_upper(n, ev.A(), g_l), 2), kLe, tol));
  } else {
    report.chains.push_back(
        inapplicable_chain("T2.2", Status::kNotApplicable, kNeedPositive));
    for (const char* name : {"T2.2.ratio", "2.5", "2.6"}) {
      report.scalar_bounds.push_back(
          inapplicable_scalar(name, kLe, Status::kNotApplicable, kNeedPositive));
    }
  }

  const double root = std::sqrt(static_cast<double>(n - 1));
  report.scalar_bounds.push_back(
      scalar("brunk.min", ev.s(), root * ev.lower(ev.A() - ev.min(), 1), kLe, tol));
  report.scalar_bounds.push_back(
      scalar("brunk.max", ev.s(), root * ev.lower(ev.max() - ev.A(), 1), kLe, tol));
  finalize(report);
  return report;
}

TheoremReport chain_t23(const BoundInputs& in, Tolerance tol) {
  const std::vector<std::string> chains = {"T2.3", "T2.3.ratio"};
  const std::vector<std::pair<std::string, Direction>> scalars = {
      {"2.10", kLe}, {"2.11", kLe}};
  if (in.n() < 3) {
    return inapplicable("T2.3", chains, scalars, Status::kNotApplicable, need_n(3));
  }
  if (!in.all_positive()) {
    return inapplicable("T2.3", chains, scalars, Status::kNotApplicable, kNeedPositive);
  }
  const Evaluator ev(in);
  const long n = ev.n();
  const double g = ev.G();
  const double g1 = ev.g_nminus1();
  const Rational g1_l = ev.lift(g1, 1);

  TheoremReport report;
  report.theorem_id = "T2.3";
  report.chains.push_back(evaluate_chain(
      "T2.3",
      {{"G", g},
       {"(G^n/H)^(1/(n-1))", g1},
       {"sqrt((nA^2-m'_2)/(n-1))",
        std::sqrt(ev.lower(forms::s2_moment(n, ev.A(), ev.raw(2)), 2))},
       {"A", ev.mean()}},
      tol));
  report.chains.push_back(evaluate_chain(
      "T2.3.ratio",
      {{"G", g},
       {"(G^n/H)^(1/(n-1))", g1},
       {"A sqrt(1-(s/A)^2/(n-1))",
        ev.mean() * std::sqrt(ev.lower(forms::s2_ratio_bracket(n, ev.A(), ev.central(2)), 0))}},
      tol));
  report.scalar_bounds.push_back(scalar(
      "2.10", ev.lower(ev.raw(2), 2),
      ev.lower(forms::raw2_upper(n, ev.A(), g1_l), 2), kLe, tol));
  report.scalar_bounds.push_back(scalar(
      "2.11", ev.lower(ev.central(2), 2),
      ev.lower(forms::variance_upper(n, ev.A(), g1_l), 2), kLe, tol));
  finalize(report);
  return report;
}

TheoremReport third_moment_bounds(const BoundInputs& in, Tolerance tol) {
  const std::vector<std::string> chains = {"2.16"};
  const std::vector<std::pair<std::string, Direction>> scalars = {
      {"2.12c", kLe},          {"2.12-as-printed", kLe}, {"2.15", kLe},
      {"T2.4.m3-positive", kLe}, {"brunk3.max-cube", kLe}, {"brunk3.min-cube", kLe},
      {"brunk3.max-var", kLe}, {"brunk3.min-var", kLe}};
  if (in.n() < 3) {
    return inapplicable("T2.4", chains, scalars, Status::kNotApplicable, need_n(3));
  }
  const Evaluator ev(in);
  const long n = ev.n();
  const Rational& a = ev.A();
  const Rational& s2 = ev.central(2);
  const Rational& m3 = ev.central(3);
  const double m3_d = ev.lower(m3, 3);

  TheoremReport report;
  report.theorem_id = "T2.4";
  report.scalar_bounds.push_back(scalar(
      "2.12c", ev.lower(a * ev.raw(3), 4),
      ev.lower(forms::mean_raw3_upper(n, a, ev.raw(2)), 4), kLe, tol));
  report.scalar_bounds.push_back(scalar(
      "2.12-as-printed", ev.lower(a * ev.raw(3), 4),
      ev.lower(forms::mean_raw3_upper_printed(n, a, ev.raw(2)), 4), kLe, tol));
  report.scalar_bounds.push_back(scalar(
      "2.15", ev.lower(a * m3, 4),
      ev.lower(forms::mean_central3_upper(n, a, s2), 4), kLe, tol));

  if (in.all_positive()) {
    report.scalar_bounds.push_back(scalar(
        "T2.4.m3-positive", m3_d, ev.lower(forms::central3_upper(n, a, s2), 3),
        kLe, tol));
    report.chains.push_back(evaluate_chain(
        "2.16",
        {{"m_3", m3_d},
         {"(n-2)As^2", ev.lower(forms::central3_variance_bound(n, a, s2), 3)},
         {"(n-1)(n-2)A^3", ev.lower(forms::central3_cube_bound(n, a), 3)}},
        tol));
  } else {
    report.scalar_bounds.push_back(inapplicable_scalar(
        "T2.4.m3-positive", kLe, Status::kNotApplicable, kNeedPositive));
    report.chains.push_back(
        inapplicable_chain("2.16", Status::kNotApplicable, kNeedPositive));
  }

  const Rational above = ev.max() - a;
  const Rational below = a - ev.min();
  report.scalar_bounds.push_back(scalar(
      "brunk3.max-cube", m3_d, ev.lower(forms::central3_cube_bound(n, above), 3), kLe, tol));
  report.scalar_bounds.push_back(scalar(
      "brunk3.min-cube", m3_d, ev.lower(forms::central3_cube_bound(n, below), 3), kLe, tol));
  report.scalar_bounds.push_back(scalar(
      "brunk3.max-var", m3_d,
      ev.lower(forms::central3_variance_bound(n, above, s2), 3), kLe, tol));
  report.scalar_bounds.push_back(scalar(
      "brunk3.min-var", m3_d,
      ev.lower(forms::central3_variance_bound(n, below, s2), 3), kLe, tol));
  finalize(report);
  return report;
}

TheoremReport chain_t25(const BoundInputs& in, Tolerance tol) {
  const std::vector<std::pair<std::string, Direction>> scalars = {
      {"2.17", kLe}, {"2.17.central", kLe},
      {"T2.5.m3p-lower", kGe}, {"T2.5.m3-lower", kGe}};
  if (in.n() < 3) {
    return inapplicable("T2.5", {}, scalars, Status::kNotApplicable, need_n(3));
  }
  if (!in.all_positive()) {
    return inapplicable("T2.5", {}, scalars, Status::kNotApplicable, kNeedPositive);
  }
  const Evaluator ev(in);
  const long n = ev.n();
  const double g = ev.G();
  const Rational g_l = ev.lift(g, 1);

  TheoremReport report;
  report.theorem_id = "T2.5";
  report.scalar_bounds.push_back(scalar("2.17", g, ev.s3_root_raw(), kLe, tol));
  report.scalar_bounds.push_back(
      scalar("2.17.central", g, ev.s3_root_central(), kLe, tol));
  report.scalar_bounds.push_back(scalar(
      "T2.5.m3p-lower", ev.lower(ev.raw(3), 3),
      ev.lower(forms::raw3_lower(n, ev.A(), ev.raw(2), g_l), 3), kGe, tol));
  report.scalar_bounds.push_back(scalar(
      "T2.5.m3-lower", ev.lower(ev.central(3), 3),
      ev.lower(forms::central3_lower(n, ev.A(), ev.central(2), g_l), 3), kGe, tol));
  finalize(report);
  return report;
}

TheoremReport chain_t26(const BoundInputs& in, Tolerance tol) {
  const std::vector<std::string> chains = {"2.19", "2.19.central"};
  const std::vector<std::pair<std::string, Direction>> scalars = {
      {"T2.6.m3p-lower", kGe}, {"T2.6.m3-lower", kGe}};
  if (in.n() < 4) {
    return inapplicable("T2.6", chains, scalars, Status::kNotApplicable, need_n(4));
  }
  if (!in.all_positive()) {
    return inapplicable("T2.6", chains, scalars, Status::kNotApplicable, kNeedPositive);
  }
  const Evaluator ev(in);
  const long n = ev.n();
  const double g = ev.G();
  const double g1 = ev.g_nminus1();
  const Rational g1_l = ev.lift(g1, 1);

  TheoremReport report;
  report.theorem_id = "T2.6";
  report.chains.push_back(evaluate_chain(
      "2.19",
      {{"G", g}, {"(G^n/H)^(1/(n-1))", g1}, {"S_3^(1/3) raw-moment form", ev.s3_root_raw()}},
      tol));
  report.chains.push_back(evaluate_chain(
      "2.19.central",
      {{"G", g},
       {"(G^n/H)^(1/(n-1))", g1},
       {"S_3^(1/3) central-moment form", ev.s3_root_central()}},
      tol));
  report.scalar_bounds.push_back(scalar(
      "T2.6.m3p-lower", ev.lower(ev.raw(3), 3),
      ev.lower(forms::raw3_lower(n, ev.A(), ev.raw(2), g1_l), 3), kGe, tol));
  report.scalar_bounds.push_back(scalar(
      "T2.6.m3-lower", ev.lower(ev.central(3), 3),
      ev.lower(forms::central3_lower(n, ev.A(), ev.central(2), g1_l), 3), kGe, tol));
  finalize(report);
  return report;
}

TheoremReport newton_k3_moment(const BoundInputs& in, Tolerance tol) {
  if (in.n() < 4) {
    return inapplicable("T2.7", {}, {{"2.21c", kGe}}, Status::kNotApplicable, need_n(4));
  }
  const Evaluator ev(in);
  const long n = ev.n();
  const Rational c2 = forms::c2(n, ev.A(), ev.raw(2));
  const Rational c3 = forms::c3(n, ev.A(), ev.raw(2), ev.raw(3));
  const Rational c4 = forms::c4(n, ev.A(), ev.raw(2), ev.raw(3), ev.raw(4));

  TheoremReport report;
  report.theorem_id = "T2.7";
  report.scalar_bounds.push_back(scalar(
      "2.21c", ev.lower(forms::newton3_lhs(n, c3), 6),
      ev.lower(forms::newton3_rhs(n, c2, c4), 6), kGe, tol));
  finalize(report);
  return report;
}

TheoremReport chain_t28(const BoundInputs& in, Tolerance tol) {
  const std::vector<std::pair<std::string, Direction>> scalars = {
      {"2.22", kLe}, {"2.22.central", kLe}};
  if (in.n() < 4) {
    return inapplicable("T2.8", {}, scalars, Status::kNotApplicable, need_n(4));
  }
  if (!in.all_positive()) {
    return inapplicable("T2.8", {}, scalars, Status::kNotApplicable, kNeedPositive);
  }
  const Evaluator ev(in);
  const long n = ev.n();
  const double g = ev.G();
  const double g2 = g * g;
  const double bracket = ev.lower(
      forms::s4_central_bracket(n, ev.A(), ev.central(2), ev.central(3), ev.central(4)), 0);

  TheoremReport report;
  report.theorem_id = "T2.8";
  report.scalar_bounds.push_back(scalar(
      "2.22", g2 * g2,
      ev.lower(forms::s4_moment(n, ev.A(), ev.raw(2), ev.raw(3), ev.raw(4)), 4), kLe, tol));
  report.scalar_bounds.push_back(scalar(
      "2.22.central", g, ev.mean() * std::pow(bracket, 0.25), kLe, tol));
  finalize(report);
  return report;
}

TheoremReport skewness_kurtosis(const BoundInputs& in, Tolerance tol) {
  if (in.n() < 3) {
    return inapplicable("skew-kurt", {"skew-kurt"}, {}, Status::kNotApplicable,
                        need_n(3));
  }
  const Evaluator ev(in);
  const Rational& s2 = ev.central(2);
  if (s2 == 0) {
    return inapplicable("skew-kurt", {"skew-kurt"}, {}, Status::kDegenerate,
                        "zero variance");
  }
  const Rational& m3 = ev.central(3);
  TheoremReport report;
  report.theorem_id = "skew-kurt";
  report.chains.push_back(evaluate_chain(
      "skew-kurt",
      {{"1+m_3^2/m_2^3", ev.lower(forms::kurtosis_lower(s2, m3), 0)},
       {"m_4/m_2^2", ev.lower(forms::kurtosis(s2, ev.central(4)), 0)},
       {"((n-3)/(2(n-2)))m_3^2/m_2^3+n/2",
        ev.lower(forms::kurtosis_upper(ev.n(), s2, m3), 0)}},
      tol));
  finalize(report);
  return report;
}

const std::vector<std::string>& theorem_ids() {
  static const std::vector<std::string> ids = {
      "newton", "maclaurin", "T2.1", "T2.2", "T2.3", "T2.4",
      "T2.5",   "T2.6",      "T2.7", "T2.8", "skew-kurt"};
  return ids;
}

TheoremReport evaluate_theorem(std::string_view id, const BoundInputs& in,
                               Tolerance tol) {
  if (id == "newton" || id == "maclaurin") {
    if (!in.profile) {
      TheoremReport report;
      report.theorem_id = std::string(id);
      if (id == "newton") {
        report.scalar_bounds.push_back(inapplicable_scalar(
            "newton.k1", kGe, Status::kDegenerate, "all-zero sample"));
      } else {
        report.chains.push_back(
            inapplicable_chain("maclaurin", Status::kDegenerate, "all-zero sample"));
      }
      finalize(report);
      return report;
    }
    if (id == "newton") return check_newton(*in.profile, tol);
    TheoremReport report;
    report.theorem_id = "maclaurin";
    report.chains.push_back(check_maclaurin(*in.profile, tol));
    finalize(report);
    return report;
  }
  if (id == "T2.1") return chain_t21(in.means, in.n(), tol);
  if (id == "T2.2") return chain_t22(in, tol);
  if (id == "T2.3") return chain_t23(in, tol);
  if (id == "T2.4") return third_moment_bounds(in, tol);
  if (id == "T2.5") return chain_t25(in, tol);
  if (id == "T2.6") return chain_t26(in, tol);
  if (id == "T2.7") return newton_k3_moment(in, tol);
  if (id == "T2.8") return chain_t28(in, tol);
  if (id == "skew-kurt") return skewness_kurtosis(in, tol);
  throw Error(ErrorCode::kUnknownTheoremId,
              "unknown theorem id '" + std::string(id) + "'");
}

std::vector<TheoremReport> evaluate_theorems(std::span<const std::string> ids,
                                             const BoundInputs& in,
                                             Tolerance tol) {
  const auto& known = theorem_ids();
  for (const std::string& id : ids) {
    if (std::find(known.begin(), known.end(), id) == known.end()) {
      throw Error(ErrorCode::kUnknownTheoremId, "unknown theorem id '" + id + "'");
    }
  }
  std::vector<TheoremReport> out;
  out.reserve(ids.size());
  for (const std::string& id : ids) out.push_back(evaluate_theorem(id, in, tol));
  return out;
}

}  // namespace symmean
