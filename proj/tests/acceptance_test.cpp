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

// Release acceptance: one PASS/FAIL line per criterion, exit status 0 only if
// every criterion passes.

#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracle/printed_forms.hpp"
#include "oracle/rational_oracle.hpp"
#include "symmean/bounds.hpp"
#include "symmean/forms.hpp"
#include "symmean/symmfn.hpp"
#include "symmean/verify.hpp"

namespace {

using namespace symmean;
using oracle::Q;

const Tolerance kTol{1e-9};

double rel_err(double actual, double expected) {
  const double scale = std::max(std::fabs(actual), std::fabs(expected));
  return scale == 0.0 ? 0.0 : std::fabs(actual - expected) / scale;
}

// Collects failures of one criterion; only the first few are printed.
class Check {
 public:
  void expect(bool ok, const std::string& what) {
    if (ok) return;
    if (failures_++ < 5) std::cout << "    " << what << "\n";
  }
  void near(double actual, double expected, double rel, const std::string& what) {
    std::ostringstream s;
    s.precision(17);
    s << what << ": got " << actual << ", expected " << expected;
    expect(rel_err(actual, expected) <= rel, s.str());
  }
  int failures() const { return failures_; }

 private:
  int failures_ = 0;
};

struct Criterion {
  int number;
  std::string name;
  double budget_seconds;
  std::function<void(Check&)> body;
};

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  const std::string command = "cd '" + std::string(SYMMEAN_TEST_DATA_DIR) + "' && '" +
                              std::string(SYMMEAN_CLI_PATH) + "' " + args + " 2>/dev/null";
  RunResult result;
  FILE* pipe = popen(command.c_str(), "r");
  if (pipe == nullptr) return result;
  std::array<char, 4096> buffer{};
  std::size_t n = 0;
  while ((n = std::fread(buffer.data(), 1, buffer.size(), pipe)) > 0) result.out.append(buffer.data(), n);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

VerifyOptions fuzz_options() {
  VerifyOptions o;
  o.trials = 10000;
  o.n_min = 4;
  o.n_max = 16;
  o.lo = 1e-3;
  o.hi = 1e3;
  o.seed = 42;
  return o;
}

// 1. Constant samples collapse every applicable chain to equality.
void equality_collapse(Check& check) {
  const std::vector<std::string> ids = {"newton", "maclaurin", "T2.1", "T2.2", "T2.3",
                                        "T2.4",   "T2.5",      "T2.6", "T2.7", "T2.8"};
  for (int n = 2; n <= 8; ++n) {
    for (double c : {0.1, 1.0, 7.0}) {
      const BoundInputs in(make_sample(std::vector<double>(n, c)));
      const std::string where = " (n=" + std::to_string(n) + ", c=" + std::to_string(c) + ")";
      for (const TheoremReport& r : evaluate_theorems(ids, in, kTol)) {
        for (const BoundChain& ch : r.chains) {
          if (ch.status == Status::kNotApplicable) continue;
          check.expect(ch.status == Status::kHolds, ch.id + " not Holds" + where);
          check.expect(ch.max_violation == 0.0, ch.id + " max_violation != 0" + where);
          // The cube bound closing 2.16 drops the variance and is not tight.
          const std::size_t tight = ch.id == "2.16" ? ch.entries.size() - 1 : ch.entries.size();
          for (std::size_t i = 0; i < tight; ++i) {
            check.near(ch.entries[i].value, ch.entries.front().value, 1e-12,
                       ch.id + " " + ch.entries[i].label + where);
          }
        }
        for (const ScalarBound& b : r.scalar_bounds) {
          if (b.status == Status::kNotApplicable) continue;
          check.expect(b.status == Status::kHolds, b.name + " not Holds" + where);
          // The printed 2.12 variant is weaker by n^2 A^4 / (2(n-1)) by design.
          if (b.name != "2.12-as-printed") check.near(b.lhs, b.rhs, 1e-12, b.name + where);
        }
      }
    }
  }
}

// 2. Canonical sample, oracle first.
void canonical_sample(Check& check) {
  const auto x = oracle::rationals({1, 2, 3, 4});
  const std::vector<double> c_expected = {1, 10, 35, 50, 24};
  std::vector<Q> c_oracle;
  for (std::size_t k = 0; k <= 4; ++k) c_oracle.push_back(oracle::elementary(x, k));
  for (std::size_t k = 0; k <= 4; ++k) {
    check.expect(c_oracle[k] == Q(static_cast<long long>(c_expected[k])), "oracle C_" + std::to_string(k));
  }
  const double m_expected[] = {2.5, 2.415229, 2.320794, 2.213364};
  double m_oracle[5] = {};
  for (std::size_t k = 1; k <= 4; ++k) {
    m_oracle[k] = std::pow(oracle::to_double(oracle::symmetric_mean(x, k)), 1.0 / static_cast<double>(k));
    check.near(m_oracle[k], m_expected[k - 1], 1e-6, "oracle M_" + std::to_string(k));
  }
  const Q product = oracle::product(x);
  check.expect(product == Q(24), "oracle G^4 = 24");
  const oracle::RationalMoments m = oracle::moments_of(x);
  const Q s4_form = forms::s4_moment<Q>(m.n, m.A, m.m2p, m.m3p, m.m4p);
  check.expect(s4_form == oracle::symmetric_mean(x, 4), "oracle S_4 moment form");
  const Q margin =
      3 * Q(m.n - 3) * c_oracle[3] * c_oracle[3] - 4 * Q(m.n - 2) * c_oracle[2] * c_oracle[4];
  check.expect(margin == Q(780), "oracle T2.7 margin");
  const Q s2 = m.s2;
  const Q k_lower = 1 + m.m3 * m.m3 / (s2 * s2 * s2);
  const Q kurt = oracle::central_moment(x, 4) / (s2 * s2);
  const Q k_upper = Q(m.n - 3) / (2 * Q(m.n - 2)) * m.m3 * m.m3 / (s2 * s2 * s2) + Q(m.n) / 2;
  check.expect(k_lower == 1 && kurt == Q(41, 25) && k_upper == 2, "oracle skew-kurt 1 <= 1.64 <= 2");

  const Sample sample = make_sample({1, 2, 3, 4});
  const SymmetricProfile p = esf_dp(sample);
  for (std::size_t k = 0; k <= 4; ++k) {
    check.near(p.unscaled_c(k), oracle::to_double(c_oracle[k]), 1e-9, "C_" + std::to_string(k));
  }
  for (std::size_t k = 1; k <= 4; ++k) check.near(*p.M[k], m_oracle[k], 1e-9, "M_" + std::to_string(k));

  const BoundInputs in(sample);
  const TheoremReport t28 = evaluate_theorem("T2.8", in, kTol);
  const ScalarBound* b28 = t28.scalar("2.22");
  check.expect(b28 && b28->status == Status::kHolds, "T2.8 holds");
  if (b28) {
    check.near(b28->lhs, 24.0, 1e-9, "T2.8 G^4");
    check.near(b28->rhs, 24.0, 1e-9, "T2.8 RHS");
    check.expect(std::fabs(b28->margin) <= 1e-9 * 24.0, "T2.8 zero slack");
  }
  const TheoremReport t27 = evaluate_theorem("T2.7", in, kTol);
  const ScalarBound* b27 = t27.scalar("2.21c");
  check.expect(b27 && b27->status == Status::kHolds, "T2.7 holds");
  if (b27) check.near(b27->margin, 780.0, 1e-9, "T2.7 margin");
  const TheoremReport sk = evaluate_theorem("skew-kurt", in, kTol);
  const BoundChain* chain = sk.chain("skew-kurt");
  check.expect(chain && chain->status == Status::kHolds && chain->entries.size() == 3, "skew-kurt holds");
  if (chain && chain->entries.size() == 3) {
    check.near(chain->entries[0].value, oracle::to_double(k_lower), 1e-9, "skew-kurt lower");
    check.near(chain->entries[1].value, oracle::to_double(kurt), 1e-9, "kurtosis");
    check.near(chain->entries[2].value, oracle::to_double(k_upper), 1e-9, "skew-kurt upper");
  }
}

// 3. Pathway agreement and moment-form right-hand sides on the fuzz corpus.
void pathway_agreement(Check& check) {
  const VerifyOptions o = fuzz_options();
  for (std::uint64_t t = 0; t < o.trials; ++t) {
    const Sample s = make_sample(trial_sample(o, t));
    const std::string where = " (trial " + std::to_string(t) + ")";
    const std::size_t n = s.size();
    const SymmetricProfile dp = esf_dp(s);
    const auto newton = esf_newton(s).unscaled_all();
    for (std::size_t k = 0; k <= n; ++k) {
      check.near(newton[k], dp.unscaled_c(k), 1e-10, "Newton C_" + std::to_string(k) + where);
    }
    if (n <= 12) {
      const auto brute = esf_bruteforce(s).unscaled_all();
      for (std::size_t k = 0; k <= n; ++k) {
        check.near(brute[k], dp.unscaled_c(k), 1e-10, "subset C_" + std::to_string(k) + where);
      }
    }
    const BoundInputs in(s);
    const auto m = [&](std::size_t k) { return *dp.M[k]; };
    const TheoremReport t22 = evaluate_theorem("T2.2", in, kTol);
    const TheoremReport t23 = evaluate_theorem("T2.3", in, kTol);
    const TheoremReport t25 = evaluate_theorem("T2.5", in, kTol);
    const TheoremReport t26 = evaluate_theorem("T2.6", in, kTol);
    const TheoremReport t28 = evaluate_theorem("T2.8", in, kTol);
    check.near(t22.chain("T2.2")->entries[1].value, m(2), 1e-9, "(2.2) vs M_2" + where);
    check.near(t23.chain("T2.3")->entries[1].value, m(n - 1), 1e-9, "(2.7) vs M_{n-1}" + where);
    check.near(t25.scalar("2.17")->rhs, m(3), 1e-9, "(2.17) vs M_3" + where);
    check.near(t26.chain("2.19")->entries[2].value, m(3), 1e-9, "(2.19) vs M_3" + where);
    check.near(t28.scalar("2.22")->rhs, dp.S[4], 1e-9, "(2.22) vs S_4" + where);
    check.near(std::pow(t28.scalar("2.22")->rhs, 0.25), m(4), 1e-9, "(2.22) vs M_4" + where);
  }
}

// 4. Every applicable bound holds on the fuzz corpus, and `verify` agrees.
void theorem_soundness(Check& check) {
  const VerifyOptions o = fuzz_options();
  for (std::uint64_t t = 0; t < o.trials; ++t) {
    const BoundInputs in(make_sample(trial_sample(o, t)));
    for (const TheoremReport& r : evaluate_theorems(theorem_ids(), in, kTol)) {
      check.expect(r.status == Status::kHolds || r.status == Status::kNotApplicable,
                   r.theorem_id + " is " + to_string(r.status) + " (trial " + std::to_string(t) + ")");
    }
  }
  const RunResult v = run_cli("verify --trials 10000 --n-min 4 --n-max 16 --range 0.001:1000 --seed 42 --tol 1e-9");
  check.expect(v.exit_code == 0, "verify exit code " + std::to_string(v.exit_code));
  check.expect(v.out.find("result: all 10000 trials hold") != std::string::npos, "verify result line");
}

// 5. Printed-formula regressions.
void printed_forms(Check& check) {
  const auto x = oracle::rationals({1, 2, 3, 4});
  const oracle::RationalMoments m = oracle::moments_of(x);
  const Q corrected = forms::c4<Q>(m.n, m.A, m.m2p, m.m3p, m.m4p);
  check.expect(corrected == Q(24) && corrected == oracle::elementary(x, 4), "(a) corrected C_4 = 24");
  check.expect(oracle::quartic_printed(m) / 24 != oracle::elementary(x, 4), "(a) printed form differs");
  const SymmetricProfile p = esf_dp(make_sample({1, 2, 3, 4}));
  const MomentIdentities id = moment_identities(ExactMoments(make_sample({1, 2, 3, 4})),
                                                classical_means(make_sample({1, 2, 3, 4})));
  check.near(id.c4(), p.unscaled_c(4), 1e-15, "(a) library C_4 matches enumeration");

  const Q lhs = oracle::newton3_printed_lhs(m);
  const Q rhs = oracle::newton3_printed_rhs(m);
  check.expect(lhs == Q(6195, 4) && rhs == Q(3000) && !(lhs >= rhs), "(b) printed 1548.75 >= 3000 is false");
  const BoundInputs in(make_sample({1, 2, 3, 4}));
  const ScalarBound* c_form = evaluate_theorem("T2.7", in, kTol).scalar("2.21c");
  check.expect(c_form && c_form->status == Status::kHolds && c_form->margin == 780.0,
               "(b) C-form holds with margin 780");

  for (long n = 3; n <= 8; ++n) {
    for (const Q& c : {Q(1, 10), Q(1), Q(7)}) {
      const oracle::RationalMoments k = oracle::moments_of(std::vector<Q>(n, c));
      check.expect(forms::mean_raw3_upper<Q>(n, k.A, k.m2p) == k.A * k.m3p, "(c) equality on constants");
    }
  }
  std::mt19937_64 rng(20261015);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto q = oracle::random_rationals(rng, 3 + rng() % 8);
    const oracle::RationalMoments r = oracle::moments_of(q);
    const Q raw_gap = forms::mean_raw3_upper<Q>(r.n, r.A, r.m2p) - r.A * r.m3p;
    const Q central_gap = forms::mean_central3_upper<Q>(r.n, r.A, r.s2) - r.A * r.m3;
    check.expect(raw_gap == central_gap, "(c) 2.12c and 2.15 differ on trial " + std::to_string(trial));
  }
}

// 6. The spike sample attains the lower Brunk bound.
void brunk_tightness(Check& check) {
  for (int n : {3, 5, 10}) {
    std::vector<double> v(n, 0.0);
    v.back() = 4.0;
    const auto q = oracle::rationals(v);
    const Q a_minus_min = oracle::raw_moment(q, 1);
    // s^2 = (n-1)(A - min)^2 exactly.
    check.expect(oracle::central_moment(q, 2) == Q(n - 1) * a_minus_min * a_minus_min,
                 "oracle spike identity n=" + std::to_string(n));
    const BoundInputs in(make_sample(v));
    const ScalarBound* b = evaluate_theorem("T2.2", in, kTol).scalar("brunk.min");
    check.expect(b && b->status == Status::kHolds, "brunk.min holds n=" + std::to_string(n));
    if (b) {
      check.near(b->lhs, b->rhs, 1e-12, "s vs sqrt(n-1)(A-min) n=" + std::to_string(n));
      check.near(b->lhs, std::sqrt(oracle::to_double(oracle::central_moment(q, 2))), 1e-12,
                 "s vs oracle n=" + std::to_string(n));
    }
  }
}

// 7. Newton's inequalities are strict for non-constant samples.
void strictness(Check& check) {
  std::mt19937_64 rng(7);
  int tested = 0;
  while (tested < 1000) {
    const auto q = oracle::random_positive_rationals(rng, 2 + rng() % 9);
    if (oracle::all_equal(q)) continue;
    ++tested;
    const std::size_t n = q.size();
    const auto c = esf_bruteforce_exact(q);
    std::vector<Q> s(n + 1);
    for (std::size_t k = 0; k <= n; ++k) s[k] = c[k] / Q(oracle::binom(n, k));
    for (std::size_t k = 1; k < n; ++k) {
      check.expect(s[k] * s[k] - s[k + 1] * s[k - 1] > 0,
                   "not strict at k=" + std::to_string(k) + " (sample " + std::to_string(tested) + ")");
    }
  }
}

// 8. Command-line contract.
void cli_contract(Check& check) {
  const std::string golden = read_file(std::filesystem::path(SYMMEAN_GOLDEN_DIR) / "report_1234.json");
  const RunResult a = run_cli("bounds one_to_four.txt --out json");
  const RunResult b = run_cli("bounds one_to_four.txt --out json");
  check.expect(!golden.empty(), "golden file present");
  check.expect(a.exit_code == 0 && a.out == golden, "bounds JSON matches golden file");
  check.expect(a.out == b.out, "bounds JSON byte-stable");
  check.expect(run_cli("bounds one_to_four.txt --tol 1e-300").exit_code == 1, "exit 1 on violation");
  check.expect(run_cli("verify --trials 1 --n-min 0").exit_code == 2, "exit 2 on n-min 0");
  check.expect(run_cli("bounds missing_file.txt").exit_code == 2, "exit 2 on missing input");
  check.expect(run_cli("bounds one_to_four.txt --theorems T9.9").exit_code == 2, "exit 2 on unknown theorem");
  const RunResult v1 = run_cli("verify --seed 42");
  const RunResult v2 = run_cli("verify --seed 42");
  check.expect(v1.exit_code == 0, "verify --seed 42 exit 0");
  check.expect(!v1.out.empty() && v1.out == v2.out, "verify --seed 42 byte-identical");
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "equality collapse on constant samples", 1.0, equality_collapse},
      {2, "canonical sample [1,2,3,4]", 1.0, canonical_sample},
      {3, "pathway agreement on 10000 fuzzed samples", 60.0, pathway_agreement},
      {4, "theorem soundness on 10000 fuzzed samples", 120.0, theorem_soundness},
      {5, "printed-formula regressions", 0.0, printed_forms},
      {6, "Brunk tightness", 0.0, brunk_tightness},
      {7, "strict Newton inequalities on rationals", 0.0, strictness},
      {8, "CLI contract", 0.0, cli_contract},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    Check check;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.body(check);
    } catch (const std::exception& e) {
      check.expect(false, std::string("exception: ") + e.what());
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_budget = c.budget_seconds <= 0.0 || seconds < c.budget_seconds;
    if (!in_budget) std::cout << "    over budget of " << c.budget_seconds << " s\n";
    const bool pass = check.failures() == 0 && in_budget;
    failed += pass ? 0 : 1;
    std::printf("%s criterion %d: %s (%.2f s%s)\n", pass ? "PASS" : "FAIL", c.number, c.name.c_str(),
                seconds, check.failures() ? (", " + std::to_string(check.failures()) + " failures").c_str() : "");
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
