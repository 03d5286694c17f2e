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

#include "symmean/verify.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <mutex>
#include <thread>

#include "symmean/bounds.hpp"
#include "symmean/error.hpp"
#include "symmean/symmfn.hpp"

namespace symmean {
namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// [0, 1) with 53 random bits; independent of the standard library's
// distribution implementations.
double unit_interval(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::string shortest(double v) {
  char buf[32];
  const auto result = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, result.ptr);
}

bool relative_close(double a, double b, double rel) {
  return std::fabs(a - b) <= rel * std::max(std::fabs(a), std::fabs(b));
}

class Checker {
 public:
  explicit Checker(CheckOutcome& out) : out_(out) {}

  bool ok() const { return !out_.failure; }

  void expect(bool condition, const std::string& what) {
    ++out_.checks;
    if (!condition && !out_.failure) out_.failure = what;
  }

  void expect_close(double a, double b, double rel, const std::string& what) {
    expect(relative_close(a, b, rel),
           what + ": " + shortest(a) + " vs " + shortest(b));
  }

 private:
  CheckOutcome& out_;
};

}  // namespace

void validate(const VerifyOptions& o) {
  auto fail = [](const std::string& what) {
    throw Error(ErrorCode::kInvalidConfig, what);
  };
  if (o.trials < 1) fail("trials must be >= 1");
  if (o.n_min < 1) fail("n-min must be >= 1");
  if (o.n_max < o.n_min) fail("n-max must be >= n-min");
  if (!(std::isfinite(o.lo) && std::isfinite(o.hi)) || !(o.lo > 0.0)) {
    fail("range must satisfy 0 < lo <= hi (finite)");
  }
  if (o.hi < o.lo) fail("range must satisfy 0 < lo <= hi (finite)");
  if (!(std::isfinite(o.tol) && o.tol > 0.0)) fail("tolerance must be positive");
}

std::vector<double> trial_sample(const VerifyOptions& o, std::uint64_t trial) {
  std::mt19937_64 rng(splitmix64(o.seed + trial));
  const std::uint64_t span = o.n_max - o.n_min + 1;
  const std::size_t n = o.n_min + static_cast<std::size_t>(rng() % span);
  const double log_lo = std::log(o.lo);
  const double log_hi = std::log(o.hi);
  std::vector<double> values(n);
  for (double& v : values) {
    v = std::exp(log_lo + unit_interval(rng) * (log_hi - log_lo));
    v = std::clamp(v, o.lo, o.hi);
  }
  return values;
}

CheckOutcome check_sample(const Sample& sample, double tol) {
  CheckOutcome out;
  Checker check(out);
  const BoundInputs in(sample);
  const std::size_t n = sample.size();

  for (const std::string& id : theorem_ids()) {
    const TheoremReport report = evaluate_theorem(id, in, Tolerance{tol});
    for (const BoundChain& c : report.chains) {
      check.expect(c.status == Status::kHolds || c.status == Status::kNotApplicable,
                   id + "/" + c.id + " " + to_string(c.status) +
                       " (max violation " + shortest(c.max_violation) + ")");
    }
    for (const ScalarBound& b : report.scalar_bounds) {
      check.expect(b.status == Status::kHolds || b.status == Status::kNotApplicable,
                   id + "/" + b.name + " " + to_string(b.status) + ": lhs " +
                       shortest(b.lhs) + " " + to_string(b.direction) + " rhs " +
                       shortest(b.rhs));
    }
  }
  if (!check.ok()) return out;

  check.expect(in.profile.has_value(), "DP profile unavailable");
  if (!check.ok()) return out;
  const SymmetricProfile& profile = *in.profile;

  const ElementarySymmetric newton = esf_newton(sample);
  for (std::size_t k = 1; k <= n; ++k) {
    check.expect_close(profile.C[k], newton.scaled[k], kEsfAgreement,
                       "esf_dp vs esf_newton C_" + std::to_string(k));
  }
  if (n <= kBruteForceCheckN) {
    const ElementarySymmetric brute = esf_bruteforce(sample);
    for (std::size_t k = 1; k <= n; ++k) {
      check.expect_close(profile.C[k], brute.scaled[k], kEsfAgreement,
                         "esf_dp vs esf_bruteforce C_" + std::to_string(k));
    }
  }

  if (!sample.all_positive()) return out;
  const MomentIdentities ids = moment_identities(in.exact, in.means);
  if (n >= 2) {
    check.expect_close(ids.c2(), profile.unscaled_c(2), kMomentFormAgreement, "C_2 identity");
    check.expect_close(ids.c_nminus1(), profile.unscaled_c(n - 1), kMomentFormAgreement,
                       "C_{n-1} identity");
  }
  if (n >= 3) {
    check.expect_close(ids.c3(), profile.unscaled_c(3), kMomentFormAgreement, "C_3 identity");
  }
  if (n >= 4) {
    check.expect_close(ids.c4(), profile.unscaled_c(4), kMomentFormAgreement, "C_4 identity");
  }

  const Tolerance t{tol};
  if (n >= 2) {
    const TheoremReport t22 = chain_t22(in, t);
    check.expect_close(t22.chain("T2.2")->entries[1].value, *profile.M[2],
                       kMomentFormAgreement, "(2.2) moment form vs M_2");
  }
  if (n >= 3) {
    const TheoremReport t23 = chain_t23(in, t);
    check.expect_close(t23.chain("T2.3")->entries[1].value, *profile.M[n - 1],
                       kMomentFormAgreement, "(2.7) G^n/H form vs M_{n-1}");
    const TheoremReport t25 = chain_t25(in, t);
    check.expect_close(t25.scalar("2.17")->rhs, *profile.M[3], kMomentFormAgreement,
                       "(2.17) moment form vs M_3");
  }
  if (n >= 4) {
    const TheoremReport t26 = chain_t26(in, t);
    check.expect_close(t26.chain("2.19")->entries[2].value, *profile.M[3],
                       kMomentFormAgreement, "(2.19) moment form vs M_3");
    const TheoremReport t28 = chain_t28(in, t);
    check.expect_close(std::pow(t28.scalar("2.22")->rhs, 0.25), *profile.M[4],
                       kMomentFormAgreement, "(2.22) moment form vs M_4");
  }
  return out;
}

VerifyResult run_verify(const VerifyOptions& options, unsigned threads) {
  validate(options);
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(
      std::min<std::uint64_t>(threads, options.trials));

  std::atomic<std::uint64_t> next{0};
  std::atomic<std::uint64_t> first_failure{options.trials};
  std::vector<std::uint64_t> checks(options.trials, 0);
  std::vector<std::optional<std::string>> failures(options.trials);

  auto worker = [&] {
    for (;;) {
      const std::uint64_t trial = next.fetch_add(1);
      // Trials above a known failure cannot change the reported one.
      if (trial >= options.trials || trial > first_failure.load()) return;
      const Sample sample = make_sample(trial_sample(options, trial));
      CheckOutcome outcome = check_sample(sample, options.tol);
      checks[trial] = outcome.checks;
      if (outcome.failure) {
        failures[trial] = std::move(outcome.failure);
        std::uint64_t current = first_failure.load();
        while (trial < current && !first_failure.compare_exchange_weak(current, trial)) {
        }
      }
    }
  };
  {
    std::vector<std::jthread> pool;
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
  }

  VerifyResult result;
  const std::uint64_t stop = first_failure.load();
  for (std::uint64_t t = 0; t < options.trials && t <= stop; ++t) {
    result.checks += checks[t];
  }
  if (stop < options.trials) {
    result.failure = VerifyFailure{stop, *failures[stop], trial_sample(options, stop)};
  }
  return result;
}

int verify_command(const VerifyOptions& options, std::ostream& out, std::ostream& err) {
  try {
    validate(options);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  out << "generator: mt19937_64, trial seed = splitmix64(seed + trial)\n"
      << "seed: " << options.seed << "\n"
      << "trials: " << options.trials << "\n"
      << "n: " << options.n_min << ".." << options.n_max << "\n"
      << "range: " << shortest(options.lo) << ":" << shortest(options.hi)
      << " (log-uniform)\n"
      << "tolerance: " << shortest(options.tol) << "\n";
  const VerifyResult result = run_verify(options);
  if (!result.failure) {
    out << "checks: " << result.checks << "\n"
        << "result: all " << options.trials << " trials hold\n";
    return 0;
  }
  const VerifyFailure& f = *result.failure;
  out << "checks: " << result.checks << "\n"
      << "result: VIOLATION\n"
      << "trial: " << f.trial << "\n"
      << "check: " << f.detail << "\n"
      << "sample (n=" << f.sample.size() << "):";
  for (double v : f.sample) out << " " << shortest(v);
  out << "\n";
  return 1;
}

}  // namespace symmean
