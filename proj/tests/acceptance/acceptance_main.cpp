// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <thread>
#include <tuple>
#include <vector>

#include "schurid/haar.hpp"
#include "schurid/identity.hpp"
#include "schurid/measures.hpp"
#include "schurid/numeric.hpp"
#include "schurid/sampling.hpp"
#include "schurid/schur.hpp"

using namespace schurid;

namespace {

const unsigned kThreads = std::max(1u, std::min(8u, std::thread::hardware_concurrency()));

struct Outcome {
  bool pass = true;
  std::ostringstream note;
  void require(bool ok, const std::string& what) {
    if (!ok) {
      if (pass) note << "first failure: " << what;
      pass = false;
    }
  }
};

bool report_ok(Outcome& o, const VerificationReport& r, const std::string& what) {
  o.require(r.passed(), what + " (" + std::to_string(r.failures.size()) + " failures)");
  return r.passed();
}

BigRational to_rational(const MpReal& x) {
  BigRational q;
  mpfr_get_q(q.get_mpq_t(), x.get());
  return q;
}

void ac1(Outcome& o) {
  std::uint64_t checked = 0;
  for (const auto [m, n] : {std::pair{1u, 1u}, std::pair{1u, 2u}, std::pair{2u, 2u}})
    for (long s = 0; s <= 3; ++s) {
      const VerificationReport r = verify_theorem1(m, n, s, 8, kThreads);
      checked += r.checked;
      report_ok(o, r, "m=" + std::to_string(m) + " n=" + std::to_string(n) + " s=" + std::to_string(s));
    }
  o.note << (o.pass ? "" : "; ") << checked << " coefficients";
}

void ac2(Outcome& o) {
  std::uint64_t checked = 0;
  for (const auto [m, n] : {std::pair{1u, 1u}, std::pair{1u, 2u}}) {
    const VerificationReport r = verify_theorem1(m, n, SymbolicS{}, 6, kThreads);
    checked += r.checked;
    report_ok(o, r, "symbolic m=" + std::to_string(m) + " n=" + std::to_string(n));
    for (long s0 : {-1L, -2L}) {
      const VerificationReport sp = verify_specialization(m, n, s0, 6, kThreads);
      checked += sp.checked;
      report_ok(o, sp, "specialization s=" + std::to_string(s0));
    }
  }
  o.note << (o.pass ? "" : "; ") << checked << " coefficients";
}

void ac3(Outcome& o) {
  std::uint64_t checked = 0;
  for (const auto [m, n] : {std::pair{1u, 1u}, std::pair{1u, 2u}, std::pair{2u, 2u}})
    for (int s = 0; s <= 2; ++s) {
      const VerificationReport r = verify_corollary(m, n, s, 6, kThreads);
      checked += r.checked;
      report_ok(o, r, "m=" + std::to_string(m) + " n=" + std::to_string(n) + " s=" + std::to_string(s));
      for (const Partition& mu : enumerate_partitions(6, m))
        for (const Partition& nu : enumerate_partitions(6 - mu.size(), n)) {
          const BigRational join = weight_b_join(mu, nu, s, m, n);
          o.require(join == weight_b_product(mu, nu, s, m, n), "closed forms differ at " + mu.to_string() + nu.to_string());
          o.require(join == weight_b_join(nu, mu, s, n, m), "b not symmetric at " + mu.to_string() + nu.to_string());
        }
    }
  o.note << (o.pass ? "" : "; ") << checked << " pairs";
}

void ac4(Outcome& o) {
  report_ok(o, verify_cauchy_battery(100, 2024), "cauchy determinant battery");
  report_ok(o, verify_andreief_battery(100, 2025), "andreief battery");
  o.note << (o.pass ? "" : "; ") << "100 + 100 instances";
}

void ac5(Outcome& o) {
  double worst = 0;
  for (std::size_t total = 1; total <= 4; ++total)
    for (std::size_t m = 0; m <= total; ++m)
      for (int s = 0; s <= 2; ++s) {
        const std::string at = "m=" + std::to_string(m) + " n=" + std::to_string(total - m) + " s=" + std::to_string(s);
        const ZBracket z = normalization_Z_truncated(m, total - m, s, 30);
        const TrackedReal det = normalization_Z_bessel(m, total - m, s);
        const BigRational mid = to_rational(det.value()), rad = to_rational(det.abs_error());
        o.require(mid + rad >= z.partial_sum && mid - rad <= z.upper(), "bracket misses determinant at " + at);
        o.require(z.tail_bound < BigRational(BigInt(1), BigInt("100000000000000000000")), "bracket too wide at " + at);
        const BigRational gap = abs(z.partial_sum - mid) + rad;
        o.require(gap < BigRational(BigInt(1), BigInt(1000000000)), "sum and determinant differ at " + at);
        worst = std::max(worst, gap.get_d());
      }
  o.note << (o.pass ? "" : "; ") << "max |sum - det| + radius " << worst;
}

void ac6(Outcome& o) {
  std::uint64_t pairs = 0;
  for (const auto [m, n, s] : {std::tuple{1u, 1u, 0}, std::tuple{1u, 1u, 1}, std::tuple{2u, 2u, 0}})
    for (int total = 0; total <= 5; ++total)
      for (int a = 0; a <= total; ++a)
        for (const Partition& mu : partitions_of(a, m))
          for (const Partition& nu : partitions_of(total - a, n)) {
            BigRational sum = 0;
            for (const Partition& lambda : partitions_of(total, m + n)) {
              const BigInt c = lr_coefficient(lambda, mu, nu);
              if (c == 0) continue;
              sum += weight_P(lambda, m, n, s) * BigRational(c * schur_dimension(mu, m) * schur_dimension(nu, n)) /
                     BigRational(schur_dimension(lambda, m + n));
            }
            ++pairs;
            o.require(sum == weight_Q(mu, nu, m, n, s), "mismatch at " + mu.to_string() + nu.to_string());
          }
  o.note << (o.pass ? "" : "; ") << pairs << " pairs";
}

ComplexMatrix diag(const std::vector<double>& d) {
  ComplexMatrix a = ComplexMatrix::Zero(static_cast<Eigen::Index>(d.size()), static_cast<Eigen::Index>(d.size()));
  for (std::size_t i = 0; i < d.size(); ++i) a(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) = d[i];
  return a;
}

std::vector<TrackedReal> exact_points(const std::vector<double>& d) {
  std::vector<TrackedReal> out;
  for (double x : d) out.push_back(TrackedReal::exact(static_cast<long>(x)));
  return out;
}

void ac7(Outcome& o) {
  const std::uint64_t samples = 200000;
  double worst = 0;
  std::uint64_t seed = 700;
  auto compare_mc = [&](const std::string& label, const MCEstimate& e, const TrackedReal& reference) {
    const double dev = std::abs(e.mean - std::complex<double>(reference.value_double(), 0)) / e.standard_error;
    worst = std::max(worst, dev);
    o.require(dev <= 5.0, label + " off by " + std::to_string(dev) + " SE");
  };
  for (long s = 0; s <= 1; ++s) {
    const ComplexMatrix one = diag({1});
    const ComplexMatrix a2 = diag({1, 2}), b2 = diag({1, 3}), id2 = diag({1, 1});
    const std::string ss = " s=" + std::to_string(s);
    compare_mc("G n=1" + ss, mc_integral_G(one, one, s, samples, seed++, kThreads),
               series_G(exact_points({1}), s, 40));
    compare_mc("G n=2" + ss, mc_integral_G(a2, id2, s, samples, seed++, kThreads),
               series_G(exact_points({1, 2}), s, 40));
    compare_mc("K n=1" + ss, mc_integral_K(one, one, one, one, s, samples, seed++, kThreads),
               series_K(exact_points({1}), exact_points({1}), s, 40));
    compare_mc("K n=2" + ss, mc_integral_K(a2, b2, id2, id2, s, samples, seed++, kThreads),
               series_K(exact_points({1, 2}), exact_points({1, 3}), s, 40));
  }
  o.note << (o.pass ? "" : "; ") << "max deviation " << worst << " SE";
}

void ac8(Outcome& o) {
  double worst = 0;
  for (std::size_t m = 1; m <= 3; ++m)
    for (const BigRational& beta : {BigRational(1, 2), BigRational(1)}) {
      std::vector<TrackedReal> lambda, z;
      for (std::size_t i = 1; i <= m; ++i) {
        const BigRational l(static_cast<long>(i));
        lambda.push_back(TrackedReal::from_rational(l));
        z.push_back(TrackedReal::from_rational(beta * beta * l * l));
      }
      const TrackedReal value = theorem2_rhs(TrackedReal::from_rational(beta), lambda, m, 0);
      const TrackedReal reference = series_G(z, 0, 40);
      const double rel = abs(value - reference).magnitude_upper().to_double(MPFR_RNDU) /
                         reference.magnitude_lower().to_double(MPFR_RNDD);
      worst = std::max(worst, rel);
      o.require(rel <= 1e-6, "m=" + std::to_string(m) + " beta=" + to_string(beta));
    }
  o.note << (o.pass ? "" : "; ") << "max relative error " << worst;
}

void ac9(Outcome& o) {
  for (std::size_t m = 1; m <= 64; ++m)
    for (std::size_t n = 1; n <= 64; ++n)
      o.require(hook_ratio_52(Partition{1}, m, n) * BigRational(hook_product(Partition{1})) ==
                    BigRational(1) / (BigRational(1) + make_rational(BigInt(static_cast<long>(n)), BigInt(static_cast<long>(m)))),
                "one-box ratio at m=" + std::to_string(m) + " n=" + std::to_string(n));

  auto shrinks = [&](const std::string& label, const BigRational& r8, const BigRational& r64, const TrackedReal& limit) {
    const TrackedReal e8 = abs(TrackedReal::from_rational(r8) - limit);
    const TrackedReal e64 = abs(TrackedReal::from_rational(r64) - limit);
    o.require(compare(e64.magnitude_upper(), e8.magnitude_lower()) < 0, label + " error does not shrink");
  };
  const Partition l21{2, 1};
  shrinks("ratio52 [2,1]", hook_ratio_52(l21, 8, 8), hook_ratio_52(l21, 64, 64), limit_52(l21, 1));
  for (const Partition& mu : {Partition{1}, Partition{2}})
    for (const Partition& nu : {Partition{1}, Partition{2}})
      shrinks("ratio53 " + mu.to_string() + nu.to_string(), hook_ratio_53(mu, nu, 8, 8),
              hook_ratio_53(mu, nu, 64, 64), limit_53(mu, nu, 1));

  const std::array<int, 4> ts{2, 4, 8, 16};
  const auto points = diagonal_points(ts);
  double worst = 0;
  for (const Partition& lambda : {Partition{}, Partition{1}, Partition{2}}) {
    const ConvergenceTable t = limit_check_54_P(lambda, points, 1, 1);
    const double last = t.rows.back().error.magnitude_upper().to_double(MPFR_RNDU);
    worst = std::max(worst, last);
    o.require(t.strictly_decreasing(), "errors not decreasing for " + lambda.to_string());
    o.require(last < 0.05, "error at t=16 too large for " + lambda.to_string());
  }
  o.note << (o.pass ? "" : "; ") << "max error at t=16 " << worst;
}

void ac10(Outcome& o) {
  const SamplerCheck pl = plancherel_goodness_of_fit(1, 3, 100000, 1001, kThreads);
  o.require(pl.passed, "plancherel chi-square p = " + std::to_string(pl.chi_square ? pl.chi_square->p_value : 0.0));
  const SamplerCheck q = q_frequencies(1, 1, 0, 3, 100000, 1002, kThreads);
  double worst = 0;
  for (const FrequencyCell& c : q.cells) worst = std::max(worst, std::abs(c.z_score));
  o.require(q.passed, "Q cell beyond 3 sigma");
  o.note << (o.pass ? "" : "; ") << "plancherel p " << (pl.chi_square ? pl.chi_square->p_value : 0.0)
         << ", max |z| for Q " << worst;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria = {
      {"AC1  coefficients, integer s", ac1},
      {"AC2  coefficients, symbolic s", ac2},
      {"AC3  pair weight identity", ac3},
      {"AC4  determinant lemmas", ac4},
      {"AC5  normalization bracket", ac5},
      {"AC6  branching law equals Q", ac6},
      {"AC7  monte carlo integrals", ac7},
      {"AC8  unitary recovery", ac8},
      {"AC9  limit theorems", ac9},
      {"AC10 sampler statistics", ac10},
  };
  int failed = 0;
  for (const auto& [name, body] : criteria) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      body(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s  %-30s %7.2fs  %s\n", o.pass ? "PASS" : "FAIL", name.c_str(), secs, o.note.str().c_str());
    std::fflush(stdout);
    failed += !o.pass;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
