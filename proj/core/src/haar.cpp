#include "schurid/haar.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "schurid/errors.hpp"
#include "schurid/parallel.hpp"

namespace schurid {

ComplexMatrix haar_sample(std::size_t n, Rng& rng) {
  std::normal_distribution<double> gauss(0.0, std::sqrt(0.5));
  const auto dim = static_cast<Eigen::Index>(n);
  ComplexMatrix z(dim, dim);
  for (Eigen::Index c = 0; c < dim; ++c)
    for (Eigen::Index r = 0; r < dim; ++r) {
      const double re = gauss(rng);
      const double im = gauss(rng);
      z(r, c) = {re, im};
    }
  Eigen::HouseholderQR<ComplexMatrix> qr(z);
  ComplexMatrix q = qr.householderQ();
  const ComplexMatrix& packed = qr.matrixQR();
  for (Eigen::Index c = 0; c < dim; ++c) {
    const std::complex<double> d = packed(c, c);
    const double mag = std::abs(d);
    if (mag > 0) q.col(c) *= d / mag;
  }
  return q;
}

double unitarity_defect(const ComplexMatrix& u) {
  const ComplexMatrix e = u.adjoint() * u - ComplexMatrix::Identity(u.rows(), u.cols());
  return e.cwiseAbs().maxCoeff();
}

namespace {

// Welford accumulator for complex samples; merged with the pairwise formula.
struct Moments {
  std::uint64_t count = 0;
  std::complex<double> mean{0, 0};
  double m2 = 0;

  void add(std::complex<double> x) {
    ++count;
    const std::complex<double> delta = x - mean;
    mean += delta / static_cast<double>(count);
    m2 += std::real(std::conj(delta) * (x - mean));
  }

  void merge(const Moments& o) {
    if (o.count == 0) return;
    if (count == 0) {
      *this = o;
      return;
    }
    const double na = static_cast<double>(count), nb = static_cast<double>(o.count);
    const std::complex<double> delta = o.mean - mean;
    const double n = na + nb;
    mean += delta * (nb / n);
    m2 += o.m2 + std::norm(delta) * na * nb / n;
    count += o.count;
  }

  MCEstimate estimate(std::uint64_t seed) const {
    MCEstimate e;
    e.mean = mean;
    e.samples = count;
    e.seed = seed;
    if (count > 1) {
      const double n = static_cast<double>(count);
      e.standard_error = std::sqrt(m2 / (n * (n - 1)));
    }
    return e;
  }
};

template <class Sample>
Moments sample_parallel(std::uint64_t samples, std::uint64_t seed, unsigned threads,
                        Sample&& draw) {
  threads = std::max(1u, threads);
  std::vector<Moments> parts(threads);
  run_workers(threads, [&](unsigned w) {
    Rng rng(seed ^ static_cast<std::uint64_t>(w));
    const auto [begin, end] = worker_range(static_cast<std::size_t>(samples), threads, w);
    for (std::size_t i = begin; i < end; ++i) parts[w].add(draw(rng));
  });
  Moments total;
  for (const Moments& p : parts) total.merge(p);
  return total;
}

void require_square(const ComplexMatrix& m, Eigen::Index n, const char* what) {
  if (m.rows() != n || m.cols() != n)
    throw DimensionMismatchError(std::string(what) + ": matrices must be square of equal size");
}

std::complex<double> integer_power(std::complex<double> z, long s) {
  if (s < 0) throw std::invalid_argument("integrand power s must be nonnegative");
  std::complex<double> r{1, 0};
  for (long i = 0; i < s; ++i) r *= z;
  return r;
}

}  // namespace

MCEstimate mc_integral_G(const ComplexMatrix& a, const ComplexMatrix& b, long s,
                         std::uint64_t samples, std::uint64_t seed, unsigned threads) {
  const Eigen::Index n = a.rows();
  require_square(a, n, "mc_integral_G");
  require_square(b, n, "mc_integral_G");
  if (s < 0) throw std::invalid_argument("mc_integral_G: s must be nonnegative");
  const Moments m = sample_parallel(samples, seed, threads, [&](Rng& rng) {
    const ComplexMatrix u = haar_sample(static_cast<std::size_t>(n), rng);
    const ComplexMatrix au = a * u;
    return integer_power(au.determinant(), s) * std::exp((au + b * u.adjoint()).trace());
  });
  return m.estimate(seed);
}

MCEstimate mc_integral_K(const ComplexMatrix& a, const ComplexMatrix& b, const ComplexMatrix& c,
                         const ComplexMatrix& d, long s, std::uint64_t samples,
                         std::uint64_t seed, unsigned threads) {
  const Eigen::Index n = a.rows();
  for (const ComplexMatrix* x : {&a, &b, &c, &d}) require_square(*x, n, "mc_integral_K");
  if (s < 0) throw std::invalid_argument("mc_integral_K: s must be nonnegative");
  const Moments m = sample_parallel(samples, seed, threads, [&](Rng& rng) {
    const ComplexMatrix u = haar_sample(static_cast<std::size_t>(n), rng);
    const ComplexMatrix v = haar_sample(static_cast<std::size_t>(n), rng);
    const ComplexMatrix uavb = u * a * v * b;
    const ComplexMatrix rest = u.adjoint() * c * v.adjoint() * d;
    return integer_power(uavb.determinant(), s) * std::exp((uavb + rest).trace());
  });
  return m.estimate(seed);
}

HaarStatistics haar_statistics(std::size_t n, std::uint64_t samples, std::uint64_t seed,
                               unsigned threads) {
  if (n == 0) throw std::invalid_argument("haar_statistics: n must be positive");
  threads = std::max(1u, threads);
  std::vector<Moments> abs2(threads), first(threads);
  std::vector<double> defect(threads, 0.0);
  run_workers(threads, [&](unsigned w) {
    Rng rng(seed ^ static_cast<std::uint64_t>(w));
    const auto [begin, end] = worker_range(static_cast<std::size_t>(samples), threads, w);
    for (std::size_t i = begin; i < end; ++i) {
      const ComplexMatrix u = haar_sample(n, rng);
      abs2[w].add(std::norm(u(0, 0)));
      first[w].add(u(0, 0));
      defect[w] = std::max(defect[w], unitarity_defect(u));
    }
  });
  Moments a, f;
  HaarStatistics out;
  for (unsigned w = 0; w < threads; ++w) {
    a.merge(abs2[w]);
    f.merge(first[w]);
    out.max_defect = std::max(out.max_defect, defect[w]);
  }
  out.abs2_u11 = a.estimate(seed);
  out.u11 = f.estimate(seed);
  return out;
}

}  // namespace schurid
