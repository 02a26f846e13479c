#pragma once

// Haar-distributed unitary matrices and Monte Carlo estimates of the
// unitary-group integrals with Bessel-type series expansions.

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <random>

namespace schurid {

using ComplexMatrix = Eigen::MatrixXcd;
using Rng = std::mt19937_64;

/// Ginibre matrix, Householder QR, then column phases fixed so that R has a
/// positive real diagonal. The result is Haar on U(n).
ComplexMatrix haar_sample(std::size_t n, Rng& rng);

/// max |(U^* U - I)_{ij}|.
double unitarity_defect(const ComplexMatrix& u);

struct MCEstimate {
  std::complex<double> mean;
  /// Sample standard deviation of |x - mean| over sqrt(samples).
  double standard_error = 0;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
};

/// E_U[ det(AU)^s exp(tr(AU + B U^{-1})) ].
/// Worker w draws from a stream seeded with seed ^ w; partial statistics are
/// merged in worker order, so the estimate depends only on (seed, threads).
MCEstimate mc_integral_G(const ComplexMatrix& a, const ComplexMatrix& b, long s,
                         std::uint64_t samples, std::uint64_t seed, unsigned threads = 1);

/// E_{U,V}[ det(UAVB)^s exp(tr(UAVB + U^{-1} C V^{-1} D)) ] over independent Haar U, V.
MCEstimate mc_integral_K(const ComplexMatrix& a, const ComplexMatrix& b, const ComplexMatrix& c,
                         const ComplexMatrix& d, long s, std::uint64_t samples,
                         std::uint64_t seed, unsigned threads = 1);

struct HaarStatistics {
  MCEstimate abs2_u11;  // E|U_11|^2 = 1/n
  MCEstimate u11;       // E U_11 = 0
  double max_defect = 0;
};

HaarStatistics haar_statistics(std::size_t n, std::uint64_t samples, std::uint64_t seed,
                               unsigned threads = 1);

}  // namespace schurid
