#pragma once

// Exact samplers for the hook-product measures and the Poissonized
// Plancherel measure, with frequency checks against closed-form masses.

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "schurid/exact.hpp"
#include "schurid/partition.hpp"

namespace schurid {

using SampleRng = std::mt19937_64;

/// Shape of the RSK row-insertion tableau of a word.
Partition rsk_shape(const std::vector<int>& word);

struct SampleRecord {
  std::uint64_t seed = 0;
  std::variant<Partition, std::pair<Partition, Partition>> draw;
  std::string method;
};

/// Poisson(alpha) letters, a uniform permutation, then its RSK shape.
Partition draw_poissonized_plancherel(double alpha, SampleRng& rng);
SampleRecord sample_poissonized_plancherel(const BigRational& alpha, std::uint64_t seed);

/// Inverse-CDF sampler for P_{m,n,s} over sizes <= N. N is chosen so the
/// omitted mass bound is at most 1e-13 of the retained mass; a uniform landing
/// in the omitted mass retries with N doubled.
class PSampler {
 public:
  PSampler(std::size_t m, std::size_t n, int s);
  Partition draw(SampleRng& rng);

 private:
  struct Level {
    int cutoff;
    std::vector<Partition> support;
    std::vector<double> cumulative;  // exact partial sums / (sum + tail), rounded
    double accept;                   // sum / (sum + tail)
  };
  const Level& level(std::size_t i);

  std::size_t m_, n_;
  int s_;
  std::vector<Level> levels_;
};

/// (mu, nu) given lambda with mass c^lambda_{mu nu} dim(mu, m) dim(nu, n) / dim(lambda, m+n).
std::vector<std::pair<std::pair<Partition, Partition>, BigRational>> branching_distribution(
    const Partition& lambda, std::size_t m, std::size_t n);

class QSampler {
 public:
  QSampler(std::size_t m, std::size_t n, int s);
  std::pair<Partition, Partition> draw(SampleRng& rng);

 private:
  struct Branch {
    std::vector<std::pair<Partition, Partition>> outcomes;
    std::vector<double> cumulative;
  };
  std::size_t m_, n_;
  PSampler p_;
  std::map<Partition, Branch> branches_;
};

SampleRecord sample_P(std::size_t m, std::size_t n, int s, std::uint64_t seed);
SampleRecord sample_Q_branching(std::size_t m, std::size_t n, int s, std::uint64_t seed);

struct ChiSquareResult {
  double statistic = 0;
  int degrees_of_freedom = 0;
  double p_value = 0;
};

/// Pearson statistic of counts against probabilities summing to 1.
ChiSquareResult chi_square_test(const std::vector<std::uint64_t>& observed,
                                const std::vector<double>& probabilities);

struct FrequencyCell {
  std::string label;
  std::uint64_t observed = 0;
  double expected_probability = 0;
  /// (observed/draws - p) / sqrt(p (1 - p) / draws).
  double z_score = 0;
};

struct SamplerCheck {
  std::string measure;
  std::uint64_t draws = 0;
  std::uint64_t seed = 0;
  std::vector<FrequencyCell> cells;
  std::optional<ChiSquareResult> chi_square;
  bool passed = false;
};

/// Cells: every partition of size <= max_size plus one cell for the rest.
/// Passes when the chi-square p-value exceeds 0.001.
SamplerCheck plancherel_goodness_of_fit(const BigRational& alpha, int max_size,
                                        std::uint64_t draws, std::uint64_t seed,
                                        unsigned threads = 1);

/// Cells: partitions of size <= max_size; passes when every |z| <= 3.
SamplerCheck p_frequencies(std::size_t m, std::size_t n, int s, int max_size,
                           std::uint64_t draws, std::uint64_t seed, unsigned threads = 1);

/// Cells: pairs with |mu| + |nu| <= max_total; passes when every |z| <= 3.
SamplerCheck q_frequencies(std::size_t m, std::size_t n, int s, int max_total,
                           std::uint64_t draws, std::uint64_t seed, unsigned threads = 1);

}  // namespace schurid
