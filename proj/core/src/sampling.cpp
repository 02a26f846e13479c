#include "schurid/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include <boost/math/distributions/chi_squared.hpp>

#include "schurid/measures.hpp"
#include "schurid/parallel.hpp"
#include "schurid/schur.hpp"

namespace schurid {

Partition rsk_shape(const std::vector<int>& word) {
  std::vector<std::vector<int>> rows;
  for (int x : word) {
    std::size_t r = 0;
    while (true) {
      if (r == rows.size()) {
        rows.push_back({x});
        break;
      }
      auto& row = rows[r];
      auto it = std::upper_bound(row.begin(), row.end(), x);
      if (it == row.end()) {
        row.push_back(x);
        break;
      }
      std::swap(*it, x);
      ++r;
    }
  }
  std::vector<int> shape;
  for (const auto& row : rows) shape.push_back(static_cast<int>(row.size()));
  return Partition(std::move(shape));
}

Partition draw_poissonized_plancherel(double alpha, SampleRng& rng) {
  if (!(alpha >= 0)) throw std::invalid_argument("poissonized plancherel: alpha must be nonnegative");
  if (alpha == 0) return {};
  std::poisson_distribution<int> poisson(alpha);
  std::vector<int> perm(static_cast<std::size_t>(poisson(rng)));
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return rsk_shape(perm);
}

SampleRecord sample_poissonized_plancherel(const BigRational& alpha, std::uint64_t seed) {
  SampleRng rng(seed);
  return {seed, draw_poissonized_plancherel(alpha.get_d(), rng), "poisson-rsk"};
}

namespace {

std::vector<double> normalized_cumulative(const std::vector<BigRational>& weights,
                                          const BigRational& total) {
  std::vector<double> cum;
  cum.reserve(weights.size());
  BigRational acc = 0;
  for (const BigRational& w : weights) {
    acc += w;
    cum.push_back(BigRational(acc / total).get_d());
  }
  return cum;
}

std::size_t pick(const std::vector<double>& cum, double u) {
  const auto it = std::upper_bound(cum.begin(), cum.end(), u);
  const auto idx = static_cast<std::size_t>(it - cum.begin());
  return std::min(idx, cum.size() - 1);
}

constexpr int kMaxCutoff = 400;

}  // namespace

PSampler::PSampler(std::size_t m, std::size_t n, int s) : m_(m), n_(n), s_(s) {
  if (s < 0) throw std::invalid_argument("PSampler: s must be nonnegative");
}

const PSampler::Level& PSampler::level(std::size_t i) {
  while (levels_.size() <= i) {
    int cutoff;
    if (levels_.empty()) {
      // Smallest N whose omitted-mass bound is <= 1e-13 of the retained mass.
      const BigRational eps(BigInt(1), BigInt("10000000000000"));
      cutoff = 1;
      while (factorial_tail_bound(cutoff) > eps * normalization_Z_truncated(m_, n_, s_, cutoff).partial_sum) {
        if (++cutoff > kMaxCutoff) throw std::runtime_error("PSampler: size cutoff too large");
      }
    } else {
      cutoff = 2 * levels_.back().cutoff;
    }
    Level lv;
    lv.cutoff = cutoff;
    lv.support = enumerate_partitions(cutoff, m_ + n_);
    std::vector<BigRational> weights;
    weights.reserve(lv.support.size());
    BigRational sum = 0;
    for (const Partition& p : lv.support) {
      weights.push_back(weight_P(p, m_, n_, s_));
      sum += weights.back();
    }
    const BigRational upper = sum + factorial_tail_bound(cutoff);
    lv.cumulative = normalized_cumulative(weights, upper);
    lv.accept = BigRational(sum / upper).get_d();
    levels_.push_back(std::move(lv));
  }
  return levels_[i];
}

Partition PSampler::draw(SampleRng& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (std::size_t i = 0;; ++i) {
    const Level& lv = level(i);
    const double u = unit(rng);
    if (u < lv.accept) return lv.support[pick(lv.cumulative, u)];
  }
}

std::vector<std::pair<std::pair<Partition, Partition>, BigRational>> branching_distribution(
    const Partition& lambda, std::size_t m, std::size_t n) {
  const BigInt dim = schur_dimension(lambda, m + n);
  std::vector<std::pair<std::pair<Partition, Partition>, BigRational>> out;
  for (const auto& [pair, c] : branching_table(lambda, m, n)) {
    BigRational mass(c * schur_dimension(pair.first, m) * schur_dimension(pair.second, n), dim);
    mass.canonicalize();
    out.emplace_back(pair, mass);
  }
  return out;
}

QSampler::QSampler(std::size_t m, std::size_t n, int s) : m_(m), n_(n), p_(m, n, s) {}

std::pair<Partition, Partition> QSampler::draw(SampleRng& rng) {
  const Partition lambda = p_.draw(rng);
  auto it = branches_.find(lambda);
  if (it == branches_.end()) {
    Branch b;
    std::vector<BigRational> masses;
    for (auto& [pair, mass] : branching_distribution(lambda, m_, n_)) {
      b.outcomes.push_back(pair);
      masses.push_back(mass);
    }
    b.cumulative = normalized_cumulative(masses, BigRational(1));
    it = branches_.emplace(lambda, std::move(b)).first;
  }
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  return it->second.outcomes[pick(it->second.cumulative, unit(rng))];
}

SampleRecord sample_P(std::size_t m, std::size_t n, int s, std::uint64_t seed) {
  SampleRng rng(seed);
  PSampler sampler(m, n, s);
  return {seed, sampler.draw(rng), "inverse-cdf"};
}

SampleRecord sample_Q_branching(std::size_t m, std::size_t n, int s, std::uint64_t seed) {
  SampleRng rng(seed);
  QSampler sampler(m, n, s);
  return {seed, sampler.draw(rng), "branching"};
}

ChiSquareResult chi_square_test(const std::vector<std::uint64_t>& observed,
                                const std::vector<double>& probabilities) {
  if (observed.size() != probabilities.size() || observed.size() < 2)
    throw std::invalid_argument("chi_square_test: need matching cells, at least two");
  const double total = static_cast<double>(std::accumulate(observed.begin(), observed.end(), std::uint64_t{0}));
  ChiSquareResult r;
  for (std::size_t i = 0; i < observed.size(); ++i) {
    const double e = total * probabilities[i];
    if (e <= 0) throw std::invalid_argument("chi_square_test: nonpositive expected count");
    const double d = static_cast<double>(observed[i]) - e;
    r.statistic += d * d / e;
  }
  r.degrees_of_freedom = static_cast<int>(observed.size()) - 1;
  const boost::math::chi_squared dist(r.degrees_of_freedom);
  r.p_value = boost::math::cdf(boost::math::complement(dist, r.statistic));
  return r;
}

namespace {

double z_score(std::uint64_t observed, std::uint64_t draws, double p) {
  const double n = static_cast<double>(draws);
  const double freq = static_cast<double>(observed) / n;
  const double var = p * (1 - p) / n;
  if (var <= 0) return freq == p ? 0.0 : INFINITY;
  return (freq - p) / std::sqrt(var);
}

// Counts draws into cells by key; keys outside the map go to `overflow`.
template <class Key, class Draw>
std::vector<std::uint64_t> tally(const std::map<Key, std::size_t>& index, std::size_t cells,
                                 std::uint64_t draws, std::uint64_t seed, unsigned threads,
                                 Draw&& make_drawer) {
  threads = std::max(1u, threads);
  std::vector<std::vector<std::uint64_t>> parts(threads, std::vector<std::uint64_t>(cells, 0));
  run_workers(threads, [&](unsigned w) {
    SampleRng rng(seed ^ static_cast<std::uint64_t>(w));
    auto drawer = make_drawer();
    const auto [begin, end] = worker_range(static_cast<std::size_t>(draws), threads, w);
    for (std::size_t i = begin; i < end; ++i) {
      const auto it = index.find(drawer(rng));
      parts[w][it == index.end() ? cells - 1 : it->second] += 1;
    }
  });
  std::vector<std::uint64_t> counts(cells, 0);
  for (const auto& p : parts)
    for (std::size_t c = 0; c < cells; ++c) counts[c] += p[c];
  return counts;
}

void fill_cells(SamplerCheck& check, const std::vector<std::string>& labels,
                const std::vector<std::uint64_t>& counts, const std::vector<double>& probs) {
  for (std::size_t i = 0; i < labels.size(); ++i)
    check.cells.push_back({labels[i], counts[i], probs[i], z_score(counts[i], check.draws, probs[i])});
}

bool all_within_three_sigma(const SamplerCheck& check, std::size_t cells) {
  for (std::size_t i = 0; i < cells; ++i)
    if (!(std::abs(check.cells[i].z_score) <= 3.0)) return false;
  return true;
}

}  // namespace

SamplerCheck plancherel_goodness_of_fit(const BigRational& alpha, int max_size,
                                        std::uint64_t draws, std::uint64_t seed,
                                        unsigned threads) {
  const double a = alpha.get_d();
  std::map<Partition, std::size_t> index;
  std::vector<std::string> labels;
  std::vector<double> probs;
  double used = 0;
  for (const Partition& p : enumerate_partitions(max_size, static_cast<std::size_t>(std::max(max_size, 0)))) {
    index.emplace(p, labels.size());
    labels.push_back(p.to_string());
    const double h = static_cast<double>(hook_product(p).get_d());
    probs.push_back(std::exp(-a) * std::pow(a, p.size()) / (h * h));
    used += probs.back();
  }
  labels.push_back("other");
  probs.push_back(std::max(0.0, 1.0 - used));
  const auto counts = tally(index, labels.size(), draws, seed, threads, [&] {
    return [a](SampleRng& rng) { return draw_poissonized_plancherel(a, rng); };
  });
  SamplerCheck check;
  check.measure = "poissonized-plancherel";
  check.draws = draws;
  check.seed = seed;
  fill_cells(check, labels, counts, probs);
  check.chi_square = chi_square_test(counts, probs);
  check.passed = check.chi_square->p_value > 0.001;
  return check;
}

SamplerCheck p_frequencies(std::size_t m, std::size_t n, int s, int max_size,
                           std::uint64_t draws, std::uint64_t seed, unsigned threads) {
  const BigRational z = normalization_Z_truncated(m, n, s, 40).partial_sum;
  std::map<Partition, std::size_t> index;
  std::vector<std::string> labels;
  std::vector<double> probs;
  for (const Partition& p : enumerate_partitions(max_size, m + n)) {
    index.emplace(p, labels.size());
    labels.push_back(p.to_string());
    probs.push_back(BigRational(weight_P(p, m, n, s) / z).get_d());
  }
  const std::size_t named = labels.size();
  labels.push_back("other");
  probs.push_back(std::max(0.0, 1.0 - std::accumulate(probs.begin(), probs.end(), 0.0)));
  const auto counts = tally(index, labels.size(), draws, seed, threads, [&] {
    return [sampler = PSampler(m, n, s)](SampleRng& rng) mutable { return sampler.draw(rng); };
  });
  SamplerCheck check;
  check.measure = "P";
  check.draws = draws;
  check.seed = seed;
  fill_cells(check, labels, counts, probs);
  check.passed = all_within_three_sigma(check, named);
  return check;
}

SamplerCheck q_frequencies(std::size_t m, std::size_t n, int s, int max_total,
                           std::uint64_t draws, std::uint64_t seed, unsigned threads) {
  const BigRational z = normalization_Z_truncated(m, n, s, 40).partial_sum;
  using Key = std::pair<Partition, Partition>;
  std::map<Key, std::size_t> index;
  std::vector<std::string> labels;
  std::vector<double> probs;
  for (int total = 0; total <= max_total; ++total)
    for (int a = total; a >= 0; --a)
      for (const Partition& mu : partitions_of(a, m))
        for (const Partition& nu : partitions_of(total - a, n)) {
          index.emplace(Key{mu, nu}, labels.size());
          labels.push_back(mu.to_string() + "|" + nu.to_string());
          probs.push_back(BigRational(weight_Q(mu, nu, m, n, s) / z).get_d());
        }
  const std::size_t named = labels.size();
  labels.push_back("other");
  probs.push_back(std::max(0.0, 1.0 - std::accumulate(probs.begin(), probs.end(), 0.0)));
  const auto counts = tally(index, labels.size(), draws, seed, threads, [&] {
    return [sampler = QSampler(m, n, s)](SampleRng& rng) mutable { return sampler.draw(rng); };
  });
  SamplerCheck check;
  check.measure = "Q";
  check.draws = draws;
  check.seed = seed;
  fill_cells(check, labels, counts, probs);
  check.passed = all_within_three_sigma(check, named);
  return check;
}

}  // namespace schurid
