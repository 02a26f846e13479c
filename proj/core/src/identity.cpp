#include "schurid/identity.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>

#include "schurid/errors.hpp"
#include "schurid/parallel.hpp"
#include "schurid/schur.hpp"

namespace schurid {

std::string to_string(const SParameter& s) {
  if (std::holds_alternative<SymbolicS>(s)) return "sym";
  return std::to_string(std::get<long>(s));
}

std::string to_string(const CoefficientValue& v) {
  if (const auto* q = std::get_if<BigRational>(&v)) return schurid::to_string(*q);
  return std::get<RationalFunction>(v).to_string();
}

bool coefficient_equal(const CoefficientValue& a, const CoefficientValue& b) {
  if (a.index() != b.index()) return false;
  if (const auto* q = std::get_if<BigRational>(&a)) return *q == std::get<BigRational>(b);
  return ratfun_equal(std::get<RationalFunction>(a), std::get<RationalFunction>(b));
}

namespace {

BigRational inverse_factorials(const std::vector<int>& k) {
  BigInt den = 1;
  for (int v : k) den *= factorial(static_cast<unsigned long>(v));
  return BigRational(BigInt(1), den);
}

using CrossTable = std::vector<std::pair<std::vector<int>, BigInt>>;

// Signed monomials of prod_{i<m<=j} (z_i - z_j), like terms combined.
CrossTable expand_cross(std::size_t m, std::size_t n) {
  std::map<std::vector<int>, BigInt> acc;
  acc[std::vector<int>(m + n, 0)] = 1;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = m; j < m + n; ++j) {
      std::map<std::vector<int>, BigInt> next;
      for (const auto& [e, c] : acc) {
        auto left = e;
        ++left[i];
        next[left] += c;
        auto right = e;
        ++right[j];
        next[right] -= c;
      }
      acc.clear();
      for (auto& [e, c] : next)
        if (c != 0) acc.emplace(e, c);
    }
  }
  return CrossTable(acc.begin(), acc.end());
}

const CrossTable& cross_table(std::size_t m, std::size_t n) {
  static std::mutex mu;
  static std::map<std::pair<std::size_t, std::size_t>, std::unique_ptr<const CrossTable>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{m, n}];
  if (!slot) slot = std::make_unique<const CrossTable>(expand_cross(m, n));
  return *slot;
}

BigInt block_delta(const std::vector<int>& l, std::size_t from, std::size_t to) {
  return vandermonde(std::vector<int>(l.begin() + static_cast<long>(from),
                                      l.begin() + static_cast<long>(to)));
}

// Delta(l_1..l_m) Delta(l_{m+1}..l_{m+n}) / prod l_i!
BigRational alternant_part(const std::vector<int>& l, std::size_t m) {
  return BigRational(block_delta(l, 0, m) * block_delta(l, m, l.size())) * inverse_factorials(l);
}

BigRational rhs_integer(const std::vector<int>& k, std::size_t m, std::size_t n, long s) {
  BigRational total = 0;
  std::vector<int> l(k.size());
  for (const auto& [e, sign] : cross_table(m, n)) {
    bool negative = false;
    for (std::size_t i = 0; i < k.size(); ++i) {
      l[i] = k[i] - e[i];
      negative |= l[i] < 0;
    }
    if (negative) continue;
    BigRational g = 1;
    for (int li : l) g *= reciprocal_gamma_int(li, s);
    if (g == 0) continue;
    // Every l_i >= s here, so every l_i + l_j - s + 1 >= 1.
    BigInt cross = 1;
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = m; j < m + n; ++j) cross *= l[i] + l[j] - s + 1;
    BigRational a = alternant_part(l, m);
    if (a == 0) continue;
    total += BigRational(sign) * a * g / BigRational(cross);
  }
  total.canonicalize();
  return total;
}

RationalFunction rhs_symbolic(const std::vector<int>& k, std::size_t m, std::size_t n) {
  RationalFunction total;
  std::vector<int> l(k.size());
  for (const auto& [e, sign] : cross_table(m, n)) {
    bool negative = false;
    for (std::size_t i = 0; i < k.size(); ++i) {
      l[i] = k[i] - e[i];
      negative |= l[i] < 0;
    }
    if (negative) continue;
    const BigRational a = alternant_part(l, m);
    if (a == 0) continue;
    Polynomial cross = Polynomial::constant(1);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = m; j < m + n; ++j)
        cross *= Polynomial::linear(BigRational(l[i] + l[j] + 1), -1);
    RationalFunction term(Polynomial::constant(BigRational(sign) * a), cross);
    for (std::size_t i = 0; i < k.size(); ++i)
      term *= gamma_ratio(static_cast<unsigned long>(k[i]), static_cast<unsigned long>(l[i]));
    total += term;
  }
  return total;
}

void check_length(const ExponentVector& k, std::size_t m, std::size_t n) {
  if (k.size() != m + n)
    throw LengthError("rhs_coefficient: exponent vector must have m + n entries");
}

// All k in N^len with sum <= degree, lexicographic.
std::vector<ExponentVector> exponent_vectors(std::size_t len, int degree) {
  std::vector<ExponentVector> out;
  std::vector<int> k(len, 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
    if (i == len) {
      out.emplace_back(k);
      return;
    }
    for (int v = 0; v <= left; ++v) {
      k[i] = v;
      rec(i + 1, left - v);
    }
    k[i] = 0;
  };
  rec(0, degree);
  return out;
}

template <class Check>
std::vector<Failure> run_sharded(std::size_t count, unsigned threads, Check&& check) {
  threads = std::max(1u, threads);
  std::vector<std::vector<Failure>> parts(threads);
  run_workers(threads, [&](unsigned w) {
    const auto [begin, end] = worker_range(count, threads, w);
    for (std::size_t i = begin; i < end; ++i) check(i, parts[w]);
  });
  std::vector<Failure> all;
  for (auto& p : parts) all.insert(all.end(), p.begin(), p.end());
  return all;
}

using Clock = std::chrono::steady_clock;

}  // namespace

CoefficientValue lhs_coefficient(const ExponentVector& k, const SParameter& s) {
  const BigRational base = BigRational(vandermonde(k)) * inverse_factorials(k.entries());
  if (std::holds_alternative<SymbolicS>(s)) return RationalFunction(base);
  BigRational v = base;
  for (int ki : k.entries()) v *= reciprocal_gamma_int(ki, std::get<long>(s));
  v.canonicalize();
  return v;
}

CoefficientValue rhs_coefficient(const ExponentVector& k, std::size_t m, std::size_t n,
                                 const SParameter& s) {
  check_length(k, m, n);
  if (std::holds_alternative<SymbolicS>(s)) return rhs_symbolic(k.entries(), m, n);
  return rhs_integer(k.entries(), m, n, std::get<long>(s));
}

VerificationReport verify_theorem1(std::size_t m, std::size_t n, const SParameter& s, int degree,
                                   unsigned threads) {
  const auto start = Clock::now();
  VerificationReport r;
  r.check = "theorem1";
  r.parameters = {{"m", std::to_string(m)},
                  {"n", std::to_string(n)},
                  {"s", to_string(s)},
                  {"degree", std::to_string(degree)}};
  const auto ks = exponent_vectors(m + n, degree);
  r.checked = ks.size();
  r.failures = run_sharded(ks.size(), threads, [&](std::size_t i, std::vector<Failure>& out) {
    const CoefficientValue lhs = lhs_coefficient(ks[i], s);
    const CoefficientValue rhs = rhs_coefficient(ks[i], m, n, s);
    if (!coefficient_equal(lhs, rhs)) out.push_back({ks[i].to_string(), to_string(lhs), to_string(rhs)});
  });
  r.elapsed = Clock::now() - start;
  return r;
}

VerificationReport verify_specialization(std::size_t m, std::size_t n, long s0, int degree,
                                         unsigned threads) {
  const auto start = Clock::now();
  VerificationReport r;
  r.check = "specialization";
  r.parameters = {{"m", std::to_string(m)},
                  {"n", std::to_string(n)},
                  {"s", std::to_string(s0)},
                  {"degree", std::to_string(degree)}};
  const auto ks = exponent_vectors(m + n, degree);
  std::vector<char> used(ks.size(), 0);
  r.failures = run_sharded(ks.size(), threads, [&](std::size_t i, std::vector<Failure>& out) {
    const auto sym = std::get<RationalFunction>(rhs_coefficient(ks[i], m, n, SymbolicS{}));
    const BigRational point(s0);
    if (sym.has_pole_at(point)) return;
    used[i] = 1;
    BigRational v = sym.evaluate(point);
    for (int ki : ks[i].entries()) v *= reciprocal_gamma_int(ki, s0);
    v.canonicalize();
    const auto direct = std::get<BigRational>(rhs_coefficient(ks[i], m, n, s0));
    const auto lhs = std::get<BigRational>(lhs_coefficient(ks[i], s0));
    if (v != direct || direct != lhs)
      out.push_back({ks[i].to_string(), schurid::to_string(v), schurid::to_string(direct)});
  });
  for (char u : used) r.checked += static_cast<std::uint64_t>(u);
  r.elapsed = Clock::now() - start;
  return r;
}

BigRational weight_a(const Partition& lambda, int s, std::size_t m, std::size_t n) {
  if (lambda.length() > m + n) throw LengthError("weight_a: length(lambda) > m + n");
  const BigInt den = hook_product(lambda) * hook_product(add_rectangle(lambda, s, m + n));
  return BigRational(BigInt(1), den);
}

BigRational weight_b_join(const Partition& mu, const Partition& nu, int s, std::size_t m,
                          std::size_t n) {
  const Partition box = Partition(std::vector<int>(m, static_cast<int>(n)));
  const BigInt den = hook_product(mu) * hook_product(add_rectangle(nu, s, n)) *
                     hook_product(join_shape(mu, nu, m, n, s));
  return make_rational(hook_product(box), den);
}

BigRational weight_b_product(const Partition& mu, const Partition& nu, int s, std::size_t m,
                             std::size_t n) {
  if (mu.length() > m) throw LengthError("weight_b: length(mu) > m");
  if (nu.length() > n) throw LengthError("weight_b: length(nu) > n");
  BigInt num = 1, den = hook_product(mu) * hook_product(nu) *
                        hook_product(add_rectangle(mu, s, m)) *
                        hook_product(add_rectangle(nu, s, n));
  const long mm = static_cast<long>(m), nn = static_cast<long>(n);
  for (long i = 1; i <= mm; ++i) {
    for (long j = 1; j <= nn; ++j) {
      num *= mm + nn - i - j + 1;
      den *= mu[static_cast<std::size_t>(i - 1)] + nu[static_cast<std::size_t>(j - 1)] + mm + nn -
             i - j + s + 1;
    }
  }
  return make_rational(num, den);
}

BigRational weight_b(const Partition& mu, const Partition& nu, int s, std::size_t m,
                     std::size_t n) {
  const BigRational join = weight_b_join(mu, nu, s, m, n);
  const BigRational product = weight_b_product(mu, nu, s, m, n);
  if (join != product)
    throw MismatchError("weight_b: closed forms disagree at mu=" + mu.to_string() +
                        " nu=" + nu.to_string() + ": " + to_string(join) + " vs " +
                        to_string(product));
  return join;
}

VerificationReport verify_corollary(std::size_t m, std::size_t n, int s, int weight,
                                    unsigned threads) {
  const auto start = Clock::now();
  VerificationReport r;
  r.check = "corollary";
  r.parameters = {{"m", std::to_string(m)},
                  {"n", std::to_string(n)},
                  {"s", std::to_string(s)},
                  {"weight", std::to_string(weight)}};
  // a(lambda) / dim(lambda, m+n) grouped by size.
  std::vector<std::vector<std::pair<Partition, BigRational>>> by_size(
      static_cast<std::size_t>(weight) + 1);
  for (int size = 0; size <= weight; ++size)
    for (const Partition& lambda : partitions_of(size, m + n))
      by_size[static_cast<std::size_t>(size)].emplace_back(
          lambda, weight_a(lambda, s, m, n) / BigRational(schur_dimension(lambda, m + n)));

  std::vector<std::pair<Partition, Partition>> pairs;
  for (int total = 0; total <= weight; ++total)
    for (int a = total; a >= 0; --a)
      for (const Partition& mu : partitions_of(a, m))
        for (const Partition& nu : partitions_of(total - a, n)) pairs.emplace_back(mu, nu);
  r.checked = pairs.size();

  r.failures = run_sharded(pairs.size(), threads, [&](std::size_t i, std::vector<Failure>& out) {
    const auto& [mu, nu] = pairs[i];
    const std::string key = mu.to_string() + "|" + nu.to_string();
    BigRational b;
    try {
      b = weight_b(mu, nu, s, m, n);
    } catch (const MismatchError&) {
      out.push_back({"forms " + key, to_string(weight_b_join(mu, nu, s, m, n)),
                     to_string(weight_b_product(mu, nu, s, m, n))});
      return;
    }
    const BigRational swapped = weight_b_join(nu, mu, s, n, m);
    if (swapped != b) out.push_back({"symmetry " + key, to_string(b), to_string(swapped)});

    BigRational lhs = 0;
    for (const auto& [lambda, a_over_dim] : by_size[static_cast<std::size_t>(mu.size() + nu.size())]) {
      if (!lambda.contains(mu) || !lambda.contains(nu)) continue;
      const BigInt c = lr_coefficient(lambda, mu, nu);
      if (c != 0) lhs += a_over_dim * BigRational(c);
    }
    const BigRational rhs =
        b / BigRational(schur_dimension(mu, m) * schur_dimension(nu, n));
    if (lhs != rhs) out.push_back({key, to_string(lhs), to_string(rhs)});
  });
  r.elapsed = Clock::now() - start;
  return r;
}

}  // namespace schurid
