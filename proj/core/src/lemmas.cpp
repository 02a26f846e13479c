#include <algorithm>
#include <chrono>
#include <random>
#include <sstream>

#include "schurid/errors.hpp"
#include "schurid/identity.hpp"

namespace schurid {

namespace {

BigInt vandermonde_long(const std::vector<long>& v) {
  BigInt d = 1;
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j) d *= v[i] - v[j];
  return d;
}

bool strictly_decreasing(const std::vector<long>& v) {
  for (std::size_t i = 1; i < v.size(); ++i)
    if (v[i - 1] <= v[i]) return false;
  return true;
}

std::string join_longs(const std::vector<long>& v) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ']';
  return os.str();
}

// Distinct values from [0, hi], sorted decreasing.
std::vector<long> distinct_decreasing(std::size_t count, long hi, std::mt19937_64& rng) {
  std::vector<long> pool(static_cast<std::size_t>(hi) + 1);
  for (long i = 0; i <= hi; ++i) pool[static_cast<std::size_t>(i)] = i;
  std::shuffle(pool.begin(), pool.end(), rng);
  pool.resize(count);
  std::sort(pool.rbegin(), pool.rend());
  return pool;
}

}  // namespace

bool cauchy_determinant_check(const std::vector<long>& k, const std::vector<long>& l, long s) {
  const std::size_t m = k.size(), n = l.size();
  if (m > n) throw DimensionMismatchError("cauchy_determinant_check: need length(k) <= length(l)");
  if (!strictly_decreasing(k) || !strictly_decreasing(l))
    throw std::invalid_argument("cauchy_determinant_check: k and l must be strictly decreasing");
  BigInt denominator = 1;
  Matrix<BigRational> a(n, n);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const long d = k[i] + l[j] - s + 1;
      if (d == 0)
        throw SingularDenominatorError("cauchy_determinant_check: k_i + l_j - s + 1 = 0");
      a(i, j) = make_rational(1, d);
      denominator *= d;
    }
  }
  for (std::size_t r = m; r < n; ++r) {
    for (std::size_t j = 0; j < n; ++j) {
      BigInt p;
      mpz_pow_ui(p.get_mpz_t(), BigInt(l[j]).get_mpz_t(), r - m);
      a(r, j) = BigRational(p);
    }
  }
  const std::size_t d = n - m;
  const bool odd = ((m * d) + d * (d - 1) / 2) % 2 == 1;
  BigRational closed = make_rational(vandermonde_long(k) * vandermonde_long(l), denominator);
  if (odd) closed = -closed;
  return determinant(std::move(a)) == closed;
}

bool andreief_check(const Matrix<BigRational>& f, const Matrix<BigRational>& g,
                    const std::vector<BigRational>& w, const Matrix<BigRational>& c) {
  const std::size_t m = f.rows(), n = g.rows(), p = w.size();
  if (m > n || f.cols() != p || g.cols() != p || c.rows() != n || c.cols() != n - m)
    throw DimensionMismatchError("andreief_check: inconsistent shapes");

  BigRational lhs = 0;
  std::vector<std::size_t> x(m, 0);
  while (true) {
    BigRational weight = 1;
    for (std::size_t j = 0; j < m; ++j) weight *= w[x[j]];
    if (weight != 0) {
      Matrix<BigRational> fx(m, m), gx(n, n);
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) fx(i, j) = f(i, x[j]);
      for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t j = 0; j < m; ++j) gx(r, j) = g(r, x[j]);
        for (std::size_t t = 0; t < n - m; ++t) gx(r, m + t) = c(r, t);
      }
      lhs += weight * determinant(std::move(fx)) * determinant(std::move(gx));
    }
    std::size_t i = 0;
    while (i < m && ++x[i] == p) x[i++] = 0;
    if (i == m) break;
  }

  Matrix<BigRational> moments(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t col = 0; col < m; ++col) {
      BigRational acc = 0;
      for (std::size_t y = 0; y < p; ++y) acc += w[y] * f(col, y) * g(r, y);
      moments(r, col) = acc;
    }
    for (std::size_t t = 0; t < n - m; ++t) moments(r, m + t) = c(r, t);
  }
  const BigRational rhs = BigRational(factorial(m)) * determinant(std::move(moments));
  return lhs == rhs;
}

VerificationReport verify_cauchy_battery(int instances, std::uint64_t seed) {
  const auto start = std::chrono::steady_clock::now();
  VerificationReport r;
  r.check = "cauchy-determinant";
  r.parameters = {{"instances", std::to_string(instances)}, {"seed", std::to_string(seed)}};
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> size(1, 4);
  std::uniform_int_distribution<long> sdist(0, 2);
  for (int t = 0; t < instances; ++t) {
    std::size_t n = size(rng), m = size(rng);
    if (m > n) std::swap(m, n);
    const long s = sdist(rng);
    std::vector<long> k, l;
    bool singular = true;
    while (singular) {
      k = distinct_decreasing(m, 12, rng);
      l = distinct_decreasing(n, 12, rng);
      singular = false;
      for (long ki : k)
        for (long lj : l) singular |= ki + lj - s + 1 == 0;
    }
    ++r.checked;
    if (!cauchy_determinant_check(k, l, s))
      r.failures.push_back({"k=" + join_longs(k) + " l=" + join_longs(l) + " s=" + std::to_string(s),
                            "det", "closed form"});
  }
  r.elapsed = std::chrono::steady_clock::now() - start;
  return r;
}

VerificationReport verify_andreief_battery(int instances, std::uint64_t seed) {
  const auto start = std::chrono::steady_clock::now();
  VerificationReport r;
  r.check = "andreief";
  r.parameters = {{"instances", std::to_string(instances)}, {"seed", std::to_string(seed)}};
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> size(1, 3), points(1, 4);
  std::uniform_int_distribution<long> entry(-6, 6), wnum(1, 9), wden(1, 4);
  auto random_matrix = [&](std::size_t rows, std::size_t cols) {
    Matrix<BigRational> a(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) a(i, j) = BigRational(entry(rng));
    return a;
  };
  for (int t = 0; t < instances; ++t) {
    std::size_t n = size(rng), m = size(rng);
    if (m > n) std::swap(m, n);
    const std::size_t p = points(rng);
    const Matrix<BigRational> f = random_matrix(m, p), g = random_matrix(n, p),
                              c = random_matrix(n, n - m);
    std::vector<BigRational> w;
    for (std::size_t x = 0; x < p; ++x) w.push_back(make_rational(wnum(rng), wden(rng)));
    ++r.checked;
    if (!andreief_check(f, g, w, c))
      r.failures.push_back({"instance " + std::to_string(t) + " m=" + std::to_string(m) +
                                " n=" + std::to_string(n) + " p=" + std::to_string(p),
                            "sum", "m! det"});
  }
  r.elapsed = std::chrono::steady_clock::now() - start;
  return r;
}

}  // namespace schurid
