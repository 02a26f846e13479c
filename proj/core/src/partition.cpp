#include "schurid/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "schurid/errors.hpp"

namespace schurid {

namespace {

void validate_parts(const std::vector<int>& parts) {
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] <= 0) throw std::invalid_argument("Partition: parts must be positive");
    if (i > 0 && parts[i] > parts[i - 1])
      throw std::invalid_argument("Partition: parts must be weakly decreasing");
  }
}

std::string bracketed(const std::vector<int>& v) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ',';
    os << v[i];
  }
  os << ']';
  return os.str();
}

}  // namespace

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) { validate_parts(parts_); }

Partition Partition::from_padded(std::vector<int> parts) {
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  return Partition(std::move(parts));
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

bool Partition::contains(const Partition& other) const {
  if (other.length() > length()) return false;
  for (std::size_t i = 0; i < other.length(); ++i)
    if (other.parts_[i] > parts_[i]) return false;
  return true;
}

std::string Partition::to_string() const { return bracketed(parts_); }

ExponentVector::ExponentVector(std::initializer_list<int> entries)
    : ExponentVector(std::vector<int>(entries)) {}

ExponentVector::ExponentVector(std::vector<int> entries) : entries_(std::move(entries)) {
  for (int e : entries_)
    if (e < 0) throw std::invalid_argument("ExponentVector: entries must be nonnegative");
}

int ExponentVector::total() const { return std::accumulate(entries_.begin(), entries_.end(), 0); }

std::string ExponentVector::to_string() const { return bracketed(entries_); }

BigInt hook_product(const Partition& lambda) {
  const Partition cols = conjugate(lambda);
  BigInt h = 1;
  for (std::size_t i = 0; i < lambda.length(); ++i) {
    for (int j = 0; j < lambda[i]; ++j) {
      const int arm = lambda[i] - j - 1;
      const int leg = cols[static_cast<std::size_t>(j)] - static_cast<int>(i) - 1;
      h *= arm + leg + 1;
    }
  }
  return h;
}

ExponentVector shifted_parts(const Partition& lambda, std::size_t n) {
  if (lambda.length() > n)
    throw LengthError("shifted_parts: partition " + lambda.to_string() + " has more than " +
                      std::to_string(n) + " parts");
  std::vector<int> k(n);
  for (std::size_t i = 0; i < n; ++i) k[i] = lambda[i] + static_cast<int>(n - 1 - i);
  return ExponentVector(std::move(k));
}

Partition conjugate(const Partition& lambda) {
  if (lambda.empty()) return {};
  std::vector<int> c(static_cast<std::size_t>(lambda[0]), 0);
  for (int p : lambda.parts())
    for (int j = 0; j < p; ++j) ++c[static_cast<std::size_t>(j)];
  return Partition(std::move(c));
}

Partition add_rectangle(const Partition& lambda, int s, std::size_t m) {
  if (lambda.length() > m)
    throw LengthError("add_rectangle: partition " + lambda.to_string() + " has more than " +
                      std::to_string(m) + " parts");
  std::vector<int> r(m);
  for (std::size_t i = 0; i < m; ++i) {
    r[i] = lambda[i] + s;
    if (r[i] < 0)
      throw ContainmentError("add_rectangle: " + lambda.to_string() + " does not contain (" +
                             std::to_string(-s) + "^" + std::to_string(m) + ")");
  }
  return Partition::from_padded(std::move(r));
}

Partition union_append(const Partition& lambda, const Partition& mu) {
  if (lambda.empty()) return mu;
  if (mu.empty()) return lambda;
  if (mu[0] > lambda.parts().back())
    throw OrderError("union_append: " + mu.to_string() + " cannot follow " + lambda.to_string());
  std::vector<int> r = lambda.parts();
  r.insert(r.end(), mu.parts().begin(), mu.parts().end());
  return Partition(std::move(r));
}

Partition join_shape(const Partition& mu, const Partition& nu, std::size_t m, std::size_t n, int s) {
  if (nu.length() > n)
    throw LengthError("join_shape: " + nu.to_string() + " has more than " + std::to_string(n) +
                      " parts");
  const Partition top = add_rectangle(add_rectangle(mu, s, m), static_cast<int>(n), m);
  return union_append(top, conjugate(nu));
}

BigInt vandermonde(const std::vector<int>& k) {
  BigInt d = 1;
  for (std::size_t i = 0; i < k.size(); ++i)
    for (std::size_t j = i + 1; j < k.size(); ++j) d *= k[i] - k[j];
  return d;
}

BigInt superfactorial(std::size_t n) {
  BigInt c = 1;
  for (std::size_t i = 0; i < n; ++i) c *= factorial(i);
  return c;
}

namespace {

void partitions_rec(int remaining, int max_part, std::size_t slots, std::vector<int>& cur,
                    const std::function<void(const Partition&)>& visit) {
  if (remaining == 0) {
    visit(Partition(cur));
    return;
  }
  if (slots == 0) return;
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(remaining - p, p, slots - 1, cur, visit);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int size, std::size_t max_length) {
  std::vector<Partition> out;
  if (size < 0) return out;
  std::vector<int> cur;
  partitions_rec(size, size, max_length, cur, [&](const Partition& p) { out.push_back(p); });
  return out;
}

void for_each_partition(int max_size, std::size_t max_length,
                        const std::function<void(const Partition&)>& visit) {
  std::vector<int> cur;
  for (int size = 0; size <= max_size; ++size) partitions_rec(size, size, max_length, cur, visit);
}

std::vector<Partition> enumerate_partitions(int max_size, std::size_t max_length) {
  std::vector<Partition> out;
  for_each_partition(max_size, max_length, [&](const Partition& p) { out.push_back(p); });
  return out;
}

std::vector<Partition> subpartitions(const Partition& lambda) {
  std::vector<Partition> out;
  std::vector<int> cur;
  const std::function<void(std::size_t, int)> rec = [&](std::size_t row, int cap) {
    out.push_back(Partition(cur));
    if (row >= lambda.length()) return;
    for (int p = 1; p <= std::min(cap, lambda[row]); ++p) {
      cur.push_back(p);
      rec(row + 1, p);
      cur.pop_back();
    }
  };
  rec(0, lambda.empty() ? 0 : lambda[0]);
  return out;
}

}  // namespace schurid
