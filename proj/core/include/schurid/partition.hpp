#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

#include "schurid/exact.hpp"

namespace schurid {

/// Integer partition stored without trailing zeros. Parts past the stored
/// length read as zero, so "length <= m" contexts pad implicitly.
class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> parts);
  /// Throws std::invalid_argument unless parts are positive and weakly decreasing.
  explicit Partition(std::vector<int> parts);
  /// Accepts trailing zeros and strips them.
  static Partition from_padded(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  /// Zero-based row access; rows past length() are 0.
  int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }
  std::size_t length() const { return parts_.size(); }
  int size() const;
  bool empty() const { return parts_.empty(); }
  /// True when every row of other fits inside this diagram.
  bool contains(const Partition& other) const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

  /// "[7,6,2,2,1,1]", with "[]" for the empty partition.
  std::string to_string() const;

 private:
  std::vector<int> parts_;
};

/// Multi-index k = (k_1, ..., k_N) of nonnegative integers, not necessarily monotone.
class ExponentVector {
 public:
  ExponentVector() = default;
  ExponentVector(std::initializer_list<int> entries);
  explicit ExponentVector(std::vector<int> entries);

  const std::vector<int>& entries() const { return entries_; }
  int operator[](std::size_t i) const { return entries_[i]; }
  std::size_t size() const { return entries_.size(); }
  int total() const;

  friend bool operator==(const ExponentVector&, const ExponentVector&) = default;
  friend auto operator<=>(const ExponentVector&, const ExponentVector&) = default;

  std::string to_string() const;

 private:
  std::vector<int> entries_;
};

/// Product of hook lengths, counted from arms and legs box by box.
BigInt hook_product(const Partition& lambda);

/// (lambda_1 + n - 1, lambda_2 + n - 2, ..., lambda_n). Throws LengthError if length > n.
ExponentVector shifted_parts(const Partition& lambda, std::size_t n);

Partition conjugate(const Partition& lambda);

/// (lambda_1 + s, ..., lambda_m + s) with zeros stripped. For s < 0 this removes
/// the rectangle ((-s)^m) and requires lambda to contain it.
Partition add_rectangle(const Partition& lambda, int s, std::size_t m);

/// Concatenation of the part lists; requires mu_1 <= last part of lambda.
Partition union_append(const Partition& lambda, const Partition& mu);

/// (mu + (s^m) + (n^m)) appended with the conjugate of nu.
Partition join_shape(const Partition& mu, const Partition& nu, std::size_t m, std::size_t n, int s);

/// prod_{i<j} (k_i - k_j).
BigInt vandermonde(const std::vector<int>& k);
inline BigInt vandermonde(const ExponentVector& k) { return vandermonde(k.entries()); }

/// C_n = prod_{i=0}^{n-1} i!.
BigInt superfactorial(std::size_t n);

/// Partitions of exactly `size` with at most `max_length` parts, in
/// decreasing lexicographic order.
std::vector<Partition> partitions_of(int size, std::size_t max_length);

/// Every partition with size <= max_size and length <= max_length exactly
/// once: ascending size, decreasing lexicographic order within a size.
std::vector<Partition> enumerate_partitions(int max_size, std::size_t max_length);

/// Streaming form of enumerate_partitions, same order.
void for_each_partition(int max_size, std::size_t max_length,
                        const std::function<void(const Partition&)>& visit);

/// All partitions contained in lambda (including the empty one and lambda).
std::vector<Partition> subpartitions(const Partition& lambda);

}  // namespace schurid
