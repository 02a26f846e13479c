#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "schurid/exact.hpp"
#include "schurid/partition.hpp"

namespace schurid {

/// A semistandard filling of lambda/mu whose reverse reading word is a
/// lattice word. rows[i] holds the entries of row i left to right, starting
/// at column mu_i.
struct LRTableauWitness {
  Partition outer;
  Partition inner;
  std::vector<std::vector<int>> rows;

  /// Semistandard, lattice reverse reading word, content equal to `content`.
  bool is_valid(const Partition& content) const;
};

/// s_lambda(z) as det(z_i^{k_j}) / Delta(z) with k = shifted_parts(lambda, |z|).
/// Throws LengthError if length(lambda) > |z| and RepeatedPointError if z has
/// duplicates.
BigRational schur_evaluate(const Partition& lambda, std::span<const BigRational> z);

/// s_lambda(1^n) = Delta(shifted_parts(lambda, n)) / C_n.
BigInt schur_dimension(const Partition& lambda, std::size_t n);

/// c^lambda_{mu nu} by backtracking over lattice-word fillings of lambda/mu.
BigInt lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu);

/// Every witness counted by lr_coefficient, in search order.
std::vector<LRTableauWitness> lr_tableaux(const Partition& lambda, const Partition& mu,
                                          const Partition& nu);

using BranchingTable = std::map<std::pair<Partition, Partition>, BigInt>;

/// Nonzero c^lambda_{mu nu} over length(mu) <= m, length(nu) <= n.
/// Throws LengthError if length(lambda) > m + n.
BranchingTable branching_table(const Partition& lambda, std::size_t m, std::size_t n);

}  // namespace schurid
