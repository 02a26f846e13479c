#include "schurid/schur.hpp"

#include <functional>

#include "schurid/errors.hpp"
#include "schurid/linalg.hpp"

namespace schurid {

BigRational schur_evaluate(const Partition& lambda, std::span<const BigRational> z) {
  const std::size_t n = z.size();
  const ExponentVector k = shifted_parts(lambda, n);
  BigRational delta = 1;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (z[i] == z[j]) throw RepeatedPointError("schur_evaluate: evaluation points must be distinct");
      delta *= z[i] - z[j];
    }
  }
  Matrix<BigRational> alt(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      mpq_class p;
      mpz_pow_ui(p.get_num_mpz_t(), z[i].get_num_mpz_t(), static_cast<unsigned long>(k[j]));
      mpz_pow_ui(p.get_den_mpz_t(), z[i].get_den_mpz_t(), static_cast<unsigned long>(k[j]));
      alt(i, j) = p;
    }
  }
  return determinant(std::move(alt)) / delta;
}

BigInt schur_dimension(const Partition& lambda, std::size_t n) {
  const ExponentVector k = shifted_parts(lambda, n);
  BigInt d = vandermonde(k) / superfactorial(n);
  return d;
}

namespace {

// Fills lambda/mu row by row from the top, each row right to left, which is
// the reverse reading order, so the lattice condition can be checked as each
// entry is placed.
class LRSearch {
 public:
  LRSearch(const Partition& lambda, const Partition& mu, const Partition& nu)
      : lambda_(lambda), mu_(mu), nu_(nu), counts_(nu.length() + 1, 0) {
    grid_.resize(lambda.length());
    for (std::size_t i = 0; i < lambda.length(); ++i)
      grid_[i].assign(static_cast<std::size_t>(lambda[i]), 0);
  }

  void run(const std::function<void(const std::vector<std::vector<int>>&)>& found) {
    found_ = &found;
    place(0, lambda_.empty() ? 0 : lambda_[0] - 1);
  }

 private:
  void place(std::size_t row, int col) {
    // skip to the next cell of the skew shape
    while (row < lambda_.length() && col < mu_[row]) {
      ++row;
      if (row < lambda_.length()) col = lambda_[row] - 1;
    }
    if (row >= lambda_.length()) {
      (*found_)(grid_);
      return;
    }
    const auto c = static_cast<std::size_t>(col);
    int hi = static_cast<int>(nu_.length());
    if (col + 1 < lambda_[row]) hi = std::min(hi, grid_[row][c + 1]);  // rows weakly increase
    int lo = 1;
    if (row > 0 && col < lambda_[row - 1] && col >= mu_[row - 1]) lo = grid_[row - 1][c] + 1;
    for (int v = lo; v <= hi; ++v) {
      const auto vi = static_cast<std::size_t>(v);
      if (counts_[vi] + 1 > nu_[vi - 1]) continue;
      if (v > 1 && counts_[vi] + 1 > counts_[vi - 1]) continue;  // lattice word
      ++counts_[vi];
      grid_[row][c] = v;
      place(row, col - 1);
      grid_[row][c] = 0;
      --counts_[vi];
    }
  }

  const Partition& lambda_;
  const Partition& mu_;
  const Partition& nu_;
  std::vector<int> counts_;
  std::vector<std::vector<int>> grid_;
  const std::function<void(const std::vector<std::vector<int>>&)>* found_ = nullptr;
};

bool lr_admissible(const Partition& lambda, const Partition& mu, const Partition& nu) {
  return lambda.contains(mu) && lambda.contains(nu) && mu.size() + nu.size() == lambda.size();
}

}  // namespace

BigInt lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu) {
  if (!lr_admissible(lambda, mu, nu)) return 0;
  unsigned long count = 0;
  LRSearch search(lambda, mu, nu);
  search.run([&](const std::vector<std::vector<int>>&) { ++count; });
  return BigInt(count);
}

std::vector<LRTableauWitness> lr_tableaux(const Partition& lambda, const Partition& mu,
                                          const Partition& nu) {
  std::vector<LRTableauWitness> out;
  if (!lr_admissible(lambda, mu, nu)) return out;
  LRSearch search(lambda, mu, nu);
  search.run([&](const std::vector<std::vector<int>>& grid) {
    LRTableauWitness w{lambda, mu, {}};
    for (std::size_t i = 0; i < lambda.length(); ++i)
      w.rows.emplace_back(grid[i].begin() + mu[i], grid[i].end());
    out.push_back(std::move(w));
  });
  return out;
}

bool LRTableauWitness::is_valid(const Partition& content) const {
  if (!outer.contains(inner) || rows.size() != outer.length()) return false;
  auto at = [&](std::size_t i, int col) { return rows[i][static_cast<std::size_t>(col - inner[i])]; };
  std::vector<int> counts(content.length() + 2, 0);
  for (std::size_t i = 0; i < outer.length(); ++i) {
    if (static_cast<int>(rows[i].size()) != outer[i] - inner[i]) return false;
    for (int col = outer[i] - 1; col >= inner[i]; --col) {
      const int v = at(i, col);
      if (v < 1 || v > static_cast<int>(content.length())) return false;
      if (col + 1 < outer[i] && v > at(i, col + 1)) return false;
      if (i > 0 && col < outer[i - 1] && col >= inner[i - 1] && v <= at(i - 1, col)) return false;
      const auto vi = static_cast<std::size_t>(v);
      ++counts[vi];
      if (v > 1 && counts[vi] > counts[vi - 1]) return false;
    }
  }
  for (std::size_t v = 1; v <= content.length(); ++v)
    if (counts[v] != content[v - 1]) return false;
  return true;
}

BranchingTable branching_table(const Partition& lambda, std::size_t m, std::size_t n) {
  if (lambda.length() > m + n)
    throw LengthError("branching_table: " + lambda.to_string() + " has more than " +
                      std::to_string(m + n) + " parts");
  BranchingTable table;
  const std::vector<Partition> subs = subpartitions(lambda);
  for (const Partition& mu : subs) {
    if (mu.length() > m) continue;
    for (const Partition& nu : subs) {
      if (nu.length() > n || mu.size() + nu.size() != lambda.size()) continue;
      BigInt c = lr_coefficient(lambda, mu, nu);
      if (c != 0) table.emplace(std::make_pair(mu, nu), std::move(c));
    }
  }
  return table;
}

}  // namespace schurid
