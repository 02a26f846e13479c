#pragma once

// Rigorous-bound evaluation of modified Bessel functions, the Bessel
// determinant formula over U(m|n), and truncated unitary-integral series.

#include <cstddef>
#include <span>
#include <vector>

#include "schurid/linalg.hpp"
#include "schurid/tracked_real.hpp"

namespace schurid {

/// I_order(x) = sum_j (x/2)^{2j+|order|} / (j! (j+|order|)!), summed until the
/// geometric remainder bound falls below the working precision. The remainder
/// bound is folded into the radius. I_{-k} = I_k.
TrackedReal bessel_I(long order, const TrackedReal& x, Precision prec = {});

/// Determinant by Gaussian elimination with partial pivoting on midpoints.
/// Throws std::domain_error if every pivot candidate ball contains zero.
TrackedReal determinant(Matrix<TrackedReal> a);

/// C_m C_n beta^{((m+n)-(m-n)^2)/2} det(l_j^{m+n-i} I_{m+n-i}(2 beta l_j))
///   / (Delta(l_1^2..l_m^2) Delta(l_{m+1}^2..l_{m+n}^2)).
/// Throws RepeatedPointError when squared eigenvalues repeat within a block.
TrackedReal theorem2_rhs(const TrackedReal& beta, std::span<const TrackedReal> eigenvalues,
                         std::size_t m, std::size_t n, Precision prec = {});

/// C_n / Delta(z) * sum_{k in [0,N]^n} Delta(k) z^k / prod k_i! (k_i - s)!, with a
/// rigorous bound on the omitted terms. Throws RepeatedPointError on
/// coincident points and std::invalid_argument if N is too small for the
/// remainder majorant to converge.
TrackedReal series_G(std::span<const TrackedReal> z, long s, int cutoff, Precision prec = {});

/// C_n^2 / (Delta(x) Delta(y)) * sum_k det(x_i^{k_j}) y^k / prod k_i! (k_i - s)!.
TrackedReal series_K(std::span<const TrackedReal> x, std::span<const TrackedReal> y, long s,
                     int cutoff, Precision prec = {});

}  // namespace schurid
