#pragma once

#include <vector>

#include "rwords/partition.hpp"
#include "rwords/prob_model.hpp"
#include "rwords/rational.hpp"

namespace rwords {

enum class SchurMethod { JacobiTrudi, Bialternant };

/// Exact specialized Schur value s_lambda(p_1..p_k) plus the formula
/// that produced it.
struct SchurEval {
    Rat value;
    SchurMethod method;
};

/// Complete homogeneous symmetric polynomials h_0..h_max_degree of the
/// given values, via the generating-function recurrence
/// H_i(z) = H_{i-1}(z) / (1 - p_i z).
std::vector<Rat> complete_homogeneous(const std::vector<Rat>& p, int max_degree);

/// Elementary symmetric polynomials e_0..e_k of the given values.
std::vector<Rat> elementary_symmetric(const std::vector<Rat>& p);

/// Exact determinant by Gaussian elimination over the rationals.
/// The matrix is consumed.
Rat rational_det(std::vector<std::vector<Rat>> m);

/// s_lambda(p) = det( h_{lambda_i - i + j} )_{1<=i,j<=r}, r = #parts.
/// Uniformly valid, ties or not; the reference evaluator.
SchurEval schur_jacobi_trudi(const Partition& shape, const ProbModel& model);

/// s_lambda(p) as a ratio of alternants det(p_i^{h_j}) / Vandermonde(p).
/// Tied probabilities degenerate both determinants; the row for letter
/// i in a tie group ending at letter i_a is replaced by its
/// (i_a - i)-th p_i-derivative, which after in-group row operations is
/// ( h_j^{i_a - i} * p_i^{h_j - i_a + i} )_j, and the denominator
/// becomes prod_a(1!..(k_a-1)!) * prod_{a<b}(p_a - p_b)^{k_a k_b}.
SchurEval schur_bialternant(const Partition& shape, const ProbModel& model);

} // namespace rwords
