#ifndef CLQ_QUOTIENT_HPP
#define CLQ_QUOTIENT_HPP

#include <set>
#include <vector>

#include "clq/collineation.hpp"
#include "clq/quadric.hpp"
#include "clq/rational.hpp"

namespace clq {

// Quotient of the collinearity relation over an equitable partition:
// b[i][j] = number of points of class j collinear with a fixed point of class i.
struct QuotientMatrix {
  int k = 0;
  std::vector<long long> b;      // k*k, row-major
  std::vector<long long> sizes;  // class sizes
  std::string label;

  long long at(int i, int j) const { return b[i * k + j]; }
  long long& at(int i, int j) { return b[i * k + j]; }
};

// Builds B from one representative per class and cross-checks a second one;
// asserts row sums q(q+1)^2 and the double-counting reciprocity
// s_i b_ij = s_j b_ji.  Throws PartitionError on an inequitable partition.
QuotientMatrix quotient_matrix(const Quadric& qd, const OrbitPartition& part);

// r_i = sum_j B[i][j] sel_j - (q^2-1) sel_i - x(q+1); zero iff sel lifts to an
// x-tight set.
std::vector<long long> tight_condition_residual(const QuotientMatrix& B,
                                                const std::vector<int>& sel, long long x,
                                                long long q);

// All 0/1 solutions of (B - (q^2-1)I) sel = x(q+1) 1 with sel = 0 on
// forced_zero, found by exact elimination plus pruned enumeration of the
// affine solution space.  Solutions come back lexicographically sorted.
std::vector<std::vector<int>> search_tight(const QuotientMatrix& B, long long q, long long x,
                                           const std::set<int>& forced_zero);

std::vector<std::uint32_t> lift_selection(const std::vector<int>& sel,
                                          const OrbitPartition& part);

// --- exact spectral tools -------------------------------------------------

// basis of the rational kernel of (B - lambda I)
std::vector<std::vector<Rat>> eigen_kernel(const QuotientMatrix& B, long long lambda);

// checks prod_lambda (M - lambda I) = 0 for the quotient matrix (int64 exact)
bool quotient_annihilated_by(const QuotientMatrix& B, const std::vector<long long>& lambdas);

// checks prod_lambda (A - lambda I) = 0 for the full collinearity matrix.
// Only sensible at small q; materializes A.
bool adjacency_annihilated_by(const Quadric& qd, const std::vector<long long>& lambdas);

// checks that the orbit-constant lift of an eigenvector of B for lambda is an
// exact eigenvector of A (streamed, A never materialized)
bool lifted_eigenvector_check(const Quadric& qd, const OrbitPartition& part,
                              const std::vector<Rat>& vec, long long lambda);

// every eigenvalue of B occurs as an eigenvalue of A (exact; small q only)
bool spectrum_containment_check(const QuotientMatrix& B, const Quadric& qd,
                                const OrbitPartition& part);

}  // namespace clq

#endif
