#pragma once

#include "algebra/rational.hpp"

#include <optional>
#include <vector>

namespace cypair {

using VecQ = std::vector<Rational>;
using MatQ = std::vector<VecQ>;

Rational det(const MatQ& m);
size_t rank(const MatQ& m);

// One solution of A x = b (consistent systems may be underdetermined; free
// variables are set to 0). nullopt when inconsistent.
std::optional<VecQ> solve(const MatQ& a, const VecQ& b);

// All solutions of A x = b as particular + span of kernel basis.
struct AffineSolutions {
    VecQ particular;
    std::vector<VecQ> kernel;
};
std::optional<AffineSolutions> solve_affine(const MatQ& a, const VecQ& b);

long idet(const std::vector<std::vector<long>>& m);

// Integer diagonalization U*M*V = D by unimodular row/column operations.
// diag holds |d_i| (not divisibility-sorted); left is the exact U.
struct IntDiag {
    std::vector<long> diag;
    std::vector<std::vector<long>> left;  // U
};
IntDiag int_diagonalize(std::vector<std::vector<long>> m);

}  // namespace cypair
