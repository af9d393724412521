#pragma once

#include <utility>

#include "wittbundle/mat2.hpp"

namespace witt {

// Given lambda_1, lambda_2, lambda_3 outside {0,1,-1} whose traces
// t_i = lambda_i + 1/lambda_i do NOT satisfy the Markov equation M_4, and
// c != 0: the unique pair (L, M) with L conjugate to diag(lambda_1, .),
// M conjugate to diag(lambda_2, .), L*M = diag(lambda_3, 1/lambda_3) and
// L21 = c.
std::pair<Mat2, Mat2> pair_LM(const Rat& lambda1, const Rat& lambda2,
                              const Rat& lambda3, const Rat& c);

// A in SL(2,Q) with A * diag(lambda, 1/lambda) * A^{-1} = L. Requires
// lambda to be an eigenvalue of L and lambda != +-1.
Mat2 conjugator_to(const Mat2& L, const Rat& lambda);

}  // namespace witt
