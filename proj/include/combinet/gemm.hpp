#pragma once

#include <cstddef>

namespace combinet {

using real = double;

// Row-major matrix products used by the convolution kernels. All variants are
// single-threaded with a fixed accumulation order, so results are bitwise
// reproducible across runs and machines with the same FP unit.

// C[M x N] = A[M x K] * B[K x N]   (or += when accumulate)
void gemm_nn(const real* A, const real* B, real* C, int M, int K, int N,
             bool accumulate = false);

// C[M x N] = A[M x K] * B[N x K]^T (or += when accumulate)
void gemm_nt(const real* A, const real* B, real* C, int M, int K, int N,
             bool accumulate = false);

// C[M x N] = A[K x M]^T * B[K x N] (or += when accumulate)
void gemm_tn(const real* A, const real* B, real* C, int M, int K, int N,
             bool accumulate = false);

}  // namespace combinet
