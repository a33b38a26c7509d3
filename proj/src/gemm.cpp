#include "combinet/gemm.hpp"

#include <cstring>
#include <vector>

namespace combinet {

namespace {

// Register-blocked axpy kernel: MR rows of C share one streaming pass over B.
constexpr int kRowBlock = 4;

}  // namespace

void gemm_nn(const real* A, const real* B, real* C, int M, int K, int N,
             bool accumulate) {
  if (!accumulate) std::memset(C, 0, sizeof(real) * static_cast<size_t>(M) * N);
  int m = 0;
  for (; m + kRowBlock <= M; m += kRowBlock) {
    real* c0 = C + static_cast<size_t>(m + 0) * N;
    real* c1 = C + static_cast<size_t>(m + 1) * N;
    real* c2 = C + static_cast<size_t>(m + 2) * N;
    real* c3 = C + static_cast<size_t>(m + 3) * N;
    for (int k = 0; k < K; ++k) {
      const real a0 = A[static_cast<size_t>(m + 0) * K + k];
      const real a1 = A[static_cast<size_t>(m + 1) * K + k];
      const real a2 = A[static_cast<size_t>(m + 2) * K + k];
      const real a3 = A[static_cast<size_t>(m + 3) * K + k];
      const real* b = B + static_cast<size_t>(k) * N;
      for (int n = 0; n < N; ++n) {
        const real bn = b[n];
        c0[n] += a0 * bn;
        c1[n] += a1 * bn;
        c2[n] += a2 * bn;
        c3[n] += a3 * bn;
      }
    }
  }
  for (; m < M; ++m) {
    real* c = C + static_cast<size_t>(m) * N;
    for (int k = 0; k < K; ++k) {
      const real a = A[static_cast<size_t>(m) * K + k];
      const real* b = B + static_cast<size_t>(k) * N;
      for (int n = 0; n < N; ++n) c[n] += a * b[n];
    }
  }
}

void gemm_nt(const real* A, const real* B, real* C, int M, int K, int N,
             bool accumulate) {
  for (int m = 0; m < M; ++m) {
    const real* a = A + static_cast<size_t>(m) * K;
    real* c = C + static_cast<size_t>(m) * N;
    for (int n = 0; n < N; ++n) {
      const real* b = B + static_cast<size_t>(n) * K;
      real acc = 0.0;
      for (int k = 0; k < K; ++k) acc += a[k] * b[k];
      if (accumulate)
        c[n] += acc;
      else
        c[n] = acc;
    }
  }
}

void gemm_tn(const real* A, const real* B, real* C, int M, int K, int N,
             bool accumulate) {
  if (!accumulate) std::memset(C, 0, sizeof(real) * static_cast<size_t>(M) * N);
  // A is K x M; walk K rows, rank-1 update style with fixed order.
  for (int k = 0; k < K; ++k) {
    const real* arow = A + static_cast<size_t>(k) * M;
    const real* b = B + static_cast<size_t>(k) * N;
    for (int m = 0; m < M; ++m) {
      const real a = arow[m];
      real* c = C + static_cast<size_t>(m) * N;
      for (int n = 0; n < N; ++n) c[n] += a * b[n];
    }
  }
}

}  // namespace combinet
