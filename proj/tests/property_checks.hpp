#pragma once

#include <cstdint>
#include <string>

namespace props {

struct Outcome {
  int checked = 0;
  int failed = 0;
  std::string first_failure;

  void record(bool ok, const std::string& what) {
    ++checked;
    if (!ok && failed++ == 0) first_failure = what;
  }
  bool ok() const { return failed == 0 && checked > 0; }
};

/// rref and kernels of random rows x cols matrices against dense Gauss-Jordan.
Outcome rref_oracle(int trials, std::size_t rows, std::size_t cols, std::uint64_t seed);
/// d_{p-1,q+1} d_{p,q} = 0 on random module slices.
Outcome d_squared_zero(int cells, std::uint64_t seed);
/// schur_dim(r,p,q) against the kernel of the free differential, r <= rmax, p+q <= 5.
Outcome schur_vs_kernels(int rmax);
/// mu(X, rho^k) = k mu(X, rho).
Outcome mu_homogeneity(int probes, std::uint64_t seed);
/// mu(sigma X, sigma rho) = mu(X, rho).
Outcome mu_permutation(int probes, std::uint64_t seed);
/// mu(X, rho^-1) = -mu(X, rho) when X is fixed by rho.
Outcome mu_antisymmetry(int probes, std::uint64_t seed);
/// mu_{0,2} against the projection oracle on the span of I_2.
Outcome mu_oracle(int probes, std::uint64_t seed);
/// Serial and parallel kernels return identical results.
Outcome serial_parallel(int trials, std::uint64_t seed);

}  // namespace props
