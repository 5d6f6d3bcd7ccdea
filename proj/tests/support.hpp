#pragma once

#include <string>
#include <vector>

#include "oracles/oracles.hpp"
#include "syzstab/ideals.hpp"
#include "syzstab/sparse.hpp"

namespace testing {

inline syzstab::SparseMat to_sparse(const oracle::Dense& d, std::size_t ncols) {
  return syzstab::SparseMat::from_dense(d, ncols);
}

inline oracle::Dense to_dense(const syzstab::SparseMat& m) { return m.to_dense(); }

inline syzstab::Scheme ideal_scheme(int r, const std::vector<std::string>& gens, const std::string& name = "test") {
  syzstab::RingCtx ctx(r);
  std::vector<syzstab::Polynomial> g;
  for (const auto& s : gens) g.push_back(syzstab::parse_polynomial(ctx, s));
  return syzstab::Scheme(name, syzstab::IdealPresentation(ctx, std::move(g)));
}

}  // namespace testing
