#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "syzstab/koszul.hpp"

namespace syzstab {

/// Diagonal 1-PS of SL(V): integer weights, sum zero, not all zero.
class OneParamSubgroup {
 public:
  explicit OneParamSubgroup(std::vector<std::int64_t> weights);
  /// Rational weights are cleared to integers by the lcm of the denominators.
  static OneParamSubgroup from_rational(const std::vector<Rat>& weights);
  /// Comma separated list, entries "n" or "n/d".
  static OneParamSubgroup parse(std::string_view text);

  const std::vector<std::int64_t>& weights() const { return w_; }
  int r() const { return static_cast<int>(w_.size()); }
  OneParamSubgroup inverse() const;
  OneParamSubgroup scaled(std::int64_t k) const;
  /// Weight of x_i moves to position sigma[i].
  OneParamSubgroup permuted(const std::vector<int>& sigma) const;
  std::string str() const;

  friend bool operator==(const OneParamSubgroup&, const OneParamSubgroup&) = default;

 private:
  std::vector<std::int64_t> w_;
};

/// mu = -(weight of the initial space of the (p,q) syzygy kernel). A negative
/// value means rho destabilizes the syzygy point.
std::int64_t hm_weight(const Scheme& x, int p, int q, const OneParamSubgroup& rho, Exec exec = Exec::parallel);

/// Weight of rho on det of the initial space of I_q.
std::int64_t det_piece_weight(const Scheme& x, int q, const OneParamSubgroup& rho, Exec exec = Exec::parallel);
/// Weight on det R_q; equals -det_piece_weight since det Sym^q has weight 0.
std::int64_t det_quotient_weight(const Scheme& x, int q, const OneParamSubgroup& rho, Exec exec = Exec::parallel);
/// Weights of rho on R_q (the complement of the initial space), ascending.
std::vector<std::int64_t> quotient_weights(const Scheme& x, int q, const OneParamSubgroup& rho,
                                           Exec exec = Exec::parallel);

/// mu_{(0,2)} + beta * mu_{(1,2)}.
Rat vgit_weight(const Scheme& x, const OneParamSubgroup& rho, const Rat& beta, Exec exec = Exec::parallel);
/// The beta > 0 where the two-ray weight vanishes, if any.
std::optional<Rat> wall(const Scheme& x, const OneParamSubgroup& rho, Exec exec = Exec::parallel);

std::string verdict(const Rat& mu);

struct HMReport {
  OneParamSubgroup rho;
  std::int64_t mu02 = 0;
  std::optional<std::int64_t> mu12;
  std::optional<Rat> wall_beta;
  std::optional<Rat> beta;
  std::optional<Rat> weight;  // vgit weight at beta
  std::vector<std::string> verdicts;
};

/// Weights and wall, with verdicts per beta range (or at beta when given).
HMReport hm_report(const Scheme& x, const OneParamSubgroup& rho, std::optional<Rat> beta = std::nullopt,
                   Exec exec = Exec::parallel);
std::string report_json(const HMReport& r);

/// Degreewise initial spaces of I_q for q <= qmax, as a presentation.
IdealPresentation limit_scheme(const Scheme& x, const OneParamSubgroup& rho, int qmax = 3,
                               Exec exec = Exec::parallel);

/// hm_report at beta for every member of the family; output order matches input.
std::vector<HMReport> probe_1ps_family(const Scheme& x, const std::vector<OneParamSubgroup>& family, const Rat& beta,
                                       Exec exec = Exec::parallel);

}  // namespace syzstab
