#include "syzstab/stability.hpp"

#include <json.hpp>

#include <algorithm>
#include <numeric>
#include <sstream>

namespace syzstab {

OneParamSubgroup::OneParamSubgroup(std::vector<std::int64_t> weights) : w_(std::move(weights)) {
  if (w_.empty()) throw std::invalid_argument("empty weight vector");
  if (std::accumulate(w_.begin(), w_.end(), std::int64_t{0}) != 0)
    throw std::invalid_argument("1-PS weights must sum to zero");
  if (std::all_of(w_.begin(), w_.end(), [](std::int64_t w) { return w == 0; }))
    throw std::invalid_argument("1-PS weights must not all be zero");
}

OneParamSubgroup OneParamSubgroup::from_rational(const std::vector<Rat>& weights) {
  BigInt l = 1;
  for (const auto& w : weights) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), w.get_den_mpz_t());
  std::vector<std::int64_t> out;
  for (const auto& w : weights) out.push_back(to_int64(Rat(w * l)));
  return OneParamSubgroup(std::move(out));
}

OneParamSubgroup OneParamSubgroup::parse(std::string_view text) {
  std::vector<Rat> w;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto comma = text.find(',', start);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view part = text.substr(start, comma - start);
    while (!part.empty() && part.front() == ' ') part.remove_prefix(1);
    while (!part.empty() && part.back() == ' ') part.remove_suffix(1);
    w.push_back(parse_rat(part));
    start = comma + 1;
  }
  return from_rational(w);
}

OneParamSubgroup OneParamSubgroup::inverse() const { return scaled(-1); }

OneParamSubgroup OneParamSubgroup::scaled(std::int64_t k) const {
  if (k == 0) throw std::invalid_argument("scaling a 1-PS by zero");
  auto w = w_;
  for (auto& x : w) x *= k;
  return OneParamSubgroup(std::move(w));
}

OneParamSubgroup OneParamSubgroup::permuted(const std::vector<int>& sigma) const {
  if (sigma.size() != w_.size()) throw std::invalid_argument("permutation has wrong length");
  std::vector<std::int64_t> w(w_.size());
  for (std::size_t i = 0; i < w_.size(); ++i) w[sigma[i]] = w_[i];
  return OneParamSubgroup(std::move(w));
}

std::string OneParamSubgroup::str() const {
  std::string out;
  for (std::size_t i = 0; i < w_.size(); ++i) out += (i ? "," : "") + std::to_string(w_[i]);
  return out;
}

namespace {

void check_rank(const Scheme& x, const OneParamSubgroup& rho) {
  if (rho.r() != x.r()) throw std::invalid_argument("1-PS has " + std::to_string(rho.r()) + " weights, scheme has " +
                                                    std::to_string(x.r()) + " variables");
}

WeightElimination initial_space(const GradedSubspace& s, const OneParamSubgroup& rho, Exec exec) {
  const auto weights = ambient_weights(s.ambient(), rho.weights());
  return weight_elimination(s.rows(), weights, exec);
}

}  // namespace

std::int64_t hm_weight(const Scheme& x, int p, int q, const OneParamSubgroup& rho, Exec exec) {
  check_rank(x, rho);
  const SyzygyKernel k = syzygy_kernel(x, p, q, exec);
  return -initial_space(k.basis, rho, exec).det_weight;
}

std::int64_t det_piece_weight(const Scheme& x, int q, const OneParamSubgroup& rho, Exec exec) {
  check_rank(x, rho);
  return initial_space(*x.piece(q, exec), rho, exec).det_weight;
}

std::int64_t det_quotient_weight(const Scheme& x, int q, const OneParamSubgroup& rho, Exec exec) {
  const auto sym = ambient_weights(Ambient::sym(x.r(), q), rho.weights());
  const std::int64_t total = std::accumulate(sym.begin(), sym.end(), std::int64_t{0});
  return total - det_piece_weight(x, q, rho, exec);
}

std::vector<std::int64_t> quotient_weights(const Scheme& x, int q, const OneParamSubgroup& rho, Exec exec) {
  check_rank(x, rho);
  auto sym = ambient_weights(Ambient::sym(x.r(), q), rho.weights());
  auto taken = initial_space(*x.piece(q, exec), rho, exec).row_weights;
  std::sort(sym.begin(), sym.end());
  std::sort(taken.begin(), taken.end());
  std::vector<std::int64_t> out;
  std::set_difference(sym.begin(), sym.end(), taken.begin(), taken.end(), std::back_inserter(out));
  return out;
}

Rat vgit_weight(const Scheme& x, const OneParamSubgroup& rho, const Rat& beta, Exec exec) {
  return Rat(hm_weight(x, 0, 2, rho, exec)) + beta * Rat(hm_weight(x, 1, 2, rho, exec));
}

namespace {

std::optional<Rat> wall_of(std::int64_t mu02, std::optional<std::int64_t> mu12) {
  if (!mu12 || *mu12 == 0) return std::nullopt;
  Rat b = Rat(-mu02) / Rat(*mu12);
  if (b <= 0) return std::nullopt;
  return b;
}

}  // namespace

std::optional<Rat> wall(const Scheme& x, const OneParamSubgroup& rho, Exec exec) {
  return wall_of(hm_weight(x, 0, 2, rho, exec), hm_weight(x, 1, 2, rho, exec));
}

std::string verdict(const Rat& mu) {
  if (mu < 0) return "unstable (destabilized by rho)";
  if (mu == 0) return "strictly semistable (probe)";
  return "not destabilized (probe)";
}

HMReport hm_report(const Scheme& x, const OneParamSubgroup& rho, std::optional<Rat> beta, Exec exec) {
  HMReport r{rho, hm_weight(x, 0, 2, rho, exec), std::nullopt, std::nullopt, beta, std::nullopt, {}};
  try {
    r.mu12 = hm_weight(x, 1, 2, rho, exec);
  } catch (const SyzygyUndefined&) {
  }
  r.wall_beta = wall_of(r.mu02, r.mu12);
  auto at = [&](const Rat& b) -> Rat { return Rat(r.mu02) + b * Rat(r.mu12.value_or(0)); };
  if (beta) {
    if (!r.mu12 && *beta != 0) throw SyzygyUndefined();
    r.weight = at(*beta);
    r.verdicts.push_back("beta=" + to_string(*beta) + ": " + verdict(*r.weight));
  } else if (r.wall_beta) {
    const Rat w = *r.wall_beta;
    r.verdicts.push_back("beta<" + to_string(w) + ": " + verdict(at(w / 2)));
    r.verdicts.push_back("beta=" + to_string(w) + ": " + verdict(at(w)));
    r.verdicts.push_back("beta>" + to_string(w) + ": " + verdict(at(w + 1)));
  } else {
    r.verdicts.push_back("beta=0: " + verdict(at(0)));
    if (r.mu12) r.verdicts.push_back("beta>0: " + verdict(at(1)));
  }
  return r;
}

std::string report_json(const HMReport& r) {
  nlohmann::ordered_json j;
  j["rho"] = r.rho.weights();
  j["mu02"] = r.mu02;
  j["mu12"] = r.mu12 ? nlohmann::ordered_json(*r.mu12) : nlohmann::ordered_json(nullptr);
  j["wall"] = r.wall_beta ? nlohmann::ordered_json(to_fraction_string(*r.wall_beta)) : nlohmann::ordered_json(nullptr);
  if (r.beta) {
    j["beta"] = to_string(*r.beta);
    j["weight"] = to_string(*r.weight);
  }
  j["verdicts"] = r.verdicts;
  return j.dump();
}

IdealPresentation limit_scheme(const Scheme& x, const OneParamSubgroup& rho, int qmax, Exec exec) {
  check_rank(x, rho);
  std::vector<Polynomial> gens;
  for (int q = 1; q <= qmax; ++q) {
    const auto init = initial_space(*x.piece(q, exec), rho, exec);
    for (const auto& row : init.initial_rows.rows()) gens.push_back(Polynomial::from_vector(x.r(), q, row));
  }
  return IdealPresentation(x.ctx(), std::move(gens));
}

std::vector<HMReport> probe_1ps_family(const Scheme& x, const std::vector<OneParamSubgroup>& family, const Rat& beta,
                                       Exec exec) {
  // warm the piece cache
  for (int q = 0; q <= 3; ++q) x.piece(q, exec);
  std::vector<std::optional<HMReport>> out(family.size());
  for_each_index(exec, family.size(), [&](std::size_t i) { out[i] = hm_report(x, family[i], beta, Exec::serial); });
  std::vector<HMReport> reports;
  for (auto& r : out) reports.push_back(std::move(*r));
  return reports;
}

}  // namespace syzstab
