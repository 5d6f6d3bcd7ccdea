#include "syzstab/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <filesystem>
#include <sstream>

#include "syzstab/divisors.hpp"
#include "syzstab/gallery.hpp"
#include "syzstab/stability.hpp"
#include "syzstab/verify.hpp"

namespace syzstab {

namespace {

using json = nlohmann::ordered_json;

constexpr int kMaxDegree = 5;
constexpr int kMaxVars = 10;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Config {
  std::string format = "pretty";
  int threads = 0;
  bool force = false;
};

Scheme load_scheme(const std::string& arg) {
  if (std::filesystem::is_regular_file(arg)) return Scheme(std::filesystem::path(arg).stem().string(), read_ideal_file(arg));
  try {
    return gallery_item(arg).scheme;
  } catch (const std::invalid_argument& e) {
    if (std::string(e.what()).find("unknown gallery item") == std::string::npos) throw;
    throw UsageError("unknown scheme '" + arg + "' (not a gallery name or a readable file)");
  }
}

void check_bounds(const Config& cfg, const Scheme& x, int degree) {
  if (cfg.force) return;
  if (degree > kMaxDegree)
    throw UsageError("degree cutoff " + std::to_string(degree) + " exceeds " + std::to_string(kMaxDegree) +
                     "; pass --force to run anyway");
  if (x.r() > kMaxVars)
    throw UsageError("scheme has " + std::to_string(x.r()) + " variables, more than " + std::to_string(kMaxVars) +
                     "; pass --force to run anyway");
}

void check_pq(const Scheme& x, int p, int q) {
  if (p < 0 || p >= x.r() || q < 0) throw UsageError("(p,q) = (" + std::to_string(p) + "," + std::to_string(q) + ") out of range");
}

void print_csv_pairs(std::ostream& out, const std::vector<std::pair<std::string, std::string>>& rows) {
  out << "key,value\n";
  for (const auto& [k, v] : rows) out << k << "," << v << "\n";
}

void print_report(std::ostream& out, const Config& cfg, const HMReport& r) {
  if (cfg.format == "json") {
    out << report_json(r) << "\n";
    return;
  }
  std::vector<std::pair<std::string, std::string>> rows{
      {"rho", r.rho.str()},
      {"mu02", std::to_string(r.mu02)},
      {"mu12", r.mu12 ? std::to_string(*r.mu12) : "undefined"},
      {"wall", r.wall_beta ? to_string(*r.wall_beta) : "none"}};
  if (r.beta) {
    rows.emplace_back("beta", to_string(*r.beta));
    rows.emplace_back("weight", to_string(*r.weight));
  }
  if (cfg.format == "csv") {
    for (std::size_t i = 0; i < r.verdicts.size(); ++i) rows.emplace_back("verdict" + std::to_string(i), r.verdicts[i]);
    print_csv_pairs(out, rows);
    return;
  }
  for (const auto& [k, v] : rows) out << k << ": " << v << "\n";
  for (const auto& v : r.verdicts) out << "  " << v << "\n";
}

void print_divisor(std::ostream& out, const Config& cfg, const DivisorClass& d,
                   const std::vector<std::pair<std::string, std::string>>& extra = {}) {
  if (cfg.format == "json") {
    if (extra.empty()) {
      out << d.json() << "\n";
      return;
    }
    json j = json::parse(d.json());
    for (const auto& [k, v] : extra) j[k] = v;
    out << j.dump() << "\n";
    return;
  }
  if (cfg.format == "csv") {
    std::vector<std::pair<std::string, std::string>> rows{{"basis", basis_name(d.basis())}};
    const auto& syms = basis_symbols(d.basis());
    for (std::size_t i = 0; i < syms.size(); ++i) rows.emplace_back(syms[i], to_string(d.coeffs()[i]));
    rows.insert(rows.end(), extra.begin(), extra.end());
    print_csv_pairs(out, rows);
    return;
  }
  out << d.str() << "\n";
  for (const auto& [k, v] : extra) out << k << ": " << v << "\n";
}

int cmd_gallery_list(std::ostream& out, const Config& cfg) {
  const auto names = gallery_names();
  if (cfg.format == "json") {
    json arr = json::array();
    for (const auto& n : names) arr.push_back({{"name", n}, {"description", gallery_item(n).description}});
    out << arr.dump() << "\n";
  } else if (cfg.format == "csv") {
    out << "name,description\n";
    for (const auto& n : names) out << n << ",\"" << gallery_item(n).description << "\"\n";
  } else {
    std::size_t width = 0;
    for (const auto& n : names) width = std::max(width, n.size());
    for (const auto& n : names) out << n << std::string(width + 2 - n.size(), ' ') << gallery_item(n).description << "\n";
  }
  return 0;
}

int cmd_gallery_show(std::ostream& out, const Config& cfg, const std::string& name) {
  const GalleryItem item = gallery_item(name);
  const auto& x = item.scheme;
  std::vector<std::size_t> h;
  for (int q = 0; q <= 3; ++q) h.push_back(x.hilbert(q));
  const auto gens = x.minimal_generators(3);
  const auto checks = run_checks(item);
  if (cfg.format == "json") {
    json j;
    j["name"] = item.name;
    j["description"] = item.description;
    j["r"] = x.r();
    j["hilbert"] = h;
    json g = json::array();
    for (const auto& f : gens) g.push_back(format_polynomial(x.ctx(), f));
    j["generators"] = g;
    json c = json::array();
    for (const auto& r : checks)
      c.push_back({{"check", r.check}, {"expected", r.expected}, {"actual", r.actual}, {"source", r.source}, {"pass", r.pass}});
    j["checks"] = c;
    out << j.dump() << "\n";
    return 0;
  }
  if (cfg.format == "csv") {
    out << "check,expected,actual,pass\n";
    for (const auto& r : checks) out << "\"" << r.check << "\"," << r.expected << "," << r.actual << "," << (r.pass ? 1 : 0) << "\n";
    return 0;
  }
  out << item.name << ": " << item.description << "\n";
  out << "variables: " << x.r() << "\n";
  out << "hilbert function q=0..3:";
  for (auto v : h) out << " " << v;
  out << "\n";
  out << "minimal generators up to degree 3: " << gens.size() << "\n";
  for (const auto& f : gens) out << "  " << format_polynomial(x.ctx(), f) << "\n";
  for (const auto& r : checks)
    out << (r.pass ? "  ok   " : "  FAIL ") << r.check << " = " << r.actual << " (expected " << r.expected << ")\n";
  return 0;
}

int cmd_verify(std::ostream& out, const Config& cfg) {
  const auto results = verify_anchors();
  const auto passed = std::count_if(results.begin(), results.end(), [](const CheckResult& r) { return r.pass; });
  const auto failed = static_cast<long>(results.size()) - passed;
  if (cfg.format == "json") {
    json arr = json::array();
    for (const auto& r : results)
      arr.push_back({{"group", r.item}, {"check", r.check}, {"expected", r.expected}, {"actual", r.actual},
                     {"source", r.source}, {"pass", r.pass}});
    out << json{{"passed", passed}, {"failed", failed}, {"anchors", arr}}.dump() << "\n";
  } else if (cfg.format == "csv") {
    out << "group,check,expected,actual,source,pass\n";
    for (const auto& r : results)
      out << r.item << ",\"" << r.check << "\",\"" << r.expected << "\",\"" << r.actual << "\",\"" << r.source << "\","
          << (r.pass ? 1 : 0) << "\n";
  } else {
    for (const auto& r : results)
      out << (r.pass ? "PASS " : "FAIL ") << r.item << " | " << r.check << " | expected " << r.expected << " | got "
          << r.actual << " | " << r.source << "\n";
    out << passed << " passed, " << failed << " failed\n";
  }
  return failed == 0 ? 0 : 1;
}

DivisorBasis parse_basis(const std::string& b) {
  if (b == "A") return DivisorBasis::K3A;
  if (b == "B") return DivisorBasis::K3B;
  throw UsageError("basis must be A or B");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config cfg;
  CLI::App app{"Syzygy points, Koszul cohomology and GIT weights", "syzstab"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"pretty", "json", "csv"}));
  app.add_option("--threads", cfg.threads, "Worker threads (default: SYZSTAB_THREADS or all cores)")
      ->check(CLI::PositiveNumber);
  app.add_flag("--force", cfg.force, "Allow cutoffs beyond desk-scale bounds");

  std::function<int()> action;
  std::string scheme_arg, rho_arg, beta_arg, name;
  int p = 1, q = 2, pmax = 4, qmax = 3, g = 6, max_degree = 4;
  std::string basis = "A";

  auto* gallery = app.add_subcommand("gallery", "Browse and export the built-in examples");
  gallery->require_subcommand(1);
  gallery->add_subcommand("list", "List gallery names")->callback([&] { action = [&] { return cmd_gallery_list(out, cfg); }; });
  auto* show = gallery->add_subcommand("show", "Describe one item and run its checks");
  show->add_option("name", name)->required();
  show->callback([&] { action = [&] { return cmd_gallery_show(out, cfg, name); }; });
  auto* exp = gallery->add_subcommand("export", "Write an item in the ideal file format");
  exp->add_option("name", name)->required();
  exp->add_option("--max-degree", max_degree, "Largest generator degree")->check(CLI::Range(1, 8));
  exp->callback([&] { action = [&] { out << export_item(gallery_item(name), max_degree); return 0; }; });

  auto* betti = app.add_subcommand("betti", "Koszul Betti table K_{p,q} for p <= pmax, q <= qmax");
  betti->add_option("--scheme", scheme_arg, "Gallery name or ideal file")->required();
  betti->add_option("--pmax", pmax)->check(CLI::NonNegativeNumber);
  betti->add_option("--qmax", qmax)->check(CLI::NonNegativeNumber);
  betti->callback([&] {
    action = [&] {
      const Scheme x = load_scheme(scheme_arg);
      check_bounds(cfg, x, qmax);
      const BettiTable t = betti_table(x, pmax, qmax);
      if (cfg.format == "json") out << betti_json(t) << "\n";
      else if (cfg.format == "csv") out << betti_csv(t);
      else out << betti_pretty(t);
      return 0;
    };
  });

  auto* koszul = app.add_subcommand("koszul", "One Koszul cohomology dimension");
  koszul->add_option("--scheme", scheme_arg)->required();
  koszul->add_option("--p", p)->required();
  koszul->add_option("--q", q)->required();
  koszul->callback([&] {
    action = [&] {
      const Scheme x = load_scheme(scheme_arg);
      check_bounds(cfg, x, q);
      check_pq(x, p, q);
      const auto d = koszul_dim(x, p, q);
      if (cfg.format == "json") out << json{{"name", x.name()}, {"p", p}, {"q", q}, {"dim", d}}.dump() << "\n";
      else if (cfg.format == "csv") out << "name,p,q,dim\n" << x.name() << "," << p << "," << q << "," << d << "\n";
      else out << "K_{" << p << "," << q << "}(" << x.name() << ") = " << d << "\n";
      return 0;
    };
  });

  auto* git = app.add_subcommand("git", "Hilbert-Mumford weights of syzygy points");
  git->require_subcommand(1);
  auto scheme_rho = [&](CLI::App* sub) {
    sub->add_option("--scheme", scheme_arg)->required();
    sub->add_option("--rho", rho_arg, "Weights w0,...,w{r-1}, summing to zero")->required();
  };
  auto* hm = git->add_subcommand("hm", "mu of the (p,q) syzygy point");
  scheme_rho(hm);
  hm->add_option("--p", p)->required();
  hm->add_option("--q", q)->required();
  hm->callback([&] {
    action = [&] {
      const Scheme x = load_scheme(scheme_arg);
      check_bounds(cfg, x, q + 1);
      check_pq(x, p, q);
      const auto rho = OneParamSubgroup::parse(rho_arg);
      const auto mu = hm_weight(x, p, q, rho);
      if (cfg.format == "json")
        out << json{{"rho", rho.weights()}, {"p", p}, {"q", q}, {"mu", mu}, {"verdict", verdict(mu)}}.dump() << "\n";
      else if (cfg.format == "csv") print_csv_pairs(out, {{"p", std::to_string(p)}, {"q", std::to_string(q)}, {"mu", std::to_string(mu)}});
      else out << "mu_{" << p << "," << q << "}(" << x.name() << ", " << rho.str() << ") = " << mu << "  " << verdict(mu) << "\n";
      return 0;
    };
  });
  auto* vgit = git->add_subcommand("vgit", "Two-ray weight mu02 + beta mu12");
  scheme_rho(vgit);
  vgit->add_option("--beta", beta_arg, "Non-negative rational a/b")->required();
  vgit->callback([&] {
    action = [&] {
      const Scheme x = load_scheme(scheme_arg);
      const Rat beta = parse_rat(beta_arg);
      if (beta < 0) throw UsageError("beta must be non-negative");
      print_report(out, cfg, hm_report(x, OneParamSubgroup::parse(rho_arg), beta));
      return 0;
    };
  });
  auto* wl = git->add_subcommand("wall", "Where the two-ray weight changes sign");
  scheme_rho(wl);
  wl->callback([&] {
    action = [&] {
      const Scheme x = load_scheme(scheme_arg);
      print_report(out, cfg, hm_report(x, OneParamSubgroup::parse(rho_arg)));
      return 0;
    };
  });
  auto* lim = git->add_subcommand("limit", "Flat limit under rho, as an ideal file");
  scheme_rho(lim);
  lim->add_option("--qmax", qmax, "Degrees of the initial spaces")->check(CLI::Range(1, 8));
  lim->callback([&] {
    action = [&] {
      const Scheme x = load_scheme(scheme_arg);
      check_bounds(cfg, x, qmax);
      const Scheme l(x.name() + "-limit", limit_scheme(x, OneParamSubgroup::parse(rho_arg), qmax));
      const auto gens = l.minimal_generators(qmax);
      if (cfg.format == "json") {
        json arr = json::array();
        for (const auto& f : gens) arr.push_back(format_polynomial(l.ctx(), f));
        out << json{{"r", l.r()}, {"generators", arr}}.dump() << "\n";
      } else {
        out << write_ideal(l.ctx(), gens);
      }
      return 0;
    };
  });

  auto* divisor = app.add_subcommand("divisor", "Divisor classes of syzygy bundles");
  divisor->require_subcommand(1);
  auto* k3 = divisor->add_subcommand("k3", "c1(S_{p,q}) over the moduli of polarized K3 surfaces");
  k3->add_option("--g", g)->required()->check(CLI::Range(2, 1000));
  k3->add_option("--p", p)->required();
  k3->add_option("--q", q)->required();
  k3->add_option("--basis", basis, "A: lambda, kappa11, kappa30. B: lambda, gamma")->check(CLI::IsMember({"A", "B"}));
  k3->callback([&] {
    action = [&] {
      DivisorClass d = c1_S_pq_k3(g, p, q);
      if (parse_basis(basis) == DivisorBasis::K3B) d = d.to_k3b();
      print_divisor(out, cfg, d);
      return 0;
    };
  });
  auto* mg = divisor->add_subcommand("mg", "c1(S_{p,q}) over the moduli of curves");
  mg->add_option("--g", g)->required()->check(CLI::Range(2, 1000));
  mg->add_option("--p", p)->required();
  mg->add_option("--q", q)->required();
  mg->callback([&] {
    action = [&] {
      const DivisorClass d = c1_S_pq_mg(g, p, q);
      std::vector<std::pair<std::string, std::string>> extra;
      if (d.coeff("delta") != 0) extra.emplace_back("slope", to_string(slope(d)));
      print_divisor(out, cfg, d, extra);
      return 0;
    };
  });
  auto* hk = divisor->add_subcommand("hk", "Genus 6 polarization and its log canonical alpha");
  hk->add_option("--beta", beta_arg)->required();
  hk->callback([&] {
    action = [&] {
      const Rat beta = parse_rat(beta_arg);
      const DivisorClass d = polarization(beta);
      print_divisor(out, cfg, d, {{"slope", to_string(slope(d))}, {"alpha", to_string(alpha_of_slope(slope(d)))}});
      return 0;
    };
  });

  app.add_subcommand("verify", "Run the regression anchors")->callback([&] { action = [&] { return cmd_verify(out, cfg); }; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  if (cfg.threads > 0) set_thread_count(cfg.threads);
  try {
    return action ? action() : 2;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
  }
  return 2;
}

}  // namespace syzstab
