#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "syzstab/cli.hpp"
#include "syzstab/gallery.hpp"

using namespace syzstab;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("betti json for the quadric section") {
    const auto r = call({"betti", "--scheme", "sigma0-section", "--pmax", "4", "--qmax", "3", "--format", "json"});
    CHECK(r.code == 0);
    CHECK(r.out.find("{\"p\":1,\"q\":1,\"dim\":6}") != std::string::npos);
    CHECK(r.out.find("{\"p\":2,\"q\":1,\"dim\":5}") != std::string::npos);
    CHECK(r.out.find("{\"p\":2,\"q\":2,\"dim\":5}") != std::string::npos);
    CHECK(r.out.find("{\"p\":3,\"q\":2,\"dim\":6}") != std::string::npos);
    CHECK(r.out.find("{\"p\":1,\"q\":2,\"dim\":0}") != std::string::npos);
  }

  TEST_CASE("json output does not depend on the thread count") {
    const auto a = call({"--threads", "1", "betti", "--scheme", "sigma0-section", "--format", "json"});
    const auto b = call({"--threads", "4", "betti", "--scheme", "sigma0-section", "--format", "json"});
    CHECK(a.out == b.out);
    const auto c = call({"--threads", "1", "git", "wall", "--scheme", "C0", "--rho", "-7,-1,-1,-1,5,5", "--format", "json"});
    const auto d = call({"--threads", "3", "git", "wall", "--scheme", "C0", "--rho", "-7,-1,-1,-1,5,5", "--format", "json"});
    CHECK(c.out == d.out);
  }

  TEST_CASE("vgit at the wall") {
    const auto r = call({"git", "vgit", "--scheme", "C0", "--rho", "-7,-1,-1,-1,5,5", "--beta", "4", "--format", "json"});
    CHECK(r.code == 0);
    CHECK(r.out.find("\"weight\":\"0\"") != std::string::npos);
    CHECK(r.out.find("strictly semistable (probe)") != std::string::npos);
  }

  TEST_CASE("git hm and limit") {
    const auto r = call({"git", "hm", "--scheme", "scroll-1", "--p", "0", "--q", "2", "--rho", "-4,-4,2,2,2,2"});
    CHECK(r.code == 0);
    CHECK(r.out.find("= -6") != std::string::npos);
    const auto l = call({"git", "limit", "--scheme", "sigma0-section", "--rho", "-7,-1,-1,-1,5,5", "--qmax", "2"});
    CHECK(l.code == 0);
    CHECK(l.out.rfind("r=6\nx0^2\n", 0) == 0);
  }

  TEST_CASE("divisor commands") {
    CHECK(call({"divisor", "hk", "--beta", "4", "--format", "json"}).out ==
          "{\"basis\":\"Mg\",\"coeffs\":{\"lambda\":\"102\",\"delta\":\"-13\"},\"slope\":\"102/13\",\"alpha\":\"35/102\"}\n");
    CHECK(call({"divisor", "mg", "--g", "6", "--p", "1", "--q", "2", "--format", "json"}).out ==
          "{\"basis\":\"Mg\",\"coeffs\":{\"lambda\":\"47/2\",\"delta\":\"-3\"},\"slope\":\"47/6\"}\n");
    CHECK(call({"divisor", "k3", "--g", "7", "--p", "0", "--q", "2", "--basis", "B"}).out == "13*lambda + 1/4*gamma\n");
    CHECK(call({"divisor", "k3", "--g", "7", "--p", "0", "--q", "2", "--format", "csv"}).out ==
          "key,value\nbasis,K3A\nlambda,-13\nkappa11,1/6\nkappa30,4/3\n");
  }

  TEST_CASE("koszul and gallery") {
    CHECK(call({"koszul", "--scheme", "scroll-2", "--p", "3", "--q", "1"}).out == "K_{3,1}(scroll-2) = 3\n");
    const auto list = call({"gallery", "list", "--format", "json"});
    CHECK(list.code == 0);
    CHECK(list.out.find("\"elliptic-cone\"") != std::string::npos);
    CHECK(call({"gallery", "show", "carpet-2"}).out.find("FAIL") == std::string::npos);
  }

  TEST_CASE("export then reimport from a file") {
    const auto path = std::filesystem::temp_directory_path() / "syzstab-cli-roundtrip-sigma0.txt";
    {
      std::ofstream f(path);
      f << call({"gallery", "export", "sigma0"}).out;
    }
    const auto a = call({"betti", "--scheme", path.string(), "--pmax", "3", "--qmax", "2", "--format", "csv"});
    const auto b = call({"betti", "--scheme", "sigma0", "--pmax", "3", "--qmax", "2", "--format", "csv"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    std::filesystem::remove(path);
  }

  TEST_CASE("errors") {
    auto r = call({"betti", "--scheme", "no-such-thing"});
    CHECK(r.code == 2);
    CHECK(r.err.find("unknown scheme") != std::string::npos);
    r = call({"betti", "--scheme", "sigma0", "--qmax", "6"});
    CHECK(r.code == 2);
    CHECK(r.err.find("--force") != std::string::npos);
    CHECK(call({"betti", "--scheme", "carpet-5", "--qmax", "2"}).code == 2);
    CHECK(call({"koszul", "--scheme", "sigma0", "--p", "9", "--q", "2"}).code == 2);
    CHECK(call({"git", "hm", "--scheme", "C0", "--p", "0", "--q", "2", "--rho", "1,1"}).code == 2);
    CHECK(call({"divisor", "hk", "--beta", "1/0"}).code == 2);
    CHECK(call({"frobnicate"}).code == 2);
    CHECK(call({"--format", "xml", "verify"}).code == 2);

    const auto path = std::filesystem::temp_directory_path() / "syzstab-cli-bad.txt";
    {
      std::ofstream f(path);
      f << "r=3\nx0*x1 +\n";
    }
    r = call({"betti", "--scheme", path.string()});
    CHECK(r.code == 2);
    CHECK(r.err.find("line 2") != std::string::npos);
    std::filesystem::remove(path);
  }

  TEST_CASE("verify reports its anchors") {
    const auto r = call({"verify"});
    int pass = 0, fail = 0;
    std::istringstream lines(r.out);
    for (std::string line; std::getline(lines, line);) {
      if (line.rfind("PASS ", 0) == 0) ++pass;
      if (line.rfind("FAIL ", 0) == 0) ++fail;
    }
    CHECK(pass >= 25);
    CHECK(r.code == (fail == 0 ? 0 : 1));
  }

  TEST_CASE("help") {
    const auto r = call({"--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("verify") != std::string::npos);
  }
}
