#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "exacthnf/bench.hpp"
#include "exacthnf/denominators.hpp"
#include "exacthnf/hermite_driver.hpp"
#include "exacthnf/smith_massager.hpp"

namespace {

using namespace exacthnf;

constexpr int kExitOk = 0;
constexpr int kExitBadInput = 1;
constexpr int kExitFail = 2;
constexpr int kExitVerifyMismatch = 3;

IntMatrix loadMatrix(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  try {
    return IntMatrix::parse(in);
  } catch (const ParseError& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

void emit(const IntMatrix& m, const std::string& outPath) {
  if (outPath.empty()) {
    m.print(std::cout);
    return;
  }
  std::ofstream out(outPath);
  if (!out) throw std::runtime_error("cannot write '" + outPath + "'");
  m.print(out);
}

std::vector<std::size_t> parseSizes(const std::string& csv) {
  std::vector<std::size_t> v;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) v.push_back(std::stoul(tok));
  return v;
}

std::vector<unsigned> parseBits(const std::string& csv) {
  std::vector<unsigned> v;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ','))
    v.push_back(static_cast<unsigned>(std::stoul(tok)));
  return v;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Hermite normal forms of integer matrices"};
  app.require_subcommand(1);

  std::string inPath, outPath, algorithm = "massager";
  bool verify = true;

  auto* hnf = app.add_subcommand("hnf", "compute the Hermite normal form");
  hnf->add_option("input", inPath, "matrix file")->required();
  hnf->add_option("--algorithm", algorithm, "massager | classical")
      ->check(CLI::IsMember({"massager", "classical"}));
  hnf->add_flag("--verify,!--no-verify", verify, "certify the result (default on)");
  hnf->add_option("--out", outPath, "write the result here instead of stdout");

  std::string snfPath;
  auto* snf = app.add_subcommand("snf", "print the invariant factors");
  snf->add_option("input", snfPath, "matrix file")->required();

  std::string verifyA, verifyH;
  auto* ver = app.add_subcommand("verify", "check that H is the Hermite form of A");
  ver->add_option("matrix", verifyA, "input matrix file")->required();
  ver->add_option("hermite", verifyH, "candidate Hermite form file")->required();

  std::string sizesCsv = "32,64,128", bitsCsv = "32";
  unsigned trials = 1;
  std::uint64_t seed = 1;
  bool json = false;
  auto* bench = app.add_subcommand("bench", "random-matrix timing harness");
  bench->add_option("--sizes", sizesCsv, "comma-separated dimensions");
  bench->add_option("--bitlen", bitsCsv, "comma-separated entry bit lengths");
  bench->add_option("--trials", trials, "trials per configuration");
  bench->add_option("--seed", seed, "generator seed");
  bench->add_flag("--json", json, "machine-readable output");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*hnf) {
      const IntMatrix a = loadMatrix(inPath);
      CompactHermite h = algorithm == "classical" ? classicalHnf(a)
                                                  : hermiteForm(a, verify);
      if (algorithm == "classical" && verify && !verifyHermite(a, h)) {
        std::cerr << "error: FAIL (certification rejected the result)\n";
        return kExitFail;
      }
      emit(h.expand(), outPath);
      return kExitOk;
    }
    if (*snf) {
      const IntMatrix a = loadMatrix(snfPath);
      const MassagerBundle bundle = smithMassager(a);
      for (std::size_t i = 0; i < bundle.s.size(); ++i) {
        if (i) std::cout << ' ';
        std::cout << bundle.s.s(i).get_str();
      }
      std::cout << '\n';
      return kExitOk;
    }
    if (*ver) {
      const IntMatrix a = loadMatrix(verifyA);
      const IntMatrix hm = loadMatrix(verifyH);
      CompactHermite h(1);
      try {
        h = compress(hm);
      } catch (const std::invalid_argument& e) {
        std::cerr << "not a Hermite form: " << e.what() << '\n';
        return kExitVerifyMismatch;
      }
      if (!verifyHermite(a, h)) {
        std::cerr << "verification failed\n";
        return kExitVerifyMismatch;
      }
      std::cout << "ok\n";
      return kExitOk;
    }
    if (*bench) {
      const auto rows = runBench(parseSizes(sizesCsv), parseBits(bitsCsv), trials, seed);
      if (json) {
        nlohmann::json out = nlohmann::json::array();
        for (const auto& r : rows)
          out.push_back({{"n", r.n},
                         {"bitlen", r.bits},
                         {"algorithm", r.algorithm},
                         {"wallMillis", r.wallMillis},
                         {"limbOps", r.limbOps}});
        std::cout << out.dump(2) << '\n';
      } else {
        std::cout << benchTable(rows);
      }
      return kExitOk;
    }
  } catch (const SingularError& e) {
    std::cerr << "error: singular matrix (" << e.what() << ")\n";
    return kExitBadInput;
  } catch (const CertifyFail& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFail;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitBadInput;
  }
  return kExitBadInput;
}
