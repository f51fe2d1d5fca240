// su2cs: spectra, PNCS amplitudes, wavefunction grids, partition functions,
// time-evolution phases and the verification suite from the command line.

#include <CLI11.hpp>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <string>

#include "su2cs/coherent.hpp"
#include "su2cs/coupled_osc.hpp"
#include "su2cs/errors.hpp"
#include "su2cs/numerics.hpp"
#include "su2cs/verification.hpp"
#include "su2cs/wavefn.hpp"

namespace {

using nlohmann::json;
using su2cs::HalfInt;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

HalfInt half_flag(double value, const char* flag) {
  try {
    return HalfInt::from_double(value);
  } catch (const su2cs::DomainError&) {
    throw UsageError(std::string(flag) + " must be a multiple of 0.5");
  }
}

json complex_json(su2cs::cplx z) { return json{{"re", z.real()}, {"im", z.imag()}}; }

void append_double(std::string& out, double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  out.append(buf, res.ptr);
}

struct OscFlags {
  double omega1 = 1.0;
  double omega2 = 1.0;
  double lambda = 0.0;
  void add(CLI::App* cmd) {
    cmd->add_option("--omega1", omega1, "frequency of mode a")->required();
    cmd->add_option("--omega2", omega2, "frequency of mode b")->required();
    cmd->add_option("--lambda", lambda, "coupling strength")->required();
  }
  su2cs::OscillatorSpec spec() const { return {omega1, omega2, lambda}; }
};

int run(int argc, char** argv) {
  CLI::App app{"SU(2) number coherent states and two coupled oscillators"};
  app.require_subcommand(1);

  OscFlags osc_spectrum, osc_partition, osc_evolve;
  double j = 0.0, mu = 0.0, theta = 0.0, phi = 0.0, temperature = 1.0, t = 0.0;
  double rho_max = su2cs::kDefaultRhoMax;
  int n_rho = su2cs::kDefaultRadialPoints, n_angle = 128;
  std::string mode = "paper", out_path;
  double jmax = 10.0;
  int nmax = 20;
  std::uint64_t seed = 42;
  bool timings = false;

  CLI::App* spectrum = app.add_subcommand("spectrum", "energies E(j, mu) of one block");
  osc_spectrum.add(spectrum);
  spectrum->add_option("--j", j, "block label j (multiple of 0.5)")->required();

  CLI::App* pncs = app.add_subcommand("pncs", "number coherent state amplitudes, mu ascending");
  pncs->add_option("--j", j)->required();
  pncs->add_option("--mu", mu)->required();
  pncs->add_option("--theta", theta, "in [0, pi)")->required();
  pncs->add_option("--phi", phi)->required();

  CLI::App* wave = app.add_subcommand("wavefunction", "PNCS wavefunction on a polar grid, CSV");
  wave->add_option("--j", j)->required();
  wave->add_option("--mu", mu)->required();
  wave->add_option("--theta", theta)->required();
  wave->add_option("--phi", phi)->required();
  wave->add_option("--rho-max", rho_max)->capture_default_str();
  wave->add_option("--n-rho", n_rho)->capture_default_str();
  wave->add_option("--n-angle", n_angle)->capture_default_str();
  wave->add_option("--out", out_path, "CSV output file")->required();

  CLI::App* partition = app.add_subcommand("partition", "partition function of one block");
  osc_partition.add(partition);
  partition->add_option("--j", j)->required();
  partition->add_option("--temperature", temperature, "kT > 0")->required();
  partition->add_option("--mode", mode)->check(CLI::IsMember({"paper", "exact"}))->capture_default_str();

  CLI::App* evolve = app.add_subcommand("evolve", "time-evolution phase exp(-i E t)");
  osc_evolve.add(evolve);
  evolve->add_option("--j", j)->required();
  evolve->add_option("--mu", mu)->required();
  evolve->add_option("--t", t)->required();

  CLI::App* verify = app.add_subcommand("verify", "run every named check, exit 0 iff all pass");
  verify->add_option("--jmax", jmax)->capture_default_str();
  verify->add_option("--nmax", nmax)->capture_default_str();
  verify->add_option("--seed", seed)->capture_default_str();
  verify->add_flag("--timings", timings, "include per-check wall time (output no longer byte-stable)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*spectrum) {
      json out = json::array();
      for (const auto& entry : su2cs::spectrum(osc_spectrum.spec(), half_flag(j, "--j")))
        out.push_back({{"mu", entry.mu.value()}, {"energy", entry.energy}});
      std::cout << out.dump() << '\n';
    } else if (*pncs) {
      const HalfInt hj = half_flag(j, "--j");
      const HalfInt hmu = half_flag(mu, "--mu");
      const su2cs::StateVector s = su2cs::pncs(hj, hmu, su2cs::coherent_params(theta, phi));
      json out = json::array();
      for (std::size_t i = 0; i < s.amplitudes.size(); ++i) {
        json a = complex_json(s.amplitudes[i]);
        a["mu"] = HalfInt::from_twice(-hj.twice() + 2 * static_cast<int>(i)).value();
        out.push_back(a);
      }
      std::cout << out.dump() << '\n';
    } else if (*wave) {
      const HalfInt hj = half_flag(j, "--j");
      const HalfInt hmu = half_flag(mu, "--mu");
      const su2cs::PolarGrid grid = su2cs::uniform_grid(rho_max, n_rho, n_angle);
      const auto table = su2cs::grid_eval(hj, hmu, su2cs::coherent_params(theta, phi), grid);
      std::ofstream file(out_path, std::ios::binary);
      if (!file) throw std::runtime_error("cannot open " + out_path);
      std::string line;
      file << "rho,angle,re,im\n";
      for (const auto& row : table) {
        line.clear();
        append_double(line, row.rho);
        line += ',';
        append_double(line, row.angle);
        line += ',';
        append_double(line, row.re);
        line += ',';
        append_double(line, row.im);
        line += '\n';
        file << line;
      }
      if (!file) throw std::runtime_error("write failed: " + out_path);
    } else if (*partition) {
      const auto m = mode == "paper" ? su2cs::PartitionMode::paper : su2cs::PartitionMode::exact;
      std::cout << json(su2cs::partition_function(osc_partition.spec(), half_flag(j, "--j"), {temperature}, m)).dump()
                << '\n';
    } else if (*evolve) {
      const HalfInt hj = half_flag(j, "--j");
      const HalfInt hmu = half_flag(mu, "--mu");
      su2cs::require_valid_pair(hj, hmu);
      std::cout << complex_json(su2cs::evolve_phase(osc_evolve.spec(), hj, hmu, t)).dump() << '\n';
    } else if (*verify) {
      if (nmax < 0) throw UsageError("--nmax must be >= 0");
      const su2cs::VerifyConfig cfg{half_flag(jmax, "--jmax"), nmax, seed};
      const su2cs::VerificationReport report = su2cs::run_verification(cfg);
      json checks = json::array();
      for (const auto& c : report.checks) {
        json item{{"name", c.name},         {"group", c.group},   {"max_error", c.max_error},
                  {"tolerance", c.tolerance}, {"passed", c.passed}};
        if (!c.note.empty()) item["note"] = c.note;
        if (timings) item["seconds"] = c.seconds;
        checks.push_back(item);
      }
      const json out{{"jmax", cfg.jmax.value()}, {"nmax", cfg.nmax},    {"seed", cfg.seed},
                     {"checks", checks},         {"overall", report.overall}};
      std::cout << out.dump(2) << '\n';
      return report.overall ? kExitOk : kExitFailure;
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const su2cs::DomainError& e) {
    std::cerr << "domain error: " << e.what() << '\n';
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
  }
  return kExitFailure;
}
