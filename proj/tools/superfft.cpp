// superfft: verification harness for matching-generator spanning checks and
// the super Pfaffian certificate. One command per process; every report is a
// single UTF-8 JSON document; identical configurations produce byte-identical
// output.
//
// Exit codes: 0 pass, 1 verification failure, 2 size guard, 64 usage.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "superfft/invariants.hpp"
#include "superfft/pfaffian.hpp"
#include "superfft/reports.hpp"
#include "superfft/selftest.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitGuard = 2;
constexpr int kExitUsage = 64;

std::optional<uint64_t> env_max_cells() {
  const char* raw = std::getenv("SUPERFFT_MAX_CELLS");
  if (!raw || !*raw) return std::nullopt;
  char* end = nullptr;
  unsigned long long v = std::strtoull(raw, &end, 10);
  if (end == raw || *end != '\0') return std::nullopt;
  return static_cast<uint64_t>(v);
}

void emit(const superfft::Json& doc, const std::string& out_path) {
  std::string text = doc.dump(2);
  text.push_back('\n');
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(out_path, std::ios::binary);
    if (!f) {
      std::cerr << "cannot open output file: " << out_path << "\n";
      std::exit(kExitUsage);
    }
    f << text;
  }
}

struct FftArgs {
  std::string group;
  uint32_t m = 0, n = 0, N = 0;
  uint64_t max_cells = superfft::kDefaultMaxCells;
  bool max_cells_set = false;
  bool emit_basis = false;
  std::string out;
};

int run_fft(const FftArgs& args) {
  using namespace superfft;
  uint64_t budget = args.max_cells_set ? args.max_cells
                                       : env_max_cells().value_or(kDefaultMaxCells);
  Group group = args.group == "osp" ? Group::OSp : Group::Pe;
  try {
    FftReport report = fft_spanning_report(group, args.m, args.n, args.N, budget,
                                           args.emit_basis);
    emit(to_json(report), args.out);
    return report.pass ? kExitPass : kExitVerifyFailed;
  } catch (const GuardExceeded& e) {
    std::cerr << "guard: " << e.what() << " (raise --max-cells or SUPERFFT_MAX_CELLS)\n";
    return kExitGuard;
  }
}

struct PfaffianArgs {
  uint32_t m = 1, n = 0;
  bool factorization = false;
  bool print_delta = false;
  bool override_guard = false;
  std::string out;
};

int run_pfaffian(const PfaffianArgs& args) {
  using namespace superfft;
  if (args.m < 1) {
    std::cerr << "pfaffian requires --m >= 1\n";
    return kExitUsage;
  }
  // default guard m <= 3, n <= 2 (2mn <= 12 odd variables); the env budget,
  // when set, admits runs whose Grassmann stratum count 2^(2mn) fits it
  bool within_default = args.m <= 3 && args.n <= 2;
  if (!within_default && !args.override_guard) {
    std::optional<uint64_t> budget = env_max_cells();
    uint64_t strata = 2 * args.m * args.n >= 63
                          ? UINT64_MAX
                          : (uint64_t{1} << (2 * args.m * args.n));
    if (!budget || strata > *budget) {
      std::cerr << "guard: m=" << args.m << " n=" << args.n << " exceeds the default size "
                << "guard (m <= 3, n <= 2); pass --override-guard or set "
                << "SUPERFFT_MAX_CELLS to force\n";
      return kExitGuard;
    }
  }

  GenericConfig cfg = GenericConfig::make(args.m, args.n);
  PfaffianCertificate cert = super_pfaffian(cfg);
  if (cert.is_polynomial) verify_sosp_invariance(cfg, cert);
  std::optional<bool> factorization_ok;
  if (args.factorization && args.m >= 2) factorization_ok = verify_gram_factorization(cfg);

  emit(to_json(cert, args.print_delta, factorization_ok), args.out);

  bool pass = cert.is_polynomial && cert.square_ok && cert.lie_invariant &&
              cert.reflection_sign == superfft::Rational(-1) &&
              (!cert.m1_closed_form_ok || *cert.m1_closed_form_ok) &&
              (!factorization_ok || *factorization_ok);
  return pass ? kExitPass : kExitVerifyFailed;
}

struct SelftestArgs {
  std::string only;
  bool inject_sign_fault = false;
  uint64_t seed = 20260810;
  std::string out;
};

int run_selftest(const SelftestArgs& args) {
  using namespace superfft;
  SelftestOptions options;
  options.only = args.only;
  options.inject_sign_fault = args.inject_sign_fault;
  options.seed = args.seed;
  std::optional<SelftestFailure> failure = run_selftest(options);
  Json doc;
  doc["schema"] = kReportSchema;
  doc["command"] = "selftest";
  doc["seed"] = args.seed;
  doc["pass"] = !failure.has_value();
  if (failure) {
    doc["suite"] = failure->suite;
    doc["check"] = failure->check;
    doc["message"] = failure->message;
  }
  emit(doc, args.out);
  return failure ? kExitVerifyFailed : kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verification of matching-generator spanning and the super Pfaffian"};
  app.require_subcommand(1);

  FftArgs fft;
  CLI::App* fft_cmd = app.add_subcommand(
      "fft", "rank of the matching tensors vs the invariant subspace dimension");
  fft_cmd->add_option("--group", fft.group, "osp or pe")
      ->required()
      ->check(CLI::IsMember({"osp", "pe"}));
  fft_cmd->add_option("--m", fft.m, "even dimension (osp only; ignored for pe)");
  fft_cmd->add_option("--n", fft.n, "half the odd dimension (resp. n for pe)")->required();
  fft_cmd->add_option("--N", fft.N, "number of tensor slots")->required();
  fft_cmd->add_option("--max-cells", fft.max_cells, "cell budget ((m+2n)^N)")
      ->each([&fft](const std::string&) { fft.max_cells_set = true; });
  fft_cmd->add_flag("--emit-basis", fft.emit_basis, "dump the invariant basis coefficients");
  fft_cmd->add_option("--out", fft.out, "write the JSON report to this file");

  PfaffianArgs pf;
  CLI::App* pf_cmd = app.add_subcommand("pfaffian", "super Pfaffian certificate");
  pf_cmd->add_option("--m", pf.m, "number of generic vectors")->required();
  pf_cmd->add_option("--n", pf.n, "half the odd dimension")->required();
  pf_cmd->add_flag("--factorization", pf.factorization,
                   "also verify the Gram factorization identity (m >= 2)");
  pf_cmd->add_flag("--print-delta", pf.print_delta, "include the polynomial in the report");
  pf_cmd->add_flag("--override-guard", pf.override_guard, "allow sizes beyond m<=3, n<=2");
  pf_cmd->add_option("--out", pf.out, "write the JSON certificate to this file");

  SelftestArgs st;
  CLI::App* st_cmd = app.add_subcommand("selftest", "run the built-in property suites");
  st_cmd->add_option("--only", st.only,
                     "restrict to one suite (grassmann, superlinalg, forms, invariants, "
                     "superpfaffian)");
  st_cmd->add_flag("--inject-sign-fault", st.inject_sign_fault,
                   "corrupt the reference sign rule; the suite must fail");
  st_cmd->add_option("--seed", st.seed, "random seed");
  st_cmd->add_option("--out", st.out, "write the JSON record to this file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (fft_cmd->parsed()) return run_fft(fft);
    if (pf_cmd->parsed()) return run_pfaffian(pf);
    if (st_cmd->parsed()) return run_selftest(st);
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid request: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerifyFailed;
  }
  return kExitUsage;
}
