#include <doctest.h>

#include <nlohmann/json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

std::string bin() {
  const char* b = std::getenv("SUPERFFT_BIN");
  REQUIRE_MESSAGE(b != nullptr, "SUPERFFT_BIN must point at the superfft binary");
  return b;
}

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

RunResult run(const std::string& args, const std::string& env = "") {
  std::string out_path = "cli_stdout.tmp";
  std::string cmd = env + " " + bin() + " " + args + " > " + out_path + " 2> cli_stderr.tmp";
  int status = std::system(cmd.c_str());
  int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return RunResult{code, slurp(out_path)};
}

nlohmann::json parse(const RunResult& r) { return nlohmann::json::parse(r.out); }

}  // namespace

TEST_CASE("fft pass cases") {
  RunResult r = run("fft --group osp --m 1 --n 1 --N 4");
  CHECK(r.exit_code == 0);
  auto j = parse(r);
  CHECK(j["schema"] == 1);
  CHECK(j["pass"] == true);
  CHECK(j["group"] == "osp");
  CHECK(j["N"] == 4);

  RunResult odd = run("fft --group osp --m 1 --n 1 --N 3");
  CHECK(odd.exit_code == 0);
  auto jo = parse(odd);
  CHECK(jo["invariant_dim"] == 0);
  CHECK(jo["n_matchings"] == 0);
  CHECK(jo["pass"] == true);

  RunResult pe = run("fft --group pe --n 2 --N 2");
  CHECK(pe.exit_code == 0);
  CHECK(parse(pe)["pass"] == true);
}

TEST_CASE("fft guard and usage errors") {
  RunResult guard = run("fft --group osp --m 1 --n 1 --N 12");
  CHECK(guard.exit_code == 2);

  RunResult env_guard = run("fft --group osp --m 1 --n 1 --N 2", "SUPERFFT_MAX_CELLS=4");
  CHECK(env_guard.exit_code == 2);

  RunResult raised = run("fft --group osp --m 1 --n 1 --N 2 --max-cells 9");
  CHECK(raised.exit_code == 0);

  RunResult usage = run("fft --n 1 --N 2");
  CHECK(usage.exit_code == 64);
  RunResult unknown = run("fft --group osp --n 1 --N 2 --bogus");
  CHECK(unknown.exit_code == 64);
}

TEST_CASE("pfaffian command") {
  RunResult r = run("pfaffian --m 1 --n 1");
  CHECK(r.exit_code == 0);
  auto j = parse(r);
  CHECK(j["is_polynomial"] == true);
  CHECK(j["square_ok"] == true);
  CHECK(j["lie_invariant"] == true);
  CHECK(j["reflection_sign"] == "-1");
  CHECK(j["m1_closed_form_ok"] == true);

  RunResult f = run("pfaffian --m 2 --n 1 --factorization");
  CHECK(f.exit_code == 0);
  CHECK(parse(f)["factorization_ok"] == true);

  RunResult d = run("pfaffian --m 1 --n 0 --print-delta");
  CHECK(d.exit_code == 0);
  CHECK(parse(d)["delta"] == "x1_1");

  RunResult guard = run("pfaffian --m 4 --n 1");
  CHECK(guard.exit_code == 2);
}

TEST_CASE("reports are byte-identical across runs") {
  RunResult a = run("fft --group osp --m 1 --n 1 --N 4 --emit-basis --out cli_a.json");
  RunResult b = run("fft --group osp --m 1 --n 1 --N 4 --emit-basis --out cli_b.json");
  CHECK(a.exit_code == 0);
  CHECK(b.exit_code == 0);
  std::string file_a = slurp("cli_a.json"), file_b = slurp("cli_b.json");
  CHECK(!file_a.empty());
  CHECK(file_a == file_b);
}

TEST_CASE("selftest") {
  RunResult ok = run("selftest --only grassmann");
  CHECK(ok.exit_code == 0);
  CHECK(parse(ok)["pass"] == true);

  RunResult broken = run("selftest --only grassmann --inject-sign-fault");
  CHECK(broken.exit_code == 1);
  auto j = parse(broken);
  CHECK(j["pass"] == false);
  CHECK(j["suite"] == "grassmann");
}
