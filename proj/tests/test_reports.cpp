#include <doctest.h>

#include "superfft/reports.hpp"

using namespace superfft;

TEST_CASE("form serialization") {
  Json j = form_to_json(FormSpec::standard_even(1, 1));
  CHECK(j["m"] == 1);
  CHECK(j["n"] == 1);
  CHECK(j["parity"] == "even");
  CHECK(j["gram"][0][0] == "1");
  CHECK(j["gram"][1][2] == "-1");
  CHECK(j["gram"][2][1] == "1");

  Json jo = form_to_json(FormSpec::standard_odd(2));
  CHECK(jo["parity"] == "odd");
  CHECK(jo["m"] == 2);
  CHECK(jo["n"] == 2);
  CHECK(jo["gram"][0][2] == "1");
}

TEST_CASE("matrix rows with the block delimiter") {
  RingPtr ring = RingSpec::make({"x"}, {"th"});
  SuperDim dim{1, 1};
  SuperMatrix m(ring, dim, dim, Parity::Even);
  m.set(0, 0, parse_gpoly(ring, "3/2*x"));
  m.set(1, 0, parse_gpoly(ring, "th"));
  auto rows = matrix_rows_text(m);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0] == "3/2*x | 0");
  CHECK(rows[1] == "th | 0");
}

TEST_CASE("fft report document") {
  FftReport r = fft_spanning_report(Group::OSp, 1, 1, 2, kDefaultMaxCells, true);
  Json j = to_json(r);
  CHECK(j["schema"] == 1);
  CHECK(j["group"] == "osp");
  CHECK(j["m"] == 1);
  CHECK(j["n"] == 1);
  CHECK(j["N"] == 2);
  CHECK(j["n_matchings"] == 1);
  CHECK(j["rank"] == 1);
  CHECK(j["invariant_dim"] == 1);
  CHECK(j["pass"] == true);
  REQUIRE(j.contains("basis"));
  CHECK(j["basis"].size() == 1);
  // tuples print 1-based
  CHECK(j["basis"][0][0]["tuple"][0] >= 1);
}

TEST_CASE("pfaffian certificate document") {
  GenericConfig cfg = GenericConfig::make(1, 0);
  PfaffianCertificate cert = super_pfaffian(cfg);
  verify_sosp_invariance(cfg, cert);
  Json j = to_json(cert, true, std::nullopt);
  CHECK(j["schema"] == 1);
  CHECK(j["m"] == 1);
  CHECK(j["n"] == 0);
  CHECK(j["is_polynomial"] == true);
  CHECK(j["square_ok"] == true);
  CHECK(j["lie_invariant"] == true);
  CHECK(j["reflection_sign"] == "-1");
  CHECK(j["delta_terms"] == 1);
  CHECK(j["delta"] == "x1_1");
  CHECK(!j.contains("factorization_ok"));

  Json jf = to_json(cert, false, true);
  CHECK(jf["factorization_ok"] == true);
  CHECK(!jf.contains("delta"));
}
