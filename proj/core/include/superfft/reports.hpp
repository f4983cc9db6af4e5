#pragma once

// Machine-readable reports. All documents carry "schema": 1 and serialize
// with a fixed field order, so identical runs produce byte-identical output.

#include <nlohmann/json.hpp>

#include <optional>
#include <string>
#include <vector>

#include "superfft/invariants.hpp"
#include "superfft/pfaffian.hpp"

namespace superfft {

using Json = nlohmann::ordered_json;

inline constexpr int kReportSchema = 1;

Json to_json(const FftReport& report);
Json to_json(const PfaffianCertificate& cert, bool include_delta,
             std::optional<bool> factorization_ok);

/// {m, n, parity, gram: rows of rational strings}
Json form_to_json(const FormSpec& f);

/// Row-major entry strings in the canonical polynomial format, with " | "
/// at the even/odd column boundary.
std::vector<std::string> matrix_rows_text(const SuperMatrix& m);

}  // namespace superfft
