#pragma once

#include <filesystem>
#include <string>

#include "json.hpp"

#include "shnr/matrix.hpp"
#include "shnr/suite.hpp"

namespace shnr {

using Json = nlohmann::ordered_json;

/// {"rows": r, "cols": c, "data": [[re, im], ...]} in row-major order.
Json matrix_to_json(const ComplexMatrix& m);
/// Errors: Parse (missing fields, wrong length, non-numbers), NonFinite.
ComplexMatrix matrix_from_json(const Json& j);

Json vector_to_json(const Vector& v);
Vector vector_from_json(const Json& j);

/// Errors: Parse (unreadable file or malformed JSON).
ComplexMatrix read_matrix_file(const std::filesystem::path& path);
void write_matrix_file(const std::filesystem::path& path, const ComplexMatrix& m);

Json report_to_json(const SuiteReport& report);
/// Errors: Parse.
SuiteReport report_from_json(const Json& j);

/// Pretty-printed report text with a trailing newline; identical reports
/// give identical bytes.
std::string dump_report(const SuiteReport& report);
void write_report_file(const std::filesystem::path& path, const SuiteReport& report);
SuiteReport read_report_file(const std::filesystem::path& path);

}  // namespace shnr
