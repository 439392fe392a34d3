#pragma once

#include <string>

#include "quditbraid/report.hpp"
#include "quditbraid/tensor.hpp"

namespace quditbraid {

// Emitters produce a fixed field order and serialize every double with 17
// significant digits, so output is byte-stable and round-trips exactly.
std::string to_json(const ComplexMatrix& m);
std::string to_json(const StateVector& psi);
std::string to_json(const VerificationReport& report);

ComplexMatrix matrix_from_json(const std::string& text);
StateVector state_from_json(const std::string& text);

ComplexMatrix read_matrix_file(const std::string& path);
StateVector read_state_file(const std::string& path);

void write_text_file(const std::string& path, const std::string& text);

}  // namespace quditbraid
