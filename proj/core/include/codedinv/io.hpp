#pragma once

#include <filesystem>

#include "codedinv/matrix.hpp"

namespace codedinv {

/// Plain CSV: one matrix row per line, comma-separated decimal values, no
/// header; dimensions inferred. Values are written with 17 significant
/// digits so a save/load round trip is exact.
void save_matrix_csv(const RealMatrix& m, const std::filesystem::path& path);
RealMatrix load_matrix_csv(const std::filesystem::path& path);

/// Complex matrix as interleaved re,im cells (2*cols values per line).
void save_matrix_csv(const ComplexMatrix& m, const std::filesystem::path& path);

} // namespace codedinv
