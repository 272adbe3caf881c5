#pragma once

#include <array>

namespace portes::detail {

// alpha and beta as functions of the tail-ratio statistics (nu_alpha rows,
// nu_beta columns)
extern const std::array<double, 15> kAlphaTable_rows;
extern const std::array<double, 7> kAlphaTable_cols;
extern const std::array<std::array<double, 7>, 15> kAlphaTable;
extern const std::array<double, 15> kBetaTable_rows;
extern const std::array<double, 7> kBetaTable_cols;
extern const std::array<std::array<double, 7>, 15> kBetaTable;

// interquartile range and median shift of the standard law (alpha rows
// ascending, |beta| columns)
extern const std::array<double, 16> kIqrTable_rows;
extern const std::array<double, 5> kIqrTable_cols;
extern const std::array<std::array<double, 5>, 16> kIqrTable;
extern const std::array<double, 16> kShiftTable_rows;
extern const std::array<double, 5> kShiftTable_cols;
extern const std::array<std::array<double, 5>, 16> kShiftTable;

}  // namespace portes::detail
