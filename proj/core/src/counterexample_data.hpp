#pragma once

// Geometric input for the counterexample replay. These facts come from a
// computation with the defining equations of X_D, which this library does not
// redo; everything else in the replay is derived from them.

namespace rankclass::counterexample {

inline constexpr int kK = 4;
inline constexpr int kN = 8;

// Diagonal diagram of size 4 inside a 4 x 4 box.
inline constexpr int kDiagonalSize = 4;

// [X_D] = sigma_1^4 - sigma_{2,2}.
inline constexpr int kSigmaOnePower = 4;
inline constexpr const char* kSubtractedClass = "2,2";

inline constexpr long kDegreeXD = 21384;
inline constexpr long kDualDimension = 24024;
inline constexpr long kDiscrepancy = 2640;
inline constexpr const char* kDiscrepancyShape = "4,4,2,2";

// Regular representation of S_4.
inline constexpr const char* kRegularExpansion =
    "1*s[1,1,1,1] + 3*s[2,1,1] + 2*s[2,2] + 3*s[3,1] + 1*s[4]";

}  // namespace rankclass::counterexample
