#pragma once

// Regression values, frozen from the first full run (x86-64, IEEE doubles,
// ascending-p / ascending-k accumulation). Any change here needs a reason.

inline constexpr double kGoldenS2 = 1.2984911998667472;               // S(2), p <= 1e6
inline constexpr double kGoldenResidualK2X200 = -31.530875369165329;  // bh_residual(2, 200, 1e5)
inline constexpr double kGoldenD20 = 0.11700806115328509;             // D(20, 8000), p <= 1e5
inline constexpr double kGoldenD40 = 0.080349292967146865;            // D(40, 64000)
inline constexpr double kGoldenD80 = 0.050624326596049776;            // D(80, 512000)
