#pragma once

#include <array>

// Published reference numbers for the gaussian approximation experiment and
// the cameraman window sweep. Only trends are expected to carry over to the
// bundled synthetic image.
namespace kantorovich::reference {

struct Table1Entry {
    int n;
    double classical_l1;
    double probabilistic_l1;
};

inline constexpr std::array<Table1Entry, 4> kTable1{{
    {5, 0.086, 0.091},
    {15, 0.043, 0.048},
    {25, 0.021, 0.027},
    {35, 0.010, 0.018},
}};

/// Relative half-width of the acceptance band around kTable1 classical values.
inline constexpr double kTable1RelativeBand = 0.35;

struct WindowEntry {
    int window;
    double psnr;
    double ssim;
    double mae;
    double var_abs_err;
};

/// Classical window averaging.
inline constexpr std::array<WindowEntry, 3> kTable2{{
    {3, 29.45, 0.8590, 0.0174, 0.00083128},
    {7, 25.10, 0.7185, 0.0286, 0.00227373},
    {15, 22.21, 0.6155, 0.0402, 0.00439862},
}};

/// Expected metrics of the noisy pipeline.
inline constexpr std::array<WindowEntry, 3> kTable3{{
    {3, 28.48, 0.8421, 0.0305, 0.000129},
    {7, 28.98, 0.8797, 0.0274, 0.000081},
    {15, 27.86, 0.8446, 0.0283, 0.000047},
}};

inline constexpr double kNoiseStd = 0.02;

}  // namespace kantorovich::reference
