#pragma once

/// Discrete sandpile on the (s+1)x(s+1) lattice over the unit square, used as
/// an independent numerical cross-check of the exact solver: relaxing the
/// all-3 state with one extra grain per marked point produces a deviation set
/// that hugs the exact tropical curve, and topplings/s approximates the series.

#include <cstdint>
#include <string>
#include <vector>

#include "tropsand/arrangement.hpp"
#include "tropsand/series.hpp"

namespace tropsand {

class SandpileGrid {
public:
    explicit SandpileGrid(int s);

    int scale() const { return s_; }
    int width() const { return s_ + 1; }

    int32_t grains(int x, int y) const { return grains_[idx(x, y)]; }
    uint32_t topplings(int x, int y) const { return topplings_[idx(x, y)]; }
    void set_grains(int x, int y, int32_t g) { grains_[idx(x, y)] = g; }
    void add_grain(int x, int y) { ++grains_[idx(x, y)]; }

    bool stable() const;

    /// Row-major backing stores (index y * width + x).
    const std::vector<int32_t>& grain_data() const { return grains_; }
    const std::vector<uint32_t>& toppling_data() const { return topplings_; }

private:
    friend SandpileGrid relax(SandpileGrid, int);
    size_t idx(int x, int y) const { return static_cast<size_t>(y) * (s_ + 1) + x; }

    int s_;
    std::vector<int32_t> grains_;
    std::vector<uint32_t> topplings_;
};

/// Scheduling policies for relaxation; the stable result and the toppling
/// function are identical for all of them (tested, not assumed).
enum TopplePolicy : int {
    kPolicyQueue = 0,
    kPolicyStack = 1,
    kPolicyRowSweep = 2,
};

/// All-3 state plus one extra grain at each marked point. Points must be
/// lattice points (x/s, y/s) with integer 1 <= x,y <= s-1, pairwise distinct.
SandpileGrid tropical_state(int s, const std::vector<RPoint>& points);

/// Topples until stable; grains crossing the grid edge vanish. Counts
/// topplings per vertex. Batch-topples floor(grains/4) at once.
SandpileGrid relax(SandpileGrid grid, int policy = kPolicyQueue);

/// Vertices whose grain count differs from 3. Requires a stable grid.
std::vector<std::pair<int, int>> deviation_set(const SandpileGrid& stable);

struct DeviationReport {
    int s = 0;
    int radius = 0;
    size_t deviation_cells = 0;
    size_t curve_cells = 0;
    Rational sup_norm_gap_exact;   // max over vertices of |topplings/s - f|
    double sup_norm_gap = 0.0;
    double coverage_deviation_to_curve = 1.0;
    double coverage_curve_to_deviation = 1.0;
};

/// Compares a stable relaxed state against the exact series: sup-norm gap of
/// topplings/s vs f, and symmetric coverage between the deviation set and the
/// rasterized curve at the given cell radius (Chebyshev distance).
DeviationReport compare_with_exact(const TropicalSeries& f, const SandpileGrid& stable,
                                   int radius = 3);

/// Binary PGM (P5, maxval 3) of the grain counts, top row y = s.
std::string to_pgm(const SandpileGrid& grid);

/// Topplings as unsigned 32-bit little-endian, row-major (y rows ascending).
std::vector<unsigned char> topplings_bytes_le(const SandpileGrid& grid);

} // namespace tropsand
