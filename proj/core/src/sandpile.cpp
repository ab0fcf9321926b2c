#include "tropsand/sandpile.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "tropsand/errors.hpp"

namespace tropsand {

SandpileGrid::SandpileGrid(int s) : s_(s) {
    if (s < 1) throw InputError("sandpile scale must be >= 1");
    grains_.assign(static_cast<size_t>(s + 1) * (s + 1), 0);
    topplings_.assign(grains_.size(), 0);
}

bool SandpileGrid::stable() const {
    return std::all_of(grains_.begin(), grains_.end(), [](int32_t g) { return g <= 3; });
}

SandpileGrid tropical_state(int s, const std::vector<RPoint>& points) {
    SandpileGrid grid(s);
    for (int y = 0; y <= s; ++y)
        for (int x = 0; x <= s; ++x) grid.set_grains(x, y, 3);
    std::set<std::pair<int, int>> seen;
    const Rational scale(s);
    for (const RPoint& p : points) {
        const Rational sx = p.x * scale;
        const Rational sy = p.y * scale;
        if (sx.raw().get_den() != 1 || sy.raw().get_den() != 1)
            throw InputError("tropical_state: point is not on the 1/s lattice");
        const long x = sx.raw().get_num().get_si();
        const long y = sy.raw().get_num().get_si();
        if (x < 1 || y < 1 || x > s - 1 || y > s - 1)
            throw InputError("tropical_state: lattice point not interior");
        if (!seen.emplace(x, y).second)
            throw InputError("tropical_state: duplicate point");
        grid.add_grain(static_cast<int>(x), static_cast<int>(y));
    }
    return grid;
}

SandpileGrid relax(SandpileGrid grid, int policy) {
    const int w = grid.width();
    const int s = grid.scale();
    auto& grains = grid.grains_;
    auto& tops = grid.topplings_;

    auto topple_batch = [&](int x, int y) -> bool {
        const size_t v = static_cast<size_t>(y) * w + x;
        const int32_t k = grains[v] / 4;
        if (k <= 0) return false;
        grains[v] -= 4 * k;
        tops[v] += static_cast<uint32_t>(k);
        if (x > 0) grains[v - 1] += k;
        if (x < s) grains[v + 1] += k;
        if (y > 0) grains[v - w] += k;
        if (y < s) grains[v + w] += k;
        return true;
    };

    if (policy == kPolicyRowSweep) {
        bool any = true;
        while (any) {
            any = false;
            for (int y = 0; y <= s; ++y)
                for (int x = 0; x <= s; ++x)
                    if (grains[static_cast<size_t>(y) * w + x] >= 4) any |= topple_batch(x, y);
        }
        return grid;
    }

    std::deque<std::pair<int, int>> work;
    std::vector<char> queued(grains.size(), 0);
    auto push = [&](int x, int y) {
        const size_t v = static_cast<size_t>(y) * w + x;
        if (queued[v] || grains[v] < 4) return;
        queued[v] = 1;
        work.emplace_back(x, y);
    };
    for (int y = 0; y <= s; ++y)
        for (int x = 0; x <= s; ++x) push(x, y);

    while (!work.empty()) {
        int x, y;
        if (policy == kPolicyStack) {
            std::tie(x, y) = work.back();
            work.pop_back();
        } else {
            std::tie(x, y) = work.front();
            work.pop_front();
        }
        queued[static_cast<size_t>(y) * w + x] = 0;
        if (!topple_batch(x, y)) continue;
        if (x > 0) push(x - 1, y);
        if (x < s) push(x + 1, y);
        if (y > 0) push(x, y - 1);
        if (y < s) push(x, y + 1);
        push(x, y); // may still hold 4+ after receiving from neighbors earlier
    }
    return grid;
}

std::vector<std::pair<int, int>> deviation_set(const SandpileGrid& stable) {
    if (!stable.stable()) throw InputError("deviation_set: grid is not stable");
    std::vector<std::pair<int, int>> out;
    const int s = stable.scale();
    for (int y = 0; y <= s; ++y)
        for (int x = 0; x <= s; ++x)
            if (stable.grains(x, y) != 3) out.emplace_back(x, y);
    return out;
}

DeviationReport compare_with_exact(const TropicalSeries& f, const SandpileGrid& stable,
                                   int radius) {
    if (!stable.stable()) throw InputError("compare_with_exact: grid is not stable");
    const int s = stable.scale();
    const int w = s + 1;
    DeviationReport rep;
    rep.s = s;
    rep.radius = radius;

    // Exact series values on the lattice, one incremental pass per monomial.
    std::vector<Rational> values;
    values.resize(static_cast<size_t>(w) * w);
    bool first_mono = true;
    const Rational inv_s = Rational(1) / Rational(s);
    for (const auto& [e, c] : f.monomials()) {
        const Rational dx = Rational(e.i) * inv_s;
        const Rational dy = Rational(e.j) * inv_s;
        Rational row_start = c;
        for (int y = 0; y <= s; ++y) {
            Rational v = row_start;
            for (int x = 0; x <= s; ++x) {
                const size_t at = static_cast<size_t>(y) * w + x;
                if (first_mono || v < values[at]) values[at] = v;
                v += dx;
            }
            row_start += dy;
        }
        first_mono = false;
    }

    Rational sup(0);
    for (int y = 0; y <= s; ++y) {
        for (int x = 0; x <= s; ++x) {
            Rational gap = Rational(static_cast<long>(stable.topplings(x, y))) * inv_s -
                           values[static_cast<size_t>(y) * w + x];
            if (gap.is_negative()) gap = -gap;
            if (gap > sup) sup = std::move(gap);
        }
    }
    rep.sup_norm_gap_exact = sup;
    rep.sup_norm_gap = sup.to_double();

    // Rasterize the curve: mark each lattice vertex whose closed half-cell
    // box meets a curve edge.
    std::vector<char> curve_mark(values.size(), 0);
    const FaceArrangement arr = build_arrangement(f);
    const Rational half = inv_s / Rational(2);
    for (const CurveEdge& e : arr.curve_edges) {
        const Rational lox = min(e.a.x, e.b.x) - half;
        const Rational hix = max(e.a.x, e.b.x) + half;
        const Rational loy = min(e.a.y, e.b.y) - half;
        const Rational hiy = max(e.a.y, e.b.y) + half;
        const long x0 = std::max(0L, (lox * Rational(s)).ceil_long());
        const long y0 = std::max(0L, (loy * Rational(s)).ceil_long());
        for (long y = y0; y <= s; ++y) {
            const Rational cy = Rational(y) * inv_s;
            if (cy - half > hiy) break;
            for (long x = x0; x <= s; ++x) {
                const Rational cx = Rational(x) * inv_s;
                if (cx - half > hix) break;
                const size_t at = static_cast<size_t>(y) * w + x;
                if (curve_mark[at]) continue;
                if (segment_intersects_box(e.a, e.b, cx - half, cx + half, cy - half, cy + half))
                    curve_mark[at] = 1;
            }
        }
    }

    std::vector<char> dev_mark(values.size(), 0);
    const auto dev = deviation_set(stable);
    for (const auto& [x, y] : dev) dev_mark[static_cast<size_t>(y) * w + x] = 1;

    auto coverage = [&](const std::vector<char>& from, const std::vector<char>& to) {
        size_t total = 0, covered = 0;
        for (int y = 0; y <= s; ++y) {
            for (int x = 0; x <= s; ++x) {
                if (!from[static_cast<size_t>(y) * w + x]) continue;
                ++total;
                bool hit = false;
                for (int dy = -radius; dy <= radius && !hit; ++dy) {
                    for (int dx = -radius; dx <= radius && !hit; ++dx) {
                        const int nx = x + dx, ny = y + dy;
                        if (nx < 0 || ny < 0 || nx > s || ny > s) continue;
                        hit = to[static_cast<size_t>(ny) * w + nx] != 0;
                    }
                }
                if (hit) ++covered;
            }
        }
        return total == 0 ? 1.0 : static_cast<double>(covered) / static_cast<double>(total);
    };

    rep.deviation_cells = dev.size();
    rep.curve_cells = static_cast<size_t>(std::count(curve_mark.begin(), curve_mark.end(), 1));
    rep.coverage_deviation_to_curve = coverage(dev_mark, curve_mark);
    rep.coverage_curve_to_deviation = coverage(curve_mark, dev_mark);
    return rep;
}

std::string to_pgm(const SandpileGrid& grid) {
    const int s = grid.scale();
    std::string out = "P5\n" + std::to_string(s + 1) + " " + std::to_string(s + 1) + "\n3\n";
    out.reserve(out.size() + static_cast<size_t>(s + 1) * (s + 1));
    for (int y = s; y >= 0; --y)
        for (int x = 0; x <= s; ++x)
            out.push_back(static_cast<char>(grid.grains(x, y) & 0xff));
    return out;
}

std::vector<unsigned char> topplings_bytes_le(const SandpileGrid& grid) {
    std::vector<unsigned char> out;
    out.reserve(grid.toppling_data().size() * 4);
    for (uint32_t t : grid.toppling_data()) {
        out.push_back(static_cast<unsigned char>(t & 0xff));
        out.push_back(static_cast<unsigned char>((t >> 8) & 0xff));
        out.push_back(static_cast<unsigned char>((t >> 16) & 0xff));
        out.push_back(static_cast<unsigned char>((t >> 24) & 0xff));
    }
    return out;
}

} // namespace tropsand
