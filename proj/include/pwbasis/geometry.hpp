// Copyright (c) 2026 pwbasis developers
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "pwbasis/errors.hpp"

namespace pwbasis {

using Vec = std::vector<double>;   // point in R^d
using IVec = std::vector<int>;     // integer lattice vector in Z^d

/// Relative tolerance (in units of the cube side) used to deduplicate
/// coincident cut coordinates and to check tiling/containment assertions.
inline constexpr double kGeomTol = 1e-9;

/// Half-open axis-aligned box  prod_t [lo_t, hi_t).
struct Rect {
    Vec lo;
    Vec hi;

    std::size_t dim() const { return lo.size(); }

    double volume() const {
        double v = 1.0;
        for (std::size_t t = 0; t < lo.size(); ++t) v *= hi[t] - lo[t];
        return v;
    }

    bool contains(const Vec& x) const {
        for (std::size_t t = 0; t < lo.size(); ++t)
            if (!(x[t] >= lo[t] && x[t] < hi[t])) return false;
        return true;
    }

    Rect translated(const Vec& shift) const {
        Rect r = *this;
        for (std::size_t t = 0; t < lo.size(); ++t) {
            r.lo[t] += shift[t];
            r.hi[t] += shift[t];
        }
        return r;
    }
};

/// The spectrum E: a union of p mutually disjoint half-open cubes of common
/// side beta, cube j being  prod_t [corner_j^t, corner_j^t + beta).
struct CubeUnion {
    int dim = 0;
    double beta = 0.0;
    std::vector<Vec> corners;

    int count() const { return static_cast<int>(corners.size()); }
    double measure() const { return static_cast<double>(corners.size()) * std::pow(beta, dim); }

    Rect cube(int j) const {
        Rect r;
        r.lo = corners[static_cast<std::size_t>(j)];
        r.hi = r.lo;
        for (auto& v : r.hi) v += beta;
        return r;
    }

    bool contains(const Vec& x) const {
        for (int j = 0; j < count(); ++j)
            if (cube(j).contains(x)) return true;
        return false;
    }
};

/// Validates dimensions, side length and pairwise disjointness.
/// Disjointness of half-open cubes means some axis separates the corners by
/// at least beta; a slack of 1e-12*beta absorbs roundoff in corners that were
/// produced arithmetically (e.g. by approximate_cover).
inline CubeUnion validate_union(int dim, double beta, std::vector<Vec> corners) {
    if (dim < 1) throw ValueError("dim must be >= 1, got " + std::to_string(dim));
    if (!(beta > 0.0)) throw ValueError("beta must be > 0, got " + std::to_string(beta));
    if (corners.empty()) throw ValueError("corner list must be nonempty");
    for (std::size_t j = 0; j < corners.size(); ++j) {
        if (corners[j].size() != static_cast<std::size_t>(dim)) {
            std::ostringstream os;
            os << "corner " << j << " has length " << corners[j].size() << ", expected " << dim;
            throw DimensionError(os.str());
        }
    }
    const double slack = 1e-12 * beta;
    for (std::size_t j = 0; j < corners.size(); ++j) {
        for (std::size_t k = j + 1; k < corners.size(); ++k) {
            bool separated = false;
            for (int t = 0; t < dim; ++t) {
                if (std::abs(corners[j][t] - corners[k][t]) >= beta - slack) {
                    separated = true;
                    break;
                }
            }
            if (!separated) {
                std::ostringstream os;
                os << "cubes " << j << " and " << k << " intersect";
                throw OverlapError(os.str());
            }
        }
    }
    return CubeUnion{dim, beta, std::move(corners)};
}

/// The unique n in Z^d with  gamma = corner_k - beta*n  inside cube j,
/// componentwise n^t = floor((corner_k^t - corner_j^t)/beta).
inline std::pair<IVec, Vec> locate_wrap(const CubeUnion& E, int j, int k) {
    const Vec& aj = E.corners[static_cast<std::size_t>(j)];
    const Vec& ak = E.corners[static_cast<std::size_t>(k)];
    IVec n(static_cast<std::size_t>(E.dim));
    Vec gamma(static_cast<std::size_t>(E.dim));
    for (int t = 0; t < E.dim; ++t) {
        n[t] = static_cast<int>(std::floor((ak[t] - aj[t]) / E.beta));
        gamma[t] = ak[t] - E.beta * n[t];
    }
    return {std::move(n), std::move(gamma)};
}

/// The cell structure of the union: reference cells of cube 0, their
/// translated copies in every cube, wrap indices, corrections and
/// translation sets.  Immutable after build_partition.
struct Partition {
    int dim = 0;
    double beta = 0.0;
    int cube_count = 0;
    int cell_count = 0;                                // S <= p^d

    std::vector<Rect> cells;                           // reference cells of cube 0, by s
    std::vector<std::vector<Rect>> boxes;              // [j][s] cell s of cube j
    std::vector<std::vector<IVec>> wrap;               // [j][k] n_jk
    std::vector<std::vector<Vec>> gamma;               // [j][k] gamma_jk
    std::vector<std::vector<std::vector<IVec>>> corrections;      // [j][s][k] in {-1,0,1}^d
    std::vector<std::vector<std::vector<IVec>>> translation_sets; // [j][s][k] n_jk + C_js(k)
};

namespace detail {

/// Sorted cut coordinates on one axis of the reference cube, including the
/// lower face, deduplicated at kGeomTol*beta.
inline std::vector<double> axis_cuts(const CubeUnion& E, int axis) {
    std::vector<double> cuts;
    cuts.reserve(E.corners.size());
    for (int k = 0; k < E.count(); ++k) {
        auto [n, g] = locate_wrap(E, 0, k);
        cuts.push_back(g[axis]);
    }
    std::sort(cuts.begin(), cuts.end());
    std::vector<double> dedup;
    const double tol = kGeomTol * E.beta;
    for (double c : cuts) {
        if (dedup.empty() || c - dedup.back() > tol) dedup.push_back(c);
    }
    // gamma_00 = corner_0, so the lower face is always present; guard anyway
    // against it having been merged into a nearby cut.
    if (std::abs(dedup.front() - E.corners[0][axis]) > tol) {
        dedup.insert(dedup.begin(), E.corners[0][axis]);
    } else {
        dedup.front() = E.corners[0][axis];
    }
    return dedup;
}

}  // namespace detail

/// Splits cube 0 by the wrap anchors of all cubes into grid cells, then
/// propagates the cells to every cube by beta-integer translation.  The
/// tiling of each cube by its translated cells is asserted, not assumed.
inline Partition build_partition(const CubeUnion& E) {
    const int d = E.dim;
    const int p = E.count();
    const double beta = E.beta;
    const double tol = kGeomTol * beta;

    Partition P;
    P.dim = d;
    P.beta = beta;
    P.cube_count = p;

    P.wrap.assign(p, std::vector<IVec>(p));
    P.gamma.assign(p, std::vector<Vec>(p));
    for (int j = 0; j < p; ++j) {
        for (int k = 0; k < p; ++k) {
            auto [n, g] = locate_wrap(E, j, k);
            for (int t = 0; t < d; ++t) {
                if (!(g[t] >= E.corners[j][t] - tol && g[t] < E.corners[j][t] + beta + tol)) {
                    std::ostringstream os;
                    os << "wrap anchor gamma_{" << j << "," << k << "} escaped its cube on axis " << t;
                    throw TilingError(os.str());
                }
            }
            P.wrap[j][k] = std::move(n);
            P.gamma[j][k] = std::move(g);
        }
    }

    // Reference cells of cube 0: the grid cut by the per-axis anchor coords.
    std::vector<std::vector<double>> cuts(static_cast<std::size_t>(d));
    std::vector<int> seg_count(static_cast<std::size_t>(d));
    int S = 1;
    for (int t = 0; t < d; ++t) {
        cuts[t] = detail::axis_cuts(E, t);
        seg_count[t] = static_cast<int>(cuts[t].size());
        S *= seg_count[t];
    }
    P.cell_count = S;

    P.cells.reserve(static_cast<std::size_t>(S));
    std::vector<int> idx(static_cast<std::size_t>(d), 0);
    for (int s = 0; s < S; ++s) {
        Rect cell;
        cell.lo.resize(static_cast<std::size_t>(d));
        cell.hi.resize(static_cast<std::size_t>(d));
        for (int t = 0; t < d; ++t) {
            cell.lo[t] = cuts[t][idx[t]];
            cell.hi[t] = (idx[t] + 1 < seg_count[t]) ? cuts[t][idx[t] + 1]
                                                     : E.corners[0][t] + beta;
        }
        P.cells.push_back(std::move(cell));
        for (int t = d - 1; t >= 0; --t) {  // lexicographic, axis 0 most significant
            if (++idx[t] < seg_count[t]) break;
            idx[t] = 0;
        }
    }

    // Corrections out of cube 0.  Cells never straddle a cut, so on each axis
    // the translated cell either already lands in cube k (c=0) or sits one
    // period below it (c=+1).
    std::vector<std::vector<IVec>> c0(static_cast<std::size_t>(S), std::vector<IVec>(p));
    for (int s = 0; s < S; ++s) {
        for (int k = 0; k < p; ++k) {
            IVec c(static_cast<std::size_t>(d));
            for (int t = 0; t < d; ++t)
                c[t] = (P.cells[s].lo[t] >= P.gamma[0][k][t] - tol) ? 0 : 1;
            c0[s][k] = std::move(c);
        }
    }

    // General corrections via the wrap-consistency relation, which this
    // construction satisfies identically in integer arithmetic.
    P.corrections.assign(p, std::vector<std::vector<IVec>>(
                                static_cast<std::size_t>(S), std::vector<IVec>(p)));
    P.translation_sets = P.corrections;
    for (int j = 0; j < p; ++j) {
        for (int s = 0; s < S; ++s) {
            for (int k = 0; k < p; ++k) {
                IVec c(static_cast<std::size_t>(d));
                IVec m(static_cast<std::size_t>(d));
                for (int t = 0; t < d; ++t) {
                    c[t] = P.wrap[0][k][t] - P.wrap[0][j][t] - P.wrap[j][k][t]
                           + c0[s][k][t] - c0[s][j][t];
                    m[t] = P.wrap[j][k][t] + c[t];
                    if (c[t] < -1 || c[t] > 1) {
                        std::ostringstream os;
                        os << "correction C_{" << j << "," << s << "}(" << k << ") = " << c[t]
                           << " outside {-1,0,1} on axis " << t;
                        throw TilingError(os.str());
                    }
                }
                P.corrections[j][s][k] = std::move(c);
                P.translation_sets[j][s][k] = std::move(m);
            }
        }
    }

    // Cells of cube j are translates of the reference cells.
    P.boxes.assign(p, std::vector<Rect>(static_cast<std::size_t>(S)));
    for (int j = 0; j < p; ++j) {
        for (int s = 0; s < S; ++s) {
            Vec shift(static_cast<std::size_t>(d));
            for (int t = 0; t < d; ++t)
                shift[t] = beta * (P.wrap[0][j][t] + c0[s][j][t]);
            P.boxes[j][s] = P.cells[s].translated(shift);
        }
    }

    // Tiling assertion: the translated cells of cube j must lie inside the
    // cube and add up to its full measure.
    const double cube_measure = std::pow(beta, d);
    for (int j = 0; j < p; ++j) {
        const Rect Q = E.cube(j);
        double total = 0.0;
        for (int s = 0; s < S; ++s) {
            const Rect& b = P.boxes[j][s];
            for (int t = 0; t < d; ++t) {
                if (b.lo[t] < Q.lo[t] - tol || b.hi[t] > Q.hi[t] + tol) {
                    std::ostringstream os;
                    os << "cell " << s << " translated outside cube " << j << " on axis " << t;
                    throw TilingError(os.str());
                }
            }
            total += b.volume();
        }
        if (std::abs(total - cube_measure) > tol * cube_measure / beta * d +
                                                 1e-12 * cube_measure) {
            std::ostringstream os;
            os << "cells of cube " << j << " cover measure " << total << " of " << cube_measure
               << " (gap " << std::abs(total - cube_measure) << ")";
            throw TilingError(os.str());
        }
        for (int s = 0; s < S; ++s) {
            for (int u = s + 1; u < S; ++u) {
                bool separated = false;
                for (int t = 0; t < d; ++t) {
                    if (P.boxes[j][s].hi[t] <= P.boxes[j][u].lo[t] + tol ||
                        P.boxes[j][u].hi[t] <= P.boxes[j][s].lo[t] + tol) {
                        separated = true;
                        break;
                    }
                }
                if (!separated) {
                    std::ostringstream os;
                    os << "cells " << s << " and " << u << " of cube " << j << " overlap";
                    throw TilingError(os.str());
                }
            }
        }
    }

    return P;
}

/// Locates the (cube, cell) pair containing omega under the half-open
/// convention, or nullopt when omega is outside E.
inline std::optional<std::pair<int, int>> cell_of(const Partition& P, const CubeUnion& E,
                                                  const Vec& omega) {
    if (omega.size() != static_cast<std::size_t>(E.dim))
        throw DimensionError("point has wrong dimension");
    for (int j = 0; j < P.cube_count; ++j) {
        if (!E.cube(j).contains(omega)) continue;
        for (int s = 0; s < P.cell_count; ++s) {
            if (P.boxes[j][s].contains(omega)) return std::make_pair(j, s);
        }
        // Inside the cube but on no cell: only possible if translated cell
        // faces disagree with the cube faces by roundoff; treat as outside.
        return std::nullopt;
    }
    return std::nullopt;
}

}  // namespace pwbasis
