// Copyright 2026 The qutrit-msd Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MSD_PHASE_DISTILL_H
#define MSD_PHASE_DISTILL_H

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "msd/clifford_dense.h"
#include "msd/code_forge.h"
#include "msd/exact_poly.h"

namespace msd {

/// Which closed-form noise family a Wigner grid belongs to. Controls noise-map extraction.
enum class NoiseFamily { kGeneric, kStrange, kNorell };

/// d x d grid of polynomials indexed (u, v): the phase-space representation of a parametrized input.
struct SymbolicWigner {
    int d = 3;
    std::vector<std::string> vars;
    std::vector<MultiPoly> grid;
    NoiseFamily family = NoiseFamily::kGeneric;

    SymbolicWigner() = default;
    SymbolicWigner(int dim, std::vector<std::string> variables, NoiseFamily fam = NoiseFamily::kGeneric);

    MultiPoly &at(int u, int v) { return grid[static_cast<size_t>(u * d + v)]; }
    const MultiPoly &at(int u, int v) const { return grid[static_cast<size_t>(u * d + v)]; }
    MultiPoly sum() const;
};

/// Grid (1 - delta)|S><S| + delta/3: -1/3 + 4 delta/9 at the origin, 1/6 - delta/18 elsewhere. Variable "delta".
SymbolicWigner input_wigner_strange();
/// Grid of (1 - e0 - eS)|N><N| + e0|0><0| + eS|S><S| in variables "eps0", "epsS".
SymbolicWigner input_wigner_norell();
/// Constant grid of a numeric single-qutrit state (exact conversion of the double entries).
SymbolicWigner input_wigner_constant(const DenseOperator &rho);

/// Thrown when an output grid does not have the closed form of its input family.
class ShapeFitError : public std::runtime_error {
   public:
    ShapeFitError(const std::string &what, SymbolicWigner grid) : std::runtime_error(what), grid_(std::move(grid)) {}
    const SymbolicWigner &grid() const { return grid_; }

   private:
    SymbolicWigner grid_;
};

struct DistillationResult {
    SymbolicWigner w_out;  // Unnormalized.
    MultiPoly success;     // Sum of w_out.
    /// Strange: {delta_out}. Norell: {eps0_out, epsS_out}. Generic: empty.
    std::vector<RationalFn> noise_map;

    /// w_out(u, v) / success.
    RationalFn normalized(int u, int v) const;
};

/// Exact projection-and-decode in phase space.
///
/// For each logical point (u, v), sums prod_i W_in(p_i) over p in t + rowspan(stabilizers) + u*lx + v*lz, where
/// site i reads (p_u[i], p_v[i]) and t is the symplectic shift absorbing the stabilizer phases. Grid cells with
/// identical polynomials are merged so the sum collapses to multinomial-weighted products per cell-count pattern.
/// Throws ShapeFitError for a Strange/Norell input whose output loses that form.
DistillationResult distill(const StabilizerCode &code, const SymbolicWigner &w_in, int workers = 1);

/// The shift t with <t, s_j> = -phase_j and <t, lx> = <t, lz> = 0.
SympVec phase_shift_vector(const StabilizerCode &code);

/// delta_out of the strange family, read from the origin entry: (9 W00 + 3 P) / (4 P).
RationalFn strange_delta_from_grid(const SymbolicWigner &w_out, const MultiPoly &success);

/// Smallest fixed point of the Golay strange curve in (0, 3/4).
FixedPoint threshold_strange(int workers = 1);

/// Cached Golay results; computed on first use.
const DistillationResult &golay_strange_result();
const DistillationResult &golay_norell_result();

enum class BasinClass { kNorell, kStrange, kZero, kMixed, kSingular };
std::string basin_class_name(BasinClass c);

/// The Norell noise map compiled to dense bivariate coefficient arrays for fast floating iteration.
class NorellMap {
   public:
    /// Built from {eps0_out, epsS_out} in variables (eps0, epsS).
    explicit NorellMap(const std::vector<RationalFn> &maps);

    /// Returns false if the denominator vanishes (|Q| < 1e-300).
    bool step(double &e0, double &es) const;

    int max_degree() const { return degree_; }
    const std::vector<BigRational> &coefficients(int which) const { return exact_[static_cast<size_t>(which)]; }

   private:
    int degree_ = 0;
    // num0, numS, and the shared denominator (after bringing both maps over a common one), each as a
    // (degree + 1)^2 array indexed [i * (degree + 1) + j] for eps0^i epsS^j.
    std::vector<BigRational> exact_[3];
    std::vector<double> coeffs_[3];
};

struct Trajectory {
    BasinClass cls = BasinClass::kMixed;
    int steps = 0;
    double eps0 = 0.0;
    double eps_s = 0.0;
};

constexpr int kBasinMaxSteps = 200;
constexpr double kBasinCornerTolerance = 1e-8;

/// Iterates the map from (e0, es) in double precision. Classifies by which corner is reached within the tolerance.
Trajectory norell_iterate(const NorellMap &map, double e0, double es, int max_steps = kBasinMaxSteps);
/// The same iteration in 256-bit binary floating point.
Trajectory norell_iterate_wide(const NorellMap &map, const BigRational &e0, const BigRational &es,
                               int max_steps = kBasinMaxSteps);
/// Exact-start convenience that uses the Golay map.
Trajectory norell_iterate(const BigRational &e0, const BigRational &es, int max_steps = kBasinMaxSteps);

struct BasinCell {
    int i = 0;  // eps0 = i / R
    int j = 0;  // epsS = j / R
    BasinClass cls = BasinClass::kMixed;
    bool rechecked = false;
};

struct BasinRaster {
    int resolution = 0;
    std::vector<BasinCell> cells;
    size_t count(BasinClass c) const;
    std::string to_csv() const;
};

/// Classifies every point (i/R, j/R) with i + j <= R. Cells with a differently classified neighbour are
/// re-run in 256-bit precision and take that classification. With `wide`, every cell runs in 256-bit.
BasinRaster basin_raster(int resolution, int workers = 1, bool wide = false);

struct DepolarizingThreshold {
    double value = 0.0;
    double lo = 0.0;  // Largest delta_N seen converging to the Norell corner.
    double hi = 0.0;  // Smallest delta_N seen not converging.
};
/// Bisection on eps0 = epsS = delta_N / 3 over [lo, hi].
DepolarizingThreshold norell_depolarizing_threshold(double lo = 0.3, double hi = 0.45, double tolerance = 1e-9);

struct YieldReport {
    BigRational qutrit_cost;
    double xi = 0.0;
};
/// Cost n / P(0) and xi = 1 / log_d(cost) for the Golay strange protocol.
YieldReport yield_report();
/// xi = 1 / log_d(n / P(0)) for any code and success-probability constant term.
double yield_parameter(size_t n, const BigRational &success_at_zero, int d);

/// True iff delta_out(0) = 0 and its first-order coefficient vanishes for strange input.
bool weight1_orthogonality_check(const StabilizerCode &code);

}  // namespace msd

#endif
