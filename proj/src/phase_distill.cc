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

#include "msd/phase_distill.h"

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <cmath>
#include <map>
#include <mutex>
#include <sstream>

#include "msd/parallel.h"

namespace msd {

namespace {

const std::vector<std::string> kDelta = {"delta"};
const std::vector<std::string> kNorellVars = {"eps0", "epsS"};

MultiPoly lin(const std::vector<std::string> &vars, const BigRational &c0, const std::vector<BigRational> &c) {
    MultiPoly p = MultiPoly::constant(vars, c0);
    for (size_t k = 0; k < c.size(); k++) {
        Monomial m(vars.size(), 0);
        m[k] = 1;
        p.add_term(m, c[k]);
    }
    return p;
}

}  // namespace

SymbolicWigner::SymbolicWigner(int dim, std::vector<std::string> variables, NoiseFamily fam)
    : d(dim), vars(std::move(variables)), family(fam) {
    grid.assign(static_cast<size_t>(d * d), MultiPoly(vars));
}

MultiPoly SymbolicWigner::sum() const {
    MultiPoly s(vars);
    for (const auto &p : grid) {
        s += p;
    }
    return s;
}

SymbolicWigner input_wigner_strange() {
    SymbolicWigner w(3, kDelta, NoiseFamily::kStrange);
    for (int u = 0; u < 3; u++) {
        for (int v = 0; v < 3; v++) {
            w.at(u, v) = (u == 0 && v == 0) ? lin(kDelta, BigRational(-1, 3), {BigRational(4, 9)})
                                            : lin(kDelta, BigRational(1, 6), {BigRational(-1, 18)});
        }
    }
    return w;
}

SymbolicWigner input_wigner_norell() {
    SymbolicWigner w(3, kNorellVars, NoiseFamily::kNorell);
    for (int u = 0; u < 3; u++) {
        for (int v = 0; v < 3; v++) {
            if (u == 0 && v == 0) {
                w.at(u, v) = lin(kNorellVars, BigRational(1, 3), {0, BigRational(-2, 3)});
            } else if (u == 0) {
                w.at(u, v) = lin(kNorellVars, BigRational(-1, 6), {BigRational(1, 2), BigRational(1, 3)});
            } else {
                w.at(u, v) = lin(kNorellVars, BigRational(1, 6), {BigRational(-1, 6), 0});
            }
        }
    }
    return w;
}

SymbolicWigner input_wigner_constant(const DenseOperator &rho) {
    WignerGrid g = wigner_of(rho);
    SymbolicWigner w(g.d, {});
    for (int u = 0; u < g.d; u++) {
        for (int v = 0; v < g.d; v++) {
            w.at(u, v) = MultiPoly::constant({}, rational_from_double(g(u, v)));
        }
    }
    return w;
}

RationalFn DistillationResult::normalized(int u, int v) const {
    return RationalFn(w_out.at(u, v), success);
}

SympVec phase_shift_vector(const StabilizerCode &code) {
    const int d = code.modulus;
    const size_t n = code.n;
    const size_t rows = code.num_stabilizers() + 2;
    // <t, s> = t_u . s_v - t_v . s_u, so each constraint row is (s_v | -s_u).
    FieldMatrix m(rows, 2 * n, d);
    std::vector<int> rhs(rows, 0);
    auto put = [&](size_t r, const SympVec &s) {
        for (size_t i = 0; i < n; i++) {
            m.set(r, i, s.v[i]);
            m.set(r, n + i, mod_residue(-static_cast<int64_t>(s.u[i]), d));
        }
    };
    for (size_t r = 0; r < code.num_stabilizers(); r++) {
        put(r, code.stabilizer(r));
        rhs[r] = mod_residue(-static_cast<int64_t>(code.phases[r]), d);
    }
    put(rows - 2, code.logical_x);
    put(rows - 1, code.logical_z);
    std::vector<int> t;
    if (!solve_linear(m, rhs, t)) {
        throw std::logic_error("phase_shift_vector: no shift solves the phase constraints");
    }
    return SympVec::from_flat(d, t);
}

namespace {

void check_shape(const DistillationResult &r) {
    const auto &w = r.w_out;
    if (w.family == NoiseFamily::kStrange) {
        for (int u = 0; u < w.d; u++) {
            for (int v = 0; v < w.d; v++) {
                if ((u != 0 || v != 0) && !(w.at(u, v) == w.at(0, 1))) {
                    throw ShapeFitError("shape fit failed: off-origin output entries differ for strange input", w);
                }
            }
        }
    } else if (w.family == NoiseFamily::kNorell) {
        for (int v = 2; v < w.d; v++) {
            if (!(w.at(0, v) == w.at(0, 1))) {
                throw ShapeFitError("shape fit failed: u = 0 output entries differ for Norell input", w);
            }
        }
        for (int u = 1; u < w.d; u++) {
            for (int v = 0; v < w.d; v++) {
                if (!(w.at(u, v) == w.at(1, 0))) {
                    throw ShapeFitError("shape fit failed: u != 0 output entries differ for Norell input", w);
                }
            }
        }
    }
}

}  // namespace

RationalFn strange_delta_from_grid(const SymbolicWigner &w_out, const MultiPoly &success) {
    MultiPoly num = w_out.at(0, 0) * BigRational(9) + success * BigRational(3);
    return RationalFn(num, success * BigRational(4));
}

DistillationResult distill(const StabilizerCode &code, const SymbolicWigner &w_in, int workers) {
    const int d = code.modulus;
    const size_t n = code.n;
    if (w_in.d != d) {
        throw std::invalid_argument("distill: input grid dimension does not match the code modulus");
    }
    if (!is_prime(d) || d == 2) {
        throw std::invalid_argument("distill: the phase-space map needs an odd prime dimension");
    }

    // Merge identical grid cells into classes.
    std::vector<MultiPoly> class_polys;
    std::vector<size_t> cell_class(static_cast<size_t>(d * d));
    for (size_t c = 0; c < cell_class.size(); c++) {
        size_t k = 0;
        while (k < class_polys.size() && !(class_polys[k] == w_in.grid[c])) {
            k++;
        }
        if (k == class_polys.size()) {
            class_polys.push_back(w_in.grid[c]);
        }
        cell_class[c] = k;
    }
    const size_t num_classes = class_polys.size();
    std::vector<std::vector<MultiPoly>> powers(num_classes);
    for (size_t k = 0; k < num_classes; k++) {
        powers[k].push_back(MultiPoly::constant(w_in.vars, 1));
        for (size_t e = 1; e <= n; e++) {
            powers[k].push_back(powers[k].back() * class_polys[k]);
        }
    }

    const auto span = ClassicalCode(code.stabilizers).codewords();
    const std::vector<int> t = phase_shift_vector(code).flat();
    const std::vector<int> lx = code.logical_x.flat();
    const std::vector<int> lz = code.logical_z.flat();

    DistillationResult result;
    result.w_out = SymbolicWigner(d, w_in.vars, w_in.family);
    parallel_for(static_cast<size_t>(d * d), workers, [&](size_t point) {
        const int u = static_cast<int>(point) / d;
        const int v = static_cast<int>(point) % d;
        std::vector<int> base(2 * n);
        for (size_t i = 0; i < 2 * n; i++) {
            base[i] = static_cast<int>((t[i] + u * lx[i] + v * lz[i]) % d);
        }
        std::map<uint64_t, uint64_t> patterns;
        std::vector<uint64_t> counts(num_classes);
        for (const auto &s : span) {
            std::fill(counts.begin(), counts.end(), 0);
            for (size_t i = 0; i < n; i++) {
                int pu = (base[i] + s[i]) % d;
                int pv = (base[n + i] + s[n + i]) % d;
                counts[cell_class[static_cast<size_t>(pu * d + pv)]]++;
            }
            uint64_t key = 0;
            for (size_t k = 0; k < num_classes; k++) {
                key = key * (n + 1) + counts[k];
            }
            patterns[key]++;
        }
        MultiPoly acc(w_in.vars);
        for (const auto &[key, mult] : patterns) {
            uint64_t rest = key;
            std::vector<size_t> exps(num_classes);
            for (size_t k = num_classes; k-- > 0;) {
                exps[k] = rest % (n + 1);
                rest /= n + 1;
            }
            MultiPoly term = powers[0][exps[0]];
            for (size_t k = 1; k < num_classes; k++) {
                if (exps[k] != 0) {
                    term = term * powers[k][exps[k]];
                }
            }
            acc += term * BigRational(BigInt(std::to_string(mult)));
        }
        result.w_out.at(u, v) = std::move(acc);
    });

    result.success = result.w_out.sum();
    check_shape(result);
    if (w_in.family == NoiseFamily::kStrange) {
        result.noise_map.push_back(strange_delta_from_grid(result.w_out, result.success));
    } else if (w_in.family == NoiseFamily::kNorell) {
        const MultiPoly &p = result.success;
        MultiPoly e0 = p - result.w_out.at(1, 0) * BigRational(6);
        MultiPoly es = p - result.w_out.at(0, 0) * BigRational(3);
        result.noise_map.emplace_back(e0, p);
        result.noise_map.emplace_back(es, p * BigRational(2));
    }
    return result;
}

const DistillationResult &golay_strange_result() {
    static const DistillationResult r = distill(golay_qutrit_code(), input_wigner_strange(), resolve_workers(0));
    return r;
}

const DistillationResult &golay_norell_result() {
    static const DistillationResult r = distill(golay_qutrit_code(), input_wigner_norell(), resolve_workers(0));
    return r;
}

FixedPoint threshold_strange(int workers) {
    if (workers > 1) {
        auto r = distill(golay_qutrit_code(), input_wigner_strange(), workers);
        return isolate_fixed_point(r.noise_map[0], BigRational(0), BigRational(3, 4));
    }
    return isolate_fixed_point(golay_strange_result().noise_map[0], BigRational(0), BigRational(3, 4));
}

std::string basin_class_name(BasinClass c) {
    switch (c) {
        case BasinClass::kNorell:
            return "norell";
        case BasinClass::kStrange:
            return "strange";
        case BasinClass::kZero:
            return "zero";
        case BasinClass::kMixed:
            return "mixed";
        case BasinClass::kSingular:
            return "singular";
    }
    return "unknown";
}

NorellMap::NorellMap(const std::vector<RationalFn> &maps) {
    if (maps.size() != 2 || maps[0].vars() != kNorellVars || maps[1].vars() != kNorellVars) {
        throw std::invalid_argument("NorellMap: expected two maps in (eps0, epsS)");
    }
    MultiPoly n0 = maps[0].num(), ns = maps[1].num(), den = maps[0].den();
    if (!(maps[0].den() == maps[1].den())) {
        n0 = n0 * maps[1].den();
        ns = ns * maps[0].den();
        den = maps[0].den() * maps[1].den();
    }
    const MultiPoly *polys[3] = {&n0, &ns, &den};
    for (const auto *p : polys) {
        degree_ = std::max({degree_, p->degree_in(0), p->degree_in(1)});
    }
    const size_t side = static_cast<size_t>(degree_ + 1);
    for (int w = 0; w < 3; w++) {
        exact_[w].assign(side * side, BigRational(0));
        coeffs_[w].assign(side * side, 0.0);
        for (const auto &[m, c] : polys[w]->terms()) {
            size_t idx = static_cast<size_t>(m[0]) * side + static_cast<size_t>(m[1]);
            exact_[w][idx] = c;
            coeffs_[w][idx] = c.get_d();
        }
    }
}

namespace {

template <typename T, typename C>
T horner2(const std::vector<C> &c, int degree, const T &x, const T &y) {
    const size_t side = static_cast<size_t>(degree + 1);
    T acc = 0;
    for (int i = degree; i >= 0; i--) {
        T row = 0;
        for (int j = degree; j >= 0; j--) {
            row = row * y + c[static_cast<size_t>(i) * side + static_cast<size_t>(j)];
        }
        acc = acc * x + row;
    }
    return acc;
}

template <typename T>
BasinClass corner_of(const T &e0, const T &es) {
    using std::abs;
    using std::max;
    const T tol = kBasinCornerTolerance;
    if (max(abs(e0), abs(es)) < tol) {
        return BasinClass::kNorell;
    }
    if (max(abs(e0), abs(es - 1)) < tol) {
        return BasinClass::kStrange;
    }
    if (max(abs(e0 - 1), abs(es)) < tol) {
        return BasinClass::kZero;
    }
    return BasinClass::kMixed;
}

using Wide = boost::multiprecision::number<
    boost::multiprecision::cpp_bin_float<256, boost::multiprecision::digit_base_2>>;

Wide to_wide(const BigRational &q) {
    return Wide(q.get_num().get_str()) / Wide(q.get_den().get_str());
}

}  // namespace

bool NorellMap::step(double &e0, double &es) const {
    double q = horner2(coeffs_[2], degree_, e0, es);
    if (!(std::abs(q) > 1e-300)) {
        return false;
    }
    double a = horner2(coeffs_[0], degree_, e0, es) / q;
    double b = horner2(coeffs_[1], degree_, e0, es) / q;
    e0 = a;
    es = b;
    return std::isfinite(e0) && std::isfinite(es);
}

Trajectory norell_iterate(const NorellMap &map, double e0, double es, int max_steps) {
    Trajectory t;
    for (t.steps = 0;; t.steps++) {
        t.cls = corner_of(e0, es);
        if (t.cls != BasinClass::kMixed || t.steps == max_steps) {
            break;
        }
        if (!map.step(e0, es)) {
            t.cls = BasinClass::kSingular;
            break;
        }
    }
    t.eps0 = e0;
    t.eps_s = es;
    return t;
}

Trajectory norell_iterate_wide(const NorellMap &map, const BigRational &e0_in, const BigRational &es_in,
                               int max_steps) {
    std::vector<Wide> c[3];
    for (int w = 0; w < 3; w++) {
        for (const auto &q : map.coefficients(w)) {
            c[w].push_back(q == 0 ? Wide(0) : to_wide(q));
        }
    }
    Wide e0 = to_wide(e0_in), es = to_wide(es_in);
    Trajectory t;
    for (t.steps = 0;; t.steps++) {
        t.cls = corner_of(e0, es);
        if (t.cls != BasinClass::kMixed || t.steps == max_steps) {
            break;
        }
        Wide q = horner2(c[2], map.max_degree(), e0, es);
        if (q == 0) {
            t.cls = BasinClass::kSingular;
            break;
        }
        Wide a = horner2(c[0], map.max_degree(), e0, es) / q;
        Wide b = horner2(c[1], map.max_degree(), e0, es) / q;
        e0 = a;
        es = b;
    }
    t.eps0 = e0.convert_to<double>();
    t.eps_s = es.convert_to<double>();
    return t;
}

namespace {

const NorellMap &golay_norell_map() {
    static const NorellMap m(golay_norell_result().noise_map);
    return m;
}

}  // namespace

Trajectory norell_iterate(const BigRational &e0, const BigRational &es, int max_steps) {
    if (e0 < 0 || es < 0 || e0 + es > 1) {
        throw std::invalid_argument("norell_iterate: point outside the simplex");
    }
    return norell_iterate(golay_norell_map(), e0.get_d(), es.get_d(), max_steps);
}

size_t BasinRaster::count(BasinClass c) const {
    size_t k = 0;
    for (const auto &cell : cells) {
        k += cell.cls == c;
    }
    return k;
}

std::string BasinRaster::to_csv() const {
    std::ostringstream out;
    out << "eps0,epsS,class\n";
    out.precision(17);
    for (const auto &c : cells) {
        out << static_cast<double>(c.i) / resolution << "," << static_cast<double>(c.j) / resolution << ","
            << basin_class_name(c.cls) << "\n";
    }
    return out.str();
}

BasinRaster basin_raster(int resolution, int workers, bool wide) {
    if (resolution < 2) {
        throw std::invalid_argument("basin_raster: resolution must be at least 2");
    }
    const NorellMap &map = golay_norell_map();
    BasinRaster raster;
    raster.resolution = resolution;
    const int r = resolution;
    // Row-major over i, then j <= r - i.
    std::vector<size_t> row_start(static_cast<size_t>(r + 2), 0);
    for (int i = 0; i <= r; i++) {
        row_start[static_cast<size_t>(i + 1)] = row_start[static_cast<size_t>(i)] + static_cast<size_t>(r - i + 1);
        for (int j = 0; j <= r - i; j++) {
            raster.cells.push_back({i, j, BasinClass::kMixed, false});
        }
    }
    auto index = [&](int i, int j) { return row_start[static_cast<size_t>(i)] + static_cast<size_t>(j); };
    auto exact = [&](int k) {
        BigRational x(k, r);
        x.canonicalize();
        return x;
    };

    parallel_for(raster.cells.size(), workers, [&](size_t k) {
        auto &c = raster.cells[k];
        c.cls = wide ? norell_iterate_wide(map, exact(c.i), exact(c.j)).cls
                     : norell_iterate(map, exact(c.i).get_d(), exact(c.j).get_d()).cls;
        c.rechecked = wide;
    });
    if (wide) {
        return raster;
    }

    std::vector<size_t> boundary;
    static const int kNeighbours[6][2] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, -1}, {-1, 1}};
    for (size_t k = 0; k < raster.cells.size(); k++) {
        const auto &c = raster.cells[k];
        for (const auto &nb : kNeighbours) {
            int i = c.i + nb[0], j = c.j + nb[1];
            if (i < 0 || j < 0 || i + j > r) {
                continue;
            }
            if (raster.cells[index(i, j)].cls != c.cls) {
                boundary.push_back(k);
                break;
            }
        }
    }
    std::vector<BasinClass> rechecked(boundary.size());
    parallel_for(boundary.size(), workers, [&](size_t b) {
        const auto &c = raster.cells[boundary[b]];
        rechecked[b] = norell_iterate_wide(map, exact(c.i), exact(c.j)).cls;
    });
    for (size_t b = 0; b < boundary.size(); b++) {
        raster.cells[boundary[b]].cls = rechecked[b];
        raster.cells[boundary[b]].rechecked = true;
    }
    return raster;
}

DepolarizingThreshold norell_depolarizing_threshold(double lo, double hi, double tolerance) {
    const NorellMap &map = golay_norell_map();
    auto converges = [&](double delta) {
        return norell_iterate(map, delta / 3, delta / 3).cls == BasinClass::kNorell;
    };
    if (!converges(lo) || converges(hi)) {
        throw std::runtime_error("norell_depolarizing_threshold: bracket does not straddle the threshold");
    }
    while (hi - lo > tolerance) {
        double mid = 0.5 * (lo + hi);
        (converges(mid) ? lo : hi) = mid;
    }
    return {0.5 * (lo + hi), lo, hi};
}

double yield_parameter(size_t n, const BigRational &success_at_zero, int d) {
    BigRational cost = BigRational(static_cast<long>(n)) / success_at_zero;
    return std::log(static_cast<double>(d)) / std::log(cost.get_d());
}

YieldReport yield_report() {
    const BigRational p0 = golay_strange_result().success.constant_term();
    YieldReport r;
    r.qutrit_cost = BigRational(11) / p0;
    r.xi = yield_parameter(11, p0, 3);
    return r;
}

bool weight1_orthogonality_check(const StabilizerCode &code) {
    SymbolicWigner w_in = input_wigner_strange();
    w_in.family = NoiseFamily::kGeneric;
    auto r = distill(code, w_in);
    RationalFn delta = strange_delta_from_grid(r.w_out, r.success);
    if (delta.den().constant_term() == 0) {
        return false;
    }
    MultiPoly s = series_truncate(delta, 1);
    return s.is_zero();
}

}  // namespace msd
