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

#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "msd/clifford_dense.h"
#include "msd/code_forge.h"
#include "msd/fixtures.h"
#include "msd/inject_lab.h"
#include "msd/parallel.h"
#include "msd/phase_distill.h"
#include "msd/qubit_golay.h"

using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void write_text(const std::string &path, const std::string &text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) {
        throw UsageError("cannot write " + path);
    }
    out << text;
    if (!out) {
        throw UsageError("cannot write " + path);
    }
}

std::string fixed(double x, int digits = 12) {
    std::ostringstream s;
    s << std::fixed << std::setprecision(digits) << x;
    return s.str();
}

std::string rational_text(const msd::BigRational &q) {
    return q.get_str();
}

struct Curve {
    std::string name;
    json doc;
    std::vector<std::string> diffs;
    // Univariate samples: x -> y per output column.
    std::function<std::vector<double>(double)> sample;
    std::vector<std::string> columns;
    msd::FixedPoint threshold;
    bool has_threshold = false;
    double norell_threshold = 0.0;
};

Curve build_curve(const std::string &which, bool verify, int workers) {
    Curve c;
    c.name = which;
    if (which == "strange") {
        msd::DistillationResult r = msd::distill(msd::golay_qutrit_code(), msd::input_wigner_strange(), workers);
        c.doc["delta_out"] = r.noise_map[0].to_json();
        c.doc["success"] = r.success.to_json();
        if (verify) {
            c.diffs = msd::verify_strange(r, msd::CurveFixtures::load_default());
        }
        c.threshold = msd::isolate_fixed_point(r.noise_map[0], 0, msd::BigRational(3, 4));
        c.has_threshold = true;
        auto f = r.noise_map[0];
        c.columns = {"delta", "delta_out"};
        c.sample = [f](double x) { return std::vector<double>{f.eval1(msd::rational_from_double(x)).get_d()}; };
    } else if (which == "norell") {
        msd::DistillationResult r = msd::distill(msd::golay_qutrit_code(), msd::input_wigner_norell(), workers);
        c.doc["eps0_out"] = r.noise_map[0].to_json();
        c.doc["epsS_out"] = r.noise_map[1].to_json();
        c.doc["success"] = r.success.to_json();
        if (verify) {
            c.diffs = msd::verify_norell(r, msd::CurveFixtures::load_default());
        }
        c.norell_threshold = msd::norell_depolarizing_threshold().value;
        auto maps = r.noise_map;
        c.columns = {"delta_N", "eps0_out", "epsS_out"};
        c.sample = [maps](double x) {
            msd::BigRational third = msd::rational_from_double(x) / 3;
            std::vector<msd::BigRational> pt = {third, third};
            return std::vector<double>{maps[0].eval(pt).get_d(), maps[1].eval(pt).get_d()};
        };
    } else if (which == "t23" || which == "t5") {
        msd::TCurve t = which == "t23" ? msd::distill_t_golay23(workers) : msd::distill_t_5qubit();
        c.doc["delta_out"] = t.delta_out.to_json();
        c.doc["success"] = t.success.to_json();
        c.doc["orientation"] = t.orientation;
        c.doc["components_agree"] = t.components_agree;
        if (verify) {
            c.diffs = which == "t23" ? msd::verify_t23(t, msd::CurveFixtures::load_default()) : msd::verify_t5(t);
        }
        c.threshold = msd::t_threshold(t);
        c.has_threshold = true;
        auto f = t.delta_out;
        c.columns = {"delta", "delta_out"};
        c.sample = [f](double x) { return std::vector<double>{f.eval1(msd::rational_from_double(x)).get_d()}; };
    } else {
        throw UsageError("unknown curve '" + which + "' (expected strange, norell, t23, t5)");
    }
    return c;
}

double threshold_value(const Curve &c) {
    return c.has_threshold ? c.threshold.value : c.norell_threshold;
}

int cmd_distill(const std::string &which, bool verify, const std::string &out, const std::string &samples,
                int workers) {
    Curve c = build_curve(which, verify, workers);
    json doc = {{"curve", which}};
    for (auto &[k, v] : c.doc.items()) {
        doc[k] = v;
    }
    doc["threshold"] = fixed(threshold_value(c));
    if (verify) {
        doc["verify"] = c.diffs.empty() ? "PASS" : "FAIL";
        doc["mismatches"] = c.diffs;
    }
    if (!verify || !out.empty()) {
        write_text(out, doc.dump(2) + "\n");
    }
    if (!samples.empty()) {
        std::ostringstream csv;
        csv << c.columns[0];
        for (size_t k = 1; k < c.columns.size(); k++) {
            csv << "," << c.columns[k];
        }
        csv << "\n" << std::setprecision(17);
        const double hi = threshold_value(c) + 0.1;
        for (int k = 0; k < 64; k++) {
            double x = hi * k / 63.0;
            csv << x;
            for (double y : c.sample(x)) {
                csv << "," << y;
            }
            csv << "\n";
        }
        write_text(samples, csv.str());
    }
    if (verify) {
        std::cout << "distill " << which << " --verify: " << (c.diffs.empty() ? "PASS" : "FAIL") << "\n";
        for (const auto &d : c.diffs) {
            std::cout << "  " << d << "\n";
        }
        return c.diffs.empty() ? kExitOk : kExitVerifyFailed;
    }
    return kExitOk;
}

int cmd_threshold(const std::string &which, int workers) {
    Curve c = build_curve(which, false, workers);
    if (c.has_threshold) {
        std::cout << fixed(c.threshold.value) << " [" << fixed(c.threshold.lo.get_d(), 15) << ", "
                  << fixed(c.threshold.hi.get_d(), 15) << "]\n";
    } else {
        auto t = msd::norell_depolarizing_threshold();
        std::cout << fixed(t.value) << " [" << fixed(t.lo, 15) << ", " << fixed(t.hi, 15) << "]\n";
    }
    return kExitOk;
}

int cmd_basin(int resolution, const std::string &out, const std::string &precision, int workers) {
    if (resolution < 2) {
        throw UsageError("--resolution must be at least 2");
    }
    if (precision != "double" && precision != "256") {
        throw UsageError("--precision must be double or 256");
    }
    msd::BasinRaster r = msd::basin_raster(resolution, workers, precision == "256");
    write_text(out, r.to_csv());
    std::ostream &log = (out.empty() || out == "-") ? std::cerr : std::cout;
    log << "points " << r.cells.size();
    for (auto cls : {msd::BasinClass::kNorell, msd::BasinClass::kStrange, msd::BasinClass::kZero,
                     msd::BasinClass::kMixed, msd::BasinClass::kSingular}) {
        log << " " << msd::basin_class_name(cls) << " " << r.count(cls);
    }
    log << "\n";
    return kExitOk;
}

int cmd_inject_demo() {
    json doc;
    auto norell = msd::reduce_norell_pair();
    msd::DenseKet target = msd::shift_x(3) * msd::shift_x(3) * msd::EquatorialState{M_PI / 3, 2 * M_PI / 3}.ket();
    doc["norell_pair"] = {
        {"probability", norell.probability},
        {"fidelity_with_X2_UZ(pi/3,2pi/3)", msd::fidelity(norell.state, target)},
        {"clifford_equivalent_to_UZ(0,pi)",
         msd::find_clifford_mapping(norell.state, msd::EquatorialState{0, M_PI}.ket()).has_value()}};
    auto strange = msd::reduce_strange_pair(msd::magic_states().strange);
    doc["strange_pair"] = {{"probability", strange.probability},
                           {"fidelity_with_N", msd::fidelity(strange.state, msd::magic_states().norell)}};

    msd::DenseKet psi = msd::DenseKet::Zero(3);
    psi << msd::Complex(0.6, 0.1), msd::Complex(-0.3, 0.5), msd::Complex(0.2, -0.5);
    psi.normalize();
    json branches = json::array();
    const msd::DenseOperator t_gate = msd::uz_diagonal(2 * M_PI / 9, 4 * M_PI / 9);
    for (const auto &o : msd::inject_uz(t_gate, psi)) {
        branches.push_back({{"m", o.m},
                            {"probability", o.probability},
                            {"fidelity", msd::fidelity(msd::third_level_correction(t_gate, o), t_gate * psi)}});
    }
    doc["third_level_injection"] = {{"uz", "diag(1, e^{2pi i/9}, e^{4pi i/9})"}, {"branches", branches}};

    const msd::DenseOperator uz = msd::uz_diagonal(0, M_PI);
    auto order = msd::conjugate_group_order(uz);
    auto walk = msd::injection_random_walk(uz, 10000, 2026);
    doc["uz_0_pi"] = {{"third_level", msd::is_third_level(uz)},
                      {"conjugate_group_order", order ? json(*order) : json(nullptr)},
                      {"random_walk_mean_steps", walk.mean_steps},
                      {"random_walk_trials", walk.trials},
                      {"random_walk_max_steps", walk.max_steps}};
    std::cout << doc.dump(2) << "\n";
    return kExitOk;
}

int cmd_code_check(const std::string &source) {
    msd::FieldMatrix g = source == "golay3"    ? msd::golay_ternary().generator()
                         : source == "golay23" ? msd::golay_binary().generator()
                                               : msd::FieldMatrix::load(source);
    json doc = {{"source", source}, {"modulus", g.modulus()}, {"rows", g.rows()}, {"cols", g.cols()}};
    bool ok = true;
    try {
        msd::ClassicalCode code(g);
        bool so = msd::is_self_orthogonal(code);
        doc["self_orthogonal"] = so;
        doc["minimum_weight"] = code.minimum_weight();
        ok = so;
        if (g.modulus() == 2) {
            msd::TCurve t = msd::distill_t(msd::css_qubit_code(g));
            doc["t_state_components_agree"] = t.components_agree;
            try {
                doc["t_state_threshold"] = fixed(msd::t_threshold(t).value);
            } catch (const std::exception &e) {
                doc["t_state_threshold"] = e.what();
                ok = false;
            }
        } else {
            msd::StabilizerCode q = msd::css_from_self_orthogonal(code);
            bool transversal = msd::transversal_invariance_check(q);
            doc["transversal_h_and_n"] = transversal;
            ok = ok && transversal;
            try {
                auto r = msd::distill(q, msd::input_wigner_strange());
                doc["strange_shape_fit"] = true;
                doc["weight1_orthogonal"] = msd::weight1_orthogonality_check(q);
                doc["success_at_zero"] = rational_text(r.success.constant_term());
                try {
                    doc["strange_threshold"] = fixed(msd::isolate_fixed_point(r.noise_map[0], 0, msd::BigRational(3, 4)).value);
                } catch (const std::exception &e) {
                    doc["strange_threshold"] = e.what();
                    ok = false;
                }
            } catch (const msd::ShapeFitError &e) {
                doc["strange_shape_fit"] = false;
                doc["shape_fit_error"] = e.what();
                ok = false;
            }
        }
    } catch (const std::invalid_argument &e) {
        doc["error"] = e.what();
        ok = false;
    }
    doc["suitable"] = ok;
    std::cout << doc.dump(2) << "\n";
    return ok ? kExitOk : kExitVerifyFailed;
}

msd::Complex parse_complex(const json &j) {
    if (j.is_number()) {
        return {j.get<double>(), 0.0};
    }
    if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) {
        return {j[0].get<double>(), j[1].get<double>()};
    }
    throw UsageError("density matrix entries must be numbers or [re, im] pairs");
}

int cmd_wigner(const std::string &rho_text) {
    json j;
    try {
        j = json::parse(rho_text);
    } catch (const json::exception &e) {
        throw UsageError(std::string("--rho is not valid JSON: ") + e.what());
    }
    if (!j.is_array() || j.size() != 3) {
        throw UsageError("--rho must be a 3x3 array");
    }
    msd::DenseOperator rho(3, 3);
    for (int r = 0; r < 3; r++) {
        if (!j[r].is_array() || j[r].size() != 3) {
            throw UsageError("--rho must be a 3x3 array");
        }
        for (int c = 0; c < 3; c++) {
            rho(r, c) = parse_complex(j[r][c]);
        }
    }
    if (!msd::is_density_matrix(rho)) {
        throw UsageError("--rho is not a density matrix");
    }
    msd::WignerGrid w = msd::wigner_of(rho);
    json grid = json::array();
    for (int u = 0; u < 3; u++) {
        grid.push_back({w(u, 0), w(u, 1), w(u, 2)});
    }
    std::cout << json{{"wigner", grid}}.dump(2) << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Exact magic-state distillation curves for qutrit and qubit codes"};
    app.require_subcommand(1);
    int workers = 0;
    app.add_option("--workers", workers, "Worker threads (default: $MSD_WORKERS or 1)");

    auto *distill = app.add_subcommand("distill", "Compute a distillation curve as exact JSON");
    std::string curve;
    bool verify = false;
    std::string out, samples;
    distill->add_option("curve", curve, "strange | norell | t23 | t5")->required();
    distill->add_flag("--verify", verify, "Compare against the stored reference polynomials");
    distill->add_option("--out", out, "Output JSON path (default stdout)");
    distill->add_option("--samples", samples, "Write 64 sampled points as CSV");

    auto *threshold = app.add_subcommand("threshold", "Print the distillation threshold");
    std::string threshold_curve;
    threshold->add_option("curve", threshold_curve, "strange | norell | t23 | t5")->required();

    auto *basin = app.add_subcommand("basin", "Classify the Norell-map basins on a simplex grid");
    int resolution = 50;
    std::string basin_out, precision = "double";
    basin->add_option("--resolution", resolution, "Grid resolution R (R >= 2)");
    basin->add_option("--out", basin_out, "CSV output path (default stdout)");
    basin->add_option("--precision", precision, "double (256-bit re-check at boundaries) or 256");

    auto *inject = app.add_subcommand("inject", "State-injection and reduction circuits");
    std::string inject_what;
    inject->add_option("what", inject_what, "demo")->required();

    auto *code = app.add_subcommand("code", "Classical-code screening");
    std::string code_action, code_source;
    code->add_option("action", code_action, "check")->required();
    code->add_option("source", code_source, "golay3 | golay23 | matrix file")->required();

    auto *wigner = app.add_subcommand("wigner", "Discrete Wigner function of a qutrit density matrix");
    std::string rho_text;
    wigner->add_option("--rho", rho_text, "3x3 JSON array; entries are numbers or [re, im]")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        int w = msd::resolve_workers(workers);
        if (*distill) {
            return cmd_distill(curve, verify, out, samples, w);
        }
        if (*threshold) {
            return cmd_threshold(threshold_curve, w);
        }
        if (*basin) {
            return cmd_basin(resolution, basin_out, precision, w);
        }
        if (*inject) {
            if (inject_what != "demo") {
                throw UsageError("inject supports only 'demo'");
            }
            return cmd_inject_demo();
        }
        if (*code) {
            if (code_action != "check") {
                throw UsageError("code supports only 'check'");
            }
            return cmd_code_check(code_source);
        }
        if (*wigner) {
            return cmd_wigner(rho_text);
        }
    } catch (const UsageError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
