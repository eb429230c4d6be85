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

// Reference polynomials for the distillation curves and exact comparison against them.

#ifndef MSD_FIXTURES_H
#define MSD_FIXTURES_H

#include <map>
#include <string>
#include <vector>

#include "msd/exact_poly.h"
#include "msd/phase_distill.h"
#include "msd/qubit_golay.h"

namespace msd {

/// Named polynomials loaded from a JSON object of MultiPoly documents.
class CurveFixtures {
   public:
    static CurveFixtures load(const std::string &path);
    /// fixtures/golay_curves.json in the source tree, or $MSD_FIXTURES if set.
    static CurveFixtures load_default();

    const MultiPoly &at(const std::string &name) const;

   private:
    std::map<std::string, MultiPoly> polys_;
};

/// Checks f == scale * x^prefactor * p / q coefficient by coefficient.
///
/// The stored denominator is rescaled so its constant term equals q's; then it must equal q, and the
/// rescaled numerator divided by scale * x^prefactor must equal p. Returns one line per mismatch.
std::vector<std::string> compare_curve(const RationalFn &f, const Monomial &prefactor, const BigRational &scale,
                                       const MultiPoly &p, const MultiPoly &q);

/// delta_out = delta^3 P / (2 Q).
std::vector<std::string> verify_strange(const DistillationResult &r, const CurveFixtures &fx);
/// eps0' = eps0^2 P0 / QN and epsS' = 6 epsS PS / QN.
std::vector<std::string> verify_norell(const DistillationResult &r, const CurveFixtures &fx);
/// delta_out = delta^2 PT / QT.
std::vector<std::string> verify_t23(const TCurve &c, const CurveFixtures &fx);
/// Exact 5-qubit curve against the dense 32-dimensional projection at sample points (1e-10).
std::vector<std::string> verify_t5(const TCurve &c);

}  // namespace msd

#endif
