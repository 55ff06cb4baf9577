// Copyright 2026 The erent Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Composite objective gamma + lambda * er.
//
// For weighted completion the optimum has a closed form over a WSPT view:
// an o-job between the first and last r-job moves in front of the window
// when the weight it gains on the r-jobs before it, plus the rental saved,
// beats the delay it causes them, and symmetrically behind the window. For
// max lateness and tardy weight the optimum is read off the Pareto front.

#ifndef ERENT_COMPOSITE_H_
#define ERENT_COMPOSITE_H_

#include <cstdint>
#include <vector>

#include "erent/model.h"
#include "erent/ordered_view.h"
#include "erent/tardy_weight.h"

namespace erent {

__extension__ typedef __int128 WideInt;

// Exact rational with a positive denominator.
struct Rational {
  int64_t num = 0;
  int64_t den = 1;

  friend bool operator==(const Rational& a, const Rational& b) {
    return WideInt{a.num} * b.den == WideInt{b.num} * a.den;
  }
  friend bool operator<(const Rational& a, const Rational& b) {
    return WideInt{a.num} * b.den < WideInt{b.num} * a.den;
  }
};

struct LambdaSets {
  Rational lambda;
  std::vector<std::size_t> x;  // ascending view positions
  std::vector<std::size_t> y;
};

// Throws std::invalid_argument for a non-WSPT view or a negative lambda.
LambdaSets lambda_sets(const OrderedView& view, Rational lambda);
LambdaSets lambda_sets(const OrderedView& view, int64_t lambda);

// Values of lambda >= 0 at which some job enters X or Y (it is in the set
// for every larger lambda), sorted and deduplicated.
std::vector<Rational> lambda_thresholds(const OrderedView& view);

// Empty optional never happens for these; they return the optimum directly.
Solution solve_composite_twc(const Instance& instance, int64_t lambda);
Solution solve_composite_tc(const Instance& instance, int64_t lambda);

// Minimizes gamma + lambda * er over the Pareto front of `objective`; ties go
// to the point with the smaller er.
Solution solve_composite_via_pareto(const Instance& instance, Objective objective,
                                    int64_t lambda, TardyOptions options = {});

// (er, twc) of the closed-form sequence at lambda = 0, at every threshold,
// between consecutive thresholds and past the last one. Deduplicated, sorted
// by er.
ParetoFront composite_sweep_twc(const Instance& instance);

// Vertices of the lower convex envelope of a front (er ascending, gamma
// strictly decreasing): the points that uniquely minimize gamma + lambda * er
// for some lambda > 0.
ParetoFront lower_convex_envelope(const ParetoFront& front);

}  // namespace erent

#endif  // ERENT_COMPOSITE_H_
