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

#include "erent/composite.h"

#include <algorithm>
#include <stdexcept>

#include "erent/max_lateness.h"
#include "erent/weighted_completion.h"

namespace erent {
namespace {

using Wide = WideInt;

struct Totals {
  int64_t p = 0;
  int64_t w = 0;
};

// p and w of the r-jobs in positions [lo, hi].
Totals resource_totals(const OrderedView& view, std::size_t lo, std::size_t hi) {
  Totals t;
  for (std::size_t k = lo; k <= hi; ++k) {
    if (view.at(k).needs_resource) {
      t.p += view.at(k).p;
      t.w += view.at(k).w;
    }
  }
  return t;
}

// Whether the job leans towards the front of the window, compared with the
// r-jobs as a whole.
bool leans_front(const Job& job, const Totals& all) {
  return Wide{job.w} * all.p >= Wide{job.p} * all.w;
}

}  // namespace

LambdaSets lambda_sets(const OrderedView& view, Rational lambda) {
  if (view.rule() != OrderRule::kWspt) throw std::invalid_argument("lambda sets need WSPT");
  if (lambda.den <= 0 || lambda.num < 0) throw std::invalid_argument("lambda must be >= 0");
  LambdaSets sets{lambda, {}, {}};
  if (!view.has_window()) return sets;
  const std::size_t alpha = *view.alpha();
  const std::size_t beta = *view.beta();
  const Totals all = resource_totals(view, alpha, beta);
  const Wide a = lambda.num;
  const Wide b = lambda.den;
  for (std::size_t j : view.between()) {
    const Job& job = view.at(j);
    if (job.p == 0) {
      // Delays nobody and leaves er alone; running it early never hurts.
      sets.x.push_back(j);
    } else if (leans_front(job, all)) {
      const Totals before = resource_totals(view, alpha, j);
      // w_j p(A) > p_j (w(A) - lambda), scaled by the denominator.
      if (b * job.w * before.p > Wide{job.p} * (b * before.w - a)) sets.x.push_back(j);
    } else {
      const Totals after = resource_totals(view, j, beta);
      // w_j p(B) < p_j (w(B) + lambda)
      if (b * job.w * after.p < Wide{job.p} * (b * after.w + a)) sets.y.push_back(j);
    }
  }
  return sets;
}

LambdaSets lambda_sets(const OrderedView& view, int64_t lambda) {
  return lambda_sets(view, Rational{lambda, 1});
}

std::vector<Rational> lambda_thresholds(const OrderedView& view) {
  if (view.rule() != OrderRule::kWspt) throw std::invalid_argument("lambda sets need WSPT");
  std::vector<Rational> out;
  if (!view.has_window()) return out;
  const std::size_t alpha = *view.alpha();
  const std::size_t beta = *view.beta();
  const Totals all = resource_totals(view, alpha, beta);
  for (std::size_t j : view.between()) {
    const Job& job = view.at(j);
    if (job.p == 0) continue;  // membership does not depend on lambda
    Rational r;
    if (leans_front(job, all)) {
      const Totals before = resource_totals(view, alpha, j);
      r = {job.p * before.w - job.w * before.p, job.p};
    } else {
      const Totals after = resource_totals(view, j, beta);
      r = {job.w * after.p - job.p * after.w, job.p};
    }
    if (r.num >= 0) out.push_back(r);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

Sequence closed_form_sequence(const OrderedView& view, Rational lambda) {
  const LambdaSets sets = lambda_sets(view, lambda);
  return five_block_sequence(view, sets.x, sets.y);
}

}  // namespace

Solution solve_composite_twc(const Instance& instance, int64_t lambda) {
  if (lambda < 0) throw std::invalid_argument("lambda must be >= 0");
  const OrderedView view(instance, OrderRule::kWspt);
  return make_solution(instance, closed_form_sequence(view, Rational{lambda, 1}));
}

Solution solve_composite_tc(const Instance& instance, int64_t lambda) {
  if (lambda < 0) throw std::invalid_argument("lambda must be >= 0");
  const OrderedView view(instance.with_unit_weights(), OrderRule::kWspt);
  return make_solution(instance, closed_form_sequence(view, Rational{lambda, 1}));
}

Solution solve_composite_via_pareto(const Instance& instance, Objective objective,
                                    int64_t lambda, TardyOptions options) {
  if (lambda < 0) throw std::invalid_argument("lambda must be >= 0");
  ParetoFront front;
  switch (objective) {
    case Objective::kTotalCompletion:
      front = pareto_tc(instance);
      break;
    case Objective::kWeightedCompletion:
      front = pareto_twc(instance);
      break;
    case Objective::kMaxLateness:
      front = pareto_lmax(instance);
      break;
    case Objective::kWeightedTardy:
      front = pareto_wu(instance, options);
      break;
  }
  const ParetoPoint* best = nullptr;
  for (const ParetoPoint& point : front) {
    if (best == nullptr ||
        point.gamma + lambda * point.er < best->gamma + lambda * best->er) {
      best = &point;
    }
  }
  return make_solution(instance, best->sequence);
}

ParetoFront composite_sweep_twc(const Instance& instance) {
  const OrderedView view(instance, OrderRule::kWspt);
  std::vector<Rational> marks = lambda_thresholds(view);
  marks.insert(marks.begin(), Rational{0, 1});
  marks.erase(std::unique(marks.begin(), marks.end()), marks.end());

  std::vector<Rational> samples;
  for (std::size_t i = 0; i < marks.size(); ++i) {
    samples.push_back(marks[i]);
    if (i + 1 < marks.size()) {
      const Rational& a = marks[i];
      const Rational& b = marks[i + 1];
      samples.push_back({a.num * b.den + b.num * a.den, 2 * a.den * b.den});
    }
  }
  const Rational& last = marks.back();
  samples.push_back({last.num + last.den, last.den});

  std::vector<ParetoPoint> points;
  for (const Rational& lambda : samples) {
    Solution s = make_solution(instance, closed_form_sequence(view, lambda));
    points.push_back({s.metrics.er, s.metrics.twc, std::move(s.sequence)});
  }
  std::stable_sort(points.begin(), points.end(), [](const ParetoPoint& a, const ParetoPoint& b) {
    return a.er != b.er ? a.er < b.er : a.gamma < b.gamma;
  });
  points.erase(std::unique(points.begin(), points.end(),
                           [](const ParetoPoint& a, const ParetoPoint& b) {
                             return a.er == b.er && a.gamma == b.gamma;
                           }),
               points.end());
  return points;
}

ParetoFront lower_convex_envelope(const ParetoFront& front) {
  // Monotone chain over points sorted by er; keep strict convex turns.
  ParetoFront hull;
  for (const ParetoPoint& p : front) {
    while (hull.size() >= 2) {
      const ParetoPoint& a = hull[hull.size() - 2];
      const ParetoPoint& b = hull.back();
      const Wide cross = Wide{b.er - a.er} * (p.gamma - a.gamma) -
                         Wide{b.gamma - a.gamma} * (p.er - a.er);
      if (cross > 0) break;  // b lies strictly below segment a-p
      hull.pop_back();
    }
    hull.push_back(p);
  }
  return hull;
}

}  // namespace erent
