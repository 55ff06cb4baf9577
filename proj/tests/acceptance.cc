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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit when any
// criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "erent/composite.h"
#include "erent/errors.h"
#include "erent/max_lateness.h"
#include "erent/oracle.h"
#include "erent/reductions.h"
#include "erent/solver.h"
#include "erent/tardy_weight.h"
#include "erent/weighted_completion.h"
#include "test_support.h"

namespace erent {
namespace {

constexpr int kCorpusSize = 300;

// Collects the first few failures of a criterion.
class Tally {
 public:
  void fail(const std::string& what) {
    if (failures_++ < 5) notes_ += "    " + what + "\n";
  }
  void check(bool ok, const std::string& what) {
    ++checks_;
    if (!ok) fail(what);
  }
  bool ok() const { return failures_ == 0; }
  long checks() const { return checks_; }
  long failures() const { return failures_; }
  const std::string& notes() const { return notes_; }

 private:
  long checks_ = 0;
  long failures_ = 0;
  std::string notes_;
};

std::string label(int seed, Objective objective, const std::string& rest) {
  return "instance " + std::to_string(seed) + " " + std::string(objective_name(objective)) + " " +
         rest;
}

bool same_front(const ParetoFront& a, const ParetoFront& b) {
  return std::equal(a.begin(), a.end(), b.begin(), b.end(),
                    [](const ParetoPoint& x, const ParetoPoint& y) {
                      return x.er == y.er && x.gamma == y.gamma;
                    });
}

std::optional<Solution> budget_result(const SolveResult& r) {
  return std::get<std::optional<Solution>>(r);
}

void er_budget_equivalence(const std::vector<Instance>& corpus, Tally& t) {
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const Instance& inst = corpus[i];
    for (Objective objective : testing::kAllObjectives) {
      const OracleReport oracle(inst, objective);
      for (int64_t k = inst.resource_processing(); k <= inst.total_processing(); ++k) {
        const auto got = budget_result(solve(inst, {objective, ErBudget{k}}));
        const auto want = oracle.er_budget(k);
        bool ok = got.has_value() == want.has_value();
        if (ok && got) {
          ok = got->metrics.er <= k &&
               scheduling_cost(got->metrics, objective) ==
                   scheduling_cost(want->metrics, objective);
        }
        t.check(ok, label(int(i), objective, "K^r=" + std::to_string(k)));
      }
    }
  }
}

void gamma_and_pareto_equivalence(const std::vector<Instance>& corpus, Tally& t) {
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const Instance& inst = corpus[i];
    for (Objective objective : testing::kAllObjectives) {
      const OracleReport oracle(inst, objective);
      std::set<int64_t> achievable;
      for (const OracleEntry& e : oracle.table()) achievable.insert(e.gamma);
      for (int64_t g : achievable) {
        const auto got = budget_result(solve(inst, {objective, GammaBudget{g}}));
        const auto want = oracle.gamma_budget(g);
        const bool ok = got && want && got->metrics.er == want->metrics.er &&
                        scheduling_cost(got->metrics, objective) <= g;
        t.check(ok, label(int(i), objective, "K^gamma=" + std::to_string(g)));
      }
      const ParetoFront front = std::get<ParetoFront>(solve(inst, {objective, Pareto{}}));
      t.check(same_front(front, oracle.pareto()), label(int(i), objective, "front"));
    }
  }
}

void composite_closed_form(const std::vector<Instance>& corpus, Tally& t) {
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const Instance& inst = corpus[i];
    const OracleReport oracle(inst, Objective::kWeightedCompletion);
    for (int64_t lambda : {0, 1, 2, 3, 5, 10, 100}) {
      const Solution got = solve_composite_twc(inst, lambda);
      const Solution want = oracle.composite(lambda);
      t.check(got.metrics.twc + lambda * got.metrics.er ==
                  want.metrics.twc + lambda * want.metrics.er,
              label(int(i), Objective::kWeightedCompletion, "lambda=" + std::to_string(lambda)));
    }
    const ParetoFront sweep = composite_sweep_twc(inst);
    for (const ParetoPoint& v : lower_convex_envelope(pareto_twc(inst))) {
      const bool hit = std::any_of(sweep.begin(), sweep.end(), [&](const ParetoPoint& p) {
        return p.er == v.er && p.gamma == v.gamma;
      });
      t.check(hit, label(int(i), Objective::kWeightedCompletion,
                         "envelope vertex er=" + std::to_string(v.er)));
    }
  }
}

bool same_cells(const SplitTable& a, const SplitTable& b) {
  if (a.first_kappa() != b.first_kappa() || a.last_kappa() != b.last_kappa() ||
      a.max_rho() != b.max_rho()) {
    return false;
  }
  for (std::size_t k = a.first_kappa(); k <= a.last_kappa(); ++k) {
    for (int64_t rho = 0; rho <= a.max_rho(); ++rho) {
      if (a.at(k, rho) != b.at(k, rho)) return false;
    }
  }
  return true;
}

void table_methods_agree(Tally& t) {
  for (int i = 0; i < 100; ++i) {
    RandomInstanceSpec spec;
    spec.n = 2 + i % 5;
    spec.seed = 7000 + static_cast<uint64_t>(i);
    Instance inst = random_instance(spec);
    // Every fourth instance has unit weights.
    if (i % 4 == 0) inst = inst.with_unit_weights();
    const OrderedView view(inst, OrderRule::kWspt);
    const int64_t rho_max = view.between_processing();
    const XYTables a = build_xy_tables_theta1(view, rho_max);
    const XYTables b = build_xy_tables_theta2(view, rho_max);
    const std::string name = "instance " + std::to_string(i);
    t.check(same_cells(a.prefix_table(), b.prefix_table()), name + " prefix");
    t.check(same_cells(a.suffix_table(), b.suffix_table()), name + " suffix");
  }
}

void recursion_identities(Tally& t) {
  std::mt19937_64 rng(2026);
  int samples = 0;
  for (uint64_t seed = 0; samples < 1000; ++seed) {
    RandomInstanceSpec spec;
    spec.n = 4 + static_cast<int>(seed % 5);
    spec.seed = 9000 + seed;
    const OrderedView view(random_instance(spec), OrderRule::kEdd);
    if (!view.has_window() || view.between().empty()) continue;
    const auto between = view.between();
    const std::size_t k = between[rng() % between.size()];
    const std::size_t beta = *view.beta();
    const Job& job = view.at(k);
    std::vector<std::size_t> below;
    std::vector<std::size_t> above;
    int64_t moved = 0;
    for (std::size_t pos : between) {
      if (pos < k && rng() % 2) below.push_back(pos);
      if (pos > k && rng() % 2) {
        above.push_back(pos);
        moved += view.at(pos).p;
      }
    }
    const std::string name = "seed " + std::to_string(spec.seed) + " k=" + std::to_string(k);
    // Alternate between an X sample and a Y sample.
    if (samples % 2 == 0) {
      std::vector<std::size_t> with_k = below;
      with_k.push_back(k);
      t.check(direct_prefix_lateness(view, with_k, k + 1) ==
                  direct_prefix_lateness(view, below, k) + job.p,
              name + " prefix take");
      t.check(direct_prefix_lateness(view, below, k + 1) ==
                  std::max(direct_prefix_lateness(view, below, k), view.prefix(k + 1) - job.d),
              name + " prefix skip");
    } else {
      std::vector<std::size_t> with_k = above;
      with_k.insert(with_k.begin(), k);
      t.check(direct_suffix_lateness(view, above, k) ==
                  std::max(direct_suffix_lateness(view, above, k + 1),
                           view.prefix(k + 1) - job.d),
              name + " suffix skip");
      t.check(direct_suffix_lateness(view, with_k, k) ==
                  std::max(direct_suffix_lateness(view, above, k + 1),
                           view.prefix(beta + 1) - moved - job.d),
              name + " suffix take");
    }
    ++samples;
  }

  int nested = 0;
  for (uint64_t seed = 0; nested < 1000; ++seed) {
    RandomInstanceSpec spec;
    spec.n = 3 + static_cast<int>(seed % 8);
    spec.seed = 11000 + seed;
    const OrderedView view(random_instance(spec), OrderRule::kWspt);
    if (!view.has_window() || view.between().empty()) continue;
    const int64_t den = 1 + static_cast<int64_t>(rng() % 4);
    const int64_t a = static_cast<int64_t>(rng() % 60);
    const int64_t b = a + 1 + static_cast<int64_t>(rng() % 60);
    const LambdaSets lo = lambda_sets(view, Rational{a, den});
    const LambdaSets hi = lambda_sets(view, Rational{b, den});
    const bool ok = std::includes(hi.x.begin(), hi.x.end(), lo.x.begin(), lo.x.end()) &&
                    std::includes(hi.y.begin(), hi.y.end(), lo.y.begin(), lo.y.end());
    t.check(ok, "seed " + std::to_string(spec.seed) + " lambda " + std::to_string(a) + "/" +
                    std::to_string(den) + " < " + std::to_string(b) + "/" + std::to_string(den));
    ++nested;
  }
}

// Every nondecreasing list of `length` values in [1, top].
void for_each_multiset(int length, int64_t top,
                       const std::function<void(const std::vector<int64_t>&)>& visit) {
  std::vector<int64_t> a(length, 1);
  while (true) {
    visit(a);
    int i = length - 1;
    while (i >= 0 && a[i] == top) --i;
    if (i < 0) return;
    ++a[i];
    for (int j = i + 1; j < length; ++j) a[j] = a[i];
  }
}

std::string join(const std::vector<int64_t>& a) {
  std::string s;
  for (int64_t x : a) s += (s.empty() ? "" : ",") + std::to_string(x);
  return s;
}

void reductions_round_trip(Tally& t) {
  for (int m = 1; m <= 4; ++m) {
    for_each_multiset(m, 6, [&](const std::vector<int64_t>& a) {
      int64_t total = 0;
      for (int64_t x : a) total += x;
      if (total % 2 != 0) return;
      const Reduction r = partition_reduction(a);
      const auto s = solve_er_budget_lmax(r.instance, r.certificate.er_limit);
      const bool reached = s && s->metrics.lmax <= 0;
      t.check(reached == has_partition(a) && r.certificate.yes == has_partition(a),
              "partition " + join(a));
    });
  }
  for (int64_t a1 = 1; a1 <= 6; ++a1) {
    for (int64_t a2 = a1 + 1; a2 <= 6; ++a2) {
      for (int64_t a3 = a2 + 1; a3 <= 6; ++a3) {
        for (int64_t a4 = a3 + 1; a4 <= 6; ++a4) {
          const std::vector<int64_t> a = {a1, a2, a3, a4};
          if ((a1 + a2 + a3 + a4) % 2 != 0) continue;
          const Reduction r = evenodd_reduction(a);
          const auto s = solve_er_budget_tc(r.instance, r.certificate.er_limit);
          const bool reached = s && s->metrics.tc <= r.certificate.threshold;
          t.check(reached == has_evenodd_partition(a), "evenodd " + join(a));
        }
      }
    }
  }
}

void fixture_pins(Tally& t) {
  const Instance a = testing::fixture_a();
  const auto five = solve_er_budget_twc(a, 5);
  t.check(five && five->metrics.twc == 88, "A K^r=5 twc 88");
  const auto seven = solve_er_budget_twc(a, 7);
  t.check(seven && seven->metrics.twc == 84, "A K^r=7 twc 84");
  const ParetoFront front = pareto_twc(a);
  t.check(same_front(front, {{5, 88, {}}, {7, 84, {}}}), "A front {(5,88),(7,84)}");
  const std::pair<int64_t, int64_t> composite[] = {{1, 91}, {2, 98}, {3, 103}};
  for (const auto& [lambda, value] : composite) {
    const Solution s = solve_composite_twc(a, lambda);
    t.check(s.metrics.twc + lambda * s.metrics.er == value,
            "A lambda=" + std::to_string(lambda) + " -> " + std::to_string(value));
  }
  const auto c = solve_er_budget_lmax(testing::fixture_c(), 4);
  t.check(c && c->metrics.lmax == 0, "C K^r=4 lmax 0");
}

// First seeded instance whose total processing time lies in [lo, hi].
Instance sized_instance(int n, int64_t p_max, int64_t lo, int64_t hi, uint64_t seed) {
  for (;; ++seed) {
    RandomInstanceSpec spec;
    spec.n = n;
    spec.p_max = p_max;
    spec.w_max = 10;
    spec.seed = seed;
    Instance inst = random_instance(spec);
    if (inst.total_processing() >= lo && inst.total_processing() <= hi) return inst;
  }
}

double seconds_for(const std::function<void()>& body) {
  const auto start = std::chrono::steady_clock::now();
  body();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string performance(Tally& t) {
  std::ostringstream notes;
  char buf[96];

  const Instance twc = sized_instance(50, 20, 480, 520, 1);
  const int64_t twc_budget = (twc.resource_processing() + twc.total_processing()) / 2;
  const double twc_s = seconds_for([&] { (void)solve_er_budget_twc(twc, twc_budget); });
  t.check(twc_s < 2.0, "twc n=50 took " + std::to_string(twc_s) + " s");
  std::snprintf(buf, sizeof buf, "twc n=50 P=%lld %.3fs", (long long)twc.total_processing(), twc_s);
  notes << buf;

  const Instance lmax = sized_instance(200, 20, 1950, 2050, 1);
  const int64_t lmax_budget = (lmax.resource_processing() + lmax.total_processing()) / 2;
  const double lmax_s = seconds_for([&] { (void)solve_er_budget_lmax(lmax, lmax_budget); });
  t.check(lmax_s < 2.0, "lmax n=200 took " + std::to_string(lmax_s) + " s");
  std::snprintf(buf, sizeof buf, "; lmax n=200 P=%lld %.3fs", (long long)lmax.total_processing(),
                lmax_s);
  notes << buf;

  const Instance wu = sized_instance(10, 6, 30, 30, 1);
  const int64_t wu_budget = (wu.resource_processing() + wu.total_processing()) / 2;
  const double wu_s = seconds_for([&] { (void)solve_er_budget_wu(wu, wu_budget); });
  t.check(wu_s < 60.0, "wu n=10 took " + std::to_string(wu_s) + " s");
  std::snprintf(buf, sizeof buf, "; wu n=10 P=30 %.3fs", wu_s);
  notes << buf;

  bool capped = false;
  try {
    (void)solve_er_budget_wu(twc, twc.total_processing());
  } catch (const TooLarge&) {
    capped = true;
  }
  t.check(capped, "wu accepted P=" + std::to_string(twc.total_processing()) + " above its cap");
  return notes.str();
}

int report(int number, const std::string& title, const Tally& t, const std::string& extra = "") {
  std::printf("%s %d %s (%ld checks%s%s)\n", t.ok() ? "PASS" : "FAIL", number, title.c_str(),
              t.checks(), extra.empty() ? "" : "; ", extra.c_str());
  if (!t.ok()) std::printf("  %ld failures, first ones:\n%s", t.failures(), t.notes().c_str());
  std::fflush(stdout);
  return t.ok() ? 0 : 1;
}

int run() {
  const std::vector<Instance> corpus = testing::random_corpus(kCorpusSize);
  int failed = 0;
  {
    Tally t;
    er_budget_equivalence(corpus, t);
    failed += report(1, "er-budget solvers equal brute force", t);
  }
  {
    Tally t;
    gamma_and_pareto_equivalence(corpus, t);
    failed += report(2, "cost-budget solvers and fronts equal brute force", t);
  }
  {
    Tally t;
    composite_closed_form(corpus, t);
    failed += report(3, "composite closed form and threshold sweep", t);
  }
  {
    Tally t;
    table_methods_agree(t);
    failed += report(4, "processing- and weight-indexed tables agree", t);
  }
  {
    Tally t;
    recursion_identities(t);
    failed += report(5, "lateness recursion identities and lambda-set nesting", t);
  }
  {
    Tally t;
    reductions_round_trip(t);
    failed += report(6, "partition and even-odd reductions", t);
  }
  {
    Tally t;
    fixture_pins(t);
    failed += report(7, "fixture pins", t);
  }
  {
    Tally t;
    const std::string notes = performance(t);
    failed += report(8, "performance smoke", t, notes);
  }
  return failed == 0 ? 0 : 1;
}

}  // namespace
}  // namespace erent

int main() { return erent::run(); }
