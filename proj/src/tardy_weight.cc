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

#include "erent/tardy_weight.h"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "erent/errors.h"

namespace erent {

OnTimeSuffix::OnTimeSuffix(const OrderedView& view, JobFilter filter)
    : jobs_(view.jobs().begin(), view.jobs().end()) {
  if (view.rule() != OrderRule::kEdd) {
    throw std::invalid_argument("on-time suffix program needs an EDD view");
  }
  const std::size_t n = jobs_.size();
  for (const Job& j : jobs_) {
    eligible_.push_back(j.needs_resource == (filter == JobFilter::kResourceOnly));
    max_due_ = std::max(max_due_, j.d);
  }
  // Queries start at most at P and a chosen set adds at most P.
  total_ = view.total_processing();
  max_offset_ = std::min(max_due_, 2 * total_);
  const int64_t width = max_offset_ + 1;
  values_.assign((n + 1) * width, 0);
  for (std::size_t k = n; k-- > 0;) {
    const Job& job = jobs_[k];
    for (int64_t s = 0; s <= max_offset_; ++s) {
      int64_t best = cell(k + 1, s);
      const int64_t end = s + job.p;
      if (eligible_[k] && end <= job.d) {
        const int64_t rest = end <= max_offset_ ? cell(k + 1, end) : 0;
        best = std::max(best, job.w + rest);
      }
      values_[k * width + s] = best;
    }
  }
}

bool OnTimeSuffix::in_range(std::size_t kappa, int64_t offset) const {
  if (kappa > jobs_.size() || offset < 0) {
    throw std::out_of_range("on-time suffix query out of range");
  }
  if (offset > max_due_) return false;
  if (offset > total_) throw std::out_of_range("on-time suffix offset above P");
  return true;
}

int64_t OnTimeSuffix::weight(std::size_t kappa, int64_t offset) const {
  return in_range(kappa, offset) ? cell(kappa, offset) : 0;
}

std::vector<std::size_t> OnTimeSuffix::set(std::size_t kappa, int64_t offset) const {
  std::vector<std::size_t> chosen;
  if (!in_range(kappa, offset)) return chosen;
  int64_t s = offset;
  for (std::size_t k = kappa; k < jobs_.size() && s <= max_offset_; ++k) {
    if (cell(k, s) == cell(k + 1, s)) continue;  // skipping is optimal
    chosen.push_back(k);
    s += jobs_[k].p;
  }
  return chosen;
}

Theta5Layer::Theta5Layer(int64_t t, int64_t max_x, int64_t max_y, int64_t max_y_ordinary)
    : t_(t), max_x_(max_x), max_y_(max_y), max_yo_(max_y_ordinary) {
  if (t < 0 || max_x < 0 || max_y < 0 || max_y_ordinary < 0) {
    throw std::invalid_argument("negative theta5 dimension");
  }
  cells_.assign(static_cast<std::size_t>(max_x + 1) * (max_y + 1) * (max_y_ordinary + 1), -1);
}

std::optional<int64_t> Theta5Layer::at(int64_t x, int64_t y, int64_t y_ordinary) const {
  if (x < 0 || x > max_x_ || y < 0 || y > max_y_ || y_ordinary < 0 || y_ordinary > max_yo_) {
    return std::nullopt;
  }
  const int64_t v = cells_[index(x, y, y_ordinary)];
  if (v < 0) return std::nullopt;
  return v;
}

namespace {
// Branch codes recorded for retrieval.
enum : unsigned char { kSkip = 0, kIntoX = 1, kIntoYOrdinary = 2, kIntoYResource = 3 };
}  // namespace

class Theta5Runner {
 public:
  // Runs positions [0, stages); on_stage(k, layer) sees the layer after the
  // first k positions, k = 0..stages.
  template <class OnStage>
  static void run(const OrderedView& v, int64_t t, int64_t max_x, int64_t max_y, int64_t max_yo,
                  std::size_t stages, std::vector<std::vector<unsigned char>>* decisions,
                  OnStage on_stage) {
    Theta5Layer prev(t, max_x, max_y, max_yo);
    Theta5Layer cur(t, max_x, max_y, max_yo);
    prev.cells_[prev.index(0, 0, 0)] = 0;
    on_stage(0, prev);
    for (std::size_t j = 0; j < stages; ++j) {
      const Job& job = v.at(j);
      const int64_t p = job.p;
      const bool ordinary = !job.needs_resource;
      unsigned char* code =
          decisions ? decisions->emplace_back(prev.cells_.size(), kSkip).data() : nullptr;
      for (int64_t x = 0; x <= max_x; ++x) {
        for (int64_t y = 0; y <= max_y; ++y) {
          const int64_t yo_top = std::min(y, max_yo);
          for (int64_t yo = 0; yo <= yo_top; ++yo) {
            const std::size_t at = prev.index(x, y, yo);
            int64_t best = prev.cells_[at];
            unsigned char how = kSkip;
            auto offer = [&](int64_t from, unsigned char branch) {
              if (from >= 0 && from + job.w > best) {
                best = from + job.w;
                how = branch;
              }
            };
            if (ordinary && x >= p && x <= job.d) {
              offer(prev.cells_[prev.index(x - p, y, yo)], kIntoX);
            }
            if (y >= p && t + y <= job.d) {
              if (ordinary) {
                if (yo >= p) offer(prev.cells_[prev.index(x, y - p, yo - p)], kIntoYOrdinary);
              } else {
                offer(prev.cells_[prev.index(x, y - p, yo)], kIntoYResource);
              }
            }
            cur.cells_[at] = best;
            if (code) code[at] = how;
          }
        }
      }
      std::swap(prev.cells_, cur.cells_);
      on_stage(j + 1, prev);
    }
  }

  static std::size_t index(const Theta5Layer& layer, int64_t x, int64_t y, int64_t yo) {
    return layer.index(x, y, yo);
  }
};

Theta5Layer theta5_layer(const OrderedView& view, int64_t t, int64_t max_y_ordinary,
                         std::size_t stage) {
  if (view.rule() != OrderRule::kEdd) throw std::invalid_argument("theta5 needs an EDD view");
  if (stage > view.size()) throw std::out_of_range("theta5 stage beyond the job count");
  if (t > view.total_processing()) throw std::invalid_argument("t exceeds P");
  const int64_t total = view.total_processing();
  std::optional<Theta5Layer> out;
  Theta5Runner::run(view, t, total, total, max_y_ordinary, stage, nullptr,
                    [&](std::size_t k, const Theta5Layer& layer) {
                      if (k == stage) out = layer;
                    });
  return *out;
}

const OrderedView& TardyTables::admit(const OrderedView& view, const TardyOptions& options) {
  const int64_t total = view.total_processing();
  if (total > options.max_processing) {
    throw TooLarge("total processing time " + std::to_string(total) +
                   " exceeds the tardy-weight cap " + std::to_string(options.max_processing));
  }
  return view;
}

TardyTables::TardyTables(const OrderedView& view, TardyOptions options)
    : view_(admit(view, options)),
      resource_suffix_(view, JobFilter::kResourceOnly),
      ordinary_suffix_(view, JobFilter::kOrdinaryOnly) {
  const int64_t total = view.total_processing();
  for (const Job& j : view.jobs()) {
    if (j.needs_resource) {
      has_resource_ = true;
      resource_processing_ += j.p;
    }
  }
  const int64_t max_yo = total - resource_processing_;
  std::vector<Choice> exact(max_yo + 1);
  for (int64_t t = 0; t <= total; ++t) {
    Theta5Runner::run(view, t, t, total - t, max_yo, view.size(), nullptr,
                      [&](std::size_t k, const Theta5Layer& layer) {
                        for (int64_t y = 0; y <= layer.max_y(); ++y) {
                          const int64_t yo_top = std::min(y, max_yo);
                          for (int64_t yo = 0; yo <= yo_top; ++yo) {
                            const auto v = layer.at(t, y, yo);
                            if (!v) continue;
                            const int64_t weight =
                                *v + resource_suffix_.weight(k, t + y) +
                                ordinary_suffix_.weight(k, t + resource_processing_ + yo);
                            if (weight > exact[yo].weight) exact[yo] = {weight, k, t, y, yo};
                          }
                        }
                      });
  }
  best_.resize(exact.size());
  for (std::size_t s = 0; s < exact.size(); ++s) {
    best_[s] = exact[s];
    if (s > 0 && best_[s - 1].weight >= best_[s].weight) best_[s] = best_[s - 1];
  }
}

const TardyTables::Choice* TardyTables::choice(int64_t er_limit) const {
  if (er_limit < resource_processing_) return nullptr;
  const int64_t top = static_cast<int64_t>(best_.size()) - 1;
  // Without r-jobs the window is empty whatever Y holds.
  const int64_t slack = has_resource_ ? std::min(er_limit - resource_processing_, top) : top;
  return &best_[slack];
}

std::optional<int64_t> TardyTables::best_on_time_weight(int64_t er_limit) const {
  const Choice* c = choice(er_limit);
  if (c == nullptr) return std::nullopt;
  return c->weight;
}

Sequence TardyTables::witness(int64_t er_limit) const {
  const Choice* c = choice(er_limit);
  if (c == nullptr) throw std::out_of_range("er budget below p(J^r)");
  const int64_t max_yo = static_cast<int64_t>(best_.size()) - 1;
  std::vector<std::vector<unsigned char>> decisions;
  std::optional<Theta5Layer> shape;
  Theta5Runner::run(view_, c->t, c->t, view_.total_processing() - c->t, max_yo, c->kappa,
                    &decisions,
                    [&](std::size_t k, const Theta5Layer& layer) {
                      if (k == c->kappa) shape = layer;
                    });
  std::vector<JobId> x;
  std::vector<JobId> y;
  int64_t rx = c->t;
  int64_t ry = c->y;
  int64_t ryo = c->y_ordinary;
  for (std::size_t j = c->kappa; j-- > 0;) {
    const Job& job = view_.at(j);
    switch (decisions[j][Theta5Runner::index(*shape, rx, ry, ryo)]) {
      case kIntoX:
        x.push_back(job.id);
        rx -= job.p;
        break;
      case kIntoYOrdinary:
        y.push_back(job.id);
        ry -= job.p;
        ryo -= job.p;
        break;
      case kIntoYResource:
        y.push_back(job.id);
        ry -= job.p;
        break;
      default:
        break;
    }
  }
  for (std::size_t pos : resource_suffix_.set(c->kappa, c->t + c->y)) {
    y.push_back(view_.at(pos).id);
  }
  std::vector<JobId> z;
  for (std::size_t pos : ordinary_suffix_.set(c->kappa, c->t + resource_processing_ + c->y_ordinary)) {
    z.push_back(view_.at(pos).id);
  }
  return tardy_block_sequence(view_, x, y, z);
}

std::optional<Solution> solve_er_budget_wu(const Instance& instance, int64_t er_limit,
                                           TardyOptions options) {
  const TardyTables tables(OrderedView(instance, OrderRule::kEdd), options);
  if (!tables.best_on_time_weight(er_limit)) return std::nullopt;
  return make_solution(instance, tables.witness(er_limit));
}

std::optional<Solution> solve_wu_budget_er(const Instance& instance, int64_t wu_limit,
                                           TardyOptions options) {
  const TardyTables tables(OrderedView(instance, OrderRule::kEdd), options);
  const int64_t total_weight = instance.total_weight();
  auto fits = [&](int64_t er) { return total_weight - *tables.best_on_time_weight(er) <= wu_limit; };
  int64_t lo = instance.resource_processing();
  int64_t hi = instance.total_processing();
  if (!instance.has_resource_jobs()) hi = lo = 0;
  if (!fits(hi)) return std::nullopt;
  while (lo < hi) {
    const int64_t mid = lo + (hi - lo) / 2;
    if (fits(mid)) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  return make_solution(instance, tables.witness(lo));
}

ParetoFront pareto_wu(const Instance& instance, TardyOptions options) {
  const TardyTables tables(OrderedView(instance, OrderRule::kEdd), options);
  const int64_t total_weight = instance.total_weight();
  const int64_t lo = instance.resource_processing();
  const int64_t hi = instance.has_resource_jobs() ? instance.total_processing() : 0;
  ParetoFront front;
  for (int64_t er = lo; er <= hi; ++er) {
    const int64_t tardy = total_weight - *tables.best_on_time_weight(er);
    if (!front.empty() && tardy >= front.back().gamma) continue;
    Solution s = make_solution(instance, tables.witness(er));
    front.push_back(ParetoPoint{s.metrics.er, s.metrics.wtardy, std::move(s.sequence)});
  }
  return front;
}

}  // namespace erent
