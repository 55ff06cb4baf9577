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

#include "erent/io.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <stdexcept>

#include "erent/errors.h"
#include "json.hpp"

namespace erent {
namespace {

using nlohmann::ordered_json;

std::size_t line_of(std::string_view text, std::size_t byte) {
  const std::size_t end = std::min(byte, text.size());
  return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + end, '\n'));
}

void check_keys(const ordered_json& obj, std::initializer_list<std::string_view> allowed,
                const std::string& path) {
  for (const auto& item : obj.items()) {
    if (std::find(allowed.begin(), allowed.end(), item.key()) == allowed.end()) {
      throw ParseError("unknown field", 0, path.empty() ? item.key() : path + "." + item.key());
    }
  }
}

int64_t to_int(const ordered_json& value, const std::string& path) {
  if (value.is_number_unsigned()) {
    if (value.get<uint64_t>() > static_cast<uint64_t>(std::numeric_limits<int64_t>::max())) {
      throw ParseError("integer out of range", 0, path);
    }
    return static_cast<int64_t>(value.get<uint64_t>());
  }
  if (value.is_number_integer()) return value.get<int64_t>();
  throw ParseError("expected an integer", 0, path);
}

int64_t required_int(const ordered_json& obj, const char* key, const std::string& path) {
  const std::string field = path + "." + key;
  if (!obj.contains(key)) throw ParseError("missing field", 0, field);
  return to_int(obj.at(key), field);
}

Job parse_job(const ordered_json& obj, const std::string& path) {
  if (!obj.is_object()) throw ParseError("expected an object", 0, path);
  check_keys(obj, {"id", "p", "w", "d", "r"}, path);
  Job job;
  const int64_t id = required_int(obj, "id", path);
  if (id <= 0 || id > std::numeric_limits<JobId>::max()) {
    throw ParseError("id must be a positive int", 0, path + ".id");
  }
  job.id = static_cast<JobId>(id);
  job.p = required_int(obj, "p", path);
  job.w = required_int(obj, "w", path);
  job.d = required_int(obj, "d", path);
  for (const auto& [name, value] : {std::pair{"p", job.p}, {"w", job.w}, {"d", job.d}}) {
    if (value < 0) throw ParseError("must be nonnegative", 0, path + "." + name);
  }
  if (obj.contains("r")) {
    if (!obj.at("r").is_boolean()) throw ParseError("expected true or false", 0, path + ".r");
    job.needs_resource = obj.at("r").get<bool>();
  }
  return job;
}

ProblemSpec parse_spec(const ordered_json& obj) {
  if (!obj.is_object()) throw ParseError("expected an object", 0, "spec");
  check_keys(obj, {"objective", "mode", "budget", "lambda"}, "spec");
  auto text = [&](const char* key) {
    if (!obj.contains(key) || !obj.at(key).is_string()) {
      throw ParseError("expected a string", 0, std::string("spec.") + key);
    }
    return obj.at(key).get<std::string>();
  };
  auto optional_int = [&](const char* key) -> std::optional<int64_t> {
    if (!obj.contains(key)) return std::nullopt;
    return to_int(obj.at(key), std::string("spec.") + key);
  };
  ProblemSpec spec;
  const auto objective = parse_objective(text("objective"));
  if (!objective) throw ParseError("unknown objective", 0, "spec.objective");
  spec.objective = *objective;
  const auto mode = make_mode(text("mode"), optional_int("budget"), optional_int("lambda"));
  if (!mode) throw ParseError("unknown mode or wrong budget/lambda fields", 0, "spec.mode");
  spec.mode = *mode;
  return spec;
}

ordered_json spec_json(const ProblemSpec& spec) {
  ordered_json out;
  out["objective"] = std::string(objective_name(spec.objective));
  out["mode"] = std::string(mode_name(spec.mode));
  if (const auto* m = std::get_if<ErBudget>(&spec.mode)) out["budget"] = m->limit;
  if (const auto* m = std::get_if<GammaBudget>(&spec.mode)) out["budget"] = m->limit;
  if (const auto* m = std::get_if<Composite>(&spec.mode)) out["lambda"] = m->lambda;
  return out;
}

ordered_json sequence_json(const Sequence& sequence) {
  ordered_json out = ordered_json::array();
  for (JobId id : sequence) out.push_back(id);
  return out;
}

}  // namespace

InstanceDocument parse_document(std::string_view text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text.begin(), text.end(), nullptr, true, true);
  } catch (const ordered_json::parse_error& e) {
    throw ParseError(e.what(), line_of(text, e.byte == 0 ? 0 : e.byte - 1), "");
  }
  if (!doc.is_object()) throw ParseError("expected a JSON object", 1, "");
  check_keys(doc, {"version", "jobs", "spec"}, "");
  if (!doc.contains("version")) throw ParseError("missing field", 0, "version");
  if (to_int(doc.at("version"), "version") != kDocumentVersion) {
    throw ParseError("unsupported version", 0, "version");
  }
  if (!doc.contains("jobs") || !doc.at("jobs").is_array()) {
    throw ParseError("expected an array", 0, "jobs");
  }
  const ordered_json& jobs = doc.at("jobs");
  if (jobs.empty()) throw ParseError("at least one job is required", 0, "jobs");
  std::vector<Job> parsed;
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    const std::string path = "jobs[" + std::to_string(i) + "]";
    parsed.push_back(parse_job(jobs[i], path));
    for (std::size_t k = 0; k < i; ++k) {
      if (parsed[k].id == parsed[i].id) throw ParseError("duplicate id", 0, path + ".id");
    }
  }
  InstanceDocument out{Instance(std::move(parsed)), std::nullopt};
  if (doc.contains("spec")) out.spec = parse_spec(doc.at("spec"));
  return out;
}

Instance parse_instance(std::string_view text) { return parse_document(text).instance; }

std::string serialize_instance(const Instance& instance, const std::optional<ProblemSpec>& spec,
                               const std::vector<std::string>& comments) {
  std::string out;
  for (const std::string& line : comments) out += "// " + line + "\n";
  out += "{\n  \"version\": " + std::to_string(kDocumentVersion) + ",\n  \"jobs\": [\n";
  const auto jobs = instance.jobs();
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    ordered_json j;
    j["id"] = jobs[i].id;
    j["p"] = jobs[i].p;
    j["w"] = jobs[i].w;
    j["d"] = jobs[i].d;
    j["r"] = jobs[i].needs_resource;
    out += "    " + j.dump() + (i + 1 < jobs.size() ? ",\n" : "\n");
  }
  out += "  ]";
  if (spec) out += ",\n  \"spec\": " + spec_json(*spec).dump();
  out += "\n}\n";
  return out;
}

std::optional<Mode> make_mode(std::string_view name, std::optional<int64_t> budget,
                              std::optional<int64_t> lambda) {
  if (name == "er-budget" && budget && !lambda) return ErBudget{*budget};
  if (name == "gamma-budget" && budget && !lambda) return GammaBudget{*budget};
  if (name == "pareto" && !budget && !lambda) return Pareto{};
  if (name == "composite" && lambda && !budget && *lambda >= 0) return Composite{*lambda};
  return std::nullopt;
}

std::string solution_document(const Solution& solution, const ProblemSpec& spec) {
  const ScheduleMetrics& m = solution.metrics;
  ordered_json doc;
  doc["sequence"] = sequence_json(solution.sequence);
  doc["feasible"] = solution.feasible;
  doc["objective"] = mode_objective(m, spec);
  doc["er"] = m.er;
  doc["metrics"] = ordered_json{{"tc", m.tc}, {"twc", m.twc}, {"lmax", m.lmax}, {"wtardy", m.wtardy}};
  return doc.dump() + "\n";
}

std::string infeasible_document(const ProblemSpec& spec, const std::string& reason) {
  ordered_json doc;
  doc["sequence"] = ordered_json::array();
  doc["feasible"] = false;
  doc["problem"] = spec_json(spec);
  doc["reason"] = reason;
  return doc.dump() + "\n";
}

std::string pareto_document(const ParetoFront& front) {
  ordered_json points = ordered_json::array();
  for (const ParetoPoint& p : front) {
    ordered_json point;
    point["er"] = p.er;
    point["gamma"] = p.gamma;
    point["sequence"] = sequence_json(p.sequence);
    points.push_back(std::move(point));
  }
  ordered_json doc;
  doc["points"] = std::move(points);
  return doc.dump() + "\n";
}

Instance random_instance(const RandomInstanceSpec& spec) {
  if (spec.n < 1) throw std::invalid_argument("n must be at least 1");
  if (spec.p_max < 0 || spec.w_max < 1 || (spec.d_max && *spec.d_max < 0)) {
    throw std::invalid_argument("bounds out of range");
  }
  if (!(spec.r_fraction >= 0.0 && spec.r_fraction <= 1.0)) {
    throw std::invalid_argument("r_fraction must lie in [0, 1]");
  }
  std::mt19937_64 rng(spec.seed);
  auto draw = [&rng](int64_t lo, int64_t hi) {
    return std::uniform_int_distribution<int64_t>(lo, hi)(rng);
  };
  std::vector<Job> jobs(spec.n);
  int64_t total = 0;
  for (int i = 0; i < spec.n; ++i) {
    jobs[i].id = i + 1;
    jobs[i].p = draw(0, spec.p_max);
    jobs[i].w = draw(1, spec.w_max);
    total += jobs[i].p;
  }
  const int64_t d_max = spec.d_max.value_or(total);
  for (Job& j : jobs) j.d = draw(0, d_max);

  int resource = static_cast<int>(std::lround(spec.r_fraction * spec.n));
  if (spec.r_fraction > 0.0) resource = std::max(resource, 1);
  std::vector<int> order(spec.n);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  for (int k = 0; k < resource; ++k) jobs[order[k]].needs_resource = true;
  return Instance(std::move(jobs));
}

}  // namespace erent
