// Copyright 2026 The glim Authors
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

#include "glim/experiments/report.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <mutex>
#include <thread>

#include "glim/graph/graph_io.hpp"

namespace glim {

bool evaluate_relation(double value, const std::string& relation, double threshold) {
  if (std::isnan(value)) return false;
  if (relation == "<=") return value <= threshold;
  if (relation == ">=") return value >= threshold;
  if (relation == "==") return value == threshold;
  throw std::invalid_argument("unknown relation '" + relation + "'");
}

Check& ExperimentReport::add_check(std::string check_name, double value, std::string relation,
                                   double threshold, bool gating) {
  Check c;
  c.name = std::move(check_name);
  c.value = value;
  c.relation = std::move(relation);
  c.threshold = threshold;
  c.gating = gating;
  c.pass = evaluate_relation(c.value, c.relation, c.threshold);
  checks.push_back(std::move(c));
  return checks.back();
}

bool ExperimentReport::pass() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const Check& c) { return !c.gating || c.pass; });
}

nlohmann::json ExperimentReport::to_json() const {
  nlohmann::json j;
  j["schema"] = kReportSchema;
  j["name"] = name;
  j["parameters"] = parameters;
  j["seed"] = seed;
  j["trials"] = trials;
  j["aggregate"] = aggregate;
  auto& cs = j["checks"] = nlohmann::json::array();
  for (const Check& c : checks) {
    nlohmann::json value = std::isfinite(c.value) ? nlohmann::json(c.value) : nlohmann::json();
    cs.push_back({{"name", c.name},
                  {"value", value},
                  {"relation", c.relation},
                  {"threshold", c.threshold},
                  {"pass", c.pass},
                  {"gating", c.gating}});
  }
  j["verdict"] = pass() ? "pass" : "fail";
  j["notes"] = notes;
  auto& arts = j["artifacts"] = nlohmann::json::array();
  for (const Artifact& a : artifacts) arts.push_back(a.name);
  j["wall_clock_s"] = wall_clock_s;
  return j;
}

std::vector<std::filesystem::path> write_report(const std::filesystem::path& path,
                                                const ExperimentReport& report) {
  std::vector<std::filesystem::path> written;
  const auto dir = path.has_parent_path() ? path.parent_path() : std::filesystem::path(".");
  for (const Artifact& a : report.artifacts) {
    const auto p = dir / (path.stem().string() + "." + a.name);
    write_file_atomic(p, a.content);
    written.push_back(p);
  }
  write_file_atomic(path, report.to_json().dump(2) + "\n");
  return written;
}

std::size_t default_jobs() {
  if (const char* env = std::getenv("GLIM_JOBS")) {
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

void run_indexed(std::size_t count, std::size_t jobs,
                 const std::function<void(std::size_t)>& fn) {
  if (jobs == 0) jobs = default_jobs();
  jobs = std::min(jobs, count);
  if (jobs <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> workers;
  workers.reserve(jobs);
  for (std::size_t w = 0; w < jobs; ++w) {
    workers.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!error) error = std::current_exception();
        }
      }
    });
  }
  for (auto& t : workers) t.join();
  if (error) std::rethrow_exception(error);
}

double median(std::vector<double> values) {
  if (values.empty()) return std::numeric_limits<double>::quiet_NaN();
  std::sort(values.begin(), values.end());
  const std::size_t m = values.size() / 2;
  return values.size() % 2 ? values[m] : 0.5 * (values[m - 1] + values[m]);
}

}  // namespace glim
