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

#ifndef GLIM_EXPERIMENTS_REPORT_HPP_
#define GLIM_EXPERIMENTS_REPORT_HPP_

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <filesystem>
#include <functional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace glim {

inline constexpr const char* kReportSchema = "glim.experiment/1";

/// One thresholded statistic. Non-gating checks are reported but do not
/// enter the verdict.
struct Check {
  std::string name;
  double value = 0.0;
  /// "<=", ">=" or "==".
  std::string relation = "<=";
  double threshold = 0.0;
  bool pass = false;
  bool gating = true;
};

bool evaluate_relation(double value, const std::string& relation, double threshold);

struct Artifact {
  std::string name;  // file name suffix, e.g. "scatter.csv"
  std::string content;
};

struct ExperimentReport {
  std::string name;
  nlohmann::json parameters = nlohmann::json::object();
  std::uint64_t seed = 0;
  nlohmann::json trials = nlohmann::json::array();
  nlohmann::json aggregate = nlohmann::json::object();
  std::vector<Check> checks;
  std::vector<std::string> notes;
  std::vector<Artifact> artifacts;
  double wall_clock_s = 0.0;

  /// Adds a check whose pass flag is derived from value and threshold.
  Check& add_check(std::string check_name, double value, std::string relation,
                   double threshold, bool gating = true);
  /// All gating checks pass.
  bool pass() const;
  nlohmann::json to_json() const;
};

/// Writes the report JSON to `path` and each artifact next to it as
/// `<stem>.<artifact name>`. Returns the artifact paths.
std::vector<std::filesystem::path> write_report(const std::filesystem::path& path,
                                                const ExperimentReport& report);

/// Worker count from GLIM_JOBS, else the hardware concurrency.
std::size_t default_jobs();

/// Runs fn(0..count-1) on up to `jobs` threads; results are stored by index
/// so the output does not depend on scheduling. The first exception is
/// rethrown after all workers finish.
template <typename T>
std::vector<T> parallel_trials(std::size_t count, std::size_t jobs,
                               const std::function<T(std::size_t)>& fn);

void run_indexed(std::size_t count, std::size_t jobs,
                 const std::function<void(std::size_t)>& fn);

template <typename T>
std::vector<T> parallel_trials(std::size_t count, std::size_t jobs,
                               const std::function<T(std::size_t)>& fn) {
  std::vector<T> out(count);
  run_indexed(count, jobs, [&](std::size_t i) { out[i] = fn(i); });
  return out;
}

inline double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

/// Median of a copy; NaN for an empty input.
double median(std::vector<double> values);

}  // namespace glim

#endif  // GLIM_EXPERIMENTS_REPORT_HPP_
