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

#include "glim/spectral/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace glim {

Histogram esd_histogram(std::span<const double> values, std::size_t bins,
                        std::optional<std::pair<double, double>> range) {
  if (bins == 0) throw std::invalid_argument("need at least one bin");
  Histogram h;
  double lo = 0.0, hi = 1.0;
  if (range) {
    std::tie(lo, hi) = *range;
  } else if (!values.empty()) {
    const auto [mn, mx] = std::minmax_element(values.begin(), values.end());
    lo = *mn;
    hi = *mx;
  }
  if (!(hi > lo)) {
    lo -= 0.5;
    hi += 0.5;
  }
  h.edges.resize(bins + 1);
  for (std::size_t i = 0; i <= bins; ++i) {
    h.edges[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(bins);
  }
  h.masses.assign(bins, 0.0);
  if (values.empty()) return h;
  const double w = 1.0 / static_cast<double>(values.size());
  for (double x : values) {
    double pos = (x - lo) / (hi - lo) * static_cast<double>(bins);
    pos = std::clamp(pos, 0.0, static_cast<double>(bins) - 0.5);
    h.masses[static_cast<std::size_t>(pos)] += w;
  }
  return h;
}

SpectrumReport make_spectrum_report(std::vector<double> eigenvalues, std::size_t max_moment,
                                    std::size_t bins) {
  std::sort(eigenvalues.begin(), eigenvalues.end());
  SpectrumReport r;
  r.real = true;
  r.histogram = esd_histogram(eigenvalues, bins);
  r.moments.assign(max_moment + 1, 0.0);
  const double n = static_cast<double>(std::max<std::size_t>(eigenvalues.size(), 1));
  for (double x : eigenvalues) {
    double p = 1.0;
    for (std::size_t k = 0; k <= max_moment; ++k, p *= x) r.moments[k] += p / n;
  }
  if (!eigenvalues.empty()) {
    r.lambda1 = eigenvalues.back();
    r.lambda_min = eigenvalues.front();
    r.lambda2 = eigenvalues.size() > 1 ? eigenvalues[eigenvalues.size() - 2] : r.lambda1;
    r.second_modulus = eigenvalues.size() > 1
                           ? std::max(std::abs(r.lambda2), std::abs(r.lambda_min))
                           : 0.0;
  }
  r.eigenvalues.reserve(eigenvalues.size());
  for (double x : eigenvalues) r.eigenvalues.emplace_back(x, 0.0);
  return r;
}

SpectrumReport make_spectrum_report(std::vector<std::complex<double>> eigenvalues,
                                    std::size_t max_moment) {
  std::stable_sort(eigenvalues.begin(), eigenvalues.end(),
                   [](std::complex<double> a, std::complex<double> b) {
                     if (std::abs(a) != std::abs(b)) return std::abs(a) > std::abs(b);
                     return a.real() > b.real();
                   });
  SpectrumReport r;
  r.real = std::all_of(eigenvalues.begin(), eigenvalues.end(),
                       [](std::complex<double> z) { return z.imag() == 0.0; });
  std::vector<double> re;
  for (auto z : eigenvalues) re.push_back(z.real());
  r.histogram = esd_histogram(re, 100);
  r.moments.assign(max_moment + 1, 0.0);
  const double n = static_cast<double>(std::max<std::size_t>(eigenvalues.size(), 1));
  for (auto z : eigenvalues) {
    std::complex<double> p = 1.0;
    for (std::size_t k = 0; k <= max_moment; ++k, p *= z) r.moments[k] += p.real() / n;
  }
  if (!eigenvalues.empty()) {
    r.lambda1 = eigenvalues.front().real();
    r.second_modulus = eigenvalues.size() > 1 ? std::abs(eigenvalues[1]) : 0.0;
    r.lambda2 = eigenvalues.size() > 1 ? eigenvalues[1].real() : r.lambda1;
    r.lambda_min = std::min_element(re.begin(), re.end()) == re.end()
                       ? 0.0
                       : *std::min_element(re.begin(), re.end());
  }
  r.eigenvalues = std::move(eigenvalues);
  r.notes.push_back("histogram is over real parts");
  return r;
}

nlohmann::json SpectrumReport::to_json(bool include_eigenvalues) const {
  nlohmann::json j;
  j["schema"] = "glim.spectrum/1";
  j["real"] = real;
  j["count"] = eigenvalues.size();
  if (include_eigenvalues) {
    auto& arr = j["eigenvalues"] = nlohmann::json::array();
    for (auto z : eigenvalues) {
      if (real) arr.push_back(z.real());
      else arr.push_back({z.real(), z.imag()});
    }
  }
  j["histogram"] = {{"edges", histogram.edges}, {"masses", histogram.masses}};
  j["moments"] = moments;
  j["extremes"] = {{"lambda1", lambda1},
                   {"lambda2", lambda2},
                   {"lambda_min", lambda_min},
                   {"second_modulus", second_modulus}};
  j["notes"] = notes;
  return j;
}

std::vector<double> spectral_moments(const SparseOperator& a, std::size_t v, std::size_t K) {
  if (v >= a.dim()) throw std::out_of_range("vertex out of range");
  std::vector<std::complex<double>> x(a.dim(), 0.0), y(a.dim());
  x[v] = 1.0;
  std::vector<double> out{1.0};
  for (std::size_t k = 1; k <= K; ++k) {
    a.apply(x, y);
    x.swap(y);
    out.push_back(x[v].real());
  }
  return out;
}

std::vector<double> spectral_moments(const MarkedGraph& g, const LocalKernel& kernel, VertexId v,
                                     std::size_t K) {
  return spectral_moments(local_operator(g, kernel), v, K);
}

std::vector<double> spectral_moments(const RootedBall& b, std::size_t K) {
  if (b.truncated()) {
    const std::uint64_t limit = 2 * std::uint64_t{b.exact_depth()} + 1;
    if (K > limit) {
      throw std::invalid_argument("moment order " + std::to_string(K) +
                                  " exceeds the exact range " + std::to_string(limit) +
                                  " of the truncated ball");
    }
  }
  return spectral_moments(weighted_adjacency(b.graph), RootedBall::center, K);
}

double ks_distance(std::vector<double> values, const std::function<double(double)>& cdf) {
  if (values.empty()) return 0.0;
  std::sort(values.begin(), values.end());
  const double n = static_cast<double>(values.size());
  double d = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    // Both sides of each jump; repeated values only count at their last copy.
    const double f = cdf(values[i]);
    std::size_t j = i;
    while (j + 1 < values.size() && values[j + 1] == values[i]) ++j;
    d = std::max(d, std::abs(static_cast<double>(i) / n - f));
    d = std::max(d, std::abs(static_cast<double>(j + 1) / n - f));
    i = j;
  }
  return d;
}

double multiset_distance(std::vector<std::complex<double>> a,
                         std::vector<std::complex<double>> b) {
  if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
  std::vector<bool> used(b.size(), false);
  double worst = 0.0;
  for (auto z : a) {
    std::size_t best = b.size();
    double dist = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (used[j]) continue;
      const double dj = std::abs(z - b[j]);
      if (dj < dist) {
        dist = dj;
        best = j;
      }
    }
    used[best] = true;
    worst = std::max(worst, dist);
  }
  return worst;
}

std::string complex_scatter_csv(const std::vector<std::complex<double>>& values) {
  std::string out = "re,im\n";
  char buf[64];
  for (auto z : values) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g\n", z.real(), z.imag());
    out += buf;
  }
  return out;
}

std::string histogram_svg(const Histogram& h, const std::string& title,
                          const std::function<double(double)>& overlay) {
  const double width = 640, height = 400, margin = 40;
  const std::size_t bins = h.masses.size();
  if (bins == 0) return "<svg xmlns=\"http://www.w3.org/2000/svg\"/>\n";
  const double lo = h.edges.front(), hi = h.edges.back();
  const double bw = (hi - lo) / static_cast<double>(bins);
  // Plot densities (mass / bin width) so an overlay density lines up.
  double ymax = 0.0;
  for (double m : h.masses) ymax = std::max(ymax, m / bw);
  std::vector<double> overlay_y;
  if (overlay) {
    for (std::size_t i = 0; i <= 200; ++i) {
      const double x = lo + (hi - lo) * static_cast<double>(i) / 200.0;
      overlay_y.push_back(overlay(x));
      if (std::isfinite(overlay_y.back())) ymax = std::max(ymax, overlay_y.back());
    }
  }
  if (ymax <= 0.0) ymax = 1.0;
  auto sx = [&](double x) { return margin + (x - lo) / (hi - lo) * (width - 2 * margin); };
  auto sy = [&](double y) { return height - margin - y / ymax * (height - 2 * margin); };
  std::ostringstream out;
  out.precision(6);
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
      << "\">\n<title>" << title << "</title>\n";
  out << "<text x=\"" << width / 2 << "\" y=\"20\" text-anchor=\"middle\">" << title << "</text>\n";
  for (std::size_t i = 0; i < bins; ++i) {
    const double y = h.masses[i] / bw;
    out << "<rect x=\"" << sx(h.edges[i]) << "\" y=\"" << sy(y) << "\" width=\""
        << sx(h.edges[i + 1]) - sx(h.edges[i]) << "\" height=\"" << sy(0) - sy(y)
        << "\" fill=\"steelblue\"/>\n";
  }
  if (!overlay_y.empty()) {
    out << "<polyline fill=\"none\" stroke=\"red\" stroke-width=\"2\" points=\"";
    for (std::size_t i = 0; i < overlay_y.size(); ++i) {
      const double x = lo + (hi - lo) * static_cast<double>(i) / 200.0;
      const double y = std::isfinite(overlay_y[i]) ? std::min(overlay_y[i], ymax) : ymax;
      out << sx(x) << ',' << sy(y) << ' ';
    }
    out << "\"/>\n";
  }
  out << "<line x1=\"" << margin << "\" y1=\"" << sy(0) << "\" x2=\"" << width - margin
      << "\" y2=\"" << sy(0) << "\" stroke=\"black\"/>\n";
  out << "<text x=\"" << margin << "\" y=\"" << height - 10 << "\">" << lo << "</text>\n";
  out << "<text x=\"" << width - margin << "\" y=\"" << height - 10
      << "\" text-anchor=\"end\">" << hi << "</text>\n</svg>\n";
  return out.str();
}

}  // namespace glim
