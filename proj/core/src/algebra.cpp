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

#include "glim/group/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace glim {

AlgebraElement::AlgebraElement(int d) : d_(d) {
  if (d < 1 || d > Word::kMaxGenerators) throw std::invalid_argument("bad generator count");
}

AlgebraElement AlgebraElement::identity(int d) { return word(d, Word{}); }

AlgebraElement AlgebraElement::word(int d, const Word& w, Scalar c) {
  AlgebraElement a(d);
  a.add(w, c);
  return a;
}

AlgebraElement AlgebraElement::adjacency(int d) {
  AlgebraElement a(d);
  for (int i = 1; i <= d; ++i) {
    a.add(Word{i}, 1.0);
    a.add(Word{-i}, 1.0);
  }
  return a;
}

AlgebraElement::Scalar AlgebraElement::coeff(const Word& w) const {
  auto it = coeffs_.find(w);
  return it == coeffs_.end() ? Scalar{} : it->second;
}

void AlgebraElement::add(const Word& w, Scalar c) {
  if (w.max_generator() > d_) throw std::invalid_argument("word uses generator beyond d");
  if (c == Scalar{}) return;
  auto [it, inserted] = coeffs_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second == Scalar{}) coeffs_.erase(it);
  }
}

std::vector<std::pair<Word, AlgebraElement::Scalar>> AlgebraElement::terms() const {
  std::vector<std::pair<Word, Scalar>> out(coeffs_.begin(), coeffs_.end());
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

std::size_t AlgebraElement::radius() const {
  std::size_t r = 0;
  for (const auto& [w, c] : coeffs_) r = std::max(r, w.size());
  return r;
}

AlgebraElement AlgebraElement::adjoint() const {
  AlgebraElement out(d_);
  out.coeffs_.reserve(coeffs_.size());
  for (const auto& [w, c] : coeffs_) out.coeffs_.emplace(w.inverse(), std::conj(c));
  return out;
}

bool AlgebraElement::is_self_adjoint(double tol) const {
  return distance(*this, adjoint()) <= tol;
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& b) {
  if (b.d_ != d_) throw std::invalid_argument("generator count mismatch");
  for (const auto& [w, c] : b.coeffs_) add(w, c);
  return *this;
}

AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
  if (a.d_ != b.d_) throw std::invalid_argument("generator count mismatch");
  AlgebraElement out(a.d_);
  out.coeffs_.reserve(a.coeffs_.size() * std::min<std::size_t>(b.coeffs_.size(), 8));
  for (const auto& [u, cu] : a.coeffs_) {
    for (const auto& [v, cv] : b.coeffs_) out.coeffs_[u * v] += cu * cv;
  }
  std::erase_if(out.coeffs_, [](const auto& kv) { return kv.second == AlgebraElement::Scalar{}; });
  return out;
}

AlgebraElement operator*(AlgebraElement::Scalar s, AlgebraElement a) {
  if (s == AlgebraElement::Scalar{}) return AlgebraElement(a.d_);
  for (auto& [w, c] : a.coeffs_) c *= s;
  return a;
}

double AlgebraElement::distance(const AlgebraElement& a, const AlgebraElement& b) {
  double m = 0.0;
  for (const auto& [w, c] : a.coeffs_) m = std::max(m, std::abs(c - b.coeff(w)));
  for (const auto& [w, c] : b.coeffs_) m = std::max(m, std::abs(c - a.coeff(w)));
  return m;
}

AlgebraElement alg_mul(const AlgebraElement& a, const AlgebraElement& b) { return a * b; }

AlgebraElement alg_adjoint(const AlgebraElement& a) { return a.adjoint(); }

AlgebraElement::Scalar tau(const AlgebraElement& a) { return a.coeff(Word{}); }

double l2_norm(const AlgebraElement& a) {
  double s = 0.0;
  for (const auto& [w, c] : a.coefficients()) s += std::norm(c);
  return std::sqrt(s);
}

double l1_norm(const AlgebraElement& a) {
  double s = 0.0;
  for (const auto& [w, c] : a.coefficients()) s += std::abs(c);
  return s;
}

double haagerup_diagnostic_bound(const AlgebraElement& a) {
  return static_cast<double>(a.radius() + 1) * l2_norm(a) *
         std::sqrt(static_cast<double>(a.support_size()));
}

nlohmann::json to_json(const AlgebraElement& a) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [w, c] : a.terms()) {
    terms.push_back({w.letters(), {c.real(), c.imag()}});
  }
  return {{"d", a.generators()}, {"terms", terms}};
}

AlgebraElement algebra_from_json(const nlohmann::json& j) {
  AlgebraElement a(j.at("d").get<int>());
  for (const auto& t : j.at("terms")) {
    const auto letters = t.at(0).get<std::vector<int>>();
    const auto& c = t.at(1);
    a.add(Word::from_letters(letters), {c.at(0).get<double>(), c.at(1).get<double>()});
  }
  return a;
}

double NormEstimate::best_lower_bound() const {
  return lower_bounds.empty() ? 0.0 : *std::max_element(lower_bounds.begin(), lower_bounds.end());
}

NormEstimate operator_norm_estimate(const AlgebraElement& a, std::size_t L,
                                    std::size_t support_budget) {
  NormEstimate est;
  AlgebraElement base = a;
  double root = 1.0;
  if (!a.is_self_adjoint(1e-12)) {
    base = a * a.adjoint();
    est.symmetrized = true;
    root = 2.0;  // ||a|| = ||a a*||^(1/2)
  }
  AlgebraElement power = base;
  for (std::size_t l = 1; l <= L; ++l) {
    if (l > 1) {
      // Support of the product is at most |supp p| * |supp a|.
      if (power.support_size() * base.support_size() > 4 * support_budget) {
        est.truncated = true;
      } else {
        AlgebraElement next = power * base;
        if (next.support_size() > support_budget) est.truncated = true;
        else power = std::move(next);
      }
      if (est.truncated) {
        est.warning = "support budget of " + std::to_string(support_budget) +
                      " words reached at power " + std::to_string(l);
        break;
      }
    }
    est.lower_bounds.push_back(std::pow(l2_norm(power), 1.0 / (root * static_cast<double>(l))));
    est.support_sizes.push_back(power.support_size());
  }
  // Extrapolate log x_l = log x_inf + c / l from the last two even powers.
  std::vector<std::size_t> even;
  for (std::size_t l = 2; l <= est.lower_bounds.size(); l += 2) even.push_back(l);
  if (even.size() >= 2) {
    const double l1 = static_cast<double>(even[even.size() - 2]);
    const double l2 = static_cast<double>(even.back());
    const double x1 = std::log(est.lower_bounds[even[even.size() - 2] - 1]);
    const double x2 = std::log(est.lower_bounds[even.back() - 1]);
    est.extrapolated = std::exp((l2 * x2 - l1 * x1) / (l2 - l1));
  } else {
    est.extrapolated = est.best_lower_bound();
  }
  return est;
}

}  // namespace glim
