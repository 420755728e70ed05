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

#include "glim/group/word.hpp"

#include <cstdlib>
#include <stdexcept>

namespace glim {

void Word::push(int letter) {
  if (letter == 0 || std::abs(letter) > kMaxGenerators) {
    throw std::invalid_argument("letter out of range: " + std::to_string(letter));
  }
  if (!rep_.empty() && static_cast<signed char>(rep_.back()) == -letter) {
    rep_.pop_back();
  } else {
    rep_.push_back(static_cast<char>(static_cast<signed char>(letter)));
  }
}

Word::Word(std::initializer_list<int> letters) {
  for (int l : letters) push(l);
}

Word Word::from_letters(const std::vector<int>& letters) {
  Word w;
  for (int l : letters) w.push(l);
  return w;
}

Word Word::generator(int i) { return Word{i}; }

std::vector<int> Word::letters() const {
  std::vector<int> out;
  out.reserve(rep_.size());
  for (char c : rep_) out.push_back(static_cast<signed char>(c));
  return out;
}

int Word::max_generator() const {
  int m = 0;
  for (char c : rep_) m = std::max(m, std::abs(static_cast<int>(static_cast<signed char>(c))));
  return m;
}

Word Word::inverse() const {
  Word w;
  w.rep_.reserve(rep_.size());
  for (auto it = rep_.rbegin(); it != rep_.rend(); ++it) {
    w.rep_.push_back(static_cast<char>(-static_cast<signed char>(*it)));
  }
  return w;
}

Word& Word::operator*=(const Word& w) {
  std::size_t i = 0;
  while (i < w.rep_.size() && !rep_.empty() &&
         static_cast<signed char>(rep_.back()) == -static_cast<signed char>(w.rep_[i])) {
    rep_.pop_back();
    ++i;
  }
  rep_.append(w.rep_, i, std::string::npos);
  return *this;
}

std::string Word::to_string() const {
  if (rep_.empty()) return "e";
  std::string out;
  for (std::size_t i = 0; i < rep_.size(); ++i) {
    if (i) out.push_back(' ');
    const int l = letter(i);
    out += "g" + std::to_string(std::abs(l));
    if (l < 0) out += "^-1";
  }
  return out;
}

Word word_concat(const Word& u, const Word& w) { return u * w; }

std::vector<Word> reduced_words(int d, std::size_t max_len) {
  std::vector<Word> out;
  std::vector<Word> layer{Word{}};
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<Word> next;
    for (const Word& w : layer) {
      for (int l = -d; l <= d; ++l) {
        if (l == 0) continue;
        if (!w.is_identity() && w.letter(w.size() - 1) == -l) continue;
        next.push_back(w * Word{l});
      }
    }
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

}  // namespace glim
