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

#ifndef GLIM_GROUP_WORD_HPP_
#define GLIM_GROUP_WORD_HPP_

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

namespace glim {

/// Reduced word in a free group. Letter +i is the generator g_i (i >= 1),
/// -i its inverse. Words are reduced on construction and on every product.
class Word {
 public:
  static constexpr int kMaxGenerators = 127;

  Word() = default;
  Word(std::initializer_list<int> letters);
  static Word from_letters(const std::vector<int>& letters);
  static Word generator(int i);

  std::vector<int> letters() const;
  int letter(std::size_t i) const { return static_cast<signed char>(rep_[i]); }
  std::size_t size() const { return rep_.size(); }
  bool is_identity() const { return rep_.empty(); }
  /// Largest |letter|, 0 for the identity.
  int max_generator() const;

  Word inverse() const;
  /// Appends `w` to the right, cancelling at the junction.
  Word& operator*=(const Word& w);
  friend Word operator*(Word u, const Word& w) { return u *= w; }

  /// "e" or e.g. "g1 g2^-1".
  std::string to_string() const;
  const std::string& key() const { return rep_; }

  friend bool operator==(const Word&, const Word&) = default;
  friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
    if (a.size() != b.size()) return a.size() <=> b.size();
    return a.rep_ <=> b.rep_;
  }

 private:
  void push(int letter);
  std::string rep_;
};

Word word_concat(const Word& u, const Word& w);

/// All reduced words over d generators with 1 <= length <= max_len, in
/// (length, lexicographic) order.
std::vector<Word> reduced_words(int d, std::size_t max_len);

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept {
    return std::hash<std::string>{}(w.key());
  }
};

}  // namespace glim

#endif  // GLIM_GROUP_WORD_HPP_
