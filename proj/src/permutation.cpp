#include "mdzv/permutation.hpp"

#include <algorithm>
#include <numeric>

#include "mdzv/errors.hpp"

namespace mdzv {

Permutation::Permutation(int degree) : img_(static_cast<size_t>(degree)) {
  std::iota(img_.begin(), img_.end(), 1);
}

Permutation Permutation::one_line(std::vector<int> images) {
  const int k = static_cast<int>(images.size());
  std::vector<bool> seen(static_cast<size_t>(k), false);
  for (int v : images) {
    if (v < 1 || v > k || seen[static_cast<size_t>(v) - 1])
      throw ParseError("not a permutation of 1.." + std::to_string(k));
    seen[static_cast<size_t>(v) - 1] = true;
  }
  Permutation p;
  p.img_ = std::move(images);
  return p;
}

Permutation Permutation::parse(std::string_view text, int degree) {
  if (degree < 1 || degree > 9) throw ParseError("unsupported permutation degree");
  Permutation p(degree);
  std::vector<bool> used(static_cast<size_t>(degree), false);
  size_t i = 0;
  if (text.empty()) throw ParseError("empty cycle notation");
  while (i < text.size()) {
    if (text[i] != '(') throw ParseError("expected '(' in cycle notation");
    ++i;
    std::vector<int> cycle;
    while (i < text.size() && text[i] != ')') {
      char c = text[i];
      if (c < '1' || c > '0' + degree)
        throw ParseError(std::string("bad symbol '") + c + "' in cycle notation");
      int v = c - '0';
      if (used[static_cast<size_t>(v) - 1])
        throw ParseError("repeated element " + std::to_string(v) + " in cycles");
      used[static_cast<size_t>(v) - 1] = true;
      cycle.push_back(v);
      ++i;
    }
    if (i >= text.size()) throw ParseError("unterminated cycle");
    ++i;  // ')'
    if (cycle.empty()) throw ParseError("empty cycle");
    for (size_t j = 0; j < cycle.size(); ++j)
      p.img_[static_cast<size_t>(cycle[j]) - 1] = cycle[(j + 1) % cycle.size()];
  }
  return p;
}

Permutation Permutation::inverse() const {
  Permutation p;
  p.img_.resize(img_.size());
  for (size_t i = 0; i < img_.size(); ++i)
    p.img_[static_cast<size_t>(img_[i]) - 1] = static_cast<int>(i) + 1;
  return p;
}

bool Permutation::is_identity() const {
  for (size_t i = 0; i < img_.size(); ++i)
    if (img_[i] != static_cast<int>(i) + 1) return false;
  return true;
}

std::string Permutation::str() const {
  const int k = degree();
  std::vector<bool> seen(static_cast<size_t>(k), false);
  std::string out;
  for (int i = 1; i <= k; ++i) {
    if (seen[static_cast<size_t>(i) - 1] || (*this)(i) == i) {
      seen[static_cast<size_t>(i) - 1] = true;
      continue;
    }
    out += '(';
    int j = i;
    do {
      seen[static_cast<size_t>(j) - 1] = true;
      out += static_cast<char>('0' + j);
      j = (*this)(j);
    } while (j != i);
    out += ')';
  }
  return out.empty() ? "(1)" : out;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  Permutation p;
  p.img_.resize(a.img_.size());
  for (size_t i = 0; i < a.img_.size(); ++i)
    p.img_[i] = a(b(static_cast<int>(i) + 1));
  return p;
}

std::vector<Permutation> symmetric_group(int degree) {
  std::vector<int> line(static_cast<size_t>(degree));
  std::iota(line.begin(), line.end(), 1);
  std::vector<Permutation> all;
  do {
    all.push_back(Permutation::one_line(line));
  } while (std::next_permutation(line.begin(), line.end()));
  return all;
}

}  // namespace mdzv
