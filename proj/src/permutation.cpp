#include "ck/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace ck {

Permutation::Permutation(int degree) : images_(degree) {
  if (degree < 1) throw std::invalid_argument("permutation degree must be >= 1");
  std::iota(images_.begin(), images_.end(), 0);
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  if (images_.empty()) throw std::invalid_argument("permutation degree must be >= 1");
  std::vector<bool> seen(images_.size(), false);
  for (int y : images_) {
    if (y < 0 || y >= degree() || seen[y])
      throw std::invalid_argument("image list is not a bijection");
    seen[y] = true;
  }
}

Permutation Permutation::from_cycles(int degree, const std::string& text) {
  if (degree < 1) throw std::invalid_argument("permutation degree must be >= 1");
  std::vector<int> images(degree);
  std::iota(images.begin(), images.end(), 0);
  std::vector<bool> used(degree, false);

  size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  if (i == text.size()) throw std::invalid_argument("empty cycle expression");
  bool any_cycle = false;
  while (i < text.size()) {
    skip_ws();
    if (i == text.size()) break;
    if (text[i] != '(') throw std::invalid_argument("expected '(' in cycle expression");
    ++i;
    std::vector<int> cyc;
    for (;;) {
      skip_ws();
      if (i == text.size()) throw std::invalid_argument("unterminated cycle");
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw std::invalid_argument("expected point number in cycle");
      long long v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + (text[i] - '0');
        if (v > degree) break;  // out of range either way; avoid overflow
        ++i;
      }
      if (v >= degree)
        throw std::invalid_argument("point " + std::to_string(v) + " out of range for degree " +
                                    std::to_string(degree));
      if (used[v])
        throw std::invalid_argument("point " + std::to_string(v) +
                                    " repeated; cycles are not disjoint");
      used[v] = true;
      cyc.push_back(v);
    }
    any_cycle = true;
    for (size_t k = 0; k < cyc.size(); ++k) images[cyc[k]] = cyc[(k + 1) % cyc.size()];
  }
  if (!any_cycle) throw std::invalid_argument("empty cycle expression");
  return Permutation(std::move(images));
}

bool Permutation::is_identity() const {
  for (int x = 0; x < degree(); ++x) {
    if (images_[x] != x) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (int x = 0; x < degree(); ++x) inv[images_[x]] = x;
  return Permutation(std::move(inv));
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(images_.size(), false);
  for (int x = 0; x < degree(); ++x) {
    if (seen[x] || images_[x] == x) continue;
    std::vector<int> cyc;
    int y = x;
    while (!seen[y]) {
      seen[y] = true;
      cyc.push_back(y);
      y = images_[y];
    }
    out.push_back(std::move(cyc));
  }
  return out;
}

std::string Permutation::cycle_string() const {
  const auto cs = cycles();
  if (cs.empty()) return "()";
  std::ostringstream os;
  for (const auto& cyc : cs) {
    os << '(';
    for (size_t k = 0; k < cyc.size(); ++k) {
      if (k) os << ' ';
      os << cyc[k];
    }
    os << ')';
  }
  return os.str();
}

Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) throw std::invalid_argument("compose: degree mismatch");
  std::vector<int> images(a.degree());
  for (int x = 0; x < a.degree(); ++x) images[x] = b(a(x));
  return Permutation(std::move(images));
}

}  // namespace ck

std::size_t std::hash<ck::Permutation>::operator()(const ck::Permutation& p) const {
  std::size_t h = 1469598103934665603ull;
  for (int x : p.images()) {
    h ^= static_cast<std::size_t>(x);
    h *= 1099511628211ull;
  }
  return h;
}
