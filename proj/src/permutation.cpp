#include "gyro/permutation.hpp"

#include <numeric>
#include <stdexcept>

namespace gyro {

bool is_bijection(const std::vector<int>& images) {
  const int n = static_cast<int>(images.size());
  std::vector<bool> seen(images.size(), false);
  for (int v : images) {
    if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)]) return false;
    seen[static_cast<std::size_t>(v)] = true;
  }
  return true;
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  if (!is_bijection(images_))
    throw std::invalid_argument("Permutation: image array is not a bijection");
}

Permutation Permutation::identity(int n) {
  std::vector<int> im(static_cast<std::size_t>(n));
  std::iota(im.begin(), im.end(), 0);
  return Permutation(std::move(im));
}

bool Permutation::is_identity() const {
  for (int i = 0; i < size(); ++i)
    if (images_[static_cast<std::size_t>(i)] != i) return false;
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<int> im(images_.size());
  for (int i = 0; i < size(); ++i)
    im[static_cast<std::size_t>(images_[static_cast<std::size_t>(i)])] = i;
  return Permutation(std::move(im));
}

Permutation operator*(const Permutation& f, const Permutation& g) {
  if (f.size() != g.size())
    throw std::invalid_argument("Permutation: size mismatch in composition");
  std::vector<int> im(f.images_.size());
  for (int i = 0; i < f.size(); ++i) im[static_cast<std::size_t>(i)] = f(g(i));
  return Permutation(std::move(im));
}

std::string Permutation::cycle_string() const {
  std::string out;
  std::vector<bool> seen(images_.size(), false);
  for (int start = 0; start < size(); ++start) {
    if (seen[static_cast<std::size_t>(start)] ||
        images_[static_cast<std::size_t>(start)] == start)
      continue;
    out += '(';
    int i = start;
    bool first = true;
    while (!seen[static_cast<std::size_t>(i)]) {
      seen[static_cast<std::size_t>(i)] = true;
      if (!first) out += ' ';
      out += std::to_string(i);
      first = false;
      i = images_[static_cast<std::size_t>(i)];
    }
    out += ')';
  }
  if (out.empty()) out = "()";
  return out;
}

std::string Permutation::one_line_string() const {
  std::string out;
  for (int i = 0; i < size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(images_[static_cast<std::size_t>(i)]);
  }
  return out;
}

}  // namespace gyro
