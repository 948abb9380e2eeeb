#pragma once

#include <string>
#include <vector>

namespace gyro {

/// A bijection of {0, ..., n-1} stored as its image array.
class Permutation {
 public:
  Permutation() = default;

  /// Throws std::invalid_argument unless `images` is a bijection.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& images() const { return images_; }

  bool is_identity() const;
  Permutation inverse() const;

  /// f * g applies g first, then f.
  friend Permutation operator*(const Permutation& f, const Permutation& g);
  friend bool operator==(const Permutation&, const Permutation&) = default;

  /// Cycle notation with fixed points omitted, e.g. "(8 9)(10 11)".
  /// The identity renders as "()".
  std::string cycle_string() const;

  /// Space-separated images, e.g. "1 0 3 2".
  std::string one_line_string() const;

 private:
  std::vector<int> images_;
};

bool is_bijection(const std::vector<int>& images);

}  // namespace gyro
