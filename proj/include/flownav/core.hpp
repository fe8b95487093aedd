// Small vector / grid types shared by every module.
#pragma once

#include <array>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <thread>
#include <vector>

namespace flownav {

template <class S>
struct Vec2 {
  S x = 0, y = 0;

  Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
  Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
  Vec2 operator*(S s) const { return {x * s, y * s}; }
  Vec2& operator+=(const Vec2& o) { x += o.x; y += o.y; return *this; }
  S norm() const { return std::sqrt(x * x + y * y); }
};

template <class S>
struct Vec3 {
  S x = 0, y = 0, z = 0;

  Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
  Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
  Vec3 operator*(S s) const { return {x * s, y * s, z * s}; }
  Vec3 operator-() const { return {-x, -y, -z}; }
  Vec3& operator+=(const Vec3& o) { x += o.x; y += o.y; z += o.z; return *this; }

  S dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
  S norm() const { return std::sqrt(dot(*this)); }
  S norm_sq() const { return dot(*this); }
  Vec3 normalized() const {
    const S n = norm();
    return n > 0 ? Vec3{x / n, y / n, z / n} : Vec3{0, 0, 0};
  }
  bool all_finite() const {
    return std::isfinite(x) && std::isfinite(y) && std::isfinite(z);
  }

  template <class T>
  Vec3<T> cast() const { return {static_cast<T>(x), static_cast<T>(y), static_cast<T>(z)}; }
};

template <class S>
Vec3<S> operator*(S s, const Vec3<S>& v) { return v * s; }

template <class S>
Vec3<S> cross(const Vec3<S>& a, const Vec3<S>& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

// Dense row-major grid.
template <class T>
class Grid {
 public:
  Grid() = default;
  Grid(int height, int width, T fill = T{})
      : height_(height), width_(width), data_(static_cast<size_t>(height) * width, fill) {}

  int height() const { return height_; }
  int width() const { return width_; }
  T& at(int row, int col) { return data_[static_cast<size_t>(row) * width_ + col]; }
  const T& at(int row, int col) const { return data_[static_cast<size_t>(row) * width_ + col]; }
  T* data() { return data_.data(); }
  const T* data() const { return data_.data(); }
  size_t size() const { return data_.size(); }

  bool operator==(const Grid&) const = default;

 private:
  int height_ = 0, width_ = 0;
  std::vector<T> data_;
};

// Wrap to (-pi, pi].
inline double wrap_angle(double a) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  a = std::fmod(a, two_pi);
  if (a <= -std::numbers::pi) a += two_pi;
  if (a > std::numbers::pi) a -= two_pi;
  return a;
}

// Runs fn(i) for i in [0, n). Work items are claimed through an atomic
// counter, so any thread count is valid; results must go to per-index slots.
template <class Fn>
void parallel_for(int n, int threads, Fn&& fn) {
  if (threads <= 1 || n <= 1) {
    for (int i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int i = next.fetch_add(1); i < n; i = next.fetch_add(1)) fn(i);
  };
  std::vector<std::thread> pool;
  const int k = std::min(threads, n);
  pool.reserve(k);
  for (int t = 0; t < k; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
}

}  // namespace flownav
