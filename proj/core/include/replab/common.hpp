#pragma once

#include <cstdint>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace replab {

// Bad or inconsistent configuration / inputs. Maps to CLI exit code 2.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// Non-finite loss during training. Carries the last good checkpoint, if any.
// Maps to CLI exit code 3.
class DivergedError : public std::runtime_error {
 public:
  DivergedError(const std::string& msg, std::string last_checkpoint)
      : std::runtime_error(msg), last_checkpoint_(std::move(last_checkpoint)) {}
  const std::string& last_checkpoint() const { return last_checkpoint_; }

 private:
  std::string last_checkpoint_;
};

class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

// Deterministic 64-bit RNG (splitmix64). Identical sequences on every
// platform, unlike <random> distributions.
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed) {}

  uint64_t next_u64() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, n). n must be > 0.
  uint64_t next_below(uint64_t n) {
    // Rejection-free modulo is fine here: n is tiny vs 2^64, bias negligible
    // for experiment bookkeeping, and determinism is what matters.
    return next_u64() % n;
  }

  // Uniform double in [0, 1).
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  // Standard normal via Box-Muller (cached second value).
  double next_normal() {
    if (have_cached_) {
      have_cached_ = false;
      return cached_;
    }
    double u1 = 0.0;
    do {
      u1 = next_double();
    } while (u1 <= 0.0);
    double u2 = next_double();
    double r = std::sqrt(-2.0 * std::log(u1));
    double a = 6.283185307179586476925286766559 * u2;
    cached_ = r * std::sin(a);
    have_cached_ = true;
    return r * std::cos(a);
  }

  template <class T>
  void shuffle(std::vector<T>& v) {
    for (size_t i = v.size(); i > 1; --i) {
      size_t j = static_cast<size_t>(next_below(i));
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  uint64_t state_;
  bool have_cached_ = false;
  double cached_ = 0.0;
};

// Derive a child seed from a parent seed and a stream label. Used to give
// independent deterministic RNG streams to schedule slots, epochs, etc.
inline uint64_t derive_seed(uint64_t seed, uint64_t stream) {
  Rng r(seed ^ (0x517cc1b727220a95ull * (stream + 1)));
  return r.next_u64();
}

// FNV-1a over a byte string; stable across platforms. Used for run ids.
inline uint64_t fnv1a64(const std::string& s) {
  uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);
// Write to path.tmp then rename; used for completion markers.
void write_file_atomic(const std::string& path, const std::string& content);

// Shortest decimal that round-trips a double; used everywhere a float is
// printed into a deterministic artifact (CSV, JSON, SVG).
std::string format_double(double v);

int env_thread_cap();  // RL_THREADS, default hardware_concurrency

}  // namespace replab
