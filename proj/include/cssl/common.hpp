#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

namespace cssl {

// Error kind maps to the CLI exit code: invalid_input -> 2, failure -> 1.
class Error : public std::runtime_error {
 public:
  enum class Kind { invalid_input, failure };

  Error(Kind kind, const std::string& msg) : std::runtime_error(msg), kind_(kind) {}
  Kind kind() const { return kind_; }

  static Error invalid(const std::string& msg) { return Error(Kind::invalid_input, msg); }
  static Error failure(const std::string& msg) { return Error(Kind::failure, msg); }

 private:
  Kind kind_;
};

inline uint64_t splitmix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline uint64_t seed_combine(uint64_t a, uint64_t b) { return splitmix64(a ^ splitmix64(b)); }

// Stable sub-stream seeds: derive_seed(root, "augment", epoch, index) etc.
inline uint64_t derive_seed(uint64_t root) { return splitmix64(root); }

template <typename... Rest>
uint64_t derive_seed(uint64_t root, uint64_t head, Rest... rest) {
  return derive_seed(seed_combine(root, head), rest...);
}

inline uint64_t tag_hash(const std::string& tag) {
  uint64_t h = 0xcbf29ce484222325ULL;  // FNV-1a 64
  for (unsigned char c : tag) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

template <typename... Rest>
uint64_t derive_seed(uint64_t root, const std::string& tag, Rest... rest) {
  return derive_seed(seed_combine(root, tag_hash(tag)), rest...);
}

// Thin wrapper so every consumer draws from the same engine type.
class Rng {
 public:
  explicit Rng(uint64_t seed) : gen_(seed) {}

  double uniform(double lo = 0.0, double hi = 1.0) {
    return std::uniform_real_distribution<double>(lo, hi)(gen_);
  }
  double normal(double mean = 0.0, double stddev = 1.0) {
    return std::normal_distribution<double>(mean, stddev)(gen_);
  }
  // Inclusive bounds.
  int64_t uniform_int(int64_t lo, int64_t hi) {
    return std::uniform_int_distribution<int64_t>(lo, hi)(gen_);
  }
  bool bernoulli(double p) { return uniform() < p; }

  std::mt19937_64& engine() { return gen_; }

 private:
  std::mt19937_64 gen_;
};

uint64_t fnv1a_file_digest(const std::string& path);
std::string to_hex(uint64_t v);

}  // namespace cssl
