#pragma once

// Seeded, platform-independent generation of distinct random point sets.

#include <cstdint>
#include <limits>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "bmpp/errors.hpp"
#include "bmpp/field.hpp"
#include "bmpp/geometry.hpp"

namespace bmpp {

class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // uniform in [0, bound) by rejection
  std::uint64_t below(std::uint64_t bound) {
    if (bound == 0) throw BadSpec("empty sampling range");
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t v;
    do {
      v = next();
    } while (v >= limit);
    return v % bound;
  }

 private:
  std::uint64_t state_;
};

/// Mixes several integers into one seed, so that (seed, size, rep) cells get independent streams.
inline std::uint64_t derive_seed(std::initializer_list<std::uint64_t> parts) {
  SplitMix64 mix(0x5eed5eed5eed5eedULL);
  std::uint64_t h = mix.next();
  for (auto p : parts) {
    SplitMix64 step(h ^ p);
    h = step.next();
  }
  return h;
}

/// n distinct indices from [0, universe), via a sparse partial Fisher-Yates shuffle.
inline std::vector<std::uint64_t> sample_distinct(std::uint64_t universe, std::size_t n, SplitMix64& rng) {
  if (n > universe) {
    throw BadSpec("cannot draw " + std::to_string(n) + " distinct values from " + std::to_string(universe));
  }
  std::unordered_map<std::uint64_t, std::uint64_t> swapped;
  auto at = [&](std::uint64_t k) {
    auto it = swapped.find(k);
    return it == swapped.end() ? k : it->second;
  };
  std::vector<std::uint64_t> out;
  out.reserve(n);
  for (std::uint64_t k = 0; k < n; ++k) {
    std::uint64_t r = k + rng.below(universe - k);
    std::uint64_t vr = at(r);
    swapped[r] = at(k);
    out.push_back(vr);
  }
  return out;
}

inline PointSet<PrimeField> random_points(const PrimeField& field, std::size_t n, std::uint64_t seed) {
  const std::uint64_t q = field.modulus();
  SplitMix64 rng(seed);
  std::vector<Point<PrimeField>> pts;
  pts.reserve(n);
  for (auto idx : sample_distinct(q * q, n, rng)) {
    pts.push_back({PrimeField::Element{static_cast<std::uint32_t>(idx % q)},
                   PrimeField::Element{static_cast<std::uint32_t>(idx / q)}});
  }
  return PointSet<PrimeField>(field, std::move(pts));
}

/// Coordinates a/b with |a| <= 100 and 1 <= b <= 100; duplicate points are redrawn.
inline PointSet<RationalField> random_points(const RationalField& field, std::size_t n, std::uint64_t seed) {
  constexpr std::int64_t kBound = 100;
  SplitMix64 rng(seed);
  auto draw = [&] {
    auto num = static_cast<std::int64_t>(rng.below(2 * kBound + 1)) - kBound;
    auto den = static_cast<std::int64_t>(rng.below(kBound)) + 1;
    return field.canonicalize(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
  };
  std::set<std::pair<mpq_class, mpq_class>> seen;
  std::vector<Point<RationalField>> pts;
  pts.reserve(n);
  while (pts.size() < n) {
    auto x = draw();
    auto y = draw();
    if (seen.emplace(x, y).second) pts.push_back({x, y});
  }
  return PointSet<RationalField>(field, std::move(pts));
}

}  // namespace bmpp
