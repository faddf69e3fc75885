#pragma once

#include <cstdint>
#include <limits>

namespace rehub {

/// Dense 0-based vertex identifier.
using Vertex = std::uint32_t;

/// Position of an object inside an ObjectSet.
using ObjectIndex = std::uint32_t;

/// Hop distance. Stored label distances fit in 8 bits; sums of two label
/// distances do not, so computed distances use the wider type.
using Distance = std::uint32_t;

/// Reserved sentinel, strictly greater than any representable distance.
inline constexpr Distance kInfinity = std::numeric_limits<Distance>::max();

/// Largest distance that fits the 8-bit on-disk width.
inline constexpr Distance kMaxStoredDistance = 255;

/// (object index, distance) pair used by every per-hub and per-object list.
struct ObjectPair {
  ObjectIndex index = 0;
  Distance dist = 0;

  friend bool operator==(const ObjectPair&, const ObjectPair&) = default;
};

/// Canonical order: ascending distance, ties by ascending object index.
constexpr bool precedes(const ObjectPair& a, const ObjectPair& b) noexcept {
  return a.dist < b.dist || (a.dist == b.dist && a.index < b.index);
}

}  // namespace rehub
