#pragma once

#include "genusdist/diagram.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace genusdist {

inline constexpr std::size_t kDefaultEnumerationLimit = 8;

/// Genus and face histograms over every diagram with n chords.
struct EnumerationResult {
    std::size_t n = 0;
    std::uint64_t diagram_count = 0;
    std::vector<std::uint64_t> genus_histogram;  // [g], g = 0 .. n/2
    std::vector<std::uint64_t> face_histogram;   // [k], k = 0 .. n+1
};

/**
 * Calls `visit` once for each of the (2n-1)!! diagrams with n chords.
 * Order: the smallest free endpoint is paired with each larger free endpoint
 * in increasing order, recursively. Nothing is materialized beyond one pairing.
 * Throws LimitExceeded when n > limit.
 */
void enumerate_all(std::size_t n, const std::function<void(const ChordDiagram&)>& visit,
                   std::size_t limit = kDefaultEnumerationLimit);

/// Histograms over all diagrams; top-level branches (partner of endpoint 0) may run in parallel.
EnumerationResult census(std::size_t n, std::size_t limit = kDefaultEnumerationLimit, unsigned threads = 1);

} // namespace genusdist
