#include "genusdist/enumerate.hpp"

#include "genusdist/errors.hpp"
#include "parallel.hpp"

#include <string>

namespace genusdist {

namespace {

using Endpoint = ChordDiagram::Endpoint;
constexpr Endpoint kFree = ~Endpoint{0};

void check_limit(std::size_t n, std::size_t limit) {
    if (n == 0) throw InputError("n must be positive");
    if (n > limit) {
        throw LimitExceeded("enumeration of n = " + std::to_string(n) + " exceeds the limit " +
                            std::to_string(limit));
    }
}

// Fills the rest of `pairing` in canonical order, calling leaf() at each complete pairing.
template <typename Leaf>
void extend(std::vector<Endpoint>& pairing, std::size_t from, Leaf& leaf) {
    const std::size_t m = pairing.size();
    while (from < m && pairing[from] != kFree) ++from;
    if (from == m) {
        leaf(pairing);
        return;
    }
    for (std::size_t j = from + 1; j < m; ++j) {
        if (pairing[j] != kFree) continue;
        pairing[from] = static_cast<Endpoint>(j);
        pairing[j] = static_cast<Endpoint>(from);
        extend(pairing, from + 1, leaf);
        pairing[j] = kFree;
    }
    pairing[from] = kFree;
}

} // namespace

void enumerate_all(std::size_t n, const std::function<void(const ChordDiagram&)>& visit, std::size_t limit) {
    check_limit(n, limit);
    std::vector<Endpoint> pairing(2 * n, kFree);
    auto leaf = [&](const std::vector<Endpoint>& p) { visit(ChordDiagram::from_pairing(p)); };
    extend(pairing, 0, leaf);
}

EnumerationResult census(std::size_t n, std::size_t limit, unsigned threads) {
    check_limit(n, limit);
    const std::size_t m = 2 * n;

    struct Tally {
        std::uint64_t count = 0;
        std::vector<std::uint64_t> faces;
    };
    // one branch per partner of endpoint 0
    const auto tallies = detail::run_chunked(
        m - 1, threads, Tally{0, std::vector<std::uint64_t>(n + 2, 0)},
        [&](std::uint64_t begin, std::uint64_t end, Tally& local) {
            std::vector<std::uint8_t> scratch;
            std::vector<std::size_t> sides;
            auto leaf = [&](const std::vector<Endpoint>& p) {
                boundary_cycles(p, scratch, sides);
                ++local.count;
                ++local.faces[sides.size()];
            };
            for (std::uint64_t b = begin; b < end; ++b) {
                std::vector<Endpoint> pairing(m, kFree);
                const auto partner = static_cast<Endpoint>(b + 1);
                pairing[0] = partner;
                pairing[partner] = 0;
                extend(pairing, 1, leaf);
            }
        });

    EnumerationResult r;
    r.n = n;
    r.face_histogram.assign(n + 2, 0);
    r.genus_histogram.assign(n / 2 + 1, 0);
    for (const auto& t : tallies) {
        r.diagram_count += t.count;
        for (std::size_t k = 0; k < t.faces.size(); ++k) r.face_histogram[k] += t.faces[k];
    }
    for (std::size_t k = 1; k <= n + 1; ++k) {
        if (r.face_histogram[k] != 0) r.genus_histogram[genus_from_faces(n, k)] += r.face_histogram[k];
    }
    return r;
}

} // namespace genusdist
