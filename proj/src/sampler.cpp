#include "genusdist/sampler.hpp"

#include "genusdist/errors.hpp"
#include "parallel.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace genusdist {

namespace {

// Reusable buffers for drawing pairings without per-sample allocation.
class PairingDrawer {
public:
    explicit PairingDrawer(std::size_t n) : pool_(2 * n), pos_(2 * n), pairing_(2 * n), matched_(2 * n) {}

    std::span<const ChordDiagram::Endpoint> draw(Xoshiro256ss& rng) {
        const std::size_t m = pairing_.size();
        std::iota(pool_.begin(), pool_.end(), 0U);
        std::iota(pos_.begin(), pos_.end(), 0U);
        std::size_t live = m;
        auto remove = [&](ChordDiagram::Endpoint e) {
            const std::size_t at = pos_[e];
            const ChordDiagram::Endpoint last = pool_[live - 1];
            pool_[at] = last;
            pos_[last] = static_cast<ChordDiagram::Endpoint>(at);
            --live;
        };
        std::fill(matched_.begin(), matched_.end(), std::uint8_t{0});
        for (std::size_t i = 0; i < m; ++i) {
            if (matched_[i]) continue;
            const auto e = static_cast<ChordDiagram::Endpoint>(i);
            remove(e);
            const ChordDiagram::Endpoint partner = pool_[rng.uniform_below(live)];
            remove(partner);
            pairing_[e] = partner;
            pairing_[partner] = e;
            matched_[partner] = 1;
        }
        return pairing_;
    }

private:
    std::vector<ChordDiagram::Endpoint> pool_;
    std::vector<ChordDiagram::Endpoint> pos_;
    std::vector<ChordDiagram::Endpoint> pairing_;
    std::vector<std::uint8_t> matched_;
};

struct GenusTally {
    std::vector<std::uint64_t> histogram;
};

} // namespace

ChordDiagram sample_diagram(std::size_t n, Xoshiro256ss& rng) {
    if (n == 0) throw InputError("n must be positive");
    PairingDrawer drawer(n);
    const auto p = drawer.draw(rng);
    return ChordDiagram::from_pairing(std::vector<ChordDiagram::Endpoint>(p.begin(), p.end()));
}

SampleReport monte_carlo(std::size_t n, std::uint64_t sample_count, std::uint64_t seed,
                         const SamplerOptions& options) {
    if (n == 0) throw InputError("n must be positive");
    if (sample_count == 0) throw InputError("sample count must be positive");
    if (options.compare_exact && n > options.exact_limit) {
        throw InfeasibleExactComparison("exact comparison requested for n = " + std::to_string(n) +
                                        " above the limit " + std::to_string(options.exact_limit));
    }

    const std::size_t max_genus = n / 2;
    const auto tallies = detail::run_chunked(
        sample_count, options.threads, GenusTally{std::vector<std::uint64_t>(max_genus + 1, 0)},
        [&](std::uint64_t begin, std::uint64_t end, GenusTally& local) {
            PairingDrawer drawer(n);
            std::vector<std::uint8_t> scratch;
            std::vector<std::size_t> sides;
            for (std::uint64_t i = begin; i < end; ++i) {
                Xoshiro256ss rng = Xoshiro256ss::substream(seed, i);
                boundary_cycles(drawer.draw(rng), scratch, sides);
                ++local.histogram[genus_from_faces(n, sides.size())];
            }
        });

    SampleReport r;
    r.n = n;
    r.sample_count = sample_count;
    r.seed = seed;
    r.histogram.assign(max_genus + 1, 0);
    for (const auto& t : tallies) {
        for (std::size_t g = 0; g <= max_genus; ++g) r.histogram[g] += t.histogram[g];
    }

    const double count = static_cast<double>(sample_count);
    double sum = 0;
    for (std::size_t g = 0; g <= max_genus; ++g) sum += static_cast<double>(g) * static_cast<double>(r.histogram[g]);
    r.empirical_mean = sum / count;
    double ss = 0;
    for (std::size_t g = 0; g <= max_genus; ++g) {
        const double d = static_cast<double>(g) - r.empirical_mean;
        ss += d * d * static_cast<double>(r.histogram[g]);
    }
    r.empirical_variance = sample_count > 1 ? ss / (count - 1.0) : 0.0;

    if (options.compare_exact) {
        const GenusDistribution exact = genus_distribution(n);
        const auto [mean, var] = exact_mean_variance(n);
        ExactSampleComparison c;
        c.exact_mean = mean.get_d();
        c.exact_variance = var.get_d();
        const std::vector<double> p = exact.probabilities();
        double l1 = 0;
        for (std::size_t g = 0; g <= max_genus; ++g) {
            l1 += std::abs(static_cast<double>(r.histogram[g]) / count - p[g]);
        }
        c.tv_distance = 0.5 * l1;
        const double se = std::sqrt(c.exact_variance / count);
        c.mean_z = se > 0 ? (r.empirical_mean - c.exact_mean) / se : 0.0;
        r.exact = c;
    }

    if (options.compare_llt && n >= 2) {
        const LltModel model = make_llt_model(n, options.alpha);
        LltSampleComparison c;
        c.model_mean = model.mean;
        c.model_variance = model.variance;
        c.asymptotic_mean = asymptotic_mean(n);
        double l1 = 0;
        double q_support = 0;
        for (std::size_t g = 0; g <= max_genus; ++g) {
            const double q = llt_bin_mass(model, static_cast<double>(g));
            q_support += q;
            l1 += std::abs(static_cast<double>(r.histogram[g]) / count - q);
        }
        c.tv_distance = 0.5 * (l1 + std::max(0.0, 1.0 - q_support));
        r.llt = c;
    }
    return r;
}

FaceCensus face_census(std::size_t n, std::uint64_t sample_count, std::uint64_t seed, unsigned threads) {
    if (n == 0) throw InputError("n must be positive");
    if (sample_count == 0) throw InputError("sample count must be positive");

    std::vector<std::size_t> largest(sample_count);
    const auto tallies = detail::run_chunked(
        sample_count, threads, GenusTally{std::vector<std::uint64_t>(n + 2, 0)},
        [&](std::uint64_t begin, std::uint64_t end, GenusTally& local) {
            PairingDrawer drawer(n);
            std::vector<std::uint8_t> scratch;
            std::vector<std::size_t> sides;
            for (std::uint64_t i = begin; i < end; ++i) {
                Xoshiro256ss rng = Xoshiro256ss::substream(seed, i);
                boundary_cycles(drawer.draw(rng), scratch, sides);
                ++local.histogram[sides.size()];
                largest[i] = *std::max_element(sides.begin(), sides.end());
            }
        });

    FaceCensus c;
    c.n = n;
    c.sample_count = sample_count;
    c.seed = seed;
    c.face_histogram.assign(n + 2, 0);
    for (const auto& t : tallies) {
        for (std::size_t k = 0; k < c.face_histogram.size(); ++k) c.face_histogram[k] += t.histogram[k];
    }

    std::sort(largest.begin(), largest.end());
    c.largest_face_min = largest.front();
    c.largest_face_max = largest.back();
    const std::size_t mid = largest.size() / 2;
    c.largest_face_median = largest.size() % 2 == 1
                                ? static_cast<double>(largest[mid])
                                : 0.5 * static_cast<double>(largest[mid - 1] + largest[mid]);
    double total = 0;
    for (std::size_t v : largest) total += static_cast<double>(v);
    c.largest_face_mean = total / static_cast<double>(largest.size());
    c.n_over_ln_n = n >= 2 ? static_cast<double>(n) / std::log(static_cast<double>(n)) : 0.0;
    return c;
}

} // namespace genusdist
