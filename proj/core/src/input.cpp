#include "toepblock/input.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace toepblock {

namespace {

constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;

std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

// Uniform in (0, 1]: never 0, so log() below is safe.
double to_unit(std::uint64_t z) {
    return (static_cast<double>(z >> 11) + 1.0) * 0x1.0p-53;
}

}  // namespace

const char* distribution_name(Distribution dist) {
    switch (dist) {
        case Distribution::Rademacher: return "rademacher";
        case Distribution::Gaussian: return "gaussian";
        case Distribution::Uniform: return "uniform";
    }
    return "?";
}

Distribution parse_distribution(const std::string& name) {
    if (name == "rademacher") return Distribution::Rademacher;
    if (name == "gaussian") return Distribution::Gaussian;
    if (name == "uniform") return Distribution::Uniform;
    throw std::invalid_argument("unknown distribution '" + name + "'");
}

InputStream::InputStream(const InputSpec& spec, std::uint64_t stream_label)
    : dist_(spec.dist), key_(mix64(mix64(spec.seed + kGamma) ^ (stream_label * kGamma + 1))) {}

std::uint64_t InputStream::word(std::uint64_t index) const {
    return mix64(key_ + (index + 1) * kGamma);
}

double InputStream::at(std::uint64_t index) const {
    switch (dist_) {
        case Distribution::Rademacher:
            return (word(index) >> 63) ? 1.0 : -1.0;
        case Distribution::Uniform: {
            const double u = to_unit(word(index));
            return (2.0 * u - 1.0) * std::numbers::sqrt3;
        }
        case Distribution::Gaussian:
            break;
    }
    // Box-Muller on two sub-draws of this index.
    const double u1 = to_unit(word(2 * index));
    const double u2 = to_unit(word(2 * index + 1));
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

InputStream sample_input(const InputSpec& spec, std::uint64_t stream_label) {
    return InputStream(spec, stream_label);
}

std::uint64_t replicate_seed(std::uint64_t master_seed, std::uint64_t replicate) {
    return mix64(master_seed ^ mix64((replicate + 1) * kGamma));
}

}  // namespace toepblock
