#pragma once

#include <cstdint>
#include <string>

namespace toepblock {

enum class Distribution {
    Rademacher,  // +1/-1 with equal probability
    Gaussian,    // standard normal
    Uniform,     // uniform on [-sqrt(3), sqrt(3)]
};

const char* distribution_name(Distribution dist);
Distribution parse_distribution(const std::string& name);

struct InputSpec {
    Distribution dist = Distribution::Rademacher;
    std::uint64_t seed = 12345;
};

// One reproducible random sequence with O(1) random access. Streams for
// distinct labels under the same seed behave independently.
//
// Generator: splitmix64. The stream key mixes (seed, label) through the
// splitmix64 finalizer; draw i is the finalizer applied to key + (i+1)*gamma,
// i.e. the i-th output of a splitmix64 sequence started at the key. All
// integer arithmetic, so sequences are platform-stable bit for bit; gaussian
// draws additionally go through libm (sqrt/log/cos) and are stable up to
// last-ulp libm differences.
class InputStream {
public:
    InputStream(const InputSpec& spec, std::uint64_t stream_label);

    double at(std::uint64_t index) const;

    // Raw 64-bit word behind draw `index` (uniform over 2^64).
    std::uint64_t word(std::uint64_t index) const;

private:
    Distribution dist_;
    std::uint64_t key_;
};

InputStream sample_input(const InputSpec& spec, std::uint64_t stream_label);

// Seed for one replicate of a multi-replicate experiment, derived from the
// master seed so replicates are independent and order-insensitive.
std::uint64_t replicate_seed(std::uint64_t master_seed, std::uint64_t replicate);

}  // namespace toepblock
