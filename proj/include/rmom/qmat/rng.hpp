#pragma once

#include <complex>
#include <cstdint>

namespace rmom {

// Stream-split PRNG: xoshiro256++ state derived from (master seed, stream
// index) through splitmix64. Streams are independent, so consumers may be
// evaluated in parallel and still reproduce bit-identically for a fixed
// master seed.
class StreamRng {
public:
    StreamRng(std::uint64_t master_seed, std::uint64_t stream);

    std::uint64_t next_u64();
    // uniform in [0, 1)
    double uniform();
    // uniform in (0, 1]
    double uniform_pos();
    // standard normal (Box-Muller; platform-independent given libm)
    double normal();
    // independent N(0,1) real and imaginary parts
    std::complex<double> complex_normal();

private:
    std::uint64_t s_[4];
    double cached_ = 0.0;
    bool has_cached_ = false;
};

}  // namespace rmom
