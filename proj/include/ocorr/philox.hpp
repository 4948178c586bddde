#ifndef OCORR_PHILOX_HPP
#define OCORR_PHILOX_HPP

#include <array>
#include <cstdint>

namespace ocorr {

/// Philox4x32-10 counter-based generator. Streams are independent
/// substreams of one seed: (seed, stream, counter) -> 128 bits. Output
/// is a pure function of its inputs, so trial i of stream s is the same
/// no matter how work is scheduled across threads.
class Philox {
public:
    Philox(uint64_t seed, uint64_t stream, uint64_t counter = 0)
        : key_{(uint32_t)seed, (uint32_t)(seed >> 32)},
          base_{0, 0, (uint32_t)stream, (uint32_t)(stream >> 32)},
          counter_(counter),
          idx_(4) {}

    uint32_t next_u32() {
        if (idx_ == 4) refill();
        return out_[idx_++];
    }

    uint64_t next_u64() {
        uint64_t lo = next_u32();
        return lo | ((uint64_t)next_u32() << 32);
    }

    /// Uniform in [0,1) with 53 random bits.
    double next_double() { return (next_u64() >> 11) * 0x1.0p-53; }

private:
    static constexpr uint32_t kMul0 = 0xD2511F53u, kMul1 = 0xCD9E8D57u;
    static constexpr uint32_t kWeyl0 = 0x9E3779B9u, kWeyl1 = 0xBB67AE85u;

    void refill() {
        std::array<uint32_t, 4> x = base_;
        x[0] = (uint32_t)counter_;
        x[1] = (uint32_t)(counter_ >> 32);
        uint32_t k0 = key_[0], k1 = key_[1];
        for (int round = 0; round < 10; ++round) {
            uint64_t p0 = (uint64_t)kMul0 * x[0];
            uint64_t p1 = (uint64_t)kMul1 * x[2];
            uint32_t hi0 = (uint32_t)(p0 >> 32), lo0 = (uint32_t)p0;
            uint32_t hi1 = (uint32_t)(p1 >> 32), lo1 = (uint32_t)p1;
            x[0] = hi1 ^ x[1] ^ k0;
            x[1] = lo1;
            x[2] = hi0 ^ x[3] ^ k1;
            x[3] = lo0;
            k0 += kWeyl0;
            k1 += kWeyl1;
        }
        out_ = x;
        ++counter_;
        idx_ = 0;
    }

    std::array<uint32_t, 2> key_;
    std::array<uint32_t, 4> base_;
    uint64_t counter_;
    std::array<uint32_t, 4> out_;
    int idx_;
};

}  // namespace ocorr

#endif
