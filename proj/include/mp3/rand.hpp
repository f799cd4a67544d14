#pragma once

#include <memory>

#include "mp3/bytes.hpp"

namespace mp3 {

/// Source of random bytes. Protocol code never touches the system RNG
/// directly so that simulations can be made fully deterministic.
class RandomSource {
public:
    virtual ~RandomSource() = default;
    virtual void fill(uint8_t* out, size_t len) = 0;

    Bytes bytes(size_t len) {
        Bytes b(len);
        fill(b.data(), len);
        return b;
    }
    template <size_t N>
    std::array<uint8_t, N> arr() {
        std::array<uint8_t, N> a;
        fill(a.data(), N);
        return a;
    }
    uint64_t u64();
    /// Uniform in [0, bound), bound > 0.
    uint64_t below(uint64_t bound);
};

/// OS-backed randomness.
class SystemRandom : public RandomSource {
public:
    void fill(uint8_t* out, size_t len) override;
};

/// Deterministic stream cipher based generator (ChaCha20 keystream).
/// Identical seeds yield identical byte streams on every platform.
class DeterministicRandom : public RandomSource {
public:
    explicit DeterministicRandom(uint64_t seed);
    explicit DeterministicRandom(const std::array<uint8_t, 32>& seed);
    ~DeterministicRandom() override;
    DeterministicRandom(const DeterministicRandom&) = delete;
    DeterministicRandom& operator=(const DeterministicRandom&) = delete;

    void fill(uint8_t* out, size_t len) override;

    /// Derives an independent child generator; label keeps lineages apart.
    std::unique_ptr<DeterministicRandom> fork(std::string_view label);

private:
    void refill();

    std::array<uint8_t, 32> key_;
    uint64_t counter_ = 0;
    Bytes buf_;
    size_t pos_ = 0;
};

}  // namespace mp3
