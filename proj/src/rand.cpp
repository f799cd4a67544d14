#include "mp3/rand.hpp"

#include <openssl/evp.h>
#include <openssl/rand.h>
#include <openssl/sha.h>

#include <cstring>

#include "mp3/errors.hpp"

namespace mp3 {

uint64_t RandomSource::u64() {
    uint8_t b[8];
    fill(b, 8);
    uint64_t v = 0;
    for (int i = 0; i < 8; i++) v = v << 8 | b[i];
    return v;
}

uint64_t RandomSource::below(uint64_t bound) {
    // rejection sampling to stay unbiased
    uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    uint64_t v;
    do {
        v = u64();
    } while (v >= limit);
    return v % bound;
}

void SystemRandom::fill(uint8_t* out, size_t len) {
    if (RAND_bytes(out, static_cast<int>(len)) != 1)
        fail(ErrorCode::TransportError, "system RNG failure");
}

static std::array<uint8_t, 32> sha256_arr(ByteView data) {
    std::array<uint8_t, 32> out;
    unsigned int n = 32;
    EVP_Digest(data.data(), data.size(), out.data(), &n, EVP_sha256(), nullptr);
    return out;
}

DeterministicRandom::DeterministicRandom(uint64_t seed) {
    Bytes s(8);
    put_u64be(s.data(), seed);
    key_ = sha256_arr(s);
}

DeterministicRandom::DeterministicRandom(const std::array<uint8_t, 32>& seed) : key_(seed) {}

DeterministicRandom::~DeterministicRandom() = default;

void DeterministicRandom::refill() {
    // ChaCha20 keystream in 16 KiB blocks; the 8-byte big-endian block counter
    // is carried in the IV so the stream extends indefinitely.
    constexpr size_t kChunk = 16 * 1024;
    buf_.assign(kChunk, 0);
    uint8_t iv[16] = {0};
    put_u64be(iv + 8, counter_++);
    EVP_CIPHER_CTX* ctx = EVP_CIPHER_CTX_new();
    if (!ctx) fail(ErrorCode::TransportError, "cipher ctx alloc");
    int outl = 0;
    if (EVP_EncryptInit_ex(ctx, EVP_chacha20(), nullptr, key_.data(), iv) != 1 ||
        EVP_EncryptUpdate(ctx, buf_.data(), &outl, buf_.data(), static_cast<int>(kChunk)) != 1) {
        EVP_CIPHER_CTX_free(ctx);
        fail(ErrorCode::TransportError, "chacha20 keystream");
    }
    EVP_CIPHER_CTX_free(ctx);
    pos_ = 0;
}

void DeterministicRandom::fill(uint8_t* out, size_t len) {
    while (len > 0) {
        if (pos_ == buf_.size()) refill();
        size_t take = std::min(len, buf_.size() - pos_);
        std::memcpy(out, buf_.data() + pos_, take);
        pos_ += take;
        out += take;
        len -= take;
    }
}

std::unique_ptr<DeterministicRandom> DeterministicRandom::fork(std::string_view label) {
    Bytes material(key_.begin(), key_.end());
    material.insert(material.end(), label.begin(), label.end());
    return std::make_unique<DeterministicRandom>(sha256_arr(material));
}

}  // namespace mp3
