#pragma once

#include <array>
#include <cstdint>
#include <cstring>
#include <span>
#include <string>
#include <vector>

namespace mp3 {

using Bytes = std::vector<uint8_t>;
using ByteView = std::span<const uint8_t>;

inline Bytes to_bytes(std::string_view s) {
    return Bytes(s.begin(), s.end());
}

std::string to_hex(ByteView data);
Bytes from_hex(std::string_view hex);

/// Append-only big-endian serializer.
class Writer {
public:
    void u8(uint8_t v) { buf_.push_back(v); }
    void u16(uint16_t v);
    void u32(uint32_t v);
    void u64(uint64_t v);
    void raw(ByteView data) { buf_.insert(buf_.end(), data.begin(), data.end()); }
    void raw(const uint8_t* data, size_t len) { buf_.insert(buf_.end(), data, data + len); }

    const Bytes& bytes() const { return buf_; }
    Bytes take() { return std::move(buf_); }
    size_t size() const { return buf_.size(); }

private:
    Bytes buf_;
};

/// Cursor over a byte view; throws Error(MalformedRecord) on underrun.
class Reader {
public:
    explicit Reader(ByteView data) : data_(data) {}

    uint8_t u8();
    uint16_t u16();
    uint32_t u32();
    uint64_t u64();
    ByteView raw(size_t len);
    template <size_t N>
    std::array<uint8_t, N> arr() {
        ByteView v = raw(N);
        std::array<uint8_t, N> out;
        std::memcpy(out.data(), v.data(), N);
        return out;
    }

    size_t remaining() const { return data_.size() - pos_; }
    bool done() const { return pos_ == data_.size(); }
    void expect_done() const;

private:
    ByteView data_;
    size_t pos_ = 0;
};

void put_u16be(uint8_t* p, uint16_t v);
void put_u32be(uint8_t* p, uint32_t v);
void put_u64be(uint8_t* p, uint64_t v);
uint16_t get_u16be(const uint8_t* p);
uint32_t get_u32be(const uint8_t* p);
uint64_t get_u64be(const uint8_t* p);

inline Bytes u64be_bytes(uint64_t v) {
    Bytes b(8);
    put_u64be(b.data(), v);
    return b;
}

}  // namespace mp3
