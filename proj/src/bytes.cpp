#include "mp3/bytes.hpp"

#include "mp3/errors.hpp"

namespace mp3 {

std::string to_hex(ByteView data) {
    static const char* digits = "0123456789abcdef";
    std::string out;
    out.reserve(data.size() * 2);
    for (uint8_t b : data) {
        out.push_back(digits[b >> 4]);
        out.push_back(digits[b & 0xf]);
    }
    return out;
}

static int hex_val(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
}

Bytes from_hex(std::string_view hex) {
    if (hex.size() % 2 != 0) fail(ErrorCode::DecodeError, "odd hex length");
    Bytes out(hex.size() / 2);
    for (size_t i = 0; i < out.size(); i++) {
        int hi = hex_val(hex[2 * i]);
        int lo = hex_val(hex[2 * i + 1]);
        if (hi < 0 || lo < 0) fail(ErrorCode::DecodeError, "bad hex digit");
        out[i] = static_cast<uint8_t>(hi << 4 | lo);
    }
    return out;
}

void put_u16be(uint8_t* p, uint16_t v) {
    p[0] = static_cast<uint8_t>(v >> 8);
    p[1] = static_cast<uint8_t>(v);
}

void put_u32be(uint8_t* p, uint32_t v) {
    for (int i = 0; i < 4; i++) p[i] = static_cast<uint8_t>(v >> (24 - 8 * i));
}

void put_u64be(uint8_t* p, uint64_t v) {
    for (int i = 0; i < 8; i++) p[i] = static_cast<uint8_t>(v >> (56 - 8 * i));
}

uint16_t get_u16be(const uint8_t* p) {
    return static_cast<uint16_t>(p[0] << 8 | p[1]);
}

uint32_t get_u32be(const uint8_t* p) {
    uint32_t v = 0;
    for (int i = 0; i < 4; i++) v = v << 8 | p[i];
    return v;
}

uint64_t get_u64be(const uint8_t* p) {
    uint64_t v = 0;
    for (int i = 0; i < 8; i++) v = v << 8 | p[i];
    return v;
}

void Writer::u16(uint16_t v) {
    uint8_t b[2];
    put_u16be(b, v);
    raw(b, 2);
}

void Writer::u32(uint32_t v) {
    uint8_t b[4];
    put_u32be(b, v);
    raw(b, 4);
}

void Writer::u64(uint64_t v) {
    uint8_t b[8];
    put_u64be(b, v);
    raw(b, 8);
}

ByteView Reader::raw(size_t len) {
    if (remaining() < len) fail(ErrorCode::MalformedRecord, "truncated input");
    ByteView v = data_.subspan(pos_, len);
    pos_ += len;
    return v;
}

uint8_t Reader::u8() {
    return raw(1)[0];
}
uint16_t Reader::u16() {
    return get_u16be(raw(2).data());
}
uint32_t Reader::u32() {
    return get_u32be(raw(4).data());
}
uint64_t Reader::u64() {
    return get_u64be(raw(8).data());
}

void Reader::expect_done() const {
    if (!done()) fail(ErrorCode::MalformedRecord, "trailing bytes");
}

const char* error_code_name(ErrorCode c) {
    switch (c) {
        case ErrorCode::DivisionByZero: return "DivisionByZero";
        case ErrorCode::AuthFailure: return "AuthFailure";
        case ErrorCode::SelfRevoked: return "SelfRevoked";
        case ErrorCode::BadSignature: return "BadSignature";
        case ErrorCode::MalformedRecord: return "MalformedRecord";
        case ErrorCode::WrongEpochWindow: return "WrongEpochWindow";
        case ErrorCode::DuplicateKey: return "DuplicateKey";
        case ErrorCode::BadPrivacyLevel: return "BadPrivacyLevel";
        case ErrorCode::BadQuery: return "BadQuery";
        case ErrorCode::NotEnoughServers: return "NotEnoughServers";
        case ErrorCode::UnknownEpoch: return "UnknownEpoch";
        case ErrorCode::MessageTooLong: return "MessageTooLong";
        case ErrorCode::BeforeGenesis: return "BeforeGenesis";
        case ErrorCode::FriendLimitReached: return "FriendLimitReached";
        case ErrorCode::NeedRekey: return "NeedRekey";
        case ErrorCode::MetaDisagreement: return "MetaDisagreement";
        case ErrorCode::InconsistentResponses: return "InconsistentResponses";
        case ErrorCode::DecodeError: return "DecodeError";
        case ErrorCode::ConfigError: return "ConfigError";
        case ErrorCode::TransportError: return "TransportError";
    }
    return "UnknownError";
}

}  // namespace mp3
