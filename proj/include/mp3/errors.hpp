#pragma once

#include <stdexcept>
#include <string>

namespace mp3 {

enum class ErrorCode : uint8_t {
    DivisionByZero = 1,
    AuthFailure = 2,
    SelfRevoked = 3,
    BadSignature = 4,
    MalformedRecord = 5,
    WrongEpochWindow = 6,
    DuplicateKey = 7,
    BadPrivacyLevel = 8,
    BadQuery = 9,
    NotEnoughServers = 10,
    UnknownEpoch = 11,
    MessageTooLong = 12,
    BeforeGenesis = 13,
    FriendLimitReached = 14,
    NeedRekey = 15,
    MetaDisagreement = 16,
    InconsistentResponses = 17,
    DecodeError = 18,
    ConfigError = 19,
    TransportError = 20,
};

const char* error_code_name(ErrorCode c);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& msg)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + msg), code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& msg) {
    throw Error(code, msg);
}

}  // namespace mp3
