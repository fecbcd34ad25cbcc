#pragma once

#include <stdexcept>
#include <string>

namespace pq5g {

// Root of everything the library throws. Protocol-level failures (MAC
// mismatch, stale SQN, bad RES*) are in-band results, not exceptions.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class LengthError : public Error { public: using Error::Error; };
class DomainError : public Error { public: using Error::Error; };
class ConfigError : public Error { public: using Error::Error; };
class FormatError : public Error { public: using Error::Error; };
class StateError : public Error { public: using Error::Error; };

// Identity concealment.
class SchemeNotFound : public Error { public: using Error::Error; };
class DecryptionError : public Error { public: using Error::Error; };

// Session protection.
class ChannelExpired : public Error { public: using Error::Error; };
class IntegrityError : public Error { public: using Error::Error; };
class ReplayError : public Error { public: using Error::Error; };

// An attack was asked to run without the intercepted material it needs.
class EvidenceError : public Error {
public:
    EvidenceError(std::string missing, const std::string& what)
        : Error(what), missing_(std::move(missing)) {}

    const std::string& missing() const noexcept { return missing_; }

private:
    std::string missing_;
};

} // namespace pq5g
