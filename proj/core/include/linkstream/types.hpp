#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace linkstream {

using NodeId = std::uint32_t;
using GroupId = std::uint32_t;

/// Seconds. Absolute timestamps are seconds since the dataset epoch.
using Timestamp = std::int64_t;
using Duration = std::int64_t;

inline constexpr Duration kSlotSeconds = 30;

/// The three stream parameters every analysis is declined over.
enum class Param : int { pairs = 0, contacts = 1, length = 2 };
inline constexpr int kNumParams = 3;

inline const char* param_name(Param p) {
    switch (p) {
        case Param::pairs: return "pairs";
        case Param::contacts: return "contacts";
        case Param::length: return "length";
    }
    return "?";
}

enum class Role : std::uint8_t { patient = 0, staff = 1 };

inline const char* role_name(Role r) { return r == Role::patient ? "PA" : "ST"; }

/// Base class for all errors raised by the library. `kind` drives the
/// process exit code: input errors exit 1, internal violations exit 2.
class Error : public std::runtime_error {
public:
    enum class Kind { input, internal };

    Error(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    Kind kind() const { return kind_; }

    static Error input(const std::string& what) { return Error(Kind::input, what); }
    static Error internal(const std::string& what) { return Error(Kind::internal, what); }

private:
    Kind kind_;
};

}  // namespace linkstream
