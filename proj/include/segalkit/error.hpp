#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace segalkit {

enum class ErrorCode {
    InvalidInput,
    DomainMismatch,
    IndexOutOfRange,
    TruncationMismatch,
    BudgetExceeded,
    NonTerminating,
    IllFormedQuotient,
    NotSegal,
    IllDefinedComposition,
    OracleUnavailable,
};

const char* to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& message);

inline constexpr std::uint64_t kDefaultEnumerationBudget = 1'000'000;
inline constexpr std::uint64_t kDefaultPushoutBudget = 10'000;

// Step counter shared by the exhaustive searches. Throws BudgetExceeded once
// more than `limit` steps have been spent.
class Budget {
public:
    explicit Budget(std::uint64_t limit = kDefaultEnumerationBudget,
                    ErrorCode on_exhaust = ErrorCode::BudgetExceeded)
        : limit_(limit), on_exhaust_(on_exhaust) {}

    void spend(std::uint64_t steps = 1) {
        used_ += steps;
        if (used_ > limit_)
            fail(on_exhaust_, "step budget of " + std::to_string(limit_) + " exceeded");
    }

    std::uint64_t used() const noexcept { return used_; }
    std::uint64_t limit() const noexcept { return limit_; }

private:
    std::uint64_t limit_;
    std::uint64_t used_ = 0;
    ErrorCode on_exhaust_;
};

}  // namespace segalkit
