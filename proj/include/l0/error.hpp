#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace l0 {

enum class ErrorCode {
    InvalidInput,
    LoopWitness,
    UnknownVertex,
    PhiFails,
    CoverIncomplete,
    PieceNotTiny,
    NotHomomorphism,
    InvalidPrefix,
    NonOddPrefix,
    PrefixMismatch,
    NotLarge,
    NotMember,
    DuplicateHom,
    OutOfTruncation,
    InvalidIndex,
    LevelOutOfRange,
    InvalidVertex,
    GapInsufficient,
};

constexpr std::string_view to_string(ErrorCode code) noexcept
{
    switch (code) {
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::LoopWitness: return "LoopWitness";
    case ErrorCode::UnknownVertex: return "UnknownVertex";
    case ErrorCode::PhiFails: return "PhiFails";
    case ErrorCode::CoverIncomplete: return "CoverIncomplete";
    case ErrorCode::PieceNotTiny: return "PieceNotTiny";
    case ErrorCode::NotHomomorphism: return "NotHomomorphism";
    case ErrorCode::InvalidPrefix: return "InvalidPrefix";
    case ErrorCode::NonOddPrefix: return "NonOddPrefix";
    case ErrorCode::PrefixMismatch: return "PrefixMismatch";
    case ErrorCode::NotLarge: return "NotLarge";
    case ErrorCode::NotMember: return "NotMember";
    case ErrorCode::DuplicateHom: return "DuplicateHom";
    case ErrorCode::OutOfTruncation: return "OutOfTruncation";
    case ErrorCode::InvalidIndex: return "InvalidIndex";
    case ErrorCode::LevelOutOfRange: return "LevelOutOfRange";
    case ErrorCode::InvalidVertex: return "InvalidVertex";
    case ErrorCode::GapInsufficient: return "GapInsufficient";
    }
    return "Unknown";
}

/// Every failure raised by the library carries one of the codes above so that
/// callers (and tests) can match on the kind of failure rather than the text.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string & what) :
        std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code)
    {
    }

    [[nodiscard]] ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

} // namespace l0
