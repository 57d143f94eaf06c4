#pragma once

#include <stdexcept>
#include <string>

namespace cdt {

enum class Errc {
    MalformedDocument = 1,
    EmptyDrawing,
    UnsupportedCommand,
    DegenerateInput,
    OutOfRange,
    AmbiguousHands,
    MissingHands,
    InvalidDefect,
    TransportFailure,
    AuthMissing,
    NoDrawingFound,
    RangeViolation,
    ConfigInvalid,
    EmptyResults,
    Io,
};

inline const char* errc_name(Errc c) {
    switch (c) {
    case Errc::MalformedDocument: return "MalformedDocument";
    case Errc::EmptyDrawing: return "EmptyDrawing";
    case Errc::UnsupportedCommand: return "UnsupportedCommand";
    case Errc::DegenerateInput: return "DegenerateInput";
    case Errc::OutOfRange: return "OutOfRange";
    case Errc::AmbiguousHands: return "AmbiguousHands";
    case Errc::MissingHands: return "MissingHands";
    case Errc::InvalidDefect: return "InvalidDefect";
    case Errc::TransportFailure: return "TransportFailure";
    case Errc::AuthMissing: return "AuthMissing";
    case Errc::NoDrawingFound: return "NoDrawingFound";
    case Errc::RangeViolation: return "RangeViolation";
    case Errc::ConfigInvalid: return "ConfigInvalid";
    case Errc::EmptyResults: return "EmptyResults";
    case Errc::Io: return "IoError";
    }
    return "UnknownError";
}

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& message)
        : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

    Errc code() const { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& message) {
    throw Error(code, message);
}

}  // namespace cdt
