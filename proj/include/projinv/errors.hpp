#pragma once

#include <stdexcept>
#include <string>

namespace projinv {

enum class ErrorKind {
    IndexOutOfRange,
    InvalidConfiguration,
    DenominatorNearZero,
    SingularMatrix,
    NonCanonicalMatrix,
    NotInGeneralPosition,
    FrameDenominatorNearZero,
    EvaluationFailure,
    SamplingExhausted,
    OutOfBounds,
    ZeroValue,
    IoFailure,
};

inline const char* error_kind_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorKind::InvalidConfiguration: return "InvalidConfiguration";
        case ErrorKind::DenominatorNearZero: return "DenominatorNearZero";
        case ErrorKind::SingularMatrix: return "SingularMatrix";
        case ErrorKind::NonCanonicalMatrix: return "NonCanonicalMatrix";
        case ErrorKind::NotInGeneralPosition: return "NotInGeneralPosition";
        case ErrorKind::FrameDenominatorNearZero: return "FrameDenominatorNearZero";
        case ErrorKind::EvaluationFailure: return "EvaluationFailure";
        case ErrorKind::SamplingExhausted: return "SamplingExhausted";
        case ErrorKind::OutOfBounds: return "OutOfBounds";
        case ErrorKind::ZeroValue: return "ZeroValue";
        case ErrorKind::IoFailure: return "IoFailure";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

struct IndexOutOfRange : Error {
    explicit IndexOutOfRange(const std::string& m) : Error(ErrorKind::IndexOutOfRange, m) {}
};
struct InvalidConfiguration : Error {
    explicit InvalidConfiguration(const std::string& m) : Error(ErrorKind::InvalidConfiguration, m) {}
};
struct DenominatorNearZero : Error {
    explicit DenominatorNearZero(const std::string& m) : Error(ErrorKind::DenominatorNearZero, m) {}
};
struct SingularMatrix : Error {
    explicit SingularMatrix(const std::string& m) : Error(ErrorKind::SingularMatrix, m) {}
};
struct NonCanonicalMatrix : Error {
    explicit NonCanonicalMatrix(const std::string& m) : Error(ErrorKind::NonCanonicalMatrix, m) {}
};
struct NotInGeneralPosition : Error {
    explicit NotInGeneralPosition(const std::string& m) : Error(ErrorKind::NotInGeneralPosition, m) {}
};
struct FrameDenominatorNearZero : Error {
    explicit FrameDenominatorNearZero(const std::string& m) : Error(ErrorKind::FrameDenominatorNearZero, m) {}
};
struct EvaluationFailure : Error {
    explicit EvaluationFailure(const std::string& m) : Error(ErrorKind::EvaluationFailure, m) {}
};
struct SamplingExhausted : Error {
    explicit SamplingExhausted(const std::string& m) : Error(ErrorKind::SamplingExhausted, m) {}
};
struct OutOfBounds : Error {
    explicit OutOfBounds(const std::string& m) : Error(ErrorKind::OutOfBounds, m) {}
};
struct ZeroValue : Error {
    explicit ZeroValue(const std::string& m) : Error(ErrorKind::ZeroValue, m) {}
};
struct IoFailure : Error {
    explicit IoFailure(const std::string& m) : Error(ErrorKind::IoFailure, m) {}
};

}  // namespace projinv
