#pragma once

#include <stdexcept>
#include <string>

namespace trs {

enum class Errc {
    NotPrime,
    NotIrreducible,
    DegreeMismatch,
    DivisionByZero,
    FieldMismatch,
    OutOfRange,
    DuplicatePoint,
    LengthMismatch,
    SingularLeftBlock,
    InfeasibleParameters,
    EmptyDifference,
    TooLarge,
    NotASubgroupOrder,
    EtaInGroup,
    NotAdditiveSubgroup,
    EtaInverseInGroup,
    NotMultiplicativeGroup,
    SingularMatrix,
    NoPivotOneRow,
    NoSolution,
    BudgetExceeded,
    NotASubfield,
    InvalidArgument,
};

const char* errc_name(Errc c);

// All spec-level failures are thrown as Error; decoding failure is a value, not an Error.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
    Errc code() const { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

inline void require(bool ok, Errc code, const std::string& what) {
    if (!ok) fail(code, what);
}

} // namespace trs
