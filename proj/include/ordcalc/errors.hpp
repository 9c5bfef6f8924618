#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace ordcalc {

/// Base class for every error thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Fixed-width natural arithmetic would wrap.
struct OverflowError : Error {
    using Error::Error;
};

/// A value failed its canonical-form invariants.
struct InvariantViolation : Error {
    using Error::Error;
};

/// Two input pairs share an exponent.
struct DuplicateExponentError : Error {
    using Error::Error;
};

/// degree(0) requested.
struct ZeroHasNoDegreeError : Error {
    using Error::Error;
};

/// An operation that requires a nonzero argument received 0.
struct ZeroArgumentError : Error {
    using Error::Error;
};

/// A term containing a reverse or bidirectional generator was evaluated
/// as a well-order.
struct NotWellOrderedError : Error {
    using Error::Error;
};

/// The term lies outside the fragment the condensation engine supports.
struct UnsupportedTermError : Error {
    using Error::Error;
};

/// A limit ordinal was required.
struct NotALimitError : Error {
    using Error::Error;
};

/// A documented precondition was violated.
struct PreconditionError : Error {
    using Error::Error;
};

/// Argument outside the {1, w} subsemigroup.
struct OutOfSubsetError : Error {
    using Error::Error;
};

/// Band constants mixed into ordinal arithmetic, or similar.
struct TypeError : Error {
    using Error::Error;
};

/// Wrong number of arguments to a builtin function.
struct ArityError : Error {
    using Error::Error;
};

/// Parse failure. Carries the 1-based column, the offending token text and
/// the set of token descriptions that would have been accepted.
struct SyntaxError : Error {
    std::size_t column;
    std::string token;
    std::vector<std::string> expected;

    SyntaxError(std::size_t col, std::string tok, std::vector<std::string> exp)
        : Error(format(col, tok, exp)),
          column(col),
          token(std::move(tok)),
          expected(std::move(exp)) {}

private:
    static std::string format(std::size_t col, const std::string& tok,
                              const std::vector<std::string>& exp) {
        std::string msg = "syntax error at column " + std::to_string(col) + ": unexpected " + tok;
        if (!exp.empty()) {
            msg += "; expected ";
            for (std::size_t i = 0; i < exp.size(); ++i) {
                if (i > 0) msg += (i + 1 == exp.size()) ? " or " : ", ";
                msg += exp[i];
            }
        }
        return msg;
    }
};

}  // namespace ordcalc
