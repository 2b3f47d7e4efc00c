#ifndef BICLOSED_ERRORS_HPP
#define BICLOSED_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace biclosed {

// Precondition and input-format violations (bad rank, malformed table, ...).
class InvalidArgument : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A set was required to be biclosed but is not. The message names a
// closure-violating pair and the missing sum.
class NotBiclosed : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A table was required to be associative but is not. The message names the
// violating pair or triple found during preorder extraction.
class NotAssociative : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A table had an entry outside {row, column}.
class NotQuasitrivial : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Enumeration or verification requested beyond the supported rank.
class RankTooLarge : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Two enumeration methods that must agree did not.
class CrossCheckFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A meet or join was missing or non-unique. The containment poset on
// biclosed sets is a lattice, so this signals an implementation bug.
class LatticeViolation : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace biclosed

#endif
