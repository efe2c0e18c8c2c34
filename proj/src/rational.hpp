#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>

namespace ferrers {

// Exact rational scalar. mpq_class keeps values canonical (lowest terms,
// positive denominator), which is exactly the invariant we need.
using Rat = mpq_class;
using Int = mpz_class;

// Thrown on violated call contracts (arity mismatch, unknown kind, bad flags).
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Thrown when an input is outside an operation's mathematical domain
// (non-unit series inversion, unsupported sqrt branch, failed root selection).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Thrown when a maintained invariant breaks; always indicates a bug.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// Renders as "p" for integers, "p/q" otherwise.
inline std::string rat_to_string(const Rat& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline Rat rat_from_string(const std::string& s) {
    Rat r;
    if (r.set_str(s, 10) != 0) throw UsageError("malformed rational: " + s);
    r.canonicalize();
    return r;
}

// Exact integer square root if n is a perfect square.
inline std::optional<Int> exact_sqrt(const Int& n) {
    if (n < 0) return std::nullopt;
    Int root, rem;
    mpz_sqrtrem(root.get_mpz_t(), rem.get_mpz_t(), n.get_mpz_t());
    if (rem != 0) return std::nullopt;
    return root;
}

inline std::optional<Rat> exact_sqrt(const Rat& r) {
    auto num = exact_sqrt(Int(r.get_num()));
    auto den = exact_sqrt(Int(r.get_den()));
    if (!num || !den) return std::nullopt;
    return Rat(*num, *den);
}

}  // namespace ferrers
