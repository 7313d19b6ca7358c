#ifndef HOMLEF_COMMON_HPP
#define HOMLEF_COMMON_HPP

#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace homlef {

// All core arithmetic is exact: arbitrary-precision integers and rationals.
// Nothing in the library ever rounds.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Violated precondition or invalid domain input (CLI exit code 1).
struct domain_error : std::runtime_error {
    explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed model file or unusable input document (CLI exit code 2).
struct parse_error : std::runtime_error {
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

inline int sign_of(const Int& v) { return v == 0 ? 0 : (v > 0 ? 1 : -1); }
inline int sign_of(const Rat& v) { return v == 0 ? 0 : (v > 0 ? 1 : -1); }

/// C(n, k) computed exactly; 0 outside the Pascal triangle.
inline Int binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Int result = 1;
    for (long i = 1; i <= k; ++i) {
        result *= (n - k + i);
        result /= i;  // exact at every step
    }
    return result;
}

}  // namespace homlef

#endif  // HOMLEF_COMMON_HPP
