#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace chroma {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Exact nonnegative integer used for coloring counts and SIS weights.
class BigCount {
public:
    BigCount() = default;
    BigCount(std::uint64_t v) : value_(v) {}  // NOLINT: implicit by intent
    explicit BigCount(BigInt v);

    const BigInt& value() const { return value_; }
    bool is_zero() const { return value_.is_zero(); }

    std::string to_string() const { return value_.str(); }
    double to_double() const { return value_.convert_to<double>(); }
    /// Natural log; -infinity for zero.
    double log() const;

    BigCount& operator+=(const BigCount& o) { value_ += o.value_; return *this; }
    BigCount& operator*=(const BigCount& o) { value_ *= o.value_; return *this; }
    friend BigCount operator+(BigCount a, const BigCount& b) { return a += b; }
    friend BigCount operator*(BigCount a, const BigCount& b) { return a *= b; }

    friend bool operator==(const BigCount& a, const BigCount& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const BigCount& a, const BigCount& b) {
        if (a.value_ < b.value_) return std::strong_ordering::less;
        if (b.value_ < a.value_) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

private:
    BigInt value_{0};
};

/// Falling factorial (x)_k = x (x-1) ... (x-k+1); zero when k > x.
BigCount falling_factorial(std::uint64_t x, std::uint64_t k);

/// k! (k-1)^(n-k), the maximum coloring count for connected k-chromatic graphs.
BigCount tomescu_rhs(std::uint64_t n, std::uint64_t k);

/// (x)_k (x-1)^(n-k).
BigCount general_tomescu_rhs(std::uint64_t n, std::uint64_t k, std::uint64_t x);

double to_double(const Rational& r);

}  // namespace chroma
