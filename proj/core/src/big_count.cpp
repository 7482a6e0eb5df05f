#include "chroma/big_count.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace chroma {

BigCount::BigCount(BigInt v) : value_(std::move(v)) {
    if (value_ < 0) throw std::invalid_argument("BigCount: negative value " + value_.str());
}

double BigCount::log() const {
    if (value_.is_zero()) return -std::numeric_limits<double>::infinity();
    // Shift large values down so the conversion to double keeps full precision.
    const auto bits = boost::multiprecision::msb(value_);
    if (bits < 1000) return std::log(value_.convert_to<double>());
    const unsigned shift = static_cast<unsigned>(bits) - 64;
    const BigInt top = value_ >> shift;
    return std::log(top.convert_to<double>()) + shift * std::log(2.0);
}

BigCount falling_factorial(std::uint64_t x, std::uint64_t k) {
    if (k > x) return BigCount{0};
    BigInt r = 1;
    for (std::uint64_t i = 0; i < k; ++i) r *= (x - i);
    return BigCount{std::move(r)};
}

BigCount tomescu_rhs(std::uint64_t n, std::uint64_t k) {
    return general_tomescu_rhs(n, k, k);
}

BigCount general_tomescu_rhs(std::uint64_t n, std::uint64_t k, std::uint64_t x) {
    if (n < k) throw std::invalid_argument("tomescu_rhs: n < k");
    BigInt r = falling_factorial(x, k).value();
    if (x == 0) return BigCount{n == k ? r : BigInt{0}};
    r *= boost::multiprecision::pow(BigInt(x - 1), static_cast<unsigned>(n - k));
    return BigCount{std::move(r)};
}

double to_double(const Rational& r) {
    return boost::multiprecision::numerator(r).convert_to<double>() /
           boost::multiprecision::denominator(r).convert_to<double>();
}

}  // namespace chroma
