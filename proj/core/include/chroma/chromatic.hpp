#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "chroma/big_count.hpp"
#include "chroma/graph.hpp"

namespace chroma {

/// Thrown when a computation would exceed a configured size guard.
class GuardExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Largest 2-core component handled by deletion-contraction.
inline constexpr int kDefaultPolynomialGuard = 16;
/// Largest P_G(k) that may be enumerated coloring by coloring.
inline constexpr std::uint64_t kDefaultEnumerationGuard = 10'000'000;

/// Integer polynomial in x, coefficients stored lowest degree first.
class ChromaticPolynomial {
public:
    ChromaticPolynomial() : coeffs_{1} {}
    explicit ChromaticPolynomial(std::vector<BigInt> coeffs);

    static ChromaticPolynomial monomial(int degree);
    /// x (x-1) ... (x-k+1).
    static ChromaticPolynomial falling(int k);
    /// (x-1)^r.
    static ChromaticPolynomial x_minus_one_pow(int r);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<BigInt>& coefficients() const { return coeffs_; }
    BigInt evaluate(const BigInt& x) const;
    /// Value at a nonnegative integer; a coloring count, so never negative.
    BigCount count_at(std::uint64_t k) const;
    /// e.g. "x^3 - 3*x^2 + 2*x".
    std::string to_string() const;

    friend ChromaticPolynomial operator*(const ChromaticPolynomial& a, const ChromaticPolynomial& b);
    friend ChromaticPolynomial operator-(const ChromaticPolynomial& a, const ChromaticPolynomial& b);
    friend bool operator==(const ChromaticPolynomial&, const ChromaticPolynomial&) = default;

private:
    void trim();
    std::vector<BigInt> coeffs_;
};

/// Total assignment vertex -> color in 0..k-1.
struct Coloring {
    std::vector<int> colors;
    int k = 0;

    int operator[](VertexId v) const { return colors[static_cast<std::size_t>(v)]; }
    VertexMask color_class(int color) const;
};

bool is_proper(const Graph& g, const Coloring& c);

/// Deletion-contraction with memoisation. Components multiply, vertices outside
/// the 2-core contribute (x-1) each, and trees and cliques are closed-form base
/// cases. Throws GuardExceeded if a 2-core component has more than `guard` vertices.
ChromaticPolynomial chromatic_polynomial(const Graph& g, int guard = kDefaultPolynomialGuard);

/// P_G(k), exactly.
BigCount count_colorings(const Graph& g, int k, int guard = kDefaultPolynomialGuard);

bool is_colorable(const Graph& g, int k);
/// Colors used by first-fit greedy along the smallest-last order; an upper bound on chi.
int greedy_color_count(const Graph& g);
/// Least j with P_G(j) > 0 (0 for the empty graph).
int chromatic_number(const Graph& g);

/// Streams every proper k-coloring exactly once by backtracking along the
/// smallest-last (reverse degeneracy) order.
class ColoringStream {
public:
    /// Throws GuardExceeded if P_G(k) > guard.
    ColoringStream(const Graph& g, int k, std::uint64_t guard = kDefaultEnumerationGuard);

    /// Advances to the next coloring; false when exhausted.
    bool next();
    const Coloring& current() const { return current_; }
    /// P_G(k), computed up front for the guard.
    const BigCount& total() const { return total_; }

private:
    bool advance_from(int depth);

    Graph graph_;
    std::vector<VertexId> order_;
    Coloring current_;
    BigCount total_;
    bool started_ = false;
    bool done_ = false;
};

template <class Visitor>
void for_each_coloring(const Graph& g, int k, Visitor&& visit, std::uint64_t guard = kDefaultEnumerationGuard) {
    ColoringStream stream(g, k, guard);
    while (stream.next()) visit(stream.current());
}

std::vector<Coloring> all_colorings(const Graph& g, int k, std::uint64_t guard = kDefaultEnumerationGuard);

}  // namespace chroma
