#include "chroma/chromatic.hpp"

#include <algorithm>
#include <unordered_map>

namespace chroma {

ChromaticPolynomial::ChromaticPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) coeffs_.push_back(0);
    trim();
}

void ChromaticPolynomial::trim() {
    while (coeffs_.size() > 1 && coeffs_.back().is_zero()) coeffs_.pop_back();
}

ChromaticPolynomial ChromaticPolynomial::monomial(int degree) {
    std::vector<BigInt> c(static_cast<std::size_t>(degree) + 1, 0);
    c.back() = 1;
    return ChromaticPolynomial(std::move(c));
}

ChromaticPolynomial ChromaticPolynomial::falling(int k) {
    ChromaticPolynomial p;
    for (int i = 0; i < k; ++i) p = p * ChromaticPolynomial({BigInt(-i), BigInt(1)});
    return p;
}

ChromaticPolynomial ChromaticPolynomial::x_minus_one_pow(int r) {
    // Binomial expansion keeps this linear in r.
    std::vector<BigInt> c(static_cast<std::size_t>(r) + 1);
    BigInt binom = 1;
    for (int i = 0; i <= r; ++i) {
        c[static_cast<std::size_t>(i)] = ((r - i) % 2 == 0) ? binom : BigInt(-binom);
        binom = binom * (r - i) / (i + 1);
    }
    return ChromaticPolynomial(std::move(c));
}

BigInt ChromaticPolynomial::evaluate(const BigInt& x) const {
    BigInt acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

BigCount ChromaticPolynomial::count_at(std::uint64_t k) const { return BigCount(evaluate(BigInt(k))); }

std::string ChromaticPolynomial::to_string() const {
    std::string out;
    for (int d = degree(); d >= 0; --d) {
        const BigInt& c = coeffs_[static_cast<std::size_t>(d)];
        if (c.is_zero()) continue;
        const bool neg = c < 0;
        const BigInt mag = neg ? BigInt(-c) : c;
        if (out.empty()) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        const bool unit = (mag == 1);
        if (!unit || d == 0) out += mag.str();
        if (d > 0) {
            if (!unit) out += "*";
            out += "x";
            if (d > 1) out += "^" + std::to_string(d);
        }
    }
    return out.empty() ? "0" : out;
}

ChromaticPolynomial operator*(const ChromaticPolynomial& a, const ChromaticPolynomial& b) {
    std::vector<BigInt> c(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return ChromaticPolynomial(std::move(c));
}

ChromaticPolynomial operator-(const ChromaticPolynomial& a, const ChromaticPolynomial& b) {
    std::vector<BigInt> c(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] -= b.coeffs_[i];
    return ChromaticPolynomial(std::move(c));
}

VertexMask Coloring::color_class(int color) const {
    VertexMask m = 0;
    for (std::size_t v = 0; v < colors.size(); ++v)
        if (colors[v] == color) m |= bit(static_cast<VertexId>(v));
    return m;
}

bool is_proper(const Graph& g, const Coloring& c) {
    if (static_cast<int>(c.colors.size()) != g.order()) return false;
    for (VertexId v = 0; v < g.order(); ++v)
        if (c[v] < 0 || c[v] >= c.k) return false;
    for (auto [u, v] : g.edges())
        if (c[u] == c[v]) return false;
    return true;
}

namespace {

class DeletionContraction {
public:
    explicit DeletionContraction(int guard) : guard_(guard) {}

    ChromaticPolynomial solve(const Graph& g) {
        const int n = g.order();
        if (n == 0) return {};
        if (g.size() == 0) return ChromaticPolynomial::monomial(n);

        const auto comps = components(g);
        if (comps.size() > 1) {
            ChromaticPolynomial p;
            for (VertexMask c : comps) p = p * solve(induced_subgraph(g, c));
            return p;
        }

        const TwoCore tc = two_core(g);
        if (tc.core.order() == 0)
            return ChromaticPolynomial::monomial(1) * ChromaticPolynomial::x_minus_one_pow(n - 1);
        if (!tc.removed.empty())
            return solve(tc.core) * ChromaticPolynomial::x_minus_one_pow(static_cast<int>(tc.removed.size()));
        if (is_clique(g)) return ChromaticPolynomial::falling(n);
        if (n > guard_)
            throw GuardExceeded("chromatic_polynomial: 2-core component with " + std::to_string(n) +
                                " vertices exceeds guard " + std::to_string(guard_));

        if (auto it = memo_.find(g); it != memo_.end()) return it->second;

        const auto [u, v] = pivot_edge(g);
        const Graph deleted = delete_edge(g, u, v);
        const Graph contracted = contract(deleted, u, v);
        ChromaticPolynomial p = solve(deleted) - solve(contracted);
        memo_.emplace(g, p);
        return p;
    }

private:
    // Edge whose endpoints share the most neighbours; contracting it collapses
    // the most edges and drives the recursion toward cliques.
    static Edge pivot_edge(const Graph& g) {
        Edge best{-1, -1};
        int best_common = -1;
        for (auto [u, v] : g.edges()) {
            const int common = popcount(g.neighbors(u) & g.neighbors(v));
            if (common > best_common) {
                best = {u, v};
                best_common = common;
            }
        }
        return best;
    }

    int guard_;
    std::unordered_map<Graph, ChromaticPolynomial, GraphHash> memo_;
};

// Smallest-last order: reverse of the degeneracy elimination order.
std::vector<VertexId> smallest_last(const Graph& g) {
    auto order = degeneracy_order(g);
    std::reverse(order.begin(), order.end());
    return order;
}

bool colorable_from(const Graph& g, const std::vector<VertexId>& order, std::vector<int>& colors,
                    std::size_t depth, int k, int used) {
    if (depth == order.size()) return true;
    const VertexId v = order[depth];
    std::uint64_t forbidden = 0;
    for (VertexMask r = g.neighbors(v); r; r &= r - 1) {
        const int c = colors[static_cast<std::size_t>(lowest(r))];
        if (c >= 0) forbidden |= std::uint64_t{1} << c;
    }
    // Colors above `used` are interchangeable; try only the first of them.
    const int limit = std::min(k, used + 1);
    for (int c = 0; c < limit; ++c) {
        if (forbidden & (std::uint64_t{1} << c)) continue;
        colors[static_cast<std::size_t>(v)] = c;
        if (colorable_from(g, order, colors, depth + 1, k, std::max(used, c + 1))) return true;
    }
    colors[static_cast<std::size_t>(v)] = -1;
    return false;
}

}  // namespace

ChromaticPolynomial chromatic_polynomial(const Graph& g, int guard) {
    DeletionContraction dc(guard);
    return dc.solve(g);
}

BigCount count_colorings(const Graph& g, int k, int guard) {
    if (k < 0) throw std::invalid_argument("count_colorings: negative k");
    return chromatic_polynomial(g, guard).count_at(static_cast<std::uint64_t>(k));
}

bool is_colorable(const Graph& g, int k) {
    if (g.order() == 0) return true;
    if (k <= 0) return false;
    if (k >= 64) return true;
    const auto order = smallest_last(g);
    std::vector<int> colors(static_cast<std::size_t>(g.order()), -1);
    return colorable_from(g, order, colors, 0, k, 0);
}

int greedy_color_count(const Graph& g) {
    std::vector<int> colors(static_cast<std::size_t>(g.order()), -1);
    int used = 0;
    for (VertexId v : smallest_last(g)) {
        std::uint64_t forbidden = 0;
        for (VertexMask r = g.neighbors(v); r; r &= r - 1) {
            const int c = colors[static_cast<std::size_t>(lowest(r))];
            if (c >= 0) forbidden |= std::uint64_t{1} << c;
        }
        const int c = std::countr_one(forbidden);
        colors[static_cast<std::size_t>(v)] = c;
        used = std::max(used, c + 1);
    }
    return used;
}

int chromatic_number(const Graph& g) {
    if (g.order() == 0) return 0;
    const int upper = greedy_color_count(g);
    for (int j = 1; j < upper; ++j)
        if (is_colorable(g, j)) return j;
    return upper;
}

ColoringStream::ColoringStream(const Graph& g, int k, std::uint64_t guard)
    : graph_(g), order_(smallest_last(g)), total_(count_colorings(g, k)) {
    if (k < 0) throw std::invalid_argument("ColoringStream: negative k");
    if (total_ > BigCount{guard})
        throw GuardExceeded("enumerate_colorings: P_G(" + std::to_string(k) + ") = " + total_.to_string() +
                            " exceeds guard " + std::to_string(guard) + "; sample instead");
    current_.k = k;
    current_.colors.assign(static_cast<std::size_t>(g.order()), -1);
}

bool ColoringStream::next() {
    if (done_) return false;
    const int n = graph_.order();
    if (!started_) {
        started_ = true;
        if (n == 0) return true;  // the single empty coloring
        if (!advance_from(0)) {
            done_ = true;
            return false;
        }
        return true;
    }
    if (n == 0 || !advance_from(n - 1)) {
        done_ = true;
        return false;
    }
    return true;
}

// Tries the next admissible color at `depth` (starting just above its current
// color), then fills deeper positions with their first admissible colors,
// backtracking as needed.
bool ColoringStream::advance_from(int depth) {
    const int n = graph_.order();
    const int k = current_.k;
    auto& colors = current_.colors;
    while (depth >= 0) {
        const VertexId v = order_[static_cast<std::size_t>(depth)];
        std::uint64_t forbidden = 0;
        for (VertexMask r = graph_.neighbors(v); r; r &= r - 1) {
            const int c = colors[static_cast<std::size_t>(lowest(r))];
            if (c >= 0) forbidden |= std::uint64_t{1} << c;
        }
        int c = colors[static_cast<std::size_t>(v)] + 1;
        while (c < k && (forbidden & (std::uint64_t{1} << c))) ++c;
        if (c < k) {
            colors[static_cast<std::size_t>(v)] = c;
            if (depth == n - 1) return true;
            ++depth;
        } else {
            colors[static_cast<std::size_t>(v)] = -1;
            --depth;
        }
    }
    return false;
}

std::vector<Coloring> all_colorings(const Graph& g, int k, std::uint64_t guard) {
    std::vector<Coloring> out;
    for_each_coloring(g, k, [&](const Coloring& c) { out.push_back(c); }, guard);
    return out;
}

}  // namespace chroma
