#include "chroma/overprediction.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace chroma {

namespace {

constexpr std::uint64_t kSisBlock = 4096;

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Bit set of the colors present on `m`, ignoring uncolored vertices.
std::uint64_t color_set(std::span<const int> colors, VertexMask m) {
    std::uint64_t seen = 0;
    for (; m; m &= m - 1) {
        const int c = colors[static_cast<std::size_t>(lowest(m))];
        if (c >= 0) seen |= std::uint64_t{1} << c;
    }
    return seen;
}

void check_k(int k) {
    if (k < 0 || k > 63) throw std::invalid_argument("k must lie in [0, 63]");
}

const std::array<std::array<std::uint64_t, 64>, 64>& binomials() {
    static const auto table = [] {
        std::array<std::array<std::uint64_t, 64>, 64> b{};
        for (int n = 0; n < 64; ++n) {
            b[n][0] = 1;
            for (int r = 1; r <= n; ++r) b[n][r] = b[n - 1][r - 1] + (r < n ? b[n - 1][r] : 0);
        }
        return b;
    }();
    return table;
}

}  // namespace

Ordering::Ordering(std::vector<VertexId> perm) : perm_(std::move(perm)) {
    const int n = static_cast<int>(perm_.size());
    if (n > Graph::kMaxVertices) throw std::invalid_argument("Ordering: more than 64 vertices");
    pos_.assign(static_cast<std::size_t>(n), -1);
    before_.assign(static_cast<std::size_t>(n), 0);
    VertexMask prefix = 0;
    for (int i = 0; i < n; ++i) {
        const VertexId v = perm_[static_cast<std::size_t>(i)];
        if (v < 0 || v >= n || pos_[static_cast<std::size_t>(v)] != -1)
            throw std::invalid_argument("Ordering: not a permutation of 0..n-1");
        pos_[static_cast<std::size_t>(v)] = i;
        before_[static_cast<std::size_t>(v)] = prefix;
        prefix |= bit(v);
    }
}

Ordering Ordering::identity(int n) {
    std::vector<VertexId> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    return Ordering(std::move(p));
}

Ordering Ordering::random(int n, Rng& rng) {
    std::vector<VertexId> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    return Ordering(std::move(p));
}

int x_pi(const Graph& g, int k, const Ordering& pi, std::span<const int> colors, VertexId v) {
    return k - std::popcount(color_set(colors, pi.back_neighbors(g, v)));
}

BigCount x_pi_product(const Graph& g, int k, const Ordering& pi, const Coloring& c) {
    BigInt prod = 1;
    for (VertexId v = 0; v < g.order(); ++v) prod *= x_pi(g, k, pi, c, v);
    return BigCount(std::move(prod));
}

double log_x_pi_product(const Graph& g, int k, const Ordering& pi, const Coloring& c) {
    double acc = 0.0;
    for (VertexId v = 0; v < g.order(); ++v) acc += std::log(static_cast<double>(x_pi(g, k, pi, c, v)));
    return acc;
}

double overprediction_log_bound_exact(const Graph& g, int k, const Ordering& pi, std::uint64_t guard) {
    check_k(k);
    if (pi.size() != g.order()) throw std::invalid_argument("overprediction: ordering size mismatch");
    std::vector<VertexMask> back(static_cast<std::size_t>(g.order()));
    for (VertexId v = 0; v < g.order(); ++v) back[static_cast<std::size_t>(v)] = pi.back_neighbors(g, v);

    // log X_pi(c) only takes values log of integer products; sum per-vertex
    // logs from a small table.
    std::vector<double> log_table(static_cast<std::size_t>(k) + 1);
    for (int i = 1; i <= k; ++i) log_table[static_cast<std::size_t>(i)] = std::log(static_cast<double>(i));

    long double sum = 0.0L;
    std::uint64_t count = 0;
    for_each_coloring(
        g, k,
        [&](const Coloring& c) {
            double acc = 0.0;
            for (VertexId v = 0; v < g.order(); ++v) {
                const int x = k - std::popcount(color_set(c.colors, back[static_cast<std::size_t>(v)]));
                acc += log_table[static_cast<std::size_t>(x)];
            }
            sum += acc;
            ++count;
        },
        guard);
    if (count == 0) throw std::domain_error("overprediction: graph has no " + std::to_string(k) + "-coloring");
    return static_cast<double>(sum / static_cast<long double>(count));
}

double overprediction_bound_exact(const Graph& g, int k, const Ordering& pi, std::uint64_t guard) {
    return std::exp(overprediction_log_bound_exact(g, k, pi, guard));
}

GreedySample greedy_precoloring_sample(const Graph& g, int k, const Ordering& pi, Rng& rng) {
    check_k(k);
    if (pi.size() != g.order()) throw std::invalid_argument("greedy sample: ordering size mismatch");
    GreedySample out{PartialColoring{pi, 0, std::vector<int>(static_cast<std::size_t>(g.order()), -1)}, BigCount{1},
                     false};
    auto& colors = out.coloring.colors;
    BigInt weight = 1;
    for (int i = 0; i < g.order(); ++i) {
        const VertexId v = pi.at(i);
        const std::uint64_t used = color_set(colors, pi.back_neighbors(g, v));
        const int available = k - std::popcount(used);
        if (available == 0) {
            out.weight = BigCount(std::move(weight));
            return out;
        }
        std::uniform_int_distribution<int> pick(0, available - 1);
        int skip = pick(rng);
        int c = 0;
        for (;; ++c) {
            if (used & (std::uint64_t{1} << c)) continue;
            if (skip-- == 0) break;
        }
        colors[static_cast<std::size_t>(v)] = c;
        weight *= available;
        ++out.coloring.assigned;
    }
    out.weight = BigCount(std::move(weight));
    out.complete = true;
    return out;
}

SisEstimate sis_estimate(const Graph& g, int k, const SisOptions& options) {
    check_k(k);
    if (options.samples == 0) throw std::invalid_argument("sis_estimate: samples must be positive");
    const Ordering fixed = options.ordering.value_or(Ordering::identity(g.order()));
    if (fixed.size() != g.order()) throw std::invalid_argument("sis_estimate: ordering size mismatch");

    const std::uint64_t blocks = (options.samples + kSisBlock - 1) / kSisBlock;
    struct Partial {
        BigInt sum = 0;
        BigInt square_sum = 0;
        std::uint64_t completed = 0;
    };
    std::vector<Partial> partials(blocks);

    auto run_block = [&](std::uint64_t b) {
        Rng rng(splitmix64(options.seed ^ splitmix64(b + 1)));
        const std::uint64_t begin = b * kSisBlock;
        const std::uint64_t end = std::min(options.samples, begin + kSisBlock);
        Partial& p = partials[b];
        for (std::uint64_t s = begin; s < end; ++s) {
            const Ordering pi = options.mode == OrderingMode::Fixed ? fixed : Ordering::random(g.order(), rng);
            const GreedySample sample = greedy_precoloring_sample(g, k, pi, rng);
            if (!sample.complete) continue;
            p.sum += sample.weight.value();
            p.square_sum += sample.weight.value() * sample.weight.value();
            ++p.completed;
        }
    };

    const int jobs = std::max(1, std::min<int>(options.jobs, static_cast<int>(blocks)));
    if (jobs == 1) {
        for (std::uint64_t b = 0; b < blocks; ++b) run_block(b);
    } else {
        std::vector<std::thread> workers;
        for (int w = 0; w < jobs; ++w)
            workers.emplace_back([&, w] {
                for (std::uint64_t b = static_cast<std::uint64_t>(w); b < blocks; b += static_cast<std::uint64_t>(jobs))
                    run_block(b);
            });
        for (auto& t : workers) t.join();
    }

    SisEstimate est;
    est.samples = options.samples;
    for (const Partial& p : partials) {
        est.weight_sum += p.sum;
        est.weight_square_sum += p.square_sum;
        est.completed += p.completed;
    }
    const BigInt n = options.samples;
    est.mean = Rational(est.weight_sum, n).convert_to<double>();
    if (options.samples > 1) {
        const Rational variance(n * est.weight_square_sum - est.weight_sum * est.weight_sum, n * (n - 1));
        est.stderr_ = std::sqrt(variance.convert_to<double>() / static_cast<double>(options.samples));
    }
    return est;
}

int ColorProfile::total() const { return std::accumulate(counts.begin(), counts.end(), 0); }

int ColorProfile::distinct() const {
    return static_cast<int>(std::count_if(counts.begin(), counts.end(), [](int c) { return c > 0; }));
}

ColorProfile color_profile(const Coloring& c, VertexMask neighbourhood) {
    ColorProfile p{std::vector<int>(static_cast<std::size_t>(c.k), 0)};
    for (VertexMask m = neighbourhood; m; m &= m - 1) ++p.counts[static_cast<std::size_t>(c[lowest(m)])];
    return p;
}

ColorProfile color_profile(const Graph& g, const Coloring& c, VertexId v) { return color_profile(c, g.neighbors(v)); }

double DistinctColorDistribution::probability(int s) const {
    if (s < 0 || s >= static_cast<int>(ways.size())) return 0.0;
    return static_cast<double>(ways[static_cast<std::size_t>(s)]) / static_cast<double>(total);
}

std::vector<double> DistinctColorDistribution::probabilities() const {
    std::vector<double> p(ways.size());
    for (std::size_t s = 0; s < ways.size(); ++s) p[s] = probability(static_cast<int>(s));
    return p;
}

DistinctColorDistribution distinct_color_distribution(const ColorProfile& profile, int t) {
    const int d = profile.total();
    for (int c : profile.counts)
        if (c < 0) throw std::invalid_argument("distinct_color_distribution: negative count");
    if (d > 63) throw std::invalid_argument("distinct_color_distribution: profile total above 63");
    if (t < 0 || t > d)
        throw std::invalid_argument("distinct_color_distribution: t=" + std::to_string(t) + " outside [0, " +
                                    std::to_string(d) + "]");
    const auto& binom = binomials();
    const int classes = profile.distinct();

    // dp[j][s]: ways to pick j elements from the classes seen so far, hitting s of them.
    std::vector<std::vector<std::uint64_t>> dp(static_cast<std::size_t>(t) + 1,
                                               std::vector<std::uint64_t>(static_cast<std::size_t>(classes) + 1, 0));
    dp[0][0] = 1;
    for (int size : profile.counts) {
        if (size == 0) continue;
        auto next = dp;
        for (auto& row : next) std::fill(row.begin(), row.end(), 0);
        for (int j = 0; j <= t; ++j)
            for (int s = 0; s <= classes; ++s) {
                const std::uint64_t w = dp[static_cast<std::size_t>(j)][static_cast<std::size_t>(s)];
                if (w == 0) continue;
                next[static_cast<std::size_t>(j)][static_cast<std::size_t>(s)] += w;
                for (int take = 1; take <= size && j + take <= t; ++take)
                    next[static_cast<std::size_t>(j + take)][static_cast<std::size_t>(s + 1)] +=
                        w * binom[static_cast<std::size_t>(size)][static_cast<std::size_t>(take)];
            }
        dp = std::move(next);
    }
    return {dp[static_cast<std::size_t>(t)], binom[static_cast<std::size_t>(d)][static_cast<std::size_t>(t)]};
}

double t_exact_log(const ColorProfile& profile, int k) {
    check_k(k);
    if (static_cast<int>(profile.counts.size()) != k)
        throw std::invalid_argument("t_exact: profile length must equal k");
    const int d = profile.total();
    long double acc = 0.0L;
    for (int t = 0; t <= d; ++t) {
        const auto dist = distinct_color_distribution(profile, t);
        for (std::size_t s = 0; s < dist.ways.size(); ++s) {
            if (dist.ways[s] == 0) continue;
            const int x = k - static_cast<int>(s);
            if (x <= 0) return -std::numeric_limits<double>::infinity();
            acc += static_cast<long double>(dist.probability(static_cast<int>(s))) * std::log(static_cast<long double>(x));
        }
    }
    return static_cast<double>(acc / static_cast<long double>(d + 1));
}

double t_exact(const ColorProfile& profile, int k) { return std::exp(t_exact_log(profile, k)); }

Rational w_of(const ColorProfile& profile, int k) {
    if (static_cast<int>(profile.counts.size()) != k) throw std::invalid_argument("w_of: profile length must equal k");
    Rational w = 0;
    for (int c : profile.counts) {
        if (c < 0) throw std::invalid_argument("w_of: negative count");
        w += Rational(1, c + 1);
    }
    return w;
}

StarNeighborhoods make_star(const Graph& g, int k, StarRule rule, std::uint64_t seed) {
    if (k < 1) throw std::invalid_argument("make_star: k must be positive");
    StarNeighborhoods star{k, std::vector<VertexMask>(static_cast<std::size_t>(g.order()), 0)};
    Rng rng(seed);
    for (VertexId v = 0; v < g.order(); ++v) {
        const VertexMask nb = g.neighbors(v);
        if (popcount(nb) < k - 1)
            throw GraphError("make_star: vertex " + std::to_string(v) + " has degree " + std::to_string(popcount(nb)) +
                             " < k-1 = " + std::to_string(k - 1));
        std::vector<VertexId> list;
        for (VertexMask m = nb; m; m &= m - 1) list.push_back(lowest(m));
        if (rule == StarRule::HighestIndex) std::reverse(list.begin(), list.end());
        if (rule == StarRule::Random) std::shuffle(list.begin(), list.end(), rng);
        VertexMask chosen = 0;
        for (int i = 0; i < k - 1; ++i) chosen |= bit(list[static_cast<std::size_t>(i)]);
        star.sets[static_cast<std::size_t>(v)] = chosen;
    }
    return star;
}

ColorProfile profile_star(const Coloring& c, VertexId v, const StarNeighborhoods& star) {
    return color_profile(c, star.of(v));
}

double TLogCache::operator()(const ColorProfile& profile) {
    std::vector<int> key = profile.counts;
    std::sort(key.begin(), key.end());
    if (auto it = entries_.find(key); it != entries_.end()) return it->second;
    const double value = t_exact_log(profile, k_);
    entries_.emplace(std::move(key), value);
    return value;
}

double global_T_log_bound(const Graph& g, int k, std::uint64_t guard) {
    check_k(k);
    TLogCache cache(k);
    long double sum = 0.0L;
    std::uint64_t count = 0;
    for_each_coloring(
        g, k,
        [&](const Coloring& c) {
            for (VertexId v = 0; v < g.order(); ++v) sum += cache(color_profile(g, c, v));
            ++count;
        },
        guard);
    if (count == 0) throw std::domain_error("global_T_bound: graph has no " + std::to_string(k) + "-coloring");
    return static_cast<double>(sum / static_cast<long double>(count));
}

double global_T_bound(const Graph& g, int k, std::uint64_t guard) { return std::exp(global_T_log_bound(g, k, guard)); }

}  // namespace chroma
