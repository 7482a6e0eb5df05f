#include "chroma/proof_bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "chroma/criticality.hpp"

namespace chroma {

LPInstance LPInstance::make(int x, int k, double S) {
    if (k < 4 || x < k) throw std::invalid_argument("LPInstance: need x >= k >= 4");
    if (!(S >= k - 1 && S <= 3 * k - 3))
        throw std::invalid_argument("LPInstance: S=" + std::to_string(S) + " outside [k-1, 3k-3]");
    return LPInstance{x, k, S};
}

double lp_closed_form(const LPInstance& inst) {
    const double km1 = inst.k - 1;
    if (inst.S < km1 || inst.S > 3 * km1) throw std::invalid_argument("lp_closed_form: S outside [k-1, 3k-3]");
    if (inst.S <= 2 * km1) return inst.x - (4 * km1 - inst.S) / 6.0;
    return inst.x - (6 * km1 - inst.S) / 12.0;
}

double lp_pair_value(const LPInstance& inst, int j0, int j1) {
    const double km1 = inst.k - 1;
    return inst.x - (km1 * (j0 + j1 + 1) - inst.S) / static_cast<double>((j0 + 1) * (j1 + 1));
}

LPSolution lp_brute_force(const LPInstance& inst, int jmax) {
    if (jmax < 3) throw std::invalid_argument("lp_brute_force: jmax must be at least 3");
    const double km1 = inst.k - 1;
    constexpr double kTieTol = 1e-12;

    LPSolution best;
    best.value = -std::numeric_limits<double>::infinity();
    std::vector<std::pair<std::pair<int, int>, double>> admissible;
    for (int j0 = 1; j0 <= jmax; ++j0) {
        for (int j1 = j0 + 1; j1 <= jmax; ++j1) {
            if (!(j0 * km1 <= inst.S && inst.S <= j1 * km1)) continue;
            const double a_j0 = (km1 * j1 - inst.S) / static_cast<double>(j0 * j1 - j0 * j0);
            const double a_j1 = (inst.S - km1 * j0) / static_cast<double>(j1 * j1 - j0 * j1);
            const double a0 = inst.x - a_j0 - a_j1;
            if (a0 < -kTieTol || a_j0 < -kTieTol || a_j1 < -kTieTol)
                throw std::logic_error("lp_brute_force: negative basic solution");
            const double value = lp_pair_value(inst, j0, j1);
            admissible.push_back({{j0, j1}, value});
            const bool better = value > best.value + kTieTol;
            const bool tie_preferred = std::abs(value - best.value) <= kTieTol &&
                                       (j1 < best.j1 || (j1 == best.j1 && j0 > best.j0));
            if (better || tie_preferred) {
                best.value = better ? value : std::max(best.value, value);
                best.j0 = j0;
                best.j1 = j1;
                best.a0 = a0;
                best.a_j0 = a_j0;
                best.a_j1 = a_j1;
            }
        }
    }
    if (admissible.empty()) throw std::logic_error("lp_brute_force: no admissible pair");
    for (const auto& [pair, value] : admissible)
        if (value >= best.value - kTieTol) best.argmax.push_back(pair);
    return best;
}

double radiant_T_bound(int k) {
    if (k < 1) throw std::invalid_argument("radiant_T_bound: k must be positive");
    return std::exp(std::lgamma(static_cast<double>(k) + 1.0) / k);
}

double s_for(int n, int k) {
    if (n <= k) throw std::invalid_argument("s_for: need n > k");
    return (k - 1) + static_cast<double>(n) * (k - 2) / (n - k);
}

double large_order_rhs(int n, int k) {
    if (n < 2 * k - 1) throw std::invalid_argument("large_order_rhs: need n >= 2k-1");
    const double tail = static_cast<double>(n) * (k - 2) / (n - k);
    if (n <= k * k - k) return (7.0 * k + 5.0) / 12.0 + tail / 12.0;
    return (k + 1.0) / 2.0 + tail / 6.0;
}

SweepReport sweep_large_order(int kmax, int kmin) {
    if (kmin < 4 || kmax < kmin) throw std::invalid_argument("sweep_large_order: need 4 <= kmin <= kmax");
    SweepReport r{"large_order", 0, {}};
    for (int k = kmin; k <= kmax; ++k) {
        const int nmax = std::max(k * k - k, 4 * k);
        for (int n = 2 * k - 1; n <= nmax; ++n) {
            ++r.checks;
            const double v = large_order_rhs(n, k);
            if (!(v < k - 1)) r.violations.push_back({k, n, v, static_cast<double>(k - 1)});
        }
        ++r.checks;
        const double limit = (k + 1.0) / 2.0 + (k - 2.0) / 6.0;
        if (!(limit < k - 1)) r.violations.push_back({k, -1, limit, static_cast<double>(k - 1)});
    }
    return r;
}

SweepReport sweep_edge_count(int kmax) {
    if (kmax < 4) throw std::invalid_argument("sweep_edge_count: need kmax >= 4");
    SweepReport r{"edge_count", 0, {}};
    for (long long k = 4; k <= kmax; ++k) {
        for (long long n = k + 1; n <= 2 * k - 2; ++n) {
            ++r.checks;
            const long long q = n * n + (1 - 3 * k) * n + (2 * k * k - k + 1);
            if (q > 0) r.violations.push_back({static_cast<int>(k), static_cast<int>(n), static_cast<double>(q), 0.0});
        }
    }
    return r;
}

K4Class k4_class_of(const ColorProfile& starred) {
    if (starred.counts.size() != 4 || starred.total() != 3)
        throw std::invalid_argument("k4_class_of: need 4 counts summing to 3");
    switch (starred.distinct()) {
        case 1: return K4Class::S1;
        case 2: return K4Class::S2;
        default: return K4Class::S3;
    }
}

double k4_tstar(K4Class cls) {
    switch (cls) {
        case K4Class::S1: return std::pow(4.0, 0.25) * std::pow(3.0, 0.75);
        case K4Class::S2: return std::pow(4.0, 0.25) * std::cbrt(3.0) * std::pow(2.0, 5.0 / 12.0);
        case K4Class::S3: return std::pow(24.0, 0.25);
    }
    throw std::invalid_argument("k4_tstar: unknown class");
}

ColorProfile k4_representative(K4Class cls) {
    switch (cls) {
        case K4Class::S1: return {{3, 0, 0, 0}};
        case K4Class::S2: return {{2, 1, 0, 0}};
        case K4Class::S3: return {{1, 1, 1, 0}};
    }
    throw std::invalid_argument("k4_representative: unknown class");
}

double k4_objective(const K4Split& s) {
    return s.s1 * std::log(k4_tstar(K4Class::S1)) + s.s2 * std::log(k4_tstar(K4Class::S2)) +
           s.s3 * std::log(k4_tstar(K4Class::S3));
}

K4Split k4_s_lp(int n, double pair_budget) {
    if (n < 4) throw std::invalid_argument("k4_s_lp: need n >= 4");
    const double m = n - 4;
    // Lines a*s1 + b*s2 = c bounding the polygon in the (s1, s2) plane.
    struct Line {
        double a, b, c;
    };
    const std::array<Line, 4> lines{{{1, 0, 0}, {0, 1, 0}, {1, 1, m}, {3, 1, pair_budget}}};
    constexpr double kTol = 1e-9;
    auto feasible = [&](double s1, double s2) {
        return s1 >= -kTol && s2 >= -kTol && s1 + s2 <= m + kTol && 3 * s1 + s2 <= pair_budget + kTol;
    };

    K4Split best{};
    double best_value = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < lines.size(); ++i) {
        for (std::size_t j = i + 1; j < lines.size(); ++j) {
            const double det = lines[i].a * lines[j].b - lines[j].a * lines[i].b;
            if (std::abs(det) < 1e-15) continue;
            const double s1 = (lines[i].c * lines[j].b - lines[j].c * lines[i].b) / det;
            const double s2 = (lines[i].a * lines[j].c - lines[j].a * lines[i].c) / det;
            if (!feasible(s1, s2)) continue;
            const K4Split cand{std::max(s1, 0.0), std::max(s2, 0.0), std::max(m - s1 - s2, 0.0)};
            const double value = k4_objective(cand);
            if (value > best_value + 1e-12) {
                best = cand;
                best_value = value;
            }
        }
    }
    if (!std::isfinite(best_value)) throw std::invalid_argument("k4_s_lp: infeasible constraints");
    return best;
}

double k4_final_log_bound(int n) {
    if (n < 6) throw std::invalid_argument("k4_final_bound: need n >= 6");
    return std::log(24.0) + (2.0 * n - 3.0) / 6.0 * std::log(3.0) + (11.0 * n - 54.0) / 12.0 * std::log(2.0);
}

double k4_final_bound(int n) { return std::exp(k4_final_log_bound(n)); }

bool k4_final_below_tomescu(int n) { return k4_final_log_bound(n) < std::log(24.0) + (n - 4) * std::log(3.0); }

SweepReport sweep_k4_final(int nmin, int nmax) {
    SweepReport r{"k4_final", 0, {}};
    for (int n = std::max(nmin, 6); n <= nmax; ++n) {
        ++r.checks;
        if (k4_final_below_tomescu(n) != (n >= 8))
            r.violations.push_back({4, n, k4_final_log_bound(n), std::log(24.0) + (n - 4) * std::log(3.0)});
    }
    return r;
}

SweepReport sweep_lp_equivalence(int kmin, int kmax, int points, int jmax, double tol) {
    if (points < 2) throw std::invalid_argument("sweep_lp_equivalence: need at least 2 points");
    SweepReport r{"lp_equivalence", 0, {}};
    for (int k = kmin; k <= kmax; ++k) {
        for (int x : {k, k + 3}) {
            for (int i = 0; i < points; ++i) {
                const double S = ((points - 1 - i) * (k - 1.0) + i * (3.0 * k - 3.0)) / (points - 1);
                const auto inst = LPInstance::make(x, k, S);
                const double closed = lp_closed_form(inst);
                const LPSolution brute = lp_brute_force(inst, jmax);
                ++r.checks;
                bool ok = std::abs(closed - brute.value) <= tol;
                const auto has = [&](int a, int b) {
                    return std::find(brute.argmax.begin(), brute.argmax.end(), std::pair{a, b}) != brute.argmax.end();
                };
                if (S <= 2 * (k - 1)) ok = ok && has(1, 2);
                if (S >= 2 * (k - 1)) ok = ok && has(2, 3);
                if (!ok) r.violations.push_back({k, x, brute.value, closed});
            }
        }
    }
    return r;
}

BoundChainReport bound_chain(const Graph& g, int k, const BoundChainOptions& options, std::string id) {
    const int n = g.order();
    if (chromatic_number(g) != k)
        throw std::invalid_argument("bound_chain: chromatic number differs from k=" + std::to_string(k));

    BoundChainReport rep;
    rep.id = std::move(id);
    rep.n = n;
    rep.k = k;
    rep.exact = count_colorings(g, k);
    rep.tomescu_rhs = tomescu_rhs(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(k));
    rep.equality_case = rep.exact == rep.tomescu_rhs;
    const TwoCore tc = two_core(g);
    rep.core_is_clique = tc.core.order() > 0 && is_clique(tc.core);
    const double log_k_factorial = std::lgamma(k + 1.0);
    rep.radiant_factor = std::exp(k * std::log(radiant_T_bound(k)));

    const std::vector<Coloring> colorings = all_colorings(g, k, options.guard);
    const double count = static_cast<double>(colorings.size());

    // (2) overprediction for sampled orderings.
    Rng rng(options.seed);
    for (int s = 0; s < options.pi_samples; ++s) {
        const Ordering pi = Ordering::random(n, rng);
        long double sum = 0.0L;
        for (const Coloring& c : colorings) sum += log_x_pi_product(g, k, pi, c);
        rep.stages.push_back({"overprediction[" + std::to_string(s) + "]",
                              std::exp(static_cast<double>(sum / count)), true});
        rep.sampled_orderings.push_back(pi.perm());
    }

    // (3) global T and (4) radiant split, sharing one pass over colorings.
    const bool has_star = g.min_degree() >= k - 1;
    std::optional<StarNeighborhoods> star;
    if (has_star) star = make_star(g, k, options.star_rule, options.seed);

    TLogCache tlog(k);
    long double global_sum = 0.0L;
    long double nonradiant_sum = 0.0L;
    StarStatistics stats;
    stats.a.assign(static_cast<std::size_t>(k), 0.0);
    long double pair_sum = 0.0L, w_sum = 0.0L;
    std::array<double, 3> k4_counts{0.0, 0.0, 0.0};
    std::uint64_t nonradiant_pairs = 0;

    for (const Coloring& c : colorings) {
        const auto radiant = find_radiant_vertices(g, k, c);
        if (!radiant) throw std::logic_error("bound_chain: coloring without a full radiant set");
        VertexMask radiant_mask = 0;
        for (VertexId v : *radiant) radiant_mask |= bit(v);

        for (VertexId v = 0; v < n; ++v) {
            const ColorProfile full = color_profile(g, c, v);
            global_sum += tlog(full);
            if (radiant_mask & bit(v)) continue;
            ++nonradiant_pairs;
            if (!has_star) {
                nonradiant_sum += tlog(full);
                continue;
            }
            const ColorProfile starred = profile_star(c, v, *star);
            nonradiant_sum += tlog(starred);
            for (int cnt : starred.counts) {
                stats.a[static_cast<std::size_t>(cnt)] += 1.0;
                pair_sum += cnt * (cnt - 1) / 2;
            }
            w_sum += to_double(w_of(starred, k));
            if (k == 4) k4_counts[static_cast<std::size_t>(k4_class_of(starred)) - 1] += 1.0;
        }
    }

    rep.stages.push_back({"global_T", std::exp(static_cast<double>(global_sum / count)), true});
    const double e_star_log = nonradiant_pairs ? static_cast<double>(nonradiant_sum / nonradiant_pairs) : 0.0;
    rep.stages.push_back({"radiant_split", std::exp(log_k_factorial + (n - k) * e_star_log), true});

    if (has_star && nonradiant_pairs > 0) {
        const double denom = static_cast<double>(nonradiant_pairs);
        for (std::size_t j = 0; j < stats.a.size(); ++j) {
            stats.a[j] /= denom;
            stats.S += static_cast<double>(j * j) * stats.a[j];
        }
        stats.pair_statistic = static_cast<double>(pair_sum / denom);
        stats.w_star_mean = static_cast<double>(w_sum / denom);
        if (k == 4)
            stats.k4_s = std::array<double, 3>{k4_counts[0] / count, k4_counts[1] / count, k4_counts[2] / count};
        rep.star = stats;
    }

    // (5) LP stage with the pair budget a minimal counterexample would satisfy.
    if (k >= 4 && n >= 2 * k - 1) {
        const double S = s_for(n, k);
        if (S <= 3.0 * k - 3.0) {
            const double per_vertex = lp_closed_form(LPInstance::make(k, k, S));
            rep.stages.push_back({"w_star_lp", std::exp(log_k_factorial + (n - k) * std::log(per_vertex)), false});
        }
    }
    // (6) exact k = 4 table with the extremal class split.
    if (k == 4 && n >= 6) rep.stages.push_back({"k4_table", k4_final_bound(n), false});
    return rep;
}

}  // namespace chroma
