#include "chroma/harness.hpp"

#include <cmath>
#include <istream>
#include <ostream>
#include <thread>

#include <json.hpp>

#include "chroma/chromatic.hpp"

namespace chroma {

using Json = nlohmann::ordered_json;

namespace {

constexpr std::size_t kLinesPerWorker = 4;

Json number_or_null(double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); }

}  // namespace

bool VerificationRecord::consistent() const {
    if (!asserted) return true;
    if (!satisfied || equality != core_is_clique) return false;
    for (const auto& gx : general_x)
        if (!gx.satisfied || gx.equality != core_is_clique) return false;
    return true;
}

VerificationRecord verify_tomescu(const Graph& g, std::string id, std::optional<std::pair<int, int>> x_range) {
    VerificationRecord r;
    r.id = std::move(id);
    r.n = g.order();
    r.chi = chromatic_number(g);
    const auto poly = chromatic_polynomial(g);
    const auto n = static_cast<std::uint64_t>(r.n);
    const auto k = static_cast<std::uint64_t>(r.chi);
    r.exact = poly.count_at(k);
    r.tomescu_rhs = tomescu_rhs(n, k);
    r.satisfied = r.exact <= r.tomescu_rhs;
    r.equality = r.exact == r.tomescu_rhs;
    const TwoCore tc = two_core(g);
    r.core_is_clique = tc.core.order() == r.chi && is_clique(tc.core);
    r.asserted = r.chi >= 4;
    if (x_range) {
        for (int x = std::max(x_range->first, r.chi); x <= x_range->second; ++x) {
            GeneralXCheck gx;
            gx.x = x;
            gx.count = poly.count_at(static_cast<std::uint64_t>(x));
            gx.rhs = general_tomescu_rhs(n, k, static_cast<std::uint64_t>(x));
            gx.satisfied = gx.count <= gx.rhs;
            gx.equality = gx.count == gx.rhs;
            r.general_x.push_back(std::move(gx));
        }
    }
    return r;
}

std::string to_json(const VerificationRecord& r) {
    Json j;
    j["id"] = r.id;
    j["n"] = r.n;
    j["chi"] = r.chi;
    j["exact"] = r.exact.to_string();
    j["tomescu_rhs"] = r.tomescu_rhs.to_string();
    j["satisfied"] = r.satisfied;
    j["equality"] = r.equality;
    j["core_is_clique"] = r.core_is_clique;
    j["asserted"] = r.asserted;
    if (!r.general_x.empty()) {
        Json list = Json::array();
        for (const auto& gx : r.general_x)
            list.push_back({{"x", gx.x},
                            {"count", gx.count.to_string()},
                            {"rhs", gx.rhs.to_string()},
                            {"satisfied", gx.satisfied},
                            {"equality", gx.equality}});
        j["general_x"] = std::move(list);
    }
    return j.dump();
}

std::string to_json(const BoundChainReport& r) {
    Json j;
    j["id"] = r.id;
    j["n"] = r.n;
    j["k"] = r.k;
    j["exact"] = r.exact.to_string();
    Json stages = Json::array();
    for (const auto& s : r.stages)
        stages.push_back({{"name", s.name}, {"value", number_or_null(s.value)}, {"certified", s.certified}});
    j["stages"] = std::move(stages);
    j["tomescu_rhs"] = r.tomescu_rhs.to_string();
    j["equality_case"] = r.equality_case;
    j["core_is_clique"] = r.core_is_clique;
    j["radiant_factor"] = number_or_null(r.radiant_factor);
    if (r.star) {
        Json s;
        s["a"] = r.star->a;
        s["S"] = r.star->S;
        s["pair_statistic"] = r.star->pair_statistic;
        s["w_star_mean"] = r.star->w_star_mean;
        if (r.star->k4_s) s["k4_s"] = *r.star->k4_s;
        j["star"] = std::move(s);
    }
    j["orderings"] = r.sampled_orderings;
    return j.dump();
}

std::string to_json(const CriticalityReport& r) {
    Json j;
    j["k"] = r.k;
    j["chi"] = r.chi;
    j["is_critical"] = r.is_critical;
    if (r.witness_edge) j["witness"] = {{"edge", {r.witness_edge->first, r.witness_edge->second}}};
    else if (r.witness_vertex) j["witness"] = {{"vertex", *r.witness_vertex}};
    else j["witness"] = nullptr;
    j["min_degree"] = r.min_degree;
    if (r.gallai_ok) j["gallai_ok"] = *r.gallai_ok;
    return j.dump();
}

std::string to_json(const SweepReport& r) {
    Json j;
    j["sweep"] = r.name;
    j["checks"] = r.checks;
    j["passed"] = r.passed();
    Json v = Json::array();
    for (const auto& x : r.violations)
        v.push_back({{"k", x.k}, {"n", x.n}, {"value", number_or_null(x.value)}, {"limit", number_or_null(x.limit)}});
    j["violations"] = std::move(v);
    return j.dump();
}

ExitCode worse(ExitCode a, ExitCode b) {
    if (a == ExitCode::AssertionFailed || b == ExitCode::AssertionFailed) return ExitCode::AssertionFailed;
    if (a == ExitCode::InputError || b == ExitCode::InputError) return ExitCode::InputError;
    return ExitCode::Ok;
}

ExitCode run_corpus(std::istream& in, int jobs, const std::function<LineResult(const CorpusLine&)>& work,
                    std::ostream& out, std::ostream& err) {
    jobs = std::max(1, jobs);
    const std::size_t batch_size = kLinesPerWorker * static_cast<std::size_t>(jobs);
    ExitCode status = ExitCode::Ok;
    std::size_t line_no = 0;
    std::string text;
    bool eof = false;

    while (!eof) {
        std::vector<CorpusLine> batch;
        while (batch.size() < batch_size) {
            if (!std::getline(in, text)) {
                eof = true;
                break;
            }
            ++line_no;
            while (!text.empty() && (text.back() == '\r' || text.back() == ' ' || text.back() == '\t')) text.pop_back();
            if (text.empty()) continue;
            batch.push_back({line_no, text});
        }
        std::vector<LineResult> results(batch.size());
        auto process = [&](std::size_t i) {
            try {
                results[i] = work(batch[i]);
            } catch (const std::exception& e) {
                results[i] = {"", "line " + std::to_string(batch[i].number) + ": " + e.what(), ExitCode::InputError};
            }
        };
        if (jobs == 1 || batch.size() <= 1) {
            for (std::size_t i = 0; i < batch.size(); ++i) process(i);
        } else {
            std::vector<std::thread> workers;
            for (int w = 0; w < jobs; ++w)
                workers.emplace_back([&, w] {
                    for (std::size_t i = static_cast<std::size_t>(w); i < batch.size(); i += static_cast<std::size_t>(jobs))
                        process(i);
                });
            for (auto& t : workers) t.join();
        }
        for (const auto& r : results) {
            if (!r.output.empty()) out << r.output << '\n';
            if (!r.diagnostic.empty()) err << r.diagnostic << '\n';
            status = worse(status, r.status);
        }
    }
    out.flush();
    return status;
}

}  // namespace chroma
