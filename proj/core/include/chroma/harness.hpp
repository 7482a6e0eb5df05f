#pragma once

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "chroma/big_count.hpp"
#include "chroma/criticality.hpp"
#include "chroma/graph.hpp"
#include "chroma/overprediction.hpp"
#include "chroma/proof_bounds.hpp"

namespace chroma {

/// Exit status shared by every corpus pipeline and CLI command.
enum class ExitCode : int { Ok = 0, AssertionFailed = 1, InputError = 2 };

struct GeneralXCheck {
    int x = 0;
    BigCount count;
    BigCount rhs;  ///< (x)_k (x-1)^(n-k)
    bool satisfied = false;
    bool equality = false;
};

struct VerificationRecord {
    std::string id;
    int n = 0;
    int chi = 0;
    BigCount exact;
    BigCount tomescu_rhs;
    bool satisfied = false;
    bool equality = false;
    bool core_is_clique = false;
    /// Checks are asserted only for chi >= 4; below that the record is diagnostic.
    bool asserted = false;
    std::vector<GeneralXCheck> general_x;

    /// Bound holds and equality occurs exactly when the 2-core is K_chi
    /// (including every general-x check). Always true for diagnostic records.
    bool consistent() const;
};

/// Builds the record for a connected graph. `x_range` adds the general-x
/// checks for every x in [first, second] with x >= chi.
VerificationRecord verify_tomescu(const Graph& g, std::string id,
                                  std::optional<std::pair<int, int>> x_range = std::nullopt);

std::string to_json(const VerificationRecord& r);
std::string to_json(const BoundChainReport& r);
std::string to_json(const CriticalityReport& r);
std::string to_json(const SweepReport& r);

/// Outcome of processing one corpus line.
struct LineResult {
    std::string output;      ///< one JSON line, or empty to emit nothing
    std::string diagnostic;  ///< written to the error stream when non-empty
    ExitCode status = ExitCode::Ok;
};

struct CorpusLine {
    std::size_t number = 0;  ///< 1-based
    std::string text;
};

/// Reads graph6 lines (blank lines skipped), processes them on `jobs` worker
/// threads in bounded batches, and emits results strictly in input order.
/// Returns the most severe status seen (AssertionFailed over InputError).
ExitCode run_corpus(std::istream& in, int jobs, const std::function<LineResult(const CorpusLine&)>& work,
                    std::ostream& out, std::ostream& err);

ExitCode worse(ExitCode a, ExitCode b);

}  // namespace chroma
