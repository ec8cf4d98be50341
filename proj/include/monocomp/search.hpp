#ifndef MONOCOMP_SEARCH_HPP
#define MONOCOMP_SEARCH_HPP

#include "monocomp/composition.hpp"

#include <optional>
#include <vector>

namespace monocomp {

struct Range {
    long lo = 0;
    long hi = 0;

    bool empty() const { return hi < lo; }
};

struct SearchOptions {
    Range m{1, 1};
    Range n{2, 2};
    Range a{1, 1};
    Range b{0, 0};
    /// Keep only instances where the pair criterion applies and both
    /// polynomials are monogenic.
    bool require_pair = false;
    unsigned shards = 1;
    ReportOptions report;
};

struct SearchRecord {
    CompositionInstance instance;
    BinomMonogenicity f_verdict;
    BinomialIrreducibility f_irreducibility;
    MonogenicityReport report;
    std::optional<PairResult> pair;  // set when rad(m) | rad(an)
};

/// f verdict, full report and (when applicable) the pair verdict for one instance.
SearchRecord evaluate_instance(CompositionInstance const& inst, ReportOptions const& opts = {});

/* One record per valid instance in lexicographic (m, n, a, b) order.
 * Instances that fail CompositionInstance::validate are skipped. Work is
 * split across `shards` threads; the merged order does not depend on it.
 * Throws std::invalid_argument for an empty range.
 */
std::vector<SearchRecord> search_grid(SearchOptions const& opts);

struct FamilyRow {
    unsigned long p = 0;
    SquareFreeClass zero_value_class;  // of (-2p)^p - p
    Verdict::Kind shortcut_verdict = Verdict::Kind::Unknown;
    MonogenicityReport report;
};

/// (x^p - 2p)^p - p for odd primes 3 <= p <= p_max.
std::vector<FamilyRow> example_family(unsigned long p_max, ReportOptions const& opts = {});

}  // namespace monocomp

#endif  // MONOCOMP_SEARCH_HPP
