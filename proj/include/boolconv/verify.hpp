#ifndef BOOLCONV_VERIFY_HPP
#define BOOLCONV_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "boolconv/measure.hpp"

namespace boolconv {

/// Parameters of the seeded random corpus. Positions are drawn uniformly
/// from [-position_range, position_range] with a minimum gap, weights are
/// normalized uniforms with a floor (both floors keep the downstream root
/// recovery well conditioned), the measure is standardized, and draws whose
/// standardized support radius exceeds max_support_radius are rejected.
/// Everything is a pure function of the seed.
struct CorpusConfig {
    std::uint64_t seed = 42;
    int size = 200;
    int min_atoms = 2;
    int max_atoms = 8;
    double position_range = 3.0;
    double min_gap = 0.05;
    double min_weight = 0.02;
    double max_support_radius = 5.0;
};

std::vector<AtomicMeasure> make_corpus(const CorpusConfig& config);

/// Outcome of one verification predicate over the corpus.
struct PredicateResult {
    std::string name;
    long checked = 0;
    long passed = 0;
    long vacuous = 0;  ///< entries where the tested bound exceeds 1 and carries no content
    std::vector<std::string> failures;  ///< serialized failing instances (capped)
    long failure_count = 0;

    bool ok() const { return failure_count == 0; }
};

struct VerificationReport {
    CorpusConfig config;
    std::vector<PredicateResult> predicates;

    bool all_ok() const;
};

/// Runs the invariant suite over a seeded corpus: the rate bound of the
/// iterates, the two-outlier structure of bounded-support iterates, the
/// sharpness family, equivalence of the direct iterate with repeated
/// pairwise convolution, the fixed point, and fourth-cumulant scaling.
VerificationReport run_verification(const CorpusConfig& config);

/// Same suite over caller-provided standardized measures.
VerificationReport run_verification(const CorpusConfig& config,
                                    const std::vector<AtomicMeasure>& corpus);

}  // namespace boolconv

#endif
