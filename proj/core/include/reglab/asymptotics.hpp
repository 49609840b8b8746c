#pragma once

#include <map>
#include <optional>
#include <vector>

#include "reglab/field.hpp"

namespace reglab {

/// Regularity values indexed by homological degree n, with derived parity
/// slices n = 2i + parity. nullopt stands for -infinity (zero module).
struct RegSequence {
    std::map<int, std::optional<int>> values;

    struct Slice {
        int parity = 0;
        int first_index = 0;  // smallest i with an entry
        std::vector<std::optional<int>> values;
    };
    /// Contiguous slice for the given parity; throws when indices have gaps.
    Slice slice(int parity) const;
};

struct LinearFit {
    enum class Verdict { eventually_linear, not_linear_in_range };
    int parity = 0;
    long slope = 0;
    std::optional<long> intercept;  // nullopt = -infinity
    int onset = 0;                  // first slice index of the maximal linear suffix
    Verdict verdict = Verdict::not_linear_in_range;
    int suffix_diffs = 0;           // number of constant consecutive differences found
};

/// Largest suffix with constant consecutive differences, exact integer
/// arithmetic only; eventually_linear when the suffix holds at least
/// min_constant_diffs differences. Requires >= 4 computed terms.
LinearFit detect_linear(const RegSequence::Slice& slice, int min_constant_diffs = 3);

/// True iff |slope| is one of the complete-intersection weights.
bool slope_weight_check(const LinearFit& fit, const std::vector<int>& weights);

/// Window min/max of reg(n)/n, plus running min/max over tail windows.
struct RatioStats {
    std::vector<int> indices;           // the n values, ascending
    std::vector<Rational> ratios;       // reg(n)/n
    std::vector<Rational> tail_minima;  // min over n' >= indices[k]
    std::vector<Rational> tail_maxima;
    Rational min_ratio, max_ratio;      // over the whole window
};

RatioStats ratio_stats(const RegSequence& seq);

}  // namespace reglab
