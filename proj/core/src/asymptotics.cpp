#include "reglab/asymptotics.hpp"

#include <algorithm>

namespace reglab {

RegSequence::Slice RegSequence::slice(int parity) const {
    if (parity != 0 && parity != 1) throw parameter_error("parity must be 0 or 1");
    Slice out;
    out.parity = parity;
    bool started = false;
    int expect = 0;
    for (const auto& [n, v] : values) {
        if (((n % 2) + 2) % 2 != parity) continue;
        int i = (n - parity) / 2;
        if (!started) {
            out.first_index = i;
            expect = i;
            started = true;
        }
        if (i != expect) throw parameter_error("parity slice has gaps");
        out.values.push_back(v);
        ++expect;
    }
    return out;
}

LinearFit detect_linear(const RegSequence::Slice& slice, int min_constant_diffs) {
    const auto& v = slice.values;
    LinearFit fit;
    fit.parity = slice.parity;
    if (v.size() < 4) {
        throw insufficient_data_error("detect_linear needs at least 4 computed terms");
    }
    std::size_t n = v.size();

    if (!v.back()) {
        // trailing zero modules: regularity identically -infinity
        std::size_t run = 0;
        while (run < n && !v[n - 1 - run]) ++run;
        fit.intercept = std::nullopt;
        fit.slope = 0;
        fit.onset = slice.first_index + int(n - run);
        fit.suffix_diffs = int(run) - 1;
        fit.verdict = fit.suffix_diffs >= min_constant_diffs
                          ? LinearFit::Verdict::eventually_linear
                          : LinearFit::Verdict::not_linear_in_range;
        return fit;
    }

    // longest finite suffix with equal consecutive differences
    std::size_t fin = 0;
    while (fin < n && v[n - 1 - fin]) ++fin;
    if (fin < 2) {
        fit.verdict = LinearFit::Verdict::not_linear_in_range;
        fit.onset = slice.first_index + int(n) - 1;
        return fit;
    }
    long d = long(*v[n - 1]) - long(*v[n - 2]);
    std::size_t s = n - 2;  // suffix start position
    while (s > n - fin && long(*v[s]) - long(*v[s - 1]) == d) --s;
    fit.slope = d;
    fit.onset = slice.first_index + int(s);
    fit.suffix_diffs = int(n - 1 - s);
    fit.intercept = long(*v[s]) - d * long(fit.onset);
    fit.verdict = fit.suffix_diffs >= min_constant_diffs
                      ? LinearFit::Verdict::eventually_linear
                      : LinearFit::Verdict::not_linear_in_range;
    return fit;
}

bool slope_weight_check(const LinearFit& fit, const std::vector<int>& weights) {
    long mag = fit.slope < 0 ? -fit.slope : fit.slope;
    return std::any_of(weights.begin(), weights.end(),
                       [mag](int w) { return long(w) == mag; });
}

RatioStats ratio_stats(const RegSequence& seq) {
    RatioStats out;
    for (const auto& [n, v] : seq.values) {
        if (n <= 0) throw parameter_error("ratio_stats needs indices n >= 1");
        if (!v) throw parameter_error("ratio_stats needs finite regularities");
        out.indices.push_back(n);
        out.ratios.emplace_back(*v, n);
        out.ratios.back().canonicalize();
    }
    if (out.ratios.empty()) throw parameter_error("ratio_stats: empty sequence");
    out.tail_minima.resize(out.ratios.size());
    out.tail_maxima.resize(out.ratios.size());
    Rational mn = out.ratios.back(), mx = out.ratios.back();
    for (std::size_t k = out.ratios.size(); k-- > 0;) {
        mn = std::min(mn, out.ratios[k]);
        mx = std::max(mx, out.ratios[k]);
        out.tail_minima[k] = mn;
        out.tail_maxima[k] = mx;
    }
    out.min_ratio = out.tail_minima.front();
    out.max_ratio = out.tail_maxima.front();
    return out;
}

}  // namespace reglab
