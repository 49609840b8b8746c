#include <doctest.h>

#include "reglab/asymptotics.hpp"
#include "reglab/families.hpp"

using namespace reglab;

namespace {

RegSequence sequence_of(const std::vector<int>& values, int start_n = 1) {
    RegSequence s;
    for (std::size_t k = 0; k < values.size(); ++k)
        s.values[start_n + int(k)] = values[k];
    return s;
}

}  // namespace

TEST_CASE("parity slices index n = 2i + parity") {
    RegSequence s = sequence_of({10, 20, 30, 40, 50, 60});  // n = 1..6
    auto even = s.slice(0);
    CHECK(even.first_index == 1);
    CHECK(even.values == std::vector<std::optional<int>>{20, 40, 60});
    auto odd = s.slice(1);
    CHECK(odd.first_index == 0);
    CHECK(odd.values == std::vector<std::optional<int>>{10, 30, 50});
}

TEST_CASE("detect_linear recovers an exact line with onset zero") {
    // value(i) = 7i - 3 for i = 0..5
    RegSequence s;
    for (int i = 0; i <= 5; ++i) s.values[2 * i + 1] = 7 * i - 3;
    LinearFit fit = detect_linear(s.slice(1));
    CHECK(fit.verdict == LinearFit::Verdict::eventually_linear);
    CHECK(fit.slope == 7);
    CHECK(fit.intercept == std::optional<long>(-3));
    CHECK(fit.onset == 0);
}

TEST_CASE("detect_linear sees through a short noisy prefix") {
    RegSequence s;
    std::vector<int> vals{99, -5, 17, 12, 14, 16, 18, 20};  // linear from position 3
    for (std::size_t k = 0; k < vals.size(); ++k) s.values[2 * int(k)] = vals[k];
    LinearFit fit = detect_linear(s.slice(0));
    CHECK(fit.verdict == LinearFit::Verdict::eventually_linear);
    CHECK(fit.slope == 2);
    CHECK(fit.onset == 3);
    CHECK(fit.intercept == std::optional<long>(12 - 2 * 3));
}

TEST_CASE("detect_linear needs enough terms and enough equal differences") {
    RegSequence tiny;
    for (int i = 0; i < 3; ++i) tiny.values[2 * i] = i;
    CHECK_THROWS_AS(detect_linear(tiny.slice(0)), insufficient_data_error);

    // only two equal trailing differences: not linear in range
    std::vector<int> vals{0, 10, 11, 30, 32, 34};
    RegSequence s;
    for (std::size_t k = 0; k < vals.size(); ++k) s.values[2 * int(k) + 2] = vals[k];
    LinearFit fit = detect_linear(s.slice(0));
    CHECK(fit.verdict == LinearFit::Verdict::not_linear_in_range);
    CHECK(fit.suffix_diffs == 2);
}

TEST_CASE("slope_weight_check compares magnitudes") {
    LinearFit fit;
    fit.slope = -2;
    fit.verdict = LinearFit::Verdict::eventually_linear;
    CHECK(slope_weight_check(fit, {2, 2}));
    fit.slope = 6;
    CHECK_FALSE(slope_weight_check(fit, {2, 2}));
    CHECK(slope_weight_check(fit, {2, 6}));
}

TEST_CASE("ratio stats on closed-form example-2 values") {
    RegSequence s;
    for (int n = 1; n <= 20; ++n) s.values[n] = closed_forms::example2_reg_tor(n);
    RatioStats stats = ratio_stats(s);
    CHECK(stats.max_ratio == Rational(3));
    CHECK(stats.min_ratio <= Rational(29, 14));
    // ratio at n = 7 is exactly 3, at n = 14 exactly 29/14
    std::size_t at7 = std::size_t(std::find(stats.indices.begin(), stats.indices.end(), 7) -
                                  stats.indices.begin());
    CHECK(stats.ratios[at7] == Rational(3));
    std::size_t at14 = std::size_t(std::find(stats.indices.begin(), stats.indices.end(), 14) -
                                   stats.indices.begin());
    CHECK(stats.ratios[at14] == Rational(29, 14));
    // tail minima/maxima are monotone envelopes
    for (std::size_t k = 0; k + 1 < stats.tail_minima.size(); ++k) {
        CHECK(stats.tail_minima[k] <= stats.tail_minima[k + 1]);
        CHECK(stats.tail_maxima[k] >= stats.tail_maxima[k + 1]);
    }
}

TEST_CASE("ratio stats of the zero sequence is identically zero") {
    RegSequence s = sequence_of(std::vector<int>(6, 0));
    RatioStats stats = ratio_stats(s);
    CHECK(stats.min_ratio == Rational(0));
    CHECK(stats.max_ratio == Rational(0));
}

TEST_CASE("prepending a short prefix does not change the eventual fit") {
    auto even_sequence = [](const std::vector<int>& vals) {
        RegSequence s;
        for (std::size_t k = 0; k < vals.size(); ++k) s.values[2 * int(k) + 2] = vals[k];
        return s;
    };
    std::vector<int> base{5, 8, 11, 14, 17, 20};  // value(i) = 3i + 2 at i = 1..6
    LinearFit f1 = detect_linear(even_sequence(base).slice(0));
    std::vector<int> prefixed{300, -7, 1};
    prefixed.insert(prefixed.end(), base.begin(), base.end());
    LinearFit f2 = detect_linear(even_sequence(prefixed).slice(0));
    CHECK(f1.verdict == LinearFit::Verdict::eventually_linear);
    CHECK(f2.verdict == LinearFit::Verdict::eventually_linear);
    CHECK(f1.slope == f2.slope);
    // the fitted line reproduces the tail values at their shifted indices
    CHECK(f2.onset == 4);
    CHECK(*f2.intercept + f2.slope * 4 == 5);
    CHECK(*f2.intercept + f2.slope * 9 == 20);
}

TEST_CASE("closed-form example-1 slices fit their predicted lines") {
    // reg(Tor_n) = (m+1)n + (2m-2) with m = 2: even slice value(i) = 6i + 2
    RegSequence tor;
    for (int n = 1; n <= 12; ++n) tor.values[n] = closed_forms::example1_reg_tor(2, n);
    LinearFit even = detect_linear(tor.slice(0));
    CHECK(even.verdict == LinearFit::Verdict::eventually_linear);
    CHECK(even.slope == 6);
    CHECK(even.intercept == std::optional<long>(2));
    CHECK(even.onset == 1);
    CHECK_FALSE(slope_weight_check(even, {2, 2}));

    RegSequence ext;
    for (int n = 1; n <= 12; ++n) ext.values[n] = closed_forms::example1_reg_ext(2, n);
    LinearFit odd = detect_linear(ext.slice(1));
    CHECK(odd.slope == -2);
    CHECK(odd.intercept == std::optional<long>(-1));
    CHECK(slope_weight_check(odd, {2, 2}));
}

TEST_CASE("closed-form example-2 tor slices are not linear in range") {
    RegSequence tor;
    for (int n = 1; n <= 20; ++n) tor.values[n] = closed_forms::example2_reg_tor(n);
    for (int parity : {0, 1}) {
        LinearFit fit = detect_linear(tor.slice(parity));
        CHECK(fit.verdict == LinearFit::Verdict::not_linear_in_range);
    }
}

TEST_CASE("the linearity verdict is relative to the computed window") {
    // a window whose tail sits inside the f(n) = 2^{l+1}-1 plateau looks
    // linear with slope 2; the next breakpoint (n = 2^{l+1}-1) breaks it
    RegSequence tor;
    for (int n = 1; n <= 24; ++n) tor.values[n] = closed_forms::example2_reg_tor(n);
    LinearFit plateau = detect_linear(tor.slice(0));
    CHECK(plateau.verdict == LinearFit::Verdict::eventually_linear);
    CHECK(plateau.slope == 2);

    for (int n = 25; n <= 32; ++n) tor.values[n] = closed_forms::example2_reg_tor(n);
    LinearFit crossed = detect_linear(tor.slice(0));
    CHECK(crossed.verdict == LinearFit::Verdict::not_linear_in_range);
}

TEST_CASE("all minus-infinity tails are reported as linear with slope zero") {
    RegSequence s;
    for (int i = 0; i < 6; ++i) s.values[2 * i] = std::nullopt;
    LinearFit fit = detect_linear(s.slice(0));
    CHECK(fit.verdict == LinearFit::Verdict::eventually_linear);
    CHECK_FALSE(fit.intercept.has_value());
}
