#include <doctest.h>

#include <chrono>
#include <cmath>
#include <numbers>

#include "ptchain/analysis.hpp"
#include "ptchain/molecular.hpp"

using namespace ptchain;

namespace {

constexpr double kPi = std::numbers::pi;

SweepPlan preset_plan(int n, std::vector<double> gammas, double phi, double delta = 0.0,
                      int points = 2000, double v0 = 1.0) {
    SweepPlan plan;
    plan.n_dots = n;
    plan.center_delta = delta;
    plan.v0 = v0;
    plan.gammas = std::move(gammas);
    plan.phis = {phi};
    plan.omegas = linspace(-1.99, 1.99, points);
    return plan;
}

} // namespace

TEST_CASE("sweep produces one series per combination in gamma-major order") {
    auto plan = preset_plan(2, {0.0, 0.1, 0.3, 0.5}, 0.0, 0.0, 501);
    plan.phis = {0.0, kPi};
    const auto series = sweep(plan);
    REQUIRE(series.size() == 8);
    CHECK(series[0].gamma == 0.0);
    CHECK(series[0].phi == 0.0);
    CHECK(series[1].phi == kPi);
    CHECK(series[7].gamma == 0.5);
    for (const auto& s : series) CHECK(s.samples.size() == 501);
}

TEST_CASE("empty gamma list yields no series") {
    auto plan = preset_plan(2, {}, 0.0);
    CHECK(sweep(plan).empty());
}

TEST_CASE("threaded sweep reproduces the serial result exactly") {
    auto serial = preset_plan(3, {0.0, 0.3}, 0.0, 0.5, 801);
    auto threaded = serial;
    threaded.threads = 4;
    const auto a = sweep(serial);
    const auto b = sweep(threaded);
    REQUIRE(a.size() == b.size());
    for (size_t s = 0; s < a.size(); ++s)
        for (size_t i = 0; i < a[s].samples.size(); ++i) {
            CHECK(a[s].samples[i].transmission == b[s].samples[i].transmission);
            CHECK(a[s].samples[i].amplitude == b[s].samples[i].amplitude);
            CHECK(a[s].samples[i].phase == b[s].samples[i].phase);
        }
}

TEST_CASE("eight 4001-point five-dot series complete within a second") {
    SweepPlan plan = preset_plan(5, {0.0, 0.1, 0.3, 0.5}, 0.0, 0.0, 4001);
    plan.phis = {kPi / 3.0, kPi};  // avoid the exactly singular on-grid points
    const auto t0 = std::chrono::steady_clock::now();
    const auto series = sweep(plan);
    const auto t1 = std::chrono::steady_clock::now();
    REQUIRE(series.size() == 8);
    CHECK(std::chrono::duration<double>(t1 - t0).count() < 1.0);
}

TEST_CASE("antiresonance detection, gain/loss dimer") {
    const auto series = sweep(preset_plan(2, {0.3}, 0.0)).front();
    const auto zeros = find_antiresonances(series, 1e-6, true);
    REQUIRE(zeros.size() == 1);
    CHECK(zeros[0].omega == doctest::Approx(-0.5).epsilon(1e-7));
    CHECK(zeros[0].value < 1e-12);
}

TEST_CASE("antiresonance detection, Hermitian five-dot chain") {
    const auto series = sweep(preset_plan(5, {0.0}, 0.0)).front();
    const auto zeros = find_antiresonances(series, 1e-6, true);
    REQUIRE(zeros.size() == 2);
    const double r = std::sqrt(2.0) / 2.0;
    CHECK(zeros[0].omega == doctest::Approx(-r).epsilon(1e-6));
    CHECK(zeros[1].omega == doctest::Approx(+r).epsilon(1e-6));
    CHECK(zeros[0].value < 1e-12);
}

TEST_CASE("Hermitian dimer at zero flux has no transmission zero") {
    // the dark-state pole eats the numerator zero at -t_c; T stays near 1
    const auto series = sweep(preset_plan(2, {0.0}, 0.0)).front();
    CHECK(find_antiresonances(series, 1e-6, true).empty());
    double tmin = 1e300;
    for (const auto& s : series.samples)
        if (std::abs(s.omega + 0.5) < 0.05) tmin = std::min(tmin, s.transmission);
    CHECK(tmin > 0.99);
}

TEST_CASE("finite minima are excluded by the threshold") {
    const auto series = sweep(preset_plan(2, {0.3}, kPi)).front();
    CHECK(find_antiresonances(series, 1e-6, true).empty());
}

TEST_CASE("peak detection") {
    // the strong-coupling self-energy shift parks the bright dimer resonance
    // on top of the dark-state energy at v0 = t0
    const auto two = sweep(preset_plan(2, {0.0}, 0.0)).front();
    const auto peaks2 = find_peaks(two, 0.05);
    REQUIRE(peaks2.size() == 1);
    CHECK(peaks2[0].omega == doctest::Approx(-0.5).epsilon(2e-3));
    CHECK(peaks2[0].value == doctest::Approx(1.0).epsilon(1e-6));

    const auto three = sweep(preset_plan(3, {0.0}, 0.0)).front();
    const auto peaks3 = find_peaks(three, 0.05);
    REQUIRE(peaks3.size() == 2);
    CHECK(peaks3[0].omega == doctest::Approx(-peaks3[1].omega).epsilon(1e-6));
    CHECK(std::abs(peaks3[1].omega) == doctest::Approx(0.632).epsilon(0.01));

    // phi = 2 pi trimer: single band-center peak on a plateau pair
    const auto bw = sweep(preset_plan(3, {0.0}, 2.0 * kPi)).front();
    const auto peaks_bw = find_peaks(bw, 0.05);
    REQUIRE(peaks_bw.size() == 1);
    CHECK(std::abs(peaks_bw[0].omega) < 2e-3);
    CHECK(peaks_bw[0].value == doctest::Approx(1.0).epsilon(1e-5));
}

TEST_CASE("weakly coupled peaks sit on the bright molecular levels") {
    for (int n : {2, 3, 4, 5}) {
        const auto series = sweep(preset_plan(n, {0.0}, 0.0, 0.0, 2000, 0.1)).front();
        const auto peaks = find_peaks(series, 0.05);

        const auto decomp = uniform_chain_eigensystem(n, 0.0, 0.5);
        const auto dark = classify_decoupled(series.spec);
        std::vector<double> bright, dark_levels;
        for (int m = 0; m < n; ++m) {
            const bool is_dark = std::find(dark.begin(), dark.end(), m + 1) != dark.end();
            (is_dark ? dark_levels : bright).push_back(decomp.energies[m].real());
        }

        for (const double level : bright) {
            double closest = 1e300;
            for (const auto& p : peaks) closest = std::min(closest, std::abs(p.omega - level));
            CHECK(closest < 0.02);
        }
        for (const auto& p : peaks)
            for (const double level : dark_levels)
                CHECK(std::abs(p.omega - level) > 0.05);
    }
}

TEST_CASE("phase features of the dimer series") {
    const auto calm = sweep(preset_plan(2, {0.0}, 0.0)).front();
    CHECK(detect_phase_features(calm, 0.05).empty());

    const auto fano = sweep(preset_plan(2, {0.3}, 0.0)).front();
    const auto features = detect_phase_features(fano, 0.05);
    REQUIRE(features.size() == 1);
    CHECK(features[0].omega == doctest::Approx(-0.5).epsilon(2e-3));
    CHECK(features[0].kind == PhaseKind::Sharp);
}

TEST_CASE("phase features of the detuned trimer land on the zeros") {
    const auto series = sweep(preset_plan(3, {0.3}, 0.0, 0.5)).front();
    const auto features = detect_phase_features(series, 0.05);
    REQUIRE(features.size() == 2);
    CHECK(features[0].omega == doctest::Approx(0.0).epsilon(2e-3));
    CHECK(features[1].omega == doctest::Approx(0.5).epsilon(2e-3));
}

TEST_CASE("level correlation tags antiresonances and peaks") {
    const auto four = sweep(preset_plan(4, {0.0}, 0.0)).front();
    auto report = correlate_levels(analyze_series(four), four.spec);
    bool found = false;
    for (const auto& t : report.tagged) {
        if (t.kind == "antiresonance" && std::abs(t.omega - 0.5) < 1e-6) {
            found = true;
            CHECK(t.nearest_level == doctest::Approx(0.5).epsilon(1e-10));
            CHECK(t.distance < 1e-6);
        }
    }
    CHECK(found);

    const auto five = sweep(preset_plan(5, {0.0}, 2.0 * kPi)).front();
    auto report5 = correlate_levels(analyze_series(five), five.spec);
    bool zero_tagged = false;
    for (const auto& t : report5.tagged)
        if (t.kind == "antiresonance" && std::abs(t.omega) < 1e-6 && std::abs(t.nearest_level) < 1e-10)
            zero_tagged = true;
    CHECK(zero_tagged);

    // no sub-chain for the dimer: the closed-form root is the fallback
    const auto two = sweep(preset_plan(2, {0.3}, 0.0)).front();
    auto report2 = correlate_levels(analyze_series(two), two.spec);
    bool root_tagged = false;
    for (const auto& t : report2.tagged)
        if (t.kind == "antiresonance" && std::abs(t.nearest_level + 0.5) < 1e-12 && t.distance < 1e-6)
            root_tagged = true;
    CHECK(root_tagged);
}

TEST_CASE("smooth phase features coincide with antiresonances when present") {
    for (int n : {2, 3, 4, 5}) {
        for (double gamma : {0.1, 0.3, 0.5}) {
            const auto series = sweep(preset_plan(n, {gamma}, 0.0, n == 3 ? 0.5 : 0.0)).front();
            const auto report = analyze_series(series);
            const double step = series.samples[1].omega - series.samples[0].omega;
            for (const auto& f : report.phase_features) {
                if (f.kind != PhaseKind::Smooth) continue;
                double nearest = 1e300;
                for (const auto& a : report.antiresonances)
                    nearest = std::min(nearest, std::abs(a.omega - f.omega));
                CHECK(nearest < 2.0 * step);
            }
        }
    }
}

TEST_CASE("refined antiresonance positions do not drift with gamma") {
    for (double phi : {0.0, 2.0 * kPi}) {
        std::vector<double> positions;
        for (double gamma : {0.1, 0.3, 0.5}) {
            const auto series = sweep(preset_plan(2, {gamma}, phi)).front();
            const auto zeros = find_antiresonances(series, 1e-6, true);
            REQUIRE(zeros.size() == 1);
            positions.push_back(zeros[0].omega);
        }
        CHECK(std::abs(positions[0] - positions[1]) < 1e-6);
        CHECK(std::abs(positions[1] - positions[2]) < 1e-6);
    }
}

TEST_CASE("the antiresonance valley widens with gamma") {
    std::vector<double> widths;
    for (double gamma : {0.1, 0.3, 0.5}) {
        const auto series = sweep(preset_plan(2, {gamma}, 0.0)).front();
        widths.push_back(valley_width(series, -0.5, 0.5));
    }
    CHECK(widths[0] > 0.0);
    CHECK(widths[1] > widths[0]);
    CHECK(widths[2] > widths[1]);
}
