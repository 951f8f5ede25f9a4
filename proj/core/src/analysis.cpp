#include "ptchain/analysis.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <numbers>
#include <thread>

#include "ptchain/analytic.hpp"
#include "ptchain/errors.hpp"
#include "ptchain/molecular.hpp"
#include "ptchain/negf.hpp"

namespace ptchain {

std::vector<double> linspace(double lo, double hi, int count) {
    if (count < 2) throw InvalidSpec("linspace needs at least two points");
    std::vector<double> out(count);
    const double step = (hi - lo) / (count - 1);
    for (int i = 0; i < count; ++i) out[i] = lo + i * step;
    out.back() = hi;
    return out;
}

CircuitSpec SweepPlan::circuit(double gamma, double phi) const {
    CircuitSpec spec;
    spec.chain = make_pt_chain(n_dots, e0, t_c, gamma, center_delta);
    spec.lead = LeadSpec{t0, eta};
    spec.coupling = CouplingSpec::uniform(v0, phi, allocation);
    return spec;
}

namespace {

void compute_series_samples(const CircuitSpec& spec, const std::vector<double>& omegas,
                            std::vector<SpectrumSample>& out, int threads) {
    const int n = static_cast<int>(omegas.size());
    out.resize(n);

    auto worker = [&](int begin, int end, std::exception_ptr& err) {
        try {
            for (int i = begin; i < end; ++i) {
                SpectrumSample& s = out[i];
                s.omega = omegas[i];
                s.transmission = transmission(spec, omegas[i]);
                s.amplitude = transmission_amplitude(spec, omegas[i]);
            }
        } catch (...) {
            err = std::current_exception();
        }
    };

    if (threads <= 1 || n < 2 * threads) {
        std::exception_ptr err;
        worker(0, n, err);
        if (err) std::rethrow_exception(err);
    } else {
        std::vector<std::exception_ptr> errs(threads);
        std::vector<std::thread> pool;
        const int chunk = (n + threads - 1) / threads;
        for (int t = 0; t < threads; ++t) {
            const int b = t * chunk;
            const int e = std::min(n, b + chunk);
            if (b >= e) break;
            pool.emplace_back(worker, b, e, std::ref(errs[t]));
        }
        for (auto& th : pool) th.join();
        for (auto& err : errs)
            if (err) std::rethrow_exception(err);
    }

    // unwrap phases sequentially in grid order
    std::vector<double> principal(n);
    for (int i = 0; i < n; ++i) principal[i] = std::arg(out[i].amplitude);
    const auto unwrapped = unwrap_phases(principal);
    for (int i = 0; i < n; ++i) out[i].phase = unwrapped[i];
}

} // namespace

std::vector<SpectrumSeries> sweep(const SweepPlan& plan) {
    for (size_t k = 1; k < plan.omegas.size(); ++k)
        if (!(plan.omegas[k] > plan.omegas[k - 1]))
            throw InvalidSpec("omega grid must be strictly increasing");

    std::vector<SpectrumSeries> out;
    out.reserve(plan.gammas.size() * plan.phis.size());
    for (const double gamma : plan.gammas) {
        for (const double phi : plan.phis) {
            SpectrumSeries series;
            series.spec = plan.circuit(gamma, phi);
            series.gamma = gamma;
            series.phi = phi;
            compute_series_samples(series.spec, plan.omegas, series.samples, plan.threads);
            out.push_back(std::move(series));
        }
    }
    return out;
}

namespace {

// Golden-section minimization of T(omega) over [lo, hi].
Feature golden_minimize(const CircuitSpec& spec, double lo, double hi, double tol = 1e-9) {
    constexpr double inv_phi = 0.6180339887498949;
    double a = lo, b = hi;
    double x1 = b - inv_phi * (b - a);
    double x2 = a + inv_phi * (b - a);
    double f1 = transmission(spec, x1);
    double f2 = transmission(spec, x2);
    while (b - a > tol) {
        if (f1 <= f2) {
            b = x2;
            x2 = x1; f2 = f1;
            x1 = b - inv_phi * (b - a);
            f1 = transmission(spec, x1);
        } else {
            a = x1;
            x1 = x2; f1 = f2;
            x2 = a + inv_phi * (b - a);
            f2 = transmission(spec, x2);
        }
    }
    const double xm = 0.5 * (a + b);
    return Feature{xm, transmission(spec, xm)};
}

// Plateau-aware local extrema: returns sample index ranges [first, last]
// that are strict local minima (or maxima) of the value sequence.
template <typename Less>
std::vector<std::pair<int, int>> local_extrema(const std::vector<SpectrumSample>& s, Less less) {
    std::vector<std::pair<int, int>> out;
    const int n = static_cast<int>(s.size());
    int i = 1;
    while (i + 1 < n) {
        if (!less(s[i].transmission, s[i - 1].transmission)) { ++i; continue; }
        int j = i;
        while (j + 1 < n && s[j + 1].transmission == s[i].transmission) ++j;
        if (j + 1 < n && less(s[i].transmission, s[j + 1].transmission))
            out.emplace_back(i, j);
        i = j + 1;
    }
    return out;
}

} // namespace

std::vector<Feature> find_antiresonances(const SpectrumSeries& series, double threshold, bool refine) {
    const auto& s = series.samples;
    auto minima = local_extrema(s, std::less<double>());
    std::vector<Feature> out;
    for (const auto& [first, last] : minima) {
        Feature f{s[first].omega, s[first].transmission};
        if (refine) {
            const double lo = s[first - 1].omega;
            const double hi = s[last + 1].omega;
            f = golden_minimize(series.spec, lo, hi);
        }
        if (f.value < threshold) out.push_back(f);
    }
    return out;
}

std::vector<Feature> find_peaks(const SpectrumSeries& series, double prominence) {
    const auto& s = series.samples;
    auto maxima = local_extrema(s, std::greater<double>());
    std::vector<Feature> out;
    const int n = static_cast<int>(s.size());
    for (const auto& [first, last] : maxima) {
        const double tp = s[first].transmission;
        double floor_left = tp, floor_right = tp;
        for (int i = first - 1; i >= 0 && s[i].transmission <= tp; --i)
            floor_left = std::min(floor_left, s[i].transmission);
        for (int i = last + 1; i < n && s[i].transmission <= tp; ++i)
            floor_right = std::min(floor_right, s[i].transmission);
        if (tp - std::max(floor_left, floor_right) >= prominence)
            out.push_back(Feature{0.5 * (s[first].omega + s[last].omega), tp});
    }
    return out;
}

std::vector<PhaseFeature> detect_phase_features(const SpectrumSeries& series, double sharpness_window) {
    const auto& s = series.samples;
    const int n = static_cast<int>(s.size());
    std::vector<PhaseFeature> out;
    if (n < 3) return out;

    const double step = s[1].omega - s[0].omega;
    const int wsamp = std::max(1, static_cast<int>(std::lround(sharpness_window / step)));

    std::vector<double> deriv(n - 1);
    for (int i = 0; i + 1 < n; ++i)
        deriv[i] = std::abs(s[i + 1].phase - s[i].phase) / (s[i + 1].omega - s[i].omega);
    std::vector<double> sorted = deriv;
    std::nth_element(sorted.begin(), sorted.begin() + sorted.size() / 2, sorted.end());
    const double median = sorted[sorted.size() / 2];

    // windows whose phase range reaches pi/2, merged into loci
    std::vector<std::pair<int, int>> loci;
    for (int i = 0; i + wsamp < n; ++i) {
        double lo = s[i].phase, hi = s[i].phase;
        for (int j = i + 1; j <= i + wsamp; ++j) {
            lo = std::min(lo, s[j].phase);
            hi = std::max(hi, s[j].phase);
        }
        if (hi - lo < 0.5 * std::numbers::pi) continue;
        if (!loci.empty() && i <= loci.back().second + 1)
            loci.back().second = i;
        else
            loci.emplace_back(i, i);
    }

    for (const auto& [a, b] : loci) {
        const int end = std::min(n - 2, b + wsamp - 1);
        int k = a;
        for (int i = a; i <= end; ++i)
            if (deriv[i] > deriv[k]) k = i;
        PhaseFeature f;
        f.omega = 0.5 * (s[k].omega + s[k + 1].omega);
        f.max_derivative = deriv[k];
        f.kind = deriv[k] > 10.0 * median ? PhaseKind::Sharp : PhaseKind::Smooth;
        out.push_back(f);
    }
    return out;
}

AnalysisReport analyze_series(const SpectrumSeries& series, double antiresonance_threshold,
                              double peak_prominence, double sharpness_window, bool refine) {
    AnalysisReport r;
    r.antiresonance_threshold = antiresonance_threshold;
    r.peak_prominence = peak_prominence;
    r.sharpness_window = sharpness_window;
    r.antiresonances = find_antiresonances(series, antiresonance_threshold, refine);
    r.peaks = find_peaks(series, peak_prominence);
    r.phase_features = detect_phase_features(series, sharpness_window);
    return r;
}

namespace {

std::pair<double, double> nearest_level(double omega, const std::vector<double>& levels) {
    double best = std::numeric_limits<double>::quiet_NaN();
    double dist = std::numeric_limits<double>::infinity();
    for (const double lv : levels) {
        const double d = std::abs(omega - lv);
        if (d < dist) { dist = d; best = lv; }
    }
    return {best, dist};
}

} // namespace

AnalysisReport correlate_levels(AnalysisReport report, const CircuitSpec& spec) {
    const int n = spec.chain.n_dots;

    // candidate interference levels: inner-chain eigenvalues, plus the
    // closed-form roots when the chain has a closed form and commensurate flux
    std::vector<double> zero_levels;
    if (n >= 3)
        for (const auto& e : subchain_eigenvalues(spec.chain)) zero_levels.push_back(e.real());
    if (n == 2 || n == 3) {
        ClosedFormParams p;
        p.e0 = spec.chain.onsite[0].real();
        p.t_c = spec.chain.hoppings[0].real();
        p.gamma = -spec.chain.onsite[0].imag();
        p.e2 = n == 3 ? spec.chain.onsite[1].real() : 0.0;
        p.phi = spec.coupling.flux;
        p.v0 = spec.coupling.v0;
        p.t0 = spec.lead.t0;
        const double phase = std::remainder(spec.coupling.flux, 4.0 * std::numbers::pi);
        if (std::abs(phase) < 1e-12)
            for (const double r : antiresonance_roots(p, n, FluxCase::Zero)) zero_levels.push_back(r);
        else if (std::abs(std::abs(phase) - 2.0 * std::numbers::pi) < 1e-12)
            for (const double r : antiresonance_roots(p, n, FluxCase::TwoPi)) zero_levels.push_back(r);
    }

    MolecularDecomposition decomp = eigendecompose_chain(spec.chain);
    std::vector<double> coupled_levels;
    {
        const auto [wL, wR] = molecular_couplings(spec, decomp);
        const double cut = 1e-10 * spec.coupling.v0;
        for (size_t m = 0; m < wL.size(); ++m)
            if (std::max(std::abs(wL[m]), std::abs(wR[m])) >= cut)
                coupled_levels.push_back(decomp.energies[m].real());
    }

    report.tagged.clear();
    for (const auto& f : report.antiresonances) {
        const auto [lv, d] = nearest_level(f.omega, zero_levels);
        report.tagged.push_back({"antiresonance", f.omega, f.value, lv, d});
    }
    for (const auto& f : report.peaks) {
        const auto [lv, d] = nearest_level(f.omega, coupled_levels);
        report.tagged.push_back({"peak", f.omega, f.value, lv, d});
    }
    for (const auto& f : report.phase_features) {
        const auto [lv, d] = nearest_level(f.omega, zero_levels);
        report.tagged.push_back({f.kind == PhaseKind::Sharp ? "phase_sharp" : "phase_smooth",
                                 f.omega, f.max_derivative, lv, d});
    }
    std::sort(report.tagged.begin(), report.tagged.end(),
              [](const TaggedFeature& a, const TaggedFeature& b) {
                  if (a.omega != b.omega) return a.omega < b.omega;
                  return a.kind < b.kind;
              });
    return report;
}

double valley_width(const SpectrumSeries& series, double center, double level) {
    const auto& s = series.samples;
    if (s.size() < 3) return 0.0;
    double tmax = 0.0;
    for (const auto& x : s) tmax = std::max(tmax, x.transmission);
    const double cut = level * tmax;

    int ic = 0;
    for (size_t i = 1; i < s.size(); ++i)
        if (std::abs(s[i].omega - center) < std::abs(s[ic].omega - center)) ic = static_cast<int>(i);
    if (s[ic].transmission >= cut) return 0.0;

    int lo = ic, hi = ic;
    while (lo > 0 && s[lo - 1].transmission < cut) --lo;
    while (hi + 1 < static_cast<int>(s.size()) && s[hi + 1].transmission < cut) ++hi;
    return s[hi].omega - s[lo].omega;
}

} // namespace ptchain
