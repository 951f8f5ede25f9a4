#ifndef PTCHAIN_ANALYSIS_HPP
#define PTCHAIN_ANALYSIS_HPP

#include <string>
#include <vector>

#include "ptchain/model.hpp"

namespace ptchain {

/// Parameter sweep over (gamma, phi) combinations of a PT chain template.
/// Gamma enters as conjugate imaginary potentials on the terminal dots;
/// center_delta detunes the middle dot (odd N only).
struct SweepPlan {
    int n_dots = 2;
    double e0 = 0.0;
    double t_c = 0.5;
    double center_delta = 0.0;
    double v0 = 1.0;
    double t0 = 1.0;
    double eta = 0.0;
    FluxAllocation allocation = FluxAllocation::Symmetric;
    std::vector<double> gammas{0.0};
    std::vector<double> phis{0.0};
    std::vector<double> omegas;
    int threads = 1;

    CircuitSpec circuit(double gamma, double phi) const;
};

struct SpectrumSample {
    double omega = 0.0;
    double transmission = 0.0;
    cdouble amplitude{0.0, 0.0};
    double phase = 0.0;  // unwrapped along the series
};

struct SpectrumSeries {
    CircuitSpec spec;
    double gamma = 0.0;
    double phi = 0.0;
    std::vector<SpectrumSample> samples;
};

/// One series per (gamma, phi), gamma-major order; samples in grid order.
/// Grid points may be evaluated concurrently (plan.threads > 1); results are
/// identical to the serial order. Errors propagate.
std::vector<SpectrumSeries> sweep(const SweepPlan& plan);

struct Feature {
    double omega = 0.0;
    double value = 0.0;
};

/// Transmission zeros: local minima of T, golden-section refined when
/// requested (|interval| < 1e-9), kept when the (refined) minimum falls
/// below threshold.
std::vector<Feature> find_antiresonances(const SpectrumSeries& series,
                                         double threshold = 1e-6, bool refine = true);

/// Local maxima of T rising at least `prominence` above the higher of the
/// two flanking valley floors.
std::vector<Feature> find_peaks(const SpectrumSeries& series, double prominence = 0.05);

enum class PhaseKind { Sharp, Smooth };

struct PhaseFeature {
    double omega = 0.0;
    PhaseKind kind = PhaseKind::Sharp;
    double max_derivative = 0.0;  // max per-sample |dphase/domega| in the locus
};

/// Loci where the unwrapped phase ranges over >= pi/2 within a window of
/// the given width. Sharp when the max per-sample phase derivative exceeds
/// 10x the series median, else smooth.
std::vector<PhaseFeature> detect_phase_features(const SpectrumSeries& series,
                                                double sharpness_window = 0.05);

struct TaggedFeature {
    std::string kind;       // "antiresonance", "peak", "phase_sharp", "phase_smooth"
    double omega = 0.0;
    double value = 0.0;
    double nearest_level = 0.0;
    double distance = 0.0;
};

struct AnalysisReport {
    std::vector<Feature> antiresonances;
    std::vector<Feature> peaks;
    std::vector<PhaseFeature> phase_features;
    std::vector<TaggedFeature> tagged;  // filled by correlate_levels
    double antiresonance_threshold = 1e-6;
    double peak_prominence = 0.05;
    double sharpness_window = 0.05;
};

AnalysisReport analyze_series(const SpectrumSeries& series, double antiresonance_threshold = 1e-6,
                              double peak_prominence = 0.05, double sharpness_window = 0.05,
                              bool refine = true);

/// Tag antiresonances (and phase features) with the nearest sub-chain
/// eigenvalue or closed-form root, and peaks with the nearest coupled
/// molecular level.
AnalysisReport correlate_levels(AnalysisReport report, const CircuitSpec& spec);

/// Width of the interval around `center` where T stays below
/// `level` * max(T) of the series.
double valley_width(const SpectrumSeries& series, double center, double level = 0.5);

std::vector<double> linspace(double lo, double hi, int count);

} // namespace ptchain

#endif
