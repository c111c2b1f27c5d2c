#include "plcsim/channel.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "plcsim/format.hpp"

namespace plcsim::channel {

namespace {

void require(bool ok, const char* msg) {
    if (!ok) throw std::invalid_argument(msg);
}

}  // namespace

ChannelParams ChannelParams::calibrated(double snr0_db, const CalibrationAnchor& anchor,
                                        double max_success) {
    ChannelParams p;
    p.snr0_db = snr0_db;
    p.max_success = max_success;
    p.calibration = anchor;
    p.gamma_db_per_m = calibrate_gamma(snr0_db, anchor);
    p.validate();
    return p;
}

void ChannelParams::validate() const {
    require(std::isfinite(snr0_db), "channel: snr0_db must be finite");
    require(gamma_db_per_m > 0.0 && std::isfinite(gamma_db_per_m),
            "channel: gamma_db_per_m must be > 0");
    require(max_success > 0.0 && max_success <= 1.0,
            "channel: max_success must be in (0, 1]");
    require(calibration.distance_m > 0.0, "channel: anchor distance must be > 0");
    require(calibration.packet_bytes >= 1, "channel: anchor packet_bytes must be >= 1");
    require(calibration.success > 0.0 && calibration.success < 1.0,
            "channel: anchor success must be in (0, 1)");
}

double erfc(double x) {
    require(!std::isnan(x), "erfc: input must not be NaN");
    return std::erfc(x);
}

double snr_db_at_distance(const ChannelParams& params, double distance_m) {
    require(distance_m >= 0.0, "snr_db_at_distance: distance must be >= 0");
    return params.snr0_db - params.gamma_db_per_m * distance_m;
}

double bit_error_rate(double snr_db) {
    require(std::isfinite(snr_db), "bit_error_rate: snr_db must be finite");
    const double snr_linear = std::pow(10.0, snr_db / 10.0);
    return erfc(std::sqrt(snr_linear) / 2.0) / 2.0;
}

double packet_success_rate(const ChannelParams& params, double distance_m, int n_bytes) {
    require(n_bytes >= 1, "packet_success_rate: n_bytes must be >= 1");
    const double pb = bit_error_rate(snr_db_at_distance(params, distance_m));
    const double n_bits = 8.0 * static_cast<double>(n_bytes);
    const double raw = std::pow(1.0 - pb, n_bits);
    return std::min(raw, params.max_success);
}

double calibrate_gamma(double snr0_db, const CalibrationAnchor& anchor) {
    require(std::isfinite(snr0_db), "calibrate_gamma: snr0_db must be finite");
    require(anchor.distance_m > 0.0, "calibrate_gamma: anchor distance must be > 0");
    require(anchor.packet_bytes >= 1, "calibrate_gamma: anchor packet_bytes must be >= 1");
    require(anchor.success > 0.0 && anchor.success < 1.0,
            "calibrate_gamma: anchor success must be in (0, 1)");

    const double n_bits = 8.0 * static_cast<double>(anchor.packet_bytes);
    const double pb_target = 1.0 - std::pow(anchor.success, 1.0 / n_bits);

    // Invert Pb = erfc(sqrt(snr)/2)/2 for the linear SNR by bisection.
    // Pb is strictly decreasing in snr, so the bracket below always holds
    // for any pb_target in (0, 0.5).
    auto pb_of = [](double snr_linear) {
        return std::erfc(std::sqrt(snr_linear) / 2.0) / 2.0;
    };
    double lo = 0.0, hi = 1.0;
    while (pb_of(hi) > pb_target) hi *= 2.0;
    double snr_linear = 0.5 * (lo + hi);
    for (int i = 0; i < 200; ++i) {
        snr_linear = 0.5 * (lo + hi);
        const double pb = pb_of(snr_linear);
        if (std::abs(pb - pb_target) <= 1e-12) break;
        if (pb > pb_target)
            lo = snr_linear;
        else
            hi = snr_linear;
    }

    const double snr_db_at_anchor = 10.0 * std::log10(snr_linear);
    const double gamma = (snr0_db - snr_db_at_anchor) / anchor.distance_m;
    if (!(gamma > 0.0))
        throw std::invalid_argument(
            "calibrate_gamma: anchor implies SNR above snr0_db (gamma <= 0); "
            "anchor and intercept are inconsistent");
    return gamma;
}

double interference_distance(const ChannelParams& params, double threshold, int n_bytes) {
    require(threshold > 0.0 && threshold < 1.0,
            "interference_distance: threshold must be in (0, 1)");
    require(n_bytes >= 1, "interference_distance: n_bytes must be >= 1");

    if (packet_success_rate(params, 0.0, n_bytes) <= threshold) return 0.0;

    double lo = 0.0, hi = 1000.0;
    while (packet_success_rate(params, hi, n_bytes) > threshold) {
        lo = hi;
        hi *= 2.0;
        if (hi > 1e9)
            throw std::invalid_argument("interference_distance: threshold never reached");
    }
    // Success is strictly decreasing here; bisect far below the 0.1 m
    // contract so the success value at the root is accurate to ~1e-7.
    while (hi - lo > 1e-4) {
        const double mid = 0.5 * (lo + hi);
        if (packet_success_rate(params, mid, n_bytes) > threshold)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

std::vector<CurveRow> tabulate_curves(const ChannelParams& params, double d_max_m,
                                      double step_m, int n_bytes) {
    require(d_max_m > 0.0, "tabulate_curves: d_max must be > 0");
    require(step_m > 0.0, "tabulate_curves: step must be > 0");
    require(n_bytes >= 1, "tabulate_curves: n_bytes must be >= 1");

    std::vector<CurveRow> rows;
    for (long i = 0;; ++i) {
        const double d = static_cast<double>(i) * step_m;
        if (d > d_max_m) break;
        const double snr = snr_db_at_distance(params, d);
        rows.push_back({d, snr, bit_error_rate(snr), packet_success_rate(params, d, n_bytes)});
    }
    return rows;
}

std::string curves_to_csv(const std::vector<CurveRow>& rows) {
    std::ostringstream out;
    out << "distance_m,snr_db,ber,p_suc\n";
    for (const CurveRow& r : rows) {
        out << fmt_g10(r.distance_m) << ',' << fmt_g10(r.snr_db) << ',' << fmt_g10(r.ber)
            << ',' << fmt_g10(r.p_suc) << '\n';
    }
    return out.str();
}

}  // namespace plcsim::channel
