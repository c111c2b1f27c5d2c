#pragma once

#include <string>
#include <vector>

namespace plcsim::channel {

/// Reference point used to derive the attenuation slope: a packet of
/// `packet_bytes` succeeds with probability `success` at `distance_m`.
struct CalibrationAnchor {
    double distance_m = 2000.0;
    int packet_bytes = 50;
    double success = 0.80;

    bool operator==(const CalibrationAnchor&) const = default;
};

/// Constants of the medium-voltage PLC link budget. Attenuation is
/// exponential in distance, so SNR in dB falls linearly:
///   snr_db(d) = snr0_db - gamma_db_per_m * d.
/// Transmit power and noise floor are folded into snr0_db; only their
/// ratio matters.
struct ChannelParams {
    double snr0_db = 15.3;
    double gamma_db_per_m = 0.0;
    double max_success = 1.0 - 1e-6;  // ceiling on any packet success rate
    CalibrationAnchor calibration;

    /// Derives gamma from the anchor (see calibrate_gamma) and validates.
    static ChannelParams calibrated(double snr0_db, const CalibrationAnchor& anchor,
                                    double max_success = 1.0 - 1e-6);

    /// Throws std::invalid_argument on violated invariants.
    void validate() const;

    bool operator==(const ChannelParams&) const = default;
};

/// Complementary error function. Thin wrapper over the platform facility;
/// accuracy is pinned by tests against high-precision reference values.
double erfc(double x);

/// snr0_db - gamma * d. Rejects negative distance.
double snr_db_at_distance(const ChannelParams& params, double distance_m);

/// BPSK bit error probability erfc(sqrt(snr_linear) / 2) / 2 with
/// snr_linear = 10^(snr_db / 10). Strictly decreasing in snr_db,
/// bounded by (0, 0.5].
double bit_error_rate(double snr_db);

/// min((1 - Pb)^(8 * n_bytes), max_success) at the SNR implied by the
/// distance. Non-increasing in both distance and packet size.
double packet_success_rate(const ChannelParams& params, double distance_m, int n_bytes);

/// Solves for the attenuation slope that reproduces the anchor:
/// Pb from the anchor success and bit count, then the linear SNR matching
/// that Pb (bisection, |Pb| tolerance 1e-12), then
/// gamma = (snr0_db - snr_db_at_anchor) / anchor distance.
/// Throws std::invalid_argument if the anchor implies gamma <= 0.
double calibrate_gamma(double snr0_db, const CalibrationAnchor& anchor);

/// Distance beyond which the success rate of an n_bytes packet drops below
/// `threshold` (bisection inverse of packet_success_rate, resolved well
/// below 0.1 m). Returns 0 when even distance 0 is below the threshold.
double interference_distance(const ChannelParams& params, double threshold, int n_bytes);

struct CurveRow {
    double distance_m;
    double snr_db;
    double ber;
    double p_suc;
};

/// Rows at d = 0, step, 2*step, ... <= d_max, each consistent with the
/// three point evaluations above.
std::vector<CurveRow> tabulate_curves(const ChannelParams& params, double d_max_m,
                                      double step_m, int n_bytes);

/// CSV with header `distance_m,snr_db,ber,p_suc`, 10 significant digits.
std::string curves_to_csv(const std::vector<CurveRow>& rows);

}  // namespace plcsim::channel
