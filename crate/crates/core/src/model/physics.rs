//! Physical-layer formulas: the saturating RF harvester, power-splitting
//! downlink SINR, and SIC uplink SINR.

use super::config::NetworkConfig;
use super::schedule::{Mode, SlotDecision};
use super::ModelError;

fn sigmoid(x: f64) -> f64 {
    if x >= 0.0 {
        1.0 / (1.0 + (-x).exp())
    } else {
        let e = x.exp();
        e / (1.0 + e)
    }
}

/// Harvested power for a given received power, watts.
///
/// Logistic saturation with the zero-input correction, so psi(0) = 0 and the
/// output stays strictly below the saturation level M for any finite input
/// (the clamp keeps the float result below M where the logistic would round
/// up to it).
pub fn harvest_power(p_in: f64, config: &NetworkConfig) -> f64 {
    debug_assert!(p_in >= 0.0, "received power must be nonnegative");
    let (m, a, b) = (config.eh_m, config.eh_a, config.eh_b);
    let omega = sigmoid(a * (0.0 - b));
    let raw = m * (sigmoid(a * (p_in - b)) - omega) / (1.0 - omega);
    raw.clamp(0.0, m * (1.0 - f64::EPSILON))
}

/// Energy a device harvests in one slot when the HAP transmits at `p_hap`
/// and the device routes fraction `rho` of the received power to decoding.
pub fn harvested_energy(p_hap: f64, gain: f64, rho: f64, config: &NetworkConfig) -> f64 {
    debug_assert!((0.0..=1.0).contains(&rho));
    harvest_power((1.0 - rho) * p_hap * gain, config) * config.slot_tau
}

/// Common and private message SINR at device `n` in a downlink slot.
///
/// The interference sums follow the source expressions verbatim: the common
/// denominator keeps the outer device's gain inside the sum, while the
/// private denominator mixes the interferers' gains with the outer device's
/// split ratio.
pub fn downlink_sinr(
    decision: &SlotDecision,
    gains: &[f64],
    n: usize,
    config: &NetworkConfig,
) -> Result<(f64, f64), ModelError> {
    if decision.mode != Mode::Downlink {
        return Err(ModelError::WrongMode {
            expected: Mode::Downlink,
        });
    }
    let p = config.hap_power_max;
    let n0 = config.noise_power();
    let rho = decision.rho[n];
    let g_n = gains[n];
    let mu_sum: f64 = decision.mu.iter().sum();
    let common = decision.mu_c * rho * p * g_n / (mu_sum * rho * p * g_n + n0);
    let cross: f64 = decision
        .mu
        .iter()
        .zip(gains)
        .enumerate()
        .filter(|&(m, _)| m != n)
        .map(|(_, (&mu_m, &g_m))| mu_m * g_m)
        .sum();
    let private = decision.mu[n] * rho * p * g_n / (cross * rho * p + n0);
    Ok((common, private))
}

/// SIC decoding SINR of message `(n, j)` at the HAP under `order`.
///
/// Interference comes only from still-undecoded active messages, i.e. those
/// whose rank in the order is strictly smaller (smaller rank = decoded
/// later).
pub fn uplink_sinr(
    decision: &SlotDecision,
    order: &super::decoding::DecodingOrder,
    gains: &[f64],
    message: (usize, usize),
    config: &NetworkConfig,
) -> Result<f64, ModelError> {
    if decision.mode != Mode::Uplink {
        return Err(ModelError::WrongMode {
            expected: Mode::Uplink,
        });
    }
    let (n, j) = message;
    let pos = order.position(n, j)?;
    let n0 = config.noise_power();
    let mut interference = 0.0;
    for &(m, l) in order.sequence() {
        if (m, l) == (n, j) {
            continue;
        }
        if order.position(m, l)? < pos && decision.uplink_ok[m][l] {
            interference += decision.tx_power[m][l] * gains[m];
        }
    }
    Ok(decision.tx_power[n][j] * gains[n] / (interference + n0))
}

#[cfg(test)]
mod tests {
    use super::super::decoding::DecodingOrder;
    use super::super::schedule::{Mode, SlotDecision};
    use super::*;

    fn cfg() -> NetworkConfig {
        NetworkConfig::default()
    }

    #[test]
    fn psi_zero_is_exactly_zero() {
        assert_eq!(harvest_power(0.0, &cfg()), 0.0);
    }

    #[test]
    fn psi_saturates_strictly_below_m() {
        let c = cfg();
        let v = harvest_power(1.0, &c);
        assert!(v > 0.0239, "psi(1 W) = {v}");
        assert!(v < c.eh_m);
        assert!(harvest_power(100.0, &c) < c.eh_m);
    }

    #[test]
    fn psi_midpoint_matches_closed_form() {
        let c = cfg();
        let omega = 1.0 / (1.0 + (c.eh_a * c.eh_b).exp());
        let expected = c.eh_m * (0.5 - omega) / (1.0 - omega);
        let got = harvest_power(c.eh_b, &c);
        assert!((got - expected).abs() < 1e-12, "got {got}, want {expected}");
        assert!((got - 0.01053).abs() < 1e-5);
    }

    #[test]
    fn psi_monotone_on_grid() {
        let c = cfg();
        let mut prev = -1.0;
        for k in 0..=10_000 {
            let p = 1.2 * k as f64 / 10_000.0;
            let v = harvest_power(p, &c);
            assert!(v >= prev);
            prev = v;
        }
    }

    #[test]
    fn harvested_energy_cases() {
        let c = cfg();
        assert_eq!(harvested_energy(2.0, 0.04, 1.0, &c), 0.0);
        let e = harvested_energy(2.0, 0.04, 0.0, &c);
        assert!((e - harvest_power(0.08, &c) * c.slot_tau).abs() < 1e-18);
        // rho = 0.5 halves the harvester input power
        let half = harvested_energy(2.0, 0.04, 0.5, &c);
        assert!((half - harvest_power(0.04, &c) * c.slot_tau).abs() < 1e-18);
    }

    #[test]
    fn downlink_sinr_single_device() {
        let c = cfg().with_devices(1);
        let mut d = SlotDecision::empty_downlink(1);
        d.mu_c = 0.5;
        d.mu[0] = 0.0;
        d.rho[0] = 0.5;
        let (common, private) = downlink_sinr(&d, &[0.04], 0, &c).unwrap();
        assert!((common - 1.0e4).abs() < 1e-6);
        assert_eq!(private, 0.0);
    }

    #[test]
    fn downlink_sinr_degenerate_cases() {
        let c = cfg().with_devices(1);
        let mut d = SlotDecision::empty_downlink(1);
        d.rho[0] = 0.7;
        let (common, _) = downlink_sinr(&d, &[0.04], 0, &c).unwrap();
        assert_eq!(common, 0.0);
        d.mu_c = 0.5;
        d.mu[0] = 0.2;
        d.rho[0] = 0.0;
        let (common, private) = downlink_sinr(&d, &[0.04], 0, &c).unwrap();
        assert_eq!(common, 0.0);
        assert_eq!(private, 0.0);
    }

    #[test]
    fn downlink_sinr_rejects_uplink_mode() {
        let c = cfg().with_devices(1);
        let mut d = SlotDecision::empty_downlink(1);
        d.mode = Mode::Uplink;
        assert!(downlink_sinr(&d, &[0.04], 0, &c).is_err());
    }

    #[test]
    fn uplink_sinr_two_messages() {
        // p1 g1 = 4e-6, p2 g2 = 2e-6, N0 = 2e-6; first decoded sees the other.
        let c = cfg().with_devices(2);
        let mut d = SlotDecision::empty_downlink(2);
        d.mode = Mode::Downlink; // fix below
        d.mode = Mode::Uplink;
        d.tx_power[0][0] = 4e-6 / 0.04;
        d.tx_power[1][0] = 2e-6 / 0.04;
        d.uplink_ok[0][0] = true;
        d.uplink_ok[1][0] = true;
        let order =
            DecodingOrder::new(vec![(0, 0), (1, 0), (0, 1), (1, 1)], 2).unwrap();
        let gains = [0.04, 0.04];
        let first = uplink_sinr(&d, &order, &gains, (0, 0), &c).unwrap();
        assert!((first - 1.0).abs() < 1e-12);
        // last active message sees only noise
        let last = uplink_sinr(&d, &order, &gains, (1, 0), &c).unwrap();
        assert!((last - 2e-6 / 0.04 * 0.04 / 2e-6).abs() < 1e-12);
        // deactivating the other message empties the interference sum
        let mut d2 = d.clone();
        d2.uplink_ok[1][0] = false;
        let alone = uplink_sinr(&d2, &order, &gains, (0, 0), &c).unwrap();
        assert!((alone - 2.0).abs() < 1e-12);
    }

    #[test]
    fn uplink_sinr_rejects_bad_inputs() {
        let c = cfg().with_devices(1);
        let mut d = SlotDecision::empty_downlink(1);
        let order = DecodingOrder::new(vec![(0, 0), (0, 1)], 1).unwrap();
        assert!(uplink_sinr(&d, &order, &[0.04], (0, 0), &c).is_err());
        d.mode = Mode::Uplink;
        assert!(uplink_sinr(&d, &order, &[0.04], (5, 0), &c).is_err());
    }
}
