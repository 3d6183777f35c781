//! Frequency (monobit) and runs tests on a bit stream.
//!
//! Both are reported as standard normal scores and pass at the two-sided
//! 0.01 level, `|z| < 2.576`. The runs test is only meaningful when the
//! ones proportion is close to 1/2, so it fails whenever monobit fails.

use std::fmt;

use rsdprng::bits::BitStr;

/// Two-sided critical value at significance 0.01.
pub const Z_CRITICAL: f64 = 2.576;
pub const MIN_BITS: usize = 10_000;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("stream too short: {got} bits, need at least {MIN_BITS}")]
pub struct TooShort {
    pub got: usize,
}

/// `(2 * ones - n) / sqrt(n)`.
pub fn monobit(bits: &BitStr) -> f64 {
    let n = bits.len() as f64;
    (2.0 * bits.count_ones() as f64 - n) / n.sqrt()
}

/// Normal score of the number of runs given the observed ones proportion.
/// `NaN` when the stream is constant.
pub fn runs(bits: &BitStr) -> f64 {
    let n = bits.len() as f64;
    let pi = bits.count_ones() as f64 / n;
    let changes = bits.windows(2).filter(|w| w[0] != w[1]).count();
    let observed = changes as f64 + 1.0;
    let spread = pi * (1.0 - pi);
    if spread == 0.0 {
        return f64::NAN;
    }
    (observed - 2.0 * n * spread) / (2.0 * n.sqrt() * spread)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StatReport {
    pub bits: usize,
    pub monobit_z: f64,
    pub runs_z: f64,
    pub monobit_pass: bool,
    pub runs_pass: bool,
}

impl StatReport {
    pub fn passes(&self) -> bool {
        self.monobit_pass && self.runs_pass
    }
}

impl fmt::Display for StatReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = |ok: bool| if ok { "pass" } else { "FAIL" };
        writeln!(f, "bits:    {}", self.bits)?;
        writeln!(
            f,
            "monobit: z = {:+.4}  {}",
            self.monobit_z,
            verdict(self.monobit_pass)
        )?;
        write!(
            f,
            "runs:    z = {:+.4}  {}",
            self.runs_z,
            verdict(self.runs_pass)
        )
    }
}

pub fn analyze(bits: &BitStr) -> Result<StatReport, TooShort> {
    if bits.len() < MIN_BITS {
        return Err(TooShort { got: bits.len() });
    }
    let monobit_z = monobit(bits);
    let runs_z = runs(bits);
    let monobit_pass = monobit_z.abs() < Z_CRITICAL;
    Ok(StatReport {
        bits: bits.len(),
        monobit_z,
        runs_z,
        monobit_pass,
        runs_pass: monobit_pass && runs_z.abs() < Z_CRITICAL,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use rsdprng::bits::Bits;

    #[test]
    fn all_zero_fails_monobit() {
        let r = analyze(&Bits::repeat(false, 20_000)).unwrap();
        assert!(!r.monobit_pass);
        assert!(!r.runs_pass);
        assert!((r.monobit_z + 20_000f64.sqrt()).abs() < 1e-9);
    }

    #[test]
    fn alternating_fails_runs_only() {
        let bits: Bits = (0..20_000).map(|i| i % 2 == 0).collect();
        let r = analyze(&bits).unwrap();
        assert!(r.monobit_pass);
        assert_eq!(r.monobit_z, 0.0);
        assert!(r.runs_z > 100.0);
        assert!(!r.runs_pass);
    }

    #[test]
    fn short_stream_rejected() {
        assert_eq!(
            analyze(&Bits::repeat(true, 9_999)),
            Err(TooShort { got: 9_999 })
        );
    }

    #[test]
    fn runs_score_by_hand() {
        // 0011 repeated: pi = 1/2, runs = n/2, expected n/2 -> z = 0
        let bits: Bits = (0..40_000).map(|i| i % 4 >= 2).collect();
        assert!(runs(&bits).abs() < 0.02);
    }
}
