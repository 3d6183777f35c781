//! Closed-form cost of the combinatorial rank syndrome decoding attack and
//! its Grover-accelerated variant.
//!
//! Classical cost is `(n-k)^3 m^3 q^E` with
//!
//! * `E = (w - 1) ceil((k + 1) m / n)` when `m <= n`,
//! * `E = (w - 1)(k + 1)` when `m > n`.
//!
//! Grover search over the same space halves `E` and keeps the polynomial
//! factor. Only `q = 2` is modelled. Algebraic (Groebner-basis) attacks are
//! not modelled.

use std::fmt;

use crate::error::{Error, Result};
use crate::params::ParamSet;

/// Code parameters the estimator needs. Unlike [`ParamSet`] this accepts any
/// `0 < k < n`, `w >= 1`, so weak settings can be evaluated too.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct CodeParams {
    pub m: usize,
    pub n: usize,
    pub k: usize,
    pub w: usize,
}

impl CodeParams {
    pub fn new(m: usize, n: usize, k: usize, w: usize) -> Result<Self> {
        if m == 0 || k == 0 || k >= n || w == 0 {
            return Err(Error::InvalidParams(format!(
                "estimator needs m > 0, 0 < k < n, w > 0; got m={m}, n={n}, k={k}, w={w}"
            )));
        }
        Ok(CodeParams { m, n, k, w })
    }
}

impl From<&ParamSet> for CodeParams {
    fn from(p: &ParamSet) -> Self {
        CodeParams {
            m: p.m(),
            n: p.n(),
            k: p.k(),
            w: p.w(),
        }
    }
}

/// Attack cost in log2 units.
#[derive(Clone, Copy, PartialEq, Debug)]
pub struct AttackCost {
    pub classical_log2: f64,
    pub quantum_log2: f64,
    /// Exponent `E` of `q^E` in the classical cost.
    pub exponent_bits: u64,
    /// `log2((n-k)^3 m^3)`.
    pub poly_log2: f64,
}

/// Exponent of the classical search, selected by comparing `m` and `n`.
pub fn exponent_bits(c: &CodeParams) -> u64 {
    let (m, n, k, w) = (c.m as u64, c.n as u64, c.k as u64, c.w as u64);
    if m > n {
        (w - 1) * (k + 1)
    } else {
        (w - 1) * ((k + 1) * m).div_ceil(n)
    }
}

pub fn estimate(c: &CodeParams) -> AttackCost {
    let exponent = exponent_bits(c);
    let poly_log2 = 3.0 * (((c.n - c.k) * c.m) as f64).log2();
    AttackCost {
        classical_log2: poly_log2 + exponent as f64,
        quantum_log2: poly_log2 + exponent as f64 / 2.0,
        exponent_bits: exponent,
        poly_log2,
    }
}

pub fn classical_cost(p: &ParamSet) -> AttackCost {
    estimate(&p.into())
}

/// Same figures as [`classical_cost`]; the quantum field is the one of interest.
pub fn quantum_cost(p: &ParamSet) -> AttackCost {
    estimate(&p.into())
}

#[derive(Clone, Copy, PartialEq, Debug)]
pub struct SecurityReport {
    pub code: CodeParams,
    pub lambda: usize,
    pub cost: AttackCost,
    /// `classical_log2 >= lambda`
    pub classical_pass: bool,
    /// `quantum_log2 >= lambda / 2`
    pub quantum_pass: bool,
}

impl SecurityReport {
    pub fn passes(&self) -> bool {
        self.classical_pass && self.quantum_pass
    }
}

impl fmt::Display for SecurityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = |ok: bool| if ok { "pass" } else { "FAIL" };
        let CodeParams { m, n, k, w } = self.code;
        writeln!(
            f,
            "parameters: m={m} n={n} k={k} w={w} lambda={}",
            self.lambda
        )?;
        writeln!(f, "exponent (bits): {}", self.cost.exponent_bits)?;
        writeln!(f, "polynomial factor (log2): {:.1}", self.cost.poly_log2)?;
        writeln!(
            f,
            "classical combinatorial (log2): {:.1}  [>= {}: {}]",
            self.cost.classical_log2,
            self.lambda,
            verdict(self.classical_pass)
        )?;
        writeln!(
            f,
            "quantum combinatorial (log2):   {:.1}  [>= {}: {}]",
            self.cost.quantum_log2,
            self.lambda as f64 / 2.0,
            verdict(self.quantum_pass)
        )?;
        write!(f, "algebraic attacks: not modeled")
    }
}

pub fn check_code(code: CodeParams, lambda: usize) -> SecurityReport {
    let cost = estimate(&code);
    SecurityReport {
        code,
        lambda,
        cost,
        classical_pass: cost.classical_log2 >= lambda as f64,
        quantum_pass: cost.quantum_log2 >= lambda as f64 / 2.0,
    }
}

pub fn check_security(p: &ParamSet) -> SecurityReport {
    check_code(p.into(), p.lambda())
}
