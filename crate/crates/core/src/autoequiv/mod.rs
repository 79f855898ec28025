//! Window-shift functors evaluated on window generators.
//!
//! `ω_{0,1}` is the twist: it moves generators of `𝒲_1` into `𝒲_0`. `ω_{−1,0}` is the
//! shifted inverse cotwist on `X^{(d,n)}`: it moves generators of `𝒱_0` into `𝒱_{−1}`.

mod ktheory;

pub use ktheory::{
    determinant, fixed_points, identity_matrix, is_unimodular, k_class, k_matrix, k_matrix_in_window, matrix_inverse,
    matrix_mul, schur_polynomial, twist_line_matrix, FixedPointVector, LocalizationParams, Matrix, WindowFunctor,
};

use crate::bundle::{BundleLabel, GradedComplex, Side};
use crate::error::{Error, Result};
use crate::partition::{staircase, Partition, Strip};
use crate::window::in_gamma;

fn check_generator(delta: &Partition, d: usize, r: usize) -> Result<()> {
    if r == 0 || r >= d {
        return Err(Error::ParameterRange(format!(
            "window shifts need 0 < r < d, got d={d}, r={r}"
        )));
    }
    if !in_gamma(delta, d, r) {
        return Err(Error::NotInWindow {
            partition: delta.clone(),
            d,
            r,
        });
    }
    Ok(())
}

/// `ω_{0,1}(𝕊^δ S^∨(1))`, a complex of generators of `𝒲_0`.
pub fn twist_on_generator(delta: &Partition, d: usize, r: usize) -> Result<GradedComplex> {
    check_generator(delta, d, r)?;
    if delta.width() < d - r {
        let fixed = BundleLabel::s(r, delta, 1).expect("generators are non-zero");
        return Ok(GradedComplex::single(fixed));
    }
    let hat = delta.strip(Strip::FirstRow);
    let k_max = d - r + 1;
    let stairs = staircase(&hat, r, k_max)?;
    let mut out = GradedComplex::new();
    for k in 0..k_max {
        let label = BundleLabel::s(r, stairs.shape(k), 0).map(|l| l.with_exterior(stairs.added(k)));
        out.push_opt((k_max - 1 - k) as i64, label, 1)?;
    }
    Ok(out.trivialize_det_v(d))
}

/// `ω_{−1,0}(𝕊^δ(taut)^∨)` on `X^{(d,n)}`, a complex of generators of `𝒱_{−1}`.
pub fn cotwist_on_generator(delta: &Partition, d: usize, n: usize) -> Result<GradedComplex> {
    check_generator(delta, d, n)?;
    if delta.width() < d - n {
        let fixed = BundleLabel::s(n, delta, 0).expect("generators are non-zero");
        return Ok(GradedComplex::single(fixed));
    }
    let k_max = d - n;
    let stairs = staircase(delta, n + 1, k_max)?;
    let mut out = GradedComplex::new();
    for k in 0..=k_max {
        let hat = stairs.shape(k).strip(Strip::FirstRow);
        let label = BundleLabel::new(Side::H, n, &hat, -1).map(|l| l.with_exterior(stairs.added(k)));
        out.push_opt((k_max - k) as i64, label, 1)?;
    }
    Ok(out.relabel_to_x()?.trivialize_det_v(d))
}

/// Tensors every term with `O(m)`.
pub fn tensor_twist(complex: &GradedComplex, m: i64) -> GradedComplex {
    complex.tensor_twist(m)
}
