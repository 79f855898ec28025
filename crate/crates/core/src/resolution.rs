//! Locally-free resolutions of `j_* 𝕊^δ H^∨` built from the staircase sequence,
//! their adjoint-twisted form, and push-downs along `π`.

use serde::Serialize;

use crate::bundle::{BundleLabel, GradedComplex, Side, StackParams};
use crate::error::{Error, Result};
use crate::partition::{staircase, Partition, Staircase, Strip};
use crate::schur::pieri_filtration;
use crate::window::gamma_split;

/// Symbolic name for the torsion sheaf `j_* 𝕊^δ H^∨` resolved by a [`Resolution`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CokernelTag {
    pub schur: Partition,
    pub h_rank: usize,
}

impl std::fmt::Display for CokernelTag {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.schur.is_empty() {
            write!(f, "j_*O")
        } else {
            write!(f, "j_*Schur^{} H^v", self.schur)
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Resolution {
    /// Term `k` of the staircase sits in degree `−k`.
    pub complex: GradedComplex,
    pub cokernel: CokernelTag,
    pub staircase: Staircase,
}

fn check_resolution_shape(delta: &Partition, d: usize, r: usize) -> Result<StackParams> {
    let params = StackParams::new(d, r)?;
    if delta.height() >= r {
        return Err(Error::HeightViolation {
            partition: delta.clone(),
            height: delta.height(),
            bound: r - 1,
        });
    }
    if delta.width() > d - r + 1 {
        return Err(Error::WidthViolation {
            partition: delta.clone(),
            width: delta.width(),
            bound: d - r + 1,
        });
    }
    Ok(params)
}

/// `0 → 𝕊^{δ_K}S^∨ ⊗ ∧^{s_K}V → … → 𝕊^{δ_1}S^∨ ⊗ ∧^{s_1}V → 𝕊^δ S^∨ → j_*𝕊^δ H^∨ → 0`
/// with `K = d − r + 1`. The `∧^d V` factor is kept as is.
pub fn theorem_resolution(delta: &Partition, d: usize, r: usize) -> Result<Resolution> {
    check_resolution_shape(delta, d, r)?;
    let k_max = d - r + 1;
    let stairs = staircase(delta, r, k_max)?;
    let mut complex = GradedComplex::new();
    for k in 0..=k_max {
        let label = BundleLabel::s(r, stairs.shape(k), 0).map(|l| l.with_exterior(stairs.added(k)));
        complex.push_opt(-(k as i64), label, 1)?;
    }
    Ok(Resolution {
        complex,
        cokernel: CokernelTag {
            schur: delta.clone(),
            h_rank: r - 1,
        },
        staircase: stairs,
    })
}

/// Resolves `𝕊^{δ_target} S^∨` on the unstable side by twisting the resolution of
/// `strip(δ_target, first row)` by `O(−1)` and dropping its input-cancelling leftmost term.
/// The remaining `K` terms are placed in degrees `0..K` from left to right.
pub fn unstable_resolution_twisted(delta_target: &Partition, d: usize, r: usize) -> Result<GradedComplex> {
    let (_, wide) = gamma_split(d, r)?;
    if !wide.contains(delta_target) {
        return Err(Error::Constraint(format!(
            "{delta_target} must have width d-r = {} and fit in the {}x{r} box",
            d - r,
            d - r
        )));
    }
    let seed = delta_target.strip(Strip::FirstRow);
    let res = theorem_resolution(&seed, d, r)?;
    let k_max = d - r + 1;
    let leftmost =
        BundleLabel::s(r, res.staircase.shape(k_max), 0).map(|l| l.with_exterior(res.staircase.added(k_max)));
    let expected = BundleLabel::s(r, delta_target, 1).map(|l| l.with_exterior(d));
    if leftmost.is_none() || leftmost != expected {
        return Err(Error::Inconsistency(format!(
            "leftmost term {leftmost:?} of the resolution of {seed} does not cancel {expected:?}"
        )));
    }
    let mut out = GradedComplex::new();
    for k in 0..k_max {
        let label = BundleLabel::s(r, res.staircase.shape(k), -1).map(|l| l.with_exterior(res.staircase.added(k)));
        out.push_opt((k_max - 1 - k) as i64, label, 1)?;
    }
    Ok(out.trivialize_det_v(d))
}

/// `j^! j_* 𝕊^δ H^∨` as the complex with `𝕊^{ε_k} S ⟨d−r⟩ ⊗ ∧^{s_k} V` in degree `K − k`,
/// where `ε_k = comp_{d−r+1, r}(δ_k)`. Labels are `S`-side with a bracket twist.
pub fn jshriek_jlower(delta: &Partition, d: usize, r: usize) -> Result<GradedComplex> {
    check_resolution_shape(delta, d, r)?;
    let k_max = d - r + 1;
    let stairs = staircase(delta, r, k_max)?;
    let mut out = GradedComplex::new();
    for k in 0..=k_max {
        let eps = stairs.shape(k).complement(k_max, r)?;
        let label = BundleLabel::from_nondual(Side::S, r, &eps, 0)
            .map(|l| l.with_bracket((d - r) as i64).with_exterior(stairs.added(k)));
        out.push_opt((k_max - k) as i64, label, 1)?;
    }
    Ok(out)
}

/// The `ε_k = comp_{d−r+1, r}(δ_k)` sequence for `k = 0..=K`.
pub fn dual_staircase(delta: &Partition, d: usize, r: usize) -> Result<Vec<Partition>> {
    check_resolution_shape(delta, d, r)?;
    let k_max = d - r + 1;
    let stairs = staircase(delta, r, k_max)?;
    (0..=k_max).map(|k| stairs.shape(k).complement(k_max, r)).collect()
}

/// Where `π_*` is computed: the whole stack `𝒬`, or the open Grassmannian `Q`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Locus {
    Stack,
    Open,
}

fn check_pushdown(gamma: &Partition, d: usize, r: usize) -> Result<StackParams> {
    let params = StackParams::new(d, r)?;
    if gamma.height() > r {
        return Err(Error::HeightViolation {
            partition: gamma.clone(),
            height: gamma.height(),
            bound: r,
        });
    }
    if gamma.width() > d - r + 1 {
        return Err(Error::WidthViolation {
            partition: gamma.clone(),
            width: gamma.width(),
            bound: d - r + 1,
        });
    }
    Ok(params)
}

/// `π_* 𝕊^γ S` in closed form, as `H`-side labels.
pub fn pushdown_pi(gamma: &Partition, d: usize, r: usize, locus: Locus) -> Result<GradedComplex> {
    let params = check_pushdown(gamma, d, r)?;
    let n = params.h_rank();
    let mut out = GradedComplex::new();
    out.push_opt(0, BundleLabel::from_nondual(Side::H, n, gamma, 0), 1)?;
    if locus == Locus::Open && gamma.width() == d - r + 1 {
        let tilde = gamma.strip(Strip::FirstRow);
        out.push_opt((d - r) as i64, BundleLabel::from_nondual(Side::H, n, &tilde, 1), 1)?;
    }
    Ok(out)
}

/// `π_* 𝕊^γ S` by pushing down each graded piece `𝕊^α H ⊗ L^t` of the filtration.
pub fn pushdown_pi_bruteforce(gamma: &Partition, d: usize, r: usize, locus: Locus) -> Result<GradedComplex> {
    let params = check_pushdown(gamma, d, r)?;
    let n = params.h_rank();
    let top = d - r + 1;
    let mut out = GradedComplex::new();
    for ((alpha, t), mult) in pieri_filtration(gamma, n)? {
        match (locus, t) {
            (_, 0) => out.push_opt(0, BundleLabel::from_nondual(Side::H, n, &alpha, 0), mult)?,
            (Locus::Stack, _) => {}
            (Locus::Open, t) if t < top => {}
            (Locus::Open, t) if t == top => {
                out.push_opt((d - r) as i64, BundleLabel::from_nondual(Side::H, n, &alpha, 1), mult)?
            }
            (Locus::Open, t) => {
                return Err(Error::Inconsistency(format!("piece L^{t} exceeds the width bound")));
            }
        }
    }
    Ok(out)
}
