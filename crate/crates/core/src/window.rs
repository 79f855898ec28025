//! Kapranov index sets `Γ_{d,r}` and the window generators `𝕊^δ S^∨(k)`.

use crate::bundle::{BundleLabel, Side};
use crate::error::{Error, Result};
use crate::partition::Partition;

fn check_range(d: usize, r: usize) -> Result<()> {
    if r == 0 || r > d {
        return Err(Error::ParameterRange(format!("need 0 < r <= d, got d={d}, r={r}")));
    }
    Ok(())
}

/// All diagrams in the `(d−r) x r` box, by size and then decreasing lexicographic order.
pub fn gamma_set(d: usize, r: usize) -> Result<Vec<Partition>> {
    check_range(d, r)?;
    Ok(Partition::all_in_box(d - r, r))
}

/// Splits `Γ_{d,r}` into diagrams of width `< d−r` and of width exactly `d−r`.
pub fn gamma_split(d: usize, r: usize) -> Result<(Vec<Partition>, Vec<Partition>)> {
    Ok(gamma_set(d, r)?.into_iter().partition(|delta| delta.width() < d - r))
}

pub fn in_gamma(delta: &Partition, d: usize, r: usize) -> bool {
    r > 0 && r <= d && delta.fits_in(d - r, r)
}

fn check_window_range(d: usize, r: usize) -> Result<()> {
    if r == 0 || r >= d {
        return Err(Error::ParameterRange(format!(
            "windows need 0 < r < d, got d={d}, r={r}"
        )));
    }
    Ok(())
}

/// `𝕊^δ S^∨(k)` for `δ ∈ Γ_{d,r}`, in [`gamma_set`] order.
pub fn window_generators(d: usize, r: usize, k: i64) -> Result<Vec<BundleLabel>> {
    check_window_range(d, r)?;
    gamma_set(d, r)?
        .iter()
        .map(|delta| {
            BundleLabel::new(Side::S, r, delta, k)
                .ok_or_else(|| Error::Inconsistency(format!("generator {delta} vanishes")))
        })
        .collect()
}

/// Whether `label` is one of the generators of window `k`.
pub fn in_window(label: &BundleLabel, d: usize, r: usize, k: i64) -> bool {
    if label.side != Side::S || label.taut_rank != r || !label.v_shape.is_empty() || label.bracket != 0 {
        return false;
    }
    if r == 0 || r > d {
        return false;
    }
    // Unfold the twist difference back into full columns.
    let extra = label.twist - k;
    if extra < 0 {
        return false;
    }
    let delta = label.schur.add_columns(extra as usize, r);
    in_gamma(&delta, d, r)
}
