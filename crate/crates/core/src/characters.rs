//! Truncated characters in two alphabets, `V` (size `d`) and `S^∨` (size `r`), in the
//! `s_λ ⊗ s_μ` basis.
//!
//! The coordinate ring of `Hom(V, S)` has character `Σ_λ s_λ(V) ⊗ s_λ(S^∨)`. Tensoring
//! each term of a resolution with it and taking the alternating sum must reproduce the
//! character of the resolved module; [`verify_exactness`] checks this degree by degree.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::partition::{staircase, Partition};
use crate::resolution::theorem_resolution;
use crate::schur::{schur_dimension, schur_product_shared};

/// `Σ c_{λ,μ} s_λ(V) ⊗ s_μ(S^∨)` truncated to `|λ| ≤ max_degree`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SchurBivariate {
    coeffs: BTreeMap<(Partition, Partition), BigInt>,
    max_degree: usize,
    d: usize,
    r: usize,
}

impl SchurBivariate {
    pub fn new(d: usize, r: usize, max_degree: usize) -> Self {
        Self {
            coeffs: BTreeMap::new(),
            max_degree,
            d,
            r,
        }
    }

    /// Adds `c · s_λ ⊗ s_μ`; terms outside the alphabets or the truncation are dropped.
    pub fn add(&mut self, lambda: &Partition, mu: &Partition, c: impl Into<BigInt>) {
        if lambda.height() > self.d || mu.height() > self.r || lambda.size() > self.max_degree {
            return;
        }
        let c = c.into();
        if c.is_zero() {
            return;
        }
        let key = (lambda.clone(), mu.clone());
        let entry = self.coeffs.entry(key.clone()).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&key);
        }
    }

    pub fn coefficient(&self, lambda: &Partition, mu: &Partition) -> BigInt {
        self.coeffs
            .get(&(lambda.clone(), mu.clone()))
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Partition, &Partition, &BigInt)> + '_ {
        self.coeffs.iter().map(|((l, m), c)| (l, m, c))
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    /// Value with every variable set to 1: `Σ c · dim 𝕊^λ(ℂ^d) · dim 𝕊^μ(ℂ^r)`.
    pub fn specialize_to_dimension(&self) -> BigInt {
        self.iter()
            .map(|(l, m, c)| c * BigInt::from(schur_dimension(l, self.d)) * BigInt::from(schur_dimension(m, self.r)))
            .sum()
    }

    /// Coefficients where `self` and `other` differ, as `(λ, μ, self, other)`.
    pub fn diff(&self, other: &SchurBivariate) -> Vec<CoefficientDiff> {
        let mut keys: Vec<&(Partition, Partition)> = self.coeffs.keys().chain(other.coeffs.keys()).collect();
        keys.sort();
        keys.dedup();
        keys.into_iter()
            .filter_map(|(l, m)| {
                let a = self.coefficient(l, m);
                let b = other.coefficient(l, m);
                (a != b).then(|| CoefficientDiff {
                    v_shape: l.clone(),
                    s_shape: m.clone(),
                    left: a.to_string(),
                    right: b.to_string(),
                })
            })
            .collect()
    }
}

/// One disagreeing bidegree in an exactness check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoefficientDiff {
    pub v_shape: Partition,
    pub s_shape: Partition,
    pub left: String,
    pub right: String,
}

/// `Σ_{|λ| ≤ D} s_λ(V) ⊗ s_λ(S^∨)`, the truncated character of `Sym(V ⊗ S^∨)`.
pub fn cauchy_truncated(d: usize, r: usize, max_degree: usize) -> SchurBivariate {
    let mut out = SchurBivariate::new(d, r, max_degree);
    for lambda in Partition::all_up_to(max_degree, d.min(r)) {
        out.add(&lambda, &lambda, 1);
    }
    out
}

fn check_h_height(delta: &Partition, r: usize) -> Result<()> {
    if r == 0 || delta.height() > r - 1 {
        return Err(Error::HeightViolation {
            partition: delta.clone(),
            height: delta.height(),
            bound: r.saturating_sub(1),
        });
    }
    Ok(())
}

/// Character of `j_* 𝕊^δ H^∨`: `Σ_{λ, μ of height ≤ r−1} c^μ_{δλ} s_λ ⊗ s_μ`.
pub fn pushforward_character(delta: &Partition, d: usize, r: usize, max_degree: usize) -> Result<SchurBivariate> {
    check_h_height(delta, r)?;
    let n = r - 1;
    let mut out = SchurBivariate::new(d, r, max_degree);
    for lambda in Partition::all_up_to(max_degree, d.min(n)) {
        for (mu, &c) in schur_product_shared(delta, &lambda, n).iter() {
            out.add(&lambda, mu, c);
        }
    }
    Ok(out)
}

/// A free module `𝕊^{s_shape} S^∨ ⊗ 𝕊^{v_shape} V ⊗ O` entering an alternating sum with `sign`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharTerm {
    pub s_shape: Partition,
    pub v_shape: Partition,
    pub sign: i64,
}

/// The terms of the staircase resolution of `j_* 𝕊^δ H^∨`: `(δ_k, ∧^{s_k}, (−1)^k)`.
pub fn resolution_terms(delta: &Partition, d: usize, r: usize) -> Result<Vec<CharTerm>> {
    // Validates the size constraints.
    theorem_resolution(delta, d, r)?;
    let k_max = d - r + 1;
    let stairs = staircase(delta, r, k_max)?;
    Ok((0..=k_max)
        .map(|k| CharTerm {
            s_shape: stairs.shape(k).clone(),
            v_shape: Partition::column(stairs.added(k)),
            sign: if k % 2 == 0 { 1 } else { -1 },
        })
        .collect())
}

/// `Σ sign · s_{s_shape}(S^∨) s_{v_shape}(V) · Cauchy`, truncated to `V`-degree `D`.
pub fn euler_character_of_terms(terms: &[CharTerm], d: usize, r: usize, max_degree: usize) -> SchurBivariate {
    let mut out = SchurBivariate::new(d, r, max_degree);
    for term in terms {
        if term.v_shape.height() > d || term.s_shape.height() > r || term.v_shape.size() > max_degree {
            continue;
        }
        for nu in Partition::all_up_to(max_degree - term.v_shape.size(), d.min(r)) {
            let v_side = schur_product_shared(&term.v_shape, &nu, d);
            let s_side = schur_product_shared(&term.s_shape, &nu, r);
            for (lambda, &a) in v_side.iter() {
                for (mu, &b) in s_side.iter() {
                    out.add(lambda, mu, BigInt::from(term.sign) * BigInt::from(a) * BigInt::from(b));
                }
            }
        }
    }
    out
}

/// Character of the staircase resolution of `j_* 𝕊^δ H^∨`.
pub fn euler_character(delta: &Partition, d: usize, r: usize, max_degree: usize) -> Result<SchurBivariate> {
    let terms = resolution_terms(delta, d, r)?;
    Ok(euler_character_of_terms(&terms, d, r, max_degree))
}

/// Bidegrees where the resolution's character and the pushforward character disagree.
pub fn exactness_report(delta: &Partition, d: usize, r: usize, max_degree: usize) -> Result<Vec<CoefficientDiff>> {
    let euler = euler_character(delta, d, r, max_degree)?;
    let push = pushforward_character(delta, d, r, max_degree)?;
    Ok(euler.diff(&push))
}

/// Whether the staircase resolution has the character of `j_* 𝕊^δ H^∨` up to `V`-degree `D`.
pub fn verify_exactness(delta: &Partition, d: usize, r: usize, max_degree: usize) -> Result<bool> {
    Ok(exactness_report(delta, d, r, max_degree)?.is_empty())
}

/// Which invariant Hom space [`hom_invariant_dimension`] measures.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum HomCase {
    /// `Ext^0(𝕊^δ S, 𝕊^δ S)`.
    SelfMap,
    /// `Ext^0(𝕊^δ H, 𝕊^δ S)`.
    Tautological,
    /// `Ext^0(𝕊^δ H^∨, 𝕊^{ε_K} S⟨d−r⟩ ⊗ ∧^{s_K} V)^{SL(V)}`.
    Eta,
}

/// `dim (𝕊^λ V ⊗ 𝕊^κ V)^{SL(V)}`: copies of `det^m` in the product.
fn sl_invariants(lambda: &Partition, kappa: &Partition, d: usize) -> u64 {
    schur_product_shared(lambda, kappa, d)
        .iter()
        .filter(|(rho, _)| rho.is_empty() || (rho.height() == d && rho.is_rectangle_of_height(d)))
        .map(|(_, &c)| c)
        .sum()
}

/// Dimension of an invariant Hom space on the correspondence stack, by expanding
/// `Sym(V ⊗ H^∨ ⊕ H ⊗ S^∨) = ⊕_{λ,μ} 𝕊^λV ⊗ 𝕊^λH^∨ ⊗ 𝕊^μH ⊗ 𝕊^μS^∨` and pairing off
/// `GL(S)`- and `GL(H)`-representations. Terms with `|λ| > D` are dropped.
pub fn hom_invariant_dimension(case: HomCase, delta: &Partition, d: usize, r: usize, max_degree: usize) -> Result<u64> {
    if r == 0 || r > d {
        return Err(Error::ParameterRange(format!("need 0 < r <= d, got d={d}, r={r}")));
    }
    let n = r - 1;
    let lambdas = Partition::all_up_to(max_degree, d.min(n));
    let mut total: u64 = 0;
    match case {
        HomCase::SelfMap => {
            if delta.height() > r {
                return Err(Error::HeightViolation {
                    partition: delta.clone(),
                    height: delta.height(),
                    bound: r,
                });
            }
            // GL(H) pairs 𝕊^λH^∨ with 𝕊^μH only for μ = λ; GL(S) then needs 𝕊^δ ⊂ 𝕊^δ ⊗ 𝕊^λ.
            for lambda in &lambdas {
                let gl_s = schur_product_shared(delta, lambda, r).get(delta).copied().unwrap_or(0);
                total += schur_dimension(lambda, d) * gl_s;
            }
        }
        HomCase::Tautological => {
            check_h_height(delta, r)?;
            for lambda in &lambdas {
                for (mu, &gl_h) in schur_product_shared(delta, lambda, n).iter() {
                    if mu == delta {
                        total += schur_dimension(lambda, d) * gl_h;
                    }
                }
            }
        }
        HomCase::Eta => {
            if delta.height() >= r || delta.width() != d - r + 1 {
                return Err(Error::Constraint(format!(
                    "eta case needs height < {r} and width {}, got {delta}",
                    d - r + 1
                )));
            }
            let k_max = d - r + 1;
            let stairs = staircase(delta, r, k_max)?;
            let eps = stairs.shape(k_max).complement(k_max, r)?;
            let s_k = stairs.added(k_max);
            if eps.height() > n {
                return Ok(0);
            }
            // GL(S) forces μ = ε_K; GL(H) then needs 𝕊^{λ + (d−r)^n} ⊂ 𝕊^δ ⊗ 𝕊^{ε_K}.
            let products = schur_product_shared(delta, &eps, n);
            for lambda in &lambdas {
                let shifted = lambda.add_columns(d - r, n);
                let gl_h = products.get(&shifted).copied().unwrap_or(0);
                if gl_h > 0 {
                    total += gl_h * sl_invariants(lambda, &Partition::column(s_k), d);
                }
            }
        }
    }
    Ok(total)
}

impl SchurBivariate {
    /// Coefficient as a machine integer, for tests and display.
    pub fn coefficient_i64(&self, lambda: &Partition, mu: &Partition) -> i64 {
        self.coefficient(lambda, mu).to_i64().expect("coefficient fits in i64")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(rows: &[usize]) -> Partition {
        Partition::from_rows(rows)
    }

    fn from_terms(d: usize, r: usize, max: usize, terms: &[(&[usize], &[usize], i64)]) -> SchurBivariate {
        let mut out = SchurBivariate::new(d, r, max);
        for (l, m, c) in terms {
            out.add(&p(l), &p(m), *c);
        }
        out
    }

    #[test]
    fn cauchy_examples() {
        assert_eq!(
            cauchy_truncated(2, 2, 1),
            from_terms(2, 2, 1, &[(&[], &[], 1), (&[1], &[1], 1)])
        );
        assert_eq!(
            cauchy_truncated(4, 2, 2),
            from_terms(
                4,
                2,
                2,
                &[(&[], &[], 1), (&[1], &[1], 1), (&[2], &[2], 1), (&[1, 1], &[1, 1], 1)]
            )
        );
        assert_eq!(
            cauchy_truncated(3, 1, 2),
            from_terms(3, 1, 2, &[(&[], &[], 1), (&[1], &[1], 1), (&[2], &[2], 1)])
        );
    }

    #[test]
    fn pushforward_examples() {
        assert_eq!(
            pushforward_character(&p(&[]), 3, 1, 4).unwrap(),
            from_terms(3, 1, 4, &[(&[], &[], 1)])
        );
        assert_eq!(
            pushforward_character(&p(&[1]), 2, 2, 2).unwrap(),
            from_terms(2, 2, 2, &[(&[], &[1], 1), (&[1], &[2], 1), (&[2], &[3], 1)])
        );
        assert_eq!(
            pushforward_character(&p(&[2]), 4, 2, 1).unwrap(),
            from_terms(4, 2, 1, &[(&[], &[2], 1), (&[1], &[3], 1)])
        );
        assert!(pushforward_character(&p(&[1, 1]), 4, 2, 1).is_err());
    }

    #[test]
    fn euler_examples() {
        assert_eq!(
            euler_character(&p(&[]), 2, 1, 3).unwrap(),
            from_terms(2, 1, 3, &[(&[], &[], 1)])
        );
        let e = euler_character(&p(&[1]), 2, 2, 2).unwrap();
        assert_eq!(e.coefficient_i64(&p(&[1]), &p(&[2])), 1);
        let e = euler_character(&p(&[2]), 4, 2, 2).unwrap();
        assert_eq!(e.coefficient_i64(&p(&[2]), &p(&[4])), 1);
        assert_eq!(e.coefficient_i64(&p(&[2]), &p(&[3, 1])), 0);
    }

    #[test]
    fn exactness_and_tampering() {
        assert!(verify_exactness(&p(&[]), 2, 1, 5).unwrap());
        assert!(verify_exactness(&p(&[]), 4, 2, 5).unwrap());
        assert!(verify_exactness(&p(&[1]), 4, 2, 5).unwrap());
        let mut terms = resolution_terms(&p(&[]), 4, 2).unwrap();
        let s2 = terms[2].v_shape.height();
        terms[2].v_shape = Partition::column(s2 + 1);
        let tampered = euler_character_of_terms(&terms, 4, 2, 5);
        assert_ne!(tampered, pushforward_character(&p(&[]), 4, 2, 5).unwrap());
    }

    #[test]
    fn hom_examples() {
        assert_eq!(
            hom_invariant_dimension(HomCase::SelfMap, &p(&[2, 1]), 4, 2, 12).unwrap(),
            1
        );
        assert_eq!(
            hom_invariant_dimension(HomCase::Tautological, &p(&[1]), 3, 2, 10).unwrap(),
            1
        );
        assert_eq!(hom_invariant_dimension(HomCase::Eta, &p(&[2, 2]), 4, 3, 14).unwrap(), 1);
        assert!(hom_invariant_dimension(HomCase::Eta, &p(&[1]), 4, 3, 6).is_err());
        assert!(hom_invariant_dimension(HomCase::Tautological, &p(&[1, 1]), 4, 2, 6).is_err());
    }
}
