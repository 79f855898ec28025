//! Symbolic equivariant bundles `𝕊^δ(taut)^∨ ⊗ O(k) ⊗ 𝕊^λV` and graded complexes of them.
//!
//! Labels are always kept in canonical form: full-height columns of the Schur
//! partition are folded into the determinant twist, so two labels denote the
//! same bundle exactly when they are equal.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::schur::schur_dimension;

/// Which tautological bundle a label is built from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Side {
    /// The rank-`r` bundle `S`; twists are `O(k) = (det S^∨)^k`.
    S,
    /// The rank-`(r-1)` bundle `H`; twists are `O⟨k⟩ = (det H^∨)^k`.
    H,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct StackParams {
    pub d: usize,
    pub r: usize,
}

impl StackParams {
    pub fn new(d: usize, r: usize) -> Result<Self> {
        if r == 0 || r > d {
            return Err(Error::ParameterRange(format!("need 0 < r <= d, got d={d}, r={r}")));
        }
        Ok(Self { d, r })
    }

    /// Rank of `H`.
    pub fn h_rank(&self) -> usize {
        self.r - 1
    }

    /// `σ = 2(d − r) + 1`, the relative dimension difference of the correspondence maps.
    pub fn sigma(&self) -> usize {
        2 * (self.d - self.r) + 1
    }
}

/// Canonical `(schur, twist)` for `𝕊^schur(taut)^∨ ⊗ (det taut^∨)^twist`, or `None`
/// when the Schur functor vanishes on a bundle of rank `taut_rank`.
pub fn normalize(schur: &Partition, twist: i64, taut_rank: usize) -> Option<(Partition, i64)> {
    if schur.height() > taut_rank {
        return None;
    }
    if taut_rank == 0 {
        // Only the trivial bundle lives on a rank-0 bundle, and its determinant is trivial.
        return Some((Partition::empty(), 0));
    }
    let folds = if schur.height() == taut_rank {
        schur.row(taut_rank - 1)
    } else {
        0
    };
    Some((schur.remove_columns(folds), twist + folds as i64))
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct BundleLabel {
    pub schur: Partition,
    pub twist: i64,
    pub side: Side,
    pub taut_rank: usize,
    pub v_shape: Partition,
    /// `O⟨k⟩` factor carried by `S`-side labels on the correspondence stack.
    #[serde(default, skip_serializing_if = "is_zero")]
    pub bracket: i64,
}

fn is_zero(v: &i64) -> bool {
    *v == 0
}

impl BundleLabel {
    /// `𝕊^schur(taut)^∨ ⊗ O(twist)`, normalized; `None` if the bundle is zero.
    pub fn new(side: Side, taut_rank: usize, schur: &Partition, twist: i64) -> Option<Self> {
        let (schur, twist) = normalize(schur, twist, taut_rank)?;
        Some(Self {
            schur,
            twist,
            side,
            taut_rank,
            v_shape: Partition::empty(),
            bracket: 0,
        })
    }

    pub fn s(taut_rank: usize, schur: &Partition, twist: i64) -> Option<Self> {
        Self::new(Side::S, taut_rank, schur, twist)
    }

    pub fn h(taut_rank: usize, schur: &Partition, twist: i64) -> Option<Self> {
        Self::new(Side::H, taut_rank, schur, twist)
    }

    /// The line bundle `O(k)` (or `O⟨k⟩`).
    pub fn line(side: Side, taut_rank: usize, twist: i64) -> Self {
        Self::new(side, taut_rank, &Partition::empty(), twist).expect("line bundles never vanish")
    }

    /// `𝕊^γ(taut) ⊗ O(twist)` for the non-dual bundle, via
    /// `𝕊^γ T = 𝕊^{comp_{w,rank}(γ)} T^∨ ⊗ (det T^∨)^{−w}` with `w = width(γ)`.
    pub fn from_nondual(side: Side, taut_rank: usize, gamma: &Partition, twist: i64) -> Option<Self> {
        if gamma.height() > taut_rank {
            return None;
        }
        let w = gamma.width();
        let dual = gamma.complement(w, taut_rank).expect("γ fits by the height check");
        Self::new(side, taut_rank, &dual, twist - w as i64)
    }

    /// Inverse of [`BundleLabel::from_nondual`]: `(γ, k)` with the label equal to `𝕊^γ(taut) ⊗ O(k)`.
    pub fn to_nondual(&self) -> (Partition, i64) {
        let w = self.schur.width();
        let gamma = self
            .schur
            .complement(w, self.taut_rank)
            .expect("canonical labels fit their rank");
        (gamma, self.twist + w as i64)
    }

    pub fn with_v_shape(mut self, v_shape: Partition) -> Self {
        self.v_shape = v_shape;
        self
    }

    /// Tensors with `∧^s V`.
    pub fn with_exterior(self, s: usize) -> Self {
        self.with_v_shape(Partition::column(s))
    }

    /// Tensors with `O⟨k⟩`; a rank-0 `H` makes this trivial.
    pub fn with_bracket(mut self, k: i64) -> Self {
        self.bracket = if self.side == Side::S && self.taut_rank <= 1 {
            0
        } else {
            k
        };
        self
    }

    pub fn is_normalized(&self) -> bool {
        normalize(&self.schur, self.twist, self.taut_rank) == Some((self.schur.clone(), self.twist))
            && !(self.side == Side::S && self.taut_rank <= 1 && self.bracket != 0)
    }

    /// Tensors with `O(m)`; degrees and Schur data are untouched.
    pub fn twisted(&self, m: i64) -> Self {
        let mut out = self.clone();
        out.twist += m;
        if out.taut_rank == 0 {
            out.twist = 0;
        }
        out
    }

    /// Reads an `H`-side label on `𝒴 = 𝔛^{(d, n)}` in the `S`-side alphabet: `H ↦ S`, `O⟨k⟩ ↦ O(k)`.
    pub fn relabel_to_x(&self) -> Result<Self> {
        if self.side != Side::H {
            return Err(Error::SideMismatch(format!(
                "relabel_to_x expects an H-side label, got {self}"
            )));
        }
        let mut out = self.clone();
        out.side = Side::S;
        Ok(out)
    }

    /// Drops full columns of height `d` from the `V` factor (`det V` is trivialized).
    /// Returns `None` when the `V` factor vanishes.
    pub fn trivialize_det_v(&self, d: usize) -> Option<Self> {
        if self.v_shape.height() > d {
            return None;
        }
        let folds = if self.v_shape.height() == d && d > 0 {
            self.v_shape.row(d - 1)
        } else {
            0
        };
        let mut out = self.clone();
        out.v_shape = self.v_shape.remove_columns(folds);
        Some(out)
    }

    /// If the `V` factor is an exterior power `∧^s V`, returns `s`.
    pub fn exterior_degree(&self) -> Option<usize> {
        (self.v_shape.width() <= 1).then(|| self.v_shape.height())
    }

    /// Rank over the generic point: `dim 𝕊^schur(ℂ^rank) · dim 𝕊^{v_shape}(ℂ^d)`.
    pub fn rank(&self, params: &StackParams) -> u64 {
        schur_dimension(&self.schur, self.taut_rank) * schur_dimension(&self.v_shape, params.d)
    }

    /// The bundle part without the `V` factor, e.g. `Sym^2 S^v(1)`.
    pub fn base_name(&self) -> String {
        let t = match self.side {
            Side::S => "S",
            Side::H => "H",
        };
        let schur = &self.schur;
        let mut out = if schur.is_empty() {
            "O".to_string()
        } else if *schur == Partition::row_of(1) {
            format!("{t}^v")
        } else if schur.height() == 1 {
            format!("Sym^{} {t}^v", schur.width())
        } else if schur.width() == 1 {
            format!("Wedge^{} {t}^v", schur.height())
        } else {
            format!("Schur^{schur} {t}^v")
        };
        if self.twist != 0 {
            match self.side {
                Side::S => out.push_str(&format!("({})", self.twist)),
                Side::H => out.push_str(&format!("<{}>", self.twist)),
            }
        }
        if self.bracket != 0 {
            out.push_str(&format!("<{}>", self.bracket));
        }
        out
    }

    /// The `V` factor, e.g. `Wedge^3 V`, or `None` when trivial.
    pub fn v_name(&self) -> Option<String> {
        let v = &self.v_shape;
        if v.is_empty() {
            None
        } else if *v == Partition::column(1) {
            Some("V".to_string())
        } else if v.width() == 1 {
            Some(format!("Wedge^{} V", v.height()))
        } else if v.height() == 1 {
            Some(format!("Sym^{} V", v.width()))
        } else {
            Some(format!("Schur^{v} V"))
        }
    }
}

impl fmt::Display for BundleLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.base_name())?;
        if let Some(v) = self.v_name() {
            write!(f, " x {v}")?;
        }
        Ok(())
    }
}

/// A finite map from degree to a multiset of canonical labels. No differentials.
///
/// In displayed complexes degree increases to the right and degree 0 is the
/// underlined term.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct GradedComplex {
    terms: BTreeMap<i64, BTreeMap<BundleLabel, u64>>,
}

impl GradedComplex {
    pub fn new() -> Self {
        Self::default()
    }

    /// A single label in degree 0.
    pub fn single(label: BundleLabel) -> Self {
        let mut c = Self::new();
        c.push(0, label, 1).expect("single label is consistent");
        c
    }

    pub fn push(&mut self, degree: i64, label: BundleLabel, multiplicity: u64) -> Result<()> {
        if !label.is_normalized() {
            return Err(Error::Inconsistency(format!(
                "label {label:?} is not in canonical form"
            )));
        }
        if let Some(existing) = self.labels().next() {
            if existing.taut_rank != label.taut_rank {
                return Err(Error::SideMismatch(format!(
                    "complex mixes tautological ranks {} and {}",
                    existing.taut_rank, label.taut_rank
                )));
            }
        }
        if multiplicity == 0 {
            return Ok(());
        }
        *self.terms.entry(degree).or_default().entry(label).or_insert(0) += multiplicity;
        Ok(())
    }

    /// Like [`GradedComplex::push`] but ignores zero bundles.
    pub fn push_opt(&mut self, degree: i64, label: Option<BundleLabel>, multiplicity: u64) -> Result<()> {
        match label {
            Some(l) => self.push(degree, l, multiplicity),
            None => Ok(()),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degrees(&self) -> impl Iterator<Item = i64> + '_ {
        self.terms.keys().copied()
    }

    pub fn at(&self, degree: i64) -> Option<&BTreeMap<BundleLabel, u64>> {
        self.terms.get(&degree)
    }

    /// `(degree, label, multiplicity)` in ascending degree.
    pub fn iter(&self) -> impl Iterator<Item = (i64, &BundleLabel, u64)> + '_ {
        self.terms
            .iter()
            .flat_map(|(&deg, m)| m.iter().map(move |(l, &c)| (deg, l, c)))
    }

    pub fn labels(&self) -> impl Iterator<Item = &BundleLabel> + '_ {
        self.terms.values().flat_map(|m| m.keys())
    }

    /// Number of distinct `(degree, label)` terms.
    pub fn len(&self) -> usize {
        self.terms.values().map(|m| m.len()).sum()
    }

    fn map_labels(&self, f: impl Fn(&BundleLabel) -> Option<BundleLabel>) -> Result<Self> {
        let mut out = Self::new();
        for (deg, label, mult) in self.iter() {
            out.push_opt(deg, f(label), mult)?;
        }
        Ok(out)
    }

    /// Tensors every term with `O(m)`.
    pub fn tensor_twist(&self, m: i64) -> Self {
        self.map_labels(|l| Some(l.twisted(m)))
            .expect("twisting keeps labels canonical")
    }

    /// Applies [`BundleLabel::trivialize_det_v`] to every term.
    pub fn trivialize_det_v(&self, d: usize) -> Self {
        self.map_labels(|l| l.trivialize_det_v(d))
            .expect("trivializing keeps labels canonical")
    }

    pub fn relabel_to_x(&self) -> Result<Self> {
        let mut out = Self::new();
        for (deg, label, mult) in self.iter() {
            out.push(deg, label.relabel_to_x()?, mult)?;
        }
        Ok(out)
    }

    /// Shifts every term from degree `k` to degree `k + by`.
    pub fn shifted(&self, by: i64) -> Self {
        Self {
            terms: self.terms.iter().map(|(&k, m)| (k + by, m.clone())).collect(),
        }
    }

    /// `Σ (−1)^deg · multiplicity · rank`.
    pub fn alternating_rank(&self, params: &StackParams) -> i64 {
        self.iter()
            .map(|(deg, label, mult)| {
                let sign = if deg.rem_euclid(2) == 0 { 1 } else { -1 };
                sign * (mult * label.rank(params)) as i64
            })
            .sum()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_entries()).expect("complexes serialize")
    }

    pub fn to_json_pretty(&self) -> String {
        serde_json::to_string_pretty(&self.to_entries()).expect("complexes serialize")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let entries: Vec<DegreeEntry> =
            serde_json::from_str(s).map_err(|e| Error::Constraint(format!("invalid complex JSON: {e}")))?;
        Self::from_entries(entries)
    }

    pub fn to_entries(&self) -> Vec<DegreeEntry> {
        self.terms
            .iter()
            .map(|(&degree, m)| DegreeEntry {
                degree,
                terms: m
                    .iter()
                    .map(|(label, &multiplicity)| TermEntry {
                        label: label.clone(),
                        multiplicity,
                    })
                    .collect(),
            })
            .collect()
    }

    pub fn from_entries(entries: Vec<DegreeEntry>) -> Result<Self> {
        let mut out = Self::new();
        for entry in entries {
            for term in entry.terms {
                out.push(entry.degree, term.label, term.multiplicity)?;
            }
        }
        Ok(out)
    }
}

/// JSON form of one degree: `{"degree": n, "terms": [{<label fields>, "multiplicity": m}]}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct DegreeEntry {
    pub degree: i64,
    pub terms: Vec<TermEntry>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TermEntry {
    #[serde(flatten)]
    pub label: BundleLabel,
    pub multiplicity: u64,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(rows: &[usize]) -> Partition {
        Partition::from_rows(rows)
    }

    #[test]
    fn normalize_examples() {
        assert_eq!(normalize(&p(&[1, 1]), 0, 2), Some((p(&[]), 1)));
        assert_eq!(normalize(&p(&[3, 1]), -1, 2), Some((p(&[2]), 0)));
        assert_eq!(normalize(&p(&[2, 2]), -1, 2), Some((p(&[]), 1)));
        assert_eq!(normalize(&p(&[1, 1, 1]), 0, 2), None);
        assert_eq!(normalize(&p(&[]), 5, 0), Some((p(&[]), 0)));
    }

    #[test]
    fn dual_conversion() {
        let l = BundleLabel::from_nondual(Side::S, 2, &p(&[2, 1]), 0).unwrap();
        assert_eq!(l, BundleLabel::s(2, &p(&[1]), -2).unwrap());
        let params = StackParams::new(4, 2).unwrap();
        assert_eq!(l.rank(&params), 2);
        // 𝕊^{(2,1)}S = S ⊗ det S on rank 2, so the non-dual form folds a column too.
        assert_eq!(l.to_nondual(), (p(&[1]), -1));
        let (gamma, k) = l.to_nondual();
        assert_eq!(BundleLabel::from_nondual(Side::S, 2, &gamma, k).unwrap(), l);
    }

    #[test]
    fn rank_examples() {
        let params = StackParams::new(4, 2).unwrap();
        let l = BundleLabel::s(2, &p(&[1]), 0).unwrap().with_exterior(3);
        assert_eq!(l.rank(&params), 8);
        assert_eq!(BundleLabel::line(Side::S, 2, 7).rank(&params), 1);
        assert_eq!(BundleLabel::s(2, &p(&[2]), -1).unwrap().rank(&params), 3);
    }

    #[test]
    fn relabel_examples() {
        let h = BundleLabel::h(2, &p(&[1]), -1).unwrap();
        assert_eq!(h.relabel_to_x().unwrap(), BundleLabel::s(2, &p(&[1]), -1).unwrap());
        let o = BundleLabel::line(Side::H, 2, 0);
        assert_eq!(o.relabel_to_x().unwrap(), BundleLabel::line(Side::S, 2, 0));
        let folded = BundleLabel::h(2, &p(&[2, 2]), -1).unwrap();
        assert_eq!(folded.relabel_to_x().unwrap(), BundleLabel::line(Side::S, 2, 1));
        assert!(BundleLabel::line(Side::S, 2, 0).relabel_to_x().is_err());
    }

    #[test]
    fn det_v_trivialization() {
        let l = BundleLabel::line(Side::S, 2, 0).with_exterior(4);
        assert_eq!(l.trivialize_det_v(4).unwrap().v_shape, p(&[]));
        assert_eq!(l.trivialize_det_v(5).unwrap().v_shape, p(&[1, 1, 1, 1]));
        assert_eq!(l.trivialize_det_v(3), None);
    }

    #[test]
    fn complex_is_a_multiset() {
        let a = BundleLabel::line(Side::S, 1, 1).with_exterior(1);
        let b = BundleLabel::line(Side::S, 1, 0);
        let mut x = GradedComplex::new();
        x.push(0, a.clone(), 1).unwrap();
        x.push(1, b.clone(), 1).unwrap();
        x.push(0, a.clone(), 1).unwrap();
        let mut y = GradedComplex::new();
        y.push(1, b, 1).unwrap();
        y.push(0, a, 2).unwrap();
        assert_eq!(x, y);
        assert!(x.push(0, BundleLabel::line(Side::S, 2, 0), 1).is_err());
    }

    #[test]
    fn json_round_trip() {
        let mut c = GradedComplex::new();
        c.push(0, BundleLabel::s(2, &p(&[1]), 0).unwrap().with_exterior(3), 1)
            .unwrap();
        c.push(2, BundleLabel::line(Side::S, 2, -1), 1).unwrap();
        let json = c.to_json();
        assert_eq!(
            json,
            r#"[{"degree":0,"terms":[{"schur":[1],"twist":0,"side":"S","taut_rank":2,"v_shape":[1,1,1],"multiplicity":1}]},{"degree":2,"terms":[{"schur":[],"twist":-1,"side":"S","taut_rank":2,"v_shape":[],"multiplicity":1}]}]"#
        );
        let back = GradedComplex::from_json(&json).unwrap();
        assert_eq!(back, c);
        assert_eq!(back.to_json(), json);
    }

    #[test]
    fn rejects_non_canonical_json() {
        let json = r#"[{"degree":0,"terms":[{"schur":[1,1],"twist":0,"side":"S","taut_rank":2,"v_shape":[],"multiplicity":1}]}]"#;
        assert!(GradedComplex::from_json(json).is_err());
    }

    #[test]
    fn display_names() {
        assert_eq!(BundleLabel::s(2, &p(&[2]), 0).unwrap().to_string(), "Sym^2 S^v");
        assert_eq!(
            BundleLabel::s(2, &p(&[1]), 1).unwrap().with_exterior(3).to_string(),
            "S^v(1) x Wedge^3 V"
        );
        assert_eq!(BundleLabel::line(Side::H, 2, -1).to_string(), "O<-1>");
    }
}
