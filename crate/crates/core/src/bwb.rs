//! The ρ-shifted Weyl group action on `GL(r)` weights and Borel–Weil–Bott classification.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::partition::Partition;

/// An integral `GL(r)` weight; entries need not be non-increasing.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Weight(pub Vec<i64>);

/// A permutation in one-line notation: position `i` is sent to position `self.0[i]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Permutation(pub Vec<usize>);

impl Permutation {
    pub fn identity(r: usize) -> Self {
        Self((0..r).collect())
    }

    /// Swaps positions `i` and `j` (0-based).
    pub fn transposition(r: usize, i: usize, j: usize) -> Self {
        let mut w: Vec<usize> = (0..r).collect();
        w.swap(i, j);
        Self(w)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `(self ∘ other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation(other.0.iter().map(|&i| self.0[i]).collect())
    }

    /// Coxeter length, i.e. the number of inversions.
    pub fn length(&self) -> usize {
        let w = &self.0;
        (0..w.len())
            .flat_map(|i| (i + 1..w.len()).map(move |j| (i, j)))
            .filter(|&(i, j)| w[i] > w[j])
            .count()
    }

    /// Moves entry `i` of `x` to position `self(i)`.
    pub fn permute(&self, x: &[i64]) -> Vec<i64> {
        let mut out = vec![0; x.len()];
        for (i, &v) in x.iter().enumerate() {
            out[self.0[i]] = v;
        }
        out
    }

    /// All permutations of `r` letters, in lexicographic order.
    pub fn all(r: usize) -> Vec<Permutation> {
        fn rec(cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Permutation>) {
            if cur.len() == used.len() {
                out.push(Permutation(cur.clone()));
                return;
            }
            for i in 0..used.len() {
                if !used[i] {
                    used[i] = true;
                    cur.push(i);
                    rec(cur, used, out);
                    cur.pop();
                    used[i] = false;
                }
            }
        }
        let mut out = Vec::new();
        rec(&mut Vec::new(), &mut vec![false; r], &mut out);
        out
    }
}

impl Weight {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_dominant(&self) -> bool {
        self.0.windows(2).all(|w| w[0] >= w[1])
    }

    fn rho(r: usize) -> impl Iterator<Item = i64> {
        (1..=r as i64).rev()
    }

    pub fn plus_rho(&self) -> Vec<i64> {
        self.0.iter().zip(Self::rho(self.len())).map(|(a, p)| a + p).collect()
    }
}

/// `w • α = w(α + ρ) − ρ` with `ρ = (r, …, 2, 1)`.
pub fn twisted_action(w: &Permutation, alpha: &Weight) -> Result<Weight> {
    if w.len() != alpha.len() {
        return Err(Error::LengthMismatch {
            expected: alpha.len(),
            got: w.len(),
        });
    }
    let moved = w.permute(&alpha.plus_rho());
    let r = alpha.len();
    Ok(Weight(
        moved.into_iter().zip(Weight::rho(r)).map(|(a, p)| a - p).collect(),
    ))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum BwbClass {
    Dominant,
    Regular {
        w: Permutation,
        length: usize,
        dominant_rep: Weight,
    },
    NonRegular,
}

/// Classifies `α` by whether `α + ρ` has repeated entries and, if not, which
/// permutation sorts it into strictly decreasing order.
pub fn classify(alpha: &Weight) -> BwbClass {
    if alpha.is_dominant() {
        return BwbClass::Dominant;
    }
    let shifted = alpha.plus_rho();
    let mut order: Vec<usize> = (0..shifted.len()).collect();
    order.sort_by(|&a, &b| shifted[b].cmp(&shifted[a]));
    if order.windows(2).any(|p| shifted[p[0]] == shifted[p[1]]) {
        return BwbClass::NonRegular;
    }
    // order[k] is the index landing at position k; invert it.
    let mut w = vec![0; order.len()];
    for (pos, &idx) in order.iter().enumerate() {
        w[idx] = pos;
    }
    let w = Permutation(w);
    let dominant_rep = twisted_action(&w, alpha).expect("lengths agree");
    BwbClass::Regular {
        length: w.length(),
        w,
        dominant_rep,
    }
}

/// The weight `(δ_1, …, δ_{r−1}, i)` of `(S/H)^{∨ i} ⊗ 𝕊^δ H^∨`.
pub fn bwb_weight(delta: &Partition, i: usize, r: usize) -> Weight {
    let mut entries: Vec<i64> = (0..r.saturating_sub(1)).map(|k| delta.row(k) as i64).collect();
    entries.push(i as i64);
    Weight(entries)
}

/// Cohomology of `(S/H)^{∨ i} ⊗ 𝕊^δ H^∨` on `GL(r)/P`: `Some((degree, shape))` of the
/// single non-vanishing group `𝕊^{shape} S^∨`, or `None` when everything vanishes.
pub fn bwb_cohomology(delta: &Partition, i: usize, r: usize) -> Result<Option<(usize, Partition)>> {
    if r == 0 || delta.height() > r - 1 {
        return Err(Error::HeightViolation {
            partition: delta.clone(),
            height: delta.height(),
            bound: r.saturating_sub(1),
        });
    }
    let alpha = bwb_weight(delta, i, r);
    let (degree, rep) = match classify(&alpha) {
        BwbClass::Dominant => (0, alpha),
        BwbClass::Regular {
            length, dominant_rep, ..
        } => (length, dominant_rep),
        BwbClass::NonRegular => return Ok(None),
    };
    let rows = rep
        .0
        .iter()
        .map(|&v| usize::try_from(v).map_err(|_| Error::Inconsistency(format!("negative dominant weight {rep:?}"))))
        .collect::<Result<Vec<_>>>()?;
    Ok(Some((degree, Partition::new(rows)?)))
}
