//! Young diagrams and the surgery operations used throughout the crate.
//!
//! A [`Partition`] is stored in canonical form: non-increasing row lengths
//! with trailing zeros trimmed, so structural equality is diagram equality.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    rows: Vec<usize>,
}

/// Which edge of a diagram [`Partition::strip`] removes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strip {
    FirstRow,
    FirstColumn,
}

impl Partition {
    pub fn new(rows: Vec<usize>) -> Result<Self> {
        if rows.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(rows));
        }
        let mut rows = rows;
        while rows.last() == Some(&0) {
            rows.pop();
        }
        Ok(Self { rows })
    }

    /// Builds a partition from rows known to be non-increasing.
    ///
    /// Panics on invalid input; meant for literals in code and tests.
    pub fn from_rows(rows: &[usize]) -> Self {
        Self::new(rows.to_vec()).expect("rows must be non-increasing")
    }

    pub fn empty() -> Self {
        Self::default()
    }

    /// A single column of height `s`, i.e. the shape of the exterior power.
    pub fn column(s: usize) -> Self {
        Self { rows: vec![1; s] }
    }

    /// A single row of length `t`.
    pub fn row_of(t: usize) -> Self {
        if t == 0 {
            Self::empty()
        } else {
            Self { rows: vec![t] }
        }
    }

    /// The `w x h` rectangle.
    pub fn rectangle(w: usize, h: usize) -> Self {
        if w == 0 {
            Self::empty()
        } else {
            Self { rows: vec![w; h] }
        }
    }

    pub fn rows(&self) -> &[usize] {
        &self.rows
    }

    pub fn into_rows(self) -> Vec<usize> {
        self.rows
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn height(&self) -> usize {
        self.rows.len()
    }

    pub fn width(&self) -> usize {
        self.rows.first().copied().unwrap_or(0)
    }

    pub fn size(&self) -> usize {
        self.rows.iter().sum()
    }

    /// Length of row `i` (0-based), zero past the last row.
    pub fn row(&self, i: usize) -> usize {
        self.rows.get(i).copied().unwrap_or(0)
    }

    /// Height of column `k` (1-based); column 0 is not defined and returns 0.
    pub fn column_height(&self, k: usize) -> usize {
        if k == 0 {
            return 0;
        }
        self.rows.iter().take_while(|&&l| l >= k).count()
    }

    pub fn contains(&self, other: &Partition) -> bool {
        other.height() <= self.height() && other.rows.iter().zip(&self.rows).all(|(a, b)| a <= b)
    }

    pub fn transpose(&self) -> Partition {
        let rows = (1..=self.width()).map(|k| self.column_height(k)).collect();
        Partition { rows }
    }

    pub fn fits_in(&self, w: usize, h: usize) -> bool {
        self.height() <= h && self.width() <= w
    }

    /// Whether every column has height exactly `h`, i.e. the diagram is a `w x h` rectangle.
    pub fn is_rectangle_of_height(&self, h: usize) -> bool {
        self.is_empty() || (self.height() == h && self.rows.iter().all(|&l| l == self.width()))
    }

    /// The 180°-rotated complement of `self` inside the `w x h` rectangle.
    pub fn complement(&self, w: usize, h: usize) -> Result<Partition> {
        if !self.fits_in(w, h) {
            return Err(Error::OutOfBox {
                partition: self.clone(),
                width: w,
                height: h,
            });
        }
        let rows = (0..h).rev().map(|i| w - self.row(i)).collect();
        Partition::new(rows)
    }

    /// Adds a column of height `r` on the left: each of the first `r` rows grows by one.
    pub fn add_full_column(&self, r: usize) -> Result<Partition> {
        if self.height() > r {
            return Err(Error::HeightViolation {
                partition: self.clone(),
                height: self.height(),
                bound: r,
            });
        }
        let rows = (0..r).map(|i| self.row(i) + 1).collect();
        Partition::new(rows)
    }

    pub fn strip(&self, what: Strip) -> Partition {
        match what {
            Strip::FirstRow => Partition {
                rows: self.rows.iter().skip(1).copied().collect(),
            },
            Strip::FirstColumn => Partition {
                rows: self.rows.iter().filter(|&&l| l > 1).map(|l| l - 1).collect(),
            },
        }
    }

    /// Removes `n` full columns from the left. Caller guarantees `height` rows of length ≥ `n`.
    pub(crate) fn remove_columns(&self, n: usize) -> Partition {
        Partition {
            rows: self.rows.iter().filter(|&&l| l > n).map(|l| l - n).collect(),
        }
    }

    /// Adds `n` to each of the first `h` rows (i.e. `n` columns of height `h`).
    pub(crate) fn add_columns(&self, n: usize, h: usize) -> Partition {
        debug_assert!(self.height() <= h);
        if n == 0 {
            return self.clone();
        }
        Partition {
            rows: (0..h).map(|i| self.row(i) + n).collect(),
        }
    }

    /// One `□` line per row; the empty diagram renders as `∅`.
    pub fn young_diagram(&self) -> String {
        if self.is_empty() {
            return "∅".to_string();
        }
        self.rows.iter().map(|&l| "□".repeat(l)).collect::<Vec<_>>().join("\n")
    }

    /// All partitions of `n` with at most `max_height` rows, each of length at most `max_width`,
    /// listed in decreasing lexicographic order.
    pub fn all_of_size(n: usize, max_height: usize, max_width: usize) -> Vec<Partition> {
        fn rec(remaining: usize, max_part: usize, rows_left: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if remaining == 0 {
                out.push(Partition { rows: cur.clone() });
                return;
            }
            if rows_left == 0 {
                return;
            }
            // Not enough capacity left.
            if max_part * rows_left < remaining {
                return;
            }
            for part in (1..=max_part.min(remaining)).rev() {
                cur.push(part);
                rec(remaining - part, part, rows_left - 1, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, max_width, max_height, &mut Vec::new(), &mut out);
        out
    }

    /// All partitions of size at most `max_size` and height at most `max_height`.
    pub fn all_up_to(max_size: usize, max_height: usize) -> Vec<Partition> {
        (0..=max_size)
            .flat_map(|n| Partition::all_of_size(n, max_height, n))
            .collect()
    }

    /// All partitions fitting in the `w x h` rectangle, ordered by size and then
    /// decreasing lexicographic order (so `(2)` precedes `(1,1)`).
    pub fn all_in_box(w: usize, h: usize) -> Vec<Partition> {
        (0..=w * h).flat_map(|n| Partition::all_of_size(n, h, w)).collect()
    }

    /// All sub-diagrams of `self` (partitions contained in it).
    pub fn subdiagrams(&self) -> Vec<Partition> {
        fn rec(outer: &[usize], i: usize, cap: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if i == outer.len() {
                out.push(Partition::new(cur.clone()).expect("non-increasing by construction"));
                return;
            }
            for l in 0..=outer[i].min(cap) {
                cur.push(l);
                rec(outer, i + 1, l, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(&self.rows, 0, usize::MAX, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "∅");
        }
        write!(f, "(")?;
        for (i, l) in self.rows.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{l}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Partition{self}")
    }
}

/// Comma-separated row lengths; the empty string (or `∅`) is the empty diagram.
impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s.trim();
        let inner = trimmed
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .unwrap_or(trimmed)
            .trim();
        if inner.is_empty() || inner == "∅" {
            return Ok(Partition::empty());
        }
        let rows = inner
            .split(',')
            .map(|tok| {
                tok.trim().parse::<usize>().map_err(|e| Error::ParsePartition {
                    input: s.to_string(),
                    reason: format!("{:?}: {e}", tok.trim()),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(rows).map_err(|_| Error::ParsePartition {
            input: s.to_string(),
            reason: "row lengths must be non-increasing".to_string(),
        })
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.rows.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let rows = Vec::<usize>::deserialize(deserializer)?;
        Partition::new(rows).map_err(serde::de::Error::custom)
    }
}

/// One step of the column-filling sequence.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StaircaseStep {
    pub shape: Partition,
    /// Boxes added relative to the seed.
    pub added: usize,
}

/// The column-filling sequence `δ_1, δ_2, …` grown from a seed of height `< r`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Staircase {
    pub seed: Partition,
    pub height: usize,
    pub steps: Vec<StaircaseStep>,
}

impl Staircase {
    /// Number of steps.
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// The `k`-th diagram, with `k = 0` the seed itself.
    pub fn shape(&self, k: usize) -> &Partition {
        if k == 0 {
            &self.seed
        } else {
            &self.steps[k - 1].shape
        }
    }

    /// Boxes added by stage `k` (zero at `k = 0`).
    pub fn added(&self, k: usize) -> usize {
        if k == 0 {
            0
        } else {
            self.steps[k - 1].added
        }
    }
}

/// Grows `seed` column by column: stage 1 fills column 1 to height `r`, stage `k`
/// fills column `k` to one more than the height of column `k-1` of the seed.
pub fn staircase(seed: &Partition, r: usize, steps: usize) -> Result<Staircase> {
    if seed.height() >= r {
        return Err(Error::HeightViolation {
            partition: seed.clone(),
            height: seed.height(),
            bound: r.saturating_sub(1),
        });
    }
    if steps == 0 {
        return Err(Error::ParameterRange("staircase needs at least one step".into()));
    }
    let base = seed.size();
    let mut rows: Vec<usize> = (0..r).map(|i| seed.row(i)).collect();
    let mut out = Vec::with_capacity(steps);
    for k in 1..=steps {
        let target = if k == 1 { r } else { seed.column_height(k - 1) + 1 };
        for row in rows.iter_mut().take(target) {
            if *row < k {
                debug_assert_eq!(*row, k - 1);
                *row = k;
            }
        }
        let shape = Partition::new(rows.clone())?;
        let added = shape.size() - base;
        out.push(StaircaseStep { shape, added });
    }
    Ok(Staircase {
        seed: seed.clone(),
        height: r,
        steps: out,
    })
}
