//! Torus-fixed-point localization of K-classes on `X^{(d,r)}` and the matrices of the
//! window-shift functors on K-theory in the Kapranov basis.
//!
//! The torus sits inside `SL(V)`: parameters satisfy `t_1 ⋯ t_d = 1`, matching the
//! trivialization of `det V` used when labels drop `∧^d V` factors.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::{cotwist_on_generator, twist_on_generator};
use crate::bundle::{BundleLabel, GradedComplex, Side};
use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::window::{gamma_set, window_generators};

pub type Matrix = Vec<Vec<BigRational>>;

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Equivariant parameters `t_1, …, t_d`: distinct, non-zero, product one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocalizationParams {
    t: Vec<BigRational>,
}

const PRIMES: [i64; 16] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53];

impl LocalizationParams {
    pub fn new(t: Vec<BigRational>) -> Result<Self> {
        if t.iter().any(|x| x.is_zero()) {
            return Err(Error::DegenerateParameters("parameters must be non-zero".into()));
        }
        for i in 0..t.len() {
            for j in i + 1..t.len() {
                if t[i] == t[j] {
                    return Err(Error::DegenerateParameters(format!("t_{} = t_{}", i + 1, j + 1)));
                }
            }
        }
        let product: BigRational = t.iter().product();
        if !product.is_one() {
            return Err(Error::DegenerateParameters(format!(
                "parameters must multiply to 1 (det V is trivialized), got {product}"
            )));
        }
        Ok(Self { t })
    }

    /// The first `d − 1` primes, closed off by the inverse of their product.
    pub fn standard(d: usize) -> Self {
        assert!(d >= 1 && d <= PRIMES.len() + 1, "unsupported dimension {d}");
        let mut t: Vec<BigRational> = PRIMES[..d - 1].iter().map(|&p| rat(p)).collect();
        let product: BigRational = t.iter().product();
        t.push(product.recip());
        Self::new(t).expect("primes are distinct and not reciprocals of their product")
    }

    /// Seeded random distinct rationals `±a/b` with product one.
    pub fn random(d: usize, seed: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        loop {
            let mut t: Vec<BigRational> = (0..d.saturating_sub(1))
                .map(|_| {
                    let num: i64 = rng.gen_range(1..=40);
                    let den: i64 = rng.gen_range(1..=40);
                    let sign = if rng.gen_bool(0.5) { 1 } else { -1 };
                    BigRational::new(BigInt::from(sign * num), BigInt::from(den))
                })
                .collect();
            let product: BigRational = t.iter().product();
            t.push(product.recip());
            if let Ok(params) = Self::new(t) {
                return params;
            }
        }
    }

    pub fn values(&self) -> &[BigRational] {
        &self.t
    }

    pub fn d(&self) -> usize {
        self.t.len()
    }
}

/// Values of a K-class at the `binomial(d, r)` fixed points, indexed by `r`-subsets in
/// lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FixedPointVector {
    #[serde(serialize_with = "serialize_rationals")]
    pub values: Vec<BigRational>,
}

fn serialize_rationals<S: serde::Serializer>(v: &[BigRational], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|x| x.to_string()))
}

/// All `r`-subsets of `{0, …, d−1}` in lexicographic order.
pub fn fixed_points(d: usize, r: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, d: usize, r: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == r {
            out.push(cur.clone());
            return;
        }
        for i in start..d {
            cur.push(i);
            rec(i + 1, d, r, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, d, r, &mut Vec::new(), &mut out);
    out
}

/// `s_λ(x_1, …, x_m)` by the Jacobi–Trudi determinant `det(h_{λ_i − i + j})`.
pub fn schur_polynomial(lambda: &Partition, xs: &[BigRational]) -> BigRational {
    if lambda.is_empty() {
        return BigRational::one();
    }
    let top = lambda.width() + lambda.height();
    // h[k] = complete homogeneous symmetric polynomial of degree k in xs
    let mut h = vec![BigRational::zero(); top + 1];
    h[0] = BigRational::one();
    for x in xs {
        for k in 1..=top {
            let add = &h[k - 1] * x;
            h[k] += add;
        }
    }
    let l = lambda.height();
    let m: Matrix = (0..l)
        .map(|i| {
            (0..l)
                .map(|j| {
                    let idx = lambda.row(i) as i64 - i as i64 + j as i64;
                    if idx < 0 {
                        BigRational::zero()
                    } else {
                        h[idx as usize].clone()
                    }
                })
                .collect()
        })
        .collect();
    determinant(&m)
}

fn label_value(label: &BundleLabel, sigma: &[usize], params: &LocalizationParams) -> BigRational {
    let t = params.values();
    // S^∨ at σ has weights t_i^{-1}, i ∈ σ; det S^∨ = Π t_i^{-1}.
    let dual_weights: Vec<BigRational> = sigma.iter().map(|&i| t[i].recip()).collect();
    let det_dual: BigRational = dual_weights.iter().product();
    let twist = if label.twist >= 0 {
        num_traits::pow(det_dual, label.twist as usize)
    } else {
        num_traits::pow(det_dual.recip(), (-label.twist) as usize)
    };
    schur_polynomial(&label.schur, &dual_weights) * twist * schur_polynomial(&label.v_shape, t)
}

/// `Σ_deg (−1)^deg Σ mult · (localized label)` at every fixed point.
pub fn k_class(complex: &GradedComplex, d: usize, r: usize, params: &LocalizationParams) -> Result<FixedPointVector> {
    if params.d() != d {
        return Err(Error::LengthMismatch {
            expected: d,
            got: params.d(),
        });
    }
    for label in complex.labels() {
        if label.side != Side::S || label.taut_rank != r || label.bracket != 0 {
            return Err(Error::SideMismatch(format!(
                "k_class needs S-side labels of rank {r}, got {label:?}"
            )));
        }
    }
    let values = fixed_points(d, r)
        .iter()
        .map(|sigma| {
            complex
                .iter()
                .map(|(deg, label, mult)| {
                    let v = label_value(label, sigma, params) * rat(mult as i64);
                    if deg.rem_euclid(2) == 0 {
                        v
                    } else {
                        -v
                    }
                })
                .fold(BigRational::zero(), |a, b| a + b)
        })
        .collect();
    Ok(FixedPointVector { values })
}

/// Which functor a K-theory matrix describes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum WindowFunctor {
    Identity,
    /// `ω_{0,1}`, natively on the generators of `𝒲_1`.
    Twist,
    /// `ω_{−1,0}` on `X^{(d,r)}`, natively on the generators of `𝒱_0`.
    Cotwist,
}

impl WindowFunctor {
    fn native_window(self) -> i64 {
        match self {
            WindowFunctor::Twist => 1,
            WindowFunctor::Identity | WindowFunctor::Cotwist => 0,
        }
    }

    fn image(self, delta: &Partition, d: usize, r: usize) -> Result<GradedComplex> {
        match self {
            WindowFunctor::Identity => Ok(GradedComplex::single(
                BundleLabel::s(r, delta, 0).expect("generators are non-zero"),
            )),
            WindowFunctor::Twist => twist_on_generator(delta, d, r),
            WindowFunctor::Cotwist => cotwist_on_generator(delta, d, r),
        }
    }
}

fn columns_to_matrix(cols: &[FixedPointVector]) -> Matrix {
    let n = cols.first().map_or(0, |c| c.values.len());
    (0..n)
        .map(|i| cols.iter().map(|c| c.values[i].clone()).collect())
        .collect()
}

fn basis_matrix(d: usize, r: usize, k: i64, params: &LocalizationParams) -> Result<Matrix> {
    let cols = window_generators(d, r, k)?
        .into_iter()
        .map(|g| k_class(&GradedComplex::single(g), d, r, params))
        .collect::<Result<Vec<_>>>()?;
    Ok(columns_to_matrix(&cols))
}

fn image_matrix(which: WindowFunctor, d: usize, r: usize, params: &LocalizationParams) -> Result<Matrix> {
    let cols = gamma_set(d, r)?
        .iter()
        .map(|delta| k_class(&which.image(delta, d, r)?, d, r, params))
        .collect::<Result<Vec<_>>>()?;
    Ok(columns_to_matrix(&cols))
}

fn invert_basis(b: &Matrix) -> Result<Matrix> {
    matrix_inverse(b).ok_or_else(|| {
        Error::DegenerateParameters("fixed-point vectors of the generators are linearly dependent".into())
    })
}

/// Matrix of the functor in the basis of its own input generators. Columns are
/// coordinates of the image complexes; every entry must be an integer.
pub fn k_matrix(which: WindowFunctor, d: usize, r: usize, params: &LocalizationParams) -> Result<Matrix> {
    let basis = basis_matrix(d, r, which.native_window(), params)?;
    let images = image_matrix(which, d, r, params)?;
    let coords = matrix_mul(&invert_basis(&basis)?, &images);
    if let Some(bad) = coords.iter().flatten().find(|x| !x.is_integer()) {
        return Err(Error::Inconsistency(format!(
            "{which:?} on d={d}, r={r} has a non-integral K-theory coefficient {bad}"
        )));
    }
    Ok(coords)
}

/// Matrix of the functor in the basis of the generators of window `k`.
pub fn k_matrix_in_window(
    which: WindowFunctor,
    d: usize,
    r: usize,
    k: i64,
    params: &LocalizationParams,
) -> Result<Matrix> {
    let native = basis_matrix(d, r, which.native_window(), params)?;
    let images = image_matrix(which, d, r, params)?;
    // Linear map on fixed-point space, then change basis.
    let on_points = matrix_mul(&images, &invert_basis(&native)?);
    let target = basis_matrix(d, r, k, params)?;
    Ok(matrix_mul(&matrix_mul(&invert_basis(&target)?, &on_points), &target))
}

/// Matrix of `⊗ O(1)` in the basis of the generators of window `k`.
pub fn twist_line_matrix(d: usize, r: usize, k: i64, params: &LocalizationParams) -> Result<Matrix> {
    let basis = basis_matrix(d, r, k, params)?;
    let shifted = basis_matrix(d, r, k + 1, params)?;
    Ok(matrix_mul(&invert_basis(&basis)?, &shifted))
}

pub fn identity_matrix(n: usize) -> Matrix {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        BigRational::one()
                    } else {
                        BigRational::zero()
                    }
                })
                .collect()
        })
        .collect()
}

pub fn matrix_mul(a: &Matrix, b: &Matrix) -> Matrix {
    let inner = b.len();
    let cols = b.first().map_or(0, |row| row.len());
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| {
                    (0..inner)
                        .filter(|&k| !row[k].is_zero())
                        .fold(BigRational::zero(), |acc, k| acc + &row[k] * &b[k][j])
                })
                .collect()
        })
        .collect()
}

/// Gauss–Jordan inverse over the rationals; `None` when singular.
pub fn matrix_inverse(m: &Matrix) -> Option<Matrix> {
    let n = m.len();
    let mut a: Matrix = m
        .iter()
        .zip(identity_matrix(n))
        .map(|(row, id)| row.iter().cloned().chain(id).collect())
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&i| !a[i][col].is_zero())?;
        a.swap(col, pivot);
        let inv = a[col][col].recip();
        for x in a[col].iter_mut() {
            *x *= &inv;
        }
        for i in 0..n {
            if i != col && !a[i][col].is_zero() {
                let factor = a[i][col].clone();
                let pivot_row = a[col].clone();
                for (x, p) in a[i].iter_mut().zip(pivot_row) {
                    *x -= &factor * p;
                }
            }
        }
    }
    Some(a.into_iter().map(|row| row[n..].to_vec()).collect())
}

pub fn determinant(m: &Matrix) -> BigRational {
    let n = m.len();
    let mut a = m.clone();
    let mut det = BigRational::one();
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&i| !a[i][col].is_zero()) else {
            return BigRational::zero();
        };
        if pivot != col {
            a.swap(col, pivot);
            det = -det;
        }
        det *= &a[col][col];
        for i in col + 1..n {
            if !a[i][col].is_zero() {
                let factor = &a[i][col] / &a[col][col];
                let pivot_row = a[col].clone();
                for (x, p) in a[i].iter_mut().zip(pivot_row) {
                    *x -= &factor * p;
                }
            }
        }
    }
    det
}

/// `|det| = 1`.
pub fn is_unimodular(m: &Matrix) -> bool {
    determinant(m).abs().is_one()
}
