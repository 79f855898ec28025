//! Littlewood–Richardson and Pieri combinatorics, and Schur-functor dimensions.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, LazyLock, RwLock};

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};

use crate::error::{Error, Result};
use crate::partition::Partition;

type ProductKey = (Partition, Partition, usize);
type Expansion = BTreeMap<Partition, u64>;

static PRODUCT_CACHE: LazyLock<RwLock<HashMap<ProductKey, Arc<Expansion>>>> =
    LazyLock::new(|| RwLock::new(HashMap::new()));

/// Row-by-row enumeration of Littlewood–Richardson tableaux of shape `ν/λ` and content `μ`.
///
/// Rows are weakly increasing, columns strictly increasing, and the reverse reading
/// word (right to left, top to bottom) is a lattice word. When `target` is set only
/// fillings with outer shape `target` are counted.
struct LrFiller<'a> {
    lambda: &'a Partition,
    content: &'a [usize],
    target: Option<&'a Partition>,
    max_height: usize,
    shape: Vec<usize>,
    letters: Vec<Vec<usize>>,
    counts: Vec<usize>,
    out: Expansion,
}

impl<'a> LrFiller<'a> {
    fn new(lambda: &'a Partition, mu: &'a Partition, target: Option<&'a Partition>, max_height: usize) -> Self {
        Self {
            lambda,
            content: mu.rows(),
            target,
            max_height,
            shape: Vec::new(),
            letters: Vec::new(),
            counts: vec![0; mu.height()],
            out: BTreeMap::new(),
        }
    }

    fn run(mut self) -> Expansion {
        if self.lambda.height() <= self.max_height {
            self.row(0);
        }
        self.out
    }

    fn done(&self) -> bool {
        self.counts.iter().zip(self.content).all(|(c, m)| c == m)
    }

    fn row(&mut self, j: usize) {
        if self.done() {
            let mut rows = self.shape.clone();
            rows.extend(self.lambda.rows().iter().skip(j));
            if rows.len() > self.max_height {
                return;
            }
            let nu = Partition::new(rows).expect("LR fillings produce partitions");
            if self.target.is_none_or(|t| *t == nu) {
                *self.out.entry(nu).or_insert(0) += 1;
            }
            return;
        }
        if j >= self.max_height || j >= self.lambda.height() + self.content.len() {
            return;
        }
        let base = self.lambda.row(j);
        let cap = if j == 0 { usize::MAX } else { self.shape[j - 1] };
        if base > cap {
            return;
        }
        let wanted = match self.target {
            Some(t) => {
                let tj = t.row(j);
                if tj < base || tj > cap {
                    return;
                }
                Some(tj - base)
            }
            None => None,
        };
        let before = self.counts.clone();
        let mut placed = Vec::new();
        self.choose(j, 0, base, cap, wanted, &before, &mut placed);
    }

    #[allow(clippy::too_many_arguments)]
    fn choose(
        &mut self,
        j: usize,
        letter: usize,
        base: usize,
        cap: usize,
        wanted: Option<usize>,
        before: &[usize],
        placed: &mut Vec<usize>,
    ) {
        let max_letter = self.content.len().min(j + 1);
        if letter == max_letter {
            if let Some(w) = wanted {
                if placed.len() != w {
                    return;
                }
            }
            // A new row below λ must receive boxes, or the shape would have a gap.
            if placed.is_empty() && j >= self.lambda.height() {
                return;
            }
            self.shape.push(base + placed.len());
            self.letters.push(placed.clone());
            self.row(j + 1);
            self.shape.pop();
            self.letters.pop();
            return;
        }
        let available = self.content[letter] - before[letter];
        let lattice_cap = if letter == 0 {
            usize::MAX
        } else {
            before[letter - 1] - before[letter]
        };
        let room = wanted.map_or(usize::MAX, |w| w - placed.len());
        let max_a = available.min(lattice_cap).min(room);
        let start_len = placed.len();
        // a = 0 first; then extend one cell at a time, checking each new cell.
        self.choose(j, letter + 1, base, cap, wanted, before, placed);
        for _ in 0..max_a {
            let col = base + placed.len();
            if col >= cap {
                break;
            }
            if j > 0 {
                let above_base = self.lambda.row(j - 1);
                if col >= above_base {
                    let above = self.letters[j - 1][col - above_base];
                    if above >= letter {
                        break;
                    }
                }
            }
            placed.push(letter);
            self.counts[letter] += 1;
            self.choose(j, letter + 1, base, cap, wanted, before, placed);
        }
        while placed.len() > start_len {
            placed.pop();
            self.counts[letter] -= 1;
        }
    }
}

/// `c^ν_{λμ}`: the number of LR tableaux of shape `ν/λ` with content `μ`.
pub fn lr_coefficient(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    if lambda.size() + mu.size() != nu.size() || !nu.contains(lambda) {
        return 0;
    }
    let out = LrFiller::new(lambda, mu, Some(nu), nu.height()).run();
    out.get(nu).copied().unwrap_or(0)
}

/// Expansion of `s_λ · s_μ` in the Schur basis, keeping only shapes of height `≤ max_height`.
pub fn schur_product(lambda: &Partition, mu: &Partition, max_height: usize) -> Expansion {
    (*schur_product_shared(lambda, mu, max_height)).clone()
}

/// Cached form of [`schur_product`].
pub fn schur_product_shared(lambda: &Partition, mu: &Partition, max_height: usize) -> Arc<Expansion> {
    // Fill over the larger factor with the smaller content.
    let (outer, content) = if (mu.size(), mu.height()) > (lambda.size(), lambda.height()) {
        (mu, lambda)
    } else {
        (lambda, mu)
    };
    let key = (outer.clone(), content.clone(), max_height);
    if let Some(hit) = PRODUCT_CACHE.read().expect("cache lock").get(&key) {
        return Arc::clone(hit);
    }
    let out = Arc::new(LrFiller::new(outer, content, None, max_height).run());
    PRODUCT_CACHE.write().expect("cache lock").insert(key, Arc::clone(&out));
    out
}

/// Graded pieces `(α, t)` of `𝕊^γ S` under `0 → H → S → L → 0`, with multiplicity `c^γ_{α,(t)}`.
pub fn pieri_filtration(gamma: &Partition, rank_h: usize) -> Result<BTreeMap<(Partition, usize), u64>> {
    if gamma.height() > rank_h + 1 {
        return Err(Error::HeightViolation {
            partition: gamma.clone(),
            height: gamma.height(),
            bound: rank_h + 1,
        });
    }
    let mut out = BTreeMap::new();
    for alpha in gamma.subdiagrams() {
        if alpha.height() > rank_h {
            continue;
        }
        let t = gamma.size() - alpha.size();
        let c = lr_coefficient(&alpha, &Partition::row_of(t), gamma);
        if c > 0 {
            out.insert((alpha, t), c);
        }
    }
    Ok(out)
}

/// Number of semistandard tableaux of shape `λ` with entries in `1..=n`, by the hook-content formula.
pub fn schur_dimension(lambda: &Partition, n: usize) -> u64 {
    schur_dimension_big(lambda, n)
        .to_u64()
        .expect("Schur dimension exceeds u64")
}

pub fn schur_dimension_big(lambda: &Partition, n: usize) -> BigUint {
    if lambda.height() > n {
        return BigUint::from(0u32);
    }
    let conj = lambda.transpose();
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for (i, &len) in lambda.rows().iter().enumerate() {
        for j in 0..len {
            // content j - i is ≥ -(n-1) since i < n
            num *= BigUint::from(n + j - i);
            let hook = (len - j - 1) + (conj.row(j) - i - 1) + 1;
            den *= BigUint::from(hook);
        }
    }
    num / den
}
