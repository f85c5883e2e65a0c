//! The Euclidean recursion `f` on coprime pairs and the substitution maps
//! `φ_{m,n}` rebuilding `χ_{m,n}` from `χ_{f(m,n)}`.

use super::segment::Segment;
use super::sequences::{chi, chi_unchecked};
use crate::Result;

/// One step of the recursion; the chain stops at `(1,1)` or `(0,1)`.
pub fn euclid_step(m: u64, n: u64) -> (u64, u64) {
    if n >= 2 * m {
        (m * (n / m + 1) - n, m)
    } else {
        let d = n - m;
        (n - d * (n / d), d)
    }
}

/// `(1_{m,n}, 0_{m,n})`.
pub fn templates(m: u64, n: u64) -> (Vec<i64>, Vec<i64>) {
    if n >= 2 * m {
        let k = (n / m) as usize;
        let mut one = vec![0; k - 1];
        one.push(1);
        let mut zero = vec![0; k];
        zero.push(1);
        (one, zero)
    } else {
        let k = (n / (n - m)) as usize;
        let mut one = vec![0];
        one.extend(std::iter::repeat_n(1, k));
        let mut zero = vec![0];
        zero.extend(std::iter::repeat_n(1, k - 1));
        (one, zero)
    }
}

/// `φ_{m,n}(η)`: each entry replaced by its template, keeping the head.
pub fn phi(m: u64, n: u64, eta: &Segment) -> Segment {
    let (one, zero) = templates(m, n);
    let mut values = Vec::new();
    for &x in &eta.values {
        values.extend_from_slice(if x == 1 { &one } else { &zero });
    }
    Segment::new(eta.head, values)
}

/// The recursion `(m,n), f(m,n), …` with the positional images of every level.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EuclideanChain {
    pub pairs: Vec<(u64, u64)>,
    /// `χ^h = χ_{f^h(m,n)}`.
    pub chis: Vec<Vec<i64>>,
    /// `(1, 0)` templates of `pairs[h]`, for every level below the top.
    pub templates: Vec<(Vec<i64>, Vec<i64>)>,
    /// `spans[h][k]`: the interval of `χ^h` replacing position `k + 1` of
    /// `χ^{h+1}`.
    pub spans: Vec<Vec<(usize, usize)>>,
    /// `blocks[h][k]`: the interval of `χ` that position `k + 1` of `χ^h`
    /// becomes under `φ_{m,n,h}`.
    pub blocks: Vec<Vec<(usize, usize)>>,
}

pub fn euclid_chain(m: u64, n: u64) -> Result<EuclideanChain> {
    let base = chi(m, n)?;
    let mut pairs = vec![(m, n)];
    while !matches!(pairs.last(), Some((1, 1)) | Some((0, 1))) {
        let &(a, b) = pairs.last().unwrap();
        pairs.push(euclid_step(a, b));
    }
    let chis: Vec<Vec<i64>> = pairs.iter().map(|&(a, b)| chi_unchecked(a, b)).collect();
    debug_assert_eq!(chis[0], base);
    let top = pairs.len() - 1;
    let mut tmpls = Vec::new();
    let mut spans = Vec::new();
    for h in 0..top {
        let (a, b) = pairs[h];
        let t = templates(a, b);
        let mut pos = 1;
        let mut row = Vec::new();
        for &x in &chis[h + 1] {
            let len = if x == 1 { t.0.len() } else { t.1.len() };
            row.push((pos, pos + len - 1));
            pos += len;
        }
        tmpls.push(t);
        spans.push(row);
    }
    let mut blocks = vec![(1..=n as usize).map(|i| (i, i)).collect::<Vec<_>>()];
    for h in 0..top {
        let below = &blocks[h];
        let row = spans[h]
            .iter()
            .map(|&(a, b)| (below[a - 1].0, below[b - 1].1))
            .collect();
        blocks.push(row);
    }
    Ok(EuclideanChain {
        pairs,
        chis,
        templates: tmpls,
        spans,
        blocks,
    })
}

impl EuclideanChain {
    pub fn top(&self) -> usize {
        self.pairs.len() - 1
    }

    pub fn n(&self) -> usize {
        self.chis[0].len()
    }

    /// `φ_{m,n,h}(χ^h)` computed with the literal substitution maps.
    pub fn reconstruct(&self, h: usize) -> Segment {
        let mut seg = Segment::whole(&self.chis[h]);
        for level in (0..h).rev() {
            let (a, b) = self.pairs[level];
            seg = phi(a, b, &seg);
        }
        seg
    }

    /// Index (0-based) of the block of level `h` containing `χ`-position `i`.
    pub fn block_index(&self, h: usize, i: usize) -> usize {
        self.blocks[h]
            .iter()
            .position(|&(a, b)| a <= i && i <= b)
            .expect("position inside chi")
    }

    fn aligned(&self, h: usize, from: usize, to: usize) -> Option<(usize, usize)> {
        let ka = self.blocks[h].iter().position(|&(a, _)| a == from)?;
        let kb = self.blocks[h].iter().position(|&(_, b)| b == to)?;
        Some((ka, kb))
    }
}

/// Where a subsegment of `χ` sits in the recursion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LevelInfo {
    /// The largest `h` with `γ = φ_{m,n,h}(ι)`.
    pub level: usize,
    /// `ι` as a 1-based interval of `χ^h`.
    pub iota: (usize, usize),
    /// The elementary subsegment of `χ^h` containing `ι`, if there is one.
    pub elementary: Option<(usize, usize)>,
}

/// Level of the subsegment `[from, to]` of `χ`.
pub fn level_decompose(chain: &EuclideanChain, from: usize, to: usize) -> Result<LevelInfo> {
    if from == 0 || to > chain.n() || from > to {
        return Err(crate::Error::Invalid(format!(
            "[{from},{to}] is not a subsegment of chi"
        )));
    }
    let mut level = 0;
    let mut iota = (from, to);
    for h in 1..=chain.top() {
        match chain.aligned(h, from, to) {
            Some((ka, kb)) => {
                level = h;
                iota = (ka + 1, kb + 1);
            }
            None => break,
        }
    }
    let elementary = if level == chain.top() {
        Some((1, chain.chis[level].len()))
    } else {
        chain.spans[level]
            .iter()
            .copied()
            .find(|&(a, b)| a <= iota.0 && iota.1 <= b)
    };
    Ok(LevelInfo {
        level,
        iota,
        elementary,
    })
}
