use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use super::element::ExtAffineElement;
use super::perm::Permutation;
use crate::{Error, Result};

/// One `GL_{size}` (or `PGL_{size}` when `adjoint`) factor.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Block {
    pub size: usize,
    pub adjoint: bool,
}

/// A product of type-A factors `W̃ = W̃₁ × ⋯ × W̃_r` realised inside `ℤ^n ⋊ S_n`
/// with consecutive coordinate windows.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GroupDatum {
    blocks: Vec<Block>,
    offsets: Vec<usize>,
    n: usize,
}

/// Affine simple reflection `s_index` of factor `block`; index 0 is the affine one.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub block: usize,
    pub index: usize,
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.block == 0 {
            write!(f, "s{}", self.index)
        } else {
            write!(f, "s{}.{}", self.block + 1, self.index)
        }
    }
}

/// `letters[0] ⋯ letters[k-1] · omega`, with `omega` of length zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReducedWord {
    pub letters: Vec<Letter>,
    pub omega: ExtAffineElement,
}

impl GroupDatum {
    pub fn new(blocks: Vec<Block>) -> Result<Self> {
        if blocks.is_empty() || blocks.iter().any(|b| b.size == 0) {
            return Err(Error::Invalid("block sizes must be positive".into()));
        }
        let mut offsets = Vec::with_capacity(blocks.len());
        let mut n = 0;
        for b in &blocks {
            offsets.push(n);
            n += b.size;
        }
        Ok(Self { blocks, offsets, n })
    }

    pub fn gl(n: usize) -> Self {
        Self::new(vec![Block {
            size: n,
            adjoint: false,
        }])
        .expect("positive rank")
    }

    pub fn pgl(n: usize) -> Self {
        Self::new(vec![Block {
            size: n,
            adjoint: true,
        }])
        .expect("positive rank")
    }

    pub fn gl_blocks(sizes: &[usize]) -> Result<Self> {
        Self::new(
            sizes
                .iter()
                .map(|&size| Block {
                    size,
                    adjoint: false,
                })
                .collect(),
        )
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    pub fn offset(&self, b: usize) -> usize {
        self.offsets[b]
    }

    pub fn range(&self, b: usize) -> std::ops::Range<usize> {
        self.offsets[b]..self.offsets[b] + self.blocks[b].size
    }

    pub fn block_of(&self, i: usize) -> usize {
        match self.offsets.binary_search(&i) {
            Ok(b) => b,
            Err(b) => b - 1,
        }
    }

    pub fn has_adjoint(&self) -> bool {
        self.blocks.iter().any(|b| b.adjoint)
    }

    /// Same block sizes with every factor of type GL.
    pub fn to_gl(&self) -> Self {
        Self::new(
            self.blocks
                .iter()
                .map(|b| Block {
                    size: b.size,
                    adjoint: false,
                })
                .collect(),
        )
        .expect("valid datum")
    }

    pub fn to_adjoint(&self) -> Self {
        Self::new(
            self.blocks
                .iter()
                .map(|b| Block {
                    size: b.size,
                    adjoint: true,
                })
                .collect(),
        )
        .expect("valid datum")
    }

    pub fn check_rank(&self, len: usize) -> Result<()> {
        if len != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                got: len,
            });
        }
        Ok(())
    }

    pub fn is_block_preserving(&self, p: &Permutation) -> bool {
        p.len() == self.n && (0..self.n).all(|i| self.block_of(p.at(i)) == self.block_of(i))
    }

    pub fn check_element(&self, w: &ExtAffineElement) -> Result<()> {
        self.check_rank(w.rank())?;
        if !self.is_block_preserving(w.perm()) {
            return Err(Error::NotBlockPreserving(w.to_string()));
        }
        Ok(())
    }

    /// Weakly decreasing inside every block.
    pub fn is_dominant<T: PartialOrd>(&self, v: &[T]) -> bool {
        (0..self.num_blocks()).all(|b| {
            let r = self.range(b);
            v[r].windows(2).all(|w| w[0] >= w[1])
        })
    }

    /// Translation sums per block.
    pub fn block_sums(&self, w: &ExtAffineElement) -> Vec<i64> {
        (0..self.num_blocks())
            .map(|b| w.trans_sum(self.range(b)))
            .collect()
    }

    pub fn letters(&self) -> Vec<Letter> {
        let mut out = Vec::new();
        for (b, blk) in self.blocks.iter().enumerate() {
            if blk.size >= 2 {
                out.extend((0..blk.size).map(|index| Letter { block: b, index }));
            }
        }
        out
    }

    pub fn reflection(&self, s: Letter) -> ExtAffineElement {
        let o = self.offsets[s.block];
        let size = self.blocks[s.block].size;
        assert!(size >= 2 && s.index < size, "no simple reflection {s}");
        if s.index == 0 {
            let mut t = vec![0; self.n];
            t[o] = 1;
            t[o + size - 1] = -1;
            ExtAffineElement::from_parts(t, Permutation::transposition(self.n, o + 1, o + size))
        } else {
            ExtAffineElement::from_perm(Permutation::transposition(
                self.n,
                o + s.index,
                o + s.index + 1,
            ))
        }
    }

    /// Iwahori–Matsumoto length, summed over blocks:
    /// `Σ_{α>0, u⁻¹α>0} |⟨α,λ⟩| + Σ_{α>0, u⁻¹α<0} |⟨α,λ⟩ − 1|`.
    pub fn length(&self, w: &ExtAffineElement) -> usize {
        let inv = w.perm().inverse();
        let t = w.trans();
        let mut total: i64 = 0;
        for b in 0..self.num_blocks() {
            let r = self.range(b);
            for i in r.clone() {
                for j in i + 1..r.end {
                    let pairing = t[i] - t[j];
                    total += if inv.at(i) < inv.at(j) {
                        pairing.abs()
                    } else {
                        (pairing - 1).abs()
                    };
                }
            }
        }
        total as usize
    }

    pub fn is_left_descent(&self, s: Letter, w: &ExtAffineElement) -> bool {
        self.length(&(&self.reflection(s) * w)) < self.length(w)
    }

    fn first_left_descent(
        &self,
        w: &ExtAffineElement,
        len: usize,
    ) -> Option<(Letter, ExtAffineElement)> {
        self.letters().into_iter().find_map(|s| {
            let sw = &self.reflection(s) * w;
            (self.length(&sw) < len).then_some((s, sw))
        })
    }

    /// Greedy factorisation by the smallest left descent at every step.
    pub fn reduced_word(&self, w: &ExtAffineElement) -> ReducedWord {
        let mut letters = Vec::new();
        let mut cur = w.clone();
        let mut len = self.length(&cur);
        while len > 0 {
            let (s, next) = self
                .first_left_descent(&cur, len)
                .expect("an element of positive length has a left descent");
            letters.push(s);
            cur = next;
            len -= 1;
        }
        ReducedWord {
            letters,
            omega: cur,
        }
    }

    pub fn word_product(&self, word: &ReducedWord) -> ExtAffineElement {
        let mut acc = ExtAffineElement::identity(self.n);
        for &s in &word.letters {
            acc = &acc * &self.reflection(s);
        }
        &acc * &word.omega
    }

    /// Bruhat order on `W̃ = W_a ⋊ Ω`, by the lifting property along left
    /// descents of the larger element.
    pub fn bruhat_leq(&self, lower: &ExtAffineElement, upper: &ExtAffineElement) -> bool {
        if self.block_sums(lower) != self.block_sums(upper) {
            return false;
        }
        let mut x = lower.clone();
        let mut y = upper.clone();
        let mut lx = self.length(&x);
        let mut ly = self.length(&y);
        loop {
            if lx > ly {
                return false;
            }
            if lx == ly {
                return x == y;
            }
            let (s, sy) = self
                .first_left_descent(&y, ly)
                .expect("positive length has a descent");
            y = sy;
            ly -= 1;
            let sx = &self.reflection(s) * &x;
            let lsx = self.length(&sx);
            if lsx < lx {
                x = sx;
                lx = lsx;
            }
        }
    }

    pub fn bruhat_lt(&self, lower: &ExtAffineElement, upper: &ExtAffineElement) -> bool {
        lower != upper && self.bruhat_leq(lower, upper)
    }

    /// All `x ≤ w`, built as the closure of subword products of a reduced word.
    pub fn lower_interval(&self, w: &ExtAffineElement) -> HashSet<ExtAffineElement> {
        let word = self.reduced_word(w);
        let mut set: HashSet<ExtAffineElement> = HashSet::new();
        set.insert(word.omega.clone());
        for &s in word.letters.iter().rev() {
            let r = self.reflection(s);
            let extra: Vec<ExtAffineElement> = set.iter().map(|y| &r * y).collect();
            set.extend(extra);
        }
        set
    }

    /// Distinct `x(μ)` for `x ∈ W₀`, lexicographically decreasing within each
    /// block, starting from `μ` itself when `μ` is dominant.
    pub fn orbit(&self, mu: &[i64]) -> Vec<Vec<i64>> {
        let per_block: Vec<Vec<Vec<i64>>> = (0..self.num_blocks())
            .map(|b| {
                let mut v = mu[self.range(b)].to_vec();
                v.sort_unstable_by(|a, b| b.cmp(a));
                let mut all = vec![v.clone()];
                while prev_permutation(&mut v) {
                    all.push(v.clone());
                }
                all
            })
            .collect();
        let mut out: Vec<Vec<i64>> = vec![Vec::new()];
        for choices in per_block {
            out = out
                .into_iter()
                .flat_map(|prefix| {
                    choices.iter().map(move |c| {
                        let mut p = prefix.clone();
                        p.extend_from_slice(c);
                        p
                    })
                })
                .collect();
        }
        out
    }

    /// The block-preserving permutation of minimal length with `x(from) = to`.
    pub fn perm_sending(&self, from: &[i64], to: &[i64]) -> Option<Permutation> {
        let mut images = vec![usize::MAX; self.n];
        for b in 0..self.num_blocks() {
            let r = self.range(b);
            let mut used = vec![false; self.n];
            for i in r.clone() {
                let j = r.clone().find(|&j| !used[j] && to[j] == from[i])?;
                used[j] = true;
                images[i] = j;
            }
        }
        Some(Permutation::from_zero_based(images))
    }

    /// The factor made of `blocks`, in the given order.
    pub fn sub_datum(&self, blocks: &[usize]) -> Self {
        Self::new(blocks.iter().map(|&b| self.blocks[b]).collect()).expect("valid datum")
    }

    /// Coordinates of `blocks`, in the given block order.
    pub fn coords(&self, blocks: &[usize]) -> Vec<usize> {
        blocks.iter().flat_map(|&b| self.range(b)).collect()
    }
}

/// Steps to the lexicographically previous arrangement; false at the last one.
fn prev_permutation(v: &mut [i64]) -> bool {
    let n = v.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && v[i - 1] <= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while v[j] >= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

impl fmt::Display for GroupDatum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .blocks
            .iter()
            .map(|b| format!("{}:{}", if b.adjoint { "pgl" } else { "gl" }, b.size))
            .collect();
        write!(f, "{}", parts.join("*"))
    }
}

/// `gl:8`, `pgl:4`, `gl:2*gl:3`; a bare size repeats the previous kind, so
/// `gl:2*2` is `gl:2*gl:2`.
impl FromStr for GroupDatum {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let bad = |reason: String| Error::Parse {
            text: text.to_string(),
            reason,
        };
        let mut blocks = Vec::new();
        let mut adjoint = false;
        for part in text.trim().split('*').map(str::trim) {
            let size = match part.split_once(':') {
                Some((kind, size)) => {
                    adjoint = match kind.trim() {
                        "gl" => false,
                        "pgl" => true,
                        other => return Err(bad(format!("unknown factor `{other}`"))),
                    };
                    size
                }
                None if !blocks.is_empty() => part,
                None => return Err(bad("expected `gl:n` or `pgl:n`".into())),
            };
            let size: usize = size
                .trim()
                .parse()
                .ok()
                .filter(|&s| s > 0)
                .ok_or_else(|| bad(format!("bad size `{size}`")))?;
            blocks.push(Block { size, adjoint });
        }
        Self::new(blocks)
    }
}
