use std::fmt;

use crate::num::{q, Q};
use crate::weyl::affine::{AffineMap, SignedPerm};
use crate::weyl::{superbasic_element, ExtAffineElement, GroupDatum, Permutation};
use crate::{Error, Result};

/// A diagram automorphism `σ₀`: block `b` goes to block `block_perm[b]`,
/// composed with `x ↦ (−x_n, …, −x_1)` on the blocks with `flips[b]` set.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DiagramAutomorphism {
    block_perm: Vec<usize>,
    flips: Vec<bool>,
}

impl DiagramAutomorphism {
    pub fn identity(blocks: usize) -> Self {
        Self {
            block_perm: (0..blocks).collect(),
            flips: vec![false; blocks],
        }
    }

    /// `block_perm` is 0-based.
    pub fn new(datum: &GroupDatum, block_perm: Vec<usize>, flips: Vec<bool>) -> Result<Self> {
        let r = datum.num_blocks();
        if block_perm.len() != r || flips.len() != r {
            return Err(Error::DimensionMismatch {
                expected: r,
                got: block_perm.len().max(flips.len()),
            });
        }
        let mut seen = vec![false; r];
        for (b, &img) in block_perm.iter().enumerate() {
            if img >= r || seen[img] {
                return Err(Error::Invalid(format!(
                    "{block_perm:?} is not a block permutation"
                )));
            }
            seen[img] = true;
            if datum.blocks()[b].size != datum.blocks()[img].size {
                return Err(Error::Invalid(format!(
                    "diagram automorphism maps block {} to block {} of different size",
                    b + 1,
                    img + 1
                )));
            }
            if datum.blocks()[b].adjoint != datum.blocks()[img].adjoint {
                return Err(Error::Invalid(
                    "diagram automorphism mixes GL and PGL blocks".into(),
                ));
            }
        }
        Ok(Self { block_perm, flips })
    }

    pub fn flip(datum: &GroupDatum) -> Self {
        let r = datum.num_blocks();
        Self {
            block_perm: (0..r).collect(),
            flips: vec![true; r],
        }
    }

    pub fn is_identity(&self) -> bool {
        self.block_perm.iter().enumerate().all(|(b, &i)| b == i) && self.flips.iter().all(|f| !f)
    }

    pub fn block_image(&self, b: usize) -> usize {
        self.block_perm[b]
    }

    pub fn flips(&self, b: usize) -> bool {
        self.flips[b]
    }

    pub fn num_blocks(&self) -> usize {
        self.block_perm.len()
    }

    /// The linear action on `ℚ^n`.
    pub fn signed_perm(&self, datum: &GroupDatum) -> SignedPerm {
        let n = datum.rank();
        let mut images = vec![0; n];
        let mut signs = vec![1; n];
        for b in 0..datum.num_blocks() {
            let size = datum.blocks()[b].size;
            let from = datum.offset(b);
            let to = datum.offset(self.block_perm[b]);
            for k in 0..size {
                if self.flips[b] {
                    images[from + k] = to + size - 1 - k;
                    signs[from + k] = -1;
                } else {
                    images[from + k] = to + k;
                }
            }
        }
        SignedPerm {
            perm: Permutation::from_zero_based(images),
            signs,
        }
    }

    /// Cycles of the block permutation, each starting at its least block.
    pub fn block_orbits(&self) -> Vec<Vec<usize>> {
        let r = self.num_blocks();
        let mut seen = vec![false; r];
        let mut out = Vec::new();
        for start in 0..r {
            if seen[start] {
                continue;
            }
            let mut orbit = Vec::new();
            let mut b = start;
            while !seen[b] {
                seen[b] = true;
                orbit.push(b);
                b = self.block_perm[b];
            }
            out.push(orbit);
        }
        out
    }

    pub fn compose(&self, other: &Self) -> Self {
        let r = self.num_blocks();
        let block_perm = (0..r)
            .map(|b| self.block_perm[other.block_perm[b]])
            .collect();
        let flips = (0..r)
            .map(|b| other.flips[b] ^ self.flips[other.block_perm[b]])
            .collect();
        Self { block_perm, flips }
    }

    pub fn order(&self) -> usize {
        let mut acc = self.clone();
        let mut k = 1;
        while !acc.is_identity() {
            acc = acc.compose(self);
            k += 1;
        }
        k
    }

    pub fn parse(datum: &GroupDatum, text: &str) -> Result<Self> {
        let t = text.trim();
        let r = datum.num_blocks();
        match t {
            "" | "id" => return Ok(Self::identity(r)),
            "flip" => return Ok(Self::flip(datum)),
            _ => {}
        }
        let mut block_perm = Vec::new();
        let mut flips = Vec::new();
        for entry in t.split(',') {
            let e = entry.trim();
            let (num, flip) = match e.strip_suffix('~') {
                Some(rest) => (rest, true),
                None => (e, false),
            };
            let img: usize = num.trim().parse().map_err(|_| Error::Parse {
                text: text.to_string(),
                reason: format!("bad block index `{e}`"),
            })?;
            if img == 0 {
                return Err(Error::Parse {
                    text: text.to_string(),
                    reason: "block indices are 1-based".into(),
                });
            }
            block_perm.push(img - 1);
            flips.push(flip);
        }
        Self::new(datum, block_perm, flips)
    }
}

impl fmt::Display for DiagramAutomorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_identity() {
            return write!(f, "id");
        }
        let parts: Vec<String> = self
            .block_perm
            .iter()
            .zip(&self.flips)
            .map(|(&b, &fl)| format!("{}{}", b + 1, if fl { "~" } else { "" }))
            .collect();
        write!(f, "{}", parts.join(","))
    }
}

/// The twist `σ = Ad(τ) ∘ σ₀` with a central shift applied to reported
/// Newton points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrobeniusDescriptor {
    datum: GroupDatum,
    tau: ExtAffineElement,
    sigma0: DiagramAutomorphism,
    normalization_shift: Vec<Q>,
}

impl FrobeniusDescriptor {
    pub fn new(
        datum: GroupDatum,
        tau: ExtAffineElement,
        sigma0: DiagramAutomorphism,
        normalization_shift: Vec<Q>,
    ) -> Result<Self> {
        datum.check_element(&tau)?;
        datum.check_rank(normalization_shift.len())?;
        if datum.length(&tau) != 0 {
            return Err(Error::NotLengthZero(tau.to_string()));
        }
        if !datum.is_dominant(tau.trans()) {
            return Err(Error::NotDominant(tau.to_string()));
        }
        if sigma0.num_blocks() != datum.num_blocks() {
            return Err(Error::DimensionMismatch {
                expected: datum.num_blocks(),
                got: sigma0.num_blocks(),
            });
        }
        DiagramAutomorphism::new(&datum, sigma0.block_perm.clone(), sigma0.flips.clone())?;
        for b in 0..datum.num_blocks() {
            let r = datum.range(b);
            if normalization_shift[r.clone()]
                .iter()
                .any(|x| *x != normalization_shift[r.start])
            {
                return Err(Error::Invalid("normalization shift must be central".into()));
            }
        }
        Ok(Self {
            datum,
            tau,
            sigma0,
            normalization_shift,
        })
    }

    pub fn trivial(datum: GroupDatum) -> Self {
        let n = datum.rank();
        let r = datum.num_blocks();
        Self {
            datum,
            tau: ExtAffineElement::identity(n),
            sigma0: DiagramAutomorphism::identity(r),
            normalization_shift: vec![q(0); n],
        }
    }

    pub fn inner(datum: GroupDatum, tau: ExtAffineElement) -> Result<Self> {
        let n = datum.rank();
        let r = datum.num_blocks();
        Self::new(datum, tau, DiagramAutomorphism::identity(r), vec![q(0); n])
    }

    /// `Ad(σ_{m,n})` on `GL_n`, reporting Newton points shifted by `(m/n)d^∨`.
    pub fn superbasic(m: u64, n: u64) -> Result<Self> {
        let tau = superbasic_element(m, n)?;
        let shift = vec![Q::new(m as i64, n as i64); n as usize];
        Self::new(
            GroupDatum::gl(n as usize),
            tau,
            DiagramAutomorphism::identity(1),
            shift,
        )
    }

    pub fn with_shift(mut self, shift: Vec<Q>) -> Result<Self> {
        self.datum.check_rank(shift.len())?;
        self.normalization_shift = shift;
        Self::new(self.datum, self.tau, self.sigma0, self.normalization_shift)
    }

    /// Same twist, with the shift that centres Newton points of `t^μ W_a`
    /// on `μ^◇`.
    pub fn normalized(self) -> Self {
        let shift = self.center_shift();
        Self {
            normalization_shift: shift,
            ..self
        }
    }

    pub fn datum(&self) -> &GroupDatum {
        &self.datum
    }

    pub fn tau(&self) -> &ExtAffineElement {
        &self.tau
    }

    pub fn sigma0(&self) -> &DiagramAutomorphism {
        &self.sigma0
    }

    pub fn normalization_shift(&self) -> &[Q] {
        &self.normalization_shift
    }

    /// The dominant `λ` with `τ ∈ t^λ W₀`.
    pub fn lambda(&self) -> &[i64] {
        self.tau.trans()
    }

    pub fn order(&self) -> usize {
        self.sigma0.order()
    }

    pub fn sigma0_linear(&self) -> SignedPerm {
        self.sigma0.signed_perm(&self.datum)
    }

    /// `x ↦ τ(σ₀ x)`.
    pub fn affine_map(&self) -> AffineMap {
        AffineMap::from_element(&self.tau).compose(&AffineMap::linear(self.sigma0_linear()))
    }

    pub fn is_quasi_split(&self) -> bool {
        self.tau.is_identity()
    }

    pub fn apply_sigma0(&self, v: &[Q]) -> Vec<Q> {
        self.sigma0_linear().apply_q(v)
    }

    pub fn apply_sigma0_int(&self, v: &[i64]) -> Vec<i64> {
        self.sigma0_linear().apply_i64(v)
    }

    /// `σ₀ w σ₀⁻¹`.
    pub fn sigma0_element(&self, w: &ExtAffineElement) -> ExtAffineElement {
        AffineMap::from_element(w)
            .conjugate(&AffineMap::linear(self.sigma0_linear()))
            .to_element()
            .expect("diagram automorphisms normalise W̃")
    }

    /// `σ(w) = τ σ₀(w) τ⁻¹`.
    pub fn apply_element(&self, w: &ExtAffineElement) -> ExtAffineElement {
        self.sigma0_element(w).conjugate_by(&self.tau)
    }

    /// Orbit average under `σ₀`.
    pub fn diamond(&self, v: &[Q]) -> Vec<Q> {
        let s = self.sigma0_linear();
        let order = self.order();
        let mut acc = vec![q(0); v.len()];
        let mut cur = v.to_vec();
        for _ in 0..order {
            for (a, c) in acc.iter_mut().zip(&cur) {
                *a += c;
            }
            cur = s.apply_q(&cur);
        }
        acc.into_iter().map(|x| x / q(order as i64)).collect()
    }

    pub fn lambda_diamond(&self) -> Vec<Q> {
        self.diamond(&crate::num::to_q(self.lambda()))
    }

    /// The central part: block averages, then averaged over `σ₀`.
    pub fn center(&self, v: &[Q]) -> Vec<Q> {
        let mut c = vec![q(0); v.len()];
        for b in 0..self.datum.num_blocks() {
            let r = self.datum.range(b);
            let avg: Q = v[r.clone()].iter().sum::<Q>() / q(r.len() as i64);
            for x in &mut c[r] {
                *x = avg;
            }
        }
        self.diamond(&c)
    }

    /// `center(λ^◇)`: subtracting it from `ν̄_{w,σ}` for `w ∈ t^μ W_a` lands
    /// on the central part of `μ^◇`.
    pub fn center_shift(&self) -> Vec<Q> {
        self.center(&self.lambda_diamond())
    }

    pub fn is_invariant(&self, v: &[Q]) -> bool {
        self.apply_sigma0(v) == v
    }

    /// `superbasic:m/n`, `id`, or `tau=<element>;sigma0=<automorphism>` (either
    /// key may be omitted).
    pub fn parse(datum: &GroupDatum, text: &str) -> Result<Self> {
        let t = text.trim();
        let bad = |reason: String| Error::Parse {
            text: text.to_string(),
            reason,
        };
        if t.is_empty() || t == "id" {
            return Ok(Self::trivial(datum.clone()));
        }
        if let Some(rest) = t.strip_prefix("superbasic:") {
            let (m, n) = rest
                .split_once('/')
                .ok_or_else(|| bad("expected `superbasic:m/n`".into()))?;
            let m: u64 = m.trim().parse().map_err(|_| bad(format!("bad m `{m}`")))?;
            let n: u64 = n.trim().parse().map_err(|_| bad(format!("bad n `{n}`")))?;
            if datum.num_blocks() != 1 || datum.rank() as u64 != n {
                return Err(bad(format!(
                    "superbasic:{m}/{n} needs a single block of size {n}"
                )));
            }
            let tau = superbasic_element(m, n)?;
            let shift = vec![Q::new(m as i64, n as i64); n as usize];
            return Self::new(datum.clone(), tau, DiagramAutomorphism::identity(1), shift);
        }
        let mut tau = ExtAffineElement::identity(datum.rank());
        let mut sigma0 = DiagramAutomorphism::identity(datum.num_blocks());
        for item in t.split(';').map(str::trim).filter(|s| !s.is_empty()) {
            match item.split_once('=') {
                Some(("tau", v)) => tau = v.parse()?,
                Some(("sigma0", v)) => sigma0 = DiagramAutomorphism::parse(datum, v)?,
                _ => return Err(bad(format!("unexpected `{item}`"))),
            }
        }
        Self::new(datum.clone(), tau, sigma0, vec![q(0); datum.rank()])
    }

    /// Conjugate twist `Ad(τ₀) ∘ σ ∘ Ad(τ₀)⁻¹ = Ad(τ₀ τ σ₀(τ₀)⁻¹) ∘ σ₀`.
    pub fn conjugated(&self, tau0: &ExtAffineElement) -> Result<Self> {
        if self.datum.length(tau0) != 0 {
            return Err(Error::NotLengthZero(tau0.to_string()));
        }
        let new_tau = &(tau0 * &self.tau) * &self.sigma0_element(tau0).inverse();
        Self::new(
            self.datum.clone(),
            new_tau,
            self.sigma0.clone(),
            self.normalization_shift.clone(),
        )
    }
}

impl fmt::Display for FrobeniusDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "tau={};sigma0={}", self.tau, self.sigma0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::frac;

    #[test]
    fn parsing() {
        let g = GroupDatum::gl(2);
        assert_eq!(
            FrobeniusDescriptor::parse(&g, "superbasic:1/2").unwrap(),
            FrobeniusDescriptor::superbasic(1, 2).unwrap()
        );
        assert_eq!(
            FrobeniusDescriptor::parse(&g, "id").unwrap(),
            FrobeniusDescriptor::trivial(g.clone())
        );
        let f = FrobeniusDescriptor::parse(&g, "tau=t[1,0]*cyc(1,2);sigma0=flip").unwrap();
        assert_eq!(f.to_string(), "tau=t[1,0]*cyc(1,2);sigma0=1~");
        assert_eq!(FrobeniusDescriptor::parse(&g, &f.to_string()).unwrap(), f);
        let gg = GroupDatum::gl_blocks(&[2, 2]).unwrap();
        let f = FrobeniusDescriptor::parse(&gg, "sigma0=2,1").unwrap();
        assert_eq!(f.sigma0().block_orbits().len(), 1);
        for bad in [
            "superbasic:2/4",
            "superbasic:1/3",
            "tau=t[1,0]",
            "foo=1",
            "tau=t[0,0]*cyc(1,2)",
        ] {
            assert!(FrobeniusDescriptor::parse(&g, bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn flip_on_gl3() {
        let g = GroupDatum::gl(3);
        let f = FrobeniusDescriptor::new(
            g.clone(),
            ExtAffineElement::identity(3),
            DiagramAutomorphism::flip(&g),
            vec![q(0); 3],
        )
        .unwrap();
        assert_eq!(f.order(), 2);
        assert_eq!(f.diamond(&[q(2), q(1), q(0)]), vec![q(1), q(0), q(-1)]);
        // the flip permutes the affine simple reflections
        for s in g.letters() {
            let image = f.sigma0_element(&g.reflection(s));
            assert_eq!(g.length(&image), 1);
        }
    }

    #[test]
    fn swapped_blocks() {
        let g = GroupDatum::gl_blocks(&[2, 2]).unwrap();
        let s0 = DiagramAutomorphism::parse(&g, "2,1").unwrap();
        let f =
            FrobeniusDescriptor::new(g, ExtAffineElement::identity(4), s0, vec![q(0); 4]).unwrap();
        let d = f.diamond(&[q(1), q(0), q(0), q(0)]);
        assert_eq!(d, vec![frac(1, 2), q(0), frac(1, 2), q(0)]);
    }

    #[test]
    fn superbasic_descriptor() {
        let f = FrobeniusDescriptor::superbasic(5, 8).unwrap();
        assert_eq!(f.center_shift(), vec![frac(5, 8); 8]);
        assert_eq!(f.lambda(), &[1, 1, 1, 1, 1, 0, 0, 0]);
        let g = f.conjugated(f.tau()).unwrap();
        assert_eq!(g.tau(), f.tau());
    }

    #[test]
    fn rejects_bad_data() {
        let g = GroupDatum::gl(2);
        let t = ExtAffineElement::translation(&[1, 0]);
        assert!(FrobeniusDescriptor::inner(g.clone(), t).is_err());
        let g2 = GroupDatum::gl_blocks(&[2, 1]).unwrap();
        assert!(DiagramAutomorphism::parse(&g2, "2,1").is_err());
        assert!(DiagramAutomorphism::parse(&g2, "1~,2").is_ok());
    }
}
