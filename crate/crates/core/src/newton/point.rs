use std::fmt;

use super::roots::block_center;
use super::FrobeniusDescriptor;
use crate::num::{fmt_vec, q, to_q, Q};
use crate::weyl::affine::AffineMap;
use crate::weyl::{ExtAffineElement, GroupDatum, Permutation};
use crate::{Error, Result};

/// Image in `Ω`: one coordinate per component, taken modulo `moduli[i]`
/// (`0` meaning no reduction).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct KappaValue {
    pub values: Vec<i64>,
    pub moduli: Vec<u64>,
}

impl KappaValue {
    pub fn new(values: Vec<i64>, moduli: Vec<u64>) -> Self {
        let values = values
            .into_iter()
            .zip(&moduli)
            .map(|(v, &m)| if m == 0 { v } else { v.rem_euclid(m as i64) })
            .collect();
        Self { values, moduli }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(
            self.moduli, other.moduli,
            "kappa values of different groups"
        );
        Self::new(
            self.values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| a + b)
                .collect(),
            self.moduli.clone(),
        )
    }
}

impl fmt::Display for KappaValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .values
            .iter()
            .zip(&self.moduli)
            .map(|(v, m)| {
                if *m == 0 {
                    v.to_string()
                } else {
                    format!("{v} mod {m}")
                }
            })
            .collect();
        write!(f, "{}", parts.join(","))
    }
}

/// Translation sum per block, reduced modulo `n_b` on PGL blocks.
pub fn kappa(datum: &GroupDatum, w: &ExtAffineElement) -> KappaValue {
    let moduli = datum
        .blocks()
        .iter()
        .map(|b| if b.adjoint { b.size as u64 } else { 0 })
        .collect();
    KappaValue::new(datum.block_sums(w), moduli)
}

/// Reduction of a per-block value to `σ₀`-coinvariants: one coordinate per
/// orbit of blocks, reduced modulo 2 when the orbit carries an odd number of
/// flips.
pub fn kappa_class(frob: &FrobeniusDescriptor, k: &KappaValue) -> KappaValue {
    let s0 = frob.sigma0();
    let mut values = Vec::new();
    let mut moduli = Vec::new();
    for orbit in s0.block_orbits() {
        let mut sign = 1i64;
        let mut acc = 0i64;
        let mut modulus = k.moduli[orbit[0]];
        for &b in &orbit {
            acc += sign * k.values[b];
            modulus = num_integer::gcd(modulus, k.moduli[b]);
            if s0.flips(b) {
                sign = -sign;
            }
        }
        if sign == -1 {
            modulus = num_integer::gcd(modulus, 2);
        }
        values.push(acc);
        moduli.push(modulus);
    }
    KappaValue::new(values, moduli)
}

/// A dominant rational vector together with its Kottwitz coordinate.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NewtonPoint {
    pub nu: Vec<Q>,
    pub kappa: KappaValue,
    pub blocks: Vec<usize>,
}

impl NewtonPoint {
    pub fn new(datum: &GroupDatum, nu: Vec<Q>, kappa: KappaValue) -> Result<Self> {
        datum.check_rank(nu.len())?;
        if !datum.is_dominant(&nu) {
            return Err(Error::NotDominant(fmt_vec(&nu)));
        }
        Ok(Self {
            nu,
            kappa,
            blocks: datum.blocks().iter().map(|b| b.size).collect(),
        })
    }

    /// A point of `GL_{n₁} × ⋯` whose Kottwitz coordinate is its block sums.
    pub fn from_vector(datum: &GroupDatum, nu: Vec<Q>) -> Result<Self> {
        datum.check_rank(nu.len())?;
        let mut values = Vec::new();
        for b in 0..datum.num_blocks() {
            let s: Q = nu[datum.range(b)].iter().sum();
            if !s.is_integer() {
                return Err(Error::Invalid(format!("block sum {s} is not integral")));
            }
            values.push(s.to_integer());
        }
        Self::new(
            datum,
            nu,
            KappaValue::new(values, vec![0; datum.num_blocks()]),
        )
    }

    pub fn gl(nu: Vec<Q>) -> Result<Self> {
        Self::from_vector(&GroupDatum::gl(nu.len()), nu)
    }

    fn ranges(&self) -> Vec<std::ops::Range<usize>> {
        let mut out = Vec::new();
        let mut o = 0;
        for &s in &self.blocks {
            out.push(o..o + s);
            o += s;
        }
        out
    }
}

impl fmt::Display for NewtonPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", fmt_vec(&self.nu))
    }
}

/// Per block: partial sums of `a` bounded by those of `b`, with equal totals.
pub fn dominance_leq_vec(datum: &GroupDatum, a: &[Q], b: &[Q]) -> bool {
    (0..datum.num_blocks()).all(|blk| {
        let r = datum.range(blk);
        let (mut sa, mut sb) = (q(0), q(0));
        for i in r {
            sa += a[i];
            sb += b[i];
            if sa > sb {
                return false;
            }
        }
        sa == sb
    })
}

pub fn dominance_leq(a: &NewtonPoint, b: &NewtonPoint) -> Result<bool> {
    if a.kappa != b.kappa {
        return Err(Error::KappaMismatch(
            a.kappa.to_string(),
            b.kappa.to_string(),
        ));
    }
    if a.blocks != b.blocks {
        return Err(Error::Invalid("newton points of different groups".into()));
    }
    for p in [a, b] {
        if p.ranges()
            .iter()
            .any(|r| p.nu[r.clone()].windows(2).any(|w| w[0] < w[1]))
        {
            return Err(Error::NotDominant(p.to_string()));
        }
    }
    Ok(a.ranges().into_iter().all(|r| {
        let (mut sa, mut sb) = (q(0), q(0));
        for i in r {
            sa += a.nu[i];
            sb += b.nu[i];
            if sa > sb {
                return false;
            }
        }
        sa == sb
    }))
}

/// Sorts each block decreasingly; `z(v) = v̄` with `z` of minimal length
/// (equal entries keep their relative order).
pub fn dominant_rep<T: PartialOrd + Clone>(datum: &GroupDatum, v: &[T]) -> (Vec<T>, Permutation) {
    let mut images = vec![0; v.len()];
    for b in 0..datum.num_blocks() {
        let r = datum.range(b);
        let mut idx: Vec<usize> = r.clone().collect();
        idx.sort_by(|&i, &j| v[j].partial_cmp(&v[i]).expect("comparable entries"));
        for (pos, &i) in idx.iter().enumerate() {
            images[i] = r.start + pos;
        }
    }
    let z = Permutation::from_zero_based(images);
    (z.act(v), z)
}

pub fn diamond(mu: &[i64], frob: &FrobeniusDescriptor) -> Vec<Q> {
    frob.diamond(&to_q(mu))
}

/// Projects adjoint blocks to trace zero.
pub fn adjoint_image(datum: &GroupDatum, v: &[Q]) -> Vec<Q> {
    let c = block_center(datum, v);
    (0..v.len())
        .map(|i| {
            if datum.blocks()[datum.block_of(i)].adjoint {
                v[i] - c[i]
            } else {
                v[i]
            }
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NewtonReport {
    /// `(wσ)^n = t^λ`.
    pub n: usize,
    pub lambda: Vec<i64>,
    pub nu: Vec<Q>,
    /// Dominant representative before any shift.
    pub nu_bar_raw: Vec<Q>,
    /// `ν̄` minus the descriptor's normalization shift, adjoint blocks projected.
    pub nu_bar: NewtonPoint,
}

/// Iterates `x ↦ w(τ(σ₀ x))` until its linear part is trivial.
pub fn newton_point(w: &ExtAffineElement, frob: &FrobeniusDescriptor) -> Result<NewtonReport> {
    let datum = frob.datum();
    datum.check_element(w)?;
    let f = AffineMap::from_element(w).compose(&frob.affine_map());
    let mut g = f.clone();
    let mut n = 1;
    while !g.linear.is_identity() {
        g = f.compose(&g);
        n += 1;
    }
    let lambda = g.shift;
    let nu: Vec<Q> = lambda.iter().map(|&x| Q::new(x, n as i64)).collect();
    let (nu_bar_raw, _) = dominant_rep(datum, &nu);
    let shifted: Vec<Q> = nu_bar_raw
        .iter()
        .zip(frob.normalization_shift())
        .map(|(a, b)| a - b)
        .collect();
    let kappa = kappa_class(frob, &kappa(datum, w));
    let nu_bar = NewtonPoint::new(datum, adjoint_image(datum, &shifted), kappa)?;
    Ok(NewtonReport {
        n,
        lambda,
        nu,
        nu_bar_raw,
        nu_bar,
    })
}
