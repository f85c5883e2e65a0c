//! The peeling construction for `σ_{m,n}`: a sharp decomposition of
//! `θ = μ + χ_{m,n}` together with a strictly decreasing Bruhat chain from
//! `t^{ε(μ)} σ_{m,n}` down to `ε t^θ x_c ε⁻¹`.

use super::euclid::{euclid_chain, level_decompose, EuclideanChain};
use super::segment::{polygon, Segment};
use super::sequences::{chi, epsilon};
use crate::acceptable::{maximal_newton, Problem};
use crate::newton::{newton_point, FrobeniusDescriptor, NewtonPoint};
use crate::num::{fmt_vec, Q};
use crate::weyl::{superbasic_element, ExtAffineElement, GroupDatum, Permutation};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PeelCase {
    /// `ι` meets several elementary subsegments: split off `ζ` and `ξ`.
    Split,
    /// `ι` lies inside one elementary subsegment: the block is finished.
    Elementary,
}

/// One round of the construction on a block; intervals are in `χ`-coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PeelStep {
    pub level: usize,
    pub iota: (usize, usize),
    pub case: PeelCase,
    pub zeta: Option<(usize, usize)>,
    pub gamma: Option<(usize, usize)>,
    pub xi: Option<(usize, usize)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockPeel {
    /// `[b_{i−1} + 1, b_i]`.
    pub range: (usize, usize),
    pub steps: Vec<PeelStep>,
    /// `c_i = (ζ¹, …, ζ^l, γ^l, ξ^l, …, ξ¹)` with empty pieces dropped.
    pub pieces: Vec<(usize, usize)>,
}

/// An element of the chain together with how it was reached.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainLink {
    pub label: String,
    pub element: ExtAffineElement,
    pub length: usize,
    /// The transposition applied on the right, in `θ`-coordinates.
    pub multiplier: Option<Permutation>,
    /// The same transposition conjugated by `ε`.
    pub conjugated: Option<Permutation>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PeelCertificate {
    pub m: u64,
    pub n: u64,
    pub mu: Vec<i64>,
    pub chi: Vec<i64>,
    pub theta: Vec<i64>,
    pub epsilon: Permutation,
    /// `b_0 = 0 < b_1 < ⋯ < b_r = n`.
    pub breakpoints: Vec<usize>,
    pub blocks: Vec<BlockPeel>,
    pub decomposition: Vec<Segment>,
    pub slopes: Vec<Q>,
    pub chain: Vec<ChainLink>,
    /// `w_c = t^θ x_c`.
    pub w_c: ExtAffineElement,
}

impl PeelCertificate {
    /// The conjugated multipliers in order.
    pub fn steps(&self) -> Vec<Permutation> {
        self.chain
            .iter()
            .filter_map(|l| l.conjugated.clone())
            .collect()
    }
}

/// `x_η = cyc(h(η), …, t(η))`.
fn x_interval(n: usize, iv: Option<(usize, usize)>) -> Permutation {
    match iv {
        Some((a, b)) if a < b => {
            Permutation::cycle(n, &(a..=b).collect::<Vec<_>>()).expect("valid interval")
        }
        _ => Permutation::identity(n),
    }
}

fn verify(ok: bool, what: impl FnOnce() -> String) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::Verification(what()))
    }
}

struct Peeler<'a> {
    n: usize,
    datum: GroupDatum,
    chain: &'a EuclideanChain,
    theta_t: ExtAffineElement,
    eps: ExtAffineElement,
    eps_inv: ExtAffineElement,
    eps_perm: Permutation,
    links: Vec<ChainLink>,
    current: ExtAffineElement,
}

impl Peeler<'_> {
    fn conj(&self, w: &ExtAffineElement) -> ExtAffineElement {
        &(&self.eps * w) * &self.eps_inv
    }

    /// `z = t^θ y x v` with `v = cyc(h(γ), …, t(γ), b + 1, …, n)`.
    fn z(
        &self,
        y: &Permutation,
        x: &Permutation,
        gamma: Option<(usize, usize)>,
        b: usize,
    ) -> ExtAffineElement {
        let mut pts: Vec<usize> = gamma.map(|(a, c)| (a..=c).collect()).unwrap_or_default();
        pts.extend(b + 1..=self.n);
        let v = if pts.len() > 1 {
            Permutation::cycle(self.n, &pts).expect("distinct points")
        } else {
            Permutation::identity(self.n)
        };
        let perm = y.compose(x).compose(&v);
        &self.theta_t * &ExtAffineElement::from_perm(perm)
    }

    fn step(&mut self, label: String, a: usize, b: usize) -> Result<()> {
        let t = Permutation::transposition(self.n, a, b);
        let conjugated =
            Permutation::transposition(self.n, self.eps_perm.apply(a), self.eps_perm.apply(b));
        let next = &self.current * &ExtAffineElement::from_perm(conjugated.clone());
        let (l0, l1) = (self.datum.length(&self.current), self.datum.length(&next));
        verify(
            l1 < l0 && self.datum.bruhat_leq(&next, &self.current),
            || format!("{label}: {next} is not strictly below {}", self.current),
        )?;
        self.links.push(ChainLink {
            label,
            element: next.clone(),
            length: l1,
            multiplier: Some(t),
            conjugated: Some(conjugated),
        });
        self.current = next;
        Ok(())
    }

    fn expect_current(&self, label: &str, expected: &ExtAffineElement) -> Result<()> {
        let e = self.conj(expected);
        verify(self.current == e, || {
            format!("{label}: chain reached {} instead of {e}", self.current)
        })
    }

    fn to_chi(&self, h: usize, iv: (usize, usize)) -> (usize, usize) {
        (
            self.chain.blocks[h][iv.0 - 1].0,
            self.chain.blocks[h][iv.1 - 1].1,
        )
    }
}

/// Runs the construction for dominant `μ` and coprime `0 < m < n`.
pub fn sharp_peel(mu: &[i64], m: u64, n: u64) -> Result<PeelCertificate> {
    let chi_v = chi(m, n)?;
    let nn = n as usize;
    let datum = GroupDatum::gl(nn);
    datum.check_rank(mu.len())?;
    if !datum.is_dominant(mu) {
        return Err(Error::NotDominant(format!("{mu:?}")));
    }
    let chain = euclid_chain(m, n)?;
    let eps_perm = epsilon(&chi_v)?;
    let theta: Vec<i64> = mu.iter().zip(&chi_v).map(|(a, b)| a + b).collect();
    let theta_seg = Segment::whole(&theta);
    let eps = ExtAffineElement::from_perm(eps_perm.clone());
    let sigma = superbasic_element(m, n)?;

    let x_theta = x_interval(nn, Some((1, nn)));
    let start = &(&eps * &ExtAffineElement::new(theta.clone(), x_theta)?) * &eps.inverse();
    let top = &ExtAffineElement::translation(&eps_perm.act(mu)) * &sigma;
    verify(start == top, || {
        format!("ε t^θ x_θ ε⁻¹ = {start} differs from t^ε(μ) σ = {top}")
    })?;

    let mut p = Peeler {
        n: nn,
        datum: datum.clone(),
        chain: &chain,
        theta_t: ExtAffineElement::translation(&theta),
        eps_inv: eps.inverse(),
        eps,
        eps_perm: eps_perm.clone(),
        links: vec![ChainLink {
            label: "z_{1,0}".into(),
            length: datum.length(&start),
            element: start.clone(),
            multiplier: None,
            conjugated: None,
        }],
        current: start,
    };

    let mut breakpoints = vec![0];
    breakpoints.extend((1..nn).filter(|&j| mu[j - 1] != mu[j]));
    breakpoints.push(nn);

    let mut y = Permutation::identity(nn);
    let mut blocks = Vec::new();
    let mut decomposition = Vec::new();
    for i in 1..breakpoints.len() {
        let (s, e) = (breakpoints[i - 1] + 1, breakpoints[i]);
        let mut zetas: Vec<(usize, usize)> = Vec::new();
        let mut xis: Vec<(usize, usize)> = Vec::new();
        let mut gamma = Some((s, e));
        let mut steps = Vec::new();
        let x_ij = |zetas: &[(usize, usize)], xis: &[(usize, usize)]| {
            let mut x = Permutation::identity(nn);
            for &z in zetas {
                x = x.compose(&x_interval(nn, Some(z)));
            }
            for &z in xis.iter().rev() {
                x = x.compose(&x_interval(nn, Some(z)));
            }
            x
        };
        p.expect_current(&format!("z_{{{i},0}}"), &p.z(&y, &x_ij(&[], &[]), gamma, e))?;
        let mut j = 0;
        while let Some((ga, gb)) = gamma {
            let info = level_decompose(&chain, ga, gb)?;
            if info.elementary.is_some() {
                steps.push(PeelStep {
                    level: info.level,
                    iota: info.iota,
                    case: PeelCase::Elementary,
                    zeta: None,
                    gamma,
                    xi: None,
                });
                break;
            }
            let h = info.level;
            let (ka, kb) = info.iota;
            let spans = &chain.spans[h];
            let &(sa, ea) = spans
                .iter()
                .find(|&&(a, b)| a <= ka && ka <= b)
                .expect("span");
            let &(sb, eb) = spans
                .iter()
                .find(|&&(a, b)| a <= kb && kb <= b)
                .expect("span");
            let zeta_h = (ka != sa).then_some((ka, ea));
            let mut xi_h = (kb != eb).then_some((sb, kb));
            let g_from = if zeta_h.is_some() { ea + 1 } else { ka };
            let g_to = if xi_h.is_some() { sb - 1 } else { kb };
            let mut gamma_h = (g_from <= g_to).then_some((g_from, g_to));
            if gamma_h.is_none() {
                gamma_h = xi_h.take();
            }
            let zeta = zeta_h.map(|iv| p.to_chi(h, iv));
            let xi = xi_h.map(|iv| p.to_chi(h, iv));
            let new_gamma = gamma_h.map(|iv| p.to_chi(h, iv));
            steps.push(PeelStep {
                level: h,
                iota: info.iota,
                case: PeelCase::Split,
                zeta,
                gamma: new_gamma,
                xi,
            });
            if let Some((_, zt)) = zeta {
                p.step(format!("(d) block {i} round {}", j + 1), nn, zt)?;
            }
            if let Some((xh, xt)) = xi {
                p.step(format!("(e) block {i} round {}", j + 1), xh - 1, xt)?;
            }
            zetas.extend(zeta);
            xis.extend(xi);
            gamma = new_gamma;
            j += 1;
            p.expect_current(
                &format!("z_{{{i},{j}}}"),
                &p.z(&y, &x_ij(&zetas, &xis), gamma, e),
            )?;
        }
        let mut pieces = zetas.clone();
        pieces.extend(gamma);
        pieces.extend(xis.iter().rev());
        for &iv in &pieces {
            y = y.compose(&x_interval(nn, Some(iv)));
            decomposition.push(theta_seg.sub(iv.0, iv.1));
        }
        if let Some((_, gt)) = gamma {
            if gt != nn {
                p.step(format!("(f) block {i}"), gt, nn)?;
            }
        }
        if i + 1 < breakpoints.len() {
            let next = (e + 1, breakpoints[i + 1]);
            p.expect_current(
                &format!("z_{{{},0}}", i + 1),
                &p.z(&y, &Permutation::identity(nn), Some(next), next.1),
            )?;
        }
        blocks.push(BlockPeel {
            range: (s, e),
            steps,
            pieces,
        });
    }

    let w_c = ExtAffineElement::new(theta.clone(), y)?;
    p.expect_current("w_c", &w_c)?;

    let mut slopes = Vec::new();
    for piece in &decomposition {
        verify(piece.is_sharp_in(&theta_seg), || {
            format!("piece {piece} is not sharp")
        })?;
        let av = piece.av().expect("pieces are nonempty");
        slopes.extend(std::iter::repeat_n(av, piece.size()));
    }
    let hull = polygon(&theta_seg).slopes;
    verify(slopes == hull, || {
        format!(
            "decomposition slopes {} differ from the hull {}",
            fmt_vec(&slopes),
            fmt_vec(&hull)
        )
    })?;
    let nu_c = newton_point(&w_c, &FrobeniusDescriptor::trivial(datum))?;
    verify(nu_c.nu_bar_raw == slopes, || {
        format!(
            "ν of w_c is {} instead of {}",
            fmt_vec(&nu_c.nu_bar_raw),
            fmt_vec(&slopes)
        )
    })?;

    Ok(PeelCertificate {
        m,
        n,
        mu: mu.to_vec(),
        chi: chi_v,
        theta,
        epsilon: eps_perm,
        breakpoints,
        blocks,
        decomposition,
        slopes,
        chain: p.links,
        w_c,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuperbasicWitness {
    /// `ν̄_{w̃, σ_{m,n}}`.
    pub nu_raw: Vec<Q>,
    /// `ν̄ − (m/n)d^∨`, the maximum of the acceptable set.
    pub nu: NewtonPoint,
    pub w_tilde: ExtAffineElement,
    pub x: Permutation,
    pub cert: PeelCertificate,
}

/// `w̃ = ε w_c ε⁻¹ σ_{m,n}⁻¹ ≤ t^{ε(μ)}` realising the maximal Newton point.
pub fn superbasic_witness(mu: &[i64], m: u64, n: u64) -> Result<SuperbasicWitness> {
    let cert = sharp_peel(mu, m, n)?;
    let datum = GroupDatum::gl(n as usize);
    let sigma = superbasic_element(m, n)?;
    let eps = ExtAffineElement::from_perm(cert.epsilon.clone());
    let w_tilde = &(&(&eps * &cert.w_c) * &eps.inverse()) * &sigma.inverse();
    let bound = ExtAffineElement::translation(&cert.epsilon.act(mu));
    verify(datum.bruhat_leq(&w_tilde, &bound), || {
        format!("{w_tilde} is not below {bound}")
    })?;
    let strict = cert.chain.len() > 1;
    verify(strict == (w_tilde != bound), || {
        "strictness does not match the chain".into()
    })?;

    let frob = FrobeniusDescriptor::superbasic(m, n)?;
    let report = newton_point(&w_tilde, &frob)?;
    verify(report.nu_bar_raw == cert.slopes, || {
        format!(
            "ν̄ of w̃ is {} instead of {}",
            fmt_vec(&report.nu_bar_raw),
            fmt_vec(&cert.slopes)
        )
    })?;
    let problem = Problem::new(mu.to_vec(), frob.normalized())?;
    let max = maximal_newton(&problem)?;
    verify(report.nu_bar.nu == max.nu, || {
        format!("normalized ν̄ {} is not the maximum {}", report.nu_bar, max)
    })?;
    let shift = Q::new(m as i64, n as i64);
    debug_assert!(report
        .nu_bar
        .nu
        .iter()
        .zip(&cert.slopes)
        .all(|(a, b)| *a == b - shift));
    Ok(SuperbasicWitness {
        nu_raw: report.nu_bar_raw,
        nu: report.nu_bar,
        w_tilde,
        x: cert.epsilon.clone(),
        cert,
    })
}
