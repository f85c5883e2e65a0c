//! The acceptable set `B(W̃, μ, σ)`, its maximum, and `Adm(μ)`.
//!
//! Newton points of `w ∈ t^μ W_a` are reported with the central part of
//! `μ^◇`: the raw `ν̄_{w,σ}` minus the central part of `λ^◇`. Adjoint blocks
//! are projected to trace zero on output only.

mod adm;
mod criterion;
mod enumerate;
mod maximal;

use std::collections::BTreeMap;
use std::env;

pub use adm::{adm_enumerate, adm_member, adm_newton_points};
pub use criterion::{mu_diamond_acceptable, newton_criterion, newton_witness};
pub use enumerate::{enumerate_acceptable, AcceptableSet};
pub use maximal::{maximal_newton, maximal_newton_state, MaximalSolverState};

use crate::newton::roots::{block_center, root_orbits};
use crate::newton::{
    adjoint_image, kappa, kappa_class, newton_point, FrobeniusDescriptor, KappaValue, NewtonPoint,
};
use crate::num::{q, to_q, Q};
use crate::weyl::{ExtAffineElement, GroupDatum};
use crate::{Error, Result};

/// A dominant `μ` together with the twist.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Problem {
    pub mu: Vec<i64>,
    pub frob: FrobeniusDescriptor,
}

impl Problem {
    pub fn new(mu: Vec<i64>, frob: FrobeniusDescriptor) -> Result<Self> {
        frob.datum().check_rank(mu.len())?;
        if !frob.datum().is_dominant(&mu) {
            return Err(Error::NotDominant(format!("{mu:?}")));
        }
        Ok(Self { mu, frob })
    }

    pub fn datum(&self) -> &GroupDatum {
        self.frob.datum()
    }

    pub fn mu_diamond(&self) -> Vec<Q> {
        self.frob.diamond(&to_q(&self.mu))
    }

    pub fn lambda_diamond(&self) -> Vec<Q> {
        self.frob.lambda_diamond()
    }

    pub fn t_mu(&self) -> ExtAffineElement {
        ExtAffineElement::translation(&self.mu)
    }

    pub fn kappa(&self) -> KappaValue {
        kappa_class(&self.frob, &kappa(self.datum(), &self.t_mu()))
    }

    pub fn orbits(&self) -> Vec<Vec<usize>> {
        root_orbits(&self.frob)
    }

    /// `ν̄_{w,σ}` with the central part of `μ^◇` (GL coordinates).
    pub fn normalized_newton(&self, w: &ExtAffineElement) -> Result<Vec<Q>> {
        let r = newton_point(w, &self.frob)?;
        Ok(r.nu_bar_raw
            .iter()
            .zip(self.frob.center_shift())
            .map(|(a, b)| a - b)
            .collect())
    }

    /// The reported point for a GL-coordinate vector.
    pub fn point(&self, v: &[Q]) -> NewtonPoint {
        NewtonPoint::new(self.datum(), adjoint_image(self.datum(), v), self.kappa())
            .expect("acceptable points are dominant")
    }

    /// Per-block polygon with vertices `(i, ⟨ω_k, v⟩ + (i/n_b)|v_b|)` at the
    /// roots `k` in `pairings`, through `(0,0)` and `(n_b, |v_b|)`, where the
    /// block totals come from `center`.
    pub(crate) fn interpolate(&self, pairings: &BTreeMap<usize, Q>, center: &[Q]) -> Vec<Q> {
        interpolate(self.datum(), pairings, center)
    }
}

pub(crate) fn interpolate(
    datum: &GroupDatum,
    pairings: &BTreeMap<usize, Q>,
    center: &[Q],
) -> Vec<Q> {
    let mut v = vec![q(0); datum.rank()];
    for b in 0..datum.num_blocks() {
        let r = datum.range(b);
        let size = r.len() as i64;
        let total: Q = center[r.clone()].iter().sum();
        let mut pts = vec![(0i64, q(0))];
        for (&k, &p) in pairings.range(r.start..r.end) {
            let i = (k + 1 - r.start) as i64;
            pts.push((i, p + total * Q::new(i, size)));
        }
        pts.push((size, total));
        for w in pts.windows(2) {
            let (i0, s0) = w[0];
            let (i1, s1) = w[1];
            let slope = (s1 - s0) / q(i1 - i0);
            for x in &mut v[r.start + i0 as usize..r.start + i1 as usize] {
                *x = slope;
            }
        }
    }
    v
}

/// Ranks and sizes allowed for the exhaustive routines.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Guard {
    /// `enumerate_acceptable` rank bound.
    pub acceptable_n: usize,
    /// `adm_enumerate` rank bound.
    pub adm_n: usize,
    /// Bound on `max μ − min μ` within a block for `adm_enumerate`.
    pub adm_entry: i64,
    /// Bound on `|Adm(μ)|`.
    pub adm_size: usize,
}

impl Default for Guard {
    fn default() -> Self {
        Self {
            acceptable_n: 8,
            adm_n: 5,
            adm_entry: 2,
            adm_size: 200_000,
        }
    }
}

impl Guard {
    pub fn unlimited() -> Self {
        Self {
            acceptable_n: usize::MAX,
            adm_n: usize::MAX,
            adm_entry: i64::MAX,
            adm_size: usize::MAX,
        }
    }

    /// Parses `key=value` pairs (`acceptable_n`, `adm_n`, `adm_entry`,
    /// `adm_size`) or `off`, on top of the defaults.
    pub fn parse(text: &str) -> Result<Self> {
        let t = text.trim();
        if t == "off" || t == "none" {
            return Ok(Self::unlimited());
        }
        let mut g = Self::default();
        for item in t.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let bad = || Error::Parse {
                text: text.to_string(),
                reason: format!("bad guard entry `{item}`"),
            };
            let (key, value) = item.split_once('=').ok_or_else(bad)?;
            let value = value.trim();
            match key.trim() {
                "acceptable_n" => g.acceptable_n = value.parse().map_err(|_| bad())?,
                "adm_n" => g.adm_n = value.parse().map_err(|_| bad())?,
                "adm_entry" => g.adm_entry = value.parse().map_err(|_| bad())?,
                "adm_size" => g.adm_size = value.parse().map_err(|_| bad())?,
                _ => return Err(bad()),
            }
        }
        Ok(g)
    }

    /// Defaults overridden by `BGMU_GUARD`, if set.
    pub fn from_env() -> Result<Self> {
        match env::var("BGMU_GUARD") {
            Ok(s) => Self::parse(&s),
            Err(_) => Ok(Self::default()),
        }
    }
}

pub(crate) fn center_of(problem: &Problem) -> Vec<Q> {
    problem.frob.center(&problem.mu_diamond())
}

pub(crate) fn same_center(datum: &GroupDatum, a: &[Q], b: &[Q]) -> bool {
    block_center(datum, a) == block_center(datum, b)
}
