use std::collections::BTreeSet;

use super::{ParabolicData, StepData, TraceStep, Witness};
use crate::acceptable::Problem;
use crate::newton::roots::{orbit_pairing, root_orbits, simple_roots};
use crate::newton::{dominant_rep, DiagramAutomorphism, FrobeniusDescriptor};
use crate::num::{fmt_vec, q, to_q, Q};
use crate::weyl::{Block, ExtAffineElement, GroupDatum, Permutation};
use crate::{Error, Result};

fn verify(ok: bool, what: impl FnOnce() -> String) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::Verification(what()))
    }
}

/// The same problem over the adjoint group. Elements are kept in GL
/// coordinates, so the step only changes the Kottwitz bookkeeping.
pub fn adjoint_project(problem: &Problem) -> Result<(Problem, TraceStep)> {
    let f = &problem.frob;
    let adj = f.datum().to_adjoint();
    let s0 = f.sigma0();
    let r = adj.num_blocks();
    let sigma0 = DiagramAutomorphism::new(
        &adj,
        (0..r).map(|b| s0.block_image(b)).collect(),
        (0..r).map(|b| s0.flips(b)).collect(),
    )?;
    let frob = FrobeniusDescriptor::new(
        adj,
        f.tau().clone(),
        sigma0,
        f.normalization_shift().to_vec(),
    )?;
    let sub = Problem::new(problem.mu.clone(), frob)?;
    Ok((
        sub.clone(),
        TraceStep {
            data: StepData::Adjoint,
            problem: sub,
        },
    ))
}

/// Replaces `σ` by `τ₀ σ τ₀⁻¹`.
pub fn omega_conjugate(problem: &Problem, tau0: &ExtAffineElement) -> Result<(Problem, TraceStep)> {
    let frob = problem.frob.conjugated(tau0)?;
    let sub = Problem::new(problem.mu.clone(), frob)?;
    Ok((
        sub.clone(),
        TraceStep {
            data: StepData::OmegaConjugate { tau0: tau0.clone() },
            problem: sub,
        },
    ))
}

/// The restriction to a `σ₀`-stable set of blocks, listed increasingly.
pub(crate) fn restrict_blocks(problem: &Problem, blocks: &[usize]) -> Result<Problem> {
    let f = &problem.frob;
    let datum = f.datum();
    let sub = datum.sub_datum(blocks);
    let coords = datum.coords(blocks);
    let pos = |b: usize| {
        blocks
            .iter()
            .position(|&c| c == b)
            .expect("σ₀-stable block set")
    };
    let s0 = f.sigma0();
    let sigma0 = DiagramAutomorphism::new(
        &sub,
        blocks.iter().map(|&b| pos(s0.block_image(b))).collect(),
        blocks.iter().map(|&b| s0.flips(b)).collect(),
    )?;
    let shift = coords.iter().map(|&i| f.normalization_shift()[i]).collect();
    let frob = FrobeniusDescriptor::new(sub, f.tau().gather(&coords), sigma0, shift)?;
    Problem::new(coords.iter().map(|&i| problem.mu[i]).collect(), frob)
}

/// The component of `w` on block `b`, as an element of the whole group.
fn component(datum: &GroupDatum, w: &ExtAffineElement, b: usize) -> ExtAffineElement {
    let coords = datum.coords(&[b]);
    w.gather(&coords).scatter(datum.rank(), &coords)
}

/// `σ₀`-orbit of blocks `b₁ → b₂ → ⋯ → b_m`, starting at the least block.
fn block_cycle(problem: &Problem) -> Result<Vec<usize>> {
    let orbits = problem.frob.sigma0().block_orbits();
    if orbits.len() != 1 {
        return Err(Error::Invalid(format!(
            "σ₀ has {} orbits on the blocks; split into orbits first",
            orbits.len()
        )));
    }
    Ok(orbits.into_iter().next().unwrap())
}

/// `τ₀ ∈ Ω` with `τ₀ τ σ₀(τ₀)⁻¹` supported on the last block of the cycle.
fn concentrating_conjugator(problem: &Problem, cycle: &[usize]) -> Result<ExtAffineElement> {
    let datum = problem.datum();
    let mut tau0 = ExtAffineElement::identity(datum.rank());
    for &b in &cycle[..cycle.len() - 1] {
        let cur = problem.frob.conjugated(&tau0)?;
        let c = component(datum, cur.tau(), b);
        tau0 = &c.inverse() * &tau0;
    }
    Ok(tau0)
}

/// `σ₀` applied `k` times to a coweight living on block `from`, returned in
/// block-local coordinates of the target block.
fn transport(problem: &Problem, from: usize, v: &[i64], k: usize) -> (usize, Vec<i64>) {
    let s0 = problem.frob.sigma0();
    let mut b = from;
    let mut cur = v.to_vec();
    for _ in 0..k {
        if s0.flips(b) {
            cur = cur.iter().rev().map(|x| -x).collect();
        }
        b = s0.block_image(b);
    }
    (b, cur)
}

/// For `σ` permuting `m` identical blocks transitively: conjugates `τ` into the
/// last block `b_m` and returns `(W̃_m, γ, σ^m)` with
/// `γ = Σ_k σ₀^k(μ_{b_{m−k}})`.
pub fn product_split(problem: &Problem) -> Result<(Problem, Vec<TraceStep>)> {
    let cycle = block_cycle(problem)?;
    let m = cycle.len();
    if m == 1 {
        return Ok((problem.clone(), Vec::new()));
    }
    let mut steps = Vec::new();
    let tau0 = concentrating_conjugator(problem, &cycle)?;
    let conj = if tau0.is_identity() {
        problem.clone()
    } else {
        let (p, step) = omega_conjugate(problem, &tau0)?;
        steps.push(step);
        p
    };
    let datum = conj.datum();
    let last = cycle[m - 1];
    let coords = datum.coords(&[last]);
    let tau = conj.frob.tau();
    verify(&component(datum, tau, last) == tau, || {
        format!("τ = {tau} is not concentrated on block {}", last + 1)
    })?;

    let mut parts = Vec::new();
    let mut gamma = vec![0i64; coords.len()];
    for k in 0..m {
        let b = cycle[m - 1 - k];
        let local: Vec<i64> = datum.range(b).map(|i| conj.mu[i]).collect();
        let (to, part) = transport(&conj, b, &local, k);
        debug_assert_eq!(to, last);
        for (g, p) in gamma.iter_mut().zip(&part) {
            *g += p;
        }
        parts.push(part);
    }
    let parity = cycle
        .iter()
        .filter(|&&b| conj.frob.sigma0().flips(b))
        .count()
        % 2
        == 1;
    let sub_datum = datum.sub_datum(&[last]);
    let sigma0 = DiagramAutomorphism::new(&sub_datum, vec![0], vec![parity])?;
    let shift = coords
        .iter()
        .map(|&i| conj.frob.normalization_shift()[i] * q(m as i64))
        .collect();
    let frob = FrobeniusDescriptor::new(sub_datum, tau.gather(&coords), sigma0, shift)?;
    let sub = Problem::new(gamma.clone(), frob)?;
    steps.push(TraceStep {
        data: StepData::ProductSplit {
            cycle,
            parts,
            gamma,
        },
        problem: sub.clone(),
    });
    Ok((sub, steps))
}

/// Splits `w ≤ t^{Σ parts}` as `w = w₁ ⋯ w_m` with `w_i ≤ t^{parts[i]}`, by
/// reading a subword off the concatenated reduced words.
pub fn factor_witness(
    datum: &GroupDatum,
    w: &ExtAffineElement,
    parts: &[Vec<i64>],
) -> Result<Vec<ExtAffineElement>> {
    let n = datum.rank();
    let mut bound = vec![0i64; n];
    for p in parts {
        datum.check_rank(p.len())?;
        for (b, x) in bound.iter_mut().zip(p) {
            *b += x;
        }
    }
    let translations: Vec<ExtAffineElement> = parts
        .iter()
        .map(|p| ExtAffineElement::translation(p))
        .collect();
    let total = ExtAffineElement::translation(&bound);
    let lengths: usize = translations.iter().map(|t| datum.length(t)).sum();
    if lengths != datum.length(&total) {
        return Err(Error::Invalid(format!(
            "lengths of the parts add up to {lengths}, not ℓ(t^{}) = {}",
            fmt_vec(&to_q(&bound)),
            datum.length(&total)
        )));
    }
    if !datum.bruhat_leq(w, &total) {
        return Err(Error::Invalid(format!("{w} is not below {total}")));
    }
    let mut rest = w.clone();
    let mut out = Vec::new();
    for t in &translations {
        let word = datum.reduced_word(t);
        let mut piece = ExtAffineElement::identity(n);
        for &s in &word.letters {
            let r = datum.reflection(s);
            let next = &r * &rest;
            if datum.length(&next) < datum.length(&rest) {
                rest = next;
                piece = &piece * &r;
            }
        }
        rest = &word.omega.inverse() * &rest;
        out.push(&piece * &word.omega);
    }
    verify(rest.is_identity(), || {
        format!("no subword of the bound gives {w}")
    })?;
    let mut prod = ExtAffineElement::identity(n);
    for (piece, t) in out.iter().zip(&translations) {
        verify(datum.bruhat_leq(piece, t), || {
            format!("factor {piece} is not below {t}")
        })?;
        prod = &prod * piece;
    }
    verify(&prod == w, || {
        format!("factors multiply to {prod} instead of {w}")
    })?;
    Ok(out)
}

/// `v₀ = Σ_k t^k b_k` for the smallest `t ≥ n² + 1` making `v₀` generic in the
/// span of `basis`: equal coordinates of `v₀` are equal in every `b_k`.
fn generic_point(basis: &[Vec<i64>], n: usize) -> Result<Vec<i128>> {
    let first = (n * n + 1) as i128;
    for t in first..first + 1000 {
        let mut v = vec![0i128; n];
        let mut power = 1i128;
        let mut overflow = false;
        for b in basis {
            for (x, &c) in v.iter_mut().zip(b) {
                match power.checked_mul(c as i128).and_then(|y| x.checked_add(y)) {
                    Some(y) => *x = y,
                    None => overflow = true,
                }
            }
            power = match power.checked_mul(t) {
                Some(p) => p,
                None => {
                    overflow = true;
                    break;
                }
            };
        }
        if overflow {
            break;
        }
        let generic =
            (0..n).all(|i| (i + 1..n).all(|j| v[i] != v[j] || basis.iter().all(|b| b[i] == b[j])));
        if generic {
            return Ok(v);
        }
    }
    Err(Error::Verification("no generic point of V′ found".into()))
}

fn project_trace_zero(v: &[Q]) -> Vec<Q> {
    let avg = v.iter().sum::<Q>() / q(v.len() as i64);
    v.iter().map(|x| x - avg).collect()
}

/// For a single block: `J = J(v̄₀)` for a generic `v₀` of the direction space
/// of `V^σ`, `z` with `z(v₀) = v̄₀`, and the problem `(W̃_J, μ, σ^J)` with
/// `σ^J = z σ z⁻¹`. The Levi factor is returned with GL-type blocks.
pub fn parabolic_reduce(problem: &Problem) -> Result<(Problem, TraceStep)> {
    let f = &problem.frob;
    let datum = f.datum();
    if datum.num_blocks() != 1 {
        return Err(Error::Invalid(
            "parabolic reduction expects a single block".into(),
        ));
    }
    let n = datum.rank();
    let map = f.affine_map();
    let linear = map.linear.clone();
    let step = |v: &[Q]| project_trace_zero(&map.apply(v));

    let order = linear.order();
    let mut acc = vec![q(0); n];
    let mut cur = vec![q(0); n];
    for _ in 0..order {
        for (a, c) in acc.iter_mut().zip(&cur) {
            *a += c;
        }
        cur = step(&cur);
    }
    let fixed_point: Vec<Q> = acc.iter().map(|x| x / q(order as i64)).collect();
    verify(step(&fixed_point) == fixed_point, || {
        format!("{} is not fixed by σ", fmt_vec(&fixed_point))
    })?;

    let direction: Vec<Vec<i64>> = linear
        .fixed_space_basis()
        .into_iter()
        .map(|b| {
            let s: i64 = b.iter().sum();
            b.iter().map(|x| x * n as i64 - s).collect::<Vec<i64>>()
        })
        .filter(|b| b.iter().any(|&x| x != 0))
        .collect();
    let v0 = generic_point(&direction, n)?;
    let (v0_bar, z) = dominant_rep(datum, &v0);
    let j: BTreeSet<usize> = (0..n.saturating_sub(1))
        .filter(|&k| v0_bar[k] == v0_bar[k + 1])
        .collect();
    let flip = f.sigma0().flips(0);
    if flip {
        verify(j.iter().all(|&k| j.contains(&(n - 2 - k))), || {
            format!("J = {j:?} is not σ₀-stable")
        })?;
    }

    let mut sizes = Vec::new();
    let mut run = 1;
    for k in 0..n.saturating_sub(1) {
        if j.contains(&k) {
            run += 1;
        } else {
            sizes.push(run);
            run = 1;
        }
    }
    sizes.push(run);
    let levi = GroupDatum::new(
        sizes
            .iter()
            .map(|&size| Block {
                size,
                adjoint: false,
            })
            .collect(),
    )?;
    let ze = ExtAffineElement::from_perm(z.clone());
    let tau_j = &(&ze * f.tau()) * &f.sigma0_element(&ze).inverse();
    levi.check_element(&tau_j)?;
    verify(levi.length(&tau_j) == 0, || {
        format!("σ^J = {tau_j} has positive length in W̃_J")
    })?;
    let r = levi.num_blocks();
    let sigma0 = if flip {
        DiagramAutomorphism::new(&levi, (0..r).rev().collect(), vec![true; r])?
    } else {
        DiagramAutomorphism::identity(r)
    };
    let frob = FrobeniusDescriptor::new(
        levi.clone(),
        tau_j.clone(),
        sigma0,
        f.normalization_shift().to_vec(),
    )?;
    let sub = Problem::new(problem.mu.clone(), frob)?;

    // z(λ)^◇ lies in the span of the J-coroots, modulo the center.
    let z_lambda = f.diamond(&to_q(&z.act(f.lambda())));
    let avgs: Vec<Q> = (0..r)
        .map(|b| z_lambda[levi.range(b)].iter().sum::<Q>() / q(levi.range(b).len() as i64))
        .collect();
    verify(avgs.windows(2).all(|w| w[0] == w[1]), || {
        format!(
            "z(λ)^◇ = {} is not in the span of the J-coroots",
            fmt_vec(&z_lambda)
        )
    })?;
    // ⟨ω_c, λ^◇⟩ ∈ ℤ exactly for the orbits c ⊆ I.
    let lam = f.lambda_diamond();
    for c in root_orbits(f) {
        let inside_i = c.iter().all(|k| !j.contains(k));
        let integral = orbit_pairing(datum, &c, &lam).is_integer();
        verify(inside_i == integral, || {
            format!("⟨ω_c, λ^◇⟩ integrality disagrees with c ⊆ I for c = {c:?}")
        })?;
    }
    debug_assert_eq!(simple_roots(datum).len(), n - 1);

    let step = TraceStep {
        data: StepData::Parabolic(ParabolicData {
            fixed_point,
            direction,
            v0: v0.clone(),
            v0_bar,
            j,
            z,
            tau_j,
        }),
        problem: sub.clone(),
    };
    Ok((sub, step))
}

/// Replays one step backwards: a witness of `step.problem` to one of `before`.
pub(crate) fn lift_step(before: &Problem, step: &TraceStep, sub: &Witness) -> Result<Witness> {
    match &step.data {
        StepData::Adjoint => Ok(sub.clone()),
        StepData::OmegaConjugate { tau0 } => Ok(Witness {
            w: sub.w.conjugate_by(&tau0.inverse()),
            x: tau0.perm().inverse().compose(&sub.x),
        }),
        StepData::ProductSplit { cycle, parts, .. } => lift_product(before, cycle, parts, sub),
        StepData::Parabolic(data) => {
            let z = ExtAffineElement::from_perm(data.z.clone());
            Ok(Witness {
                w: sub.w.conjugate_by(&z.inverse()),
                x: data.z.inverse().compose(&sub.x),
            })
        }
    }
}

/// `y_{b_m} = u₀` and `y_{b_{m−k}} = σ₀^{−k}(τ⁻¹ u_k τ)` for the factors
/// `w = u₀ u₁ ⋯ u_{m−1}`, `u_k ≤ t^{x(σ₀^k(μ_{b_{m−k}}))}`.
fn lift_product(
    before: &Problem,
    cycle: &[usize],
    parts: &[Vec<i64>],
    sub: &Witness,
) -> Result<Witness> {
    let datum = before.datum();
    let n = datum.rank();
    let m = cycle.len();
    let coords = datum.coords(&[cycle[m - 1]]);
    let local = datum.sub_datum(&[cycle[m - 1]]);
    let bounds: Vec<Vec<i64>> = parts.iter().map(|p| sub.x.act(p)).collect();
    let us = factor_witness(&local, &sub.w, &bounds)?;
    let tau = before.frob.tau();
    let back = before.frob.sigma0().order() - 1;
    let mut y = ExtAffineElement::identity(n);
    let mut target = vec![0i64; n];
    for (k, (u, bound)) in us.iter().zip(&bounds).enumerate() {
        let mut e = u.scatter(n, &coords);
        let mut t = ExtAffineElement::translation(bound).scatter(n, &coords);
        if k > 0 {
            e = e.conjugate_by(&tau.inverse());
            t = t.conjugate_by(&tau.inverse());
        }
        for _ in 0..k * back {
            e = before.frob.sigma0_element(&e);
            t = before.frob.sigma0_element(&t);
        }
        y = &y * &e;
        for (a, b) in target.iter_mut().zip(t.trans()) {
            *a += b;
        }
    }
    let x = datum
        .perm_sending(&before.mu, &target)
        .ok_or_else(|| Error::Verification(format!("{target:?} is not in the orbit of μ")))?;
    Ok(Witness { w: y, x })
}

/// A single block on which `σ` is superbasic: `GL₁`, or `Ad(σ_{k,n})`.
pub(crate) fn base_case(problem: &Problem) -> Result<(super::BaseCase, Witness)> {
    let f = &problem.frob;
    let datum = f.datum();
    let n = datum.rank();
    if datum.num_blocks() != 1 {
        return Err(Error::Invalid("base case expects a single block".into()));
    }
    if n == 1 {
        return Ok((
            super::BaseCase::Torus,
            Witness {
                w: problem.t_mu(),
                x: Permutation::identity(1),
            },
        ));
    }
    if f.sigma0().flips(0) && n > 2 {
        return Err(Error::Unsupported(format!(
            "a diagram flip survives at the superbasic base case on {datum}"
        )));
    }
    let k = f.tau().trans().iter().sum::<i64>().rem_euclid(n as i64) as u64;
    if k == 0 || num_integer::gcd(k, n as u64) != 1 {
        return Err(Error::Unsupported(format!(
            "{f} is not superbasic on {datum}"
        )));
    }
    let sw = crate::superbasic::superbasic_witness(&problem.mu, k, n as u64)?;
    let witness = Witness {
        w: sw.w_tilde.clone(),
        x: sw.x.clone(),
    };
    Ok((
        super::BaseCase::Superbasic {
            m: k,
            n: n as u64,
            witness: Box::new(sw),
        },
        witness,
    ))
}
