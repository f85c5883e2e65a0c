#![allow(dead_code)]

use std::collections::{HashMap, HashSet, VecDeque};

use bgmu_core::num::{frac, q};
use bgmu_core::{ExtAffineElement, Permutation, Q};

pub fn dominant(n: usize, top: i64) -> Vec<Vec<i64>> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|v: Vec<i64>| {
                let hi = v.last().copied().unwrap_or(top);
                (0..=hi).map(move |x| {
                    let mut w = v.clone();
                    w.push(x);
                    w
                })
            })
            .collect();
    }
    out
}

pub fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub fn coprime_pairs(ns: std::ops::RangeInclusive<u64>) -> Vec<(u64, u64)> {
    ns.flat_map(|n| (1..n).filter(move |&m| gcd(m, n) == 1).map(move |m| (m, n)))
        .collect()
}

/// `x ↦ t^λ u(x)` with `u(x)[u(i)] = x[i]`.
pub fn act(w: &ExtAffineElement, x: &[Q]) -> Vec<Q> {
    let mut out = vec![q(0); x.len()];
    for (i, v) in x.iter().enumerate() {
        out[w.perm().at(i)] = *v;
    }
    out.iter().zip(w.trans()).map(|(a, &b)| a + q(b)).collect()
}

/// Number of walls `x_i − x_j ∈ ℤ` between the base alcove and its image.
pub fn length(w: &ExtAffineElement) -> usize {
    let n = w.rank();
    let p: Vec<Q> = (0..n).map(|i| frac((n - i) as i64, n as i64 + 1)).collect();
    let image = act(w, &p);
    let mut count = 0;
    for i in 0..n {
        for j in i + 1..n {
            let a = p[i] - p[j];
            let b = image[i] - image[j];
            let (lo, hi) = if a < b { (a, b) } else { (b, a) };
            count += (hi.floor() - lo.floor()).to_integer() as usize;
        }
    }
    count
}

/// Simple affine reflections of `GL_n`: `s_0 = t^{e_1 − e_n}(1 n)`, then `(i i+1)`.
pub fn simple_reflections(n: usize) -> Vec<ExtAffineElement> {
    let mut out = Vec::new();
    if n < 2 {
        return out;
    }
    let mut t = vec![0; n];
    t[0] = 1;
    t[n - 1] = -1;
    out.push(ExtAffineElement::new(t, Permutation::transposition(n, 1, n)).unwrap());
    for i in 1..n {
        out.push(ExtAffineElement::from_perm(Permutation::transposition(
            n,
            i,
            i + 1,
        )));
    }
    out
}

/// Every element `x·(word)` with a word of length at most `max`, with its
/// length and one reduced word.
pub fn ball(start: &ExtAffineElement, max: usize) -> HashMap<ExtAffineElement, Vec<usize>> {
    let gens = simple_reflections(start.rank());
    let base = length(start);
    let mut seen = HashMap::new();
    seen.insert(start.clone(), Vec::new());
    let mut queue = VecDeque::from([start.clone()]);
    while let Some(w) = queue.pop_front() {
        let word = seen[&w].clone();
        if word.len() == max {
            continue;
        }
        for (k, s) in gens.iter().enumerate() {
            let next = &w * s;
            if length(&next) != base + word.len() + 1 || seen.contains_key(&next) {
                continue;
            }
            let mut nw = word.clone();
            nw.push(k);
            seen.insert(next.clone(), nw);
            queue.push_back(next);
        }
    }
    seen
}

/// `{x · subword}` for a reduced expression `x · s_{word}`.
pub fn subword_products(start: &ExtAffineElement, word: &[usize]) -> HashSet<ExtAffineElement> {
    let gens = simple_reflections(start.rank());
    let mut set = HashSet::from([start.clone()]);
    for &k in word {
        let extra: Vec<ExtAffineElement> = set.iter().map(|w| w * &gens[k]).collect();
        set.extend(extra);
    }
    set
}

/// Dominant `ν̄` of `wτ` by iterating until the finite part is trivial.
pub fn newton(w: &ExtAffineElement, tau: &ExtAffineElement) -> Vec<Q> {
    let f = w * tau;
    let mut g = f.clone();
    let mut k = 1;
    while !g.perm().is_identity() {
        g = &g * &f;
        k += 1;
    }
    let mut v: Vec<Q> = g.trans().iter().map(|&x| frac(x, k)).collect();
    v.sort_by(|a, b| b.cmp(a));
    v
}

pub fn shifted(v: &[Q], s: Q) -> Vec<Q> {
    v.iter().map(|x| x - s).collect()
}

/// Dominance on `GL_n`: equal totals and partial sums bounded.
pub fn dominated(a: &[Q], b: &[Q]) -> bool {
    let (mut sa, mut sb) = (q(0), q(0));
    for (x, y) in a.iter().zip(b) {
        sa += x;
        sb += y;
        if sa > sb {
            return false;
        }
    }
    sa == sb
}

/// The translations of `μ`'s orbit and everything below them, closing under
/// `w ↦ wr` for affine reflections `r` with `ℓ(wr) < ℓ(w)`.
pub fn admissible(mu: &[i64]) -> HashSet<ExtAffineElement> {
    let n = mu.len();
    let mut perms: Vec<Vec<i64>> = vec![mu.to_vec()];
    let mut seen: HashSet<Vec<i64>> = perms.iter().cloned().collect();
    let mut i = 0;
    while i < perms.len() {
        let v = perms[i].clone();
        for a in 0..n {
            for b in a + 1..n {
                let mut u = v.clone();
                u.swap(a, b);
                if seen.insert(u.clone()) {
                    perms.push(u);
                }
            }
        }
        i += 1;
    }
    let mut out: HashSet<ExtAffineElement> = HashSet::new();
    let mut stack: Vec<ExtAffineElement> = perms
        .iter()
        .map(|l| ExtAffineElement::translation(l))
        .collect();
    while let Some(w) = stack.pop() {
        if !out.insert(w.clone()) {
            continue;
        }
        let l = length(&w);
        for r in reflections_below(n, l) {
            let x = &w * &r;
            if length(&x) < l && !out.contains(&x) {
                stack.push(x);
            }
        }
    }
    out
}

/// Affine reflections `t^{k(e_a − e_b)}(a b)` with `|k| ≤ bound`.
fn reflections_below(n: usize, bound: usize) -> Vec<ExtAffineElement> {
    let mut out = Vec::new();
    let b = bound as i64;
    for a in 1..=n {
        for c in a + 1..=n {
            for k in -b..=b {
                let mut t = vec![0; n];
                t[a - 1] = k;
                t[c - 1] = -k;
                out.push(ExtAffineElement::new(t, Permutation::transposition(n, a, c)).unwrap());
            }
        }
    }
    out
}

/// `w = ω · s_{word}` with `ω` of length zero, by peeling right descents.
pub fn reduced_word(w: &ExtAffineElement) -> (ExtAffineElement, Vec<usize>) {
    let gens = simple_reflections(w.rank());
    let mut cur = w.clone();
    let mut word = Vec::new();
    'outer: loop {
        let l = length(&cur);
        for (k, s) in gens.iter().enumerate() {
            let next = &cur * s;
            if length(&next) < l {
                word.push(k);
                cur = next;
                continue 'outer;
            }
        }
        break;
    }
    word.reverse();
    (cur, word)
}
