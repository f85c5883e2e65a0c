mod common;

use std::collections::HashSet;

use bgmu_core::num::q;
use bgmu_core::reduction::StepData;
use bgmu_core::weyl::length_zero_element;
use bgmu_core::{
    adm_enumerate, parabolic_reduce, DiagramAutomorphism, ExtAffineElement, FrobeniusDescriptor,
    GroupDatum, Guard, Problem,
};
use common::*;

#[test]
fn admissible_sets_match_the_reflection_closure() {
    for n in 1..=4 {
        for mu in dominant(n, 2) {
            let lib: HashSet<ExtAffineElement> =
                adm_enumerate(&GroupDatum::gl(n), &mu, &Guard::default())
                    .unwrap()
                    .into_iter()
                    .collect();
            assert_eq!(lib, admissible(&mu), "μ = {mu:?}");
        }
    }
}

#[test]
fn admissible_set_sizes() {
    let size = |mu: &[i64]| {
        adm_enumerate(&GroupDatum::gl(mu.len()), mu, &Guard::default())
            .unwrap()
            .len()
    };
    assert_eq!(size(&[1, 0]), 3);
    assert_eq!(size(&[1, 0, 0]), 7);
    assert_eq!(size(&[1, 1, 0]), 7);
    assert_eq!(size(&[1, 0, 0, 0]), 15);
    assert_eq!(size(&[1, 1, 0, 0]), 33);
}

#[test]
fn product_groups_order_componentwise() {
    let g = GroupDatum::gl_blocks(&[2, 2]).unwrap();
    let one = GroupDatum::gl(2);
    let small: Vec<ExtAffineElement> = [0, 1]
        .iter()
        .flat_map(|&k| ball(&length_zero_element(k, 2), 3).into_keys())
        .collect();
    let glue = |a: &ExtAffineElement, b: &ExtAffineElement| {
        let mut t = a.trans().to_vec();
        t.extend(b.trans());
        let mut p = a.perm().images_one_based();
        p.extend(b.perm().images_one_based().iter().map(|x| x + 2));
        ExtAffineElement::new(t, bgmu_core::Permutation::from_images(&p).unwrap()).unwrap()
    };
    for a in &small {
        for b in &small {
            for c in small.iter().step_by(3) {
                for d in small.iter().step_by(3) {
                    let x = glue(a, b);
                    let y = glue(c, d);
                    assert_eq!(
                        g.bruhat_leq(&x, &y),
                        one.bruhat_leq(a, c) && one.bruhat_leq(b, d),
                        "{x} ≤ {y}"
                    );
                    assert_eq!(g.length(&x), length(a) + length(b));
                }
            }
        }
    }
}

#[test]
fn conjugating_levi_intervals_keeps_the_order() {
    let mut checked = 0;
    for n in 2..=4usize {
        let g = GroupDatum::gl(n);
        for k in 0..n as i64 {
            let tau = length_zero_element(k, n);
            let mut frobs = vec![FrobeniusDescriptor::inner(g.clone(), tau.clone()).unwrap()];
            if let Ok(f) = FrobeniusDescriptor::new(
                g.clone(),
                tau,
                DiagramAutomorphism::flip(&g),
                vec![q(0); n],
            ) {
                frobs.push(f);
            }
            for frob in frobs {
                let p = Problem::new(vec![0; n], frob).unwrap();
                let (levi, step) = parabolic_reduce(&p).unwrap();
                let StepData::Parabolic(data) = step.data else {
                    panic!("expected a parabolic step")
                };
                let z = ExtAffineElement::from_perm(data.z.clone());
                let lg = levi.datum();
                let tops: Vec<ExtAffineElement> = lg
                    .letters()
                    .iter()
                    .map(|&s| lg.reflection(s))
                    .chain([ExtAffineElement::translation(&levi_coweight(lg))])
                    .collect();
                for top in tops {
                    let below: Vec<ExtAffineElement> =
                        lg.lower_interval(&top).into_iter().collect();
                    for a in &below {
                        for b in &below {
                            if lg.bruhat_leq(a, b) {
                                let ca = &(&z.inverse() * a) * &z;
                                let cb = &(&z.inverse() * b) * &z;
                                assert!(
                                    g.bruhat_leq(&ca, &cb),
                                    "{a} ≤_J {b} but not after z = {}",
                                    data.z
                                );
                                checked += 1;
                            }
                        }
                    }
                }
            }
        }
    }
    assert!(checked > 100);
}

/// `(1, 0, …, 0)` on every block of size at least two.
fn levi_coweight(g: &GroupDatum) -> Vec<i64> {
    let mut v = vec![0; g.rank()];
    for b in 0..g.num_blocks() {
        if g.blocks()[b].size > 1 {
            v[g.offset(b)] = 1;
        }
    }
    v
}
