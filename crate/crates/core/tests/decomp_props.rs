mod common;

use common::*;
use proptest::prelude::*;
use unmix::decomp::{
    remove_redundant, verify_soundness, zero_sets_equal, ClassicSaturation, ImprovedSaturation,
};
use unmix::elimination::{prem_chain, resultant_chain};
use unmix::groebner::{ideal_contained, ideal_equal, ideal_member};
use unmix::triset::{classify_triset, products, resultant_sets};
use unmix::verify::{completeness_holds, saturation_holds};
use unmix::*;

const MAX_M: u32 = 20;
const MAX_PRODUCTS: usize = 200;

fn component(chain: TriangularSet, limits: &Limits) -> Option<Component> {
    let g = sat_improved(&chain, limits).unwrap();
    if g.is_unit() {
        return None;
    }
    Some(Component {
        generators: g,
        dimension: (chain.order().len() - chain.len()) as i64,
        u_set: u_set(&chain),
        source_chain: chain,
        method: "improved".into(),
    })
}

/// Removal in a fixed visiting order with no canonical sorting.
fn naive_u3(mut cs: Vec<GroebnerBasis>) -> Vec<GroebnerBasis> {
    'outer: loop {
        for i in 0..cs.len() {
            for j in 0..cs.len() {
                if i != j && ideal_contained(&cs[i], &cs[j]).unwrap() {
                    cs.remove(j);
                    continue 'outer;
                }
            }
        }
        return cs;
    }
}

fn same_ideals(a: &[GroebnerBasis], b: &[GroebnerBasis]) -> bool {
    a.len() == b.len()
        && a.iter()
            .all(|x| b.iter().any(|y| ideal_equal(x, y).unwrap()))
        && b.iter()
            .all(|y| a.iter().any(|x| ideal_equal(x, y).unwrap()))
}

fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for k in 0..items.len() {
        let mut rest = items.to_vec();
        let head = rest.remove(k);
        for mut p in permutations(&rest) {
            p.insert(0, head);
            out.push(p);
        }
    }
    out
}

proptest! {
    #![proptest_config(config(200))]

    #[test]
    fn saturation_witnesses_and_containment(t in arb_chain()) {
        let l = Limits::default();
        let (j, u) = products(&t);
        for h in [j, u] {
            let sat = unmix::decomp::saturate_by(&t, &h, &l).unwrap();
            prop_assert!(saturation_holds(&sat, &t, &h, MAX_M, &l).unwrap());
        }
    }

    #[test]
    fn improved_matches_classic_zero_set(t in arb_chain()) {
        let l = Limits::default();
        let a = sat_classic(&t, &l).unwrap();
        let b = sat_improved(&t, &l).unwrap();
        prop_assert!(zero_sets_equal(a.generators(), b.generators(), &l).unwrap());
    }

    #[test]
    fn u_set_invariants(t in arb_chain()) {
        let us = u_set(&t);
        let inits: Vec<Polynomial> = t.initials().iter().map(|i| i.normalized_or_zero()).collect();
        for u in &us {
            prop_assert!(inits.contains(u));
        }
        let rs = resultant_sets(&t);
        let regular = classify_triset(&t).regular;
        for u in &us {
            // some element with this initial meets one of the two clauses
            let justified = (0..t.len()).any(|i| {
                let zero_res = resultant_chain(t.initial(i), &t).is_zero();
                let no_const = !rs[i].iter().any(|r| r.is_constant());
                inits[i] == *u && (zero_res && !regular || !zero_res && no_const)
            });
            prop_assert!(justified, "{} unexplained", u);
        }
        let all_const = (0..t.len()).all(|i| {
            rs[i].iter().any(|r| r.is_constant()) && !resultant_chain(t.initial(i), &t).is_zero()
        });
        if all_const {
            prop_assert!(us.is_empty());
        }
    }

    #[test]
    fn characteristic_series_branches(ps in arb_system()) {
        // a few systems in this space swell or branch for minutes
        let l = Limits {
            max_worklist_pops: 200,
            max_prem_degree: 200,
            max_coeff_bits: 4096,
            ..Limits::default()
        };
        let branches = charser_a(&ps, &l);
        // expression swell is reported, not hidden
        prop_assume!(!matches!(&branches, Err(e) if e.is_resource_limit()));
        for b in branches.unwrap() {
            // branches from U-set splitting carry the added initials in `source`
            let g = lex_gb(&b.source);
            for p in &ps {
                prop_assert!(prem_chain(p, &b.triset).unwrap().remainder.is_zero());
            }
            for f in b.triset.polys() {
                prop_assert!(ideal_member(f, &g).unwrap());
            }
        }
    }
}

/// Soundness and completeness of the decomposition on random systems.
#[test]
fn decomposition_sound_and_complete() {
    let l = Limits::default();
    let checked_completeness = std::cell::Cell::new(0);
    runner(200)
        .run(&arb_system(), |ps| {
            for method in [&ImprovedSaturation as &dyn Saturation, &ClassicSaturation] {
                let d = decompose(&ps, method, &l).unwrap();
                prop_assert!(verify_soundness(&ps, &d.components, &l).unwrap());
                if let Some(ok) = completeness_holds(&ps, &d.components, MAX_PRODUCTS, &l).unwrap()
                {
                    prop_assert!(ok, "incomplete for {:?}", ps);
                    checked_completeness.set(checked_completeness.get() + 1);
                }
            }
            Ok(())
        })
        .unwrap();
    assert!(checked_completeness.get() > 0);
}

/// Redundancy removal ends with the same ideals whatever the visiting order.
#[test]
fn redundancy_removal_is_confluent() {
    let l = Limits::default();
    let strat = prop::collection::vec(arb_chain(), 2..=4).prop_filter("one ring", |ts| {
        ts.iter().all(|t| t.order().len() == ts[0].order().len())
    });
    runner(60)
        .run(&strat, |ts| {
            let comps: Vec<Component> = ts.into_iter().filter_map(|t| component(t, &l)).collect();
            let (kept, _) = remove_redundant(comps.clone()).unwrap();
            let kept: Vec<GroebnerBasis> = kept.into_iter().map(|c| c.generators).collect();
            let idx: Vec<usize> = (0..comps.len()).collect();
            for perm in permutations(&idx) {
                let order: Vec<GroebnerBasis> =
                    perm.iter().map(|&i| comps[i].generators.clone()).collect();
                prop_assert!(same_ideals(&naive_u3(order), &kept));
            }
            Ok(())
        })
        .unwrap();
}

#[test]
fn nested_components_drop_the_larger_ideal() {
    let o = order(2);
    let l = Limits::default();
    let big = component(
        TriangularSet::new(vec![poly("x1", &o), poly("x2", &o)]).unwrap(),
        &l,
    )
    .unwrap();
    let small = component(TriangularSet::new(vec![poly("x1", &o)]).unwrap(), &l).unwrap();
    let (kept, removed) = remove_redundant(vec![big.clone(), small.clone()]).unwrap();
    assert_eq!(kept, vec![small]);
    assert_eq!(removed, vec![big]);
}
