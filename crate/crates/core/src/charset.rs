//! Ritt–Wu basic sets, Wu characteristic sets, and the characteristic-series
//! loop that splits on U-set members.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use log::debug;

use crate::elimination::prem_chain_primitive;
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::poly::{canonical_set, Polynomial};
use crate::triset::{u_set, TriangularSet};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CharsetOutcome {
    Chain(TriangularSet),
    /// A nonzero constant was derived, so the set has no zeros.
    Contradiction,
}

impl CharsetOutcome {
    pub fn chain(&self) -> Option<&TriangularSet> {
        match self {
            CharsetOutcome::Chain(t) => Some(t),
            CharsetOutcome::Contradiction => None,
        }
    }
}

/// One branch of a characteristic series.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharBranch {
    pub triset: TriangularSet,
    pub u_set: Vec<Polynomial>,
    /// The augmented polynomial set the chain was computed from.
    pub source: Vec<Polynomial>,
}

/// Rank key: class, leading degree, then rendering.
fn rank_cmp(a: &(usize, u32, String), b: &(usize, u32, String)) -> Ordering {
    a.0.cmp(&b.0)
        .then(a.1.cmp(&b.1))
        .then_with(|| a.2.cmp(&b.2))
}

fn rank_key(p: &Polynomial) -> (usize, u32, String) {
    let ld = p.leading_data().expect("non-constant");
    (ld.class, ld.degree, p.to_string())
}

/// Minimal-rank ascending subset of `f`.
pub fn basic_set(f: &[Polynomial]) -> Result<CharsetOutcome> {
    if f.is_empty() {
        return Err(Error::EmptyInput);
    }
    let polys = canonical_set(f.iter().cloned());
    if polys.is_empty() {
        return Err(Error::EmptyInput);
    }
    if polys.iter().any(Polynomial::is_constant) {
        return Ok(CharsetOutcome::Contradiction);
    }
    let mut candidates: Vec<(Polynomial, (usize, u32, String))> = polys
        .into_iter()
        .map(|p| {
            let k = rank_key(&p);
            (p, k)
        })
        .collect();
    let mut chain = Vec::new();
    while let Some(best) = candidates
        .iter()
        .min_by(|a, b| rank_cmp(&a.1, &b.1))
        .map(|(p, _)| p.clone())
    {
        let ld = best.leading_data().expect("non-constant");
        candidates.retain(|(p, k)| k.0 > ld.class && p.degree_in(ld.var) < ld.degree);
        chain.push(best);
    }
    Ok(CharsetOutcome::Chain(TriangularSet::new(chain)?))
}

/// Wu characteristic set by the Ritt–Wu iteration: recompute the basic set
/// until every pseudo-remainder vanishes. Each round works on the input plus
/// the previous basic set and its new remainders; keeping every earlier
/// remainder too makes the set double per round on some small systems.
pub fn wu_charset(f: &[Polynomial]) -> Result<CharsetOutcome> {
    wu_charset_with(f, &Limits::default())
}

/// [`wu_charset`] under the pseudo-remainder size ceiling of `limits`.
pub fn wu_charset_with(f: &[Polynomial], limits: &Limits) -> Result<CharsetOutcome> {
    let input = canonical_set(f.iter().cloned());
    if input.is_empty() {
        return Err(Error::EmptyInput);
    }
    let mut set = input.clone();
    loop {
        let basis = match basic_set(&set)? {
            CharsetOutcome::Contradiction => return Ok(CharsetOutcome::Contradiction),
            CharsetOutcome::Chain(t) => t,
        };
        let mut remainders = Vec::new();
        for p in set.iter().filter(|p| !basis.polys().contains(p)) {
            let r = prem_chain_primitive(p, &basis, limits)?;
            if !r.is_zero() {
                remainders.push(r);
            }
        }
        if remainders.is_empty() {
            return Ok(CharsetOutcome::Chain(basis));
        }
        if remainders.iter().any(Polynomial::is_constant) {
            return Ok(CharsetOutcome::Contradiction);
        }
        let mut next = input.clone();
        next.extend(basis.polys().iter().cloned());
        next.extend(remainders);
        set = canonical_set(next);
    }
}

/// Characteristic series with U-set splitting. Contradictory branches are
/// dropped; branches with identical chains are merged. Output is sorted by
/// the rendered chain.
pub fn charser_a(p: &[Polynomial], limits: &Limits) -> Result<Vec<CharBranch>> {
    let start = canonical_set(p.iter().cloned());
    if start.is_empty() {
        return Err(Error::EmptyInput);
    }
    let mut worklist = vec![start];
    let mut branches: BTreeMap<Vec<String>, CharBranch> = BTreeMap::new();
    let mut pops = 0usize;
    while let Some(f) = worklist.pop() {
        pops += 1;
        if pops > limits.max_worklist_pops {
            return Err(Error::ResourceLimit(format!(
                "more than {} characteristic-series worklist pops",
                limits.max_worklist_pops
            )));
        }
        let t = match wu_charset_with(&f, limits)? {
            CharsetOutcome::Contradiction => continue,
            CharsetOutcome::Chain(t) => t.normalized(),
        };
        assert!(
            t.initials().iter().all(|i| !i.is_zero()),
            "chain initials are nonzero"
        );
        let u = u_set(&t);
        debug!("chain {:?} with U-set {:?}", t.polys(), u);
        // Children are pushed in reverse so they pop in canonical order.
        for ini in u.iter().rev() {
            let mut child = f.clone();
            child.extend(t.polys().iter().cloned());
            child.push(ini.clone());
            worklist.push(canonical_set(child));
        }
        let key: Vec<String> = t.polys().iter().map(|q| q.to_string()).collect();
        branches.entry(key).or_insert(CharBranch {
            triset: t,
            u_set: u,
            source: f,
        });
    }
    Ok(branches.into_values().collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::elimination::prem_chain;
    use crate::io::parse_polynomial;
    use crate::poly::VarOrder;

    fn order(n: usize) -> VarOrder {
        VarOrder::new((1..=n).map(|i| format!("x{i}"))).unwrap()
    }

    fn ps(items: &[&str], o: &VarOrder) -> Vec<Polynomial> {
        items
            .iter()
            .map(|s| parse_polynomial(s, o).unwrap())
            .collect()
    }

    #[test]
    fn basic_set_examples() {
        let o = order(2);
        let t = basic_set(&ps(&["x1^2", "x1"], &o)).unwrap();
        assert_eq!(t.chain().unwrap().polys(), ps(&["x1"], &o));
        let t = basic_set(&ps(&["x1*x2-1", "x2^2-x1"], &o)).unwrap();
        assert_eq!(t.chain().unwrap().polys(), ps(&["x1*x2-1"], &o));
        assert_eq!(
            basic_set(&ps(&["3"], &o)).unwrap(),
            CharsetOutcome::Contradiction
        );
        assert_eq!(basic_set(&[]), Err(Error::EmptyInput));
    }

    #[test]
    fn wu_charset_examples() {
        let o = order(1);
        let t = wu_charset(&ps(&["x1"], &o)).unwrap();
        assert_eq!(t.chain().unwrap().polys(), ps(&["x1"], &o));
        assert_eq!(
            wu_charset(&ps(&["x1", "x1+1"], &o)).unwrap(),
            CharsetOutcome::Contradiction
        );
    }

    #[test]
    fn wu_charset_annihilates_input() {
        let o = order(3);
        let f = ps(&["x1*x2-x3", "x2^2-x1*x3", "x3^2-x2"], &o);
        let t = wu_charset(&f).unwrap();
        let t = t.chain().unwrap();
        for p in &f {
            assert!(prem_chain(p, t).unwrap().remainder.is_zero());
        }
    }

    #[test]
    fn charser_single_variable() {
        let o = order(1);
        let b = charser_a(&ps(&["x1"], &o), &Limits::default()).unwrap();
        assert_eq!(b.len(), 1);
        assert!(b[0].u_set.is_empty());
        assert_eq!(b[0].triset.polys(), ps(&["x1"], &o));
    }

    #[test]
    fn charser_splits_on_degenerate_initial() {
        let o = order(2);
        let b = charser_a(&ps(&["x1*x2"], &o), &Limits::default()).unwrap();
        let chains: Vec<Vec<String>> = b
            .iter()
            .map(|br| br.triset.polys().iter().map(|p| p.to_string()).collect())
            .collect();
        assert!(chains.contains(&vec!["x1*x2".to_string()]));
        assert!(chains.contains(&vec!["x1".to_string()]));
    }

    #[test]
    fn worklist_ceiling() {
        let o = order(2);
        let l = Limits {
            max_worklist_pops: 1,
            ..Limits::default()
        };
        let e = charser_a(&ps(&["x1*x2"], &o), &l).unwrap_err();
        assert!(e.is_resource_limit());
    }

    #[test]
    fn remainder_size_ceiling() {
        let o = order(2);
        let l = Limits {
            max_prem_degree: 1,
            ..Limits::default()
        };
        let f = ps(&["x1*x2^2+x2+1", "x2^3+x1*x2+x1"], &o);
        assert!(wu_charset_with(&f, &l).unwrap_err().is_resource_limit());
        let l = Limits {
            max_coeff_bits: 8,
            ..Limits::default()
        };
        let f = ps(&["1000*x1*x2^2+x2+1", "x2^3+999*x1*x2+x1"], &o);
        assert!(wu_charset_with(&f, &l).unwrap_err().is_resource_limit());
    }
}
