//! Expensive post-hoc checks used by `--verify` and the test suites.

use crate::decomp::{zero_set_contained, Component};
use crate::elimination::PremResult;
use crate::error::Result;
use crate::groebner::{buchberger, ideal_member, GroebnerBasis, TermOrderSpec};
use crate::limits::Limits;
use crate::poly::Polynomial;
use crate::triset::TriangularSet;

fn chain_ideal(chain: &TriangularSet, limits: &Limits) -> Result<GroebnerBasis> {
    buchberger(
        chain.polys(),
        &TermOrderSpec::for_order(chain.order()),
        limits,
    )
}

/// `∏ ini(f_i)^{d_i} · p − prem(p, T)` lies in `Ideal(T)`.
pub fn prem_identity_holds(
    p: &Polynomial,
    chain: &TriangularSet,
    result: &PremResult,
    limits: &Limits,
) -> Result<bool> {
    let mut lhs = p.clone();
    for (ini, &d) in chain.initials().iter().zip(&result.exponents) {
        lhs = &lhs * &ini.pow(d);
    }
    let diff = &lhs - &result.remainder;
    ideal_member(&diff, &chain_ideal(chain, limits)?)
}

/// Smallest `m <= max_m` with `h^m · g ∈ Ideal(T)`.
pub fn saturation_witness(
    g: &Polynomial,
    chain: &TriangularSet,
    h: &Polynomial,
    max_m: u32,
    limits: &Limits,
) -> Result<Option<u32>> {
    let ideal = chain_ideal(chain, limits)?;
    let mut acc = g.clone();
    for m in 0..=max_m {
        if ideal_member(&acc, &ideal)? {
            return Ok(Some(m));
        }
        acc = &acc * h;
    }
    Ok(None)
}

/// Every generator of `sat` has a witness exponent and every chain element
/// lies in `sat`.
pub fn saturation_holds(
    sat: &GroebnerBasis,
    chain: &TriangularSet,
    h: &Polynomial,
    max_m: u32,
    limits: &Limits,
) -> Result<bool> {
    for f in chain.polys() {
        if !ideal_member(f, sat)? {
            return Ok(false);
        }
    }
    for g in sat.generators() {
        if saturation_witness(g, chain, h, max_m, limits)?.is_none() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `Zero(p) ⊆ ∪ Zero(G_i)`: every product taking one generator from each
/// component lies in the radical of `Ideal(p)`. `None` when there are more
/// than `max_products` products.
pub fn completeness_holds(
    p: &[Polynomial],
    components: &[Component],
    max_products: usize,
    limits: &Limits,
) -> Result<Option<bool>> {
    let Some(first) = p.first() else {
        return Ok(Some(true));
    };
    let mut count = 1usize;
    for c in components {
        count = count.saturating_mul(c.generators.generators().len().max(1));
        if count > max_products {
            return Ok(None);
        }
    }
    let mut products = vec![Polynomial::one(first.order())];
    for c in components {
        let gens = c.generators.generators();
        products = products
            .iter()
            .flat_map(|acc| gens.iter().map(move |g| acc * g))
            .collect();
    }
    Ok(Some(zero_set_contained(&products, p, limits)?))
}
