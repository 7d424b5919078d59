//! Saturation ideals and unmixed decomposition of a variety.
//!
//! Saturation is pluggable: every method implements [`Saturation`] and is
//! looked up by name in a [`SaturationRegistry`]. Two methods ship built in:
//! `classic` saturates by the product of all initials, `improved` by the
//! product of the U-set.

use std::fmt;

use log::info;
use rayon::prelude::*;

use crate::charset::charser_a;
use crate::error::{Error, Result};
use crate::groebner::{
    buchberger, eliminate, ideal_contained, radical_member, GroebnerBasis, TermOrderSpec,
};
use crate::io::sort_components;
use crate::limits::Limits;
use crate::poly::{canonical_set, Polynomial};
use crate::triset::{products, u_set, TriangularSet};

/// A way of computing a basis whose zero set is `Zero(sat(T))`.
pub trait Saturation: Send + Sync {
    fn name(&self) -> &'static str;

    /// The polynomial whose powers are divided out of `Ideal(T)`.
    fn multiplier(&self, chain: &TriangularSet) -> Polynomial;

    fn saturate(&self, chain: &TriangularSet, limits: &Limits) -> Result<GroebnerBasis> {
        saturate_by(chain, &self.multiplier(chain), limits)
    }
}

/// `Ideal(T) : J^∞` with `J` the product of initials.
#[derive(Clone, Copy, Debug, Default)]
pub struct ClassicSaturation;

/// `Ideal(T) : U^∞` with `U` the product of the U-set.
#[derive(Clone, Copy, Debug, Default)]
pub struct ImprovedSaturation;

impl Saturation for ClassicSaturation {
    fn name(&self) -> &'static str {
        "classic"
    }

    fn multiplier(&self, chain: &TriangularSet) -> Polynomial {
        products(chain).0
    }
}

impl Saturation for ImprovedSaturation {
    fn name(&self) -> &'static str {
        "improved"
    }

    fn multiplier(&self, chain: &TriangularSet) -> Polynomial {
        products(chain).1
    }
}

pub struct SaturationRegistry {
    methods: Vec<Box<dyn Saturation>>,
}

impl SaturationRegistry {
    pub fn empty() -> Self {
        SaturationRegistry {
            methods: Vec::new(),
        }
    }

    /// Registry holding `improved` (the default) and `classic`.
    pub fn builtin() -> Self {
        let mut r = Self::empty();
        r.register(Box::new(ImprovedSaturation));
        r.register(Box::new(ClassicSaturation));
        r
    }

    /// Adds a method, replacing any existing one of the same name.
    pub fn register(&mut self, method: Box<dyn Saturation>) {
        self.methods.retain(|m| m.name() != method.name());
        self.methods.push(method);
    }

    pub fn get(&self, name: &str) -> Result<&dyn Saturation> {
        self.methods
            .iter()
            .find(|m| m.name() == name)
            .map(|m| m.as_ref())
            .ok_or_else(|| Error::UnknownMethod(name.to_string()))
    }

    pub fn names(&self) -> Vec<&'static str> {
        self.methods.iter().map(|m| m.name()).collect()
    }
}

impl Default for SaturationRegistry {
    fn default() -> Self {
        Self::builtin()
    }
}

/// Basis of `Ideal(T) : h^∞`, computed as the `z`-free part of a lex basis
/// of `T ∪ {z·h − 1}` with `z` greatest.
pub fn saturate_by(
    chain: &TriangularSet,
    h: &Polynomial,
    limits: &Limits,
) -> Result<GroebnerBasis> {
    if h.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let ring = chain.order();
    let base_order = TermOrderSpec::for_order(ring);
    if h.is_constant() {
        return buchberger(chain.polys(), &base_order, limits);
    }
    let (ext, z) = ring.with_auxiliary("z");
    let mut gens = Vec::with_capacity(chain.len() + 1);
    for f in chain.polys() {
        gens.push(f.change_ring(&ext)?);
    }
    let zvar = Polynomial::var_named(&ext, &z)?;
    gens.push(&(&zvar * &h.change_ring(&ext)?) - &Polynomial::one(&ext));
    let order = base_order.with_greatest(&z);
    let full = buchberger(&gens, &order, limits)?;
    let kept = eliminate(&full, &[z.as_str()])?
        .into_iter()
        .map(|g| g.change_ring(ring))
        .collect::<Result<Vec<_>>>()?;
    Ok(GroebnerBasis::from_reduced(ring.clone(), base_order, kept))
}

/// Lex basis of `T ∪ {z·h − 1}` before elimination; exposed for reporting
/// auxiliary basis sizes.
pub fn auxiliary_basis(
    chain: &TriangularSet,
    h: &Polynomial,
    limits: &Limits,
) -> Result<GroebnerBasis> {
    let ring = chain.order();
    let (ext, z) = ring.with_auxiliary("z");
    let mut gens = Vec::with_capacity(chain.len() + 1);
    for f in chain.polys() {
        gens.push(f.change_ring(&ext)?);
    }
    let zvar = Polynomial::var_named(&ext, &z)?;
    gens.push(&(&zvar * &h.change_ring(&ext)?) - &Polynomial::one(&ext));
    buchberger(
        &gens,
        &TermOrderSpec::for_order(ring).with_greatest(&z),
        limits,
    )
}

pub fn sat_classic(chain: &TriangularSet, limits: &Limits) -> Result<GroebnerBasis> {
    ClassicSaturation.saturate(chain, limits)
}

pub fn sat_improved(chain: &TriangularSet, limits: &Limits) -> Result<GroebnerBasis> {
    ImprovedSaturation.saturate(chain, limits)
}

/// A chain is perfect iff its saturation ideal is proper.
pub fn is_perfect(chain: &TriangularSet, limits: &Limits) -> Result<bool> {
    Ok(!sat_classic(chain, limits)?.is_unit())
}

/// One unmixed piece of the decomposition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Component {
    pub generators: GroebnerBasis,
    /// `n − |T|`.
    pub dimension: i64,
    pub source_chain: TriangularSet,
    pub u_set: Vec<Polynomial>,
    pub method: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PruneReason {
    /// The chain is longer than the input system.
    DimensionPruning,
    /// The saturation is the whole ring.
    NotPerfect,
    /// Another component's ideal is contained in this one's.
    Redundant,
}

impl fmt::Display for PruneReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PruneReason::DimensionPruning => "dimension pruning",
            PruneReason::NotPerfect => "not perfect",
            PruneReason::Redundant => "redundant",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pruned {
    pub chain: TriangularSet,
    pub reason: PruneReason,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub components: Vec<Component>,
    pub pruned: Vec<Pruned>,
}

fn rendering(c: &Component) -> String {
    c.generators
        .generators()
        .iter()
        .map(|g| g.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

/// Repeatedly drops `G*` whenever some other `G` has `Ideal(G) ⊆ Ideal(G*)`.
/// Among equal ideals the canonically smaller rendering survives.
pub fn remove_redundant(
    mut components: Vec<Component>,
) -> Result<(Vec<Component>, Vec<Component>)> {
    sort_components(&mut components);
    let mut removed = Vec::new();
    'restart: loop {
        let n = components.len();
        for i in 0..n {
            for j in 0..n {
                if i == j || !ideal_contained(&components[i].generators, &components[j].generators)?
                {
                    continue;
                }
                let victim =
                    if ideal_contained(&components[j].generators, &components[i].generators)? {
                        let (ri, rj) = (rendering(&components[i]), rendering(&components[j]));
                        if (ri, i) < (rj, j) {
                            j
                        } else {
                            i
                        }
                    } else {
                        j
                    };
                removed.push(components.remove(victim));
                continue 'restart;
            }
        }
        break;
    }
    Ok((components, removed))
}

/// Unmixed decomposition: characteristic series, length pruning, saturation
/// with `method`, removal of unit ideals and of redundant components.
pub fn decompose(
    p: &[Polynomial],
    method: &dyn Saturation,
    limits: &Limits,
) -> Result<Decomposition> {
    let system = canonical_set(p.iter().cloned());
    let Some(first) = system.first() else {
        return Err(Error::EmptyInput);
    };
    let n = first.order().len() as i64;
    let branches = charser_a(&system, limits)?;
    let mut pruned = Vec::new();
    let mut survivors = Vec::new();
    for b in branches {
        if b.triset.len() > system.len() {
            info!("dimension pruning: {:?}", b.triset.polys());
            pruned.push(Pruned {
                chain: b.triset,
                reason: PruneReason::DimensionPruning,
            });
        } else {
            survivors.push(b);
        }
    }
    let saturated: Vec<GroebnerBasis> = survivors
        .par_iter()
        .map(|b| method.saturate(&b.triset, limits))
        .collect::<Result<_>>()?;
    let mut components = Vec::new();
    for (b, g) in survivors.into_iter().zip(saturated) {
        if g.is_unit() {
            info!("not perfect: {:?}", b.triset.polys());
            pruned.push(Pruned {
                chain: b.triset,
                reason: PruneReason::NotPerfect,
            });
            continue;
        }
        components.push(Component {
            generators: g,
            dimension: n - b.triset.len() as i64,
            source_chain: b.triset,
            u_set: b.u_set,
            method: method.name().to_string(),
        });
    }
    let (mut components, redundant) = remove_redundant(components)?;
    pruned.extend(redundant.into_iter().map(|c| Pruned {
        chain: c.source_chain,
        reason: PruneReason::Redundant,
    }));
    sort_components(&mut components);
    Ok(Decomposition { components, pruned })
}

/// [`decompose`] with the improved saturation, returning the components only.
pub fn unm_var_dec(p: &[Polynomial], limits: &Limits) -> Result<Vec<Component>> {
    Ok(decompose(p, &ImprovedSaturation, limits)?.components)
}

/// `Zero(b) ⊆ Zero(a)`: every element of `a` is in the radical of `b`.
pub fn zero_set_contained(a: &[Polynomial], b: &[Polynomial], limits: &Limits) -> Result<bool> {
    for p in a {
        if !radical_member(p, b, limits)? {
            return Ok(false);
        }
    }
    Ok(true)
}

pub fn zero_sets_equal(a: &[Polynomial], b: &[Polynomial], limits: &Limits) -> Result<bool> {
    Ok(zero_set_contained(a, b, limits)? && zero_set_contained(b, a, limits)?)
}

/// Every input polynomial vanishes on every component.
pub fn verify_soundness(
    p: &[Polynomial],
    components: &[Component],
    limits: &Limits,
) -> Result<bool> {
    for c in components {
        if !zero_set_contained(p, c.generators.generators(), limits)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Convenience for callers that only have a chain: its U-set.
pub fn chain_u_set(chain: &TriangularSet) -> Vec<Polynomial> {
    u_set(chain)
}
