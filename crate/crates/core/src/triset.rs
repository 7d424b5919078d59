//! Triangular sets, their classification predicates, coefficient and
//! resultant sets, and the U-set.

use crate::elimination::resultant_chain;
use crate::error::{Error, Result};
use crate::poly::{canonical_set, product, Polynomial, VarOrder};

/// A chain `[f_1, ..., f_s]` of non-constant polynomials with strictly
/// increasing class.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TriangularSet {
    polys: Vec<Polynomial>,
    vars: Vec<usize>,
    degrees: Vec<u32>,
    initials: Vec<Polynomial>,
}

impl TriangularSet {
    pub fn new(polys: Vec<Polynomial>) -> Result<Self> {
        let Some(first) = polys.first() else {
            return Err(Error::NotTriangular("empty chain".into()));
        };
        let order = first.order().clone();
        let mut vars = Vec::with_capacity(polys.len());
        let mut degrees = Vec::with_capacity(polys.len());
        let mut initials = Vec::with_capacity(polys.len());
        for p in &polys {
            if *p.order() != order {
                return Err(Error::OrderMismatch);
            }
            let ld = p
                .leading_data()
                .map_err(|_| Error::NotTriangular(format!("`{p}` is constant")))?;
            if let Some(&prev) = vars.last() {
                if ld.var <= prev {
                    return Err(Error::NotTriangular(format!(
                        "class of `{p}` does not exceed its predecessor's"
                    )));
                }
            }
            vars.push(ld.var);
            degrees.push(ld.degree);
            initials.push(ld.initial);
        }
        Ok(TriangularSet {
            polys,
            vars,
            degrees,
            initials,
        })
    }

    /// Sorts by class first; fails if two polynomials share a class.
    pub fn from_unordered(mut polys: Vec<Polynomial>) -> Result<Self> {
        polys.sort_by_key(Polynomial::class);
        Self::new(polys)
    }

    pub fn len(&self) -> usize {
        self.polys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polys.is_empty()
    }

    pub fn polys(&self) -> &[Polynomial] {
        &self.polys
    }

    pub fn order(&self) -> &VarOrder {
        self.polys[0].order()
    }

    /// 0-based position of `lv(f_{i+1})`.
    pub fn leading_var(&self, i: usize) -> usize {
        self.vars[i]
    }

    pub fn leading_degree(&self, i: usize) -> u32 {
        self.degrees[i]
    }

    pub fn initial(&self, i: usize) -> &Polynomial {
        &self.initials[i]
    }

    pub fn initials(&self) -> &[Polynomial] {
        &self.initials
    }

    /// Variables not led by any chain element.
    pub fn parameters(&self) -> Vec<usize> {
        (0..self.order().len())
            .filter(|v| !self.vars.contains(v))
            .collect()
    }

    /// Copy with every element in normalized form.
    pub fn normalized(&self) -> TriangularSet {
        TriangularSet::new(
            self.polys
                .iter()
                .map(|p| p.normalize().expect("chain elements are nonzero"))
                .collect(),
        )
        .expect("normalization preserves classes")
    }

    fn reduced_except(&self, p: &Polynomial, skip: usize) -> bool {
        (0..self.len())
            .filter(|&j| j != skip)
            .all(|j| p.degree_in(self.vars[j]) < self.degrees[j])
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct TrisetFlags {
    pub triangular: bool,
    pub noncontradictory_ascending: bool,
    pub regular: bool,
    pub normal: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TrisetReport {
    pub flags: TrisetFlags,
    /// `C_f` per chain element, normalized and canonically sorted.
    pub coefficient_sets: Vec<Vec<Polynomial>>,
    /// `R_f` per chain element; zero resultants omitted.
    pub resultant_sets: Vec<Vec<Polynomial>>,
    pub u_set: Vec<Polynomial>,
}

/// Flags for an arbitrary list; everything but `triangular` is false when
/// the classes are not strictly increasing.
pub fn classify_chain(polys: &[Polynomial]) -> TrisetFlags {
    match TriangularSet::new(polys.to_vec()) {
        Ok(t) => classify_triset(&t),
        Err(_) => TrisetFlags::default(),
    }
}

pub fn classify_triset(t: &TriangularSet) -> TrisetFlags {
    let regular = t
        .initials()
        .iter()
        .all(|ini| !resultant_chain(ini, t).is_zero());
    let params = t.parameters();
    let normal = t
        .initials()
        .iter()
        .all(|ini| (0..t.order().len()).all(|v| params.contains(&v) || !ini.uses_var(v)));
    let ascending = (0..t.len())
        .all(|i| t.reduced_except(&t.polys()[i], i) && t.reduced_except(t.initial(i), i));
    TrisetFlags {
        triangular: true,
        noncontradictory_ascending: ascending,
        regular,
        normal,
    }
}

/// Nonzero coefficients of each `f_i` in its leading variable.
pub fn coefficient_sets(t: &TriangularSet) -> Vec<Vec<Polynomial>> {
    t.polys()
        .iter()
        .enumerate()
        .map(|(i, f)| canonical_set(f.coeffs_in(t.leading_var(i)).into_iter().map(|(_, c)| c)))
        .collect()
}

/// `R_f = { res(c, T) != 0 : c in C_f }` for each element.
pub fn resultant_sets(t: &TriangularSet) -> Vec<Vec<Polynomial>> {
    t.polys()
        .iter()
        .enumerate()
        .map(|(i, f)| {
            canonical_set(
                f.coeffs_in(t.leading_var(i))
                    .into_iter()
                    .map(|(_, c)| resultant_chain(&c, t)),
            )
        })
        .collect()
}

fn u_set_from(t: &TriangularSet, resultants: &[Vec<Polynomial>]) -> Vec<Polynomial> {
    let picked = t.initials().iter().enumerate().filter_map(|(i, ini)| {
        let degenerate = resultant_chain(ini, t).is_zero();
        let has_constant = resultants[i].iter().any(Polynomial::is_constant);
        (degenerate || !has_constant).then(|| ini.clone())
    });
    canonical_set(picked)
}

/// The U-set: initials whose chain resultant vanishes, plus initials of
/// elements none of whose coefficients has a constant chain resultant.
pub fn u_set(t: &TriangularSet) -> Vec<Polynomial> {
    u_set_from(t, &resultant_sets(t))
}

pub fn report(t: &TriangularSet) -> TrisetReport {
    let resultants = resultant_sets(t);
    TrisetReport {
        flags: classify_triset(t),
        coefficient_sets: coefficient_sets(t),
        u_set: u_set_from(t, &resultants),
        resultant_sets: resultants,
    }
}

/// `(J, U)`: the product of all initials and the product of the U-set.
pub fn products(t: &TriangularSet) -> (Polynomial, Polynomial) {
    let j = product(t.order(), t.initials());
    let u = product(t.order(), &u_set(t));
    (j, u)
}
