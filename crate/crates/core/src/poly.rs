//! Sparse multivariate polynomials with exact rational coefficients.
//!
//! Variables are ordered by position in a [`VarOrder`]: position 0 is the
//! smallest variable. Terms are kept in a map keyed by [`Monomial`], whose
//! ordering is lexicographic with the highest-index variable most significant,
//! so the last entry of the map is the leading term in the class sense.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Coefficient = BigRational;

/// Nonnegative gcd of `cs`, zero when all are zero. Starts from the smallest
/// value and reduces each coefficient modulo the running gcd first, which is
/// much cheaper than a gcd of two very different sizes.
pub(crate) fn integer_content<'a>(cs: impl Iterator<Item = &'a BigInt> + Clone) -> BigInt {
    let Some(mut g) = cs
        .clone()
        .filter(|c| !c.is_zero())
        .min_by_key(|c| c.bits())
        .map(|c| c.abs())
    else {
        return BigInt::zero();
    };
    for c in cs {
        if g.is_one() {
            break;
        }
        g = g.gcd(&(c % &g));
    }
    g
}

/// Ordered list of variable names; position 0 is the smallest variable.
#[derive(Clone)]
pub struct VarOrder {
    names: Arc<[String]>,
}

impl VarOrder {
    pub fn new<I, S>(names: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.is_empty() {
            return Err(Error::InvalidOrder("no variables".into()));
        }
        for (i, name) in names.iter().enumerate() {
            if !is_identifier(name) {
                return Err(Error::InvalidOrder(format!(
                    "`{name}` is not an identifier"
                )));
            }
            if names[..i].contains(name) {
                return Err(Error::InvalidOrder(format!("duplicate variable `{name}`")));
            }
        }
        Ok(VarOrder {
            names: names.into(),
        })
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, index: usize) -> &str {
        &self.names[index]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Appends a fresh variable greater than all existing ones. The name is
    /// `base` if unused, otherwise `base` with a numeric suffix.
    pub fn with_auxiliary(&self, base: &str) -> (VarOrder, String) {
        let mut candidate = base.to_string();
        let mut k = 0;
        while self.index_of(&candidate).is_some() {
            k += 1;
            candidate = format!("{base}_{k}");
        }
        let mut names = self.names.to_vec();
        names.push(candidate.clone());
        (
            VarOrder {
                names: names.into(),
            },
            candidate,
        )
    }
}

impl PartialEq for VarOrder {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.names, &other.names) || self.names == other.names
    }
}

impl Eq for VarOrder {}

impl Hash for VarOrder {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.names.hash(state);
    }
}

impl fmt::Debug for VarOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.names.iter()).finish()
    }
}

pub(crate) fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// Dense exponent vector. Ordered lexicographically from the highest index
/// down, i.e. the greatest variable is the most significant.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(Box<[u32]>);

impl Monomial {
    pub fn one(n: usize) -> Self {
        Monomial(vec![0; n].into_boxed_slice())
    }

    pub fn from_exponents(exps: Vec<u32>) -> Self {
        Monomial(exps.into_boxed_slice())
    }

    pub fn var(n: usize, index: usize, exp: u32) -> Self {
        let mut e = vec![0; n];
        e[index] = exp;
        Monomial(e.into_boxed_slice())
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn exponent(&self, index: usize) -> u32 {
        self.0[index]
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(other.0.iter())
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a <= b)
    }

    /// `self / other`, assuming `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(other.0.iter())
                .map(|(a, b)| a - b)
                .collect(),
        )
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(other.0.iter())
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    fn with_exponent(&self, index: usize, exp: u32) -> Monomial {
        let mut e = self.0.clone();
        e[index] = exp;
        Monomial(e)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        for (a, b) in self.0.iter().rev().zip(other.0.iter().rev()) {
            match a.cmp(b) {
                Ordering::Equal => continue,
                ord => return ord,
            }
        }
        Ordering::Equal
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Class, leading variable, leading degree and initial of a non-constant
/// polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeadingData {
    /// 1-based class: the largest index `k` with positive degree in `x_k`.
    pub class: usize,
    /// 0-based position of the leading variable in the order.
    pub var: usize,
    pub degree: u32,
    pub initial: Polynomial,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
}

#[derive(Clone)]
pub struct Polynomial {
    order: VarOrder,
    terms: BTreeMap<Monomial, Coefficient>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

impl Hash for Polynomial {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.order.hash(state);
        for (m, c) in &self.terms {
            m.hash(state);
            c.hash(state);
        }
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({})", crate::io::render_polynomial(self))
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::io::render_polynomial(self))
    }
}

impl Polynomial {
    pub fn zero(order: &VarOrder) -> Self {
        Polynomial {
            order: order.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(order: &VarOrder) -> Self {
        Self::constant(order, Coefficient::one())
    }

    pub fn constant(order: &VarOrder, c: Coefficient) -> Self {
        let mut p = Self::zero(order);
        if !c.is_zero() {
            p.terms.insert(Monomial::one(order.len()), c);
        }
        p
    }

    pub fn from_int(order: &VarOrder, c: i64) -> Self {
        Self::constant(order, Coefficient::from_integer(BigInt::from(c)))
    }

    /// The variable at position `index`.
    pub fn var(order: &VarOrder, index: usize) -> Self {
        Self::term(
            order,
            Monomial::var(order.len(), index, 1),
            Coefficient::one(),
        )
    }

    pub fn var_named(order: &VarOrder, name: &str) -> Result<Self> {
        let i = order
            .index_of(name)
            .ok_or_else(|| Error::MissingVariable(name.to_string()))?;
        Ok(Self::var(order, i))
    }

    pub fn term(order: &VarOrder, m: Monomial, c: Coefficient) -> Self {
        assert_eq!(m.len(), order.len(), "monomial length mismatch");
        let mut p = Self::zero(order);
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    /// Builds a polynomial from possibly repeated terms, summing duplicates.
    pub fn from_terms<I>(order: &VarOrder, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, Coefficient)>,
    {
        let mut p = Self::zero(order);
        for (m, c) in terms {
            assert_eq!(m.len(), order.len(), "monomial length mismatch");
            p.add_term(m, c);
        }
        p
    }

    fn add_term(&mut self, m: Monomial, c: Coefficient) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn order(&self) -> &VarOrder {
        &self.order
    }

    pub fn nvars(&self) -> usize {
        self.order.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.constant_value().is_some_and(|c| c.is_one())
    }

    /// True for zero and for nonzero constants.
    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    /// The value of a constant polynomial (`Some(0)` is never returned; the
    /// zero polynomial yields `None` as does any non-constant).
    pub fn constant_value(&self) -> Option<&Coefficient> {
        if self.terms.len() == 1 {
            let (m, c) = self.terms.iter().next().unwrap();
            if m.is_one() {
                return Some(c);
            }
        }
        None
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Coefficient)> + '_ {
        self.terms.iter()
    }

    /// Greatest term in the monomial order used for storage.
    pub fn leading_term(&self) -> Option<(&Monomial, &Coefficient)> {
        self.terms.iter().next_back()
    }

    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms
            .keys()
            .map(|m| m.exponent(var))
            .max()
            .unwrap_or(0)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms
            .keys()
            .map(Monomial::total_degree)
            .max()
            .unwrap_or(0)
    }

    pub fn uses_var(&self, var: usize) -> bool {
        self.terms.keys().any(|m| m.exponent(var) > 0)
    }

    /// 0-based index of the greatest variable occurring, if any.
    pub fn top_var(&self) -> Option<usize> {
        // The last stored monomial has the highest top variable.
        let (m, _) = self.terms.iter().next_back()?;
        m.exponents().iter().rposition(|&e| e > 0)
    }

    /// 1-based class; 0 for constants.
    pub fn class(&self) -> usize {
        self.top_var().map_or(0, |v| v + 1)
    }

    pub fn leading_data(&self) -> Result<LeadingData> {
        let var = self.top_var().ok_or(Error::NoClass)?;
        let degree = self.degree_in(var);
        Ok(LeadingData {
            class: var + 1,
            var,
            degree,
            initial: self.coefficient_of(var, degree),
        })
    }

    /// The initial: leading coefficient in the leading variable.
    pub fn initial(&self) -> Result<Polynomial> {
        Ok(self.leading_data()?.initial)
    }

    /// Coefficient of `x_var^deg` viewing `self` as univariate in `x_var`.
    pub fn coefficient_of(&self, var: usize, deg: u32) -> Polynomial {
        let mut out = Self::zero(&self.order);
        for (m, c) in &self.terms {
            if m.exponent(var) == deg {
                out.terms.insert(m.with_exponent(var, 0), c.clone());
            }
        }
        out
    }

    /// Nonzero coefficients in `x_var`, by descending degree.
    pub fn coeffs_in(&self, var: usize) -> Vec<(u32, Polynomial)> {
        let mut by_deg: BTreeMap<u32, Polynomial> = BTreeMap::new();
        for (m, c) in &self.terms {
            let d = m.exponent(var);
            by_deg
                .entry(d)
                .or_insert_with(|| Self::zero(&self.order))
                .terms
                .insert(m.with_exponent(var, 0), c.clone());
        }
        by_deg.into_iter().rev().collect()
    }

    pub fn scale(&self, c: &Coefficient) -> Polynomial {
        if c.is_zero() {
            return Self::zero(&self.order);
        }
        Polynomial {
            order: self.order.clone(),
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, mono: &Monomial) -> Polynomial {
        Polynomial {
            order: self.order.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, a)| (m.mul(mono), a.clone()))
                .collect(),
        }
    }

    pub fn checked_op(&self, other: &Polynomial, op: ArithOp) -> Result<Polynomial> {
        if self.order != other.order {
            return Err(Error::OrderMismatch);
        }
        Ok(match op {
            ArithOp::Add => self.add_impl(other, false),
            ArithOp::Sub => self.add_impl(other, true),
            ArithOp::Mul => self.mul_impl(other),
        })
    }

    fn add_impl(&self, other: &Polynomial, negate: bool) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            let c = if negate { -c.clone() } else { c.clone() };
            out.add_term(m.clone(), c);
        }
        out
    }

    fn mul_impl(&self, other: &Polynomial) -> Polynomial {
        // multiply numerators over a common denominator so the inner loop
        // does no gcd work
        let (da, db) = (self.denominator_lcm(), other.denominator_lcm());
        let scaled = |p: &Polynomial, d: &BigInt| -> Vec<(Monomial, BigInt)> {
            p.terms
                .iter()
                .map(|(m, c)| (m.clone(), c.numer() * (d / c.denom())))
                .collect()
        };
        let (a, b) = (scaled(self, &da), scaled(other, &db));
        let mut acc: BTreeMap<Monomial, BigInt> = BTreeMap::new();
        for (ma, ca) in &a {
            for (mb, cb) in &b {
                let c = ca * cb;
                match acc.entry(ma.mul(mb)) {
                    std::collections::btree_map::Entry::Vacant(v) => {
                        v.insert(c);
                    }
                    std::collections::btree_map::Entry::Occupied(mut o) => *o.get_mut() += c,
                }
            }
        }
        let den = da * db;
        let terms = acc
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(m, c)| {
                let c = if den.is_one() {
                    Coefficient::from_integer(c)
                } else {
                    Coefficient::new(c, den.clone())
                };
                (m, c)
            })
            .collect();
        Polynomial {
            order: self.order.clone(),
            terms,
        }
    }

    pub fn pow(&self, k: u32) -> Polynomial {
        let mut result = Self::one(&self.order);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = &result * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Least common multiple of the coefficient denominators.
    fn denominator_lcm(&self) -> BigInt {
        self.terms
            .values()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()))
    }

    /// Primitive integer form with positive leading coefficient.
    pub fn normalize(&self) -> Result<Polynomial> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let l = self.denominator_lcm();
        let ints: Vec<BigInt> = self
            .terms
            .values()
            .map(|c| (c * Coefficient::from_integer(l.clone())).to_integer())
            .collect();
        let mut g = integer_content(ints.iter());
        let (_, lc) = self.leading_term().unwrap();
        if lc.is_negative() {
            g = -g;
        }
        let terms = self
            .terms
            .keys()
            .zip(ints)
            .map(|(m, c)| (m.clone(), Coefficient::from_integer(c / &g)))
            .collect();
        Ok(Polynomial {
            order: self.order.clone(),
            terms,
        })
    }

    /// `normalize`, mapping zero to zero.
    /// Largest numerator or denominator size among the coefficients, in bits.
    pub fn max_coefficient_bits(&self) -> u64 {
        self.terms
            .values()
            .map(|c| c.numer().bits().max(c.denom().bits()))
            .max()
            .unwrap_or(0)
    }

    pub fn normalized_or_zero(&self) -> Polynomial {
        self.normalize().unwrap_or_else(|_| self.clone())
    }

    pub fn evaluate(&self, point: &BTreeMap<String, Coefficient>) -> Result<Coefficient> {
        let mut values = Vec::with_capacity(self.nvars());
        for (i, name) in self.order.names().iter().enumerate() {
            match point.get(name) {
                Some(v) => values.push(Some(v.clone())),
                None if self.uses_var(i) => return Err(Error::MissingAssignment(name.clone())),
                None => values.push(None),
            }
        }
        let mut acc = Coefficient::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.exponents().iter().enumerate() {
                if e > 0 {
                    t *= num_traits::pow(values[i].clone().unwrap(), e as usize);
                }
            }
            acc += t;
        }
        Ok(acc)
    }

    /// Substitutes `value` for `x_var`, keeping the ambient ring.
    pub fn specialize(&self, var: usize, value: &Coefficient) -> Polynomial {
        let mut out = Self::zero(&self.order);
        for (m, c) in &self.terms {
            let e = m.exponent(var);
            let c = c * num_traits::pow(value.clone(), e as usize);
            out.add_term(m.with_exponent(var, 0), c);
        }
        out
    }

    /// Re-expresses `self` in another ring, matching variables by name.
    pub fn change_ring(&self, target: &VarOrder) -> Result<Polynomial> {
        if *target == self.order {
            return Ok(self.clone());
        }
        let mut map = Vec::with_capacity(self.nvars());
        for (i, name) in self.order.names().iter().enumerate() {
            let j = target.index_of(name);
            if j.is_none() && self.uses_var(i) {
                return Err(Error::MissingVariable(name.clone()));
            }
            map.push(j);
        }
        let terms = self.terms.iter().map(|(m, c)| {
            let mut e = vec![0; target.len()];
            for (i, &x) in m.exponents().iter().enumerate() {
                if let Some(j) = map[i] {
                    e[j] = x;
                }
            }
            (Monomial::from_exponents(e), c.clone())
        });
        Ok(Self::from_terms(target, terms))
    }

    /// Exact quotient `self / d` if `d` divides `self`.
    pub fn div_exact(&self, d: &Polynomial) -> Option<Polynomial> {
        let (dm, dc) = d.leading_term()?;
        let mut rem = self.clone();
        let mut quot = Self::zero(&self.order);
        while let Some((m, c)) = rem.leading_term() {
            if !dm.divides(m) {
                return None;
            }
            let t = Self::term(&self.order, m.div(dm), c / dc);
            rem = &rem - &(&t * d);
            quot = &quot + &t;
        }
        Some(quot)
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.checked_op(rhs, ArithOp::Add)
            .expect("variable order mismatch")
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.checked_op(rhs, ArithOp::Sub)
            .expect("variable order mismatch")
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.checked_op(rhs, ArithOp::Mul)
            .expect("variable order mismatch")
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            order: self.order.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Add for Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: Polynomial) -> Polynomial {
        &self + &rhs
    }
}

impl Sub for Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: Polynomial) -> Polynomial {
        &self - &rhs
    }
}

impl Mul for Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: Polynomial) -> Polynomial {
        &self * &rhs
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

/// Product of a list; the empty product is 1.
pub fn product<'a, I>(order: &VarOrder, polys: I) -> Polynomial
where
    I: IntoIterator<Item = &'a Polynomial>,
{
    polys
        .into_iter()
        .fold(Polynomial::one(order), |acc, p| &acc * p)
}

/// Normalizes, drops zeros, sorts by rendering and deduplicates.
pub fn canonical_set<I>(polys: I) -> Vec<Polynomial>
where
    I: IntoIterator<Item = Polynomial>,
{
    let mut keyed: Vec<(String, Polynomial)> = polys
        .into_iter()
        .filter(|p| !p.is_zero())
        .map(|p| {
            let n = p.normalize().expect("nonzero");
            (n.to_string(), n)
        })
        .collect();
    keyed.sort_by(|a, b| a.0.cmp(&b.0));
    keyed.dedup_by(|a, b| a.0 == b.0);
    keyed.into_iter().map(|(_, p)| p).collect()
}
