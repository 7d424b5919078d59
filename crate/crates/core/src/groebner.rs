//! Buchberger's algorithm under lexicographic orders, with the coprime and
//! Gebauer–Möller chain criteria, plus normal forms and the ideal predicates
//! built on them.
//!
//! Reduction runs fraction-free on primitive integer polynomials; exponent
//! vectors are permuted so that position 0 holds the greatest variable and
//! plain slice comparison is the term order.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::poly::{integer_content, Coefficient, Monomial, Polynomial, VarOrder};

/// Lexicographic order given as a variable sequence from greatest to least.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TermOrderSpec {
    sequence: Vec<String>,
}

impl TermOrderSpec {
    pub fn lex<I, S>(sequence: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let sequence: Vec<String> = sequence.into_iter().map(Into::into).collect();
        if sequence.is_empty() {
            return Err(Error::InvalidTermOrder("empty variable sequence".into()));
        }
        for (i, v) in sequence.iter().enumerate() {
            if sequence[..i].contains(v) {
                return Err(Error::InvalidTermOrder(format!("`{v}` listed twice")));
            }
        }
        Ok(TermOrderSpec { sequence })
    }

    /// `x_n > ... > x_1`: the greatest variable of the ring is greatest.
    pub fn for_order(order: &VarOrder) -> Self {
        TermOrderSpec {
            sequence: order.names().iter().rev().cloned().collect(),
        }
    }

    /// Parses `"z>x5>x4"`.
    pub fn parse(text: &str) -> Result<Self> {
        let parts: Vec<&str> = text.split('>').map(str::trim).collect();
        if parts.iter().any(|p| !crate::poly::is_identifier(p)) {
            return Err(Error::InvalidTermOrder(format!("cannot parse `{text}`")));
        }
        Self::lex(parts)
    }

    pub fn sequence(&self) -> &[String] {
        &self.sequence
    }

    /// Same order with `var` placed above everything else.
    pub fn with_greatest(&self, var: &str) -> Self {
        let mut sequence = vec![var.to_string()];
        sequence.extend(self.sequence.iter().filter(|v| *v != var).cloned());
        TermOrderSpec { sequence }
    }

    /// `perm[k]` is the ring position of the `k`-th greatest variable.
    fn permutation(&self, ring: &VarOrder) -> Result<Vec<usize>> {
        if self.sequence.len() != ring.len() {
            return Err(Error::InvalidTermOrder(format!(
                "order lists {} variables, ring has {}",
                self.sequence.len(),
                ring.len()
            )));
        }
        self.sequence
            .iter()
            .map(|v| {
                ring.index_of(v)
                    .ok_or_else(|| Error::InvalidTermOrder(format!("`{v}` is not a ring variable")))
            })
            .collect()
    }

    /// Compares two ring monomials under this order.
    pub fn compare(&self, ring: &VarOrder, a: &Monomial, b: &Monomial) -> Result<Ordering> {
        let perm = self.permutation(ring)?;
        Ok(perm
            .iter()
            .map(|&i| a.exponent(i).cmp(&b.exponent(i)))
            .find(|o| o.is_ne())
            .unwrap_or(Ordering::Equal))
    }
}

impl std::fmt::Display for TermOrderSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.sequence.join(">"))
    }
}

/// Internal monomial order on permuted exponent vectors.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Kind {
    Lex,
    /// Graded reverse lex; only used where the answer is order-independent.
    DegRevLex,
}

fn cmp_exp(kind: Kind, a: &[u32], b: &[u32]) -> Ordering {
    match kind {
        Kind::Lex => a.cmp(b),
        Kind::DegRevLex => {
            let da: u64 = a.iter().map(|&e| e as u64).sum();
            let db: u64 = b.iter().map(|&e| e as u64).sum();
            da.cmp(&db).then_with(|| {
                a.iter()
                    .zip(b)
                    .rev()
                    .map(|(x, y)| y.cmp(x))
                    .find(|o| o.is_ne())
                    .unwrap_or(Ordering::Equal)
            })
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
struct Term {
    exp: Box<[u32]>,
    coeff: BigInt,
}

/// Terms sorted by descending exponent vector.
type IPoly = Vec<Term>;

fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

fn exp_lcm(a: &[u32], b: &[u32]) -> Box<[u32]> {
    a.iter().zip(b).map(|(x, y)| *x.max(y)).collect()
}

fn exp_sub(a: &[u32], b: &[u32]) -> Box<[u32]> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

fn coprime(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| *x == 0 || *y == 0)
}

/// Converts between ambient polynomials and permuted integer form.
#[derive(Clone)]
struct Frame {
    ring: VarOrder,
    perm: Vec<usize>,
    kind: Kind,
}

impl Frame {
    fn new(ring: &VarOrder, order: &TermOrderSpec) -> Result<Self> {
        Ok(Frame {
            ring: ring.clone(),
            perm: order.permutation(ring)?,
            kind: Kind::Lex,
        })
    }

    /// Integer multiple of `p` (primitive) and the rational factor `s` with
    /// `result = s * p`.
    fn to_internal(&self, p: &Polynomial) -> (IPoly, BigRational) {
        let l = p
            .terms()
            .fold(BigInt::one(), |acc, (_, c)| acc.lcm(c.denom()));
        let mut terms: IPoly = p
            .terms()
            .map(|(m, c)| Term {
                exp: self.perm.iter().map(|&i| m.exponent(i)).collect(),
                coeff: (c * BigRational::from_integer(l.clone())).to_integer(),
            })
            .collect();
        terms.sort_by(|a, b| cmp_exp(self.kind, &b.exp, &a.exp));
        let content = content(&terms);
        let scale = if content.is_zero() {
            BigRational::one()
        } else {
            for t in terms.iter_mut() {
                t.coeff /= &content;
            }
            BigRational::new(l, content)
        };
        (terms, scale)
    }

    fn to_polynomial(&self, p: &[Term]) -> Polynomial {
        let n = self.perm.len();
        Polynomial::from_terms(
            &self.ring,
            p.iter().map(|t| {
                let mut e = vec![0; n];
                for (k, &i) in self.perm.iter().enumerate() {
                    e[i] = t.exp[k];
                }
                (
                    Monomial::from_exponents(e),
                    Coefficient::from_integer(t.coeff.clone()),
                )
            }),
        )
    }
}

fn content(p: &[Term]) -> BigInt {
    integer_content(p.iter().map(|t| &t.coeff))
}

/// Divides out the content and makes the leading coefficient positive.
/// Returns the divisor used.
fn make_primitive(p: &mut IPoly) -> BigInt {
    let Some(first) = p.first() else {
        return BigInt::one();
    };
    let mut g = content(p);
    if first.coeff.is_negative() {
        g = -g;
    }
    if !g.is_one() {
        for t in p.iter_mut() {
            t.coeff /= &g;
        }
    }
    g
}

/// `a * p - b * x^shift * g`, both inputs sorted descending.
fn combine(kind: Kind, a: &BigInt, p: &[Term], b: &BigInt, shift: &[u32], g: &[Term]) -> IPoly {
    let mut out = Vec::with_capacity(p.len() + g.len());
    let mut i = 0;
    let mut j = 0;
    let shifted =
        |t: &Term| -> Box<[u32]> { t.exp.iter().zip(shift).map(|(x, y)| x + y).collect() };
    let mut gj = g.first().map(shifted);
    while i < p.len() || j < g.len() {
        let ord = match (&gj, p.get(i)) {
            (Some(ge), Some(pt)) => cmp_exp(kind, &pt.exp, ge),
            (None, Some(_)) => Ordering::Greater,
            (Some(_), None) => Ordering::Less,
            (None, None) => unreachable!(),
        };
        match ord {
            Ordering::Greater => {
                out.push(Term {
                    exp: p[i].exp.clone(),
                    coeff: a * &p[i].coeff,
                });
                i += 1;
            }
            Ordering::Less => {
                out.push(Term {
                    exp: gj.take().unwrap(),
                    coeff: -(b * &g[j].coeff),
                });
                j += 1;
                gj = g.get(j).map(shifted);
            }
            Ordering::Equal => {
                let c = a * &p[i].coeff - b * &g[j].coeff;
                let e = gj.take().unwrap();
                if !c.is_zero() {
                    out.push(Term { exp: e, coeff: c });
                }
                i += 1;
                j += 1;
                gj = g.get(j).map(shifted);
            }
        }
    }
    out
}

fn max_bits(p: &[Term]) -> u64 {
    p.iter().map(|t| t.coeff.bits()).max().unwrap_or(0)
}

/// Full reduction of `p` by `divisors`. Returns the remainder `r` and the
/// rational factor `s` with `s * p - r` in the ideal.
fn reduce(
    kind: Kind,
    mut p: IPoly,
    divisors: &[&IPoly],
    limits: &Limits,
) -> Result<(IPoly, BigRational)> {
    let mut scale = BigRational::one();
    let mut done: IPoly = Vec::new();
    let mut steps = 0usize;
    // terms before `start` have already moved to `done`
    let mut start = 0;
    while start < p.len() {
        let lead = &p[start];
        let found = divisors.iter().find(|g| divides(&g[0].exp, &lead.exp));
        match found {
            None => {
                done.push(lead.clone());
                start += 1;
            }
            Some(g) => {
                let gl = &g[0].coeff;
                let common = gl.gcd(&lead.coeff);
                let mut a = gl / &common;
                let mut b = &lead.coeff / &common;
                if a.is_negative() {
                    a = -a;
                    b = -b;
                }
                let shift = exp_sub(&lead.exp, &g[0].exp);
                p = combine(kind, &a, &p[start + 1..], &b, &shift, &g[1..]);
                start = 0;
                if !a.is_one() {
                    for t in done.iter_mut() {
                        t.coeff *= &a;
                    }
                    scale *= BigRational::from_integer(a);
                }
                steps += 1;
                if steps.is_multiple_of(8) {
                    let c = content(&p).gcd(&content(&done));
                    if !c.is_zero() && !c.is_one() {
                        for t in p.iter_mut().chain(done.iter_mut()) {
                            t.coeff /= &c;
                        }
                        scale /= BigRational::from_integer(c);
                    }
                    if max_bits(&p).max(max_bits(&done)) > limits.max_coeff_bits {
                        return Err(Error::ResourceLimit(format!(
                            "coefficient size exceeded {} bits",
                            limits.max_coeff_bits
                        )));
                    }
                }
            }
        }
    }
    Ok((done, scale))
}

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Box<[u32]>,
}

struct Buchberger<'a> {
    kind: Kind,
    polys: Vec<IPoly>,
    active: Vec<bool>,
    pairs: Vec<Pair>,
    limits: &'a Limits,
}

impl Buchberger<'_> {
    fn lead(&self, i: usize) -> &[u32] {
        &self.polys[i][0].exp
    }

    /// Gebauer–Möller update with the new polynomial at index `h`.
    fn update(&mut self, h: usize) {
        let lh = self.lead(h).to_vec();
        let candidates: Vec<(usize, Box<[u32]>, bool)> = (0..h)
            .filter(|&g| self.active[g])
            .map(|g| {
                let lg = self.lead(g);
                (g, exp_lcm(&lh, lg), coprime(&lh, lg))
            })
            .collect();
        let mut kept: Vec<(usize, Box<[u32]>, bool)> = Vec::new();
        for (idx, (g, l, cop)) in candidates.iter().enumerate() {
            let dominated = candidates[idx + 1..]
                .iter()
                .chain(kept.iter())
                .any(|(_, l2, _)| divides(l2, l));
            if *cop || !dominated {
                kept.push((*g, l.clone(), *cop));
            }
        }
        let polys = &self.polys;
        self.pairs.retain(|p| {
            let li = &polys[p.i][0].exp;
            let lj = &polys[p.j][0].exp;
            !(divides(&lh, &p.lcm) && exp_lcm(li, &lh) != p.lcm && exp_lcm(lj, &lh) != p.lcm)
        });
        self.pairs.extend(
            kept.into_iter()
                .filter(|(_, _, cop)| !cop)
                .map(|(g, lcm, _)| Pair { i: g, j: h, lcm }),
        );
        for g in 0..h {
            if self.active[g] && divides(&lh, self.lead(g)) {
                self.active[g] = false;
            }
        }
        self.active[h] = true;
    }

    fn push(&mut self, p: IPoly) {
        self.polys.push(p);
        self.active.push(false);
        let h = self.polys.len() - 1;
        self.update(h);
    }

    fn s_polynomial(&self, pair: &Pair) -> IPoly {
        let f = &self.polys[pair.i];
        let g = &self.polys[pair.j];
        let common = f[0].coeff.gcd(&g[0].coeff);
        let a = &g[0].coeff / &common;
        let b = &f[0].coeff / &common;
        let sf = exp_sub(&pair.lcm, &f[0].exp);
        let sg = exp_sub(&pair.lcm, &g[0].exp);
        let fs: IPoly = f[1..]
            .iter()
            .map(|t| Term {
                exp: t.exp.iter().zip(sf.iter()).map(|(x, y)| x + y).collect(),
                coeff: t.coeff.clone(),
            })
            .collect();
        combine(self.kind, &a, &fs, &b, &sg, &g[1..])
    }

    fn run(&mut self) -> Result<bool> {
        let mut processed = 0usize;
        while !self.pairs.is_empty() {
            processed += 1;
            if processed > self.limits.max_gb_pairs {
                return Err(Error::ResourceLimit(format!(
                    "more than {} S-pairs",
                    self.limits.max_gb_pairs
                )));
            }
            // normal strategy: smallest lcm first
            let (k, _) = self
                .pairs
                .iter()
                .enumerate()
                .min_by(|a, b| cmp_exp(self.kind, &a.1.lcm, &b.1.lcm).then(a.0.cmp(&b.0)))
                .unwrap();
            let pair = self.pairs.swap_remove(k);
            let s = self.s_polynomial(&pair);
            let divisors: Vec<&IPoly> = self
                .polys
                .iter()
                .zip(&self.active)
                .filter_map(|(p, &a)| a.then_some(p))
                .collect();
            let (mut h, _) = reduce(self.kind, s, &divisors, self.limits)?;
            if h.is_empty() {
                continue;
            }
            make_primitive(&mut h);
            let unit = h[0].exp.iter().all(|&e| e == 0);
            self.push(h);
            if unit {
                return Ok(true);
            }
        }
        Ok(false)
    }
}

/// Reduced lexicographic Gröbner basis with canonically ordered generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    ring: VarOrder,
    order: TermOrderSpec,
    generators: Vec<Polynomial>,
}

impl GroebnerBasis {
    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn order(&self) -> &TermOrderSpec {
        &self.order
    }

    pub fn ring(&self) -> &VarOrder {
        &self.ring
    }

    /// True when the basis is `{1}`, i.e. the ideal is the whole ring.
    pub fn is_unit(&self) -> bool {
        self.generators.len() == 1 && self.generators[0].is_one()
    }

    /// Wraps generators already known to form a reduced basis.
    pub(crate) fn from_reduced(
        ring: VarOrder,
        order: TermOrderSpec,
        generators: Vec<Polynomial>,
    ) -> Self {
        GroebnerBasis {
            ring,
            order,
            generators,
        }
    }

    fn frame(&self) -> Frame {
        Frame::new(&self.ring, &self.order).expect("basis order matches its ring")
    }

    fn internal(&self, frame: &Frame) -> Vec<IPoly> {
        self.generators
            .iter()
            .map(|g| frame.to_internal(g).0)
            .collect()
    }

    /// Leading monomial of `p` under the basis order.
    pub fn leading_monomial(&self, p: &Polynomial) -> Option<Monomial> {
        let frame = self.frame();
        let ip = frame.to_internal(p).0;
        ip.first().map(|t| {
            let mut e = vec![0; frame.perm.len()];
            for (k, &i) in frame.perm.iter().enumerate() {
                e[i] = t.exp[k];
            }
            Monomial::from_exponents(e)
        })
    }
}

/// Leading monomial of `p` under `order` in `p`'s own ring.
pub fn leading_monomial(p: &Polynomial, order: &TermOrderSpec) -> Result<Option<Monomial>> {
    let frame = Frame::new(p.order(), order)?;
    let ip = frame.to_internal(p).0;
    Ok(ip.first().map(|t| {
        let mut e = vec![0; frame.perm.len()];
        for (k, &i) in frame.perm.iter().enumerate() {
            e[i] = t.exp[k];
        }
        Monomial::from_exponents(e)
    }))
}

/// S-polynomial of `f` and `g` under `order` (up to a nonzero constant).
pub fn s_polynomial(f: &Polynomial, g: &Polynomial, order: &TermOrderSpec) -> Result<Polynomial> {
    let frame = Frame::new(f.order(), order)?;
    let fi = frame.to_internal(f).0;
    let gi = frame.to_internal(g).0;
    if fi.is_empty() || gi.is_empty() {
        return Ok(Polynomial::zero(f.order()));
    }
    let bb = Buchberger {
        kind: Kind::Lex,
        polys: vec![fi, gi],
        active: vec![true, true],
        pairs: Vec::new(),
        limits: &Limits::default(),
    };
    let pair = Pair {
        i: 0,
        j: 1,
        lcm: exp_lcm(bb.lead(0), bb.lead(1)),
    };
    Ok(frame.to_polynomial(&bb.s_polynomial(&pair)))
}

/// Reduced basis in internal form, or `None` for the unit ideal. Inputs are
/// nonzero, primitive and share the frame.
fn reduced_basis(
    kind: Kind,
    mut inputs: Vec<IPoly>,
    limits: &Limits,
) -> Result<Option<Vec<IPoly>>> {
    if inputs.iter().any(|p| p[0].exp.iter().all(|&e| e == 0)) {
        return Ok(None);
    }
    inputs.sort_by(|a, b| cmp_exp(kind, &a[0].exp, &b[0].exp));
    inputs.dedup();
    let mut bb = Buchberger {
        kind,
        polys: Vec::new(),
        active: Vec::new(),
        pairs: Vec::new(),
        limits,
    };
    for p in inputs {
        bb.push(p);
    }
    if bb.run()? {
        return Ok(None);
    }

    // Minimalize, then tail-reduce each generator by the others.
    let mut minimal: Vec<IPoly> = Vec::new();
    let mut candidates: Vec<IPoly> = bb
        .polys
        .into_iter()
        .zip(bb.active)
        .filter_map(|(p, a)| a.then_some(p))
        .collect();
    candidates.sort_by(|a, b| cmp_exp(kind, &a[0].exp, &b[0].exp));
    for p in candidates {
        if !minimal.iter().any(|g| divides(&g[0].exp, &p[0].exp)) {
            minimal.push(p);
        }
    }
    let mut reduced = Vec::with_capacity(minimal.len());
    for (i, g) in minimal.iter().enumerate() {
        let others: Vec<&IPoly> = minimal
            .iter()
            .enumerate()
            .filter_map(|(j, h)| (j != i).then_some(h))
            .collect();
        let (mut r, _) = reduce(kind, g.clone(), &others, limits)?;
        make_primitive(&mut r);
        reduced.push(r);
    }
    reduced.sort_by(|a, b| cmp_exp(kind, &a[0].exp, &b[0].exp));
    Ok(Some(reduced))
}

fn internal_inputs(f: &[Polynomial], frame: &Frame) -> Vec<IPoly> {
    f.iter()
        .filter(|p| !p.is_zero())
        .map(|p| {
            let mut ip = frame.to_internal(p).0;
            make_primitive(&mut ip);
            ip
        })
        .collect()
}

fn common_ring(f: &[Polynomial]) -> Result<VarOrder> {
    let Some(first) = f.first() else {
        return Err(Error::EmptyInput);
    };
    let ring = first.order().clone();
    if f.iter().any(|p| *p.order() != ring) {
        return Err(Error::OrderMismatch);
    }
    Ok(ring)
}

pub fn buchberger(
    f: &[Polynomial],
    order: &TermOrderSpec,
    limits: &Limits,
) -> Result<GroebnerBasis> {
    let ring = common_ring(f)?;
    let frame = Frame::new(&ring, order)?;
    let inputs = internal_inputs(f, &frame);
    if inputs.is_empty() {
        // The zero ideal has the empty basis.
        return Ok(GroebnerBasis::from_reduced(ring, order.clone(), Vec::new()));
    }
    let generators = match reduced_basis(Kind::Lex, inputs, limits)? {
        None => vec![Polynomial::one(&ring)],
        Some(basis) => basis.iter().map(|p| frame.to_polynomial(p)).collect(),
    };
    Ok(GroebnerBasis::from_reduced(ring, order.clone(), generators))
}

/// True iff `f` generates the whole ring. Uses a graded order, which is far
/// cheaper than lex when the answer is no.
pub fn generates_unit(f: &[Polynomial], limits: &Limits) -> Result<bool> {
    let ring = common_ring(f)?;
    let frame = Frame {
        ring: ring.clone(),
        perm: (0..ring.len()).rev().collect(),
        kind: Kind::DegRevLex,
    };
    let inputs = internal_inputs(f, &frame);
    if inputs.is_empty() {
        return Ok(false);
    }
    Ok(reduced_basis(Kind::DegRevLex, inputs, limits)?.is_none())
}

fn into_ring(p: &Polynomial, g: &GroebnerBasis) -> Result<Polynomial> {
    if p.order() == g.ring() {
        Ok(p.clone())
    } else {
        p.change_ring(g.ring())
    }
}

/// Remainder of complete division by the basis; `p - result` lies in the
/// ideal.
pub fn normal_form(p: &Polynomial, g: &GroebnerBasis) -> Result<Polynomial> {
    normal_form_with(p, g, &Limits::default())
}

pub fn normal_form_with(p: &Polynomial, g: &GroebnerBasis, limits: &Limits) -> Result<Polynomial> {
    let p = into_ring(p, g)?;
    if p.is_zero() || g.generators.is_empty() {
        return Ok(p);
    }
    let frame = g.frame();
    let basis = g.internal(&frame);
    let refs: Vec<&IPoly> = basis.iter().collect();
    let (ip, s0) = frame.to_internal(&p);
    let (r, s1) = reduce(Kind::Lex, ip, &refs, limits)?;
    // r = s1 * (s0 * p) mod ideal
    let scale = s0 * s1;
    Ok(frame.to_polynomial(&r).scale(&scale.recip()))
}

pub fn ideal_member(p: &Polynomial, g: &GroebnerBasis) -> Result<bool> {
    Ok(normal_form(p, g)?.is_zero())
}

/// True iff every generator of each basis lies in the other's ideal.
pub fn ideal_equal(a: &GroebnerBasis, b: &GroebnerBasis) -> Result<bool> {
    Ok(ideal_contained(a, b)? && ideal_contained(b, a)?)
}

/// `Ideal(a) ⊆ Ideal(b)`.
pub fn ideal_contained(a: &GroebnerBasis, b: &GroebnerBasis) -> Result<bool> {
    for g in a.generators() {
        if !ideal_member(g, b)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Rabinowitsch test: `p` is in the radical of `Ideal(f)` iff
/// `f ∪ {z·p − 1}` generates the unit ideal.
pub fn radical_member(p: &Polynomial, f: &[Polynomial], limits: &Limits) -> Result<bool> {
    if p.is_zero() {
        return Ok(true);
    }
    let ring = p.order();
    let (ext, z) = ring.with_auxiliary("z");
    let zvar = Polynomial::var_named(&ext, &z)?;
    let mut h = Vec::with_capacity(f.len() + 1);
    for q in f {
        h.push(q.change_ring(&ext)?);
    }
    let zp = &(&zvar * &p.change_ring(&ext)?) - &Polynomial::one(&ext);
    h.push(zp);
    generates_unit(&h, limits)
}

/// Generators of `g` free of every variable in `drop`. Requires each dropped
/// variable to precede every kept one in the basis order.
pub fn eliminate(g: &GroebnerBasis, drop: &[&str]) -> Result<Vec<Polynomial>> {
    let seq = g.order().sequence();
    let mut positions = Vec::with_capacity(drop.len());
    for d in drop {
        let k = seq
            .iter()
            .position(|v| v == d)
            .ok_or_else(|| Error::InvalidTermOrder(format!("`{d}` is not in the order")))?;
        positions.push(k);
    }
    let kept_first = (0..seq.len()).find(|k| !positions.contains(k));
    if let Some(kf) = kept_first {
        if positions.iter().any(|&k| k > kf) {
            return Err(Error::InvalidTermOrder(
                "eliminated variables must be greater than all kept variables".into(),
            ));
        }
    }
    let drop_idx: Vec<usize> = drop
        .iter()
        .map(|d| g.ring().index_of(d).expect("order matches ring"))
        .collect();
    Ok(g.generators()
        .iter()
        .filter(|p| drop_idx.iter().all(|&i| !p.uses_var(i)))
        .cloned()
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::io::parse_polynomial;

    fn ring(names: &[&str]) -> VarOrder {
        VarOrder::new(names.iter().copied()).unwrap()
    }

    fn p(s: &str, o: &VarOrder) -> Polynomial {
        parse_polynomial(s, o).unwrap()
    }

    fn gb(polys: &[&str], o: &VarOrder) -> GroebnerBasis {
        let f: Vec<Polynomial> = polys.iter().map(|s| p(s, o)).collect();
        buchberger(&f, &TermOrderSpec::for_order(o), &Limits::default()).unwrap()
    }

    #[test]
    fn linear_system() {
        let o = ring(&["y", "x"]);
        let g = gb(&["x-y", "x+y"], &o);
        assert_eq!(g.generators(), &[p("y", &o), p("x", &o)]);
    }

    #[test]
    fn single_generator() {
        let o = ring(&["x1"]);
        assert_eq!(gb(&["x1"], &o).generators(), &[p("x1", &o)]);
        assert!(gb(&["x1", "x1+1"], &o).is_unit());
    }

    #[test]
    fn normal_forms() {
        let o = ring(&["x1", "x2"]);
        let g = gb(&["x1"], &o);
        assert_eq!(normal_form(&p("x2^2+1", &o), &g).unwrap(), p("x2^2+1", &o));
        assert!(normal_form(&p("x1*x2", &o), &g).unwrap().is_zero());
        assert!(normal_form(&p("x1", &o), &g).unwrap().is_zero());
        // rational remainder is exact
        let g = gb(&["2*x2-1"], &o);
        let r = normal_form(&p("x2+x1", &o), &g).unwrap();
        let half = Polynomial::constant(&o, Coefficient::new(1.into(), 2.into()));
        assert_eq!(r, &p("x1", &o) + &half);
    }

    #[test]
    fn membership_and_equality() {
        let o = ring(&["y", "x"]);
        let xy = gb(&["x", "y"], &o);
        assert!(ideal_member(&p("x+y", &o), &xy).unwrap());
        assert!(ideal_member(&Polynomial::zero(&o), &xy).unwrap());
        let x2 = gb(&["x^2"], &o);
        assert!(!ideal_member(&p("x", &o), &x2).unwrap());
        let x = gb(&["x"], &o);
        assert!(ideal_equal(&x, &x).unwrap());
        assert!(ideal_equal(&x, &gb(&["2*x"], &o)).unwrap());
        assert!(!ideal_equal(&x, &x2).unwrap());
    }

    #[test]
    fn radical_membership() {
        let o = ring(&["x"]);
        let l = Limits::default();
        assert!(radical_member(&p("x", &o), &[p("x^2", &o)], &l).unwrap());
        assert!(!radical_member(&p("1", &o), &[p("x", &o)], &l).unwrap());
        assert!(radical_member(&p("x^3-x+1", &o), &[p("x^3-x+1", &o)], &l).unwrap());
    }

    #[test]
    fn elimination() {
        let o = ring(&["x", "y", "z"]);
        let order = TermOrderSpec::parse("z>y>x").unwrap();
        let g = buchberger(&[p("z*y-1", &o), p("z-x", &o)], &order, &Limits::default()).unwrap();
        assert_eq!(eliminate(&g, &["z"]).unwrap(), vec![p("x*y-1", &o)]);
        assert_eq!(eliminate(&g, &[]).unwrap(), g.generators().to_vec());
        assert!(eliminate(&g, &["x"]).is_err());
        let unit = buchberger(&[p("1", &o)], &order, &Limits::default()).unwrap();
        assert_eq!(eliminate(&unit, &["z"]).unwrap(), vec![p("1", &o)]);
    }

    #[test]
    fn custom_order_changes_leading_terms() {
        let o = ring(&["x", "y"]);
        let yx = TermOrderSpec::parse("y>x").unwrap();
        let xy = TermOrderSpec::parse("x>y").unwrap();
        let f = vec![p("x^2-y", &o), p("x*y-1", &o)];
        let a = buchberger(&f, &yx, &Limits::default()).unwrap();
        let b = buchberger(&f, &xy, &Limits::default()).unwrap();
        assert!(ideal_equal(&a, &b).unwrap());
        assert_eq!(a.generators(), &[p("x^3-1", &o), p("y-x^2", &o)]);
        assert_eq!(b.generators(), &[p("y^3-1", &o), p("x-y^2", &o)]);
    }

    #[test]
    fn term_order_parsing() {
        assert!(TermOrderSpec::parse("z>x>z").is_err());
        assert!(TermOrderSpec::parse("z>>x").is_err());
        let o = ring(&["x"]);
        let bad = TermOrderSpec::parse("y").unwrap();
        assert!(buchberger(&[p("x", &o)], &bad, &Limits::default()).is_err());
    }

    #[test]
    fn resource_limit_is_reported() {
        let o = ring(&["x", "y", "z"]);
        let f = vec![p("x^3-y*z", &o), p("y^3-x*z+1", &o), p("z^3-x*y-2", &o)];
        let tiny = Limits {
            max_gb_pairs: 1,
            ..Limits::default()
        };
        let e = buchberger(&f, &TermOrderSpec::for_order(&o), &tiny).unwrap_err();
        assert!(e.is_resource_limit());
    }
}
