//! Pseudo-division and Sylvester resultants, single-step and along a chain.

use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::poly::{Monomial, Polynomial};
use crate::triset::TriangularSet;

/// Outcome of pseudo-dividing by every element of a chain.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PremResult {
    pub remainder: Polynomial,
    /// `exponents[i]` is the power of `ini(f_{i+1})` introduced while
    /// dividing by the `i`-th chain element (chain order, 0-based).
    pub exponents: Vec<u32>,
}

/// Pseudo-remainder of `g` by `f` in the variable at position `var`.
///
/// Returns `(r, d)` with `lc(f)^d * g = q * f + r` and `deg(r, var) <
/// deg(f, var)`. `d` counts the reduction steps actually taken.
pub fn prem_step(g: &Polynomial, f: &Polynomial, var: usize) -> Result<(Polynomial, u32)> {
    prem_step_bounded(g, f, var, None)
}

/// [`prem_step`] that gives up once the running remainder passes the
/// degree or coefficient ceilings. With `primitive`, content is stripped
/// after every step, so the result is only correct up to a constant.
fn prem_step_bounded(
    g: &Polynomial,
    f: &Polynomial,
    var: usize,
    limits: Option<(&Limits, bool)>,
) -> Result<(Polynomial, u32)> {
    let m = f.degree_in(var);
    if m == 0 {
        return Err(Error::ConstantInVariable(f.order().name(var).to_string()));
    }
    let lc = f.coefficient_of(var, m);
    let n = f.nvars();
    let mut r = g.clone();
    let mut d = 0;
    loop {
        let k = r.degree_in(var);
        if r.is_zero() || k < m {
            break;
        }
        let lcr = r.coefficient_of(var, k);
        let shifted = (&lcr * f).mul_monomial(&Monomial::var(n, var, k - m));
        r = &(&lc * &r) - &shifted;
        d += 1;
        let Some((limits, primitive)) = limits else {
            continue;
        };
        if primitive {
            r = r.normalized_or_zero();
        }
        if r.total_degree() as usize > limits.max_prem_degree {
            return Err(Error::ResourceLimit(format!(
                "pseudo-remainder of total degree above {}",
                limits.max_prem_degree
            )));
        }
        if r.max_coefficient_bits() > limits.max_coeff_bits {
            return Err(Error::ResourceLimit(format!(
                "coefficient size exceeded {} bits",
                limits.max_coeff_bits
            )));
        }
    }
    Ok((r, d))
}

/// `prem(p, T)`: pseudo-divide by `f_s`, then `f_{s-1}`, down to `f_1`.
pub fn prem_chain(p: &Polynomial, chain: &TriangularSet) -> Result<PremResult> {
    let mut r = p.clone();
    let mut exponents = vec![0; chain.len()];
    for (i, f) in chain.polys().iter().enumerate().rev() {
        let (next, d) = prem_step(&r, f, chain.leading_var(i))?;
        r = next;
        exponents[i] = d;
    }
    Ok(PremResult {
        remainder: r,
        exponents,
    })
}

/// Like [`prem_chain`] but strips rational content as it goes and stops at
/// the ceilings of `limits`. The result agrees with `prem(p, T)` up to a
/// nonzero constant factor.
pub(crate) fn prem_chain_primitive(
    p: &Polynomial,
    chain: &TriangularSet,
    limits: &Limits,
) -> Result<Polynomial> {
    let mut r = p.clone();
    for (i, f) in chain.polys().iter().enumerate().rev() {
        if r.is_zero() {
            break;
        }
        r = prem_step_bounded(&r, f, chain.leading_var(i), Some((limits, true)))?
            .0
            .normalized_or_zero();
    }
    Ok(r)
}

/// Determinant of a square matrix of polynomials by fraction-free Bareiss
/// elimination. Every division is exact.
pub(crate) fn bareiss_determinant(mut m: Vec<Vec<Polynomial>>, zero: &Polynomial) -> Polynomial {
    let n = m.len();
    if n == 0 {
        return Polynomial::one(zero.order());
    }
    let mut negate = false;
    let mut prev = Polynomial::one(zero.order());
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    negate = !negate;
                }
                None => return zero.clone(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&m[i][j] * &m[k][k]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = num.div_exact(&prev).expect("Bareiss division is exact");
            }
            m[i][k] = zero.clone();
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if negate {
        -det
    } else {
        det
    }
}

/// Sylvester matrix of `f` (degree `m`) and `g` (degree `n`) in `var`: `n`
/// shifted rows of `f`'s coefficients followed by `m` rows of `g`'s.
pub fn sylvester_matrix(f: &Polynomial, g: &Polynomial, var: usize) -> Vec<Vec<Polynomial>> {
    let m = f.degree_in(var) as usize;
    let n = g.degree_in(var) as usize;
    let size = m + n;
    let zero = Polynomial::zero(f.order());
    let coeffs = |p: &Polynomial, d: usize| -> Vec<Polynomial> {
        (0..=d)
            .map(|k| p.coefficient_of(var, (d - k) as u32))
            .collect()
    };
    let fc = coeffs(f, m);
    let gc = coeffs(g, n);
    let mut rows = Vec::with_capacity(size);
    for i in 0..n {
        let mut row = vec![zero.clone(); size];
        row[i..i + m + 1].clone_from_slice(&fc);
        rows.push(row);
    }
    for i in 0..m {
        let mut row = vec![zero.clone(); size];
        row[i..i + n + 1].clone_from_slice(&gc);
        rows.push(row);
    }
    rows
}

/// Sylvester resultant of `f` and `g` with respect to the variable at `var`.
///
/// If exactly one operand has degree 0 in `var` the result is that operand
/// raised to the other's degree. The value is returned un-normalized.
pub fn resultant(f: &Polynomial, g: &Polynomial, var: usize) -> Result<Polynomial> {
    if f.order() != g.order() {
        return Err(Error::OrderMismatch);
    }
    let m = f.degree_in(var);
    let n = g.degree_in(var);
    if m == 0 && n == 0 {
        return Err(Error::BothConstant(f.order().name(var).to_string()));
    }
    if f.is_zero() || g.is_zero() {
        return Ok(Polynomial::zero(f.order()));
    }
    if m == 0 {
        return Ok(f.pow(n));
    }
    if n == 0 {
        return Ok(g.pow(m));
    }
    Ok(subresultant(f, g, var))
}

/// Determinant of the Sylvester matrix by Bareiss elimination. Same value as
/// [`resultant`] for positive degrees, but cubic in the matrix size.
pub fn sylvester_resultant(f: &Polynomial, g: &Polynomial, var: usize) -> Polynomial {
    let zero = Polynomial::zero(f.order());
    bareiss_determinant(sylvester_matrix(f, g, var), &zero)
}

fn lead_coeff(p: &Polynomial, var: usize) -> Polynomial {
    p.coefficient_of(var, p.degree_in(var))
}

fn exact(n: &Polynomial, d: &Polynomial) -> Polynomial {
    n.div_exact(d).expect("subresultant division is exact")
}

/// Subresultant PRS (Collins) without content removal. Both operands have
/// positive degree in `var`.
fn subresultant(f: &Polynomial, g: &Polynomial, var: usize) -> Polynomial {
    let one = Polynomial::one(f.order());
    let (mut a, mut b) = (f.clone(), g.clone());
    let mut negate = false;
    if a.degree_in(var) < b.degree_in(var) {
        std::mem::swap(&mut a, &mut b);
        negate = a.degree_in(var) % 2 == 1 && b.degree_in(var) % 2 == 1;
    }
    let (mut gl, mut h) = (one.clone(), one.clone());
    loop {
        let (da, db) = (a.degree_in(var), b.degree_in(var));
        let delta = da - db;
        if da % 2 == 1 && db % 2 == 1 {
            negate = !negate;
        }
        // full pseudo-remainder: lc(b)^(delta+1) a = q b + r
        let (r, used) = prem_step(&a, &b, var).expect("positive degree");
        let r = &r * &lead_coeff(&b, var).pow(delta + 1 - used);
        if r.is_zero() {
            return r;
        }
        a = b;
        b = exact(&r, &(&gl * &h.pow(delta)));
        gl = lead_coeff(&a, var);
        if delta > 0 {
            h = exact(&gl.pow(delta), &h.pow(delta - 1));
        }
        if b.degree_in(var) == 0 {
            let da = a.degree_in(var);
            let res = exact(&b.pow(da), &h.pow(da - 1));
            return if negate { -res } else { res };
        }
    }
}

/// `res(p, T)`: successive resultants against `f_s, ..., f_1`. A step where
/// the running polynomial does not involve the chain element's leading
/// variable is skipped.
pub fn resultant_chain(p: &Polynomial, chain: &TriangularSet) -> Polynomial {
    let mut r = p.clone();
    for (i, f) in chain.polys().iter().enumerate().rev() {
        let y = chain.leading_var(i);
        if r.degree_in(y) == 0 {
            continue;
        }
        r = resultant(&r, f, y).expect("chain element has positive degree");
        if r.is_zero() {
            break;
        }
    }
    r
}

/// True if `p` is reduced with respect to every element of the chain.
pub fn is_reduced(p: &Polynomial, chain: &TriangularSet) -> bool {
    (0..chain.len()).all(|i| p.degree_in(chain.leading_var(i)) < chain.leading_degree(i))
}
