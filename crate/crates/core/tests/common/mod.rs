#![allow(dead_code)]

use std::path::PathBuf;

use proptest::prelude::*;
use unmix::poly::{Coefficient, Monomial};
use unmix::*;

pub fn order(n: usize) -> VarOrder {
    VarOrder::new((1..=n).map(|i| format!("x{i}"))).unwrap()
}

pub fn poly(s: &str, o: &VarOrder) -> Polynomial {
    parse_polynomial(s, o).unwrap()
}

pub fn load(name: &str) -> SystemFile {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../fixtures")
        .join(name);
    let text = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    parse_system(&text).unwrap()
}

pub fn lex_gb(polys: &[Polynomial]) -> GroebnerBasis {
    let order = TermOrderSpec::for_order(polys[0].order());
    buchberger(polys, &order, &Limits::default()).unwrap()
}

/// Exponent vectors over the first `vars` of `n` variables with total
/// degree at most `deg`.
pub fn monomials(n: usize, vars: usize, deg: u32) -> Vec<Vec<u32>> {
    let mut out = vec![vec![0; n]];
    for _ in 0..deg {
        let mut next = out.clone();
        for m in &out {
            for v in 0..vars {
                let mut e = m.clone();
                e[v] += 1;
                if !next.contains(&e) {
                    next.push(e);
                }
            }
        }
        out = next;
    }
    out.sort();
    out
}

pub fn build(o: &VarOrder, terms: &[(Vec<u32>, i64)]) -> Polynomial {
    Polynomial::from_terms(
        o,
        terms.iter().map(|(e, c)| {
            (
                Monomial::from_exponents(e.clone()),
                Coefficient::from_integer((*c).into()),
            )
        }),
    )
}

/// Sylvester matrix built directly from the coefficient lists.
pub fn sylvester(f: &Polynomial, g: &Polynomial, var: usize) -> Vec<Vec<Polynomial>> {
    let o = f.order();
    let m = f.degree_in(var) as usize;
    let n = g.degree_in(var) as usize;
    let size = m + n;
    let mut rows = Vec::with_capacity(size);
    for (src, count, deg) in [(f, n, m), (g, m, n)] {
        for r in 0..count {
            let mut row = vec![Polynomial::zero(o); size];
            for k in 0..=deg {
                row[r + k] = src.coefficient_of(var, (deg - k) as u32);
            }
            rows.push(row);
        }
    }
    rows
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

fn sign(p: &[usize]) -> i64 {
    let mut inv = 0;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                inv += 1;
            }
        }
    }
    if inv % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Leibniz expansion; only for tiny matrices.
pub fn brute_det(m: &[Vec<Polynomial>], o: &VarOrder) -> Polynomial {
    if m.is_empty() {
        return Polynomial::one(o);
    }
    let mut total = Polynomial::zero(o);
    for p in permutations(m.len()) {
        let mut term = Polynomial::from_int(o, sign(&p));
        for (r, &c) in p.iter().enumerate() {
            term = &term * &m[r][c];
            if term.is_zero() {
                break;
            }
        }
        total = &total + &term;
    }
    total
}

/// Resultant by Leibniz expansion of an independently built Sylvester
/// matrix. Both degrees in `var` must be positive.
pub fn leibniz_resultant(f: &Polynomial, g: &Polynomial, var: usize) -> Polynomial {
    brute_det(&sylvester(f, g, var), f.order())
}

/// Sparse polynomial in the first `vars` variables, total degree <= `deg`,
/// coefficients in [-3, 3], at most `max_terms` terms.
pub fn arb_poly_in(
    o: VarOrder,
    vars: usize,
    deg: u32,
    max_terms: usize,
) -> impl Strategy<Value = Polynomial> {
    let monos = monomials(o.len(), vars, deg);
    prop::collection::vec((0..monos.len(), -3i64..=3), 1..=max_terms).prop_map(move |picks| {
        let terms: Vec<(Vec<u32>, i64)> = picks
            .into_iter()
            .map(|(i, c)| (monos[i].clone(), c))
            .collect();
        build(&o, &terms)
    })
}

/// Random system: 2..=4 variables, 1..=3 polynomials of total degree <= 2.
pub fn arb_system() -> impl Strategy<Value = Vec<Polynomial>> {
    (2usize..=4).prop_flat_map(|n| {
        let o = order(n);
        prop::collection::vec(arb_poly_in(o.clone(), n, 2, 4), 1..=3)
            .prop_filter("some nonconstant polynomial", |ps| {
                ps.iter().any(|p| !p.is_constant())
            })
    })
}

/// Random chain: element `k` has class `classes[k]`, leading term
/// `c * x^d` with d in {1, 2}, plus lower terms of total degree <= 2.
pub fn arb_chain() -> impl Strategy<Value = TriangularSet> {
    (2usize..=4)
        .prop_flat_map(|n| {
            let o = order(n);
            let classes = prop::sample::subsequence((1..=n).collect::<Vec<_>>(), 1..=n.min(3));
            (Just(o), classes)
        })
        .prop_flat_map(|(o, classes)| {
            let elems: Vec<_> = classes
                .iter()
                .map(|&c| {
                    (
                        arb_poly_in(o.clone(), c, 2, 3),
                        arb_poly_in(o.clone(), c - 1, 1, 2),
                        1u32..=2,
                        prop_oneof![Just(1i64), Just(-1), Just(2), Just(-2), Just(3)],
                    )
                })
                .collect();
            (Just(o), Just(classes), elems)
        })
        .prop_map(|(o, classes, elems)| {
            let polys = classes
                .iter()
                .zip(elems)
                .map(|(&c, (rest, ini, d, lead))| {
                    let x = Polynomial::var(&o, c - 1);
                    // leading coefficient `lead + ini` is nonzero unless ini cancels it
                    let mut initial = &Polynomial::from_int(&o, lead) + &ini;
                    if initial.is_zero() {
                        initial = Polynomial::one(&o);
                    }
                    let tail: Polynomial = rest
                        .terms()
                        .filter(|(m, _)| m.exponent(c - 1) < d)
                        .map(|(m, k)| Polynomial::term(&o, m.clone(), k.clone()))
                        .fold(Polynomial::zero(&o), |a, b| &a + &b);
                    &(&initial * &x.pow(d)) + &tail
                })
                .collect();
            TriangularSet::new(polys).unwrap()
        })
}

/// Fixed-seed config so runs are comparable; `PROPTEST_RNG_SEED` still
/// picks another seed.
pub fn config(cases: u32) -> ProptestConfig {
    let seed = std::env::var("PROPTEST_RNG_SEED")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(0x5eed);
    ProptestConfig {
        cases,
        failure_persistence: None,
        rng_seed: proptest::test_runner::RngSeed::Fixed(seed),
        ..ProptestConfig::default()
    }
}

/// Deterministic runner so acceptance-style counts are reproducible.
pub fn runner(cases: u32) -> proptest::test_runner::TestRunner {
    use proptest::test_runner::{Config, RngAlgorithm, TestRng, TestRunner};
    let config = Config {
        cases,
        failure_persistence: None,
        ..Config::default()
    };
    TestRunner::new_with_rng(config, TestRng::deterministic_rng(RngAlgorithm::ChaCha))
}
