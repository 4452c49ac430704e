//! Explicit highest-weight cubics of weight `(2k, k)` (columns) in
//! `S^3(∧^k)^*` that do not vanish on the secant.

use std::collections::BTreeMap;

use itertools::Itertools;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{Monomial, Rational, SparsePolynomial, Var, VarIndex};
use crate::minuscule::elements;
use crate::report::Check;
use crate::secant::ideal::pluecker_var;

/// Largest `k` for which the sums over `S_2k` are enumerated.
pub const MAX_K: u32 = 4;

/// Sign of the permutation sorting `v`, or `None` on a repeated entry.
pub fn sort_sign(v: &[u32]) -> Option<i64> {
    let mut inv = 0;
    for i in 0..v.len() {
        for j in i + 1..v.len() {
            match v[i].cmp(&v[j]) {
                std::cmp::Ordering::Equal => return None,
                std::cmp::Ordering::Greater => inv += 1,
                std::cmp::Ordering::Less => {}
            }
        }
    }
    Some(if inv % 2 == 0 { 1 } else { -1 })
}

/// `x_{a_1..a_k}`: the Plücker variable of the sorted index set, with the
/// sign of the sorting permutation; zero on repeated indices.
pub fn pluecker(indices: &[u32]) -> SparsePolynomial {
    match sort_sign(indices) {
        None => SparsePolynomial::zero(),
        Some(sign) => {
            let mask = indices.iter().fold(0u32, |acc, &i| acc | (1 << (i - 1)));
            SparsePolynomial::var(pluecker_var(mask)).scale(&Rational::from(sign))
        }
    }
}

/// Accumulates `sign · x_A x_B x_C` into `acc` (all index lists of length k).
fn add_product(acc: &mut BTreeMap<Monomial, i64>, sign: i64, parts: [&[u32]; 3]) {
    let mut total = sign;
    let mut mono = Monomial::one();
    for p in parts {
        let Some(s) = sort_sign(p) else { return };
        total *= s;
        let mask = p.iter().fold(0u32, |acc, &i| acc | (1 << (i - 1)));
        mono = mono.mul(&Monomial::var(pluecker_var(mask)));
    }
    *acc.entry(mono).or_insert(0) += total;
}

fn collect(acc: BTreeMap<Monomial, i64>) -> SparsePolynomial {
    SparsePolynomial::from_terms(acc.into_iter().filter(|(_, c)| *c != 0).map(|(m, c)| (m, Rational::from(c))))
}

/// `Σ_{σ ∈ S_2k} sgn(σ) x_{σ(1..k)} x_{σ(k+1..2k)} x_{1..k}` for even `k`.
pub fn hwv_even(k: u32) -> Result<SparsePolynomial> {
    if k < 2 || !k.is_multiple_of(2) || k > MAX_K {
        return Err(Error::Precondition(format!("the even construction needs even 2 <= k <= {MAX_K}, got {k}")));
    }
    let ku = k as usize;
    let first: Vec<u32> = (1..=k).collect();
    let mut acc = BTreeMap::new();
    for sigma in (1..=2 * k).permutations(2 * ku) {
        let sign = sort_sign(&sigma).expect("permutation");
        add_product(&mut acc, sign, [&sigma[..ku], &sigma[ku..], &first]);
    }
    Ok(collect(acc))
}

/// `Σ_{σ ∈ S_2k, δ ∈ S_k} sgn(σ)sgn(δ) x_{σ(1..k)} x_{σ(k+1..2k-1),δ(1)}
/// x_{σ(2k),δ(2..k)}` for odd `k`.
pub fn hwv_odd(k: u32) -> Result<SparsePolynomial> {
    if k < 3 || k % 2 != 1 || k > MAX_K {
        return Err(Error::Precondition(format!("the odd construction needs odd 3 <= k <= {MAX_K}, got {k}")));
    }
    let ku = k as usize;
    let deltas: Vec<(Vec<u32>, i64)> =
        (1..=k).permutations(ku).map(|d| { let s = sort_sign(&d).expect("permutation"); (d, s) }).collect();
    let mut acc = BTreeMap::new();
    for sigma in (1..=2 * k).permutations(2 * ku) {
        let ss = sort_sign(&sigma).expect("permutation");
        for (delta, sd) in &deltas {
            let mut second: Vec<u32> = sigma[ku..2 * ku - 1].to_vec();
            second.push(delta[0]);
            let mut third = vec![sigma[2 * ku - 1]];
            third.extend_from_slice(&delta[1..]);
            add_product(&mut acc, ss * sd, [&sigma[..ku], &second, &third]);
        }
    }
    Ok(collect(acc))
}

/// The construction matching the parity of `k`.
pub fn hwv(k: u32) -> Result<SparsePolynomial> {
    if k.is_multiple_of(2) {
        hwv_even(k)
    } else {
        hwv_odd(k)
    }
}

/// The raising operator `e_i` as a derivation: on a variable it replaces
/// index `i+1` by `i` (zero if `i` is already present or `i+1` is absent).
pub fn raise(p: &SparsePolynomial, i: u32) -> SparsePolynomial {
    let mut out = SparsePolynomial::zero();
    for (m, c) in p.terms() {
        for (v, e) in m.iter() {
            let VarIndex::Set(mask) = v.index else { continue };
            let (hi, lo) = (1u32 << i, 1u32 << (i - 1));
            if mask & hi == 0 || mask & lo != 0 {
                continue;
            }
            // replacing i+1 by i keeps the index list sorted
            let image = Var { name: v.name, index: VarIndex::Set((mask & !hi) | lo) };
            let rest = m.div(&Monomial::var(v)).expect("variable divides its monomial");
            out.add_term(rest.mul(&Monomial::var(image)), c * Rational::from(e as i64));
        }
    }
    out
}

/// Torus weight of a Plücker monomial over `[n]`.
pub fn monomial_weight(m: &Monomial, n: u32) -> Vec<u32> {
    let mut w = vec![0; n as usize];
    for (v, e) in m.iter() {
        if let VarIndex::Set(mask) = v.index {
            for i in elements(mask) {
                w[(i - 1) as usize] += e;
            }
        }
    }
    w
}

/// The common weight of all monomials, if there is one.
pub fn polynomial_weight(p: &SparsePolynomial, n: u32) -> Option<Vec<u32>> {
    let mut weights = p.terms().map(|(m, _)| monomial_weight(m, n));
    let first = weights.next()?;
    weights.all(|w| w == first).then_some(first)
}

/// Value at `Q = e_1 ∧ .. ∧ e_k + e_{k+1} ∧ .. ∧ e_2k`.
pub fn value_at_q(p: &SparsePolynomial, k: u32) -> Result<Rational> {
    let a = (1u32 << k) - 1;
    let b = a << k;
    p.eval_with(|v| match v.index {
        VarIndex::Set(mask) if mask == a || mask == b => Some(Rational::one()),
        VarIndex::Set(_) => Some(Rational::zero()),
        _ => None,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct HwvReport {
    pub k: u32,
    pub terms: usize,
    /// Weight as a diagram in column convention, if homogeneous.
    pub weight_columns: Option<Vec<u32>>,
    pub value_at_q: Rational,
    pub checks: Vec<Check>,
}

/// Builds the cubic and checks: nonzero, torus weight `(2k,k)` in columns,
/// killed by every raising operator `e_1..e_{2k-1}`, nonzero at `Q` with
/// `x_{1..k}^2 x_{k+1..2k}` its only monomial not vanishing there.
pub fn check_hwv(k: u32) -> Result<HwvReport> {
    let p = hwv(k)?;
    let n = 2 * k;
    let subject = format!("k={k}");
    let mut checks = vec![Check::new("nonzero", &subject, !p.is_zero())];
    let weight = polynomial_weight(&p, n);
    let weight_columns = weight.as_ref().map(|w| crate::young::conjugate(w));
    checks.push(Check::new("weight has columns (2k,k)", &subject, weight_columns == Some(vec![2 * k, k])));
    let killed = (1..n).all(|i| raise(&p, i).is_zero());
    checks.push(Check::new("annihilated by raising operators", &subject, killed));
    let value = value_at_q(&p, k)?;
    checks.push(Check::new("nonzero at Q", &subject, !value.is_zero()).with_note(format!("P(Q) = {value}")));
    let a = (1u32 << k) - 1;
    let q_mono = Monomial::from_pairs([(pluecker_var(a), 2), (pluecker_var(a << k), 1)]);
    let only = p
        .terms()
        .filter(|(m, _)| m.vars().all(|v| matches!(v.index, VarIndex::Set(s) if s == a || s == a << k)))
        .map(|(m, _)| m.clone())
        .collect::<Vec<_>>()
        == vec![q_mono];
    checks.push(Check::new("only x_{1..k}^2 x_{k+1..2k} survives at Q", &subject, only));
    Ok(HwvReport { k, terms: p.len(), weight_columns, value_at_q: value, checks })
}
