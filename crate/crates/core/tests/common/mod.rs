//! Independent oracles shared by the integration tests.
#![allow(dead_code)]

use std::collections::BTreeMap;

use itertools::Itertools;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use secant_core::minuscule::{MinusculeFamily, NilpotentElement, Pairing, WeightIndex};
use secant_core::{Monomial, Rational, SparsePolynomial, Var};

/// An element of an exterior algebra: sorted index list -> coefficient.
pub type Wedge = BTreeMap<Vec<u32>, SparsePolynomial>;

fn sort_with_sign(mut v: Vec<u32>) -> Option<(Vec<u32>, i64)> {
    let mut sign = 1;
    for i in 1..v.len() {
        let mut j = i;
        while j > 0 && v[j - 1] > v[j] {
            v.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
    }
    if v.windows(2).any(|w| w[0] == w[1]) {
        None
    } else {
        Some((v, sign))
    }
}

fn push(acc: &mut Wedge, idx: Vec<u32>, c: SparsePolynomial) {
    if let Some((idx, sign)) = sort_with_sign(idx) {
        let e = acc.entry(idx).or_default();
        *e = if sign == 1 { &*e + &c } else { &*e - &c };
    }
}

fn clean(v: Wedge) -> Wedge {
    v.into_iter().filter(|(_, c)| !c.is_zero()).collect()
}

/// `X_β` on the exterior algebra. Type A (inside `∧^k ℂ^n`): the derivation
/// induced by `e_r ↦ e_{k+c}`. Type D: left multiplication by `e_i ∧ e_j`.
pub fn apply_root(fam: &MinusculeFamily, beta: &WeightIndex, v: &Wedge) -> Wedge {
    let mut out = Wedge::new();
    match *beta {
        WeightIndex::A { rows, cols } => {
            let (k, _) = fam.matrix_shape();
            let r = rows.trailing_zeros() + 1;
            let c = cols.trailing_zeros() + 1;
            for (idx, coeff) in v {
                for s in 0..idx.len() {
                    if idx[s] == r {
                        let mut new = idx.clone();
                        new[s] = k + c;
                        push(&mut out, new, coeff.clone());
                    }
                }
            }
        }
        WeightIndex::D { set } => {
            let i = set.trailing_zeros() + 1;
            let j = 32 - set.leading_zeros();
            for (idx, coeff) in v {
                let mut new = vec![i, j];
                new.extend_from_slice(idx);
                push(&mut out, new, coeff.clone());
            }
        }
    }
    clean(out)
}

/// Highest weight vector: `e_1 ∧ .. ∧ e_k` in type A, `1` in type D.
pub fn highest(fam: &MinusculeFamily) -> Wedge {
    let idx = if fam.is_type_a() { (1..=fam.matrix_shape().0).collect() } else { Vec::new() };
    [(idx, SparsePolynomial::one())].into_iter().collect()
}

/// `exp(N) v_λ` with `N = Σ_β coef_β X_β`, summing `N^j/j!` until it vanishes.
pub fn exp_orbit(n0: &NilpotentElement) -> Wedge {
    let fam = n0.family();
    let roots = fam.roots();
    let mut total = highest(&fam);
    let mut term = total.clone();
    let mut j = 1i64;
    loop {
        let mut next = Wedge::new();
        for beta in &roots {
            let coef = n0.root_coordinate(beta);
            if coef.is_zero() {
                continue;
            }
            for (idx, c) in apply_root(&fam, beta, &term) {
                push(&mut next, idx, &c * coef);
            }
        }
        let next = clean(next);
        if next.is_empty() {
            break;
        }
        let inv = Rational::new(1, j);
        term = next.into_iter().map(|(i, c)| (i, c.scale(&inv))).collect();
        for (idx, c) in &term {
            push(&mut total, idx.clone(), c.clone());
        }
        j += 1;
    }
    clean(total)
}

/// `(∏_{β ∈ parts} X_β) v_λ`: a signed basis vector, or zero.
pub fn root_monomial(fam: &MinusculeFamily, roots: &[WeightIndex]) -> Option<(Vec<u32>, i64)> {
    let mut v = highest(fam);
    for beta in roots.iter().rev() {
        v = apply_root(fam, beta, &v);
    }
    let (idx, c) = v.into_iter().exactly_one().ok()?;
    let c = c.as_constant()?.to_i64()?;
    Some((idx, c))
}

/// Roots of the fixed decomposition of a weight.
pub fn roots_of(fam: &MinusculeFamily, w: &WeightIndex, pairing: Pairing) -> Vec<WeightIndex> {
    w.root_pairs(pairing).into_iter().map(|p| WeightIndex::root(fam.is_type_a(), p)).collect()
}

/// Coefficient of `exp(N) v_λ` along the canonical vector of `w`.
pub fn wedge_coordinate(n0: &NilpotentElement, w: &WeightIndex, pairing: Pairing) -> SparsePolynomial {
    let fam = n0.family();
    let (idx, sign) = root_monomial(&fam, &roots_of(&fam, w, pairing)).expect("canonical vector is nonzero");
    let c = exp_orbit(n0).get(&idx).cloned().unwrap_or_default();
    c.scale(&Rational::from(sign))
}

/// Compatibility constant read off the wedge model.
pub fn wedge_compat(fam: &MinusculeFamily, parts: &[WeightIndex], pairing: Pairing) -> Option<i64> {
    let sum = parts.iter().try_fold(fam.top(), |acc, p| acc.disjoint_sum(p))?;
    let all: Vec<WeightIndex> = parts.iter().flat_map(|p| roots_of(fam, p, pairing)).collect();
    let (i1, s1) = root_monomial(fam, &all)?;
    let (i2, s2) = root_monomial(fam, &roots_of(fam, &sum, pairing))?;
    (i1 == i2).then_some(s1 * s2)
}

/// Schur multiplicities as coefficients of `x^{λ+δ}` in
/// `f(x_1..x_r, 0..) ∏_{i<j≤r} (x_i - x_j)`, by literal multiplication.
pub fn schur_by_vandermonde(f: &SparsePolynomial, var: fn(u32) -> Var, r: u32) -> BTreeMap<Vec<u32>, Rational> {
    let allowed: Vec<Var> = (1..=r).map(var).collect();
    let restricted = f.filter_terms(|m| m.vars().all(|v| allowed.contains(&v)));
    let mut vdm = SparsePolynomial::one();
    for i in 1..=r {
        for j in i + 1..=r {
            vdm = &vdm * &(SparsePolynomial::var(var(i)) - SparsePolynomial::var(var(j)));
        }
    }
    let product = &restricted * &vdm;
    let mut out = BTreeMap::new();
    for (m, c) in product.terms() {
        let e: Vec<u32> = (1..=r).map(|i| m.exponent(var(i))).collect();
        if e.windows(2).all(|w| w[0] > w[1]) {
            let lam: Vec<u32> = e.iter().enumerate().map(|(i, &x)| x - (r - 1 - i as u32)).collect();
            let mut lam = lam;
            while lam.last() == Some(&0) {
                lam.pop();
            }
            out.insert(lam, c.clone());
        }
    }
    out
}

/// `∂P/∂x`.
pub fn derivative(p: &SparsePolynomial, x: Var) -> SparsePolynomial {
    p.map_monomials(|m| {
        let e = m.exponent(x);
        (e > 0).then(|| (m.div(&Monomial::var(x)).expect("divisible"), Rational::from(e as i64)))
    })
}

/// `(1/d!) D_{v_1} ⋯ D_{v_d} P` with `D_v = Σ_j v_j ∂/∂x_j`.
pub fn polarization_by_derivatives(p: &SparsePolynomial, args: &[BTreeMap<Var, Rational>]) -> Rational {
    let mut cur = p.clone();
    for v in args {
        let mut next = SparsePolynomial::zero();
        for (x, c) in v {
            next = &next + &derivative(&cur, *x).scale(c);
        }
        cur = next;
    }
    let fact: i64 = (1..=args.len() as i64).product();
    cur.as_constant().unwrap_or_else(Rational::zero) / Rational::from(fact)
}

/// One reduction instance: multiplicity before and after reducing.
#[derive(Clone, Debug)]
pub struct ReductionInstance {
    pub label: String,
    pub before: u64,
    pub after: u64,
}

fn pick<'a, T, R: Rng>(items: &'a [T], rng: &mut R) -> &'a T {
    &items[rng.gen_range(0..items.len())]
}

/// Candidates are taken half the time from the table's own support, so that
/// nonzero multiplicities are exercised as well as zero ones.
fn choose<R: Rng>(support: Vec<Partition>, all: Vec<Partition>, rng: &mut R) -> Partition {
    if !support.is_empty() && rng.gen_bool(0.5) {
        pick(&support, rng).clone()
    } else {
        pick(&all, rng).clone()
    }
}

use secant_core::plethysm::{reduce_column, reduce_row};
use secant_core::secant::{ideal_multiplicities, reduce_secant};
use secant_core::symfunc::{plethysm_table, Inner, PlethysmContext};
use secant_core::young::partitions;
use secant_core::{IsotypicTable, Partition};

fn random_outer<R: Rng>(rng: &mut R) -> Partition {
    let n = rng.gen_range(2..=3);
    let all = partitions(n, n as usize, n);
    Partition::rows(pick(&all, rng))
}

/// `S^μ(∧^k)`: diagrams with exactly `|μ|` columns lose their first row.
pub fn column_reductions(count: usize, seed: u64) -> Vec<ReductionInstance> {
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let mu = random_outer(&mut rng);
            let k = rng.gen_range(2..=4);
            let w = mu.weight();
            let table = plethysm_table(&mu, k, Inner::Wedge).unwrap();
            let all: Vec<Partition> =
                partitions(w * k, (w * k) as usize, w).into_iter().filter(|p| p[0] == w).map(|p| Partition::rows(&p)).collect();
            let support = table.iter().map(|(p, _)| p).filter(|p| p.num_columns() == w as usize).collect();
            let lam = choose(support, all, &mut rng);
            let ctx = PlethysmContext { outer: mu.clone(), k, inner: Inner::Wedge };
            let (red, rctx) = reduce_column(&lam, &ctx).unwrap();
            let after = plethysm_table(&rctx.outer, rctx.k, rctx.inner).unwrap().get(&red);
            ReductionInstance { label: format!("S{mu}(wedge^{k}) {lam} -> {red}"), before: table.get(&lam), after }
        })
        .collect()
}

/// `S^μ(S^k)`: diagrams with exactly `|μ|` rows lose their first column.
pub fn row_reductions(count: usize, seed: u64) -> Vec<ReductionInstance> {
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let mu = random_outer(&mut rng);
            let k = rng.gen_range(2..=4);
            let w = mu.weight();
            let table = plethysm_table(&mu, k, Inner::Sym).unwrap();
            let all: Vec<Partition> = partitions(w * k, w as usize, w * k)
                .into_iter()
                .filter(|p| p.len() == w as usize)
                .map(|p| Partition::rows(&p))
                .collect();
            let support = table.iter().map(|(p, _)| p).filter(|p| p.num_rows() == w as usize).collect();
            let lam = choose(support, all, &mut rng);
            let ctx = PlethysmContext { outer: mu.clone(), k, inner: Inner::Sym };
            let (red, rctx) = reduce_row(&lam, &ctx).unwrap();
            let after = plethysm_table(&rctx.outer, rctx.k, rctx.inner).unwrap().get(&red);
            ReductionInstance { label: format!("S{mu}(S^{k}) {lam} -> {red}"), before: table.get(&lam), after }
        })
        .collect()
}

/// Ideals of secants of Grassmannians: diagrams with exactly `d` columns
/// lose their first row, `G(k,n) -> G(k-1,n-1)`. Ideal tables are cached.
pub fn secant_reductions(count: usize, seed: u64) -> Vec<ReductionInstance> {
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let configs: Vec<(u32, u32)> = vec![(2, 4), (2, 5), (2, 6), (2, 7), (3, 6), (3, 7)];
    let mut cache: BTreeMap<(u32, u32, u32, u32), IsotypicTable> = BTreeMap::new();
    let mut table = |k, n, s, d| {
        cache.entry((k, n, s, d)).or_insert_with(|| ideal_multiplicities(k, n, s, d, seed).unwrap()).clone()
    };
    (0..count)
        .map(|_| {
            let &(k, n) = pick(&configs, &mut rng);
            let s = rng.gen_range(1..=2);
            let d = rng.gen_range(2..=3);
            let ideal = table(k, n, s, d);
            let all: Vec<Partition> = partitions(d * k, d as usize, n)
                .into_iter()
                .filter(|p| p.len() == d as usize)
                .map(|p| Partition::columns(&p))
                .collect();
            let support = ideal.iter().map(|(p, _)| p).filter(|p| p.num_columns() == d as usize).collect();
            let lam = choose(support, all, &mut rng);
            let (red, k1, n1) = reduce_secant(&lam, k, n, d).unwrap();
            let after = table(k1, n1, s, d).get(&red);
            ReductionInstance {
                label: format!("I_{d}(sigma_{s}(G({k},{n}))) {lam} -> {red}"),
                before: ideal.get(&lam),
                after,
            }
        })
        .collect()
}
