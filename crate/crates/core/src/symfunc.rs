//! Characters of plethysms and their Schur expansions.
//!
//! The character of `S^μ(W)` is `(1/n!) Σ_σ χ^μ(σ) ∏_{cycles c} p_{|c|}(W)`,
//! and the power sums of `W = S^k V` (resp. `∧^k V`) are `h_k(x^a)` (resp.
//! `e_k(x^a)`). Schur multiplicities are read off the antisymmetrization
//! `f · ∏_{i<j}(x_i - x_j)`.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::exact::{Monomial, Rational, SparsePolynomial, Var};
use crate::young::{conjugate, gl_dimension, partitions, Convention, IsotypicTable, Partition};

/// The `i`-th character variable, `i ≥ 1`.
pub const fn xvar(i: u32) -> Var {
    Var::one("x", i)
}

/// Largest outer degree with a hard-coded symmetric-group character table.
pub const MAX_OUTER_DEGREE: u32 = 4;

/// Inner functor of a plethysm.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Inner {
    Sym,
    Wedge,
}

impl Inner {
    pub fn flipped(self) -> Self {
        match self {
            Inner::Sym => Inner::Wedge,
            Inner::Wedge => Inner::Sym,
        }
    }
}

/// A symmetric polynomial in `x_1..x_d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymmetricExpression {
    poly: SparsePolynomial,
    nvars: u32,
}

impl SymmetricExpression {
    /// Wraps a polynomial; fails if it uses variables beyond `x_nvars` or is
    /// not symmetric.
    pub fn new(poly: SparsePolynomial, nvars: u32) -> Result<Self> {
        for v in poly.vars() {
            if v.name != "x" || !matches!(v.index, crate::exact::VarIndex::One(i) if (1..=nvars).contains(&i)) {
                return Err(Error::NotACharacter(format!("variable {v} is not one of x1..x{nvars}")));
            }
        }
        let e = SymmetricExpression { poly, nvars };
        if !e.is_symmetric() {
            return Err(Error::NotACharacter("polynomial is not symmetric".into()));
        }
        Ok(e)
    }

    fn trusted(poly: SparsePolynomial, nvars: u32) -> Self {
        SymmetricExpression { poly, nvars }
    }

    pub fn poly(&self) -> &SparsePolynomial {
        &self.poly
    }

    pub fn nvars(&self) -> u32 {
        self.nvars
    }

    /// Invariance under every adjacent transposition of the variables.
    pub fn is_symmetric(&self) -> bool {
        self.poly.terms().all(|(m, c)| {
            let e = exponents(m, self.nvars);
            (1..e.len()).all(|i| {
                let mut f = e.clone();
                f.swap(i - 1, i);
                &self.poly.coefficient_of(&monomial(&f)) == c
            })
        })
    }

    /// Value at `x_i = 1` for all `i`, the dimension of the representation.
    pub fn dimension(&self) -> Rational {
        self.poly.terms().map(|(_, c)| c.clone()).sum()
    }
}

/// Exponent vector of `m` in `x_1..x_d`.
pub fn exponents(m: &Monomial, d: u32) -> Vec<u32> {
    (1..=d).map(|i| m.exponent(xvar(i))).collect()
}

/// Monomial `x^e`.
pub fn monomial(e: &[u32]) -> Monomial {
    Monomial::from_pairs(e.iter().enumerate().map(|(i, &a)| (xvar(i as u32 + 1), a)))
}

/// Weak compositions of `k` into `d` parts, optionally bounded by 1.
fn compositions(k: u32, d: u32, max_part: u32) -> Vec<Vec<u32>> {
    fn rec(k: u32, d: u32, max_part: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if d == 1 {
            if k <= max_part {
                prefix.push(k);
                out.push(prefix.clone());
                prefix.pop();
            }
            return;
        }
        for a in 0..=k.min(max_part) {
            prefix.push(a);
            rec(k - a, d - 1, max_part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if d == 0 {
        if k == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    rec(k, d, max_part, &mut Vec::new(), &mut out);
    out
}

fn power_sum_of(k: u32, a: u32, d: u32, inner: Inner) -> SymmetricExpression {
    let max_part = match inner {
        Inner::Sym => k,
        Inner::Wedge => 1,
    };
    let terms = compositions(k, d, max_part)
        .into_iter()
        .map(|e| (monomial(&e.iter().map(|&x| x * a).collect::<Vec<_>>()), Rational::one()));
    SymmetricExpression::trusted(SparsePolynomial::from_terms(terms), d)
}

/// `h_k(x_1^a, ..., x_d^a)`.
pub fn h_power(k: u32, a: u32, d: u32) -> SymmetricExpression {
    power_sum_of(k, a, d, Inner::Sym)
}

/// `e_k(x_1^a, ..., x_d^a)`.
pub fn e_power(k: u32, a: u32, d: u32) -> SymmetricExpression {
    power_sum_of(k, a, d, Inner::Wedge)
}

/// `ψ_α(h_k) = ∏_i h_k(x^{α_i})`.
pub fn psi_alpha(alpha: &Partition, k: u32, d: u32) -> Result<SymmetricExpression> {
    psi_alpha_inner(alpha, k, d, Inner::Sym)
}

/// `∏_i h_k(x^{α_i})` or `∏_i e_k(x^{α_i})`.
pub fn psi_alpha_inner(alpha: &Partition, k: u32, d: u32, inner: Inner) -> Result<SymmetricExpression> {
    alpha.require(Convention::Rows)?;
    let poly = alpha
        .parts()
        .iter()
        .map(|&a| power_sum_of(k, a, d, inner).poly)
        .fold(SparsePolynomial::one(), |acc, p| &acc * &p);
    Ok(SymmetricExpression::trusted(poly, d))
}

/// Irreducible characters of `S_n`, `n ≤ 4`: `(classes, table)` where
/// `classes` lists cycle types and `table[μ][j]` is `χ^μ` on class `j`.
pub fn character_table(n: u32) -> Result<(Vec<Vec<u32>>, BTreeMap<Vec<u32>, Vec<i64>>)> {
    let (classes, rows): (Vec<Vec<u32>>, Vec<(Vec<u32>, Vec<i64>)>) = match n {
        0 => (vec![vec![]], vec![(vec![], vec![1])]),
        1 => (vec![vec![1]], vec![(vec![1], vec![1])]),
        2 => (vec![vec![1, 1], vec![2]], vec![(vec![2], vec![1, 1]), (vec![1, 1], vec![1, -1])]),
        3 => (
            vec![vec![1, 1, 1], vec![2, 1], vec![3]],
            vec![
                (vec![3], vec![1, 1, 1]),
                (vec![2, 1], vec![2, 0, -1]),
                (vec![1, 1, 1], vec![1, -1, 1]),
            ],
        ),
        4 => (
            vec![vec![1, 1, 1, 1], vec![2, 1, 1], vec![2, 2], vec![3, 1], vec![4]],
            vec![
                (vec![4], vec![1, 1, 1, 1, 1]),
                (vec![3, 1], vec![3, 1, -1, 0, -1]),
                (vec![2, 2], vec![2, 0, 2, -1, 0]),
                (vec![2, 1, 1], vec![3, -1, -1, 0, 1]),
                (vec![1, 1, 1, 1], vec![1, -1, 1, 1, -1]),
            ],
        ),
        _ => return Err(Error::UnsupportedDegree(n)),
    };
    Ok((classes, rows.into_iter().collect()))
}

/// Number of permutations with the given cycle type.
pub fn class_size(cycle_type: &[u32]) -> u64 {
    let n: u32 = cycle_type.iter().sum();
    let mut z: u64 = 1;
    let mut counts: BTreeMap<u32, u64> = BTreeMap::new();
    for &c in cycle_type {
        *counts.entry(c).or_insert(0) += 1;
    }
    for (&len, &m) in &counts {
        z *= (len as u64).pow(m as u32) * (1..=m).product::<u64>();
    }
    (1..=n as u64).product::<u64>() / z
}

/// Character of `S^μ(S^k V)` or `S^μ(∧^k V)` with `dim V = d`.
pub fn plethysm_character(mu: &Partition, k: u32, inner: Inner, d: u32) -> Result<SymmetricExpression> {
    mu.require(Convention::Rows)?;
    let n = mu.weight();
    let (classes, table) = character_table(n)?;
    let chi = &table[mu.parts()];
    let n_fact: i64 = (1..=n as i64).product();
    let mut total = SparsePolynomial::zero();
    for (alpha, &x) in classes.iter().zip(chi) {
        if x == 0 {
            continue;
        }
        let coeff = Rational::new(x * class_size(alpha) as i64, n_fact);
        let psi = psi_alpha_inner(&Partition::rows(alpha), k, d, inner)?;
        total = &total + &psi.poly.scale(&coeff);
    }
    Ok(SymmetricExpression::trusted(total, d))
}

/// Schur expansion of a homogeneous symmetric polynomial, restricted to
/// diagrams with at most `max_rows` rows.
///
/// The multiplicity of `s_λ` is the coefficient of `x^{λ+δ}` in
/// `f(x_1..x_r, 0, ...) · ∏_{i<j≤r}(x_i - x_j)`, `δ = (r-1, ..., 0)`. It is
/// computed term by term: for symmetric `f` each monomial `x^β` contributes
/// `sgn(σ)` to the diagram `λ` with `σ(β+δ) = λ+δ` strictly decreasing.
pub fn schur_expand(f: &SymmetricExpression, max_rows: u32) -> Result<IsotypicTable> {
    if !f.poly.is_homogeneous() {
        return Err(Error::NonHomogeneous);
    }
    if f.nvars < max_rows {
        return Err(Error::Precondition(format!(
            "{} variables cannot resolve diagrams with {max_rows} rows",
            f.nvars
        )));
    }
    let r = max_rows as usize;
    let mut coeffs: BTreeMap<Vec<u32>, Rational> = BTreeMap::new();
    'terms: for (m, c) in f.poly.terms() {
        let e = exponents(m, f.nvars);
        if e[r..].iter().any(|&x| x > 0) {
            continue;
        }
        let mut shifted: Vec<u32> = (0..r).map(|i| e[i] + (r - 1 - i) as u32).collect();
        // sort decreasingly, tracking the sign of the permutation
        let mut sign = 1i64;
        for i in 1..r {
            let mut j = i;
            while j > 0 && shifted[j - 1] < shifted[j] {
                shifted.swap(j - 1, j);
                sign = -sign;
                j -= 1;
            }
        }
        for i in 1..r {
            if shifted[i - 1] == shifted[i] {
                continue 'terms;
            }
        }
        let lam: Vec<u32> = (0..r).map(|i| shifted[i] - (r - 1 - i) as u32).collect();
        let entry = coeffs.entry(lam).or_insert_with(Rational::zero);
        *entry += &(c * Rational::from(sign));
    }
    let mut table = IsotypicTable::new(Convention::Rows, "character");
    for (lam, c) in coeffs {
        if c.is_zero() {
            continue;
        }
        let m = c.to_i64().filter(|&m| m > 0).ok_or_else(|| {
            Error::NotACharacter(format!("coefficient {c} of s_{:?}", Partition::rows(&lam).parts()))
        })?;
        table.add(&Partition::rows(&lam), m as u64)?;
    }
    Ok(table)
}

/// Full decomposition of `S^μ(S^k V)` or `S^μ(∧^k V)` for `dim V` large.
///
/// The symmetric case is expanded in `|μ|` variables, which already
/// separates every component. The exterior case is obtained from the
/// symmetric one by [`apply_duality`], so it too needs only `|μ|` variables.
pub fn plethysm_table(mu: &Partition, k: u32, inner: Inner) -> Result<IsotypicTable> {
    mu.require(Convention::Rows)?;
    let ambient = plethysm_name(mu, k, inner);
    match inner {
        Inner::Sym => {
            let n = mu.weight().max(1);
            let mut t = schur_expand(&plethysm_character(mu, k, Inner::Sym, n)?, n)?;
            t.set_ambient(ambient);
            Ok(t)
        }
        Inner::Wedge => {
            let ctx = PlethysmContext { outer: dual_outer(mu, k), k, inner: Inner::Sym };
            let sym = plethysm_table(&ctx.outer, k, Inner::Sym)?;
            let (mut t, _) = apply_duality(&sym, &ctx)?;
            t.set_ambient(ambient);
            Ok(t)
        }
    }
}

fn dual_outer(mu: &Partition, k: u32) -> Partition {
    if k.is_multiple_of(2) {
        mu.clone()
    } else {
        mu.transpose()
    }
}

/// Human-readable name of a plethysm, e.g. `S(2,1)(wedge^3)`.
pub fn plethysm_name(mu: &Partition, k: u32, inner: Inner) -> String {
    let outer = match mu.parts() {
        [n] => format!("S^{n}"),
        p if !p.is_empty() && p.iter().all(|&x| x == 1) => format!("wedge^{}", p.len()),
        _ => format!("S{mu}"),
    };
    let inner = match inner {
        Inner::Sym => format!("S^{k}"),
        Inner::Wedge => format!("wedge^{k}"),
    };
    format!("{outer}({inner})")
}

/// The plethysm a table decomposes: outer functor, inner degree, inner kind.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlethysmContext {
    pub outer: Partition,
    pub k: u32,
    pub inner: Inner,
}

/// Transfers a decomposition across `S^μ(S^{2l}) ↔ S^μ(∧^{2l})^∨` and
/// `S^μ(S^{2l+1}) ↔ S^{μ^∨}(∧^{2l+1})^∨`: every diagram is transposed, the
/// inner functor flips, and for odd inner degree the outer functor is
/// conjugated. Returns the new table and its context.
pub fn apply_duality(table: &IsotypicTable, ctx: &PlethysmContext) -> Result<(IsotypicTable, PlethysmContext)> {
    if table.convention() != Convention::Rows {
        return Err(Error::ConventionMismatch { expected: Convention::Rows, found: table.convention() });
    }
    let dual = PlethysmContext { outer: dual_outer(&ctx.outer, ctx.k), k: ctx.k, inner: ctx.inner.flipped() };
    let mut t = table.transpose_all();
    t.set_ambient(plethysm_name(&dual.outer, dual.k, dual.inner));
    Ok((t, dual))
}

/// `dim S^μ(W)` from the dimension of `W`.
pub fn outer_dimension(mu: &Partition, inner_dim: u32) -> u128 {
    gl_dimension(&mu.to_rows(), inner_dim)
}

/// `C(n, k)`.
pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut r: u128 = 1;
    for i in 0..k {
        r = r * (n - i) as u128 / (i + 1) as u128;
    }
    r
}

/// Dimension of `S^k V` or `∧^k V` with `dim V = d`.
pub fn inner_dimension(k: u32, d: u32, inner: Inner) -> u128 {
    match inner {
        Inner::Sym => binomial((d + k) as u64 - 1, k as u64),
        Inner::Wedge => binomial(d as u64, k as u64),
    }
}

/// All partitions of `n` with at most `rows` rows, in row convention.
pub fn diagrams(n: u32, rows: u32) -> Vec<Partition> {
    partitions(n, rows as usize, n).into_iter().map(|p| Partition::rows(&p)).collect()
}

/// Conjugate of a row list, as a row-convention partition.
pub fn conjugate_rows(p: &[u32]) -> Partition {
    Partition::rows(&conjugate(p))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(i: u32) -> SparsePolynomial {
        SparsePolynomial::var(xvar(i))
    }

    #[test]
    fn h_power_examples() {
        assert_eq!(h_power(0, 3, 4).poly, SparsePolynomial::one());
        assert_eq!(h_power(1, 2, 2).poly, x(1).pow(2) + x(2).pow(2));
        assert_eq!(h_power(2, 1, 2).poly, x(1).pow(2) + &x(1) * &x(2) + x(2).pow(2));
        assert_eq!(e_power(2, 1, 3).poly, &x(1) * &x(2) + &x(1) * &x(3) + &x(2) * &x(3));
    }

    #[test]
    fn psi_alpha_examples() {
        let p = psi_alpha(&Partition::rows(&[1, 1]), 1, 2).unwrap();
        assert_eq!(p.poly, (x(1) + x(2)).pow(2));
        let p = psi_alpha(&Partition::rows(&[2, 1]), 2, 2).unwrap();
        // h2(x^2)·h2(x) = (x1^4 + x1^2 x2^2 + x2^4)(x1^2 + x1 x2 + x2^2)
        let by_hand = (x(1).pow(4) + &x(1).pow(2) * &x(2).pow(2) + x(2).pow(4))
            * (x(1).pow(2) + &x(1) * &x(2) + x(2).pow(2));
        assert_eq!(p.poly, by_hand);
        assert_eq!(p.poly.total_degree(), Some(6));
    }

    #[test]
    fn hand_expanded_alternant_coefficient() {
        // P = h2(x^2)·h2(x) = a^6 + a^5 b + 2a^4 b^2 + a^3 b^3 + 2a^2 b^4 + a b^5 + b^6
        // [a^5 b^2](a - b)P = [a^4 b^2]P - [a^5 b]P = 2 - 1
        let p = psi_alpha(&Partition::rows(&[2, 1]), 2, 2).unwrap();
        let f = &(x(1) - x(2)) * &p.poly;
        assert_eq!(f.coefficient_of(&monomial(&[5, 2])), Rational::from(1));
        assert_eq!(f.coefficient_of(&monomial(&[4, 2])), Rational::zero());
    }

    #[test]
    fn character_tables_are_orthogonal() {
        for n in 0..=4 {
            let (classes, table) = character_table(n).unwrap();
            let n_fact: i64 = (1..=n as i64).product();
            assert_eq!(classes.iter().map(|c| class_size(c)).sum::<u64>() as i64, n_fact);
            assert_eq!(table.len(), classes.len());
            for (m1, r1) in &table {
                for (m2, r2) in &table {
                    let ip: i64 = classes
                        .iter()
                        .enumerate()
                        .map(|(j, c)| class_size(c) as i64 * r1[j] * r2[j])
                        .sum();
                    assert_eq!(ip, if m1 == m2 { n_fact } else { 0 });
                }
            }
        }
        assert!(matches!(character_table(5), Err(Error::UnsupportedDegree(5))));
    }

    #[test]
    fn small_characters() {
        let s2 = plethysm_character(&Partition::rows(&[2]), 1, Inner::Sym, 3).unwrap();
        assert_eq!(s2.poly, h_power(2, 1, 3).poly);
        let w2 = plethysm_character(&Partition::rows(&[1, 1]), 1, Inner::Sym, 3).unwrap();
        assert_eq!(w2.poly, e_power(2, 1, 3).poly);
        assert!(plethysm_character(&Partition::rows(&[5]), 1, Inner::Sym, 2).is_err());
    }

    #[test]
    fn schur_expand_examples() {
        let t = schur_expand(&h_power(2, 1, 2), 2).unwrap();
        assert_eq!(t.iter().collect::<Vec<_>>(), vec![(Partition::rows(&[2]), 1)]);
        let sq = SymmetricExpression::new((x(1) + x(2)).pow(2), 2).unwrap();
        let t = schur_expand(&sq, 2).unwrap();
        assert_eq!(t.get(&Partition::rows(&[2])), 1);
        assert_eq!(t.get(&Partition::rows(&[1, 1])), 1);
        assert_eq!(t.len(), 2);
        let bad = SymmetricExpression::new(x(1) + x(2) + SparsePolynomial::one(), 2).unwrap();
        assert!(matches!(schur_expand(&bad, 2), Err(Error::NonHomogeneous)));
        let virt = SymmetricExpression::new(x(1) * x(2) - (x(1).pow(2) + x(2).pow(2)), 2).unwrap();
        assert!(matches!(schur_expand(&virt, 2), Err(Error::NotACharacter(_))));
        assert!(SymmetricExpression::new(x(1), 2).is_err());
    }

    #[test]
    fn s3_of_s2_in_three_variables() {
        let f = plethysm_character(&Partition::rows(&[3]), 2, Inner::Sym, 3).unwrap();
        let t = schur_expand(&f, 3).unwrap();
        let got: Vec<_> = t.iter().collect();
        assert_eq!(
            got,
            vec![(Partition::rows(&[2, 2, 2]), 1), (Partition::rows(&[4, 2]), 1), (Partition::rows(&[6]), 1)]
        );
        // dim S^3(S^2 C^3) = C(8, 3)
        assert_eq!(t.dimension(3), 56);
    }

    #[test]
    fn s3_of_wedge2_by_columns() {
        // S^3(∧^2): column diagrams (6,0,0), (4,2,0), (2,2,2)
        let t = plethysm_table(&Partition::rows(&[3]), 2, Inner::Wedge).unwrap();
        let cols = t.with_convention(Convention::Columns);
        let got: Vec<_> = cols.iter().map(|(p, m)| (p.parts().to_vec(), m)).collect();
        assert_eq!(got, vec![(vec![2, 2, 2], 1), (vec![4, 2], 1), (vec![6], 1)]);
        assert_eq!(t.dimension(4), 56);
        let direct = schur_expand(&plethysm_character(&Partition::rows(&[3]), 2, Inner::Wedge, 6).unwrap(), 6).unwrap();
        assert!(direct.same_entries(&t));
    }

    #[test]
    fn duality_examples() {
        let ctx = PlethysmContext { outer: Partition::rows(&[2]), k: 2, inner: Inner::Sym };
        let sym = plethysm_table(&ctx.outer, 2, Inner::Sym).unwrap();
        let (w, dual) = apply_duality(&sym, &ctx).unwrap();
        assert_eq!(dual.inner, Inner::Wedge);
        assert_eq!(w.get(&Partition::rows(&[1, 1, 1, 1])), 1);
        assert_eq!(w.get(&Partition::rows(&[2, 2])), 1);
        assert_eq!(w.len(), 2);

        let empty = IsotypicTable::new(Convention::Rows, "");
        assert!(apply_duality(&empty, &ctx).unwrap().0.is_empty());

        let odd = PlethysmContext { outer: Partition::rows(&[2, 1]), k: 3, inner: Inner::Sym };
        assert_eq!(apply_duality(&empty, &odd).unwrap().1.outer, Partition::rows(&[2, 1]));
        let odd = PlethysmContext { outer: Partition::rows(&[3]), k: 1, inner: Inner::Sym };
        assert_eq!(apply_duality(&empty, &odd).unwrap().1.outer, Partition::rows(&[1, 1, 1]));
    }

    #[test]
    fn stable_in_number_of_variables() {
        let f3 = plethysm_character(&Partition::rows(&[2, 1]), 2, Inner::Sym, 3).unwrap();
        let f4 = plethysm_character(&Partition::rows(&[2, 1]), 2, Inner::Sym, 4).unwrap();
        assert!(schur_expand(&f3, 3).unwrap().same_entries(&schur_expand(&f4, 3).unwrap()));
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(17, 3), 680);
        assert_eq!(binomial(3, 5), 0);
        assert_eq!(inner_dimension(2, 6, Inner::Wedge), 15);
        assert_eq!(inner_dimension(2, 3, Inner::Sym), 6);
    }
}
