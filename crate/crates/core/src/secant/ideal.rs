//! Degree-`d` pieces of the ideal of the variety of sums of `s` simple
//! vectors in `∧^k ℂ^n`, computed as kernels of evaluation at exact
//! random points.
//!
//! The ideal is torus-stable, so it is spanned by weight vectors and the
//! evaluation kernel splits over the weight spaces of `S^d(∧^k)`. Each
//! weight space keeps its own incremental echelon form; all of them are fed
//! the same sample points.

use std::collections::BTreeMap;

use itertools::Itertools;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{Monomial, Rational, RowEchelon, SparsePolynomial, Var};
use crate::minuscule::{elements, subsets_of_size};
use crate::symfunc::{schur_expand, xvar, SymmetricExpression};
use crate::young::{Convention, IsotypicTable};

/// Largest number of monomials a kernel computation will take on.
pub const MAX_MONOMIALS: usize = 60_000;

/// Sample points added per round of the stopping rule.
pub const BATCH: usize = 8;

/// Plücker variable `p_A` for a subset bitmask `A`.
pub const fn pluecker_var(mask: u32) -> Var {
    Var::set("p", mask)
}

/// `k`-subsets of `[n]` in lexicographic order of their element lists.
pub fn pluecker_subsets(k: u32, n: u32) -> Vec<u32> {
    let full = if n == 0 { 0 } else { u32::MAX >> (32 - n) };
    subsets_of_size(full, k)
}

/// Determinant by exact elimination.
pub fn determinant(m: &[Vec<Rational>]) -> Rational {
    let n = m.len();
    let mut a = m.to_vec();
    let mut det = Rational::one();
    for col in 0..n {
        let Some(p) = (col..n).find(|&r| !a[r][col].is_zero()) else {
            return Rational::zero();
        };
        if p != col {
            a.swap(p, col);
            det = -det;
        }
        let pivot = a[col][col].clone();
        det *= &pivot;
        for r in col + 1..n {
            if a[r][col].is_zero() {
                continue;
            }
            let f = &a[r][col] / &pivot;
            for c in col..n {
                let v = &f * &a[col][c];
                a[r][c] -= &v;
            }
        }
    }
    det
}

/// A decomposable `k`-vector `v_1 ∧ ... ∧ v_k`, kept with its spanning
/// vectors and its Plücker coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimpleVector {
    k: u32,
    n: u32,
    spanning: Vec<Vec<Rational>>,
    pluecker: Vec<Rational>,
}

impl SimpleVector {
    /// Fails if the spanning vectors have the wrong shape or are dependent.
    pub fn new(spanning: Vec<Vec<Rational>>) -> Result<Self> {
        let k = spanning.len() as u32;
        let n = spanning.first().map_or(0, Vec::len) as u32;
        if k == 0 || spanning.iter().any(|v| v.len() != n as usize) || k > n {
            return Err(Error::Precondition(format!("need 1 <= k <= n spanning vectors of length n, got {k}")));
        }
        let pluecker: Vec<Rational> = pluecker_subsets(k, n)
            .into_iter()
            .map(|mask| {
                let cols: Vec<usize> = elements(mask).iter().map(|&c| (c - 1) as usize).collect();
                let minor: Vec<Vec<Rational>> =
                    spanning.iter().map(|row| cols.iter().map(|&c| row[c].clone()).collect()).collect();
                determinant(&minor)
            })
            .collect();
        if pluecker.iter().all(Rational::is_zero) {
            return Err(Error::Precondition("spanning vectors are linearly dependent".into()));
        }
        Ok(SimpleVector { k, n, spanning, pluecker })
    }

    /// Integer entries in `[-9, 9]`, redrawn until independent.
    pub fn random<R: Rng>(k: u32, n: u32, rng: &mut R) -> Self {
        loop {
            let rows = (0..k).map(|_| (0..n).map(|_| Rational::from(rng.gen_range(-9i64..=9))).collect()).collect();
            if let Ok(v) = SimpleVector::new(rows) {
                return v;
            }
        }
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn spanning(&self) -> &[Vec<Rational>] {
        &self.spanning
    }

    /// Coordinates indexed like [`pluecker_subsets`].
    pub fn pluecker(&self) -> &[Rational] {
        &self.pluecker
    }

    /// Coordinates as a point for polynomial evaluation.
    pub fn point(&self) -> BTreeMap<Var, Rational> {
        pluecker_subsets(self.k, self.n).into_iter().map(pluecker_var).zip(self.pluecker.iter().cloned()).collect()
    }
}

/// Plücker vector of a sum of `s` random simple vectors.
pub fn secant_sample<R: Rng>(k: u32, n: u32, s: u32, rng: &mut R) -> Vec<Rational> {
    let len = pluecker_subsets(k, n).len();
    (0..s).fold(vec![Rational::zero(); len], |mut acc, _| {
        for (a, b) in acc.iter_mut().zip(SimpleVector::random(k, n, rng).pluecker()) {
            *a += b;
        }
        acc
    })
}

/// `count` secant points as evaluation maps, from their own seeded stream.
pub fn secant_points(k: u32, n: u32, s: u32, count: usize, seed: u64) -> Vec<BTreeMap<Var, Rational>> {
    let vars: Vec<Var> = pluecker_subsets(k, n).into_iter().map(pluecker_var).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| vars.iter().copied().zip(secant_sample(k, n, s, &mut rng)).collect()).collect()
}

/// Symmetric multilinear form `P̃` with `P̃(v, ..., v) = P(v)`.
#[derive(Clone, Debug)]
pub struct Polarization {
    degree: u32,
    // each monomial as the list of its variables with repetition
    terms: Vec<(Vec<Var>, Rational)>,
}

/// `P̃(v_1..v_d) = (1/d!) Σ_m c_m perm(v_l[u_i])` for `m = u_1 ⋯ u_d`.
pub fn polarize(p: &SparsePolynomial) -> Result<Polarization> {
    if !p.is_homogeneous() {
        return Err(Error::NonHomogeneous);
    }
    let degree = p.total_degree().unwrap_or(0);
    let terms = p
        .terms()
        .map(|(m, c)| (m.iter().flat_map(|(v, e)| std::iter::repeat_n(v, e as usize)).collect(), c.clone()))
        .collect();
    Ok(Polarization { degree, terms })
}

impl Polarization {
    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn eval(&self, args: &[BTreeMap<Var, Rational>]) -> Result<Rational> {
        if args.len() != self.degree as usize {
            return Err(Error::Precondition(format!("{} arguments for a form of degree {}", args.len(), self.degree)));
        }
        let d = self.degree as usize;
        let factorial: i64 = (1..=d as i64).product();
        let mut total = Rational::zero();
        for (vars, c) in &self.terms {
            let mut m = Vec::with_capacity(d);
            for v in vars {
                let row = args
                    .iter()
                    .map(|a| a.get(v).cloned().ok_or(Error::UnboundVariable(v.to_string())))
                    .collect::<Result<Vec<_>>>()?;
                m.push(row);
            }
            total += &(c * permanent(&m));
        }
        Ok(total / Rational::from(factorial))
    }
}

/// Permanent by Ryser's formula.
fn permanent(m: &[Vec<Rational>]) -> Rational {
    let n = m.len();
    if n == 0 {
        return Rational::one();
    }
    let mut total = Rational::zero();
    for mask in 1u32..(1 << n) {
        let mut prod = Rational::one();
        for row in m {
            let s: Rational = (0..n).filter(|&j| mask & (1 << j) != 0).map(|j| row[j].clone()).sum();
            prod = prod * s;
        }
        let sign = if (n as u32 - mask.count_ones()).is_multiple_of(2) { 1 } else { -1 };
        total += &(prod * Rational::from(sign));
    }
    total
}

/// Monomials of `S^d(∧^k ℂ^n)` as sorted lists of Plücker subset masks,
/// grouped by torus weight.
#[derive(Clone, Debug)]
pub struct WeightSpaces {
    pub k: u32,
    pub n: u32,
    pub d: u32,
    pub subsets: Vec<u32>,
    /// weight -> monomials, each a sorted list of indices into `subsets`
    pub spaces: BTreeMap<Vec<u32>, Vec<Vec<usize>>>,
}

impl WeightSpaces {
    /// All weight spaces, or only those of dominant (weakly decreasing) weight.
    pub fn new(k: u32, n: u32, d: u32, dominant_only: bool) -> Result<Self> {
        if k == 0 || k > n || n > 31 {
            return Err(Error::Precondition(format!("need 1 <= k <= n <= 31, got k={k}, n={n}")));
        }
        let subsets = pluecker_subsets(k, n);
        let mut spaces: BTreeMap<Vec<u32>, Vec<Vec<usize>>> = BTreeMap::new();
        let mut count = 0usize;
        for mono in (0..subsets.len()).combinations_with_replacement(d as usize) {
            let w = monomial_weight(&mono, &subsets, n);
            if dominant_only && w.windows(2).any(|p| p[0] < p[1]) {
                continue;
            }
            count += 1;
            if count > MAX_MONOMIALS {
                return Err(Error::Precondition(format!(
                    "more than {MAX_MONOMIALS} monomials in S^{d}(wedge^{k} C^{n})"
                )));
            }
            spaces.entry(w).or_default().push(mono);
        }
        Ok(WeightSpaces { k, n, d, subsets, spaces })
    }

    pub fn monomial_count(&self) -> usize {
        self.spaces.values().map(Vec::len).sum()
    }

    pub fn to_monomial(&self, mono: &[usize]) -> Monomial {
        Monomial::from_pairs(mono.iter().map(|&i| (pluecker_var(self.subsets[i]), 1)))
    }
}

fn monomial_weight(mono: &[usize], subsets: &[u32], n: u32) -> Vec<u32> {
    let mut w = vec![0; n as usize];
    for &i in mono {
        for e in elements(subsets[i]) {
            w[(e - 1) as usize] += 1;
        }
    }
    w
}

/// Kernel of evaluation restricted to one weight space.
#[derive(Clone, Debug)]
pub struct WeightSpaceKernel {
    pub weight: Vec<u32>,
    pub monomials: Vec<Vec<usize>>,
    pub kernel: Vec<Vec<Rational>>,
}

/// Runs the sampling loop until the total rank has been unchanged for two
/// consecutive batches and a further confirmation batch adds nothing.
/// Returns the kernels and the number of points used.
pub fn evaluation_kernels(spaces: &WeightSpaces, s: u32, seed: u64) -> Result<(Vec<WeightSpaceKernel>, usize)> {
    if s == 0 {
        return Err(Error::Precondition("need s >= 1 summands".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let groups: Vec<(&Vec<u32>, &Vec<Vec<usize>>)> = spaces.spaces.iter().collect();
    let mut echelons: Vec<RowEchelon> = groups.iter().map(|(_, m)| RowEchelon::new(m.len())).collect();
    let total = spaces.monomial_count();
    let mut rank = 0usize;
    let mut unchanged = 0;
    let mut confirming = false;
    let mut points = 0usize;
    loop {
        for _ in 0..BATCH {
            let p = secant_sample(spaces.k, spaces.n, s, &mut rng);
            points += 1;
            for ((_, monos), ech) in groups.iter().zip(echelons.iter_mut()) {
                if ech.is_full() {
                    continue;
                }
                let row = monos.iter().map(|m| m.iter().map(|&i| p[i].clone()).product()).collect();
                ech.insert(row);
            }
        }
        let new_rank: usize = echelons.iter().map(RowEchelon::rank).sum();
        if new_rank == total {
            break;
        }
        if new_rank == rank {
            if confirming {
                break;
            }
            unchanged += 1;
            if unchanged >= 2 {
                confirming = true;
            }
        } else {
            unchanged = 0;
            confirming = false;
        }
        rank = new_rank;
    }
    let kernels = groups
        .into_iter()
        .zip(echelons)
        .map(|((w, monos), ech)| WeightSpaceKernel { weight: w.clone(), monomials: monos.clone(), kernel: ech.kernel() })
        .collect();
    Ok((kernels, points))
}

/// A basis of the degree-`d` part of the ideal of `σ_s(G(k,n))`, the
/// closure of sums of `s` simple vectors.
#[derive(Clone, Debug, Serialize)]
pub struct DegreeDIdealPiece {
    pub k: u32,
    pub n: u32,
    pub s: u32,
    pub d: u32,
    /// Number of monomials of `S^d(∧^k ℂ^n)`.
    pub ambient_dimension: usize,
    /// Sample points used before the rank stabilized.
    pub samples: usize,
    #[serde(skip)]
    pub basis: Vec<SparsePolynomial>,
}

impl DegreeDIdealPiece {
    pub fn dimension(&self) -> usize {
        self.basis.len()
    }
}

pub fn ideal_degree_d(k: u32, n: u32, s: u32, d: u32, seed: u64) -> Result<DegreeDIdealPiece> {
    let spaces = WeightSpaces::new(k, n, d, false)?;
    let (kernels, samples) = evaluation_kernels(&spaces, s, seed)?;
    let mut basis = Vec::new();
    for ker in &kernels {
        for v in &ker.kernel {
            let poly = SparsePolynomial::from_terms(
                ker.monomials.iter().zip(v).map(|(m, c)| (spaces.to_monomial(m), c.clone())),
            );
            basis.push(poly);
        }
    }
    Ok(DegreeDIdealPiece { k, n, s, d, ambient_dimension: spaces.monomial_count(), samples, basis })
}

/// Isotypic decomposition of the degree-`d` ideal piece, from the kernel
/// dimensions of the dominant weight spaces only. Column convention.
pub fn ideal_multiplicities(k: u32, n: u32, s: u32, d: u32, seed: u64) -> Result<IsotypicTable> {
    let spaces = WeightSpaces::new(k, n, d, true)?;
    let (kernels, _) = evaluation_kernels(&spaces, s, seed)?;
    let dims: BTreeMap<Vec<u32>, usize> = kernels.iter().map(|k| (k.weight.clone(), k.kernel.len())).collect();
    let mut table = character_to_table(&dims, n)?;
    table.set_ambient(format!("I_{d}(sigma_{s}(G({k},{n})))"));
    Ok(table)
}

/// Isotypic decomposition of `S^d(∧^k ℂ^n)` from its dominant weight
/// multiplicities. Column convention.
pub fn symmetric_power_table(k: u32, n: u32, d: u32) -> Result<IsotypicTable> {
    let spaces = WeightSpaces::new(k, n, d, true)?;
    let dims: BTreeMap<Vec<u32>, usize> = spaces.spaces.iter().map(|(w, m)| (w.clone(), m.len())).collect();
    let mut table = character_to_table(&dims, n)?;
    table.set_ambient(format!("S^{d}(wedge^{k} C^{n})"));
    Ok(table)
}

/// Schur expansion of `Σ_w dims[w] m_w` (monomial symmetric functions on
/// dominant weights).
fn character_to_table(dims: &BTreeMap<Vec<u32>, usize>, n: u32) -> Result<IsotypicTable> {
    let mut poly = SparsePolynomial::zero();
    for (w, &dim) in dims {
        if dim == 0 {
            continue;
        }
        for perm in w.iter().copied().permutations(w.len()).unique() {
            let m = Monomial::from_pairs(perm.iter().enumerate().filter(|(_, &e)| e > 0).map(|(i, &e)| (xvar(i as u32 + 1), e)));
            poly.add_term(m, Rational::from(dim as u64));
        }
    }
    if poly.is_zero() {
        return Ok(IsotypicTable::new(Convention::Columns, ""));
    }
    let table = schur_expand(&SymmetricExpression::new(poly, n)?, n)?;
    Ok(table.with_convention(Convention::Columns))
}

/// For `d ≤ s` no nonzero form of degree `d` vanishes on sums of `s`
/// simple vectors; checks this by computing the kernel.
pub fn no_low_degree(k: u32, n: u32, s: u32, d: u32, seed: u64) -> Result<bool> {
    if d > s {
        return Err(Error::Precondition(format!("the statement needs d <= s, got d={d}, s={s}")));
    }
    Ok(ideal_degree_d(k, n, s, d, seed)?.dimension() == 0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(pairs: &[(Var, i64)]) -> BTreeMap<Var, Rational> {
        pairs.iter().map(|&(v, c)| (v, Rational::from(c))).collect()
    }

    #[test]
    fn polarization_examples() {
        let x = Var::one("x", 1);
        let y = Var::one("x", 2);
        let sq = polarize(&SparsePolynomial::var(x).pow(2)).unwrap();
        assert_eq!(sq.eval(&[pt(&[(x, 3)]), pt(&[(x, 5)])]).unwrap(), Rational::from(15));
        let xy = polarize(&(&SparsePolynomial::var(x) * &SparsePolynomial::var(y))).unwrap();
        let v = xy.eval(&[pt(&[(x, 1), (y, 2)]), pt(&[(x, 3), (y, 4)])]).unwrap();
        assert_eq!(v, Rational::new(4 + 3 * 2, 2));
        let lin = polarize(&(SparsePolynomial::var(x).scale(&Rational::from(7)))).unwrap();
        assert_eq!(lin.eval(&[pt(&[(x, 2)])]).unwrap(), Rational::from(14));
        assert!(matches!(polarize(&(SparsePolynomial::var(x) + SparsePolynomial::one())), Err(Error::NonHomogeneous)));
    }

    #[test]
    fn simple_vector_coordinates() {
        let r = |v: &[i64]| v.iter().map(|&x| Rational::from(x)).collect::<Vec<_>>();
        let q = SimpleVector::new(vec![r(&[1, 0, 0, 0]), r(&[0, 1, 0, 0])]).unwrap();
        assert_eq!(q.pluecker()[0], Rational::one());
        assert!(q.pluecker()[1..].iter().all(Rational::is_zero));
        assert!(SimpleVector::new(vec![r(&[1, 2, 3]), r(&[2, 4, 6])]).is_err());
    }

    #[test]
    fn pluecker_quadric_of_g24() {
        let piece = ideal_degree_d(2, 4, 1, 2, 0).unwrap();
        assert_eq!(piece.dimension(), 1);
        assert_eq!(piece.ambient_dimension, 21);
    }

    #[test]
    fn no_quadrics_on_secant_of_g25() {
        assert!(no_low_degree(2, 5, 2, 2, 0).unwrap());
        assert!(no_low_degree(2, 4, 1, 1, 0).unwrap());
        assert!(no_low_degree(2, 4, 1, 2, 0).is_err());
    }

    #[test]
    fn pfaffian_cubic() {
        let piece = ideal_degree_d(2, 6, 2, 3, 0).unwrap();
        assert_eq!(piece.dimension(), 1);
        let t = ideal_multiplicities(2, 6, 2, 3, 0).unwrap();
        assert_eq!(t.len(), 1);
        assert_eq!(t.get(&crate::young::Partition::columns(&[6])), 1);
    }

    #[test]
    fn symmetric_power_table_matches_plethysm() {
        let t = symmetric_power_table(2, 6, 3).unwrap();
        let closed = crate::plethysm::s3_wedge_table(2);
        for (p, m) in t.iter() {
            assert_eq!(closed.get(&p), m, "{p}");
        }
        assert_eq!(t.dimension(6), 680);
    }
}
