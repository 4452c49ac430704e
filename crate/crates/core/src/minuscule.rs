//! Weights, generalized determinants and compatibility constants of the
//! two infinite minuscule-cominuscule series.
//!
//! Type A is `∧^k ℂ^n` (the Grassmannian `G(k,n)`): a weight is a pair of
//! equal-size subsets `R ⊆ {1..k}`, `C ⊆ {1..n-k}` and the nilpotent
//! algebra is `k × (n-k)` matrices. Type D is the half-spin representation
//! modelled on `∧^even ℂ^n` (the spinor variety): a weight is an even
//! subset `S ⊆ {1..n}` and the nilpotent algebra is `n × n` skew matrices.
//!
//! Weights are stored relative to the highest weight, so the empty index is
//! the highest weight itself. For each weight one decomposition into roots
//! is fixed (a [`Pairing`]); generalized determinants and compatibility
//! constants depend on that choice, the identities between them do not.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exact::{Rational, SparsePolynomial, Var};
use crate::report::Check;

/// Largest index usable in a subset bitmask.
const MAX_INDEX: u32 = 31;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FamilyKind {
    TypeA { k: u32, n: u32 },
    TypeD { n: u32 },
    E6,
    E7,
}

/// A validated family; the exceptional kinds cannot be constructed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct MinusculeFamily {
    kind: FamilyKind,
}

impl MinusculeFamily {
    pub fn new(kind: FamilyKind) -> Result<Self> {
        match kind {
            FamilyKind::TypeA { k, n } => {
                if k < 1 || 2 * k > n {
                    return Err(Error::InvalidFamily(format!("type A needs 1 <= k <= n-k, got k={k}, n={n}")));
                }
                if n > MAX_INDEX {
                    return Err(Error::InvalidFamily(format!("n={n} is too large")));
                }
            }
            FamilyKind::TypeD { n } => {
                if n < 3 {
                    return Err(Error::InvalidFamily(format!("type D needs n >= 3, got {n}")));
                }
                if n > MAX_INDEX {
                    return Err(Error::InvalidFamily(format!("n={n} is too large")));
                }
            }
            FamilyKind::E6 | FamilyKind::E7 => {
                return Err(Error::UnsupportedFamily(format!("{kind:?} has no implemented weight model")))
            }
        }
        Ok(MinusculeFamily { kind })
    }

    pub fn type_a(k: u32, n: u32) -> Result<Self> {
        Self::new(FamilyKind::TypeA { k, n })
    }

    pub fn type_d(n: u32) -> Result<Self> {
        Self::new(FamilyKind::TypeD { n })
    }

    pub fn kind(&self) -> FamilyKind {
        self.kind
    }

    /// Highest degree of a weight.
    pub fn d_max(&self) -> u32 {
        match self.kind {
            FamilyKind::TypeA { k, .. } => k,
            FamilyKind::TypeD { n } => n / 2,
            _ => unreachable!(),
        }
    }

    /// Shape of the nilpotent matrices.
    pub fn matrix_shape(&self) -> (u32, u32) {
        match self.kind {
            FamilyKind::TypeA { k, n } => (k, n - k),
            FamilyKind::TypeD { n } => (n, n),
            _ => unreachable!(),
        }
    }

    pub fn is_type_a(&self) -> bool {
        matches!(self.kind, FamilyKind::TypeA { .. })
    }

    /// All weights, sorted by degree and then by index.
    pub fn weights(&self) -> Vec<WeightIndex> {
        let mut out = Vec::new();
        match self.kind {
            FamilyKind::TypeA { k, n } => {
                for d in 0..=k {
                    for r in subsets_of_size(full_mask(k), d) {
                        for c in subsets_of_size(full_mask(n - k), d) {
                            out.push(WeightIndex::A { rows: r, cols: c });
                        }
                    }
                }
            }
            FamilyKind::TypeD { n } => {
                for d in 0..=n / 2 {
                    for s in subsets_of_size(full_mask(n), 2 * d) {
                        out.push(WeightIndex::D { set: s });
                    }
                }
            }
            _ => unreachable!(),
        }
        out.sort_by_key(|w| (w.degree(), *w));
        out
    }

    /// The degree-one weights, one per root.
    pub fn roots(&self) -> Vec<WeightIndex> {
        self.weights().into_iter().filter(|w| w.degree() == 1).collect()
    }

    /// Whether `w` is a weight of this family.
    pub fn contains(&self, w: &WeightIndex) -> bool {
        match (self.kind, w) {
            (FamilyKind::TypeA { k, n }, WeightIndex::A { rows, cols }) => {
                rows & !full_mask(k) == 0 && cols & !full_mask(n - k) == 0 && rows.count_ones() == cols.count_ones()
            }
            (FamilyKind::TypeD { n }, WeightIndex::D { set }) => set & !full_mask(n) == 0 && set.count_ones() % 2 == 0,
            _ => false,
        }
    }

    fn check(&self, w: &WeightIndex) -> Result<()> {
        if self.contains(w) {
            Ok(())
        } else {
            Err(Error::Incompatible(format!("{w} is not a weight of {self}")))
        }
    }

    /// The zero index (the highest weight itself).
    pub fn top(&self) -> WeightIndex {
        if self.is_type_a() {
            WeightIndex::A { rows: 0, cols: 0 }
        } else {
            WeightIndex::D { set: 0 }
        }
    }
}

impl fmt::Display for MinusculeFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            FamilyKind::TypeA { k, n } => write!(f, "A:{k},{n}"),
            FamilyKind::TypeD { n } => write!(f, "D:{n}"),
            FamilyKind::E6 => f.write_str("E6"),
            FamilyKind::E7 => f.write_str("E7"),
        }
    }
}

impl Serialize for MinusculeFamily {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl FromStr for MinusculeFamily {
    type Err = Error;

    /// Parses `A:k,n`, `D:n`; `E6` and `E7` parse but are rejected as
    /// unsupported.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::InvalidFamily(format!("cannot parse `{s}` (expected A:k,n or D:n)"));
        match s {
            "E6" => return Self::new(FamilyKind::E6),
            "E7" => return Self::new(FamilyKind::E7),
            _ => {}
        }
        let (kind, args) = s.split_once(':').ok_or_else(bad)?;
        let nums: Vec<u32> = args
            .split(',')
            .map(|x| x.trim().parse::<u32>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|_| bad())?;
        match (kind.trim(), nums.as_slice()) {
            ("A", [k, n]) => Self::type_a(*k, *n),
            ("D", [n]) => Self::type_d(*n),
            _ => Err(bad()),
        }
    }
}

/// A weight, written relative to the highest weight.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum WeightIndex {
    /// Rows `R ⊆ {1..k}` and columns `C ⊆ {1..n-k}` as bitmasks.
    A { rows: u32, cols: u32 },
    /// An even subset `S ⊆ {1..n}` as a bitmask.
    D { set: u32 },
}

impl WeightIndex {
    pub fn degree(&self) -> u32 {
        match *self {
            WeightIndex::A { rows, .. } => rows.count_ones(),
            WeightIndex::D { set } => set.count_ones() / 2,
        }
    }

    pub fn is_top(&self) -> bool {
        self.degree() == 0
    }

    /// Sum of two weights when their index sets are disjoint.
    pub fn disjoint_sum(&self, other: &WeightIndex) -> Option<WeightIndex> {
        match (*self, *other) {
            (WeightIndex::A { rows: r1, cols: c1 }, WeightIndex::A { rows: r2, cols: c2 }) => {
                (r1 & r2 == 0 && c1 & c2 == 0).then_some(WeightIndex::A { rows: r1 | r2, cols: c1 | c2 })
            }
            (WeightIndex::D { set: s1 }, WeightIndex::D { set: s2 }) => {
                (s1 & s2 == 0).then_some(WeightIndex::D { set: s1 | s2 })
            }
            _ => None,
        }
    }

    /// `self - other` when `other`'s index sets are contained in `self`'s.
    pub fn minus(&self, other: &WeightIndex) -> Option<WeightIndex> {
        match (*self, *other) {
            (WeightIndex::A { rows: r1, cols: c1 }, WeightIndex::A { rows: r2, cols: c2 }) => {
                (r2 & !r1 == 0 && c2 & !c1 == 0).then_some(WeightIndex::A { rows: r1 & !r2, cols: c1 & !c2 })
            }
            (WeightIndex::D { set: s1 }, WeightIndex::D { set: s2 }) => {
                (s2 & !s1 == 0).then_some(WeightIndex::D { set: s1 & !s2 })
            }
            _ => None,
        }
    }

    /// Chart coordinate variable with the given name.
    pub fn var(&self, name: &'static str) -> Var {
        match *self {
            WeightIndex::A { rows, cols } => Var::set_pair(name, rows, cols),
            WeightIndex::D { set } => Var::set(name, set),
        }
    }

    /// Root pairs of the fixed decomposition of this weight.
    pub fn root_pairs(&self, pairing: Pairing) -> Vec<(u32, u32)> {
        match *self {
            WeightIndex::A { rows, cols } => {
                let r = elements(rows);
                let c = elements(cols);
                let d = r.len();
                (0..d)
                    .map(|i| match pairing {
                        Pairing::Sorted => (r[i], c[i]),
                        Pairing::Alternative => (r[i], c[d - 1 - i]),
                    })
                    .collect()
            }
            WeightIndex::D { set } => {
                let s = elements(set);
                let m = s.len() / 2;
                (0..m)
                    .map(|i| match pairing {
                        Pairing::Sorted => (s[2 * i], s[2 * i + 1]),
                        Pairing::Alternative if s.len() >= 4 && i < 2 => (s[i], s[i + 2]),
                        Pairing::Alternative => (s[2 * i], s[2 * i + 1]),
                    })
                    .collect()
            }
        }
    }

    /// The degree-one weight of a root pair.
    pub fn root(is_type_a: bool, pair: (u32, u32)) -> WeightIndex {
        if is_type_a {
            WeightIndex::A { rows: bit(pair.0), cols: bit(pair.1) }
        } else {
            WeightIndex::D { set: bit(pair.0) | bit(pair.1) }
        }
    }
}

impl fmt::Display for WeightIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list = |m: u32| elements(m).iter().map(ToString::to_string).join(",");
        match *self {
            WeightIndex::A { rows, cols } => write!(f, "{{{}|{}}}", list(rows), list(cols)),
            WeightIndex::D { set } => write!(f, "{{{}}}", list(set)),
        }
    }
}

impl Serialize for WeightIndex {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// Which decomposition into roots is fixed for every weight.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum Pairing {
    /// Type A: i-th smallest row with i-th smallest column. Type D:
    /// consecutive pairs `(s1 s2)(s3 s4)...` of the sorted subset.
    #[default]
    Sorted,
    /// Type A: i-th smallest row with i-th largest column. Type D: the
    /// first four elements crossed, `(s1 s3)(s2 s4)(s5 s6)...`.
    Alternative,
}

pub(crate) const fn bit(i: u32) -> u32 {
    1 << (i - 1)
}

pub(crate) fn full_mask(n: u32) -> u32 {
    if n == 0 {
        0
    } else {
        u32::MAX >> (32 - n)
    }
}

/// Elements of a bitmask subset, ascending, 1-based.
pub fn elements(mask: u32) -> Vec<u32> {
    (1..=32).filter(|&i| mask & (1u32 << (i - 1)) != 0).collect()
}

/// Subsets of `mask` with exactly `size` elements, in increasing order of
/// their sorted element lists.
pub fn subsets_of_size(mask: u32, size: u32) -> Vec<u32> {
    elements(mask)
        .into_iter()
        .combinations(size as usize)
        .map(|c| c.iter().fold(0, |acc, &i| acc | bit(i)))
        .collect()
}

fn inversion_sign(keys: &[u32]) -> i64 {
    let mut inv = 0;
    for i in 0..keys.len() {
        for j in i + 1..keys.len() {
            if keys[i] > keys[j] {
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

/// Sign relating `∏ X_β v_λ` for the given root pairs to the sorted basis
/// vector of the same weight.
fn arrangement_sign(fam: &MinusculeFamily, pairs: &[(u32, u32)]) -> i64 {
    match fam.kind {
        FamilyKind::TypeA { k, .. } => {
            // X_ij puts f_j = e_{k+j} in the slot of e_i
            let mut keys: Vec<u32> = (1..=k).collect();
            for &(r, c) in pairs {
                keys[(r - 1) as usize] = k + c;
            }
            inversion_sign(&keys)
        }
        FamilyKind::TypeD { .. } => {
            // X_ij is left multiplication by e_i ∧ e_j
            let keys: Vec<u32> = pairs.iter().flat_map(|&(a, b)| [a, b]).collect();
            inversion_sign(&keys)
        }
        _ => unreachable!(),
    }
}

/// Element of the nilpotent algebra with polynomial entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NilpotentElement {
    family: MinusculeFamily,
    rows: u32,
    cols: u32,
    entries: Vec<SparsePolynomial>,
}

impl NilpotentElement {
    /// Entries from a function of 1-based positions; in type D it is only
    /// called for `i < j` and the rest is filled in by skew symmetry.
    pub fn from_fn<F: FnMut(u32, u32) -> SparsePolynomial>(family: MinusculeFamily, mut f: F) -> Self {
        let (rows, cols) = family.matrix_shape();
        let mut entries = vec![SparsePolynomial::zero(); (rows * cols) as usize];
        for i in 1..=rows {
            for j in 1..=cols {
                let idx = ((i - 1) * cols + (j - 1)) as usize;
                if family.is_type_a() {
                    entries[idx] = f(i, j);
                } else if i < j {
                    let v = f(i, j);
                    entries[((j - 1) * cols + (i - 1)) as usize] = -&v;
                    entries[idx] = v;
                }
            }
        }
        NilpotentElement { family, rows, cols, entries }
    }

    /// Generic element with entries `name[i,j]` (`i < j` in type D).
    pub fn symbolic(family: MinusculeFamily, name: &'static str) -> Self {
        Self::from_fn(family, |i, j| SparsePolynomial::var(Var::pair(name, i, j)))
    }

    /// Entries given per root: `f(β)` is the coefficient of `X_β`.
    pub fn from_roots<F: FnMut(WeightIndex) -> SparsePolynomial>(family: MinusculeFamily, mut f: F) -> Self {
        let a = family.is_type_a();
        Self::from_fn(family, |i, j| f(WeightIndex::root(a, (i, j))))
    }

    pub fn from_rationals(family: MinusculeFamily, values: &[Vec<Rational>]) -> Self {
        Self::from_fn(family, |i, j| SparsePolynomial::constant(values[(i - 1) as usize][(j - 1) as usize].clone()))
    }

    pub fn family(&self) -> MinusculeFamily {
        self.family
    }

    /// Entry at 1-based position.
    pub fn entry(&self, i: u32, j: u32) -> &SparsePolynomial {
        &self.entries[((i - 1) * self.cols + (j - 1)) as usize]
    }

    /// Coefficient of `X_β` for a degree-one weight.
    pub fn root_coordinate(&self, beta: &WeightIndex) -> &SparsePolynomial {
        let pairs = beta.root_pairs(Pairing::Sorted);
        assert_eq!(pairs.len(), 1, "{beta} is not a root");
        self.entry(pairs[0].0, pairs[0].1)
    }

    pub fn map<F: Fn(&SparsePolynomial) -> SparsePolynomial>(&self, f: F) -> Self {
        NilpotentElement {
            family: self.family,
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    pub fn zip_with<F: Fn(&SparsePolynomial, &SparsePolynomial) -> SparsePolynomial>(&self, other: &Self, f: F) -> Self {
        assert_eq!(self.family, other.family);
        NilpotentElement {
            family: self.family,
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| f(a, b)).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a - b)
    }

    pub fn scale(&self, c: &SparsePolynomial) -> Self {
        self.map(|a| a * c)
    }

    /// Type D: the entries are skew with zero diagonal.
    pub fn is_skew(&self) -> bool {
        (1..=self.rows).all(|i| {
            (1..=self.cols).all(|j| self.entry(i, j) == &-self.entry(j, i))
        })
    }
}

/// Determinant of the submatrix on the given rows and columns, by expansion
/// along the first row.
pub fn minor(m: &NilpotentElement, rows: &[u32], cols: &[u32]) -> SparsePolynomial {
    assert_eq!(rows.len(), cols.len());
    if rows.is_empty() {
        return SparsePolynomial::one();
    }
    if rows.len() == 1 {
        return m.entry(rows[0], cols[0]).clone();
    }
    let mut total = SparsePolynomial::zero();
    for (idx, &c) in cols.iter().enumerate() {
        let a = m.entry(rows[0], c);
        if a.is_zero() {
            continue;
        }
        let rest: Vec<u32> = cols.iter().copied().filter(|&x| x != c).collect();
        let sub = minor(m, &rows[1..], &rest);
        let term = a * &sub;
        total = if idx % 2 == 0 { &total + &term } else { &total - &term };
    }
    total
}

/// Pfaffian of the principal skew submatrix on `indices`, by expansion along
/// the first row; `Pf [[0,1],[-1,0]] = 1`.
pub fn pfaffian(m: &NilpotentElement, indices: &[u32]) -> SparsePolynomial {
    if indices.is_empty() {
        return SparsePolynomial::one();
    }
    if indices.len() % 2 == 1 {
        return SparsePolynomial::zero();
    }
    let first = indices[0];
    let mut total = SparsePolynomial::zero();
    for l in 1..indices.len() {
        let a = m.entry(first, indices[l]);
        if a.is_zero() {
            continue;
        }
        let rest: Vec<u32> = indices[1..].iter().copied().filter(|&x| x != indices[l]).collect();
        let term = a * &pfaffian(m, &rest);
        // position l+1 in 1-based numbering: sign (-1)^(l+1)
        total = if l % 2 == 1 { &total + &term } else { &total - &term };
    }
    total
}

/// Generalized determinant `det_w(n0)` relative to the fixed decomposition.
pub fn gen_det(w: &WeightIndex, n0: &NilpotentElement, pairing: Pairing) -> Result<SparsePolynomial> {
    let fam = n0.family;
    fam.check(w)?;
    let base = match *w {
        WeightIndex::A { rows, cols } => minor(n0, &elements(rows), &elements(cols)),
        WeightIndex::D { set } => pfaffian(n0, &elements(set)),
    };
    let sign = canonical_sign(&fam, w, Pairing::Sorted) * canonical_sign(&fam, w, pairing);
    Ok(if sign == 1 { base } else { -base })
}

fn canonical_sign(fam: &MinusculeFamily, w: &WeightIndex, pairing: Pairing) -> i64 {
    arrangement_sign(fam, &w.root_pairs(pairing))
}

/// Compatibility constant `m(w_1, ..., w_l)`: the sign with
/// `m · ∏_i (∏_{β∈B_{w_i}} X_β) v_λ = (∏_{β∈B_w} X_β) v_λ`, `w = Σ w_i`.
/// Zero parts are allowed and contribute nothing.
pub fn compat_m(fam: &MinusculeFamily, parts: &[WeightIndex], pairing: Pairing) -> Result<i64> {
    let mut sum = fam.top();
    let mut pairs = Vec::new();
    for p in parts {
        fam.check(p)?;
        sum = sum
            .disjoint_sum(p)
            .ok_or_else(|| Error::Incompatible(format!("parts {} overlap", parts.iter().join(" + "))))?;
        pairs.extend(p.root_pairs(pairing));
    }
    Ok(arrangement_sign(fam, &pairs) * canonical_sign(fam, &sum, pairing))
}

/// Ordered decompositions `w = w_1 + ... + w_l` with `deg w_i = degrees[i]`.
pub fn decompositions(w: &WeightIndex, degrees: &[u32]) -> Vec<Vec<WeightIndex>> {
    if degrees.iter().sum::<u32>() != w.degree() {
        return Vec::new();
    }
    let mut out = Vec::new();
    decompose(w, degrees, &mut Vec::new(), &mut out);
    out
}

fn decompose(rest: &WeightIndex, degrees: &[u32], prefix: &mut Vec<WeightIndex>, out: &mut Vec<Vec<WeightIndex>>) {
    let Some((&d, tail)) = degrees.split_first() else {
        out.push(prefix.clone());
        return;
    };
    let parts: Vec<WeightIndex> = match *rest {
        WeightIndex::A { rows, cols } => subsets_of_size(rows, d)
            .into_iter()
            .cartesian_product(subsets_of_size(cols, d))
            .map(|(r, c)| WeightIndex::A { rows: r, cols: c })
            .collect(),
        WeightIndex::D { set } => subsets_of_size(set, 2 * d).into_iter().map(|s| WeightIndex::D { set: s }).collect(),
    };
    for p in parts {
        let remaining = rest.minus(&p).expect("part is contained in the rest");
        prefix.push(p);
        decompose(&remaining, tail, prefix, out);
        prefix.pop();
    }
}

/// Ordered compositions of `n` into parts of size at least `min_part`.
pub fn compositions(n: u32, min_part: u32) -> Vec<Vec<u32>> {
    fn rec(n: u32, min_part: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if n == 0 {
            out.push(prefix.clone());
            return;
        }
        for p in min_part.max(1)..=n {
            prefix.push(p);
            rec(n - p, min_part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, min_part, &mut Vec::new(), &mut out);
    out
}

/// `det_w(n0)` expanded over unordered decompositions of `w` into roots:
/// `Σ m(β_1, ..., β_d) ∏ a_{β_i}`.
pub fn det_from_roots(w: &WeightIndex, n0: &NilpotentElement, pairing: Pairing) -> Result<SparsePolynomial> {
    let fam = n0.family;
    fam.check(w)?;
    let d = w.degree();
    let mut total = SparsePolynomial::zero();
    // ordered decompositions into roots, each unordered one counted d! times
    let d_fact: i64 = (1..=d as i64).product();
    for parts in decompositions(w, &vec![1; d as usize]) {
        let m = compat_m(&fam, &parts, pairing)?;
        let mut term = SparsePolynomial::constant(Rational::new(m, d_fact));
        for beta in &parts {
            term = &term * n0.root_coordinate(beta);
        }
        total = &total + &term;
    }
    Ok(total)
}

/// `det_w(A+B) = Σ_{w1+w2=w} m(w1,w2) det_w1(A) det_w2(B)`, with symbolic A, B.
pub fn verify_detsum(fam: &MinusculeFamily, w: &WeightIndex, pairing: Pairing) -> Result<bool> {
    let a = NilpotentElement::symbolic(*fam, "a");
    let b = NilpotentElement::symbolic(*fam, "b");
    let lhs = gen_det(w, &a.add(&b), pairing)?;
    let mut rhs = SparsePolynomial::zero();
    let d = w.degree();
    for d1 in 0..=d {
        for parts in decompositions(w, &[d1, d - d1]) {
            let m = compat_m(fam, &parts, pairing)?;
            let term = &gen_det(&parts[0], &a, pairing)? * &gen_det(&parts[1], &b, pairing)?;
            rhs = if m == 1 { &rhs + &term } else { &rhs - &term };
        }
    }
    Ok(lhs == rhs)
}

/// Multinomial `(Σ d_i)! / ∏ d_i!`.
pub fn multinomial(parts: &[u32]) -> u64 {
    let fact = |n: u32| (1..=n as u64).product::<u64>();
    fact(parts.iter().sum()) / parts.iter().map(|&p| fact(p)).product::<u64>()
}

/// `multinomial(d_1..d_l) det_w = Σ m(w_1..w_l) ∏ det_{w_i}` over ordered
/// decompositions with `deg w_i = d_i`.
pub fn verify_laplace(fam: &MinusculeFamily, w: &WeightIndex, parts: &[u32], pairing: Pairing) -> Result<bool> {
    if parts.contains(&0) || parts.iter().sum::<u32>() != w.degree() {
        return Err(Error::Precondition(format!(
            "parts {parts:?} are not a composition of deg {w} = {}",
            w.degree()
        )));
    }
    let a = NilpotentElement::symbolic(*fam, "a");
    let lhs = gen_det(w, &a, pairing)?.scale(&Rational::from(multinomial(parts)));
    let mut rhs = SparsePolynomial::zero();
    for decomposition in decompositions(w, parts) {
        let m = compat_m(fam, &decomposition, pairing)?;
        let mut term = SparsePolynomial::int(m);
        for p in &decomposition {
            term = &term * &gen_det(p, &a, pairing)?;
        }
        rhs = &rhs + &term;
    }
    Ok(lhs == rhs)
}

/// A random instance of the multiplicativity of compatibility constants:
/// `(γ_1..γ_k, [δ^i_1..δ^i_{a_i}] for each i)` with `Σ γ_i` a weight.
pub fn random_refinement<R: Rng>(fam: &MinusculeFamily, rng: &mut R) -> (Vec<WeightIndex>, Vec<Vec<WeightIndex>>) {
    let weights: Vec<WeightIndex> = fam.weights().into_iter().filter(|w| w.degree() >= 1).collect();
    let max_deg = weights.iter().map(WeightIndex::degree).max().unwrap_or(1);
    let target = rng.gen_range(1.max(max_deg.min(2))..=max_deg);
    let candidates: Vec<&WeightIndex> = weights.iter().filter(|w| w.degree() == target).collect();
    let w = **candidates.choose(rng).expect("a weight of each degree");
    // a random decomposition into roots
    let mut roots: Vec<(u32, u32)> = match w {
        WeightIndex::A { rows, cols } => {
            let r = elements(rows);
            let mut c = elements(cols);
            c.shuffle(rng);
            r.into_iter().zip(c).collect()
        }
        WeightIndex::D { set } => {
            let mut s = elements(set);
            s.shuffle(rng);
            s.chunks(2).map(|p| (p[0].min(p[1]), p[0].max(p[1]))).collect()
        }
    };
    roots.shuffle(rng);
    let a = fam.is_type_a();
    let groups = random_groups(&roots, rng);
    let mut gammas = Vec::new();
    let mut deltas = Vec::new();
    for g in groups {
        let sub = random_groups(&g, rng);
        let ds: Vec<WeightIndex> = sub.iter().map(|s| weight_of_roots(a, s)).collect();
        gammas.push(weight_of_roots(a, &g));
        deltas.push(ds);
    }
    (gammas, deltas)
}

fn random_groups<R: Rng, T: Clone>(items: &[T], rng: &mut R) -> Vec<Vec<T>> {
    let l = rng.gen_range(1..=items.len());
    let mut groups: Vec<Vec<T>> = vec![Vec::new(); l];
    for (i, item) in items.iter().enumerate() {
        let g = if i < l { i } else { rng.gen_range(0..l) };
        groups[g].push(item.clone());
    }
    groups
}

fn weight_of_roots(type_a: bool, roots: &[(u32, u32)]) -> WeightIndex {
    roots
        .iter()
        .map(|&p| WeightIndex::root(type_a, p))
        .reduce(|x, y| x.disjoint_sum(&y).expect("distinct roots"))
        .expect("nonempty")
}

/// Multiplicativity of compatibility constants on one refinement.
pub fn check_refinement(
    fam: &MinusculeFamily,
    gammas: &[WeightIndex],
    deltas: &[Vec<WeightIndex>],
    pairing: Pairing,
) -> Result<bool> {
    let flat: Vec<WeightIndex> = deltas.iter().flatten().copied().collect();
    let lhs = compat_m(fam, &flat, pairing)?;
    let mut rhs = compat_m(fam, gammas, pairing)?;
    for ds in deltas {
        rhs *= compat_m(fam, ds, pairing)?;
    }
    Ok(lhs == rhs)
}

/// All chart coordinates of the orbit point `exp(n0) v_λ`: weight ↦ det_w(n0)
/// for every weight of degree at least one.
pub fn orbit_param(n0: &NilpotentElement, pairing: Pairing) -> BTreeMap<WeightIndex, SparsePolynomial> {
    n0.family
        .weights()
        .into_iter()
        .filter(|w| !w.is_top())
        .map(|w| {
            let d = gen_det(&w, n0, pairing).expect("weight of the family");
            (w, d)
        })
        .collect()
}

/// The full battery of determinant identities for one family: the
/// root expansion, sum and Laplace rules for every weight, and
/// `samples` random multiplicativity instances.
pub fn verify_identities(fam: &MinusculeFamily, pairing: Pairing, samples: usize, seed: u64) -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    let a = NilpotentElement::symbolic(*fam, "a");
    for w in fam.weights() {
        let subject = format!("{fam} {w}");
        checks.push(Check::new("root-expansion", &subject, gen_det(&w, &a, pairing)? == det_from_roots(&w, &a, pairing)?));
        checks.push(Check::new("sum-rule", &subject, verify_detsum(fam, &w, pairing)?));
        if w.degree() >= 1 {
            let mut all = true;
            for parts in compositions(w.degree(), 1) {
                all &= verify_laplace(fam, &w, &parts, pairing)?;
            }
            checks.push(Check::new("laplace", &subject, all));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut ok = 0;
    for _ in 0..samples {
        let (g, d) = random_refinement(fam, &mut rng);
        if check_refinement(fam, &g, &d, pairing)? {
            ok += 1;
        }
    }
    checks.push(
        Check::new("multiplicativity", format!("{fam}"), ok == samples).with_note(format!("{ok}/{samples} instances")),
    );
    Ok(checks)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a(i: u32, j: u32) -> SparsePolynomial {
        SparsePolynomial::var(Var::pair("a", i, j))
    }

    #[test]
    fn weight_counts() {
        let fam = MinusculeFamily::type_a(2, 4).unwrap();
        let degs: Vec<u32> = fam.weights().iter().map(WeightIndex::degree).collect();
        assert_eq!(degs, vec![0, 1, 1, 1, 1, 2]);
        let fam = MinusculeFamily::type_a(1, 5).unwrap();
        assert_eq!(fam.weights().len(), 5);
        let fam = MinusculeFamily::type_d(4).unwrap();
        let degs: Vec<u32> = fam.weights().iter().map(WeightIndex::degree).collect();
        assert_eq!(degs, vec![0, 1, 1, 1, 1, 1, 1, 2]);
        assert_eq!(MinusculeFamily::type_d(5).unwrap().weights().len(), 16);
        assert_eq!(MinusculeFamily::type_a(3, 7).unwrap().weights().len(), 35);
        assert_eq!(MinusculeFamily::type_d(5).unwrap().d_max(), 2);
    }

    #[test]
    fn family_parsing() {
        assert_eq!("A:2,5".parse::<MinusculeFamily>().unwrap(), MinusculeFamily::type_a(2, 5).unwrap());
        assert_eq!("D:6".parse::<MinusculeFamily>().unwrap().to_string(), "D:6");
        assert!(matches!("E6".parse::<MinusculeFamily>(), Err(Error::UnsupportedFamily(_))));
        assert!(matches!("A:4,6".parse::<MinusculeFamily>(), Err(Error::InvalidFamily(_))));
        assert!("B:3".parse::<MinusculeFamily>().is_err());
    }

    #[test]
    fn determinant_examples() {
        let fam = MinusculeFamily::type_a(2, 4).unwrap();
        let n0 = NilpotentElement::symbolic(fam, "a");
        let w = WeightIndex::A { rows: 0b01, cols: 0b10 };
        assert_eq!(gen_det(&w, &n0, Pairing::Sorted).unwrap(), a(1, 2));
        let top = WeightIndex::A { rows: 0b11, cols: 0b11 };
        assert_eq!(gen_det(&top, &n0, Pairing::Sorted).unwrap(), &a(1, 1) * &a(2, 2) - &a(1, 2) * &a(2, 1));
        assert_eq!(gen_det(&fam.top(), &n0, Pairing::Sorted).unwrap(), SparsePolynomial::one());

        let fam = MinusculeFamily::type_d(4).unwrap();
        let n0 = NilpotentElement::symbolic(fam, "a");
        assert!(n0.is_skew());
        let pf = gen_det(&WeightIndex::D { set: 0b1111 }, &n0, Pairing::Sorted).unwrap();
        assert_eq!(pf, &a(1, 2) * &a(3, 4) - &a(1, 3) * &a(2, 4) + &a(1, 4) * &a(2, 3));
    }

    #[test]
    fn pfaffian_sign_convention() {
        let fam = MinusculeFamily::type_d(4).unwrap();
        let n0 = NilpotentElement::from_fn(fam, |i, j| SparsePolynomial::int(if (i, j) == (1, 2) { 1 } else { 0 }));
        assert_eq!(pfaffian(&n0, &[1, 2]), SparsePolynomial::one());
    }

    #[test]
    fn pfaffian_squares_to_determinant() {
        let fam = MinusculeFamily::type_d(4).unwrap();
        let n0 = NilpotentElement::symbolic(fam, "a");
        let full = [1, 2, 3, 4];
        let det = {
            // Leibniz expansion of the full 4×4 determinant
            let mut total = SparsePolynomial::zero();
            for perm in full.iter().copied().permutations(4) {
                let keys: Vec<u32> = perm.clone();
                let mut term = SparsePolynomial::int(inversion_sign(&keys));
                for (i, &j) in perm.iter().enumerate() {
                    term = &term * n0.entry(i as u32 + 1, j);
                }
                total = &total + &term;
            }
            total
        };
        assert_eq!(pfaffian(&n0, &full).pow(2), det);
    }

    #[test]
    fn compat_examples() {
        let fam = MinusculeFamily::type_a(2, 4).unwrap();
        let w11 = WeightIndex::A { rows: 0b01, cols: 0b01 };
        let w22 = WeightIndex::A { rows: 0b10, cols: 0b10 };
        let w12 = WeightIndex::A { rows: 0b01, cols: 0b10 };
        assert_eq!(compat_m(&fam, &[w11], Pairing::Sorted).unwrap(), 1);
        assert_eq!(compat_m(&fam, &[w11, w22], Pairing::Sorted).unwrap(), 1);
        assert!(matches!(compat_m(&fam, &[w11, w12], Pairing::Sorted), Err(Error::Incompatible(_))));
        let w21 = WeightIndex::A { rows: 0b10, cols: 0b01 };
        assert_eq!(compat_m(&fam, &[w12, w21], Pairing::Sorted).unwrap(), -1);
    }

    #[test]
    fn compat_is_a_sign() {
        for fam in [MinusculeFamily::type_a(3, 7).unwrap(), MinusculeFamily::type_d(6).unwrap()] {
            for w in fam.weights() {
                for parts in compositions(w.degree(), 1) {
                    for dec in decompositions(&w, &parts) {
                        for pairing in [Pairing::Sorted, Pairing::Alternative] {
                            let m = compat_m(&fam, &dec, pairing).unwrap();
                            assert!(m == 1 || m == -1);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn identities_on_small_families() {
        for fam in ["A:1,3", "A:2,4", "A:2,5", "D:4", "D:5"] {
            let fam: MinusculeFamily = fam.parse().unwrap();
            for pairing in [Pairing::Sorted, Pairing::Alternative] {
                let checks = verify_identities(&fam, pairing, 20, 7).unwrap();
                for c in &checks {
                    assert!(c.passed(), "{c}");
                }
            }
        }
    }

    #[test]
    fn degree_one_laplace_and_detsum() {
        let fam = MinusculeFamily::type_a(2, 5).unwrap();
        let beta = WeightIndex::A { rows: 0b10, cols: 0b100 };
        assert!(verify_detsum(&fam, &beta, Pairing::Sorted).unwrap());
        assert!(verify_laplace(&fam, &beta, &[1], Pairing::Sorted).unwrap());
        assert!(verify_laplace(&fam, &beta, &[2], Pairing::Sorted).is_err());
    }

    #[test]
    fn alternative_pairing_changes_signs_only() {
        let fam = MinusculeFamily::type_d(6).unwrap();
        let n0 = NilpotentElement::symbolic(fam, "a");
        for w in fam.weights() {
            let s = gen_det(&w, &n0, Pairing::Sorted).unwrap();
            let r = gen_det(&w, &n0, Pairing::Alternative).unwrap();
            assert!(s == r || s == -r);
        }
        let top = WeightIndex::D { set: 0b111111 };
        assert_eq!(gen_det(&top, &n0, Pairing::Alternative).unwrap(), -gen_det(&top, &n0, Pairing::Sorted).unwrap());
    }

    #[test]
    fn orbit_satisfies_relations() {
        // A(2,4): the top coordinate is the 2×2 minor of the degree-one ones
        let fam = MinusculeFamily::type_a(2, 4).unwrap();
        let n0 = NilpotentElement::symbolic(fam, "a");
        let x = orbit_param(&n0, Pairing::Sorted);
        let c = |r: u32, c: u32| x[&WeightIndex::A { rows: r, cols: c }].clone();
        let rel = c(0b11, 0b11) - (&c(0b01, 0b01) * &c(0b10, 0b10) - &c(0b01, 0b10) * &c(0b10, 0b01));
        assert!(rel.is_zero());

        // D(5): the 4×4 sub-Pfaffians form a kernel vector of the skew matrix
        let fam = MinusculeFamily::type_d(5).unwrap();
        let n0 = NilpotentElement::symbolic(fam, "a");
        let x = orbit_param(&n0, Pairing::Sorted);
        let pair = |i: u32, j: u32| -> SparsePolynomial {
            if i == j {
                SparsePolynomial::zero()
            } else if i < j {
                x[&WeightIndex::D { set: bit(i) | bit(j) }].clone()
            } else {
                -x[&WeightIndex::D { set: bit(i) | bit(j) }].clone()
            }
        };
        for j in 1..=5 {
            let mut rel = SparsePolynomial::zero();
            for i in 1..=5u32 {
                let pf = x[&WeightIndex::D { set: full_mask(5) & !bit(i) }].clone();
                let term = &pf * &pair(i, j);
                rel = if i % 2 == 1 { &rel + &term } else { &rel - &term };
            }
            assert!(rel.is_zero(), "j={j}");
        }
    }

    #[test]
    fn multinomials() {
        assert_eq!(multinomial(&[1, 1, 1]), 6);
        assert_eq!(multinomial(&[2, 2]), 6);
        assert_eq!(multinomial(&[3]), 1);
        assert_eq!(compositions(4, 2), vec![vec![2, 2], vec![4]]);
        assert_eq!(compositions(3, 1).len(), 4);
    }
}
