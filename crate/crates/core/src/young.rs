//! Young diagrams, GL dimensions and Littlewood-Richardson coefficients.
//!
//! Every [`Partition`] carries a [`Convention`] tag saying whether its parts
//! are row lengths or column lengths. Operations that are defined on rows
//! reject column-tagged input instead of silently reinterpreting it.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Convention {
    Rows,
    Columns,
}

impl Convention {
    pub fn flipped(self) -> Self {
        match self {
            Convention::Rows => Convention::Columns,
            Convention::Columns => Convention::Rows,
        }
    }
}

impl fmt::Display for Convention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Convention::Rows => "rows",
            Convention::Columns => "columns",
        })
    }
}

/// A Young diagram given by weakly decreasing parts and a convention tag.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u32>,
    convention: Convention,
}

/// Conjugate of a weakly decreasing sequence.
pub fn conjugate(parts: &[u32]) -> Vec<u32> {
    let first = parts.first().copied().unwrap_or(0);
    (1..=first).map(|j| parts.iter().filter(|&&p| p >= j).count() as u32).collect()
}

impl Partition {
    /// Validating constructor; trailing zeros are stripped.
    pub fn try_new(parts: &[u32], convention: Convention) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Constraint(format!("parts {parts:?} are not weakly decreasing")));
        }
        let mut parts = parts.to_vec();
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition { parts, convention })
    }

    /// Row-convention diagram. Panics if `parts` is not weakly decreasing.
    pub fn rows(parts: &[u32]) -> Self {
        Self::try_new(parts, Convention::Rows).expect("weakly decreasing parts")
    }

    /// Column-convention diagram. Panics if `parts` is not weakly decreasing.
    pub fn columns(parts: &[u32]) -> Self {
        Self::try_new(parts, Convention::Columns).expect("weakly decreasing parts")
    }

    pub fn empty(convention: Convention) -> Self {
        Partition { parts: Vec::new(), convention }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn convention(&self) -> Convention {
        self.convention
    }

    pub fn weight(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Row lengths of the diagram, whatever the tag.
    pub fn row_lengths(&self) -> Vec<u32> {
        match self.convention {
            Convention::Rows => self.parts.clone(),
            Convention::Columns => conjugate(&self.parts),
        }
    }

    /// Column lengths of the diagram, whatever the tag.
    pub fn column_lengths(&self) -> Vec<u32> {
        match self.convention {
            Convention::Rows => conjugate(&self.parts),
            Convention::Columns => self.parts.clone(),
        }
    }

    pub fn num_rows(&self) -> usize {
        match self.convention {
            Convention::Rows => self.parts.len(),
            Convention::Columns => self.parts.first().copied().unwrap_or(0) as usize,
        }
    }

    pub fn num_columns(&self) -> usize {
        match self.convention {
            Convention::Rows => self.parts.first().copied().unwrap_or(0) as usize,
            Convention::Columns => self.parts.len(),
        }
    }

    /// The conjugate diagram, keeping the tag.
    pub fn transpose(&self) -> Self {
        Partition { parts: conjugate(&self.parts), convention: self.convention }
    }

    /// The same diagram written in row convention.
    pub fn to_rows(&self) -> Self {
        Partition { parts: self.row_lengths(), convention: Convention::Rows }
    }

    /// The same diagram written in column convention.
    pub fn to_columns(&self) -> Self {
        Partition { parts: self.column_lengths(), convention: Convention::Columns }
    }

    /// Same parts, opposite tag; this changes the diagram to its transpose.
    pub fn reinterpret(&self) -> Self {
        Partition { parts: self.parts.clone(), convention: self.convention.flipped() }
    }

    pub fn require(&self, convention: Convention) -> Result<()> {
        if self.convention == convention {
            Ok(())
        } else {
            Err(Error::ConventionMismatch { expected: convention, found: self.convention })
        }
    }

    /// Row `i` (0-based) of the diagram, 0 past the end.
    pub fn row(&self, i: usize) -> u32 {
        match self.convention {
            Convention::Rows => self.parts.get(i).copied().unwrap_or(0),
            Convention::Columns => self.parts.iter().filter(|&&c| c as usize > i).count() as u32,
        }
    }

    /// Diagram inclusion `other ⊆ self`.
    pub fn contains(&self, other: &Partition) -> bool {
        let (a, b) = (self.row_lengths(), other.row_lengths());
        b.len() <= a.len() && b.iter().zip(&a).all(|(x, y)| x <= y)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(ToString::to_string).collect();
        match self.convention {
            Convention::Rows => write!(f, "({})", parts.join(",")),
            Convention::Columns => write!(f, "cols({})", parts.join(",")),
        }
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// All partitions of `n` with at most `max_len` parts, each at most `max_part`,
/// in decreasing lexicographic order.
pub fn partitions(n: u32, max_len: usize, max_part: u32) -> Vec<Vec<u32>> {
    fn rec(n: u32, max_len: usize, max_part: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if n == 0 {
            out.push(prefix.clone());
            return;
        }
        if max_len == 0 {
            return;
        }
        for p in (1..=n.min(max_part)).rev() {
            if (p as u64) * (max_len as u64) < n as u64 {
                break;
            }
            prefix.push(p);
            rec(n - p, max_len - 1, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, max_len, max_part, &mut Vec::new(), &mut out);
    out
}

/// Dimension of the irreducible GL_d representation with highest weight
/// given by the diagram (Weyl's product formula); zero if the diagram has
/// more than `d` rows.
pub fn gl_dimension(p: &Partition, d: u32) -> u128 {
    let rows = p.row_lengths();
    if rows.len() > d as usize {
        return 0;
    }
    let d = d as usize;
    let r = |i: usize| rows.get(i).copied().unwrap_or(0) as u64;
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for i in 0..d {
        for j in i + 1..d {
            num *= r(i) - r(j) + (j - i) as u64;
            den *= (j - i) as u64;
        }
    }
    (num / den).to_u128().expect("dimension fits in u128")
}

/// Multiplies every row by `l`.
pub fn multiply_rows(lam: &Partition, l: u32) -> Result<Partition> {
    lam.require(Convention::Rows)?;
    Partition::try_new(&lam.parts.iter().map(|&p| p * l).collect::<Vec<_>>(), Convention::Rows)
}

/// Littlewood-Richardson coefficient `c^lam_{mu,nu}`, counted as LR skew
/// tableaux of shape `lam/mu` and content `nu` whose reverse reading word is
/// a lattice word.
pub fn lr_coefficient(lam: &Partition, mu: &Partition, nu: &Partition) -> Result<u64> {
    for p in [lam, mu, nu] {
        p.require(Convention::Rows)?;
    }
    if lam.weight() != mu.weight() + nu.weight() {
        return Err(Error::WeightMismatch { outer: lam.weight(), inner: mu.weight() + nu.weight() });
    }
    if !lam.contains(mu) || !lam.contains(nu) {
        return Ok(0);
    }
    let outer = lam.parts.clone();
    let inner: Vec<u32> = (0..outer.len()).map(|i| mu.parts.get(i).copied().unwrap_or(0)).collect();
    let content = nu.parts.clone();
    let mut grid: Vec<Vec<u32>> = outer.iter().map(|&l| vec![0; l as usize]).collect();
    let mut counts = vec![0u32; content.len() + 1];
    let cells: Vec<(usize, usize)> = (0..outer.len())
        .flat_map(|i| (inner[i]..outer[i]).rev().map(move |j| (i, j as usize)))
        .collect();
    let mut total = 0;
    lr_fill(&cells, 0, &inner, &content, &mut grid, &mut counts, &mut total);
    Ok(total)
}

fn lr_fill(
    cells: &[(usize, usize)],
    pos: usize,
    inner: &[u32],
    content: &[u32],
    grid: &mut [Vec<u32>],
    counts: &mut [u32],
    total: &mut u64,
) {
    if pos == cells.len() {
        *total += 1;
        return;
    }
    let (i, j) = cells[pos];
    // weakly increasing along rows: bounded above by the cell to the right
    let upper = if (j + 1) < grid[i].len() && (j + 1) as u32 >= inner[i] {
        grid[i][j + 1]
    } else {
        content.len() as u32
    };
    // strictly increasing down columns
    let lower = if i > 0 && j as u32 >= inner[i - 1] { grid[i - 1][j] + 1 } else { 1 };
    for v in lower..=upper {
        let vi = v as usize;
        if counts[vi] >= content[vi - 1] {
            continue;
        }
        if vi > 1 && counts[vi] + 1 > counts[vi - 1] {
            continue;
        }
        counts[vi] += 1;
        grid[i][j] = v;
        lr_fill(cells, pos + 1, inner, content, grid, counts, total);
        counts[vi] -= 1;
    }
    grid[i][j] = 0;
}

/// Multiplicity of `S_mu` in the tensor product of the `S_{factors[i]}`,
/// by iterated Littlewood-Richardson.
pub fn tensor_multiplicity(mu: &Partition, factors: &[Partition]) -> Result<u64> {
    mu.require(Convention::Rows)?;
    for f in factors {
        f.require(Convention::Rows)?;
    }
    let total: u32 = factors.iter().map(Partition::weight).sum();
    if total != mu.weight() {
        return Ok(0);
    }
    let mut current: BTreeMap<Partition, u64> = BTreeMap::new();
    current.insert(Partition::empty(Convention::Rows), 1);
    let mut weight = 0;
    for f in factors {
        weight += f.weight();
        let mut next: BTreeMap<Partition, u64> = BTreeMap::new();
        for rho in sub_partitions(mu, weight) {
            let mut m = 0;
            for (sigma, c) in &current {
                if rho.contains(sigma) {
                    m += c * lr_coefficient(&rho, sigma, f)?;
                }
            }
            if m > 0 {
                next.insert(rho, m);
            }
        }
        current = next;
    }
    Ok(current.get(mu).copied().unwrap_or(0))
}

/// Partitions contained in `outer` of the given weight.
fn sub_partitions(outer: &Partition, weight: u32) -> Vec<Partition> {
    let bound = outer.row_lengths();
    let max_part = bound.first().copied().unwrap_or(0);
    partitions(weight, bound.len(), max_part)
        .into_iter()
        .filter(|p| p.iter().zip(&bound).all(|(a, b)| a <= b))
        .map(|p| Partition::rows(&p))
        .collect()
}

/// Decomposition of a representation into irreducibles: diagram to
/// multiplicity. All keys share the table's convention; zero multiplicities
/// are never stored.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IsotypicTable {
    convention: Convention,
    ambient: String,
    entries: BTreeMap<Vec<u32>, u64>,
}

impl IsotypicTable {
    pub fn new(convention: Convention, ambient: impl Into<String>) -> Self {
        IsotypicTable { convention, ambient: ambient.into(), entries: BTreeMap::new() }
    }

    pub fn convention(&self) -> Convention {
        self.convention
    }

    pub fn ambient(&self) -> &str {
        &self.ambient
    }

    pub fn set_ambient(&mut self, ambient: impl Into<String>) {
        self.ambient = ambient.into();
    }

    /// Adds `mult` copies of `p`.
    pub fn add(&mut self, p: &Partition, mult: u64) -> Result<()> {
        p.require(self.convention)?;
        if mult > 0 {
            *self.entries.entry(p.parts.clone()).or_insert(0) += mult;
        }
        Ok(())
    }

    pub fn get(&self, p: &Partition) -> u64 {
        if p.convention != self.convention {
            let q = match self.convention {
                Convention::Rows => p.to_rows(),
                Convention::Columns => p.to_columns(),
            };
            return self.entries.get(&q.parts).copied().unwrap_or(0);
        }
        self.entries.get(&p.parts).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (Partition, u64)> + '_ {
        self.entries
            .iter()
            .map(|(k, &v)| (Partition { parts: k.clone(), convention: self.convention }, v))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Every diagram replaced by its transpose; the tag is kept.
    pub fn transpose_all(&self) -> Self {
        IsotypicTable {
            convention: self.convention,
            ambient: self.ambient.clone(),
            entries: self.entries.iter().map(|(k, &v)| (conjugate(k), v)).collect(),
        }
    }

    /// Same diagrams rewritten in the given convention.
    pub fn with_convention(&self, convention: Convention) -> Self {
        if convention == self.convention {
            return self.clone();
        }
        IsotypicTable {
            convention,
            ambient: self.ambient.clone(),
            entries: self.entries.iter().map(|(k, &v)| (conjugate(k), v)).collect(),
        }
    }

    /// Keeps entries satisfying the predicate.
    pub fn filter<F: Fn(&Partition) -> bool>(&self, keep: F) -> Self {
        let mut out = IsotypicTable::new(self.convention, self.ambient.clone());
        for (p, m) in self.iter() {
            if keep(&p) {
                out.entries.insert(p.parts, m);
            }
        }
        out
    }

    /// Σ mult · dim S_λ(ℂ^d).
    pub fn dimension(&self, d: u32) -> u128 {
        self.iter().map(|(p, m)| m as u128 * gl_dimension(&p, d)).sum()
    }

    /// Entries equal as (diagram, multiplicity) sets, ignoring the ambient label.
    pub fn same_entries(&self, other: &IsotypicTable) -> bool {
        self.convention == other.convention && self.entries == other.entries
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("table serializes")
    }
}

#[derive(Serialize)]
struct TableEntry<'a> {
    diagram: &'a [u32],
    convention: Convention,
    multiplicity: u64,
}

impl Serialize for IsotypicTable {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.entries.len()))?;
        for (k, &v) in &self.entries {
            seq.serialize_element(&TableEntry { diagram: k, convention: self.convention, multiplicity: v })?;
        }
        seq.end()
    }
}

impl fmt::Display for IsotypicTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.ambient)?;
        for (p, m) in self.iter() {
            writeln!(f, "  {:<24} {m}", p.to_string())?;
        }
        Ok(())
    }
}
