//! Cubic equations of the secant of a Grassmannian, the lower bound on
//! ideal multiplicities from the tensor-product count, and the two
//! sufficient conditions for membership in the ideal.

use itertools::Itertools;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::plethysm::{column_table_dimension, s3_wedge_multiplicity, s3_wedge_table, ColumnTriple};
use crate::report::Check;
use crate::symfunc::{binomial, plethysm_table, Inner};
use crate::young::{multiply_rows, tensor_multiplicity, Convention, IsotypicTable, Partition};

/// `α(k,c)`: columns `(2k-c, k, c)`.
pub fn alpha(k: u32, c: u32) -> ColumnTriple {
    ColumnTriple::new(2 * k - c, k, c)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CubicCase {
    /// `n < a`: the component vanishes on `ℂ^n`.
    BelowSupport,
    /// Same multiplicity as `(a-c, b-c, 0)` in `S^3(∧^{k-c})`.
    Reduced,
    /// `a-c = 2(b-c)`: one copy less than in `S^3(∧^{k-c})`.
    TwoColumnDrop,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CubicMultiplicity {
    pub triple: ColumnTriple,
    pub case: CubicCase,
    pub multiplicity: u64,
    /// The drop by one hit a component absent from `S^3(∧^{k-c})`; the
    /// literal value would be `-1`.
    pub clamped: bool,
}

/// Multiplicity of the component with columns `(a,b,c)` in
/// `I_3(σ(G(k,n)))`.
pub fn cubic_multiplicity(t: ColumnTriple, k: u32, n: u32) -> Result<CubicMultiplicity> {
    let t = ColumnTriple::new(t.a, t.b, t.c);
    if t.weight() != 3 * k {
        return Err(Error::Constraint(format!("columns {t} do not sum to 3k = {}", 3 * k)));
    }
    if n < t.a {
        return Ok(CubicMultiplicity { triple: t, case: CubicCase::BelowSupport, multiplicity: 0, clamped: false });
    }
    let (a, b, c) = (t.a - t.c, t.b - t.c, 0);
    let base = s3_wedge_multiplicity(ColumnTriple::new(a, b, c), k - t.c)?;
    Ok(if a == 2 * b {
        CubicMultiplicity {
            triple: t,
            case: CubicCase::TwoColumnDrop,
            multiplicity: base.saturating_sub(1),
            clamped: base == 0,
        }
    } else {
        CubicMultiplicity { triple: t, case: CubicCase::Reduced, multiplicity: base, clamped: false }
    })
}

/// The cubic ideal as a table in column convention, with one flagged check
/// per clamped entry.
pub fn cubic_ideal_table(k: u32, n: u32) -> Result<(IsotypicTable, Vec<Check>)> {
    let mut table = IsotypicTable::new(Convention::Columns, format!("I_3(sigma(G({k},{n})))"));
    let mut flags = Vec::new();
    for t in ColumnTriple::all_of_weight(3 * k) {
        let m = cubic_multiplicity(t, k, n)?;
        table.add(&t.partition(), m.multiplicity)?;
        if m.clamped {
            flags.push(Check::flagged(
                "cubic multiplicity clamped",
                format!("{t} k={k} n={n}"),
                "component absent from S^3(wedge^k); the drop by one would give -1",
            ));
        }
    }
    Ok((table, flags))
}

/// `dim S^3(∧^k ℂ^n) = C(C(n,k)+2, 3)`.
pub fn s3_dimension(k: u32, n: u32) -> u128 {
    binomial(binomial(n as u64, k as u64) as u64 + 2, 3)
}

/// The quotient `ℂ[σ(G(k,n))]_3` under the two readings of the direct sum
/// over `α(k,c)`, with the dimension each one predicts.
#[derive(Clone, Debug, Serialize)]
pub struct QuotientReadings {
    pub k: u32,
    pub n: u32,
    /// Every `α(k,c)` with `2k - c <= n`, once each.
    pub literal: IsotypicTable,
    /// As `literal`, with components of multiplicity zero in `S^3(∧^k)` dropped.
    pub absent_dropped: IsotypicTable,
    pub s3_dimension: u128,
    /// `Σ mult · dim` of the closed-form cubic ideal table.
    pub ideal_dimension: u128,
    pub literal_dimension: u128,
    pub absent_dropped_dimension: u128,
}

impl QuotientReadings {
    /// Readings whose dimension equals `dim S^3 - dim I_3` for the given
    /// ideal dimension.
    pub fn matching(&self, ideal_dimension: u128) -> Vec<&'static str> {
        let target = self.s3_dimension - ideal_dimension;
        let mut out = Vec::new();
        if self.literal_dimension == target {
            out.push("literal");
        }
        if self.absent_dropped_dimension == target {
            out.push("absent-dropped");
        }
        out
    }
}

pub fn quotient_degree3(k: u32, n: u32) -> Result<QuotientReadings> {
    let s3 = s3_wedge_table(k);
    let mut literal = IsotypicTable::new(Convention::Columns, format!("C[sigma(G({k},{n}))]_3, literal"));
    let mut dropped = IsotypicTable::new(Convention::Columns, format!("C[sigma(G({k},{n}))]_3"));
    for c in 0..=k {
        let t = alpha(k, c);
        if t.a > n {
            continue;
        }
        literal.add(&t.partition(), 1)?;
        dropped.add(&t.partition(), s3.get(&t.partition()).min(1))?;
    }
    let (ideal, _) = cubic_ideal_table(k, n)?;
    Ok(QuotientReadings {
        k,
        n,
        s3_dimension: s3_dimension(k, n),
        ideal_dimension: column_table_dimension(&ideal, n),
        literal_dimension: column_table_dimension(&literal, n),
        absent_dropped_dimension: column_table_dimension(&dropped, n),
        literal,
        absent_dropped: dropped,
    })
}

/// `S^d(∧^k)` for `d <= 4`, in column convention.
pub fn symmetric_power_closed(k: u32, d: u32) -> Result<IsotypicTable> {
    Ok(plethysm_table(&Partition::rows(&[d]), k, Inner::Wedge)?.with_convention(Convention::Columns))
}

/// Splittings `d = α_1 + ... + α_s` with `α_i ≥ 0`, each listed once as a
/// weakly decreasing tuple.
pub fn unordered_decompositions(d: u32, s: u32) -> Vec<Vec<u32>> {
    fn rec(rest: u32, slots: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if slots == 0 {
            if rest == 0 {
                out.push(prefix.clone());
            }
            return;
        }
        for a in (0..=rest.min(max)).rev() {
            prefix.push(a);
            rec(rest - a, slots - 1, a, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(d, s, d, &mut Vec::new(), &mut out);
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CrucialBound {
    /// Multiplicity of `μ` in `S^d(∧^k)`.
    pub ambient: u64,
    /// `m_α` for each decomposition `α` of `d` into `s` parts.
    pub per_decomposition: Vec<(Vec<u32>, u64)>,
    /// `m = Σ m_α`.
    pub m: u64,
    /// `ambient - m`; may be negative, in which case it says nothing.
    pub bound: i64,
}

/// Lower bound on the multiplicity of `μ` in `I_d(σ_s(G(k,n)))`:
/// its multiplicity in `S^d(∧^k)` minus `Σ_α` its multiplicity in
/// `⊗_i S_{α_i·(1^k)}`.
pub fn crucial_bound(mu: &Partition, k: u32, s: u32, d: u32) -> Result<CrucialBound> {
    if mu.weight() != d * k {
        return Err(Error::WeightMismatch { outer: mu.weight(), inner: d * k });
    }
    let ambient = symmetric_power_closed(k, d)?.get(mu);
    let per = tensor_counts(mu, k, s, d)?;
    let m = per.iter().map(|(_, x)| x).sum();
    Ok(CrucialBound { ambient, per_decomposition: per, m, bound: ambient as i64 - m as i64 })
}

/// `m_α`, the multiplicity of `μ` in `⊗_i S_{α_i·(1^k)}`, for every
/// decomposition `α` of `d` into `s` parts.
pub fn tensor_counts(mu: &Partition, k: u32, s: u32, d: u32) -> Result<Vec<(Vec<u32>, u64)>> {
    let mu_rows = mu.to_rows();
    let lambda = Partition::rows(&vec![1; k as usize]);
    unordered_decompositions(d, s)
        .into_iter()
        .map(|alpha| {
            let factors: Vec<Partition> =
                alpha.iter().filter(|&&a| a > 0).map(|&a| multiply_rows(&lambda, a)).collect::<Result<_>>()?;
            let m = tensor_multiplicity(&mu_rows, &factors)?;
            Ok((alpha, m))
        })
        .collect()
}

/// Either the `⌈d/s⌉`-th column is shorter than `k` or there are more than
/// `ks` rows; such components lie in the ideal.
pub fn longarein_predicate(mu: &Partition, k: u32, s: u32, d: u32) -> Result<bool> {
    if mu.weight() != d * k {
        return Err(Error::WeightMismatch { outer: mu.weight(), inner: d * k });
    }
    if s == 0 {
        return Err(Error::Precondition("need s >= 1".into()));
    }
    let cols = mu.column_lengths();
    let j = d.div_ceil(s) as usize;
    let short = cols.get(j - 1).copied().unwrap_or(0) < k;
    Ok(short || mu.num_rows() > (k * s) as usize)
}

/// Removes the first row of a diagram with exactly `d` columns, passing
/// from `σ_s(G(k,n))` to `σ_s(G(k-1,n-1))`.
pub fn reduce_secant(lam: &Partition, k: u32, n: u32, d: u32) -> Result<(Partition, u32, u32)> {
    if k < 2 || n < 2 {
        return Err(Error::Precondition(format!("cannot reduce G({k},{n}) further")));
    }
    if lam.num_columns() != d as usize {
        return Err(Error::Precondition(format!("{lam} does not have exactly {d} columns")));
    }
    let rows = lam.row_lengths();
    let reduced = Partition::rows(&rows[1..]);
    let reduced = match lam.convention() {
        Convention::Rows => reduced,
        Convention::Columns => reduced.to_columns(),
    };
    Ok((reduced, k - 1, n - 1))
}

/// Two-column components `(2k, k)` get bound `mult - 1`; all other
/// two-column components of `S^3(∧^k)` keep their full multiplicity.
pub fn two_column_bounds(k: u32) -> Result<Vec<(ColumnTriple, u64, CrucialBound)>> {
    let s3 = s3_wedge_table(k);
    s3.iter()
        .filter(|(p, _)| p.num_columns() <= 2)
        .map(|(p, m)| Ok((ColumnTriple::from_partition(&p)?, m, crucial_bound(&p, k, 2, 3)?)))
        .collect()
}

/// All `(triple, closed form, ideal table entry)` rows agree with the
/// `S^3` table except at `α(k,c)`.
pub fn cubic_consistency(k: u32, n: u32) -> Result<Vec<Check>> {
    let s3 = s3_wedge_table(k);
    let (ideal, flags) = cubic_ideal_table(k, n)?;
    let mut checks = flags;
    for t in ColumnTriple::all_of_weight(3 * k).into_iter().filter(|t| t.a <= n) {
        let full = s3.get(&t.partition());
        let got = ideal.get(&t.partition());
        let is_alpha = (0..=k).map(|c| alpha(k, c)).contains(&t);
        let want = if is_alpha { full.saturating_sub(1) } else { full };
        checks.push(Check::new("cubic ideal vs S^3", format!("{t} k={k} n={n}"), got == want));
    }
    Ok(checks)
}
