//! Closed-form plethysm multiplicities and the column/row reduction lemmas.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::symfunc::{binomial, plethysm_table, Inner, PlethysmContext};
use crate::young::{gl_dimension, Convention, IsotypicTable, Partition};

/// Column lengths `a ≥ b ≥ c` of a diagram with at most three columns.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct ColumnTriple {
    pub a: u32,
    pub b: u32,
    pub c: u32,
}

impl ColumnTriple {
    /// Sorts the entries so that `a ≥ b ≥ c`.
    pub fn new(a: u32, b: u32, c: u32) -> Self {
        let mut v = [a, b, c];
        v.sort_unstable_by(|x, y| y.cmp(x));
        ColumnTriple { a: v[0], b: v[1], c: v[2] }
    }

    pub fn weight(&self) -> u32 {
        self.a + self.b + self.c
    }

    /// The diagram, in column convention.
    pub fn partition(&self) -> Partition {
        Partition::columns(&[self.a, self.b, self.c])
    }

    /// Reads a diagram with at most three columns.
    pub fn from_partition(p: &Partition) -> Result<Self> {
        let cols = p.column_lengths();
        if cols.len() > 3 {
            return Err(Error::Constraint(format!("{p} has more than three columns")));
        }
        let get = |i: usize| cols.get(i).copied().unwrap_or(0);
        Ok(ColumnTriple { a: get(0), b: get(1), c: get(2) })
    }

    /// All triples `a ≥ b ≥ c ≥ 0` with `a + b + c = w`.
    pub fn all_of_weight(w: u32) -> Vec<ColumnTriple> {
        let mut out = Vec::new();
        for a in (0..=w).rev() {
            for b in (0..=a.min(w - a)).rev() {
                let c = w - a - b;
                if c <= b {
                    out.push(ColumnTriple { a, b, c });
                }
            }
        }
        out
    }
}

impl fmt::Display for ColumnTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.a, self.b, self.c)
    }
}

/// Multiplicity of the diagram with columns `(a,b,c)` in `S^3(∧^k)`, by the
/// six-way case split on the column differences `b-c` and `a-b`.
pub fn s3_wedge_multiplicity(t: ColumnTriple, k: u32) -> Result<u64> {
    let t = ColumnTriple::new(t.a, t.b, t.c);
    if t.weight() != 3 * k {
        return Err(Error::Constraint(format!("columns {t} do not sum to 3k = {}", 3 * k)));
    }
    let (x, y) = (t.b - t.c, t.a - t.b);
    let (mn, mx) = (x.min(y), x.max(y));
    let num = (mn + 1) as u64;
    let ceil = num.div_ceil(6);
    let floor = num / 6;
    Ok(if mn % 2 == 0 {
        if mx % 2 == 0 {
            ceil
        } else {
            floor
        }
    } else {
        match mn % 3 {
            0 => ceil,
            1 => floor,
            // mn ≡ 5 mod 6 here, so the quotient is exact
            _ => num / 6,
        }
    })
}

/// The closed-form table of `S^3(∧^k)` in column convention.
pub fn s3_wedge_table(k: u32) -> IsotypicTable {
    let mut t = IsotypicTable::new(Convention::Columns, format!("S^3(wedge^{k})"));
    for triple in ColumnTriple::all_of_weight(3 * k) {
        let m = s3_wedge_multiplicity(triple, k).expect("weight matches");
        t.add(&triple.partition(), m).expect("column convention");
    }
    t
}

/// One row of the closed-form versus character comparison.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TripleComparison {
    pub columns: ColumnTriple,
    pub closed_form: u64,
    pub oracle: u64,
    pub agree: bool,
}

/// Compares the closed form with the character computation for every
/// triple of weight `3k`.
pub fn compare_s3_wedge(k: u32) -> Result<Vec<TripleComparison>> {
    let oracle = plethysm_table(&Partition::rows(&[3]), k, Inner::Wedge)?.with_convention(Convention::Columns);
    ColumnTriple::all_of_weight(3 * k)
        .into_iter()
        .map(|columns| {
            let closed_form = s3_wedge_multiplicity(columns, k)?;
            let o = oracle.get(&columns.partition());
            Ok(TripleComparison { columns, closed_form, oracle: o, agree: closed_form == o })
        })
        .collect()
}

/// `Σ mult · dim S_λ(ℂ^d)` over a table, against `dim S^3(∧^k ℂ^d)`.
pub fn s3_wedge_dimension_check(table: &IsotypicTable, k: u32, d: u32) -> (u128, u128) {
    let lhs = table.dimension(d);
    let rhs = binomial(binomial(d as u64, k as u64) as u64 + 2, 3);
    (lhs, rhs)
}

/// `S^2(S^n)`: two-row diagrams of weight `2n` whose rows have even length.
pub fn sym2_table(n: u32) -> IsotypicTable {
    two_row_table(n, 0, format!("S^2(S^{n})"))
}

/// `∧^2(S^n)`: two-row diagrams of weight `2n` whose rows have odd length.
pub fn wedge2_table(n: u32) -> IsotypicTable {
    two_row_table(n, 1, format!("wedge^2(S^{n})"))
}

fn two_row_table(n: u32, parity: u32, ambient: String) -> IsotypicTable {
    let mut t = IsotypicTable::new(Convention::Rows, ambient);
    for second in 0..=n {
        if second % 2 == parity {
            t.add(&Partition::rows(&[2 * n - second, second]), 1).expect("rows");
        }
    }
    t
}

/// Removes the first row of a diagram with exactly `|μ|` columns, passing
/// from `S^μ(∧^k)` to `S^μ(∧^{k-1})`. The result keeps the input's
/// convention.
pub fn reduce_column(lam: &Partition, ctx: &PlethysmContext) -> Result<(Partition, PlethysmContext)> {
    if ctx.inner != Inner::Wedge {
        return Err(Error::Precondition("column reduction applies to exterior powers".into()));
    }
    let n = ctx.outer.weight();
    if ctx.k == 0 {
        return Err(Error::Precondition("inner degree is already 0".into()));
    }
    if lam.num_columns() != n as usize {
        return Err(Error::Precondition(format!("{lam} does not have exactly {n} columns")));
    }
    let rows = lam.row_lengths();
    let reduced = Partition::rows(&rows[1..]);
    let reduced = match lam.convention() {
        Convention::Rows => reduced,
        Convention::Columns => reduced.to_columns(),
    };
    Ok((reduced, PlethysmContext { outer: ctx.outer.clone(), k: ctx.k - 1, inner: Inner::Wedge }))
}

/// Removes the first column of a diagram with exactly `|μ|` rows, passing
/// from `S^μ(S^k)` to `S^{μ^∨}(S^{k-1})`.
pub fn reduce_row(lam: &Partition, ctx: &PlethysmContext) -> Result<(Partition, PlethysmContext)> {
    if ctx.inner != Inner::Sym {
        return Err(Error::Precondition("row reduction applies to symmetric powers".into()));
    }
    let n = ctx.outer.weight();
    if ctx.k == 0 {
        return Err(Error::Precondition("inner degree is already 0".into()));
    }
    if lam.num_rows() != n as usize {
        return Err(Error::Precondition(format!("{lam} does not have exactly {n} rows")));
    }
    let cols = lam.column_lengths();
    let reduced = Partition::columns(&cols[1..]);
    let reduced = match lam.convention() {
        Convention::Rows => reduced.to_rows(),
        Convention::Columns => reduced,
    };
    Ok((reduced, PlethysmContext { outer: ctx.outer.transpose(), k: ctx.k - 1, inner: Inner::Sym }))
}

/// Dimension of a table of three-column diagrams at `dim V = d`, computed
/// with each column triple turned into rows.
pub fn column_table_dimension(table: &IsotypicTable, d: u32) -> u128 {
    table.iter().map(|(p, m)| m as u128 * gl_dimension(&p.to_rows(), d)).sum()
}
