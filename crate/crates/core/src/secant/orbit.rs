//! Multiplicities in the coordinate ring of the open `GL(2k)`-orbit in the
//! secant of `G(k, 2k)`.

use rand::Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::secant::cubic::tensor_counts;
use crate::young::{lr_coefficient, Convention, Partition};

/// `α_i + α_{2k+1-i}` is the same for all `i`.
pub fn in_d_k(alpha: &[i64], k: u32) -> bool {
    let l = 2 * k as usize;
    alpha.len() == l
        && alpha.windows(2).all(|w| w[0] >= w[1])
        && (0..k as usize).all(|i| alpha[i] + alpha[l - 1 - i] == alpha[0] + alpha[l - 1])
}

/// `⌈(α_k - α_{k+1} + 1)/2⌉` on `D_k`, zero elsewhere. `alpha` is a weakly
/// decreasing integer sequence of length `2k` (entries may be negative).
pub fn orbit_ring_multiplicity_seq(alpha: &[i64], k: u32) -> Result<u64> {
    check_shape(alpha, k)?;
    if !in_d_k(alpha, k) {
        return Ok(0);
    }
    let gap = alpha[k as usize - 1] - alpha[k as usize];
    Ok(((gap + 2) / 2) as u64)
}

/// [`orbit_ring_multiplicity_seq`] on a row-convention diagram padded to
/// length `2k`.
pub fn orbit_ring_multiplicity(alpha: &Partition, k: u32) -> Result<u64> {
    orbit_ring_multiplicity_seq(&padded(alpha, k)?, k)
}

fn padded(alpha: &Partition, k: u32) -> Result<Vec<i64>> {
    alpha.require(Convention::Rows)?;
    if alpha.len() > 2 * k as usize {
        return Err(Error::Precondition(format!("{alpha} has more than 2k = {} rows", 2 * k)));
    }
    let mut v: Vec<i64> = alpha.parts().iter().map(|&p| p as i64).collect();
    v.resize(2 * k as usize, 0);
    Ok(v)
}

fn check_shape(alpha: &[i64], k: u32) -> Result<()> {
    if k == 0 || alpha.len() != 2 * k as usize || alpha.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::Precondition(format!("need a weakly decreasing sequence of length 2k = {}", 2 * k)));
    }
    Ok(())
}

/// Invariant count: shift to `λ = α - α_2k`, then count unordered `{m, n}`
/// with `m + n = λ_1`, `λ_{k+1} ≤ m, n ≤ λ_k` and `c^λ_{(m^k),(n^k)} ≠ 0`.
pub fn orbit_ring_oracle(alpha: &[i64], k: u32) -> Result<u64> {
    check_shape(alpha, k)?;
    let ku = k as usize;
    let shift = alpha[2 * ku - 1];
    let lam: Vec<u32> = alpha.iter().map(|&a| (a - shift) as u32).collect();
    let lam_p = Partition::rows(&lam);
    let total = lam[0];
    let mut count = 0;
    for m in 0..=total {
        let n = total - m;
        if m > n {
            break;
        }
        if m < lam[ku] || n < lam[ku] || m > lam[ku - 1] || n > lam[ku - 1] {
            continue;
        }
        if lam_p.weight() != k * (m + n) {
            continue;
        }
        let mu = Partition::rows(&vec![m; ku]);
        let nu = Partition::rows(&vec![n; ku]);
        if lr_coefficient(&lam_p, &mu, &nu)? > 0 {
            count += 1;
        }
    }
    Ok(count)
}

/// `m = Σ_α m_α` from the lower-bound corollary with `s = 2` and
/// `d = α_1 + α_2k`, for a nonnegative `α ∈ D_k`.
pub fn crucial_count(alpha: &Partition, k: u32) -> Result<u64> {
    let v = padded(alpha, k)?;
    let d = (v[0] + v[2 * k as usize - 1]) as u32;
    if alpha.weight() != d * k {
        return Err(Error::Precondition(format!("{alpha} is not in D_k with row sums {d}")));
    }
    Ok(tensor_counts(alpha, k, 2, d)?.iter().map(|(_, m)| m).sum())
}

/// A random nonnegative `α ∈ D_k` with `α_1 + α_2k ≤ max_sum`.
pub fn random_d_k<R: Rng>(k: u32, max_sum: u32, rng: &mut R) -> Vec<i64> {
    let ku = k as usize;
    let s = rng.gen_range(0..=max_sum) as i64;
    // α_1 ≥ ... ≥ α_k ≥ ⌈s/2⌉ and α_1 ≤ s
    let lo = (s + 1) / 2;
    let mut top: Vec<i64> = (0..ku).map(|_| rng.gen_range(lo..=s)).collect();
    top.sort_unstable_by(|a, b| b.cmp(a));
    let mut alpha = top.clone();
    alpha.extend(top.iter().rev().map(|&a| s - a));
    alpha
}

#[derive(Clone, Debug, Serialize)]
pub struct OrbitRingComparison {
    pub alpha: Vec<i64>,
    pub formula: u64,
    pub oracle: u64,
    /// Tensor-product count `m`, when `α` is a partition.
    pub crucial: Option<u64>,
}

pub fn compare_orbit_ring(alpha: &[i64], k: u32) -> Result<OrbitRingComparison> {
    let formula = orbit_ring_multiplicity_seq(alpha, k)?;
    let oracle = orbit_ring_oracle(alpha, k)?;
    let crucial = if alpha.iter().all(|&a| a >= 0) && in_d_k(alpha, k) {
        let p = Partition::rows(&alpha.iter().map(|&a| a as u32).collect::<Vec<_>>());
        Some(crucial_count(&p, k)?)
    } else {
        None
    };
    Ok(OrbitRingComparison { alpha: alpha.to_vec(), formula, oracle, crucial })
}
