//! Cumulant coordinates on the affine chart around the highest weight.
//!
//! Chart coordinates `x_w` (one per weight of degree ≥ 1) are changed to
//! `y_w` and then `z_w` by triangular substitutions. In `z` coordinates the
//! secant variety becomes a product of an affine space with the cone over
//! the variety of generalized determinants of degree ≥ 2; this module builds
//! the substitutions and checks the resulting parametrizations as exact
//! polynomial identities.
//!
//! Sign convention: with the definitions implemented here the degree-2
//! coordinate is `z = -y`, and the composition sum
//! `Σ_{d_1+..+d_k=d} (-1)^k ∏ P_{d_i}(t)` equals
//! [`COMPOSITION_SUM_SIGN`]` · t(1-t)(1-2t)^{d-2}`. The `z`-form of the secant
//! carries the same sign.

use std::collections::BTreeMap;

use itertools::Itertools;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{Bindings, Monomial, Rational, SparsePolynomial, Var};
use crate::minuscule::{
    compat_m, compositions, decompositions, elements, gen_det, multinomial, pfaffian, FamilyKind, MinusculeFamily,
    NilpotentElement, Pairing, WeightIndex,
};
use crate::report::Check;

/// Global sign of the composition-sum identity and of the `z`-form of the
/// secant, fixed by the degree-2 case `z = -y`.
pub const COMPOSITION_SUM_SIGN: i64 = -1;

/// The secant parameter.
pub const T: Var = Var::scalar("t");

/// Auxiliary parameter of the tangent limit.
pub const EPS: Var = Var::scalar("eps");

/// Which chart coordinates a map or parametrization is written in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Coords {
    X,
    Y,
    Z,
}

impl Coords {
    pub fn name(self) -> &'static str {
        match self {
            Coords::X => "x",
            Coords::Y => "y",
            Coords::Z => "z",
        }
    }
}

impl std::str::FromStr for Coords {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "x" => Ok(Coords::X),
            "y" => Ok(Coords::Y),
            "z" => Ok(Coords::Z),
            _ => Err(Error::Precondition(format!("unknown coordinate system `{s}`"))),
        }
    }
}

/// A polynomial change of chart coordinates: `to_w = images[w](from)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoordinateMap {
    family: MinusculeFamily,
    from: &'static str,
    to: &'static str,
    images: BTreeMap<WeightIndex, SparsePolynomial>,
}

impl CoordinateMap {
    pub fn new(
        family: MinusculeFamily,
        from: &'static str,
        to: &'static str,
        images: BTreeMap<WeightIndex, SparsePolynomial>,
    ) -> Self {
        CoordinateMap { family, from, to, images }
    }

    pub fn identity(family: MinusculeFamily, from: &'static str, to: &'static str) -> Self {
        let images = chart_weights(&family).into_iter().map(|w| (w, SparsePolynomial::var(w.var(from)))).collect();
        CoordinateMap { family, from, to, images }
    }

    pub fn family(&self) -> MinusculeFamily {
        self.family
    }

    pub fn from_name(&self) -> &'static str {
        self.from
    }

    pub fn to_name(&self) -> &'static str {
        self.to
    }

    pub fn image(&self, w: &WeightIndex) -> &SparsePolynomial {
        &self.images[w]
    }

    pub fn images(&self) -> &BTreeMap<WeightIndex, SparsePolynomial> {
        &self.images
    }

    /// Bindings replacing each `to` variable by its image.
    pub fn bindings(&self) -> Bindings {
        self.images.iter().map(|(w, p)| (w.var(self.to), p.clone())).collect()
    }

    /// Rewrites a polynomial in `to` coordinates in terms of `from`.
    pub fn pull_back(&self, p: &SparsePolynomial) -> SparsePolynomial {
        p.substitute(&self.bindings())
    }

    /// `self ∘ inner`: `inner` goes from A to B, `self` from B to C.
    pub fn compose(&self, inner: &CoordinateMap) -> Result<CoordinateMap> {
        if self.from != inner.to || self.family != inner.family {
            return Err(Error::Precondition(format!(
                "cannot compose a map from {} with a map to {}",
                self.from, inner.to
            )));
        }
        let b = inner.bindings();
        let images = self.images.iter().map(|(w, p)| (*w, p.substitute(&b))).collect();
        Ok(CoordinateMap { family: self.family, from: inner.from, to: self.to, images })
    }

    /// Every image is the same-named source variable.
    pub fn is_identity(&self) -> bool {
        self.images.iter().all(|(w, p)| *p == SparsePolynomial::var(w.var(self.from)))
    }

    /// Each image is `c_w from_w` (`c_w` a nonzero constant) plus a
    /// polynomial in source variables of strictly lower weight degree.
    /// Returns the diagonal coefficients.
    pub fn check_triangular(&self) -> Result<BTreeMap<WeightIndex, Rational>> {
        let mut diagonal = BTreeMap::new();
        for (w, p) in &self.images {
            let lead = Monomial::var(w.var(self.from));
            let c = p.coefficient_of(&lead);
            if c.is_zero() {
                return Err(Error::NonTriangular(format!("{} does not contain {}", w.var(self.to), lead)));
            }
            let mut rest = p.clone();
            rest.add_term(lead, -c.clone());
            for v in rest.vars() {
                let lower = v.name == self.from && weight_of_var(&self.family, v).is_some_and(|u| u.degree() < w.degree());
                if !lower {
                    return Err(Error::NonTriangular(format!("{} depends on {v}", w.var(self.to))));
                }
            }
            diagonal.insert(*w, c);
        }
        Ok(diagonal)
    }

    /// Triangular with every diagonal coefficient equal to 1.
    pub fn is_unitriangular(&self) -> bool {
        self.check_triangular().is_ok_and(|d| d.values().all(Rational::is_one))
    }

    /// Inverse of a triangular map by back-substitution in degree order.
    pub fn invert_triangular(&self) -> Result<CoordinateMap> {
        let diagonal = self.check_triangular()?;
        let mut order: Vec<&WeightIndex> = self.images.keys().collect();
        order.sort_by_key(|w| (w.degree(), **w));
        let mut inv: BTreeMap<WeightIndex, SparsePolynomial> = BTreeMap::new();
        let mut bindings = Bindings::new();
        for w in order {
            let c = &diagonal[w];
            let mut rest = self.images[w].clone();
            rest.add_term(Monomial::var(w.var(self.from)), -c.clone());
            let img = (SparsePolynomial::var(w.var(self.to)) - rest.substitute(&bindings)).scale(&c.recip());
            bindings.insert(w.var(self.from), img.clone());
            inv.insert(*w, img);
        }
        Ok(CoordinateMap { family: self.family, from: self.to, to: self.from, images: inv })
    }

    /// Numeric image of a point given in `from` coordinates.
    pub fn evaluate(&self, point: &BTreeMap<WeightIndex, Rational>) -> Result<BTreeMap<WeightIndex, Rational>> {
        let values: BTreeMap<Var, Rational> = point.iter().map(|(w, v)| (w.var(self.from), v.clone())).collect();
        self.images.iter().map(|(w, p)| Ok((*w, p.eval(&values)?))).collect()
    }
}

/// The weight a chart variable is indexed by, if it is one of the family's.
pub fn weight_of_var(fam: &MinusculeFamily, v: Var) -> Option<WeightIndex> {
    let w = match v.index {
        crate::exact::VarIndex::SetPair(rows, cols) => WeightIndex::A { rows, cols },
        crate::exact::VarIndex::Set(set) => WeightIndex::D { set },
        _ => return None,
    };
    (fam.contains(&w) && !w.is_top()).then_some(w)
}

/// Weights with a chart coordinate: every weight but the highest.
pub fn chart_weights(fam: &MinusculeFamily) -> Vec<WeightIndex> {
    fam.weights().into_iter().filter(|w| !w.is_top()).collect()
}

/// `Σ_β x_β X_β` with chart variables of the given name.
fn chart_nilpotent(fam: &MinusculeFamily, name: &'static str) -> NilpotentElement {
    NilpotentElement::from_roots(*fam, |beta| SparsePolynomial::var(beta.var(name)))
}

/// `y_w = Σ_{w1+w2=w} (-1)^{d(w2)} m(w1,w2) x_{w1} det_{w2}(Σ_β x_β X_β)`
/// with `x_0 = 1`; degree-one coordinates are unchanged.
pub fn x_to_y(fam: &MinusculeFamily, pairing: Pairing) -> Result<CoordinateMap> {
    let n = chart_nilpotent(fam, "x");
    let mut images = BTreeMap::new();
    for w in chart_weights(fam) {
        let d = w.degree();
        if d == 1 {
            images.insert(w, SparsePolynomial::var(w.var("x")));
            continue;
        }
        let mut total = SparsePolynomial::zero();
        for d2 in 0..=d {
            for parts in decompositions(&w, &[d - d2, d2]) {
                let sign = compat_m(fam, &parts, pairing)? * if d2 % 2 == 0 { 1 } else { -1 };
                let x1 = if parts[0].is_top() { SparsePolynomial::one() } else { SparsePolynomial::var(parts[0].var("x")) };
                let term = &x1 * &gen_det(&parts[1], &n, pairing)?;
                total = if sign == 1 { &total + &term } else { &total - &term };
            }
        }
        images.insert(w, total);
    }
    Ok(CoordinateMap::new(*fam, "x", "y", images))
}

/// `z_w = Σ (-1)^k / multinomial(d(w_i)) · m(w_1..w_k) ∏ y_{w_i}` over
/// ordered decompositions with every `d(w_i) ≥ 2`; degree-one coordinates
/// are unchanged.
pub fn y_to_z(fam: &MinusculeFamily, pairing: Pairing) -> Result<CoordinateMap> {
    let mut images = BTreeMap::new();
    for w in chart_weights(fam) {
        let d = w.degree();
        if d == 1 {
            images.insert(w, SparsePolynomial::var(w.var("y")));
            continue;
        }
        let mut total = SparsePolynomial::zero();
        for degs in compositions(d, 2) {
            let k = degs.len();
            let base = Rational::new(if k % 2 == 0 { 1 } else { -1 }, multinomial(&degs) as i64);
            for parts in decompositions(&w, &degs) {
                let m = compat_m(fam, &parts, pairing)?;
                let mono = Monomial::from_pairs(parts.iter().map(|p| (p.var("y"), 1)));
                total.add_term(mono, &base * Rational::from(m));
            }
        }
        images.insert(w, total);
    }
    Ok(CoordinateMap::new(*fam, "y", "z", images))
}

/// `x → z` directly.
pub fn x_to_z(fam: &MinusculeFamily, pairing: Pairing) -> Result<CoordinateMap> {
    y_to_z(fam, pairing)?.compose(&x_to_y(fam, pairing)?)
}

/// `P_k(t) = (-t)^k (1-t) + t (1-t)^k`.
pub fn p_poly(k: u32) -> SparsePolynomial {
    let t = SparsePolynomial::var(T);
    let one_minus_t = SparsePolynomial::one() - t.clone();
    &(-&t).pow(k) * &one_minus_t + &t * &one_minus_t.pow(k)
}

/// `P_k(t) ∏(a_i - b_i) = Σ_A (-1)^{k-|A|} (t∏_A a + (1-t)∏_A b) ∏_{i∉A}(t a_i + (1-t) b_i)`.
pub fn verify_comput_identity(k: u32) -> bool {
    let t = SparsePolynomial::var(T);
    let s = SparsePolynomial::one() - t.clone();
    let a = |i: u32| SparsePolynomial::var(Var::one("a", i));
    let b = |i: u32| SparsePolynomial::var(Var::one("b", i));
    let lhs = (1..=k).fold(p_poly(k), |acc, i| &acc * &(a(i) - b(i)));
    let mixed: Vec<SparsePolynomial> = (1..=k).map(|i| &(&t * &a(i)) + &(&s * &b(i))).collect();
    let mut rhs = SparsePolynomial::zero();
    for mask in 0u32..(1 << k) {
        let inside: Vec<u32> = (1..=k).filter(|&i| mask & (1 << (i - 1)) != 0).collect();
        let pa = inside.iter().fold(SparsePolynomial::one(), |acc, &i| &acc * &a(i));
        let pb = inside.iter().fold(SparsePolynomial::one(), |acc, &i| &acc * &b(i));
        let mut term = &(&t * &pa) + &(&s * &pb);
        for i in (1..=k).filter(|&i| mask & (1 << (i - 1)) == 0) {
            term = &term * &mixed[(i - 1) as usize];
        }
        rhs = if (k as usize - inside.len()).is_multiple_of(2) { &rhs + &term } else { &rhs - &term };
    }
    lhs == rhs
}

/// `Σ_{d_1+..+d_k=d} (-1)^k ∏ P_{d_i}(t)` over compositions with parts of
/// size at least `min_part`.
pub fn composition_sum(d: u32, min_part: u32) -> SparsePolynomial {
    let mut total = SparsePolynomial::zero();
    for degs in compositions(d, min_part) {
        let prod = degs.iter().fold(SparsePolynomial::one(), |acc, &di| &acc * &p_poly(di));
        total = if degs.len() % 2 == 0 { &total + &prod } else { &total - &prod };
    }
    total
}

/// `t(1-t)(1-2t)^{d-2}`.
pub fn secant_factor(d: u32) -> SparsePolynomial {
    let t = SparsePolynomial::var(T);
    let one = SparsePolynomial::one();
    &(&t * &(&one - &t)) * &(&one - &t.scale(&Rational::from(2))).pow(d.saturating_sub(2))
}

/// Result of checking the composition-sum identity for one `d`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CompositionSumCheck {
    pub d: u32,
    /// Sign `s` with `Σ (-1)^k ∏ P_{d_i} = s · t(1-t)(1-2t)^{d-2}`, if any.
    pub sign: Option<i64>,
    /// Summing over parts ≥ 1 and over parts ≥ 2 gives the same polynomial.
    pub unit_parts_vanish: bool,
}

pub fn check_composition_sum(d: u32) -> CompositionSumCheck {
    let sum = composition_sum(d, 2);
    let target = secant_factor(d);
    let sign = if sum == target {
        Some(1)
    } else if sum == -target {
        Some(-1)
    } else {
        None
    };
    CompositionSumCheck { d, sign, unit_parts_vanish: composition_sum(d, 1) == sum }
}

/// The identity holds with the resolved sign [`COMPOSITION_SUM_SIGN`].
pub fn verify_composition_sum(d: u32) -> bool {
    let c = check_composition_sum(d);
    c.sign == Some(COMPOSITION_SUM_SIGN) && c.unit_parts_vanish
}

/// Chart point `x_w = t det_w(A) + (1-t) det_w(B)` with a polynomial `t`.
pub fn secant_x_point(
    t: &SparsePolynomial,
    a: &NilpotentElement,
    b: &NilpotentElement,
    pairing: Pairing,
) -> Result<BTreeMap<WeightIndex, SparsePolynomial>> {
    let s = SparsePolynomial::one() - t.clone();
    chart_weights(&a.family())
        .into_iter()
        .map(|w| Ok((w, &(t * &gen_det(&w, a, pairing)?) + &(&s * &gen_det(&w, b, pairing)?))))
        .collect()
}

/// Pushes a chart point given in `x` forward through the coordinate changes.
pub fn push_forward(
    x_point: &BTreeMap<WeightIndex, SparsePolynomial>,
    coords: Coords,
    maps: &ChartMaps,
) -> BTreeMap<WeightIndex, SparsePolynomial> {
    if coords == Coords::X {
        return x_point.clone();
    }
    let xb: Bindings = x_point.iter().map(|(w, p)| (w.var("x"), p.clone())).collect();
    let y: BTreeMap<WeightIndex, SparsePolynomial> =
        maps.x_to_y.images().iter().map(|(w, p)| (*w, p.substitute(&xb))).collect();
    if coords == Coords::Y {
        return y;
    }
    let yb: Bindings = y.iter().map(|(w, p)| (w.var("y"), p.clone())).collect();
    maps.y_to_z.images().iter().map(|(w, p)| (*w, p.substitute(&yb))).collect()
}

/// Both coordinate changes of a family.
#[derive(Clone, Debug)]
pub struct ChartMaps {
    pub family: MinusculeFamily,
    pub pairing: Pairing,
    pub x_to_y: CoordinateMap,
    pub y_to_z: CoordinateMap,
}

impl ChartMaps {
    pub fn new(family: &MinusculeFamily, pairing: Pairing) -> Result<Self> {
        Ok(ChartMaps { family: *family, pairing, x_to_y: x_to_y(family, pairing)?, y_to_z: y_to_z(family, pairing)? })
    }
}

/// Symbolic secant parametrization in the chosen coordinates, in the
/// variables `t`, `a[i,j]` (first point) and `b[i,j]` (second point).
pub fn secant_in_coords(fam: &MinusculeFamily, coords: Coords, pairing: Pairing) -> Result<BTreeMap<WeightIndex, SparsePolynomial>> {
    let maps = ChartMaps::new(fam, pairing)?;
    let a = NilpotentElement::symbolic(*fam, "a");
    let b = NilpotentElement::symbolic(*fam, "b");
    let x = secant_x_point(&SparsePolynomial::var(T), &a, &b, pairing)?;
    Ok(push_forward(&x, coords, &maps))
}

/// Closed form of the secant in `y` (`P_d(t) det_w(A-B)`) or `z`
/// (`sign · t(1-t)(1-2t)^{d-2} det_w(A-B)`) for degree ≥ 2, and
/// `t a_β + (1-t) b_β` in degree one.
pub fn secant_closed_form(
    fam: &MinusculeFamily,
    coords: Coords,
    pairing: Pairing,
) -> Result<BTreeMap<WeightIndex, SparsePolynomial>> {
    let a = NilpotentElement::symbolic(*fam, "a");
    let b = NilpotentElement::symbolic(*fam, "b");
    let diff = a.sub(&b);
    let t = SparsePolynomial::var(T);
    let s = SparsePolynomial::one() - t.clone();
    chart_weights(fam)
        .into_iter()
        .map(|w| {
            let d = w.degree();
            let form = if d == 1 || coords == Coords::X {
                &(&t * &gen_det(&w, &a, pairing)?) + &(&s * &gen_det(&w, &b, pairing)?)
            } else {
                let factor = match coords {
                    Coords::Y => p_poly(d),
                    _ => secant_factor(d).scale(&Rational::from(COMPOSITION_SUM_SIGN)),
                };
                &factor * &gen_det(&w, &diff, pairing)?
            };
            Ok((w, form))
        })
        .collect()
}

/// Secant parametrization in `y` and `z` against the closed forms, weight
/// by weight.
pub fn verify_secant_lemmas(fam: &MinusculeFamily, pairing: Pairing) -> Result<Vec<Check>> {
    let maps = ChartMaps::new(fam, pairing)?;
    let mut checks = Vec::new();
    checks.push(Check::new("x-to-y unitriangular", fam.to_string(), maps.x_to_y.is_unitriangular()));
    let diagonal = maps.y_to_z.check_triangular();
    let signs_ok = diagonal.is_ok_and(|d| {
        d.iter().all(|(w, c)| *c == Rational::from(if w.degree() == 1 { 1 } else { COMPOSITION_SUM_SIGN }))
    });
    checks.push(Check::new("y-to-z triangular, z = -y on the diagonal", fam.to_string(), signs_ok));
    let a = NilpotentElement::symbolic(*fam, "a");
    let b = NilpotentElement::symbolic(*fam, "b");
    let x = secant_x_point(&SparsePolynomial::var(T), &a, &b, pairing)?;
    for coords in [Coords::Y, Coords::Z] {
        let got = push_forward(&x, coords, &maps);
        let want = secant_closed_form(fam, coords, pairing)?;
        for w in chart_weights(fam) {
            checks.push(Check::new(format!("secant in {}", coords.name()), format!("{fam} {w}"), got[&w] == want[&w]));
        }
    }
    Ok(checks)
}

/// Limit of the point at `t = 1/ε` on the secant line through
/// `exp(n1)v` and `exp(n1 + ε n2)v`, in `z` coordinates, as `ε → 0`.
/// Variables: `a[i,j]` for `n1`, `e[i,j]` for `n2`.
pub fn tangent_limit(fam: &MinusculeFamily, pairing: Pairing) -> Result<BTreeMap<WeightIndex, SparsePolynomial>> {
    let maps = ChartMaps::new(fam, pairing)?;
    let n1 = NilpotentElement::symbolic(*fam, "a");
    let n2 = NilpotentElement::symbolic(*fam, "e");
    let b = n1.add(&n2.scale(&SparsePolynomial::var(EPS)));
    let x = secant_x_point(&SparsePolynomial::var(T), &n1, &b, pairing)?;
    let z = push_forward(&x, Coords::Z, &maps);
    z.into_iter().map(|(w, p)| Ok((w, laurent_limit(&p)?))).collect()
}

/// Substitutes `t = 1/ε` and takes `ε → 0`; fails if a negative power of
/// `ε` survives.
fn laurent_limit(p: &SparsePolynomial) -> Result<SparsePolynomial> {
    let mut buckets: BTreeMap<i64, SparsePolynomial> = BTreeMap::new();
    for (m, c) in p.terms() {
        let (rest, te) = m.split_off(T);
        let (rest, ee) = rest.split_off(EPS);
        buckets.entry(ee as i64 - te as i64).or_default().add_term(rest, c.clone());
    }
    for (e, q) in &buckets {
        if *e < 0 && !q.is_zero() {
            return Err(Error::Precondition(format!("the limit diverges like eps^{e}")));
        }
    }
    Ok(buckets.remove(&0).unwrap_or_default())
}

/// Constant `c` in the tangential parametrization `z_w = c det_w(2 n)`.
pub fn tangent_constant() -> Rational {
    Rational::new(1, 4)
}

/// Tangential variety in `z` coordinates: degree-one coordinates are free
/// parameters `u_β`, the others are `c · det_w(s·n)` with the given scale
/// and constant.
pub fn tangent_in_z(
    fam: &MinusculeFamily,
    c: &Rational,
    scale: &Rational,
    pairing: Pairing,
) -> Result<BTreeMap<WeightIndex, SparsePolynomial>> {
    let n = NilpotentElement::symbolic(*fam, "e").scale(&SparsePolynomial::constant(scale.clone()));
    chart_weights(fam)
        .into_iter()
        .map(|w| {
            let p = if w.degree() == 1 { SparsePolynomial::var(w.var("u")) } else { gen_det(&w, &n, pairing)?.scale(c) };
            Ok((w, p))
        })
        .collect()
}

/// The ε-limit agrees with `c · det_w(2 n2)` for every weight of degree
/// ≥ 2, and the degree-one limits do not depend on the other coordinates.
pub fn verify_tangent_limit(fam: &MinusculeFamily, pairing: Pairing) -> Result<Vec<Check>> {
    let limit = tangent_limit(fam, pairing)?;
    let want = tangent_in_z(fam, &tangent_constant(), &Rational::from(2), pairing)?;
    let mut checks = Vec::new();
    for w in chart_weights(fam) {
        let ok = if w.degree() == 1 {
            // a_β - e_β: a free coordinate
            let n1 = NilpotentElement::symbolic(*fam, "a");
            let n2 = NilpotentElement::symbolic(*fam, "e");
            limit[&w] == n1.root_coordinate(&w) - n2.root_coordinate(&w)
        } else {
            limit[&w] == want[&w]
        };
        checks.push(Check::new("tangent limit", format!("{fam} {w}"), ok));
    }
    Ok(checks)
}

/// Random rationals with numerators in `[-9, 9]` and denominators in `{1,2,3}`.
pub fn sample_rational<R: Rng>(rng: &mut R) -> Rational {
    Rational::new(rng.gen_range(-9..=9), rng.gen_range(1..=3))
}

/// A sample secant parameter avoiding `0`, `1` and `1/2`.
pub fn sample_t<R: Rng>(rng: &mut R) -> Rational {
    loop {
        let t = sample_rational(rng);
        if !t.is_zero() && !t.is_one() && t != Rational::new(1, 2) {
            return t;
        }
    }
}

pub fn sample_nilpotent<R: Rng>(fam: &MinusculeFamily, rng: &mut R) -> NilpotentElement {
    NilpotentElement::from_fn(*fam, |_, _| SparsePolynomial::constant(sample_rational(rng)))
}

/// Exact `z` coordinates of the secant point `(t, n0, n1)`.
pub fn secant_z_values(
    maps: &ChartMaps,
    t: &Rational,
    n0: &NilpotentElement,
    n1: &NilpotentElement,
) -> Result<BTreeMap<WeightIndex, Rational>> {
    let x = secant_x_point(&SparsePolynomial::constant(t.clone()), n0, n1, maps.pairing)?;
    let x: BTreeMap<WeightIndex, Rational> = x
        .into_iter()
        .map(|(w, p)| (w, p.as_constant().expect("numeric sample")))
        .collect();
    let y = maps.x_to_y.evaluate(&x)?;
    maps.y_to_z.evaluate(&y)
}

/// Plücker quadrics of `G(2, m)` in coordinates `p(i,j)`, `i < j`:
/// `p_ab p_cd - p_ac p_bd + p_ad p_bc` for `a<b<c<d`.
pub fn pluecker_quadrics(m: u32) -> Vec<([u32; 4], SparsePolynomial)> {
    let p = |i: u32, j: u32| SparsePolynomial::var(Var::pair("p", i, j));
    (1..=m)
        .combinations(4)
        .map(|v| {
            let (a, b, c, d) = (v[0], v[1], v[2], v[3]);
            let q = &(&p(a, b) * &p(c, d)) - &(&p(a, c) * &p(b, d)) + &p(a, d) * &p(b, c);
            ([a, b, c, d], q)
        })
        .collect()
}

/// Per-sample outcome of the product-structure check.
#[derive(Clone, Debug, Serialize)]
pub struct MainTheoremReport {
    pub family: MinusculeFamily,
    pub samples: usize,
    pub resolved_sign: i64,
    pub checks: Vec<Check>,
}

/// Samples exact secant points and checks that their `z` coordinates of
/// degree ≥ 2 lie on the cone over the generalized-determinant variety:
/// they equal `μ · det_w(N')` for the witness `N' = (1-2t)(n0-n1)`,
/// `μ = sign · t(1-t)/(1-2t)^2`, and for `A(2,n)` they satisfy every Plücker
/// quadric of `G(2,n-2)`. Vertex cases (`n0 = n1`, `t ∈ {0,1}`) are
/// checked to give zero.
pub fn verify_main_theorem(fam: &MinusculeFamily, samples: usize, seed: u64) -> Result<MainTheoremReport> {
    let (k, n) = match fam.kind() {
        FamilyKind::TypeA { k, n } if (k == 2 && n <= 7) || (k == 3 && n == 6) => (k, n),
        _ => {
            return Err(Error::Precondition(format!(
                "the product-structure check covers A:2,n (n <= 7) and A:3,6, not {fam}"
            )))
        }
    };
    let pairing = Pairing::Sorted;
    let maps = ChartMaps::new(fam, pairing)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let quadrics = if k == 2 { pluecker_quadrics(n - 2) } else { Vec::new() };
    let sign = Rational::from(COMPOSITION_SUM_SIGN);
    let mut witness_ok = 0;
    let mut quadric_ok = 0;
    for _ in 0..samples {
        let t = sample_t(&mut rng);
        let n0 = sample_nilpotent(fam, &mut rng);
        let n1 = sample_nilpotent(fam, &mut rng);
        let z = secant_z_values(&maps, &t, &n0, &n1)?;
        let one_minus_2t = Rational::one() - &t * Rational::from(2);
        let mu = &sign * &t * (Rational::one() - &t) / one_minus_2t.pow(2);
        let witness = n0.sub(&n1).scale(&SparsePolynomial::constant(one_minus_2t));
        let mut ok = true;
        for (w, v) in &z {
            if w.degree() >= 2 {
                let det = gen_det(w, &witness, pairing)?.as_constant().unwrap_or_else(Rational::zero);
                ok &= *v == &mu * &det;
            }
        }
        witness_ok += ok as usize;
        if k == 2 {
            let point: BTreeMap<Var, Rational> = z
                .iter()
                .filter(|(w, _)| w.degree() == 2)
                .map(|(w, v)| match *w {
                    WeightIndex::A { cols, .. } => {
                        let c = elements(cols);
                        (Var::pair("p", c[0], c[1]), v.clone())
                    }
                    WeightIndex::D { .. } => unreachable!(),
                })
                .collect();
            let all = quadrics.iter().all(|(_, q)| q.eval(&point).map(|v| v.is_zero()).unwrap_or(false));
            quadric_ok += all as usize;
        }
    }
    let mut checks = vec![Check::new("cone witness", fam.to_string(), witness_ok == samples)
        .with_note(format!("{witness_ok}/{samples} samples"))];
    if k == 2 {
        checks.push(
            Check::new(format!("Pluecker quadrics of G(2,{})", n - 2), fam.to_string(), quadric_ok == samples)
                .with_note(format!("{quadric_ok}/{samples} samples, {} quadrics each", quadrics.len())),
        );
    }
    // vertex cases
    let n0 = sample_nilpotent(fam, &mut rng);
    let n1 = sample_nilpotent(fam, &mut rng);
    let t = sample_t(&mut rng);
    let cases = [("n0 = n1", t.clone(), n0.clone(), n0.clone()), ("t = 0", Rational::zero(), n0.clone(), n1.clone()), ("t = 1", Rational::one(), n0, n1)];
    for (name, t, a, b) in cases {
        let z = secant_z_values(&maps, &t, &a, &b)?;
        let zero = z.iter().filter(|(w, _)| w.degree() >= 2).all(|(_, v)| v.is_zero());
        checks.push(Check::new(format!("vertex {name}"), fam.to_string(), zero));
    }
    Ok(MainTheoremReport { family: *fam, samples, resolved_sign: COMPOSITION_SUM_SIGN, checks })
}

/// `det(adj-pattern of degree-2 z) = c · z_top^2` for `A(3,6)`: an
/// inhomogeneous relation among the `z` coordinates of degree ≥ 2.
pub fn adjugate_relation(c: &Rational) -> SparsePolynomial {
    let z2 = |i: u32, j: u32| -> SparsePolynomial {
        let rows = 0b111 & !(1 << (i - 1));
        let cols = 0b111 & !(1 << (j - 1));
        let sign = if (i + j).is_multiple_of(2) { 1 } else { -1 };
        SparsePolynomial::var(WeightIndex::A { rows, cols }.var("z")).scale(&Rational::from(sign))
    };
    let mut det = SparsePolynomial::zero();
    for perm in (1..=3u32).permutations(3) {
        let inv = (0..3).flat_map(|i| (i + 1..3).map(move |j| (i, j))).filter(|&(i, j)| perm[i] > perm[j]).count();
        let mut term = SparsePolynomial::int(if inv % 2 == 0 { 1 } else { -1 });
        for (i, &j) in perm.iter().enumerate() {
            term = &term * &z2(i as u32 + 1, j);
        }
        det = &det + &term;
    }
    let top = SparsePolynomial::var(WeightIndex::A { rows: 0b111, cols: 0b111 }.var("z"));
    det - top.pow(2).scale(c)
}

/// For `A(3,6)`: the adjugate relation with constant `c` holds at random
/// tangent points and fails at random secant points.
pub fn verify_adjugate_relation(samples: usize, seed: u64) -> Result<Vec<Check>> {
    let fam = MinusculeFamily::type_a(3, 6)?;
    let maps = ChartMaps::new(&fam, Pairing::Sorted)?;
    let c = tangent_constant();
    let rel = adjugate_relation(&c);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let eval_z = |z: &BTreeMap<WeightIndex, Rational>| -> Result<Rational> {
        let point: BTreeMap<Var, Rational> = z.iter().map(|(w, v)| (w.var("z"), v.clone())).collect();
        rel.eval_with(|v| Some(point.get(&v).cloned().unwrap_or_else(Rational::zero)))
    };
    let form = tangent_in_z(&fam, &c, &Rational::from(2), Pairing::Sorted)?;
    let (mut on_tangent, mut off_secant) = (0, 0);
    for _ in 0..samples {
        let n = sample_nilpotent(&fam, &mut rng);
        let values: BTreeMap<Var, Rational> = form
            .values()
            .flat_map(|p| p.vars())
            .map(|v| {
                let val = if v.name == "e" {
                    let crate::exact::VarIndex::Pair(i, j) = v.index else { unreachable!() };
                    n.entry(i, j).as_constant().unwrap_or_else(Rational::zero)
                } else {
                    sample_rational(&mut rng)
                };
                (v, val)
            })
            .collect();
        let z: BTreeMap<WeightIndex, Rational> =
            form.iter().map(|(w, p)| Ok((*w, p.eval(&values)?))).collect::<Result<_>>()?;
        on_tangent += eval_z(&z)?.is_zero() as usize;
        let t = sample_t(&mut rng);
        let n0 = sample_nilpotent(&fam, &mut rng);
        let n1 = sample_nilpotent(&fam, &mut rng);
        off_secant += !eval_z(&secant_z_values(&maps, &t, &n0, &n1)?)?.is_zero() as usize;
    }
    Ok(vec![
        Check::new("adjugate relation on the tangent", fam.to_string(), on_tangent == samples)
            .with_note(format!("c = {c}, {on_tangent}/{samples} samples")),
        Check::new("adjugate relation fails on the secant", fam.to_string(), off_secant == samples)
            .with_note(format!("{off_secant}/{samples} samples")),
    ])
}

/// One index choice of the Pfaffian-Plücker correspondence.
#[derive(Clone, Debug, Serialize)]
pub struct PfaffianPlueckerCase {
    /// Chart indices `i1 < i2`.
    pub chart: [u32; 2],
    /// Plücker quadric indices `i3 < i4 < i5 < i6`.
    pub quadric: [u32; 4],
    /// `s` with pull-back = `s · Pf`, if the identity holds with a sign.
    pub sign: Option<i64>,
    /// The homogenized identity `Q(z) = s · x_{i1 i2} · Pf` holds.
    pub homogeneous: bool,
}

/// Skew-matrix variable `x_ij` of `∧^2 ℂ^n`.
fn xs(i: u32, j: u32) -> Var {
    Var::pair("x", i.min(j), i.max(j))
}

/// Checks, for `A(2,n)` and the chart `x_{i1 i2} = 1`, that the Plücker
/// quadric `z_{34}z_{56} + z_{45}z_{36} - z_{46}z_{35}` (indices relabelled
/// to the chosen `i3..i6`) pulls back to `±Pf` of the 6×6 skew matrix on
/// `{i1, ..., i6}`.
pub fn pfaffian_pluecker_case(n: u32, chart: [u32; 2], quadric: [u32; 4], maps: &ChartMaps) -> Result<PfaffianPlueckerCase> {
    let fam = maps.family;
    if fam != MinusculeFamily::type_a(2, n)? {
        return Err(Error::Precondition(format!("maps are for {fam}, not A:2,{n}")));
    }
    // columns of the chart are the remaining indices, in increasing order
    let others: Vec<u32> = (1..=n).filter(|i| !chart.contains(i)).collect();
    let col = |i: u32| -> u32 { others.iter().position(|&o| o == i).expect("index outside the chart") as u32 + 1 };
    let zq = |i: u32, j: u32| -> SparsePolynomial {
        let (a, b) = (col(i), col(j));
        let sign = if a < b { 1 } else { -1 };
        let w = WeightIndex::A { rows: 0b11, cols: (1 << (a - 1)) | (1 << (b - 1)) };
        SparsePolynomial::var(w.var("z")).scale(&Rational::from(sign))
    };
    let [i3, i4, i5, i6] = quadric;
    let q = &(&zq(i3, i4) * &zq(i5, i6)) + &(&zq(i4, i5) * &zq(i3, i6)) - &zq(i4, i6) * &zq(i3, i5);
    let pulled = maps.x_to_y.pull_back(&maps.y_to_z.pull_back(&q));
    // chart x_{{r}|{c}} ↔ x_{i_r, c'}, x_{{1,2}|{c1,c2}} ↔ x_{c1', c2'}
    let rename: Bindings = chart_weights(&fam)
        .into_iter()
        .map(|w| {
            let WeightIndex::A { rows, cols } = w else { unreachable!() };
            let r = elements(rows);
            let c: Vec<u32> = elements(cols).iter().map(|&c| others[(c - 1) as usize]).collect();
            let target = if r.len() == 1 {
                let i = chart[(r[0] - 1) as usize];
                let sign = if i < c[0] { 1 } else { -1 };
                SparsePolynomial::var(xs(i, c[0])).scale(&Rational::from(sign))
            } else {
                SparsePolynomial::var(xs(c[0], c[1]))
            };
            (w.var("x"), target)
        })
        .collect();
    let in_x = pulled.substitute(&rename);
    let idx = [chart[0], chart[1], i3, i4, i5, i6];
    let six = MinusculeFamily::type_d(6)?;
    let skew = |one: Option<SparsePolynomial>| {
        NilpotentElement::from_fn(six, |a, b| {
            let (i, j) = (idx[(a - 1) as usize], idx[(b - 1) as usize]);
            if a == 1 && b == 2 {
                if let Some(v) = &one {
                    return v.clone();
                }
            }
            let sign = if i < j { 1 } else { -1 };
            SparsePolynomial::var(xs(i, j)).scale(&Rational::from(sign))
        })
    };
    let (c1, c2) = (chart[0].min(chart[1]), chart[0].max(chart[1]));
    let x12 = SparsePolynomial::var(xs(c1, c2));
    let pf = pfaffian(&skew(Some(SparsePolynomial::one())), &[1, 2, 3, 4, 5, 6]);
    let sign = if in_x == pf {
        Some(1)
    } else if in_x == -pf.clone() {
        Some(-1)
    } else {
        None
    };
    // homogeneous form of the example: z_ij = x12 x_ij - x_1i x_2j + x_1j x_2i
    let homogeneous = match sign {
        None => false,
        Some(s) => {
            let (p1, p2) = (chart[0], chart[1]);
            let sx = |i: u32, j: u32| -> SparsePolynomial {
                let sign = if i < j { 1 } else { -1 };
                SparsePolynomial::var(xs(i, j)).scale(&Rational::from(sign))
            };
            let zh = |i: u32, j: u32| -> SparsePolynomial {
                &(&(&sx(p1, p2) * &sx(i, j)) - &(&sx(p1, i) * &sx(p2, j))) + &(&sx(p1, j) * &sx(p2, i))
            };
            let qh = &(&zh(i3, i4) * &zh(i5, i6)) + &(&zh(i4, i5) * &zh(i3, i6)) - &zh(i4, i6) * &zh(i3, i5);
            let pf_full = pfaffian(&skew(None), &[1, 2, 3, 4, 5, 6]);
            let chart_sign = if chart[0] < chart[1] { 1 } else { -1 };
            qh == (&x12 * &pf_full).scale(&Rational::from(s * chart_sign))
        }
    };
    Ok(PfaffianPlueckerCase { chart, quadric, sign, homogeneous })
}

/// All quadric index choices `i3<..<i6` outside the chart `(1,2)`, or for
/// every chart when `all_charts` is set.
pub fn verify_pfaffian_pluecker(n: u32, all_charts: bool) -> Result<Vec<PfaffianPlueckerCase>> {
    if n < 6 {
        return Err(Error::Precondition(format!("need n >= 6, got {n}")));
    }
    let fam = MinusculeFamily::type_a(2, n)?;
    let maps = ChartMaps::new(&fam, Pairing::Sorted)?;
    let charts: Vec<[u32; 2]> =
        if all_charts { (1..=n).combinations(2).map(|c| [c[0], c[1]]).collect() } else { vec![[1, 2]] };
    let mut out = Vec::new();
    for chart in charts {
        let rest: Vec<u32> = (1..=n).filter(|i| !chart.contains(i)).collect();
        for q in rest.into_iter().combinations(4) {
            out.push(pfaffian_pluecker_case(n, chart, [q[0], q[1], q[2], q[3]], &maps)?);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t() -> SparsePolynomial {
        SparsePolynomial::var(T)
    }

    #[test]
    fn p_poly_values() {
        assert!(p_poly(1).is_zero());
        let t = t();
        assert_eq!(p_poly(2), &t - &t.pow(2));
        let half: BTreeMap<Var, Rational> = [(T, Rational::new(1, 2))].into_iter().collect();
        assert_eq!(p_poly(3).eval(&half).unwrap(), Rational::zero());
    }

    #[test]
    fn comput_identity_small() {
        for k in 1..=5 {
            assert!(verify_comput_identity(k), "k={k}");
        }
    }

    #[test]
    fn composition_sum_sign() {
        // d = 2: only (2), so the sum is -P_2 = -t(1-t)
        let c = check_composition_sum(2);
        assert_eq!(c.sign, Some(-1));
        assert!(c.unit_parts_vanish);
        for d in 2..=6 {
            assert!(verify_composition_sum(d), "d={d}");
        }
    }

    #[test]
    fn degree_two_y_and_z() {
        let fam = MinusculeFamily::type_a(2, 4).unwrap();
        let maps = ChartMaps::new(&fam, Pairing::Sorted).unwrap();
        let x = |r: u32, c: u32| SparsePolynomial::var(WeightIndex::A { rows: r, cols: c }.var("x"));
        let top = WeightIndex::A { rows: 0b11, cols: 0b11 };
        let want = x(0b11, 0b11) - &x(0b01, 0b01) * &x(0b10, 0b10) + &x(0b01, 0b10) * &x(0b10, 0b01);
        assert_eq!(maps.x_to_y.image(&top), &want);
        assert_eq!(maps.y_to_z.image(&top), &-SparsePolynomial::var(top.var("y")));
        let beta = WeightIndex::A { rows: 0b01, cols: 0b10 };
        assert_eq!(maps.x_to_y.image(&beta), &x(0b01, 0b10));
    }

    #[test]
    fn degree_three_z_is_minus_y() {
        let fam = MinusculeFamily::type_a(3, 6).unwrap();
        let maps = ChartMaps::new(&fam, Pairing::Sorted).unwrap();
        let top = WeightIndex::A { rows: 0b111, cols: 0b111 };
        assert_eq!(maps.y_to_z.image(&top), &-SparsePolynomial::var(top.var("y")));
    }

    #[test]
    fn inverses_compose_to_identity() {
        for fam in ["A:2,5", "D:5"] {
            let fam: MinusculeFamily = fam.parse().unwrap();
            let maps = ChartMaps::new(&fam, Pairing::Sorted).unwrap();
            for m in [&maps.x_to_y, &maps.y_to_z] {
                let inv = m.invert_triangular().unwrap();
                assert!(m.compose(&inv).unwrap().is_identity());
                assert!(inv.compose(m).unwrap().is_identity());
            }
        }
        let fam = MinusculeFamily::type_a(2, 4).unwrap();
        let id = CoordinateMap::identity(fam, "x", "y");
        assert!(id.invert_triangular().unwrap().compose(&id).unwrap().is_identity());
    }

    #[test]
    fn non_triangular_map_is_rejected() {
        let fam = MinusculeFamily::type_a(2, 4).unwrap();
        let top = WeightIndex::A { rows: 0b11, cols: 0b11 };
        let beta = WeightIndex::A { rows: 0b01, cols: 0b01 };
        let mut images: BTreeMap<_, _> = chart_weights(&fam).into_iter().map(|w| (w, SparsePolynomial::var(w.var("x")))).collect();
        images.insert(beta, SparsePolynomial::var(beta.var("x")) + SparsePolynomial::var(top.var("x")));
        let m = CoordinateMap::new(fam, "x", "y", images);
        assert!(matches!(m.invert_triangular(), Err(Error::NonTriangular(_))));
    }

    #[test]
    fn secant_lemmas_small() {
        for fam in ["A:2,4", "A:2,5", "D:4"] {
            let fam: MinusculeFamily = fam.parse().unwrap();
            for c in verify_secant_lemmas(&fam, Pairing::Sorted).unwrap() {
                assert!(c.passed(), "{c}");
            }
        }
    }

    #[test]
    fn tangent_limit_small() {
        let fam = MinusculeFamily::type_a(2, 4).unwrap();
        for c in verify_tangent_limit(&fam, Pairing::Sorted).unwrap() {
            assert!(c.passed(), "{c}");
        }
    }

    #[test]
    fn main_theorem_small() {
        let fam = MinusculeFamily::type_a(2, 6).unwrap();
        let r = verify_main_theorem(&fam, 5, 0).unwrap();
        for c in &r.checks {
            assert!(c.passed(), "{c}");
        }
        assert!(verify_main_theorem(&MinusculeFamily::type_d(5).unwrap(), 1, 0).is_err());
    }

    #[test]
    fn adjugate_relation_separates_tangent_from_secant() {
        for c in verify_adjugate_relation(5, 1).unwrap() {
            assert!(c.passed(), "{c}");
        }
    }

    #[test]
    fn secant_lemmas_alternative_pairing() {
        for fam in ["A:2,5", "D:5"] {
            let fam: MinusculeFamily = fam.parse().unwrap();
            for c in verify_secant_lemmas(&fam, Pairing::Alternative).unwrap() {
                assert!(c.passed(), "{c}");
            }
        }
    }

    #[test]
    fn pfaffian_pluecker_n6() {
        let cases = verify_pfaffian_pluecker(6, false).unwrap();
        assert_eq!(cases.len(), 1);
        assert!(cases[0].sign.is_some());
        assert!(cases[0].homogeneous);
    }
}
