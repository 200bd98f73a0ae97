//! Root data for the simple Lie types and the Killing-normalized form.
//!
//! Every type is realized in its classical orthogonal presentation: type A
//! in the sum-zero hyperplane of `R^{r+1}`, B/C/D in `R^r`, E6/E7/E8 inside
//! the standard `R^8` model of E8, F4 in `R^4` and G2 in the sum-zero plane
//! of `R^3`. In each case the basic form is a rational multiple of the dot
//! product, chosen so that long roots have squared length 2.

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg;
use crate::weight::{frac, q, Weight, Q};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }

    pub fn from_letter(c: char) -> Option<Family> {
        Some(match c.to_ascii_uppercase() {
            'A' => Family::A,
            'B' => Family::B,
            'C' => Family::C,
            'D' => Family::D,
            'E' => Family::E,
            'F' => Family::F,
            'G' => Family::G,
            _ => return None,
        })
    }
}

/// A Cartan type `X_r` with its rank constraint enforced.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SimpleType {
    family: Family,
    rank: usize,
}

impl SimpleType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B => rank >= 2,
            Family::C => rank >= 3,
            Family::D => rank >= 4,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if ok {
            Ok(SimpleType { family, rank })
        } else {
            Err(Error::InvalidRank {
                family: family.letter(),
                rank,
            })
        }
    }

    pub fn family(self) -> Family {
        self.family
    }

    pub fn rank(self) -> usize {
        self.rank
    }

    /// Every valid type of rank at most `max_rank`.
    pub fn all_up_to(max_rank: usize) -> Vec<SimpleType> {
        let families = [
            Family::A,
            Family::B,
            Family::C,
            Family::D,
            Family::E,
            Family::F,
            Family::G,
        ];
        let mut out = Vec::new();
        for f in families {
            for r in 1..=max_rank {
                if let Ok(t) = SimpleType::new(f, r) {
                    out.push(t);
                }
            }
        }
        out
    }

    /// h^∨ for the type.
    pub fn dual_coxeter(self) -> u32 {
        let r = self.rank as u32;
        match (self.family, r) {
            (Family::A, _) => r + 1,
            (Family::B, _) => 2 * r - 1,
            (Family::C, _) => r + 1,
            (Family::D, _) => 2 * r - 2,
            (Family::E, 6) => 12,
            (Family::E, 7) => 18,
            (Family::E, _) => 30,
            (Family::F, _) => 9,
            (Family::G, _) => 4,
        }
    }

    /// Closed-form number of positive roots.
    pub fn positive_root_count(self) -> usize {
        let r = self.rank;
        match (self.family, r) {
            (Family::A, _) => r * (r + 1) / 2,
            (Family::B | Family::C, _) => r * r,
            (Family::D, _) => r * (r - 1),
            (Family::E, 6) => 36,
            (Family::E, 7) => 63,
            (Family::E, _) => 120,
            (Family::F, _) => 24,
            (Family::G, _) => 6,
        }
    }

    /// Order of the Weyl group from the standard product formulas.
    pub fn weyl_group_order(self) -> u128 {
        let r = self.rank as u128;
        let fact = |n: u128| (1..=n).product::<u128>();
        match (self.family, self.rank) {
            (Family::A, _) => fact(r + 1),
            (Family::B | Family::C, _) => (1u128 << r) * fact(r),
            (Family::D, _) => (1u128 << (r - 1)) * fact(r),
            (Family::E, 6) => 51_840,
            (Family::E, 7) => 2_903_040,
            (Family::E, _) => 696_729_600,
            (Family::F, _) => 1_152,
            (Family::G, _) => 12,
        }
    }
}

impl fmt::Display for SimpleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.rank)
    }
}

impl FromStr for SimpleType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let family = chars
            .next()
            .and_then(Family::from_letter)
            .ok_or_else(|| Error::Parse(format!("unknown Lie type {s:?}")))?;
        let rank = chars
            .as_str()
            .parse()
            .map_err(|_| Error::Parse(format!("bad rank in {s:?}")))?;
        SimpleType::new(family, rank)
    }
}

/// A positive system generated by closure from its simple roots.
///
/// Used both for the roots of G and for the compact subsystem of a pair;
/// in the latter case the span may be a proper subspace (torus factors).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PositiveSystem {
    simple_roots: Vec<Weight>,
    positive_roots: Vec<Weight>,
    coefficients: Vec<Vec<i64>>,
    rho: Weight,
}

impl PositiveSystem {
    /// The empty system in an ambient space of dimension `dim`.
    pub fn empty(dim: usize) -> Self {
        PositiveSystem {
            simple_roots: Vec::new(),
            positive_roots: Vec::new(),
            coefficients: Vec::new(),
            rho: Weight::zero(dim),
        }
    }

    /// Generates the positive roots spanned by `simple` via root strings.
    ///
    /// The simple roots must be linearly independent, pairwise non-acute and
    /// have integral Cartan numbers.
    pub fn from_simple_roots(simple: Vec<Weight>, dim: usize) -> Result<Self> {
        for s in &simple {
            s.check_dim(dim)?;
            if s.is_zero() {
                return Err(Error::NotSimpleList("zero vector".into()));
            }
        }
        let l = simple.len();
        if linalg::rank(&simple.iter().map(|w| w.0.clone()).collect::<Vec<_>>()) != l {
            return Err(Error::NotSimpleList(
                "roots are linearly dependent".into(),
            ));
        }
        // a[j][i] = <alpha_j, alpha_i^vee>
        let mut a = vec![vec![0i64; l]; l];
        for j in 0..l {
            for i in 0..l {
                let v = q(2) * simple[j].dot(&simple[i]) / simple[i].dot(&simple[i]);
                if !v.is_integer() {
                    return Err(Error::NotSimpleList(format!(
                        "non-integral Cartan number between {} and {}",
                        simple[j], simple[i]
                    )));
                }
                a[j][i] = i64::try_from(v.to_integer()).expect("small Cartan number");
                if i != j && a[j][i] > 0 {
                    return Err(Error::NotSimpleList(format!(
                        "{} and {} form an acute angle",
                        simple[j], simple[i]
                    )));
                }
            }
        }

        let unit = |i: usize| {
            let mut c = vec![0i64; l];
            c[i] = 1;
            c
        };
        let mut all: Vec<Vec<i64>> = (0..l).map(unit).collect();
        let mut seen: HashSet<Vec<i64>> = all.iter().cloned().collect();
        let mut level: Vec<Vec<i64>> = all.clone();
        while !level.is_empty() {
            let mut next = Vec::new();
            for beta in &level {
                for i in 0..l {
                    if *beta == unit(i) {
                        continue;
                    }
                    // p: how far the i-string extends downwards from beta
                    let mut p = 0i64;
                    let mut down = beta.clone();
                    loop {
                        down[i] -= 1;
                        if down[i] < 0 || !seen.contains(&down) {
                            break;
                        }
                        p += 1;
                    }
                    let pairing: i64 = (0..l).map(|j| beta[j] * a[j][i]).sum();
                    if p - pairing > 0 {
                        let mut up = beta.clone();
                        up[i] += 1;
                        if seen.insert(up.clone()) {
                            next.push(up);
                        }
                    }
                }
            }
            all.extend(next.iter().cloned());
            level = next;
        }

        let mut roots: Vec<(i64, Weight, Vec<i64>)> = all
            .into_iter()
            .map(|c| {
                let mut w = Weight::zero(dim);
                for (k, &ck) in c.iter().enumerate() {
                    if ck != 0 {
                        w += &simple[k].scale(&q(ck));
                    }
                }
                (c.iter().sum(), w, c)
            })
            .collect();
        roots.sort_by(|x, y| x.0.cmp(&y.0).then_with(|| x.1.cmp(&y.1)));

        let mut rho = Weight::zero(dim);
        for (_, w, _) in &roots {
            rho += w;
        }
        let rho = rho.scale(&frac(1, 2));
        let (positive_roots, coefficients) = roots.into_iter().map(|(_, w, c)| (w, c)).unzip();
        Ok(PositiveSystem {
            simple_roots: simple,
            positive_roots,
            coefficients,
            rho,
        })
    }

    pub fn simple_roots(&self) -> &[Weight] {
        &self.simple_roots
    }

    pub fn positive_roots(&self) -> &[Weight] {
        &self.positive_roots
    }

    /// Coefficients of each positive root in the simple roots, same order.
    pub fn coefficients(&self) -> &[Vec<i64>] {
        &self.coefficients
    }

    /// Half the sum of the positive roots.
    pub fn rho(&self) -> &Weight {
        &self.rho
    }

    pub fn rank(&self) -> usize {
        self.simple_roots.len()
    }

    pub fn len(&self) -> usize {
        self.positive_roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.positive_roots.is_empty()
    }

    pub fn contains(&self, root: &Weight) -> bool {
        self.positive_roots.contains(root)
    }

    /// Cartan types of the connected components of the Dynkin diagram.
    pub fn cartan_types(&self) -> Vec<SimpleType> {
        cartan_type_of(&self.simple_roots)
    }

    /// |W| as a product over simple factors; torus factors contribute 1.
    pub fn weyl_group_order(&self) -> u128 {
        self.cartan_types()
            .iter()
            .map(|t| t.weyl_group_order())
            .product()
    }
}

/// Root datum of a simple Lie type.
#[derive(Clone, Debug)]
pub struct RootSystem {
    simple_type: SimpleType,
    ambient_dim: usize,
    positive: PositiveSystem,
    cartan: Vec<Vec<i64>>,
    fundamental_weights: Vec<Weight>,
    dual_coxeter: u32,
    basic_scale: Q,
    roots: HashSet<Weight>,
}

impl PartialEq for RootSystem {
    fn eq(&self, other: &Self) -> bool {
        self.simple_type == other.simple_type
    }
}

fn simple_roots_of(t: SimpleType) -> (usize, Vec<Weight>, Q) {
    let r = t.rank();
    let e = |dim: usize, i: usize| Weight::unit(dim, i);
    let diff = |dim: usize, i: usize, j: usize| &e(dim, i) - &e(dim, j);
    match t.family() {
        Family::A => {
            let d = r + 1;
            (d, (0..r).map(|i| diff(d, i, i + 1)).collect(), q(1))
        }
        Family::B => {
            let mut s: Vec<_> = (0..r - 1).map(|i| diff(r, i, i + 1)).collect();
            s.push(e(r, r - 1));
            (r, s, q(1))
        }
        Family::C => {
            let mut s: Vec<_> = (0..r - 1).map(|i| diff(r, i, i + 1)).collect();
            s.push(e(r, r - 1).scale(&q(2)));
            (r, s, frac(1, 2))
        }
        Family::D => {
            let mut s: Vec<_> = (0..r - 1).map(|i| diff(r, i, i + 1)).collect();
            s.push(&e(r, r - 2) + &e(r, r - 1));
            (r, s, q(1))
        }
        Family::E => {
            // Bourbaki numbering inside the standard model of E8.
            let h = frac(1, 2);
            let mut s = vec![Weight(vec![
                h.clone(),
                -h.clone(),
                -h.clone(),
                -h.clone(),
                -h.clone(),
                -h.clone(),
                -h.clone(),
                h,
            ])];
            s.push(&e(8, 0) + &e(8, 1));
            for i in 0..6 {
                s.push(diff(8, i + 1, i));
            }
            s.truncate(r);
            (8, s, q(1))
        }
        Family::F => {
            let h = frac(1, 2);
            let s = vec![
                diff(4, 1, 2),
                diff(4, 2, 3),
                e(4, 3),
                Weight(vec![h.clone(), -h.clone(), -h.clone(), -h]),
            ];
            (4, s, q(1))
        }
        Family::G => {
            let s = vec![diff(3, 0, 1), Weight::from_ints(&[-2, 1, 1])];
            (3, s, frac(1, 3))
        }
    }
}

impl RootSystem {
    pub fn new(t: SimpleType) -> Self {
        let (dim, simple, basic_scale) = simple_roots_of(t);
        let positive = PositiveSystem::from_simple_roots(simple, dim)
            .expect("built-in simple roots are a simple system");
        let s = positive.simple_roots();
        let r = s.len();
        let cartan: Vec<Vec<i64>> = (0..r)
            .map(|i| {
                (0..r)
                    .map(|j| {
                        let v = q(2) * s[i].dot(&s[j]) / s[j].dot(&s[j]);
                        i64::try_from(v.to_integer()).unwrap()
                    })
                    .collect()
            })
            .collect();
        let cartan_q: linalg::Matrix = cartan
            .iter()
            .map(|row| row.iter().map(|&x| q(x)).collect())
            .collect();
        let inv = linalg::inverse(&cartan_q).expect("Cartan matrix is invertible");
        let fundamental_weights = (0..r)
            .map(|i| {
                let mut w = Weight::zero(dim);
                for k in 0..r {
                    w += &s[k].scale(&inv[i][k]);
                }
                w
            })
            .collect();
        let roots = positive
            .positive_roots()
            .iter()
            .flat_map(|a| [a.clone(), -a])
            .collect();
        RootSystem {
            simple_type: t,
            ambient_dim: dim,
            dual_coxeter: t.dual_coxeter(),
            positive,
            cartan,
            fundamental_weights,
            basic_scale,
            roots,
        }
    }

    pub fn simple_type(&self) -> SimpleType {
        self.simple_type
    }

    pub fn rank(&self) -> usize {
        self.simple_type.rank()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn positive_system(&self) -> &PositiveSystem {
        &self.positive
    }

    pub fn simple_roots(&self) -> &[Weight] {
        self.positive.simple_roots()
    }

    pub fn positive_roots(&self) -> &[Weight] {
        self.positive.positive_roots()
    }

    /// `cartan_matrix()[i][j] = 2(α_i, α_j)/(α_j, α_j)`.
    pub fn cartan_matrix(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn fundamental_weights(&self) -> &[Weight] {
        &self.fundamental_weights
    }

    /// δ_G, half the sum of the positive roots.
    pub fn weyl_vector(&self) -> &Weight {
        self.positive.rho()
    }

    pub fn dual_coxeter(&self) -> u32 {
        self.dual_coxeter
    }

    pub fn highest_root(&self) -> &Weight {
        self.positive_roots().last().expect("nonempty root system")
    }

    pub fn weyl_group_order(&self) -> u128 {
        self.simple_type.weyl_group_order()
    }

    pub fn is_root(&self, w: &Weight) -> bool {
        self.roots.contains(w)
    }

    /// All roots, positive ones first.
    pub fn roots(&self) -> Vec<Weight> {
        let pos = self.positive_roots();
        pos.iter().cloned().chain(pos.iter().map(|a| -a)).collect()
    }

    /// W-invariant form with long roots of squared length 2.
    pub fn basic_form(&self, u: &Weight, v: &Weight) -> Result<Q> {
        u.check_dim(self.ambient_dim)?;
        v.check_dim(self.ambient_dim)?;
        Ok(&self.basic_scale * u.dot(v))
    }

    /// Scalar product induced by the sign-changed Killing form:
    /// the basic form divided by `2 h^∨`.
    pub fn killing_inner_product(&self, u: &Weight, v: &Weight) -> Result<Q> {
        Ok(self.basic_form(u, v)? / q(2 * i64::from(self.dual_coxeter)))
    }

    pub(crate) fn killing(&self, u: &Weight, v: &Weight) -> Q {
        &self.basic_scale * u.dot(v) / q(2 * i64::from(self.dual_coxeter))
    }

    pub(crate) fn killing_norm2(&self, u: &Weight) -> Q {
        self.killing(u, u)
    }

    /// `2<λ, α>/<α, α>`, independent of the normalization of the form.
    pub fn coroot_pairing(&self, lambda: &Weight, alpha: &Weight) -> Result<Q> {
        lambda.check_dim(self.ambient_dim)?;
        if !self.is_root(alpha) {
            return Err(Error::NotARoot(alpha.to_string()));
        }
        Ok(pairing(lambda, alpha))
    }

    /// Dominance with respect to the simple roots of `positives`, which may be
    /// the positive system of G or of a subsystem.
    pub fn is_dominant(&self, lambda: &Weight, positives: &PositiveSystem) -> Result<bool> {
        for a in positives.simple_roots() {
            if self.coroot_pairing(lambda, a)?.is_negative() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Integral for G: all Dynkin labels are integers.
    pub fn is_integral(&self, lambda: &Weight) -> bool {
        self.simple_roots()
            .iter()
            .all(|a| pairing(lambda, a).is_integer())
    }

    /// `⟨λ, α_i^∨⟩` for the simple roots of G.
    pub fn dynkin_labels(&self, lambda: &Weight) -> Vec<Q> {
        self.simple_roots()
            .iter()
            .map(|a| pairing(lambda, a))
            .collect()
    }

    pub fn from_dynkin_labels(&self, labels: &[Q]) -> Weight {
        let mut w = Weight::zero(self.ambient_dim);
        for (c, om) in labels.iter().zip(&self.fundamental_weights) {
            if !c.is_zero() {
                w += &om.scale(c);
            }
        }
        w
    }

    /// Coefficients of `x` in the simple roots, or `None` if `x` is not in
    /// their span.
    pub fn simple_root_coefficients(&self, x: &Weight) -> Option<Vec<Q>> {
        let coeffs: Vec<Q> = self
            .simple_roots()
            .iter()
            .zip(&self.fundamental_weights)
            .map(|(a, om)| q(2) * x.dot(om) / a.dot(a))
            .collect();
        let mut back = Weight::zero(self.ambient_dim);
        for (c, a) in coeffs.iter().zip(self.simple_roots()) {
            back += &a.scale(c);
        }
        (back == *x).then_some(coeffs)
    }

    /// The dominance order: `b - a` is a nonnegative integer combination of
    /// simple roots (equality included).
    pub fn dominance_le(&self, a: &Weight, b: &Weight) -> bool {
        match self.simple_root_coefficients(&(b - a)) {
            Some(c) => c.iter().all(|x| x.is_integer() && !x.is_negative()),
            None => false,
        }
    }

    /// Weyl dimension formula for the irreducible of highest weight `lambda`
    /// relative to `positives`.
    pub fn weyl_dimension(&self, lambda: &Weight, positives: &PositiveSystem) -> Result<BigUint> {
        for a in positives.simple_roots() {
            let p = self.coroot_pairing(lambda, a)?;
            if !p.is_integer() {
                return Err(Error::NotIntegral(lambda.to_string()));
            }
            if p.is_negative() {
                return Err(Error::NotDominant(lambda.to_string()));
            }
        }
        Ok(weyl_dimension_unchecked(lambda, positives))
    }
}

pub(crate) fn pairing(lambda: &Weight, alpha: &Weight) -> Q {
    q(2) * lambda.dot(alpha) / alpha.dot(alpha)
}

/// Integer multiples `D·w` of the given weights for a common `D`, if they
/// fit in 64 bits.
fn cleared(ws: &[&Weight]) -> Option<Vec<Vec<i64>>> {
    let mut d: i64 = 1;
    for w in ws {
        for c in w.coords() {
            d = d.lcm(&c.denom().to_i64()?);
        }
    }
    ws.iter()
        .map(|w| {
            w.coords()
                .iter()
                .map(|c| c.numer().to_i64()?.checked_mul(d / c.denom().to_i64()?))
                .collect()
        })
        .collect()
}

fn int_dot(u: &[i64], v: &[i64]) -> Option<i128> {
    u.iter()
        .zip(v)
        .try_fold(0i128, |acc, (a, b)| acc.checked_add(i128::from(*a) * i128::from(*b)))
}

/// The Weyl product in machine integers. Each factor `⟨λ+ρ, α⟩/⟨ρ, α⟩` is
/// unchanged by rescaling α, or λ+ρ and ρ together, so denominators are
/// cleared once. `None` on overflow.
fn weyl_dimension_fast(shifted: &Weight, positives: &PositiveSystem) -> Option<BigUint> {
    let sr = cleared(&[shifted, positives.rho()])?;
    let (mut num, mut den) = (BigInt::one(), BigInt::one());
    for a in positives.positive_roots() {
        let a = cleared(&[a])?.pop()?;
        let (x, y) = (int_dot(&sr[0], &a)?, int_dot(&sr[1], &a)?);
        let g = x.gcd(&y).max(1);
        num *= x / g;
        den *= y / g;
    }
    (num / den).to_biguint()
}

pub(crate) fn weyl_dimension_unchecked(lambda: &Weight, positives: &PositiveSystem) -> BigUint {
    let rho = positives.rho();
    let shifted = lambda + rho;
    if let Some(d) = weyl_dimension_fast(&shifted, positives) {
        return d;
    }
    let mut num = Q::one();
    for a in positives.positive_roots() {
        num *= shifted.dot(a) / rho.dot(a);
    }
    debug_assert!(num.is_integer());
    num.to_integer()
        .to_biguint()
        .unwrap_or_else(|| BigUint::from(0u32))
}

/// Identifies the Cartan types of the components of a simple system.
///
/// Low-rank coincidences come out as A1, B2 (for C2), A3 (for D3).
pub fn cartan_type_of(simple: &[Weight]) -> Vec<SimpleType> {
    let n = simple.len();
    let norm: Vec<Q> = simple.iter().map(|a| a.dot(a)).collect();
    // bond[i][j] = product of the two Cartan numbers = number of edges
    let bond = |i: usize, j: usize| -> i64 {
        let ip = simple[i].dot(&simple[j]);
        let prod = q(4) * &ip * &ip / (&norm[i] * &norm[j]);
        i64::try_from(prod.to_integer()).unwrap()
    };
    let mut seen = vec![false; n];
    let mut types = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut comp = vec![start];
        seen[start] = true;
        let mut k = 0;
        while k < comp.len() {
            let i = comp[k];
            for j in 0..n {
                if !seen[j] && bond(i, j) > 0 {
                    seen[j] = true;
                    comp.push(j);
                }
            }
            k += 1;
        }
        types.push(classify_component(&comp, &bond, &norm));
    }
    types.sort();
    types
}

fn classify_component(comp: &[usize], bond: &dyn Fn(usize, usize) -> i64, norm: &[Q]) -> SimpleType {
    let r = comp.len();
    let t = |f, r| SimpleType::new(f, r).expect("classified type is valid");
    if r == 1 {
        return t(Family::A, 1);
    }
    let mut degree: HashMap<usize, usize> = HashMap::new();
    let mut max_bond = 1;
    let mut double = None;
    for (x, &i) in comp.iter().enumerate() {
        for &j in &comp[x + 1..] {
            let b = bond(i, j);
            if b > 0 {
                *degree.entry(i).or_default() += 1;
                *degree.entry(j).or_default() += 1;
                if b > max_bond {
                    max_bond = b;
                }
                if b == 2 {
                    double = Some((i, j));
                }
            }
        }
    }
    if max_bond == 3 {
        return t(Family::G, 2);
    }
    if let Some((i, j)) = double {
        if r == 2 {
            return t(Family::B, 2);
        }
        let leaf = if degree[&i] == 1 {
            Some(i)
        } else if degree[&j] == 1 {
            Some(j)
        } else {
            None
        };
        return match leaf {
            None => t(Family::F, 4),
            Some(l) => {
                let other = if l == i { j } else { i };
                if norm[l] < norm[other] {
                    t(Family::B, r)
                } else {
                    t(Family::C, r)
                }
            }
        };
    }
    let Some(&branch) = comp.iter().find(|&&i| degree[&i] == 3) else {
        return t(Family::A, r);
    };
    // arm lengths from the branch node
    let mut arms = Vec::new();
    for &nb in comp {
        if nb == branch || bond(branch, nb) == 0 {
            continue;
        }
        let (mut prev, mut cur, mut len) = (branch, nb, 1);
        loop {
            let next = comp
                .iter()
                .copied()
                .find(|&x| x != prev && x != cur && bond(cur, x) > 0);
            match next {
                Some(x) => {
                    prev = cur;
                    cur = x;
                    len += 1;
                }
                None => break,
            }
        }
        arms.push(len);
    }
    arms.sort();
    match arms.as_slice() {
        [1, 1, _] => t(Family::D, r),
        _ => t(Family::E, r),
    }
}

/// Root coordinates rendered compactly; convenience for diagnostics.
pub fn describe_types(types: &[SimpleType], torus_rank: usize) -> String {
    let mut parts: Vec<String> = types.iter().map(ToString::to_string).collect();
    if torus_rank > 0 {
        parts.push(format!("T{torus_rank}"));
    }
    if parts.is_empty() {
        "trivial".into()
    } else {
        parts.join("+")
    }
}
