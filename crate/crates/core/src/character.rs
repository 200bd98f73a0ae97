//! Integer fast path for characters.
//!
//! Weights are stored as doubled Dynkin labels of G, so every element of
//! `½·P(G)` (in particular δ_K and δ_n of any equal-rank pair) has integer
//! coordinates. Roots are stored as plain labels. The scalar product is an
//! integer multiple of the Killing form; only ratios and comparisons of it
//! are ever used here.

use std::collections::{HashMap, HashSet, VecDeque};
use std::rc::Rc;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive};

use crate::error::{Error, Result};
use crate::linalg;
use crate::rootsystem::{PositiveSystem, RootSystem};
use crate::weight::{frac, q, Weight, Q};
use crate::weyl::WeylElement;

pub(crate) type Labels = Vec<i64>;

/// The weight lattice of G in doubled-label coordinates.
#[derive(Clone, Debug)]
pub(crate) struct Lattice {
    rank: usize,
    /// Gram matrix of the fundamental weights, scaled to integers.
    gram: Vec<Vec<i64>>,
    fundamental: Vec<Weight>,
    simple: Vec<Weight>,
    ambient: usize,
}

impl Lattice {
    pub fn new(rs: &RootSystem) -> Self {
        let om = rs.fundamental_weights();
        let r = om.len();
        let raw: Vec<Vec<Q>> = (0..r)
            .map(|i| (0..r).map(|j| om[i].dot(&om[j])).collect())
            .collect();
        let lcm = raw
            .iter()
            .flatten()
            .fold(BigInt::one(), |acc, x| num_integer::lcm(acc, x.denom().clone()));
        let gram = raw
            .iter()
            .map(|row| {
                row.iter()
                    .map(|x| (x * Q::from_integer(lcm.clone())).to_integer().to_i64().unwrap())
                    .collect()
            })
            .collect();
        Lattice {
            rank: r,
            gram,
            fundamental: om.to_vec(),
            simple: rs.simple_roots().to_vec(),
            ambient: rs.ambient_dim(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Doubled labels of `w`, or `None` if `2w` is not integral for G or
    /// `w` leaves the span of the roots.
    pub fn encode(&self, w: &Weight) -> Option<Labels> {
        if w.dim() != self.ambient {
            return None;
        }
        let mut out = Vec::with_capacity(self.rank);
        for a in &self.simple {
            let v = q(4) * w.dot(a) / a.dot(a);
            if !v.is_integer() {
                return None;
            }
            out.push(v.to_integer().to_i64()?);
        }
        (self.decode(&out) == *w).then_some(out)
    }

    pub fn decode(&self, x: &[i64]) -> Weight {
        let mut w = Weight::zero(self.ambient);
        for (&c, om) in x.iter().zip(&self.fundamental) {
            if c != 0 {
                w += &om.scale(&frac(c, 2));
            }
        }
        w
    }

    /// Plain (undoubled) labels of a root.
    pub fn encode_root(&self, a: &Weight) -> Labels {
        let x = self.encode(a).expect("roots are integral");
        x.iter().map(|c| c / 2).collect()
    }

    fn gram_times(&self, y: &[i64]) -> Labels {
        (0..self.rank)
            .map(|i| (0..self.rank).map(|j| self.gram[i][j] * y[j]).sum())
            .collect()
    }

    /// `s_i` of G applied to doubled labels; the doubled pairing with
    /// `α_i^∨` is just the i-th coordinate.
    pub fn reflect_simple(&self, x: &mut [i64], i: usize, cartan: &[Vec<i64>]) {
        let c = x[i];
        if c != 0 {
            for (j, xj) in x.iter_mut().enumerate() {
                *xj -= c * cartan[i][j];
            }
        }
    }
}

fn dot(x: &[i64], y: &[i64]) -> i64 {
    x.iter().zip(y).map(|(a, b)| a * b).sum()
}

/// A positive system (of G or of K) in lattice coordinates.
#[derive(Clone, Debug)]
pub(crate) struct LabelSystem {
    gram: Vec<Vec<i64>>,
    simple: Vec<Labels>,
    simple_g: Vec<Labels>,
    simple_norm: Vec<i64>,
    positive: Vec<Labels>,
    positive_g: Vec<Labels>,
    positive_norm: Vec<i64>,
    heights: Vec<i64>,
    /// δ in doubled coordinates, i.e. the sum of the positive roots.
    rho2: Labels,
    /// `coeff_num / coeff_den` maps the vector of scalar products with the
    /// simple roots to simple-root coefficients.
    coeff_num: Vec<Vec<i128>>,
    coeff_den: i128,
}

impl LabelSystem {
    pub fn new(lat: &Lattice, sys: &PositiveSystem) -> Self {
        let simple: Vec<Labels> = sys.simple_roots().iter().map(|a| lat.encode_root(a)).collect();
        let positive: Vec<Labels> = sys.positive_roots().iter().map(|a| lat.encode_root(a)).collect();
        let simple_g: Vec<Labels> = simple.iter().map(|b| lat.gram_times(b)).collect();
        let positive_g: Vec<Labels> = positive.iter().map(|b| lat.gram_times(b)).collect();
        let simple_norm = simple.iter().zip(&simple_g).map(|(b, g)| dot(b, g)).collect();
        let positive_norm = positive.iter().zip(&positive_g).map(|(b, g)| dot(b, g)).collect();
        let heights = sys.coefficients().iter().map(|c| c.iter().sum()).collect();
        let mut rho2 = vec![0; lat.rank()];
        for b in &positive {
            for (x, y) in rho2.iter_mut().zip(b) {
                *x += y;
            }
        }
        let l = simple.len();
        let m: linalg::Matrix = (0..l)
            .map(|i| (0..l).map(|j| q(dot(&simple[i], &simple_g[j]))).collect())
            .collect();
        let inv = linalg::inverse(&m).unwrap_or_default();
        let den = inv
            .iter()
            .flatten()
            .fold(BigInt::one(), |acc, x| num_integer::lcm(acc, x.denom().clone()));
        let coeff_num = inv
            .iter()
            .map(|row| {
                row.iter()
                    .map(|x| (x * Q::from_integer(den.clone())).to_integer().to_i128().unwrap())
                    .collect()
            })
            .collect();
        LabelSystem {
            gram: lat.gram.clone(),
            simple,
            simple_g,
            simple_norm,
            positive,
            positive_g,
            positive_norm,
            heights,
            rho2,
            coeff_num,
            coeff_den: den.to_i128().unwrap(),
        }
    }

    fn ip(&self, x: &[i64], y: &[i64]) -> i64 {
        let mut s = 0;
        for (i, &xi) in x.iter().enumerate() {
            if xi != 0 {
                s += xi * dot(&self.gram[i], y);
            }
        }
        s
    }

    pub fn rho2(&self) -> &[i64] {
        &self.rho2
    }

    /// Doubled pairing `2⟨x, β_i^∨⟩` with the i-th simple root.
    fn pair2(&self, x: &[i64], i: usize) -> i64 {
        2 * dot(x, &self.simple_g[i]) / self.simple_norm[i]
    }

    pub fn is_dominant(&self, x: &[i64]) -> bool {
        self.simple_g.iter().all(|g| dot(x, g) >= 0)
    }

    pub fn dominant_conjugate(&self, x: &[i64]) -> Labels {
        let mut y = x.to_vec();
        'outer: loop {
            for i in 0..self.simple.len() {
                let p = self.pair2(&y, i);
                if p < 0 {
                    for (yj, bj) in y.iter_mut().zip(&self.simple[i]) {
                        *yj -= p * bj;
                    }
                    continue 'outer;
                }
            }
            return y;
        }
    }

    /// Coefficients of the true difference `(x − y)/2` in the simple
    /// roots, if it is an integer combination of them.
    fn root_coefficients(&self, x: &[i64], y: &[i64]) -> Option<Vec<i64>> {
        let d: Labels = x.iter().zip(y).map(|(a, b)| a - b).collect();
        let b: Vec<i128> = self.simple_g.iter().map(|g| i128::from(dot(&d, g))).collect();
        let mut back = vec![0i64; d.len()];
        let mut coeffs = Vec::with_capacity(self.simple.len());
        for (row, root) in self.coeff_num.iter().zip(&self.simple) {
            let s: i128 = row.iter().zip(&b).map(|(a, c)| a * c).sum();
            if s % (2 * self.coeff_den) != 0 {
                return None;
            }
            let c = (s / (2 * self.coeff_den)) as i64;
            for (z, r) in back.iter_mut().zip(root) {
                *z += 2 * c * r;
            }
            coeffs.push(c);
        }
        (back == d).then_some(coeffs)
    }

    /// `x ≥ y`: `x − y` is a nonnegative integer combination of simple roots.
    pub fn ge(&self, x: &[i64], y: &[i64]) -> bool {
        self.root_coefficients(x, y)
            .is_some_and(|c| c.iter().all(|&v| v >= 0))
    }

    /// `x − y` lies in the root lattice.
    pub fn same_coset(&self, x: &[i64], y: &[i64]) -> bool {
        self.root_coefficients(x, y).is_some()
    }

    fn above_any(&self, x: &[i64], floors: &[Labels]) -> bool {
        floors.is_empty() || floors.iter().any(|f| self.ge(x, f))
    }

    /// Weyl dimension of the irreducible with doubled highest weight `x`
    /// (torus characters contribute nothing).
    #[cfg(test)]
    pub fn dimension(&self, x: &[i64]) -> num_bigint::BigUint {
        let mut num = BigInt::one();
        let mut den = BigInt::one();
        for g in &self.positive_g {
            num *= dot(x, g) + dot(&self.rho2, g);
            den *= dot(&self.rho2, g);
        }
        (num / den).to_biguint().unwrap_or_default()
    }

    /// Dominant part of the character of the irreducible with doubled
    /// highest weight `top`, restricted to weights above one of `floors`
    /// (all weights when `floors` is empty), by Freudenthal's recursion.
    pub fn dominant_character(&self, top: &[i64], floors: &[Labels]) -> Vec<(Labels, u64)> {
        if !self.above_any(top, floors) {
            return Vec::new();
        }
        let mut order: Vec<(i64, Labels)> = vec![(0, top.to_vec())];
        let mut seen: HashSet<Labels> = HashSet::from([top.to_vec()]);
        let mut queue = VecDeque::from([(0i64, top.to_vec())]);
        while let Some((depth, mu)) = queue.pop_front() {
            for (a, h) in self.positive.iter().zip(&self.heights) {
                let nu: Labels = mu.iter().zip(a).map(|(m, b)| m - 2 * b).collect();
                if !seen.contains(&nu) && self.is_dominant(&nu) && self.above_any(&nu, floors) {
                    seen.insert(nu.clone());
                    order.push((depth + h, nu.clone()));
                    queue.push_back((depth + h, nu));
                }
            }
        }
        order.sort();

        let mut mult: HashMap<Labels, u64> = HashMap::new();
        let mut out = Vec::with_capacity(order.len());
        for (_, mu) in order {
            if mu == top {
                mult.insert(mu.clone(), 1);
                out.push((mu, 1));
                continue;
            }
            let mut num: i128 = 0;
            for (a, (ag, an)) in self.positive.iter().zip(self.positive_g.iter().zip(&self.positive_norm)) {
                let base = dot(&mu, ag);
                let mut nu = mu.clone();
                let mut k = 1i64;
                loop {
                    for (x, y) in nu.iter_mut().zip(a) {
                        *x += 2 * y;
                    }
                    let Some(&m) = mult.get(&self.dominant_conjugate(&nu)) else {
                        break;
                    };
                    num += i128::from(m) * i128::from(base + 2 * k * an);
                    k += 1;
                }
            }
            // (Λ − M, Λ + M + 2P) with Λ, M, P doubled
            let diff: Labels = top.iter().zip(&mu).map(|(a, b)| a - b).collect();
            let sum: Labels = (0..mu.len()).map(|i| top[i] + mu[i] + 2 * self.rho2[i]).collect();
            let den = i128::from(self.ip(&diff, &sum));
            let m = 4 * num / den;
            debug_assert_eq!(4 * num % den, 0);
            debug_assert!(m > 0);
            mult.insert(mu.clone(), m as u64);
            out.push((mu, m as u64));
        }
        out
    }
}

/// G and K in one lattice, together with the Kostant set as words in the
/// simple reflections of G.
#[derive(Clone, Debug)]
pub(crate) struct PairModel {
    pub lat: Lattice,
    pub g: LabelSystem,
    pub k: LabelSystem,
    cartan: Vec<Vec<i64>>,
    kostant_words: Vec<Vec<usize>>,
}

impl PairModel {
    pub fn new(rs: &RootSystem, k: &PositiveSystem, kostant: &[WeylElement]) -> Self {
        let lat = Lattice::new(rs);
        PairModel {
            g: LabelSystem::new(&lat, rs.positive_system()),
            k: LabelSystem::new(&lat, k),
            cartan: rs.cartan_matrix().to_vec(),
            kostant_words: kostant.iter().map(|w| w.word().to_vec()).collect(),
            lat,
        }
    }

    /// `w·x` for `w = s_{i_1} ⋯ s_{i_k}`.
    pub fn apply_word(&self, word: &[usize], x: &[i64]) -> Labels {
        let mut y = x.to_vec();
        for &i in word.iter().rev() {
            self.lat.reflect_simple(&mut y, i, &self.cartan);
        }
        y
    }

    /// The W_G-orbit of `x`.
    pub fn g_orbit(&self, x: &[i64]) -> Vec<Labels> {
        let start = self.g.dominant_conjugate(x);
        let mut seen = HashSet::from([start.clone()]);
        let mut out = vec![start.clone()];
        let mut queue = VecDeque::from([start]);
        while let Some(y) = queue.pop_front() {
            for i in 0..self.lat.rank() {
                if y[i] == 0 {
                    continue;
                }
                let mut z = y.clone();
                self.lat.reflect_simple(&mut z, i, &self.cartan);
                if seen.insert(z.clone()) {
                    out.push(z.clone());
                    queue.push_back(z);
                }
            }
        }
        out
    }

    /// K-dominant part of the restriction of a G-character given by its
    /// dominant weights. The K-dominant elements of `W_G·ν` are exactly the
    /// `w·ν` with `w` in the Kostant set.
    pub fn restrict(&self, g_dominant: &[(Labels, u64)], floors: &[Labels]) -> HashMap<Labels, i64> {
        let mut out: HashMap<Labels, i64> = HashMap::new();
        let mut images: HashSet<Labels> = HashSet::new();
        for (nu, m) in g_dominant {
            images.clear();
            for word in &self.kostant_words {
                let y = self.apply_word(word, nu);
                if self.k.above_any(&y, floors) && images.insert(y.clone()) {
                    *out.entry(y).or_default() += *m as i64;
                }
            }
        }
        out
    }
}

/// Highest-weight extraction for characters of K, with a cache of
/// irreducible characters truncated to the fixed set of floors.
pub(crate) struct Decomposer<'a> {
    k: &'a LabelSystem,
    floors: Vec<Labels>,
    cache: HashMap<Labels, Rc<Vec<(Labels, u64)>>>,
}

impl<'a> Decomposer<'a> {
    pub fn new(k: &'a LabelSystem, floors: Vec<Labels>) -> Self {
        Decomposer {
            k,
            floors,
            cache: HashMap::new(),
        }
    }

    fn irreducible(&mut self, top: &[i64]) -> Rc<Vec<(Labels, u64)>> {
        if let Some(c) = self.cache.get(top) {
            return Rc::clone(c);
        }
        let c = Rc::new(self.k.dominant_character(top, &self.floors));
        self.cache.insert(top.to_vec(), Rc::clone(&c));
        c
    }

    /// Decomposes a K-dominant character (truncated to the floors) into
    /// irreducibles, returned sorted by highest weight.
    pub fn decompose(&mut self, mut ch: HashMap<Labels, i64>) -> Result<Vec<(Labels, u64)>> {
        let mut out = Vec::new();
        ch.retain(|_, m| *m != 0);
        while !ch.is_empty() {
            let rho2 = self.k.rho2().to_vec();
            let (top, count) = ch
                .iter()
                .map(|(mu, &m)| {
                    let s: Labels = mu.iter().zip(&rho2).map(|(a, b)| a + b).collect();
                    (self.k.ip(&s, &s), mu, m)
                })
                .max_by(|a, b| a.0.cmp(&b.0).then_with(|| a.1.cmp(b.1)))
                .map(|(_, mu, m)| (mu.clone(), m))
                .expect("nonempty");
            if count < 0 || !self.k.is_dominant(&top) {
                return Err(Error::InconsistentCharacter(format!(
                    "leading weight {top:?} has multiplicity {count}"
                )));
            }
            let irr = self.irreducible(&top);
            if irr.is_empty() {
                return Err(Error::InconsistentCharacter(format!(
                    "leading weight {top:?} lies below every floor"
                )));
            }
            for (nu, m) in irr.iter() {
                let e = ch.entry(nu.clone()).or_default();
                *e -= count * (*m as i64);
                if *e < 0 {
                    return Err(Error::InconsistentCharacter(format!(
                        "weight {nu:?} would get multiplicity {e}"
                    )));
                }
                if *e == 0 {
                    ch.remove(nu);
                }
            }
            out.push((top, count as u64));
        }
        out.sort();
        Ok(out)
    }
}
