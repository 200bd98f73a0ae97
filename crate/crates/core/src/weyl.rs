//! Exact Weyl group machinery: reflections, orbits and the set of coset
//! representatives `{w : w·Φ_G⁺ ⊃ Φ_K⁺}`.

use std::collections::{BTreeSet, HashSet, VecDeque};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::linalg::{self, Matrix};
use crate::rootsystem::{pairing, PositiveSystem, RootSystem};
use crate::weight::{q, Weight, Q};

/// An element of W_G, identified by its linear action on the ambient space.
///
/// `word` lists simple-reflection indices with the element equal to
/// `s_{word[0]} s_{word[1]} ⋯`. Words are reduced but not canonical.
#[derive(Clone, Debug)]
pub struct WeylElement {
    action: Matrix,
    word: Vec<usize>,
    length: usize,
}

impl PartialEq for WeylElement {
    fn eq(&self, other: &Self) -> bool {
        self.action == other.action
    }
}

impl Eq for WeylElement {}

fn reflection_matrix(alpha: &Weight) -> Matrix {
    let d = alpha.dim();
    let n2 = alpha.dot(alpha);
    let mut m = linalg::identity(d);
    for i in 0..d {
        for j in 0..d {
            if !alpha.0[i].is_zero() && !alpha.0[j].is_zero() {
                m[i][j] -= q(2) * &alpha.0[i] * &alpha.0[j] / &n2;
            }
        }
    }
    m
}

impl WeylElement {
    pub fn identity(dim: usize) -> Self {
        WeylElement {
            action: linalg::identity(dim),
            word: Vec::new(),
            length: 0,
        }
    }

    pub fn simple_reflection(rs: &RootSystem, i: usize) -> Self {
        WeylElement {
            action: reflection_matrix(&rs.simple_roots()[i]),
            word: vec![i],
            length: 1,
        }
    }

    pub fn action(&self) -> &Matrix {
        &self.action
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    pub fn length(&self) -> usize {
        self.length
    }

    pub fn dim(&self) -> usize {
        self.action.len()
    }

    pub fn apply(&self, lambda: &Weight) -> Result<Weight> {
        lambda.check_dim(self.dim())?;
        Ok(self.act(lambda))
    }

    pub(crate) fn act(&self, lambda: &Weight) -> Weight {
        Weight(linalg::mul_vec(&self.action, &lambda.0))
    }

    /// The inverse; the action is orthogonal so this is the transpose.
    pub fn inverse(&self) -> Self {
        WeylElement {
            action: linalg::transpose(&self.action),
            word: self.word.iter().rev().copied().collect(),
            length: self.length,
        }
    }

    /// `self · s_i`.
    pub fn times_simple(&self, rs: &RootSystem, i: usize) -> Self {
        let alpha = &rs.simple_roots()[i];
        let image = self.act(alpha);
        let up = is_positive(rs, &image);
        let mut word = self.word.clone();
        word.push(i);
        // w s_α = w − (2/(α,α)) (w α) αᵀ
        let c = q(2) / alpha.dot(alpha);
        let mut action = self.action.clone();
        for (row, wa) in action.iter_mut().zip(&image.0) {
            if wa.is_zero() {
                continue;
            }
            let f = wa * &c;
            for (x, a) in row.iter_mut().zip(&alpha.0) {
                if !a.is_zero() {
                    *x -= &f * a;
                }
            }
        }
        WeylElement {
            action,
            word,
            length: if up { self.length + 1 } else { self.length - 1 },
        }
    }

    /// `self ∘ other`. The stored word is the concatenation and need not be
    /// reduced; the length is recomputed from inversions.
    pub fn compose(&self, rs: &RootSystem, other: &WeylElement) -> Self {
        let mut e = WeylElement {
            action: linalg::mul(&self.action, &other.action),
            word: self.word.iter().chain(&other.word).copied().collect(),
            length: 0,
        };
        e.length = e.inversion_count(rs);
        e
    }

    /// `|{α ∈ Φ_G⁺ : w·α ∈ −Φ_G⁺}|`.
    pub fn inversion_count(&self, rs: &RootSystem) -> usize {
        rs.positive_roots()
            .iter()
            .filter(|a| !is_positive(rs, &self.act(a)))
            .count()
    }

    /// Does the action permute the roots of `rs`?
    pub fn permutes_roots(&self, rs: &RootSystem) -> bool {
        rs.roots().iter().all(|a| rs.is_root(&self.act(a)))
    }
}

/// Sign of a root via the regular vector δ_G.
fn is_positive(rs: &RootSystem, root: &Weight) -> bool {
    root.dot(rs.weyl_vector()).is_positive()
}

/// `λ − ⟨λ, α^∨⟩ α`.
pub fn reflect(rs: &RootSystem, lambda: &Weight, alpha: &Weight) -> Result<Weight> {
    let c = rs.coroot_pairing(lambda, alpha)?;
    Ok(lambda - &alpha.scale(&c))
}

/// The W_G-orbit of `lambda`, refusing to grow beyond `cap` elements.
pub fn full_orbit(rs: &RootSystem, lambda: &Weight, cap: usize) -> Result<BTreeSet<Weight>> {
    lambda.check_dim(rs.ambient_dim())?;
    let mut seen = BTreeSet::new();
    let mut queue = VecDeque::new();
    seen.insert(lambda.clone());
    queue.push_back(lambda.clone());
    while let Some(mu) = queue.pop_front() {
        for a in rs.simple_roots() {
            let c = pairing(&mu, a);
            if c.is_zero() {
                continue;
            }
            let nu = &mu - &a.scale(&c);
            if !seen.contains(&nu) {
                if seen.len() >= cap {
                    return Err(Error::CapExceeded {
                        what: format!("orbit of {lambda}"),
                        needed: format!("> {cap}"),
                        cap: cap.to_string(),
                    });
                }
                seen.insert(nu.clone());
                queue.push_back(nu);
            }
        }
    }
    Ok(seen)
}

/// The dominant element of the orbit of `lambda` for the given positive
/// system, and an element of W mapping `lambda` to it.
///
/// The word of the returned element indexes the simple roots of
/// `positives`, which need not be those of G.
pub fn dominant_representative(
    rs: &RootSystem,
    lambda: &Weight,
    positives: &PositiveSystem,
) -> (Weight, WeylElement) {
    let mut mu = lambda.clone();
    let mut action = linalg::identity(rs.ambient_dim());
    let mut word = Vec::new();
    'outer: loop {
        for (i, a) in positives.simple_roots().iter().enumerate() {
            let c = pairing(&mu, a);
            if c.is_negative() {
                mu = &mu - &a.scale(&c);
                action = linalg::mul(&reflection_matrix(a), &action);
                word.insert(0, i);
                continue 'outer;
            }
        }
        break;
    }
    let mut w = WeylElement {
        action,
        word,
        length: 0,
    };
    w.length = w.inversion_count(rs);
    (mu, w)
}

/// All of W_G, by breadth-first search keyed on `w·δ_G`.
pub fn weyl_group_elements(rs: &RootSystem, cap: usize) -> Result<Vec<WeylElement>> {
    let order = rs.weyl_group_order();
    if order > cap as u128 {
        return Err(Error::CapExceeded {
            what: format!("Weyl group of {}", rs.simple_type()),
            needed: order.to_string(),
            cap: cap.to_string(),
        });
    }
    Ok(bfs(rs, |_| true))
}

/// Breadth-first search from the identity under right multiplication by
/// simple reflections, keeping only elements accepted by `keep`.
///
/// The search runs on the integer matrix of `w` in the basis of simple
/// roots; `keep` sees `2w·δ_G` in that basis. Rational actions are built
/// only for accepted elements.
fn bfs(rs: &RootSystem, keep: impl Fn(&[i64]) -> bool) -> Vec<WeylElement> {
    let r = rs.rank();
    let cartan = rs.cartan_matrix();
    let two_rho: Vec<i64> = rs
        .simple_root_coefficients(&rs.weyl_vector().scale(&q(2)))
        .expect("2δ is in the root lattice")
        .iter()
        .map(|c| c.to_integer().to_i64().unwrap())
        .collect();
    let mut mats: Vec<Vec<Vec<i64>>> = vec![(0..r)
        .map(|k| (0..r).map(|j| i64::from(k == j)).collect())
        .collect()];
    let mut images = vec![two_rho.clone()];
    let mut out = vec![WeylElement::identity(rs.ambient_dim())];
    let mut seen: HashSet<Vec<i64>> = HashSet::from([two_rho]);
    let mut head = 0;
    while head < out.len() {
        for i in 0..r {
            // (w s_i)·2δ = w·2δ − 2 w·α_i, and w·α_i is column i
            let image: Vec<i64> = (0..r)
                .map(|k| images[head][k] - 2 * mats[head][k][i])
                .collect();
            if seen.contains(&image) || !keep(&image) {
                continue;
            }
            seen.insert(image.clone());
            // column j of w s_i is w·α_j − A_ji w·α_i
            let m = &mats[head];
            let next: Vec<Vec<i64>> = (0..r)
                .map(|k| (0..r).map(|j| m[k][j] - cartan[j][i] * m[k][i]).collect())
                .collect();
            let elem = out[head].times_simple(rs, i);
            mats.push(next);
            images.push(image);
            out.push(elem);
        }
        head += 1;
    }
    out
}

/// The subset `W = {w ∈ W_G : w·Φ_G⁺ ⊃ Φ_K⁺}`.
#[derive(Clone, Debug)]
pub struct KostantSet {
    elements: Vec<WeylElement>,
}

impl KostantSet {
    pub fn elements(&self) -> &[WeylElement] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, WeylElement> {
        self.elements.iter()
    }
}

fn check_subsystem(rs: &RootSystem, k_positives: &PositiveSystem) -> Result<()> {
    for a in k_positives.positive_roots() {
        a.check_dim(rs.ambient_dim())?;
        if !rs.is_root(a) || !is_positive(rs, a) {
            return Err(Error::InvalidSubsystem(format!(
                "{a} is not a positive root of {}",
                rs.simple_type()
            )));
        }
    }
    Ok(())
}

/// Enumerates the Kostant set by breadth-first search over the lower set
/// `{w : ⟨w·δ_G, α′^∨⟩ > 0 for all K-simple α′}`.
pub fn enumerate_kostant_set(rs: &RootSystem, k_positives: &PositiveSystem) -> Result<KostantSet> {
    check_subsystem(rs, k_positives)?;
    // ⟨x, α′⟩ for x given by simple-root coefficients
    // scaled by a positive integer so that the sign test stays exact
    let probes: Vec<Vec<i64>> = k_positives
        .simple_roots()
        .iter()
        .map(|a| {
            let row: Vec<Q> = rs.simple_roots().iter().map(|s| s.dot(a)).collect();
            let l = row
                .iter()
                .fold(BigInt::one(), |acc, x| num_integer::lcm(acc, x.denom().clone()));
            row.iter()
                .map(|x| (x * Q::from_integer(l.clone())).to_integer().to_i64().unwrap())
                .collect()
        })
        .collect();
    let elements = bfs(rs, |image| {
        probes
            .iter()
            .all(|p| p.iter().zip(image).map(|(x, c)| x * c).sum::<i64>() > 0)
    });
    let expected = rs.weyl_group_order() / k_positives.weyl_group_order();
    if elements.len() as u128 != expected {
        return Err(Error::InvalidSubsystem(format!(
            "found {} coset representatives, expected |W_G|/|W_K| = {expected}",
            elements.len()
        )));
    }
    Ok(KostantSet { elements })
}

/// Literal filter of the whole group by `w·Φ_G⁺ ⊃ Φ_K⁺`; an oracle for
/// small groups.
pub fn kostant_set_bruteforce(
    rs: &RootSystem,
    k_positives: &PositiveSystem,
    cap: usize,
) -> Result<Vec<WeylElement>> {
    check_subsystem(rs, k_positives)?;
    let all = weyl_group_elements(rs, cap)?;
    Ok(all
        .into_iter()
        .filter(|w| {
            let image: HashSet<Weight> = rs.positive_roots().iter().map(|a| w.act(a)).collect();
            k_positives.positive_roots().iter().all(|a| image.contains(a))
        })
        .collect())
}

/// Right-coset membership test used by the search, exposed for testing.
pub fn in_kostant_set(w: &WeylElement, rs: &RootSystem, k_positives: &PositiveSystem) -> bool {
    let image = w.act(rs.weyl_vector());
    k_positives
        .simple_roots()
        .iter()
        .all(|a| image.dot(a).is_positive())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(s: &str) -> RootSystem {
        RootSystem::new(s.parse().unwrap())
    }

    fn k_system(rs: &RootSystem, simple: &[&[i64]]) -> PositiveSystem {
        PositiveSystem::from_simple_roots(
            simple.iter().map(|c| Weight::from_ints(c)).collect(),
            rs.ambient_dim(),
        )
        .unwrap()
    }

    #[test]
    fn reflections() {
        let b2 = rs("B2");
        let a = Weight::from_ints(&[1, -1]);
        assert_eq!(reflect(&b2, &a, &a).unwrap(), -&a);
        let d = b2.weyl_vector().clone();
        for th in b2.simple_roots() {
            assert_eq!(reflect(&b2, &d, th).unwrap(), &d - th);
        }
        assert_eq!(
            reflect(&b2, &d, &Weight::from_ints(&[0, 1])).unwrap(),
            Weight::from_fracs(&[(3, 2), (-1, 2)])
        );
        assert!(reflect(&b2, &d, &Weight::from_ints(&[1, 2])).is_err());
    }

    #[test]
    fn apply_identity_and_single_reflection() {
        let b2 = rs("B2");
        let d = b2.weyl_vector().clone();
        let id = WeylElement::identity(2);
        assert_eq!(id.apply(&d).unwrap(), d);
        let s2 = WeylElement::simple_reflection(&b2, 1);
        assert_eq!(s2.apply(&d).unwrap(), Weight::from_fracs(&[(3, 2), (-1, 2)]));
        assert!(id.apply(&Weight::zero(3)).is_err());
    }

    #[test]
    fn group_elements_are_orthogonal_root_permutations() {
        for t in ["A2", "B2", "G2", "B3", "A3"] {
            let r = rs(t);
            let all = weyl_group_elements(&r, 2000).unwrap();
            assert_eq!(all.len() as u128, r.weyl_group_order(), "{t}");
            for w in &all {
                assert!(w.permutes_roots(&r));
                assert_eq!(w.length(), w.inversion_count(&r));
                assert_eq!(w.length(), w.word().len());
                let prod = linalg::mul(w.action(), w.inverse().action());
                assert_eq!(prod, linalg::identity(r.ambient_dim()));
            }
        }
    }

    #[test]
    fn kostant_set_examples() {
        let b2 = rs("B2");
        let full = enumerate_kostant_set(&b2, b2.positive_system()).unwrap();
        assert_eq!(full.len(), 1);
        assert_eq!(full.elements()[0], WeylElement::identity(2));

        let d2 = k_system(&b2, &[&[1, -1], &[1, 1]]);
        let w = enumerate_kostant_set(&b2, &d2).unwrap();
        assert_eq!(w.len(), 2);
        assert!(w.elements().contains(&WeylElement::simple_reflection(&b2, 1)));
        let brute = kostant_set_bruteforce(&b2, &d2, 2000).unwrap();
        assert_eq!(brute.len(), 2);

        let a2 = rs("A2");
        let k = k_system(&a2, &[&[1, -1, 0]]);
        assert_eq!(enumerate_kostant_set(&a2, &k).unwrap().len(), 3);
        assert_eq!(kostant_set_bruteforce(&a2, &k, 2000).unwrap().len(), 3);
    }

    #[test]
    fn kostant_rejects_non_positive_subsystem() {
        let b2 = rs("B2");
        let bad = k_system(&b2, &[&[-1, 1]]);
        assert!(matches!(
            enumerate_kostant_set(&b2, &bad),
            Err(Error::InvalidSubsystem(_))
        ));
    }

    #[test]
    fn orbits() {
        let b2 = rs("B2");
        assert_eq!(full_orbit(&b2, &Weight::zero(2), 10).unwrap().len(), 1);
        assert_eq!(full_orbit(&b2, b2.weyl_vector(), 100).unwrap().len(), 8);
        let e1 = full_orbit(&b2, &Weight::from_ints(&[1, 0]), 100).unwrap();
        let expect: BTreeSet<Weight> = [[1, 0], [-1, 0], [0, 1], [0, -1]]
            .iter()
            .map(|c| Weight::from_ints(c))
            .collect();
        assert_eq!(e1, expect);
        assert!(matches!(
            full_orbit(&b2, b2.weyl_vector(), 5),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn dominant_representatives() {
        let b2 = rs("B2");
        let pos = b2.positive_system();
        let d = b2.weyl_vector().clone();
        let (mu, w) = dominant_representative(&b2, &d, pos);
        assert_eq!(mu, d);
        assert_eq!(w, WeylElement::identity(2));

        let x = Weight::from_fracs(&[(1, 2), (-1, 2)]);
        let (mu, w) = dominant_representative(&b2, &x, pos);
        assert_eq!(mu, Weight::from_fracs(&[(1, 2), (1, 2)]));
        assert_eq!(w.apply(&x).unwrap(), mu);
        assert_eq!(w.length(), 1);

        let (mu, w) = dominant_representative(&b2, &-&d, pos);
        assert_eq!(mu, d);
        assert_eq!(w.length(), b2.positive_roots().len());
    }
}
