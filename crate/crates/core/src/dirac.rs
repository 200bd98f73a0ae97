//! Spin representation of K, the first eigenvalue of the Dirac operator and
//! the spectrum of its square.
//!
//! All scalar products use the Killing normalization of G.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigUint;
use num_traits::Zero;

use crate::character::{Decomposer, Labels, PairModel};
use crate::error::{Error, Result};
use crate::rootsystem::{weyl_dimension_unchecked, RootSystem};
use crate::symmspace::SymmetricPair;
use crate::weight::{frac, q, Weight, Q};
use crate::weyl::{enumerate_kostant_set, WeylElement};

/// Limits for the verification oracles. The eigenvalue formula itself is
/// not capped.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Caps {
    /// Largest `|Φ_n⁺|` for exhaustive spin-weight enumeration.
    pub spin_weights: usize,
    /// Largest dimension of a G-irreducible that is expanded into weights.
    pub dimension: u64,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            spin_weights: 20,
            dimension: 1_000_000,
        }
    }
}

/// A K-irreducible summand of the spin representation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpinComponent {
    pub w: WeylElement,
    /// `w·δ_G − δ_K`, the highest weight.
    pub beta: Weight,
    pub norm2: Q,
    pub dim: BigUint,
}

/// An eigenvalue of D² contributed by one G-irreducible.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpectrumLine {
    pub eigenvalue: Q,
    pub g_highest_weight: Weight,
    pub casimir: Q,
    pub hom_dim: u64,
    pub multiplicity: BigUint,
}

fn require_spin(pair: &SymmetricPair) -> Result<()> {
    match pair.spin_diagnostic() {
        Some(d) => Err(Error::NotSpin(d)),
        None => Ok(()),
    }
}

fn cap_error(what: String, needed: impl ToString, cap: impl ToString) -> Error {
    Error::CapExceeded {
        what,
        needed: needed.to_string(),
        cap: cap.to_string(),
    }
}

/// Components `β_w = w·δ_G − δ_K` for w in the Kostant set, sorted by norm
/// and then by β in decreasing lexicographic order.
pub fn spin_decomposition(pair: &SymmetricPair) -> Result<Vec<SpinComponent>> {
    require_spin(pair)?;
    let g = pair.g();
    let ks = enumerate_kostant_set(g, pair.k_system())?;
    let mut out: Vec<SpinComponent> = ks
        .iter()
        .map(|w| {
            let beta = &w.act(pair.delta_g()) - pair.delta_k();
            SpinComponent {
                norm2: g.killing_norm2(&beta),
                dim: weyl_dimension_unchecked(&beta, pair.k_system()),
                beta,
                w: w.clone(),
            }
        })
        .collect();
    out.sort_by(|a, b| a.norm2.cmp(&b.norm2).then_with(|| b.beta.cmp(&a.beta)));
    Ok(out)
}

/// `a ≺ b` (or equal): `b − a` is a nonnegative integer combination of the
/// simple roots of G.
pub fn precedes(g: &RootSystem, a: &Weight, b: &Weight) -> bool {
    g.dominance_le(a, b)
}

/// Minimal-norm components that are maximal for ≺ among the minima.
pub fn maximal_minima<'a>(g: &RootSystem, components: &'a [SpinComponent]) -> Vec<&'a SpinComponent> {
    let Some(min) = components.iter().map(|c| &c.norm2).min() else {
        return Vec::new();
    };
    let minima: Vec<&SpinComponent> = components.iter().filter(|c| &c.norm2 == min).collect();
    minima
        .iter()
        .filter(|c| {
            !minima
                .iter()
                .any(|d| d.beta != c.beta && precedes(g, &c.beta, &d.beta))
        })
        .copied()
        .collect()
}

/// The component `w₀`: minimal norm, ≺-maximal among the minima, and the
/// lexicographically largest β if several are ≺-incomparable.
pub fn select_w0<'a>(g: &RootSystem, components: &'a [SpinComponent]) -> Option<&'a SpinComponent> {
    maximal_minima(g, components)
        .into_iter()
        .max_by(|a, b| a.beta.cmp(&b.beta))
}

/// `w₀⁻¹·β_{w₀} = δ_G − w₀⁻¹·δ_K`.
pub fn lifted_weight(component: &SpinComponent) -> Weight {
    component.w.inverse().act(&component.beta)
}

/// Whether `w₀⁻¹·β_{w₀}` is G-dominant.
pub fn is_lift_dominant(pair: &SymmetricPair, component: &SpinComponent) -> bool {
    let g = pair.g();
    g.is_dominant(&lifted_weight(component), g.positive_system())
        .unwrap_or(false)
}

fn n_over(pair: &SymmetricPair, d: i64) -> Q {
    frac(pair.dim() as i64, d)
}

/// `λ₁² = 2·min‖β_w‖² + n/8`.
pub fn first_eigenvalue_squared(pair: &SymmetricPair) -> Result<Q> {
    let comps = spin_decomposition(pair)?;
    let min = comps
        .iter()
        .map(|c| c.norm2.clone())
        .min()
        .unwrap_or_else(Q::zero);
    Ok(q(2) * min + n_over(pair, 8))
}

/// `2‖δ_G‖² + 2‖δ_K‖² − 4·max⟨w·δ_G, δ_K⟩ + n/8`, maximum over the
/// Kostant set.
pub fn first_eigenvalue_squared_max_pairing(pair: &SymmetricPair) -> Result<Q> {
    require_spin(pair)?;
    let g = pair.g();
    let ks = enumerate_kostant_set(g, pair.k_system())?;
    let max = ks
        .iter()
        .map(|w| g.killing(&w.act(pair.delta_g()), pair.delta_k()))
        .max()
        .unwrap_or_else(Q::zero);
    Ok(q(2) * g.killing_norm2(pair.delta_g()) + q(2) * g.killing_norm2(pair.delta_k()) - q(4) * max
        + n_over(pair, 8))
}

fn check_g_dominant_integral(g: &RootSystem, lambda: &Weight) -> Result<()> {
    lambda.check_dim(g.ambient_dim())?;
    if !g.is_integral(lambda) {
        return Err(Error::NotIntegral(lambda.to_string()));
    }
    if !g.is_dominant(lambda, g.positive_system())? {
        return Err(Error::NotDominant(lambda.to_string()));
    }
    if g.simple_root_coefficients(lambda).is_none() {
        return Err(Error::NotIntegral(format!("{lambda} leaves the span of the roots")));
    }
    Ok(())
}

/// `‖λ + δ_G‖² − ‖δ_G‖²`.
pub fn casimir_eigenvalue(g: &RootSystem, lambda: &Weight) -> Result<Q> {
    check_g_dominant_integral(g, lambda)?;
    Ok(casimir_unchecked(g, lambda))
}

fn casimir_unchecked(g: &RootSystem, lambda: &Weight) -> Q {
    let d = g.weyl_vector();
    g.killing_norm2(&(lambda + d)) - g.killing_norm2(d)
}

/// All `δ_n − Σ_{β∈A} β` for `A ⊆ Φ_n⁺`, as a multiset.
pub fn spin_weights_bruteforce(pair: &SymmetricPair, cap: usize) -> Result<Vec<Weight>> {
    let roots = pair.noncompact_positives();
    if roots.len() > cap {
        return Err(cap_error(
            "spin weight enumeration (|Φ_n⁺|)".into(),
            roots.len(),
            cap,
        ));
    }
    let mut out = Vec::with_capacity(1 << roots.len());
    out.push(pair.delta_n().clone());
    for mask in 1usize..(1 << roots.len()) {
        let low = mask.trailing_zeros() as usize;
        let w = &out[mask & (mask - 1)] - &roots[low];
        out.push(w);
    }
    Ok(out)
}

fn model(pair: &SymmetricPair) -> Result<PairModel> {
    let ks = enumerate_kostant_set(pair.g(), pair.k_system())?;
    Ok(PairModel::new(pair.g(), pair.k_system(), ks.elements()))
}

fn encode(m: &PairModel, w: &Weight) -> Result<Labels> {
    m.lat
        .encode(w)
        .ok_or_else(|| Error::NotIntegral(format!("{w} is not in the half weight lattice")))
}

/// K-irreducible content of a W_K-invariant multiset of weights, by
/// repeated extraction of the highest weight of largest `‖μ + δ_K‖`.
pub fn decompose_into_k_irreps(pair: &SymmetricPair, weights: &[Weight]) -> Result<Vec<(Weight, u64)>> {
    let m = model(pair)?;
    let mut ch: HashMap<Labels, i64> = HashMap::new();
    for w in weights {
        let x = encode(&m, w)?;
        if m.k.is_dominant(&x) {
            *ch.entry(x).or_default() += 1;
        }
    }
    let parts = Decomposer::new(&m.k, Vec::new()).decompose(ch)?;
    let mut out: Vec<(Weight, u64)> = parts.into_iter().map(|(x, c)| (m.lat.decode(&x), c)).collect();
    out.sort();
    Ok(out)
}

/// Same result as decomposing [`spin_weights_bruteforce`], without
/// materializing the weights: all `2^{|Φ_n⁺|}` subset sums are visited in
/// integer form and only the K-dominant ones are kept.
pub fn spin_oracle_decomposition(pair: &SymmetricPair, cap: usize) -> Result<Vec<(Weight, u64)>> {
    let roots = pair.noncompact_positives();
    if roots.len() > cap {
        return Err(cap_error(
            "spin weight enumeration (|Φ_n⁺|)".into(),
            roots.len(),
            cap,
        ));
    }
    let m = model(pair)?;
    let start = encode(&m, pair.delta_n())?;
    let doubled: Vec<Labels> = roots
        .iter()
        .map(|a| m.lat.encode(a).expect("roots are integral"))
        .collect();
    let mut ch: HashMap<Labels, i64> = HashMap::new();
    // Gray code: consecutive subsets differ by one root
    let mut x = start;
    let mut inside = vec![false; roots.len()];
    for step in 0u64..(1u64 << roots.len()) {
        if step > 0 {
            let bit = step.trailing_zeros() as usize;
            let sign = if inside[bit] { 1 } else { -1 };
            inside[bit] = !inside[bit];
            for (a, b) in x.iter_mut().zip(&doubled[bit]) {
                *a += sign * b;
            }
        }
        if m.k.is_dominant(&x) {
            *ch.entry(x.clone()).or_default() += 1;
        }
    }
    let parts = Decomposer::new(&m.k, Vec::new()).decompose(ch)?;
    let mut out: Vec<(Weight, u64)> = parts.into_iter().map(|(x, c)| (m.lat.decode(&x), c)).collect();
    out.sort();
    Ok(out)
}

fn checked_dimension(g: &RootSystem, lambda: &Weight, cap: u64) -> Result<BigUint> {
    let dim = weyl_dimension_unchecked(lambda, g.positive_system());
    if dim > BigUint::from(cap) {
        return Err(cap_error(format!("dimension of V({lambda})"), &dim, cap));
    }
    Ok(dim)
}

/// Every weight of the G-irreducible with highest weight `lambda`, with
/// its multiplicity.
pub fn freudenthal_multiplicities(g: &RootSystem, lambda: &Weight, cap: u64) -> Result<BTreeMap<Weight, u64>> {
    check_g_dominant_integral(g, lambda)?;
    checked_dimension(g, lambda, cap)?;
    let m = PairModel::new(g, g.positive_system(), &[]);
    let top = encode(&m, lambda)?;
    let mut out = BTreeMap::new();
    for (x, mult) in m.g.dominant_character(&top, &[]) {
        for y in m.g_orbit(&x) {
            out.insert(m.lat.decode(&y), mult);
        }
    }
    Ok(out)
}

/// Multiplicity of the K-irreducible `mu` in the restriction of the
/// G-irreducible `lambda`.
pub fn branching_multiplicity(pair: &SymmetricPair, lambda: &Weight, mu: &Weight, cap: u64) -> Result<u64> {
    let g = pair.g();
    check_g_dominant_integral(g, lambda)?;
    mu.check_dim(g.ambient_dim())?;
    if !g.is_dominant(mu, pair.k_system())? {
        return Err(Error::NotDominant(mu.to_string()));
    }
    checked_dimension(g, lambda, cap)?;
    let m = model(pair)?;
    let top = encode(&m, lambda)?;
    let target = encode(&m, mu)?;
    let floors = vec![target.clone()];
    let gch = m.g.dominant_character(&top, &[]);
    let kch = m.restrict(&gch, &floors);
    let parts = Decomposer::new(&m.k, floors).decompose(kch)?;
    Ok(parts
        .into_iter()
        .find(|(x, _)| *x == target)
        .map_or(0, |(_, c)| c))
}

/// Every eigenvalue of D² up to `cutoff`, one line per G-irreducible
/// `V(λ)` with `Hom_K(V(λ), Σ) ≠ 0`, sorted by eigenvalue and then λ.
pub fn spectrum_below(pair: &SymmetricPair, cutoff: &Q, cap: u64) -> Result<Vec<SpectrumLine>> {
    let comps = spin_decomposition(pair)?;
    let g = pair.g();
    let m = model(pair)?;
    let betas: Vec<Labels> = comps
        .iter()
        .map(|c| encode(&m, &c.beta))
        .collect::<Result<_>>()?;
    let shift = n_over(pair, 16);
    let bound = cutoff - &shift;

    let mut candidates = Vec::new();
    let mut labels = vec![0i64; g.rank()];
    scan(g, &bound, 0, &mut labels, &mut candidates);

    let mut decomposer = Decomposer::new(&m.k, betas.clone());
    let mut out = Vec::new();
    for (lambda, casimir) in candidates {
        let top = encode(&m, &lambda)?;
        // every weight of V(λ), hence every β it can contain, is λ minus
        // an element of the root lattice
        if !m.g.same_coset(&top, &betas[0]) {
            continue;
        }
        let dim = checked_dimension(g, &lambda, cap)?;
        let gch = m.g.dominant_character(&top, &[]);
        let kch = m.restrict(&gch, &betas);
        let parts = decomposer.decompose(kch)?;
        let hom: u64 = parts
            .iter()
            .filter(|(x, _)| betas.contains(x))
            .map(|(_, c)| c)
            .sum();
        if hom > 0 {
            out.push(SpectrumLine {
                eigenvalue: &casimir + &shift,
                g_highest_weight: lambda,
                casimir,
                hom_dim: hom,
                multiplicity: dim * BigUint::from(hom),
            });
        }
    }
    out.sort_by(|a, b| {
        a.eigenvalue
            .cmp(&b.eigenvalue)
            .then_with(|| a.g_highest_weight.cmp(&b.g_highest_weight))
    });
    Ok(out)
}

/// Depth-first scan over `λ = Σ c_i ϖ_i` with `casimir(λ) ≤ bound`. The
/// Casimir value is increasing in each coordinate, so each coordinate is
/// raised until the bound is crossed.
fn scan(g: &RootSystem, bound: &Q, i: usize, labels: &mut Vec<i64>, out: &mut Vec<(Weight, Q)>) {
    if i == labels.len() {
        let lambda = g.from_dynkin_labels(&labels.iter().map(|&c| q(c)).collect::<Vec<_>>());
        let c = casimir_unchecked(g, &lambda);
        if &c <= bound {
            out.push((lambda, c));
        }
        return;
    }
    loop {
        let probe = g.from_dynkin_labels(&labels.iter().map(|&c| q(c)).collect::<Vec<_>>());
        if &casimir_unchecked(g, &probe) > bound {
            break;
        }
        scan(g, bound, i + 1, labels, out);
        labels[i] += 1;
    }
    labels[i] = 0;
}
