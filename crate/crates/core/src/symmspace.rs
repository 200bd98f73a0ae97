//! Equal-rank symmetric pairs `(Φ_G, Φ_K)` and the built-in catalog.

use std::collections::{HashMap, HashSet};
use std::sync::{Mutex, OnceLock};

use crate::error::{Error, Result};
use crate::rootsystem::{cartan_type_of, describe_types, pairing, PositiveSystem, RootSystem, SimpleType};
use crate::weight::{fmt_rational, frac, q, Weight, Q};

/// A validated equal-rank pair: the roots of G split into compact roots
/// (those of K) and noncompact roots, forming a ℤ₂-grading.
#[derive(Clone, Debug)]
pub struct SymmetricPair {
    g: RootSystem,
    k: PositiveSystem,
    noncompact_positives: Vec<Weight>,
    delta_k: Weight,
    delta_n: Weight,
    dim: usize,
    scal: Q,
    spin_obstruction: Option<(usize, Q)>,
}

impl SymmetricPair {
    pub fn g(&self) -> &RootSystem {
        &self.g
    }

    /// Positive system of K (Φ_K⁺ with its simple roots).
    pub fn k_system(&self) -> &PositiveSystem {
        &self.k
    }

    pub fn k_simple_roots(&self) -> &[Weight] {
        self.k.simple_roots()
    }

    pub fn k_positives(&self) -> &[Weight] {
        self.k.positive_roots()
    }

    /// Φ_n⁺, in the order of Φ_G⁺.
    pub fn noncompact_positives(&self) -> &[Weight] {
        &self.noncompact_positives
    }

    pub fn delta_g(&self) -> &Weight {
        self.g.weyl_vector()
    }

    pub fn delta_k(&self) -> &Weight {
        &self.delta_k
    }

    pub fn delta_n(&self) -> &Weight {
        &self.delta_n
    }

    /// n = dim G/K.
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Scalar curvature of the Killing metric, n/2.
    pub fn scal(&self) -> &Q {
        &self.scal
    }

    pub fn is_spin(&self) -> bool {
        self.spin_obstruction.is_none()
    }

    /// The first simple root α_i of G (index, pairing) with
    /// `⟨δ_n, α_i^∨⟩ ∉ ℤ`, if any.
    pub fn spin_obstruction(&self) -> Option<(usize, &Q)> {
        self.spin_obstruction.as_ref().map(|(i, p)| (*i, p))
    }

    /// Human-readable reason for a failed spin check.
    pub fn spin_diagnostic(&self) -> Option<String> {
        self.spin_obstruction().map(|(i, p)| {
            format!(
                "<delta_n, alpha_{}^vee> = {} is not an integer",
                i + 1,
                fmt_rational(p)
            )
        })
    }

    /// Rank of the central torus of K.
    pub fn torus_rank(&self) -> usize {
        self.g.rank() - self.k.rank()
    }

    /// Type of K, e.g. `D5+T1`.
    pub fn k_description(&self) -> String {
        describe_types(&cartan_type_of(self.k.simple_roots()), self.torus_rank())
    }

    pub fn k_weyl_group_order(&self) -> u128 {
        self.k.weyl_group_order()
    }
}

/// Validates `(g, k_simple_roots)` and builds the pair.
///
/// Φ_K⁺ is generated by closure from the listed roots, which must be
/// positive roots of G forming a simple system.
pub fn build_pair(g: RootSystem, k_simple_roots: Vec<Weight>) -> Result<SymmetricPair> {
    let dim = g.ambient_dim();
    for a in &k_simple_roots {
        a.check_dim(dim)?;
        if !g.is_root(a) {
            return Err(Error::NotARoot(a.to_string()));
        }
        if !g.positive_roots().contains(a) {
            return Err(Error::NotSimpleList(format!("{a} is not a positive root")));
        }
    }
    let k = PositiveSystem::from_simple_roots(k_simple_roots, dim)?;
    for a in k.positive_roots() {
        if !g.positive_roots().contains(a) {
            return Err(Error::NotSimpleList(format!(
                "generated root {a} is not in Φ_G⁺"
            )));
        }
    }

    // closure and grading are checked on simple-root coefficient vectors
    let pos = g.positive_system();
    let index: HashMap<&Weight, usize> = pos
        .positive_roots()
        .iter()
        .enumerate()
        .map(|(i, a)| (a, i))
        .collect();
    let signed = |c: &[i64], s: i64| c.iter().map(|x| s * x).collect::<Vec<i64>>();
    let all: HashSet<Vec<i64>> = pos
        .coefficients()
        .iter()
        .flat_map(|c| [signed(c, 1), signed(c, -1)])
        .collect();
    let compact: HashSet<Vec<i64>> = k
        .positive_roots()
        .iter()
        .flat_map(|a| {
            let c = &pos.coefficients()[index[a]];
            [signed(c, 1), signed(c, -1)]
        })
        .collect();
    let noncompact: Vec<&Vec<i64>> = all.iter().filter(|c| !compact.contains(*c)).collect();
    if noncompact.is_empty() {
        return Err(Error::NoNoncompact);
    }
    let show = |c: &[i64]| {
        let mut w = Weight::zero(dim);
        for (x, a) in c.iter().zip(g.simple_roots()) {
            w += &a.scale(&q(*x));
        }
        w
    };
    let add = |a: &[i64], b: &[i64]| a.iter().zip(b).map(|(x, y)| x + y).collect::<Vec<i64>>();
    for a in &compact {
        for b in &compact {
            let s = add(a, b);
            if all.contains(&s) && !compact.contains(&s) {
                return Err(Error::NotClosed(format!(
                    "{} + {} = {} is a root outside Φ_K",
                    show(a),
                    show(b),
                    show(&s)
                )));
            }
        }
    }
    for a in &noncompact {
        for b in &compact {
            let s = add(a, b);
            if compact.contains(&s) {
                return Err(Error::NotGraded(format!(
                    "{} + {} = {}: compact plus noncompact is compact",
                    show(a),
                    show(b),
                    show(&s)
                )));
            }
        }
        for b in &noncompact {
            let s = add(a, b);
            if all.contains(&s) && !compact.contains(&s) {
                return Err(Error::NotGraded(format!(
                    "{} + {} = {}: two noncompact roots sum to a noncompact root",
                    show(a),
                    show(b),
                    show(&s)
                )));
            }
        }
    }

    let noncompact_positives: Vec<Weight> = g
        .positive_roots()
        .iter()
        .zip(pos.coefficients())
        .filter(|(_, c)| !compact.contains(*c))
        .map(|(a, _)| a.clone())
        .collect();
    let delta_k = k.rho().clone();
    let delta_n = g.weyl_vector() - &delta_k;
    let n = 2 * noncompact_positives.len();
    let spin_obstruction = g
        .simple_roots()
        .iter()
        .map(|a| pairing(&delta_n, a))
        .enumerate()
        .find(|(_, p)| !p.is_integer());
    Ok(SymmetricPair {
        g,
        k,
        noncompact_positives,
        delta_k,
        delta_n,
        dim: n,
        scal: frac(n as i64, 2),
        spin_obstruction,
    })
}

/// δ_n integral on the weight lattice of the simply connected G.
pub fn check_spin(pair: &SymmetricPair) -> bool {
    pair.is_spin()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StrangeFormula {
    pub lhs: Q,
    pub rhs: Q,
    pub ok: bool,
}

/// `‖δ_G‖² − ‖δ_K‖²` against `n/16` in the Killing normalization.
pub fn strange_formula_check(pair: &SymmetricPair) -> StrangeFormula {
    let g = pair.g();
    let lhs = g.killing_norm2(pair.delta_g()) - g.killing_norm2(pair.delta_k());
    let rhs = frac(pair.dim() as i64, 16);
    let ok = lhs == rhs;
    StrangeFormula { lhs, rhs, ok }
}

/// A named equal-rank pair stored by its explicit K-simple roots.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogEntry {
    pub name: String,
    pub g_type: SimpleType,
    pub k_simple_roots: Vec<Weight>,
    pub notes: String,
}

impl CatalogEntry {
    /// Validates and builds the pair. Built-in entries come from a cache.
    pub fn build(&self) -> Result<SymmetricPair> {
        match generated().iter().find(|(e, _)| e == self) {
            Some((_, built)) => built.clone(),
            None => self.build_uncached(),
        }
    }

    fn build_uncached(&self) -> Result<SymmetricPair> {
        build_pair(root_system(self.g_type), self.k_simple_roots.clone())
    }
}

/// Root data for a type, constructed once per process.
fn root_system(t: SimpleType) -> RootSystem {
    static CACHE: OnceLock<Mutex<HashMap<SimpleType, RootSystem>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(g) = cache.lock().expect("cache lock").get(&t) {
        return g.clone();
    }
    let g = RootSystem::new(t);
    cache.lock().expect("cache lock").insert(t, g.clone());
    g
}

/// K for the involution `exp(π i ϖ_node^∨)`: roots whose coefficient on
/// the given simple root is even. For a node of mark 1 this is the Levi
/// factor (Hermitian case), for mark 2 the subgroup obtained by deleting
/// the node from the extended Dynkin diagram.
fn node_removal(t: SimpleType, node: usize, name: String, notes: &str) -> CatalogEntry {
    let g = root_system(t);
    let pos = g.positive_system();
    let mark = pos.coefficients().last().unwrap()[node];
    assert!(mark <= 2, "node {node} of {t} has mark {mark}");
    let kpos: Vec<&Weight> = pos
        .positive_roots()
        .iter()
        .zip(pos.coefficients())
        .filter(|(_, c)| c[node] % 2 == 0)
        .map(|(a, _)| a)
        .collect();
    let set: HashSet<&Weight> = kpos.iter().copied().collect();
    let simple = kpos
        .iter()
        .filter(|&&x| !kpos.iter().any(|&a| set.contains(&(x - a))))
        .map(|&a| a.clone())
        .collect();
    CatalogEntry {
        name,
        g_type: t,
        k_simple_roots: simple,
        notes: notes.into(),
    }
}

fn st(s: &str) -> SimpleType {
    s.parse().expect("valid built-in type")
}

/// Every equal-rank irreducible pair the catalog is generated from, before
/// filtering by the spin condition.
pub fn inner_pairs() -> Vec<CatalogEntry> {
    let mut out = Vec::new();
    out.push(node_removal(
        st("A1"),
        0,
        "sphere-even(1)".into(),
        "S^2 = SU(2)/U(1)",
    ));
    for m in 2..=6 {
        out.push(node_removal(
            st(&format!("B{m}")),
            m - 1,
            format!("sphere-even({m})"),
            &format!("S^{} = Spin({})/Spin({})", 2 * m, 2 * m + 1, 2 * m),
        ));
    }
    for total in 3..=8usize {
        for p in 1..=total / 2 {
            let qq = total - p;
            out.push(node_removal(
                st(&format!("A{}", total - 1)),
                p - 1,
                format!("AIII({p},{qq})"),
                &format!("complex Grassmannian SU({total})/S(U({p})xU({qq}))"),
            ));
        }
    }
    // SO(p+q)/SO(p)xSO(q), p even, both at least 2, excluding the spheres
    for total in 5..=12usize {
        if total % 2 == 1 {
            let r = (total - 1) / 2;
            for j in 1..r {
                out.push(node_removal(
                    st(&format!("B{r}")),
                    j - 1,
                    format!("BDI({},{})", 2 * j, total - 2 * j),
                    &format!("real Grassmannian SO({total})/SO({})xSO({})", 2 * j, total - 2 * j),
                ));
            }
        } else if total >= 8 {
            let r = total / 2;
            for j in 1..=r / 2 {
                out.push(node_removal(
                    st(&format!("D{r}")),
                    j - 1,
                    format!("BDI({},{})", 2 * j, total - 2 * j),
                    &format!("real Grassmannian SO({total})/SO({})xSO({})", 2 * j, total - 2 * j),
                ));
            }
        }
    }
    for n in 3..=5 {
        out.push(node_removal(
            st(&format!("C{n}")),
            n - 1,
            format!("CI({n})"),
            &format!("Sp({n})/U({n})"),
        ));
    }
    for total in 3..=5usize {
        for p in 1..=total / 2 {
            out.push(node_removal(
                st(&format!("C{total}")),
                p - 1,
                format!("CII({p},{})", total - p),
                &format!("quaternionic Grassmannian Sp({total})/Sp({p})xSp({})", total - p),
            ));
        }
    }
    for n in 4..=6 {
        out.push(node_removal(
            st(&format!("D{n}")),
            n - 1,
            format!("DIII({n})"),
            &format!("SO({})/U({n})", 2 * n),
        ));
    }
    let exceptional = [
        ("E6", 1, "EII", "E6/SU(6)Sp(1)"),
        ("E6", 0, "EIII", "E6/Spin(10)U(1)"),
        ("E7", 1, "EV", "E7/SU(8)"),
        ("E7", 0, "EVI", "E7/Spin(12)Sp(1)"),
        ("E7", 6, "EVII", "E7/E6U(1)"),
        ("E8", 0, "EVIII", "E8/Spin(16)"),
        ("E8", 7, "EIX", "E8/E7Sp(1)"),
        ("F4", 0, "FI", "F4/Sp(3)Sp(1)"),
        ("F4", 3, "FII", "Cayley plane F4/Spin(9)"),
        ("G2", 1, "G", "G2/SO(4)"),
    ];
    for (t, node, name, notes) in exceptional {
        out.push(node_removal(st(t), node, name.into(), notes));
    }
    out
}

fn generated() -> &'static [(CatalogEntry, Result<SymmetricPair>)] {
    static ALL: OnceLock<Vec<(CatalogEntry, Result<SymmetricPair>)>> = OnceLock::new();
    ALL.get_or_init(|| {
        inner_pairs()
            .into_iter()
            .map(|e| {
                let built = e.build_uncached();
                (e, built)
            })
            .collect()
    })
}

/// The built-in list of spin equal-rank irreducible symmetric spaces.
pub fn catalog() -> Vec<CatalogEntry> {
    generated()
        .iter()
        .filter(|(_, built)| built.as_ref().is_ok_and(SymmetricPair::is_spin))
        .map(|(e, _)| e.clone())
        .collect()
}

/// Looks up an entry by name among all generated pairs (spin or not).
pub fn lookup(name: &str) -> Result<CatalogEntry> {
    let wanted = name.trim();
    generated()
        .iter()
        .map(|(e, _)| e)
        .find(|e| e.name.eq_ignore_ascii_case(wanted))
        .cloned()
        .ok_or_else(|| Error::UnknownCatalogEntry(name.into()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(s: &str) -> RootSystem {
        RootSystem::new(s.parse().unwrap())
    }

    fn w(c: &[i64]) -> Weight {
        Weight::from_ints(c)
    }

    #[test]
    fn sphere_s4() {
        let p = build_pair(rs("B2"), vec![w(&[1, -1]), w(&[1, 1])]).unwrap();
        assert_eq!(p.dim(), 4);
        assert_eq!(p.scal(), &q(2));
        assert!(p.is_spin());
        assert_eq!(p.delta_n(), &Weight::from_fracs(&[(1, 2), (1, 2)]));
        assert_eq!(p.k_description(), "A1+A1");
        let sf = strange_formula_check(&p);
        assert_eq!(sf.lhs, frac(1, 4));
        assert!(sf.ok);
    }

    #[test]
    fn sphere_s2() {
        let p = build_pair(rs("A1"), vec![]).unwrap();
        assert_eq!(p.dim(), 2);
        assert!(check_spin(&p));
        assert_eq!(p.k_description(), "T1");
        let sf = strange_formula_check(&p);
        assert_eq!((sf.lhs.clone(), sf.ok), (frac(1, 8), true));
    }

    #[test]
    fn cp2_is_not_spin() {
        let p = build_pair(rs("A2"), vec![w(&[1, -1, 0])]).unwrap();
        assert_eq!(p.dim(), 4);
        assert!(!p.is_spin());
        let (i, val) = p.spin_obstruction().unwrap();
        assert_eq!((i, val.clone()), (1, frac(3, 2)));
        assert!(strange_formula_check(&p).ok);
    }

    #[test]
    fn validation_errors() {
        assert!(matches!(
            build_pair(rs("B2"), vec![w(&[1, 0]), w(&[0, 1])]),
            Err(Error::NotClosed(_))
        ));
        assert!(matches!(
            build_pair(rs("B2"), vec![w(&[2, 0])]),
            Err(Error::NotARoot(_))
        ));
        assert!(matches!(
            build_pair(rs("B2"), vec![w(&[1, -1]), w(&[0, 1])]),
            Err(Error::NoNoncompact)
        ));
        assert!(matches!(
            build_pair(rs("B2"), vec![w(&[-1, 1])]),
            Err(Error::NotSimpleList(_))
        ));
        // A2 inside B3 is closed but does not grade the remaining roots
        assert!(matches!(
            build_pair(rs("B3"), vec![w(&[1, -1, 0]), w(&[0, 1, -1])]),
            Err(Error::NotGraded(_))
        ));
        // e1-e2 and e1 meet at 135 degrees: fine; e1-e2 and e1+e2 and e1: dependent
        assert!(matches!(
            build_pair(rs("B2"), vec![w(&[1, -1]), w(&[1, 1]), w(&[1, 0])]),
            Err(Error::NotSimpleList(_))
        ));
        assert!(matches!(
            build_pair(rs("B2"), vec![w(&[1, -1, 0])]),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn build_is_deterministic() {
        let a = lookup("EIII").unwrap().build().unwrap();
        let b = lookup("EIII").unwrap().build().unwrap();
        assert_eq!(a.k_positives(), b.k_positives());
        assert_eq!(a.noncompact_positives(), b.noncompact_positives());
        assert_eq!(a.delta_k(), b.delta_k());
    }

    #[test]
    fn every_generated_pair_is_graded_and_satisfies_strange_formula() {
        for e in inner_pairs() {
            let p = e.build().unwrap_or_else(|err| panic!("{}: {err}", e.name));
            assert_eq!(p.dim() % 2, 0);
            assert_eq!(p.dim(), 2 * p.noncompact_positives().len());
            assert_eq!(
                2 * p.g().positive_roots().len(),
                2 * p.k_positives().len() + p.dim(),
                "{}",
                e.name
            );
            assert!(strange_formula_check(&p).ok, "{}", e.name);
            let mut sum = Weight::zero(p.g().ambient_dim());
            for a in p.noncompact_positives() {
                sum += a;
            }
            assert_eq!(&sum.scale(&frac(1, 2)), p.delta_n());
        }
    }

    fn spin_of(name: &str) -> bool {
        lookup(name).unwrap().build().unwrap().is_spin()
    }

    #[test]
    fn spin_matches_classical_facts() {
        // Gr_p(C^{p+q}) is spin iff p + q is even
        for total in 3..=8usize {
            for p in 1..=total / 2 {
                assert_eq!(
                    spin_of(&format!("AIII({p},{})", total - p)),
                    total % 2 == 0,
                    "AIII({p},{})",
                    total - p
                );
            }
        }
        // oriented real Grassmannians with p, q >= 2: spin iff p + q even
        for e in inner_pairs().iter().filter(|e| e.name.starts_with("BDI")) {
            let inner = &e.name[4..e.name.len() - 1];
            let (p, qq) = inner.split_once(',').unwrap();
            let total: usize = p.parse::<usize>().unwrap() + qq.parse::<usize>().unwrap();
            assert_eq!(spin_of(&e.name), total % 2 == 0, "{}", e.name);
        }
        // Sp(n)/U(n): c_1 = (n+1)x
        for n in 3..=5 {
            assert_eq!(spin_of(&format!("CI({n})")), n % 2 == 1);
        }
        for m in 1..=6 {
            assert!(spin_of(&format!("sphere-even({m})")));
        }
        assert!(spin_of("CII(1,2)"));
        for name in ["EII", "EIII", "EVI", "EVII", "EIX", "FII", "G"] {
            assert!(spin_of(name), "{name}");
        }
        // quaternion-Kähler of quaternionic dimension 7
        assert!(!spin_of("FI"));
    }

    #[test]
    fn catalog_contents() {
        let cat = catalog();
        assert!(cat.len() >= 10);
        assert!(cat.iter().any(|e| e.name == "sphere-even(2)"));
        let s4 = cat.iter().find(|e| e.name == "sphere-even(2)").unwrap();
        assert_eq!(s4.g_type, st("B2"));
        assert_eq!(s4.k_simple_roots, vec![w(&[1, -1]), w(&[1, 1])]);
        for e in &cat {
            let p = e.build().unwrap();
            assert!(p.is_spin());
        }
        assert!(matches!(lookup("nope"), Err(Error::UnknownCatalogEntry(_))));
    }
}
