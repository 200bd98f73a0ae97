//! Acceptance criteria, each run at its stated tolerance (exact equality)
//! and under its runtime limit. Prints one PASS/FAIL line per criterion and
//! exits nonzero if any fails.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use symdirac::dirac::{
    branching_multiplicity, casimir_eigenvalue, is_lift_dominant, decompose_into_k_irreps,
    first_eigenvalue_squared, first_eigenvalue_squared_max_pairing, lifted_weight, maximal_minima,
    select_w0, spectrum_below, spin_decomposition, spin_weights_bruteforce,
};
use symdirac::symmspace::{build_pair, catalog, inner_pairs, lookup, strange_formula_check, SymmetricPair};
use symdirac::weight::{frac, q, Weight, Q};
use symdirac::weyl::{enumerate_kostant_set, kostant_set_bruteforce};
use symdirac::{Error, Family, RootSystem, SimpleType};

type Outcome = Result<String, String>;
type Criterion = (&'static str, Duration, fn() -> Outcome);

fn pairs(entries: &[symdirac::symmspace::CatalogEntry]) -> Vec<(String, SymmetricPair)> {
    entries
        .iter()
        .map(|e| (e.name.clone(), e.build().expect("catalog entries build")))
        .collect()
}

fn strange_formula() -> Outcome {
    let all = pairs(&catalog());
    for (name, p) in &all {
        let sf = strange_formula_check(p);
        if sf.lhs != sf.rhs {
            return Err(format!("{name}: {} != {}", sf.lhs, sf.rhs));
        }
    }
    Ok(format!("{} entries", all.len()))
}

fn even_spheres() -> Outcome {
    for m in 1..=6i64 {
        let name = format!("sphere-even({m})");
        let p = lookup(&name).and_then(|e| e.build()).map_err(|e| e.to_string())?;
        let got = first_eigenvalue_squared(&p).map_err(|e| e.to_string())?;
        let want = frac(4 * m * m, 8 * (2 * m - 1));
        if got != want {
            return Err(format!("{name}: {got} != {want}"));
        }
    }
    Ok("m = 1..6".into())
}

fn formula_identity() -> Outcome {
    let all = pairs(&catalog());
    for (name, p) in &all {
        let a = first_eigenvalue_squared(p).map_err(|e| e.to_string())?;
        let b = first_eigenvalue_squared_max_pairing(p).map_err(|e| e.to_string())?;
        if a != b {
            return Err(format!("{name}: {a} != {b}"));
        }
    }
    Ok(format!("{} entries", all.len()))
}

fn kostant_set() -> Outcome {
    let mut brute = 0;
    // the Kostant set does not depend on spin, so non-spin pairs count too
    let all = pairs(&inner_pairs());
    for (name, p) in &all {
        let g = p.g();
        let ks = enumerate_kostant_set(g, p.k_system()).map_err(|e| e.to_string())?;
        let expected = g.weyl_group_order() / p.k_weyl_group_order();
        if ks.len() as u128 != expected {
            return Err(format!("{name}: |W| = {} != {expected}", ks.len()));
        }
        if g.weyl_group_order() <= 2000 {
            let filtered = kostant_set_bruteforce(g, p.k_system(), 2000).map_err(|e| e.to_string())?;
            let key = |ws: &mut dyn Iterator<Item = Weight>| ws.collect::<BTreeSet<Weight>>();
            let a = key(&mut ks.iter().map(|w| w.apply(g.weyl_vector()).expect("same dimension")));
            let b = key(&mut filtered.iter().map(|w| w.apply(g.weyl_vector()).expect("same dimension")));
            if a != b {
                return Err(format!("{name}: search and filter disagree"));
            }
            brute += 1;
        }
    }
    Ok(format!("{} pairs, {brute} against the full group", all.len()))
}

fn parthasarathy_oracle() -> Outcome {
    let mut checked = 0;
    for (name, p) in pairs(&catalog()) {
        if p.noncompact_positives().len() > 16 {
            continue;
        }
        let comps = spin_decomposition(&p).map_err(|e| e.to_string())?;
        let weights = spin_weights_bruteforce(&p, 16).map_err(|e| e.to_string())?;
        let found = decompose_into_k_irreps(&p, &weights).map_err(|e| e.to_string())?;
        let mut expected: Vec<(Weight, u64)> = comps.iter().map(|c| (c.beta.clone(), 1)).collect();
        expected.sort();
        if found != expected {
            return Err(format!("{name}: oracle {found:?} != {expected:?}"));
        }
        let mut total = BigUint::from(0u32);
        for (mu, mult) in &found {
            let d = p.g().weyl_dimension(mu, p.k_system()).map_err(|e| e.to_string())?;
            total += d * mult;
        }
        let want = BigUint::from(1u32) << (p.dim() / 2);
        if total != want || weights.len() as u128 != 1u128 << p.noncompact_positives().len() {
            return Err(format!("{name}: dimensions sum to {total}, expected {want}"));
        }
        checked += 1;
    }
    Ok(format!("{checked} entries with |Φ_n⁺| ≤ 16"))
}

fn dominant_lift() -> Outcome {
    let mut minima = 0;
    for (name, p) in pairs(&catalog()) {
        let comps = spin_decomposition(&p).map_err(|e| e.to_string())?;
        for c in maximal_minima(p.g(), &comps) {
            if !is_lift_dominant(&p, c) {
                return Err(format!("{name}: {} is not G-dominant", lifted_weight(c)));
            }
            minima += 1;
        }
    }
    Ok(format!("{minima} maximal minima"))
}

fn lift_branching() -> Outcome {
    let (mut checked, mut over) = (0, 0);
    for (name, p) in pairs(&catalog()) {
        let comps = spin_decomposition(&p).map_err(|e| e.to_string())?;
        let w0 = select_w0(p.g(), &comps).expect("nonempty");
        let top = lifted_weight(w0);
        let dim = p.g().weyl_dimension(&top, p.g().positive_system()).map_err(|e| e.to_string())?;
        if dim > BigUint::from(1_000_000u32) {
            over += 1;
            continue;
        }
        let m = branching_multiplicity(&p, &top, &w0.beta, 1_000_000).map_err(|e| e.to_string())?;
        if m < 1 {
            return Err(format!("{name}: multiplicity {m}"));
        }
        checked += 1;
    }
    Ok(format!("{checked} entries, {over} above dim 10^6"))
}

fn lowest_eigenvalue() -> Outcome {
    let mut checked = 0;
    for (name, p) in pairs(&catalog()) {
        if p.g().rank() > 4 {
            continue;
        }
        let lowest = first_eigenvalue_squared(&p).map_err(|e| e.to_string())?;
        let lines = spectrum_below(&p, &(&lowest + q(1)), 1_000_000).map_err(|e| format!("{name}: {e}"))?;
        let Some(first) = lines.first() else {
            return Err(format!("{name}: empty spectrum below {}", &lowest + q(1)));
        };
        if first.eigenvalue != lowest {
            return Err(format!("{name}: minimum {} != {lowest}", first.eigenvalue));
        }
        let comps = spin_decomposition(&p).map_err(|e| e.to_string())?;
        let w0 = select_w0(p.g(), &comps).expect("nonempty");
        let want = q(2) * &w0.norm2 + frac(p.dim() as i64, 16);
        for l in lines.iter().filter(|l| l.eigenvalue == lowest) {
            let c = casimir_eigenvalue(p.g(), &l.g_highest_weight).map_err(|e| e.to_string())?;
            if c != want {
                return Err(format!("{name}: casimir({}) = {c} != {want}", l.g_highest_weight));
            }
        }
        checked += 1;
    }
    let s2 = lookup("sphere-even(1)").and_then(|e| e.build()).map_err(|e| e.to_string())?;
    let ev: Vec<Q> = spectrum_below(&s2, &q(3), 1_000_000)
        .map_err(|e| e.to_string())?
        .into_iter()
        .map(|l| l.eigenvalue)
        .collect();
    if ev != [frac(1, 2), q(2)] {
        return Err(format!("S² below 3: {ev:?}"));
    }
    Ok(format!("{checked} entries of rank ≤ 4; S² below 3 is {{1/2, 2}}"))
}

fn normalization() -> Outcome {
    let types = SimpleType::all_up_to(8);
    for t in &types {
        let g = RootSystem::new(*t);
        let c = casimir_eigenvalue(&g, g.highest_root()).map_err(|e| e.to_string())?;
        if c != q(1) {
            return Err(format!("{t}: casimir(θ) = {c}"));
        }
    }
    Ok(format!("{} simple types", types.len()))
}

fn spin_detection() -> Outcome {
    let cp2 = build_pair(RootSystem::new(SimpleType::new(Family::A, 2).unwrap()), vec![Weight::from_ints(&[1, -1, 0])])
        .map_err(|e| e.to_string())?;
    match spin_decomposition(&cp2) {
        Err(Error::NotSpin(_)) => {}
        other => return Err(format!("CP² accepted: {other:?}")),
    }
    let s4 = build_pair(
        RootSystem::new(SimpleType::new(Family::B, 2).unwrap()),
        vec![Weight::from_ints(&[1, -1]), Weight::from_ints(&[1, 1])],
    )
    .map_err(|e| e.to_string())?;
    let s2 = build_pair(RootSystem::new(SimpleType::new(Family::A, 1).unwrap()), vec![]).map_err(|e| e.to_string())?;
    for (name, p) in [("S⁴", &s4), ("S²", &s2)] {
        if !p.is_spin() || spin_decomposition(p).is_err() {
            return Err(format!("{name} rejected"));
        }
    }
    Ok("CP² rejected, S⁴ and S² accepted".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("strange formula", Duration::from_secs(1), strange_formula),
        ("even spheres", Duration::from_secs(1), even_spheres),
        ("formula identity", Duration::from_secs(1), formula_identity),
        ("Kostant set", Duration::from_secs(30), kostant_set),
        ("Parthasarathy oracle", Duration::from_secs(300), parthasarathy_oracle),
        ("dominant lift", Duration::from_secs(1), dominant_lift),
        ("lift branching", Duration::from_secs(300), lift_branching),
        ("lowest eigenvalue", Duration::from_secs(600), lowest_eigenvalue),
        ("normalization witness", Duration::from_secs(1), normalization),
        ("spin detection", Duration::from_secs(1), spin_detection),
    ];
    let mut failed = 0;
    for (name, limit, run) in criteria {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let (ok, detail) = match outcome {
            Ok(d) if elapsed <= limit => (true, d),
            Ok(d) => (false, format!("{d}; over the {limit:?} limit")),
            Err(e) => (false, e),
        };
        failed += usize::from(!ok);
        println!(
            "{} {name:<22} {:>9.3}s (limit {:>3}s)  {detail}",
            if ok { "PASS" } else { "FAIL" },
            elapsed.as_secs_f64(),
            limit.as_secs()
        );
    }
    println!("acceptance: {} passed, {failed} failed", 10 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
