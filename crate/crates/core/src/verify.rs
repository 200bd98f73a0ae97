//! The invariant battery run by `verify`: every identity the eigenvalue
//! formula rests on, each checked exactly and reported with both sides.

use num_bigint::BigUint;

use crate::dirac::{
    branching_multiplicity, casimir_eigenvalue, first_eigenvalue_squared,
    first_eigenvalue_squared_max_pairing, lifted_weight, maximal_minima, select_w0,
    spectrum_below, spin_decomposition, spin_oracle_decomposition, Caps, SpectrumLine,
};
use crate::error::{Error, Result};
use crate::rootsystem::weyl_dimension_unchecked;
use crate::symmspace::{strange_formula_check, SymmetricPair};
use crate::weight::{fmt_rational, frac, q, Weight, Q};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Fail,
    /// Not run because an oracle cap was exceeded.
    Skipped,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub outcome: Outcome,
    pub lhs: String,
    pub rhs: String,
    pub note: String,
}

impl Check {
    fn compare(name: &'static str, lhs: String, rhs: String) -> Check {
        let outcome = if lhs == rhs { Outcome::Pass } else { Outcome::Fail };
        Check {
            name,
            outcome,
            lhs,
            rhs,
            note: String::new(),
        }
    }

    fn with_note(mut self, note: impl Into<String>) -> Check {
        self.note = note.into();
        self
    }

    fn skipped(name: &'static str, note: String) -> Check {
        Check {
            name,
            outcome: Outcome::Skipped,
            lhs: String::new(),
            rhs: String::new(),
            note,
        }
    }
}

#[derive(Clone, Debug, Default)]
pub struct VerifyOptions {
    pub caps: Caps,
    /// Also scan the spectrum of D² up to this value.
    pub spectrum_cutoff: Option<Q>,
}

#[derive(Clone, Debug)]
pub struct Verification {
    pub space: String,
    pub checks: Vec<Check>,
    pub spectrum: Option<Vec<SpectrumLine>>,
}

impl Verification {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.outcome != Outcome::Fail)
    }
}

fn show_weights<'a>(ws: impl IntoIterator<Item = &'a Weight>) -> String {
    let v: Vec<String> = ws.into_iter().map(ToString::to_string).collect();
    format!("[{}]", v.join(", "))
}

/// Runs the battery on a spin pair. Non-spin pairs are rejected with
/// [`Error::NotSpin`].
pub fn verify_pair(space: &str, pair: &SymmetricPair, opts: &VerifyOptions) -> Result<Verification> {
    let comps = spin_decomposition(pair)?;
    let g = pair.g();
    let n = pair.dim() as i64;
    let n16 = frac(n, 16);
    let mut checks = Vec::new();

    let sf = strange_formula_check(pair);
    checks.push(Check::compare("strange-formula", fmt_rational(&sf.lhs), fmt_rational(&sf.rhs)));

    let lowest = first_eigenvalue_squared(pair)?;
    let by_pairing = first_eigenvalue_squared_max_pairing(pair)?;
    checks.push(Check::compare("closed-forms-agree", fmt_rational(&lowest), fmt_rational(&by_pairing)));

    let expected = g.weyl_group_order() / pair.k_weyl_group_order();
    checks.push(Check::compare(
        "kostant-cardinality",
        comps.len().to_string(),
        expected.to_string(),
    ));

    let total: BigUint = comps.iter().map(|c| &c.dim).sum();
    checks.push(Check::compare(
        "spin-dimension",
        total.to_string(),
        (BigUint::from(1u32) << (pair.dim() / 2)).to_string(),
    ));

    let bad = comps.iter().find(|c| {
        g.killing_norm2(&(&c.beta + pair.delta_k())) - g.killing_norm2(pair.delta_k()) != n16
    });
    checks.push(match bad {
        None => Check::compare("component-casimir", fmt_rational(&n16), fmt_rational(&n16))
            .with_note(format!("{} components", comps.len())),
        Some(c) => {
            let lhs = g.killing_norm2(&(&c.beta + pair.delta_k())) - g.killing_norm2(pair.delta_k());
            Check::compare("component-casimir", fmt_rational(&lhs), fmt_rational(&n16))
                .with_note(format!("beta = {}", c.beta))
        }
    });

    let maxima = maximal_minima(g, &comps);
    let lifted: Vec<Weight> = maxima.iter().map(|c| lifted_weight(c)).collect();
    let failing: Vec<&Weight> = lifted
        .iter()
        .filter(|w| !g.is_dominant(w, g.positive_system()).unwrap_or(false))
        .collect();
    let note = if maxima.len() > 1 {
        format!("{} incomparable minimal components", maxima.len())
    } else {
        String::new()
    };
    checks.push(
        Check {
            name: "lift-dominant",
            outcome: if failing.is_empty() { Outcome::Pass } else { Outcome::Fail },
            lhs: show_weights(&lifted),
            rhs: if failing.is_empty() {
                "G-dominant".into()
            } else {
                format!("not dominant: {}", show_weights(failing))
            },
            note: String::new(),
        }
        .with_note(note),
    );

    let w0 = select_w0(g, &comps).expect("nonempty decomposition");
    let top = lifted_weight(w0);
    let casimir = casimir_eigenvalue(g, &top);
    checks.push(match &casimir {
        Ok(c) => Check::compare(
            "lift-casimir",
            fmt_rational(c),
            fmt_rational(&(q(2) * &w0.norm2 + &n16)),
        ),
        Err(e) => Check {
            name: "lift-casimir",
            outcome: Outcome::Fail,
            lhs: e.to_string(),
            rhs: fmt_rational(&(q(2) * &w0.norm2 + &n16)),
            note: String::new(),
        },
    });

    let dim = weyl_dimension_unchecked(&top, g.positive_system());
    checks.push(match branching_multiplicity(pair, &top, &w0.beta, opts.caps.dimension) {
        Ok(m) => Check {
            name: "lift-branching",
            outcome: if m >= 1 { Outcome::Pass } else { Outcome::Fail },
            lhs: m.to_string(),
            rhs: ">= 1".into(),
            note: format!("dim V = {dim}"),
        },
        Err(Error::CapExceeded { .. }) => Check::skipped(
            "lift-branching",
            format!("dim V = {dim} exceeds {}", opts.caps.dimension),
        ),
        Err(e) => return Err(e),
    });

    checks.push(match spin_oracle_decomposition(pair, opts.caps.spin_weights) {
        Ok(found) => {
            let mut expected: Vec<(Weight, u64)> = comps.iter().map(|c| (c.beta.clone(), 1)).collect();
            expected.sort();
            let fmt = |v: &[(Weight, u64)]| {
                let parts: Vec<String> = v.iter().map(|(w, m)| format!("{w}x{m}")).collect();
                parts.join(" ")
            };
            Check::compare("spin-oracle", fmt(&found), fmt(&expected))
                .with_note(format!("2^{} weights", pair.noncompact_positives().len()))
        }
        Err(Error::CapExceeded { .. }) => Check::skipped(
            "spin-oracle",
            format!(
                "|Φ_n⁺| = {} exceeds {}",
                pair.noncompact_positives().len(),
                opts.caps.spin_weights
            ),
        ),
        Err(e) => return Err(e),
    });

    let mut spectrum = None;
    if let Some(cutoff) = &opts.spectrum_cutoff {
        match spectrum_below(pair, cutoff, opts.caps.dimension) {
            Ok(lines) => {
                let found = lines.first().map(|l| fmt_rational(&l.eigenvalue));
                let want = (&lowest <= cutoff).then(|| fmt_rational(&lowest));
                checks.push(Check::compare(
                    "spectrum-minimum",
                    found.unwrap_or_else(|| "none".into()),
                    want.unwrap_or_else(|| "none".into()),
                ));
                spectrum = Some(lines);
            }
            Err(Error::CapExceeded { what, .. }) => {
                checks.push(Check::skipped("spectrum-minimum", what));
            }
            Err(e) => return Err(e),
        }
    }

    Ok(Verification {
        space: space.into(),
        checks,
        spectrum,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symmspace::{catalog, lookup};

    #[test]
    fn sphere_with_spectrum() {
        let p = lookup("sphere-even(1)").unwrap().build().unwrap();
        let opts = VerifyOptions {
            spectrum_cutoff: Some(q(3)),
            ..Default::default()
        };
        let v = verify_pair("sphere-even(1)", &p, &opts).unwrap();
        assert!(v.passed(), "{:?}", v.checks);
        let ev: Vec<Q> = v.spectrum.unwrap().iter().map(|l| l.eigenvalue.clone()).collect();
        assert_eq!(ev, vec![frac(1, 2), q(2)]);
    }

    #[test]
    fn whole_catalog_passes() {
        for e in catalog() {
            let p = e.build().unwrap();
            let v = verify_pair(&e.name, &p, &VerifyOptions::default()).unwrap();
            assert!(v.passed(), "{}: {:?}", e.name, v.checks);
        }
    }

    #[test]
    fn cutoff_below_the_first_eigenvalue() {
        let p = lookup("sphere-even(2)").unwrap().build().unwrap();
        let opts = VerifyOptions {
            spectrum_cutoff: Some(frac(1, 2)),
            ..Default::default()
        };
        let v = verify_pair("s4", &p, &opts).unwrap();
        assert!(v.passed());
        assert!(v.spectrum.unwrap().is_empty());
    }

    #[test]
    fn non_spin_is_an_error() {
        let p = lookup("AIII(1,2)").unwrap().build().unwrap();
        assert!(matches!(
            verify_pair("cp2", &p, &VerifyOptions::default()),
            Err(Error::NotSpin(_))
        ));
    }
}
