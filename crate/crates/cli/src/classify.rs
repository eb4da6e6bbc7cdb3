//! Structural summary of a single hemiring.

use std::fmt::Write as _;

use hemiring::congruence::is_congruence_simple;
use hemiring::constructions::boolean_b;
use hemiring::hom::is_isomorphic;
use hemiring::ideal::is_ideal_simple;
use hemiring::FiniteHemiring;
use serde::Serialize;

use crate::catalog::hemiring_fingerprint;
use crate::report::Format;

/// Predicate outcomes for one algebra.
#[derive(Clone, Debug, Serialize)]
pub struct Summary {
    pub fingerprint: String,
    pub order: usize,
    pub identity: Option<usize>,
    pub additively_idempotent: bool,
    pub commutative: bool,
    pub ring: bool,
    pub zerosumfree: bool,
    pub dedekind_finite: Option<bool>,
    pub aic: bool,
    pub lattice_ordered: bool,
    pub congruence_simple: bool,
    pub ideal_simple: bool,
    pub simple: bool,
    pub infinite_element: Option<usize>,
    pub division: Option<bool>,
    pub isomorphic_to_b: bool,
}

/// Classifies `r`, treating a multiplicative identity present in the
/// table as the semiring identity.
pub fn classify(r: &FiniteHemiring) -> Summary {
    let r = match (r.one(), r.find_identity()) {
        (None, Some(one)) => FiniteHemiring::new(
            r.add_table().clone(),
            r.mul_table().clone(),
            r.zero(),
            Some(one),
        )
        .expect("same tables, verified identity"),
        _ => r.clone(),
    };
    let cs = is_congruence_simple(&r);
    let is = is_ideal_simple(&r);
    let semiring = r.is_semiring();
    Summary {
        fingerprint: hemiring_fingerprint(&r),
        order: r.order(),
        identity: r.one(),
        additively_idempotent: r.is_additively_idempotent(),
        commutative: r.is_commutative(),
        ring: r.is_ring(),
        zerosumfree: r.is_zerosumfree(),
        dedekind_finite: semiring.then(|| r.is_dedekind_finite()),
        aic: semiring && r.is_aic(),
        lattice_ordered: semiring && r.is_lattice_ordered(),
        congruence_simple: cs,
        ideal_simple: is,
        simple: cs && is,
        infinite_element: r.infinite_element(),
        division: r.is_division_semiring().ok(),
        isomorphic_to_b: is_isomorphic(&r, &boolean_b()).is_some(),
    }
}

fn opt<T: ToString>(v: Option<T>) -> String {
    v.map_or_else(|| "none".to_string(), |x| x.to_string())
}

impl Summary {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Structured => serde_json::to_string_pretty(self).expect("plain data") + "\n",
            Format::Text => {
                let mut out = String::new();
                let rows: [(&str, String); 16] = [
                    ("fingerprint", self.fingerprint.clone()),
                    ("order", self.order.to_string()),
                    ("identity", opt(self.identity)),
                    (
                        "additively_idempotent",
                        self.additively_idempotent.to_string(),
                    ),
                    ("commutative", self.commutative.to_string()),
                    ("ring", self.ring.to_string()),
                    ("zerosumfree", self.zerosumfree.to_string()),
                    ("dedekind_finite", opt(self.dedekind_finite)),
                    ("aic", self.aic.to_string()),
                    ("lattice_ordered", self.lattice_ordered.to_string()),
                    ("congruence_simple", self.congruence_simple.to_string()),
                    ("ideal_simple", self.ideal_simple.to_string()),
                    ("simple", self.simple.to_string()),
                    ("infinite_element", opt(self.infinite_element)),
                    ("division", opt(self.division)),
                    ("isomorphic_to_b", self.isomorphic_to_b.to_string()),
                ];
                for (k, v) in rows {
                    let _ = writeln!(out, "{k}: {v}");
                }
                out
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use hemiring::constructions::integers_mod;
    use hemiring::lattice::{build_e_m, FiniteSemilattice};

    #[test]
    fn boolean_semifield() {
        let s = classify(&boolean_b());
        assert!(s.simple && s.aic && s.lattice_ordered && s.isomorphic_to_b);
        assert_eq!(s.division, Some(true));
        assert_eq!(s.infinite_element, Some(1));
    }

    #[test]
    fn diamond_endomorphisms() {
        let e = build_e_m(&FiniteSemilattice::diamond());
        let s = classify(e.as_hemiring());
        assert!(s.congruence_simple && !s.ideal_simple && !s.simple);
    }

    #[test]
    fn z2() {
        let s = classify(&integers_mod(2));
        assert!(s.ring && s.simple && !s.additively_idempotent);
        assert!(s.render(Format::Text).contains("ring: true"));
    }
}
