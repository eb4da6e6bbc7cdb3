//! Verification suites: each replays one classification result over
//! enumerated instances and reports a witness for any disagreement.

use std::collections::BTreeSet;

use hemiring::congruence::{
    all_congruences, bourne_congruence, is_congruence_simple, tau_congruence,
};
use hemiring::constructions::{
    boolean_b, chain_semiring, corner, corner_congruence_extension, corner_congruence_restriction,
    corner_ideal_extension, corner_ideal_restriction, enumerate_hemirings, enumerate_semilattices,
    finite_field, full_idempotents, integers_mod, is_full_idempotent, matrix_semiring,
    HemiringConstraints, HEMIRING_IDEMPOTENT_MAX_ORDER, HEMIRING_MAX_ORDER,
    SEMILATTICE_DEFAULT_ORDER, SEMILATTICE_MAX_ORDER, SUPPORTED_FIELDS,
};
use hemiring::hom::is_isomorphic;
use hemiring::ideal::{
    aic_max_ideal, all_ideals, generated_ideal, ideal_product, is_ideal_simple, is_simple,
    radical_left,
};
use hemiring::lattice::{
    additive_reduct, build_e_m, build_f_m, e_ab, endo_enumerate, try_lattice, EndoSemiring,
};
use hemiring::search::MapSearch;
use hemiring::semimodule::{double_centralizer_check, idempotent_generated, minimal_left_ideals};
use hemiring::{AlgebraError, Element, FiniteHemiring, FiniteSemilattice, IdealSubset, Side};
use rayon::prelude::*;

use crate::catalog::{hemiring_fingerprint, semilattice_fingerprint};
use crate::report::{InstanceRecord, Verdict, VerificationReport};

/// Suite identifiers accepted by [`run_suite`].
pub const SUITES: [&str; 13] = [
    "eab_identities",
    "thm3_3",
    "cor3_8",
    "diamond",
    "congruence_oracle",
    "thm2_2",
    "cor5_8",
    "prop5_5",
    "prop5_3",
    "thm5_10",
    "thm5_7",
    "thm6_4_6_5",
    "thm6_7",
];

/// Largest carrier for the brute-force partition oracle.
pub const ORACLE_MAX_CARRIER: usize = 8;

#[derive(Debug, thiserror::Error)]
pub enum SuiteError {
    #[error("unknown suite `{0}` (known: {known})", known = SUITES.join(", "))]
    UnknownSuite(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// Run-time bounds.
#[derive(Clone, Copy, Debug, Default)]
pub struct SuiteOptions {
    /// Overrides the suite's default order bound.
    pub max_order: Option<usize>,
}

struct Bounds {
    default: usize,
    max: usize,
}

fn bounds(id: &str) -> Option<Bounds> {
    let b = |default, max| Some(Bounds { default, max });
    match id {
        "eab_identities" | "thm3_3" | "cor3_8" => {
            b(SEMILATTICE_DEFAULT_ORDER, SEMILATTICE_MAX_ORDER)
        }
        "diamond" => b(5, 5),
        "congruence_oracle" => b(ORACLE_MAX_CARRIER, ORACLE_MAX_CARRIER),
        "prop5_5" | "prop5_3" => b(HEMIRING_MAX_ORDER, HEMIRING_MAX_ORDER),
        "thm2_2" | "cor5_8" | "thm5_10" | "thm5_7" | "thm6_4_6_5" | "thm6_7" => {
            b(HEMIRING_IDEMPOTENT_MAX_ORDER, HEMIRING_IDEMPOTENT_MAX_ORDER)
        }
        _ => None,
    }
}

/// Runs one suite. Bounds above a suite's guard give a skipped report.
pub fn run_suite(id: &str, opts: SuiteOptions) -> Result<VerificationReport, SuiteError> {
    let b = bounds(id).ok_or_else(|| SuiteError::UnknownSuite(id.to_string()))?;
    let k = opts.max_order.unwrap_or(b.default);
    let params = vec![("max_order".to_string(), k.to_string())];
    if k > b.max || k == 0 {
        return Ok(VerificationReport::skipped(
            id,
            params,
            format!("max_order {k} outside 1..={} for this suite", b.max),
        ));
    }
    let report = match id {
        "eab_identities" => eab_identities(k)?,
        "thm3_3" => thm3_3(k)?,
        "cor3_8" => cor3_8(k)?,
        "diamond" => diamond()?,
        "congruence_oracle" => congruence_oracle(k)?,
        "thm2_2" => thm2_2(k)?,
        "cor5_8" => cor5_8(k)?,
        "prop5_5" => prop5_5(k)?,
        "prop5_3" => prop5_3(k)?,
        "thm5_10" => thm5_10(k)?,
        "thm5_7" => thm5_7(k)?,
        "thm6_4_6_5" => thm6_4_6_5(k)?,
        "thm6_7" => thm6_7(k)?,
        _ => unreachable!("bounds() knows every suite"),
    };
    Ok(VerificationReport {
        parameters: params,
        ..report.finish(id)
    })
}

/// Instance list plus notes, before verdict aggregation.
struct Run {
    instances: Vec<InstanceRecord>,
    notes: Vec<String>,
}

impl Run {
    fn new(instances: Vec<InstanceRecord>) -> Self {
        Run {
            instances,
            notes: Vec::new(),
        }
    }

    fn note(mut self, n: impl Into<String>) -> Self {
        self.notes.push(n.into());
        self
    }

    fn finish(self, id: &str) -> VerificationReport {
        let mut r = VerificationReport::new(id, Vec::new(), self.instances);
        r.notes = self.notes;
        r
    }
}

type Named<T> = (String, T);

fn semilattices(k: usize) -> Result<Vec<Named<FiniteSemilattice>>, AlgebraError> {
    Ok(enumerate_semilattices(k)?
        .entries
        .into_iter()
        .map(|e| (e.name, e.algebra))
        .collect())
}

fn catalog(
    k: usize,
    additively_idempotent: bool,
    require_identity: bool,
) -> Result<Vec<Named<FiniteHemiring>>, AlgebraError> {
    let max = if additively_idempotent {
        HEMIRING_IDEMPOTENT_MAX_ORDER
    } else {
        HEMIRING_MAX_ORDER
    };
    let c = enumerate_hemirings(
        k.min(max),
        HemiringConstraints {
            additively_idempotent,
            require_identity,
        },
    )?;
    Ok(c.entries.into_iter().map(|e| (e.name, e.algebra)).collect())
}

/// Unconstrained semirings up to order 3 followed by the additively
/// idempotent ones of order 4 (lower orders already appear in the first).
fn simple_candidates(k: usize) -> Result<Vec<Named<FiniteHemiring>>, AlgebraError> {
    let mut out = catalog(k.min(HEMIRING_MAX_ORDER), false, true)?;
    out.extend(
        catalog(k, true, true)?
            .into_iter()
            .filter(|(_, r)| r.order() > HEMIRING_MAX_ORDER),
    );
    Ok(out)
}

fn hemiring_record(name: &str, r: &FiniteHemiring) -> InstanceRecord {
    InstanceRecord::new(name, hemiring_fingerprint(r))
}

fn semilattice_record(name: &str, m: &FiniteSemilattice) -> InstanceRecord {
    InstanceRecord::new(name, semilattice_fingerprint(m))
}

fn par_records<T: Sync>(
    items: &[T],
    f: impl Fn(&T) -> InstanceRecord + Sync + Send,
) -> Vec<InstanceRecord> {
    items.par_iter().map(f).collect()
}

// ---------------------------------------------------------------- lattices

fn eab_identities(k: usize) -> Result<Run, SuiteError> {
    let ms = semilattices(k)?;
    let records = par_records(&ms, |(name, m)| {
        let mut rec = semilattice_record(name, m);
        let endos = endo_enumerate(m);
        let zero = vec![m.zero(); m.order()];
        let mut checks = 0usize;
        'outer: for a in m.elements() {
            for b in m.elements() {
                let eab = e_ab(m, a, b);
                for f in &endos {
                    checks += 1;
                    if f.compose(&eab) != e_ab(m, a, f.apply(b)) {
                        rec.fail(format!(
                            "f={:?} a={a} b={b}: f∘e_ab != e_(a,f(b))",
                            f.as_slice()
                        ));
                        break 'outer;
                    }
                    let fe = f.compose(&eab);
                    for c in m.elements() {
                        for d in m.elements() {
                            checks += 1;
                            let lhs = e_ab(m, c, d).compose(&fe);
                            let expected = if m.leq(f.apply(b), c) {
                                zero.clone()
                            } else {
                                e_ab(m, a, d).as_slice().to_vec()
                            };
                            if lhs.as_slice() != expected.as_slice() {
                                rec.fail(format!(
                                    "f={:?} a={a} b={b} c={c} d={d}: case split",
                                    f.as_slice()
                                ));
                                break 'outer;
                            }
                        }
                    }
                }
            }
        }
        rec.outcome("endomorphisms", endos.len())
            .outcome("checks", checks);
        rec
    });
    Ok(Run::new(records))
}

/// Meet computed from the order alone.
fn order_meet(m: &FiniteSemilattice, a: Element, b: Element) -> Element {
    m.join_all(m.elements().filter(|&x| m.leq(x, a) && m.leq(x, b)))
}

/// Independent oracle: a sublattice isomorphic to M3 or N5.
fn forbidden_sublattice(m: &FiniteSemilattice) -> Option<(&'static str, [Element; 5])> {
    let n = m.order();
    let j = |a, b| m.join(a, b);
    let mt = |a, b| order_meet(m, a, b);
    for o in 0..n {
        for i in 0..n {
            if o == i || !m.leq(o, i) {
                continue;
            }
            for x in 0..n {
                for y in 0..n {
                    for z in 0..n {
                        let set = [o, x, y, z, i];
                        let distinct = (0..5).all(|p| (p + 1..5).all(|q| set[p] != set[q]));
                        if !distinct {
                            continue;
                        }
                        let m3 = x < y
                            && y < z
                            && [(x, y), (x, z), (y, z)]
                                .iter()
                                .all(|&(p, q)| j(p, q) == i && mt(p, q) == o);
                        if m3 {
                            return Some(("M3", set));
                        }
                        // x < z, y beside both
                        let n5 = j(x, z) == z
                            && mt(x, z) == x
                            && j(x, y) == i
                            && j(z, y) == i
                            && mt(x, y) == o
                            && mt(z, y) == o;
                        if n5 {
                            return Some(("N5", set));
                        }
                    }
                }
            }
        }
    }
    None
}

fn thm3_3(k: usize) -> Result<Run, SuiteError> {
    let ms = semilattices(k)?;
    let records = par_records(&ms, |(name, m)| {
        let mut rec = semilattice_record(name, m);
        let e = build_e_m(m);
        let r = e.as_hemiring();
        let is = is_ideal_simple(r);
        let cs = is_congruence_simple(r);
        let lattice = try_lattice(m);
        let distributive = lattice.as_ref().is_some_and(|l| l.is_distributive());
        let oracle = forbidden_sublattice(m);
        let f_is_e = build_f_m(&e).is_everything(&e);
        rec.outcome("e_order", r.order())
            .outcome("lattice", lattice.is_some())
            .outcome("distributive", distributive)
            .outcome(
                "forbidden_sublattice",
                oracle.map_or("none".to_string(), |(s, w)| format!("{s} {w:?}")),
            )
            .outcome("ideal_simple", is)
            .outcome("congruence_simple", cs)
            .outcome("simple", is && cs)
            .outcome("f_equals_e", f_is_e);
        rec.expect(lattice.is_some(), || {
            "finite semilattice with zero is not a lattice".into()
        })
        .expect(distributive == oracle.is_none(), || {
            format!("distributivity decider disagrees with sublattice oracle {oracle:?}")
        })
        .expect(is == distributive, || {
            format!("ideal_simple={is} but distributive={distributive}")
        })
        .expect((is && cs) == distributive, || {
            format!("simple={} but distributive={distributive}", is && cs)
        })
        .expect(f_is_e == distributive, || {
            format!("F=E is {f_is_e} but distributive={distributive}")
        })
        .expect(cs, || "E_M is not congruence-simple".into());
        rec
    });
    Ok(Run::new(records))
}

fn cor3_8(k: usize) -> Result<Run, SuiteError> {
    let ms = semilattices(k)?;
    let mut records = Vec::with_capacity(ms.len());
    for rec in ms
        .par_iter()
        .map(|(name, m)| -> Result<InstanceRecord, AlgebraError> {
            let mut rec = semilattice_record(name, m);
            let e = build_e_m(m);
            let r = e.as_hemiring();
            let is = is_ideal_simple(r);
            let cs = is_congruence_simple(r);
            let distributive = try_lattice(m).is_some_and(|l| l.is_distributive());
            let tau = tau_congruence(&e)?;
            let tau_universal = tau.is_universal();
            let zero = r.zero();
            let e0m = m
                .elements()
                .all(|x| tau.related(e.e_index(m.zero(), x), zero));
            rec.outcome("i_ideal_simple", is)
                .outcome("ii_simple", is && cs)
                .outcome("iii_congruence_simple", cs)
                .outcome("iv_distributive", distributive)
                .outcome("tau_universal", tau_universal)
                .outcome("e0m_tau_zero", e0m);
            rec.expect(is == distributive && (is && cs) == distributive, || {
                format!("(i)={is} (ii)={} (iv)={distributive}", is && cs)
            })
            .expect(cs, || "(iii) fails".into())
            .expect(tau_universal && e0m, || "tau is not universal".into());
            if !distributive {
                rec.outcome("divergence", "iii holds while i fails");
            }
            Ok(rec)
        })
        .collect::<Vec<_>>()
    {
        records.push(rec?);
    }
    let divergent = records
        .iter()
        .filter(|r| r.outcomes.iter().any(|(k, _)| k == "divergence"))
        .count();
    Ok(Run::new(records).note(format!(
        "non-distributive instances where (iii) diverges from (i): {divergent}"
    )))
}

fn diamond() -> Result<Run, SuiteError> {
    let cases = [
        ("M3", FiniteSemilattice::diamond()),
        ("N5", FiniteSemilattice::pentagon()),
    ];
    let mut records = Vec::new();
    for (name, m) in &cases {
        let mut rec = semilattice_record(name, m);
        let e = build_e_m(m);
        let r = e.as_hemiring();
        let f = build_f_m(&e).as_subset(&e);
        let f_ideal = f.validate(r).is_ok();
        let bourne = bourne_congruence(r, &f)?;
        let cs = is_congruence_simple(r);
        let is = is_ideal_simple(r);
        rec.outcome("e_order", r.order())
            .outcome("f_order", f.len())
            .outcome("congruence_simple", cs)
            .outcome("ideal_simple", is)
            .outcome(
                "f_proper_nonzero_ideal",
                f_ideal && !f.is_whole() && !f.is_zero(r),
            )
            .outcome("bourne_f_universal", bourne.is_universal());
        rec.expect(cs && !is, || {
            format!("congruence_simple={cs} ideal_simple={is}")
        })
        .expect(f_ideal && !f.is_whole() && !f.is_zero(r), || {
            format!("F of order {} is not a proper nonzero ideal", f.len())
        })
        .expect(bourne.is_universal(), || {
            "Bourne congruence of F is proper".into()
        });
        records.push(rec);
    }
    Ok(Run::new(records))
}

// ------------------------------------------------------------ congruences

/// Restricted growth strings: every set partition of `0..n`.
fn for_each_partition(n: usize, mut visit: impl FnMut(&[usize])) {
    fn go(blocks: &mut Vec<usize>, n: usize, max: usize, visit: &mut impl FnMut(&[usize])) {
        if blocks.len() == n {
            visit(blocks);
            return;
        }
        for b in 0..=max {
            blocks.push(b);
            go(blocks, n, max.max(b + 1), visit);
            blocks.pop();
        }
    }
    if n == 0 {
        visit(&[]);
        return;
    }
    let mut blocks = vec![0];
    go(&mut blocks, n, 1, &mut visit);
}

fn partition_is_congruence(r: &FiniteHemiring, p: &[usize]) -> bool {
    let n = r.order();
    (0..n).all(|x| {
        (x + 1..n).filter(|&y| p[x] == p[y]).all(|y| {
            (0..n).all(|c| {
                p[r.add(x, c)] == p[r.add(y, c)]
                    && p[r.mul(c, x)] == p[r.mul(c, y)]
                    && p[r.mul(x, c)] == p[r.mul(y, c)]
            })
        })
    })
}

fn oracle_instances(k: usize) -> Result<Vec<Named<FiniteHemiring>>, AlgebraError> {
    let mut out = catalog(k, false, false)?;
    out.extend(catalog(k, true, false)?);
    for (name, m) in semilattices(k.min(4))? {
        let e = build_e_m(&m);
        if e.as_hemiring().order() <= k {
            out.push((format!("E[{name}]"), e.as_hemiring().clone()));
        }
        let f = build_f_m(&e);
        if f.as_hemiring().order() <= k && !f.is_everything(&e) {
            out.push((format!("F[{name}]"), f.as_hemiring().clone()));
        }
    }
    for q in SUPPORTED_FIELDS.into_iter().filter(|&q| q <= k) {
        out.push((format!("GF({q})"), finite_field(q)?));
    }
    for n in 2..=k {
        out.push((format!("Z/{n}"), integers_mod(n)));
        out.push((format!("C{n}"), chain_semiring(n)));
    }
    Ok(out)
}

fn congruence_oracle(k: usize) -> Result<Run, SuiteError> {
    let instances = oracle_instances(k)?;
    let mut records = Vec::with_capacity(instances.len());
    for rec in instances
        .par_iter()
        .map(|(name, r)| -> Result<InstanceRecord, AlgebraError> {
            let mut rec = hemiring_record(name, r);
            let principal = is_congruence_simple(r);
            let lattice = all_congruences(r)?;
            let mut brute = 0usize;
            for_each_partition(r.order(), |p| {
                brute += partition_is_congruence(r, p) as usize
            });
            let by_lattice = lattice.len() <= 2;
            rec.outcome("principal_method", principal)
                .outcome("lattice_method", by_lattice)
                .outcome("congruences", lattice.len())
                .outcome("partition_oracle", brute);
            rec.expect(principal == by_lattice, || {
                format!(
                    "principal method {principal}, lattice of {} congruences",
                    lattice.len()
                )
            })
            .expect(brute == lattice.len(), || {
                format!("partition oracle {brute} vs lattice {}", lattice.len())
            });
            Ok(rec)
        })
        .collect::<Vec<_>>()
    {
        records.push(rec?);
    }
    Ok(Run::new(records))
}

// ------------------------------------------------------------ embeddings

/// `e_{a,b}` of `(R, +)` as maps, compared with the left multiplications.
fn left_regular_dense(r: &FiniteHemiring) -> bool {
    let lambdas: BTreeSet<Vec<Element>> = r
        .elements()
        .map(|s| r.elements().map(|x| r.mul(s, x)).collect())
        .collect();
    if lambdas.len() != r.order() {
        return false;
    }
    let Ok(m) = additive_reduct(r) else {
        return false;
    };
    m.elements().all(|a| {
        m.elements()
            .all(|b| lambdas.contains(e_ab(&m, a, b).as_slice()))
    })
}

fn dense_embedding(r: &FiniteHemiring, targets: &[(String, EndoSemiring)]) -> Option<String> {
    for (name, e) in targets {
        let s = e.as_hemiring();
        let m = e.semilattice().order();
        if m > r.order() || s.order() < r.order() {
            continue;
        }
        let gens = e.generator_indices();
        let mut found = None;
        MapSearch::new(r.order(), s.order())
            .preserve(r.add_table(), s.add_table())
            .preserve(r.mul_table(), s.mul_table())
            .fix(r.zero(), s.zero())
            .injective()
            .for_each(|f| {
                let mut image = vec![false; s.order()];
                for &y in f {
                    image[y] = true;
                }
                if gens.iter().all(|&g| image[g]) {
                    found = Some(format!("E[{name}] map={f:?}"));
                    return false;
                }
                true
            });
        if found.is_some() {
            return found;
        }
    }
    None
}

/// Additive and multiplicative closure inside `E_M`.
fn subhemiring_closure(e: &EndoSemiring, seed: &[bool]) -> Vec<bool> {
    let r = e.as_hemiring();
    let mut mask = seed.to_vec();
    let mut members: Vec<Element> = (0..mask.len()).filter(|&i| mask[i]).collect();
    let mut i = 0;
    while i < members.len() {
        let x = members[i];
        let mut j = 0;
        while j <= i {
            let y = members[j];
            for z in [r.add(x, y), r.mul(x, y), r.mul(y, x)] {
                if !mask[z] {
                    mask[z] = true;
                    members.push(z);
                }
            }
            j += 1;
        }
        i += 1;
    }
    mask
}

/// `F_M`, `E_M` and the closures of `F_M ∪ {g}` for every `g` outside
/// `F_M`, as sorted masks over `E_M`.
fn dense_family(e: &EndoSemiring) -> Vec<Vec<bool>> {
    let base = build_f_m(e).as_subset(e).mask().to_vec();
    let mut seen = BTreeSet::new();
    seen.insert(base.clone());
    for g in (0..base.len()).filter(|&g| !base[g]) {
        let mut seed = base.clone();
        seed[g] = true;
        seen.insert(subhemiring_closure(e, &seed));
    }
    seen.into_iter().collect()
}

fn thm2_2(k: usize) -> Result<Run, SuiteError> {
    let ms = semilattices(SEMILATTICE_DEFAULT_ORDER)?;
    let targets: Vec<(String, EndoSemiring)> =
        ms.iter().map(|(n, m)| (n.clone(), build_e_m(m))).collect();

    // Catalog hemirings, then every dense subhemiring of every E_M with the
    // labels reversed and the identity dropped, so nothing about the
    // embedding is visible in the tables.
    let mut instances: Vec<Named<FiniteHemiring>> = catalog(k, false, false)?;
    instances.extend(
        catalog(k, true, false)?
            .into_iter()
            .filter(|(_, r)| r.order() > HEMIRING_MAX_ORDER),
    );
    let from_catalog = instances.len();
    let mut family = 0usize;
    for (name, e) in &targets {
        let whole = e.as_hemiring().order();
        for (idx, mask) in dense_family(e).into_iter().enumerate() {
            let members: Vec<Element> = (0..mask.len()).filter(|&i| mask[i]).collect();
            let sub = e.as_hemiring().forget_identity().subhemiring(&members)?;
            let n = sub.order();
            let reversed: Vec<Element> = (0..n).rev().collect();
            let label = match (members.len() == whole, idx) {
                (true, _) => format!("E[{name}]"),
                (false, 0) => format!("F[{name}]"),
                (false, _) => format!("S[{name}]#{idx}"),
            };
            instances.push((label, sub.permuted(&reversed)));
            family += 1;
        }
    }
    let eligible: Vec<Named<FiniteHemiring>> = instances
        .into_iter()
        .filter(|(_, r)| r.is_proper() && r.order() > 2)
        .collect();

    let records = par_records(&eligible, |(name, r)| {
        let mut rec = hemiring_record(name, r);
        let cs = is_congruence_simple(r);
        rec.outcome("congruence_simple", cs);
        let dense_by_construction = !name.starts_with(['h', 'r']);
        if dense_by_construction {
            rec.expect(cs, || {
                "dense subhemiring of E_M is not congruence-simple".into()
            });
        }
        if !cs {
            return rec;
        }
        let witness = if r.is_additively_idempotent() && left_regular_dense(r) {
            Some("left-regular".to_string())
        } else {
            dense_embedding(r, &targets)
        };
        rec.outcome(
            "dense_embedding",
            witness.clone().unwrap_or_else(|| "none".into()),
        );
        rec.expect(witness.is_some(), || {
            "no dense embedding into any E_M within bounds".into()
        });
        rec
    });
    let records: Vec<InstanceRecord> = records
        .into_iter()
        .filter(|r| {
            r.outcomes.first().is_some_and(|(_, v)| v == "true") || r.status != Verdict::Confirmed
        })
        .collect();
    Ok(Run::new(records)
        .note(format!("catalog hemirings examined: {from_catalog}"))
        .note(format!("dense subhemirings of E_M examined: {family}")))
}

// -------------------------------------------------------- simple semirings

fn distributive_targets(k: usize) -> Result<Vec<(String, EndoSemiring)>, AlgebraError> {
    Ok(semilattices(k)?
        .into_iter()
        .filter(|(_, m)| try_lattice(m).is_some_and(|l| l.is_distributive()))
        .map(|(n, m)| (n, build_e_m(&m)))
        .collect())
}

fn match_e_m(r: &FiniteHemiring, targets: &[(String, EndoSemiring)]) -> Option<String> {
    targets
        .iter()
        .find(|(_, e)| {
            e.as_hemiring().order() == r.order() && is_isomorphic(r, e.as_hemiring()).is_some()
        })
        .map(|(n, _)| format!("E[{n}]"))
}

fn cor5_8(k: usize) -> Result<Run, SuiteError> {
    let targets = distributive_targets(SEMILATTICE_DEFAULT_ORDER)?;
    let fields: Vec<(usize, FiniteHemiring)> = SUPPORTED_FIELDS
        .iter()
        .map(|&q| finite_field(q).map(|f| (q, f)))
        .collect::<Result<_, _>>()?;
    let candidates = simple_candidates(k)?;
    let simple: Vec<Named<FiniteHemiring>> = candidates
        .into_iter()
        .filter(|(_, r)| is_simple(r))
        .collect();
    let records = par_records(&simple, |(name, r)| {
        let mut rec = hemiring_record(name, r);
        let field = fields
            .iter()
            .find(|(q, f)| *q == r.order() && is_isomorphic(r, f).is_some())
            .map(|(q, _)| format!("M_1(GF({q}))"));
        let witness = field.or_else(|| match_e_m(r, &targets));
        rec.outcome("match", witness.clone().unwrap_or_else(|| "none".into()));
        rec.expect(witness.is_some(), || {
            "simple semiring matches no M_n(F) and no E_M".into()
        });
        rec
    });
    Ok(Run::new(records))
}

fn thm5_7(k: usize) -> Result<Run, SuiteError> {
    let targets = distributive_targets(SEMILATTICE_DEFAULT_ORDER)?;
    // Corners of full idempotents in M_n(B), n <= 3.
    let b = boolean_b();
    let mut corners: Vec<(String, FiniteHemiring)> = Vec::new();
    for n in 1..=3 {
        let mat = matrix_semiring(&b, n)?;
        for e in full_idempotents(mat.as_hemiring()) {
            let c = corner(mat.as_hemiring(), e)?;
            corners.push((
                format!("M_{n}(B) e={:?}", mat.unpack(e)),
                c.as_hemiring().clone(),
            ));
        }
    }
    let morita = |r: &FiniteHemiring| {
        corners
            .iter()
            .find(|(_, c)| c.order() == r.order() && is_isomorphic(r, c).is_some())
            .map(|(n, _)| n.clone())
            .unwrap_or_else(|| "none within n <= 3".into())
    };

    let mut instances: Vec<Named<FiniteHemiring>> = simple_candidates(k)?
        .into_iter()
        .filter(|(_, r)| r.order() > 1 && r.infinite_element().is_some() && is_simple(r))
        .collect();
    let from_catalog = instances.len();
    instances.extend(
        targets
            .iter()
            .filter(|(_, e)| e.semilattice().order() >= 2)
            .map(|(n, e)| (format!("E[{n}]"), e.as_hemiring().clone())),
    );
    let records = par_records(&instances, |(name, r)| {
        let mut rec = hemiring_record(name, r);
        let simple = is_simple(r);
        let inf = r.infinite_element();
        let m = match_e_m(r, &targets);
        rec.outcome("simple", simple)
            .outcome(
                "infinite_element",
                inf.map_or("none".into(), |x| x.to_string()),
            )
            .outcome("e_m_match", m.clone().unwrap_or_else(|| "none".into()))
            .outcome("full_idempotent_witness", morita(r));
        rec.expect(simple && inf.is_some(), || {
            format!("simple={simple} infinite_element={inf:?}")
        })
        .expect(m.is_some(), || {
            "no distributive M with E_M isomorphic".into()
        });
        rec
    });
    Ok(Run::new(records).note(format!(
        "simple catalog semirings with an infinite element: {from_catalog}"
    )))
}

fn prop5_5(k: usize) -> Result<Run, SuiteError> {
    let rs = catalog(k, false, true)?;
    let mut records = Vec::with_capacity(rs.len());
    for rec in rs
        .par_iter()
        .map(|(name, r)| -> Result<InstanceRecord, AlgebraError> {
            let mut rec = hemiring_record(name, r);
            let m2 = matrix_semiring(r, 2)?;
            let mr = m2.as_hemiring();
            let pairs = [
                (
                    "congruence_simple",
                    is_congruence_simple(r),
                    is_congruence_simple(mr),
                ),
                ("ideal_simple", is_ideal_simple(r), is_ideal_simple(mr)),
                ("simple", is_simple(r), is_simple(mr)),
            ];
            rec.outcome("matrix_order", mr.order());
            for (key, a, b) in pairs {
                rec.outcome(key, format!("{a}/{b}"));
                rec.expect(a == b, || format!("{key}: R={a} M_2(R)={b}"));
            }
            Ok(rec)
        })
        .collect::<Vec<_>>()
    {
        records.push(rec?);
    }
    Ok(Run::new(records))
}

fn masks(ideals: impl IntoIterator<Item = IdealSubset>) -> BTreeSet<Vec<bool>> {
    ideals.into_iter().map(|i| i.mask().to_vec()).collect()
}

fn prop5_3_instance(
    name: &str,
    r: &FiniteHemiring,
    e: Element,
) -> Result<InstanceRecord, AlgebraError> {
    let mut rec = hemiring_record(&format!("{name} e={e}"), r);
    let c = corner(r, e)?;
    let cr = c.as_hemiring();
    let full = is_full_idempotent(r, e);
    let corner_ideals = all_ideals(cr, Side::TwoSided)?;
    let corner_congs = all_congruences(cr)?;
    rec.outcome("corner_order", cr.order())
        .outcome("full", full)
        .outcome("corner_ideals", corner_ideals.len())
        .outcome("corner_congruences", corner_congs.len());

    let mapped: Vec<IdealSubset> = corner_ideals
        .iter()
        .map(|i| corner_ideal_extension(r, &c, i))
        .collect();
    for (i, j) in corner_ideals.iter().zip(&mapped) {
        rec.expect(j.validate(r).is_ok(), || {
            format!("RIR not an ideal for I={:?}", i.to_vec())
        });
        rec.expect(
            corner_ideal_restriction(r, &c, j).mask() == i.mask(),
            || format!("e(RIR)e != I for I={:?}", i.to_vec()),
        );
    }
    for (a, ia) in corner_ideals.iter().enumerate() {
        for (b, ib) in corner_ideals.iter().enumerate() {
            let lhs = ideal_product(r, &mapped[a], &mapped[b]);
            let rhs = corner_ideal_extension(r, &c, &ideal_product(cr, ia, ib));
            rec.expect(lhs.mask() == rhs.mask(), || {
                format!(
                    "(RIR)(RI'R) != R(II')R for I={:?} I'={:?}",
                    ia.to_vec(),
                    ib.to_vec()
                )
            });
        }
    }
    let thetas: Vec<_> = corner_congs
        .iter()
        .map(|g| corner_congruence_extension(r, &c, g))
        .collect();
    for (g, t) in corner_congs.iter().zip(&thetas) {
        rec.expect(t.check_compatible(r).is_ok(), || {
            format!("Θ not a congruence for Γ={:?}", g.blocks())
        });
        rec.expect(&corner_congruence_restriction(t, &c) == g, || {
            format!("(eRe)²∩Θ != Γ for Γ={:?}", g.blocks())
        });
    }
    if full {
        let ideals_onto = masks(mapped) == masks(all_ideals(r, Side::TwoSided)?);
        let all = all_congruences(r)?;
        let congs_onto = thetas.iter().cloned().collect::<BTreeSet<_>>()
            == all.into_iter().collect::<BTreeSet<_>>();
        let same = [
            ("simple", is_simple(r), is_simple(cr)),
            ("ideal_simple", is_ideal_simple(r), is_ideal_simple(cr)),
            (
                "congruence_simple",
                is_congruence_simple(r),
                is_congruence_simple(cr),
            ),
        ];
        rec.outcome("ideal_map_onto", ideals_onto)
            .outcome("congruence_map_onto", congs_onto);
        rec.expect(ideals_onto, || "ideal map misses an ideal of R".into())
            .expect(congs_onto, || {
                "congruence map misses a congruence of R".into()
            });
        for (key, a, b) in same {
            rec.outcome(key, format!("{a}/{b}"));
            rec.expect(a == b, || format!("{key}: R={a} eRe={b}"));
        }
    }
    Ok(rec)
}

fn prop5_3(k: usize) -> Result<Run, SuiteError> {
    let mut rings: Vec<Named<FiniteHemiring>> = vec![
        (
            "M_2(B)".into(),
            matrix_semiring(&boolean_b(), 2)?.as_hemiring().clone(),
        ),
        (
            "M_2(Z/2)".into(),
            matrix_semiring(&integers_mod(2), 2)?.as_hemiring().clone(),
        ),
    ];
    rings.extend(catalog(k, false, true)?);
    let jobs: Vec<(&str, &FiniteHemiring, Element)> = rings
        .iter()
        .flat_map(|(n, r)| r.idempotents().into_iter().map(move |e| (n.as_str(), r, e)))
        .collect();
    let mut records = Vec::with_capacity(jobs.len());
    for rec in jobs
        .par_iter()
        .map(|&(n, r, e)| prop5_3_instance(n, r, e))
        .collect::<Vec<_>>()
    {
        records.push(rec?);
    }
    Ok(Run::new(records))
}

fn thm5_10(k: usize) -> Result<Run, SuiteError> {
    let b = boolean_b();
    let m2 = matrix_semiring(&b, 2)?;
    let e11 = m2.unit(0, 0)?;
    let c3 = build_e_m(&FiniteSemilattice::chain(3));
    let mut cases: Vec<(String, FiniteHemiring, IdealSubset)> = vec![
        ("B, B".into(), b.clone(), IdealSubset::whole(2, Side::Left)),
        (
            "M_2(B), M_2(B)E11".into(),
            m2.as_hemiring().clone(),
            generated_ideal(m2.as_hemiring(), &[e11], Side::Left),
        ),
    ];
    let mut add_minimal = |label: &str, r: &FiniteHemiring| -> Result<(), AlgebraError> {
        for i in minimal_left_ideals(r)? {
            if let Some(e) = idempotent_generated(r, &i) {
                cases.push((format!("{label}, Re e={e}"), r.clone(), i));
            }
        }
        Ok(())
    };
    add_minimal("E[C3]", c3.as_hemiring())?;
    for (name, r) in simple_candidates(k)?
        .into_iter()
        .filter(|(_, r)| r.order() > 1 && is_simple(r))
    {
        add_minimal(&name, &r)?;
    }
    let mut records = Vec::with_capacity(cases.len());
    for rec in cases
        .par_iter()
        .map(|(name, r, i)| -> Result<InstanceRecord, AlgebraError> {
            let mut rec = hemiring_record(name, r);
            let d = double_centralizer_check(r, i)?;
            rec.outcome("ideal_order", d.ideal_order)
                .outcome("d_order", d.d.hemiring.order())
                .outcome("end_over_d_order", d.end_over_d.hemiring.order())
                .outcome("homomorphism", d.is_homomorphism)
                .outcome("injective", d.injective)
                .outcome("surjective", d.surjective)
                .outcome("iso", d.iso);
            rec.expect(d.ring_simple, || "ring is not simple".into())
                .expect(d.is_homomorphism && d.iso, || {
                    format!("natural map {:?} is not an isomorphism", d.natural_map.map)
                });
            Ok(rec)
        })
        .collect::<Vec<_>>()
    {
        records.push(rec?);
    }
    Ok(Run::new(records))
}

// ------------------------------------------------ additively idempotent

fn is_b(r: &FiniteHemiring) -> bool {
    is_isomorphic(r, &boolean_b()).is_some()
}

fn thm6_4_6_5(k: usize) -> Result<Run, SuiteError> {
    let all = catalog(k, true, true)?;
    let total = all.len();
    let aic: Vec<Named<FiniteHemiring>> = all
        .into_iter()
        .filter(|(_, r)| r.order() > 1 && r.is_aic())
        .collect();
    let mut records = Vec::with_capacity(aic.len());
    for rec in aic
        .par_iter()
        .map(|(name, r)| -> Result<InstanceRecord, AlgebraError> {
            let mut rec = hemiring_record(name, r);
            let is = is_ideal_simple(r);
            let division = r.is_division_semiring()?;
            let simple = is_simple(r);
            let iso_b = is_b(r);
            let j = aic_max_ideal(r)?;
            let rad = radical_left(r)?;
            rec.outcome("ideal_simple", is)
                .outcome("division", division)
                .outcome("simple", simple)
                .outcome("isomorphic_to_b", iso_b)
                .outcome("j", format!("{:?}", j.to_vec()))
                .outcome("radical", format!("{:?}", rad.to_vec()));
            rec.expect(is == division, || {
                format!("ideal_simple={is} division={division}")
            })
            .expect(simple == iso_b, || {
                format!("simple={simple} isomorphic_to_b={iso_b}")
            })
            .expect(j.mask() == rad.mask(), || {
                "J differs from the radical".into()
            });
            Ok(rec)
        })
        .collect::<Vec<_>>()
    {
        records.push(rec?);
    }
    let n = records.len();
    Ok(Run::new(records).note(format!(
        "aic instances of order > 1: {n} of {total} catalog semirings"
    )))
}

fn thm6_7(k: usize) -> Result<Run, SuiteError> {
    let all = catalog(k, true, true)?;
    let lo: Vec<Named<FiniteHemiring>> = all
        .into_iter()
        .filter(|(_, r)| r.order() > 1 && r.is_lattice_ordered())
        .collect();
    let records = par_records(&lo, |(name, r)| {
        let mut rec = hemiring_record(name, r);
        let cs = is_congruence_simple(r);
        let simple = cs && is_ideal_simple(r);
        let iso_b = is_b(r);
        rec.outcome("congruence_simple", cs)
            .outcome("simple", simple)
            .outcome("isomorphic_to_b", iso_b);
        rec.expect(cs == simple && simple == iso_b, || {
            format!("congruence_simple={cs} simple={simple} isomorphic_to_b={iso_b}")
        });
        rec
    });
    let cs_names: Vec<&str> = records
        .iter()
        .filter(|r| r.outcomes.first().is_some_and(|(_, v)| v == "true"))
        .map(|r| r.name.as_str())
        .collect();
    let note = format!(
        "congruence-simple lattice-ordered instances: {}",
        cs_names.join(", ")
    );
    Ok(Run::new(records).note(note))
}
