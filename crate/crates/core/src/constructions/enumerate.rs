use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::error::{guard, Result};
use crate::hemiring::FiniteHemiring;
use crate::hom::{canonical_form, canonical_labeling, canonical_semilattice};
use crate::lattice::{is_semilattice, FiniteSemilattice};
use crate::table::{Element, OpTable};

/// Largest semilattice order accepted by [`enumerate_semilattices`].
pub const SEMILATTICE_MAX_ORDER: usize = 6;
/// Semilattice order used when the caller does not choose one.
pub const SEMILATTICE_DEFAULT_ORDER: usize = 5;
/// Largest order for additively idempotent hemiring catalogs.
pub const HEMIRING_IDEMPOTENT_MAX_ORDER: usize = 4;
/// Largest order for unconstrained hemiring catalogs.
pub const HEMIRING_MAX_ORDER: usize = 3;

/// What a catalog contains.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CatalogKind {
    /// Semilattices with zero.
    Semilattice,
    /// Hemirings (identity optional).
    Hemiring,
    /// Semirings only.
    Semiring,
}

/// Restrictions applied while enumerating hemirings.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct HemiringConstraints {
    /// Only `x + x = x`.
    pub additively_idempotent: bool,
    /// Only algebras with a multiplicative identity.
    pub require_identity: bool,
}

/// A catalog member with a stable name such as `h3-07`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogEntry<T> {
    /// Stable identifier: kind prefix, order, position within the order.
    pub name: String,
    /// The canonical representative.
    pub algebra: T,
}

/// Pairwise non-isomorphic canonical algebras, sorted by order and then by
/// canonical tables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Catalog<T> {
    /// Contents.
    pub kind: CatalogKind,
    /// Largest order enumerated.
    pub max_order: usize,
    /// Members.
    pub entries: Vec<CatalogEntry<T>>,
}

impl<T> Catalog<T> {
    /// Number of members.
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    /// Whether the catalog is empty.
    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Members in order.
    pub fn iter(&self) -> impl Iterator<Item = &CatalogEntry<T>> {
        self.entries.iter()
    }
}

fn name_entries<T>(prefix: &str, algebras: Vec<(usize, T)>) -> Vec<CatalogEntry<T>> {
    let mut out = Vec::with_capacity(algebras.len());
    let mut last_order = 0;
    let mut k = 0;
    for (order, algebra) in algebras {
        if order != last_order {
            last_order = order;
            k = 0;
        }
        out.push(CatalogEntry {
            name: format!("{prefix}{order}-{k:02}"),
            algebra,
        });
        k += 1;
    }
    out
}

/// Join tables on `0..n` where index order is a linear extension of the
/// induced order (so `a ∨ b >= max(a, b)`), zero at 0.
fn raw_semilattices(n: usize, mut visit: impl FnMut(OpTable)) {
    let mut table = alloc::vec![0usize; n * n];
    for a in 0..n {
        table[a * n + a] = a;
        table[a] = a;
        table[a * n] = a;
    }
    let pairs: Vec<(usize, usize)> = (1..n).flat_map(|b| (1..b).map(move |a| (a, b))).collect();
    fn rec(
        n: usize,
        pairs: &[(usize, usize)],
        k: usize,
        table: &mut [usize],
        visit: &mut dyn FnMut(OpTable),
    ) {
        if k == pairs.len() {
            let t = OpTable::new(n, table).expect("entries in range");
            if is_semilattice(&t, 0) {
                visit(t);
            }
            return;
        }
        let (a, b) = pairs[k];
        for v in b..n {
            table[a * n + b] = v;
            table[b * n + a] = v;
            rec(n, pairs, k + 1, table, visit);
        }
    }
    rec(n, &pairs, 0, &mut table, &mut visit);
}

/// All semilattices with zero of order `1..=max_order` up to isomorphism.
pub fn enumerate_semilattices(max_order: usize) -> Result<Catalog<FiniteSemilattice>> {
    guard("semilattice order", max_order, SEMILATTICE_MAX_ORDER)?;
    let mut found: Vec<(usize, FiniteSemilattice)> = Vec::new();
    for n in 1..=max_order {
        let mut seen = BTreeSet::new();
        raw_semilattices(n, |t| {
            let m = FiniteSemilattice::from_parts(t, 0);
            let c = canonical_semilattice(&m).expect("small orders stay under the labeling guard");
            if seen.insert(c.join_table().entries().collect::<Vec<_>>()) {
                found.push((n, c));
            }
        });
    }
    found.sort_by(|(n, a), (m, b)| {
        n.cmp(m)
            .then_with(|| a.join_table().entries().cmp(b.join_table().entries()))
    });
    Ok(Catalog {
        kind: CatalogKind::Semilattice,
        max_order,
        entries: name_entries("s", found),
    })
}

fn additive_signature(t: &OpTable, x: Element) -> Vec<usize> {
    let n = t.order();
    let mut period = 1;
    let mut acc = x;
    while period <= n && t.get(acc, x) != x {
        acc = t.get(acc, x);
        period += 1;
    }
    alloc::vec![
        (x != 0) as usize,
        (t.get(x, x) == x) as usize,
        (0..n).filter(|&y| t.get(x, y) == x).count(),
        (0..n).filter(|&y| t.get(x, y) == y).count(),
        (0..n).filter(|&y| t.get(y, y) == x).count(),
        period,
    ]
}

/// Commutative monoids on `0..n` with identity 0, up to isomorphism.
pub fn enumerate_commutative_monoids(n: usize, idempotent: bool) -> Result<Vec<OpTable>> {
    guard("monoid order", n, HEMIRING_IDEMPOTENT_MAX_ORDER)?;
    let pairs: Vec<(usize, usize)> = (1..n).flat_map(|a| (a..n).map(move |b| (a, b))).collect();
    let mut table = alloc::vec![0usize; n * n];
    for a in 0..n {
        table[a] = a;
        table[a * n] = a;
    }
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    let total = n.pow(pairs.len() as u32);
    for code in 0..total {
        let mut c = code;
        for &(a, b) in &pairs {
            let v = c % n;
            c /= n;
            table[a * n + b] = v;
            table[b * n + a] = v;
        }
        if idempotent && (1..n).any(|a| table[a * n + a] != a) {
            continue;
        }
        let assoc = (0..n).all(|a| {
            (0..n).all(|b| {
                (0..n).all(|c| table[table[a * n + b] * n + c] == table[a * n + table[b * n + c]])
            })
        });
        if !assoc {
            continue;
        }
        let t = OpTable::new(n, &table).expect("entries in range");
        let sig: Vec<Vec<usize>> = (0..n).map(|x| additive_signature(&t, x)).collect();
        let perm = canonical_labeling(&[&t], &sig)?;
        let canon = t.permuted(&perm);
        if seen.insert(canon.entries().collect::<Vec<_>>()) {
            out.push(canon);
        }
    }
    out.sort_by(|a, b| a.entries().cmp(b.entries()));
    Ok(out)
}

/// Multiplication tables over `add` with zero 0 absorbing, associative and
/// distributive. Cells are filled row-major; every law whose cells are all
/// known is checked after each assignment.
fn multiplications(add: &OpTable, mut visit: impl FnMut(OpTable)) {
    let n = add.order();
    const UNSET: usize = usize::MAX;
    let mut m = alloc::vec![UNSET; n * n];
    for a in 0..n {
        m[a] = 0;
        m[a * n] = 0;
    }
    let cells: Vec<usize> = (1..n)
        .flat_map(|a| (1..n).map(move |b| a * n + b))
        .collect();

    fn consistent(add: &OpTable, m: &[usize]) -> bool {
        let n = add.order();
        let get = |a: usize, b: usize| m[a * n + b];
        for x in 0..n {
            for y in 0..n {
                let xy = get(x, y);
                for z in 0..n {
                    let yz = get(y, z);
                    if xy != UNSET && yz != UNSET {
                        let (l, r) = (get(xy, z), get(x, yz));
                        if l != UNSET && r != UNSET && l != r {
                            return false;
                        }
                    }
                    let (xz, sum_yz) = (get(x, z), add.get(y, z));
                    let x_sum = get(x, sum_yz);
                    if x_sum != UNSET && xy != UNSET && xz != UNSET && x_sum != add.get(xy, xz) {
                        return false;
                    }
                    let (yx, zx) = (get(y, x), get(z, x));
                    let sum_x = get(sum_yz, x);
                    if sum_x != UNSET && yx != UNSET && zx != UNSET && sum_x != add.get(yx, zx) {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn rec(
        add: &OpTable,
        m: &mut [usize],
        cells: &[usize],
        k: usize,
        visit: &mut dyn FnMut(OpTable),
    ) {
        let n = add.order();
        if k == cells.len() {
            visit(OpTable::new(n, m).expect("entries in range"));
            return;
        }
        for v in 0..n {
            m[cells[k]] = v;
            if consistent(add, m) {
                rec(add, m, cells, k + 1, visit);
            }
        }
        m[cells[k]] = UNSET;
    }
    rec(add, &mut m, &cells, 0, &mut visit);
}

/// All hemirings of order `1..=max_order` satisfying `constraints`, up to
/// isomorphism. The identity, when present, is recorded.
pub fn enumerate_hemirings(
    max_order: usize,
    constraints: HemiringConstraints,
) -> Result<Catalog<FiniteHemiring>> {
    let limit = if constraints.additively_idempotent {
        HEMIRING_IDEMPOTENT_MAX_ORDER
    } else {
        HEMIRING_MAX_ORDER
    };
    guard("hemiring order", max_order, limit)?;
    let mut found: Vec<(usize, FiniteHemiring)> = Vec::new();
    for n in 1..=max_order {
        let mut seen = BTreeSet::new();
        for add in enumerate_commutative_monoids(n, constraints.additively_idempotent)? {
            let mut local = Vec::new();
            multiplications(&add, |mul| local.push(mul));
            for mul in local {
                let raw = FiniteHemiring::from_parts(add.clone(), mul, 0, None);
                if constraints.require_identity && raw.find_identity().is_none() {
                    continue;
                }
                let c = canonical_form(&raw)?;
                let key: (Vec<Element>, Vec<Element>) = (
                    c.add_table().entries().collect(),
                    c.mul_table().entries().collect(),
                );
                if seen.insert(key) {
                    found.push((n, c));
                }
            }
        }
    }
    found.sort_by(|(n, a), (m, b)| {
        n.cmp(m)
            .then_with(|| a.add_table().entries().cmp(b.add_table().entries()))
            .then_with(|| a.mul_table().entries().cmp(b.mul_table().entries()))
    });
    let (kind, prefix) = match (
        constraints.require_identity,
        constraints.additively_idempotent,
    ) {
        (false, false) => (CatalogKind::Hemiring, "h"),
        (false, true) => (CatalogKind::Hemiring, "hi"),
        (true, false) => (CatalogKind::Semiring, "r"),
        (true, true) => (CatalogKind::Semiring, "ri"),
    };
    Ok(Catalog {
        kind,
        max_order,
        entries: name_entries(prefix, found),
    })
}
