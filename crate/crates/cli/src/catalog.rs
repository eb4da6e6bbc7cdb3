//! Canonical hashes, fingerprints and on-disk catalogs.

use std::fs;
use std::path::Path;

use hemiring::constructions::Catalog;
use hemiring::hom::{canonical_form, canonical_semilattice};
use hemiring::{FiniteHemiring, FiniteSemilattice};
use sha2::{Digest, Sha256};

use crate::format::{write_hemiring, write_semilattice};

fn sha256_hex(text: &str) -> String {
    hex::encode(Sha256::digest(text.as_bytes()))
}

/// SHA-256 of the canonical table file; equal exactly for isomorphic
/// algebras (identity recorded when present).
pub fn hemiring_hash(r: &FiniteHemiring) -> String {
    match canonical_form(r) {
        Ok(c) => sha256_hex(&write_hemiring(&c, &[])),
        Err(_) => format!("raw-{}", sha256_hex(&write_hemiring(r, &[]))),
    }
}

/// SHA-256 of the canonical semilattice file.
pub fn semilattice_hash(m: &FiniteSemilattice) -> String {
    match canonical_semilattice(m) {
        Ok(c) => sha256_hex(&write_semilattice(&c, &[])),
        Err(_) => format!("raw-{}", sha256_hex(&write_semilattice(m, &[]))),
    }
}

/// Short structural summary used to identify instances in reports.
pub fn hemiring_fingerprint(r: &FiniteHemiring) -> String {
    let one = r.one().or_else(|| r.find_identity()).is_some();
    format!(
        "n={} ai={} one={} comm={} idem={} h={}",
        r.order(),
        r.is_additively_idempotent() as u8,
        one as u8,
        r.is_commutative() as u8,
        r.idempotents().len(),
        &hemiring_hash(r)[..12],
    )
}

/// Order, chain/lattice shape and canonical hash prefix.
pub fn semilattice_fingerprint(m: &FiniteSemilattice) -> String {
    let profile = m.induced_order();
    format!(
        "n={} chain={} atoms={} h={}",
        m.order(),
        profile.is_total() as u8,
        m.elements()
            .filter(|&x| x != m.zero() && m.elements().filter(|&y| m.leq(y, x)).count() == 2)
            .count(),
        &semilattice_hash(m)[..12],
    )
}

/// Writes one file per entry plus `index.tsv` (`name  order  sha256
/// fingerprint`). Output bytes depend only on the catalog.
pub fn write_hemiring_catalog(
    dir: &Path,
    catalog: &Catalog<FiniteHemiring>,
) -> std::io::Result<usize> {
    fs::create_dir_all(dir)?;
    let mut index = String::from("# name\torder\tsha256\tfingerprint\n");
    for e in catalog.iter() {
        let text = write_hemiring(&e.algebra, &[&e.name]);
        fs::write(dir.join(format!("{}.txt", e.name)), text)?;
        index.push_str(&format!(
            "{}\t{}\t{}\t{}\n",
            e.name,
            e.algebra.order(),
            hemiring_hash(&e.algebra),
            hemiring_fingerprint(&e.algebra)
        ));
    }
    fs::write(dir.join("index.tsv"), index)?;
    Ok(catalog.len())
}

/// As [`write_hemiring_catalog`] for semilattices.
pub fn write_semilattice_catalog(
    dir: &Path,
    catalog: &Catalog<FiniteSemilattice>,
) -> std::io::Result<usize> {
    fs::create_dir_all(dir)?;
    let mut index = String::from("# name\torder\tsha256\tfingerprint\n");
    for e in catalog.iter() {
        let text = write_semilattice(&e.algebra, &[&e.name]);
        fs::write(dir.join(format!("{}.txt", e.name)), text)?;
        index.push_str(&format!(
            "{}\t{}\t{}\t{}\n",
            e.name,
            e.algebra.order(),
            semilattice_hash(&e.algebra),
            semilattice_fingerprint(&e.algebra)
        ));
    }
    fs::write(dir.join("index.tsv"), index)?;
    Ok(catalog.len())
}
