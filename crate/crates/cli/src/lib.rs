//! File formats, on-disk catalogs, reports and verification suites for the
//! `hemiring` crate.

pub mod catalog;
pub mod classify;
pub mod format;
pub mod report;
pub mod suites;
