//! Deterministic CSV and JSON rendering of counts and profile tables.
//!
//! Counts are serialized as decimal strings: they outgrow 64-bit integers
//! quickly and the string form is lossless everywhere.

use serde::Serialize;

use quasihom_core::closed_form::ProfileTable;

/// A single count result, as echoed by the `count` subcommand.
#[derive(Debug, Clone, Serialize)]
pub struct CountRecord {
    pub family: String,
    pub n: usize,
    pub m: usize,
    pub class: String,
    pub method: String,
    pub count: String,
}

/// One profile row with its provenance columns.
#[derive(Debug, Clone, Serialize)]
pub struct ProfileRecord {
    pub family: String,
    pub n: usize,
    pub m: usize,
    pub class: String,
    pub method: String,
    pub count: String,
}

pub fn profile_records(table: &ProfileTable, method: &str) -> Vec<ProfileRecord> {
    table
        .rows
        .iter()
        .map(|row| ProfileRecord {
            family: row.family.name().to_string(),
            n: row.n,
            m: table.m,
            class: row.class.name().to_string(),
            method: method.to_string(),
            count: row.count.to_string(),
        })
        .collect()
}

/// CSV with a header row and LF line endings; byte-identical across runs.
pub fn profile_csv(records: &[ProfileRecord]) -> String {
    let mut out = String::from("family,n,m,class,method,count\n");
    for r in records {
        out.push_str(&format!(
            "{},{},{},{},{},{}\n",
            r.family, r.n, r.m, r.class, r.method, r.count
        ));
    }
    out
}

pub fn profile_json(records: &[ProfileRecord]) -> String {
    let mut out = serde_json::to_string_pretty(records).expect("records serialize");
    out.push('\n');
    out
}

pub fn count_json(record: &CountRecord) -> String {
    let mut out = serde_json::to_string(record).expect("record serializes");
    out.push('\n');
    out
}
