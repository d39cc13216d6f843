//! Named quandles, cocycles and diagrams, plus lookup of command line
//! arguments that name either a file or a builtin.

use crate::cocycle_file::parse_cocycle;
use crate::qtab::{parse_qtab, QtabDocument};
use mvk_core::constructions::{alexander_16, dihedral_quandle, projection_quandle, qme, TypeVector};
use mvk_core::diagram::{builtin_diagram, builtin_names, Diagram};
use mvk_core::invariants::CocycleTable;
use mvk_core::MultiplicationTable;

/// Catalog table files, embedded.
pub const TABLE_FILES: &[(&str, &str)] = &[
    ("q4", include_str!("../catalog/q4.qtab")),
    ("cq_5_2", include_str!("../catalog/cq_5_2.qtab")),
    ("cq_6_1", include_str!("../catalog/cq_6_1.qtab")),
    ("cq_6_2", include_str!("../catalog/cq_6_2.qtab")),
    ("cq_10_1", include_str!("../catalog/cq_10_1.qtab")),
    ("cq_12_8", include_str!("../catalog/cq_12_8.qtab")),
];

/// The `Q4` cocycle `φ(x,y) = y(x-y)^2`.
pub const Q4_PHI: &str = include_str!("../fixtures/q4_phi.cocycle");

/// Quandle names with patterns, for listings.
pub fn quandle_names() -> Vec<String> {
    let mut v: Vec<String> = TABLE_FILES.iter().map(|(n, _)| n.to_string()).collect();
    v.extend(["alexander_16", "dihedral(n)", "projection(n)", "qme(e1,..,em)"].map(String::from));
    v
}

/// The catalog file for a name, if it is one.
pub fn table_document(name: &str) -> Option<QtabDocument> {
    TABLE_FILES.iter().find(|(n, _)| *n == name).map(|(_, text)| parse_qtab(text).expect("catalog files parse"))
}

fn call<'a>(name: &'a str, f: &str) -> Option<&'a str> {
    name.strip_prefix(f)?.strip_prefix('(')?.strip_suffix(')')
}

/// A builtin quandle by name.
pub fn builtin_quandle(name: &str) -> Option<MultiplicationTable> {
    if let Some(doc) = table_document(name) {
        return Some(doc.table);
    }
    if name == "alexander_16" {
        return Some(alexander_16());
    }
    if let Some(n) = call(name, "dihedral").and_then(|a| a.trim().parse().ok()).filter(|&n: &usize| n > 0) {
        return Some(dihedral_quandle(n));
    }
    if let Some(n) = call(name, "projection").and_then(|a| a.trim().parse().ok()).filter(|&n: &usize| n > 0) {
        return Some(projection_quandle(n));
    }
    if let Some(args) = call(name, "qme") {
        let bits: Option<Vec<bool>> = args
            .split(',')
            .map(|b| match b.trim() {
                "0" => Some(false),
                "1" => Some(true),
                _ => None,
            })
            .collect();
        return TypeVector::new(bits?).map(|e| qme(&e));
    }
    None
}

/// A builtin cocycle by name.
pub fn builtin_cocycle(name: &str) -> Option<CocycleTable> {
    (name == "q4_phi").then(|| parse_cocycle(Q4_PHI).expect("builtin cocycle parses"))
}

/// What an argument resolved to.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Source {
    /// Read from this path.
    File(String),
    /// A builtin name.
    Builtin(String),
}

/// An argument that names an existing file, or failing that a builtin.
pub fn resolve(arg: &str) -> Source {
    if std::path::Path::new(arg).is_file() {
        Source::File(arg.to_string())
    } else {
        Source::Builtin(arg.to_string())
    }
}

/// Builtin diagrams with concrete sample parameters for listings.
pub fn diagram_samples() -> Vec<(String, Diagram)> {
    builtin_names()
        .into_iter()
        .map(|n| match n.as_str() {
            "K(n)" => "K(3)".to_string(),
            "L(i,j)" => "L(0,2)".to_string(),
            _ => n,
        })
        .map(|n| {
            let d = builtin_diagram(&n).expect("listed names build");
            (n, d)
        })
        .collect()
}
