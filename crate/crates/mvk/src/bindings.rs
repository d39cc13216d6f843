//! Operator bindings: `label=aut:<i>`, `label=translation:<x>`,
//! `label=cycles:<a,b,c;d,e>` or `label=id`, each optionally prefixed
//! `inv:` for the inverse.

use mvk_core::algebra::{automorphism_group, Permutation};
use mvk_core::invariants::translation_operator;
use mvk_core::MultiplicationTable;
use std::collections::BTreeMap;

/// Binding errors.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum BindingError {
    /// Not of the form `label=spec`.
    #[error("binding {0:?} is not of the form label=spec")]
    Syntax(String),
    /// Unknown operator spec.
    #[error("unknown operator {0:?}; use aut:<i>, translation:<x>, cycles:<..> or id")]
    Spec(String),
    /// Index outside `Aut(Q)`.
    #[error("aut:{index} out of range; Aut has {size} elements")]
    AutIndex {
        /// Requested index.
        index: usize,
        /// `|Aut(Q)|`.
        size: usize,
    },
    /// Element name or index not in the quandle.
    #[error("no element {0:?}")]
    Element(String),
    /// Cycles do not form a permutation.
    #[error("cycles {0:?} do not describe a permutation")]
    Cycles(String),
    /// The same label bound twice.
    #[error("type {0} bound twice")]
    Duplicate(String),
}

/// Element by index or display label.
pub fn element(q: &MultiplicationTable, s: &str) -> Option<usize> {
    if let Some(l) = q.labels() {
        if let Some(i) = l.iter().position(|x| x == s) {
            return Some(i);
        }
    }
    s.parse().ok().filter(|&i| i < q.order())
}

/// One operator from its spec. `auts` caches `Aut(Q)` in sorted order.
pub fn operator(q: &MultiplicationTable, auts: &mut Option<Vec<Permutation>>, spec: &str) -> Result<Permutation, BindingError> {
    let (base, inverse) = match spec.strip_prefix("inv:") {
        Some(b) => (b, true),
        None => (spec, false),
    };
    let p = if base == "id" {
        Permutation::identity(q.order())
    } else if let Some(i) = base.strip_prefix("aut:") {
        let index: usize = i.parse().map_err(|_| BindingError::Spec(spec.to_string()))?;
        let all = auts.get_or_insert_with(|| automorphism_group(q));
        all.get(index).cloned().ok_or(BindingError::AutIndex { index, size: all.len() })?
    } else if let Some(x) = base.strip_prefix("translation:") {
        let e = element(q, x).ok_or_else(|| BindingError::Element(x.to_string()))?;
        translation_operator(q, e).map_err(|_| BindingError::Element(x.to_string()))?
    } else if let Some(c) = base.strip_prefix("cycles:") {
        let bad = || BindingError::Cycles(c.to_string());
        let cycles: Vec<Vec<usize>> = c
            .split(';')
            .filter(|s| !s.is_empty())
            .map(|cyc| cyc.split(',').map(|x| element(q, x.trim()).ok_or_else(bad)).collect())
            .collect::<Result<_, _>>()?;
        let refs: Vec<&[usize]> = cycles.iter().map(Vec::as_slice).collect();
        Permutation::from_cycles(q.order(), &refs).map_err(|_| bad())?
    } else {
        return Err(BindingError::Spec(spec.to_string()));
    };
    Ok(if inverse { p.inverse() } else { p })
}

/// Parses `label=spec` bindings. `alpha` and `beta` also name `α` and `β`.
pub fn parse_bindings(q: &MultiplicationTable, items: &[String]) -> Result<BTreeMap<String, Permutation>, BindingError> {
    let mut auts = None;
    let mut out = BTreeMap::new();
    for item in items {
        let (label, spec) = item.split_once('=').ok_or_else(|| BindingError::Syntax(item.clone()))?;
        let label = match label.trim() {
            "alpha" => "α",
            "beta" => "β",
            "gamma" => "γ",
            l => l,
        };
        let p = operator(q, &mut auts, spec.trim())?;
        if out.insert(label.to_string(), p).is_some() {
            return Err(BindingError::Duplicate(label.to_string()));
        }
    }
    Ok(out)
}
