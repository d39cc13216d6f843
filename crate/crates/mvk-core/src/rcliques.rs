//! R-commutation, R-cliques and subrack closure.
//!
//! `a ~ b` iff `R_a` and `R_b` commute. An R-clique is a set of pairwise
//! related elements.

use crate::algebra::{cayley_kernel, right_translations, AlgebraError, MultiplicationTable};
use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

/// True iff `R_a R_b = R_b R_a`.
pub fn r_commutes(t: &MultiplicationTable, a: usize, b: usize) -> Result<bool, AlgebraError> {
    let ra = crate::algebra::right_translation(t, a)?;
    let rb = crate::algebra::right_translation(t, b)?;
    Ok(ra.commutes_with(&rb))
}

fn commutation_matrix(t: &MultiplicationTable) -> Result<Vec<Vec<bool>>, AlgebraError> {
    let rs = right_translations(t)?;
    Ok(rs.iter().map(|a| rs.iter().map(|b| a.commutes_with(b)).collect()).collect())
}

/// True iff every pair in `set` R-commutes.
pub fn is_r_clique(t: &MultiplicationTable, set: &[usize]) -> Result<bool, AlgebraError> {
    let m = commutation_matrix(t)?;
    Ok(set.iter().all(|&a| set.iter().all(|&b| m[a][b])))
}

/// Smallest subset containing `subset` and closed under `*` and `/`.
pub fn subrack_closure(t: &MultiplicationTable, subset: &[usize]) -> Result<Vec<usize>, AlgebraError> {
    let div = t.division_table()?;
    let mut set: BTreeSet<usize> = subset.iter().copied().collect();
    loop {
        let cur: Vec<usize> = set.iter().copied().collect();
        let before = set.len();
        for &x in &cur {
            for &y in &cur {
                set.insert(t.op(x, y));
                set.insert(div[x][y]);
            }
        }
        if set.len() == before {
            return Ok(cur);
        }
    }
}

/// Maximal R-cliques with annotations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RCliqueReport {
    /// Cliques, each sorted, in lexicographic order.
    pub cliques: Vec<Vec<usize>>,
    /// Inclusion-maximal flag per clique.
    pub is_maximal: Vec<bool>,
    /// Whether each clique is a union of Cayley kernel classes.
    pub kernel_class_union: Vec<bool>,
    /// Whether each clique is closed under `*` and `/`.
    pub is_subrack: Vec<bool>,
}

impl fmt::Display for RCliqueReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.cliques.iter().enumerate() {
            f.write_str("{")?;
            for (j, x) in c.iter().enumerate() {
                if j > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{x}")?;
            }
            writeln!(f, "}} maximal={} kernel_union={} subrack={}", self.is_maximal[i], self.kernel_class_union[i], self.is_subrack[i])?;
        }
        Ok(())
    }
}

/// All maximal cliques of the commutation graph, by Bron–Kerbosch with pivoting.
pub fn maximal_r_cliques(t: &MultiplicationTable) -> Result<RCliqueReport, AlgebraError> {
    let adj = commutation_matrix(t)?;
    let n = t.order();
    let mut cliques = Vec::new();
    let p: Vec<usize> = (0..n).collect();
    bron_kerbosch(&adj, &mut Vec::new(), p, Vec::new(), &mut cliques);
    for c in &mut cliques {
        c.sort();
    }
    cliques.sort();
    let kernel = if t.is_rack() { Some(cayley_kernel(t)?) } else { None };
    let kernel_class_union = cliques
        .iter()
        .map(|c| match &kernel {
            Some(k) => k.iter().all(|cls| {
                let inside = cls.iter().filter(|x| c.contains(x)).count();
                inside == 0 || inside == cls.len()
            }),
            None => false,
        })
        .collect();
    let is_subrack = cliques.iter().map(|c| subrack_closure(t, c).map(|s| s == *c).unwrap_or(false)).collect();
    let is_maximal = vec![true; cliques.len()];
    Ok(RCliqueReport { cliques, is_maximal, kernel_class_union, is_subrack })
}

fn bron_kerbosch(adj: &[Vec<bool>], r: &mut Vec<usize>, p: Vec<usize>, x: Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if p.is_empty() && x.is_empty() {
        out.push(r.clone());
        return;
    }
    let pivot = p.iter().chain(&x).copied().max_by_key(|&u| p.iter().filter(|&&v| v != u && adj[u][v]).count()).expect("p or x nonempty");
    let candidates: Vec<usize> = p.iter().copied().filter(|&v| v == pivot || !adj[pivot][v]).collect();
    let mut p = p;
    let mut x = x;
    for v in candidates {
        let np = p.iter().copied().filter(|&w| w != v && adj[v][w]).collect();
        let nx = x.iter().copied().filter(|&w| w != v && adj[v][w]).collect();
        r.push(v);
        bron_kerbosch(adj, r, np, nx, out);
        r.pop();
        p.retain(|&w| w != v);
        x.push(v);
    }
}
