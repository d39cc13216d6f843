//! Chromatic bracket by state sum.
//!
//! Classical crossings expand as `A<A-smoothing> + A^-1<B-smoothing>`, box
//! crossings as `2<node> - <circle>`. A flat state evaluates to `d^c`, `c`
//! counting components once every node joins its four edges.

use crate::diagram::{Diagram, Role, Sign, Symbol};
use crate::poly::LaurentPolynomial;
use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::ops::Range;

/// Default cap on the number of states.
pub const DEFAULT_STATE_BUDGET: u64 = 1 << 24;

/// Bracket errors.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum BracketError {
    /// More than two non-node virtual types.
    #[error("too many virtual types: {0:?}")]
    TooManyTypes(Vec<String>),
    /// A label has no role.
    #[error("no bracket role for virtual type {0:?}")]
    UnknownRole(String),
    /// Too many states.
    #[error("state budget exceeded: {states} > {budget}")]
    StateBudget {
        /// Required states (saturated).
        states: u64,
        /// Budget.
        budget: u64,
    },
    /// `flat_value` on a diagram with classical or box vertices.
    #[error("diagram is not flat")]
    NotFlat,
}

/// How a virtual type enters the bracket.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum VirtualRole {
    /// Joins its four edges.
    Node,
    /// Expands to `2 node - circle`.
    Box,
    /// Inert crossing.
    Circle,
}

impl VirtualRole {
    /// Role named by a label, if it is `node`, `box` or `circle`.
    pub fn from_label(label: &str) -> Option<Self> {
        match label {
            "node" => Some(Self::Node),
            "box" => Some(Self::Box),
            "circle" => Some(Self::Circle),
            _ => None,
        }
    }
}

/// Vertex kind.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VertexKind {
    /// Classical crossing with its sign.
    Classical(Sign),
    /// Virtual crossing with a role.
    Virtual(VirtualRole),
}

/// A 4-valent vertex. Ports are edge indices `[a_in, a_out, b_in, b_out]`;
/// for classical crossings `a` is the over strand.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Vertex {
    /// Kind.
    pub kind: VertexKind,
    /// Incident edges.
    pub ports: [usize; 4],
}

/// Vertices joined by edges; edges are the semiarcs of the source diagram.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PortDiagram {
    /// Vertices in crossing id order.
    pub vertices: Vec<Vertex>,
    /// Number of edges.
    pub edges: usize,
}

impl PortDiagram {
    /// Vertices of one kind.
    pub fn count(&self, kind: VertexKind) -> usize {
        self.vertices.iter().filter(|v| v.kind == kind).count()
    }

    fn expanding(&self) -> Vec<usize> {
        (0..self.vertices.len())
            .filter(|&i| matches!(self.vertices[i].kind, VertexKind::Classical(_) | VertexKind::Virtual(VirtualRole::Box)))
            .collect()
    }

    /// Number of states, `2^(classical + box)`, saturating.
    pub fn state_count(&self) -> u64 {
        let k = self.expanding().len() as u32;
        1u64.checked_shl(k).filter(|_| k < 64).unwrap_or(u64::MAX)
    }

    /// Number of connected components of the edge graph.
    pub fn components(&self) -> usize {
        let mut uf = UnionFind::new(self.edges);
        for v in &self.vertices {
            let [ai, ao, bi, bo] = v.ports;
            uf.union(ai, ao);
            uf.union(bi, bo);
            if v.kind == VertexKind::Virtual(VirtualRole::Node) {
                uf.union(ai, bi);
            }
        }
        uf.classes()
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        Self { parent: (0..n).collect() }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (a, b) = (self.find(a), self.find(b));
        if a != b {
            self.parent[a] = b;
        }
    }

    fn classes(&mut self) -> usize {
        (0..self.parent.len()).filter(|&x| self.find(x) == x).count()
    }
}

/// Roles from labels named `node`, `box`, `circle`, overridden by `roles`.
pub fn to_port_diagram(d: &Diagram, roles: &BTreeMap<String, VirtualRole>) -> Result<PortDiagram, BracketError> {
    let found: Vec<(String, Option<VirtualRole>)> = d
        .labels_in_use()
        .into_iter()
        .map(|l| {
            let r = roles.get(&l).copied().or_else(|| VirtualRole::from_label(&l));
            (l, r)
        })
        .collect();
    let types: Vec<String> = found.iter().filter(|(_, r)| *r != Some(VirtualRole::Node)).map(|(l, _)| l.clone()).collect();
    if types.len() > 2 {
        return Err(BracketError::TooManyTypes(types));
    }
    let mut role_of = BTreeMap::new();
    for (l, r) in found {
        let r = r.ok_or_else(|| BracketError::UnknownRole(l.clone()))?;
        role_of.insert(l, r);
    }
    let lens: Vec<usize> = d.components().iter().map(|c| c.len().max(1)).collect();
    let mut offset = vec![0; lens.len()];
    for i in 1..lens.len() {
        offset[i] = offset[i - 1] + lens[i - 1];
    }
    let edge_out = |c: usize, j: usize| offset[c] + j;
    let edge_in = |c: usize, j: usize| offset[c] + (j + lens[c] - 1) % lens[c];
    let mut vertices = Vec::new();
    for (_, [p, q]) in d.passages() {
        let (a, b, kind) = match d.symbol(p) {
            Symbol::Classical { role, sign, .. } => {
                let (a, b) = if *role == Role::Over { (p, q) } else { (q, p) };
                (a, b, VertexKind::Classical(*sign))
            }
            Symbol::Virtual { label, .. } => (p, q, VertexKind::Virtual(role_of[label])),
        };
        vertices.push(Vertex { kind, ports: [edge_in(a.0, a.1), edge_out(a.0, a.1), edge_in(b.0, b.1), edge_out(b.0, b.1)] });
    }
    Ok(PortDiagram { vertices, edges: lens.iter().sum() })
}

/// `d^c` for a flat diagram.
pub fn flat_value(flat: &PortDiagram) -> Result<LaurentPolynomial, BracketError> {
    if flat.vertices.iter().any(|v| !matches!(v.kind, VertexKind::Virtual(VirtualRole::Node | VirtualRole::Circle))) {
        return Err(BracketError::NotFlat);
    }
    Ok(LaurentPolynomial::loop_value().pow(flat.components() as u32))
}

/// Bracket with roles taken from the labels themselves.
pub fn chromatic_bracket(d: &Diagram) -> Result<LaurentPolynomial, BracketError> {
    chromatic_bracket_with(d, &BTreeMap::new(), DEFAULT_STATE_BUDGET)
}

/// Bracket with explicit roles and state budget.
pub fn chromatic_bracket_with(d: &Diagram, roles: &BTreeMap<String, VirtualRole>, budget: u64) -> Result<LaurentPolynomial, BracketError> {
    let pd = to_port_diagram(d, roles)?;
    let states = pd.state_count();
    if states > budget {
        return Err(BracketError::StateBudget { states, budget });
    }
    Ok(state_sum(&pd, 0..states))
}

/// Sum over the states in `range`; bit `i` of a state picks the second
/// resolution of the `i`-th expanding vertex. Partial sums add up.
pub fn state_sum(pd: &PortDiagram, range: Range<u64>) -> LaurentPolynomial {
    let expanding = pd.expanding();
    // Coefficient per (A exponent, component count), folded at the end.
    let mut tally: BTreeMap<(i32, u32), i64> = BTreeMap::new();
    for state in range {
        let mut uf = UnionFind::new(pd.edges);
        let mut exp = 0i32;
        let mut coeff = 1i64;
        let mut bit = 0;
        for (idx, v) in pd.vertices.iter().enumerate() {
            let [ai, ao, bi, bo] = v.ports;
            let second = bit < expanding.len() && expanding[bit] == idx && (state >> bit) & 1 == 1;
            if bit < expanding.len() && expanding[bit] == idx {
                bit += 1;
            }
            match v.kind {
                VertexKind::Classical(sign) => {
                    // A-smoothing of a positive crossing joins over_in with
                    // under_out; of a negative one, the two incoming ends.
                    let a_smoothing = !second;
                    let pairs = match (sign, a_smoothing) {
                        (Sign::Pos, true) | (Sign::Neg, false) => [(ai, bo), (bi, ao)],
                        _ => [(ai, bi), (ao, bo)],
                    };
                    for (x, y) in pairs {
                        uf.union(x, y);
                    }
                    exp += if a_smoothing { 1 } else { -1 };
                }
                VertexKind::Virtual(VirtualRole::Node) => {
                    uf.union(ai, ao);
                    uf.union(bi, bo);
                    uf.union(ai, bi);
                }
                VertexKind::Virtual(VirtualRole::Circle) => {
                    uf.union(ai, ao);
                    uf.union(bi, bo);
                }
                VertexKind::Virtual(VirtualRole::Box) => {
                    uf.union(ai, ao);
                    uf.union(bi, bo);
                    if second {
                        coeff = -coeff;
                    } else {
                        uf.union(ai, bi);
                        coeff *= 2;
                    }
                }
            }
        }
        *tally.entry((exp, uf.classes() as u32)).or_insert(0) += coeff;
    }
    let d = LaurentPolynomial::loop_value();
    let mut total = LaurentPolynomial::zero();
    for ((exp, comps), c) in tally {
        if c != 0 {
            total = total + LaurentPolynomial::monomial(c, exp) * d.pow(comps);
        }
    }
    total
}

/// Labels of all virtual types mapped to one role.
pub fn uniform_roles(d: &Diagram, role: VirtualRole) -> BTreeMap<String, VirtualRole> {
    d.labels_in_use().into_iter().map(|l| (l, role)).collect()
}

/// Role map from `label=role` pairs.
pub fn parse_roles<'a>(pairs: impl IntoIterator<Item = (&'a str, &'a str)>) -> Result<BTreeMap<String, VirtualRole>, BracketError> {
    pairs
        .into_iter()
        .map(|(l, r)| VirtualRole::from_label(r).map(|r| (l.to_string(), r)).ok_or_else(|| BracketError::UnknownRole(r.to_string())))
        .collect()
}
