//! Operator quandle colorings and the operator 2-cocycle invariant.
//!
//! Semiarc `(c, j)` leaves symbol `j` of component `c`. Crossing rules:
//! under passage of a positive crossing `out = in * over`, of a negative one
//! `out = in / over`; virtual passage `+` gives `out = α(in)`, `-` gives
//! `out = α^-1(in)`; over passages keep the color.
//!
//! Cocycle weights: a positive crossing contributes `φ(in, over)` and a
//! negative one `φ(out, over)^-1`, where `in`/`out` are the under semiarcs.

use crate::algebra::{
    automorphism_group, commuting_automorphism_tuples, right_translation, AlgebraError, MultiplicationTable, Permutation,
};
use crate::diagram::{scheme_pairs, Diagram, Role, Sign, Symbol};
use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

/// Errors from coloring and cocycle computations.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum InvariantError {
    /// A type label has no operator.
    #[error("no operator bound to type {0}")]
    MissingOperator(String),
    /// Operator is not an automorphism.
    #[error("operator for type {0} is not an automorphism")]
    NotAutomorphism(String),
    /// Two operators do not commute.
    #[error("operators for {0} and {1} do not commute")]
    NotCommuting(String, String),
    /// Quandle axioms fail.
    #[error("table is not a quandle")]
    NotQuandle,
    /// The cocycle fails (i), (ii) or compatibility with an operator.
    #[error("cocycle check failed")]
    CocycleCheck,
    /// Cocycle table malformed.
    #[error("cocycle table: {0}")]
    BadCocycle(&'static str),
    /// Oracle search space too large.
    #[error("search space {size} exceeds budget {budget}")]
    Budget {
        /// Size of the search space (saturated).
        size: u128,
        /// Budget.
        budget: u128,
    },
    /// Too many types or no commuting tuples.
    #[error("profile: {0}")]
    Profile(&'static str),
    /// Algebra failure.
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// A quandle with commuting automorphisms bound to type labels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OperatorQuandle {
    quandle: MultiplicationTable,
    operators: BTreeMap<String, Permutation>,
    div: Vec<Vec<usize>>,
}

impl OperatorQuandle {
    /// Checks the quandle axioms, the automorphism property and commutation.
    pub fn new(quandle: MultiplicationTable, operators: BTreeMap<String, Permutation>) -> Result<Self, InvariantError> {
        if !quandle.is_quandle() {
            return Err(InvariantError::NotQuandle);
        }
        for (l, p) in &operators {
            if !p.is_automorphism_of(&quandle) {
                return Err(InvariantError::NotAutomorphism(l.clone()));
            }
        }
        let ops: Vec<_> = operators.iter().collect();
        for (i, (l1, p1)) in ops.iter().enumerate() {
            for (l2, p2) in &ops[i + 1..] {
                if !p1.commutes_with(p2) {
                    return Err(InvariantError::NotCommuting((*l1).clone(), (*l2).clone()));
                }
            }
        }
        let div = quandle.division_table()?;
        Ok(Self { quandle, operators, div })
    }

    /// Convenience constructor from `(label, operator)` pairs.
    pub fn with(quandle: MultiplicationTable, ops: &[(&str, Permutation)]) -> Result<Self, InvariantError> {
        Self::new(quandle, ops.iter().map(|(l, p)| (l.to_string(), p.clone())).collect())
    }

    /// The quandle.
    pub fn quandle(&self) -> &MultiplicationTable {
        &self.quandle
    }

    /// The bindings.
    pub fn operators(&self) -> &BTreeMap<String, Permutation> {
        &self.operators
    }
}

/// Colors of all semiarcs, indexed `[component][symbol]`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Coloring {
    /// `colors[c][j]` is the color of the semiarc after symbol `j`.
    pub colors: Vec<Vec<usize>>,
}

impl Coloring {
    /// Color of the semiarc entering symbol `j` of component `c`.
    pub fn incoming(&self, c: usize, j: usize) -> usize {
        let l = self.colors[c].len();
        self.colors[c][(j + l - 1) % l]
    }
}

// Flattened diagram with per-passage lookups.
struct Plan {
    comps: Vec<Vec<Step>>,
}

#[derive(Clone)]
enum Step {
    Over,
    Under { sign: Sign, over: (usize, usize) },
    Virtual { op: usize, inverse: bool },
}

struct Engine<'a> {
    q: &'a MultiplicationTable,
    div: &'a [Vec<usize>],
    ops: Vec<(Vec<usize>, Vec<usize>)>,
    plan: Plan,
}

impl<'a> Engine<'a> {
    fn new(d: &Diagram, oq: &'a OperatorQuandle) -> Result<Self, InvariantError> {
        let mut labels: Vec<String> = Vec::new();
        let mut ops = Vec::new();
        let passages = d.passages();
        let mut comps = Vec::new();
        for comp in d.components() {
            let mut steps = Vec::new();
            for s in comp {
                steps.push(match s {
                    Symbol::Classical { role: Role::Over, .. } => Step::Over,
                    Symbol::Classical { id, role: Role::Under, sign } => {
                        let [a, b] = passages[id];
                        let over = if matches!(d.symbol(a), Symbol::Classical { role: Role::Over, .. }) { a } else { b };
                        Step::Under { sign: *sign, over }
                    }
                    Symbol::Virtual { label, chirality, .. } => {
                        let idx = match labels.iter().position(|l| l == label) {
                            Some(i) => i,
                            None => {
                                let p = oq.operators.get(label).ok_or_else(|| InvariantError::MissingOperator(label.clone()))?;
                                labels.push(label.clone());
                                ops.push((p.images().to_vec(), p.inverse().images().to_vec()));
                                labels.len() - 1
                            }
                        };
                        Step::Virtual { op: idx, inverse: *chirality == Sign::Neg }
                    }
                });
            }
            comps.push(steps);
        }
        Ok(Self { q: &oq.quandle, div: &oq.div, ops, plan: Plan { comps } })
    }

    fn transfer(&self, step: &Step, x: usize, over: usize) -> usize {
        match step {
            Step::Over => x,
            Step::Under { sign: Sign::Pos, .. } => self.q.op(x, over),
            Step::Under { sign: Sign::Neg, .. } => self.div[x][over],
            Step::Virtual { op, inverse } => {
                let (f, g) = &self.ops[*op];
                if *inverse {
                    g[x]
                } else {
                    f[x]
                }
            }
        }
    }

    // Constraint network over semiarc colors.
    fn network(&self) -> Network {
        let lens: Vec<usize> = self.plan.comps.iter().map(|c| c.len().max(1)).collect();
        let mut offsets = vec![0; lens.len()];
        for i in 1..lens.len() {
            offsets[i] = offsets[i - 1] + lens[i - 1];
        }
        let var = |c: usize, j: usize| offsets[c] + j;
        let before = |c: usize, j: usize| var(c, (j + lens[c] - 1) % lens[c]);
        let mut cons = Vec::new();
        for (c, steps) in self.plan.comps.iter().enumerate() {
            for (j, step) in steps.iter().enumerate() {
                let (inp, out) = (before(c, j), var(c, j));
                cons.push(match step {
                    Step::Over => Con::Perm { inp, out, op: None, inverse: false },
                    Step::Virtual { op, inverse } => Con::Perm { inp, out, op: Some(*op), inverse: *inverse },
                    Step::Under { sign, over, .. } => Con::Under { inp, out, over: before(over.0, over.1), positive: *sign == Sign::Pos },
                });
            }
        }
        let vars = offsets.last().map_or(0, |o| o + lens[lens.len() - 1]);
        let mut watch = vec![Vec::new(); vars];
        for (i, con) in cons.iter().enumerate() {
            let (a, b, o) = match *con {
                Con::Perm { inp, out, .. } => (inp, out, None),
                Con::Under { inp, out, over, .. } => (inp, out, Some(over)),
            };
            watch[a].push(i);
            watch[b].push(i);
            if let Some(o) = o {
                watch[o].push(i);
            }
        }
        Network { lens, offsets, cons, watch }
    }

    // Assigns `v = x` and everything it forces; false on a contradiction.
    fn assign(&self, net: &Network, vals: &mut [Option<usize>], v: usize, x: usize) -> bool {
        let mut queue = vec![(v, x)];
        while let Some((v, x)) = queue.pop() {
            match vals[v] {
                Some(y) if y == x => continue,
                Some(_) => return false,
                None => vals[v] = Some(x),
            }
            for &ci in &net.watch[v] {
                let forced = match net.cons[ci] {
                    Con::Perm { inp, out, op, inverse } => {
                        let (fwd, bwd) = match op {
                            None => (None, None),
                            Some(k) => {
                                let (f, g) = &self.ops[k];
                                if inverse {
                                    (Some(g), Some(f))
                                } else {
                                    (Some(f), Some(g))
                                }
                            }
                        };
                        match (vals[inp], vals[out]) {
                            (Some(a), b) => {
                                let want = fwd.map_or(a, |f| f[a]);
                                match b {
                                    Some(b) if b != want => return false,
                                    Some(_) => None,
                                    None => Some((out, want)),
                                }
                            }
                            (None, Some(b)) => Some((inp, bwd.map_or(b, |g| g[b]))),
                            (None, None) => None,
                        }
                    }
                    Con::Under { inp, out, over, positive } => match vals[over] {
                        None => None,
                        Some(y) => {
                            let (mul, div) = (|a: usize| self.q.op(a, y), |a: usize| self.div[a][y]);
                            match (vals[inp], vals[out]) {
                                (Some(a), b) => {
                                    let want = if positive { mul(a) } else { div(a) };
                                    match b {
                                        Some(b) if b != want => return false,
                                        Some(_) => None,
                                        None => Some((out, want)),
                                    }
                                }
                                (None, Some(b)) => Some((inp, if positive { div(b) } else { mul(b) })),
                                (None, None) => None,
                            }
                        }
                    },
                };
                if let Some(f) = forced {
                    queue.push(f);
                }
            }
        }
        true
    }

    // Branch on the over color of a half-known crossing first.
    fn branch_var(net: &Network, vals: &[Option<usize>]) -> Option<usize> {
        let half = net.cons.iter().find_map(|con| match *con {
            Con::Under { inp, out, over, .. } if vals[over].is_none() && (vals[inp].is_some() || vals[out].is_some()) => Some(over),
            _ => None,
        });
        half.or_else(|| vals.iter().position(Option::is_none))
    }

    fn search(&self, visit: &mut dyn FnMut(&[Vec<usize>])) {
        let net = self.network();
        let mut vals = vec![None; net.watch.len()];
        self.solve(&net, &mut vals, visit);
    }

    fn solve(&self, net: &Network, vals: &mut [Option<usize>], visit: &mut dyn FnMut(&[Vec<usize>])) {
        let Some(v) = Self::branch_var(net, vals) else {
            let full: Vec<Vec<usize>> =
                net.lens.iter().zip(&net.offsets).map(|(&l, &o)| (0..l).map(|j| vals[o + j].unwrap()).collect()).collect();
            visit(&full);
            return;
        };
        for x in 0..self.q.order() {
            let mut next = vals.to_vec();
            if self.assign(net, &mut next, v, x) {
                self.solve(net, &mut next, visit);
            }
        }
    }
}

struct Network {
    lens: Vec<usize>,
    offsets: Vec<usize>,
    cons: Vec<Con>,
    watch: Vec<Vec<usize>>,
}

// `out = P(inp)` for a permutation (identity at over passages), or the
// classical rule with the over semiarc `over`.
#[derive(Clone, Copy)]
enum Con {
    Perm { inp: usize, out: usize, op: Option<usize>, inverse: bool },
    Under { inp: usize, out: usize, over: usize, positive: bool },
}

/// All colorings, in search order.
pub fn enumerate_colorings(d: &Diagram, oq: &OperatorQuandle) -> Result<Vec<Coloring>, InvariantError> {
    let e = Engine::new(d, oq)?;
    let mut out = Vec::new();
    e.search(&mut |c| out.push(Coloring { colors: c.to_vec() }));
    Ok(out)
}

/// Number of colorings.
pub fn count_colorings(d: &Diagram, oq: &OperatorQuandle) -> Result<u64, InvariantError> {
    let e = Engine::new(d, oq)?;
    let mut n = 0u64;
    e.search(&mut |_| n += 1);
    Ok(n)
}

/// Default oracle budget on `|Q|^semiarcs`.
pub const ORACLE_BUDGET: u128 = 10_000_000;

/// Brute force over all semiarc assignments.
pub fn coloring_oracle(d: &Diagram, oq: &OperatorQuandle, budget: u128) -> Result<u64, InvariantError> {
    let n = oq.quandle.order();
    let arcs = d.semiarc_count();
    let size = (n as u128).checked_pow(arcs as u32).unwrap_or(u128::MAX);
    if size > budget {
        return Err(InvariantError::Budget { size, budget });
    }
    let e = Engine::new(d, oq)?;
    let passages = d.passages();
    let lens: Vec<usize> = d.components().iter().map(|c| c.len().max(1)).collect();
    let mut offsets = vec![0; lens.len()];
    for i in 1..lens.len() {
        offsets[i] = offsets[i - 1] + lens[i - 1];
    }
    let flat = |c: usize, j: usize| offsets[c] + j;
    let before = |c: usize, j: usize| flat(c, (j + lens[c] - 1) % lens[c]);
    // (in, out, over-in, step) per passage.
    let mut checks = Vec::new();
    for (c, comp) in d.components().iter().enumerate() {
        for (j, s) in comp.iter().enumerate() {
            let over = match s {
                Symbol::Classical { id, role: Role::Under, .. } => {
                    let [a, b] = passages[id];
                    let o = if (a.0, a.1) == (c, j) { b } else { a };
                    Some(before(o.0, o.1))
                }
                _ => None,
            };
            checks.push((before(c, j), flat(c, j), over, &e.plan.comps[c][j]));
        }
    }
    let mut assign = vec![0usize; arcs];
    let mut count = 0;
    loop {
        let ok = checks.iter().all(|&(i, o, over, step)| e.transfer(step, assign[i], over.map_or(0, |v| assign[v])) == assign[o]);
        if ok {
            count += 1;
        }
        let mut k = 0;
        loop {
            if k == arcs {
                return Ok(count);
            }
            assign[k] += 1;
            if assign[k] < n {
                break;
            }
            assign[k] = 0;
            k += 1;
        }
    }
}

/// A finite group table plus a 2-cocycle `φ : Q x Q -> G`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CocycleTable {
    group: MultiplicationTable,
    identity: usize,
    inverse: Vec<usize>,
    phi: Vec<Vec<usize>>,
}

impl CocycleTable {
    /// Checks the group axioms and shape; cocycle conditions are checked by
    /// [`is_operator_cocycle`].
    pub fn new(group: MultiplicationTable, phi: Vec<Vec<usize>>) -> Result<Self, InvariantError> {
        let g = group.order();
        let identity = (0..g)
            .find(|&e| (0..g).all(|x| group.op(e, x) == x && group.op(x, e) == x))
            .ok_or(InvariantError::BadCocycle("group has no identity"))?;
        let assoc = (0..g).all(|a| (0..g).all(|b| (0..g).all(|c| group.op(group.op(a, b), c) == group.op(a, group.op(b, c)))));
        if !assoc {
            return Err(InvariantError::BadCocycle("group operation is not associative"));
        }
        let mut inverse = vec![0; g];
        for (x, inv) in inverse.iter_mut().enumerate() {
            *inv = (0..g).find(|&y| group.op(x, y) == identity).ok_or(InvariantError::BadCocycle("missing inverse"))?;
        }
        let q = phi.len();
        if q == 0 || phi.iter().any(|r| r.len() != q || r.iter().any(|&v| v >= g)) {
            return Err(InvariantError::BadCocycle("phi must be square with entries in the group"));
        }
        Ok(Self { group, identity, inverse, phi })
    }

    /// The group.
    pub fn group(&self) -> &MultiplicationTable {
        &self.group
    }

    /// `φ` rows.
    pub fn phi(&self) -> &[Vec<usize>] {
        &self.phi
    }

    /// Identity element of the group.
    pub fn identity(&self) -> usize {
        self.identity
    }

    /// Group element display name; the identity prints as `e`.
    pub fn element_label(&self, g: usize) -> String {
        if g == self.identity {
            "e".to_string()
        } else {
            self.group.label(g)
        }
    }

    fn mul(&self, a: usize, b: usize) -> usize {
        self.group.op(a, b)
    }
}

/// Conditions (i), (ii) and `φ(a,b) = φ(α(a), α(b))` for every operator.
pub fn is_operator_cocycle(oq: &OperatorQuandle, phi: &CocycleTable) -> bool {
    let q = &oq.quandle;
    let n = q.order();
    if phi.phi.len() != n {
        return false;
    }
    let f = |a: usize, b: usize| phi.phi[a][b];
    let cond_i = (0..n).all(|a| f(a, a) == phi.identity);
    let cond_ii =
        (0..n).all(|a| (0..n).all(|b| (0..n).all(|c| phi.mul(f(a, b), f(q.op(a, c), q.op(b, c))) == phi.mul(f(a, c), f(q.op(a, b), c)))));
    let compatible = oq.operators.values().all(|p| (0..n).all(|a| (0..n).all(|b| f(a, b) == f(p.apply(a), p.apply(b)))));
    cond_i && cond_ii && compatible
}

/// Multiset of group elements with multiplicities.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord)]
pub struct GroupRingElement {
    /// Group element index to multiplicity; zero multiplicities absent.
    pub terms: BTreeMap<usize, u64>,
}

impl GroupRingElement {
    /// Sum of multiplicities.
    pub fn total(&self) -> u64 {
        self.terms.values().sum()
    }

    /// Renders as `{e:1, t^-1:3}` using group labels.
    pub fn display<'a>(&'a self, phi: &'a CocycleTable) -> impl fmt::Display + 'a {
        DisplayRing { r: self, phi }
    }
}

struct DisplayRing<'a> {
    r: &'a GroupRingElement,
    phi: &'a CocycleTable,
}

impl fmt::Display for DisplayRing<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, (&g, &m)) in self.r.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{}:{m}", self.phi.element_label(g))?;
        }
        f.write_str("}")
    }
}

/// Weight of one coloring: product over classical crossings in id order.
pub fn coloring_weight(d: &Diagram, coloring: &Coloring, phi: &CocycleTable) -> usize {
    let mut under: BTreeMap<u32, (Sign, usize, usize)> = BTreeMap::new();
    let mut over: BTreeMap<u32, usize> = BTreeMap::new();
    for (c, comp) in d.components().iter().enumerate() {
        for (j, s) in comp.iter().enumerate() {
            if let Symbol::Classical { id, role, sign } = s {
                let x = coloring.incoming(c, j);
                match role {
                    Role::Over => {
                        over.insert(*id, x);
                    }
                    Role::Under => {
                        under.insert(*id, (*sign, x, coloring.colors[c][j]));
                    }
                }
            }
        }
    }
    let mut w = phi.identity;
    for (id, (sign, x_in, x_out)) in under {
        let y = over[&id];
        let term = match sign {
            Sign::Pos => phi.phi[x_in][y],
            Sign::Neg => phi.inverse[phi.phi[x_out][y]],
        };
        w = phi.mul(w, term);
    }
    w
}

/// The operator 2-cocycle invariant as a multiset of weights.
pub fn cocycle_invariant(d: &Diagram, oq: &OperatorQuandle, phi: &CocycleTable) -> Result<GroupRingElement, InvariantError> {
    if !is_operator_cocycle(oq, phi) {
        return Err(InvariantError::CocycleCheck);
    }
    let mut out = GroupRingElement::default();
    for c in enumerate_colorings(d, oq)? {
        *out.terms.entry(coloring_weight(d, &c, phi)).or_insert(0) += 1;
    }
    Ok(out)
}

/// Coloring counts per scheme and per tuple of commuting automorphisms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantProfile {
    /// Labels receiving operators, in order.
    pub labels: Vec<String>,
    /// Schemes `u`, 1-based slots.
    pub schemes: Vec<Vec<usize>>,
    /// Tuples of distinct commuting automorphisms, as indices into `automorphisms`.
    pub tuples: Vec<Vec<usize>>,
    /// Automorphism list, sorted.
    pub automorphisms: Vec<Permutation>,
    /// `values[s][t]`: count for scheme `s` and tuple `t`.
    pub values: Vec<Vec<u64>>,
}

impl InvariantProfile {
    /// Pairs of scheme indices with equal vectors.
    pub fn undistinguished_pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.values.len() {
            for j in i + 1..self.values.len() {
                if self.values[i] == self.values[j] {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// Index of a scheme.
    pub fn scheme_index(&self, u: &[usize]) -> Option<usize> {
        self.schemes.iter().position(|s| s == u)
    }
}

/// `q(u)` for every `u` in the `k_types` scheme set.
///
/// The diagram's declared types, in order, receive `α_{u_1}, α_{u_2}, ..`
/// from each tuple of `2 k_types` distinct commuting automorphisms.
pub fn invariant_profile(d: &Diagram, quandle: &MultiplicationTable, k_types: usize) -> Result<InvariantProfile, InvariantError> {
    let labels = d.types().to_vec();
    if labels.len() > k_types {
        return Err(InvariantError::Profile("diagram has more types than k_types"));
    }
    let auts = automorphism_group(quandle);
    let tuples = commuting_automorphism_tuples(&auts, 2 * k_types, true);
    if tuples.is_empty() {
        return Err(InvariantError::Profile("no commuting tuples of distinct automorphisms"));
    }
    let schemes = scheme_pairs(k_types);
    let mut values = Vec::new();
    for u in &schemes {
        let mut row = Vec::new();
        for t in &tuples {
            let ops = labels.iter().zip(u).map(|(l, &slot)| (l.clone(), auts[t[slot - 1]].clone())).collect();
            row.push(count_colorings(d, &OperatorQuandle::new(quandle.clone(), ops)?)?);
        }
        values.push(row);
    }
    Ok(InvariantProfile { labels, schemes, tuples, automorphisms: auts, values })
}

/// One invariant value that separates two diagrams.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Difference {
    /// Operators per label, as automorphism indices.
    pub assignment: Vec<(String, usize)>,
    /// `col` or `coc`.
    pub invariant: &'static str,
    /// Rendered value on the first diagram.
    pub left: String,
    /// Rendered value on the second diagram.
    pub right: String,
}

/// Result of [`distinguish`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistinguishReport {
    /// Assignments tried.
    pub assignments: usize,
    /// Values that differ.
    pub differences: Vec<Difference>,
}

impl DistinguishReport {
    /// True iff some invariant differs. Never a claim of equivalence.
    pub fn distinguished(&self) -> bool {
        !self.differences.is_empty()
    }
}

/// Compares two diagrams over every commuting assignment of automorphisms to
/// the union of their labels, plus the cocycle invariant where compatible.
pub fn distinguish(
    d1: &Diagram,
    d2: &Diagram,
    quandle: &MultiplicationTable,
    phi: Option<&CocycleTable>,
) -> Result<DistinguishReport, InvariantError> {
    let mut labels: Vec<String> = d1.labels_in_use();
    for l in d2.labels_in_use() {
        if !labels.contains(&l) {
            labels.push(l);
        }
    }
    let auts = automorphism_group(quandle);
    let tuples = commuting_automorphism_tuples(&auts, labels.len(), false);
    let mut differences = Vec::new();
    for t in &tuples {
        let ops: BTreeMap<String, Permutation> = labels.iter().zip(t).map(|(l, &i)| (l.clone(), auts[i].clone())).collect();
        let oq = OperatorQuandle::new(quandle.clone(), ops)?;
        let assignment: Vec<(String, usize)> = labels.iter().cloned().zip(t.iter().copied()).collect();
        let (a, b) = (count_colorings(d1, &oq)?, count_colorings(d2, &oq)?);
        if a != b {
            differences.push(Difference { assignment: assignment.clone(), invariant: "col", left: a.to_string(), right: b.to_string() });
            continue;
        }
        if let Some(phi) = phi {
            if is_operator_cocycle(&oq, phi) {
                let (x, y) = (cocycle_invariant(d1, &oq, phi)?, cocycle_invariant(d2, &oq, phi)?);
                if x != y {
                    use alloc::format;
                    differences.push(Difference {
                        assignment,
                        invariant: "coc",
                        left: format!("{}", x.display(phi)),
                        right: format!("{}", y.display(phi)),
                    });
                }
            }
        }
    }
    Ok(DistinguishReport { assignments: tuples.len(), differences })
}

/// Right translation as an operator, for bindings like `translation:x`.
pub fn translation_operator(q: &MultiplicationTable, x: usize) -> Result<Permutation, InvariantError> {
    Ok(right_translation(q, x)?)
}
