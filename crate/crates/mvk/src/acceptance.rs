//! The acceptance criteria as executable checks.
//!
//! Every value is exact; there are no tolerances. A criterion passes only if
//! all of its parts pass, and each part is reported with its measured value.

use crate::catalog;
use mvk_core::algebra::{
    automorphism_group, classify_magma, commuting_automorphism_tuples, enumerate_racks, find_isomorphism, right_divide,
    right_multiplication_group, right_translation, MultiplicationTable, Permutation, DEFAULT_GROUP_LIMIT,
};
use mvk_core::bracket::{chromatic_bracket, chromatic_bracket_with, parse_roles, DEFAULT_STATE_BUDGET};
use mvk_core::constructions::{alexander_quandle, dihedral_quandle, projection_quandle, qme, qme_index, QuotientRing, TypeVector};
use mvk_core::diagram::{
    apply_move, bell_number, builtin_diagram, enumerate_move_sites, enumerate_typings, k_family, l_family, parse_symbols, Locus, MoveKind,
    MoveSite,
};
use mvk_core::invariants::{
    cocycle_invariant, coloring_oracle, count_colorings, invariant_profile, is_operator_cocycle, translation_operator, CocycleTable,
    GroupRingElement, ORACLE_BUDGET,
};
use mvk_core::rcliques::{maximal_r_cliques, r_commutes};
use mvk_core::{Diagram, LaurentPolynomial, OperatorQuandle};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

/// Number of criteria.
pub const CRITERIA: usize = 12;

/// Steps per random move walk.
pub const WALK_STEPS: usize = 200;

/// Walks stop growing past this many crossings.
const WALK_MAX_CROSSINGS: usize = 12;

/// One checked statement inside a criterion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Part {
    /// What was checked.
    pub name: String,
    /// Outcome.
    pub pass: bool,
    /// Measured value.
    pub detail: String,
}

/// The outcome of one criterion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    /// 1-based criterion number.
    pub id: usize,
    /// Short title.
    pub title: &'static str,
    /// Parts in order.
    pub parts: Vec<Part>,
}

impl Outcome {
    /// True iff every part passed.
    pub fn pass(&self) -> bool {
        self.parts.iter().all(|p| p.pass)
    }

    /// Names of failing parts.
    pub fn failures(&self) -> Vec<&str> {
        self.parts.iter().filter(|p| !p.pass).map(|p| p.name.as_str()).collect()
    }
}

struct Parts(Vec<Part>);

impl Parts {
    fn check(&mut self, name: impl Into<String>, pass: bool, detail: impl Into<String>) {
        self.0.push(Part { name: name.into(), pass, detail: detail.into() });
    }

    fn eq<T: PartialEq + std::fmt::Debug>(&mut self, name: impl Into<String>, got: T, want: T) {
        let detail = format!("{got:?}");
        self.check(name, got == want, detail);
    }
}

/// Titles by criterion number.
pub fn title(id: usize) -> &'static str {
    match id {
        1 => "Q4 tables and automorphisms",
        2 => "coloring counts",
        3 => "cocycle suite",
        4 => "K(n) family",
        5 => "Q_m(e) properties",
        6 => "R-cliques",
        7 => "identity equivalences",
        8 => "Bell numbers and typings",
        9 => "move invariance",
        10 => "bracket",
        11 => "oracle equivalence",
        12 => "classification driver",
        _ => "unknown",
    }
}

/// Runs one criterion; `None` for an out-of-range number.
pub fn run(id: usize) -> Option<Outcome> {
    let mut p = Parts(Vec::new());
    match id {
        1 => q4_tables(&mut p),
        2 => coloring_counts(&mut p),
        3 => cocycle_suite(&mut p),
        4 => k_family_counts(&mut p),
        5 => qme_suite(&mut p),
        6 => r_cliques(&mut p),
        7 => identities(&mut p),
        8 => typings(&mut p),
        9 => move_invariance(&mut p),
        10 => bracket(&mut p),
        11 => oracle(&mut p),
        12 => classification(&mut p),
        _ => return None,
    }
    Some(Outcome { id, title: title(id), parts: p.0 })
}

const Q4_STAR: [[usize; 4]; 4] = [[0, 3, 1, 2], [2, 1, 3, 0], [3, 0, 2, 1], [1, 2, 0, 3]];
const Q4_DIV: [[usize; 4]; 4] = [[0, 2, 3, 1], [3, 1, 0, 2], [1, 3, 2, 0], [2, 0, 1, 3]];

fn q4() -> MultiplicationTable {
    catalog::builtin_quandle("q4").expect("catalog entry")
}

fn cq_5_2() -> MultiplicationTable {
    catalog::builtin_quandle("cq_5_2").expect("catalog entry")
}

fn id(n: usize) -> Permutation {
    Permutation::identity(n)
}

/// `θ = (1, t, t^-1)`.
fn theta() -> Permutation {
    Permutation::from_cycles(4, &[&[1, 2, 3]]).expect("cycle")
}

/// `ω = (2,4,5,3)` on the labels 1..5.
fn omega() -> Permutation {
    Permutation::from_cycles(5, &[&[1, 3, 4, 2]]).expect("cycle")
}

fn op2(q: &MultiplicationTable, a: Permutation, b: Permutation) -> OperatorQuandle {
    OperatorQuandle::with(q.clone(), &[("α", a), ("β", b)]).expect("commuting automorphisms")
}

fn op1(q: &MultiplicationTable, a: Permutation) -> OperatorQuandle {
    OperatorQuandle::with(q.clone(), &[("α", a)]).expect("automorphism")
}

fn diagram(name: &str) -> Diagram {
    builtin_diagram(name).expect("builtin diagram")
}

fn count(d: &Diagram, oq: &OperatorQuandle) -> String {
    count_colorings(d, oq).map_or_else(|e| format!("error: {e}"), |n| n.to_string())
}

fn q4_tables(p: &mut Parts) {
    let ring = QuotientRing::new(2, vec![1, 1, 1]).expect("ring");
    let q = alexander_quandle(&ring);
    let star: Vec<Vec<usize>> = Q4_STAR.iter().map(|r| r.to_vec()).collect();
    let div: Vec<Vec<usize>> = Q4_DIV.iter().map(|r| r.to_vec()).collect();
    p.check("star table", q.rows() == star, format!("{:?}", q.rows()));
    let d = q.division_table().unwrap_or_default();
    p.check("division table", d == div, format!("{d:?}"));
    let pointwise = (0..4).all(|x| (0..4).all(|y| right_divide(&q, x, y).ok() == Some(Q4_DIV[x][y])));
    p.check("right_divide", pointwise, "");
    let auts = automorphism_group(&q);
    p.eq("|Aut|", auts.len(), 12);
    p.check("theta in Aut", auts.contains(&theta()), "(1,t,t^-1)");
    p.check("catalog q4 equal", q4().rows() == star, "");
}

fn coloring_counts(p: &mut Parts) {
    let q = q4();
    let cases: [(&str, OperatorQuandle, &str, u64); 6] = [
        ("2_1", op1(&q, id(4)), "Col(2_1,Q4,id)", 4),
        ("2_1", op1(&q, theta().inverse()), "Col(2_1,Q4,theta^-1)", 1),
        ("3_2", op1(&q, id(4)), "Col(3_2,Q4,id)", 4),
        ("3_2", op1(&q, theta().inverse()), "Col(3_2,Q4,theta^-1)", 1),
        ("3_5", op2(&cq_5_2(), id(5), omega()), "Col(3_5,CQ(5,2),(1,omega))", 1),
        ("3_5", op2(&cq_5_2(), omega(), id(5)), "Col(3_5,CQ(5,2),(omega,1))", 5),
    ];
    for (d, oq, name, want) in cases {
        let got = count(&diagram(d), &oq);
        p.check(name, got == want.to_string(), got);
    }
    let sp = diagram("special_pair_left");
    let q16 = catalog::builtin_quandle("alexander_16").expect("builtin");
    let (sigma, tau) = special_pair_operators();
    let got = count(&sp, &op2(&q16, sigma.clone(), tau.clone()));
    p.check("Col(special pair,(sigma,tau))", got == "16", got);
    let got = count(&sp, &op2(&q16, tau, sigma));
    p.check("Col(special pair,(tau,sigma))", got == "1", got);
}

/// Ring element such as `1+t+t^3` to its index, bit `i` for `t^i`.
fn poly_index(s: &str) -> usize {
    s.split('+')
        .map(|m| match m {
            "1" => 1,
            "t" => 2,
            m => 1 << m.trim_start_matches("t^").parse::<usize>().expect("exponent"),
        })
        .sum()
}

fn cycles16(cs: &[&[&str]]) -> Permutation {
    let v: Vec<Vec<usize>> = cs.iter().map(|c| c.iter().map(|s| poly_index(s)).collect()).collect();
    let r: Vec<&[usize]> = v.iter().map(Vec::as_slice).collect();
    Permutation::from_cycles(16, &r).expect("cycles")
}

fn special_pair_operators() -> (Permutation, Permutation) {
    let sigma = cycles16(&[&[
        "t^3",
        "t^2+t^3",
        "t+t^3",
        "1+t+t^2+t^3",
        "1+t+t^2",
        "1+t+t^3",
        "1",
        "t+t^2+t^3",
        "1+t^3",
        "t",
        "1+t",
        "1+t^2+t^3",
        "t^2",
        "t+t^2",
        "1+t^2",
    ]]);
    let tau = cycles16(&[
        &["t^3", "t", "1+t+t^2+t^3", "t^2", "1"],
        &["t^2+t^3", "1+t", "1+t+t^2", "t+t^2", "t+t^2+t^3"],
        &["t+t^3", "1+t^2+t^3", "1+t+t^3", "1+t^2", "1+t^3"],
    ]);
    (sigma, tau)
}

fn q4_phi() -> CocycleTable {
    catalog::builtin_cocycle("q4_phi").expect("builtin cocycle")
}

fn cocycle_suite(p: &mut Parts) {
    let q = q4();
    let phi = q4_phi();
    let group = [id(4), theta(), theta().inverse()];
    let all_in = group.iter().all(|a| is_operator_cocycle(&op1(&q, a.clone()), &phi));
    p.check("cocycle on <theta>", all_in, "");
    let outside: Vec<Permutation> = automorphism_group(&q).into_iter().filter(|a| !group.contains(a)).collect();
    let failing = outside.iter().filter(|a| !is_operator_cocycle(&op1(&q, (*a).clone()), &phi)).count();
    p.check("fails outside <theta>", failing > 0, format!("{failing} of {}", outside.len()));
    let d = diagram("3_7");
    let show = |r: &GroupRingElement| r.display(&phi).to_string();
    let ab = cocycle_invariant(&d, &op2(&q, theta(), theta().inverse()), &phi);
    let ba = cocycle_invariant(&d, &op2(&q, theta().inverse(), theta()), &phi);
    match (ab, ba) {
        (Ok(ab), Ok(ba)) => {
            let (x, y) = (show(&ab), show(&ba));
            p.check("3_7 (theta,theta^-1)", x == "{e:1, t^-1:3}", x);
            p.check("3_7 (theta^-1,theta)", y == "{e:1, t:3}", y);
            p.check("multisets differ", ab != ba, "");
        }
        (a, b) => p.check("3_7 invariants", false, format!("{a:?} {b:?}")),
    }
}

fn plus_one(n: usize) -> Permutation {
    Permutation::from_images((0..n).map(|x| (x + 1) % n).collect()).expect("rotation")
}

fn k_family_counts(p: &mut Parts) {
    for (a, b) in [(3usize, 5usize), (3, 7), (5, 7)] {
        let oq = op2(&dihedral_quandle(a), id(a), plus_one(a));
        let got = count(&k_family(a, "α", "β"), &oq);
        p.check(format!("Col(K({a}),Z_{a})"), got == a.to_string(), got);
        let got = count(&k_family(b, "α", "β"), &oq);
        p.check(format!("Col(K({b}),Z_{a})"), got == "0", got);
    }
}

fn qme_suite(p: &mut Parts) {
    for m in 1..=4 {
        for e in TypeVector::all(m) {
            let q = qme(&e);
            let prof = classify_magma(&q);
            let rs: Vec<Permutation> = (0..1 << m).map(|a| right_translation(&q, qme_index(m, 0, a)).expect("rack")).collect();
            let commuting = rs.iter().all(|a| rs.iter().all(|b| a.commutes_with(b)));
            let distinct = (0..rs.len()).all(|a| (a + 1..rs.len()).all(|b| rs[a] != rs[b]));
            let ok = prof.quandle && prof.connected && q.order() == 3 << m && commuting && distinct;
            p.check(
                format!("Q_{m}({})", e.value()),
                ok,
                format!(
                    "order={} quandle={} connected={} commuting={commuting} distinct={distinct}",
                    q.order(),
                    prof.quandle,
                    prof.connected
                ),
            );
        }
    }
    let iso = |bits: Vec<bool>, name: &str| {
        let cq = catalog::builtin_quandle(name).expect("catalog entry");
        find_isomorphism(&qme(&TypeVector::new(bits).expect("bits")), &cq).is_some()
    };
    p.check("Q_1(0) ~ CQ(6,1)", iso(vec![false], "cq_6_1"), "");
    p.check("Q_1(1) ~ CQ(6,2)", iso(vec![true], "cq_6_2"), "");
    p.check("Q_2(0,0) ~ CQ(12,8)", iso(vec![false, false], "cq_12_8"), "");
}

fn rack_3() -> MultiplicationTable {
    MultiplicationTable::new(vec![vec![0, 2, 0], vec![1, 1, 1], vec![2, 0, 2]]).expect("table")
}

fn rack_5() -> MultiplicationTable {
    MultiplicationTable::new(vec![vec![0, 0, 1, 1, 1], vec![1, 1, 0, 0, 0], vec![3, 4, 2, 4, 3], vec![4, 2, 4, 3, 2], vec![2, 3, 3, 2, 4]])
        .expect("table")
}

fn rack_4() -> MultiplicationTable {
    MultiplicationTable::new(vec![vec![0, 0, 0, 0], vec![1, 1, 3, 2], vec![2, 3, 2, 1], vec![3, 2, 1, 3]]).expect("table")
}

fn r_cliques(p: &mut Parts) {
    let q = catalog::builtin_quandle("cq_10_1").expect("catalog entry");
    let r = |x| right_translation(&q, x).expect("rack");
    let cyc = |c: &[&[usize]]| Permutation::from_cycles(10, c).expect("cycles");
    p.check("R_0", r(0) == cyc(&[&[2, 5], &[3, 9], &[4, 6]]), format!("{:?}", r(0).cycles()));
    p.check("R_1", r(1) == cyc(&[&[2, 6], &[4, 5], &[7, 8]]), format!("{:?}", r(1).cycles()));
    p.check("R_3", r(3) == cyc(&[&[0, 9], &[4, 8], &[5, 7]]), format!("{:?}", r(3).cycles()));
    let pattern = (r_commutes(&q, 0, 1), r_commutes(&q, 1, 3), r_commutes(&q, 0, 3));
    p.check("commutes 0~1, 1~3, not 0~3", pattern == (Ok(true), Ok(true), Ok(false)), format!("{pattern:?}"));
    let c14 = maximal_r_cliques(&rack_5()).map(|r| r.cliques).unwrap_or_default();
    p.check("order-5 rack cliques", c14 == vec![vec![0, 1], vec![2], vec![3], vec![4]], format!("{c14:?}"));
    let c15 = maximal_r_cliques(&rack_4()).map(|r| r.cliques).unwrap_or_default();
    p.check("order-4 rack cliques", c15 == vec![vec![0, 1], vec![0, 2], vec![0, 3]], format!("{c15:?}"));
    let mut tables = vec![
        q4(),
        cq_5_2(),
        catalog::builtin_quandle("cq_6_1").expect("catalog entry"),
        catalog::builtin_quandle("cq_6_2").expect("catalog entry"),
        qme(&TypeVector::new(vec![false]).expect("bits")),
        qme(&TypeVector::new(vec![true]).expect("bits")),
        rack_3(),
        rack_5(),
        rack_4(),
    ];
    tables.extend((3..=6).map(dihedral_quandle));
    tables.extend((1..=6).map(projection_quandle));
    let fixtures = tables.len();
    for n in 1..=4 {
        tables.extend(enumerate_racks(n));
    }
    let mut bad = 0;
    for t in &tables {
        match maximal_r_cliques(t) {
            Ok(r) if r.is_subrack.iter().all(|&b| b) && r.kernel_class_union.iter().all(|&b| b) => {}
            _ => bad += 1,
        }
    }
    p.check(
        "maximal cliques are subracks and kernel unions",
        bad == 0,
        format!("{} tables ({fixtures} fixtures), {bad} violations", tables.len()),
    );
}

fn identities(p: &mut Parts) {
    let (mut racks, mut bad_rmlt, mut bad_graphic) = (0, 0, 0);
    for n in 1..=4 {
        for t in enumerate_racks(n) {
            racks += 1;
            let m = |x, y| t.op(x, y);
            let r = 0..n;
            let ii = r.clone().all(|x| r.clone().all(|y| r.clone().all(|z| m(m(x, y), z) == m(m(x, z), y))));
            let iii = r.clone().all(|x| r.clone().all(|y| r.clone().all(|z| m(x, m(y, z)) == m(x, y))));
            let prof = classify_magma(&t);
            let abelian = right_multiplication_group(&t, DEFAULT_GROUP_LIMIT).map(|g| g.is_abelian()).unwrap_or(false);
            if !(abelian == ii && ii == iii && iii == (prof.medial && prof.paragraphic)) {
                bad_rmlt += 1;
            }
            let graphic_quandle = prof.graphic && prof.quandle;
            if !(prof.graphic == graphic_quandle && graphic_quandle == (prof.paragraphic && prof.quandle)) {
                bad_graphic += 1;
            }
        }
    }
    p.check("Rmlt abelian equivalences", bad_rmlt == 0, format!("{racks} racks, {bad_rmlt} violations"));
    p.check("graphic = graphic quandle = paragraphic quandle", bad_graphic == 0, format!("{racks} racks, {bad_graphic} violations"));
    let z3 = classify_magma(&MultiplicationTable::from_fn(3, |x, y| (6 - x - y) % 3).expect("table"));
    p.check(
        "Z3 x*y=-x-y medial, not paragraphic",
        z3.medial && !z3.paragraphic,
        format!("medial={} paragraphic={}", z3.medial, z3.paragraphic),
    );
    let z2 = classify_magma(&MultiplicationTable::from_fn(2, |x, _| (x + 1) % 2).expect("table"));
    p.check(
        "Z2 x*y=x+1 paragraphic, not graphic",
        z2.paragraphic && !z2.graphic && z2.rack && !z2.quandle,
        format!("paragraphic={} graphic={} rack={} quandle={}", z2.paragraphic, z2.graphic, z2.rack, z2.quandle),
    );
}

fn typings(p: &mut Parts) {
    p.eq("B_3", bell_number(3), 5);
    p.eq("B_4", bell_number(4), 15);
    p.eq("B_8", bell_number(8), 4140);
    let cols: Vec<String> = enumerate_typings(3).iter().map(|s| s.to_string()).collect();
    p.eq("typings(3)", cols, ["111", "112", "121", "122", "123"].map(String::from).to_vec());
}

/// Diagrams the move walks start from.
pub const WALK_FIXTURES: [&str; 12] =
    ["unknot", "2_1", "3_1", "3_2", "3_3", "3_4", "3_5", "3_6", "3_7", "special_pair_left", "special_pair_right", "K(1)"];

fn commuting_pair(q: &MultiplicationTable) -> (Permutation, Permutation) {
    let auts: Vec<Permutation> = automorphism_group(q).into_iter().filter(|p| !p.is_identity()).collect();
    for a in &auts {
        for b in &auts {
            if a != b && a.commutes_with(b) {
                return (a.clone(), b.clone());
            }
        }
    }
    (id(q.order()), id(q.order()))
}

/// Operator quandles used by the move walks.
pub fn walk_battery() -> Vec<OperatorQuandle> {
    let q = q4();
    let q10 = qme(&TypeVector::new(vec![false]).expect("bits"));
    let (r0, r1) = (translation_operator(&q10, 0).expect("rack"), translation_operator(&q10, 1).expect("rack"));
    let (t0, t1) = if r0.commutes_with(&r1) { (r0, r1) } else { commuting_pair(&q10) };
    let rho = plus_one(5);
    let cq6 = catalog::builtin_quandle("cq_6_2").expect("catalog entry");
    let (c0, c1) = commuting_pair(&cq6);
    vec![
        op2(&q, theta(), theta().inverse()),
        op2(&q, id(4), theta()),
        op2(&cq_5_2(), id(5), omega()),
        op2(&dihedral_quandle(5), rho.clone(), rho.pow(2)),
        op2(&q10, t0, t1),
        op2(&cq6, c0, c1),
    ]
}

fn walk_invariants(
    d: &Diagram,
    ops: &[OperatorQuandle],
    coc: &[(OperatorQuandle, CocycleTable)],
) -> Result<(Vec<u64>, Vec<GroupRingElement>), String> {
    let counts = ops.iter().map(|oq| count_colorings(d, oq)).collect::<Result<_, _>>().map_err(|e| e.to_string())?;
    let cocs = coc.iter().map(|(oq, phi)| cocycle_invariant(d, oq, phi)).collect::<Result<_, _>>().map_err(|e| e.to_string())?;
    Ok((counts, cocs))
}

fn walk_bracket(d: &Diagram) -> Option<LaurentPolynomial> {
    let roles = parse_roles([("α", "box"), ("β", "circle")]).ok()?;
    chromatic_bracket_with(d, &roles, DEFAULT_STATE_BUDGET).ok()
}

fn pick(d: &Diagram, rng: &mut ChaCha8Rng) -> Option<MoveSite> {
    let size = d.classical_count() + d.virtual_count();
    let sites: Vec<MoveSite> = MoveKind::ALL.iter().flat_map(|&k| enumerate_move_sites(d, k)).collect();
    let shrinking: Vec<&MoveSite> = sites.iter().filter(|s| !matches!(s.locus, Locus::Insert { .. })).collect();
    if size >= WALK_MAX_CROSSINGS || (!shrinking.is_empty() && rng.gen_bool(0.4)) {
        if let Some(s) = shrinking.choose(rng) {
            return Some((*s).clone());
        }
        if size >= WALK_MAX_CROSSINGS {
            return None;
        }
    }
    sites.choose(rng).cloned()
}

/// One seeded walk; returns the number of moves applied or the first
/// invariant that changed.
pub fn random_walk(name: &str, seed: u64, steps: usize) -> Result<usize, String> {
    let ops = walk_battery();
    let q = q4();
    let coc = vec![(op2(&q, theta(), theta().inverse()), q4_phi()), (op2(&q, theta().inverse(), theta()), q4_phi())];
    let mut d = builtin_diagram(name).map_err(|e| e.to_string())?;
    let base = walk_invariants(&d, &ops, &coc)?;
    let mut last_bracket = walk_bracket(&d);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut applied = 0;
    for step in 0..steps {
        let Some(site) = pick(&d, &mut rng) else { break };
        let next = apply_move(&d, site.kind, &site.locus, site.direction).map_err(|e| format!("step {step}: {e}"))?;
        let now = walk_invariants(&next, &ops, &coc)?;
        if now.0 != base.0 {
            return Err(format!("step {step}: {} changed colorings", site.kind.name()));
        }
        if now.1 != base.1 {
            return Err(format!("step {step}: {} changed the cocycle invariant", site.kind.name()));
        }
        let b = walk_bracket(&next);
        if !matches!(site.kind, MoveKind::Omega1a | MoveKind::Omega1b) && b != last_bracket {
            return Err(format!("step {step}: {} changed the bracket", site.kind.name()));
        }
        last_bracket = b;
        d = next;
        applied += 1;
    }
    Ok(applied)
}

fn move_invariance(p: &mut Parts) {
    p.check("battery size >= 5", walk_battery().len() >= 5, walk_battery().len().to_string());
    for (seed, name) in WALK_FIXTURES.iter().enumerate() {
        match random_walk(name, seed as u64, WALK_STEPS) {
            Ok(n) => p.check(format!("walk {name}"), true, format!("{n} moves")),
            Err(e) => p.check(format!("walk {name}"), false, e),
        }
    }
}

fn loop_value() -> LaurentPolynomial {
    LaurentPolynomial::loop_value()
}

fn bracket(p: &mut Parts) {
    let b = |d: &Diagram| chromatic_bracket(d).map_err(|e| e.to_string());
    for n in 1..=3usize {
        match b(&l_family(0, n)) {
            Ok(v) => {
                let lead = v.leading_term();
                let degree = lead.map(|(k, _)| k);
                p.check(
                    format!("L(0,{n}) top degree {}", 2 * n + 2),
                    degree == Some(2 * n as i32 + 2) && lead.map(|l| l.1) == Some(-1),
                    format!("{lead:?}"),
                );
            }
            Err(e) => p.check(format!("L(0,{n})"), false, e),
        }
        let rec = match (b(&l_family(0, n)), b(&l_family(1, n - 1)), b(&l_family(0, n - 1))) {
            (Ok(l), Ok(r1), Ok(r0)) => l == r1.scale(2) - loop_value() * r0,
            _ => false,
        };
        p.check(format!("L(0,{n}) = 2 L(1,{}) - d L(0,{})", n - 1, n - 1), rec, "");
    }
    let kink = Diagram::new(vec![], vec![parse_symbols("O+1 U+1").expect("symbols")]).expect("diagram");
    let want = LaurentPolynomial::monomial(-1, 3) * loop_value();
    match b(&kink) {
        Ok(v) => p.check("kink = -A^3 d", v == want, v.to_string()),
        Err(e) => p.check("kink", false, e),
    }
}

/// Diagrams used by the oracle equivalence check.
pub fn oracle_fixtures() -> Vec<String> {
    let mut v: Vec<String> = WALK_FIXTURES.iter().map(|s| s.to_string()).collect();
    v.extend(["K(2)", "K(3)"].map(String::from));
    v
}

/// Quandles whose commuting pairs are tried by the oracle check.
pub fn oracle_quandles() -> Vec<(&'static str, MultiplicationTable)> {
    vec![
        ("q4", q4()),
        ("cq_5_2", cq_5_2()),
        ("dihedral(3)", dihedral_quandle(3)),
        ("dihedral(4)", dihedral_quandle(4)),
        ("projection(2)", projection_quandle(2)),
    ]
}

/// Commuting operator pairs tried per fixture and quandle.
pub const ORACLE_PAIRS: usize = 8;

fn oracle(p: &mut Parts) {
    let mut jobs = Vec::new();
    let mut skipped = 0;
    for name in oracle_fixtures() {
        let d = diagram(&name);
        for (qn, q) in oracle_quandles() {
            let size = (q.order() as u128).checked_pow(d.semiarc_count() as u32);
            if size.is_none_or(|s| s > ORACLE_BUDGET) {
                skipped += 1;
                continue;
            }
            let auts = automorphism_group(&q);
            let pairs = commuting_automorphism_tuples(&auts, 2, false);
            let step = pairs.len().div_ceil(ORACLE_PAIRS);
            for t in pairs.iter().step_by(step) {
                jobs.push((name.clone(), qn, d.clone(), op2(&q, auts[t[0]].clone(), auts[t[1]].clone())));
            }
        }
    }
    let mut mismatches: Vec<String> = jobs
        .par_iter()
        .filter(|(_, _, d, oq)| {
            let fast = count_colorings(d, oq);
            fast.is_err() || fast != coloring_oracle(d, oq, ORACLE_BUDGET)
        })
        .map(|(name, qn, _, _)| format!("{name}/{qn}"))
        .collect();
    mismatches.dedup();
    p.check(
        "count_colorings = coloring_oracle",
        mismatches.is_empty() && !jobs.is_empty(),
        format!("{} instances, {skipped} fixture/quandle pairs over budget, mismatches {mismatches:?}", jobs.len()),
    );
}

fn classification(p: &mut Parts) {
    for name in ["3_1", "3_3", "3_4"] {
        match invariant_profile(&diagram(name), &q4(), 2) {
            Ok(prof) => {
                let pairs = prof.undistinguished_pairs();
                let text: Vec<String> =
                    pairs.iter().map(|&(i, j)| format!("{}~{}", scheme(&prof.schemes[i]), scheme(&prof.schemes[j]))).collect();
                p.check(
                    format!("{name}: 10 schemes distinguished by Q4"),
                    prof.schemes.len() == 10 && pairs.is_empty(),
                    if text.is_empty() { "none undistinguished".to_string() } else { format!("undistinguished {}", text.join(",")) },
                );
            }
            Err(e) => p.check(name, false, e.to_string()),
        }
    }
    for name in ["3_5", "3_7"] {
        let d = diagram(name);
        let same = invariant_profile(&d, &q4(), 2).map(|prof| {
            let (i, j) = (prof.scheme_index(&[1, 2]), prof.scheme_index(&[2, 1]));
            matches!((i, j), (Some(i), Some(j)) if prof.values[i] == prof.values[j])
        });
        p.check(format!("{name}: 12 ~ 21 under Q4"), same == Ok(true), format!("{same:?}"));
        let a = count(&d, &op2(&cq_5_2(), id(5), omega()));
        let b = count(&d, &op2(&cq_5_2(), omega(), id(5)));
        p.check(format!("{name}: CQ(5,2) (1,omega) vs (omega,1)"), a != b, format!("{a} vs {b}"));
    }
}

fn scheme(u: &[usize]) -> String {
    u.iter().map(usize::to_string).collect()
}

/// Every criterion in order.
pub fn run_all() -> Vec<Outcome> {
    (1..=CRITERIA).filter_map(run).collect()
}
