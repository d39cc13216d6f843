use mvk::catalog::{builtin_cocycle, builtin_quandle, table_document, TABLE_FILES};
use mvk::cocycle_file::{parse_cocycle, write_cocycle, CocycleFileError};
use mvk::diagram_file::{parse_diagram, write_diagram, DiagramFileError};
use mvk::qtab::{parse_qtab, parse_quandle_table, write_quandle_table};
use mvk::ParseError;
use mvk_core::constructions::q4;
use mvk_core::diagram::{apply_move, builtin_diagram, enumerate_move_sites, k_family, l_family, Diagram, MoveKind};
use mvk_core::MultiplicationTable;
use proptest::prelude::*;

mod oracle {
    use mvk_core::MultiplicationTable;

    /// All permutations of `0..n`, lexicographic.
    pub fn perms(n: usize) -> Vec<Vec<usize>> {
        fn go(cur: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
            if cur.len() == used.len() {
                out.push(cur.clone());
                return;
            }
            for i in 0..used.len() {
                if !used[i] {
                    used[i] = true;
                    cur.push(i);
                    go(cur, used, out);
                    cur.pop();
                    used[i] = false;
                }
            }
        }
        let mut out = Vec::new();
        go(&mut Vec::new(), &mut vec![false; n], &mut out);
        out
    }

    /// `p` after `q`.
    pub fn after(p: &[usize], q: &[usize]) -> Vec<usize> {
        q.iter().map(|&i| p[i]).collect()
    }

    pub fn inverse(p: &[usize]) -> Vec<usize> {
        let mut r = vec![0; p.len()];
        for (i, &x) in p.iter().enumerate() {
            r[x] = i;
        }
        r
    }

    pub fn moved(p: &[usize]) -> usize {
        p.iter().enumerate().filter(|(i, x)| i != *x).count()
    }

    pub fn order(p: &[usize]) -> usize {
        let mut k = 1;
        let mut q = p.to_vec();
        while q.iter().enumerate().any(|(i, x)| i != *x) {
            q = after(p, &q);
            k += 1;
        }
        k
    }

    /// `x*y = y^-1 x y` on a sorted element list.
    pub fn conjugation<T: Ord + Clone>(elems: &[T], mul: impl Fn(&T, &T) -> T, inv: impl Fn(&T) -> T) -> MultiplicationTable {
        MultiplicationTable::from_fn(elems.len(), |x, y| {
            let z = mul(&mul(&inv(&elems[y]), &elems[x]), &elems[y]);
            elems.binary_search(&z).expect("class is closed")
        })
        .unwrap()
    }

    pub fn isomorphic(a: &MultiplicationTable, b: &MultiplicationTable) -> bool {
        let n = a.order();
        n == b.order() && perms(n).iter().any(|f| (0..n).all(|x| (0..n).all(|y| f[a.op(x, y)] == b.op(f[x], f[y]))))
    }
}

#[test]
fn catalog_files_round_trip_bit_exact() {
    for (name, text) in TABLE_FILES {
        let doc = parse_qtab(text).unwrap();
        assert_eq!(doc.to_string(), *text, "{name}");
        assert!(doc.table.is_quandle(), "{name}");
        let bare = write_quandle_table(&doc.table);
        assert_eq!(parse_quandle_table(&bare).unwrap(), doc.table, "{name}");
    }
}

#[test]
fn q4_file_is_the_constructed_quandle() {
    let doc = table_document("q4").unwrap();
    assert_eq!(doc.table.rows(), q4().rows());
    assert_eq!(doc.table.labels().unwrap(), ["0", "1", "t", "t^-1"]);
}

#[test]
fn cq_6_files_are_s4_conjugation_classes() {
    let s4 = oracle::perms(4);
    let mul = |a: &Vec<usize>, b: &Vec<usize>| oracle::after(a, b);
    let inv = |a: &Vec<usize>| oracle::inverse(a);
    let transpositions: Vec<Vec<usize>> = s4.iter().filter(|p| oracle::moved(p) == 2).cloned().collect();
    let four_cycles: Vec<Vec<usize>> = s4.iter().filter(|p| oracle::order(p) == 4).cloned().collect();
    assert_eq!((transpositions.len(), four_cycles.len()), (6, 6));
    assert_eq!(builtin_quandle("cq_6_1").unwrap().rows(), oracle::conjugation(&transpositions, mul, inv).rows());
    assert_eq!(builtin_quandle("cq_6_2").unwrap().rows(), oracle::conjugation(&four_cycles, mul, inv).rows());
}

#[test]
fn cq_12_8_is_an_involution_class() {
    let q = builtin_quandle("cq_12_8").unwrap();
    assert!(q.is_quandle());
    assert!((0..12).all(|x| (0..12).all(|y| q.op(q.op(x, y), y) == x)), "involutory");
    let qme = mvk_core::constructions::qme(&mvk_core::constructions::TypeVector::new(vec![false, false]).unwrap());
    assert!(mvk_core::algebra::find_isomorphism(&q, &qme).is_some());
}

#[test]
fn small_catalog_isomorphisms_match_brute_force() {
    for (a, b) in [("cq_6_1", "qme(0)"), ("cq_6_2", "qme(1)"), ("cq_6_1", "cq_6_2")] {
        let (x, y) = (builtin_quandle(a).unwrap(), builtin_quandle(b).unwrap());
        assert_eq!(mvk_core::algebra::find_isomorphism(&x, &y).is_some(), oracle::isomorphic(&x, &y), "{a} {b}");
    }
    assert!(oracle::isomorphic(&builtin_quandle("cq_6_1").unwrap(), &builtin_quandle("qme(0)").unwrap()));
    assert!(!oracle::isomorphic(&builtin_quandle("cq_6_1").unwrap(), &builtin_quandle("cq_6_2").unwrap()));
}

fn position(e: ParseError) -> (usize, usize) {
    (e.line, e.col)
}

#[test]
fn qtab_errors_carry_positions() {
    let cases = [
        ("", (1, 1)),
        ("order 2\n0 1\n", (3, 1)),
        ("order 2\n0 1\n1 x\n", (3, 3)),
        ("order 2\n0 1\n1 2\n", (3, 3)),
        ("# c\norder 2\n0 1 1\n1 0\n", (3, 5)),
        ("order 2\n0 0\n1 1\nlabels a\n", (4, 9)),
    ];
    for (text, pos) in cases {
        let e = parse_qtab(text).unwrap_err();
        assert_eq!(position(e.clone()), pos, "{text:?}: {e}");
    }
}

#[test]
fn qtab_labels_and_comments() {
    let text = "# head\norder 2\n0 0  # trailing\n\n1 1\nlabels a b\n# tail\n";
    let doc = parse_qtab(text).unwrap();
    assert_eq!(doc.table.labels().unwrap(), ["a", "b"]);
    assert_eq!(doc.to_string(), "# head\norder 2\n0 0\n\n1 1\nlabels a b\n# tail\n");
    assert_eq!(doc.table.rows(), mvk_core::constructions::projection_quandle(2).rows());
}

#[test]
fn diagram_errors() {
    let e = parse_diagram("component: O+1 U+1\n").unwrap_err();
    assert!(matches!(e, DiagramFileError::Parse(ParseError { line: 1, col: 1, .. })));
    let e = parse_diagram("types: α\ncomponent: O+1 X+1\n").unwrap_err();
    assert!(matches!(e, DiagramFileError::Parse(ParseError { line: 2, col: 16, .. })), "{e}");
    let e = parse_diagram("types:\ncomponent: O+1 O+1\n").unwrap_err();
    assert!(matches!(e, DiagramFileError::Invalid(_)), "{e}");
    let e = parse_diagram("types:\ncomponent: Vα+1 Vα-1\n").unwrap_err();
    assert!(matches!(e, DiagramFileError::Invalid(_)), "{e}");
}

#[test]
fn fixture_files_match_builtins() {
    let dir = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures");
    let named = [
        ("unknot", "unknot"),
        ("2_1", "2_1"),
        ("3_1", "3_1"),
        ("3_2", "3_2"),
        ("3_3", "3_3"),
        ("3_4", "3_4"),
        ("3_5", "3_5"),
        ("3_6", "3_6"),
        ("3_7", "3_7"),
        ("special_pair_left", "special_pair_left"),
        ("special_pair_right", "special_pair_right"),
        ("K3", "K(3)"),
        ("K5", "K(5)"),
        ("K7", "K(7)"),
        ("L0_1", "L(0,1)"),
        ("L0_2", "L(0,2)"),
        ("L1_1", "L(1,1)"),
    ];
    for (file, name) in named {
        let text = std::fs::read_to_string(dir.join(format!("{file}.mvk"))).unwrap();
        assert_eq!(parse_diagram(&text).unwrap(), builtin_diagram(name).unwrap(), "{file}");
    }
    let bad = std::fs::read_to_string(dir.join("bad.qtab")).unwrap();
    assert!(!parse_quandle_table(&bad).unwrap().is_right_quasigroup());
}

/// `φ(x,y) = y(x-y)^2` over `Z2[t]/(t^2+t+1)` with `t^2 = 1 + t`.
fn phi_oracle() -> Vec<Vec<usize>> {
    let mul = |a: usize, b: usize| {
        let (a0, a1, b0, b1) = (a & 1, a >> 1 & 1, b & 1, b >> 1 & 1);
        (a0 & b0 ^ a1 & b1) | (a0 & b1 ^ a1 & b0 ^ a1 & b1) << 1
    };
    (0..4).map(|x| (0..4).map(|y| mul(y, mul(x ^ y, x ^ y))).collect()).collect()
}

#[test]
fn cocycle_file_is_the_formula() {
    let c = builtin_cocycle("q4_phi").unwrap();
    assert_eq!(c.phi(), phi_oracle().as_slice());
    assert_eq!(c.group().rows(), MultiplicationTable::from_fn(4, |x, y| x ^ y).unwrap().rows());
    assert_eq!(parse_cocycle(&write_cocycle(&c)).unwrap(), c);
}

#[test]
fn cocycle_errors() {
    assert!(matches!(parse_cocycle("grp 2\n"), Err(CocycleFileError::Parse(ParseError { line: 1, col: 1, .. }))));
    assert!(matches!(parse_cocycle("group 0\n"), Err(CocycleFileError::Parse(ParseError { line: 1, col: 7, .. }))));
    let not_group = "group 2\n0 0\n0 0\nphi\n0\n";
    assert!(matches!(parse_cocycle(not_group), Err(CocycleFileError::Invalid(_))));
}

fn grown(seed: usize) -> Diagram {
    let names = ["2_1", "3_1", "3_3", "3_5", "3_7", "special_pair_left"];
    let mut d = builtin_diagram(names[seed % names.len()]).unwrap();
    for step in 0..seed % 5 {
        let kind = MoveKind::ALL[(seed + step) % MoveKind::ALL.len()];
        let sites = enumerate_move_sites(&d, kind);
        if let Some(s) = sites.get(seed % sites.len().max(1)) {
            d = apply_move(&d, s.kind, &s.locus, s.direction).unwrap();
        }
    }
    d
}

proptest! {
    #[test]
    fn diagrams_round_trip(seed in 0usize..200, n in 0usize..6, i in 0usize..3, j in 0usize..3) {
        for d in [grown(seed), k_family(n, "α", "β"), l_family(i, j)] {
            let text = write_diagram(&d);
            let back = parse_diagram(&text).unwrap();
            prop_assert_eq!(&back, &d);
            prop_assert_eq!(write_diagram(&back), text);
        }
    }

    #[test]
    fn tables_round_trip(n in 1usize..6, seed in any::<u64>(), labelled in any::<bool>()) {
        let t = MultiplicationTable::from_fn(n, |x, y| ((seed >> ((x * n + y) % 60)) as usize + x * y) % n).unwrap();
        let t = if labelled { t.with_labels((0..n).map(|i| format!("e{i}")).collect()).unwrap() } else { t };
        let text = write_quandle_table(&t);
        prop_assert_eq!(parse_quandle_table(&text).unwrap(), t);
    }
}
