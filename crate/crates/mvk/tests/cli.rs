use mvk::cli::{parallel_bracket, parallel_profile, run_captured};
use mvk_core::bracket::{chromatic_bracket_with, parse_roles, DEFAULT_STATE_BUDGET};
use mvk_core::constructions::{dihedral_quandle, q4};
use mvk_core::diagram::{builtin_diagram, l_family};
use mvk_core::invariants::invariant_profile;
use std::path::Path;

fn mvk(args: &str) -> (i32, String, String) {
    run_captured(std::iter::once("mvk").chain(args.split_whitespace()))
}

fn manifest(rel: &str) -> String {
    Path::new(env!("CARGO_MANIFEST_DIR")).join(rel).to_string_lossy().into_owned()
}

/// `key=value` fields of one line record, split at known keys.
fn fields(line: &str, keys: &[&str]) -> Vec<(String, String)> {
    let mut starts: Vec<(usize, &str)> = keys
        .iter()
        .filter_map(|k| {
            let pat = format!("{k}=");
            line.match_indices(&pat).find(|(i, _)| *i == 0 || line.as_bytes()[i - 1] == b' ').map(|(i, _)| (i, *k))
        })
        .collect();
    starts.sort();
    starts
        .iter()
        .enumerate()
        .map(|(n, &(i, k))| {
            let end = starts.get(n + 1).map_or(line.len(), |s| s.0 - 1);
            (k.to_string(), line[i + k.len() + 1..end].to_string())
        })
        .collect()
}

#[test]
fn exit_codes() {
    assert_eq!(mvk("check --quandle q4").0, 0);
    assert_eq!(mvk(&format!("check --quandle {}", manifest("fixtures/bad.qtab"))).0, 1);
    assert_eq!(mvk("check --quandle q4 --require rack").0, 0);
    assert_eq!(mvk("check").0, 2);
    assert_eq!(mvk("frobnicate").0, 2);
    assert_eq!(mvk("invariants --diagram 3_7 --quandle q4 --op alpha=id").0, 2);
    assert_eq!(mvk("invariants --diagram 3_7 --quandle q4 --op alpha=aut:99 --op beta=id").0, 2);
    assert_eq!(mvk("invariants --diagram nowhere.mvk --quandle q4").0, 2);
    assert_eq!(mvk("invariants --diagram K(3) --quandle dihedral(3) --op alpha=id --op beta=cycles:0,1,2 --oracle --budget 10").0, 3);
    assert_eq!(mvk("bracket --diagram L(0,3) --budget 4").0, 3);
    assert_eq!(mvk(&format!("bracket --diagram {}", manifest("fixtures/three_types.mvk"))).0, 2);
    assert_eq!(mvk("acceptance --criterion 13").0, 2);
    assert_eq!(mvk("acceptance --criterion 8").0, 0);
    assert_eq!(mvk("--help").0, 0);
}

#[test]
fn diagnostics_name_the_problem() {
    let (_, _, err) = mvk("invariants --diagram 3_7 --quandle q4 --op alpha=id");
    assert!(err.contains("missing operator binding for type β"), "{err}");
    let bad = std::env::temp_dir().join("mvk_cli_bad.qtab");
    std::fs::write(&bad, "order 2\n0 1\n1 x\n").unwrap();
    let (code, _, err) = mvk(&format!("check --quandle {}", bad.display()));
    assert_eq!(code, 2);
    assert!(err.contains(":3:3:"), "{err}");
    let (_, _, err) = mvk(&format!("bracket --diagram {}", manifest("fixtures/three_types.mvk")));
    assert!(err.contains("at most two virtual types"), "{err}");
}

#[test]
fn printed_counts_from_the_command_line() {
    let line = |a: &str| mvk(&format!("--format line {a}")).1.trim().to_string();
    assert_eq!(line("invariants --diagram 2_1 --quandle q4 --op alpha=id"), "col=4");
    assert_eq!(line("invariants --diagram 2_1 --quandle q4 --op alpha=inv:cycles:1,2,3"), "col=1");
    assert_eq!(line("invariants --diagram 3_5 --quandle cq_5_2 --op alpha=id --op beta=cycles:1,3,4,2"), "col=1");
    assert_eq!(line("invariants --diagram 3_5 --quandle cq_5_2 --op alpha=cycles:1,3,4,2 --op beta=id"), "col=5");
    assert_eq!(line("invariants --diagram K(5) --quandle dihedral(5) --op alpha=id --op beta=cycles:0,1,2,3,4"), "col=5");
    assert_eq!(line("invariants --diagram K(3) --quandle dihedral(5) --op alpha=id --op beta=cycles:0,1,2,3,4"), "col=0");
    assert_eq!(line("bracket --diagram unknot"), "bracket=-A^2 - A^-2");
}

#[test]
fn parallel_profile_matches_core() {
    for name in ["3_1", "3_5", "2_1"] {
        let d = builtin_diagram(name).unwrap();
        let k = d.types().len();
        assert_eq!(parallel_profile(&d, &q4(), k).unwrap(), invariant_profile(&d, &q4(), k).unwrap(), "{name}");
    }
    let d = builtin_diagram("3_7").unwrap();
    assert_eq!(parallel_profile(&d, &dihedral_quandle(5), 2).unwrap(), invariant_profile(&d, &dihedral_quandle(5), 2).unwrap());
}

#[test]
fn parallel_bracket_matches_core() {
    let roles = parse_roles([("α", "box"), ("β", "circle")]).unwrap();
    for name in ["2_1", "3_1", "3_6", "3_7", "special_pair_left"] {
        let d = builtin_diagram(name).unwrap();
        assert_eq!(
            parallel_bracket(&d, &roles, DEFAULT_STATE_BUDGET).unwrap(),
            chromatic_bracket_with(&d, &roles, DEFAULT_STATE_BUDGET).unwrap(),
            "{name}"
        );
    }
    let d = l_family(2, 4);
    let none = Default::default();
    assert_eq!(
        parallel_bracket(&d, &none, DEFAULT_STATE_BUDGET).unwrap(),
        chromatic_bracket_with(&d, &none, DEFAULT_STATE_BUDGET).unwrap()
    );
}

#[test]
fn json_lines_mirror_line_records() {
    let commands = [
        ("catalog", &["kind", "name", "classical", "virtual", "types", "order", "connected", "quandle"][..]),
        ("classify --diagram 3_1 --quandle q4", &["scheme", "tuple", "col", "schemes", "tuples", "undistinguished"][..]),
        (
            "invariants --diagram 3_7 --quandle q4 --op alpha=cycles:1,2,3 --op beta=inv:cycles:1,2,3 --cocycle q4_phi --oracle",
            &["col", "coc", "oracle"][..],
        ),
        (
            "check --quandle q4",
            &[
                "table",
                "quandle",
                "order",
                "right_quasigroup",
                "rack",
                "medial",
                "graphic",
                "paragraphic",
                "flexible",
                "rmlt_abelian",
                "connected",
            ][..],
        ),
        ("acceptance --criterion 4", &["criterion", "part", "pass", "detail", "status"][..]),
    ];
    for (cmd, keys) in commands {
        let (c1, line, _) = mvk(&format!("--format line {cmd}"));
        let (c2, json, _) = mvk(&format!("--format json-lines {cmd}"));
        assert_eq!(c1, c2, "{cmd}");
        let (line, json): (Vec<&str>, Vec<&str>) = (line.lines().collect(), json.lines().collect());
        assert_eq!(line.len(), json.len(), "{cmd}");
        for (l, j) in line.iter().zip(&json) {
            let v: serde_json::Value = serde_json::from_str(j).unwrap();
            let obj = v.as_object().unwrap();
            let from_line = fields(l, keys);
            let json_keys: Vec<&String> = obj.keys().collect();
            assert_eq!(from_line.iter().map(|(k, _)| k).collect::<Vec<_>>(), json_keys, "{cmd}: {l}");
            for (k, val) in from_line {
                let rendered = match &obj[&k] {
                    serde_json::Value::String(s) => s.clone(),
                    serde_json::Value::Array(a) => a.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","),
                    other => other.to_string(),
                };
                assert_eq!(rendered, val, "{cmd}: {k}");
            }
        }
    }
}

#[test]
fn output_is_stable_across_runs_and_thread_counts() {
    for cmd in [
        "--format line classify --diagram 3_4 --quandle q4",
        "--format line catalog",
        "--format line classify --diagram 3_5 --against 3_7 --quandle cq_5_2",
    ] {
        let first = mvk(cmd);
        assert_eq!(mvk(cmd), first, "{cmd}");
        assert_eq!(mvk(&format!("--jobs 1 {cmd}")), first, "{cmd}");
        assert_eq!(mvk(&format!("--jobs 3 {cmd}")), first, "{cmd}");
    }
}

#[test]
fn catalog_show_round_trips() {
    for name in ["q4", "cq_10_1", "q4_phi", "3_7", "K(4)", "dihedral(4)"] {
        let (code, out, _) = mvk(&format!("catalog --show {name}"));
        assert_eq!(code, 0, "{name}");
        assert!(!out.is_empty());
    }
    let (_, out, _) = mvk("catalog --show 3_7");
    assert_eq!(mvk_core::diagram::builtin_diagram("3_7").unwrap(), mvk::diagram_file::parse_diagram(&out).unwrap());
    let (_, out, _) = mvk("catalog --show q4");
    assert_eq!(out, mvk::catalog::TABLE_FILES[0].1);
}
