//! Replays `golden/commands.txt` in process and compares with the stored
//! outputs; `scripts/golden.sh` does the same against the release binary.

use mvk::cli::run_captured;
use std::path::Path;

#[test]
fn golden_outputs() {
    let root = Path::new(env!("CARGO_MANIFEST_DIR"));
    std::env::set_current_dir(root).unwrap();
    let commands = std::fs::read_to_string(root.join("golden/commands.txt")).unwrap();
    let mut checked = 0;
    for line in commands.lines().filter(|l| !l.starts_with('#') && !l.trim().is_empty()) {
        let (name, args) = line.split_once('|').unwrap();
        let name = name.trim();
        let (code, out, _) = run_captured(std::iter::once("mvk").chain(args.split_whitespace()));
        let expected = std::fs::read_to_string(root.join(format!("golden/{name}.txt"))).unwrap();
        assert_eq!(format!("{out}exit={code}\n"), expected, "{name}");
        checked += 1;
    }
    assert!(checked >= 12);
}
