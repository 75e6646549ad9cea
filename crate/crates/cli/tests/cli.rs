use std::collections::HashSet;
use std::fs;
use std::io::Write;
use std::process::{Command, Output, Stdio};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hangulphabet"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn run_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_hangulphabet"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(input.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn encode_names_and_codes() {
    let o = run(&["encode", "pb"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "PLO.BLB.VLS PLO.BLB.VCD\n");

    let o = run(&["encode", "m", "--format", "codes"]);
    assert_eq!(stdout(&o), "U+E001\n");

    let o = run(&["encode", "pʰ", "--format", "names"]);
    assert_eq!(stdout(&o), "PLO.BLB.VLS+aspirated\n");
}

#[test]
fn strict_mode_rejects_unknown_symbols() {
    let o = run(&["encode", "p!", "--strict"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stdout(&o).is_empty());
    assert!(stderr(&o).contains("U+0021"));
}

#[test]
fn lenient_mode_warns_on_stderr_only() {
    let o = run(&["encode", "p!", "--format", "codes"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "U+E01A U+0021\n");
    assert!(stderr(&o).contains("warning"));
    let o = run(&["encode", "p a"]);
    assert!(stderr(&o).is_empty(), "spaces are not unknown symbols");
}

#[test]
fn decode_examples() {
    assert_eq!(stdout(&run(&["decode", "U+E01A"])), "p\n");
    let o = run(&["decode", "U+E090"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "[TRL.PAL.VLS]\n");
    assert!(stderr(&o).contains("TRL.PAL.VLS"));
    let o = run(&["decode", "U+E3FF"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn encode_decode_round_trip_through_stdin() {
    let text = "t͡sa pʰi ũ ˈɹɒt";
    let encoded = run_stdin(&["encode", "--format", "text"], text);
    assert!(encoded.status.success());
    let decoded = run_stdin(&["decode"], &stdout(&encoded));
    assert_eq!(stdout(&decoded), format!("{text}\n"));

    let codes = run(&["encode", text, "--format", "codes"]);
    let back = run(&["decode", stdout(&codes).trim()]);
    assert_eq!(stdout(&back), format!("{text}\n"));
}

#[test]
fn inspect_reports_features_and_status() {
    let o = run(&["inspect", "ɳ"]);
    let out = stdout(&o);
    for needle in ["Nasal", "Retroflex", "Voiced", "Official", "NAS.RET.VCD"] {
        assert!(out.contains(needle), "{needle} in {out}");
    }
    assert!(stdout(&run(&["inspect", "TRL.VEL.VCD"])).contains("Impossible"));
    assert!(stdout(&run(&["inspect", "TRL.PAL.VCD"])).contains("Unofficial"));
    assert_eq!(run(&["inspect", "NOPE"]).status.code(), Some(2));
}

#[test]
fn consonant_chart_has_every_cell() {
    let o = run(&["chart", "consonants"]);
    assert!(o.status.success());
    let svg = stdout(&o);
    assert!(svg.starts_with("<?xml"));
    assert_eq!(svg.matches("<rect class=\"cell").count(), 117);
}

#[test]
fn vowel_chart_has_one_marker_per_vowel() {
    let svg = stdout(&run(&["chart", "vowels"]));
    assert_eq!(svg.matches("class=\"vowel-anchor\"").count(), 28);
    assert_eq!(
        run(&["chart", "vowels", "--tilt", "0"]).status.code(),
        Some(3)
    );
    assert!(run(&["chart", "vowels", "--tilt", "-5"]).status.success());
}

#[test]
fn chart_written_to_output_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("c.svg");
    let o = run(&["chart", "consonants", "-o", path.to_str().unwrap()]);
    assert!(o.status.success());
    assert!(stdout(&o).is_empty());
    assert!(fs::read_to_string(&path).unwrap().contains("</svg>"));
}

#[test]
fn geometry_missing_a_radical_is_a_data_error() {
    let dir = tempfile::tempdir().unwrap();
    let builtin = hangulphabet::Geometry::builtin();
    let mut broken = builtin.clone();
    broken.radicals.remove("place:VEL");
    let path = dir.path().join("geometry.json");
    fs::write(&path, serde_json::to_string(&broken).unwrap()).unwrap();
    let o = run(&["chart", "consonants", "--geometry", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stderr(&o).contains("place:VEL"));
}

#[test]
fn malformed_data_dir_is_a_data_error() {
    let dir = tempfile::tempdir().unwrap();
    let o = run(&["encode", "p", "--data-dir", dir.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(3));

    let src = concat!(env!("CARGO_MANIFEST_DIR"), "/../core/data");
    for f in [
        "consonants.tsv",
        "vowels.tsv",
        "impossible.tsv",
        "diacritics.tsv",
    ] {
        fs::copy(format!("{src}/{f}"), dir.path().join(f)).unwrap();
    }
    assert!(
        run(&["encode", "p", "--data-dir", dir.path().to_str().unwrap()])
            .status
            .success()
    );
    let consonants = dir.path().join("consonants.tsv");
    let mut text = fs::read_to_string(&consonants).unwrap();
    text.push_str("0071\tq\tPlosive\tNowhere\tVoiceless\n");
    fs::write(&consonants, text).unwrap();
    let o = run(&["encode", "p", "--data-dir", dir.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stderr(&o).contains("consonants.tsv"));
}

#[test]
fn fontmap_lists_every_symbol_once() {
    let out = stdout(&run(&["fontmap"]));
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 65 + 28);
    assert!(lines.contains(&"0070\tE01A\tPLO.BLB.VLS"));
    let puas: HashSet<&str> = lines
        .iter()
        .map(|l| l.split('\t').nth(1).unwrap())
        .collect();
    assert_eq!(puas.len(), lines.len());
}
