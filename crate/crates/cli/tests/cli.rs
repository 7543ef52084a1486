use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_matroid-tutte")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn foundation_of_u24_is_recognized() {
    let o = run(&["foundation", "U2,4"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let recognized = out.split("[recognized]\n").nth(1).unwrap().lines().next().unwrap();
    assert_eq!(recognized, "U");
}

#[test]
fn homology_of_u23_level_two() {
    let o = run(&["homology", "--sigma", "2", "U2,3", "--cut", "trivial"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.lines().any(|l| l == "H0 = Z"), "{out}");
    assert!(out.lines().any(|l| l == "H1 = 0"), "{out}");
}

#[test]
fn level_one_complex_of_u23_is_a_circle() {
    let out = stdout(&run(&["homology", "--sigma", "1", "U2,3"]));
    assert!(out.lines().any(|l| l == "H1 = Z"), "{out}");
}

#[test]
fn counting_u24_over_f5() {
    let o = run(&["count-reps", "U2,4", "--field", "5"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert_eq!(out.lines().next(), Some("3"));
    assert!(out.contains("brute force: 3"));

    let j: serde_json::Value = serde_json::from_slice(&run(&["count-reps", "U2,4", "--field", "5", "--json"]).stdout).unwrap();
    assert_eq!(j["hom"], 3);
    assert_eq!(j["brute_force"], 3);
}

#[test]
fn counting_into_an_infinite_target_is_a_domain_error() {
    let o = run(&["count-reps", "U2,4", "--target", "U"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).starts_with("error[domain]: "));
}

#[test]
fn usage_errors_exit_with_two() {
    for args in [
        &["frobnicate", "U2,4"][..],
        &["homology", "U2,4", "--sigma", "7"],
        &["count-reps", "U2,4"],
        &["tutte-path", "U2,4", "--from", "x", "--to", "3"],
    ] {
        let o = run(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(stderr(&o).starts_with("error[usage]: "), "{args:?}: {}", stderr(&o));
        assert_eq!(stderr(&o).lines().count(), 1);
    }
}

#[test]
fn bad_inputs_exit_with_one() {
    let o = run(&["flats", "no-such-matroid"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).starts_with("error[io]: "));

    let o = run(&["tutte-graph", "U2,4", "--cut", "principal:0,1"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).starts_with("error[domain]: "));

    let o = run(&["flats", "--file", "U2,4"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).starts_with("error[io]: "));
}

#[test]
fn help_and_version_succeed() {
    assert_eq!(run(&["--help"]).status.code(), Some(0));
    assert_eq!(run(&["--version"]).status.code(), Some(0));
}

#[test]
fn files_and_cut_files_are_read() {
    let dir = std::env::temp_dir().join(format!("matroid-tutte-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let m = dir.join("u24.txt");
    std::fs::write(&m, "4 2\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n").unwrap();
    let cut = dir.join("cut.txt");
    std::fs::write(&cut, "# the point 0 and everything above it\n0\n").unwrap();
    let m = m.to_str().unwrap();
    let cut = cut.to_str().unwrap();

    assert_eq!(stdout(&run(&["count-reps", m, "--field", "7"])).lines().next(), Some("5"));
    let a = stdout(&run(&["tutte-graph", m, "--cut", cut]));
    let b = stdout(&run(&["tutte-graph", "U2,4", "--cut", "principal:{0}"]));
    assert_eq!(a, b);
    let ext = stdout(&run(&["extend", m, "--cut", "trivial"]));
    assert!(ext.starts_with("5 2\n"), "{ext}");
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn pasture_morphisms() {
    assert_eq!(stdout(&run(&["pasture-hom", "U", "--target", "F5"])), "3\n");
    assert_eq!(stdout(&run(&["pasture-hom", "H", "--target", "F3"])), "1\n");
    assert_eq!(stdout(&run(&["pasture-hom", "F3", "--target", "F2"])), "0\n");
}

#[test]
fn every_verb_runs() {
    for args in [
        &["flats", "MK4"][..],
        &["tutte-graph", "F7", "--json"],
        &["tutte-path", "U2,4", "--from", "0", "--to", "3"],
        &["classify-path", "U2,3", "--path", "0;1;2;0"],
        &["extend", "U2,3", "--cut", "principal:0"],
        &["sigma", "U2,3", "--sigma", "1"],
        &["search-l3", "--atoms", "3"],
        &["foundation", "C5", "--paranoid"],
        &["cross-ratios", "U2,5"],
        &["check-relations", "MK4"],
        &["classify", "F7*", "--json"],
    ] {
        let o = run(args);
        assert_eq!(o.status.code(), Some(0), "{args:?}: {}", stderr(&o));
        assert!(!o.stdout.is_empty(), "{args:?}");
    }
}

#[test]
fn output_is_deterministic() {
    for args in [&["foundation", "U3,5", "--json"][..], &["sigma", "MK4", "--sigma", "2"], &["cross-ratios", "C5"]] {
        let a = run(args);
        let b = run(args);
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}
