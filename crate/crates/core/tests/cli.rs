use qdiam::cli::{run, EXIT_INPUT, EXIT_MISMATCH, EXIT_OK, EXIT_RESOURCE};

fn qdiam(args: &[&str]) -> (i32, String, String) {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run(std::iter::once("qdiam").chain(args.iter().copied()), &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

#[test]
fn bound_values_and_ranges() {
    let (code, out, _) = qdiam(&["bound", "kleitman", "--q", "2", "--n", "4", "--d", "3"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.starts_with("23\n"));
    let (code, _, err) = qdiam(&["bound", "kleitman", "--q", "2", "--n", "3", "--d", "3"]);
    assert_eq!(code, EXIT_INPUT, "{err}");
    let (code, _, _) = qdiam(&["bound", "ekr", "--q", "6", "--n", "8", "--k", "3", "--s", "1"]);
    assert_eq!(code, EXIT_INPUT);
    let (code, _, _) = qdiam(&["bound", "nosuch"]);
    assert_eq!(code, EXIT_INPUT);
}

#[test]
fn construct_then_check() {
    let dir = tempfile::tempdir().unwrap();
    let k = dir.path().join("k.fam");
    let (code, _, err) = qdiam(&[
        "construct", "K", "--q", "2", "--n", "5", "--t", "2",
        "--x", "2:5:1:10000", "--y", "2:5:3:01000,00100,00010",
        "-o", k.to_str().unwrap(),
    ]);
    assert_eq!(code, EXIT_OK, "{err}");

    let (code, out, _) = qdiam(&["check", k.to_str().unwrap(), "--class", "B-odd", "--t", "2"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("B-odd (t = 2): admissible"), "{out}");

    let (code, out, _) = qdiam(&["--format", "json", "check", k.to_str().unwrap()]);
    assert_eq!(code, EXIT_OK);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["size"], qdiam::qcount::odd_stability_bound(5, 2, 2).unwrap().to_string());

    let ball = dir.path().join("ball.fam");
    let (code, _, _) = qdiam(&["construct", "ball", "--q", "2", "--n", "5", "--r", "1", "--center", "2:5:1:10000", "-o", ball.to_str().unwrap()]);
    assert_eq!(code, EXIT_OK);
    let (code, out, _) = qdiam(&["check", ball.to_str().unwrap(), "--class", "B-even", "--t", "1"]);
    assert_eq!(code, EXIT_MISMATCH);
    assert!(out.contains("inadmissible"), "{out}");
}

#[test]
fn corrupted_family_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.fam");
    std::fs::write(&path, "family 2 3 2\n2:3:1:100\n2:3:1:1x0\n").unwrap();
    let (code, _, err) = qdiam(&["check", path.to_str().unwrap()]);
    assert_eq!(code, EXIT_INPUT);
    assert!(err.contains("line 3"), "{err}");
    let (code, _, _) = qdiam(&["check", dir.path().join("missing.fam").to_str().unwrap()]);
    assert_eq!(code, EXIT_INPUT);
}

#[test]
fn oracle_exit_codes() {
    let (code, out, _) = qdiam(&["--format", "json", "oracle", "max", "--q", "2", "--n", "4", "--d", "2", "--all"]);
    assert_eq!(code, EXIT_OK);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["witness_count"], 2);
    assert_eq!(v["characterization_match"], true);

    let (code, _, _) = qdiam(&["oracle", "max", "--q", "2", "--n", "9", "--d", "4"]);
    assert_eq!(code, EXIT_RESOURCE);
    let (code, _, _) = qdiam(&["oracle", "admissible", "--q", "2", "--n", "4", "--d", "3", "--class", "A-odd"]);
    assert_eq!(code, EXIT_OK);
}

#[test]
fn enumerate_and_sweep() {
    let (code, out, _) = qdiam(&["enumerate", "--q", "3", "--n", "4", "--k", "2", "--count"]);
    assert_eq!((code, out.trim()), (EXIT_OK, "130"));
    let (code, out, _) = qdiam(&["enumerate", "--q", "2", "--n", "3", "--k", "1"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out.lines().filter(|l| l.starts_with("2:3:1:")).count(), 7);

    let (code, out, _) = qdiam(&["--format", "csv", "sweep", "typeb-below-typea", "--qmax", "2", "--t", "2"]);
    assert_eq!(code, EXIT_MISMATCH);
    assert!(out.starts_with("q,n,t,lhs,rhs,margin,pass\n"));
    let (code, _, _) = qdiam(&["sweep", "lemma26", "--qmax", "3", "--kmax", "8", "--nmax", "20"]);
    assert_eq!(code, EXIT_OK);
}

#[test]
fn selftest_passes() {
    let (code, out, _) = qdiam(&["selftest", "--seed", "7"]);
    assert_eq!(code, EXIT_OK, "{out}");
}
