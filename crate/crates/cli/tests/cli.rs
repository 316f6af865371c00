mod common;

use std::f64::consts::PI;
use std::fs;

use common::*;
use num_complex::Complex64;
use tempfile::tempdir;

#[test]
fn steiner_matches_printed_matrix() {
    let dir = tempdir().unwrap();
    let o = ripcert(
        dir.path(),
        &[
            "construct",
            "steiner",
            "--v",
            "4",
            "--k",
            "2",
            "--hadamard",
            "sylvester",
            "-o",
            "s.mat",
        ],
    );
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let m = read_matrix_file(&dir.path().join("s.mat"));
    assert_eq!((m.rows(), m.cols()), (6, 16));
    let c = 1.0 / 3f64.sqrt();
    for (i, row) in STEINER_SIGNS.iter().enumerate() {
        for (j, ch) in row.chars().enumerate() {
            let want = match ch {
                '+' => c,
                '-' => -c,
                _ => 0.0,
            };
            assert!(
                (m[(i, j)] - Complex64::new(want, 0.0)).norm() <= 1e-14,
                "({i}, {j})"
            );
        }
    }
    let out = stdout(&o);
    assert!(out.contains("M: 6") && out.contains("N: 16"));
    assert!(out.contains("unit_norm=true tight=true equiangular=true"));
}

#[test]
fn paley_matches_printed_matrix() {
    let dir = tempdir().unwrap();
    let o = ripcert(
        dir.path(),
        &["construct", "paley", "--p", "5", "-o", "p5.mat"],
    );
    assert_eq!(code(&o), 0);
    let m = read_matrix_file(&dir.path().join("p5.mat"));
    assert_eq!((m.rows(), m.cols()), (3, 6));
    let e = |k: f64| Complex64::from_polar((2.0f64 / 5.0).sqrt(), -2.0 * PI * k / 5.0);
    let r = Complex64::new((1.0f64 / 5.0).sqrt(), 0.0);
    let (one, zero) = (Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0));
    let printed = [
        [r, r, r, r, r, one],
        [e(0.0), e(1.0), e(2.0), e(3.0), e(4.0), zero],
        [e(0.0), e(4.0), e(3.0), e(2.0), e(1.0), zero],
    ];
    for (i, row) in printed.iter().enumerate() {
        for (j, want) in row.iter().enumerate() {
            assert!((m[(i, j)] - want).norm() <= 1e-12, "({i}, {j})");
        }
    }
}

#[test]
fn random_construction_is_reproducible() {
    let dir = tempdir().unwrap();
    let args = [
        "construct",
        "gaussian",
        "--m",
        "8",
        "--n",
        "12",
        "--seed",
        "7",
    ];
    let a = ripcert(dir.path(), &args);
    let b = ripcert(dir.path(), &args);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
    for name in ["g1.mat", "g2.mat"] {
        let mut with_out = args.to_vec();
        with_out.extend(["-o", name]);
        assert_eq!(code(&ripcert(dir.path(), &with_out)), 0);
    }
    let (g1, g2) = (
        fs::read(dir.path().join("g1.mat")).unwrap(),
        fs::read(dir.path().join("g2.mat")).unwrap(),
    );
    assert_eq!(g1, g2);
    assert_eq!(g1, a.stdout);
    let other = ripcert(
        dir.path(),
        &[
            "construct",
            "gaussian",
            "--m",
            "8",
            "--n",
            "12",
            "--seed",
            "8",
        ],
    );
    assert_ne!(other.stdout, a.stdout);
}

#[test]
fn steiner_block_files_round_trip() {
    let dir = tempdir().unwrap();
    let p = dir.path();
    let o = ripcert(
        p,
        &[
            "construct",
            "steiner",
            "--v",
            "7",
            "--k",
            "3",
            "--blocks-out",
            "fano.txt",
            "-o",
            "a.mat",
        ],
    );
    assert_eq!(code(&o), 0);
    assert_eq!(
        code(&ripcert(
            p,
            &[
                "construct",
                "steiner",
                "--blocks",
                "fano.txt",
                "-o",
                "b.mat"
            ]
        )),
        0
    );
    assert_eq!(
        fs::read(p.join("a.mat")).unwrap(),
        fs::read(p.join("b.mat")).unwrap()
    );
    fs::write(p.join("bad.txt"), "ripcert-steiner 1\n4 2\n0 1\n0 2\n").unwrap();
    assert_eq!(
        code(&ripcert(
            p,
            &["construct", "steiner", "--blocks", "bad.txt"]
        )),
        4
    );
}

#[test]
fn construct_rejects_bad_parameters() {
    let dir = tempdir().unwrap();
    let p = dir.path();
    // 9 is not prime; 7 is 3 mod 4
    assert_eq!(code(&ripcert(p, &["construct", "paley", "--p", "9"])), 4);
    assert_eq!(code(&ripcert(p, &["construct", "paley", "--p", "7"])), 4);
    assert_eq!(
        code(&ripcert(
            p,
            &["construct", "paley", "--p", "7", "--any-prime"]
        )),
        0
    );
    assert_eq!(
        code(&ripcert(
            p,
            &["construct", "steiner", "--v", "8", "--k", "3"]
        )),
        4
    );
    assert_eq!(
        code(&ripcert(
            p,
            &[
                "construct",
                "steiner",
                "--v",
                "4",
                "--k",
                "2",
                "--hadamard",
                "nope"
            ]
        )),
        4
    );
    assert_eq!(code(&ripcert(p, &["construct", "paley"])), 1);
    let o = ripcert(
        p,
        &["construct", "paley", "--p", "5", "-o", "missing/dir/p.mat"],
    );
    assert_eq!(code(&o), 1);
    assert!(String::from_utf8_lossy(&o.stderr).contains("missing/dir/p.mat"));
}

#[test]
fn certify_paley5_gershgorin_is_tight() {
    let dir = tempdir().unwrap();
    let p = dir.path();
    ripcert(p, &["construct", "paley", "--p", "5", "-o", "p5.mat"]);
    let o = ripcert(
        p,
        &[
            "certify",
            "p5.mat",
            "--exact-ric",
            "3",
            "--gershgorin",
            "-o",
            "r.txt",
        ],
    );
    assert_eq!(code(&o), 0);
    let text = fs::read_to_string(p.join("r.txt")).unwrap();
    let exact: f64 = report_value(&text, "K=3", "ric_exact")
        .unwrap()
        .parse()
        .unwrap();
    let gersh: f64 = report_value(&text, "K=3", "gershgorin")
        .unwrap()
        .parse()
        .unwrap();
    assert!((exact - 2.0 / 5f64.sqrt()).abs() < 1e-12);
    assert!((gersh - exact).abs() < 1e-12);
    assert_eq!(
        report_value(&text, "K=3", "ric_exact.evaluated").as_deref(),
        Some("20")
    );
    assert_eq!(
        report_value(&text, "invariants", "status").as_deref(),
        Some("ok")
    );
    assert!(report_value(&text, "inputs", "matrix.sha256").is_some_and(|d| d.len() == 64));
}

#[test]
fn certify_steiner_spark() {
    let dir = tempdir().unwrap();
    let p = dir.path();
    ripcert(
        p,
        &[
            "construct",
            "steiner",
            "--v",
            "4",
            "--k",
            "2",
            "-o",
            "s.mat",
        ],
    );
    let o = ripcert(
        p,
        &[
            "certify",
            "s.mat",
            "--spark",
            "4",
            "--exact-ric",
            "4",
            "-o",
            "r.txt",
        ],
    );
    assert_eq!(code(&o), 0);
    let text = fs::read_to_string(p.join("r.txt")).unwrap();
    assert_eq!(report_value(&text, "spark", "spark").as_deref(), Some("4"));
    assert_eq!(
        report_value(&text, "spark", "witness").as_deref(),
        Some("[0, 1, 2, 3]")
    );
    let d4: f64 = report_value(&text, "K=4", "ric_exact")
        .unwrap()
        .parse()
        .unwrap();
    assert!((d4 - 1.0).abs() < 1e-12);
}

#[test]
fn certify_power_is_monotone_in_q() {
    let dir = tempdir().unwrap();
    let p = dir.path();
    ripcert(
        p,
        &[
            "construct",
            "bernoulli",
            "--m",
            "6",
            "--n",
            "10",
            "--seed",
            "3",
            "-o",
            "b.mat",
        ],
    );
    let o = ripcert(
        p,
        &[
            "certify",
            "b.mat",
            "--power",
            "3",
            "1,2,3,4",
            "--exact-ric",
            "3",
            "-o",
            "r.txt",
        ],
    );
    assert_eq!(code(&o), 0);
    let text = fs::read_to_string(p.join("r.txt")).unwrap();
    let vals: Vec<f64> = (1..=4)
        .map(|q| {
            report_value(&text, "K=3", &format!("ric_power.q={q}"))
                .unwrap()
                .parse()
                .unwrap()
        })
        .collect();
    assert!(vals.windows(2).all(|w| w[1] <= w[0] + 1e-12), "{vals:?}");
}

#[test]
fn certify_bounds_and_budget() {
    let dir = tempdir().unwrap();
    let p = dir.path();
    ripcert(
        p,
        &[
            "construct",
            "gaussian",
            "--m",
            "8",
            "--n",
            "12",
            "--seed",
            "2",
            "-o",
            "g.mat",
        ],
    );
    let o = ripcert(
        p,
        &[
            "certify",
            "g.mat",
            "--exact-ric",
            "2,4",
            "--roc",
            "2",
            "--fro",
            "2",
            "--gershgorin",
            "--bounds",
            "-o",
            "r.txt",
        ],
    );
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let text = fs::read_to_string(p.join("r.txt")).unwrap();
    assert!(report_value(&text, "K=2", "bound delta_2K <= 2 theta_K + delta_1").is_some());
    assert_eq!(
        report_value(&text, "constants", "appendix.c.quoted").as_deref(),
        Some("74.17")
    );
    assert!(report_value(&text, "notes", "note.0").is_some());

    let o = ripcert(
        p,
        &["certify", "g.mat", "--exact-ric", "6", "--budget", "100"],
    );
    assert_eq!(code(&o), 3);
    assert!(String::from_utf8_lossy(&o.stderr).contains("924"));
}

#[test]
fn graph_commands() {
    let dir = tempdir().unwrap();
    let p = dir.path();
    let o = ripcert(p, &["graph", "--paley-graph", "13", "--clique"]);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    assert_eq!(report_value(&text, "clique", "omega").as_deref(), Some("3"));
    assert_eq!(
        report_value(&text, "clique", "omega < sqrt_p").as_deref(),
        Some("true")
    );

    let o = ripcert(p, &["graph", "--paley-graph", "5", "--srg-check"]);
    assert_eq!(
        report_value(&stdout(&o), "srg", "check").as_deref(),
        Some("srg(5, 2, 0, 1)")
    );

    ripcert(p, &["construct", "paley", "--p", "13", "-o", "p13.mat"]);
    let o = ripcert(
        p,
        &["graph", "p13.mat", "--srg-check", "--graph-out", "g.txt"],
    );
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    assert_eq!(
        report_value(&text, "pipeline", "srg").as_deref(),
        Some("srg(13, 6, 2, 3)")
    );
    assert_eq!(
        report_value(&text, "pipeline", "matches").as_deref(),
        Some("true")
    );

    let o = ripcert(
        p,
        &[
            "graph",
            "--graph",
            "g.txt",
            "--srg-check",
            "--mixing",
            "20",
            "--seed",
            "5",
        ],
    );
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    assert_eq!(
        report_value(&text, "srg", "check").as_deref(),
        Some("srg(13, 6, 2, 3)")
    );
    assert_eq!(report_value(&text, "mixing", "held").as_deref(), Some("20"));
}

#[test]
fn graph_identity_and_trace() {
    let dir = tempdir().unwrap();
    let p = dir.path();
    ripcert(p, &["construct", "paley", "--p", "13", "-o", "p13.mat"]);
    let o = ripcert(
        p,
        &[
            "graph",
            "p13.mat",
            "--identity",
            "--trace-expansion",
            "0,3,7,11",
            "2",
            "--seidel",
        ],
    );
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let text = stdout(&o);
    for k in 2..=4 {
        assert_eq!(
            report_value(&text, "clique_identity", &format!("K={k}.holds")).as_deref(),
            Some("true")
        );
    }
    assert_eq!(
        report_value(&text, "trace_expansion", "q2.returning_walks").as_deref(),
        Some("36")
    );
    let row = report_value(&text, "seidel", "row.0").unwrap();
    assert_eq!(row.len(), 14);
    assert!(row.starts_with('0'));
}

#[test]
fn graph_rejects_complex_gram() {
    let dir = tempdir().unwrap();
    let p = dir.path();
    ripcert(
        p,
        &[
            "construct",
            "paley",
            "--p",
            "7",
            "--any-prime",
            "-o",
            "p7.mat",
        ],
    );
    let o = ripcert(p, &["graph", "p7.mat", "--srg-check"]);
    assert_eq!(code(&o), 4);
    assert!(String::from_utf8_lossy(&o.stderr).contains("not real"));
    // a non-equiangular frame
    ripcert(
        p,
        &[
            "construct",
            "gaussian",
            "--m",
            "3",
            "--n",
            "6",
            "--seed",
            "1",
            "-o",
            "g.mat",
        ],
    );
    assert_eq!(code(&ripcert(p, &["graph", "g.mat"])), 4);
    assert_eq!(
        code(&ripcert(p, &["graph", "--paley-graph", "13", "--identity"])),
        1
    );
}

#[test]
fn mc_commands() {
    let dir = tempdir().unwrap();
    let p = dir.path();
    let o = ripcert(
        p,
        &[
            "mc", "fro", "--m", "8,16,32", "--n", "24", "--k", "2", "--delta", "0.5", "--trials",
            "200", "--seed", "1", "-o", "fro.txt",
        ],
    );
    assert_eq!(code(&o), 0);
    let text = fs::read_to_string(p.join("fro.txt")).unwrap();
    let fail: Vec<f64> = [8, 16, 32]
        .iter()
        .map(|m| {
            report_value(&text, &format!("M={m}"), "failure_frequency")
                .unwrap()
                .parse()
                .unwrap()
        })
        .collect();
    assert!(fail.windows(2).all(|w| w[1] <= w[0]), "{fail:?}");
    // unordered disjoint pairs with sizes in 1..=2 out of 24: 276 + 24 * 253 + 276 * 231 / 2
    assert_eq!(
        report_value(&text, "M=8", "evaluated_per_trial").as_deref(),
        Some("38226")
    );

    let o = ripcert(
        p,
        &[
            "mc", "tail", "--m", "64", "--k1", "2", "--k2", "2", "--trials", "20000", "--seed", "1",
        ],
    );
    assert_eq!(code(&o), 0);
    assert_eq!(
        report_value(&stdout(&o), "M=64", "all_dominated").as_deref(),
        Some("true")
    );

    // two matrices, one trial each: success at M=70 and failure at M=90
    let o = ripcert(
        p,
        &[
            "mc", "power", "--m", "70,90", "--n", "10", "--k", "2", "--q", "1", "--delta", "0.5",
            "--trials", "1", "--seed", "34",
        ],
    );
    assert_eq!(code(&o), 2);
    assert_eq!(
        report_value(&stdout(&o), "sweep", "monotone").as_deref(),
        Some("false")
    );

    let o = ripcert(
        p,
        &[
            "mc", "fro", "--m", "8", "--n", "10", "--k", "1", "--delta", "0.5", "--trials", "2",
            "--seed", "1",
        ],
    );
    assert_eq!(code(&o), 4);
    let o = ripcert(
        p,
        &[
            "mc", "power", "--m", "8", "--n", "30", "--k", "6", "--delta", "0.5", "--trials", "2",
            "--seed", "1", "--budget", "1000",
        ],
    );
    assert_eq!(code(&o), 3);
}

#[test]
fn report_bodies_do_not_depend_on_runs_or_workers() {
    let dir = tempdir().unwrap();
    let p = dir.path();
    ripcert(
        p,
        &[
            "construct",
            "gaussian",
            "--m",
            "8",
            "--n",
            "12",
            "--seed",
            "7",
            "-o",
            "g.mat",
        ],
    );
    let runs: [&[&str]; 3] = [
        &[
            "certify",
            "g.mat",
            "--exact-ric",
            "2,3,4",
            "--power",
            "3",
            "1,2",
            "--roc",
            "2",
            "--fro",
            "2",
            "--spark",
            "9",
            "--bounds",
        ],
        &[
            "mc", "power", "--m", "16,32", "--n", "12", "--k", "2", "--q", "2", "--delta", "0.8",
            "--trials", "30", "--seed", "4",
        ],
        &[
            "graph",
            "--paley-graph",
            "17",
            "--clique",
            "--mixing",
            "10",
            "--seed",
            "9",
        ],
    ];
    for (i, args) in runs.iter().enumerate() {
        let mut bodies = Vec::new();
        for (run, workers) in [1, 1, 4].into_iter().enumerate() {
            let name = format!("r{i}_{run}.txt");
            let mut a = args.to_vec();
            a.extend(["-o", &name]);
            let o = ripcert_with_workers(p, workers, &a);
            assert!(
                matches!(code(&o), 0 | 2),
                "{}",
                String::from_utf8_lossy(&o.stderr)
            );
            bodies.push(body_of(&p.join(&name)));
        }
        assert_eq!(bodies[0], bodies[1], "{args:?}");
        assert_eq!(bodies[0], bodies[2], "{args:?}");
        assert!(fs::read_to_string(p.join(format!("r{i}_2.txt")))
            .unwrap()
            .contains("workers: 4"));
    }
}
