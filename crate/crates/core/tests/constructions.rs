mod common;

use common::{c, named_etfs, STEINER_SIGNS};
use ripcert::certification::verify_etf;
use ripcert::constructions::{
    all_pairs_steiner, hadamard, incidence_matrix, paley_etf, realify, steiner_etf, steiner_triple,
    HadamardKind, SteinerSystem,
};
use ripcert::linalg::operator_norm;
use ripcert::DenseMatrix;

fn pair_coverage_holds(s: &SteinerSystem) -> bool {
    let v = s.v();
    let mut count = vec![0usize; v * v];
    for b in s.blocks() {
        for (x, &i) in b.iter().enumerate() {
            for &j in &b[x + 1..] {
                count[i * v + j] += 1;
            }
        }
    }
    (0..v).all(|i| ((i + 1)..v).all(|j| count[i * v + j] == 1))
}

#[test]
fn generated_systems_cover_every_pair_once() {
    for v in 2..12 {
        assert!(pair_coverage_holds(&all_pairs_steiner(v).unwrap()));
    }
    for v in [7, 9, 13, 15, 19, 21, 25, 27, 31, 33] {
        let s = steiner_triple(v).unwrap();
        assert!(pair_coverage_holds(&s), "v={v}");
        assert_eq!(s.blocks().len(), v * (v - 1) / 6);
    }
}

#[test]
fn incidence_columns_have_replication_many_ones() {
    for s in [
        all_pairs_steiner(6).unwrap(),
        steiner_triple(13).unwrap(),
        steiner_triple(15).unwrap(),
    ] {
        let a = incidence_matrix(&s);
        let r = (s.v() - 1) / (s.k() - 1);
        for j in 0..s.v() {
            let ones = (0..a.rows()).filter(|&i| a[(i, j)] == c(1.0, 0.0)).count();
            assert_eq!(ones, r);
        }
    }
}

#[test]
fn every_named_frame_is_an_etf() {
    for f in named_etfs() {
        let ax = verify_etf(&f, 1e-12);
        assert!(ax.all(), "{}: {ax:?}", f.label());
    }
    // also outside the named list
    for p in [29, 37] {
        assert!(verify_etf(&paley_etf(p, true).unwrap(), 1e-12).all());
    }
}

#[test]
fn printed_steiner_frame_from_printed_hadamard() {
    let s = SteinerSystem::new(
        4,
        2,
        vec![
            vec![0, 1],
            vec![0, 2],
            vec![0, 3],
            vec![1, 2],
            vec![1, 3],
            vec![2, 3],
        ],
    )
    .unwrap();
    let h = DenseMatrix::from_rows(&[
        vec![1.0, 1.0, 1.0, 1.0],
        vec![1.0, -1.0, 1.0, -1.0],
        vec![1.0, 1.0, -1.0, -1.0],
        vec![1.0, -1.0, -1.0, 1.0],
    ])
    .unwrap();
    assert_eq!(h, hadamard(4, HadamardKind::Sylvester).unwrap());
    let f = steiner_etf(&s, &h).unwrap();
    let third = 1.0 / 3f64.sqrt();
    for (i, row) in STEINER_SIGNS.iter().enumerate() {
        for (j, ch) in row.chars().enumerate() {
            let want = match ch {
                '+' => third,
                '-' => -third,
                _ => 0.0,
            };
            assert!(
                (f.matrix()[(i, j)] - c(want, 0.0)).norm() <= 1e-14,
                "({i}, {j})"
            );
        }
    }
}

#[test]
fn printed_paley_frame() {
    let f = paley_etf(5, true).unwrap();
    let e = |k: f64| {
        num_complex::Complex64::from_polar((0.4f64).sqrt(), -2.0 * std::f64::consts::PI * k / 5.0)
    };
    let r = c(0.2f64.sqrt(), 0.0);
    let printed = [
        [r, r, r, r, r, c(1.0, 0.0)],
        [e(0.0), e(1.0), e(2.0), e(3.0), e(4.0), c(0.0, 0.0)],
        [e(0.0), e(4.0), e(3.0), e(2.0), e(1.0), c(0.0, 0.0)],
    ];
    for (i, row) in printed.iter().enumerate() {
        for (j, want) in row.iter().enumerate() {
            assert!((f.matrix()[(i, j)] - want).norm() <= 1e-14, "({i}, {j})");
        }
    }
}

#[test]
fn realify_preserves_the_gram() {
    for f in named_etfs() {
        if f.gram().max_imag() > 1e-9 {
            continue;
        }
        let r = realify(&f, 1e-9).unwrap();
        assert!(r.is_real());
        assert_eq!(r.m(), f.m(), "{}", f.label());
        let diff = operator_norm(&f.gram().sub(r.gram()).unwrap());
        assert!(diff <= 1e-10, "{}: {diff}", f.label());
    }
    assert!(realify(&paley_etf(7, false).unwrap(), 1e-9).is_err());
}

#[test]
fn hadamard_orthogonality() {
    for (n, kind) in [
        (8, HadamardKind::Sylvester),
        (5, HadamardKind::Dft),
        (7, HadamardKind::Dft),
    ] {
        let h = hadamard(n, kind).unwrap();
        let hh = h.adjoint().matmul(&h).unwrap();
        let target = DenseMatrix::identity(n).scale(n as f64);
        assert!(hh.sub(&target).unwrap().max_abs() < 1e-12);
        assert!(h.entries().iter().all(|z| (z.norm() - 1.0).abs() < 1e-14));
    }
}
