use dispersive_lab::adjoint::{action1, adjoint_determining_residual, build_action_table, sq_bracket, BracketError};
use dispersive_lab::jet::JetPoly;
use dispersive_lab::linalg;
use dispersive_lab::model;
use dispersive_lab::symmetry::{char_bracket, char_structure_constants};
use dispersive_lab::waves::{self, integral_drift, kink_state, reduce_traveling};

#[test]
fn characteristic_brackets_are_antisymmetric_and_jacobi() {
    let sys = model::dlw();
    let ps = model::characteristics_printed();
    let c = char_structure_constants(&ps, &sys).unwrap().unwrap();
    let n = ps.len();
    let br = |x: &[JetPoly], y: &[JetPoly]| char_bracket(x, y, &sys).unwrap();
    for i in 0..n {
        for j in 0..n {
            let neg: Vec<_> = c[j][i].iter().map(|r| -r).collect();
            assert_eq!(c[i][j], neg);
        }
    }
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let a = br(&ps[i], &br(&ps[j], &ps[k]));
                let b = br(&ps[j], &br(&ps[k], &ps[i]));
                let d = br(&ps[k], &br(&ps[i], &ps[j]));
                let s: Vec<JetPoly> = (0..2).map(|r| &(&a[r] + &b[r]) + &d[r]).collect();
                assert!(sys.reduce_all(&s).unwrap().iter().all(JetPoly::is_zero), "({i},{j},{k})");
            }
        }
    }
}

#[test]
fn table_images_are_adjoint_symmetries() {
    let sys = model::dlw();
    let ps = model::characteristics_printed();
    let qs = model::adjoint_symmetries();
    for p in &ps {
        for q in &qs {
            let img = action1(p, q, &sys).unwrap();
            assert!(adjoint_determining_residual(&img, &sys).unwrap().iter().all(JetPoly::is_zero));
        }
    }
    let t = build_action_table(&ps, &qs, &sys).unwrap();
    for (i, row) in t.cells.iter().enumerate() {
        for (j, c) in row.iter().enumerate() {
            let back = linalg::combine(&qs, c, 2);
            assert_eq!(back, action1(&ps[j], &qs[i], &sys).unwrap());
        }
    }
}

#[test]
fn sq_bracket_is_antisymmetric_where_defined() {
    let sys = model::dlw();
    let ps = model::characteristics_printed();
    let qs = model::adjoint_symmetries();
    let mut defined = 0;
    for fix in 0..qs.len() {
        for a in 0..qs.len() {
            for b in a..qs.len() {
                let ab = sq_bracket(fix, &qs[a], &qs[b], &ps, &qs, &sys);
                let ba = sq_bracket(fix, &qs[b], &qs[a], &ps, &qs, &sys);
                match (ab, ba) {
                    (Ok(x), Ok(y)) => {
                        defined += 1;
                        let neg: Vec<_> = y.coords.iter().map(|r| -r).collect();
                        assert_eq!(x.coords, neg, "Q{}[Q{},Q{}]", fix + 1, a + 1, b + 1);
                    }
                    (Err(e), Err(f)) => assert_eq!(e, f),
                    (x, y) => panic!("one-sided: {x:?} {y:?}"),
                }
            }
        }
    }
    assert_eq!(defined, 10);
    assert!(matches!(
        sq_bracket(1, &qs[0], &qs[0], &ps, &qs, &sys),
        Err(BracketError::AmbiguousPreimage(2) | BracketError::NotInRange(2))
    ));
}

#[test]
fn first_integrals_hold_along_the_kink() {
    let sys = model::dlw();
    let ode = reduce_traveling(&sys, &waves::traveling::mu());
    let laws = model::laws_printed();
    let sources = [model::law_eq29_corrected(), laws[2].swapped("eq31s"), laws[3].clone(), laws[4].clone()];
    let exprs: Vec<JetPoly> = sources.iter().map(|l| waves::first_integral(l, &ode).unwrap().expr).collect();
    for mu in [0.5, 1.0, 2.0] {
        let drift = integral_drift(&ode, mu, kink_state(mu, -10.0), 1e-3, 20_000, &exprs).unwrap();
        assert!(drift.iter().all(|d| *d < 1e-8), "mu={mu}: {drift:?}");
    }
}
