use genuscenter::catalog;
use genuscenter::exactnum::{Cyclotomic, ExactMatrix};
use genuscenter::fusion::{
    check_hexagon, check_pentagon, check_spherical_ribbon, quantum_dims, s_matrix_and_transparency, twists,
    validate_raw, validate_structure, Calculus, CategorySpec, RawSpec,
};

fn fib() -> CategorySpec {
    catalog::builtin("fibonacci").unwrap()
}

fn phi() -> Cyclotomic {
    Cyclotomic::from_terms(5, &[(0, 1, 1), (1, 1, 1), (4, 1, 1)]).unwrap()
}

fn sqrt2() -> Cyclotomic {
    Cyclotomic::from_terms(8, &[(1, 1, 1), (7, 1, 1)]).unwrap()
}

fn with_raw(spec: &CategorySpec, edit: impl FnOnce(&mut RawSpec)) -> CategorySpec {
    let mut raw = spec.raw().clone();
    edit(&mut raw);
    CategorySpec::from_raw(raw).unwrap()
}

#[test]
fn structure_examples() {
    assert!(validate_structure(&fib()).passed());
    assert!(validate_structure(&catalog::builtin("vec_z3_q").unwrap()).passed());
    let bad = with_raw(&fib(), |r| r.dual[1] = 0);
    let rep = validate_structure(&bad);
    assert!(!rep.passed());
    assert!(rep.violations.iter().any(|v| v.contains("involution") || v.contains("N_{")));
}

#[test]
fn unknown_label_is_a_report_entry() {
    let mut raw = fib().raw().clone();
    raw.fusion.push((0, 7, 1, 1));
    let rep = validate_raw(&raw);
    assert!(!rep.passed());
    assert!(rep.violations[0].contains("label"));
}

#[test]
fn pentagon_examples() {
    assert!(check_pentagon(&fib()).unwrap().passed());
    assert!(check_pentagon(&catalog::builtin("vec_z2").unwrap()).unwrap().passed());
    let neg = with_raw(&fib(), |r| {
        let e = r.f.iter_mut().find(|e| e.d == 1 && e.e == 1 && e.f == 1).unwrap();
        e.value = -&e.value;
    });
    assert!(!check_pentagon(&neg).unwrap().passed());
}

#[test]
fn missing_f_entry_names_the_entry() {
    let mut raw = fib().raw().clone();
    raw.f.retain(|e| !(e.d == 1 && e.e == 0 && e.f == 1));
    let err = CategorySpec::from_raw(raw).unwrap_err();
    assert!(err.to_string().contains("F^{tau tau tau}_tau[1, tau]"), "{err}");
}

#[test]
fn hexagon_examples() {
    assert!(check_hexagon(&fib()).unwrap().passed());
    assert!(check_hexagon(&catalog::builtin("rep_z2").unwrap()).unwrap().passed());
    let set_rtt = |v: Cyclotomic| {
        with_raw(&fib(), |r| {
            let e = r.r.as_mut().unwrap().iter_mut().find(|e| (e.a, e.b, e.c) == (1, 1, 1)).unwrap();
            e.value = v;
        })
    };
    assert!(!check_hexagon(&set_rtt(Cyclotomic::one())).unwrap().passed());
    // With R^{tt}_1 = z5^-2 the only consistent R^{tt}_t is -z5^4; the root z5 itself fails.
    assert!(!check_hexagon(&set_rtt(Cyclotomic::zeta(5, 1))).unwrap().passed());
}

#[test]
fn hexagon_requires_braiding() {
    let spec = with_raw(&fib(), |r| r.r = None);
    assert!(check_hexagon(&spec).is_err());
}

#[test]
fn quantum_dimension_examples() {
    let v = quantum_dims(&catalog::builtin("vec_z2").unwrap());
    assert_eq!(v.weights, vec![Cyclotomic::one(), Cyclotomic::one()]);
    assert_eq!(v.total, Cyclotomic::from_int(2));
    let f = quantum_dims(&fib());
    assert_eq!(f.weights[1], phi());
    assert_eq!(f.total, phi() + Cyclotomic::from_int(2));
    let i = quantum_dims(&catalog::builtin("ising").unwrap());
    assert_eq!(i.weights, vec![Cyclotomic::one(), sqrt2(), Cyclotomic::one()]);
    assert_eq!(i.total, Cyclotomic::from_int(4));
}

#[test]
fn twist_agrees_with_r_trace_formula() {
    for key in catalog::keys() {
        let spec = catalog::builtin(key).unwrap();
        let dims = quantum_dims(&spec).weights;
        let th = twists(&spec).unwrap();
        assert!(th[spec.unit()].is_one());
        for a in 0..spec.rank() {
            let mut acc = Cyclotomic::zero();
            for c in spec.fusion_channels(a, a) {
                acc += &(&dims[c] * &spec.r_block(a, a, c).unwrap().trace());
            }
            assert_eq!(th[a], &acc / &dims[a], "{key} label {a}");
        }
    }
}

#[test]
fn dims_are_loop_values_and_total_is_sum_of_squares() {
    for key in catalog::keys() {
        let spec = catalog::builtin(key).unwrap();
        let calc = Calculus::new(&spec);
        let om = quantum_dims(&spec);
        assert!(om.weights[spec.unit()].is_one());
        let mut total = Cyclotomic::zero();
        for a in 0..spec.rank() {
            // closed loop: ev'_a after coev_a
            let lp = calc.ev_right(a).after(&calc.coev(a)).unwrap().scalar(&spec);
            assert_eq!(lp, om.weights[a]);
            total += &(&lp * &lp);
        }
        assert_eq!(total, om.total);
    }
}

#[test]
fn spherical_examples() {
    assert!(check_spherical_ribbon(&fib()).unwrap().passed());
    let z3 = catalog::builtin("vec_z3_q").unwrap();
    assert!(check_spherical_ribbon(&z3).unwrap().passed());
    let w = Cyclotomic::zeta(3, 1);
    let bad = with_raw(&z3, |r| r.pivotal = vec![Cyclotomic::one(), Cyclotomic::one(), w.clone()]);
    let rep = check_spherical_ribbon(&bad).unwrap();
    assert!(!rep.passed());
    assert!(rep.violations.iter().any(|v| v.contains("dim")));
    // a pivotal character that is not spherical: dim(1) = w, dim(2) = w^2
    let nonsph = with_raw(&z3, |r| r.pivotal = vec![Cyclotomic::one(), w.clone(), &w * &w]);
    assert!(!check_spherical_ribbon(&nonsph).unwrap().passed());
    // Fibonacci has no nontrivial pivotal character
    let fneg = with_raw(&fib(), |r| r.pivotal[1] = Cyclotomic::from_int(-1));
    assert!(!check_spherical_ribbon(&fneg).unwrap().passed());
}

#[test]
fn semion_pivotal_sign_is_natural_either_way() {
    let sem = catalog::builtin("semion").unwrap();
    let flipped = with_raw(&sem, |r| r.pivotal[1] = Cyclotomic::one());
    assert!(check_spherical_ribbon(&flipped).unwrap().passed());
    assert_eq!(quantum_dims(&flipped).weights[1], Cyclotomic::from_int(-1));
}

#[test]
fn s_matrix_examples() {
    let z2 = s_matrix_and_transparency(&catalog::builtin("rep_z2").unwrap()).unwrap();
    assert_eq!(z2.transparent, vec![0, 1]);
    assert!(!z2.modular);
    let f = s_matrix_and_transparency(&fib()).unwrap();
    assert_eq!(f.transparent, vec![0]);
    assert!(f.modular);
    let i = s_matrix_and_transparency(&catalog::builtin("ising").unwrap()).unwrap();
    assert!(i.modular);
    assert_eq!(i.s.rank(), 3);
    let expect = ExactMatrix::from_rows(vec![
        vec![Cyclotomic::one(), phi()],
        vec![phi(), Cyclotomic::from_int(-1)],
    ])
    .unwrap();
    assert_eq!(f.s, expect);
}
