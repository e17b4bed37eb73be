use supergrade::assembly::{
    assemble_mn, assemble_nn, build_model_la, coordinatize, matrix_sl_a, model_la_data, mutation_candidates,
    seeded_mutations, theorem310_check, CoordinateData,
};
use supergrade::coordalg::{grassmann, group_algebra, matrix_super, AssocSuperalgebra, Builtin};
use supergrade::roots::check_root_graded;
use supergrade::{Field, Rational};

fn builtins() -> Vec<AssocSuperalgebra<Rational>> {
    ["ground_field", "dual_numbers", "grassmann:2", "matrix_super:1,1", "group_algebra:2"]
        .iter()
        .map(|s| s.parse::<Builtin>().unwrap().build().unwrap())
        .collect()
}

#[test]
fn model_algebra_is_perfect_and_root_graded() {
    for (i, a) in builtins().into_iter().enumerate() {
        let shapes: &[(usize, usize)] = if i < 2 { &[(1, 0), (2, 1)] } else { &[(1, 0)] };
        for &(m, n) in shapes {
            let l = build_model_la(&a, m, n).unwrap();
            assert!(l.algebra.jacobi_holds());
            assert!(l.algebra.is_perfect());
            assert!(check_root_graded(&l.algebra, &l.embedding).unwrap().passes());
            assert!(theorem310_check(&model_la_data(&a, m, n).unwrap()).unwrap().all_hold());
        }
    }
}

#[test]
fn mn_requires_m_gt_n() {
    let a = grassmann::<Rational>(1).unwrap();
    assert!(assemble_mn(&CoordinateData::without_d(1, 1, a.clone()).unwrap()).is_err());
    let l = assemble_mn(&CoordinateData::without_d(1, 0, a).unwrap()).unwrap();
    assert!(l.algebra.jacobi_holds());
}

#[test]
fn jacobi_matches_conditions_under_mutation() {
    for a in builtins() {
        let cd = model_la_data(&a, 1, 0).unwrap();
        for (mu, mcd) in seeded_mutations(&cd, 12, 7) {
            let jac = assemble_mn(&mcd).map(|l| l.algebra.jacobi_holds()).unwrap_or(false);
            assert_eq!(jac, theorem310_check(&mcd).unwrap().all_hold(), "{mu}");
        }
    }
}

#[test]
fn mutations_are_seeded() {
    let cd = model_la_data(&grassmann::<Rational>(2).unwrap(), 1, 0).unwrap();
    let a: Vec<String> = seeded_mutations(&cd, 5, 3).iter().map(|m| m.0.to_string()).collect();
    let b: Vec<String> = seeded_mutations(&cd, 5, 3).iter().map(|m| m.0.to_string()).collect();
    assert_eq!(a, b);
    assert!(mutation_candidates(&cd).len() >= a.len());
}

#[test]
fn nn_family() {
    let a = group_algebra::<Rational>(2).unwrap();
    let l = assemble_nn(1, &a, Vec::new(), &vec![Vec::new(); 4]).unwrap();
    assert_eq!(l.algebra.dim(), 28);
    assert!(l.algebra.jacobi_holds());

    let z = Rational::from_i64(0);
    let one = Rational::from_i64(1);
    let form = vec![vec![z.clone()], vec![one.clone()], vec![-one], vec![z]];
    let bad = assemble_nn(1, &a, vec![0], &form).unwrap();
    assert!(!bad.algebra.jacobi_holds());

    let ms = matrix_super::<Rational>(1, 1).unwrap();
    assert!(assemble_nn(1, &ms, Vec::new(), &vec![Vec::new(); 16]).is_err());
}

#[test]
fn coordinatize_round_trip() {
    for a in builtins() {
        let cd = model_la_data(&a, 1, 0).unwrap();
        let l = assemble_mn(&cd).unwrap();
        let back = coordinatize(&l.algebra, &l.embedding).unwrap();
        assert!(back.coord_algebra().check_associative().holds());
        assert_eq!(back.coord_algebra().dim(), a.dim());
        let again = assemble_mn(&back).unwrap();
        assert_eq!(again.algebra.dim(), l.algebra.dim());
        assert!(again.algebra.jacobi_holds());
    }
}

#[test]
fn centres_and_quotients() {
    let k = "ground_field".parse::<Builtin>().unwrap().build::<Rational>().unwrap();
    let sl22 = matrix_sl_a(2, 2, &k).unwrap();
    assert_eq!(sl22.algebra.center().rows(), 1);
    let psl = sl22.central_quotient().unwrap();
    assert_eq!(psl.algebra.dim(), 14);
    assert!(psl.algebra.jacobi_holds());
    let sl21 = matrix_sl_a(2, 1, &k).unwrap();
    assert_eq!(sl21.algebra.center().rows(), 0);
}

#[test]
fn isogenous_models_have_equal_coordinates() {
    for b in ["dual_numbers", "matrix_super:1,1"] {
        let a = b.parse::<Builtin>().unwrap().build::<Rational>().unwrap();
        let q1 = matrix_sl_a(2, 1, &a).unwrap().central_quotient().unwrap();
        let q2 = build_model_la(&a, 1, 0).unwrap().central_quotient().unwrap();
        let c1 = coordinatize(&q1.algebra, &q1.embedding).unwrap();
        let c2 = coordinatize(&q2.algebra, &q2.embedding).unwrap();
        assert!(c1.same_structure(&c2), "{b}");
    }
}
