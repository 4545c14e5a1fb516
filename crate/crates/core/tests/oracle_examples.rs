use tauweave::models::{gamma, lambda_m, oriented_line, preprojective, radical_square_zero_line};
use tauweave::oracle::complex::{is_presilting, HomSpace};
use tauweave::oracle::pair::pair_geq;
use tauweave::oracle::{
    check_condition, homotopy_vanishes, is_local_endomorphism, support_tau_tilting_order,
    ConcreteTwoTerm, FiniteDimAlgebra, LineQuiver, RightModule, TauPair,
};
use tauweave::xi::XiIndex;

fn build(p: &tauweave::oracle::QuiverPresentation) -> FiniteDimAlgebra {
    FiniteDimAlgebra::build(p).unwrap()
}

/// `[P_2 → P_1]` along the arrow `1 → 2` over the preprojective algebra of rank 2.
fn x1(alg: &FiniteDimAlgebra) -> ConcreteTwoTerm {
    let a = alg.presentation().arrow_index("a1").unwrap();
    ConcreteTwoTerm::new(vec![2], vec![1], vec![vec![alg.path_element(&[a])]])
}

#[test]
fn algebra_dimensions() {
    let p2 = build(&preprojective(2));
    assert_eq!(p2.dim(), 4);
    assert_eq!(p2.degree_dims(), &[2, 2]);
    for n in 1..=4 {
        assert_eq!(build(&preprojective(n)).dim(), n * (n + 1) * (n + 2) / 6);
    }
    let l1 = build(&lambda_m(2, 1).unwrap());
    assert_eq!(l1.dim(), 4);
    let g = build(&gamma());
    assert!(g.check_associative());
    assert!(g.check_relations());
    assert!(g.corner(1, 1).len() >= 5);
}

#[test]
fn free_loop_is_rejected() {
    let mut p = tauweave::oracle::QuiverPresentation::new(1);
    p.arrow("x", 1, 1);
    assert!(FiniteDimAlgebra::build_with_cap(&p, 6).is_err());
}

#[test]
fn hom_spaces() {
    let p2 = build(&preprojective(2));
    let c = p2.corner(1, 2);
    assert_eq!(c.len(), 1);
    assert_eq!(p2.basis_name(c[0]), "a1");
    for i in 1..=2 {
        assert_eq!(HomSpace::new(&p2, &[i], &[i]).dim(), 1);
    }
    let l2 = build(&lambda_m(2, 2).unwrap());
    assert!(l2.corner(1, 1).len() >= 2);
}

#[test]
fn homotopy_examples() {
    let alg = build(&preprojective(2));
    let x = x1(&alg);
    assert!(homotopy_vanishes(
        &alg,
        &ConcreteTwoTerm::stalk(vec![1]),
        &x
    ));
    assert!(!homotopy_vanishes(
        &alg,
        &x,
        &ConcreteTwoTerm::stalk(vec![2])
    ));
    assert!(homotopy_vanishes(
        &alg,
        &ConcreteTwoTerm::shifted(vec![2]),
        &x
    ));
    assert!(is_presilting(&alg, &x));
}

#[test]
fn cyclic_quotients() {
    let p2 = build(&preprojective(2));
    assert_eq!(RightModule::cyclic_quotient(&p2, 1, &[1]).dim(), 1);
    assert_eq!(
        RightModule::cyclic_quotient(&p2, 1, &[1, 2]).dim(),
        RightModule::projective(&p2, 1).dim()
    );
    let p3 = build(&preprojective(3));
    let m = RightModule::cyclic_quotient(&p3, 1, &[1, 2]);
    assert_eq!(m.dim(), 2);
    assert_eq!(m.support(), vec![1, 2]);
    assert!(m.respects_relations(&p3));
}

#[test]
fn minimal_presentations() {
    let p2 = build(&preprojective(2));
    let proj = RightModule::projective(&p2, 2).minimal_presentation(&p2);
    assert!(proj.minus.is_empty());
    assert_eq!(proj.zero, vec![2]);

    let s1 = RightModule::cyclic_quotient(&p2, 1, &[1]).minimal_presentation(&p2);
    assert_eq!((s1.minus.clone(), s1.zero.clone()), (vec![2], vec![1]));
    assert!(s1.has_no_common_summand());
    assert_eq!(s1.g_vector(2), vec![1, -1]);

    let p3 = build(&preprojective(3));
    let m = RightModule::cyclic_quotient(&p3, 1, &[1, 2]).minimal_presentation(&p3);
    assert_eq!((m.minus.clone(), m.zero.clone()), (vec![3], vec![1]));
    let line = LineQuiver::detect(p3.presentation()).unwrap();
    let target = XiIndex::new(3, vec![0, 1, 3]).unwrap();
    let realized = ConcreteTwoTerm::realize(&p3, &line, &target).unwrap();
    assert_eq!(m.g_vector(3), realized.g_vector(3));
}

#[test]
fn condition_reports() {
    for n in 1..=4 {
        assert!(check_condition(&build(&preprojective(n))).passes());
    }
    for m in 1..=3 {
        assert!(check_condition(&build(&lambda_m(3, m).unwrap())).passes());
    }
    assert!(check_condition(&build(&gamma())).passes());
    assert!(!check_condition(&build(&oriented_line(3))).double_line);
    let r = check_condition(&build(&radical_square_zero_line(3)));
    assert!(r.double_line);
    assert_eq!(r.shortest_paths_nonzero, Some(false));
}

#[test]
fn radical_sides_agree_under_the_condition() {
    use tauweave::oracle::condition::radical_sides_agree;
    for p in [
        preprojective(2),
        preprojective(3),
        lambda_m(3, 2).unwrap(),
        gamma(),
    ] {
        assert!(radical_sides_agree(&build(&p)));
    }
}

#[test]
fn local_endomorphisms() {
    let alg = build(&preprojective(2));
    assert!(is_local_endomorphism(
        &alg,
        &ConcreteTwoTerm::stalk(vec![1])
    ));
    assert!(is_local_endomorphism(&alg, &x1(&alg)));
    assert!(!is_local_endomorphism(
        &alg,
        &ConcreteTwoTerm::stalk(vec![1, 2])
    ));
}

#[test]
fn pair_order() {
    let alg = build(&preprojective(2));
    let top = TauPair {
        summands: vec![
            RightModule::projective(&alg, 1),
            RightModule::projective(&alg, 2),
        ],
        shifted: vec![],
    };
    let bottom = TauPair {
        summands: vec![],
        shifted: vec![1, 2],
    };
    let s1 = TauPair {
        summands: vec![RightModule::cyclic_quotient(&alg, 1, &[1])],
        shifted: vec![2],
    };
    let s2 = TauPair {
        summands: vec![RightModule::cyclic_quotient(&alg, 2, &[2])],
        shifted: vec![1],
    };
    for p in [&top, &bottom, &s1, &s2] {
        assert!(support_tau_tilting_order(&alg, &top, p).unwrap());
        assert!(pair_geq(&alg, p, &bottom));
    }
    assert!(!support_tau_tilting_order(&alg, &bottom, &top).unwrap());
    assert!(!pair_geq(&alg, &s1, &s2));
    assert!(!pair_geq(&alg, &s2, &s1));

    let broken = TauPair {
        summands: vec![RightModule::cyclic_quotient(&alg, 1, &[1])],
        shifted: vec![1],
    };
    assert!(support_tau_tilting_order(&alg, &broken, &top).is_err());
}
