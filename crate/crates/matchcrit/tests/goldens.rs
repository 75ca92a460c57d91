//! Frozen exact values: named polynomials, evaluations at 1, matching
//! counts, classification vectors, and path tree shapes. Every number
//! here was computed by an independent route before the engine existed.

use matchcrit::canon::canonical_code;
use matchcrit::crit::{classify_vertices, multiplicity, VertexKind};
use matchcrit::families::{
    make_cplus, make_fstar, make_ftree, make_gstar, make_h1, make_h2, make_q, make_r, make_rstar,
    make_t, make_w, make_y, make_ystar,
};
use matchcrit::graph::{complete, cycle, path, Graph};
use matchcrit::matching::{global_engine, matching_polynomial, path_tree};
use matchcrit::poly::IntPolynomial;
use matchcrit::root::AlgebraicRoot;

fn mu_str(g: &Graph) -> String {
    matching_polynomial(g).to_string()
}

fn mu_at_1(g: &Graph) -> i64 {
    let v = matching_polynomial(g).evaluate_int(&num_bigint::BigInt::from(1));
    i64::try_from(v).expect("small value")
}

#[test]
fn w_family_polynomials() {
    assert_eq!(mu_str(&make_w(6).unwrap()), "x^6-5x^4+4x^2");
    assert_eq!(mu_str(&make_w(7).unwrap()), "x^7-6x^5+8x^3");
}

#[test]
fn y_family_polynomials() {
    assert_eq!(mu_str(&make_y(5).unwrap()), "x^5-4x^3+2x");
    assert_eq!(mu_str(&make_y(6).unwrap()), "x^6-5x^4+5x^2");
    assert_eq!(mu_str(&make_y(7).unwrap()), "x^7-6x^5+9x^3-2x");
}

#[test]
fn r_family_polynomials() {
    assert_eq!(mu_str(&make_r(7).unwrap()), "x^7-6x^5+8x^3-2x");
    assert_eq!(mu_str(&make_r(8).unwrap()), "x^8-7x^6+12x^4-4x^2");
}

#[test]
fn h1_h2_same_polynomial() {
    let h1 = make_h1();
    let h2 = make_h2();
    assert_eq!(mu_str(&h1), "x^5-5x^3+4x");
    assert_eq!(mu_str(&h2), "x^5-5x^3+4x");
    // Same polynomial, yet not isomorphic.
    assert_ne!(canonical_code(&h1), canonical_code(&h2));
}

#[test]
fn fstar_11_polynomial() {
    assert_eq!(mu_str(&make_fstar(11).unwrap()), "x^11-10x^9+27x^7-18x^5");
}

#[test]
fn t6_t7_polynomials() {
    let t6 = make_t(6).unwrap();
    assert_eq!(mu_str(&t6), "x^6-5x^4+5x^2-1");
    let one = AlgebraicRoot::integer(1);
    assert_eq!(multiplicity(&t6, &one), 1);
    let t7 = make_t(7).unwrap();
    assert_eq!(mu_str(&t7), "x^7-6x^5+9x^3-4x");
    // x(x^2-1)^2(x^2-4): multiplicity 2 at +-1.
    assert_eq!(multiplicity(&t7, &one), 2);
}

#[test]
fn gstar_polynomial_and_deletions() {
    let g = make_gstar();
    assert_eq!(g.n(), 12);
    assert_eq!(g.m(), 17);
    assert_eq!(mu_str(&g), "x^12-17x^10+97x^8-227x^6+198x^4-36x^2");
    let del = |v: usize| mu_str(&g.delete_vertex(v).unwrap());
    assert_eq!(del(0), "x^11-13x^9+57x^7-99x^5+54x^3");
    assert_eq!(del(1), "x^11-12x^9+47x^7-66x^5+18x^3");
    assert_eq!(del(3), "x^11-15x^9+75x^7-149x^5+100x^3-12x");
    assert_eq!(del(6), "x^11-14x^9+60x^7-96x^5+55x^3-6x");
}

#[test]
fn gstar_classification() {
    let g = make_gstar();
    let sqrt3 = AlgebraicRoot::sqrt(3).unwrap();
    let verdict = classify_vertices(&g, &sqrt3);
    assert!(verdict.is_root);
    assert_eq!(verdict.multiplicity, 1);
    assert!(!verdict.critical);
    let want = [
        (VertexKind::Positive, true),
        (VertexKind::Positive, false),
        (VertexKind::Positive, false),
        (VertexKind::Neutral, false),
        (VertexKind::Neutral, false),
        (VertexKind::Neutral, false),
        (VertexKind::Essential, false),
        (VertexKind::Essential, false),
        (VertexKind::Essential, false),
        (VertexKind::Essential, false),
        (VertexKind::Essential, false),
        (VertexKind::Essential, false),
    ];
    for (v, (kind, special)) in want.iter().enumerate() {
        let c = verdict.class_of(v).unwrap();
        assert_eq!(c.kind, *kind, "vertex {v}");
        assert_eq!(c.special, *special, "vertex {v}");
    }
}

#[test]
fn gstar_deletion_isomorphisms() {
    let g = make_gstar();
    let code = |v: usize| canonical_code(&g.delete_vertex(v).unwrap());
    assert_eq!(code(1), code(2));
    assert_eq!(code(3), code(4));
    assert_eq!(code(3), code(5));
    assert_eq!(code(6), code(9));
    assert_ne!(code(0), code(1));
    assert_ne!(code(1), code(3));
    assert_ne!(code(3), code(6));
}

#[test]
fn matching_count_vectors() {
    let engine = global_engine();
    let c6: Vec<i64> = engine
        .matching_counts(&cycle(6))
        .iter()
        .map(|b| i64::try_from(b).unwrap())
        .collect();
    assert_eq!(c6, vec![1, 6, 9, 2]);
    let k6: Vec<i64> = engine
        .matching_counts(&complete(6))
        .iter()
        .map(|b| i64::try_from(b).unwrap())
        .collect();
    assert_eq!(k6, vec![1, 15, 45, 15]);
}

#[test]
fn evaluations_at_one() {
    assert_eq!(mu_at_1(&make_y(4).unwrap()), -2);
    assert_eq!(mu_at_1(&make_y(5).unwrap()), -1);
    assert_eq!(mu_at_1(&make_y(6).unwrap()), 1);
    assert_eq!(mu_at_1(&make_y(7).unwrap()), 2);
    assert_eq!(mu_at_1(&make_ystar(6).unwrap()), -1);
    assert_eq!(mu_at_1(&make_w(7).unwrap()), 3);
    assert_eq!(mu_at_1(&make_w(8).unwrap()), 3);
    assert_eq!(mu_at_1(&make_r(7).unwrap()), 1);
    assert_eq!(mu_at_1(&make_r(8).unwrap()), 2);
    assert_eq!(mu_at_1(&make_rstar(8).unwrap()), 3);
}

#[test]
fn path_tree_shapes() {
    // T(K_3, 0) is P_5.
    let t = path_tree(&complete(3), 0).unwrap();
    assert_eq!(t.node_count(), 5);
    assert_eq!(canonical_code(&t.to_graph()), canonical_code(&path(5)));
    // T(K_8, u): sum over k of 7!/(7-k)!.
    let t8 = path_tree(&complete(8), 0).unwrap();
    assert_eq!(t8.node_count(), 13_700);
}

#[test]
fn q_instances() {
    // Hub u joined to a closed twin pair over K_1, plus three more
    // trivial components: 6 vertices, multiplicity 2 at zero.
    let k1 = Graph::empty(1);
    let q = make_q(&k1, 0, &[k1.clone(), k1.clone(), k1.clone()], &[
        vec![0],
        vec![0],
        vec![0],
    ])
    .unwrap();
    assert_eq!(q.n(), 6);
    let zero = AlgebraicRoot::new(IntPolynomial::x()).unwrap();
    assert_eq!(multiplicity(&q, &zero), 2);

    // The same construction over K_3 components: 11 vertices.
    let k3 = complete(3);
    let q3 = make_q(&k3, 0, &[k3.clone(), k3.clone()], &[vec![0], vec![0]]).unwrap();
    assert_eq!(q3.n(), 11);
    let sqrt3 = AlgebraicRoot::sqrt(3).unwrap();
    assert_eq!(multiplicity(&q3, &sqrt3), 1);
}

#[test]
fn cplus_5_is_h2() {
    let c5p = make_cplus(5).unwrap();
    assert_eq!(canonical_code(&c5p), canonical_code(&make_h2()));
}

#[test]
fn ftree_polynomial_consistency() {
    // F_10 alias of the four-pendant spine tree; check degree and the
    // negation symmetry rather than a frozen string.
    let f = make_ftree(10).unwrap();
    let mu = matching_polynomial(&f);
    assert_eq!(mu.degree(), Some(10));
    assert_eq!(mu.compose_neg_x(), mu);
    assert!(mu.is_monic());
}
