use gbott_core::oracle::{enumerate_substitutions, induces_homomorphism, is_graded_isomorphism};
use gbott_core::{cohomology_criterion, rings_isomorphic_bruteforce, Error, RingPresentation};

fn pres(a: u32, b: u32, q: u32) -> RingPresentation {
    RingPresentation::new(a, b, q).unwrap()
}

#[test]
fn symmetric_reflexive_and_complement_closed() {
    for a in 1..=5 {
        for b in 1..=6 {
            let verdict = |q, qp| rings_isomorphic_bruteforce(&pres(a, b, q), &pres(a, b, qp)).unwrap();
            for q in 0..=b {
                assert!(verdict(q, q).isomorphic);
                assert!(verdict(q, b - q).isomorphic);
                for qp in 0..=b {
                    let forward = verdict(q, qp);
                    assert_eq!(forward.isomorphic, verdict(qp, q).isomorphic, "a={a} b={b} q={q} q'={qp}");
                    assert_eq!(forward.isomorphic, forward.witness.is_some());
                    if let Some(w) = forward.witness {
                        assert!(is_graded_isomorphism(&w, &pres(a, b, q), &pres(a, b, qp)).unwrap());
                    }
                }
            }
        }
    }
}

#[test]
fn isomorphisms_of_nondegenerate_rings_fix_x() {
    // With a, b >= 2 and 0 < q < b, y and x+y have nonvanishing a-th powers,
    // so every witness must send x' to x.
    for a in 2..=5 {
        for b in 2..=6 {
            for q in 1..b {
                for qp in 0..=b {
                    if let Some(w) = rings_isomorphic_bruteforce(&pres(a, b, qp), &pres(a, b, q)).unwrap().witness {
                        assert_eq!(w.image_of_x, gbott_core::LinearForm::X, "{w}");
                        assert!(w.is_invertible());
                    }
                }
            }
        }
    }
}

#[test]
fn every_isomorphism_is_a_homomorphism() {
    for b in 1..=4 {
        for q in 0..=b {
            for qp in 0..=b {
                for s in enumerate_substitutions() {
                    let (src, dst) = (pres(3, b, q), pres(3, b, qp));
                    if is_graded_isomorphism(&s, &src, &dst).unwrap() {
                        assert!(induces_homomorphism(&s, &src, &dst).unwrap());
                    }
                }
            }
        }
    }
}

#[test]
fn rejects_different_shapes() {
    assert_eq!(
        rings_isomorphic_bruteforce(&pres(2, 3, 0), &pres(3, 3, 0)),
        Err(Error::ShapeMismatch(2, 3, 3, 3))
    );
}

#[test]
fn headline_pair_is_isomorphic() {
    let v = rings_isomorphic_bruteforce(&pres(10, 17, 16), &pres(10, 17, 0)).unwrap();
    assert!(v.isomorphic);
    assert!(cohomology_criterion(10, 17, 0, 16).unwrap());
    // and 0 vs 8 is not: 8 is neither 0 nor 17 mod 16
    assert!(!rings_isomorphic_bruteforce(&pres(10, 17, 8), &pres(10, 17, 0)).unwrap().isomorphic);
}
