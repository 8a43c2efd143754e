//! Brute-force decision of graded ring isomorphism between two presentations
//! with the same `(a, b)`.
//!
//! Both rings are generated in degree 1, so a graded unital isomorphism is
//! determined by where it sends `x'` and `y'`. There are 16 linear maps from
//! `{x', y'}` to `{0, x, y, x+y}`; each one is tested for (1) sending both
//! relations of the source into the ideal of the target and (2) inducing a
//! full-rank map in every degree. Non-invertible matrices are tried as well:
//! when `a = 1` or `b = 1` the generators are dependent in the quotient and
//! such a matrix can still induce an isomorphism.

use crate::cohomology::{betti, normal_form, relation_polys, RingElement, RingPresentation};
use crate::error::{Error, Result};
use crate::gf2poly::{LinearForm, LinearSubstitution};
use crate::linalg::{rank, BitRow};
use crate::Strategy;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IsoVerdict {
    pub isomorphic: bool,
    pub witness: Option<LinearSubstitution>,
}

/// All 16 substitutions, ordered by (image of `x'`, image of `y'`) with
/// forms ordered `0, x, y, x+y`.
pub fn enumerate_substitutions() -> Vec<LinearSubstitution> {
    LinearForm::ALL
        .iter()
        .flat_map(|&fx| LinearForm::ALL.iter().map(move |&fy| LinearSubstitution::new(fx, fy)))
        .collect()
}

fn check_shape(src: &RingPresentation, dst: &RingPresentation) -> Result<()> {
    if !src.same_shape(dst) {
        return Err(Error::ShapeMismatch(src.a(), src.b(), dst.a(), dst.b()));
    }
    Ok(())
}

/// Whether `sub` carries both relations of `src` to zero in `dst`.
pub fn induces_homomorphism(
    sub: &LinearSubstitution,
    src: &RingPresentation,
    dst: &RingPresentation,
) -> Result<bool> {
    check_shape(src, dst)?;
    let (r1, r2) = relation_polys(src);
    Ok(normal_form(&r1.substitute(sub), dst).is_zero()
        && normal_form(&r2.substitute(sub), dst).is_zero())
}

/// Whether `sub` induces a graded ring isomorphism `src -> dst`.
pub fn is_graded_isomorphism(
    sub: &LinearSubstitution,
    src: &RingPresentation,
    dst: &RingPresentation,
) -> Result<bool> {
    if !induces_homomorphism(sub, src, dst)? {
        return Ok(false);
    }
    let powers = |form: LinearForm, n: u32| {
        let base = normal_form(&form.to_poly(), dst);
        let mut v = Vec::with_capacity(n as usize);
        v.push(RingElement::one(dst));
        for k in 1..n as usize {
            let next = v[k - 1].mul(&base).expect("same ring");
            v.push(next);
        }
        v
    };
    let px = powers(sub.image_of_x, src.a());
    let py = powers(sub.image_of_y, src.b());

    for d in 0..=src.top_degree() {
        let width = betti(dst, d) as usize;
        let lo = dst.basis_in_degree(d).next().map_or(0, |m| m.x);
        let rows = src.basis_in_degree(d).map(|m| {
            let image = px[m.x as usize].mul(&py[m.y as usize]).expect("same ring");
            let mut row = BitRow::zeros(width);
            for t in image.terms() {
                debug_assert_eq!(t.degree(), d);
                row.set((t.x - lo) as usize);
            }
            row
        });
        if rank(rows) as u64 != betti(src, d) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Tries every substitution and returns the first isomorphism found.
pub fn rings_isomorphic_bruteforce(src: &RingPresentation, dst: &RingPresentation) -> Result<IsoVerdict> {
    rings_isomorphic_bruteforce_with(src, dst, Strategy::default())
}

pub fn rings_isomorphic_bruteforce_with(
    src: &RingPresentation,
    dst: &RingPresentation,
    strategy: Strategy,
) -> Result<IsoVerdict> {
    check_shape(src, dst)?;
    let subs = enumerate_substitutions();
    let test = |s: &LinearSubstitution| {
        is_graded_isomorphism(s, src, dst)
            .expect("shape checked")
            .then_some(*s)
    };
    let witness = match strategy {
        #[cfg(feature = "parallel")]
        Strategy::Parallel => {
            use rayon::prelude::*;
            subs.par_iter().find_map_first(test)
        }
        _ => subs.iter().find_map(test),
    };
    Ok(IsoVerdict {
        isomorphic: witness.is_some(),
        witness,
    })
}
