//! Classification of the spaces `M(q) = P(qγ ⊕ (b-q)1)` over `RP^(a-1)`.
//!
//! * [`gf2poly`]: sparse polynomials in `x, y` over Z/2 and mod-2 binomials.
//! * [`cohomology`]: the ring `Z/2[x,y]/(x^a, (x+y)^q y^(b-q))` in normal form.
//! * [`oracle`]: brute-force graded ring isomorphism with a witness.
//! * [`arithmetic`]: `h(a)`, `k(a)` and the congruence criteria for ring
//!   isomorphism, diffeomorphism and homotopy equivalence.
//! * [`sweep`]: grid scans, data-parallel with the `parallel` feature.

pub mod arithmetic;
pub mod cohomology;
pub mod error;
pub mod gf2poly;
pub mod linalg;
pub mod oracle;
pub mod sweep;

pub use arithmetic::{
    classify, classify_with_oracle, cohomology_criterion, counterexample_pair, diffeo_criterion,
    h_of, homotopy_criterion, k_of, lemma2_equivalence, rigidity_holds, stable_class, stable_iso,
    ClassificationVerdict, StableKOClass,
};
pub use cohomology::{
    betti, lemma1_check, normal_form, relation_polys, total_sw_class, RingElement,
    RingPresentation,
};
pub use error::{Error, Result};
pub use gf2poly::{binom_mod2, LinearForm, LinearSubstitution, Monomial, PolyGF2};
pub use oracle::{rings_isomorphic_bruteforce, IsoVerdict};

/// How grid scans and the 16-way oracle search are executed.
///
/// Without the `parallel` feature, `Parallel` runs sequentially.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strategy {
    Sequential,
    Parallel,
}

impl Default for Strategy {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            Strategy::Parallel
        } else {
            Strategy::Sequential
        }
    }
}
