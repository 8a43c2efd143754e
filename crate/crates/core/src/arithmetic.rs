//! Number-theoretic side of the classification: `h(a)`, `k(a)`, the
//! cohomology / diffeomorphism / homotopy criteria, the rigidity dichotomy,
//! counterexample construction, and a model of `KO~(RP^(a-1))`.
//!
//! `a` is accepted up to `2^63`, which keeps `2^h(a)` inside a `u64`.
//! `2^k(a)` is never materialised: `u ≡ v (mod 2^e)` is decided from the
//! trailing zeros of `|u - v|`, so the diffeomorphism test is exact for every
//! supported `a` even when `k(a) >= 64`.

use crate::cohomology::RingPresentation;
use crate::error::{Error, Result};
use crate::gf2poly::{binom_mod2, LinearSubstitution};
use crate::oracle::rings_isomorphic_bruteforce;

pub const MAX_A: u64 = 1 << 63;

fn check_a(a: u64) -> Result<()> {
    if a == 0 || a > MAX_A {
        return Err(Error::UnsupportedA(a));
    }
    Ok(())
}

fn check_pair(a: u64, b: u64, q: u64, q_prime: u64) -> Result<()> {
    check_a(a)?;
    if b == 0 {
        return Err(Error::InvalidB);
    }
    for v in [q, q_prime] {
        if v > b {
            return Err(Error::QOutOfRange { q: v, b });
        }
    }
    Ok(())
}

/// Smallest `n` with `2^n >= a`.
pub fn h_of(a: u64) -> Result<u32> {
    check_a(a)?;
    Ok(if a == 1 { 0 } else { 64 - (a - 1).leading_zeros() })
}

/// Number of `0 < n < a` with `n ≡ 0, 1, 2, 4 (mod 8)`.
pub fn k_of(a: u64) -> Result<u64> {
    check_a(a)?;
    let n = a - 1;
    let rem = match n % 8 {
        0 => 0,
        1 => 1,
        2 | 3 => 2,
        _ => 3,
    };
    Ok(n / 8 * 4 + rem)
}

/// `u ≡ v (mod 2^e)`.
pub fn congruent_mod_pow2(u: u64, v: u64, e: u64) -> bool {
    let diff = u.abs_diff(v);
    diff == 0 || diff.trailing_zeros() as u64 >= e
}

fn q_or_complement(b: u64, q: u64, q_prime: u64, e: u64) -> bool {
    congruent_mod_pow2(q_prime, q, e) || congruent_mod_pow2(q_prime, b - q, e)
}

/// `q' ≡ q` or `b - q (mod 2^h(a))`: the rings are isomorphic.
pub fn cohomology_criterion(a: u64, b: u64, q: u64, q_prime: u64) -> Result<bool> {
    check_pair(a, b, q, q_prime)?;
    Ok(q_or_complement(b, q, q_prime, h_of(a)? as u64))
}

/// `q' ≡ q` or `b - q (mod 2^k(a))`: the manifolds are diffeomorphic.
pub fn diffeo_criterion(a: u64, b: u64, q: u64, q_prime: u64) -> Result<bool> {
    check_pair(a, b, q, q_prime)?;
    Ok(q_or_complement(b, q, q_prime, k_of(a)?))
}

/// Homotopy equivalence coincides with diffeomorphism in this family.
pub use self::diffeo_criterion as homotopy_criterion;

/// Cohomological rigidity over Z/2 for the family `{M(q) : 0 <= q <= b}`.
pub fn rigidity_holds(a: u64, b: u64) -> Result<bool> {
    check_a(a)?;
    if b == 0 {
        return Err(Error::InvalidB);
    }
    Ok(a <= 9 || b <= 1u64 << h_of(a)?)
}

/// A pair with isomorphic cohomology rings but non-diffeomorphic manifolds,
/// or `None` when rigidity holds.
pub fn counterexample_pair(a: u64, b: u64) -> Result<Option<(u64, u64)>> {
    if rigidity_holds(a, b)? {
        return Ok(None);
    }
    let m = 1u64 << h_of(a)?;
    let pair = if b.is_multiple_of(m) { (1, m + 1) } else { (0, m) };
    assert!(
        cohomology_criterion(a, b, pair.0, pair.1)? && !diffeo_criterion(a, b, pair.0, pair.1)?,
        "counterexample {pair:?} for (a={a}, b={b}) fails validation"
    );
    Ok(Some(pair))
}

/// Binomial rows of `q` and `q'` agree mod 2 below `a`.
pub fn lemma2_equivalence(a: u64, q: u64, q_prime: u64) -> bool {
    // Past max(q, q') both rows are zero.
    let top = a.min(q.max(q_prime).saturating_add(1));
    (0..top).all(|i| binom_mod2(q, i as i64) == binom_mod2(q_prime, i as i64))
}

/// The stable class of `qγ ⊕ (rank - q)1` in `KO(RP^(a-1))`: total rank
/// plus the multiple of `γ - 1`, which lives in a cyclic group of order
/// `2^k(a)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct StableKOClass {
    a: u64,
    k: u64,
    gamma_mult: u64,
    rank: u64,
}

impl StableKOClass {
    pub fn a(&self) -> u64 {
        self.a
    }

    /// Residue of the `γ` multiplicity, in `[0, 2^k(a))`.
    pub fn gamma_mult(&self) -> u64 {
        self.gamma_mult
    }

    pub fn rank(&self) -> u64 {
        self.rank
    }

    pub fn order_log2(&self) -> u64 {
        self.k
    }
}

pub fn stable_class(a: u64, q: u64, rank: u64) -> Result<StableKOClass> {
    let k = k_of(a)?;
    let gamma_mult = if k >= 64 { q } else { q & ((1u64 << k) - 1) };
    Ok(StableKOClass { a, k, gamma_mult, rank })
}

pub fn stable_iso(c1: &StableKOClass, c2: &StableKOClass) -> Result<bool> {
    if c1.a != c2.a {
        return Err(Error::BaseMismatch(c1.a, c2.a));
    }
    Ok(c1.rank == c2.rank && c1.gamma_mult == c2.gamma_mult)
}

/// Everything known about the pair `M(q), M(q')` over `RP^(a-1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassificationVerdict {
    pub a: u64,
    pub b: u64,
    pub q: u64,
    pub q_prime: u64,
    pub h: u32,
    pub k: u64,
    pub cohomology_isomorphic: bool,
    pub diffeomorphic: bool,
    pub homotopy_equivalent: bool,
    /// `Some` only after an oracle run; the inner `None` means the oracle
    /// found no isomorphism.
    pub oracle: Option<Option<LinearSubstitution>>,
}

impl ClassificationVerdict {
    pub fn oracle_isomorphic(&self) -> Option<bool> {
        self.oracle.map(|w| w.is_some())
    }

    pub fn oracle_witness(&self) -> Option<LinearSubstitution> {
        self.oracle.flatten()
    }

    /// Whether an oracle run, if any, agrees with the criterion.
    pub fn oracle_agrees(&self) -> bool {
        self.oracle_isomorphic()
            .is_none_or(|iso| iso == self.cohomology_isomorphic)
    }

    /// Cohomology rings agree but the manifolds differ.
    pub fn breaks_rigidity(&self) -> bool {
        self.cohomology_isomorphic && !self.diffeomorphic
    }
}

pub fn classify(a: u64, b: u64, q: u64, q_prime: u64) -> Result<ClassificationVerdict> {
    let diffeomorphic = diffeo_criterion(a, b, q, q_prime)?;
    Ok(ClassificationVerdict {
        a,
        b,
        q,
        q_prime,
        h: h_of(a)?,
        k: k_of(a)?,
        cohomology_isomorphic: cohomology_criterion(a, b, q, q_prime)?,
        diffeomorphic,
        homotopy_equivalent: homotopy_criterion(a, b, q, q_prime)?,
        oracle: None,
    })
}

/// [`classify`] plus a brute-force ring comparison `M(q') -> M(q)`.
pub fn classify_with_oracle(a: u64, b: u64, q: u64, q_prime: u64) -> Result<ClassificationVerdict> {
    let mut v = classify(a, b, q, q_prime)?;
    let narrow = |n: u64| u32::try_from(n).map_err(|_| Error::InvalidPresentation { a, b, q });
    let (a32, b32) = (narrow(a)?, narrow(b)?);
    let src = RingPresentation::new(a32, b32, q_prime as u32)?;
    let dst = RingPresentation::new(a32, b32, q as u32)?;
    v.oracle = Some(rings_isomorphic_bruteforce(&src, &dst)?.witness);
    Ok(v)
}
