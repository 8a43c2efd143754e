//! Linear-algebra reference for the quotient ring, independent of the
//! rewriting engine: the degree-`d` slice of the ideal is spanned by the
//! monomial multiples of the two relations, and membership is decided by
//! Gaussian elimination over Z/2 on dense boolean vectors.
#![allow(dead_code)]

use gbott_core::{betti, normal_form, PolyGF2, RingElement, RingPresentation};

/// Dense vector over the degree-`d` monomials `x^i y^(d-i)`, indexed by `i`.
pub type Slice = Vec<bool>;

pub fn gf2_rank(rows: &[Slice]) -> usize {
    let mut m: Vec<Slice> = rows.to_vec();
    let cols = m.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..m.len()).find(|&r| m[r][c]) else { continue };
        m.swap(rank, p);
        let pivot = m[rank].clone();
        for (r, row) in m.iter_mut().enumerate() {
            if r != rank && row[c] {
                for (x, y) in row.iter_mut().zip(&pivot) {
                    *x ^= *y;
                }
            }
        }
        rank += 1;
    }
    rank
}

pub fn in_span(rows: &[Slice], v: &Slice) -> bool {
    let mut with = rows.to_vec();
    with.push(v.clone());
    gf2_rank(&with) == gf2_rank(rows)
}

/// Degree-`d` part of `(x+y)^q y^(b-q)` times `x^i y^j`, expanded with
/// Pascal's rule rather than the library's binomial.
fn second_relation_coeffs(q: usize) -> Vec<bool> {
    let mut row = vec![true];
    for _ in 0..q {
        let mut next = vec![false; row.len() + 1];
        for (k, &c) in row.iter().enumerate() {
            next[k] ^= c;
            next[k + 1] ^= c;
        }
        row = next;
    }
    row
}

pub fn ideal_slice(pres: &RingPresentation, d: usize) -> Vec<Slice> {
    let (a, b, q) = (pres.a() as usize, pres.b() as usize, pres.q() as usize);
    let mut rows = Vec::new();
    // x^a * x^i y^j
    for i in a..=d {
        let mut v = vec![false; d + 1];
        v[i] = true;
        rows.push(v);
    }
    // (x+y)^q y^(b-q) * x^i y^(d-b-i); its x^k part lands at index i + k
    if d >= b {
        let rel = second_relation_coeffs(q);
        for i in 0..=d - b {
            let mut v = vec![false; d + 1];
            for (k, &c) in rel.iter().enumerate() {
                if c {
                    v[i + k] = true;
                }
            }
            rows.push(v);
        }
    }
    rows
}

pub fn slice_of(p: &PolyGF2, d: usize) -> Slice {
    let mut v = vec![false; d + 1];
    for m in p.terms().filter(|m| m.degree() == d as u64) {
        v[m.x as usize] = true;
    }
    v
}

/// Checks that the quotient has dimension `betti(d)` in degree `d` and that
/// every degree-`d` monomial differs from its normal form by an ideal element.
pub fn check_degree(pres: &RingPresentation, d: usize) -> Result<(), String> {
    let ideal = ideal_slice(pres, d);
    let quotient_dim = d + 1 - gf2_rank(&ideal);
    if quotient_dim as u64 != betti(pres, d as u64) {
        return Err(format!(
            "{pres} degree {d}: quotient dim {quotient_dim}, betti {}",
            betti(pres, d as u64)
        ));
    }
    for i in 0..=d {
        let m = PolyGF2::monomial(i as u32, (d - i) as u32);
        let nf = normal_form(&m, pres);
        if nf.terms().any(|t| t.x >= pres.a() || t.y >= pres.b()) {
            return Err(format!("{pres}: normal form of {m} leaves the basis"));
        }
        let diff: Slice = slice_of(&m, d)
            .iter()
            .zip(slice_of(&nf.lift(), d))
            .map(|(u, v)| u ^ v)
            .collect();
        if !in_span(&ideal, &diff) {
            return Err(format!("{pres}: {m} - NF({m}) = {m} + {nf} is not in the ideal"));
        }
    }
    Ok(())
}

/// Dense `(1+x)^a (1+y)^(b-q) (1+x+y)^q`, as a coefficient grid `[i][j]`.
pub fn dense_sw(a: usize, b: usize, q: usize) -> Vec<Vec<bool>> {
    let n = a + b + 1;
    let mut grid = vec![vec![false; n]; n];
    grid[0][0] = true;
    let times = |grid: &mut Vec<Vec<bool>>, dx: bool, dy: bool| {
        let mut next = grid.clone();
        for i in 0..n {
            for j in 0..n {
                if !grid[i][j] {
                    continue;
                }
                if dx {
                    next[i + 1][j] ^= true;
                }
                if dy {
                    next[i][j + 1] ^= true;
                }
            }
        }
        *grid = next;
    };
    for _ in 0..a {
        times(&mut grid, true, false);
    }
    for _ in 0..b - q {
        times(&mut grid, false, true);
    }
    for _ in 0..q {
        times(&mut grid, true, true);
    }
    grid
}

/// Checks `w` against the dense expansion degree by degree, modulo the ideal.
pub fn check_sw(pres: &RingPresentation, w: &RingElement) -> Result<(), String> {
    let (a, b, q) = (pres.a() as usize, pres.b() as usize, pres.q() as usize);
    let grid = dense_sw(a, b, q);
    for d in 0..=a + b {
        let mut v = vec![false; d + 1];
        for (i, slot) in v.iter_mut().enumerate() {
            *slot = grid[i][d - i];
        }
        let ours = slice_of(&w.lift(), d);
        let diff: Slice = v.iter().zip(&ours).map(|(u, w)| u ^ w).collect();
        if !in_span(&ideal_slice(pres, d), &diff) {
            return Err(format!("{pres}: degree {d} of the SW class disagrees"));
        }
    }
    Ok(())
}
