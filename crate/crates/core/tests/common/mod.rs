//! Independent degreewise linear-algebra oracles and random instance
//! generators shared by the integration tests. Nothing here calls into the
//! Gröbner basis code.
#![allow(dead_code)]

use frobinj::ring::monomials_of_degree;
use frobinj::{Monomial, Polynomial, PrimeField, Ring};
use rand::rngs::StdRng;
use rand::Rng as _;

/// Dense row reduction; returns the reduced rows (pivot rows only).
pub fn row_reduce(mut rows: Vec<Vec<u32>>, field: PrimeField) -> Vec<Vec<u32>> {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for col in 0..ncols {
        let Some(piv) = (rank..rows.len()).find(|&i| rows[i][col] != 0) else { continue };
        rows.swap(rank, piv);
        let inv = field.inv(rows[rank][col]);
        for v in rows[rank].iter_mut() {
            *v = field.mul(*v, inv);
        }
        let pivot = rows[rank].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != rank && row[col] != 0 {
                let c = row[col];
                for (v, pv) in row.iter_mut().zip(&pivot) {
                    *v = field.sub(*v, field.mul(c, *pv));
                }
            }
        }
        rank += 1;
    }
    rows.truncate(rank);
    rows
}

pub fn rank(rows: Vec<Vec<u32>>, field: PrimeField) -> usize {
    row_reduce(rows, field).len()
}

/// Kernel of the matrix whose columns are indexed by `0..ncols`.
pub fn kernel(rows: Vec<Vec<u32>>, ncols: usize, field: PrimeField) -> Vec<Vec<u32>> {
    let red = row_reduce(rows, field);
    let pivots: Vec<usize> = red.iter().map(|r| r.iter().position(|v| *v != 0).unwrap()).collect();
    let mut out = Vec::new();
    for free in (0..ncols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![0u32; ncols];
        v[free] = 1;
        for (r, &pc) in red.iter().zip(&pivots) {
            v[pc] = field.neg(r[free]);
        }
        out.push(v);
    }
    out
}

pub fn coords(g: &Polynomial, basis: &[Monomial]) -> Vec<u32> {
    basis.iter().map(|m| g.coefficient(m)).collect()
}

fn mono_poly(ring: &Ring, m: &Monomial) -> Polynomial {
    Polynomial::monomial(ring, m.clone(), 1)
}

/// Spanning set of the degree-`s` part of the ideal generated by `gens`.
pub fn ideal_in_degree(ring: &Ring, gens: &[Polynomial], s: i64) -> Vec<Polynomial> {
    let mut out = Vec::new();
    for h in gens {
        let dh = h.homogeneous_degree().unwrap() as i64;
        for m in monomials_of_degree(ring.nvars(), s - dh) {
            out.push(h.mul_monomial(&m).unwrap());
        }
    }
    out
}

/// dim_k (ideal)_s.
pub fn ideal_dim(ring: &Ring, gens: &[Polynomial], s: i64) -> usize {
    let basis = monomials_of_degree(ring.nvars(), s);
    let rows = ideal_in_degree(ring, gens, s).iter().map(|g| coords(g, &basis)).collect();
    rank(rows, ring.field())
}

/// Membership of a homogeneous `g` in the ideal generated by `gens`.
pub fn member(ring: &Ring, gens: &[Polynomial], g: &Polynomial) -> bool {
    if g.is_zero() {
        return true;
    }
    let s = g.homogeneous_degree().unwrap() as i64;
    let basis = monomials_of_degree(ring.nvars(), s);
    let rows: Vec<Vec<u32>> = ideal_in_degree(ring, gens, s).iter().map(|h| coords(h, &basis)).collect();
    let r = rank(rows.clone(), ring.field());
    let mut with_g = rows;
    with_g.push(coords(g, &basis));
    rank(with_g, ring.field()) == r
}

/// Basis of `(gens : h)_s` as polynomials.
pub fn colon_in_degree(ring: &Ring, gens: &[Polynomial], h: &Polynomial, s: i64) -> Vec<Polynomial> {
    let field = ring.field();
    let dh = h.homogeneous_degree().unwrap() as i64;
    let src = monomials_of_degree(ring.nvars(), s);
    let tgt = monomials_of_degree(ring.nvars(), s + dh);
    // g·h ∈ I  <=>  g·h vanishes in S/I; use a complement basis of I_{s+dh}
    let ired = row_reduce(ideal_in_degree(ring, gens, s + dh).iter().map(|g| coords(g, &tgt)).collect(), field);
    let pivots: Vec<usize> = ired.iter().map(|r| r.iter().position(|v| *v != 0).unwrap()).collect();
    // reduce each image modulo the ideal rows and keep the non-pivot coordinates
    let images: Vec<Vec<u32>> = src
        .iter()
        .map(|m| {
            let mut v = coords(&h.mul_monomial(m).unwrap(), &tgt);
            for (r, &pc) in ired.iter().zip(&pivots) {
                let c = v[pc];
                if c != 0 {
                    for j in 0..v.len() {
                        v[j] = field.sub(v[j], field.mul(c, r[j]));
                    }
                }
            }
            v
        })
        .collect();
    // matrix with one column per source monomial
    let rows: Vec<Vec<u32>> = (0..tgt.len()).map(|j| images.iter().map(|img| img[j]).collect()).collect();
    kernel(rows, src.len(), field)
        .into_iter()
        .map(|v| {
            Polynomial::from_terms(ring, src.iter().zip(&v).filter(|(_, c)| **c != 0).map(|(m, c)| (m.clone(), *c)))
        })
        .collect()
}

/// `M_q(I)`: least degree `s` where `(m^[q] : I)_s` has an element outside
/// `m^[q]`, found from the linear system over monomials outside `m^[q]`.
pub fn m_q_oracle(ring: &Ring, gens: &[Polynomial], q: u64) -> i64 {
    let n1 = ring.nvars() as i64;
    let field = ring.field();
    for s in 0..=n1 * (q as i64 - 1) {
        let src: Vec<Monomial> =
            monomials_of_degree(ring.nvars(), s).into_iter().filter(|m| !m.in_bracket_power(q)).collect();
        let mut rows: Vec<Vec<u32>> = Vec::new();
        for h in gens {
            let dh = h.homogeneous_degree().unwrap() as i64;
            let tgt: Vec<Monomial> =
                monomials_of_degree(ring.nvars(), s + dh).into_iter().filter(|m| !m.in_bracket_power(q)).collect();
            for t in &tgt {
                rows.push(src.iter().map(|m| h.mul_monomial(m).unwrap().coefficient(t)).collect());
            }
        }
        let r = if rows.is_empty() { 0 } else { rank(rows, field) };
        if r < src.len() {
            return s;
        }
    }
    panic!("socle element not found")
}

/// Castelnuovo-Mumford regularity of `S/I` for m-primary `I`.
pub fn regularity_oracle(ring: &Ring, gens: &[Polynomial]) -> i64 {
    let mut s = 0i64;
    let mut last_nonzero = -1;
    loop {
        let full = monomials_of_degree(ring.nvars(), s).len();
        if ideal_dim(ring, gens, s) < full {
            last_nonzero = s;
        } else if s > gens.iter().map(|g| g.homogeneous_degree().unwrap() as i64).max().unwrap_or(0) {
            // generated in lower degrees, so every later degree is full too
            return last_nonzero;
        }
        s += 1;
    }
}

pub fn var_names(nvars: usize) -> Vec<String> {
    ["x", "y", "z", "w"][..nvars].iter().map(|s| s.to_string()).collect()
}

pub fn random_form(rng: &mut StdRng, ring: &Ring, degree: i64, max_terms: usize) -> Polynomial {
    let p = ring.characteristic();
    let monos = monomials_of_degree(ring.nvars(), degree);
    let k = rng.gen_range(1..=max_terms.min(monos.len()));
    let terms: Vec<(Monomial, u32)> =
        (0..k).map(|_| (monos[rng.gen_range(0..monos.len())].clone(), rng.gen_range(1..p))).collect();
    let f = Polynomial::from_terms(ring, terms);
    if f.is_zero() {
        Polynomial::monomial(ring, monos[0].clone(), 1)
    } else {
        f
    }
}

pub fn random_prime(rng: &mut StdRng) -> u64 {
    [2, 3, 5][rng.gen_range(0..3)]
}

/// An m-primary ideal: a power of each variable (possibly perturbed) plus
/// random extra forms.
pub fn random_m_primary(rng: &mut StdRng, ring: &Ring, max_deg: i64) -> Vec<Polynomial> {
    let nv = ring.nvars();
    let mut gens = Vec::new();
    for i in 0..nv {
        let e = rng.gen_range(1..=max_deg);
        let mut exps = vec![0u32; nv];
        exps[i] = e as u32;
        let lead = Polynomial::monomial(ring, Monomial::from_exponents(exps).unwrap(), 1);
        gens.push(lead);
    }
    for _ in 0..rng.gen_range(0..=2) {
        let d = rng.gen_range(1..=max_deg);
        gens.push(random_form(rng, ring, d, 3));
    }
    gens
}
