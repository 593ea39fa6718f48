//! Numeric invariants: regularity of Artinian quotients, `M_q`, the
//! a-invariant, Hilbert series of complete intersections, Jacobian minors and
//! the degree bounds for injectivity of Frobenius.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::frobenius::{self, check_power_of_p, CompleteIntersection, TauClass, TauResult};
use crate::groebner::Ideal;
use crate::limits::Limits;
use crate::ring::{Monomial, Polynomial};

fn require_m_primary(ideal: &Ideal) -> Result<()> {
    if ideal.is_unit() {
        return Err(Error::UnitIdeal("S/I must be a nonzero Artinian module"));
    }
    if !ideal.is_zero_dimensional()? {
        return Err(Error::NotZeroDimensional);
    }
    Ok(())
}

/// `reg(S/I)` for m-primary `I`: the top degree of a standard monomial.
pub fn regularity_artinian(ideal: &Ideal) -> Result<i64> {
    require_m_primary(ideal)?;
    let top = ideal.standard_monomials()?.iter().map(Monomial::degree).max().unwrap_or(0);
    Ok(top as i64)
}

/// Whether `m^ell ⊆ I`, i.e. every monomial of degree `ell` reduces to zero.
pub fn power_containment(ideal: &Ideal, ell: u64) -> Result<bool> {
    let gb = ideal.groebner();
    for m in ideal.ring().monomials_of_degree(ell as i64) {
        if gb.is_standard(&m) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Least `ell` with `m^ell ⊆ I`; needs `I` zero-dimensional or the unit ideal.
pub fn least_power_contained(ideal: &Ideal) -> Result<i64> {
    if !ideal.is_unit() && !ideal.is_zero_dimensional()? {
        return Err(Error::NotZeroDimensional);
    }
    let mut s = 0;
    while !power_containment(ideal, s)? {
        s += 1;
    }
    Ok(s as i64)
}

/// `M_q(I) = max{ℓ | (m^[q] : I) ⊆ m^[q] + m^ℓ}`.
///
/// Membership in the monomial ideal `m^[q] + m^ℓ` is decided term by term, so
/// a homogeneous generator of the colon lies in it iff it lies in `m^[q]` or
/// has degree at least `ℓ`. The answer is the least degree of a colon
/// generator with a term outside `m^[q]`.
pub fn m_q(ideal: &Ideal, q: u64) -> Result<i64> {
    let ring = ideal.ring();
    check_power_of_p(ring, q)?;
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    if ideal.is_unit() {
        return Err(Error::UnitIdeal("M_q is defined for proper ideals"));
    }
    let colon = Ideal::bracket_maximal(ring, q)?.colon(ideal)?;
    colon
        .generators()
        .iter()
        .filter(|g| !g.in_bracket_power(q))
        .filter_map(|g| g.degree())
        .min()
        .map(|d| d as i64)
        .ok_or_else(|| Error::Internal("(m^[q] : I) = m^[q] for a proper ideal".into()))
}

/// Whether `(n+1)q - M_q(I) = reg(S/I) + (n+1)` holds at this `q`.
pub fn stabilization_check(ideal: &Ideal, q: u64) -> Result<bool> {
    require_m_primary(ideal)?;
    let nvars = ideal.ring().nvars() as i64;
    let lhs = nvars * q as i64 - m_q(ideal, q)?;
    Ok(lhs == regularity_artinian(ideal)? + nvars)
}

/// First `q = p, p^2, ...` at which [`stabilization_check`] holds, up to the
/// cap in `limits`.
pub fn stable_q(ideal: &Ideal, limits: &Limits) -> Result<u64> {
    let p = ideal.ring().characteristic() as u64;
    let cap = limits.max_q_for(p as u32);
    let mut q = p;
    while q <= cap {
        if stabilization_check(ideal, q)? {
            return Ok(q);
        }
        q = q.checked_mul(p).ok_or(Error::ExponentOverflow)?;
    }
    Err(Error::ResourceCap(format!("M_q did not stabilize for q <= {}", cap)))
}

/// `a(R) = d - (n+1)`.
pub fn a_invariant(ci: &CompleteIntersection) -> i64 {
    ci.total_degree() as i64 - ci.nvars() as i64
}

/// `a(R) - reg(S/τ)`: Frobenius is injective on the top local cohomology
/// strictly below this degree and has a kernel element in this degree.
pub fn injectivity_bound(ci: &CompleteIntersection, tau: &TauResult) -> Result<i64> {
    if tau.is_unit {
        return Err(Error::UnitIdeal("the bound needs a proper tau"));
    }
    if !tau.is_m_primary {
        return Err(Error::NotMPrimary);
    }
    Ok(a_invariant(ci) - regularity_artinian(&tau.tau)?)
}

fn check_codim(n: usize, c: usize, d: u64) -> Result<()> {
    if c < 1 || c > n + 1 {
        return Err(Error::InvalidArgument(format!("codimension {} outside 1..={}", c, n + 1)));
    }
    if d < c as u64 {
        return Err(Error::InvalidArgument(format!("total degree {} below codimension {}", d, c)));
    }
    Ok(())
}

/// `-(n+1-c) d`: below this degree Frobenius is injective whenever τ is m-primary.
pub fn degree_bound(n: usize, c: usize, d: u64) -> Result<i64> {
    check_codim(n, c, d)?;
    Ok(-((n + 1 - c) as i64) * d as i64)
}

/// `(n+1-c)(d-c)`: for isolated singularities and `p` at least this large,
/// Frobenius is injective in negative degrees.
pub fn prime_threshold(n: usize, c: usize, d: u64) -> Result<i64> {
    check_codim(n, c, d)?;
    Ok((n + 1 - c) as i64 * (d as i64 - c as i64))
}

/// Coefficients of `Π(1 - t^{d_j}) / (1 - t)^{nvars}` through degree `upto`.
pub fn ci_hilbert_function(degrees: &[u64], nvars: usize, upto: usize) -> Vec<i64> {
    let mut num = vec![0i64; upto + 1];
    num[0] = 1;
    for &d in degrees {
        let d = d as usize;
        for k in (d..=upto).rev() {
            num[k] -= num[k - d];
        }
    }
    for _ in 0..nvars {
        for k in 1..=upto {
            num[k] += num[k - 1];
        }
    }
    num
}

/// Hilbert series of `S/(φ_1..φ_m, f_1..f_c)` for a regular sequence with
/// `m + c = n + 1`; a polynomial of degree `Σ e_i + Σ d_j - (n+1)`.
pub fn hilbert_series_ci(degrees: &[u64], aux_degrees: &[u64], n: usize) -> Result<Vec<i64>> {
    let nvars = n + 1;
    if degrees.len() + aux_degrees.len() != nvars {
        return Err(Error::InvalidArgument(format!(
            "{} + {} degrees do not cut out a point in {} variables",
            degrees.len(),
            aux_degrees.len(),
            nvars
        )));
    }
    let all: Vec<u64> = degrees.iter().chain(aux_degrees).copied().collect();
    if all.contains(&0) {
        return Err(Error::InvalidArgument("degrees must be positive".into()));
    }
    let top = all.iter().sum::<u64>() as usize - nvars;
    let coeffs = ci_hilbert_function(&all, nvars, top + nvars);
    if coeffs[top + 1..].iter().any(|&c| c != 0) {
        return Err(Error::Internal("Hilbert series is not a polynomial".into()));
    }
    Ok(coeffs[..=top].to_vec())
}

/// `c x c` minors of the Jacobian matrix `(∂f_j/∂x_i)`.
pub fn jacobian_minors(ci: &CompleteIntersection) -> Result<Vec<Polynomial>> {
    let c = ci.codim();
    if c > 4 {
        return Err(Error::InvalidArgument(format!("Jacobian minors are limited to c <= 4, got {}", c)));
    }
    let nvars = ci.nvars();
    let mut jac: Vec<Vec<Polynomial>> = Vec::with_capacity(nvars);
    for i in 0..nvars {
        let row = ci.forms().iter().map(|f| f.partial_derivative(i)).collect::<Result<Vec<_>>>()?;
        jac.push(row);
    }
    let mut minors = Vec::new();
    for rows in combinations(nvars, c) {
        let sub: Vec<Vec<Polynomial>> = rows.iter().map(|&i| jac[i].clone()).collect();
        minors.push(determinant(&sub)?);
    }
    Ok(minors)
}

pub fn jacobian_ideal(ci: &CompleteIntersection) -> Result<Ideal> {
    Ideal::new(ci.ring(), jacobian_minors(ci)?)
}

/// Whether `Jac(R) + J` is m-primary (or the unit ideal).
pub fn isolated_singularity_test(ci: &CompleteIntersection) -> Result<bool> {
    let sing = jacobian_ideal(ci)?.sum(ci.ideal())?;
    if sing.is_unit() {
        return Ok(true);
    }
    sing.is_zero_dimensional()
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    go(0, n, k, &mut cur, &mut out);
    out
}

/// Cofactor expansion along the first row.
fn determinant(m: &[Vec<Polynomial>]) -> Result<Polynomial> {
    let k = m.len();
    if k == 1 {
        return Ok(m[0][0].clone());
    }
    let ring = m[0][0].ring();
    let mut acc = Polynomial::zero(ring);
    for col in 0..k {
        if m[0][col].is_zero() {
            continue;
        }
        let minor: Vec<Vec<Polynomial>> = m[1..]
            .iter()
            .map(|row| row.iter().enumerate().filter(|(j, _)| *j != col).map(|(_, e)| e.clone()).collect())
            .collect();
        let term = m[0][col].try_mul(&determinant(&minor)?)?;
        acc = if col % 2 == 0 { acc.try_add(&term)? } else { acc.try_sub(&term)? };
    }
    Ok(acc)
}

/// All invariants computed for one complete intersection.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub a_invariant: i64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reg_s_mod_tau: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ell: Option<i64>,
    #[serde(rename = "thmA_bound", default, skip_serializing_if = "Option::is_none")]
    pub injectivity_bound: Option<i64>,
    pub cor_bound: i64,
    #[serde(rename = "thmB_threshold")]
    pub prime_threshold: i64,
    pub fpure_at_m: bool,
    pub tau_class: TauClass,
    pub isolated_singularity: bool,
}

/// Computes τ and every invariant of the report; also re-checks the
/// relations that must hold between them.
pub fn analyze(ci: &CompleteIntersection) -> Result<(AnalysisReport, TauResult)> {
    let tau = frobenius::compute_tau(ci)?;
    let fpure_at_m = frobenius::fedder_test_at_m(ci);
    if fpure_at_m != tau.is_unit {
        return Err(Error::Internal("Fedder's test disagrees with tau = S".into()));
    }
    let (n, c, d) = (ci.n(), ci.codim(), ci.total_degree());
    let a = a_invariant(ci);
    let reg = if tau.is_m_primary { Some(regularity_artinian(&tau.tau)?) } else { None };
    if reg != tau.ell {
        return Err(Error::Internal(format!("reg(S/tau) = {:?} but ell = {:?}", reg, tau.ell)));
    }
    let bound = reg.map(|r| a - r);
    let cor_bound = degree_bound(n, c, d)?;
    if let Some(b) = bound {
        if b < cor_bound {
            return Err(Error::Internal(format!("injectivity bound {} below degree bound {}", b, cor_bound)));
        }
    }
    let report = AnalysisReport {
        a_invariant: a,
        reg_s_mod_tau: reg,
        ell: tau.ell,
        injectivity_bound: bound,
        cor_bound,
        prime_threshold: prime_threshold(n, c, d)?,
        fpure_at_m,
        tau_class: tau.classify(),
        isolated_singularity: isolated_singularity_test(ci)?,
    };
    Ok((report, tau))
}
