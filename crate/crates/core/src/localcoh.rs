//! Classes in the top local cohomology `H^{n+1-c}_m(R)` of a complete
//! intersection and the Frobenius action on them.
//!
//! The module is identified with the annihilator of `J` inside
//! `H^{n+1}_m(S)[-d]`. A class is written `[g / (x_0...x_n)^q]` with
//! `g ∈ (m^[q] : J)` homogeneous; it has degree `deg g - (n+1)q + d` and is
//! zero exactly when `g ∈ m^[q]`. Frobenius acts by
//! `[g / x^q] -> [f^{p-1} g^p / x^{pq}]`.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::frobenius::{check_power_of_p, CompleteIntersection, TauResult};
use crate::groebner::Ideal;
use crate::invariants::{self, a_invariant};
use crate::limits::Limits;
use crate::linalg::{Echelon, SparseRow};
use crate::ring::{monomials_outside_bracket, Monomial, Polynomial, MAX_EXPONENT};

/// A local cohomology class `[g / x^q]` of a fixed complete intersection.
#[derive(Clone)]
pub struct CohClass<'a> {
    ci: &'a CompleteIntersection,
    numerator: Polynomial,
    q: u64,
    degree: i64,
}

/// Serialized form of a class.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassRecord {
    pub numerator: String,
    pub q: u64,
    pub degree: i64,
}

fn class_degree(ci: &CompleteIntersection, deg_g: u64, q: u64) -> i64 {
    deg_g as i64 - ci.nvars() as i64 * q as i64 + ci.total_degree() as i64
}

impl<'a> CohClass<'a> {
    /// Validates `g ∈ (m^[q] : J)` and computes the degree.
    pub fn new(ci: &'a CompleteIntersection, g: Polynomial, q: u64) -> Result<Self> {
        if g.ring() != ci.ring() {
            return Err(Error::RingMismatch);
        }
        check_power_of_p(ci.ring(), q)?;
        let deg = match g.homogeneous_degree() {
            Some(d) => d,
            None if g.is_zero() => {
                return Err(Error::InvalidArgument("the zero numerator has no degree".into()));
            }
            None => return Err(Error::NotHomogeneous),
        };
        for (j, f) in ci.forms().iter().enumerate() {
            if !f.try_mul(&g)?.in_bracket_power(q) {
                return Err(Error::AnnihilationFailure { form: j + 1, q });
            }
        }
        Ok(CohClass { ci, degree: class_degree(ci, deg, q), numerator: g, q })
    }

    pub fn complete_intersection(&self) -> &'a CompleteIntersection {
        self.ci
    }

    pub fn numerator(&self) -> &Polynomial {
        &self.numerator
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn degree(&self) -> i64 {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.in_bracket_power(self.q)
    }

    /// Same class over the denominator `x^{q'}`: the numerator is multiplied
    /// by `(x_0...x_n)^{q'-q}`.
    pub fn rescale(&self, q_new: u64) -> Result<CohClass<'a>> {
        check_power_of_p(self.ci.ring(), q_new)?;
        if q_new < self.q {
            return Err(Error::InvalidArgument(format!("cannot rescale from q = {} down to {}", self.q, q_new)));
        }
        let corner = self.ci.ring().corner_monomial(q_new - self.q)?;
        Ok(CohClass { ci: self.ci, numerator: self.numerator.mul_monomial(&corner)?, q: q_new, degree: self.degree })
    }

    /// Equality in local cohomology, comparing over a common denominator.
    pub fn equals(&self, other: &CohClass<'_>) -> Result<bool> {
        if self.ci.ring() != other.ci.ring() {
            return Err(Error::RingMismatch);
        }
        if self.degree != other.degree {
            return Ok(self.is_zero() && other.is_zero());
        }
        let q = self.q.max(other.q);
        let a = self.rescale(q)?;
        let b = other.rescale(q)?;
        Ok(a.numerator.try_sub(&b.numerator)?.in_bracket_power(q))
    }

    /// `[g / x^q] -> [f^{p-1} g^p / x^{pq}]`. The numerator is stored modulo
    /// `m^[pq]`; the degree is `p` times the source degree.
    pub fn frobenius(&self) -> Result<CohClass<'a>> {
        let p = self.ci.characteristic() as u64;
        let q_new = self.q.checked_mul(p).filter(|&v| v <= MAX_EXPONENT).ok_or(Error::ExponentOverflow)?;
        let full = self.ci.frobenius_multiplier().try_mul(&self.numerator.frobenius()?)?;
        let degree = match full.homogeneous_degree() {
            Some(dg) => class_degree(self.ci, dg, q_new),
            None if full.is_zero() => p as i64 * self.degree,
            None => return Err(Error::Internal("Frobenius image is not homogeneous".into())),
        };
        if degree != p as i64 * self.degree {
            return Err(Error::Internal(format!("Frobenius image has degree {} not p * {}", degree, self.degree)));
        }
        Ok(CohClass { ci: self.ci, numerator: full.truncate_bracket(q_new), q: q_new, degree })
    }

    /// Whether `g·h ∈ m^[q]` for every generator `h` of `ideal`, i.e. `g ∈ (m^[q] : ideal)`.
    pub fn numerator_in_colon(&self, ideal: &Ideal) -> Result<bool> {
        for h in ideal.generators() {
            if !self.numerator.try_mul(h)?.in_bracket_power(self.q) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn record(&self) -> ClassRecord {
        ClassRecord { numerator: self.numerator.to_string(), q: self.q, degree: self.degree }
    }
}

impl fmt::Debug for CohClass<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[({}) / x^{}] (degree {})", self.numerator, self.q, self.degree)
    }
}

/// Class `[g / x^q]` with `g` a lowest-degree element of
/// `(m^[q] : τ) \ m^[q]`, stripped of its terms inside `m^[q]`. Its Frobenius
/// image vanishes; its degree is `M_q(τ) - (n+1)q + d`.
pub fn witness_at_q<'a>(ci: &'a CompleteIntersection, tau: &Ideal, q: u64) -> Result<CohClass<'a>> {
    check_power_of_p(ci.ring(), q)?;
    if tau.is_unit() {
        return Err(Error::UnitIdeal("no Frobenius kernel when tau = S"));
    }
    let colon = Ideal::bracket_maximal(ci.ring(), q)?.colon(tau)?;
    let g = colon
        .generators()
        .iter()
        .filter(|g| !g.in_bracket_power(q))
        .min_by_key(|g| g.degree())
        .ok_or_else(|| Error::Internal("(m^[q] : tau) = m^[q]".into()))?
        .truncate_bracket(q);
    CohClass::new(ci, g, q)
}

/// Nonzero class of degree `a(R) - ℓ` killed by Frobenius, using the first
/// `q` at which `M_q(τ)` has stabilized. Every guarantee is re-verified.
pub fn kernel_witness<'a>(ci: &'a CompleteIntersection, tau: &TauResult, limits: &Limits) -> Result<CohClass<'a>> {
    if tau.is_unit {
        return Err(Error::UnitIdeal("no Frobenius kernel when tau = S"));
    }
    if !tau.is_m_primary {
        return Err(Error::NotMPrimary);
    }
    let q = invariants::stable_q(&tau.tau, limits)?;
    let alpha = witness_at_q(ci, &tau.tau, q)?;
    let ell = tau.ell.ok_or_else(|| Error::Internal("m-primary tau without ell".into()))?;
    if alpha.is_zero() {
        return Err(Error::Internal("witness class is zero".into()));
    }
    if alpha.degree() != a_invariant(ci) - ell {
        return Err(Error::Internal(format!(
            "witness has degree {}, expected {}",
            alpha.degree(),
            a_invariant(ci) - ell
        )));
    }
    if !alpha.frobenius()?.is_zero() {
        return Err(Error::Internal("witness is not killed by Frobenius".into()));
    }
    Ok(alpha)
}

/// Basis of the graded piece `T_t = H^{n+1-c}_m(R)_t`, as coefficient vectors
/// over the monomials of degree `s = t - d + (n+1)q` outside `m^[q]`.
#[derive(Debug, Clone)]
pub struct GradedPieceBasis {
    pub degree: i64,
    pub q: u64,
    pub coordinates: Vec<Monomial>,
    pub basis: Vec<Vec<u32>>,
}

impl GradedPieceBasis {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Degree of the numerators.
    pub fn numerator_degree(&self) -> i64 {
        self.coordinates.first().map_or(-1, |m| m.degree() as i64)
    }

    pub fn vector_to_polynomial(&self, ci: &CompleteIntersection, v: &[u32]) -> Polynomial {
        Polynomial::from_terms(
            ci.ring(),
            self.coordinates.iter().zip(v).filter(|(_, c)| **c != 0).map(|(m, c)| (m.clone(), *c)),
        )
    }

    /// The basis vectors as classes.
    pub fn classes<'a>(&self, ci: &'a CompleteIntersection) -> Result<Vec<CohClass<'a>>> {
        self.basis.iter().map(|v| CohClass::new(ci, self.vector_to_polynomial(ci, v), self.q)).collect()
    }
}

/// Smallest power of p that represents every class of degree `t`.
pub fn admissible_q(ci: &CompleteIntersection, t: i64) -> Result<u64> {
    let p = ci.characteristic() as u64;
    let mut q = 1u64;
    while !is_admissible(ci, t, q) {
        q = q.checked_mul(p).filter(|&v| v <= MAX_EXPONENT).ok_or(Error::ExponentOverflow)?;
    }
    Ok(q)
}

fn is_admissible(ci: &CompleteIntersection, t: i64, q: u64) -> bool {
    let d = ci.total_degree() as i64;
    let nvars = ci.nvars() as i64;
    let n = nvars - 1;
    nvars * q as i64 + t - d >= 0 && q as i64 >= d - t - n
}

/// [`graded_piece_basis_at`] with the smallest admissible `q`.
pub fn graded_piece_basis(ci: &CompleteIntersection, t: i64, limits: &Limits) -> Result<GradedPieceBasis> {
    let q = admissible_q(ci, t)?;
    graded_piece_basis_at(ci, t, q, limits)
}

/// Solves `f_j g ≡ 0 mod m^[q]` for all `j` over the monomials of degree
/// `s = t - d + (n+1)q` outside `m^[q]`.
pub fn graded_piece_basis_at(ci: &CompleteIntersection, t: i64, q: u64, limits: &Limits) -> Result<GradedPieceBasis> {
    check_power_of_p(ci.ring(), q)?;
    if !is_admissible(ci, t, q) {
        return Err(Error::InvalidArgument(format!("q = {} cannot represent every class of degree {}", q, t)));
    }
    if q > limits.max_q_for(ci.characteristic()) {
        return Err(Error::ResourceCap(format!("degree {} needs q = {}", t, q)));
    }
    let s = t - ci.total_degree() as i64 + ci.nvars() as i64 * q as i64;
    let coordinates = monomials_outside_bracket(ci.nvars(), s, q);
    if coordinates.len() > limits.max_cols {
        return Err(Error::ResourceCap(format!(
            "degree {} needs {} coordinates (cap {})",
            t,
            coordinates.len(),
            limits.max_cols
        )));
    }
    let field = ci.ring().field();
    // transpose: for each (form, target monomial) constraint, the column entries
    let mut rows: HashMap<(usize, Monomial), SparseRow> = HashMap::new();
    for (col, mono) in coordinates.iter().enumerate() {
        for (j, f) in ci.forms().iter().enumerate() {
            for (m, c) in f.terms() {
                let prod = m.checked_mul(mono)?;
                if !prod.in_bracket_power(q) {
                    rows.entry((j, prod)).or_default().push((col, *c));
                }
            }
        }
    }
    let mut keys: Vec<_> = rows.keys().cloned().collect();
    keys.sort_by(|a, b| a.0.cmp(&b.0).then_with(|| b.1.cmp(&a.1)));
    let mut ech = Echelon::new(field);
    for k in keys {
        let mut row = rows.remove(&k).expect("key present");
        row.sort_by_key(|(c, _)| *c);
        ech.insert(row);
    }
    let basis = ech.kernel_basis(coordinates.len());
    Ok(GradedPieceBasis { degree: t, q, coordinates, basis })
}

/// Dimension of `T_t` and of the kernel of Frobenius on it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct InjectivityResult {
    pub degree: i64,
    pub dim_source: usize,
    pub dim_kernel: usize,
}

impl InjectivityResult {
    pub fn injective(&self) -> bool {
        self.dim_kernel == 0
    }
}

/// Applies Frobenius to a basis of `T_t` and measures the kernel, working in
/// the monomial coordinates of `(S/m^[pq])` in the target degree.
pub fn verify_injectivity(ci: &CompleteIntersection, t: i64, limits: &Limits) -> Result<InjectivityResult> {
    let piece = graded_piece_basis(ci, t, limits)?;
    verify_on_piece(ci, &piece, limits)
}

pub fn verify_on_piece(
    ci: &CompleteIntersection,
    piece: &GradedPieceBasis,
    limits: &Limits,
) -> Result<InjectivityResult> {
    let field = ci.ring().field();
    let mut index: HashMap<Monomial, usize> = HashMap::new();
    let mut ech = Echelon::new(field);
    for alpha in piece.classes(ci)? {
        let image = alpha.frobenius()?;
        let mut row: SparseRow = Vec::with_capacity(image.numerator().len());
        for (m, c) in image.numerator().terms() {
            let next = index.len();
            let col = *index.entry(m.clone()).or_insert(next);
            row.push((col, *c));
        }
        if index.len() > limits.max_cols {
            return Err(Error::ResourceCap(format!(
                "Frobenius images in degree {} span more than {} coordinates",
                piece.degree, limits.max_cols
            )));
        }
        row.sort_by_key(|(c, _)| *c);
        ech.insert(row);
    }
    Ok(InjectivityResult { degree: piece.degree, dim_source: piece.dim(), dim_kernel: piece.dim() - ech.rank() })
}

/// Componentwise-minimal exponent vectors `t ∈ {0..p-1}^c` with
/// `f_1^{t_1} ... f_c^{t_c} g^p ∈ m^[Q]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinimalVectors {
    /// Lexicographically least element of the antichain.
    pub least: Vec<u32>,
    pub antichain: Vec<Vec<u32>>,
}

/// All vectors of `{0..p-1}^c`, lexicographic.
fn exponent_box(p: u32, c: usize) -> Vec<Vec<u32>> {
    let mut out = vec![Vec::new()];
    for _ in 0..c {
        out = out
            .into_iter()
            .flat_map(|v| {
                (0..p).map(move |e| {
                    let mut w = v.clone();
                    w.push(e);
                    w
                })
            })
            .collect();
    }
    out
}

/// Whether `f^t g^p ∈ m^[Q]` for each `t` in the box, keyed like [`exponent_box`].
pub fn feasible_vectors(g: &Polynomial, big_q: u64, ci: &CompleteIntersection) -> Result<Vec<(Vec<u32>, bool)>> {
    let p = ci.characteristic();
    let gp = g.frobenius()?.truncate_bracket(big_q);
    let mut powers: Vec<Vec<Polynomial>> = Vec::with_capacity(ci.codim());
    for f in ci.forms() {
        let mut row = vec![Polynomial::one(ci.ring())];
        for e in 1..p {
            let next = row[e as usize - 1].try_mul(f)?.truncate_bracket(big_q);
            row.push(next);
        }
        powers.push(row);
    }
    let mut out = Vec::new();
    for t in exponent_box(p, ci.codim()) {
        let mut acc = gp.clone();
        for (j, &e) in t.iter().enumerate() {
            if acc.is_zero() {
                break;
            }
            acc = acc.try_mul(&powers[j][e as usize])?.truncate_bracket(big_q);
        }
        out.push((t, acc.is_zero()));
    }
    Ok(out)
}

fn dominated_by(s: &[u32], t: &[u32]) -> bool {
    s != t && s.iter().zip(t).all(|(a, b)| a <= b)
}

pub fn minimal_t_vector(g: &Polynomial, big_q: u64, ci: &CompleteIntersection) -> Result<MinimalVectors> {
    check_power_of_p(ci.ring(), big_q)?;
    let table = feasible_vectors(g, big_q, ci)?;
    let feasible: Vec<&Vec<u32>> = table.iter().filter(|(_, ok)| *ok).map(|(t, _)| t).collect();
    let antichain: Vec<Vec<u32>> =
        feasible.iter().filter(|t| !feasible.iter().any(|s| dominated_by(s, t))).map(|t| (*t).clone()).collect();
    let least = antichain.first().cloned().ok_or(Error::NoFeasibleVector(big_q))?;
    Ok(MinimalVectors { least, antichain })
}

/// Outcome of checking `f^{t'} g^p · Jac(R) ⊆ m^[Q]` with `t' = t - e_1`
/// after moving a form with `t_j > 0` to the front.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JacobianCheck {
    pub holds: bool,
    /// The minimal vector in the original form order.
    pub t: Vec<u32>,
    /// `order[k]` is the original index of the k-th form after reordering.
    pub order: Vec<usize>,
}

pub fn jacobian_annihilation_check(g: &Polynomial, big_q: u64, ci: &CompleteIntersection) -> Result<JacobianCheck> {
    let t = minimal_t_vector(g, big_q, ci)?.least;
    let lead = t
        .iter()
        .position(|&e| e > 0)
        .ok_or_else(|| Error::InvalidArgument("g^p already lies in m^[Q]; the minimal vector is zero".into()))?;
    let mut order = vec![lead];
    order.extend((0..t.len()).filter(|&j| j != lead));
    let mut reduced = t.clone();
    reduced[lead] -= 1;

    let mut h = g.frobenius()?.truncate_bracket(big_q);
    for (f, &e) in ci.forms().iter().zip(&reduced) {
        h = h.try_mul(&f.pow(e as u64)?)?.truncate_bracket(big_q);
    }
    // reordering the forms only changes minors by a sign
    let mut holds = true;
    for delta in invariants::jacobian_minors(ci)? {
        if !h.try_mul(&delta)?.in_bracket_power(big_q) {
            holds = false;
            break;
        }
    }
    Ok(JacobianCheck { holds, t, order })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::frobenius::compute_tau;
    use crate::ring::Ring;

    const QUARTIC: &str = "x^2*y^2 + y^2*z^2 + z^2*x^2";

    fn quartic(p: u64) -> CompleteIntersection {
        let r = Ring::new(p, &["x", "y", "z"]).unwrap();
        CompleteIntersection::parse(&r, &[QUARTIC]).unwrap()
    }

    #[test]
    fn making_classes() {
        let ci = quartic(3);
        let r = ci.ring().clone();
        let a = CohClass::new(&ci, r.parse("x^2*y^2*z^2").unwrap(), 3).unwrap();
        assert_eq!(a.degree(), 1);
        assert!(!a.is_zero());
        assert_eq!(
            CohClass::new(&ci, Polynomial::one(&r), 3).unwrap_err(),
            Error::AnnihilationFailure { form: 1, q: 3 }
        );
        let z = CohClass::new(&ci, r.parse("x^3").unwrap(), 3).unwrap();
        assert!(z.is_zero());
        assert_eq!(CohClass::new(&ci, r.parse("x^3 + y").unwrap(), 3).unwrap_err(), Error::NotHomogeneous);
        assert!(matches!(CohClass::new(&ci, r.parse("x^3").unwrap(), 4), Err(Error::NotPowerOfP { .. })));
    }

    #[test]
    fn rescaling() {
        let ci = quartic(3);
        let r = ci.ring().clone();
        let a = CohClass::new(&ci, r.parse("x^2*y^2*z^2").unwrap(), 3).unwrap();
        let b = a.rescale(9).unwrap();
        assert_eq!(b.numerator(), &r.parse("x^8*y^8*z^8").unwrap());
        assert_eq!(b.degree(), 1);
        assert!(a.equals(&b).unwrap());
        assert!(a.rescale(1).is_err());
    }

    #[test]
    fn frobenius_kills_the_socle_class() {
        let ci = quartic(3);
        let r = ci.ring().clone();
        let a = CohClass::new(&ci, r.parse("x^2*y^2*z^2").unwrap(), 3).unwrap();
        let fa = a.frobenius().unwrap();
        assert_eq!(fa.q(), 9);
        assert_eq!(fa.degree(), 3);
        assert!(fa.is_zero());
    }

    #[test]
    fn witnesses() {
        let ci = quartic(3);
        let tau = compute_tau(&ci).unwrap();
        let w = kernel_witness(&ci, &tau, &Limits::default()).unwrap();
        assert_eq!(w.degree(), 1);
        assert_eq!(w.q(), 3);
        assert_eq!(w.numerator(), &ci.ring().parse("x^2*y^2*z^2").unwrap());

        let r = Ring::new(2, &["x", "y"]).unwrap();
        let ci = CompleteIntersection::parse(&r, &["x^3 + y^3"]).unwrap();
        let tau = compute_tau(&ci).unwrap();
        let w = kernel_witness(&ci, &tau, &Limits::default()).unwrap();
        assert_eq!(w.degree(), 1);
        assert_eq!(w.q(), 2);
        assert_eq!(w.numerator(), &r.parse("x*y").unwrap());
    }

    #[test]
    fn witness_needs_m_primary_tau() {
        let r = Ring::new(3, &["x", "y"]).unwrap();
        let ci = CompleteIntersection::parse(&r, &["x^2*y^2"]).unwrap();
        let tau = compute_tau(&ci).unwrap();
        assert_eq!(kernel_witness(&ci, &tau, &Limits::default()).unwrap_err(), Error::NotMPrimary);
        let ci = CompleteIntersection::parse(&r, &["x*y"]).unwrap();
        let tau = compute_tau(&ci).unwrap();
        assert!(matches!(kernel_witness(&ci, &tau, &Limits::default()), Err(Error::UnitIdeal(_))));
    }

    #[test]
    fn graded_pieces_of_the_quartic() {
        let ci = quartic(3);
        let lim = Limits::default();
        assert_eq!(graded_piece_basis(&ci, 1, &lim).unwrap().dim(), 1);
        assert_eq!(graded_piece_basis(&ci, 2, &lim).unwrap().dim(), 0);
        let r = verify_injectivity(&ci, 1, &lim).unwrap();
        assert_eq!((r.dim_source, r.dim_kernel), (1, 1));
        for t in -3..=0 {
            assert!(verify_injectivity(&ci, t, &lim).unwrap().injective(), "t = {}", t);
        }
        assert!(verify_injectivity(&ci, 5, &lim).unwrap().injective());
    }

    #[test]
    fn piece_dimension_is_independent_of_q() {
        let ci = quartic(3);
        let lim = Limits::default();
        for t in -2..=1 {
            let q0 = admissible_q(&ci, t).unwrap();
            let a = graded_piece_basis_at(&ci, t, q0, &lim).unwrap();
            let b = graded_piece_basis_at(&ci, t, q0 * 3, &lim).unwrap();
            assert_eq!(a.dim(), b.dim(), "t = {}", t);
        }
        assert!(graded_piece_basis_at(&ci, -3, 1, &lim).is_err());
    }

    #[test]
    fn minimal_vectors() {
        let ci = quartic(3);
        let r = ci.ring().clone();
        let g = r.parse("x^2*y^2*z^2").unwrap();
        let mv = minimal_t_vector(&g, 9, &ci).unwrap();
        assert_eq!(mv.least, vec![2]);
        assert_eq!(mv.antichain, vec![vec![2]]);
        let chk = jacobian_annihilation_check(&g, 9, &ci).unwrap();
        assert!(chk.holds);
        assert_eq!(chk.order, vec![0]);

        let g = r.parse("x^3").unwrap();
        assert_eq!(minimal_t_vector(&g, 9, &ci).unwrap().least, vec![0]);
        assert!(jacobian_annihilation_check(&g, 9, &ci).is_err());

        let g = r.parse("x*y*z").unwrap();
        assert_eq!(minimal_t_vector(&g, 9, &ci).unwrap_err(), Error::NoFeasibleVector(9));
    }

    #[test]
    fn resource_caps() {
        let ci = quartic(3);
        let tight = Limits { max_q: None, max_cols: 5 };
        assert!(matches!(graded_piece_basis(&ci, -6, &tight), Err(Error::ResourceCap(_))));
        let low_q = Limits { max_q: Some(3), max_cols: 20_000 };
        assert!(matches!(graded_piece_basis(&ci, -6, &low_q), Err(Error::ResourceCap(_))));
    }
}
