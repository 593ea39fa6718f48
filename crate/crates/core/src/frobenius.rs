//! Characteristic-p ideal operations: Frobenius powers, Frobenius roots,
//! the ideal τ of a complete intersection and F-purity at the maximal ideal.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::groebner::Ideal;
use crate::invariants;
use crate::ring::{Monomial, Polynomial, Ring};

/// Checks that `q` is a power of the characteristic (including `p^0 = 1`)
/// and small enough to be used as an exponent.
pub fn check_power_of_p(ring: &Ring, q: u64) -> Result<u32> {
    let e = ring.field().log_p(q)?;
    if q > crate::ring::MAX_EXPONENT {
        return Err(Error::ExponentOverflow);
    }
    Ok(e)
}

/// `I^[q] = (g^q | g in gens(I))` for `q` a power of `p`.
pub fn bracket_power(ideal: &Ideal, q: u64) -> Result<Ideal> {
    let ring = ideal.ring();
    let e = check_power_of_p(ring, q)?;
    let mut gens = Vec::with_capacity(ideal.generators().len());
    for g in ideal.generators() {
        let mut h = g.clone();
        for _ in 0..e {
            h = h.frobenius()?;
        }
        gens.push(h);
    }
    Ideal::new(ring, gens)
}

/// Smallest ideal `K` with `h ∈ K^[p]`.
///
/// Write `h = Σ_ε g_ε^p x^ε` with `ε ∈ {0..p-1}^{n+1}`: terms are grouped by
/// their exponent vector mod p and the quotient exponents form `g_ε`
/// (p-th roots of coefficients are trivial over F_p). The root is `(g_ε)`.
pub fn frobenius_root_principal(h: &Polynomial) -> Result<Ideal> {
    let ring = h.ring();
    let p = ring.characteristic();
    let mut groups: BTreeMap<Vec<u32>, Vec<(Monomial, u32)>> = BTreeMap::new();
    for (m, c) in h.terms() {
        let residue: Vec<u32> = m.exponents().iter().map(|e| e % p).collect();
        let quotient: Vec<u32> = m.exponents().iter().map(|e| e / p).collect();
        groups.entry(residue).or_default().push((Monomial::from_exponents(quotient)?, *c));
    }
    // keyed by residue, so the generator order is deterministic
    let gens = groups.into_values().map(|terms| Polynomial::from_terms(ring, terms)).collect();
    Ideal::new(ring, gens)
}

/// Root of a general ideal: the sum of the roots of its generators.
/// Auxiliary; τ only needs [`frobenius_root_principal`].
pub fn frobenius_root(ideal: &Ideal) -> Result<Ideal> {
    let mut acc = Ideal::zero(ideal.ring());
    for g in ideal.generators() {
        acc = acc.sum(&frobenius_root_principal(g)?)?;
    }
    Ok(acc)
}

/// Graded complete intersection `R = S/(f_1, ..., f_c)`.
#[derive(Clone)]
pub struct CompleteIntersection {
    ring: Ring,
    forms: Vec<Polynomial>,
    degrees: Vec<u64>,
    product: Polynomial,
    frobenius_multiplier: Polynomial,
    ideal: Ideal,
}

impl CompleteIntersection {
    /// Validates the forms: `1 <= c <= n+1`, each homogeneous of positive
    /// degree, and together a regular sequence.
    pub fn new(ring: &Ring, forms: Vec<Polynomial>) -> Result<Self> {
        let nvars = ring.nvars();
        let c = forms.len();
        if c == 0 || c > nvars {
            return Err(Error::InvalidCompleteIntersection(format!("need between 1 and {} forms, got {}", nvars, c)));
        }
        let mut degrees = Vec::with_capacity(c);
        for (j, f) in forms.iter().enumerate() {
            if f.ring() != ring {
                return Err(Error::RingMismatch);
            }
            if f.is_zero() {
                return Err(Error::InvalidCompleteIntersection(format!("form {} is zero", j + 1)));
            }
            match f.homogeneous_degree() {
                Some(0) => return Err(Error::InvalidCompleteIntersection(format!("form {} is a constant", j + 1))),
                Some(d) => degrees.push(d),
                None => return Err(Error::NotHomogeneous),
            }
        }
        let ideal = Ideal::new(ring, forms.clone())?;
        check_regular_sequence(&ideal, &degrees)?;
        let mut product = Polynomial::one(ring);
        for f in &forms {
            product = product.try_mul(f)?;
        }
        let frobenius_multiplier = product.pow(ring.characteristic() as u64 - 1)?;
        Ok(CompleteIntersection { ring: ring.clone(), forms, degrees, product, frobenius_multiplier, ideal })
    }

    pub fn parse<S: AsRef<str>>(ring: &Ring, forms: &[S]) -> Result<Self> {
        let polys = forms.iter().map(|s| ring.parse(s.as_ref())).collect::<Result<Vec<_>>>()?;
        CompleteIntersection::new(ring, polys)
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn characteristic(&self) -> u32 {
        self.ring.characteristic()
    }

    pub fn forms(&self) -> &[Polynomial] {
        &self.forms
    }

    pub fn degrees(&self) -> &[u64] {
        &self.degrees
    }

    /// Number of variables, `n + 1`.
    pub fn nvars(&self) -> usize {
        self.ring.nvars()
    }

    /// `n`, the projective dimension of the ambient space.
    pub fn n(&self) -> usize {
        self.ring.nvars() - 1
    }

    /// Codimension `c`.
    pub fn codim(&self) -> usize {
        self.forms.len()
    }

    /// `d = Σ deg f_j`.
    pub fn total_degree(&self) -> u64 {
        self.degrees.iter().sum()
    }

    /// `f = f_1 ... f_c`.
    pub fn product(&self) -> &Polynomial {
        &self.product
    }

    /// `f^{p-1}`, the multiplier of the Frobenius action on the top local
    /// cohomology.
    pub fn frobenius_multiplier(&self) -> &Polynomial {
        &self.frobenius_multiplier
    }

    /// `J = (f_1, ..., f_c)`.
    pub fn ideal(&self) -> &Ideal {
        &self.ideal
    }
}

impl fmt::Debug for CompleteIntersection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CompleteIntersection({:?}, {})", self.ring, self.ideal)
    }
}

/// Hilbert function comparison through degree `Σ d_j` plus the exact height
/// test `dim S/J = n + 1 - c`.
fn check_regular_sequence(ideal: &Ideal, degrees: &[u64]) -> Result<()> {
    let nvars = ideal.ring().nvars();
    let top: u64 = degrees.iter().sum();
    let expected = invariants::ci_hilbert_function(degrees, nvars, top as usize);
    for (s, want) in expected.iter().enumerate() {
        let got = ideal.hilbert_function(s as i64);
        if got as i64 != *want {
            return Err(Error::NotRegularSequence(format!(
                "dim (S/J)_{} = {} but a complete intersection of these degrees has {}",
                s, got, want
            )));
        }
    }
    let dim = ideal.krull_dimension().unwrap_or(0);
    let expected_dim = nvars - degrees.len();
    if ideal.is_unit() || dim != expected_dim {
        return Err(Error::NotRegularSequence(format!(
            "dim S/J = {} but a complete intersection has dimension {}",
            dim, expected_dim
        )));
    }
    Ok(())
}

/// Where `R` fails to be F-pure, as read off τ.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TauClass {
    /// τ = S.
    EverywhereFPure,
    /// τ proper and m-primary.
    IsolatedNonFPurePoint,
    /// τ has positive-dimensional zero locus.
    NonFPureLocusPositiveDimensional,
}

impl fmt::Display for TauClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TauClass::EverywhereFPure => "everywhere F-pure",
            TauClass::IsolatedNonFPurePoint => "isolated non-F-pure point",
            TauClass::NonFPureLocusPositiveDimensional => "positive-dimensional non-F-pure locus",
        })
    }
}

/// τ and the data derived from it.
#[derive(Debug, Clone)]
pub struct TauResult {
    /// Generated by its reduced Groebner basis.
    pub tau: Ideal,
    pub is_unit: bool,
    pub is_m_primary: bool,
    /// `max{s | m^s ⊄ τ}`, present iff τ is proper and m-primary.
    pub ell: Option<i64>,
}

impl TauResult {
    pub fn classify(&self) -> TauClass {
        if self.is_unit {
            TauClass::EverywhereFPure
        } else if self.is_m_primary {
            TauClass::IsolatedNonFPurePoint
        } else {
            TauClass::NonFPureLocusPositiveDimensional
        }
    }
}

/// τ = J + root(f^{p-1}): the smallest ideal containing J with
/// `f^{p-1} ∈ τ^[p]`.
pub fn compute_tau(ci: &CompleteIntersection) -> Result<TauResult> {
    let root = frobenius_root_principal(ci.frobenius_multiplier())?;
    let tau = ci.ideal().sum(&root)?.reduced();

    if !tau.contains_ideal(ci.ideal())? {
        return Err(Error::Internal("J is not contained in tau".into()));
    }
    let p = ci.characteristic() as u64;
    if !bracket_power(&tau, p)?.contains(ci.frobenius_multiplier())? {
        return Err(Error::Internal("f^(p-1) is not in tau^[p]".into()));
    }

    let is_unit = tau.is_unit();
    let is_m_primary = !is_unit && tau.is_zero_dimensional()?;
    let ell = if is_m_primary { Some(invariants::least_power_contained(&tau)? - 1) } else { None };
    Ok(TauResult { tau, is_unit, is_m_primary, ell })
}

/// Fedder's criterion at m: `R` is F-pure at the maximal ideal iff
/// `f^{p-1} ∉ m^[p]`. Since `m^[p]` is monomial this is a per-term check.
pub fn fedder_test_at_m(ci: &CompleteIntersection) -> bool {
    !ci.frobenius_multiplier().in_bracket_power(ci.characteristic() as u64)
}

pub fn isolated_non_f_pure_test(ci: &CompleteIntersection) -> Result<TauClass> {
    Ok(compute_tau(ci)?.classify())
}
