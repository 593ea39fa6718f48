//! Groebner bases under graded reverse lexicographic order and the ideal
//! operations built on them.

mod buchberger;
mod ideal;

pub use ideal::Ideal;

use buchberger::{Grevlex, Terms};

use crate::error::{Error, Result};
use crate::ring::{Monomial, Polynomial, Ring};

/// Reduced Groebner basis: monic, inter-reduced, sorted ascending by
/// leading monomial. Empty for the zero ideal and `[1]` for the unit ideal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroebnerBasis {
    ring: Ring,
    elements: Vec<Polynomial>,
}

impl GroebnerBasis {
    pub fn compute(ring: &Ring, generators: &[Polynomial]) -> Result<GroebnerBasis> {
        let mut inputs: Vec<Terms> = Vec::with_capacity(generators.len());
        for g in generators {
            if g.ring() != ring {
                return Err(Error::RingMismatch);
            }
            inputs.push(g.terms().to_vec());
        }
        let raw = buchberger::groebner::<Grevlex>(inputs, ring.field());
        let elements = raw.into_iter().map(|t| Polynomial::from_sorted_terms(ring, t)).collect();
        Ok(GroebnerBasis { ring: ring.clone(), elements })
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn elements(&self) -> &[Polynomial] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.elements.len() == 1 && self.elements[0].is_constant()
    }

    pub fn leading_monomials(&self) -> Vec<&Monomial> {
        self.elements.iter().filter_map(|g| g.leading_monomial()).collect()
    }

    /// Unique remainder of `g` modulo the basis.
    pub fn normal_form(&self, g: &Polynomial) -> Result<Polynomial> {
        if g.ring() != &self.ring {
            return Err(Error::RingMismatch);
        }
        let basis: Vec<&Terms> = self.elements.iter().map(terms_ref).collect();
        let r = buchberger::reduce::<Grevlex>(g.terms().to_vec(), &basis, self.ring.field());
        Ok(Polynomial::from_sorted_terms(&self.ring, r))
    }

    pub fn contains(&self, g: &Polynomial) -> Result<bool> {
        Ok(self.normal_form(g)?.is_zero())
    }

    /// Whether `m` lies outside the leading-term ideal.
    pub fn is_standard(&self, m: &Monomial) -> bool {
        !self.elements.iter().any(|g| g.leading_monomial().is_some_and(|lm| lm.divides(m)))
    }
}

// Polynomial stores grevlex-descending terms, which is exactly `Terms`
// for the Grevlex order.
fn terms_ref(p: &Polynomial) -> &Terms {
    p.terms_vec()
}
