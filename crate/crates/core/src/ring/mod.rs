//! Exact arithmetic over prime fields: scalars, monomials, sparse
//! polynomials and the polynomial text format.

mod field;
mod monomial;
mod parse;
mod polynomial;

use std::fmt;
use std::sync::Arc;

pub use field::PrimeField;
pub use monomial::{grevlex_cmp, monomials_of_degree, monomials_outside_bracket, Monomial, MAX_EXPONENT};
pub use polynomial::Polynomial;

use crate::error::{Error, Result};

/// Polynomial ring `F_p[x_0, ..., x_n]` with named variables.
///
/// Cheap to clone; two descriptors compare equal when the characteristic and
/// the variable names agree.
#[derive(Clone)]
pub struct Ring(Arc<RingData>);

#[derive(PartialEq, Eq)]
struct RingData {
    field: PrimeField,
    vars: Vec<String>,
}

impl Ring {
    pub fn new<S: AsRef<str>>(p: u64, vars: &[S]) -> Result<Ring> {
        let field = PrimeField::new(p)?;
        let names: Vec<String> = vars.iter().map(|s| s.as_ref().to_string()).collect();
        if names.is_empty() {
            return Err(Error::InvalidVariables("at least one variable is required".into()));
        }
        for (i, name) in names.iter().enumerate() {
            let mut chars = name.chars();
            let ok_start = chars.next().is_some_and(|c| c.is_ascii_alphabetic());
            if !ok_start || !chars.all(|c| c.is_ascii_alphanumeric() || c == '_') {
                return Err(Error::InvalidVariables(format!("'{}' is not a valid variable name", name)));
            }
            if names[..i].contains(name) {
                return Err(Error::InvalidVariables(format!("'{}' is declared twice", name)));
            }
        }
        Ok(Ring(Arc::new(RingData { field, vars: names })))
    }

    #[inline]
    pub fn field(&self) -> PrimeField {
        self.0.field
    }

    #[inline]
    pub fn characteristic(&self) -> u32 {
        self.0.field.characteristic()
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.0.vars.len()
    }

    pub fn var_names(&self) -> &[String] {
        &self.0.vars
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.0.vars.iter().position(|v| v == name)
    }

    /// The variable `x_i` as a polynomial.
    pub fn var(&self, index: usize) -> Result<Polynomial> {
        if index >= self.nvars() {
            return Err(Error::VariableIndex { index, nvars: self.nvars() });
        }
        Ok(Polynomial::monomial(self, Monomial::var(self.nvars(), index), 1))
    }

    /// All variables `x_0, ..., x_n`.
    pub fn vars(&self) -> Vec<Polynomial> {
        (0..self.nvars()).map(|i| Polynomial::monomial(self, Monomial::var(self.nvars(), i), 1)).collect()
    }

    pub fn parse(&self, text: &str) -> Result<Polynomial> {
        parse::parse_polynomial(text, self).map_err(Error::from)
    }

    pub fn monomials_of_degree(&self, s: i64) -> Vec<Monomial> {
        monomials_of_degree(self.nvars(), s)
    }

    /// `(x_0 ... x_n)^e`.
    pub fn corner_monomial(&self, e: u64) -> Result<Monomial> {
        if e > MAX_EXPONENT {
            return Err(Error::ExponentOverflow);
        }
        Monomial::from_exponents(vec![e as u32; self.nvars()])
    }
}

impl PartialEq for Ring {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}

impl Eq for Ring {}

impl fmt::Debug for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}[{}]", self.characteristic(), self.0.vars.join(", "))
    }
}

/// Parses `text` in `ring`.
pub fn parse_polynomial(text: &str, ring: &Ring) -> Result<Polynomial> {
    ring.parse(text)
}
