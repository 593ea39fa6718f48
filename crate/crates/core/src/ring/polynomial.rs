use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::monomial::{Monomial, MAX_EXPONENT};
use super::Ring;
use crate::error::{Error, Result};

/// Sparse polynomial over a prime field.
///
/// Terms are kept in strictly descending graded reverse lexicographic order
/// with nonzero coefficients in `[0, p)`, so structural equality is
/// polynomial equality.
#[derive(Clone)]
pub struct Polynomial {
    ring: Ring,
    terms: Vec<(Monomial, u32)>,
}

impl Polynomial {
    pub fn zero(ring: &Ring) -> Self {
        Polynomial { ring: ring.clone(), terms: Vec::new() }
    }

    pub fn one(ring: &Ring) -> Self {
        Self::constant(ring, 1)
    }

    pub fn constant(ring: &Ring, c: i64) -> Self {
        let c = ring.field().from_i64(c);
        Self::monomial(ring, Monomial::one(ring.nvars()), c)
    }

    pub fn monomial(ring: &Ring, mono: Monomial, coeff: u32) -> Self {
        debug_assert_eq!(mono.nvars(), ring.nvars());
        let c = ring.field().reduce(coeff as u64);
        let terms = if c == 0 { Vec::new() } else { vec![(mono, c)] };
        Polynomial { ring: ring.clone(), terms }
    }

    /// Builds the canonical form from arbitrary `(monomial, coefficient)`
    /// pairs; duplicates are combined and zeros dropped.
    pub fn from_terms<I>(ring: &Ring, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, u32)>,
    {
        let field = ring.field();
        let mut acc: BTreeMap<Monomial, u32> = BTreeMap::new();
        for (m, c) in terms {
            let c = field.reduce(c as u64);
            let e = acc.entry(m).or_insert(0);
            *e = field.add(*e, c);
        }
        let terms = acc.into_iter().rev().filter(|(_, c)| *c != 0).collect();
        Polynomial { ring: ring.clone(), terms }
    }

    /// Wraps terms that are already canonical (strictly descending, nonzero).
    pub(crate) fn from_sorted_terms(ring: &Ring, terms: Vec<(Monomial, u32)>) -> Self {
        debug_assert!(terms.windows(2).all(|w| w[0].0 > w[1].0));
        debug_assert!(terms.iter().all(|(_, c)| *c != 0));
        Polynomial { ring: ring.clone(), terms }
    }

    #[inline]
    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    #[inline]
    pub fn terms(&self) -> &[(Monomial, u32)] {
        &self.terms
    }

    pub(crate) fn terms_vec(&self) -> &Vec<(Monomial, u32)> {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, u32)> {
        self.terms
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading_term(&self) -> Option<&(Monomial, u32)> {
        self.terms.first()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|(m, _)| m)
    }

    /// Coefficient of `mono` (zero if absent).
    pub fn coefficient(&self, mono: &Monomial) -> u32 {
        self.terms.binary_search_by(|(m, _)| mono.cmp(m)).map(|i| self.terms[i].1).unwrap_or(0)
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u64> {
        // grevlex is degree-compatible, so the leading term has top degree
        self.terms.first().map(|(m, _)| m.degree())
    }

    /// The common degree of all terms, when homogeneous and nonzero.
    pub fn homogeneous_degree(&self) -> Option<u64> {
        let d = self.degree()?;
        if self.terms.iter().all(|(m, _)| m.degree() == d) {
            Some(d)
        } else {
            None
        }
    }

    /// Zero counts as homogeneous.
    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.homogeneous_degree().is_some()
    }

    fn check_ring(&self, other: &Polynomial) -> Result<()> {
        if self.ring == other.ring {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    fn merge(&self, other: &Polynomial, negate_other: bool) -> Polynomial {
        let field = self.ring.field();
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let a = &self.terms;
        let b = &other.terms;
        let conv = |c: u32| if negate_other { field.neg(c) } else { c };
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Less => {
                    out.push((b[j].0.clone(), conv(b[j].1)));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = field.add(a[i].1, conv(b[j].1));
                    if c != 0 {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        out.extend(b[j..].iter().map(|(m, c)| (m.clone(), conv(*c))));
        Polynomial { ring: self.ring.clone(), terms: out }
    }

    pub fn try_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        Ok(self.merge(other, false))
    }

    pub fn try_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        Ok(self.merge(other, true))
    }

    fn max_exponents(&self) -> Vec<u64> {
        let mut out = vec![0u64; self.ring.nvars()];
        for (m, _) in &self.terms {
            for (o, &e) in out.iter_mut().zip(m.exponents()) {
                *o = (*o).max(e as u64);
            }
        }
        out
    }

    pub fn try_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Polynomial::zero(&self.ring));
        }
        let (ma, mb) = (self.max_exponents(), other.max_exponents());
        if ma.iter().zip(&mb).any(|(a, b)| a + b > MAX_EXPONENT) {
            return Err(Error::ExponentOverflow);
        }
        Ok(self.mul_unchecked(other))
    }

    fn mul_unchecked(&self, other: &Polynomial) -> Polynomial {
        let field = self.ring.field();
        let p = field.characteristic() as u64;
        // accumulate unreduced products; reduce when the sum nears overflow
        let mut acc: HashMap<Monomial, u64> = HashMap::with_capacity(self.terms.len() * other.terms.len());
        let limit = u64::MAX - p * p;
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let e = acc.entry(ma.mul_unchecked(mb)).or_insert(0);
                *e += *ca as u64 * *cb as u64;
                if *e >= limit {
                    *e %= p;
                }
            }
        }
        let mut terms: Vec<(Monomial, u32)> = acc
            .into_iter()
            .filter_map(|(m, c)| {
                let c = (c % p) as u32;
                (c != 0).then_some((m, c))
            })
            .collect();
        terms.sort_unstable_by(|a, b| b.0.cmp(&a.0));
        Polynomial { ring: self.ring.clone(), terms }
    }

    pub fn scale(&self, c: u32) -> Polynomial {
        let field = self.ring.field();
        let c = field.reduce(c as u64);
        if c == 0 {
            return Polynomial::zero(&self.ring);
        }
        let terms = self.terms.iter().map(|(m, a)| (m.clone(), field.mul(*a, c))).collect();
        Polynomial { ring: self.ring.clone(), terms }
    }

    pub fn mul_monomial(&self, mono: &Monomial) -> Result<Polynomial> {
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            terms.push((m.checked_mul(mono)?, *c));
        }
        Ok(Polynomial { ring: self.ring.clone(), terms })
    }

    /// Scales so that the leading coefficient is one. Zero stays zero.
    pub fn monic(&self) -> Polynomial {
        match self.terms.first() {
            None => self.clone(),
            Some((_, lc)) => self.scale(self.ring.field().inv(*lc)),
        }
    }

    /// The Frobenius map `a -> a^p`: every monomial is raised to the p-th
    /// power and coefficients stay fixed, since `c^p = c` in F_p.
    pub fn frobenius(&self) -> Result<Polynomial> {
        let p = self.ring.characteristic() as u64;
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            terms.push((m.checked_pow(p)?, *c));
        }
        // raising to a fixed power is monotone for a monomial order
        Ok(Polynomial { ring: self.ring.clone(), terms })
    }

    /// `self^e`, splitting off powers of p through [`Polynomial::frobenius`].
    pub fn pow(&self, e: u64) -> Result<Polynomial> {
        let p = self.ring.characteristic() as u64;
        if e == 0 {
            return Ok(Polynomial::one(&self.ring));
        }
        if e.is_multiple_of(p) {
            return self.pow(e / p)?.frobenius();
        }
        self.pow_generic(e)
    }

    /// Plain binary exponentiation, no Frobenius shortcut.
    pub fn pow_generic(&self, mut e: u64) -> Result<Polynomial> {
        let mut acc = Polynomial::one(&self.ring);
        if e == 0 {
            return Ok(acc);
        }
        if self.is_zero() {
            return Ok(Polynomial::zero(&self.ring));
        }
        let top = self.max_exponents().into_iter().max().unwrap_or(0);
        if (top as u128) * (e as u128) > MAX_EXPONENT as u128 {
            return Err(Error::ExponentOverflow);
        }
        let mut base = self.clone();
        loop {
            if e & 1 == 1 {
                acc = acc.mul_unchecked(&base);
            }
            e >>= 1;
            if e == 0 {
                break;
            }
            base = base.mul_unchecked(&base);
        }
        Ok(acc)
    }

    /// Formal partial derivative with respect to `x_index`.
    pub fn partial_derivative(&self, index: usize) -> Result<Polynomial> {
        let n = self.ring.nvars();
        if index >= n {
            return Err(Error::VariableIndex { index, nvars: n });
        }
        let field = self.ring.field();
        let mut terms = Vec::new();
        for (m, c) in &self.terms {
            let e = m.exponents()[index];
            if e == 0 {
                continue;
            }
            let c = field.mul(*c, field.reduce(e as u64));
            if c == 0 {
                continue;
            }
            let mut exps = m.exponents().to_vec();
            exps[index] -= 1;
            terms.push((Monomial::from_exponents(exps)?, c));
        }
        // dividing by a common variable keeps the order
        Ok(Polynomial { ring: self.ring.clone(), terms })
    }

    /// Drops every term lying in `m^[q]`; the result is congruent mod `m^[q]`.
    pub fn truncate_bracket(&self, q: u64) -> Polynomial {
        let terms = self.terms.iter().filter(|(m, _)| !m.in_bracket_power(q)).cloned().collect();
        Polynomial { ring: self.ring.clone(), terms }
    }

    /// Membership in the monomial ideal `m^[q] = (x_0^q, ..., x_n^q)`.
    pub fn in_bracket_power(&self, q: u64) -> bool {
        self.terms.iter().all(|(m, _)| m.in_bracket_power(q))
    }

    /// Exact quotient `self / divisor`, or `None` when the division leaves a
    /// remainder.
    pub fn div_exact(&self, divisor: &Polynomial) -> Result<Option<Polynomial>> {
        self.check_ring(divisor)?;
        let (lm, lc) = match divisor.terms.first() {
            None => return Err(Error::InvalidArgument("division by zero polynomial".into())),
            Some(t) => t.clone(),
        };
        let field = self.ring.field();
        let lc_inv = field.inv(lc);
        let mut rem = self.clone();
        let mut quot = Vec::new();
        while let Some((m, c)) = rem.terms.first().cloned() {
            let Some(qm) = m.div(&lm) else {
                return Ok(None);
            };
            let qc = field.mul(c, lc_inv);
            let step = divisor.mul_monomial(&qm)?.scale(qc);
            rem = rem.merge(&step, true);
            quot.push((qm, qc));
        }
        Ok(Some(Polynomial { ring: self.ring.clone(), terms: quot }))
    }
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

impl std::hash::Hash for Polynomial {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.terms.hash(state);
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $try:ident) => {
        impl<'a> $trait<&'a Polynomial> for &'a Polynomial {
            type Output = Polynomial;

            /// Panics when the operands live in different rings or when an
            /// exponent overflows; use the `try_` method to handle those.
            fn $method(self, rhs: &'a Polynomial) -> Polynomial {
                self.$try(rhs).expect(concat!("polynomial ", stringify!($method)))
            }
        }

        impl $trait<Polynomial> for Polynomial {
            type Output = Polynomial;

            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }
    };
}

binop!(Add, add, try_add);
binop!(Sub, sub, try_sub);
binop!(Mul, mul, try_mul);

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        let field = self.ring.field();
        let terms = self.terms.iter().map(|(m, c)| (m.clone(), field.neg(*c))).collect();
        Polynomial { ring: self.ring.clone(), terms }
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        -&self
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let names = self.ring.var_names();
        for (k, (m, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            let mut factors: Vec<String> = Vec::new();
            if *c != 1 || m.is_one() {
                factors.push(c.to_string());
            }
            for (name, &e) in names.iter().zip(m.exponents()) {
                match e {
                    0 => {}
                    1 => factors.push(name.clone()),
                    _ => factors.push(format!("{}^{}", name, e)),
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({})", self)
    }
}
