use std::cmp::Ordering;

use crate::error::{Error, Result};

/// Upper limit for any single exponent.
pub const MAX_EXPONENT: u64 = (1 << 31) - 1;

/// Exponent vector `x_0^{e_0} ... x_n^{e_n}`.
///
/// `Ord` is graded reverse lexicographic with `x_0 > x_1 > ... > x_n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, index: usize) -> Self {
        let mut e = vec![0; nvars];
        e[index] = 1;
        Monomial(e)
    }

    pub fn from_exponents(exponents: Vec<u32>) -> Result<Self> {
        if exponents.iter().any(|&e| e as u64 > MAX_EXPONENT) {
            return Err(Error::ExponentOverflow);
        }
        Ok(Monomial(exponents))
    }

    #[inline]
    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// Product without overflow checks; callers bound exponents beforehand.
    #[inline]
    pub(crate) fn mul_unchecked(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn checked_mul(&self, other: &Monomial) -> Result<Monomial> {
        let mut out = Vec::with_capacity(self.0.len());
        for (a, b) in self.0.iter().zip(&other.0) {
            let s = *a as u64 + *b as u64;
            if s > MAX_EXPONENT {
                return Err(Error::ExponentOverflow);
            }
            out.push(s as u32);
        }
        Ok(Monomial(out))
    }

    pub fn checked_pow(&self, e: u64) -> Result<Monomial> {
        let mut out = Vec::with_capacity(self.0.len());
        for &a in &self.0 {
            let v = (a as u64).checked_mul(e).ok_or(Error::ExponentOverflow)?;
            if v > MAX_EXPONENT {
                return Err(Error::ExponentOverflow);
            }
            out.push(v as u32);
        }
        Ok(Monomial(out))
    }

    #[inline]
    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming `self` divides `other`.
    pub(crate) fn quotient_of(&self, other: &Monomial) -> Monomial {
        Monomial(other.0.iter().zip(&self.0).map(|(b, a)| b - a).collect())
    }

    pub fn div(&self, divisor: &Monomial) -> Option<Monomial> {
        if divisor.divides(self) {
            Some(divisor.quotient_of(self))
        } else {
            None
        }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// True when some exponent is at least `q`, i.e. the monomial lies in `m^[q]`.
    #[inline]
    pub fn in_bracket_power(&self, q: u64) -> bool {
        self.0.iter().any(|&e| e as u64 >= q)
    }

    /// Index of the only variable occurring, if the monomial is a pure power.
    pub fn pure_power_var(&self) -> Option<usize> {
        let mut found = None;
        for (i, &e) in self.0.iter().enumerate() {
            if e > 0 {
                if found.is_some() {
                    return None;
                }
                found = Some(i);
            }
        }
        found
    }

    pub(crate) fn prepend(&self, e: u32) -> Monomial {
        let mut v = Vec::with_capacity(self.0.len() + 1);
        v.push(e);
        v.extend_from_slice(&self.0);
        Monomial(v)
    }

    pub(crate) fn drop_first(&self) -> Monomial {
        Monomial(self.0[1..].to_vec())
    }
}

/// Graded reverse lexicographic comparison on raw exponent slices.
pub fn grevlex_cmp(a: &[u32], b: &[u32]) -> Ordering {
    let da: u64 = a.iter().map(|&e| e as u64).sum();
    let db: u64 = b.iter().map(|&e| e as u64).sum();
    match da.cmp(&db) {
        Ordering::Equal => {}
        ord => return ord,
    }
    for (x, y) in a.iter().rev().zip(b.iter().rev()) {
        if x != y {
            // smaller exponent in the last differing variable wins
            return y.cmp(x);
        }
    }
    Ordering::Equal
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        grevlex_cmp(&self.0, &other.0)
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// All monomials of total degree `s` in `nvars` variables, in descending
/// graded reverse lexicographic order.
pub fn monomials_of_degree(nvars: usize, s: i64) -> Vec<Monomial> {
    let mut out = Vec::new();
    if s < 0 || nvars == 0 {
        if nvars == 0 && s == 0 {
            out.push(Monomial(Vec::new()));
        }
        return out;
    }
    let mut current = vec![0u32; nvars];
    fill(&mut current, 0, s as u32, &mut out);
    out.sort_by(|a, b| b.cmp(a));
    out
}

fn fill(current: &mut Vec<u32>, pos: usize, remaining: u32, out: &mut Vec<Monomial>) {
    if pos + 1 == current.len() {
        current[pos] = remaining;
        out.push(Monomial(current.clone()));
        return;
    }
    for e in (0..=remaining).rev() {
        current[pos] = e;
        fill(current, pos + 1, remaining - e, out);
    }
    current[pos] = 0;
}

/// Monomials of degree `s` with every exponent strictly below `q`,
/// i.e. a basis of `(S/m^[q])_s`. Descending order.
pub fn monomials_outside_bracket(nvars: usize, s: i64, q: u64) -> Vec<Monomial> {
    let mut out = Vec::new();
    if s < 0 || nvars == 0 {
        if nvars == 0 && s == 0 {
            out.push(Monomial(Vec::new()));
        }
        return out;
    }
    if q == 0 {
        return out;
    }
    let cap = (q - 1).min(u32::MAX as u64) as u32;
    let mut current = vec![0u32; nvars];
    fill_capped(&mut current, 0, s as u64, cap, &mut out);
    out.sort_by(|a, b| b.cmp(a));
    out
}

fn fill_capped(current: &mut Vec<u32>, pos: usize, remaining: u64, cap: u32, out: &mut Vec<Monomial>) {
    let slots_after = (current.len() - pos - 1) as u64;
    if pos + 1 == current.len() {
        if remaining <= cap as u64 {
            current[pos] = remaining as u32;
            out.push(Monomial(current.clone()));
        }
        return;
    }
    let hi = remaining.min(cap as u64);
    for e in (0..=hi).rev() {
        let rest = remaining - e;
        if rest > slots_after * cap as u64 {
            break;
        }
        current[pos] = e as u32;
        fill_capped(current, pos + 1, rest, cap, out);
    }
    current[pos] = 0;
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial(e.to_vec())
    }

    #[test]
    fn grevlex_basics() {
        // x > y > z in degree one
        assert!(m(&[1, 0, 0]) > m(&[0, 1, 0]));
        assert!(m(&[0, 1, 0]) > m(&[0, 0, 1]));
        // x*z < y^2 under grevlex
        assert!(m(&[1, 0, 1]) < m(&[0, 2, 0]));
        // degree dominates
        assert!(m(&[0, 0, 2]) > m(&[1, 0, 0]));
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(monomials_of_degree(3, 1), vec![m(&[1, 0, 0]), m(&[0, 1, 0]), m(&[0, 0, 1])]);
        assert_eq!(monomials_of_degree(3, 4).len(), 15);
        assert_eq!(monomials_of_degree(2, 0), vec![m(&[0, 0])]);
        assert!(monomials_of_degree(3, -1).is_empty());
    }

    #[test]
    fn outside_bracket_matches_filter() {
        for s in 0..10 {
            let all: Vec<_> = monomials_of_degree(3, s).into_iter().filter(|u| !u.in_bracket_power(3)).collect();
            assert_eq!(monomials_outside_bracket(3, s, 3), all);
        }
    }

    #[test]
    fn overflow_is_reported() {
        let big = m(&[1 << 30, 0]);
        assert_eq!(big.checked_mul(&big), Err(Error::ExponentOverflow));
        assert_eq!(big.checked_pow(4), Err(Error::ExponentOverflow));
    }
}
