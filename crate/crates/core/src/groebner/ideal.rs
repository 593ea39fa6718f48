use std::fmt;
use std::sync::OnceLock;

use super::buchberger::{self, EliminateFirst, Terms};
use super::GroebnerBasis;
use crate::error::{Error, Result};
use crate::ring::{monomials_of_degree, Monomial, Polynomial, Ring};

/// Homogeneous ideal of `F_p[x_0, ..., x_n]`, given by generators.
///
/// The reduced Groebner basis is computed on first use and cached. Since the
/// reduced basis is unique, concurrent first uses may both compute it and
/// either result may win.
#[derive(Clone)]
pub struct Ideal {
    ring: Ring,
    gens: Vec<Polynomial>,
    gb: OnceLock<GroebnerBasis>,
}

impl Ideal {
    /// Zero generators are dropped; every generator must be homogeneous.
    pub fn new(ring: &Ring, gens: Vec<Polynomial>) -> Result<Ideal> {
        let mut kept = Vec::with_capacity(gens.len());
        for g in gens {
            if g.ring() != ring {
                return Err(Error::RingMismatch);
            }
            if g.is_zero() {
                continue;
            }
            if !g.is_homogeneous() {
                return Err(Error::NotHomogeneous);
            }
            kept.push(g);
        }
        Ok(Ideal { ring: ring.clone(), gens: kept, gb: OnceLock::new() })
    }

    /// Parses each generator in `ring`.
    pub fn parse<S: AsRef<str>>(ring: &Ring, gens: &[S]) -> Result<Ideal> {
        let polys = gens.iter().map(|s| ring.parse(s.as_ref())).collect::<Result<Vec<_>>>()?;
        Ideal::new(ring, polys)
    }

    pub fn principal(g: &Polynomial) -> Result<Ideal> {
        Ideal::new(g.ring(), vec![g.clone()])
    }

    pub fn zero(ring: &Ring) -> Ideal {
        Ideal { ring: ring.clone(), gens: Vec::new(), gb: OnceLock::new() }
    }

    pub fn unit(ring: &Ring) -> Ideal {
        Ideal { ring: ring.clone(), gens: vec![Polynomial::one(ring)], gb: OnceLock::new() }
    }

    /// The homogeneous maximal ideal `m = (x_0, ..., x_n)`.
    pub fn maximal(ring: &Ring) -> Ideal {
        Ideal { ring: ring.clone(), gens: ring.vars(), gb: OnceLock::new() }
    }

    /// `m^[q] = (x_0^q, ..., x_n^q)`.
    pub fn bracket_maximal(ring: &Ring, q: u64) -> Result<Ideal> {
        let n = ring.nvars();
        let mut gens = Vec::with_capacity(n);
        for i in 0..n {
            gens.push(Polynomial::monomial(ring, Monomial::var(n, i).checked_pow(q)?, 1));
        }
        Ok(Ideal { ring: ring.clone(), gens, gb: OnceLock::new() })
    }

    /// `m^s`, generated by all monomials of degree `s`.
    pub fn maximal_power(ring: &Ring, s: u64) -> Ideal {
        let gens =
            monomials_of_degree(ring.nvars(), s as i64).into_iter().map(|m| Polynomial::monomial(ring, m, 1)).collect();
        Ideal { ring: ring.clone(), gens, gb: OnceLock::new() }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn groebner(&self) -> &GroebnerBasis {
        self.gb.get_or_init(|| GroebnerBasis::compute(&self.ring, &self.gens).expect("generators share the ring"))
    }

    /// The same ideal, generated by its reduced Groebner basis.
    pub fn reduced(&self) -> Ideal {
        let gb = self.groebner().clone();
        let gens = gb.elements().to_vec();
        let cache = OnceLock::new();
        let _ = cache.set(gb);
        Ideal { ring: self.ring.clone(), gens, gb: cache }
    }

    pub fn normal_form(&self, g: &Polynomial) -> Result<Polynomial> {
        self.groebner().normal_form(g)
    }

    pub fn contains(&self, g: &Polynomial) -> Result<bool> {
        self.groebner().contains(g)
    }

    pub fn contains_ideal(&self, other: &Ideal) -> Result<bool> {
        self.check_ring(other)?;
        for g in &other.gens {
            if !self.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Equality as ideals: compares reduced Groebner bases.
    pub fn same_ideal(&self, other: &Ideal) -> Result<bool> {
        self.check_ring(other)?;
        Ok(self.groebner().elements() == other.groebner().elements())
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.groebner().is_unit()
    }

    fn check_ring(&self, other: &Ideal) -> Result<()> {
        if self.ring == other.ring {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        self.check_ring(other)?;
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        Ideal::new(&self.ring, gens)
    }

    pub fn product(&self, other: &Ideal) -> Result<Ideal> {
        self.check_ring(other)?;
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                gens.push(a.try_mul(b)?);
            }
        }
        Ideal::new(&self.ring, gens)
    }

    /// `I ∩ J` by eliminating `t` from `t*I + (1 - t)*J`.
    pub fn intersection(&self, other: &Ideal) -> Result<Ideal> {
        self.check_ring(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Ideal::zero(&self.ring));
        }
        if self.is_unit() {
            return Ok(other.reduced());
        }
        if other.is_unit() {
            return Ok(self.reduced());
        }
        let lift = |p: &Polynomial, t: u32| -> Terms { p.terms().iter().map(|(m, c)| (m.prepend(t), *c)).collect() };
        let field = self.ring.field();
        let mut inputs: Vec<Terms> = Vec::with_capacity(self.gens.len() + other.gens.len());
        for f in &self.gens {
            inputs.push(lift(f, 1));
        }
        for g in &other.gens {
            let mut terms = lift(g, 0);
            terms.extend(g.terms().iter().map(|(m, c)| (m.prepend(1), field.neg(*c))));
            buchberger::sort_terms::<EliminateFirst>(&mut terms);
            inputs.push(terms);
        }
        let gb = buchberger::groebner::<EliminateFirst>(inputs, field);
        let gens = gb
            .into_iter()
            .filter(|g| g.iter().all(|(m, _)| m.exponents()[0] == 0))
            .map(|g| Polynomial::from_terms(&self.ring, g.into_iter().map(|(m, c)| (m.drop_first(), c))))
            .collect();
        Ideal::new(&self.ring, gens)
    }

    /// `(I : g) = (1/g) (I ∩ (g))`.
    pub fn colon_element(&self, g: &Polynomial) -> Result<Ideal> {
        if g.ring() != &self.ring {
            return Err(Error::RingMismatch);
        }
        if g.is_zero() {
            return Err(Error::ZeroIdeal);
        }
        if g.is_constant() {
            return Ok(self.clone());
        }
        let inter = self.intersection(&Ideal::principal(g)?)?;
        let mut gens = Vec::with_capacity(inter.gens.len());
        for h in &inter.gens {
            match h.div_exact(g)? {
                Some(quot) => gens.push(quot),
                None => return Err(Error::Internal(format!("{} is not divisible by {}", h, g))),
            }
        }
        Ideal::new(&self.ring, gens)
    }

    /// `(I : J) = ∩_{g in gens(J)} (I : g)`.
    pub fn colon(&self, other: &Ideal) -> Result<Ideal> {
        self.check_ring(other)?;
        if other.is_zero() {
            return Err(Error::ZeroIdeal);
        }
        let mut acc: Option<Ideal> = None;
        for g in &other.gens {
            let c = self.colon_element(g)?;
            acc = Some(match acc {
                None => c,
                Some(a) => a.intersection(&c)?,
            });
        }
        Ok(acc.expect("nonzero ideal has generators").reduced())
    }

    /// For a proper ideal: true iff every variable has a pure power among the
    /// leading monomials, i.e. `sqrt(I) = m`.
    pub fn is_zero_dimensional(&self) -> Result<bool> {
        let gb = self.groebner();
        if gb.is_unit() {
            return Err(Error::UnitIdeal("zero-dimensionality is asked of proper ideals"));
        }
        let n = self.ring.nvars();
        let mut seen = vec![false; n];
        for lm in gb.leading_monomials() {
            if let Some(i) = lm.pure_power_var() {
                seen[i] = true;
            }
        }
        Ok(seen.into_iter().all(|s| s))
    }

    /// Monomial basis of `S/I` for zero-dimensional `I`, ascending.
    pub fn standard_monomials(&self) -> Result<Vec<Monomial>> {
        if !self.is_zero_dimensional()? {
            return Err(Error::NotZeroDimensional);
        }
        let gb = self.groebner();
        let mut out = Vec::new();
        let mut s = 0;
        loop {
            let mut in_degree: Vec<Monomial> =
                monomials_of_degree(self.ring.nvars(), s).into_iter().filter(|m| gb.is_standard(m)).collect();
            if in_degree.is_empty() {
                // the standard set is closed under division, so it ends here
                break;
            }
            in_degree.reverse();
            out.extend(in_degree);
            s += 1;
        }
        Ok(out)
    }

    /// `dim_k (S/I)_s`, read off the leading-term ideal.
    pub fn hilbert_function(&self, s: i64) -> u64 {
        let gb = self.groebner();
        monomials_of_degree(self.ring.nvars(), s).iter().filter(|m| gb.is_standard(m)).count() as u64
    }

    /// Krull dimension of `S/I`; `None` for the unit ideal.
    pub fn krull_dimension(&self) -> Option<usize> {
        let gb = self.groebner();
        if gb.is_unit() {
            return None;
        }
        let n = self.ring.nvars();
        let lms: Vec<&Monomial> = gb.leading_monomials();
        // largest set of variables containing the support of no leading monomial
        let mut best = 0;
        for mask in 0u32..(1u32 << n) {
            let size = mask.count_ones() as usize;
            if size <= best {
                continue;
            }
            let independent =
                lms.iter().all(|lm| lm.exponents().iter().enumerate().any(|(i, &e)| e > 0 && mask & (1 << i) == 0));
            if independent {
                best = size;
            }
        }
        Some(best)
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.gens.iter().map(|g| g.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ideal{}", self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::tests::assert_is_groebner;

    fn ring(p: u64, vars: &[&str]) -> Ring {
        Ring::new(p, vars).unwrap()
    }

    fn ideal(r: &Ring, gens: &[&str]) -> Ideal {
        Ideal::parse(r, gens).unwrap()
    }

    #[test]
    fn construction_rules() {
        let r = ring(3, &["x", "y"]);
        assert_eq!(Ideal::parse(&r, &["x + y^2"]).unwrap_err(), Error::NotHomogeneous);
        assert!(Ideal::parse(&r, &["0", "x"]).unwrap().generators().len() == 1);
        assert!(Ideal::zero(&r).groebner().is_empty());
        assert!(Ideal::unit(&r).is_unit());
    }

    #[test]
    fn linear_generators() {
        let r = ring(5, &["x", "y"]);
        let i = ideal(&r, &["x + y", "x - y"]);
        assert_eq!(i.groebner().elements(), &[r.parse("y").unwrap(), r.parse("x").unwrap()]);
    }

    #[test]
    fn membership() {
        let r = ring(3, &["x", "y", "z"]);
        let m3 = Ideal::bracket_maximal(&r, 3).unwrap();
        assert!(m3.contains(&r.parse("x^3").unwrap()).unwrap());
        assert!(!m3.contains(&r.parse("x^2*y^2*z^2").unwrap()).unwrap());
        let f = r.parse("x^2*y^2 + y^2*z^2 + z^2*x^2").unwrap();
        assert!(m3.contains(&f.pow(2).unwrap()).unwrap());
    }

    #[test]
    fn sum_product_equality() {
        let r = ring(7, &["x", "y"]);
        let x = ideal(&r, &["x"]);
        let y = ideal(&r, &["y"]);
        assert!(x.sum(&y).unwrap().same_ideal(&ideal(&r, &["x", "y"])).unwrap());
        assert!(x.product(&y).unwrap().same_ideal(&ideal(&r, &["x*y"])).unwrap());
        assert!(ideal(&r, &["x", "y"]).same_ideal(&ideal(&r, &["x + y", "y"])).unwrap());
    }

    #[test]
    fn intersections() {
        let r = ring(5, &["x", "y"]);
        let cases = [
            (vec!["x"], vec!["y"], vec!["x*y"]),
            (vec!["x^2"], vec!["x"], vec!["x^2"]),
            (vec!["x^2", "y"], vec!["x", "y^2"], vec!["x^2", "x*y", "y^2"]),
        ];
        for (a, b, expected) in cases {
            let got = ideal(&r, &a).intersection(&ideal(&r, &b)).unwrap();
            assert!(got.same_ideal(&ideal(&r, &expected)).unwrap(), "{:?} ∩ {:?} = {}", a, b, got);
            assert_is_groebner(got.groebner());
        }
    }

    #[test]
    fn colons() {
        let r2 = ring(3, &["x", "y"]);
        let c = ideal(&r2, &["x^3", "y^3"]).colon(&ideal(&r2, &["x^2", "y^2"])).unwrap();
        assert!(c.same_ideal(&ideal(&r2, &["x^3", "y^3", "x*y"])).unwrap());

        let r3 = ring(3, &["x", "y", "z"]);
        let m3 = Ideal::bracket_maximal(&r3, 3).unwrap();
        let c = m3.colon(&Ideal::maximal(&r3)).unwrap();
        assert!(c.same_ideal(&ideal(&r3, &["x^3", "y^3", "z^3", "x^2*y^2*z^2"])).unwrap());

        let i = ideal(&r3, &["x^2 + y*z", "y^3"]);
        assert!(i.colon(&Ideal::unit(&r3)).unwrap().same_ideal(&i).unwrap());
        assert_eq!(i.colon(&Ideal::zero(&r3)).unwrap_err(), Error::ZeroIdeal);
    }

    #[test]
    fn zero_dimensionality() {
        let r = ring(3, &["x", "y", "z"]);
        assert!(Ideal::bracket_maximal(&r, 3).unwrap().is_zero_dimensional().unwrap());
        assert!(!ideal(&r, &["x^2*y^2 + y^2*z^2 + z^2*x^2"]).is_zero_dimensional().unwrap());
        assert!(Ideal::unit(&r).is_zero_dimensional().is_err());
    }

    #[test]
    fn standard_monomial_sets() {
        let r3 = ring(3, &["x", "y", "z"]);
        assert_eq!(Ideal::maximal(&r3).standard_monomials().unwrap(), vec![Monomial::one(3)]);

        let r = ring(3, &["x", "y"]);
        let as_strings = |i: &Ideal| -> Vec<String> {
            let mut v: Vec<String> = i
                .standard_monomials()
                .unwrap()
                .into_iter()
                .map(|m| Polynomial::monomial(&r, m, 1).to_string())
                .collect();
            v.sort();
            v
        };
        let mut expected = vec!["1", "x", "y", "x*y", "y^2", "x*y^2"];
        expected.sort();
        assert_eq!(as_strings(&ideal(&r, &["x^2", "y^3"])), expected);
        let mut expected = vec!["1", "x", "y", "y^2"];
        expected.sort();
        assert_eq!(as_strings(&ideal(&r, &["x^2", "x*y", "y^3"])), expected);
        assert_eq!(ideal(&r, &["x^2"]).standard_monomials().unwrap_err(), Error::NotZeroDimensional);
    }

    #[test]
    fn dimension_of_quotients() {
        let r = ring(5, &["x", "y", "z"]);
        assert_eq!(ideal(&r, &["x*y"]).krull_dimension(), Some(2));
        assert_eq!(ideal(&r, &["x*y", "x*z"]).krull_dimension(), Some(2));
        assert_eq!(ideal(&r, &["x^2", "y^2", "z"]).krull_dimension(), Some(0));
        assert_eq!(Ideal::zero(&r).krull_dimension(), Some(3));
        assert_eq!(Ideal::unit(&r).krull_dimension(), None);
    }
}
