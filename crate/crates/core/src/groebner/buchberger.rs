//! Buchberger's algorithm on raw term lists, generic over the term order.
//!
//! Pairs are processed lowest degree first (the normal strategy) and pruned
//! with the Gebauer-Moeller installation of both Buchberger criteria.

use std::cmp::Ordering;
use std::marker::PhantomData;

use crate::ring::{grevlex_cmp, Monomial, PrimeField};

/// Terms sorted strictly descending under the order in use, nonzero coefficients.
pub(crate) type Terms = Vec<(Monomial, u32)>;

pub(crate) trait TermOrder {
    fn cmp(a: &Monomial, b: &Monomial) -> Ordering;
    /// Grading used for pair selection.
    fn degree(m: &Monomial) -> u64;
}

/// Graded reverse lexicographic order on all variables.
pub(crate) struct Grevlex;

impl TermOrder for Grevlex {
    #[inline]
    fn cmp(a: &Monomial, b: &Monomial) -> Ordering {
        grevlex_cmp(a.exponents(), b.exponents())
    }

    #[inline]
    fn degree(m: &Monomial) -> u64 {
        m.degree()
    }
}

/// Block order eliminating the first variable: its exponent is compared
/// first, ties are broken by grevlex on the remaining variables. The first
/// variable carries weight zero in the grading, so inputs that are
/// homogeneous in the remaining variables stay homogeneous throughout.
pub(crate) struct EliminateFirst;

impl TermOrder for EliminateFirst {
    #[inline]
    fn cmp(a: &Monomial, b: &Monomial) -> Ordering {
        let (ea, eb) = (a.exponents(), b.exponents());
        ea[0].cmp(&eb[0]).then_with(|| grevlex_cmp(&ea[1..], &eb[1..]))
    }

    #[inline]
    fn degree(m: &Monomial) -> u64 {
        m.exponents()[1..].iter().map(|&e| e as u64).sum()
    }
}

pub(crate) fn sort_terms<O: TermOrder>(terms: &mut Terms) {
    terms.sort_by(|a, b| O::cmp(&b.0, &a.0));
}

fn monic(f: &mut Terms, field: PrimeField) {
    if let Some((_, lc)) = f.first() {
        if *lc != 1 {
            let inv = field.inv(*lc);
            for (_, c) in f.iter_mut() {
                *c = field.mul(*c, inv);
            }
        }
    }
}

/// `a - c * mu * g`.
fn sub_scaled<O: TermOrder>(
    a: &[(Monomial, u32)],
    c: u32,
    mu: &Monomial,
    g: &[(Monomial, u32)],
    field: PrimeField,
) -> Terms {
    let mut out = Vec::with_capacity(a.len() + g.len());
    let mut i = 0;
    let mut gi = g.iter().map(|(m, gc)| (m.mul_unchecked(mu), field.neg(field.mul(*gc, c)))).peekable();
    while i < a.len() {
        let Some((gm, _)) = gi.peek() else { break };
        match O::cmp(&a[i].0, gm) {
            Ordering::Greater => {
                out.push(a[i].clone());
                i += 1;
            }
            Ordering::Less => out.push(gi.next().expect("peeked")),
            Ordering::Equal => {
                let (gm, gc) = gi.next().expect("peeked");
                let s = field.add(a[i].1, gc);
                if s != 0 {
                    out.push((gm, s));
                }
                i += 1;
            }
        }
    }
    out.extend(a[i..].iter().cloned());
    out.extend(gi);
    out
}

/// Full reduction of `f` modulo `basis` (each element monic).
pub(crate) fn reduce<O: TermOrder>(f: Terms, basis: &[&Terms], field: PrimeField) -> Terms {
    let mut rest = f;
    let mut out: Terms = Vec::new();
    let mut idx = 0;
    while idx < rest.len() {
        let m = &rest[idx].0;
        match basis.iter().find(|g| g[0].0.divides(m)) {
            Some(g) => {
                let mu = g[0].0.quotient_of(m);
                let c = rest[idx].1;
                rest = sub_scaled::<O>(&rest[idx..], c, &mu, g, field);
                idx = 0;
            }
            None => {
                out.push(rest[idx].clone());
                idx += 1;
            }
        }
    }
    out
}

fn s_polynomial<O: TermOrder>(f: &Terms, g: &Terms, field: PrimeField) -> Terms {
    // both monic
    let lcm = f[0].0.lcm(&g[0].0);
    let uf = f[0].0.quotient_of(&lcm);
    let ug = g[0].0.quotient_of(&lcm);
    let fu: Terms = f.iter().map(|(m, c)| (m.mul_unchecked(&uf), *c)).collect();
    sub_scaled::<O>(&fu, 1, &ug, g, field)
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

struct State<O: TermOrder> {
    polys: Vec<Terms>,
    active: Vec<bool>,
    pairs: Vec<Pair>,
    _order: PhantomData<O>,
}

impl<O: TermOrder> State<O> {
    fn lm(&self, i: usize) -> &Monomial {
        &self.polys[i][0].0
    }

    fn active_basis(&self) -> Vec<&Terms> {
        self.polys.iter().zip(&self.active).filter(|(_, a)| **a).map(|(p, _)| p).collect()
    }

    fn insert(&mut self, h: Terms) {
        let hidx = self.polys.len();
        self.polys.push(h);
        self.active.push(true);
        let h_lm = self.lm(hidx).clone();

        let cands: Vec<(usize, Monomial)> =
            (0..hidx).filter(|&g| self.active[g]).map(|g| (g, h_lm.lcm(self.lm(g)))).collect();
        let mut kept: Vec<(usize, Monomial, bool)> = Vec::new();
        for (k, (g, l)) in cands.iter().enumerate() {
            let coprime = h_lm.is_coprime(self.lm(*g));
            let dominated =
                cands[k + 1..].iter().any(|(_, l2)| l2.divides(l)) || kept.iter().any(|(_, l2, _)| l2.divides(l));
            if coprime || !dominated {
                kept.push((*g, l.clone(), coprime));
            }
        }

        let polys = &self.polys;
        self.pairs.retain(|pr| {
            let lm_i = &polys[pr.i][0].0;
            let lm_j = &polys[pr.j][0].0;
            !(h_lm.divides(&pr.lcm) && h_lm.lcm(lm_i) != pr.lcm && h_lm.lcm(lm_j) != pr.lcm)
        });
        for (g, l, coprime) in kept {
            if !coprime {
                self.pairs.push(Pair { i: g, j: hidx, lcm: l });
            }
        }

        for g in 0..hidx {
            if self.active[g] && h_lm.divides(&self.polys[g][0].0) {
                self.active[g] = false;
            }
        }
    }

    fn min_pair(&self) -> Option<usize> {
        (0..self.pairs.len()).min_by(|&a, &b| {
            let (pa, pb) = (&self.pairs[a], &self.pairs[b]);
            O::degree(&pa.lcm)
                .cmp(&O::degree(&pb.lcm))
                .then_with(|| O::cmp(&pa.lcm, &pb.lcm))
                .then_with(|| (pa.i, pa.j).cmp(&(pb.i, pb.j)))
        })
    }
}

/// Reduced Groebner basis of the ideal generated by `inputs`, elements
/// sorted ascending by leading monomial. The unit ideal yields `[1]`, the
/// zero ideal an empty basis.
pub(crate) fn groebner<O: TermOrder>(inputs: Vec<Terms>, field: PrimeField) -> Vec<Terms> {
    let mut queue: Vec<Terms> = inputs
        .into_iter()
        .filter(|f| !f.is_empty())
        .map(|mut f| {
            monic(&mut f, field);
            f
        })
        .collect();
    // popped from the back: lowest degree first
    queue.sort_by(|a, b| O::degree(&b[0].0).cmp(&O::degree(&a[0].0)).then_with(|| O::cmp(&b[0].0, &a[0].0)));

    let mut st: State<O> = State { polys: Vec::new(), active: Vec::new(), pairs: Vec::new(), _order: PhantomData };

    loop {
        let input_deg = queue.last().map(|f| O::degree(&f[0].0));
        let pair_idx = st.min_pair();
        let pair_deg = pair_idx.map(|k| O::degree(&st.pairs[k].lcm));
        let candidate = match (input_deg, pair_deg) {
            (None, None) => break,
            (Some(di), Some(dp)) if dp < di => {
                let pr = st.pairs.swap_remove(pair_idx.expect("some"));
                s_polynomial::<O>(&st.polys[pr.i], &st.polys[pr.j], field)
            }
            (Some(_), _) => queue.pop().expect("some"),
            (None, Some(_)) => {
                let pr = st.pairs.swap_remove(pair_idx.expect("some"));
                s_polynomial::<O>(&st.polys[pr.i], &st.polys[pr.j], field)
            }
        };
        let mut h = reduce::<O>(candidate, &st.active_basis(), field);
        if h.is_empty() {
            continue;
        }
        monic(&mut h, field);
        if h[0].0.is_one() {
            return vec![h];
        }
        st.insert(h);
    }

    let basis: Vec<Terms> = st.active_basis().into_iter().cloned().collect();
    let mut reduced: Vec<Terms> = Vec::with_capacity(basis.len());
    for k in 0..basis.len() {
        let others: Vec<&Terms> = basis.iter().enumerate().filter(|(i, _)| *i != k).map(|(_, b)| b).collect();
        let head = basis[k][0].clone();
        let mut tail = reduce::<O>(basis[k][1..].to_vec(), &others, field);
        let mut g = vec![head];
        g.append(&mut tail);
        monic(&mut g, field);
        reduced.push(g);
    }
    reduced.sort_by(|a, b| O::cmp(&a[0].0, &b[0].0));
    reduced
}

#[cfg(test)]
mod tests {
    use super::*;

    fn field(p: u64) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    fn t(e: &[u32], c: u32) -> (Monomial, u32) {
        (Monomial::from_exponents(e.to_vec()).unwrap(), c)
    }

    #[test]
    fn linear_system() {
        // x + y, x - y over F_5 -> {y, x}
        let f = field(5);
        let gb = groebner::<Grevlex>(vec![vec![t(&[1, 0], 1), t(&[0, 1], 1)], vec![t(&[1, 0], 1), t(&[0, 1], 4)]], f);
        assert_eq!(gb, vec![vec![t(&[0, 1], 1)], vec![t(&[1, 0], 1)]]);
    }

    #[test]
    fn unit_detection() {
        let f = field(3);
        let gb = groebner::<Grevlex>(vec![vec![t(&[1], 1)], vec![t(&[1], 1), t(&[0], 1)]], f);
        assert_eq!(gb, vec![vec![t(&[0], 1)]]);
        assert!(groebner::<Grevlex>(vec![vec![]], f).is_empty());
    }

    #[test]
    fn elimination_order_prefers_first_variable() {
        assert_eq!(EliminateFirst::cmp(&t(&[1, 0, 0], 1).0, &t(&[0, 5, 5], 1).0), Ordering::Greater);
        assert_eq!(EliminateFirst::degree(&t(&[4, 1, 2], 1).0), 3);
    }
}
