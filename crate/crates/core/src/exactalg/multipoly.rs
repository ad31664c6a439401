//! Sparse polynomials in the six Lie coordinates `(u, y0, y1, y2, y3, y4)`.
//!
//! Monomials are packed into a single `u64`: the total degree occupies the top
//! 16 bits and each exponent one byte below it, `u` most significant. Integer
//! comparison of the packed words is then exactly the graded-lexicographic
//! order with `u > y0 > y1 > y2 > y3 > y4`, and monomial multiplication is
//! integer addition.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use rustc_hash::FxHashMap;

use crate::scalar::Scalar;

pub const NVARS: usize = 6;

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    U,
    Y0,
    Y1,
    Y2,
    Y3,
    Y4,
}

impl Var {
    pub const ALL: [Var; NVARS] = [Var::U, Var::Y0, Var::Y1, Var::Y2, Var::Y3, Var::Y4];
    /// `(u, y0, y1, y2, y3)`, the coordinates of the offset pencil.
    pub const OFFSET: [Var; 5] = [Var::U, Var::Y0, Var::Y1, Var::Y2, Var::Y3];
    /// `(y0, y1, y2, y3, y4)`, the coordinates of `P^4`.
    pub const PROJECTIVE4: [Var; 5] = [Var::Y0, Var::Y1, Var::Y2, Var::Y3, Var::Y4];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        ["u", "y0", "y1", "y2", "y3", "y4"][self.index()]
    }

    fn shift(self) -> u32 {
        8 * (5 - self.index() as u32)
    }
}

const TOTAL_SHIFT: u32 = 48;
const BYTE: u64 = 0xFF;

#[derive(Copy, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Monomial(u64);

impl Monomial {
    pub const ONE: Monomial = Monomial(0);

    pub fn new(exps: [u32; NVARS]) -> Self {
        let mut packed = 0u64;
        let mut total = 0u64;
        for (v, &e) in Var::ALL.iter().zip(&exps) {
            assert!(e < 256, "exponent {e} exceeds the packed range");
            packed |= (e as u64) << v.shift();
            total += e as u64;
        }
        Monomial(packed | (total << TOTAL_SHIFT))
    }

    pub fn var(v: Var) -> Self {
        Self::var_pow(v, 1)
    }

    pub fn var_pow(v: Var, e: u32) -> Self {
        let mut exps = [0; NVARS];
        exps[v.index()] = e;
        Self::new(exps)
    }

    pub fn exponent(self, v: Var) -> u32 {
        ((self.0 >> v.shift()) & BYTE) as u32
    }

    pub fn exponents(self) -> [u32; NVARS] {
        Var::ALL.map(|v| self.exponent(v))
    }

    pub fn total_degree(self) -> u32 {
        (self.0 >> TOTAL_SHIFT) as u32
    }

    pub fn divides(self, other: Monomial) -> bool {
        Var::ALL.iter().all(|&v| self.exponent(v) <= other.exponent(v))
    }

    /// `other / self`, assuming `self` divides `other`.
    fn quotient_of(self, other: Monomial) -> Monomial {
        debug_assert!(self.divides(other));
        Monomial(other.0 - self.0)
    }

    pub fn without(self, v: Var) -> Monomial {
        let e = self.exponent(v) as u64;
        Monomial(self.0 - (e << v.shift()) - (e << TOTAL_SHIFT))
    }
}

impl Mul for Monomial {
    type Output = Monomial;
    fn mul(self, rhs: Monomial) -> Monomial {
        debug_assert!(
            Var::ALL.iter().all(|&v| self.exponent(v) + rhs.exponent(v) < 256),
            "exponent overflow"
        );
        Monomial(self.0 + rhs.0)
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if *self == Monomial::ONE {
            return write!(f, "1");
        }
        let mut first = true;
        for v in Var::ALL {
            let e = self.exponent(v);
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{}", v.name())?;
            } else {
                write!(f, "{}^{}", v.name(), e)?;
            }
        }
        Ok(())
    }
}

/// Sparse polynomial; terms sorted ascending in graded-lex order, no zero
/// coefficients stored.
#[derive(Clone, PartialEq, Debug)]
pub struct MultivariatePolynomial<S> {
    terms: Vec<(Monomial, S)>,
}

impl<S: Scalar> Default for MultivariatePolynomial<S> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<S: Scalar> MultivariatePolynomial<S> {
    pub fn zero() -> Self {
        Self { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(S::one())
    }

    pub fn constant(c: S) -> Self {
        Self::term(Monomial::ONE, c)
    }

    pub fn term(m: Monomial, c: S) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            Self { terms: vec![(m, c)] }
        }
    }

    pub fn var(v: Var) -> Self {
        Self::term(Monomial::var(v), S::one())
    }

    /// Builds from arbitrary terms, merging duplicates and dropping zeros.
    pub fn from_terms(mut terms: Vec<(Monomial, S)>) -> Self {
        terms.sort_by_key(|t| t.0);
        let mut out: Vec<(Monomial, S)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => lc.add_assign_ref(&c),
                _ => out.push((m, c)),
            }
        }
        out.retain(|(_, c)| !c.is_zero());
        Self { terms: out }
    }

    fn from_sorted_unchecked(terms: Vec<(Monomial, S)>) -> Self {
        debug_assert!(terms.windows(2).all(|w| w[0].0 < w[1].0));
        debug_assert!(terms.iter().all(|(_, c)| !c.is_zero()));
        Self { terms }
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> &[(Monomial, S)] {
        &self.terms
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| *m == Monomial::ONE)
    }

    pub fn constant_term(&self) -> S {
        self.coeff(Monomial::ONE)
    }

    pub fn coeff(&self, m: Monomial) -> S {
        match self.terms.binary_search_by_key(&m, |t| t.0) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => S::zero(),
        }
    }

    /// Graded-lex greatest term.
    pub fn leading_term(&self) -> Option<&(Monomial, S)> {
        self.terms.last()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.last().map(|(m, _)| m.total_degree())
    }

    pub fn degree_in(&self, v: Var) -> u32 {
        self.terms.iter().map(|(m, _)| m.exponent(v)).max().unwrap_or(0)
    }

    /// Largest power of `v` dividing every term (0 for the zero polynomial).
    pub fn valuation_in(&self, v: Var) -> u32 {
        self.terms.iter().map(|(m, _)| m.exponent(v)).min().unwrap_or(0)
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some((m0, _)) => self.terms.iter().all(|(m, _)| m.total_degree() == m0.total_degree()),
        }
    }

    pub fn scale(&self, c: &S) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self::from_terms(self.terms.iter().map(|(m, x)| (*m, x.mul_ref(c))).collect())
    }

    pub fn mul_term(&self, m: Monomial, c: &S) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        // Multiplying by a monomial preserves a monomial order.
        let terms: Vec<_> = self
            .terms
            .iter()
            .map(|(tm, x)| (*tm * m, x.mul_ref(c)))
            .filter(|(_, x)| !x.is_zero())
            .collect();
        Self::from_sorted_unchecked(terms)
    }

    /// Divides every term by `v^k`; panics in debug builds if not divisible.
    pub fn div_var_pow(&self, v: Var, k: u32) -> Self {
        if k == 0 {
            return self.clone();
        }
        let d = Monomial::var_pow(v, k);
        let terms = self.terms.iter().map(|(m, c)| (d.quotient_of(*m), c.clone())).collect();
        Self::from_terms(terms)
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn eval(&self, point: &[S; NVARS]) -> S {
        let mut powers: Vec<Vec<S>> = Vec::with_capacity(NVARS);
        for v in Var::ALL {
            let d = self.degree_in(v) as usize;
            let mut p = Vec::with_capacity(d + 1);
            p.push(S::one());
            for i in 0..d {
                let next = p[i].mul_ref(&point[v.index()]);
                p.push(next);
            }
            powers.push(p);
        }
        let mut acc = S::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for v in Var::ALL {
                let e = m.exponent(v) as usize;
                if e > 0 {
                    t = t.mul_ref(&powers[v.index()][e]);
                }
            }
            acc.add_assign_ref(&t);
        }
        acc
    }

    /// Replaces the variable `v` by the constant `value`.
    pub fn specialize(&self, v: Var, value: &S) -> Self {
        let d = self.degree_in(v) as usize;
        let mut powers = vec![S::one()];
        for i in 0..d {
            let next = powers[i].mul_ref(value);
            powers.push(next);
        }
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (m.without(v), c.mul_ref(&powers[m.exponent(v) as usize])))
            .collect();
        Self::from_terms(terms)
    }

    /// Simultaneous substitution of every variable by a polynomial.
    pub fn compose(&self, images: &[Self; NVARS]) -> Self {
        let mut powers: Vec<Vec<Self>> = Vec::with_capacity(NVARS);
        for v in Var::ALL {
            let d = self.degree_in(v) as usize;
            let mut p = vec![Self::one()];
            for i in 0..d {
                let next = &p[i] * &images[v.index()];
                p.push(next);
            }
            powers.push(p);
        }
        let mut acc = Accumulator::new();
        for (m, c) in &self.terms {
            let mut t = Self::constant(c.clone());
            for v in Var::ALL {
                let e = m.exponent(v) as usize;
                if e > 0 {
                    t = &t * &powers[v.index()][e];
                }
            }
            acc.add(&t);
        }
        acc.finish()
    }

    pub fn map_coeffs<T: Scalar>(&self, f: impl Fn(&S) -> T) -> MultivariatePolynomial<T> {
        MultivariatePolynomial::from_terms(self.terms.iter().map(|(m, c)| (*m, f(c))).collect())
    }

    /// Exact quotient `self / divisor`, `None` if the division leaves a
    /// remainder (or `divisor` is zero).
    pub fn exact_div(&self, divisor: &Self) -> Option<Self> {
        let (lm, lc) = divisor.leading_term()?.clone();
        if self.is_zero() {
            return Some(Self::zero());
        }
        if divisor.terms.len() == 1 {
            let terms = self
                .terms
                .iter()
                .map(|(m, c)| {
                    if !lm.divides(*m) {
                        return None;
                    }
                    Some((lm.quotient_of(*m), c.exact_div(&lc)?))
                })
                .collect::<Option<Vec<_>>>()?;
            return Some(Self::from_sorted_unchecked(terms));
        }
        let mut rem: BTreeMap<Monomial, S> = self.terms.iter().cloned().collect();
        let mut quot = Vec::new();
        while let Some((m, c)) = rem.iter().next_back().map(|(m, c)| (*m, c.clone())) {
            if !lm.divides(m) {
                return None;
            }
            let qm = lm.quotient_of(m);
            let qc = c.exact_div(&lc)?;
            for (dm, dc) in &divisor.terms {
                let key = *dm * qm;
                let delta = dc.mul_ref(&qc);
                match rem.get_mut(&key) {
                    Some(x) => {
                        x.sub_assign_ref(&delta);
                        if x.is_zero() {
                            rem.remove(&key);
                        }
                    }
                    None => {
                        rem.insert(key, delta.neg_ref());
                    }
                }
            }
            debug_assert!(!rem.contains_key(&m));
            quot.push((qm, qc));
        }
        quot.reverse();
        Some(Self::from_sorted_unchecked(quot))
    }

    fn merge(&self, other: &Self, negate_other: bool) -> Self {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        let take_b = |c: &S| if negate_other { c.neg_ref() } else { c.clone() };
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push((b[j].0, take_b(&b[j].1)));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = if negate_other { a[i].1.sub_ref(&b[j].1) } else { a[i].1.add_ref(&b[j].1) };
                    if !c.is_zero() {
                        out.push((a[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        out.extend(b[j..].iter().map(|(m, c)| (*m, take_b(c))));
        Self::from_sorted_unchecked(out)
    }

    pub fn map_terms(&self) -> impl Iterator<Item = (Monomial, &S)> {
        self.terms.iter().map(|(m, c)| (*m, c))
    }
}

/// Hash-based accumulator for sums of products.
pub struct Accumulator<S> {
    map: FxHashMap<Monomial, S>,
}

impl<S: Scalar> Default for Accumulator<S> {
    fn default() -> Self {
        Self::new()
    }
}

impl<S: Scalar> Accumulator<S> {
    pub fn new() -> Self {
        Self { map: FxHashMap::default() }
    }

    pub fn add(&mut self, p: &MultivariatePolynomial<S>) {
        for (m, c) in &p.terms {
            self.map.entry(*m).and_modify(|x| x.add_assign_ref(c)).or_insert_with(|| c.clone());
        }
    }

    /// Adds `sign * a * b`.
    pub fn add_product(&mut self, a: &MultivariatePolynomial<S>, b: &MultivariatePolynomial<S>, negate: bool) {
        self.map.reserve(a.terms.len().max(b.terms.len()));
        for (ma, ca) in &a.terms {
            let ca = if negate { ca.neg_ref() } else { ca.clone() };
            for (mb, cb) in &b.terms {
                let p = ca.mul_ref(cb);
                match self.map.get_mut(&(*ma * *mb)) {
                    Some(x) => x.add_assign_ref(&p),
                    None => {
                        self.map.insert(*ma * *mb, p);
                    }
                }
            }
        }
    }

    pub fn finish(self) -> MultivariatePolynomial<S> {
        let mut terms: Vec<_> = self.map.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_unstable_by_key(|t| t.0);
        MultivariatePolynomial::from_sorted_unchecked(terms)
    }
}

impl<S: Scalar> Add for &MultivariatePolynomial<S> {
    type Output = MultivariatePolynomial<S>;
    fn add(self, rhs: Self) -> Self::Output {
        self.merge(rhs, false)
    }
}

impl<S: Scalar> Sub for &MultivariatePolynomial<S> {
    type Output = MultivariatePolynomial<S>;
    fn sub(self, rhs: Self) -> Self::Output {
        self.merge(rhs, true)
    }
}

impl<S: Scalar> Neg for &MultivariatePolynomial<S> {
    type Output = MultivariatePolynomial<S>;
    fn neg(self) -> Self::Output {
        MultivariatePolynomial { terms: self.terms.iter().map(|(m, c)| (*m, c.neg_ref())).collect() }
    }
}

impl<S: Scalar> Mul for &MultivariatePolynomial<S> {
    type Output = MultivariatePolynomial<S>;
    fn mul(self, rhs: Self) -> Self::Output {
        if self.is_zero() || rhs.is_zero() {
            return MultivariatePolynomial::zero();
        }
        let (small, big) = if self.terms.len() <= rhs.terms.len() { (self, rhs) } else { (rhs, self) };
        if small.terms.len() == 1 {
            let (m, c) = &small.terms[0];
            return big.mul_term(*m, c);
        }
        let mut acc = Accumulator::new();
        acc.add_product(small, big, false);
        acc.finish()
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl<S: Scalar> $tr for MultivariatePolynomial<S> {
            type Output = MultivariatePolynomial<S>;
            fn $m(self, rhs: Self) -> Self::Output {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl<S: Scalar> Neg for MultivariatePolynomial<S> {
    type Output = MultivariatePolynomial<S>;
    fn neg(self) -> Self::Output {
        -&self
    }
}

/// Terms printed from the graded-lex greatest down, e.g.
/// `625*u^2*y0^2 - 800*u*y0*y3^2 + 256*y3^4`.
impl<S: Scalar> fmt::Display for MultivariatePolynomial<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let text = c.to_string();
            let (neg, mag) = match text.strip_prefix('-') {
                Some(rest) => (true, rest.to_string()),
                None => (false, text),
            };
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if *m == Monomial::ONE {
                write!(f, "{mag}")?;
            } else if mag == "1" {
                write!(f, "{m}")?;
            } else {
                write!(f, "{mag}*{m}")?;
            }
        }
        Ok(())
    }
}
