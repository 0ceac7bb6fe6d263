//! Dense univariate polynomials with coefficients in any supported field.
//!
//! The zero polynomial has an empty coefficient list; `degree()` returns
//! `None` for it, which plays the role of the -infinity sentinel.

use super::{Field, FieldDescriptor, FieldElement};
use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    pub field: Field,
    /// ascending degree, no trailing zeros
    pub coeffs: Vec<FieldElement>,
}

impl Polynomial {
    pub fn new(field: Field, mut coeffs: Vec<FieldElement>) -> Self {
        while coeffs.last().map(|c| c.is_zero()).unwrap_or(false) {
            coeffs.pop();
        }
        debug_assert!(coeffs.iter().all(|c| c.field == field));
        Polynomial { field, coeffs }
    }

    pub fn zero(field: Field) -> Self {
        Polynomial {
            field,
            coeffs: vec![],
        }
    }

    pub fn one(field: Field) -> Self {
        let c = FieldElement::one(&field);
        Polynomial {
            field,
            coeffs: vec![c],
        }
    }

    pub fn constant(c: FieldElement) -> Self {
        Polynomial::new(c.field.clone(), vec![c])
    }

    pub fn monomial(field: Field, deg: usize, coeff: FieldElement) -> Self {
        let mut coeffs = vec![FieldElement::zero(&field); deg];
        coeffs.push(coeff);
        Polynomial::new(field, coeffs)
    }

    /// From small integer coefficients, ascending.
    pub fn from_i64(field: &Field, coeffs: &[i64]) -> Self {
        Polynomial::new(
            field.clone(),
            coeffs
                .iter()
                .map(|&c| FieldElement::from_i64(field, c))
                .collect(),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn leading_coefficient(&self) -> Option<&FieldElement> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coefficient().map(|c| c.is_one()).unwrap_or(false)
    }

    pub fn coefficient(&self, i: usize) -> FieldElement {
        self.coeffs
            .get(i)
            .cloned()
            .unwrap_or_else(|| FieldElement::zero(&self.field))
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(
                self.coefficient(i)
                    .add(&rhs.coefficient(i))
                    .expect("same field"),
            );
        }
        Polynomial::new(self.field.clone(), out)
    }

    pub fn neg(&self) -> Self {
        Polynomial {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().map(|c| c.neg()).collect(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero(self.field.clone());
        }
        let mut out =
            vec![FieldElement::zero(&self.field); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j]
                    .add(&a.mul(b).expect("same field"))
                    .expect("same field");
            }
        }
        Polynomial::new(self.field.clone(), out)
    }

    pub fn scale(&self, c: &FieldElement) -> Self {
        Polynomial::new(
            self.field.clone(),
            self.coeffs
                .iter()
                .map(|x| x.mul(c).expect("same field"))
                .collect(),
        )
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut acc = Polynomial::one(self.field.clone());
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn divrem(&self, rhs: &Self) -> (Self, Self) {
        assert!(!rhs.is_zero(), "polynomial division by zero");
        let dd = rhs.degree().unwrap();
        let lcinv = rhs
            .leading_coefficient()
            .unwrap()
            .inverse()
            .expect("leading coefficient invertible");
        let mut rem = self.coeffs.clone();
        let qlen = rem.len().saturating_sub(dd);
        let mut quo = vec![FieldElement::zero(&self.field); qlen];
        while rem.len() > dd {
            let k = rem.len() - 1;
            let q = rem[k].mul(&lcinv).expect("same field");
            if !q.is_zero() {
                quo[k - dd] = q.clone();
                for (i, b) in rhs.coeffs.iter().enumerate() {
                    let idx = k - dd + i;
                    rem[idx] = rem[idx]
                        .sub(&q.mul(b).expect("same field"))
                        .expect("same field");
                }
            }
            debug_assert!(rem[k].is_zero());
            rem.pop();
        }
        (
            Polynomial::new(self.field.clone(), quo),
            Polynomial::new(self.field.clone(), rem),
        )
    }

    pub fn rem(&self, rhs: &Self) -> Self {
        self.divrem(rhs).1
    }

    pub fn divides(&self, other: &Self) -> bool {
        other.rem(self).is_zero()
    }

    pub fn monic(&self) -> Self {
        match self.leading_coefficient() {
            None => self.clone(),
            Some(lc) => self.scale(&lc.inverse().expect("nonzero")),
        }
    }

    pub fn gcd(a: &Self, b: &Self) -> Self {
        let mut x = a.clone();
        let mut y = b.clone();
        while !y.is_zero() {
            let r = x.rem(&y);
            x = y;
            y = r;
        }
        x.monic()
    }

    pub fn eval(&self, at: &FieldElement) -> FieldElement {
        let mut acc = FieldElement::zero(&at.field);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(at).and_then(|v| v.add(c)).expect("same field");
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        let mut out = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate().skip(1) {
            out.push(
                c.mul(&FieldElement::from_i64(&self.field, i as i64))
                    .expect("same field"),
            );
        }
        Polynomial::new(self.field.clone(), out)
    }

    pub fn pow_mod(&self, mut e: u64, m: &Self) -> Self {
        let mut acc = Polynomial::one(self.field.clone());
        let mut base = self.rem(m);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).rem(m);
            }
            base = base.mul(&base).rem(m);
            e >>= 1;
        }
        acc
    }

    // ---- finite-field-specific machinery ----

    /// Irreducibility over a finite base field, by distinct-degree sieving.
    pub fn is_irreducible(&self) -> bool {
        let q = self.field.order().expect("finite base field");
        let d = match self.degree() {
            None | Some(0) => return false,
            Some(d) => d,
        };
        if d == 1 {
            return true;
        }
        let f = self.monic();
        let x = Polynomial::monomial(self.field.clone(), 1, FieldElement::one(&self.field));
        // x^(q^i) mod f for i = 1..d/2: any common factor kills irreducibility
        let mut xq = x.clone();
        for _ in 0..d / 2 {
            xq = xq.pow_mod(q, &f);
            let g = Polynomial::gcd(&f, &xq.sub(&x));
            if g.degree() != Some(0) {
                return false;
            }
        }
        // and x^(q^d) = x mod f must hold
        let mut xqd = x.clone();
        for _ in 0..d {
            xqd = xqd.pow_mod(q, &f);
        }
        xqd.sub(&x).rem(&f).is_zero()
    }

    /// All monic polynomials of the given degree over a finite base field.
    pub fn enumerate_monic(field: &Field, deg: usize) -> Vec<Polynomial> {
        let ff = field.ff();
        let q = ff.order();
        let count = q.pow(deg as u32);
        let mut out = Vec::with_capacity(count as usize);
        for idx in 0..count {
            let mut coeffs = Vec::with_capacity(deg + 1);
            let mut i = idx;
            for _ in 0..deg {
                coeffs.push(FieldElement::finite(field, ff.element(i % q)));
                i /= q;
            }
            coeffs.push(FieldElement::one(field));
            out.push(Polynomial::new(field.clone(), coeffs));
        }
        out
    }

    /// Monic irreducibles of exactly the given degree, in index order.
    pub fn enumerate_irreducible(field: &Field, deg: usize) -> Vec<Polynomial> {
        Polynomial::enumerate_monic(field, deg)
            .into_iter()
            .filter(|f| f.is_irreducible())
            .collect()
    }

    /// Factorization over a finite field: distinct-degree decomposition, then
    /// trial splitting of each equal-degree part by enumerated irreducibles.
    /// Returns monic irreducible factors with multiplicities; the leading
    /// coefficient is dropped (callers multiply it back if needed).
    pub fn factor(&self) -> Vec<(Polynomial, usize)> {
        assert!(!self.is_zero(), "cannot factor the zero polynomial");
        let q = self.field.order().expect("finite base field");
        let mut out: Vec<(Polynomial, usize)> = Vec::new();
        let mut f = self.monic();
        if f.degree() == Some(0) {
            return out;
        }
        // strip multiplicities via repeated gcd with already-found factors
        // after the distinct-degree scan of the squarefree part
        let mut square_free_stack = vec![f.clone()];
        // full multiplicity handling: repeatedly divide by each irreducible found
        let mut found: Vec<Polynomial> = Vec::new();
        {
            // distinct-degree decomposition of the squarefree part
            let sf = f.squarefree_part();
            let x = Polynomial::monomial(self.field.clone(), 1, FieldElement::one(&self.field));
            let mut h = sf.clone();
            let mut xq = x.clone();
            let mut d = 0usize;
            while let Some(deg_h) = h.degree() {
                if deg_h == 0 {
                    break;
                }
                d += 1;
                if 2 * d > deg_h {
                    // remainder is irreducible
                    found.push(h.monic());
                    break;
                }
                xq = xq.pow_mod(q, &h);
                let g = Polynomial::gcd(&h, &xq.sub(&x));
                if g.degree().map(|dg| dg > 0).unwrap_or(false) {
                    // g is the product of all irreducible factors of degree d:
                    // split by trial division over enumerated irreducibles
                    let mut rest = g.clone();
                    for cand in Polynomial::enumerate_irreducible(&self.field, d) {
                        if rest.degree() == Some(0) {
                            break;
                        }
                        if cand.divides(&rest) {
                            found.push(cand.clone());
                            rest = rest.divrem(&cand).0;
                        }
                    }
                    debug_assert_eq!(rest.degree(), Some(0));
                    h = h.divrem(&g).0;
                    xq = xq.rem(&h);
                }
            }
        }
        square_free_stack.clear();
        for g in found {
            let mut mult = 0usize;
            while g.divides(&f) {
                f = f.divrem(&g).0;
                mult += 1;
            }
            if mult > 0 {
                out.push((g, mult));
            }
        }
        debug_assert_eq!(f.degree(), Some(0), "all factors accounted for");
        out.sort_by_key(|(g, _)| {
            (
                g.degree().unwrap_or(0),
                format!("{:?}", g.coeffs.iter().map(|c| c.as_finite().cloned()).collect::<Vec<_>>()),
            )
        });
        out
    }

    /// Largest squarefree divisor (works in characteristic 0 and p).
    pub fn squarefree_part(&self) -> Polynomial {
        let f = self.monic();
        if f.degree().map(|d| d == 0).unwrap_or(true) {
            return f;
        }
        let d = f.derivative();
        if d.is_zero() {
            // f = h^p: take the p-th root coefficientwise and recurse
            let p = self.field.characteristic() as usize;
            assert!(p > 0, "constant derivative only in positive characteristic");
            let mut coeffs = Vec::new();
            for (i, c) in f.coeffs.iter().enumerate() {
                if i % p == 0 {
                    coeffs.push(match &*self.field {
                        FieldDescriptor::PrimeField { .. } | FieldDescriptor::FiniteField { .. } => {
                            let ff = self.field.ff();
                            FieldElement::finite(&self.field, ff.frobenius_inverse(c.as_finite().unwrap()))
                        }
                        _ => c.clone(),
                    });
                } else {
                    debug_assert!(c.is_zero());
                }
            }
            return Polynomial::new(self.field.clone(), coeffs).squarefree_part();
        }
        let g = Polynomial::gcd(&f, &d);
        if g.degree() == Some(0) {
            return f;
        }
        // v carries every factor whose multiplicity is not divisible by char
        let v = f.divrem(&g).0;
        // strip the v-factors out of g; what is left is a p-th power
        let mut w = g;
        loop {
            let m = Polynomial::gcd(&w, &v);
            if m.degree() == Some(0) {
                break;
            }
            w = w.divrem(&m).0;
        }
        if w.degree() == Some(0) {
            v
        } else {
            v.mul(&w.squarefree_part())
        }
    }

    /// Exact square root for characteristic != 2, or `None`.
    pub fn sqrt(&self) -> Option<Polynomial> {
        if self.is_zero() {
            return Some(self.clone());
        }
        let d = self.degree().unwrap();
        if d % 2 != 0 {
            return None;
        }
        let lc = self.leading_coefficient().unwrap();
        let lc_root = sqrt_in_field(lc)?;
        let m = d / 2;
        // build s from the top down: s = lc_root t^m + ...
        let mut s = vec![FieldElement::zero(&self.field); m + 1];
        s[m] = lc_root;
        let two = FieldElement::from_i64(&self.field, 2);
        for k in (0..m).rev() {
            // coefficient of t^(m+k) in s^2 must equal self[m+k]
            let mut acc = FieldElement::zero(&self.field);
            for i in k + 1..=m {
                let j = m + k - i;
                if j > m || j <= k {
                    continue;
                }
                acc = acc.add(&s[i].mul(&s[j]).unwrap()).unwrap();
            }
            let target = self.coefficient(m + k).sub(&acc).unwrap();
            let denom = two.mul(&s[m]).unwrap();
            s[k] = target.div(&denom).ok()?;
        }
        let cand = Polynomial::new(self.field.clone(), s);
        if &cand.mul(&cand) == self {
            Some(cand)
        } else {
            None
        }
    }

    /// Squareness in characteristic 2: all odd coefficients vanish and the
    /// even ones are squares (automatic over perfect fields).
    pub fn is_square_char2(&self) -> bool {
        self.sqrt_char2().is_some()
    }

    pub fn sqrt_char2(&self) -> Option<Polynomial> {
        debug_assert_eq!(self.field.characteristic(), 2);
        if self.is_zero() {
            return Some(self.clone());
        }
        if self.degree().unwrap() % 2 != 0 {
            return None;
        }
        let ff = self.field.ff();
        let mut out = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if i % 2 == 1 {
                if !c.is_zero() {
                    return None;
                }
            } else {
                out.push(FieldElement::finite(
                    &self.field,
                    ff.frobenius_inverse(c.as_finite().unwrap()),
                ));
            }
        }
        let cand = Polynomial::new(self.field.clone(), out);
        debug_assert_eq!(&cand.mul(&cand), self);
        Some(cand)
    }

    /// Squareness over any supported coefficient field.
    pub fn is_square(&self) -> bool {
        if self.field.characteristic() == 2 {
            self.is_square_char2()
        } else {
            self.sqrt().is_some()
        }
    }

    // ---- rationals-specific machinery ----

    /// Factor a polynomial over Q into irreducibles, when every irreducible
    /// factor has degree <= 2 after stripping rational roots. Returns `Err`
    /// with the unresolved part otherwise (degree >= 3 rootless remainder of
    /// ambiguous shape; degree-3 remainders are irreducible and succeed).
    pub fn factor_over_q(&self) -> Result<Vec<(Polynomial, usize)>, Polynomial> {
        assert_eq!(*self.field, FieldDescriptor::Rationals);
        assert!(!self.is_zero());
        let mut out: Vec<(Polynomial, usize)> = Vec::new();
        let mut f = self.monic();
        // rational roots first
        loop {
            match f.degree() {
                None | Some(0) => break,
                Some(_) => {}
            }
            match f.rational_root() {
                Some(r) => {
                    let lin = Polynomial::new(
                        self.field.clone(),
                        vec![r.neg(), FieldElement::one(&self.field)],
                    );
                    let mut mult = 0;
                    while lin.divides(&f) {
                        f = f.divrem(&lin).0;
                        mult += 1;
                    }
                    push_factor(&mut out, lin, mult);
                }
                None => break,
            }
        }
        // rootless remainder
        loop {
            match f.degree() {
                None | Some(0) => return Ok(sorted_q_factors(out)),
                Some(1) => unreachable!("degree-1 polynomials have roots"),
                Some(2) | Some(3) => {
                    // rootless quadratics and cubics are irreducible
                    push_factor(&mut out, f.monic(), 1);
                    return Ok(sorted_q_factors(out));
                }
                Some(_) => {
                    // try to peel a square factor
                    let sf = f.squarefree_part();
                    if sf.degree() == f.degree() {
                        return Err(f);
                    }
                    let mut inner = sf.factor_over_q()?;
                    // divide out each factor with its true multiplicity in f
                    for (g, _) in inner.drain(..) {
                        let mut mult = 0;
                        while g.divides(&f) {
                            f = f.divrem(&g).0;
                            mult += 1;
                        }
                        push_factor(&mut out, g, mult);
                    }
                    if f.degree() == Some(0) {
                        return Ok(sorted_q_factors(out));
                    }
                }
            }
        }
    }

    /// Some rational root, via the rational root theorem.
    fn rational_root(&self) -> Option<FieldElement> {
        debug_assert_eq!(*self.field, FieldDescriptor::Rationals);
        let d = self.degree()?;
        if d == 0 {
            return None;
        }
        if self.coefficient(0).is_zero() {
            return Some(FieldElement::zero(&self.field));
        }
        // clear denominators to integer coefficients
        let mut den_lcm = BigInt::one();
        for c in &self.coeffs {
            let r = c.as_rational().unwrap();
            den_lcm = num::integer::lcm(den_lcm.clone(), r.denom().clone());
        }
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| {
                let r = c.as_rational().unwrap();
                (r * BigRational::from(den_lcm.clone())).to_integer()
            })
            .collect();
        let a0 = ints[0].abs();
        let an = ints[d].abs();
        let divs0 = divisors(&a0);
        let divsn = divisors(&an);
        for p in &divs0 {
            for q in &divsn {
                for sign in [1i64, -1] {
                    let cand = BigRational::new(p * BigInt::from(sign), q.clone());
                    let e = FieldElement::from_rational(&self.field, cand);
                    if self.eval(&e).is_zero() {
                        return Some(e);
                    }
                }
            }
        }
        None
    }
}

fn push_factor(out: &mut Vec<(Polynomial, usize)>, g: Polynomial, mult: usize) {
    if mult == 0 {
        return;
    }
    for (h, m) in out.iter_mut() {
        if *h == g {
            *m += mult;
            return;
        }
    }
    out.push((g, mult));
}

fn sorted_q_factors(mut out: Vec<(Polynomial, usize)>) -> Vec<(Polynomial, usize)> {
    out.sort_by_key(|(g, _)| (g.degree().unwrap_or(0), format!("{g:?}").len()));
    out
}

fn divisors(n: &BigInt) -> Vec<BigInt> {
    // positive divisors; n expected small at desk scale
    let mut out = vec![];
    let mut d = BigInt::one();
    while &d * &d <= *n {
        if (n % &d).is_zero() {
            out.push(d.clone());
            let q = n / &d;
            if q != d {
                out.push(q);
            }
        }
        d += 1;
    }
    out.sort();
    out
}

fn sqrt_in_field(x: &FieldElement) -> Option<FieldElement> {
    match &*x.field {
        FieldDescriptor::Rationals => {
            use num::integer::Roots;
            let r = x.as_rational().unwrap();
            if r.is_negative() {
                return None;
            }
            let n = r.numer().sqrt();
            let d = r.denom().sqrt();
            if n.pow(2u32) == *r.numer() && d.pow(2u32) == *r.denom() {
                Some(FieldElement::from_rational(
                    &x.field,
                    BigRational::new(n, d),
                ))
            } else {
                None
            }
        }
        FieldDescriptor::PrimeField { .. } | FieldDescriptor::FiniteField { .. } => {
            let ff = x.field.ff();
            ff.sqrt(x.as_finite().unwrap())
                .map(|v| FieldElement::finite(&x.field, v))
        }
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::FieldDescriptor;

    #[test]
    fn divrem_over_f5() {
        let f5 = FieldDescriptor::prime_field(5);
        // (t^2 - 1) = (t - 1)(t + 1)
        let f = Polynomial::from_i64(&f5, &[-1, 0, 1]);
        let g = Polynomial::from_i64(&f5, &[-1, 1]);
        let (q, r) = f.divrem(&g);
        assert!(r.is_zero());
        assert_eq!(q, Polynomial::from_i64(&f5, &[1, 1]));
    }

    #[test]
    fn factor_examples() {
        // t^2-1 over F_3 -> (t-1)(t+1); t^2+1 over F_3 irreducible; t^2+t over F_2 -> t(t+1)
        let f3 = FieldDescriptor::prime_field(3);
        let f = Polynomial::from_i64(&f3, &[-1, 0, 1]);
        let fs = f.factor();
        assert_eq!(fs.len(), 2);
        for (g, m) in &fs {
            assert_eq!(*m, 1);
            assert_eq!(g.degree(), Some(1));
        }
        let g = Polynomial::from_i64(&f3, &[1, 0, 1]);
        assert!(g.is_irreducible());
        assert_eq!(g.factor(), vec![(g.monic(), 1)]);
        let f2 = FieldDescriptor::prime_field(2);
        let h = Polynomial::from_i64(&f2, &[0, 1, 1]);
        let hs = h.factor();
        assert_eq!(hs.len(), 2);
    }

    #[test]
    fn factor_roundtrip_exhaustive_small() {
        // multiplying the factors (times the leading coefficient) reproduces
        // the input, exhaustively for degree <= 4 over F_2, F_3, and a sample
        // slice over F_5
        for p in [2u64, 3] {
            let f = FieldDescriptor::prime_field(p);
            for deg in 1..=4usize {
                let count = p.pow(deg as u32 + 1);
                for idx in 0..count {
                    let mut coeffs = Vec::new();
                    let mut i = idx;
                    for _ in 0..=deg {
                        coeffs.push(FieldElement::from_i64(&f, (i % p) as i64));
                        i /= p;
                    }
                    let poly = Polynomial::new(f.clone(), coeffs);
                    if poly.degree() != Some(deg) {
                        continue;
                    }
                    let factors = poly.factor();
                    let mut prod = Polynomial::constant(poly.leading_coefficient().unwrap().clone());
                    for (g, m) in &factors {
                        prod = prod.mul(&g.pow(*m as u64));
                    }
                    assert_eq!(prod, poly, "p={p} idx={idx}");
                }
            }
        }
        // F_5: exhaustive over monic degree-4
        let f5 = FieldDescriptor::prime_field(5);
        for poly in Polynomial::enumerate_monic(&f5, 4) {
            let factors = poly.factor();
            let mut prod = Polynomial::one(f5.clone());
            for (g, m) in &factors {
                prod = prod.mul(&g.pow(*m as u64));
            }
            assert_eq!(prod, poly);
        }
    }

    #[test]
    fn sqrt_over_q() {
        let q = FieldDescriptor::rationals();
        let f = Polynomial::from_i64(&q, &[1, 2, 1]); // (t+1)^2
        assert_eq!(f.sqrt(), Some(Polynomial::from_i64(&q, &[1, 1])));
        let g = Polynomial::from_i64(&q, &[2, 2, 1]);
        assert_eq!(g.sqrt(), None);
        let h = Polynomial::from_i64(&q, &[0, 0, 9]); // (3t)^2
        assert_eq!(h.sqrt(), Some(Polynomial::from_i64(&q, &[0, 3])));
    }

    #[test]
    fn factor_over_q_examples() {
        let q = FieldDescriptor::rationals();
        // t^3+1 = (t+1)(t^2-t+1)
        let f = Polynomial::from_i64(&q, &[1, 0, 0, 1]);
        let fs = f.factor_over_q().unwrap();
        assert_eq!(fs.len(), 2);
        assert_eq!(fs[0].0, Polynomial::from_i64(&q, &[1, 1]));
        assert_eq!(fs[1].0, Polynomial::from_i64(&q, &[1, -1, 1]));
        // t^2+1 irreducible
        let g = Polynomial::from_i64(&q, &[1, 0, 1]);
        assert_eq!(g.factor_over_q().unwrap(), vec![(g.clone(), 1)]);
        // (t^2+1)^2 via squarefree decomposition
        let g2 = g.mul(&g);
        assert_eq!(g2.factor_over_q().unwrap(), vec![(g, 2)]);
        // rational roots with denominators: (2t-1)(t+3) -> monic factors
        let h = Polynomial::from_i64(&q, &[-3, 5, 2]);
        let hs = h.factor_over_q().unwrap();
        assert_eq!(hs.len(), 2);
    }

    #[test]
    fn char2_square_test() {
        let f2 = FieldDescriptor::prime_field(2);
        let f = Polynomial::from_i64(&f2, &[1, 0, 1]); // t^2+1 = (t+1)^2
        assert!(f.is_square_char2());
        assert_eq!(f.sqrt_char2(), Some(Polynomial::from_i64(&f2, &[1, 1])));
        let g = Polynomial::from_i64(&f2, &[0, 1]); // t
        assert!(!g.is_square_char2());
    }
}
