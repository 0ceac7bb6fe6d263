//! Exact arithmetic for the supported field tower: the rationals, prime and
//! finite fields, rational function fields over those, and quadratic etale
//! algebras `K[X]/(X^2+bX+c)`.
//!
//! Every value is immutable and kept in canonical form, so equality is
//! structural. Arithmetic returns `Result` so that division by a non-unit in
//! an etale algebra (a meaningful outcome, not a bug) is observable.

pub mod finite;
pub mod parse;
pub mod poly;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};
use std::fmt;
use std::sync::Arc;

pub use finite::{Ff, FfElt};
pub use poly::Polynomial;

pub type Field = Arc<FieldDescriptor>;

#[derive(Debug, Clone, thiserror::Error, PartialEq, Eq)]
pub enum ArithError {
    #[error("division by zero or by a non-unit")]
    DivisionByZeroOrNonUnit,
    #[error("operands belong to different fields")]
    DescriptorMismatch,
    #[error("unsupported field for this operation: {0}")]
    UnsupportedField(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum FieldDescriptor {
    Rationals,
    PrimeField {
        p: u64,
    },
    FiniteField {
        p: u64,
        /// ascending coefficients, monic, irreducible over F_p, degree >= 2
        modulus: Vec<u64>,
    },
    /// Rational function field base(t).
    FunctionField {
        base: Field,
    },
    /// base[X]/(X^2 + bX + c); a field iff the polynomial is irreducible.
    QuadraticEtale {
        base: Field,
        b: FieldElement,
        c: FieldElement,
        is_field: bool,
    },
}

impl FieldDescriptor {
    pub fn rationals() -> Field {
        Arc::new(FieldDescriptor::Rationals)
    }

    pub fn prime_field(p: u64) -> Field {
        assert!(finite::is_prime_u64(p), "modulus must be prime");
        Arc::new(FieldDescriptor::PrimeField { p })
    }

    /// F_q with q = p^deg, using the lexicographically first irreducible modulus.
    pub fn finite_field_of_order(q: u64) -> Field {
        let (p, n) = split_prime_power(q).expect("order must be a prime power");
        if n == 1 {
            Self::prime_field(p)
        } else {
            Self::finite_field(p, finite::fp_poly::first_irreducible(p, n as usize))
        }
    }

    pub fn finite_field(p: u64, modulus: Vec<u64>) -> Field {
        assert!(finite::is_prime_u64(p), "characteristic must be prime");
        assert!(modulus.len() >= 3, "use prime_field for degree one");
        assert_eq!(*modulus.last().unwrap(), 1, "modulus must be monic");
        assert!(
            finite::fp_poly::is_irreducible(&modulus, p),
            "modulus must be irreducible over F_p"
        );
        Arc::new(FieldDescriptor::FiniteField { p, modulus })
    }

    pub fn function_field(base: Field) -> Field {
        match *base {
            FieldDescriptor::Rationals
            | FieldDescriptor::PrimeField { .. }
            | FieldDescriptor::FiniteField { .. } => {}
            _ => panic!("function fields are only supported over Q, F_p and F_q"),
        }
        Arc::new(FieldDescriptor::FunctionField { base })
    }

    pub fn quadratic_etale(base: Field, b: FieldElement, c: FieldElement) -> Result<Field, ArithError> {
        if b.field != base || c.field != base {
            return Err(ArithError::DescriptorMismatch);
        }
        let is_field = quadratic_irreducible(&b, &c, &base)?;
        Ok(Arc::new(FieldDescriptor::QuadraticEtale {
            base,
            b,
            c,
            is_field,
        }))
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            FieldDescriptor::Rationals => 0,
            FieldDescriptor::PrimeField { p } | FieldDescriptor::FiniteField { p, .. } => *p,
            FieldDescriptor::FunctionField { base } => base.characteristic(),
            FieldDescriptor::QuadraticEtale { base, .. } => base.characteristic(),
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(
            self,
            FieldDescriptor::PrimeField { .. } | FieldDescriptor::FiniteField { .. }
        )
    }

    /// Arithmetic context for a finite field descriptor.
    pub fn ff(&self) -> Ff {
        match self {
            FieldDescriptor::PrimeField { p } => Ff::prime(*p),
            FieldDescriptor::FiniteField { p, modulus } => Ff::extension(*p, modulus.clone()),
            _ => panic!("ff() on a non-finite field"),
        }
    }

    pub fn order(&self) -> Option<u64> {
        match self {
            FieldDescriptor::PrimeField { .. } | FieldDescriptor::FiniteField { .. } => {
                Some(self.ff().order())
            }
            FieldDescriptor::QuadraticEtale { base, is_field, .. } if *is_field => {
                base.order().map(|q| q * q)
            }
            _ => None,
        }
    }
}

pub(crate) fn split_prime_power(q: u64) -> Option<(u64, u32)> {
    for p in 2..=q {
        if q % p == 0 {
            if !finite::is_prime_u64(p) {
                return None;
            }
            let mut n = 0;
            let mut m = q;
            while m % p == 0 {
                m /= p;
                n += 1;
            }
            return if m == 1 { Some((p, n)) } else { None };
        }
    }
    None
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Value {
    Rational(BigRational),
    Finite(FfElt),
    /// Reduced fraction of polynomials over the base field; denominator monic.
    Function {
        num: Polynomial,
        den: Polynomial,
    },
    /// x1 * X + x0 over the base field.
    Etale {
        x1: Box<FieldElement>,
        x0: Box<FieldElement>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FieldElement {
    pub field: Field,
    pub value: Value,
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", parse::print_element(self))
    }
}

impl serde::Serialize for FieldElement {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&parse::print_element(self))
    }
}

impl FieldElement {
    pub fn zero(field: &Field) -> Self {
        let value = match &**field {
            FieldDescriptor::Rationals => Value::Rational(BigRational::zero()),
            FieldDescriptor::PrimeField { .. } | FieldDescriptor::FiniteField { .. } => {
                Value::Finite(vec![])
            }
            FieldDescriptor::FunctionField { base } => Value::Function {
                num: Polynomial::zero(base.clone()),
                den: Polynomial::one(base.clone()),
            },
            FieldDescriptor::QuadraticEtale { base, .. } => Value::Etale {
                x1: Box::new(FieldElement::zero(base)),
                x0: Box::new(FieldElement::zero(base)),
            },
        };
        FieldElement {
            field: field.clone(),
            value,
        }
    }

    pub fn one(field: &Field) -> Self {
        FieldElement::from_i64(field, 1)
    }

    pub fn from_i64(field: &Field, n: i64) -> Self {
        let value = match &**field {
            FieldDescriptor::Rationals => Value::Rational(BigRational::from(BigInt::from(n))),
            FieldDescriptor::PrimeField { .. } | FieldDescriptor::FiniteField { .. } => {
                Value::Finite(field.ff().from_i64(n))
            }
            FieldDescriptor::FunctionField { base } => {
                return FieldElement::function(
                    field.clone(),
                    Polynomial::constant(FieldElement::from_i64(base, n)),
                    Polynomial::one(base.clone()),
                );
            }
            FieldDescriptor::QuadraticEtale { base, .. } => Value::Etale {
                x1: Box::new(FieldElement::zero(base)),
                x0: Box::new(FieldElement::from_i64(base, n)),
            },
        };
        FieldElement {
            field: field.clone(),
            value,
        }
    }

    pub fn from_rational(field: &Field, r: BigRational) -> Self {
        match &**field {
            FieldDescriptor::Rationals => FieldElement {
                field: field.clone(),
                value: Value::Rational(r),
            },
            FieldDescriptor::FunctionField { base } => {
                let c = FieldElement::from_rational(base, r);
                FieldElement::constant_in_function_field(field, &c)
            }
            _ => panic!("from_rational on a field without Q inside"),
        }
    }

    pub fn finite(field: &Field, v: FfElt) -> Self {
        debug_assert!(field.is_finite());
        FieldElement {
            field: field.clone(),
            value: Value::Finite(v),
        }
    }

    /// The transcendental generator t of a function field.
    pub fn t(field: &Field) -> Self {
        match &**field {
            FieldDescriptor::FunctionField { base } => FieldElement::function(
                field.clone(),
                Polynomial::monomial(base.clone(), 1, FieldElement::one(base)),
                Polynomial::one(base.clone()),
            ),
            _ => panic!("t() on a non-function field"),
        }
    }

    /// Canonicalizing constructor for function-field elements.
    pub fn function(field: Field, num: Polynomial, den: Polynomial) -> Self {
        let base = match &*field {
            FieldDescriptor::FunctionField { base } => base.clone(),
            _ => panic!("function() on a non-function field"),
        };
        assert!(!den.is_zero(), "denominator must be nonzero");
        debug_assert_eq!(num.field, base);
        let g = Polynomial::gcd(&num, &den);
        let (num, _r1) = num.divrem(&g);
        let (den, _r2) = den.divrem(&g);
        debug_assert!(_r1.is_zero() && _r2.is_zero());
        // normalize: monic denominator
        let lc = den.leading_coefficient().expect("den nonzero");
        let lc_inv = lc.inverse().expect("leading coefficient invertible");
        let num = num.scale(&lc_inv);
        let den = den.scale(&lc_inv);
        FieldElement {
            field,
            value: Value::Function { num, den },
        }
    }

    pub fn constant_in_function_field(field: &Field, c: &FieldElement) -> Self {
        FieldElement::function(
            field.clone(),
            Polynomial::constant(c.clone()),
            Polynomial::one(c.field.clone()),
        )
    }

    pub fn from_poly(field: &Field, p: Polynomial) -> Self {
        let base = p.field.clone();
        FieldElement::function(field.clone(), p, Polynomial::one(base))
    }

    pub fn etale(field: &Field, x1: FieldElement, x0: FieldElement) -> Self {
        match &**field {
            FieldDescriptor::QuadraticEtale { base, .. } => {
                assert_eq!(&x1.field, base);
                assert_eq!(&x0.field, base);
            }
            _ => panic!("etale() on a non-etale field"),
        }
        FieldElement {
            field: field.clone(),
            value: Value::Etale {
                x1: Box::new(x1),
                x0: Box::new(x0),
            },
        }
    }

    /// The image of X in base[X]/(X^2+bX+c).
    pub fn etale_generator(field: &Field) -> Self {
        match &**field {
            FieldDescriptor::QuadraticEtale { base, .. } => FieldElement::etale(
                field,
                FieldElement::one(base),
                FieldElement::zero(base),
            ),
            _ => panic!("etale_generator() on a non-etale field"),
        }
    }

    /// Embed a base-field element into an etale algebra over it.
    pub fn etale_from_base(field: &Field, x0: FieldElement) -> Self {
        match &**field {
            FieldDescriptor::QuadraticEtale { base, .. } => {
                let z = FieldElement::zero(base);
                FieldElement::etale(field, z, x0)
            }
            _ => panic!("etale_from_base() on a non-etale field"),
        }
    }

    pub fn is_zero(&self) -> bool {
        match &self.value {
            Value::Rational(r) => r.is_zero(),
            Value::Finite(v) => v.is_empty(),
            Value::Function { num, .. } => num.is_zero(),
            Value::Etale { x1, x0 } => x1.is_zero() && x0.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        *self == FieldElement::one(&self.field)
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match &self.value {
            Value::Rational(r) => Some(r),
            _ => None,
        }
    }

    pub fn as_finite(&self) -> Option<&FfElt> {
        match &self.value {
            Value::Finite(v) => Some(v),
            _ => None,
        }
    }

    pub fn as_function(&self) -> Option<(&Polynomial, &Polynomial)> {
        match &self.value {
            Value::Function { num, den } => Some((num, den)),
            _ => None,
        }
    }

    pub fn as_etale(&self) -> Option<(&FieldElement, &FieldElement)> {
        match &self.value {
            Value::Etale { x1, x0 } => Some((x1, x0)),
            _ => None,
        }
    }

    fn check_same_field(&self, rhs: &Self) -> Result<(), ArithError> {
        if self.field == rhs.field {
            Ok(())
        } else {
            Err(ArithError::DescriptorMismatch)
        }
    }

    pub fn add(&self, rhs: &Self) -> Result<Self, ArithError> {
        self.check_same_field(rhs)?;
        let value = match (&self.value, &rhs.value) {
            (Value::Rational(a), Value::Rational(b)) => Value::Rational(a + b),
            (Value::Finite(a), Value::Finite(b)) => Value::Finite(self.field.ff().add(a, b)),
            (Value::Function { num: n1, den: d1 }, Value::Function { num: n2, den: d2 }) => {
                let num = n1.mul(d2).add(&n2.mul(d1));
                let den = d1.mul(d2);
                return Ok(FieldElement::function(self.field.clone(), num, den));
            }
            (Value::Etale { x1: a1, x0: a0 }, Value::Etale { x1: b1, x0: b0 }) => Value::Etale {
                x1: Box::new(a1.add(b1)?),
                x0: Box::new(a0.add(b0)?),
            },
            _ => return Err(ArithError::DescriptorMismatch),
        };
        Ok(FieldElement {
            field: self.field.clone(),
            value,
        })
    }

    pub fn neg(&self) -> Self {
        let value = match &self.value {
            Value::Rational(a) => Value::Rational(-a),
            Value::Finite(a) => Value::Finite(self.field.ff().neg(a)),
            Value::Function { num, den } => Value::Function {
                num: num.neg(),
                den: den.clone(),
            },
            Value::Etale { x1, x0 } => Value::Etale {
                x1: Box::new(x1.neg()),
                x0: Box::new(x0.neg()),
            },
        };
        FieldElement {
            field: self.field.clone(),
            value,
        }
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self, ArithError> {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &Self) -> Result<Self, ArithError> {
        self.check_same_field(rhs)?;
        let value = match (&self.value, &rhs.value) {
            (Value::Rational(a), Value::Rational(b)) => Value::Rational(a * b),
            (Value::Finite(a), Value::Finite(b)) => Value::Finite(self.field.ff().mul(a, b)),
            (Value::Function { num: n1, den: d1 }, Value::Function { num: n2, den: d2 }) => {
                return Ok(FieldElement::function(
                    self.field.clone(),
                    n1.mul(n2),
                    d1.mul(d2),
                ));
            }
            (Value::Etale { x1: a1, x0: a0 }, Value::Etale { x1: b1, x0: b0 }) => {
                // (a1 X + a0)(b1 X + b0) with X^2 = -bX - c
                let (b, c) = match &*self.field {
                    FieldDescriptor::QuadraticEtale { b, c, .. } => (b, c),
                    _ => unreachable!(),
                };
                let cross = a1.mul(b0)?.add(&a0.mul(b1)?)?;
                let sq = a1.mul(b1)?;
                let x1 = cross.sub(&sq.mul(b)?)?;
                let x0 = a0.mul(b0)?.sub(&sq.mul(c)?)?;
                Value::Etale {
                    x1: Box::new(x1),
                    x0: Box::new(x0),
                }
            }
            _ => return Err(ArithError::DescriptorMismatch),
        };
        Ok(FieldElement {
            field: self.field.clone(),
            value,
        })
    }

    /// Norm to the base field (etale algebras only).
    pub fn etale_norm(&self) -> Result<FieldElement, ArithError> {
        let (b, c) = match &*self.field {
            FieldDescriptor::QuadraticEtale { b, c, .. } => (b, c),
            _ => {
                return Err(ArithError::UnsupportedField(
                    "norm is defined on etale algebras".into(),
                ))
            }
        };
        let (x1, x0) = self.as_etale().unwrap();
        // N(x1 X + x0) = c x1^2 - b x1 x0 + x0^2
        let t1 = c.mul(&x1.mul(x1)?)?;
        let t2 = b.mul(&x1.mul(x0)?)?;
        let t3 = x0.mul(x0)?;
        t1.sub(&t2)?.add(&t3)
    }

    pub fn is_unit(&self) -> bool {
        match &self.value {
            Value::Etale { .. } => {
                !self.is_zero() && !self.etale_norm().map(|n| n.is_zero()).unwrap_or(true)
            }
            _ => !self.is_zero(),
        }
    }

    pub fn inverse(&self) -> Result<Self, ArithError> {
        if self.is_zero() {
            return Err(ArithError::DivisionByZeroOrNonUnit);
        }
        let value = match &self.value {
            Value::Rational(a) => Value::Rational(a.recip()),
            Value::Finite(a) => Value::Finite(
                self.field
                    .ff()
                    .inv(a)
                    .ok_or(ArithError::DivisionByZeroOrNonUnit)?,
            ),
            Value::Function { num, den } => {
                return Ok(FieldElement::function(
                    self.field.clone(),
                    den.clone(),
                    num.clone(),
                ));
            }
            Value::Etale { x1, x0 } => {
                // (x1 X + x0)^{-1} = (-x1 X + (x0 - b x1)) / N
                let b = match &*self.field {
                    FieldDescriptor::QuadraticEtale { b, .. } => b,
                    _ => unreachable!(),
                };
                let n = self.etale_norm()?;
                if n.is_zero() {
                    return Err(ArithError::DivisionByZeroOrNonUnit);
                }
                let ninv = n.inverse()?;
                let y1 = x1.neg().mul(&ninv)?;
                let y0 = x0.sub(&b.mul(x1)?)?.mul(&ninv)?;
                Value::Etale {
                    x1: Box::new(y1),
                    x0: Box::new(y0),
                }
            }
        };
        Ok(FieldElement {
            field: self.field.clone(),
            value,
        })
    }

    pub fn div(&self, rhs: &Self) -> Result<Self, ArithError> {
        self.mul(&rhs.inverse()?)
    }

    pub fn pow(&self, e: i64) -> Result<Self, ArithError> {
        if e < 0 {
            return self.inverse()?.pow(-e);
        }
        let mut acc = FieldElement::one(&self.field);
        let mut base = self.clone();
        let mut e = e as u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base)?;
            }
            base = base.mul(&base)?;
            e >>= 1;
        }
        Ok(acc)
    }

    /// For elements of Q(t): the image under t -> 1/t (used at the degree place).
    pub fn substitute_inverse_t(&self) -> Self {
        let (num, den) = self.as_function().expect("substitute on function field");
        if num.is_zero() {
            return self.clone();
        }
        let dn = num.degree().unwrap();
        let dd = den.degree().unwrap();
        let d = dn.max(dd);
        let rev = |p: &Polynomial| -> Polynomial {
            // t^d * p(1/t)
            let mut coeffs = vec![FieldElement::zero(&p.field); d + 1];
            for (i, c) in p.coeffs.iter().enumerate() {
                coeffs[d - i] = c.clone();
            }
            Polynomial::new(p.field.clone(), coeffs)
        };
        FieldElement::function(self.field.clone(), rev(num), rev(den))
    }
}

/// Generic binary operation dispatch used by parsers and the CLI.
pub fn arith(a: &FieldElement, b: &FieldElement, op: char) -> Result<FieldElement, ArithError> {
    match op {
        '+' => a.add(b),
        '-' => a.sub(b),
        '*' => a.mul(b),
        '/' => a.div(b),
        _ => panic!("unknown operation {op}"),
    }
}

/// Decides irreducibility of X^2 + bX + c over the supported fields.
pub fn quadratic_irreducible(
    b: &FieldElement,
    c: &FieldElement,
    field: &Field,
) -> Result<bool, ArithError> {
    if &b.field != field || &c.field != field {
        return Err(ArithError::DescriptorMismatch);
    }
    let char2 = field.characteristic() == 2;
    if !char2 {
        // disc = b^2 - 4c; reducible iff disc is a square
        let disc = b
            .mul(b)?
            .sub(&FieldElement::from_i64(field, 4).mul(c)?)?;
        Ok(!is_square(&disc)?)
    } else if !b.is_zero() {
        // substitute X -> bY: Y^2 + Y + c/b^2; irreducible iff c/b^2 is not
        // of the form y^2 + y
        let r = c.div(&b.mul(b)?)?;
        Ok(!in_artin_schreier_image(&r)?)
    } else {
        // X^2 + c; irreducible iff c is not a square
        Ok(!is_square(c)?)
    }
}

/// Exact squareness test in the supported fields.
pub fn is_square(x: &FieldElement) -> Result<bool, ArithError> {
    if x.is_zero() {
        return Ok(true);
    }
    match (&*x.field, &x.value) {
        (FieldDescriptor::Rationals, Value::Rational(r)) => {
            use num::integer::Roots;
            Ok(!r.is_negative()
                && r.numer().sqrt().pow(2u32) == *r.numer()
                && r.denom().sqrt().pow(2u32) == *r.denom())
        }
        (FieldDescriptor::PrimeField { .. } | FieldDescriptor::FiniteField { .. }, Value::Finite(v)) => {
            Ok(x.field.ff().is_square(v))
        }
        (FieldDescriptor::FunctionField { base }, Value::Function { num, den }) => {
            if base.characteristic() == 2 {
                Ok(num.is_square_char2() && den.is_square_char2())
            } else {
                // f/g = s^2 iff f*g is a square polynomial
                Ok(num.mul(den).is_square())
            }
        }
        _ => Err(ArithError::UnsupportedField(
            "squareness test not supported here".into(),
        )),
    }
}

/// Decides membership in the Artin-Schreier image {y^2 + y} in characteristic 2.
pub fn in_artin_schreier_image(x: &FieldElement) -> Result<bool, ArithError> {
    assert_eq!(x.field.characteristic(), 2);
    match (&*x.field, &x.value) {
        (FieldDescriptor::PrimeField { .. } | FieldDescriptor::FiniteField { .. }, Value::Finite(v)) => {
            Ok(x.field.ff().in_artin_schreier_image(v))
        }
        (FieldDescriptor::FunctionField { base }, Value::Function { num, den }) => {
            as_image_function_field(num, den, base)
        }
        _ => Err(ArithError::UnsupportedField(
            "Artin-Schreier test not supported here".into(),
        )),
    }
}

/// y^2 + y = f/g solvable in F_q(t)? The denominator must be a perfect square
/// (poles of y^2+y have even order), after which candidates for the numerator
/// of y are bounded in degree and can be enumerated.
fn as_image_function_field(
    num: &Polynomial,
    den: &Polynomial,
    base: &Field,
) -> Result<bool, ArithError> {
    let ff = base.ff();
    debug_assert_eq!(ff.p, 2);
    if num.is_zero() {
        return Ok(true);
    }
    if den.degree() == Some(0) {
        // polynomial case: peel even-degree leading terms by subtracting
        // (s t^m)^2 + (s t^m)
        let mut f = num.clone();
        loop {
            match f.degree() {
                None => return Ok(true),
                Some(0) => {
                    let c = f.coeffs[0].as_finite().unwrap();
                    return Ok(ff.in_artin_schreier_image(c));
                }
                Some(d) if d % 2 == 1 => return Ok(false),
                Some(d) => {
                    let m = d / 2;
                    let lead = f.coeffs[d].as_finite().unwrap();
                    let s = ff.frobenius_inverse(lead);
                    let se = FieldElement::finite(base, s);
                    // f <- f + s^2 t^(2m) + s t^m  (char 2: adding subtracts)
                    let sq = Polynomial::monomial(base.clone(), d, se.mul(&se).unwrap());
                    let lin = Polynomial::monomial(base.clone(), m, se);
                    f = f.add(&sq).add(&lin);
                }
            }
        }
    } else {
        // y = a/h with h^2 = den
        let h = match den.sqrt_char2() {
            Some(h) => h,
            None => return Ok(false),
        };
        // a^2 + h a + f = 0 for a polynomial a of bounded degree
        let df = num.degree().unwrap_or(0);
        let dh = h.degree().unwrap_or(0);
        let bound = dh.max(df.div_ceil(2));
        let qn = ff.order().pow(bound as u32 + 1);
        for idx in 0..qn {
            let mut coeffs = Vec::with_capacity(bound + 1);
            let mut i = idx;
            for _ in 0..=bound {
                coeffs.push(FieldElement::finite(base, ff.element(i % ff.order())));
                i /= ff.order();
            }
            let a = Polynomial::new(base.clone(), coeffs);
            let lhs = a.mul(&a).add(&h.mul(&a)).add(num);
            if lhs.is_zero() {
                return Ok(true);
            }
        }
        Ok(false)
    }
}

/// Quadratic-residue symbol of an integer (or residue) modulo an odd prime.
pub fn legendre(a: &BigInt, p: u64) -> i32 {
    debug_assert!(p % 2 == 1 && finite::is_prime_u64(p));
    let r = a.mod_floor(&BigInt::from(p));
    let r64: u64 = r.try_into().unwrap();
    if r64 == 0 {
        0
    } else {
        let e = finite::powmod(r64, (p - 1) / 2, p);
        if e == 1 {
            1
        } else {
            -1
        }
    }
}

use num::Integer as NumInteger;
trait ModFloor {
    fn mod_floor(&self, m: &BigInt) -> BigInt;
}
impl ModFloor for BigInt {
    fn mod_floor(&self, m: &BigInt) -> BigInt {
        NumInteger::mod_floor(self, m)
    }
}

/// An embedding of one finite field into another, when it exists.
///
/// The generator of the source is sent to the first root of the source
/// modulus in the target (first in index order), which makes the embedding
/// deterministic.
pub struct FiniteEmbedding {
    pub src: Field,
    pub dst: Field,
    image_of_gen: FfElt,
}

impl FiniteEmbedding {
    pub fn new(src: &Field, dst: &Field) -> Option<FiniteEmbedding> {
        let sf = src.ff();
        let df = dst.ff();
        if sf.p != df.p || df.degree() % sf.degree() != 0 {
            return None;
        }
        // find a root of the source modulus in the target
        let modulus: Vec<FfElt> = src
            .ff()
            .modulus
            .iter()
            .map(|&c| df.from_u64(c))
            .collect();
        let root = df.elements().find(|x| {
            let mut acc = df.zero();
            for c in modulus.iter().rev() {
                acc = df.add(&df.mul(&acc, x), c);
            }
            acc.is_empty()
        })?;
        Some(FiniteEmbedding {
            src: src.clone(),
            dst: dst.clone(),
            image_of_gen: root,
        })
    }

    pub fn map(&self, x: &FieldElement) -> FieldElement {
        assert_eq!(x.field, self.src);
        let df = self.dst.ff();
        let v = x.as_finite().unwrap();
        let mut acc = df.zero();
        for &c in v.iter().rev() {
            acc = df.add(&df.mul(&acc, &self.image_of_gen), &df.from_u64(c));
        }
        FieldElement::finite(&self.dst, acc)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Field {
        FieldDescriptor::rationals()
    }

    #[test]
    fn rational_arith() {
        let f = q();
        let half = FieldElement::from_i64(&f, 1).div(&FieldElement::from_i64(&f, 2)).unwrap();
        let third = FieldElement::from_i64(&f, 1).div(&FieldElement::from_i64(&f, 3)).unwrap();
        let sum = half.add(&third).unwrap();
        let expect = FieldElement::from_i64(&f, 5).div(&FieldElement::from_i64(&f, 6)).unwrap();
        assert_eq!(sum, expect);
    }

    #[test]
    fn finite_field_f9() {
        // z * z = -1 = 2 in F_9 = F_3[z]/(z^2+1)
        let f9 = FieldDescriptor::finite_field(3, vec![1, 0, 1]);
        let z = FieldElement::finite(&f9, vec![0, 1]);
        assert_eq!(z.mul(&z).unwrap(), FieldElement::from_i64(&f9, 2));
    }

    #[test]
    fn etale_x_squared() {
        // In Q[X]/(X^2+X+1): X * X = -X - 1, i.e. the pair (-1, -1).
        // Oracle: long division of X^2 by X^2+X+1 leaves remainder -X-1.
        let f = q();
        let e = FieldDescriptor::quadratic_etale(
            f.clone(),
            FieldElement::one(&f),
            FieldElement::one(&f),
        )
        .unwrap();
        let x = FieldElement::etale_generator(&e);
        let sq = x.mul(&x).unwrap();
        let minus1 = FieldElement::from_i64(&f, -1);
        assert_eq!(
            sq,
            FieldElement::etale(&e, minus1.clone(), minus1.clone())
        );
        // and the algebra is a field (disc = -3 not a square in Q)
        match &*e {
            FieldDescriptor::QuadraticEtale { is_field, .. } => assert!(*is_field),
            _ => unreachable!(),
        }
        // norm-based inverse round-trips
        let y = FieldElement::etale(
            &e,
            FieldElement::from_i64(&f, 2),
            FieldElement::from_i64(&f, -3),
        );
        let yi = y.inverse().unwrap();
        assert!(y.mul(&yi).unwrap().is_one());
    }

    #[test]
    fn etale_zero_divisor_reported() {
        // Q[X]/(X^2-1) is not a field; X-1 is a zero divisor
        let f = q();
        let e = FieldDescriptor::quadratic_etale(
            f.clone(),
            FieldElement::zero(&f),
            FieldElement::from_i64(&f, -1),
        )
        .unwrap();
        match &*e {
            FieldDescriptor::QuadraticEtale { is_field, .. } => assert!(!*is_field),
            _ => unreachable!(),
        }
        let zd = FieldElement::etale(
            &e,
            FieldElement::one(&f),
            FieldElement::from_i64(&f, -1),
        );
        assert!(!zd.is_zero());
        assert_eq!(zd.inverse(), Err(ArithError::DivisionByZeroOrNonUnit));
    }

    #[test]
    fn quadratic_irreducible_examples() {
        // F_5, b=1, c=1: disc = -3 = 2, a non-square mod 5 (squares are {0,1,4})
        let f5 = FieldDescriptor::prime_field(5);
        assert!(quadratic_irreducible(
            &FieldElement::one(&f5),
            &FieldElement::one(&f5),
            &f5
        )
        .unwrap());
        // Q, b=0, c=-1: X^2-1 has the root 1
        let f = q();
        assert!(!quadratic_irreducible(
            &FieldElement::zero(&f),
            &FieldElement::from_i64(&f, -1),
            &f
        )
        .unwrap());
        // F_2, b=1, c=1: X^2+X+1 has no root in F_2
        let f2 = FieldDescriptor::prime_field(2);
        assert!(quadratic_irreducible(
            &FieldElement::one(&f2),
            &FieldElement::one(&f2),
            &f2
        )
        .unwrap());
    }

    #[test]
    fn quadratic_irreducible_vs_root_search() {
        // oracle: exhaustive root search over every F_q with q <= 25
        for q in [2u64, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25] {
            let f = FieldDescriptor::finite_field_of_order(q);
            let ff = f.ff();
            for bi in 0..q {
                for ci in 0..q {
                    let b = FieldElement::finite(&f, ff.element(bi));
                    let c = FieldElement::finite(&f, ff.element(ci));
                    let has_root = ff.elements().any(|x| {
                        let v = ff.add(
                            &ff.add(&ff.mul(&x, &x), &ff.mul(&x, b.as_finite().unwrap())),
                            c.as_finite().unwrap(),
                        );
                        v.is_empty()
                    });
                    assert_eq!(
                        quadratic_irreducible(&b, &c, &f).unwrap(),
                        !has_root,
                        "q={q} b={bi} c={ci}"
                    );
                }
            }
        }
    }

    #[test]
    fn legendre_multiplicative() {
        for p in [3u64, 5, 7, 11, 13, 17, 19, 23, 29, 31] {
            for a in 1..p {
                for b in 1..p {
                    let la = legendre(&BigInt::from(a), p);
                    let lb = legendre(&BigInt::from(b), p);
                    let lab = legendre(&BigInt::from(a * b), p);
                    assert_eq!(lab, la * lb);
                }
            }
        }
    }

    #[test]
    fn function_field_canonical_form() {
        let f = FieldDescriptor::function_field(q());
        let t = FieldElement::t(&f);
        // (t^2 - 1)/(t - 1) reduces to t + 1
        let num = t.mul(&t).unwrap().sub(&FieldElement::one(&f)).unwrap();
        let den = t.sub(&FieldElement::one(&f)).unwrap();
        let x = num.div(&den).unwrap();
        let expect = t.add(&FieldElement::one(&f)).unwrap();
        assert_eq!(x, expect);
    }

    #[test]
    fn artin_schreier_function_field() {
        // over F_2(t): t^2 + t is in the image, t is not, 1/t^2 + 1/t is
        let f2t = FieldDescriptor::function_field(FieldDescriptor::prime_field(2));
        let t = FieldElement::t(&f2t);
        let t2t = t.mul(&t).unwrap().add(&t).unwrap();
        assert!(in_artin_schreier_image(&t2t).unwrap());
        assert!(!in_artin_schreier_image(&t).unwrap());
        let y = t.inverse().unwrap();
        let img = y.mul(&y).unwrap().add(&y).unwrap();
        assert!(in_artin_schreier_image(&img).unwrap());
        // 1/t has an odd-order pole, so it is not in the image
        assert!(!in_artin_schreier_image(&y).unwrap());
    }

    #[test]
    fn finite_embedding_f3_in_f9() {
        let f3 = FieldDescriptor::prime_field(3);
        let f9 = FieldDescriptor::finite_field(3, vec![1, 0, 1]);
        let emb = FiniteEmbedding::new(&f3, &f9).unwrap();
        let two = FieldElement::from_i64(&f3, 2);
        assert_eq!(emb.map(&two), FieldElement::from_i64(&f9, 2));
        let e99 = FiniteEmbedding::new(&f9, &f9).unwrap();
        let z = FieldElement::finite(&f9, vec![0, 1]);
        let zi = e99.map(&z);
        // maps to a root of z^2+1
        assert!(zi.mul(&zi).unwrap().add(&FieldElement::one(&f9)).unwrap().is_zero());
    }
}
