//! The element and field grammar shared by the CLI and test fixtures.
//!
//! Elements: integers `-12`, rationals `3/7`, polynomials `t^2+3*t-1`,
//! function-field elements `(t^2+1)/(t-2)`, etale pairs `[b1,b2]`.
//! Fields: `Q`, `F5`, `F9:z^2+1`, `Q(t)`, `F3(t)`, `etale(Q;1;1)`.
//!
//! Canonical printing uses monic denominators, descending powers and no
//! spaces, so printed forms re-parse to structurally equal values.

use super::{arith, Field, FieldDescriptor, FieldElement, Value};
use num::{One, Signed};

#[derive(Debug, Clone, thiserror::Error, PartialEq, Eq)]
#[error("syntax error at byte {position}: {message}")]
pub struct SyntaxError {
    pub position: usize,
    pub message: String,
}

fn err<T>(position: usize, message: impl Into<String>) -> Result<T, SyntaxError> {
    Err(SyntaxError {
        position,
        message: message.into(),
    })
}

// ---- expression AST ----

#[derive(Debug, Clone)]
enum Expr {
    Int(i64),
    Var(char),
    Pair(Box<Expr>, Box<Expr>),
    Neg(Box<Expr>),
    Bin(char, Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
}

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn new(src: &'a str) -> Self {
        Lexer {
            src: src.as_bytes(),
            pos: 0,
        }
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<u8> {
        let c = self.peek();
        if c.is_some() {
            self.pos += 1;
        }
        c
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(b' ') | Some(b'\t')) {
            self.pos += 1;
        }
    }

    fn integer(&mut self) -> Result<i64, SyntaxError> {
        let start = self.pos;
        let mut v: i64 = 0;
        while let Some(c) = self.peek() {
            if c.is_ascii_digit() {
                v = v
                    .checked_mul(10)
                    .and_then(|x| x.checked_add((c - b'0') as i64))
                    .ok_or(SyntaxError {
                        position: start,
                        message: "integer literal too large".into(),
                    })?;
                self.pos += 1;
            } else {
                break;
            }
        }
        if self.pos == start {
            return err(start, "expected an integer");
        }
        Ok(v)
    }
}

fn parse_expr(lex: &mut Lexer) -> Result<Expr, SyntaxError> {
    let mut acc = parse_term(lex)?;
    loop {
        lex.skip_ws();
        match lex.peek() {
            Some(b'+') => {
                lex.bump();
                let rhs = parse_term(lex)?;
                acc = Expr::Bin('+', Box::new(acc), Box::new(rhs));
            }
            Some(b'-') => {
                lex.bump();
                let rhs = parse_term(lex)?;
                acc = Expr::Bin('-', Box::new(acc), Box::new(rhs));
            }
            _ => return Ok(acc),
        }
    }
}

fn parse_term(lex: &mut Lexer) -> Result<Expr, SyntaxError> {
    let mut acc = parse_factor(lex)?;
    loop {
        lex.skip_ws();
        match lex.peek() {
            Some(b'*') => {
                lex.bump();
                let rhs = parse_factor(lex)?;
                acc = Expr::Bin('*', Box::new(acc), Box::new(rhs));
            }
            Some(b'/') => {
                lex.bump();
                let rhs = parse_factor(lex)?;
                acc = Expr::Bin('/', Box::new(acc), Box::new(rhs));
            }
            _ => return Ok(acc),
        }
    }
}

fn parse_factor(lex: &mut Lexer) -> Result<Expr, SyntaxError> {
    lex.skip_ws();
    if lex.peek() == Some(b'-') {
        lex.bump();
        let inner = parse_factor(lex)?;
        return Ok(Expr::Neg(Box::new(inner)));
    }
    let mut base = parse_primary(lex)?;
    lex.skip_ws();
    if lex.peek() == Some(b'^') {
        lex.bump();
        lex.skip_ws();
        let e = lex.integer()?;
        if e < 0 {
            return err(lex.pos, "negative exponents are not supported");
        }
        base = Expr::Pow(Box::new(base), e as u32);
    }
    Ok(base)
}

fn parse_primary(lex: &mut Lexer) -> Result<Expr, SyntaxError> {
    lex.skip_ws();
    match lex.peek() {
        Some(c) if c.is_ascii_digit() => Ok(Expr::Int(lex.integer()?)),
        Some(c) if c.is_ascii_lowercase() => {
            lex.bump();
            Ok(Expr::Var(c as char))
        }
        Some(b'(') => {
            lex.bump();
            let e = parse_expr(lex)?;
            lex.skip_ws();
            if lex.bump() != Some(b')') {
                return err(lex.pos, "expected ')'");
            }
            Ok(e)
        }
        Some(b'[') => {
            lex.bump();
            let a = parse_expr(lex)?;
            lex.skip_ws();
            if lex.bump() != Some(b',') {
                return err(lex.pos, "expected ',' in etale pair");
            }
            let b = parse_expr(lex)?;
            lex.skip_ws();
            if lex.bump() != Some(b']') {
                return err(lex.pos, "expected ']'");
            }
            Ok(Expr::Pair(Box::new(a), Box::new(b)))
        }
        _ => err(lex.pos, "expected a value"),
    }
}

fn eval_expr(e: &Expr, field: &Field, var: char) -> Result<FieldElement, SyntaxError> {
    let lift = |r: Result<FieldElement, super::ArithError>| {
        r.map_err(|e| SyntaxError {
            position: 0,
            message: e.to_string(),
        })
    };
    match e {
        Expr::Int(n) => Ok(FieldElement::from_i64(field, *n)),
        Expr::Var(v) if *v == var => match &**field {
            FieldDescriptor::FunctionField { .. } => Ok(FieldElement::t(field)),
            _ => err(0, format!("variable {v} is not defined in this field")),
        },
        Expr::Var('z') => match &**field {
            FieldDescriptor::FiniteField { .. } => {
                Ok(FieldElement::finite(field, vec![0, 1]))
            }
            FieldDescriptor::FunctionField { base }
                if matches!(&**base, FieldDescriptor::FiniteField { .. }) =>
            {
                let g = FieldElement::finite(base, vec![0, 1]);
                Ok(FieldElement::constant_in_function_field(field, &g))
            }
            _ => err(0, "variable z is only defined in extension fields"),
        },
        Expr::Var(v) => err(0, format!("unknown variable {v}")),
        Expr::Pair(a, b) => match &**field {
            FieldDescriptor::QuadraticEtale { base, .. } => {
                let x1 = eval_expr(a, base, var)?;
                let x0 = eval_expr(b, base, var)?;
                Ok(FieldElement::etale(field, x1, x0))
            }
            _ => err(0, "etale pairs only make sense in an etale algebra"),
        },
        Expr::Neg(a) => Ok(eval_expr(a, field, var)?.neg()),
        Expr::Bin(op, a, b) => {
            let x = eval_expr(a, field, var)?;
            let y = eval_expr(b, field, var)?;
            lift(arith(&x, &y, *op))
        }
        Expr::Pow(a, e) => {
            let x = eval_expr(a, field, var)?;
            lift(x.pow(*e as i64))
        }
    }
}

/// Parse an element of the given field from the shared grammar.
pub fn parse_element(src: &str, field: &Field) -> Result<FieldElement, SyntaxError> {
    parse_element_with_var(src, field, 't')
}

pub fn parse_element_with_var(
    src: &str,
    field: &Field,
    var: char,
) -> Result<FieldElement, SyntaxError> {
    let mut lex = Lexer::new(src);
    let e = parse_expr(&mut lex)?;
    lex.skip_ws();
    if lex.pos != lex.src.len() {
        return err(lex.pos, "trailing input");
    }
    eval_expr(&e, field, var)
}

// ---- canonical printing ----

pub fn print_element(e: &FieldElement) -> String {
    match &e.value {
        Value::Rational(r) => {
            if r.denom().is_one() {
                format!("{}", r.numer())
            } else {
                format!("{}/{}", r.numer(), r.denom())
            }
        }
        Value::Finite(v) => print_ff(v),
        Value::Function { num, den } => {
            let ns = print_poly(num, 't');
            if den.degree() == Some(0) {
                debug_assert!(den.is_monic());
                ns
            } else {
                let num_wrapped = if count_terms(num) > 1 {
                    format!("({ns})")
                } else {
                    ns
                };
                let ds = print_poly(den, 't');
                let den_wrapped = if count_terms(den) > 1 {
                    format!("({ds})")
                } else {
                    ds
                };
                format!("{num_wrapped}/{den_wrapped}")
            }
        }
        Value::Etale { x1, x0 } => format!("[{},{}]", print_element(x1), print_element(x0)),
    }
}

fn count_terms(p: &super::Polynomial) -> usize {
    p.coeffs.iter().filter(|c| !c.is_zero()).count()
}

fn print_ff(v: &[u64]) -> String {
    if v.is_empty() {
        return "0".into();
    }
    let mut parts: Vec<String> = Vec::new();
    for (i, &c) in v.iter().enumerate().rev() {
        if c == 0 {
            continue;
        }
        let part = match (i, c) {
            (0, c) => format!("{c}"),
            (1, 1) => "z".into(),
            (1, c) => format!("{c}*z"),
            (i, 1) => format!("z^{i}"),
            (i, c) => format!("{c}*z^{i}"),
        };
        parts.push(part);
    }
    parts.join("+")
}

/// Descending powers, `*` between coefficient and variable, no spaces.
pub fn print_poly(p: &super::Polynomial, var: char) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (i, c) in p.coeffs.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let cs = print_element(c);
        let (neg, mag) = match cs.strip_prefix('-') {
            Some(rest) => (true, rest.to_string()),
            None => (false, cs),
        };
        let needs_parens = mag.contains('+') || mag.contains('-');
        let coeff_str = if needs_parens { format!("({mag})") } else { mag };
        let body = match i {
            0 => coeff_str,
            _ if coeff_str == "1" => {
                if i == 1 {
                    format!("{var}")
                } else {
                    format!("{var}^{i}")
                }
            }
            1 => format!("{coeff_str}*{var}"),
            _ => format!("{coeff_str}*{var}^{i}"),
        };
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else if neg {
            out.push('-');
        } else {
            out.push('+');
        }
        out.push_str(&body);
    }
    out
}

// ---- field descriptors ----

pub fn parse_field(src: &str) -> Result<Field, SyntaxError> {
    let s = src.trim();
    if let Some(inner) = s.strip_prefix("etale(").and_then(|r| r.strip_suffix(')')) {
        let parts: Vec<&str> = inner.splitn(3, ';').collect();
        if parts.len() != 3 {
            return err(0, "etale fields need base;b;c");
        }
        let base = parse_field(parts[0])?;
        let b = parse_element(parts[1], &base)?;
        let c = parse_element(parts[2], &base)?;
        return FieldDescriptor::quadratic_etale(base, b, c).map_err(|e| SyntaxError {
            position: 0,
            message: e.to_string(),
        });
    }
    if let Some(inner) = s.strip_suffix("(t)") {
        let base = parse_field(inner)?;
        return Ok(FieldDescriptor::function_field(base));
    }
    if s == "Q" {
        return Ok(FieldDescriptor::rationals());
    }
    if let Some(rest) = s.strip_prefix('F') {
        let (order_str, modulus_str) = match rest.split_once(':') {
            Some((a, b)) => (a, Some(b)),
            None => (rest, None),
        };
        let q: u64 = order_str
            .parse()
            .map_err(|_| SyntaxError {
                position: 1,
                message: "expected a field order".into(),
            })?;
        let (p, n) = super::split_prime_power(q).ok_or(SyntaxError {
            position: 1,
            message: format!("{q} is not a prime power"),
        })?;
        match modulus_str {
            None => {
                if n == 1 {
                    return Ok(FieldDescriptor::prime_field(p));
                }
                return Ok(FieldDescriptor::finite_field_of_order(q));
            }
            Some(m) => {
                if n == 1 {
                    return err(0, "prime fields take no modulus");
                }
                let fp = FieldDescriptor::prime_field(p);
                let ffield = FieldDescriptor::function_field(fp);
                let poly_elt = parse_element_with_var(m, &ffield, 'z')?;
                let (num, den) = poly_elt.as_function().unwrap();
                if den.degree() != Some(0) {
                    return err(0, "modulus must be a polynomial");
                }
                let coeffs: Vec<u64> = num
                    .coeffs
                    .iter()
                    .map(|c| {
                        let ff = c.field.ff();
                        ff.index_of(c.as_finite().unwrap())
                    })
                    .collect();
                if coeffs.len() != n as usize + 1 {
                    return err(0, "modulus degree does not match the field order");
                }
                if *coeffs.last().unwrap() != 1 {
                    return err(0, "modulus must be monic");
                }
                if !super::finite::fp_poly::is_irreducible(&coeffs, p) {
                    return err(0, "modulus must be irreducible");
                }
                return Ok(FieldDescriptor::finite_field(p, coeffs));
            }
        }
    }
    err(0, format!("unknown field {s}"))
}

pub fn print_field(f: &Field) -> String {
    match &**f {
        FieldDescriptor::Rationals => "Q".into(),
        FieldDescriptor::PrimeField { p } => format!("F{p}"),
        FieldDescriptor::FiniteField { p, modulus } => {
            let q = p.pow((modulus.len() - 1) as u32);
            format!("F{q}:{}", print_fp_poly(modulus))
        }
        FieldDescriptor::FunctionField { base } => format!("{}(t)", print_field(base)),
        FieldDescriptor::QuadraticEtale { base, b, c, .. } => format!(
            "etale({};{};{})",
            print_field(base),
            print_element(b),
            print_element(c)
        ),
    }
}

fn print_fp_poly(v: &[u64]) -> String {
    let mut parts: Vec<String> = Vec::new();
    for (i, &c) in v.iter().enumerate().rev() {
        if c == 0 {
            continue;
        }
        let part = match (i, c) {
            (0, c) => format!("{c}"),
            (1, 1) => "z".into(),
            (1, c) => format!("{c}*z"),
            (i, 1) => format!("z^{i}"),
            (i, c) => format!("{c}*z^{i}"),
        };
        parts.push(part);
    }
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join("+")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::FieldDescriptor;

    #[test]
    fn parse_and_print_rationals() {
        let f = FieldDescriptor::rationals();
        let x = parse_element("3/7", &f).unwrap();
        assert_eq!(print_element(&x), "3/7");
        let y = parse_element("-12", &f).unwrap();
        assert_eq!(print_element(&y), "-12");
        let z = parse_element("1/2+1/3", &f).unwrap();
        assert_eq!(print_element(&z), "5/6");
    }

    #[test]
    fn parse_and_print_function_field() {
        let f = FieldDescriptor::function_field(FieldDescriptor::rationals());
        let x = parse_element("(t^2+1)/(t-2)", &f).unwrap();
        assert_eq!(print_element(&x), "(t^2+1)/(t-2)");
        let y = parse_element("t^2+3*t-1", &f).unwrap();
        assert_eq!(print_element(&y), "t^2+3*t-1");
        // canonical: denominator made monic
        let w = parse_element("t/(2*t-2)", &f).unwrap();
        assert_eq!(print_element(&w), "1/2*t/(t-1)");
        let reparsed = parse_element(&print_element(&w), &f).unwrap();
        assert_eq!(reparsed, w);
    }

    #[test]
    fn parse_and_print_finite() {
        let f9 = parse_field("F9:z^2+1").unwrap();
        let z = parse_element("z", &f9).unwrap();
        let w = parse_element("z^2", &f9).unwrap();
        assert_eq!(print_element(&w), "2");
        assert_eq!(z.mul(&z).unwrap(), w);
        let f4 = parse_field("F4").unwrap();
        assert_eq!(print_field(&f4), "F4:z^2+z+1");
    }

    #[test]
    fn parse_and_print_etale() {
        let e = parse_field("etale(Q;1;1)").unwrap();
        let x = parse_element("[1,0]", &e).unwrap();
        let sq = x.mul(&x).unwrap();
        assert_eq!(print_element(&sq), "[-1,-1]");
        let round = parse_element(&print_element(&sq), &e).unwrap();
        assert_eq!(round, sq);
    }

    #[test]
    fn field_roundtrip() {
        for s in ["Q", "F5", "F9:z^2+1", "Q(t)", "F3(t)", "etale(Q;1;1)"] {
            let f = parse_field(s).unwrap();
            let printed = print_field(&f);
            let again = parse_field(&printed).unwrap();
            assert_eq!(f, again, "{s} -> {printed}");
        }
    }

    #[test]
    fn coefficient_parens_in_fq_t() {
        let f9t = parse_field("F9:z^2+1(t)").unwrap();
        let x = parse_element("(z+1)*t^2+z", &f9t).unwrap();
        let printed = print_element(&x);
        assert_eq!(printed, "(z+1)*t^2+z");
        assert_eq!(parse_element(&printed, &f9t).unwrap(), x);
    }
}
