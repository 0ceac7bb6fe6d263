//! Low-level arithmetic for prime fields and their extensions.
//!
//! Elements of `F_q = F_p[z]/(m)` are coefficient vectors over `F_p` in
//! ascending degree with trailing zeros trimmed, so the zero element is the
//! empty vector and equality is plain structural equality.

pub fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub fn powmod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mulmod(acc, base, p);
        }
        base = mulmod(base, base, p);
        exp >>= 1;
    }
    acc
}

pub fn invmod(a: u64, p: u64) -> u64 {
    // p prime, a not divisible by p
    debug_assert!(a % p != 0);
    powmod(a, p - 2, p)
}

pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Arithmetic context for `F_p[z]/(modulus)`.
///
/// `modulus` is monic in ascending order; a prime field uses `modulus = z`,
/// which makes its elements the constant vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ff {
    pub p: u64,
    pub modulus: Vec<u64>,
}

pub type FfElt = Vec<u64>;

fn trim(mut v: Vec<u64>) -> Vec<u64> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

impl Ff {
    pub fn prime(p: u64) -> Self {
        Ff {
            p,
            modulus: vec![0, 1],
        }
    }

    pub fn extension(p: u64, modulus: Vec<u64>) -> Self {
        debug_assert!(modulus.len() >= 3, "extension degree must be at least 2");
        debug_assert_eq!(*modulus.last().unwrap(), 1, "modulus must be monic");
        Ff { p, modulus }
    }

    pub fn degree(&self) -> usize {
        self.modulus.len() - 1
    }

    pub fn order(&self) -> u64 {
        self.p.pow(self.degree() as u32)
    }

    pub fn zero(&self) -> FfElt {
        vec![]
    }

    pub fn one(&self) -> FfElt {
        if self.p == 1 {
            vec![]
        } else {
            vec![1]
        }
    }

    pub fn from_u64(&self, n: u64) -> FfElt {
        trim(vec![n % self.p])
    }

    pub fn from_i64(&self, n: i64) -> FfElt {
        let r = n.rem_euclid(self.p as i64) as u64;
        trim(vec![r])
    }

    /// Index-based enumeration: element `i` has base-p digits of `i` as coefficients.
    pub fn element(&self, index: u64) -> FfElt {
        let mut i = index;
        let mut v = Vec::new();
        for _ in 0..self.degree() {
            v.push(i % self.p);
            i /= self.p;
        }
        trim(v)
    }

    pub fn index_of(&self, a: &FfElt) -> u64 {
        let mut acc = 0u64;
        for &c in a.iter().rev() {
            acc = acc * self.p + c;
        }
        acc
    }

    pub fn elements(&self) -> impl Iterator<Item = FfElt> + '_ {
        (0..self.order()).map(move |i| self.element(i))
    }

    pub fn add(&self, a: &FfElt, b: &FfElt) -> FfElt {
        let n = a.len().max(b.len());
        let mut v = vec![0u64; n];
        for (i, slot) in v.iter_mut().enumerate() {
            let x = a.get(i).copied().unwrap_or(0);
            let y = b.get(i).copied().unwrap_or(0);
            *slot = (x + y) % self.p;
        }
        trim(v)
    }

    pub fn neg(&self, a: &FfElt) -> FfElt {
        trim(a.iter().map(|&c| (self.p - c) % self.p).collect())
    }

    pub fn sub(&self, a: &FfElt, b: &FfElt) -> FfElt {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &FfElt, b: &FfElt) -> FfElt {
        if a.is_empty() || b.is_empty() {
            return vec![];
        }
        let mut prod = vec![0u64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                prod[i + j] = (prod[i + j] + mulmod(x, y, self.p)) % self.p;
            }
        }
        self.reduce(prod)
    }

    fn reduce(&self, mut v: Vec<u64>) -> FfElt {
        let d = self.degree();
        while v.len() > d {
            let k = v.len() - 1;
            let lead = v[k];
            if lead != 0 {
                // subtract lead * z^(k-d) * modulus
                for (i, &m) in self.modulus.iter().enumerate() {
                    let idx = k - d + i;
                    let s = mulmod(lead, m, self.p);
                    v[idx] = (v[idx] + self.p - s % self.p) % self.p;
                }
            }
            v.pop();
        }
        trim(v)
    }

    pub fn pow(&self, a: &FfElt, mut e: u64) -> FfElt {
        let mut acc = self.one();
        let mut base = a.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, a: &FfElt) -> Option<FfElt> {
        if a.is_empty() {
            return None;
        }
        // a^(q-2) = a^{-1} in F_q^*
        Some(self.pow(a, self.order() - 2))
    }

    pub fn is_square(&self, a: &FfElt) -> bool {
        if a.is_empty() {
            return true;
        }
        if self.p == 2 {
            // Frobenius is surjective
            return true;
        }
        let e = (self.order() - 1) / 2;
        self.pow(a, e) == self.one()
    }

    pub fn sqrt(&self, a: &FfElt) -> Option<FfElt> {
        // exhaustive; fields here are tiny
        self.elements().find(|x| self.mul(x, x) == *a)
    }

    /// Quadratic-residue symbol: 0 on zero, +1 on nonzero squares, -1 otherwise.
    /// Only meaningful for odd q.
    pub fn legendre(&self, a: &FfElt) -> i32 {
        if a.is_empty() {
            0
        } else if self.is_square(a) {
            1
        } else {
            -1
        }
    }

    /// Absolute trace down to F_2 (characteristic 2 only).
    pub fn trace_to_f2(&self, a: &FfElt) -> u64 {
        debug_assert_eq!(self.p, 2);
        let mut acc = self.zero();
        let mut t = a.clone();
        for _ in 0..self.degree() {
            acc = self.add(&acc, &t);
            t = self.mul(&t, &t);
        }
        debug_assert!(acc.len() <= 1);
        acc.first().copied().unwrap_or(0)
    }

    /// Whether `a` lies in the Artin-Schreier image `{x^2 + x}` (characteristic 2).
    pub fn in_artin_schreier_image(&self, a: &FfElt) -> bool {
        debug_assert_eq!(self.p, 2);
        self.trace_to_f2(a) == 0
    }

    /// Some solution of `x^2 + x = a`, if one exists (characteristic 2).
    pub fn artin_schreier_root(&self, a: &FfElt) -> Option<FfElt> {
        debug_assert_eq!(self.p, 2);
        self.elements()
            .find(|x| self.add(&self.mul(x, x), x) == *a)
    }

    /// Inverse of Frobenius: the unique b with b^p = a.
    pub fn frobenius_inverse(&self, a: &FfElt) -> FfElt {
        let e = self.order() / self.p; // a^(q/p) squares back to a under x -> x^p
        self.pow(a, e)
    }
}

/// Monic polynomials over F_p as plain coefficient vectors, used for
/// extension-field moduli before the full tower types exist.
pub mod fp_poly {
    use super::*;

    pub fn degree(f: &[u64]) -> Option<usize> {
        if f.is_empty() {
            None
        } else {
            Some(f.len() - 1)
        }
    }

    pub fn eval(f: &[u64], x: u64, p: u64) -> u64 {
        let mut acc = 0u64;
        for &c in f.iter().rev() {
            acc = (mulmod(acc, x, p) + c) % p;
        }
        acc
    }

    pub fn mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
        if a.is_empty() || b.is_empty() {
            return vec![];
        }
        let mut out = vec![0u64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = (out[i + j] + mulmod(x, y, p)) % p;
            }
        }
        super::trim(out)
    }

    pub fn rem(a: &[u64], m: &[u64], p: u64) -> Vec<u64> {
        let dm = m.len() - 1;
        let lead_inv = invmod(m[dm], p);
        let mut r: Vec<u64> = a.to_vec();
        while r.len() > dm {
            let k = r.len() - 1;
            let q = mulmod(r[k], lead_inv, p);
            if q != 0 {
                for (i, &mc) in m.iter().enumerate() {
                    let idx = k - dm + i;
                    let s = mulmod(q, mc, p);
                    r[idx] = (r[idx] + p - s) % p;
                }
            }
            r.pop();
        }
        super::trim(r)
    }

    pub fn is_irreducible(f: &[u64], p: u64) -> bool {
        let d = match degree(f) {
            None | Some(0) => return false,
            Some(d) => d,
        };
        if d == 1 {
            return true;
        }
        // no roots, then trial division by smaller monic irreducibles
        for x in 0..p {
            if eval(f, x, p) == 0 {
                return false;
            }
        }
        let mut divisors: Vec<Vec<u64>> = Vec::new();
        for deg in 2..=d / 2 {
            let count = p.pow(deg as u32);
            for idx in 0..count {
                let mut g = Vec::with_capacity(deg + 1);
                let mut i = idx;
                for _ in 0..deg {
                    g.push(i % p);
                    i /= p;
                }
                g.push(1);
                if divisors.iter().any(|h| rem(&g, h, p).is_empty()) {
                    continue;
                }
                if rem(f, &g, p).is_empty() {
                    return false;
                }
                divisors.push(g);
            }
        }
        true
    }

    /// Lexicographically first monic irreducible of the given degree over F_p.
    pub fn first_irreducible(p: u64, deg: usize) -> Vec<u64> {
        let count = p.pow(deg as u32);
        for idx in 0..count {
            let mut g = Vec::with_capacity(deg + 1);
            let mut i = idx;
            for _ in 0..deg {
                g.push(i % p);
                i /= p;
            }
            g.push(1);
            if is_irreducible(&g, p) {
                return g;
            }
        }
        unreachable!("irreducible polynomials exist in every degree");
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn f5_basics() {
        let f5 = Ff::prime(5);
        let two = f5.from_u64(2);
        let three = f5.from_u64(3);
        assert_eq!(f5.add(&two, &three), f5.zero());
        assert_eq!(f5.mul(&two, &three), f5.from_u64(1));
        assert_eq!(f5.inv(&two), Some(f5.from_u64(3)));
    }

    #[test]
    fn legendre_by_enumeration() {
        // oracle: squares mod 5 are {0,1,4}
        let f5 = Ff::prime(5);
        let squares: Vec<u64> = (0..5).map(|x| (x * x) % 5).collect();
        for a in 0..5u64 {
            let expected = if a == 0 {
                0
            } else if squares.contains(&a) {
                1
            } else {
                -1
            };
            assert_eq!(f5.legendre(&f5.from_u64(a)), expected, "a={a}");
        }
        assert_eq!(f5.legendre(&f5.from_u64(2)), -1);
        let f7 = Ff::prime(7);
        assert_eq!(f7.legendre(&f7.from_u64(1)), 1);
    }

    #[test]
    fn f9_generator_squares_to_minus_one() {
        // F_9 = F_3[z]/(z^2+1), so z*z = -1 = 2
        let f9 = Ff::extension(3, vec![1, 0, 1]);
        let z = vec![0, 1];
        assert_eq!(f9.mul(&z, &z), f9.from_u64(2));
        assert_eq!(f9.order(), 9);
        let zi = f9.inv(&z).unwrap();
        assert_eq!(f9.mul(&z, &zi), f9.one());
    }

    #[test]
    fn artin_schreier_image_of_f2() {
        // oracle: the image of x^2+x on F_2 is {0}
        let f2 = Ff::prime(2);
        assert!(f2.in_artin_schreier_image(&f2.zero()));
        assert!(!f2.in_artin_schreier_image(&f2.one()));
        // and on F_4 the image is the prime field's trace-zero part
        let f4 = Ff::extension(2, vec![1, 1, 1]);
        let image: Vec<FfElt> = f4
            .elements()
            .map(|x| f4.add(&f4.mul(&x, &x), &x))
            .collect();
        for a in f4.elements() {
            assert_eq!(f4.in_artin_schreier_image(&a), image.contains(&a));
        }
    }

    #[test]
    fn irreducibility_small() {
        // t^2+1 over F_3: no roots -> irreducible (oracle checked by evaluation)
        assert!(fp_poly::is_irreducible(&[1, 0, 1], 3));
        // t^2-1 = (t-1)(t+1) over F_3
        assert!(!fp_poly::is_irreducible(&[2, 0, 1], 3));
        // x^2+x+1 over F_2 has no root
        assert!(fp_poly::is_irreducible(&[1, 1, 1], 2));
        assert_eq!(fp_poly::first_irreducible(3, 2), vec![1, 0, 1]);
        assert_eq!(fp_poly::first_irreducible(2, 2), vec![1, 1, 1]);
    }

    #[test]
    fn squares_char2_all() {
        let f4 = Ff::extension(2, vec![1, 1, 1]);
        for a in f4.elements() {
            assert!(f4.is_square(&a));
            let r = f4.sqrt(&a).unwrap();
            assert_eq!(f4.mul(&r, &r), a);
        }
    }
}
