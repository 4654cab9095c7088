//! Arithmetic tables for GF(p^k).
//!
//! Elements are indices `0..q`: the base-p digits of an index are the
//! coefficients of a polynomial over GF(p) (constant term least
//! significant), reduced modulo a fixed irreducible polynomial. For k > 1
//! the modulus is the least monic irreducible of degree k, "least" meaning
//! smallest integer encoding of its non-leading coefficients; the
//! isomorphism class of GF(q) does not depend on this choice.

use crate::error::{Error, Result};

/// Largest field order the table builder accepts.
pub const FIELD_ORDER_CAP: u64 = 512;

#[derive(Debug, Clone)]
pub struct FieldTable {
    p: u64,
    k: u32,
    q: u64,
    add: Vec<u16>,
    mul: Vec<u16>,
    inv: Vec<u16>,
    /// Coefficients c_0..c_k of the irreducible modulus (monic), `None` for
    /// prime fields.
    irreducible: Option<Vec<u64>>,
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Splits a prime power into (p, k); errors otherwise.
pub fn prime_power(q: u64) -> Result<(u64, u32)> {
    if q < 2 {
        return Err(Error::NotPrimePower(q));
    }
    let mut p = 2;
    while p * p <= q {
        if q % p == 0 {
            let mut rest = q;
            let mut k = 0;
            while rest % p == 0 {
                rest /= p;
                k += 1;
            }
            return if rest == 1 {
                Ok((p, k))
            } else {
                Err(Error::NotPrimePower(q))
            };
        }
        p += 1;
    }
    Ok((q, 1))
}

impl FieldTable {
    /// Builds the tables for GF(p^k).
    pub fn new(p: u64, k: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if k == 0 {
            return Err(Error::InvalidArgument("extension degree k must be >= 1".into()));
        }
        let q = p
            .checked_pow(k)
            .filter(|&q| q <= FIELD_ORDER_CAP)
            .ok_or(Error::CapExceeded {
                what: "field order",
                limit: FIELD_ORDER_CAP as usize,
                got: usize::MAX,
            })?;
        let irreducible = if k > 1 {
            Some(least_irreducible(p, k))
        } else {
            None
        };
        let qn = q as usize;
        let mut add = vec![0u16; qn * qn];
        let mut mul = vec![0u16; qn * qn];
        for a in 0..q {
            for b in 0..q {
                add[(a * q + b) as usize] = add_elems(a, b, p, k) as u16;
                mul[(a * q + b) as usize] = mul_elems(a, b, p, k, irreducible.as_deref()) as u16;
            }
        }
        let mut inv = vec![0u16; qn];
        for a in 1..q {
            for b in 1..q {
                if mul[(a * q + b) as usize] == 1 {
                    inv[a as usize] = b as u16;
                    break;
                }
            }
        }
        Ok(FieldTable {
            p,
            k,
            q,
            add,
            mul,
            inv,
            irreducible,
        })
    }

    /// Builds the tables for a prime power order q.
    pub fn of_order(q: u64) -> Result<Self> {
        let (p, k) = prime_power(q)?;
        FieldTable::new(p, k)
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn order(&self) -> u64 {
        self.q
    }

    pub fn irreducible(&self) -> Option<&[u64]> {
        self.irreducible.as_deref()
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        self.add[(a * self.q + b) as usize] as u64
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        self.mul[(a * self.q + b) as usize] as u64
    }

    pub fn neg(&self, a: u64) -> u64 {
        // Digit-wise negation mod p.
        let mut out = 0;
        let mut scale = 1;
        let mut x = a;
        for _ in 0..self.k {
            let d = x % self.p;
            out += ((self.p - d) % self.p) * scale;
            scale *= self.p;
            x /= self.p;
        }
        out
    }

    pub fn sub(&self, a: u64, b: u64) -> u64 {
        self.add(a, self.neg(b))
    }

    /// Multiplicative inverse; panics on 0 (checked by callers).
    pub fn inv(&self, a: u64) -> u64 {
        assert!(a != 0, "zero has no inverse");
        self.inv[a as usize] as u64
    }
}

fn digits(a: u64, p: u64, k: u32) -> Vec<u64> {
    let mut out = vec![0; k as usize];
    let mut x = a;
    for d in out.iter_mut() {
        *d = x % p;
        x /= p;
    }
    out
}

fn undigits(ds: &[u64], p: u64) -> u64 {
    ds.iter().rev().fold(0, |acc, &d| acc * p + d)
}

fn add_elems(a: u64, b: u64, p: u64, k: u32) -> u64 {
    let da = digits(a, p, k);
    let db = digits(b, p, k);
    let sum: Vec<u64> = da.iter().zip(&db).map(|(&x, &y)| (x + y) % p).collect();
    undigits(&sum, p)
}

fn mul_elems(a: u64, b: u64, p: u64, k: u32, modulus: Option<&[u64]>) -> u64 {
    if k == 1 {
        return a * b % p;
    }
    let da = digits(a, p, k);
    let db = digits(b, p, k);
    let mut prod = vec![0u64; 2 * k as usize - 1];
    for (i, &x) in da.iter().enumerate() {
        for (j, &y) in db.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x * y) % p;
        }
    }
    let modulus = modulus.expect("modulus present for k > 1");
    poly_reduce(&mut prod, modulus, p);
    undigits(&prod[..k as usize], p)
}

/// Reduces `poly` modulo the monic `modulus` in place (coefficients mod p).
fn poly_reduce(poly: &mut [u64], modulus: &[u64], p: u64) {
    let k = modulus.len() - 1;
    for i in (k..poly.len()).rev() {
        let c = poly[i];
        if c == 0 {
            continue;
        }
        poly[i] = 0;
        for (j, &mj) in modulus.iter().enumerate().take(k) {
            let idx = i - k + j;
            poly[idx] = (poly[idx] + c * (p - mj % p) % p) % p;
        }
    }
}

/// True iff the monic polynomial (coefficients c_0..c_d) is divisible by the
/// monic divisor.
fn poly_divisible(poly: &[u64], divisor: &[u64], p: u64) -> bool {
    let mut rem: Vec<u64> = poly.to_vec();
    let d = divisor.len() - 1;
    for i in (d..rem.len()).rev() {
        let c = rem[i];
        if c == 0 {
            continue;
        }
        rem[i] = 0;
        for (j, &mj) in divisor.iter().enumerate().take(d) {
            let idx = i - d + j;
            rem[idx] = (rem[idx] + c * (p - mj % p) % p) % p;
        }
    }
    rem.iter().all(|&c| c == 0)
}

/// The least monic irreducible of degree k over GF(p): scan the non-leading
/// coefficient vectors by ascending integer encoding, test by trial division
/// against every monic polynomial of degree at most k/2.
fn least_irreducible(p: u64, k: u32) -> Vec<u64> {
    let k = k as usize;
    'candidate: for t in 0..p.pow(k as u32) {
        let mut poly = digits(t, p, k as u32);
        poly.push(1);
        for d in 1..=k / 2 {
            for s in 0..p.pow(d as u32) {
                let mut div = digits(s, p, d as u32);
                div.push(1);
                if poly_divisible(&poly, &div, p) {
                    continue 'candidate;
                }
            }
        }
        return poly;
    }
    unreachable!("irreducible polynomials of every degree exist over GF(p)")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gf2_basics() {
        let f = FieldTable::new(2, 1).unwrap();
        assert_eq!(f.add(1, 1), 0);
        assert_eq!(f.mul(1, 1), 1);
        assert_eq!(f.irreducible(), None);
    }

    #[test]
    fn gf4_uses_x2_x_1() {
        let f = FieldTable::new(2, 2).unwrap();
        assert_eq!(f.irreducible(), Some([1, 1, 1].as_slice()));
        // Element 2 is x, element 3 is x+1; x(x+1) = x^2+x = 1 mod x^2+x+1.
        assert_eq!(f.mul(2, 3), 1);
        assert_eq!(f.inv(2), 3);
    }

    #[test]
    fn four_is_not_prime() {
        assert_eq!(FieldTable::new(4, 1).unwrap_err(), Error::NotPrime(4));
    }

    #[test]
    fn field_axioms_exhaustive_small_orders() {
        for q in [2u64, 3, 4, 5, 7, 8, 9, 11, 13, 16] {
            let f = FieldTable::of_order(q).unwrap();
            for a in 0..q {
                assert_eq!(f.add(a, 0), a);
                assert_eq!(f.mul(a, 1), a);
                assert_eq!(f.add(a, f.neg(a)), 0);
                if a != 0 {
                    assert_eq!(f.mul(a, f.inv(a)), 1, "q={q} a={a}");
                }
                for b in 0..q {
                    assert_eq!(f.add(a, b), f.add(b, a));
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    for c in 0..q {
                        assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
                        assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                        assert_eq!(
                            f.mul(a, f.add(b, c)),
                            f.add(f.mul(a, b), f.mul(a, c)),
                            "distributivity q={q} ({a},{b},{c})"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn sampled_axioms_larger_orders() {
        for q in [25u64, 27, 32, 49, 64, 81, 121, 128] {
            let f = FieldTable::of_order(q).unwrap();
            let mut x = 1u64;
            for _ in 0..200 {
                x = (x * 48271) % 0x7fffffff;
                let a = x % q;
                x = (x * 48271) % 0x7fffffff;
                let b = x % q;
                x = (x * 48271) % 0x7fffffff;
                let c = x % q;
                assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                if a != 0 {
                    assert_eq!(f.mul(a, f.inv(a)), 1);
                }
            }
        }
    }

    #[test]
    fn prime_power_detection() {
        assert_eq!(prime_power(8).unwrap(), (2, 3));
        assert_eq!(prime_power(9).unwrap(), (3, 2));
        assert_eq!(prime_power(7).unwrap(), (7, 1));
        assert!(prime_power(6).is_err());
        assert!(prime_power(12).is_err());
        assert!(prime_power(1).is_err());
    }

    #[test]
    fn cap_enforced() {
        assert!(matches!(
            FieldTable::new(2, 10),
            Err(Error::CapExceeded { .. })
        ));
    }
}
