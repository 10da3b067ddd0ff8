use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::Zero;

use super::monomial::Monomial;
use super::poly::Poly;

/// Irreducible binomial-type factor `psi_d(x^dir)`.
///
/// `psi_1(x) = 1 - x` and `psi_d = Phi_d` (the cyclotomic polynomial) for
/// `d >= 2`, so that `1 - x^n` is the product of `psi_d(x)` over `d | n`.
/// `dir` is primitive and lexicographically positive, which makes atoms
/// pairwise non-associate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Atom {
    pub dir: Monomial,
    pub d: u32,
}

fn cache() -> &'static Mutex<HashMap<u32, Arc<Vec<i64>>>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<Vec<i64>>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

fn cyclotomic(n: u32) -> Arc<Vec<i64>> {
    if let Some(c) = cache().lock().unwrap().get(&n) {
        return c.clone();
    }
    let mut p = vec![0i64; n as usize + 1];
    p[0] = -1;
    p[n as usize] = 1;
    for d in 1..n {
        if n.is_multiple_of(d) {
            let c = cyclotomic(d);
            p = div_monic(&p, &c);
        }
    }
    let p = Arc::new(p);
    cache().lock().unwrap().insert(n, p.clone());
    p
}

/// Ascending-coefficient exact division by a monic polynomial.
fn div_monic(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let da = a.len() - 1;
    let mut q = vec![0i64; da - db + 1];
    for i in (db..=da).rev() {
        let c = r[i];
        q[i - db] = c;
        for (k, bk) in b.iter().enumerate() {
            r[i - db + k] -= c * bk;
        }
    }
    debug_assert!(r.iter().all(|&x| x == 0));
    q
}

/// Ascending coefficients of `psi_d`.
pub fn psi_coeffs(d: u32) -> Arc<Vec<i64>> {
    assert!(d >= 1);
    if d == 1 {
        Arc::new(vec![1, -1])
    } else {
        cyclotomic(d)
    }
}

pub fn euler_phi(d: u32) -> u32 {
    let mut n = d;
    let mut r = d;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            while n.is_multiple_of(p) {
                n /= p;
            }
            r -= r / p;
        }
        p += 1;
    }
    if n > 1 {
        r -= r / n;
    }
    r
}

fn psi_at_unit(d: u32, sign: i8) -> i64 {
    let c = psi_coeffs(d);
    c.iter()
        .enumerate()
        .map(|(k, &x)| if sign < 0 && k % 2 == 1 { -x } else { x })
        .sum()
}

fn prime_factors(mut g: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= g {
        while g.is_multiple_of(p) {
            out.push(p);
            g /= p;
        }
        p += 1;
    }
    if g > 1 {
        out.push(g);
    }
    out
}

/// `psi_d(sign * m)` as `coef * mono * prod(atoms)`; `coef` may be zero.
pub(crate) struct PsiImage {
    pub coef: i64,
    pub mono: Monomial,
    pub atoms: Vec<Atom>,
}

pub(crate) fn psi_image(d: u32, sign: i8, m: Monomial) -> PsiImage {
    if m.is_one() {
        return PsiImage {
            coef: psi_at_unit(d, sign),
            mono: Monomial::ONE,
            atoms: Vec::new(),
        };
    }
    let g = m.content();
    let mut dir = Monomial(m.0.map(|e| e / g));
    let mut coef = 1i64;
    let mut mono = Monomial::ONE;
    if !dir.is_lex_positive() {
        // psi_d(y^{-1}) = -y^{-1} psi_1(y) for d = 1, y^{-phi(d)} psi_d(y) otherwise
        dir = dir.inv();
        let y = dir.pow(g);
        if d == 1 {
            coef = -(sign as i64);
            mono = y.inv();
        } else {
            let ph = euler_phi(d) as i64;
            if sign < 0 && ph % 2 == 1 {
                coef = -1;
            }
            mono = y.pow(-ph);
        }
    }
    let mut base = d;
    if sign < 0 {
        base = if d == 1 {
            2
        } else if d == 2 {
            1
        } else if d % 2 == 1 {
            2 * d
        } else if d % 4 == 2 {
            d / 2
        } else {
            d
        };
    }
    let mut orders = vec![base];
    for p in prime_factors(g as u64) {
        let p = p as u32;
        let mut next = Vec::with_capacity(orders.len() * 2);
        for n in orders {
            next.push(n * p);
            if n % p != 0 {
                next.push(n);
            }
        }
        orders = next;
    }
    PsiImage {
        coef,
        mono,
        atoms: orders.into_iter().map(|d| Atom { dir, d }).collect(),
    }
}

impl Atom {
    pub fn degree(&self) -> u32 {
        if self.d == 1 {
            1
        } else {
            euler_phi(self.d)
        }
    }

    pub fn expand(&self) -> Poly {
        let c = psi_coeffs(self.d);
        Poly::from_terms(
            c.iter()
                .enumerate()
                .map(|(k, &x)| (self.dir.pow(k as i64), BigInt::from(x))),
        )
    }

    fn pivot(&self) -> usize {
        self.dir.0.iter().position(|&e| e != 0).expect("atom direction is not the identity")
    }

    /// Exact quotient `p / self`, if it exists.
    pub fn divide(&self, p: &Poly) -> Option<Poly> {
        if p.is_zero() {
            return Some(Poly::zero());
        }
        let i = self.pivot();
        let step = self.dir.0[i];
        let mut cosets: HashMap<Monomial, Vec<(i64, &BigInt)>> = HashMap::new();
        for (m, c) in p.terms() {
            let k = m.0[i].div_euclid(step);
            let r = *m / self.dir.pow(k);
            cosets.entry(r).or_default().push((k, c));
        }
        let psi = psi_coeffs(self.d);
        let deg = psi.len() - 1;
        let lead = psi[deg];
        let mut out = Vec::new();
        for (r, ks) in cosets {
            let kmin = ks.iter().map(|x| x.0).min().unwrap();
            let kmax = ks.iter().map(|x| x.0).max().unwrap();
            let n = (kmax - kmin) as usize;
            if n < deg {
                return None;
            }
            let mut c = vec![BigInt::zero(); n + 1];
            for (k, x) in ks {
                c[(k - kmin) as usize] = x.clone();
            }
            for top in (deg..=n).rev() {
                if c[top].is_zero() {
                    continue;
                }
                let qc = &c[top] * lead;
                for (k, pk) in psi.iter().enumerate() {
                    if *pk != 0 {
                        c[top - deg + k] -= &qc * pk;
                    }
                }
                out.push((r * self.dir.pow(kmin + (top - deg) as i64), qc));
            }
            if c[..deg].iter().any(|x| !x.is_zero()) {
                return None;
            }
        }
        Some(Poly::from_terms(out))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclotomic_small() {
        assert_eq!(*psi_coeffs(1), vec![1, -1]);
        assert_eq!(*psi_coeffs(2), vec![1, 1]);
        assert_eq!(*psi_coeffs(3), vec![1, 1, 1]);
        assert_eq!(*psi_coeffs(4), vec![1, 0, 1]);
        assert_eq!(*psi_coeffs(6), vec![1, -1, 1]);
        assert_eq!(*psi_coeffs(12), vec![1, 0, -1, 0, 1]);
    }

    #[test]
    fn phi_values() {
        assert_eq!(euler_phi(1), 1);
        assert_eq!(euler_phi(12), 4);
        assert_eq!(euler_phi(7), 6);
    }

    #[test]
    fn image_of_one_minus_q_squared() {
        // 1 - v^4 = (1 - v)(1 + v)(1 + v^2)
        let im = psi_image(1, 1, Monomial::new(0, 4, 0, 0));
        let mut ds: Vec<u32> = im.atoms.iter().map(|a| a.d).collect();
        ds.sort();
        assert_eq!(ds, vec![1, 2, 4]);
        assert_eq!(im.coef, 1);
    }

    #[test]
    fn image_with_negative_direction() {
        // 1 - v^{-2} = -v^{-2}(1 - v^2)
        let im = psi_image(1, 1, Monomial::new(0, -2, 0, 0));
        assert_eq!(im.coef, -1);
        assert_eq!(im.mono, Monomial::new(0, -2, 0, 0));
        assert_eq!(im.atoms.len(), 2);
    }

    #[test]
    fn divide_by_atom() {
        let a = Atom { dir: Monomial::new(1, -1, 0, 0), d: 1 };
        let b = Atom { dir: Monomial::new(0, 1, 0, 1), d: 3 };
        let prod = &a.expand() * &b.expand();
        assert_eq!(a.divide(&prod), Some(b.expand()));
        assert_eq!(b.divide(&prod), Some(a.expand()));
        assert_eq!(a.divide(&b.expand()), None);
    }
}
