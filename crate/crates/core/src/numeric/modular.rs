//! Prime-modulus helpers for rational root finding.

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::rational::Rational;

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn reduce(c: &BigInt, l: u64) -> u64 {
    c.mod_floor(&BigInt::from(l)).to_u64().unwrap()
}

fn pow_mod(mut b: u64, mut e: u64, l: u64) -> u64 {
    let mut acc = 1u64;
    b %= l;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % l;
        }
        b = b * b % l;
        e >>= 1;
    }
    acc
}

fn trim(v: &mut Vec<u64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

fn rem_mod(a: &[u64], b: &[u64], l: u64) -> Vec<u64> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let inv = pow_mod(b[db], l - 2, l);
    while r.len() > db {
        let top = r.pop().unwrap();
        if top == 0 {
            continue;
        }
        let c = top * inv % l;
        let shift = r.len() - db;
        for (j, &bc) in b.iter().take(db).enumerate() {
            r[shift + j] = (r[shift + j] + l - c * bc % l) % l;
        }
    }
    trim(&mut r);
    r
}

fn gcd_degree_mod(a: &[u64], b: &[u64], l: u64) -> usize {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    trim(&mut a);
    trim(&mut b);
    while !b.is_empty() {
        let r = rem_mod(&a, &b, l);
        a = std::mem::replace(&mut b, r);
    }
    a.len().saturating_sub(1)
}

fn eval_big(p: &[BigInt], x: &BigInt, m: &BigInt) -> BigInt {
    let mut acc = BigInt::zero();
    for c in p.iter().rev() {
        acc = (acc * x + c).mod_floor(m);
    }
    acc
}

fn inverse_mod(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    let e = a.mod_floor(m).extended_gcd(m);
    if e.gcd.is_one() {
        Some(e.x.mod_floor(m))
    } else {
        None
    }
}

// Smallest solution of a = b * r (mod m) with |a| <= n_bound and 0 < b <= d_bound.
fn reconstruct(r: &BigInt, m: &BigInt, n_bound: &BigInt, d_bound: &BigInt) -> Option<Rational> {
    let (mut r0, mut r1) = (m.clone(), r.mod_floor(m));
    let (mut s0, mut s1) = (BigInt::zero(), BigInt::one());
    while &r1 > n_bound {
        let q = &r0 / &r1;
        let r2 = &r0 - &q * &r1;
        let s2 = &s0 - &q * &s1;
        r0 = std::mem::replace(&mut r1, r2);
        s0 = std::mem::replace(&mut s1, s2);
    }
    if s1.is_zero() || &s1.abs() > d_bound {
        return None;
    }
    let (a, b) = if s1.sign() == Sign::Minus { (-r1, -s1) } else { (r1, s1) };
    Some(Rational::new(a, b))
}

/// Candidate rational roots of a primitive, squarefree integer polynomial with nonzero constant term.
///
/// Every rational root is among the candidates; candidates still need an exact check.
pub fn rational_root_candidates(p: &[BigInt]) -> Vec<Rational> {
    let n = p.len() - 1;
    let lead = p[n].abs();
    let constant = p[0].abs();
    let deriv: Vec<BigInt> = p
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| c * BigInt::from(i))
        .collect();
    // A prime not dividing the leading coefficient for which p stays squarefree.
    let mut l = 2u64;
    loop {
        l += 1;
        if !is_prime(l) || (&lead % BigInt::from(l)).is_zero() {
            continue;
        }
        let pm: Vec<u64> = p.iter().map(|c| reduce(c, l)).collect();
        let dm: Vec<u64> = deriv.iter().map(|c| reduce(c, l)).collect();
        if gcd_degree_mod(&pm, &dm, l) == 0 {
            break;
        }
    }
    let small_roots: Vec<u64> = (0..l)
        .filter(|&x| {
            let mut acc = 0u64;
            for c in p.iter().rev() {
                acc = (acc * x + reduce(c, l)) % l;
            }
            acc == 0
        })
        .collect();
    // A root a/b has |a| <= |p(0)| and b <= |lead|; lift past 2 * |p(0)| * |lead|.
    let target = BigInt::from(2) * &constant * &lead;
    let lb = BigInt::from(l);
    let mut out = Vec::new();
    for r0 in small_roots {
        let mut m = lb.clone();
        let mut r = BigInt::from(r0);
        while m <= target {
            m = &m * &m;
            let fr = eval_big(p, &r, &m);
            let dr = eval_big(&deriv, &r, &m);
            let Some(inv) = inverse_mod(&dr, &m) else {
                break;
            };
            r = (&r - fr * inv).mod_floor(&m);
        }
        if let Some(q) = reconstruct(&r, &m, &constant, &lead) {
            out.push(q);
        }
    }
    out
}
