//! Integer polynomials, characteristic polynomials, rational roots.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

use super::{IMatrix, Int, QMatrix, Rat};

/// Polynomial with arbitrary-precision integer coefficients, ascending
/// degree order. The zero polynomial has an empty coefficient vector.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IntPoly {
    coeffs: Vec<Int>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<Int>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| Int::from(c)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial has degree 0 by convention here.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coeffs(&self) -> &[Int] {
        &self.coeffs
    }

    pub fn leading(&self) -> Int {
        self.coeffs.last().cloned().unwrap_or_else(Int::zero)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(Int::is_one)
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + Rat::from_integer(c.clone());
        }
        acc
    }

    pub fn eval_int(&self, x: &Int) -> Int {
        let mut acc = Int::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Multiplies two polynomials.
    pub fn mul(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() || other.is_zero() {
            return IntPoly::new(vec![]);
        }
        let mut out = vec![Int::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }
}

impl std::fmt::Display for IntPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " {} ", if c.is_negative() { "-" } else { "+" })?;
            } else if c.is_negative() {
                write!(f, "-")?;
            }
            let a = c.abs();
            match i {
                0 => write!(f, "{a}")?,
                _ => {
                    if !a.is_one() {
                        write!(f, "{a}*")?;
                    }
                    if i == 1 {
                        write!(f, "x")?;
                    } else {
                        write!(f, "x^{i}")?;
                    }
                }
            }
            first = false;
        }
        Ok(())
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CharpolyError {
    #[error("characteristic polynomial requires a square matrix, got {0}x{1}")]
    NotSquare(usize, usize),
    #[error("characteristic polynomial requires integer entries")]
    NotInteger,
}

/// Characteristic polynomial `det(xI - m)` of a square integer matrix,
/// computed exactly by the Faddeev–LeVerrier recurrence. All intermediate
/// values stay integral, which the recurrence divisions assert.
pub fn charpoly(m: &QMatrix) -> Result<IntPoly, CharpolyError> {
    if !m.is_square() {
        return Err(CharpolyError::NotSquare(m.rows(), m.cols()));
    }
    let a = IMatrix::try_from_qmatrix(m).ok_or(CharpolyError::NotInteger)?;
    let n = a.rows();
    if n == 0 {
        return Ok(IntPoly::new(vec![Int::one()]));
    }

    let mut coeffs = vec![Int::zero(); n + 1];
    coeffs[n] = Int::one();
    let mut mk = a.clone();
    for k in 1..=n {
        let tr = mk.trace();
        let (c, rem) = (-tr).div_rem(&Int::from(k));
        assert!(rem.is_zero(), "Faddeev-LeVerrier division must be exact");
        coeffs[n - k] = c.clone();
        if k < n {
            for i in 0..n {
                mk[(i, i)] += &c;
            }
            mk = a.mul(&mk);
        }
    }
    Ok(IntPoly::new(coeffs))
}

/// All rational roots of a nonzero integer polynomial with their exact
/// multiplicities, in decreasing order. Multiplicities are certified by
/// repeated exact division; for monic input every root is integral, which
/// is asserted.
pub fn rational_roots(p: &IntPoly) -> Vec<(Rat, usize)> {
    assert!(!p.is_zero(), "rational_roots of the zero polynomial");
    let monic = p.is_monic();
    let mut roots: Vec<(Rat, usize)> = Vec::new();

    // Split off x^m.
    let mut coeffs: Vec<Rat> =
        p.coeffs().iter().map(|c| Rat::from_integer(c.clone())).collect();
    let zero_mult = coeffs.iter().take_while(|c| c.is_zero()).count();
    if zero_mult > 0 {
        coeffs.drain(..zero_mult);
        roots.push((Rat::zero(), zero_mult));
    }
    if coeffs.len() <= 1 {
        roots.sort_by(|a, b| b.0.cmp(&a.0));
        return roots;
    }

    // Root candidates p/q: p | constant term, q | leading coefficient,
    // |p/q| below the root bound. When the bound is small a direct
    // divisibility scan beats factoring a potentially huge constant term.
    let a0 = coeffs[0].numer().abs();
    let lead = coeffs.last().unwrap().numer().abs();
    let bound = cauchy_bound(p).min(fujiwara_bound(p));
    let scan_limit = Int::from(1_000_000u64);
    let numers = if bound <= scan_limit {
        let b = bound.to_u64().expect("bound fits");
        let mut out = Vec::new();
        let mut d = Int::one();
        for _ in 1..=b {
            if (&a0 % &d).is_zero() {
                out.push(d.clone());
            }
            d += 1;
        }
        out
    } else {
        bounded_divisors(&a0, &bound)
    };
    let denoms = if monic { vec![Int::one()] } else { bounded_divisors(&lead, &lead) };

    let mut candidates: Vec<Rat> = Vec::new();
    for n in &numers {
        for d in &denoms {
            if n.gcd(d).is_one() {
                let r = Rat::new(n.clone(), d.clone());
                candidates.push(r.clone());
                candidates.push(-r);
            }
        }
    }
    candidates.sort();
    candidates.dedup();

    for cand in candidates {
        let mut mult = 0;
        loop {
            match deflate(&coeffs, &cand) {
                Some(next) => {
                    mult += 1;
                    coeffs = next;
                }
                None => break,
            }
        }
        if mult > 0 {
            assert!(!monic || cand.is_integer(), "monic integer polynomial with non-integral root");
            roots.push((cand, mult));
        }
        if coeffs.len() <= 1 {
            break;
        }
    }

    roots.sort_by(|a, b| b.0.cmp(&a.0));
    debug_assert!(roots.iter().map(|r| r.1).sum::<usize>() <= p.degree());
    debug_assert!(roots.iter().all(|(r, _)| p.eval(r).is_zero()));
    roots
}

/// Synthetic division by (x - r); `Some(quotient)` iff the remainder is zero.
fn deflate(coeffs: &[Rat], r: &Rat) -> Option<Vec<Rat>> {
    let mut q = vec![Rat::zero(); coeffs.len() - 1];
    let mut carry = Rat::zero();
    for i in (0..coeffs.len()).rev() {
        let v = &coeffs[i] + &carry;
        if i == 0 {
            return v.is_zero().then_some(q);
        }
        carry = &v * r;
        q[i - 1] = v;
    }
    unreachable!()
}

/// Cauchy root bound: 1 + max |a_i| / |a_n|, rounded up to an integer.
fn cauchy_bound(p: &IntPoly) -> Int {
    let lead = p.leading().abs();
    let max = p.coeffs().iter().map(Signed::abs).max().unwrap_or_else(Int::zero);
    max.div_ceil(&lead) + 1
}

/// Fujiwara root bound: 2 * max_k |a_{n-k} / a_n|^(1/k), rounded up. Far
/// tighter than Cauchy for characteristic polynomials, whose k-th
/// coefficients grow like k-th powers of the spectral radius.
fn fujiwara_bound(p: &IntPoly) -> Int {
    let n = p.degree();
    let lead = p.leading().abs();
    let mut best = Int::one();
    for (i, a) in p.coeffs().iter().enumerate() {
        if i == n || a.is_zero() {
            continue;
        }
        let k = (n - i) as u32;
        let ratio = a.abs().div_ceil(&lead);
        let mut root = ratio.nth_root(k);
        if num_traits::pow::Pow::pow(&root, k) < ratio {
            root += 1;
        }
        if root > best {
            best = root;
        }
    }
    best * 2
}

/// All positive divisors of |n| that are <= bound, via prime factorization.
fn bounded_divisors(n: &Int, bound: &Int) -> Vec<Int> {
    let n = n.abs();
    if n.is_zero() {
        return vec![];
    }
    let factors = factorize(n.to_biguint().expect("abs"));
    let mut divisors = vec![Int::one()];
    for (p, e) in factors {
        let p = Int::from_biguint(num_bigint::Sign::Plus, p);
        let mut next = Vec::new();
        for d in &divisors {
            let mut cur = d.clone();
            next.push(cur.clone());
            for _ in 0..e {
                cur = &cur * &p;
                if &cur > bound {
                    break;
                }
                next.push(cur.clone());
            }
        }
        next.sort();
        next.dedup();
        divisors = next;
    }
    divisors.retain(|d| d <= bound);
    divisors
}

/// Prime factorization by trial division plus Brent's variant of Pollard's
/// rho for large cofactors.
fn factorize(mut n: BigUint) -> Vec<(BigUint, u32)> {
    let mut out: Vec<(BigUint, u32)> = Vec::new();
    let push = |p: BigUint, out: &mut Vec<(BigUint, u32)>| {
        if let Some(last) = out.iter_mut().find(|(q, _)| *q == p) {
            last.1 += 1;
        } else {
            out.push((p, 1));
        }
    };
    if n.is_one() {
        return out;
    }
    let mut d = 2u64;
    while d < (1 << 16) {
        let dd = BigUint::from(d);
        if &dd * &dd > n {
            break;
        }
        while (&n % &dd).is_zero() {
            n /= &dd;
            push(dd.clone(), &mut out);
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n.is_one() {
        return out;
    }
    let mut stack = vec![n];
    while let Some(m) = stack.pop() {
        if m.is_one() {
            continue;
        }
        if is_probable_prime(&m) {
            push(m, &mut out);
            continue;
        }
        let f = pollard_brent(&m);
        stack.push(&m / &f);
        stack.push(f);
    }
    out.sort();
    out
}

fn is_probable_prime(n: &BigUint) -> bool {
    let two = BigUint::from(2u32);
    if n < &two {
        return false;
    }
    for p in [2u32, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let p = BigUint::from(p);
        if n == &p {
            return true;
        }
        if (n % &p).is_zero() {
            return false;
        }
    }
    let one = BigUint::one();
    let nm1 = n - &one;
    let s = nm1.trailing_zeros().unwrap_or(0);
    let d = &nm1 >> s;
    'witness: for a in [2u32, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = BigUint::from(a).modpow(&d, n);
        if x.is_one() || x == nm1 {
            continue;
        }
        for _ in 0..s.saturating_sub(1) {
            x = x.modpow(&two, n);
            if x == nm1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn pollard_brent(n: &BigUint) -> BigUint {
    let one = BigUint::one();
    let two = BigUint::from(2u32);
    if (n % &two).is_zero() {
        return two;
    }
    let mut c = BigUint::one();
    loop {
        let f = |x: &BigUint| (x * x + &c) % n;
        let mut x = two.clone();
        let mut y = two.clone();
        let mut d = one.clone();
        let mut count = 0u64;
        while d.is_one() {
            x = f(&x);
            y = f(&f(&y));
            let diff = if x > y { &x - &y } else { &y - &x };
            d = diff.gcd(n);
            count += 1;
            if count > 1_000_000 {
                break;
            }
        }
        if !d.is_one() && &d != n {
            return d;
        }
        c += 1u32;
        assert!(c.to_u32().unwrap_or(u32::MAX) < 64, "factorization failed");
    }
}
