//! Exact arithmetic in the cyclotomic coefficient field Q(ζ), ζ = exp(iπ/L).
//!
//! A [`Scalar`] is a rational-coefficient polynomial in ζ reduced modulo the
//! 2L-th cyclotomic polynomial.  L = 1 is the degenerate rational case
//! (ζ = −1, polynomials are constants).  Entries of Coxeter bilinear forms are
//! values −cos(π/m), which live in the real subfield; sign determination
//! first tests exact zero by coefficient equality and otherwise evaluates the
//! ζ-polynomial with rational interval arithmetic at increasing precision
//! until the interval excludes zero.

use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::sync::{Arc, Mutex};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::{Error, Result};

pub type Rat = BigRational;

/// Sign of a real algebraic number.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

// ---------------------------------------------------------------------------
// Integer polynomials (cyclotomic polynomial computation).
// Coefficient vectors are low-degree-first throughout this module.
// ---------------------------------------------------------------------------

/// Long division by a monic divisor; the division must be exact.
fn ipoly_div_exact(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let mut rem: Vec<BigInt> = num.to_vec();
    let dd = den.len() - 1;
    assert!(den[dd].is_one(), "divisor must be monic");
    assert!(rem.len() > dd);
    let qd = rem.len() - 1 - dd;
    let mut quot = vec![BigInt::zero(); qd + 1];
    for k in (0..=qd).rev() {
        let c = rem[k + dd].clone();
        if !c.is_zero() {
            for (j, dj) in den.iter().enumerate() {
                rem[k + j] -= &c * dj;
            }
        }
        quot[k] = c;
    }
    assert!(rem.iter().all(BigInt::is_zero), "inexact polynomial division");
    quot
}

/// Coefficients of the n-th cyclotomic polynomial Φ_n, via
/// Φ_n(x) = (x^n − 1) / ∏_{d|n, d<n} Φ_d(x).
pub fn cyclotomic(n: u64) -> Vec<BigInt> {
    assert!(n >= 1);
    let mut memo: Vec<(u64, Vec<BigInt>)> = Vec::new();
    for d in 1..=n {
        if n % d != 0 {
            continue;
        }
        // x^d − 1
        let mut num = vec![BigInt::zero(); d as usize + 1];
        num[0] = -BigInt::one();
        num[d as usize] = BigInt::one();
        let mut phi = num;
        for (e, p) in &memo {
            if d % e == 0 {
                phi = ipoly_div_exact(&phi, p);
            }
        }
        memo.push((d, phi));
    }
    memo.pop().unwrap().1
}

// ---------------------------------------------------------------------------
// Rational polynomials (Sturm sequences, extended Euclid for inverses).
// ---------------------------------------------------------------------------

fn rpoly_trim(mut v: Vec<Rat>) -> Vec<Rat> {
    while v.last().is_some_and(Rat::is_zero) {
        v.pop();
    }
    v
}

fn rpoly_eval(p: &[Rat], x: &Rat) -> Rat {
    let mut acc = Rat::zero();
    for c in p.iter().rev() {
        acc = &acc * x + c;
    }
    acc
}

fn rpoly_derivative(p: &[Rat]) -> Vec<Rat> {
    if p.len() <= 1 {
        return vec![];
    }
    p.iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| c * rat_int(i as i64))
        .collect()
}

/// Division with remainder; rhs must be nonzero. Returns (quotient, remainder).
fn rpoly_divmod(num: &[Rat], den: &[Rat]) -> (Vec<Rat>, Vec<Rat>) {
    let den = rpoly_trim(den.to_vec());
    assert!(!den.is_empty(), "division by zero polynomial");
    let mut rem = rpoly_trim(num.to_vec());
    let dd = den.len() - 1;
    if rem.len() <= dd {
        return (vec![], rem);
    }
    let lead = den[dd].clone();
    let qd = rem.len() - 1 - dd;
    let mut quot = vec![Rat::zero(); qd + 1];
    for k in (0..=qd).rev() {
        if rem.len() < k + dd + 1 {
            continue;
        }
        let c = &rem[k + dd] / &lead;
        if !c.is_zero() {
            for (j, dj) in den.iter().enumerate() {
                let t = &c * dj;
                rem[k + j] -= t;
            }
        }
        quot[k] = c;
        rem = rpoly_trim(rem);
    }
    (quot, rem)
}

/// Normalize so the leading coefficient has absolute value 1 (sign kept).
fn rpoly_normalize(p: Vec<Rat>) -> Vec<Rat> {
    let p = rpoly_trim(p);
    match p.last() {
        None => p,
        Some(lead) => {
            let s = lead.abs();
            p.iter().map(|c| c / &s).collect()
        }
    }
}

/// Sturm chain of a squarefree polynomial.
struct Sturm {
    chain: Vec<Vec<Rat>>,
}

impl Sturm {
    fn new(p: &[Rat]) -> Sturm {
        let mut chain = vec![rpoly_normalize(p.to_vec())];
        let d = rpoly_derivative(p);
        if !rpoly_trim(d.clone()).is_empty() {
            chain.push(rpoly_normalize(d));
            loop {
                let n = chain.len();
                let (_, r) = rpoly_divmod(&chain[n - 2], &chain[n - 1]);
                let r = rpoly_trim(r);
                if r.is_empty() {
                    break;
                }
                chain.push(rpoly_normalize(r.iter().map(|c| -c).collect()));
            }
        }
        Sturm { chain }
    }

    fn sign_changes(&self, x: &Rat) -> usize {
        let mut changes = 0;
        let mut last: Option<bool> = None; // sign as is_negative
        for p in &self.chain {
            let v = rpoly_eval(p, x);
            if v.is_zero() {
                continue;
            }
            let neg = v.is_negative();
            if let Some(l) = last {
                if l != neg {
                    changes += 1;
                }
            }
            last = Some(neg);
        }
        changes
    }

    /// Number of distinct real roots in the half-open interval (a, b].
    fn count(&self, a: &Rat, b: &Rat) -> usize {
        self.sign_changes(a) - self.sign_changes(b)
    }
}

// ---------------------------------------------------------------------------
// Rational intervals with dyadic outward rounding.
// ---------------------------------------------------------------------------

fn dyadic_floor(x: &Rat, bits: u32) -> Rat {
    let scaled_num: BigInt = x.numer() << bits;
    let q = scaled_num.div_floor(x.denom());
    Rat::new(q, BigInt::one() << bits)
}

fn dyadic_ceil(x: &Rat, bits: u32) -> Rat {
    -dyadic_floor(&-x.clone(), bits)
}

#[derive(Clone, Debug)]
struct Iv {
    lo: Rat,
    hi: Rat,
}

impl Iv {
    fn point(r: Rat) -> Iv {
        Iv { lo: r.clone(), hi: r }
    }

    fn add(&self, o: &Iv) -> Iv {
        Iv { lo: &self.lo + &o.lo, hi: &self.hi + &o.hi }
    }

    fn sub(&self, o: &Iv) -> Iv {
        Iv { lo: &self.lo - &o.hi, hi: &self.hi - &o.lo }
    }

    fn mul(&self, o: &Iv) -> Iv {
        let cands = [&self.lo * &o.lo, &self.lo * &o.hi, &self.hi * &o.lo, &self.hi * &o.hi];
        let mut lo = cands[0].clone();
        let mut hi = cands[0].clone();
        for c in &cands[1..] {
            if *c < lo {
                lo = c.clone();
            }
            if *c > hi {
                hi = c.clone();
            }
        }
        Iv { lo, hi }
    }

    /// Multiply by an exact rational.
    fn scale(&self, c: &Rat) -> Iv {
        if c.is_negative() {
            Iv { lo: &self.hi * c, hi: &self.lo * c }
        } else {
            Iv { lo: &self.lo * c, hi: &self.hi * c }
        }
    }

    fn round_out(&self, bits: u32) -> Iv {
        Iv { lo: dyadic_floor(&self.lo, bits), hi: dyadic_ceil(&self.hi, bits) }
    }
}

// ---------------------------------------------------------------------------
// The coefficient field.
// ---------------------------------------------------------------------------

struct CosCache {
    /// Enclosure of x₀ = 2cos(π/L), the largest real root of `psi`.
    x: Iv,
    exact: bool,
    table_bits: u32,
    /// Enclosures of cos(kπ/L) for k = 0..degree.
    table: Arc<Vec<Iv>>,
}

/// The field Q(ζ_{2L}) with ζ = exp(iπ/L), presented as polynomials modulo
/// Φ_{2L}.  L = 1 means plain rationals.  Shared behind `Arc` by every
/// [`Scalar`] of one Coxeter system.
pub struct CycField {
    l: u64,
    degree: usize,
    modulus: Vec<BigInt>,
    /// ζ^(degree+k) reduced, for k = 0..degree−1 (enough to reduce products).
    red_rows: Vec<Vec<Rat>>,
    /// ζ^(−k) reduced, for k = 0..degree.
    conj_rows: Vec<Vec<Rat>>,
    /// Minimal polynomial of 2cos(π/L); empty when L = 1.
    psi: Vec<Rat>,
    sturm: Option<Sturm>,
    cos: Mutex<CosCache>,
}

impl fmt::Debug for CycField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycField(L={}, degree={})", self.l, self.degree)
    }
}

impl CycField {
    pub fn new(l: u64) -> Arc<CycField> {
        assert!(l >= 1, "L must be positive");
        if l == 1 {
            // Plain rationals: ζ = −1, modulus x + 1, constants only.
            return Arc::new(CycField {
                l,
                degree: 1,
                modulus: vec![BigInt::one(), BigInt::one()],
                red_rows: vec![],
                conj_rows: vec![vec![Rat::one()]],
                psi: vec![],
                sturm: None,
                cos: Mutex::new(CosCache {
                    x: Iv::point(rat_int(2)),
                    exact: true,
                    table_bits: 0,
                    table: Arc::new(vec![]),
                }),
            });
        }
        let modulus = cyclotomic(2 * l);
        let degree = modulus.len() - 1;
        debug_assert!(degree % 2 == 0);

        // ζ^degree = −(low part of Φ), then iterated shifts.
        let base: Vec<Rat> = modulus[..degree].iter().map(|c| Rat::from_integer(-c.clone())).collect();
        let mut red_rows: Vec<Vec<Rat>> = vec![base.clone()];
        for _ in 1..degree.max(1) - 1 {
            let prev = red_rows.last().unwrap();
            let mut next = vec![Rat::zero(); degree];
            let top = prev[degree - 1].clone();
            for j in (1..degree).rev() {
                next[j] = prev[j - 1].clone();
            }
            if !top.is_zero() {
                for (j, b) in base.iter().enumerate() {
                    let t = &top * b;
                    next[j] += t;
                }
            }
            red_rows.push(next);
        }

        // Minimal polynomial of 2cos(π/L) from the palindromic Φ_{2L}:
        // Φ(z)/z^h = a_h + Σ_{j=1..h} a_{h+j}·(z^j + z^{−j}) with z^j + z^{−j} = P_j(z + z^{−1}),
        // where P_0 = 2, P_1 = x, P_{j+1} = x·P_j − P_{j−1}.
        let h = degree / 2;
        let a: Vec<Rat> = modulus.iter().map(|c| Rat::from_integer(c.clone())).collect();
        let mut psi = vec![Rat::zero(); h + 1];
        psi[0] = a[h].clone();
        let mut p_prev: Vec<Rat> = vec![rat_int(2)]; // P_0
        let mut p_cur: Vec<Rat> = vec![Rat::zero(), Rat::one()]; // P_1
        for j in 1..=h {
            for (i, c) in p_cur.iter().enumerate() {
                let t = &a[h + j] * c;
                psi[i] += t;
            }
            if j < h {
                // P_{j+1} = x·P_j − P_{j−1}
                let mut next = vec![Rat::zero(); p_cur.len() + 1];
                for (i, c) in p_cur.iter().enumerate() {
                    next[i + 1] = c.clone();
                }
                for (i, c) in p_prev.iter().enumerate() {
                    next[i] -= c;
                }
                p_prev = std::mem::replace(&mut p_cur, next);
            }
        }
        let sturm = Sturm::new(&psi);

        // Isolate the largest root of psi in (lo, hi] ⊆ (−2, 2].
        let mut lo = rat_int(-2);
        let mut hi = rat_int(2);
        while sturm.count(&lo, &hi) > 1 {
            let mid = (&lo + &hi) / rat_int(2);
            if sturm.count(&mid, &hi) >= 1 {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        debug_assert_eq!(sturm.count(&lo, &hi), 1);

        let field = CycField {
            l,
            degree,
            modulus,
            red_rows,
            conj_rows: vec![],
            psi,
            sturm: Some(sturm),
            cos: Mutex::new(CosCache {
                x: Iv { lo, hi },
                exact: false,
                table_bits: 0,
                table: Arc::new(vec![]),
            }),
        };
        // ζ^(−k) = ζ^(2L−k) for k = 0..degree.
        let conj_rows = (0..=degree as u64)
            .map(|k| field.power_coeffs((2 * l - k) % (2 * l)))
            .collect();
        Arc::new(CycField { conj_rows, ..field })
    }

    pub fn l(&self) -> u64 {
        self.l
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_rational(&self) -> bool {
        self.l == 1
    }

    /// Reduce a coefficient vector of length < 2·degree modulo Φ_{2L}.
    fn reduce(&self, mut v: Vec<Rat>) -> Vec<Rat> {
        assert!(v.len() <= 2 * self.degree - 1);
        for i in (self.degree..v.len()).rev() {
            let c = std::mem::replace(&mut v[i], Rat::zero());
            if c.is_zero() {
                continue;
            }
            let row = &self.red_rows[i - self.degree];
            for (j, r) in row.iter().enumerate() {
                let t = &c * r;
                v[j] += t;
            }
        }
        v.truncate(self.degree);
        v.resize(self.degree, Rat::zero());
        v
    }

    /// Coefficients of ζ^k (0 ≤ k < 2L) reduced modulo Φ_{2L}.
    fn power_coeffs(&self, k: u64) -> Vec<Rat> {
        let mut v = vec![Rat::zero(); self.degree];
        if (k as usize) < self.degree {
            v[k as usize] = Rat::one();
            return v;
        }
        v[0] = Rat::one();
        for _ in 0..k {
            let mut shifted = vec![Rat::zero(); self.degree + 1];
            for (i, c) in v.iter().enumerate() {
                shifted[i + 1] = c.clone();
            }
            v = self.reduce(shifted);
        }
        v
    }

    /// Refine the enclosure of 2cos(π/L) until its width is ≤ 2^(−bits).
    fn refine_x(&self, c: &mut CosCache, bits: u32) {
        if c.exact {
            return;
        }
        let sturm = self.sturm.as_ref().unwrap();
        let target = Rat::new(BigInt::one(), BigInt::one() << bits);
        while &c.x.hi - &c.x.lo > target {
            let mid = (&c.x.lo + &c.x.hi) / rat_int(2);
            if rpoly_eval(&self.psi, &mid).is_zero() {
                c.x = Iv::point(mid);
                c.exact = true;
                return;
            }
            if sturm.count(&mid, &c.x.hi) == 1 {
                c.x.lo = mid;
            } else {
                c.x.hi = mid;
            }
        }
    }

    /// Interval table for cos(kπ/L), k = 0..degree, at roughly `bits` precision.
    fn cos_table(&self, bits: u32) -> Arc<Vec<Iv>> {
        let mut cache = self.cos.lock().unwrap();
        if cache.table_bits >= bits && !cache.table.is_empty() {
            return cache.table.clone();
        }
        self.refine_x(&mut cache, bits + 8);
        let x = cache.x.clone(); // 2cos(π/L)
        let round = bits + 4;
        let mut tab: Vec<Iv> = Vec::with_capacity(self.degree);
        tab.push(Iv::point(Rat::one()));
        if self.degree > 1 {
            tab.push(x.scale(&Rat::new(BigInt::one(), BigInt::from(2))).round_out(round));
        }
        for k in 2..self.degree {
            // cos((k)π/L) = 2cos(π/L)·cos((k−1)π/L) − cos((k−2)π/L)
            let next = x.mul(&tab[k - 1]).sub(&tab[k - 2]).round_out(round);
            tab.push(next);
        }
        cache.table = Arc::new(tab);
        cache.table_bits = bits;
        cache.table.clone()
    }
}

// ---------------------------------------------------------------------------
// Scalars.
// ---------------------------------------------------------------------------

/// An element of Q(ζ_{2L}): rational coefficient vector of length `degree`,
/// low power first.  Immutable value; all operations are pure.
#[derive(Clone)]
pub struct Scalar {
    field: Arc<CycField>,
    c: Vec<Rat>,
}

impl Scalar {
    pub fn zero(f: &Arc<CycField>) -> Scalar {
        Scalar { field: f.clone(), c: vec![Rat::zero(); f.degree] }
    }

    pub fn one(f: &Arc<CycField>) -> Scalar {
        Scalar::from_rat(f, Rat::one())
    }

    pub fn from_rat(f: &Arc<CycField>, r: Rat) -> Scalar {
        let mut c = vec![Rat::zero(); f.degree];
        c[0] = r;
        Scalar { field: f.clone(), c }
    }

    pub fn from_int(f: &Arc<CycField>, n: i64) -> Scalar {
        Scalar::from_rat(f, rat_int(n))
    }

    /// ζ^k for any integer k.
    pub fn zeta_pow(f: &Arc<CycField>, k: i64) -> Scalar {
        let n = 2 * f.l as i64;
        let k = k.rem_euclid(n) as u64;
        if f.l == 1 {
            // ζ = −1
            return Scalar::from_int(f, if k == 0 { 1 } else { -1 });
        }
        Scalar { field: f.clone(), c: f.power_coeffs(k) }
    }

    /// −cos(π/m), the off-diagonal Coxeter bilinear form entry.
    /// `None` encodes m = ∞ and yields −1.  Requires m | L (or the small
    /// rational cases when L = 1).
    pub fn neg_cos(f: &Arc<CycField>, m: Option<u32>) -> Result<Scalar> {
        let m = match m {
            None => return Ok(Scalar::from_int(f, -1)),
            Some(m) => m,
        };
        if m < 2 {
            return Err(Error::Config(format!("cos(π/{m}) entry out of range; need m ≥ 2")));
        }
        if f.l == 1 {
            return match m {
                2 => Ok(Scalar::zero(f)),
                3 => Ok(Scalar::from_rat(f, Rat::new(BigInt::from(-1), BigInt::from(2)))),
                _ => Err(Error::Config(format!(
                    "field mismatch: −cos(π/{m}) is not rational but L = 1"
                ))),
            };
        }
        if f.l % m as u64 != 0 {
            return Err(Error::Config(format!(
                "field mismatch: m = {m} does not divide L = {}",
                f.l
            )));
        }
        let k = (f.l / m as u64) as i64;
        let half = Scalar::from_rat(f, Rat::new(BigInt::from(-1), BigInt::from(2)));
        Ok(&half * &(&Scalar::zeta_pow(f, k) + &Scalar::zeta_pow(f, -k)))
    }

    pub fn field(&self) -> &Arc<CycField> {
        &self.field
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.c
    }

    /// The rational value, if this scalar is rational.
    pub fn as_rat(&self) -> Option<&Rat> {
        if self.c[1..].iter().all(Rat::is_zero) {
            Some(&self.c[0])
        } else {
            None
        }
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(Rat::is_zero)
    }

    fn same_field(&self, other: &Scalar) -> bool {
        Arc::ptr_eq(&self.field, &other.field) || self.field.l == other.field.l
    }

    fn assert_field(&self, other: &Scalar) {
        assert!(self.same_field(other), "scalar field mismatch (different L)");
    }

    pub fn checked_add(&self, o: &Scalar) -> Result<Scalar> {
        if !self.same_field(o) {
            return Err(Error::FieldMismatch { a: self.field.l, b: o.field.l });
        }
        Ok(self + o)
    }

    pub fn checked_sub(&self, o: &Scalar) -> Result<Scalar> {
        if !self.same_field(o) {
            return Err(Error::FieldMismatch { a: self.field.l, b: o.field.l });
        }
        Ok(self - o)
    }

    pub fn checked_mul(&self, o: &Scalar) -> Result<Scalar> {
        if !self.same_field(o) {
            return Err(Error::FieldMismatch { a: self.field.l, b: o.field.l });
        }
        Ok(self * o)
    }

    pub fn checked_div(&self, o: &Scalar) -> Result<Scalar> {
        if !self.same_field(o) {
            return Err(Error::FieldMismatch { a: self.field.l, b: o.field.l });
        }
        Ok(self * &o.inverse()?)
    }

    pub fn inverse(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.field.l == 1 {
            return Ok(Scalar::from_rat(&self.field, self.c[0].recip()));
        }
        // Extended Euclid on (a, Φ): maintain r = u·a (mod Φ).
        let modulus: Vec<Rat> = self.field.modulus.iter().map(|c| Rat::from_integer(c.clone())).collect();
        let mut r0 = rpoly_trim(self.c.clone());
        let mut r1 = modulus;
        let mut u0 = vec![Rat::one()];
        let mut u1: Vec<Rat> = vec![];
        while !r1.is_empty() {
            let (q, r) = rpoly_divmod(&r0, &r1);
            let qu = if u1.is_empty() {
                vec![]
            } else {
                let mut prod = vec![Rat::zero(); q.len() + u1.len()];
                for (i, qi) in q.iter().enumerate() {
                    for (j, uj) in u1.iter().enumerate() {
                        let t = qi * uj;
                        prod[i + j] += t;
                    }
                }
                prod
            };
            let mut nu = u0.clone();
            nu.resize(nu.len().max(qu.len()), Rat::zero());
            for (i, c) in qu.iter().enumerate() {
                nu[i] -= c;
            }
            r0 = std::mem::replace(&mut r1, rpoly_trim(r));
            u0 = std::mem::replace(&mut u1, rpoly_trim(nu));
        }
        // r0 = gcd(a, Φ); Φ_{2L} is irreducible, so the gcd is a nonzero constant.
        assert_eq!(r0.len(), 1, "cyclotomic modulus must be coprime to nonzero scalars");
        let g = r0[0].clone();
        let mut c: Vec<Rat> = u0.iter().map(|x| x / &g).collect();
        c.resize(self.field.degree.max(c.len()), Rat::zero());
        let c = self.field.reduce(c);
        let inv = Scalar { field: self.field.clone(), c };
        debug_assert!((&inv * self).is_one());
        Ok(inv)
    }

    pub fn is_one(&self) -> bool {
        self.c[0].is_one() && self.c[1..].iter().all(Rat::is_zero)
    }

    /// Complex conjugate, ζ ↦ ζ^(−1).  Real-subfield members are fixed.
    pub fn conj(&self) -> Scalar {
        if self.field.l == 1 {
            return self.clone();
        }
        let mut out = vec![Rat::zero(); self.field.degree];
        for (k, ck) in self.c.iter().enumerate() {
            if ck.is_zero() {
                continue;
            }
            for (j, r) in self.field.conj_rows[k].iter().enumerate() {
                let t = ck * r;
                out[j] += t;
            }
        }
        Scalar { field: self.field.clone(), c: out }
    }

    /// Whether this scalar is invariant under ζ ↦ ζ^(−1), i.e. real.
    pub fn is_real_subfield(&self) -> bool {
        self.conj() == *self
    }

    /// Exact sign of a real-subfield scalar.  Tests exact zero first, then
    /// evaluates with interval arithmetic at doubling precision.
    pub fn sign(&self) -> Sign {
        if self.is_zero() {
            return Sign::Zero;
        }
        if self.field.l == 1 {
            return if self.c[0].is_negative() { Sign::Negative } else { Sign::Positive };
        }
        debug_assert!(self.is_real_subfield(), "sign of a non-real scalar");
        let mut bits = 64u32;
        while bits <= 1 << 14 {
            let table = self.field.cos_table(bits);
            // Re Σ c_k ζ^k = Σ c_k cos(kπ/L); for real-subfield members this is the value.
            let mut acc = Iv::point(Rat::zero());
            for (k, ck) in self.c.iter().enumerate() {
                if ck.is_zero() {
                    continue;
                }
                acc = acc.add(&table[k].scale(ck));
            }
            if acc.lo.is_positive() {
                return Sign::Positive;
            }
            if acc.hi.is_negative() {
                return Sign::Negative;
            }
            bits *= 2;
        }
        panic!("sign refinement exceeded precision cap on a nonzero scalar (internal error)");
    }

    /// Approximate real part Σ c_k·cos(kπ/L); equals the value for
    /// real-subfield scalars.
    pub fn to_f64(&self) -> f64 {
        let l = self.field.l as f64;
        self.c
            .iter()
            .enumerate()
            .map(|(k, c)| c.to_f64().unwrap_or(f64::NAN) * (k as f64 * std::f64::consts::PI / l).cos())
            .sum()
    }
}

impl PartialEq for Scalar {
    fn eq(&self, other: &Self) -> bool {
        self.same_field(other) && self.c == other.c
    }
}

impl Eq for Scalar {}

impl Hash for Scalar {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.field.l.hash(state);
        self.c.hash(state);
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(r) = self.as_rat() {
            return write!(f, "{r}");
        }
        let mut first = true;
        for (k, c) in self.c.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if k == 0 {
                write!(f, "{c}")?;
            } else {
                write!(f, "({c})ζ^{k}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        self.assert_field(rhs);
        Scalar {
            field: self.field.clone(),
            c: self.c.iter().zip(&rhs.c).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self.assert_field(rhs);
        Scalar {
            field: self.field.clone(),
            c: self.c.iter().zip(&rhs.c).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar { field: self.field.clone(), c: self.c.iter().map(|a| -a).collect() }
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        self.assert_field(rhs);
        let d = self.field.degree;
        if d == 1 {
            return Scalar { field: self.field.clone(), c: vec![&self.c[0] * &rhs.c[0]] };
        }
        let mut prod = vec![Rat::zero(); 2 * d - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.c.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let t = a * b;
                prod[i + j] += t;
            }
        }
        Scalar { field: self.field.clone(), c: self.field.reduce(prod) }
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        self.assert_field(rhs);
        for (a, b) in self.c.iter_mut().zip(&rhs.c) {
            *a += b;
        }
    }
}
