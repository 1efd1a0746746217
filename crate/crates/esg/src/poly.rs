//! Integer polynomials with exact root counting via Sturm chains.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Dense integer polynomial, coefficients constant term first.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

fn big(v: i64) -> BigInt {
    BigInt::from(v)
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPoly { coeffs: vec![BigInt::one()] }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| big(c)).collect())
    }

    /// The monomial x - r.
    pub fn x_minus(r: &BigInt) -> Self {
        Self::new(vec![-r.clone(), BigInt::one()])
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial reports 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn leading(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn neg(&self) -> Self {
        Self::new(self.coeffs.iter().map(|c| -c).collect())
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) + other.coeff(i));
        }
        Self::new(out)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    pub fn mul_scalar(&self, s: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    /// Multiply by x^k.
    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut out = vec![BigInt::zero(); k];
        out.extend(self.coeffs.iter().cloned());
        Self::new(out)
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// p(u/v) scaled by v^deg: sum of c_i u^i v^(deg-i). Requires v > 0;
    /// the sign equals sign(p(u/v)).
    pub fn eval_scaled(&self, u: &BigInt, v: &BigInt) -> BigInt {
        debug_assert!(v.is_positive());
        if self.is_zero() {
            return BigInt::zero();
        }
        let mut acc = self.leading();
        let mut vp = BigInt::one();
        for c in self.coeffs.iter().rev().skip(1) {
            vp *= v;
            acc = acc * u + c * &vp;
        }
        acc
    }

    pub fn sign_at(&self, x: &BigRational) -> i8 {
        let val = self.eval_scaled(x.numer(), x.denom());
        if val.is_zero() {
            0
        } else if val.is_positive() {
            1
        } else {
            -1
        }
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Self::zero();
        }
        Self::new(
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(i, c)| c * big(i as i64 + 1))
                .collect(),
        )
    }

    /// Positive gcd of all coefficients; 0 for the zero polynomial.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = num_integer::gcd(g, c.abs());
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Divide out the content, preserving signs.
    pub fn primitive_part(&self) -> Self {
        let g = self.content();
        if g.is_zero() || g.is_one() {
            return self.clone();
        }
        Self::new(self.coeffs.iter().map(|c| c / &g).collect())
    }

    /// Primitive part with positive leading coefficient.
    pub fn normalized(&self) -> Self {
        let p = self.primitive_part();
        if p.leading().is_negative() {
            p.neg()
        } else {
            p
        }
    }

    /// Exact polynomial quotient, or None when `d` does not divide `self`
    /// with an integer quotient.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        if self.degree() < d.degree() {
            return None;
        }
        let mut rem = self.coeffs.clone();
        let dd = d.degree();
        let lead = d.leading();
        let mut q = vec![BigInt::zero(); self.degree() - dd + 1];
        for k in (0..q.len()).rev() {
            let top = rem[k + dd].clone();
            if top.is_zero() {
                continue;
            }
            let (quot, r) = num_integer::div_rem(top, lead.clone());
            if !r.is_zero() {
                return None;
            }
            for (i, c) in d.coeffs.iter().enumerate() {
                rem[k + i] -= c * &quot;
            }
            q[k] = quot;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(Self::new(q))
    }

    pub fn divides(&self, other: &Self) -> bool {
        other.div_exact(self).is_some()
    }

    /// Pseudo-remainder scaled by a positive power of the divisor's leading
    /// coefficient, so the result's signs match those of the true remainder.
    fn pseudo_rem_posmul(&self, d: &Self) -> Self {
        debug_assert!(!d.is_zero());
        let delta = self.degree() as i64 - d.degree() as i64 + 1;
        let mut e = delta.max(0) as u32;
        if d.leading().is_negative() && e % 2 == 1 {
            e += 1;
        }
        let mult = d.leading().pow(e);
        let mut rem = self.mul_scalar(&mult);
        let dd = d.degree();
        while !rem.is_zero() && rem.degree() >= dd && dd > 0 {
            let k = rem.degree() - dd;
            let (quot, r) = num_integer::div_rem(rem.leading(), d.leading());
            debug_assert!(r.is_zero());
            let mut coeffs = rem.coeffs;
            for (i, c) in d.coeffs.iter().enumerate() {
                coeffs[k + i] -= c * &quot;
            }
            rem = Self::new(coeffs);
        }
        if dd == 0 {
            return Self::zero();
        }
        rem
    }

    /// Polynomial gcd by the primitive PRS, normalized positive-leading.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.normalized();
        let mut b = other.normalized();
        if a.is_zero() {
            return b;
        }
        if b.is_zero() {
            return a;
        }
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        loop {
            if b.degree() == 0 {
                return IntPoly::one();
            }
            let r = a.pseudo_rem_posmul(&b).primitive_part();
            if r.is_zero() {
                return b.normalized();
            }
            a = b;
            b = r;
        }
    }

    /// Square-free part, primitive with positive leading coefficient.
    pub fn squarefree_part(&self) -> Self {
        if self.degree() == 0 {
            return self.normalized();
        }
        let g = self.gcd(&self.derivative());
        if g.degree() == 0 {
            return self.normalized();
        }
        self.normalized()
            .div_exact(&g)
            .expect("gcd divides")
            .normalized()
    }

    /// Yun square-free decomposition: pairwise coprime square-free factors
    /// with multiplicities; the product of powers equals the normalized input.
    pub fn squarefree_decomposition(&self) -> Vec<(IntPoly, usize)> {
        let f = self.normalized();
        if f.degree() == 0 {
            return Vec::new();
        }
        let fp = f.derivative();
        let g = f.gcd(&fp);
        let mut w = f.div_exact(&g).expect("gcd divides").normalized();
        let mut y = fp.div_exact(&g).expect("gcd divides derivative");
        let mut z = y.sub(&w.derivative());
        let mut out = Vec::new();
        let mut i = 1usize;
        while w.degree() > 0 {
            let gi = w.gcd(&z);
            if gi.degree() > 0 {
                out.push((gi.clone(), i));
            }
            w = w.div_exact(&gi).expect("factor divides").normalized();
            if w.degree() == 0 {
                break;
            }
            y = z.div_exact(&gi).expect("factor divides z");
            z = y.sub(&w.derivative());
            i += 1;
        }
        out
    }

    /// p(x + c) by repeated synthetic division.
    pub fn taylor_shift(&self, c: &BigInt) -> Self {
        if self.is_zero() || c.is_zero() {
            return self.clone();
        }
        let mut work = self.coeffs.clone();
        let n = work.len();
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            for i in (k..n - 1).rev() {
                let next = work[i + 1].clone();
                work[i] += next * c;
            }
            out.push(work[k].clone());
        }
        Self::new(out)
    }

    /// Integer B with every real root strictly inside (-B, B); the smaller of
    /// the Cauchy and Fujiwara bounds, so characteristic polynomials of small
    /// matrices get a bound near the spectral radius.
    pub fn root_bound(&self) -> BigInt {
        if self.coeffs.len() <= 1 {
            return BigInt::one();
        }
        let lead = self.leading().abs();
        let mut cauchy = BigInt::zero();
        for c in &self.coeffs[..self.coeffs.len() - 1] {
            let a = c.abs();
            if a > cauchy {
                cauchy = a;
            }
        }
        let cauchy = BigInt::one() + ceil_div(&cauchy, &lead);
        let d = self.degree();
        let mut fuji = BigInt::zero();
        for i in 1..=d {
            let c = self.coeff(d - i).abs();
            if c.is_zero() {
                continue;
            }
            let ratio = ceil_div(&c, &lead);
            let mut r = ratio.nth_root(i as u32);
            if r.clone().pow(i as u32) < ratio {
                r += 1;
            }
            if r > fuji {
                fuji = r;
            }
        }
        let fuji = big(2) * fuji + 1;
        if fuji < cauchy {
            fuji
        } else {
            cauchy
        }
    }

    /// All rational roots with multiplicities, sorted ascending. Candidate
    /// numerators are scanned up to the root bound, so this stays cheap for
    /// desk-scale polynomials regardless of the constant term's size.
    pub fn rational_roots(&self) -> Vec<(BigRational, usize)> {
        if self.is_zero() || self.degree() == 0 {
            return Vec::new();
        }
        let mut p = self.normalized();
        let mut out: Vec<(BigRational, usize)> = Vec::new();
        let mut zero_mult = 0;
        while p.coeff(0).is_zero() && p.degree() > 0 {
            p = Self::new(p.coeffs[1..].to_vec());
            zero_mult += 1;
        }
        if zero_mult > 0 {
            out.push((BigRational::zero(), zero_mult));
        }
        if p.degree() > 0 {
            let bound = p.root_bound();
            for q in divisors(&p.leading().abs()) {
                if p.degree() == 0 {
                    break;
                }
                let mbound = &bound * &q;
                let mut m = BigInt::one();
                while m <= mbound && p.degree() > 0 {
                    if num_integer::gcd(m.clone(), q.clone()).is_one() {
                        for sgn in [1i64, -1] {
                            let r = BigRational::new(&m * big(sgn), q.clone());
                            let mut mult = 0;
                            while p.degree() > 0 && p.sign_at(&r) == 0 {
                                let lin =
                                    Self::new(vec![-r.numer().clone(), r.denom().clone()]);
                                p = p.div_exact(&lin).expect("root divides").normalized();
                                mult += 1;
                            }
                            if mult > 0 {
                                out.push((r, mult));
                            }
                        }
                    }
                    m += 1;
                }
            }
        }
        out.sort_by(|a, b| a.0.cmp(&b.0));
        out
    }

    /// Quotient after removing every rational root (with multiplicity).
    pub fn rational_root_free_part(&self) -> Self {
        let mut p = self.normalized();
        for (r, mult) in self.rational_roots() {
            let lin = Self::new(vec![-r.numer().clone(), r.denom().clone()]);
            for _ in 0..mult {
                p = p.div_exact(&lin).expect("root divides").normalized();
            }
        }
        p
    }
}

fn ceil_div(a: &BigInt, b: &BigInt) -> BigInt {
    let (q, r) = num_integer::div_rem(a.clone(), b.clone());
    if r.is_zero() {
        q
    } else {
        q + 1
    }
}

fn divisors(n: &BigInt) -> Vec<BigInt> {
    // leading coefficients only; tiny in this crate's domain
    if n.is_zero() {
        return vec![BigInt::one()];
    }
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = BigInt::one();
    loop {
        if &(&d * &d) > n {
            break;
        }
        if (n % &d).is_zero() {
            small.push(d.clone());
            let q = n / &d;
            if q != d {
                large.push(q);
            }
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    small
}

/// Sturm chain of the square-free normalized part of `p`.
#[derive(Clone, Debug)]
pub struct SturmChain {
    chain: Vec<IntPoly>,
}

impl SturmChain {
    pub fn new(p: &IntPoly) -> Self {
        let p0 = p.squarefree_part();
        if p0.degree() == 0 {
            return SturmChain { chain: vec![p0] };
        }
        let mut chain = vec![p0.clone(), p0.derivative().primitive_part()];
        loop {
            let k = chain.len();
            if chain[k - 1].degree() == 0 {
                break;
            }
            let r = chain[k - 2].pseudo_rem_posmul(&chain[k - 1]);
            if r.is_zero() {
                break;
            }
            chain.push(r.neg().primitive_part());
        }
        SturmChain { chain }
    }

    pub fn poly(&self) -> &IntPoly {
        &self.chain[0]
    }

    fn variations_at(&self, x: &BigRational) -> usize {
        let mut count = 0;
        let mut last: i8 = 0;
        for p in &self.chain {
            let s = p.sign_at(x);
            if s == 0 {
                continue;
            }
            if last != 0 && s != last {
                count += 1;
            }
            last = s;
        }
        count
    }

    /// Number of distinct real roots in the half-open interval (a, b].
    /// Endpoints must not be roots.
    pub fn count_roots(&self, a: &BigRational, b: &BigRational) -> usize {
        debug_assert!(a <= b);
        debug_assert!(self.chain[0].sign_at(a) != 0, "left endpoint is a root");
        debug_assert!(self.chain[0].sign_at(b) != 0, "right endpoint is a root");
        self.variations_at(a) - self.variations_at(b)
    }

    /// Distinct real roots over the whole line.
    pub fn count_all_roots(&self) -> usize {
        if self.chain[0].degree() == 0 {
            return 0;
        }
        let b = self.chain[0].root_bound();
        let lo = BigRational::from(-b.clone());
        let hi = BigRational::from(b);
        self.count_roots(&lo, &hi)
    }
}
