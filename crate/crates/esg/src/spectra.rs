//! Exact eigenvalue decisions for integer symmetric matrices: definiteness,
//! smallest-eigenvalue isolation, and tolerance-free comparison of smallest
//! eigenvalues. Every decision reduces to Sturm counts and polynomial gcds
//! over the integers; no floating point enters the decision path.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::matrix::IntMatrix;
use crate::poly::{IntPoly, SturmChain};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Definiteness {
    PositiveDefinite,
    PositiveSemidefiniteSingular,
    Indefinite,
}

/// Closed interval with exact rational endpoints.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RationalInterval {
    pub lo: BigRational,
    pub hi: BigRational,
}

impl RationalInterval {
    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }
}

/// Serialize a rational as a decimal-free "p/q" string.
pub fn rational_str(r: &BigRational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Parse a "p/q" or bare-integer rational string.
pub fn rational_from_str(s: &str) -> Option<BigRational> {
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim().parse::<BigInt>().ok()?, d.trim().parse::<BigInt>().ok()?),
        None => (s.trim().parse::<BigInt>().ok()?, BigInt::one()),
    };
    if den.is_zero() {
        return None;
    }
    Some(BigRational::new(num, den))
}

/// Smallest-eigenvalue report: an interval certified to contain exactly the
/// smallest root of the characteristic polynomial, with an exactness flag.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SmallestEig {
    pub interval: RationalInterval,
    pub exact_rational: bool,
}

/// Default reporting width, 2^-32.
pub fn default_isolation_width() -> BigRational {
    BigRational::new(BigInt::one(), BigInt::from(1u64 << 32))
}

/// An irrational algebraic root held as a square-free, rational-root-free
/// polynomial together with a half-open interval (lo, hi] containing exactly
/// one of its roots. Interval endpoints are never roots, so Sturm counts at
/// them are always well defined.
#[derive(Clone, Debug)]
pub struct IsolatedRoot {
    chain: SturmChain,
    lo: BigRational,
    hi: BigRational,
}

impl IsolatedRoot {
    pub fn poly(&self) -> &IntPoly {
        self.chain.poly()
    }

    pub fn lo(&self) -> &BigRational {
        &self.lo
    }

    pub fn hi(&self) -> &BigRational {
        &self.hi
    }

    fn bisect(&mut self) {
        let mid = (&self.lo + &self.hi) / BigRational::from(BigInt::from(2));
        debug_assert!(self.chain.poly().sign_at(&mid) != 0);
        if self.chain.count_roots(&self.lo, &mid) >= 1 {
            self.hi = mid;
        } else {
            self.lo = mid;
        }
    }

    pub fn refine_to(&mut self, width: &BigRational) {
        while &(&self.hi - &self.lo) > width {
            self.bisect();
        }
    }

    /// Narrow until the rational point q lies strictly outside (lo, hi].
    /// Requires q not to be the isolated root, which holds whenever the
    /// backing polynomial has no rational roots.
    fn exclude(&mut self, q: &BigRational) {
        while &self.lo < q && q <= &self.hi {
            self.bisect();
        }
    }

    /// Whether the isolated root is also a root of `g`, decided exactly via
    /// the gcd: roots of gcd(poly, g) are roots of poly, so the isolating
    /// interval and its endpoints remain valid for counting them.
    pub fn is_root_of(&self, g: &IntPoly) -> bool {
        let h = self.poly().gcd(g);
        if h.degree() == 0 {
            return false;
        }
        SturmChain::new(&h).count_roots(&self.lo, &self.hi) == 1
    }
}

/// Location of the smallest real root of an integer polynomial.
#[derive(Clone, Debug)]
pub enum SmallestRoot {
    Rational(BigRational),
    Irrational(IsolatedRoot),
}

/// Locate the smallest real root of `p` exactly, or None when `p` has no
/// real roots (or is constant).
pub fn smallest_root(p: &IntPoly) -> Option<SmallestRoot> {
    if p.is_zero() || p.degree() == 0 {
        return None;
    }
    let rationals = p.rational_roots();
    let min_rational = rationals.first().map(|(r, _)| r.clone());
    let irr = p.rational_root_free_part();
    let irr_loc = if irr.degree() > 0 {
        let chain = SturmChain::new(&irr);
        let b = BigRational::from(chain.poly().root_bound());
        let (lo, hi) = (-b.clone(), b);
        if chain.count_roots(&lo, &hi) == 0 {
            None
        } else {
            let mut root = IsolatedRoot { chain, lo, hi };
            while root.chain.count_roots(&root.lo, &root.hi) > 1 {
                let mid = (&root.lo + &root.hi) / BigRational::from(BigInt::from(2));
                if root.chain.count_roots(&root.lo, &mid) >= 1 {
                    root.hi = mid;
                } else {
                    root.lo = mid;
                }
            }
            Some(root)
        }
    } else {
        None
    };
    match (min_rational, irr_loc) {
        (None, None) => None,
        (Some(r), None) => Some(SmallestRoot::Rational(r)),
        (None, Some(loc)) => Some(SmallestRoot::Irrational(loc)),
        (Some(r), Some(mut loc)) => {
            loc.exclude(&r);
            if r <= loc.lo {
                Some(SmallestRoot::Rational(r))
            } else {
                for (q, _) in &rationals {
                    loc.exclude(q);
                }
                Some(SmallestRoot::Irrational(loc))
            }
        }
    }
}

/// Whether the located root is also a root of `g`, decided exactly.
pub fn root_is_root_of(loc: &SmallestRoot, g: &IntPoly) -> bool {
    match loc {
        SmallestRoot::Rational(r) => !g.is_zero() && g.sign_at(r) == 0,
        SmallestRoot::Irrational(ir) => ir.is_root_of(g),
    }
}

/// Multiplicity of the smallest real root of `p`.
pub fn multiplicity_of_smallest(p: &IntPoly) -> usize {
    let loc = smallest_root(p).expect("polynomial has a real root");
    for (f, m) in p.squarefree_decomposition() {
        if root_is_root_of(&loc, &f) {
            return m;
        }
    }
    unreachable!("smallest root belongs to some square-free factor");
}

/// Exact ordering of the smallest real roots of two polynomials, both of
/// which must have real roots. Equality is certified through the gcd of the
/// two root-witness polynomials, never through interval agreement.
pub fn compare_smallest_roots(pa: &IntPoly, pb: &IntPoly) -> Ordering {
    let la = smallest_root(pa).expect("left polynomial has a real root");
    let lb = smallest_root(pb).expect("right polynomial has a real root");
    match (la, lb) {
        (SmallestRoot::Rational(a), SmallestRoot::Rational(b)) => a.cmp(&b),
        (SmallestRoot::Rational(r), SmallestRoot::Irrational(mut b)) => {
            b.exclude(&r);
            if r <= b.lo {
                Ordering::Less
            } else {
                Ordering::Greater
            }
        }
        (SmallestRoot::Irrational(mut a), SmallestRoot::Rational(r)) => {
            a.exclude(&r);
            if r <= a.lo {
                Ordering::Greater
            } else {
                Ordering::Less
            }
        }
        (SmallestRoot::Irrational(mut a), SmallestRoot::Irrational(mut b)) => {
            let g = a.poly().gcd(b.poly());
            if g.degree() > 0 && a.is_root_of(&g) && b.is_root_of(&g) {
                let lo = a.lo.clone().min(b.lo.clone());
                let hi = a.hi.clone().max(b.hi.clone());
                if a.hi >= b.lo && b.hi >= a.lo
                    && SturmChain::new(&g).count_roots(&lo, &hi) == 1
                {
                    return Ordering::Equal;
                }
            }
            loop {
                if a.hi <= b.lo {
                    return Ordering::Less;
                }
                if b.hi <= a.lo {
                    return Ordering::Greater;
                }
                a.bisect();
                b.bisect();
            }
        }
    }
}

fn assert_sym(a: &IntMatrix) {
    debug_assert!(a.is_symmetric(), "matrix must be symmetric");
}

/// Isolate the smallest eigenvalue inside an interval of width at most
/// `width`; rational smallest eigenvalues are reported exactly with the flag
/// set and a degenerate interval.
pub fn smallest_eig_interval(a: &IntMatrix, width: &BigRational) -> SmallestEig {
    assert_sym(a);
    assert!(a.rows() > 0, "matrix must be nonempty");
    assert!(width.is_positive(), "width must be positive");
    let p = a.char_poly();
    match smallest_root(&p).expect("symmetric matrix has real spectrum") {
        SmallestRoot::Rational(r) => SmallestEig {
            interval: RationalInterval { lo: r.clone(), hi: r },
            exact_rational: true,
        },
        SmallestRoot::Irrational(mut loc) => {
            loc.refine_to(width);
            SmallestEig {
                interval: RationalInterval { lo: loc.lo.clone(), hi: loc.hi.clone() },
                exact_rational: false,
            }
        }
    }
}

/// Exact ordering of smallest eigenvalues.
pub fn compare_smallest(a: &IntMatrix, b: &IntMatrix) -> Ordering {
    assert_sym(a);
    assert_sym(b);
    assert!(a.rows() > 0 && b.rows() > 0, "matrices must be nonempty");
    compare_smallest_roots(&a.char_poly(), &b.char_poly())
}

/// Exact classification of A + cI.
pub fn shifted_definiteness(a: &IntMatrix, c: &BigInt) -> Definiteness {
    assert_sym(a);
    if a.rows() == 0 {
        return Definiteness::PositiveDefinite;
    }
    let shifted = a.add_diag(c);
    if shifted
        .leading_principal_minors()
        .iter()
        .all(|m| m.is_positive())
    {
        return Definiteness::PositiveDefinite;
    }
    let t = BigRational::from(-c.clone());
    match smallest_root(&a.char_poly()).expect("symmetric matrix has real spectrum") {
        SmallestRoot::Rational(r) => match r.cmp(&t) {
            Ordering::Greater => Definiteness::PositiveDefinite,
            Ordering::Equal => Definiteness::PositiveSemidefiniteSingular,
            Ordering::Less => Definiteness::Indefinite,
        },
        SmallestRoot::Irrational(mut loc) => {
            loc.exclude(&t);
            if t <= loc.lo {
                Definiteness::PositiveDefinite
            } else {
                Definiteness::Indefinite
            }
        }
    }
}

/// Number of eigenvalues (with multiplicity) that are <= x.
pub fn count_eigs_at_most(a: &IntMatrix, x: &BigRational) -> usize {
    assert_sym(a);
    let p = a.char_poly();
    let mut total = 0;
    for (f, mult) in p.squarefree_decomposition() {
        let mut f = f;
        let mut count = 0;
        if f.degree() > 0 && f.sign_at(x) == 0 {
            let lin = IntPoly::new(vec![-x.numer().clone(), x.denom().clone()]);
            f = f.div_exact(&lin).expect("root divides").normalized();
            count += 1;
        }
        if f.degree() > 0 {
            let lo = BigRational::from(-f.root_bound());
            if &lo < x {
                count += SturmChain::new(&f).count_roots(&lo, x);
            }
        }
        total += mult * count;
    }
    total
}

/// Exact check that A x = lam x. The zero vector never verifies.
pub fn verify_eigenpair(a: &IntMatrix, x: &[BigInt], lam: &BigInt) -> bool {
    assert_sym(a);
    assert_eq!(a.rows(), x.len(), "dimension mismatch");
    if x.iter().all(|v| v.is_zero()) {
        return false;
    }
    for i in 0..a.rows() {
        let mut acc = BigInt::zero();
        for (j, xj) in x.iter().enumerate() {
            acc += a.get(i, j) * xj;
        }
        if acc != lam * &x[i] {
            return false;
        }
    }
    true
}
