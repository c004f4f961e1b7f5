use std::fmt;

use super::Curve;
use crate::error::{Error, Result};
use crate::ff::{FieldOps, Fp, Fp2};

/// A point with coordinates in `F_p` or `F_{p²}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Point<K> {
    Infinity,
    Affine { x: K, y: K },
}

impl<K: FieldOps> Point<K> {
    pub fn new(x: K, y: K) -> Self {
        Point::Affine { x, y }
    }

    pub fn is_infinity(&self) -> bool {
        matches!(self, Point::Infinity)
    }

    pub fn x(&self) -> Option<K> {
        match self {
            Point::Infinity => None,
            Point::Affine { x, .. } => Some(*x),
        }
    }

    pub fn y(&self) -> Option<K> {
        match self {
            Point::Infinity => None,
            Point::Affine { y, .. } => Some(*y),
        }
    }

    /// Coordinate-wise Frobenius.
    pub fn frobenius(&self) -> Self {
        match *self {
            Point::Infinity => Point::Infinity,
            Point::Affine { x, y } => Point::Affine { x: x.frobenius(), y: y.frobenius() },
        }
    }

    /// The same point with base-field coordinates, if it has them.
    pub fn to_base(&self) -> Option<Point<Fp>> {
        match *self {
            Point::Infinity => Some(Point::Infinity),
            Point::Affine { x, y } => Some(Point::Affine { x: x.to_base()?, y: y.to_base()? }),
        }
    }
}

impl Point<Fp> {
    pub fn lift(&self, d: Fp) -> Point<Fp2> {
        match *self {
            Point::Infinity => Point::Infinity,
            Point::Affine { x, y } => Point::Affine { x: Fp2::from_base(x, d), y: Fp2::from_base(y, d) },
        }
    }
}

impl<K: FieldOps> fmt::Display for Point<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Point::Infinity => write!(f, "O"),
            Point::Affine { x, y } => write!(f, "({x}, {y})"),
        }
    }
}

impl Curve {
    fn coeff<K: FieldOps>(&self, c: Fp) -> K {
        K::from_base(&self.field, c)
    }

    /// `y² + a1·xy + a3·y - (x³ + a2·x² + a4·x + a6)`.
    pub fn equation_residual<K: FieldOps>(&self, x: K, y: K) -> K {
        let (a1, a2, a3, a4, a6) = (
            self.coeff::<K>(self.a1),
            self.coeff::<K>(self.a2),
            self.coeff::<K>(self.a3),
            self.coeff::<K>(self.a4),
            self.coeff::<K>(self.a6),
        );
        y * y + a1 * x * y + a3 * y - (x * x * x + a2 * x * x + a4 * x + a6)
    }

    pub fn contains<K: FieldOps>(&self, pt: &Point<K>) -> bool {
        match *pt {
            Point::Infinity => true,
            Point::Affine { x, y } => self.equation_residual(x, y).is_zero(),
        }
    }

    pub fn neg<K: FieldOps>(&self, pt: &Point<K>) -> Point<K> {
        match *pt {
            Point::Infinity => Point::Infinity,
            Point::Affine { x, y } => {
                let (a1, a3) = (self.coeff::<K>(self.a1), self.coeff::<K>(self.a3));
                Point::Affine { x, y: -y - a1 * x - a3 }
            }
        }
    }

    /// Chord-and-tangent addition on the general Weierstrass model.
    pub fn add<K: FieldOps>(&self, p: &Point<K>, q: &Point<K>) -> Point<K> {
        let (x1, y1, x2, y2) = match (*p, *q) {
            (Point::Infinity, _) => return *q,
            (_, Point::Infinity) => return *p,
            (Point::Affine { x: x1, y: y1 }, Point::Affine { x: x2, y: y2 }) => (x1, y1, x2, y2),
        };
        if *q == self.neg(p) {
            return Point::Infinity;
        }
        let a1 = self.coeff::<K>(self.a1);
        let a2 = self.coeff::<K>(self.a2);
        let a3 = self.coeff::<K>(self.a3);
        let a4 = self.coeff::<K>(self.a4);
        let a6 = self.coeff::<K>(self.a6);
        let two = self.coeff::<K>(self.field.elem(2));
        let three = self.coeff::<K>(self.field.elem(3));

        let (lambda, nu) = if x1 != x2 {
            let dx = x2 - x1;
            ((y2 - y1) / dx, (y1 * x2 - y2 * x1) / dx)
        } else {
            let den = two * y1 + a1 * x1 + a3;
            (
                (three * x1 * x1 + two * a2 * x1 + a4 - a1 * y1) / den,
                (-(x1 * x1 * x1) + a4 * x1 + two * a6 - a3 * y1) / den,
            )
        };
        let x3 = lambda * lambda + a1 * lambda - a2 - x1 - x2;
        let y3 = -(lambda + a1) * x3 - nu - a3;
        Point::Affine { x: x3, y: y3 }
    }

    pub fn double<K: FieldOps>(&self, p: &Point<K>) -> Point<K> {
        self.add(p, p)
    }

    /// `[k]P` by double-and-add; negative `k` negates.
    pub fn scalar_mul<K: FieldOps>(&self, k: i64, p: &Point<K>) -> Point<K> {
        let mut base = if k < 0 { self.neg(p) } else { *p };
        let mut e = k.unsigned_abs();
        let mut acc = Point::Infinity;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.add(&acc, &base);
            }
            base = self.double(&base);
            e >>= 1;
        }
        acc
    }

    /// Exact order of `p` by repeated addition.
    pub fn point_order<K: FieldOps>(&self, p: &Point<K>) -> Result<u64> {
        if !self.contains(p) {
            return Err(Error::PointNotOnCurve);
        }
        let mut acc = *p;
        let mut n = 1;
        while !acc.is_infinity() {
            acc = self.add(&acc, p);
            n += 1;
        }
        Ok(n)
    }

    /// Order of `p` given any multiple `n` of it (e.g. the group order),
    /// by stripping prime factors of `n`.
    pub fn order_dividing<K: FieldOps>(&self, p: &Point<K>, n: u64) -> u64 {
        debug_assert!(self.scalar_mul(n as i64, p).is_infinity());
        let mut order = n;
        for (q, _) in factorize(n) {
            while order.is_multiple_of(q) && self.scalar_mul((order / q) as i64, p).is_infinity() {
                order /= q;
            }
        }
        order
    }
}

/// Prime factorization by trial division.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut q = 2;
    while q * q <= n {
        if n.is_multiple_of(q) {
            let mut e = 0;
            while n.is_multiple_of(q) {
                n /= q;
                e += 1;
            }
            out.push((q, e));
        }
        q += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}
