//! Exact incremental row echelon forms.
//!
//! Rows are inserted one at a time and reduced against the rows already
//! stored, so rank computations can stop as soon as the rank is full. The
//! integer variant is fraction-free: every stored row is primitive with a
//! positive pivot, so rank over `Q` never touches a denominator.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::ring::{pow_mod, Coeff, CoeffRing};

/// Fraction-free echelon form over `Z`, giving ranks over `Q`.
#[derive(Clone, Debug)]
pub struct IntEchelon {
    ncols: usize,
    rows: Vec<Vec<BigInt>>,
    pivots: Vec<usize>,
}

impl IntEchelon {
    pub fn new(ncols: usize) -> Self {
        IntEchelon { ncols, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.ncols
    }

    pub fn rows(&self) -> &[Vec<BigInt>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Reduces `v` against the stored rows; the result vanishes at every pivot.
    pub fn reduce(&self, mut v: Vec<BigInt>) -> Vec<BigInt> {
        assert_eq!(v.len(), self.ncols);
        for (r, &pc) in self.rows.iter().zip(&self.pivots) {
            if v[pc].is_zero() {
                continue;
            }
            let a = r[pc].clone();
            let b = v[pc].clone();
            let g = a.gcd(&b);
            let (a, b) = (&a / &g, &b / &g);
            for (x, y) in v.iter_mut().zip(r) {
                if !y.is_zero() {
                    *x = &*x * &a - &b * y;
                } else if !x.is_zero() {
                    *x *= &a;
                }
            }
            make_primitive(&mut v);
        }
        v
    }

    /// Inserts a row; returns whether the rank grew.
    pub fn insert(&mut self, v: Vec<BigInt>) -> bool {
        if self.is_full() {
            return false;
        }
        let mut v = self.reduce(v);
        let Some(pc) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        make_primitive(&mut v);
        if v[pc].is_negative() {
            v.iter_mut().for_each(|x| *x = -&*x);
        }
        self.rows.push(v);
        self.pivots.push(pc);
        true
    }
}

fn make_primitive(v: &mut [BigInt]) {
    let mut g = BigInt::zero();
    for x in v.iter() {
        if !x.is_zero() {
            g = g.gcd(x);
            if g == BigInt::from(1) {
                return;
            }
        }
    }
    if !g.is_zero() {
        v.iter_mut().for_each(|x| *x = &*x / &g);
    }
}

/// Echelon form over `F_p` with `p < 2^32`.
#[derive(Clone, Debug)]
pub struct ModEchelon {
    p: u64,
    ncols: usize,
    rows: Vec<Vec<u64>>,
    pivots: Vec<usize>,
}

impl ModEchelon {
    pub fn new(p: u64, ncols: usize) -> Self {
        ModEchelon { p, ncols, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.ncols
    }

    pub fn rows(&self) -> &[Vec<u64>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn reduce(&self, mut v: Vec<u64>) -> Vec<u64> {
        assert_eq!(v.len(), self.ncols);
        let p = self.p;
        for (r, &pc) in self.rows.iter().zip(&self.pivots) {
            let f = v[pc];
            if f == 0 {
                continue;
            }
            for (x, &y) in v.iter_mut().zip(r) {
                if y != 0 {
                    *x = (*x + p - f * y % p) % p;
                }
            }
        }
        v
    }

    pub fn insert(&mut self, v: Vec<u64>) -> bool {
        if self.is_full() {
            return false;
        }
        let mut v = self.reduce(v);
        let Some(pc) = v.iter().position(|&x| x != 0) else {
            return false;
        };
        let inv = pow_mod(v[pc], self.p - 2, self.p);
        v.iter_mut().for_each(|x| *x = *x * inv % self.p);
        self.rows.push(v);
        self.pivots.push(pc);
        true
    }
}

/// Echelon form over the ring of a slice: integer rows for `Q`, residues for `F_p`.
#[derive(Clone, Debug)]
pub enum Echelon {
    Int(IntEchelon),
    Mod(ModEchelon),
}

impl Echelon {
    pub fn new(ring: CoeffRing, ncols: usize) -> Self {
        match ring {
            CoeffRing::Rational => Echelon::Int(IntEchelon::new(ncols)),
            CoeffRing::Prime(p) => Echelon::Mod(ModEchelon::new(p, ncols)),
        }
    }

    pub fn rank(&self) -> usize {
        match self {
            Echelon::Int(e) => e.rank(),
            Echelon::Mod(e) => e.rank(),
        }
    }

    pub fn is_full(&self) -> bool {
        match self {
            Echelon::Int(e) => e.is_full(),
            Echelon::Mod(e) => e.is_full(),
        }
    }

    pub fn ncols(&self) -> usize {
        match self {
            Echelon::Int(e) => e.ncols,
            Echelon::Mod(e) => e.ncols,
        }
    }

    /// Pivot columns, one per stored row.
    pub fn pivots(&self) -> &[usize] {
        match self {
            Echelon::Int(e) => e.pivots(),
            Echelon::Mod(e) => e.pivots(),
        }
    }

    /// Inserts an integer row (reduced mod `p` when needed).
    pub fn insert_int(&mut self, v: Vec<BigInt>) -> bool {
        match self {
            Echelon::Int(e) => e.insert(v),
            Echelon::Mod(e) => {
                let p = BigInt::from(e.p);
                let v = v.iter().map(|x| num_traits::ToPrimitive::to_u64(&x.mod_floor(&p)).unwrap()).collect();
                e.insert(v)
            }
        }
    }

    /// Stored rows as integers (residues in `[0, p)` for `F_p`).
    pub fn int_rows(&self) -> Vec<Vec<BigInt>> {
        match self {
            Echelon::Int(e) => e.rows().to_vec(),
            Echelon::Mod(e) => e.rows().iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect(),
        }
    }
}

/// Echelon form over an exact field with a caller-chosen column priority:
/// the pivot of a row is its first nonzero column in `priority` order.
#[derive(Clone, Debug)]
pub struct FieldEchelon {
    ring: CoeffRing,
    priority: Vec<usize>,
    rows: Vec<Vec<Coeff>>,
    pivots: Vec<usize>,
}

impl FieldEchelon {
    pub fn new(ring: CoeffRing, priority: Vec<usize>) -> Self {
        FieldEchelon { ring, priority, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn reduce(&self, mut v: Vec<Coeff>) -> Vec<Coeff> {
        let ring = self.ring;
        for (r, &pc) in self.rows.iter().zip(&self.pivots) {
            if ring.is_zero(&v[pc]) {
                continue;
            }
            let f = v[pc].clone();
            for (x, y) in v.iter_mut().zip(r) {
                if !ring.is_zero(y) {
                    *x = ring.sub(x, &ring.mul(&f, y));
                }
            }
        }
        v
    }

    pub fn insert(&mut self, v: Vec<Coeff>) -> bool {
        let v = self.reduce(v);
        let Some(&pc) = self.priority.iter().find(|&&c| !self.ring.is_zero(&v[c])) else {
            return false;
        };
        let inv = self.ring.inv(&v[pc]).expect("nonzero pivot");
        let v: Vec<Coeff> = v.iter().map(|x| self.ring.mul(x, &inv)).collect();
        self.rows.push(v);
        self.pivots.push(pc);
        true
    }
}
