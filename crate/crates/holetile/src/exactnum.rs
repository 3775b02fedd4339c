//! Big integers, rationals, combinatorial primitives and dense exact matrices.

use std::cell::RefCell;
use std::fmt;
use std::ops::{Index, IndexMut};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::{Error, Result};

pub type Int = BigInt;
pub type Rat = BigRational;

pub fn int(v: i64) -> Int {
    Int::from(v)
}

pub fn rat(v: i64) -> Rat {
    Rat::from_integer(Int::from(v))
}

pub fn frac(n: i64, d: i64) -> Rat {
    Rat::new(Int::from(n), Int::from(d))
}

pub fn rat_int(v: Int) -> Rat {
    Rat::from_integer(v)
}

thread_local! {
    static FACTORIALS: RefCell<Vec<Int>> = RefCell::new(vec![Int::one()]);
}

/// n! with a per-thread table, since coefficient sums hit the same
/// factorials thousands of times.
pub fn factorial(n: u64) -> Int {
    FACTORIALS.with(|cell| {
        let mut table = cell.borrow_mut();
        while table.len() as u64 <= n {
            let next = table.last().unwrap() * Int::from(table.len() as u64);
            table.push(next);
        }
        table[n as usize].clone()
    })
}

/// Binomial coefficient; 0 whenever j < 0, j > n or n < 0.
pub fn binomial(n: i64, j: i64) -> Int {
    if n < 0 || j < 0 || j > n {
        return Int::zero();
    }
    let j = j.min(n - j);
    let mut acc = Int::one();
    for t in 0..j {
        acc *= Int::from(n - t);
        acc /= Int::from(t + 1);
    }
    acc
}

/// Rising factorial (a)_s.
pub fn pochhammer(a: &Rat, s: u32) -> Rat {
    let mut acc = Rat::one();
    let mut term = a.clone();
    for _ in 0..s {
        acc *= &term;
        term += Rat::one();
    }
    acc
}

pub fn pow_rat(base: &Rat, e: u32) -> Rat {
    num_traits::pow(base.clone(), e as usize)
}

pub fn is_integer(r: &Rat) -> bool {
    r.denom().is_one()
}

/// A signed product of factorials, evaluated with negative arguments
/// treated by analytic continuation in the side parameter n.
///
/// Every argument is affine in n. Arguments are stored doubled so that
/// the half-integer slopes and offsets of the `(n-k)/2` style terms stay
/// integral. A negative argument that does not move with n is an exact
/// pole: in the denominator it kills the whole term, in the numerator it
/// is a genuine divergence. A negative argument that moves with n
/// contributes a simple pole of residue (-1)^j / (j! * slope). The term
/// is 0 if the denominator carries more poles, diverges if the numerator
/// does, and otherwise equals the ratio of residues.
#[derive(Debug, Clone)]
pub struct FactorialRatio {
    coef: Rat,
    num: Vec<(i64, i64)>,
    den: Vec<(i64, i64)>,
}

impl FactorialRatio {
    pub fn new(coef: Rat) -> Self {
        FactorialRatio { coef, num: Vec::new(), den: Vec::new() }
    }

    /// Numerator factor (twice/2)! whose argument grows like (slope2/2)·n.
    pub fn num2(mut self, twice: i64, slope2: i64) -> Self {
        self.num.push((twice, slope2));
        self
    }

    pub fn den2(mut self, twice: i64, slope2: i64) -> Self {
        self.den.push((twice, slope2));
        self
    }

    pub fn num(self, arg: i64, slope: i64) -> Self {
        self.num2(2 * arg, 2 * slope)
    }

    pub fn den(self, arg: i64, slope: i64) -> Self {
        self.den2(2 * arg, 2 * slope)
    }

    pub fn eval(&self) -> Result<Rat> {
        let mut value = self.coef.clone();
        let mut order: i32 = 0;
        let mut exact_zero = false;
        for (is_num, list) in [(true, &self.num), (false, &self.den)] {
            for &(twice, slope2) in list {
                if twice % 2 != 0 {
                    return Err(Error::DomainError(format!(
                        "half-integer factorial argument {twice}/2"
                    )));
                }
                let a = twice / 2;
                let f = if a >= 0 {
                    rat_int(factorial(a as u64))
                } else if slope2 == 0 {
                    if is_num {
                        return Err(Error::DomainError(format!("({a})! in a numerator")));
                    }
                    exact_zero = true;
                    continue;
                } else {
                    let j = (-a - 1) as u64;
                    let sign = if j % 2 == 0 { 1 } else { -1 };
                    order += if is_num { 1 } else { -1 };
                    // residue of Γ(-j + sε) is (-1)^j / (j! s ε), with s = slope2/2
                    Rat::new(Int::from(sign * 2), factorial(j) * Int::from(slope2))
                };
                if is_num {
                    value *= f;
                } else {
                    value /= f;
                }
            }
        }
        if exact_zero || order < 0 {
            return Ok(Rat::zero());
        }
        if order > 0 {
            return Err(Error::DomainError("factorial pole does not cancel".into()));
        }
        Ok(value)
    }
}

/// Dense row-major matrix over the rationals.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rat>,
}

impl ExactMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        ExactMatrix { rows, cols, data: vec![Rat::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { Rat::one() } else { Rat::zero() })
    }

    /// Builds entries from a 0-based index closure.
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rat) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        ExactMatrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::InvalidParams("ragged rows".into()));
        }
        Ok(ExactMatrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() })
    }

    pub fn from_i64(rows: &[Vec<i64>]) -> Result<Self> {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&v| rat(v)).collect()).collect())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rat {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rat) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Rat] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn mul(&self, other: &ExactMatrix) -> Result<ExactMatrix> {
        if self.cols != other.rows {
            return Err(Error::InvalidParams(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(Self::from_fn(self.rows, other.cols, |i, j| {
            let mut acc = Rat::zero();
            for s in 0..self.cols {
                let a = self.get(i, s);
                if !a.is_zero() {
                    acc += a * other.get(s, j);
                }
            }
            acc
        }))
    }

    /// Submatrix on the given 0-based row and column index lists.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Self {
        Self::from_fn(rows.len(), cols.len(), |i, j| self.get(rows[i], cols[j]).clone())
    }

    pub fn is_integral(&self) -> bool {
        self.data.iter().all(is_integer)
    }

    pub fn entries(&self) -> impl Iterator<Item = &Rat> {
        self.data.iter()
    }
}

impl Index<(usize, usize)> for ExactMatrix {
    type Output = Rat;
    fn index(&self, (i, j): (usize, usize)) -> &Rat {
        self.get(i, j)
    }
}

impl IndexMut<(usize, usize)> for ExactMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rat {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|v| v.to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Even-sized skew-symmetric matrix.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SkewMatrix(ExactMatrix);

impl SkewMatrix {
    pub fn new(m: ExactMatrix) -> Result<Self> {
        if !m.is_square() {
            return Err(Error::NotSquare { rows: m.rows, cols: m.cols });
        }
        if m.rows % 2 == 1 {
            return Err(Error::OddSize(m.rows));
        }
        for i in 0..m.rows {
            for j in i..m.rows {
                if *m.get(i, j) != -m.get(j, i) {
                    return Err(Error::NotSkew(i, j));
                }
            }
        }
        Ok(SkewMatrix(m))
    }

    /// Fills the lower triangle from the strict upper triangle.
    pub fn from_upper(n: usize, mut f: impl FnMut(usize, usize) -> Rat) -> Result<Self> {
        let mut m = ExactMatrix::zeros(n, n);
        for i in 0..n {
            for j in i + 1..n {
                let v = f(i, j);
                m.set(j, i, -v.clone());
                m.set(i, j, v);
            }
        }
        Self::new(m)
    }

    pub fn size(&self) -> usize {
        self.0.rows
    }

    pub fn matrix(&self) -> &ExactMatrix {
        &self.0
    }

    pub fn into_matrix(self) -> ExactMatrix {
        self.0
    }

    pub fn get(&self, i: usize, j: usize) -> &Rat {
        self.0.get(i, j)
    }
}

/// Least common multiple of the denominators in a row.
pub(crate) fn denominator_lcm(row: &[Rat]) -> Int {
    row.iter().fold(Int::one(), |acc, v| acc.lcm(v.denom()))
}

pub fn abs_rat(r: &Rat) -> Rat {
    r.abs()
}

/// Nearest double to an exact rational (NaN if it does not fit).
pub fn to_f64(r: &Rat) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}
