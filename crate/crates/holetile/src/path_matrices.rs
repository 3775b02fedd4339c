//! Lattice-path matrices for the four half regions and their reductions.
//!
//! Indices in comments are 1-based to match the usual matrix notation;
//! code is 0-based.

use num_traits::{Signed, Zero};

use crate::exactnum::{binomial, frac, rat, rat_int, ExactMatrix, Int, Rat, SkewMatrix};
use crate::regions::{Family, ValidatedRegion};
use crate::skewlin::{determinant, pfaffian};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BParity {
    Even,
    Odd,
}

fn check(n: u32, m: u32, k: u32, parity: BParity) -> Result<()> {
    if n == 0 || m == 0 {
        return Err(Error::InvalidParams(format!("need n, m >= 1, got n={n}, m={m}")));
    }
    if k > n {
        return Err(Error::InvalidParams(format!("k = {k} exceeds n = {n}")));
    }
    let want_odd = parity == BParity::Odd;
    if ((n - k) % 2 == 1) != want_odd {
        return Err(Error::InvalidParams(format!(
            "n - k must be {} for {parity:?} b",
            if want_odd { "odd" } else { "even" }
        )));
    }
    Ok(())
}

fn bin(n: i64, j: i64) -> Rat {
    rat_int(binomial(n, j))
}

/// x_d = Σ_{r=1-d}^{d} C(2n, n+r), with an empty-range sum read as minus
/// the reversed sum, so that x_{-d} = -x_d.
pub fn x_entry(n: u32, d: i64) -> Int {
    let n = n as i64;
    let (lo, hi) = (1 - d, d);
    if hi >= lo {
        (lo..=hi).map(|r| binomial(2 * n, n + r)).sum()
    } else {
        -(hi + 1..lo).map(|r| binomial(2 * n, n + r)).sum::<Int>()
    }
}

/// F (b = 2m) or F* (b = 2m-1), of size 2m+2.
pub fn build_pfaffian_matrix(n: u32, m: u32, k: u32, parity: BParity) -> Result<SkewMatrix> {
    check(n, m, k, parity)?;
    let size = 2 * m as usize + 2;
    let (mm, nk) = (m as i64, (n - k) as i64);
    let pow = rat_int(Int::from(2).pow(n));
    SkewMatrix::from_upper(size, |r, c| {
        let (i, j) = (r as i64 + 1, c as i64 + 1);
        match parity {
            BParity::Even => {
                if j <= 2 * mm {
                    rat_int(x_entry(n, j - i))
                } else if i > 2 * mm {
                    Rat::zero()
                } else if j == 2 * mm + 1 {
                    bin(nk, nk / 2 - mm + i)
                } else {
                    bin(nk, nk / 2 - mm - 1 + i)
                }
            }
            BParity::Odd => {
                // row/column 2m is the phantom end point
                if j <= 2 * mm - 1 {
                    rat_int(x_entry(n, j - i))
                } else if i >= 2 * mm {
                    Rat::zero()
                } else if j == 2 * mm {
                    pow.clone()
                } else if j == 2 * mm + 1 {
                    bin(nk, (nk + 1) / 2 - mm + i)
                } else {
                    bin(nk, (nk - 1) / 2 - mm + i)
                }
            }
        }
    })
}

/// G (unweighted lower half) or G+ (weighted upper half), of size m+1.
pub fn build_lgv_matrix(n: u32, m: u32, k: u32, weighted: bool) -> Result<ExactMatrix> {
    check(n, m, k, BParity::Even)?;
    let (nn, mm, nk) = (n as i64, m as i64, (n - k) as i64);
    let h = nk / 2;
    Ok(ExactMatrix::from_fn(m as usize + 1, m as usize + 1, |r, c| {
        let (i, j) = (r as i64 + 1, c as i64 + 1);
        let border = |t: i64| {
            if weighted {
                bin(nk + 1, h + t)
            } else {
                bin(nk, h + 1 - t) - bin(nk, h - t)
            }
        };
        match (i > mm, j > mm) {
            (true, true) => Rat::zero(),
            (false, true) => border(i),
            (true, false) => border(j),
            (false, false) if weighted => bin(2 * nn, nn - i - j + 1) + bin(2 * nn, nn + i - j),
            (false, false) => bin(2 * nn, nn + j - i) - bin(2 * nn, nn - j - i + 1),
        }
    }))
}

/// Skew matrix [[X, Y], [-Y^t, Z]] with X a 2m×2m Toeplitz block,
/// Y reflection-symmetric, and Z satisfying
/// z_{i,j} + z_{i+l,j} + z_{i,j+l} + z_{i+l,j+l} = 0 for i, j ≤ l.
///
/// The last condition is what the column operations of the reduction
/// need; with only the first three terms the identity fails once l ≥ 2.
/// For l = 1 the two agree, because z_{l+1,l+1} = 0.
#[derive(Debug, Clone)]
pub struct GordonInput {
    a: SkewMatrix,
    m: usize,
    l: usize,
}

impl GordonInput {
    pub fn new(a: SkewMatrix, m: usize, l: usize) -> Result<Self> {
        let viol = |s: String| Err(Error::StructureViolation(s));
        if m == 0 || a.size() != 2 * m + 2 * l {
            return viol(format!("size {} is not 2m+2l with m={m} >= 1, l={l}", a.size()));
        }
        let g = |i: usize, j: usize| a.get(i - 1, j - 1);
        for i in 1..=2 * m {
            for j in 1..=2 * m {
                let d = j as i64 - i as i64;
                let (i0, j0) = if d >= 0 { (1, 1 + d as usize) } else { ((1 - d) as usize, 1) };
                let reference = if d >= 0 { g(i0, j0).clone() } else { -g(j0, i0) };
                if *g(i, j) != reference {
                    return viol(format!("X is not Toeplitz at ({i},{j})"));
                }
            }
        }
        let z = |i: usize, j: usize| g(2 * m + i, 2 * m + j);
        for i in 1..=l {
            for j in 1..=l {
                if !(z(i, j) + z(i + l, j) + z(i, j + l) + z(i + l, j + l)).is_zero() {
                    return viol(format!("Z breaks the block relation at ({i},{j})"));
                }
            }
        }
        let y = |i: usize, j: usize| g(i, 2 * m + j);
        for j in 1..=l {
            for i in 1..m {
                if y(i, j) != y(2 * m - i, j) {
                    return viol(format!("Y is not reflected at ({i},{j})"));
                }
            }
            for i in 1..=2 * m {
                if y(i, j + l) != y(2 * m + 1 - i, j) {
                    return viol(format!("Y's second half is not the flipped first half at ({i},{})", j + l));
                }
            }
        }
        Ok(GordonInput { a, m, l })
    }

    pub fn matrix(&self) -> &SkewMatrix {
        &self.a
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn l(&self) -> usize {
        self.l
    }

    /// (-1)^{C(l,2)}, the sign in Pf(A) = sign · det(B).
    pub fn sign(&self) -> i64 {
        if (self.l * self.l.saturating_sub(1) / 2) % 2 == 0 {
            1
        } else {
            -1
        }
    }
}

/// The (m+l)×(m+l) matrix B of the reduction, read off blockwise without
/// checking structure. [`gordon_reduce`] is the checked entry point.
pub fn gordon_blocks(a: &SkewMatrix, m: usize, l: usize) -> ExactMatrix {
    let g = |i: usize, j: usize| a.get(i - 1, j - 1).clone();
    let x = |d: usize| g(1, 1 + d);
    let y = |i: usize, j: usize| g(i, 2 * m + j);
    let z = |i: usize, j: usize| g(2 * m + i, 2 * m + j);
    ExactMatrix::from_fn(m + l, m + l, |r, c| {
        let (i, j) = (r + 1, c + 1);
        if i <= m && j <= m {
            // x_{i+j-1} + x_{i+j-3} + ... + x_{|i-j|+1}
            (i.abs_diff(j) + 1..i + j).step_by(2).map(x).fold(Rat::zero(), |s, v| s + v)
        } else if i <= m {
            let j = j - m;
            (0..i).fold(Rat::zero(), |s, t| s + y(m + 1 - i + 2 * t, j) - y(m + i - 2 * t, j))
        } else if j <= m {
            let i = i - m;
            (0..j).fold(Rat::zero(), |s, t| s + y(j + m - 2 * t, i) + y(m + 1 - j + 2 * t, i))
        } else {
            let (i, j) = (i - m, j - m);
            z(i, j + l) + z(i + l, j + l)
        }
    })
}

pub fn gordon_reduce(input: &GordonInput) -> ExactMatrix {
    gordon_blocks(&input.a, input.m, input.l)
}

/// Subtracts, for each listed index t (1-based), the original line t-1.
fn difference_rows(m: &ExactMatrix, rows: std::ops::RangeInclusive<usize>) -> ExactMatrix {
    let mut out = m.clone();
    for i in rows {
        for j in 0..m.cols() {
            out.set(i - 1, j, m.get(i - 1, j) - m.get(i - 2, j));
        }
    }
    out
}

fn difference_cols(m: &ExactMatrix, cols: std::ops::RangeInclusive<usize>) -> ExactMatrix {
    difference_rows(&m.transpose(), cols).transpose()
}

/// F̂ / F̂* computed by executing the row and column operations on F / F*.
pub fn reduced_by_operations(n: u32, m: u32, k: u32, parity: BParity) -> Result<ExactMatrix> {
    let f = build_pfaffian_matrix(n, m, k, parity)?;
    let m = m as usize;
    match parity {
        BParity::Even => {
            let b = gordon_reduce(&GordonInput::new(f, m, 1)?);
            Ok(difference_cols(&difference_rows(&b, 2..=m), 2..=m))
        }
        BParity::Odd => {
            let size = 2 * m + 2;
            let f = f.into_matrix();
            // (i) row i <- Σ_{s=0}^{m-i} row(i+2s), then the same on columns
            let fold = |src: &ExactMatrix| {
                let mut out = src.clone();
                for i in 1..=m {
                    for c in 0..size {
                        let v = (0..=m - i).fold(Rat::zero(), |s, t| s + src.get(i + 2 * t - 1, c));
                        out.set(i - 1, c, v);
                    }
                }
                out
            };
            let fbar = fold(&fold(&f).transpose()).transpose();
            // (ii) row 2m+1 -= row 2m+2, then columns
            let step = |src: &ExactMatrix| {
                let mut out = src.clone();
                for c in 0..size {
                    out.set(2 * m, c, src.get(2 * m, c) - src.get(2 * m + 1, c));
                }
                out
            };
            let fbar = step(&step(&fbar).transpose()).transpose();
            let zero_lines: Vec<usize> = (0..m).chain([2 * m]).collect();
            if fbar.select(&zero_lines, &zero_lines).entries().any(|v| !v.is_zero()) {
                return Err(Error::InternalMismatch("reduced F* keeps a nonzero block where zeros are expected".into()));
            }
            // P: rows m..1 then 2m+1; columns m+1..2m-1, then 2m, then 2m+2
            let rows: Vec<usize> = (0..m).rev().chain([2 * m]).collect();
            let cols: Vec<usize> = (m..2 * m - 1).chain([2 * m - 1, 2 * m + 1]).collect();
            let p = fbar.select(&rows, &cols);
            let p = difference_rows(&p, 2..=m);
            Ok(if m >= 3 { difference_cols(&p, 2..=m - 1) } else { p })
        }
    }
}

/// F̂ / F̂* from the closed-form entries.
pub fn reduced_closed_form(n: u32, m: u32, k: u32, parity: BParity) -> Result<ExactMatrix> {
    check(n, m, k, parity)?;
    let (nn, mm, nk) = (n as i64, m as i64, (n - k) as i64);
    let gplus = |i: i64, j: i64| bin(2 * nn, nn - i - j + 1) + bin(2 * nn, nn + i - j);
    let size = m as usize + 1;
    Ok(match parity {
        BParity::Even => {
            let h = nk / 2;
            ExactMatrix::from_fn(size, size, |r, c| {
                let (i, j) = (r as i64 + 1, c as i64 + 1);
                match (i > mm, j > mm) {
                    (true, true) => Rat::zero(),
                    (true, false) => bin(nk + 1, h + j),
                    (false, false) => gplus(i, j),
                    (false, true) if k == n => {
                        // limit of the column below as k -> n
                        if i == 1 {
                            rat(1)
                        } else if i % 2 == 0 {
                            rat(-2)
                        } else {
                            rat(2)
                        }
                    }
                    (false, true) => {
                        (frac(4 * (i - 1), -nk) + frac(2 * (2 * i - 1), 2 * i + nk)) * bin(nk, h - i + 1)
                    }
                }
            })
        }
        BParity::Odd => {
            let h = (nk + 1) / 2;
            let pow = rat_int(Int::from(2).pow(n));
            ExactMatrix::from_fn(size, size, |r, c| {
                let (i, j) = (r as i64 + 1, c as i64 + 1);
                if i <= mm {
                    if j < mm {
                        gplus(i, j)
                    } else if j == mm {
                        pow.clone()
                    } else {
                        bin(nk, h - i)
                    }
                } else if j < mm {
                    frac(2 * j, nk + 1) * bin(nk + 1, h - j) - frac(2 * (j - 1), nk + 1) * bin(nk + 1, h - j + 1)
                } else {
                    // the (m+1, m) entry vanishes; see the operation route
                    Rat::zero()
                }
            })
        }
    })
}

/// F̂ or F̂*, built both ways and cross-checked entrywise.
pub fn build_reduced_matrix(n: u32, m: u32, k: u32, parity: BParity) -> Result<ExactMatrix> {
    let by_ops = reduced_by_operations(n, m, k, parity)?;
    let closed = reduced_closed_form(n, m, k, parity)?;
    if by_ops != closed {
        return Err(Error::InternalMismatch(format!(
            "reduced matrix for n={n}, m={m}, k={k}, {parity:?} b differs between routes:\n{by_ops}vs\n{closed}"
        )));
    }
    Ok(closed)
}

/// Tiling count through Pfaffians and determinants.
pub fn count_by_matrices(spec: &ValidatedRegion) -> Result<Int> {
    let s = spec.spec();
    let Some(k) = s.k else {
        return Err(Error::InvalidParams("the matrix route needs holes".into()));
    };
    let (n, b) = (s.n, s.b);
    let m = spec.m();
    let even = b % 2 == 0;
    let lower = |n: u32, m: u32| -> Result<Rat> {
        if m == 0 {
            return Ok(Rat::zero());
        }
        Ok(determinant(&build_lgv_matrix(n, m, k, false)?)?.abs())
    };
    let upper = |n: u32, m: u32| -> Result<Rat> { Ok(determinant(&build_lgv_matrix(n, m, k, true)?)?.abs()) };
    let value = match s.family {
        Family::PlainHexagon { .. } => return Err(Error::InvalidParams("the matrix route needs holes".into())),
        Family::VerticalHalf => {
            let parity = if even { BParity::Even } else { BParity::Odd };
            pfaffian(&build_pfaffian_matrix(n, m, k, parity)?).abs()
        }
        Family::LowerHalf if even => lower(n, m)?,
        Family::LowerHalf => lower(n + 1, (b - 1) / 2)?,
        Family::WeightedUpperHalf if even => upper(n, m)?,
        Family::WeightedUpperHalf => upper(n - 1, m)? * rat(2),
        Family::HoleyHexagon if even => lower(n, m)? * upper(n, m)?,
        Family::HoleyHexagon => lower(n + 1, m - 1)? * upper(n - 1, m)? * rat(2),
    };
    if !value.is_integer() {
        return Err(Error::InternalMismatch(format!("matrix count {value} for {s} is not an integer")));
    }
    Ok(value.to_integer())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn entry_examples() {
        let f = build_pfaffian_matrix(2, 1, 0, BParity::Even).unwrap();
        assert_eq!(*f.get(0, 1), rat(10));
        for i in 0..f.size() {
            assert!(f.get(i, i).is_zero());
        }
        let f = build_pfaffian_matrix(4, 1, 2, BParity::Even).unwrap();
        assert_eq!(*f.get(0, 2), rat(2));
        let g = build_lgv_matrix(2, 1, 2, false).unwrap();
        assert_eq!(*g.get(0, 0), rat(2));
        assert!(g.get(1, 1).is_zero());
        let gp = build_lgv_matrix(2, 1, 2, true).unwrap();
        assert_eq!(*gp.get(0, 0), rat(10));
    }

    #[test]
    fn odd_reduced_has_power_column() {
        for (n, m, k) in [(3, 2, 0), (5, 3, 2), (4, 2, 1)] {
            let f = build_reduced_matrix(n, m, k, BParity::Odd).unwrap();
            for i in 0..m as usize {
                assert_eq!(*f.get(i, m as usize - 1), rat_int(Int::from(2).pow(n)));
            }
        }
    }

    #[test]
    fn gordon_trivial_case() {
        let a = SkewMatrix::from_upper(2, |_, _| rat(3)).unwrap();
        let b = gordon_reduce(&GordonInput::new(a, 1, 0).unwrap());
        assert_eq!(b, ExactMatrix::from_i64(&[vec![3]]).unwrap());
    }

    #[test]
    fn reduced_matrix_small_case() {
        let f = build_pfaffian_matrix(4, 1, 2, BParity::Even).unwrap();
        let fhat = build_reduced_matrix(4, 1, 2, BParity::Even).unwrap();
        assert_eq!(determinant(&fhat).unwrap().abs(), pfaffian(&f).abs());
    }
}
