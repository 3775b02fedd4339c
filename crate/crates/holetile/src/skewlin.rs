//! Exact determinants and Pfaffians, and the closed-form LU factors.

use num_traits::{One, Zero};

use crate::closed_forms::{
    a_coef, a_prime, b_coef, b_prime, b_star, c_coef, c_prime, d_coef, d_prime, d_star, e_coef, e_star,
    p_star,
};
use crate::exactnum::{denominator_lcm, ExactMatrix, Int, Rat, SkewMatrix};
use crate::{Error, Result};

/// Determinant by Bareiss elimination on the integer matrix obtained by
/// clearing each row's denominators.
pub fn determinant(m: &ExactMatrix) -> Result<Rat> {
    if !m.is_square() {
        return Err(Error::NotSquare { rows: m.rows(), cols: m.cols() });
    }
    let n = m.rows();
    let mut scale = Int::one();
    let mut a: Vec<Vec<Int>> = (0..n)
        .map(|i| {
            let l = denominator_lcm(m.row(i));
            let row = m.row(i).iter().map(|v| (v * Rat::from_integer(l.clone())).to_integer()).collect();
            scale *= &l;
            row
        })
        .collect();
    let mut negate = false;
    let mut prev = Int::one();
    for k in 0..n {
        if a[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&r| !a[r][k].is_zero()) else {
                return Ok(Rat::zero());
            };
            a.swap(k, p);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    let det = if n == 0 { Int::one() } else { a[n - 1][n - 1].clone() };
    let det = Rat::new(det, scale);
    Ok(if negate { -det } else { det })
}

/// Pfaffian by skew-symmetric Gaussian elimination, pivoting on the first
/// row. Normalised so that Pf([[0,a],[-a,0]]) = a.
pub fn pfaffian(a: &SkewMatrix) -> Rat {
    let n = a.size();
    let mut m: Vec<Vec<Rat>> = (0..n).map(|i| a.matrix().row(i).to_vec()).collect();
    let mut pf = Rat::one();
    let mut k = 0;
    while k < n {
        let Some(p) = (k + 1..n).find(|&j| !m[k][j].is_zero()) else {
            return Rat::zero();
        };
        if p != k + 1 {
            // simultaneous row/column swap flips the sign
            m.swap(k + 1, p);
            for row in m.iter_mut() {
                row.swap(k + 1, p);
            }
            pf = -pf;
        }
        let pivot = m[k][k + 1].clone();
        for i in k + 2..n {
            for j in k + 2..n {
                let delta = (&m[k][i] * &m[k + 1][j] - &m[k][j] * &m[k + 1][i]) / &pivot;
                m[i][j] -= delta;
            }
        }
        pf *= pivot;
        k += 2;
    }
    pf
}

pub const COMBINATORIAL_LIMIT: usize = 12;

/// Signed sum over perfect matchings of {1..2n}, each weighted by
/// (-1)^(number of crossing pairs).
pub fn pfaffian_combinatorial(a: &SkewMatrix) -> Result<Rat> {
    let n = a.size();
    if n > COMBINATORIAL_LIMIT {
        return Err(Error::TooLarge(format!("size {n} exceeds {COMBINATORIAL_LIMIT} for matching enumeration")));
    }
    fn walk(a: &SkewMatrix, unmatched: &mut Vec<usize>, pairs: &mut Vec<(usize, usize)>, total: &mut Rat) {
        if unmatched.is_empty() {
            let crossings = pairs
                .iter()
                .enumerate()
                .flat_map(|(t, &(i, j))| pairs[t + 1..].iter().map(move |&(k, l)| (i, j, k, l)))
                .filter(|&(i, j, k, l)| (i < k && k < j && j < l) || (k < i && i < l && l < j))
                .count();
            let mut term = Rat::one();
            for &(i, j) in pairs.iter() {
                term *= a.get(i, j);
            }
            if crossings % 2 == 1 {
                term = -term;
            }
            *total += term;
            return;
        }
        let first = unmatched.remove(0);
        for t in 0..unmatched.len() {
            let partner = unmatched.remove(t);
            if !a.get(first, partner).is_zero() {
                pairs.push((first, partner));
                walk(a, unmatched, pairs, total);
                pairs.pop();
            }
            unmatched.insert(t, partner);
        }
        unmatched.insert(0, first);
    }
    let mut total = Rat::zero();
    walk(a, &mut (0..n).collect(), &mut Vec::new(), &mut total);
    Ok(total)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LuTarget {
    /// Reduced vertical-half matrix, b even.
    Fhat,
    /// Weighted upper-half matrix.
    Gplus,
    /// Reduced vertical-half matrix, b odd.
    FstarHat,
    /// Lower-half matrix.
    G,
}

fn check_lu_params(target: LuTarget, n: u32, m: u32, k: u32) -> Result<()> {
    if n == 0 || m == 0 || k > n {
        return Err(Error::InvalidParams(format!("need n, m >= 1 and k <= n, got n={n}, m={m}, k={k}")));
    }
    let odd = (n - k) % 2 == 1;
    if odd != (target == LuTarget::FstarHat) {
        return Err(Error::InvalidParams(format!("{target:?} needs n - k {}", if odd { "even" } else { "odd" })));
    }
    Ok(())
}

/// The (m+1)×(m+1) factors L, U built from the coefficient families.
pub fn closed_form_lu(target: LuTarget, n: u32, m: u32, k: u32) -> Result<(ExactMatrix, ExactMatrix)> {
    check_lu_params(target, n, m, k)?;
    let size = m as usize + 1;
    let mut l = ExactMatrix::zeros(size, size);
    let mut u = ExactMatrix::zeros(size, size);
    let mi = m as i64;
    let last = m as usize;
    l.set(last, last, Rat::one());
    for i in 1..=mi {
        let r = (i - 1) as usize;
        for j in 1..=i {
            let v = match target {
                LuTarget::G => a_prime(n, i, j)?,
                _ => a_coef(n, i, j)?,
            };
            l.set(r, (j - 1) as usize, v);
        }
    }
    match target {
        LuTarget::Fhat | LuTarget::Gplus | LuTarget::G => {
            let mut corner = Rat::zero();
            for i in 1..=mi {
                let r = (i - 1) as usize;
                for j in i..=mi {
                    let v = if target == LuTarget::G { c_prime(n, i, j)? } else { c_coef(n, i, j)? };
                    u.set(r, (j - 1) as usize, v);
                }
                let (below, right) = match target {
                    LuTarget::Fhat => (b_coef(n, k, i)?, d_coef(n, k, i)?),
                    LuTarget::Gplus => (b_coef(n, k, i)?, e_coef(n, k, i)?),
                    _ => (b_prime(n, k, i)?, d_prime(n, k, i)?),
                };
                corner -= &below * &right;
                l.set(last, r, below);
                u.set(r, last, right);
            }
            u.set(last, last, corner);
        }
        LuTarget::FstarHat => {
            let dm = d_star(n, mi)?;
            let mut l_corner = Rat::zero();
            for i in 1..=mi {
                let r = (i - 1) as usize;
                for j in i..mi {
                    u.set(r, (j - 1) as usize, c_coef(n, i, j)?);
                }
                u.set(r, last - 1, d_star(n, i)?);
                u.set(r, last, e_star(n, k, i)?);
                if i < mi {
                    let bs = b_star(n, k, i)?;
                    l_corner -= d_star(n, i)? * &bs;
                    l.set(last, r, bs);
                }
            }
            l.set(last, last - 1, l_corner / dm);
            u.set(last, last, p_star(n, k, mi)?);
        }
    }
    Ok((l, u))
}
