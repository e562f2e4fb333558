use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Rank of an integer matrix by unimodular row reduction (Euclidean pivoting)
/// in checked `i64`; `None` on overflow.
pub fn integer_rank_checked(m: &[Vec<i64>]) -> Option<usize> {
    let mut a: Vec<Vec<i64>> = m.to_vec();
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        loop {
            // smallest nonzero |entry| in column c at or below row r
            let pivot = (r..rows)
                .filter(|&i| a[i][c] != 0)
                .min_by_key(|&i| a[i][c].unsigned_abs());
            let Some(p) = pivot else { break };
            a.swap(r, p);
            let mut done = true;
            for i in r + 1..rows {
                if a[i][c] == 0 {
                    continue;
                }
                let q = a[i][c] / a[r][c];
                for j in c..cols {
                    let t = a[r][j].checked_mul(q)?;
                    a[i][j] = a[i][j].checked_sub(t)?;
                }
                if a[i][c] != 0 {
                    done = false;
                }
            }
            if done {
                r += 1;
                break;
            }
        }
    }
    Some(r)
}

/// Rank over the rationals.
pub fn rational_rank(m: &[Vec<i64>]) -> usize {
    let mut a = to_rational(m);
    rref(&mut a).len()
}

/// Exact rank, using the rational path when the integer path overflows.
pub fn rank(m: &[Vec<i64>]) -> usize {
    integer_rank_checked(m).unwrap_or_else(|| rational_rank(m))
}

fn to_rational(m: &[Vec<i64>]) -> Vec<Vec<BigRational>> {
    m.iter()
        .map(|row| {
            row.iter()
                .map(|&x| BigRational::from_integer(BigInt::from(x)))
                .collect()
        })
        .collect()
}

/// In-place reduced row echelon form; returns the pivot columns and drops
/// zero rows.
fn rref(a: &mut Vec<Vec<BigRational>>) -> Vec<usize> {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let inv = a[r][c].recip();
        for x in a[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..rows {
            if i != r && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                for j in 0..cols {
                    if !a[r][j].is_zero() {
                        let t = &a[r][j] * &f;
                        a[i][j] -= t;
                    }
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    a.truncate(r);
    pivots
}

/// Explicit basis of `H_1 = ker d1 / im d2` over the rationals, with `d1`
/// vertices x edges and `d2` edges x faces.
pub struct HomologyBasis {
    /// Basis of `ker d1`; vector `k` has entry 1 at `free[k]` and 0 at the
    /// other free columns.
    cycles: Vec<Vec<BigRational>>,
    free: Vec<usize>,
    /// Row-reduced basis of `im d2` in cycle coordinates.
    boundaries: Vec<Vec<BigRational>>,
    boundary_pivots: Vec<usize>,
}

impl HomologyBasis {
    pub fn new(d1: &[Vec<i64>], d2: &[Vec<i64>]) -> Self {
        let edges = d2.len();
        let mut a = to_rational(d1);
        let pivots = rref(&mut a);
        let free: Vec<usize> = (0..edges).filter(|c| !pivots.contains(c)).collect();
        let cycles: Vec<Vec<BigRational>> = free
            .iter()
            .map(|&f| {
                let mut v = vec![BigRational::zero(); edges];
                v[f] = BigRational::one();
                for (row, &pc) in a.iter().zip(&pivots) {
                    v[pc] = -row[f].clone();
                }
                v
            })
            .collect();
        let faces = d2.first().map_or(0, Vec::len);
        let mut b: Vec<Vec<BigRational>> = (0..faces)
            .map(|f| {
                free.iter()
                    .map(|&e| BigRational::from_integer(BigInt::from(d2[e][f])))
                    .collect()
            })
            .collect();
        let boundary_pivots = rref(&mut b);
        HomologyBasis {
            cycles,
            free,
            boundaries: b,
            boundary_pivots,
        }
    }

    pub fn betti(&self) -> usize {
        self.cycles.len() - self.boundaries.len()
    }

    fn cycle_coords(&self, v: &[BigRational]) -> Vec<BigRational> {
        self.free.iter().map(|&f| v[f].clone()).collect()
    }

    fn push(&self, v: &[BigRational], act: &impl Fn(usize) -> usize) -> Vec<BigRational> {
        let mut w = vec![BigRational::zero(); v.len()];
        for (e, x) in v.iter().enumerate() {
            if !x.is_zero() {
                w[act(e)] += x;
            }
        }
        w
    }

    /// Trace on `H_1` of the edge permutation `act`: trace on cycles minus
    /// trace on boundaries.
    pub fn trace(&self, act: impl Fn(usize) -> usize) -> BigRational {
        let mut t = BigRational::zero();
        for (k, z) in self.cycles.iter().enumerate() {
            t += &self.cycle_coords(&self.push(z, &act))[k];
        }
        for (row, &p) in self.boundaries.iter().zip(&self.boundary_pivots) {
            // lift the boundary back to edge coordinates, act, reread
            let mut v = vec![BigRational::zero(); self.cycles[0].len()];
            for (k, x) in row.iter().enumerate() {
                if !x.is_zero() {
                    for (e, y) in self.cycles[k].iter().enumerate() {
                        if !y.is_zero() {
                            v[e] += x * y;
                        }
                    }
                }
            }
            let c = self.cycle_coords(&self.push(&v, &act));
            // coordinate along this row of the reduced boundary basis
            t -= &c[p];
        }
        t
    }
}

pub fn to_i64(x: &BigRational) -> Option<i64> {
    x.is_integer().then(|| x.to_integer()).and_then(|i| i64::try_from(i).ok())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranks_agree() {
        let m = vec![vec![2, 4, 6], vec![1, 2, 3], vec![0, 1, 1], vec![3, 7, 10]];
        assert_eq!(integer_rank_checked(&m), Some(2));
        assert_eq!(rational_rank(&m), 2);
        let id: Vec<Vec<i64>> = (0..5).map(|i| (0..5).map(|j| i64::from(i == j)).collect()).collect();
        assert_eq!(rank(&id), 5);
        assert_eq!(rank(&[]), 0);
    }

    #[test]
    fn overflow_is_reported() {
        let big = i64::MAX / 2;
        let m = vec![vec![big, 3], vec![3, big]];
        // either exact or a clean None; never a wrong answer
        if let Some(r) = integer_rank_checked(&m) {
            assert_eq!(r, 2);
        }
        assert_eq!(rank(&m), 2);
    }
}
