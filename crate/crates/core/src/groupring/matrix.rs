//! Dense square matrices over a [`CoeffRing`] with fraction-free (Bareiss)
//! elimination, so the same code is exact over ℤ, GF(p^n) and GF(p)(t).

use crate::coeff::CoeffRing;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SquareMatrix<E> {
    n: usize,
    entries: Vec<E>,
}

impl<E: Clone> SquareMatrix<E> {
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> E) -> Self {
        let mut entries = Vec::with_capacity(n * n);
        for r in 0..n {
            for c in 0..n {
                entries.push(f(r, c));
            }
        }
        SquareMatrix { n, entries }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, r: usize, c: usize) -> &E {
        &self.entries[r * self.n + c]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[E]> {
        self.entries.chunks(self.n.max(1))
    }
}

pub fn identity<R: CoeffRing>(ring: &R, n: usize) -> SquareMatrix<R::Elem> {
    SquareMatrix::from_fn(n, |r, c| if r == c { ring.one() } else { ring.zero() })
}

pub fn mat_mul<R: CoeffRing>(
    ring: &R,
    a: &SquareMatrix<R::Elem>,
    b: &SquareMatrix<R::Elem>,
) -> SquareMatrix<R::Elem> {
    assert_eq!(a.n, b.n, "dimension mismatch");
    let n = a.n;
    SquareMatrix::from_fn(n, |r, c| {
        (0..n).fold(ring.zero(), |acc, k| {
            ring.add(&acc, &ring.mul(a.get(r, k), b.get(k, c)))
        })
    })
}

/// Forward Bareiss elimination on an `n × m` row-major array. Returns the
/// pivot columns; entries below pivots are zeroed. With `n == m` and full
/// rank the last pivot is `±det`.
fn bareiss<R: CoeffRing>(
    ring: &R,
    a: &mut [Vec<R::Elem>],
    stop_at_singular: bool,
) -> Option<Vec<usize>> {
    let rows = a.len();
    let cols = a.first().map_or(0, |r| r.len());
    let mut prev = ring.one();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !ring.is_zero(&a[i][c])) else {
            if stop_at_singular && c < rows {
                return None;
            }
            continue;
        };
        a.swap(r, p);
        for i in r + 1..rows {
            for j in c + 1..cols {
                let num = ring.sub(&ring.mul(&a[r][c], &a[i][j]), &ring.mul(&a[i][c], &a[r][j]));
                a[i][j] = ring
                    .exact_div(&num, &prev)
                    .expect("Bareiss divisions are exact");
            }
            a[i][c] = ring.zero();
        }
        prev = a[r][c].clone();
        pivots.push(c);
        r += 1;
    }
    Some(pivots)
}

/// The unique solution of `m·x = rhs` with entries in the ring, or `None`
/// if `m` is singular or the solution leaves the ring.
pub fn solve<R: CoeffRing>(
    ring: &R,
    m: &SquareMatrix<R::Elem>,
    rhs: &[R::Elem],
) -> Option<Vec<R::Elem>> {
    let n = m.n;
    assert_eq!(rhs.len(), n, "right-hand side length");
    if n == 0 {
        return Some(Vec::new());
    }
    let mut a: Vec<Vec<R::Elem>> = m
        .rows()
        .zip(rhs)
        .map(|(row, b)| {
            row.iter()
                .cloned()
                .chain(std::iter::once(b.clone()))
                .collect()
        })
        .collect();
    bareiss(ring, &mut a, true)?;
    let det = a[n - 1][n - 1].clone();
    // scaled[i] = det · x_i, a ring element by Cramer's rule
    let mut scaled = vec![ring.zero(); n];
    for i in (0..n).rev() {
        let mut acc = ring.mul(&det, &a[i][n]);
        for j in i + 1..n {
            acc = ring.sub(&acc, &ring.mul(&a[i][j], &scaled[j]));
        }
        scaled[i] = ring.exact_div(&acc, &a[i][i])?;
    }
    scaled.iter().map(|s| ring.exact_div(s, &det)).collect()
}

pub fn determinant<R: CoeffRing>(ring: &R, m: &SquareMatrix<R::Elem>) -> R::Elem {
    let n = m.n;
    if n == 0 {
        return ring.one();
    }
    let mut a: Vec<Vec<R::Elem>> = m.rows().map(|r| r.to_vec()).collect();
    // track row swaps for the sign
    let mut sign_flips = 0usize;
    let mut prev = ring.one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !ring.is_zero(&a[i][c])) else {
            return ring.zero();
        };
        if p != c {
            a.swap(c, p);
            sign_flips += 1;
        }
        for i in c + 1..n {
            for j in c + 1..n {
                let num = ring.sub(&ring.mul(&a[c][c], &a[i][j]), &ring.mul(&a[i][c], &a[c][j]));
                a[i][j] = ring
                    .exact_div(&num, &prev)
                    .expect("Bareiss divisions are exact");
            }
            a[i][c] = ring.zero();
        }
        prev = a[c][c].clone();
    }
    if sign_flips % 2 == 1 {
        ring.neg(&prev)
    } else {
        prev
    }
}

pub fn rank<R: CoeffRing>(ring: &R, m: &SquareMatrix<R::Elem>) -> usize {
    let mut a: Vec<Vec<R::Elem>> = m.rows().map(|r| r.to_vec()).collect();
    bareiss(ring, &mut a, false).map_or(0, |p| p.len())
}
