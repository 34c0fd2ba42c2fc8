//! Linear algebra over `Z/m` for composite `m`.
//!
//! Every routine works with residues in `0..m` and with 2×2 integer matrices of
//! determinant 1 built from the extended Euclidean algorithm, so each step is
//! invertible over `Z/m`. Diagonalizing `A` this way is the same computation as
//! the integer Smith normal form of `[A | m·I]`, without coefficient growth.

/// Dense row-major matrix with entries in `0..m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZmMatrix {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<u64>,
}

impl ZmMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        ZmMatrix {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut a = Self::zeros(n, n);
        for i in 0..n {
            a.data[i * n + i] = 1;
        }
        a
    }

    /// Builds a matrix from columns of equal length.
    pub fn from_columns(rows: usize, columns: &[Vec<u64>]) -> Self {
        let mut a = Self::zeros(rows, columns.len());
        for (j, c) in columns.iter().enumerate() {
            assert_eq!(c.len(), rows);
            for (i, &x) in c.iter().enumerate() {
                a.data[i * a.cols + j] = x;
            }
        }
        a
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, x: u64) {
        self.data[i * self.cols + j] = x;
    }

    pub fn row(&self, i: usize) -> &[u64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<u64> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn mul_vec(&self, v: &[u64], m: u64) -> Vec<u64> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| self.row(i).iter().zip(v).fold(0, |acc, (&a, &b)| (acc + a * b) % m))
            .collect()
    }

    fn swap_rows(&mut self, i: usize, k: usize) {
        if i != k {
            for j in 0..self.cols {
                self.data.swap(i * self.cols + j, k * self.cols + j);
            }
        }
    }

    fn swap_cols(&mut self, j: usize, k: usize) {
        if j != k {
            for i in 0..self.rows {
                self.data.swap(i * self.cols + j, i * self.cols + k);
            }
        }
    }

    /// `(row_i, row_k) <- (p row_i + q row_k, r row_i + s row_k)`.
    fn mix_rows(&mut self, i: usize, k: usize, [p, q, r, s]: [u64; 4], m: u64) {
        for j in 0..self.cols {
            let a = self.data[i * self.cols + j];
            let b = self.data[k * self.cols + j];
            self.data[i * self.cols + j] = (p * a + q * b) % m;
            self.data[k * self.cols + j] = (r * a + s * b) % m;
        }
    }

    /// `(col_j, col_k) <- (p col_j + q col_k, r col_j + s col_k)`.
    fn mix_cols(&mut self, j: usize, k: usize, [p, q, r, s]: [u64; 4], m: u64) {
        for i in 0..self.rows {
            let a = self.data[i * self.cols + j];
            let b = self.data[i * self.cols + k];
            self.data[i * self.cols + j] = (p * a + q * b) % m;
            self.data[i * self.cols + k] = (r * a + s * b) % m;
        }
    }
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// `(g, x, y)` with `g = gcd(a, b) = x a + y b`.
fn ext_gcd(a: i64, b: i64) -> (i64, i64, i64) {
    if b == 0 {
        (a, 1, 0)
    } else {
        let (g, x, y) = ext_gcd(b, a % b);
        (g, y, x - (a / b) * y)
    }
}

fn residue(x: i64, m: u64) -> u64 {
    x.rem_euclid(m as i64) as u64
}

/// Coefficients `[x, y, -b/g, a/g]` (as residues) of a determinant-one matrix
/// sending `(a, b)` to `(g, 0)`, plus the inverse `[a/g, -y, b/g, x]`.
/// When `a` divides `b` this is a plain elimination and `g = a`.
fn euclid_step(a: u64, b: u64, m: u64) -> ([u64; 4], [u64; 4]) {
    let (ai, bi) = (a as i64, b as i64);
    let (g, x, y) = if a != 0 && b.is_multiple_of(a) {
        (ai, 1, 0)
    } else {
        ext_gcd(ai, bi)
    };
    let fwd = [residue(x, m), residue(y, m), residue(-bi / g, m), residue(ai / g, m)];
    let inv = [residue(ai / g, m), residue(-y, m), residue(bi / g, m), residue(x, m)];
    (fwd, inv)
}

/// `L A R = diag(d)` over `Z/m`, with `L`, `R` invertible.
#[derive(Clone, Debug)]
pub struct Diagonalization {
    /// Length `min(rows, cols)`; zero entries are zero pivots.
    pub diagonal: Vec<u64>,
    pub left: Option<ZmMatrix>,
    pub left_inv: Option<ZmMatrix>,
    pub right: Option<ZmMatrix>,
}

#[derive(Clone, Copy, Debug, Default)]
pub struct Track {
    pub left: bool,
    pub left_inv: bool,
    pub right: bool,
}

pub fn diagonalize(mut a: ZmMatrix, m: u64, track: Track) -> Diagonalization {
    let (r, c) = (a.rows, a.cols);
    let mut left = track.left.then(|| ZmMatrix::identity(r));
    let mut left_inv = track.left_inv.then(|| ZmMatrix::identity(r));
    let mut right = track.right.then(|| ZmMatrix::identity(c));
    let n = r.min(c);
    for t in 0..n {
        // Pivot: a nonzero entry with the smallest gcd against m, ties by position.
        let mut best: Option<(u64, usize, usize)> = None;
        'scan: for j in t..c {
            for i in t..r {
                let v = a.get(i, j);
                if v != 0 {
                    let g = gcd(v, m);
                    if best.is_none_or(|(bg, _, _)| g < bg) {
                        best = Some((g, i, j));
                        if g == 1 {
                            break 'scan;
                        }
                    }
                }
            }
        }
        let Some((_, pi, pj)) = best else { break };
        a.swap_rows(t, pi);
        if let Some(l) = left.as_mut() {
            l.swap_rows(t, pi);
        }
        if let Some(li) = left_inv.as_mut() {
            li.swap_cols(t, pi);
        }
        a.swap_cols(t, pj);
        if let Some(rt) = right.as_mut() {
            rt.swap_cols(t, pj);
        }
        loop {
            for i in t + 1..r {
                let b = a.get(i, t);
                if b == 0 {
                    continue;
                }
                let (fwd, inv) = euclid_step(a.get(t, t), b, m);
                a.mix_rows(t, i, fwd, m);
                if let Some(l) = left.as_mut() {
                    l.mix_rows(t, i, fwd, m);
                }
                if let Some(li) = left_inv.as_mut() {
                    // Columns (t, i) of L⁻¹ get multiplied by the inverse step.
                    let [p, q, rr, s] = inv;
                    li.mix_cols(t, i, [p, rr, q, s], m);
                }
            }
            let mut refilled = false;
            for j in t + 1..c {
                let b = a.get(t, j);
                if b == 0 {
                    continue;
                }
                let (fwd, _) = euclid_step(a.get(t, t), b, m);
                let [x, y, u, v] = fwd;
                a.mix_cols(t, j, [x, y, u, v], m);
                if let Some(rt) = right.as_mut() {
                    rt.mix_cols(t, j, [x, y, u, v], m);
                }
                refilled |= (t + 1..r).any(|i| a.get(i, t) != 0);
            }
            if !refilled {
                break;
            }
        }
    }
    let diagonal = (0..n).map(|i| a.get(i, i)).collect();
    Diagonalization {
        diagonal,
        left,
        left_inv,
        right,
    }
}

/// Generators (as columns) of `{x ∈ (Z/m)^n : r·x = 0 for every row r}`.
///
/// Rows are consumed one at a time, keeping a generating set of the solution
/// module seen so far; each row is folded into a single generator by
/// determinant-one column operations and that generator is then scaled into the
/// row's kernel. The generating set only ever shrinks, which keeps tall sparse
/// systems cheap.
pub fn kernel<I, R>(n: usize, m: u64, rows: I) -> Vec<Vec<u64>>
where
    I: IntoIterator<Item = R>,
    R: AsRef<[(usize, u64)]>,
{
    let mut gens: Vec<Vec<u64>> = (0..n)
        .map(|i| {
            let mut v = vec![0; n];
            v[i] = 1 % m;
            v
        })
        .collect();
    if m == 1 {
        return Vec::new();
    }
    let mut values: Vec<u64> = Vec::new();
    for row in rows {
        let row = row.as_ref();
        values.clear();
        values.extend(
            gens.iter()
                .map(|g| row.iter().fold(0, |acc, &(i, a)| (acc + (a % m) * g[i]) % m)),
        );
        let Some(p) = values.iter().position(|&v| v != 0) else {
            continue;
        };
        for j in p + 1..gens.len() {
            let b = values[j];
            if b == 0 {
                continue;
            }
            let (fwd, _) = euclid_step(values[p], b, m);
            let [x, y, u, v] = fwd;
            let (gp, gj) = two_mut(&mut gens, p, j);
            for (a, b) in gp.iter_mut().zip(gj.iter_mut()) {
                let (s, t) = (*a, *b);
                *a = (x * s + y * t) % m;
                *b = (u * s + v * t) % m;
            }
            values[p] = (x * values[p] + y * b) % m;
        }
        let scale = m / gcd(values[p], m);
        for x in gens[p].iter_mut() {
            *x = *x * scale % m;
        }
        gens.retain(|g| g.iter().any(|&x| x != 0));
    }
    gens
}

fn two_mut<T>(v: &mut [T], i: usize, j: usize) -> (&mut T, &mut T) {
    assert!(i < j);
    let (a, b) = v.split_at_mut(j);
    (&mut a[i], &mut b[0])
}

/// The finite abelian group `(Z/m)^rows / span(columns of a)`, as cyclic
/// summands with coordinate functionals and representatives.
#[derive(Clone, Debug)]
pub struct Cokernel {
    pub modulus: u64,
    /// Orders of the nontrivial cyclic summands.
    pub orders: Vec<u64>,
    /// Row `k`: the functional giving the `k`-th coordinate (mod `orders[k]`).
    pub coordinates: Vec<Vec<u64>>,
    /// Column `k`: a vector representing the `k`-th summand's generator.
    pub generators: Vec<Vec<u64>>,
}

impl Cokernel {
    pub fn coordinates_of(&self, v: &[u64]) -> Vec<u64> {
        self.coordinates
            .iter()
            .zip(&self.orders)
            .map(|(f, &q)| f.iter().zip(v).fold(0, |acc, (&a, &b)| (acc + a * b) % self.modulus) % q)
            .collect()
    }

    pub fn order(&self) -> u64 {
        self.orders.iter().product()
    }
}

pub fn cokernel(a: ZmMatrix, m: u64) -> Cokernel {
    let rows = a.rows;
    let d = diagonalize(
        a,
        m,
        Track {
            left: true,
            left_inv: true,
            right: false,
        },
    );
    let left = d.left.unwrap();
    let left_inv = d.left_inv.unwrap();
    let mut out = Cokernel {
        modulus: m,
        orders: Vec::new(),
        coordinates: Vec::new(),
        generators: Vec::new(),
    };
    for i in 0..rows {
        let e = d.diagonal.get(i).copied().unwrap_or(0);
        let q = gcd(e, m);
        if q > 1 {
            out.orders.push(q);
            out.coordinates.push(left.row(i).to_vec());
            out.generators.push(left_inv.column(i));
        }
    }
    out
}
