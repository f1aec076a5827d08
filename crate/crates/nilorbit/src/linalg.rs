//! Exact integer linear algebra on small matrices (rank <= 8).
//!
//! Everything here is fraction-free or explicitly rational; no floating
//! point exists anywhere in this crate.

/// Greatest common divisor, always non-negative.
pub fn gcd(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Determinant by fraction-free Gaussian (Bareiss) elimination.
pub fn det(m: &[Vec<i128>]) -> i128 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    let mut a: Vec<Vec<i128>> = m.to_vec();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if a[k][k] == 0 {
            let pivot = (k + 1..n).find(|&r| a[r][k] != 0);
            match pivot {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    sign * a[n - 1][n - 1]
}

/// Adjugate matrix: adj(A) * A = det(A) * I. Computed from cofactors.
pub fn adjugate(m: &[Vec<i128>]) -> Vec<Vec<i128>> {
    let n = m.len();
    let mut adj = vec![vec![0i128; n]; n];
    for i in 0..n {
        for j in 0..n {
            let minor: Vec<Vec<i128>> = (0..n)
                .filter(|&r| r != j)
                .map(|r| (0..n).filter(|&c| c != i).map(|c| m[r][c]).collect())
                .collect();
            let cof = det(&minor);
            adj[i][j] = if (i + j) % 2 == 0 { cof } else { -cof };
        }
    }
    adj
}

/// Solve `A x = b` exactly (A square, invertible). Returns the solution only
/// when it is integral; `None` signals a non-integral (or non-unique) solve.
pub fn solve_integral(a: &[Vec<i64>], b: &[i64]) -> Option<Vec<i64>> {
    let n = a.len();
    let wide: Vec<Vec<i128>> = a
        .iter()
        .map(|row| row.iter().map(|&x| x as i128).collect())
        .collect();
    let d = det(&wide);
    if d == 0 {
        return None;
    }
    let mut x = Vec::with_capacity(n);
    for col in 0..n {
        let mut replaced = wide.clone();
        for (row, &bv) in replaced.iter_mut().zip(b.iter()) {
            row[col] = bv as i128;
        }
        let num = det(&replaced);
        if num % d != 0 {
            return None;
        }
        x.push(i64::try_from(num / d).ok()?);
    }
    Some(x)
}

/// Matrix-vector product over i64.
pub fn mat_vec(m: &[Vec<i64>], v: &[i64]) -> Vec<i64> {
    m.iter()
        .map(|row| row.iter().zip(v).map(|(&a, &b)| a * b).sum())
        .collect()
}

/// Matrix-matrix product over i64.
pub fn mat_mul(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = a.len();
    let mut out = vec![vec![0i64; n]; n];
    for i in 0..n {
        for j in 0..n {
            out[i][j] = (0..n).map(|k| a[i][k] * b[k][j]).sum();
        }
    }
    out
}

/// Identity matrix.
pub fn identity(n: usize) -> Vec<Vec<i64>> {
    let mut m = vec![vec![0i64; n]; n];
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = 1;
    }
    m
}

/// Symmetrizer of a generalized Cartan matrix: positive integers d with
/// `d[i] * a[j][i] == d[j] * a[i][j]`, minimal within each connected
/// component of the Dynkin graph.
pub fn symmetrizer(a: &[Vec<i64>]) -> Vec<i64> {
    let n = a.len();
    // Rational d as (num, den), propagated along graph edges.
    let mut d: Vec<Option<(i128, i128)>> = vec![None; n];
    for start in 0..n {
        if d[start].is_some() {
            continue;
        }
        d[start] = Some((1, 1));
        let mut stack = vec![start];
        while let Some(i) = stack.pop() {
            let (ni, di) = d[i].unwrap();
            for j in 0..n {
                if i == j || a[i][j] == 0 || d[j].is_some() {
                    continue;
                }
                // d_j = d_i * a[j][i] / a[i][j]
                let mut nj = ni * a[j][i] as i128;
                let mut dj = di * a[i][j] as i128;
                if dj < 0 {
                    nj = -nj;
                    dj = -dj;
                }
                let g = gcd(nj, dj);
                d[j] = Some((nj / g, dj / g));
                stack.push(j);
            }
        }
    }
    let lcm_den = d
        .iter()
        .map(|x| x.unwrap().1)
        .fold(1i128, |acc, q| acc / gcd(acc, q) * q);
    d.iter()
        .map(|x| {
            let (num, den) = x.unwrap();
            (num * (lcm_den / den)) as i64
        })
        .collect()
}
