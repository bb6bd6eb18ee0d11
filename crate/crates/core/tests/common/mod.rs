//! Independent oracles for the integration tests. Nothing here calls the
//! library code it is used to check.
#![allow(dead_code)]

pub fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Determinant by cofactor expansion along the first row.
pub fn det(m: &[Vec<i64>]) -> i64 {
    match m.len() {
        0 => 1,
        1 => m[0][0],
        n => (0..n)
            .map(|j| {
                let minor: Vec<Vec<i64>> = m[1..]
                    .iter()
                    .map(|row| {
                        row.iter()
                            .enumerate()
                            .filter(|&(c, _)| c != j)
                            .map(|(_, &x)| x)
                            .collect()
                    })
                    .collect();
                let sign = if j % 2 == 0 { 1 } else { -1 };
                sign * m[0][j] * det(&minor)
            })
            .sum(),
    }
}

pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// gcd of all k-by-k minors.
pub fn minors_gcd(m: &[Vec<i64>], k: usize) -> i64 {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut g = 0;
    for rs in combinations(rows, k) {
        for cs in combinations(cols, k) {
            let sub: Vec<Vec<i64>> = rs
                .iter()
                .map(|&r| cs.iter().map(|&c| m[r][c]).collect())
                .collect();
            g = gcd(g, det(&sub));
        }
    }
    g
}

/// Nonzero invariant factors from determinantal divisors:
/// `d_k = D_k / D_{k-1}` while `D_k != 0`.
pub fn determinantal_factors(m: &[Vec<i64>]) -> Vec<i64> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut out = Vec::new();
    let mut prev = 1;
    for k in 1..=rows.min(cols) {
        let dk = minors_gcd(m, k);
        if dk == 0 {
            break;
        }
        out.push(dk / prev);
        prev = dk;
    }
    out
}

/// Rank over the rationals by fraction-free elimination.
pub fn rational_rank(m: &[Vec<i64>]) -> usize {
    let mut a: Vec<Vec<i128>> = m
        .iter()
        .map(|r| r.iter().map(|&x| i128::from(x)).collect())
        .collect();
    let cols = a.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..a.len()).find(|&r| a[r][c] != 0) else {
            continue;
        };
        a.swap(rank, p);
        for r in rank + 1..a.len() {
            let (x, y) = (a[rank][c], a[r][c]);
            if y == 0 {
                continue;
            }
            let pivot_row = a[rank].clone();
            for (v, &pv) in a[r].iter_mut().zip(&pivot_row) {
                *v = *v * x - pv * y;
            }
            let g = a[r].iter().fold(0i128, |g, &v| {
                let (mut g, mut v) = (g.abs(), v.abs());
                while v != 0 {
                    (g, v) = (v, g % v);
                }
                g
            });
            if g > 1 {
                a[r].iter_mut().for_each(|v| *v /= g);
            }
        }
        rank += 1;
    }
    rank
}

/// A sector for [`cellular_h1`]: genus and `(branch index, degree)` pairs.
pub type CellSector = (u32, Vec<(usize, i64)>);

/// `H1` of a multibranched surface from an explicit cell structure.
///
/// Cells: a vertex and a loop per branch; per sector a base vertex, `2g`
/// handle loops, an arc from the base vertex to each attached branch vertex,
/// and one 2-cell whose boundary word is the product of the handle
/// commutators and `t_j e_{b_j}^{d_j} t_j^{-1}`.
/// Returns `(free rank, torsion factors > 1)`.
pub fn cellular_h1(branches: usize, sectors: &[CellSector]) -> (usize, Vec<i64>) {
    let vertices = branches + sectors.len();
    let mut edges: Vec<Vec<i64>> = Vec::new();
    for _ in 0..branches {
        edges.push(vec![0; vertices]);
    }
    for (s, (genus, boundary)) in sectors.iter().enumerate() {
        for _ in 0..2 * genus {
            edges.push(vec![0; vertices]);
        }
        for &(b, _) in boundary {
            let mut d1 = vec![0; vertices];
            d1[b] += 1;
            d1[branches + s] -= 1;
            edges.push(d1);
        }
    }
    // rows: 2-cells, columns: edges; only the branch loops survive in the
    // boundary of a 2-cell
    let d2: Vec<Vec<i64>> = sectors
        .iter()
        .map(|(_, boundary)| {
            let mut row = vec![0; edges.len()];
            for &(b, d) in boundary {
                row[b] += d;
            }
            row
        })
        .collect();
    let rank = edges.len() - rational_rank(&edges) - rational_rank(&d2);
    let branch_block: Vec<Vec<i64>> = d2.iter().map(|r| r[..branches].to_vec()).collect();
    let torsion = determinantal_factors(&branch_block)
        .into_iter()
        .filter(|&d| d > 1)
        .collect();
    (rank, torsion)
}

/// Pairwise linking numbers of the closure of a 3-strand braid given as
/// `(generator, exponent)` letters, by expanding every letter into single
/// crossings and following the strands one crossing at a time.
pub fn braid_linking(letters: &[(usize, i64)]) -> Option<[i64; 3]> {
    let mut pos = [0usize, 1, 2];
    let mut count = [[0i64; 3]; 3];
    for &(g, e) in letters {
        for _ in 0..e.abs() {
            let (x, y) = (pos[g - 1], pos[g]);
            count[x][y] += e.signum();
            count[y][x] += e.signum();
            pos.swap(g - 1, g);
        }
    }
    if pos != [0, 1, 2] {
        return None;
    }
    let half = |c: i64| (c % 2 == 0).then_some(c / 2);
    Some([half(count[0][1])?, half(count[0][2])?, half(count[1][2])?])
}
