//! Definition-literal boolean matrix operations on `Vec<Vec<bool>>`, used as
//! an oracle independent of both library representations.
#![allow(dead_code)]

use binmat::BitMatrix;
use std::cmp::Ordering;

pub type Grid = Vec<Vec<bool>>;

pub fn grid(rows: &[&str]) -> Grid {
    rows.iter()
        .map(|r| r.bytes().map(|c| c == b'1').collect())
        .collect()
}

pub fn to_grid(m: &BitMatrix) -> Grid {
    (0..m.n())
        .map(|i| (0..m.n()).map(|j| m.get(i, j).unwrap()).collect())
        .collect()
}

pub fn from_grid(g: &Grid) -> BitMatrix {
    let mut m = BitMatrix::new_zero(g.len()).unwrap();
    for (i, row) in g.iter().enumerate() {
        for (j, &v) in row.iter().enumerate() {
            m.set(i, j, v).unwrap();
        }
    }
    m
}

pub fn and(a: &Grid, b: &Grid) -> Grid {
    a.iter()
        .zip(b)
        .map(|(ra, rb)| ra.iter().zip(rb).map(|(&x, &y)| x && y).collect())
        .collect()
}

pub fn or(a: &Grid, b: &Grid) -> Grid {
    a.iter()
        .zip(b)
        .map(|(ra, rb)| ra.iter().zip(rb).map(|(&x, &y)| x || y).collect())
        .collect()
}

pub fn not(a: &Grid) -> Grid {
    a.iter().map(|r| r.iter().map(|&x| !x).collect()).collect()
}

pub fn transpose(a: &Grid) -> Grid {
    let n = a.len();
    (0..n).map(|i| (0..n).map(|j| a[j][i]).collect()).collect()
}

pub fn product(a: &Grid, b: &Grid) -> Grid {
    let n = a.len();
    (0..n)
        .map(|i| (0..n).map(|j| (0..n).any(|k| a[i][k] && b[k][j])).collect())
        .collect()
}

pub fn compare(a: &Grid, b: &Grid) -> Ordering {
    a.iter().flatten().cmp(b.iter().flatten())
}
