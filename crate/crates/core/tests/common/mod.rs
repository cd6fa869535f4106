//! Naive dense arithmetic used as an independent oracle.
#![allow(dead_code)]

use hopf_trace::linalg::{Field, LinearMap, Scalar};
use hopf_trace::zoo::ZooEntry;
use hopf_trace::hopf::HopfAlgebra;

pub type Dense = Vec<Vec<Scalar>>;

pub fn dense(m: &LinearMap) -> Dense {
    m.to_dense()
}

pub fn zeros(f: Field, r: usize, c: usize) -> Dense {
    vec![vec![f.zero(); c]; r]
}

pub fn eye(f: Field, n: usize) -> Dense {
    let mut m = zeros(f, n, n);
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = f.one();
    }
    m
}

pub fn matmul(f: Field, a: &Dense, b: &Dense) -> Dense {
    let (r, k, c) = (a.len(), b.len(), b.first().map_or(0, |x| x.len()));
    let mut out = zeros(f, r, c);
    for i in 0..r {
        assert_eq!(a[i].len(), k);
        for (l, brow) in b.iter().enumerate() {
            if a[i][l].is_zero() {
                continue;
            }
            for j in 0..c {
                out[i][j] = &out[i][j] + &(&a[i][l] * &brow[j]);
            }
        }
    }
    out
}

pub fn kron(f: Field, a: &Dense, b: &Dense) -> Dense {
    let (ar, ac) = (a.len(), a.first().map_or(0, |x| x.len()));
    let (br, bc) = (b.len(), b.first().map_or(0, |x| x.len()));
    let mut out = zeros(f, ar * br, ac * bc);
    for i in 0..ar {
        for j in 0..ac {
            for k in 0..br {
                for l in 0..bc {
                    out[i * br + k][j * bc + l] = &a[i][j] * &b[k][l];
                }
            }
        }
    }
    out
}

pub fn transpose(a: &Dense) -> Dense {
    let c = a.first().map_or(0, |x| x.len());
    (0..c).map(|j| a.iter().map(|row| row[j].clone()).collect()).collect()
}

pub fn chain(f: Field, maps: &[&Dense]) -> Dense {
    let mut acc = maps[maps.len() - 1].clone();
    for m in maps[..maps.len() - 1].iter().rev() {
        acc = matmul(f, m, &acc);
    }
    acc
}

/// Every zoo algebra named in the acceptance list, with its field.
pub fn zoo_list() -> Vec<(ZooEntry, Field)> {
    let q = Field::Rational;
    let gf5 = Field::prime(5).unwrap();
    let mut out = Vec::new();
    for n in 1..=4 {
        out.push((ZooEntry::GroupAlgebra(n), q));
        out.push((ZooEntry::GroupAlgebra(n), gf5));
    }
    out.push((ZooEntry::FunctionAlgebra(2), q));
    out.push((ZooEntry::FunctionAlgebra(3), q));
    out.push((ZooEntry::SweedlerH4, q));
    out.push((ZooEntry::SweedlerH4, gf5));
    out.push((ZooEntry::Taft { n: 3, q: 2, p: Some(7) }, q));
    out
}

pub fn build(name: &str) -> HopfAlgebra {
    ZooEntry::parse(name).unwrap().build(Field::Rational).unwrap()
}
