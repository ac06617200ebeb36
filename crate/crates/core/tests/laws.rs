//! Boolean-algebra, product and order laws on random matrices.

mod common;

use binmat::{seeded_rng, BitMatrix, Ordering};
use proptest::prelude::*;
use rand_chacha::ChaCha8Rng;

const SIZES: [usize; 10] = [1, 2, 3, 7, 8, 9, 63, 64, 65, 128];
const TRIALS: usize = 200;

fn triples(seed: u64, n: usize) -> impl Iterator<Item = (BitMatrix, BitMatrix, BitMatrix)> {
    let mut rng: ChaCha8Rng = seeded_rng(seed ^ (n as u64) << 32);
    (0..TRIALS).map(move |_| {
        (
            BitMatrix::random(n, &mut rng).unwrap(),
            BitMatrix::random(n, &mut rng).unwrap(),
            BitMatrix::random(n, &mut rng).unwrap(),
        )
    })
}

#[test]
fn lattice_laws() {
    for n in SIZES {
        for (a, b, c) in triples(1, n) {
            assert_eq!(a.and(&b).unwrap(), b.and(&a).unwrap());
            assert_eq!(a.or(&b).unwrap(), b.or(&a).unwrap());
            assert_eq!(
                a.and(&b).unwrap().and(&c).unwrap(),
                a.and(&b.and(&c).unwrap()).unwrap()
            );
            assert_eq!(
                a.or(&b).unwrap().or(&c).unwrap(),
                a.or(&b.or(&c).unwrap()).unwrap()
            );
            assert_eq!(a.and(&a).unwrap(), a);
            assert_eq!(a.or(&a).unwrap(), a);
            assert_eq!(a.and(&a.or(&b).unwrap()).unwrap(), a);
            assert_eq!(a.or(&a.and(&b).unwrap()).unwrap(), a);
            assert_eq!(a.and(&b).unwrap().not(), a.not().or(&b.not()).unwrap());
            assert_eq!(a.or(&b).unwrap().not(), a.not().and(&b.not()).unwrap());
            assert_eq!(a.not().not(), a);
            assert!(a.not().padding_is_clean());
        }
    }
}

#[test]
fn product_and_transpose_laws() {
    for n in SIZES {
        let id = BitMatrix::identity(n).unwrap();
        let trials = if n >= 63 { 40 } else { TRIALS };
        for (a, b, c) in triples(2, n).take(trials) {
            assert_eq!(a.transpose().transpose(), a);
            let ab = a.product(&b).unwrap();
            assert_eq!(
                ab.product(&c).unwrap(),
                a.product(&b.product(&c).unwrap()).unwrap()
            );
            assert_eq!(id.product(&a).unwrap(), a);
            assert_eq!(a.product(&id).unwrap(), a);
            assert_eq!(
                ab.transpose(),
                b.transpose().product(&a.transpose()).unwrap()
            );
            assert!(ab.padding_is_clean());
        }
    }
}

#[test]
fn order_axioms() {
    for n in SIZES {
        for (a, b, c) in triples(3, n) {
            let ab = a.compare(&b).unwrap();
            assert_eq!(b.compare(&a).unwrap(), ab.reverse());
            assert_eq!(ab == Ordering::Equal, a == b);
            assert_eq!(
                ab,
                common::compare(&common::to_grid(&a), &common::to_grid(&b))
            );
            let bc = b.compare(&c).unwrap();
            if ab != Ordering::Greater && bc != Ordering::Greater {
                assert_ne!(a.compare(&c).unwrap(), Ordering::Greater);
            }
            assert_eq!(a.compare(&a).unwrap(), Ordering::Equal);
        }
    }
}

#[test]
fn order_on_near_equal_matrices() {
    // Random matrices almost always differ in row 0; flip single bits to
    // exercise the deeper parts of the scan.
    let mut rng = seeded_rng(4);
    for n in [7, 64, 65, 128] {
        let a = BitMatrix::random(n, &mut rng).unwrap();
        for i in 0..n {
            for j in [0, n / 2, n - 1] {
                let b = a.with(i, j, !a.get(i, j).unwrap()).unwrap();
                let want = if a.get(i, j).unwrap() {
                    Ordering::Greater
                } else {
                    Ordering::Less
                };
                assert_eq!(a.compare(&b).unwrap(), want);
            }
        }
    }
}

fn matrix(max_n: usize) -> impl Strategy<Value = BitMatrix> {
    (1..=max_n, any::<u64>())
        .prop_map(|(n, seed)| BitMatrix::random(n, &mut seeded_rng(seed)).unwrap())
}

proptest! {
    #[test]
    fn row_bijection(n in 1usize..=64, seed: u64) {
        let m = BitMatrix::random(n, &mut seeded_rng(seed)).unwrap();
        let rows = m.row_values().unwrap();
        let mut rebuilt = BitMatrix::new_zero(n).unwrap();
        for (i, &r) in rows.iter().enumerate() {
            prop_assert!(r <= u64::MAX >> (64 - n));
            rebuilt.set_row(i, r).unwrap();
            prop_assert_eq!(rebuilt.get_row(i).unwrap(), r);
        }
        prop_assert_eq!(&rebuilt, &m);
        prop_assert_eq!(BitMatrix::from_row_values(&rows).unwrap(), m);
    }

    #[test]
    fn set_get_roundtrip(m in matrix(140), i in 0usize..140, j in 0usize..140, v: bool) {
        let (i, j) = (i % m.n(), j % m.n());
        let m2 = m.with(i, j, v).unwrap();
        prop_assert_eq!(m2.get(i, j).unwrap(), v);
        prop_assert!(m2.padding_is_clean());
        for r in 0..m.n() {
            for c in 0..m.n() {
                if (r, c) != (i, j) {
                    prop_assert_eq!(m2.get(r, c).unwrap(), m.get(r, c).unwrap());
                }
            }
        }
    }
}
