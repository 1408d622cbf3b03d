//! Contraction against an independent naive index-loop oracle, and the
//! frozen gallery-derived contraction examples.

use proptest::prelude::*;
use weakhopf::gallery::by_name;
use weakhopf::kernel::{vec, FieldSpec, Scalar, Tensor};

/// Naive index-loop contraction, written independently of the kernel's
/// implementation: loops every output index and every contracted index.
fn naive_contract(t: &Tensor, u: &Tensor, axes: &[(usize, usize)]) -> Tensor {
    let field = t.field();
    let left_keep: Vec<usize> = (0..t.shape().len())
        .filter(|i| !axes.iter().any(|&(a, _)| a == *i))
        .collect();
    let right_keep: Vec<usize> = (0..u.shape().len())
        .filter(|j| !axes.iter().any(|&(_, b)| b == *j))
        .collect();
    let mut shape: Vec<usize> = left_keep.iter().map(|&i| t.shape()[i]).collect();
    shape.extend(right_keep.iter().map(|&j| u.shape()[j]));
    let contracted: Vec<usize> = axes.iter().map(|&(a, _)| t.shape()[a]).collect();
    let mut out = Tensor::zeros(field, &shape);

    fn odometer(dims: &[usize]) -> Vec<Vec<usize>> {
        let mut all = vec![vec![]];
        for &d in dims {
            let mut next = Vec::new();
            for prefix in &all {
                for v in 0..d {
                    let mut p = prefix.clone();
                    p.push(v);
                    next.push(p);
                }
            }
            all = next;
        }
        all
    }

    for out_idx in odometer(&shape) {
        let mut acc = Scalar::zero(field);
        for sum_idx in odometer(&contracted) {
            let mut t_idx = vec![0usize; t.shape().len()];
            let mut u_idx = vec![0usize; u.shape().len()];
            for (pos, &ax) in left_keep.iter().enumerate() {
                t_idx[ax] = out_idx[pos];
            }
            for (pos, &ax) in right_keep.iter().enumerate() {
                u_idx[ax] = out_idx[left_keep.len() + pos];
            }
            for (pos, &(a, b)) in axes.iter().enumerate() {
                t_idx[a] = sum_idx[pos];
                u_idx[b] = sum_idx[pos];
            }
            acc = acc.add(&t.get(&t_idx).mul(u.get(&u_idx)));
        }
        if !out_idx.is_empty() {
            out.set(&out_idx, acc);
        } else {
            out = Tensor::from_entries(field, &[], vec![acc]).unwrap();
        }
    }
    out
}

#[test]
fn gallery_multiplication_contracted_with_unit_is_identity() {
    // Contracting the multiplication tensor of the order-two group
    // algebra with the unit vector on axis 0 gives the identity matrix.
    let q = FieldSpec::Rationals;
    let g2 = by_name("g2", q).unwrap();
    let unit = Tensor::from_entries(q, &[2], g2.algebra().unit().to_vec()).unwrap();
    let fast = unit.contract(g2.algebra().mult(), &[(0, 0)]).unwrap();
    assert_eq!(fast, Tensor::identity(q, 2));
    let slow = naive_contract(&unit, g2.algebra().mult(), &[(0, 0)]);
    assert_eq!(fast, slow);
}

fn small_tensor(max_total: usize) -> impl Strategy<Value = Tensor> {
    proptest::collection::vec(1usize..=4, 1..=3)
        .prop_filter("bounded entry count", move |shape| {
            shape.iter().product::<usize>() <= max_total
        })
        .prop_flat_map(|shape| {
            let total: usize = shape.iter().product();
            proptest::collection::vec(-4i64..=4, total).prop_map(move |entries| {
                Tensor::from_entries(
                    FieldSpec::Rationals,
                    &shape,
                    vec::from_i64s(FieldSpec::Rationals, &entries),
                )
                .unwrap()
            })
        })
}

proptest! {
    #[test]
    fn contract_agrees_with_naive_loop(t in small_tensor(64), u in small_tensor(64)) {
        // Contract the last axis of t against the first matching axis of u.
        let t_ax = t.shape().len() - 1;
        let dim = t.shape()[t_ax];
        let Some(u_ax) = u.shape().iter().position(|&d| d == dim) else {
            return Ok(());
        };
        prop_assume!(t.entries().len() * u.entries().len() <= 256 * 256);
        let fast = t.contract(&u, &[(t_ax, u_ax)]).unwrap();
        let slow = naive_contract(&t, &u, &[(t_ax, u_ax)]);
        prop_assert_eq!(fast, slow);
    }

    #[test]
    fn contract_is_bilinear(t in small_tensor(27), u in small_tensor(27), c in -3i64..=3) {
        let t_ax = t.shape().len() - 1;
        let dim = t.shape()[t_ax];
        let Some(u_ax) = u.shape().iter().position(|&d| d == dim) else {
            return Ok(());
        };
        let q = FieldSpec::Rationals;
        let scalar = Scalar::from_i64(q, c);
        let lhs = t.scale(&scalar).contract(&u, &[(t_ax, u_ax)]).unwrap();
        let rhs = t.contract(&u, &[(t_ax, u_ax)]).unwrap().scale(&scalar);
        prop_assert_eq!(&lhs, &rhs);
        let sum = t.add(&t).unwrap().contract(&u, &[(t_ax, u_ax)]).unwrap();
        let twice = t
            .contract(&u, &[(t_ax, u_ax)])
            .unwrap()
            .add(&t.contract(&u, &[(t_ax, u_ax)]).unwrap())
            .unwrap();
        prop_assert_eq!(sum, twice);
    }
}
