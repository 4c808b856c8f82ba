//! Breadth-first Stern–Brocot (Farey mediant) enumeration of ℚ ∩ [0, 1].
//!
//! Order: 0, 1, then level by level the mediants of adjacent pairs already
//! emitted — 1/2; 1/3, 2/3; 1/4, 2/5, 3/5, 3/4; ... Every rational of [0, 1]
//! appears exactly once, in reduced form.

use crate::geom::rational::Rational;
use num_bigint::BigInt;
use std::collections::VecDeque;

pub fn stern_brocot_unit(n: usize) -> Vec<Rational> {
    let mut out = Vec::with_capacity(n);
    if n == 0 {
        return out;
    }
    let zero = (BigInt::from(0), BigInt::from(1));
    let one = (BigInt::from(1), BigInt::from(1));
    out.push(Rational::new(zero.0.clone(), zero.1.clone()));
    if n == 1 {
        return out;
    }
    out.push(Rational::new(one.0.clone(), one.1.clone()));
    let mut queue: VecDeque<((BigInt, BigInt), (BigInt, BigInt))> = VecDeque::new();
    queue.push_back((zero, one));
    while out.len() < n {
        let (l, r) = queue.pop_front().expect("queue refills itself");
        let med = (&l.0 + &r.0, &l.1 + &r.1);
        out.push(Rational::new(med.0.clone(), med.1.clone()));
        queue.push_back((l, med.clone()));
        queue.push_back((med, r));
    }
    out
}
