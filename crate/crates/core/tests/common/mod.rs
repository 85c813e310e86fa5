//! Independent reference computations used by the integration tests.
//!
//! Nothing here calls the index engine; only the exact rational type is shared.

#![allow(dead_code)]

use reebcz::{Family, Rational};

fn q(p: i64, d: i64) -> Rational {
    Rational::new(p, d)
}

/// Index of `t ↦ e^{i s t}` on `[0, T]`, `T = duration_pi·π`, by listing crossings.
///
/// The crossing form at each zero of `e^{ist} − 1` is `s·I₂`, of signature
/// `2·sgn(s)`. Endpoints count half.
pub fn rotation_by_crossings(speed: &Rational, duration_pi: &Rational) -> i64 {
    assert!(!speed.is_zero() && duration_pi.is_positive());
    let sign = if speed.is_positive() { 1 } else { -1 };
    let abs = speed.abs();
    // Crossings at t_k = 2πk/|s|, i.e. coefficient 2k/|s|.
    let mut interior = 0;
    let mut at_end = false;
    for k in 1.. {
        let t = Rational::from_integer(2 * k) / &abs;
        if &t < duration_pi {
            interior += 1;
        } else {
            at_end = &t == duration_pi;
            break;
        }
    }
    // Half of 2·sgn at t = 0, full signature inside, half at the end.
    sign * (1 + 2 * interior + i64::from(at_end))
}

pub fn path_by_crossings(speeds: &[Rational], duration_pi: &Rational) -> i64 {
    speeds.iter().map(|s| rotation_by_crossings(s, duration_pi)).sum()
}

/// `μ(Φ) − μ(Φ_{ξ^ω})` built from scratch: Reeb speeds, orbit period, crossings.
pub fn link_index_by_crossings(n: u32, eps: &Rational, family: Family, iterate: u64) -> i64 {
    let one = Rational::one();
    let stretch = match family {
        Family::Plus => &one + eps,
        Family::Minus => &one - eps,
    };
    let period = Rational::from_integer(iterate as i64) / stretch;
    let speeds = [
        q(4, i64::from(n) + 1),
        Rational::from_integer(2) * (&one + eps),
        Rational::from_integer(2) * (&one - eps),
    ];
    path_by_crossings(&speeds, &period) - rotation_by_crossings(&q(4, 1), &period)
}

/// Degree-by-degree ranks `n` at 1 and `n + 1` at odd degrees from 3 on.
pub fn expected_rank(n: u32, degree: i64) -> u64 {
    match degree {
        1 => u64::from(n),
        d if d >= 3 && d % 2 == 1 => u64::from(n) + 1,
        _ => 0,
    }
}
