//! Exact phase-1 simplex over rationals with Bland's rule.
//!
//! Decides feasibility of `A x (<=,=,>=) b, x >= 0`. Infeasible systems come
//! with a Farkas vector `y` (one entry per row) such that
//! `y^T A <= 0` on every column, `y^T b > 0`, `y_i >= 0` on `>=` rows and
//! `y_i <= 0` on `<=` rows.

use num_traits::{One, Signed, Zero};

use crate::rational::Q;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sense {
    Le,
    Eq,
    Ge,
}

#[derive(Clone, Debug)]
pub struct Constraint {
    pub coeffs: Vec<Q>,
    pub sense: Sense,
    pub rhs: Q,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Phase1 {
    Feasible(Vec<Q>),
    Infeasible(Vec<Q>),
}

/// Runs phase 1 on `constraints` over `nvars` nonnegative variables.
pub fn phase1(nvars: usize, constraints: &[Constraint]) -> Phase1 {
    let m = constraints.len();
    if m == 0 {
        return Phase1::Feasible(vec![Q::zero(); nvars]);
    }
    // normalise so every rhs is nonnegative
    let mut flip = vec![false; m];
    let mut rows: Vec<(Vec<Q>, Sense, Q)> = Vec::with_capacity(m);
    for (i, c) in constraints.iter().enumerate() {
        assert_eq!(c.coeffs.len(), nvars, "constraint width mismatch");
        if c.rhs.is_negative() {
            flip[i] = true;
            let sense = match c.sense {
                Sense::Le => Sense::Ge,
                Sense::Ge => Sense::Le,
                Sense::Eq => Sense::Eq,
            };
            rows.push((c.coeffs.iter().map(|x| -x).collect(), sense, -&c.rhs));
        } else {
            rows.push((c.coeffs.clone(), c.sense, c.rhs.clone()));
        }
    }
    // columns: originals, one slack/surplus per inequality, one artificial per row
    let nslack = rows.iter().filter(|r| r.1 != Sense::Eq).count();
    let art0 = nvars + nslack;
    let ncols = art0 + m;
    let mut t: Vec<Vec<Q>> = vec![vec![Q::zero(); ncols + 1]; m];
    let mut k = nvars;
    for (i, (coeffs, sense, rhs)) in rows.iter().enumerate() {
        t[i][..nvars].clone_from_slice(coeffs);
        match sense {
            Sense::Le => {
                t[i][k] = Q::one();
                k += 1;
            }
            Sense::Ge => {
                t[i][k] = -Q::one();
                k += 1;
            }
            Sense::Eq => {}
        }
        t[i][art0 + i] = Q::one();
        t[i][ncols] = rhs.clone();
    }
    let mut basis: Vec<usize> = (art0..ncols).collect();
    // reduced costs of the phase-1 objective (sum of artificials); last entry is -objective
    let mut r = vec![Q::zero(); ncols + 1];
    for j in 0..=ncols {
        if (art0..ncols).contains(&j) {
            continue;
        }
        let s: Q = t.iter().map(|row| &row[j]).sum();
        r[j] = -s;
    }

    while let Some(enter) = (0..ncols).find(|&j| r[j].is_negative()) {
        let mut leave: Option<usize> = None;
        for i in 0..m {
            if !t[i][enter].is_positive() {
                continue;
            }
            leave = match leave {
                None => Some(i),
                Some(l) => {
                    let a = &t[i][ncols] / &t[i][enter];
                    let b = &t[l][ncols] / &t[l][enter];
                    if a < b || (a == b && basis[i] < basis[l]) {
                        Some(i)
                    } else {
                        Some(l)
                    }
                }
            };
        }
        let l = leave.expect("phase-1 objective is bounded below");
        pivot(&mut t, &mut r, l, enter);
        basis[l] = enter;
    }

    let objective = -&r[ncols];
    if objective.is_zero() {
        let mut x = vec![Q::zero(); nvars];
        for (i, &b) in basis.iter().enumerate() {
            if b < nvars {
                x[b] = t[i][ncols].clone();
            }
        }
        Phase1::Feasible(x)
    } else {
        // duals of the normalised rows: y_i = c_art - reduced cost = 1 - r_art
        let y = (0..m)
            .map(|i| {
                let yi = Q::one() - &r[art0 + i];
                if flip[i] { -yi } else { yi }
            })
            .collect();
        Phase1::Infeasible(y)
    }
}

fn pivot(t: &mut [Vec<Q>], r: &mut [Q], l: usize, e: usize) {
    let pv = t[l][e].clone();
    for x in t[l].iter_mut() {
        *x /= &pv;
    }
    let prow = t[l].clone();
    for (i, row) in t.iter_mut().enumerate() {
        if i == l || row[e].is_zero() {
            continue;
        }
        let factor = row[e].clone();
        for (x, p) in row.iter_mut().zip(&prow) {
            if !p.is_zero() {
                *x -= &factor * p;
            }
        }
    }
    if !r[e].is_zero() {
        let factor = r[e].clone();
        for (x, p) in r.iter_mut().zip(&prow) {
            if !p.is_zero() {
                *x -= &factor * p;
            }
        }
    }
}

/// Checks a feasible point against the system.
pub fn check_point(constraints: &[Constraint], x: &[Q]) -> bool {
    x.iter().all(|v| !v.is_negative())
        && constraints.iter().all(|c| {
            let lhs: Q = c.coeffs.iter().zip(x).map(|(a, b)| a * b).sum();
            match c.sense {
                Sense::Le => lhs <= c.rhs,
                Sense::Eq => lhs == c.rhs,
                Sense::Ge => lhs >= c.rhs,
            }
        })
}

/// Checks a Farkas vector against the system.
pub fn check_farkas(nvars: usize, constraints: &[Constraint], y: &[Q]) -> bool {
    if y.len() != constraints.len() {
        return false;
    }
    let signs_ok = constraints.iter().zip(y).all(|(c, yi)| match c.sense {
        Sense::Le => !yi.is_positive(),
        Sense::Ge => !yi.is_negative(),
        Sense::Eq => true,
    });
    let cols_ok = (0..nvars).all(|j| {
        let s: Q = constraints.iter().zip(y).map(|(c, yi)| yi * &c.coeffs[j]).sum();
        !s.is_positive()
    });
    let yb: Q = constraints.iter().zip(y).map(|(c, yi)| yi * &c.rhs).sum();
    signs_ok && cols_ok && yb.is_positive()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{q, ratio};

    fn row(c: &[i64], sense: Sense, rhs: i64) -> Constraint {
        Constraint { coeffs: c.iter().map(|&x| q(x)).collect(), sense, rhs: q(rhs) }
    }

    fn assert_sound(nvars: usize, cs: &[Constraint]) -> Phase1 {
        let res = phase1(nvars, cs);
        match &res {
            Phase1::Feasible(x) => assert!(check_point(cs, x), "{x:?}"),
            Phase1::Infeasible(y) => assert!(check_farkas(nvars, cs, y), "{y:?}"),
        }
        res
    }

    #[test]
    fn simple_feasible() {
        let cs = [row(&[1, 1], Sense::Eq, 1), row(&[1, -1], Sense::Ge, 0)];
        assert!(matches!(assert_sound(2, &cs), Phase1::Feasible(_)));
    }

    #[test]
    fn simple_infeasible() {
        let cs = [row(&[1, 1], Sense::Le, 1), row(&[1, 1], Sense::Ge, 2)];
        assert!(matches!(assert_sound(2, &cs), Phase1::Infeasible(_)));
        let cs = [row(&[1], Sense::Le, -1)];
        assert!(matches!(assert_sound(1, &cs), Phase1::Infeasible(_)));
    }

    #[test]
    fn negative_rhs_flip() {
        let cs = [row(&[-1, -2], Sense::Le, -4), row(&[1, 0], Sense::Le, 1)];
        let Phase1::Feasible(x) = assert_sound(2, &cs) else { panic!() };
        assert!(&x[0] + q(2) * &x[1] >= q(4));
    }

    #[test]
    fn fractional_data() {
        let cs = [Constraint {
            coeffs: vec![ratio(1, 3), ratio(2, 7)],
            sense: Sense::Eq,
            rhs: ratio(5, 11),
        }];
        assert!(matches!(assert_sound(2, &cs), Phase1::Feasible(_)));
    }

    #[test]
    fn degenerate_cycling_example() {
        // Beale's classic cycling instance, rewritten as a feasibility system
        let cs = [
            Constraint {
                coeffs: vec![ratio(1, 4), q(-8), q(-1), q(9)],
                sense: Sense::Le,
                rhs: q(0),
            },
            Constraint {
                coeffs: vec![ratio(1, 2), q(-12), ratio(-1, 2), q(3)],
                sense: Sense::Le,
                rhs: q(0),
            },
            row(&[0, 0, 1, 0], Sense::Le, 1),
            Constraint {
                coeffs: vec![ratio(3, 4), q(-20), ratio(1, 2), q(-6)],
                sense: Sense::Ge,
                rhs: ratio(1, 20),
            },
        ];
        assert_sound(4, &cs);
    }
}
