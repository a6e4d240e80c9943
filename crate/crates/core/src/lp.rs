//! Exact rational linear feasibility.
//!
//! A single entry point, [`feasibility`], decides whether a system of linear
//! constraints over free rational variables has a solution. The answer is
//! always certified: a feasible system yields a concrete solution vector, an
//! infeasible one yields [`Farkas`] multipliers that combine the constraints
//! into `0 >= positive` and can be re-verified independently of the solver.
//!
//! The implementation is a dense phase-1 simplex over `Rat` with Bland's
//! pivoting rule, so it terminates without any cycling or tolerance tricks.
//! Problem sizes in this crate are tiny (tens of rows); no effort is spent on
//! sparsity.

use num_traits::{One, Signed, Zero};

use crate::linalg::QVec;
use crate::rat::Rat;

/// Relation of a single constraint row.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Rel {
    Ge,
    Le,
    Eq,
}

/// One linear constraint `coeffs . x REL rhs`.
#[derive(Debug, Clone, PartialEq)]
pub struct Constraint {
    pub coeffs: QVec,
    pub rel: Rel,
    pub rhs: Rat,
}

impl Constraint {
    pub fn ge(coeffs: QVec, rhs: Rat) -> Self {
        Constraint { coeffs, rel: Rel::Ge, rhs }
    }
    pub fn le(coeffs: QVec, rhs: Rat) -> Self {
        Constraint { coeffs, rel: Rel::Le, rhs }
    }
    pub fn eq(coeffs: QVec, rhs: Rat) -> Self {
        Constraint { coeffs, rel: Rel::Eq, rhs }
    }

    /// Does `x` satisfy this constraint?
    pub fn satisfied_by(&self, x: &[Rat]) -> bool {
        let lhs = crate::linalg::dot(&self.coeffs, x);
        match self.rel {
            Rel::Ge => lhs >= self.rhs,
            Rel::Le => lhs <= self.rhs,
            Rel::Eq => lhs == self.rhs,
        }
    }
}

/// Infeasibility certificate: one multiplier per constraint, nonnegative on
/// `>=` rows, nonpositive on `<=` rows, unrestricted on `=` rows, combining
/// the rows into the contradiction `0 >= (positive)`.
#[derive(Debug, Clone, PartialEq)]
pub struct Farkas {
    pub multipliers: Vec<Rat>,
}

impl Farkas {
    /// Re-checks the certificate against the constraints it came from.
    pub fn verify(&self, num_vars: usize, constraints: &[Constraint]) -> bool {
        if self.multipliers.len() != constraints.len() {
            return false;
        }
        let mut combo = vec![Rat::zero(); num_vars];
        let mut rhs = Rat::zero();
        for (m, c) in self.multipliers.iter().zip(constraints) {
            match c.rel {
                Rel::Ge if m.is_negative() => return false,
                Rel::Le if m.is_positive() => return false,
                _ => {}
            }
            for (acc, a) in combo.iter_mut().zip(&c.coeffs) {
                *acc += m * a;
            }
            rhs += m * &c.rhs;
        }
        combo.iter().all(|v| v.is_zero()) && rhs.is_positive()
    }
}

/// Outcome of a feasibility query.
#[derive(Debug, Clone, PartialEq)]
pub enum Feasibility {
    Feasible(QVec),
    Infeasible(Farkas),
}

impl Feasibility {
    pub fn is_feasible(&self) -> bool {
        matches!(self, Feasibility::Feasible(_))
    }
    pub fn witness(&self) -> Option<&QVec> {
        match self {
            Feasibility::Feasible(x) => Some(x),
            Feasibility::Infeasible(_) => None,
        }
    }
}

/// Decides `exists x in Q^num_vars` satisfying all `constraints`.
///
/// Variables are free (unrestricted in sign). Deterministic: the same input
/// always produces the same witness or certificate.
pub fn feasibility(num_vars: usize, constraints: &[Constraint]) -> Feasibility {
    for c in constraints {
        assert_eq!(c.coeffs.len(), num_vars, "constraint arity mismatch");
    }
    let m = constraints.len();

    // Ge/Eq normal form; Le rows are negated and remembered.
    let mut ge_coeffs: Vec<QVec> = Vec::with_capacity(m);
    let mut ge_rhs: Vec<Rat> = Vec::with_capacity(m);
    let mut is_ineq: Vec<bool> = Vec::with_capacity(m);
    let mut le_flipped: Vec<bool> = Vec::with_capacity(m);
    for c in constraints {
        match c.rel {
            Rel::Ge => {
                ge_coeffs.push(c.coeffs.clone());
                ge_rhs.push(c.rhs.clone());
                is_ineq.push(true);
                le_flipped.push(false);
            }
            Rel::Le => {
                ge_coeffs.push(crate::linalg::neg(&c.coeffs));
                ge_rhs.push(-c.rhs.clone());
                is_ineq.push(true);
                le_flipped.push(true);
            }
            Rel::Eq => {
                ge_coeffs.push(c.coeffs.clone());
                ge_rhs.push(c.rhs.clone());
                is_ineq.push(false);
                le_flipped.push(false);
            }
        }
    }

    // Standard form over nonnegative variables: x = u - w, one slack per
    // inequality, one artificial per row. Rows are scaled so rhs >= 0, which
    // makes the artificial block an identity matrix (the initial basis).
    let n_slack = is_ineq.iter().filter(|&&b| b).count();
    let n_cols = 2 * num_vars + n_slack + m;
    let art0 = 2 * num_vars + n_slack;
    let mut tableau: Vec<QVec> = Vec::with_capacity(m);
    let mut row_sign: Vec<Rat> = Vec::with_capacity(m);
    let mut slack_idx = 0usize;
    for i in 0..m {
        let sigma = if ge_rhs[i].is_negative() { -Rat::one() } else { Rat::one() };
        let mut row = vec![Rat::zero(); n_cols + 1];
        for j in 0..num_vars {
            let a = &sigma * &ge_coeffs[i][j];
            row[j] = a.clone();
            row[num_vars + j] = -a;
        }
        if is_ineq[i] {
            row[2 * num_vars + slack_idx] = -sigma.clone();
            slack_idx += 1;
        }
        row[art0 + i] = Rat::one();
        row[n_cols] = &sigma * &ge_rhs[i];
        tableau.push(row);
        row_sign.push(sigma);
    }
    let mut basis: Vec<usize> = (0..m).map(|i| art0 + i).collect();

    // Phase 1: minimize the sum of artificial variables, Bland's rule.
    loop {
        // Reduced costs r_j = c_j - y . column_j with c = 1 on artificials.
        let mut entering = None;
        for j in 0..n_cols {
            if basis.contains(&j) {
                continue;
            }
            let mut z = Rat::zero();
            for (i, row) in tableau.iter().enumerate() {
                if basis[i] >= art0 {
                    z += &row[j];
                }
            }
            let cj = if j >= art0 { Rat::one() } else { Rat::zero() };
            if cj - z < Rat::zero() {
                entering = Some(j);
                break; // Bland: smallest index wins
            }
        }
        let Some(enter) = entering else { break };

        // Ratio test; ties broken by smallest basic variable index (Bland).
        let mut leave: Option<(usize, Rat)> = None;
        for (i, row) in tableau.iter().enumerate() {
            if row[enter].is_positive() {
                let ratio = &row[n_cols] / &row[enter];
                match &leave {
                    None => leave = Some((i, ratio)),
                    Some((bi, br)) => {
                        if ratio < *br || (ratio == *br && basis[i] < basis[*bi]) {
                            leave = Some((i, ratio));
                        }
                    }
                }
            }
        }
        let (pivot_row, _) = leave.expect("phase-1 objective is bounded below");

        // Pivot.
        let inv = tableau[pivot_row][enter].recip();
        tableau[pivot_row] = crate::linalg::scale(&inv, &tableau[pivot_row]);
        for i in 0..m {
            if i != pivot_row && !tableau[i][enter].is_zero() {
                let f = -tableau[i][enter].clone();
                tableau[i] = crate::linalg::add_scaled(&tableau[i], &f, &tableau[pivot_row]);
            }
        }
        basis[pivot_row] = enter;
    }

    let objective: Rat = tableau
        .iter()
        .enumerate()
        .filter(|(i, _)| basis[*i] >= art0)
        .map(|(_, row)| row[n_cols].clone())
        .sum();

    if objective.is_positive() {
        // y = c_B B^{-1}, read off the artificial block (initially identity).
        let mut multipliers = Vec::with_capacity(m);
        for i in 0..m {
            let mut y_i = Rat::zero();
            for (k, row) in tableau.iter().enumerate() {
                if basis[k] >= art0 {
                    y_i += &row[art0 + i];
                }
            }
            let mut mult = &row_sign[i] * y_i;
            if le_flipped[i] {
                mult = -mult;
            }
            multipliers.push(mult);
        }
        let cert = Farkas { multipliers };
        debug_assert!(cert.verify(num_vars, constraints), "bad Farkas certificate");
        Feasibility::Infeasible(cert)
    } else {
        let mut x = vec![Rat::zero(); num_vars];
        for (i, &b) in basis.iter().enumerate() {
            let val = tableau[i][n_cols].clone();
            if b < num_vars {
                x[b] += val;
            } else if b < 2 * num_vars {
                x[b - num_vars] -= val;
            }
        }
        debug_assert!(
            constraints.iter().all(|c| c.satisfied_by(&x)),
            "simplex produced an invalid witness"
        );
        Feasibility::Feasible(x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::vec_i64;
    use crate::rat::rat;

    #[test]
    fn feasible_box() {
        // 1 <= x <= 3, x + y = 5.
        let cs = vec![
            Constraint::ge(vec_i64(&[1, 0]), rat(1)),
            Constraint::le(vec_i64(&[1, 0]), rat(3)),
            Constraint::eq(vec_i64(&[1, 1]), rat(5)),
        ];
        match feasibility(2, &cs) {
            Feasibility::Feasible(x) => {
                assert!(cs.iter().all(|c| c.satisfied_by(&x)));
            }
            Feasibility::Infeasible(_) => panic!("should be feasible"),
        }
    }

    #[test]
    fn infeasible_interval() {
        let cs = vec![
            Constraint::ge(vec_i64(&[1]), rat(1)),
            Constraint::le(vec_i64(&[1]), rat(0)),
        ];
        match feasibility(1, &cs) {
            Feasibility::Infeasible(f) => assert!(f.verify(1, &cs)),
            Feasibility::Feasible(_) => panic!("should be infeasible"),
        }
    }

    #[test]
    fn infeasible_equalities() {
        let cs = vec![
            Constraint::eq(vec_i64(&[1, 1]), rat(1)),
            Constraint::eq(vec_i64(&[2, 2]), rat(3)),
        ];
        match feasibility(2, &cs) {
            Feasibility::Infeasible(f) => assert!(f.verify(2, &cs)),
            Feasibility::Feasible(_) => panic!("should be infeasible"),
        }
    }

    #[test]
    fn negative_solutions_allowed() {
        // Free variables: x <= -2 alone is feasible.
        let cs = vec![Constraint::le(vec_i64(&[1]), rat(-2))];
        let Feasibility::Feasible(x) = feasibility(1, &cs) else {
            panic!("should be feasible");
        };
        assert!(x[0] <= rat(-2));
    }

    #[test]
    fn randomized_answers_are_certified() {
        // Small deterministic pseudo-random systems; either branch of the
        // answer carries its own proof, so checking the proof is a full test.
        let mut state = 0x2545F4914F6CDD1Du64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        for _ in 0..300 {
            let nv = 1 + (next() % 3) as usize;
            let nc = 1 + (next() % 5) as usize;
            let cs: Vec<Constraint> = (0..nc)
                .map(|_| {
                    let coeffs = (0..nv).map(|_| rat((next() % 7) as i64 - 3)).collect();
                    let rhs = rat((next() % 9) as i64 - 4);
                    let rel = match next() % 3 {
                        0 => Rel::Ge,
                        1 => Rel::Le,
                        _ => Rel::Eq,
                    };
                    Constraint { coeffs, rel, rhs }
                })
                .collect();
            match feasibility(nv, &cs) {
                Feasibility::Feasible(x) => {
                    assert!(cs.iter().all(|c| c.satisfied_by(&x)));
                }
                Feasibility::Infeasible(f) => assert!(f.verify(nv, &cs)),
            }
        }
    }
}
