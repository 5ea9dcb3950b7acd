//! Exact LP feasibility.
//!
//! Phase-one simplex over integers with fraction-free pivoting and Bland's
//! rule. Every answer carries a certificate that is checked by substitution
//! before it is returned: a witness when feasible, Farkas multipliers when
//! not.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::{common_denominator, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Relation {
    Ge,
    Eq,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VarKind {
    Free,
    NonNeg,
}

#[derive(Clone, Debug)]
pub struct Row {
    pub coeffs: Vec<Rational>,
    pub relation: Relation,
    pub rhs: Rational,
}

#[derive(Clone, Debug)]
pub struct LinearSystem {
    pub num_vars: usize,
    pub kinds: Vec<VarKind>,
    pub rows: Vec<Row>,
}

impl LinearSystem {
    /// A system whose variables are all free.
    pub fn new(num_vars: usize) -> Self {
        Self::with_kinds(vec![VarKind::Free; num_vars])
    }

    pub fn with_kinds(kinds: Vec<VarKind>) -> Self {
        LinearSystem {
            num_vars: kinds.len(),
            kinds,
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, coeffs: Vec<Rational>, relation: Relation, rhs: Rational) {
        self.rows.push(Row { coeffs, relation, rhs });
    }

    pub fn ge(&mut self, coeffs: Vec<Rational>, rhs: Rational) {
        self.push(coeffs, Relation::Ge, rhs);
    }

    pub fn eq(&mut self, coeffs: Vec<Rational>, rhs: Rational) {
        self.push(coeffs, Relation::Eq, rhs);
    }

    fn validate(&self) -> Result<()> {
        if self.kinds.len() != self.num_vars {
            return Err(Error::MalformedSystem(format!(
                "{} variable kinds for {} variables",
                self.kinds.len(),
                self.num_vars
            )));
        }
        for (r, row) in self.rows.iter().enumerate() {
            if row.coeffs.len() != self.num_vars {
                return Err(Error::MalformedSystem(format!(
                    "row {r} has {} coefficients, expected {}",
                    row.coeffs.len(),
                    self.num_vars
                )));
            }
        }
        Ok(())
    }

    /// Exact substitution check.
    pub fn is_satisfied_by(&self, x: &[Rational]) -> bool {
        if x.len() != self.num_vars {
            return false;
        }
        let kinds_ok = self
            .kinds
            .iter()
            .zip(x)
            .all(|(k, v)| *k == VarKind::Free || !v.is_negative());
        kinds_ok
            && self.rows.iter().all(|row| {
                let lhs: Rational = row.coeffs.iter().zip(x).map(|(a, v)| a * v).sum();
                match row.relation {
                    Relation::Ge => lhs >= row.rhs,
                    Relation::Eq => lhs == row.rhs,
                }
            })
    }

    /// Checks Farkas multipliers: `y_r >= 0` on `>=` rows, `sum y_r a_r` is zero
    /// on free columns and nonpositive on nonnegative ones, `sum y_r b_r > 0`.
    pub fn is_refuted_by(&self, y: &[Rational]) -> bool {
        if y.len() != self.rows.len() {
            return false;
        }
        if self
            .rows
            .iter()
            .zip(y)
            .any(|(row, v)| row.relation == Relation::Ge && v.is_negative())
        {
            return false;
        }
        for j in 0..self.num_vars {
            let s: Rational = self.rows.iter().zip(y).map(|(row, v)| &row.coeffs[j] * v).sum();
            let ok = match self.kinds[j] {
                VarKind::Free => s.is_zero(),
                VarKind::NonNeg => !s.is_positive(),
            };
            if !ok {
                return false;
            }
        }
        let yb: Rational = self.rows.iter().zip(y).map(|(row, v)| &row.rhs * v).sum();
        yb.is_positive()
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum LpOutcome {
    /// Values for every variable, satisfying every row.
    Feasible(Vec<Rational>),
    /// Farkas multipliers, one per row.
    Infeasible(Vec<Rational>),
}

impl LpOutcome {
    pub fn witness(self) -> Option<Vec<Rational>> {
        match self {
            LpOutcome::Feasible(x) => Some(x),
            LpOutcome::Infeasible(_) => None,
        }
    }

    pub fn is_feasible(&self) -> bool {
        matches!(self, LpOutcome::Feasible(_))
    }
}

/// Decides feasibility of `system`.
///
/// Solves whichever of the primal standard form and its Farkas alternative has
/// fewer rows; both answers are translated back and verified.
pub fn lp_witness(system: &LinearSystem) -> Result<LpOutcome> {
    system.validate()?;
    let outcome = if system.rows.len() <= system.num_vars + 1 {
        solve_primal(system)
    } else {
        solve_alternative(system)
    };
    match &outcome {
        LpOutcome::Feasible(x) if !system.is_satisfied_by(x) => {
            Err(Error::Verification("LP witness failed substitution".into()))
        }
        LpOutcome::Infeasible(y) if !system.is_refuted_by(y) => {
            Err(Error::Verification("LP infeasibility certificate failed".into()))
        }
        _ => Ok(outcome),
    }
}

/// Feasibility by the primal route only; exposed so tests can compare routes.
pub fn lp_witness_primal(system: &LinearSystem) -> Result<LpOutcome> {
    system.validate()?;
    Ok(solve_primal(system))
}

/// Feasibility by the alternative route only.
pub fn lp_witness_dual(system: &LinearSystem) -> Result<LpOutcome> {
    system.validate()?;
    Ok(solve_alternative(system))
}

fn solve_primal(system: &LinearSystem) -> LpOutcome {
    // Columns: one per nonneg var, two per free var, one surplus per >= row.
    let mut col_of = Vec::with_capacity(system.num_vars);
    let mut ncols = 0;
    for k in &system.kinds {
        col_of.push(ncols);
        ncols += if *k == VarKind::Free { 2 } else { 1 };
    }
    let first_surplus = ncols;
    ncols += system.rows.iter().filter(|r| r.relation == Relation::Ge).count();
    let mut a = Vec::with_capacity(system.rows.len());
    let mut b = Vec::with_capacity(system.rows.len());
    let mut surplus = first_surplus;
    for row in &system.rows {
        let mut r = vec![Rational::zero(); ncols];
        for (j, c) in row.coeffs.iter().enumerate() {
            r[col_of[j]] = c.clone();
            if system.kinds[j] == VarKind::Free {
                r[col_of[j] + 1] = -c;
            }
        }
        if row.relation == Relation::Ge {
            r[surplus] = -Rational::one();
            surplus += 1;
        }
        a.push(r);
        b.push(row.rhs.clone());
    }
    match solve_standard(&a, &b, ncols) {
        StdOutcome::Feasible(z) => LpOutcome::Feasible(
            system
                .kinds
                .iter()
                .enumerate()
                .map(|(j, k)| match k {
                    VarKind::Free => &z[col_of[j]] - &z[col_of[j] + 1],
                    VarKind::NonNeg => z[col_of[j]].clone(),
                })
                .collect(),
        ),
        StdOutcome::Infeasible(y) => LpOutcome::Infeasible(y),
    }
}

fn solve_alternative(system: &LinearSystem) -> LpOutcome {
    // Unknowns: y_r (split for = rows), then one slack per nonneg variable.
    // Rows: sum_r y_r a_rj (+ t_j) = 0 for each j, and sum_r y_r b_r = 1.
    let m = system.rows.len();
    let mut col_of = Vec::with_capacity(m);
    let mut ncols = 0;
    for row in &system.rows {
        col_of.push(ncols);
        ncols += if row.relation == Relation::Eq { 2 } else { 1 };
    }
    let mut slack = ncols;
    ncols += system.kinds.iter().filter(|k| **k == VarKind::NonNeg).count();
    let n = system.num_vars;
    let mut a = vec![vec![Rational::zero(); ncols]; n + 1];
    for (r, row) in system.rows.iter().enumerate() {
        let c = col_of[r];
        for (j, coeff) in row.coeffs.iter().enumerate() {
            a[j][c] = coeff.clone();
        }
        a[n][c] = row.rhs.clone();
        if row.relation == Relation::Eq {
            for line in a.iter_mut() {
                line[c + 1] = -line[c].clone();
            }
        }
    }
    for (j, k) in system.kinds.iter().enumerate() {
        if *k == VarKind::NonNeg {
            a[j][slack] = Rational::one();
            slack += 1;
        }
    }
    let mut b = vec![Rational::zero(); n + 1];
    b[n] = Rational::one();
    match solve_standard(&a, &b, ncols) {
        StdOutcome::Feasible(z) => LpOutcome::Infeasible(
            system
                .rows
                .iter()
                .enumerate()
                .map(|(r, row)| match row.relation {
                    Relation::Eq => &z[col_of[r]] - &z[col_of[r] + 1],
                    Relation::Ge => z[col_of[r]].clone(),
                })
                .collect(),
        ),
        StdOutcome::Infeasible(w) => {
            let s = w[n].clone();
            LpOutcome::Feasible(w[..n].iter().map(|v| -v / &s).collect())
        }
    }
}

enum StdOutcome {
    Feasible(Vec<Rational>),
    Infeasible(Vec<Rational>),
}

/// Feasibility of `{a x = b, x >= 0}` by phase-one simplex.
fn solve_standard(a: &[Vec<Rational>], b: &[Rational], n: usize) -> StdOutcome {
    let m = a.len();
    let width = n + m + 1;
    let rhs = n + m;
    // Integer rows with b >= 0; `scale[i]` maps back to the rational row.
    let mut t: Vec<Vec<BigInt>> = Vec::with_capacity(m);
    let mut scale: Vec<BigInt> = Vec::with_capacity(m);
    for (row, bi) in a.iter().zip(b) {
        let mut den = common_denominator(row.iter().chain(std::iter::once(bi)));
        if bi.is_negative() {
            den = -den;
        }
        let mut line = vec![BigInt::zero(); width];
        for (j, c) in row.iter().enumerate() {
            if !c.is_zero() {
                line[j] = (c * Rational::from_integer(den.clone())).to_integer();
            }
        }
        line[rhs] = (bi * Rational::from_integer(den.clone())).to_integer();
        line[n + t.len()] = BigInt::one();
        t.push(line);
        scale.push(den);
    }
    let mut obj = vec![BigInt::zero(); width];
    for line in &t {
        for j in 0..n {
            obj[j] -= &line[j];
        }
        obj[rhs] -= &line[rhs];
    }
    let mut basis: Vec<usize> = (n..n + m).collect();
    let mut den = BigInt::one();

    // Bland: lowest-index original column with negative reduced cost.
    while let Some(s) = (0..n).find(|&j| obj[j].is_negative()) {
        let mut leave: Option<usize> = None;
        for i in 0..m {
            if !t[i][s].is_positive() {
                continue;
            }
            leave = Some(match leave {
                None => i,
                Some(l) => {
                    let lhs = &t[i][rhs] * &t[l][s];
                    let rhs_cmp = &t[l][rhs] * &t[i][s];
                    if lhs < rhs_cmp || (lhs == rhs_cmp && basis[i] < basis[l]) {
                        i
                    } else {
                        l
                    }
                }
            });
        }
        // Phase one is bounded below, so a leaving row always exists.
        let r = leave.expect("phase-one objective is bounded");
        let p = t[r][s].clone();
        let pivot_row = t[r].clone();
        let update = |line: &mut Vec<BigInt>| {
            let f = line[s].clone();
            for (x, y) in line.iter_mut().zip(&pivot_row) {
                let mut v = &*x * &p;
                if !f.is_zero() && !y.is_zero() {
                    v -= &f * y;
                }
                *x = v / &den;
            }
        };
        for (i, line) in t.iter_mut().enumerate() {
            if i != r {
                update(line);
            }
        }
        update(&mut obj);
        den = p;
        basis[r] = s;
    }

    if obj[rhs].is_zero() {
        let mut x = vec![Rational::zero(); n];
        for (i, &bv) in basis.iter().enumerate() {
            if bv < n {
                x[bv] = Rational::new(t[i][rhs].clone(), den.clone());
            }
        }
        StdOutcome::Feasible(x)
    } else {
        let y = (0..m)
            .map(|i| {
                let yi = Rational::one() - Rational::new(obj[n + i].clone(), den.clone());
                yi * Rational::from_integer(scale[i].clone())
            })
            .collect();
        StdOutcome::Infeasible(y)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, point};

    #[test]
    fn interval_is_feasible() {
        let mut s = LinearSystem::new(1);
        s.ge(point(&[1]), int(0));
        s.ge(point(&[-1]), int(-1));
        let x = lp_witness(&s).unwrap().witness().unwrap();
        assert!(x[0] >= int(0) && x[0] <= int(1));
    }

    #[test]
    fn zero_row_is_infeasible() {
        let mut s = LinearSystem::new(1);
        s.ge(point(&[0]), int(1));
        match lp_witness(&s).unwrap() {
            LpOutcome::Infeasible(y) => assert!(s.is_refuted_by(&y)),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn square_diagonal_strict_system() {
        // Square corners; pair (0,0)-(1,1) is strict with u ~ (-1,-1).
        let pts = [point(&[0, 0]), point(&[1, 0]), point(&[1, 1]), point(&[0, 1])];
        let (i, j) = (2, 0);
        let mut s = LinearSystem::new(2);
        for (k, x) in pts.iter().enumerate() {
            if k != i {
                s.ge(crate::rational::sub(&pts[i], x), int(1));
            }
            if k != j {
                s.ge(crate::rational::sub(x, &pts[j]), int(1));
            }
        }
        for solve in [lp_witness, lp_witness_primal, lp_witness_dual] {
            let u = solve(&s).unwrap().witness().unwrap();
            assert!(s.is_satisfied_by(&u));
            assert_eq!(u[0], u[1]);
            assert!(u[0].is_positive());
        }
    }

    #[test]
    fn adjacent_square_pair_is_not_strict() {
        let pts = [point(&[0, 0]), point(&[1, 0]), point(&[1, 1]), point(&[0, 1])];
        let (i, j) = (1, 0);
        let mut s = LinearSystem::new(2);
        for (k, x) in pts.iter().enumerate() {
            if k != i {
                s.ge(crate::rational::sub(&pts[i], x), int(1));
            }
            if k != j {
                s.ge(crate::rational::sub(x, &pts[j]), int(1));
            }
        }
        for solve in [lp_witness, lp_witness_primal, lp_witness_dual] {
            match solve(&s).unwrap() {
                LpOutcome::Infeasible(y) => assert!(s.is_refuted_by(&y)),
                other => panic!("{other:?}"),
            }
        }
    }

    #[test]
    fn equalities_and_nonneg_vars() {
        // x + y = 3, x - y >= 1, x, y >= 0.
        let mut s = LinearSystem::with_kinds(vec![VarKind::NonNeg; 2]);
        s.eq(point(&[1, 1]), int(3));
        s.ge(point(&[1, -1]), int(1));
        for solve in [lp_witness, lp_witness_primal, lp_witness_dual] {
            let x = solve(&s).unwrap().witness().unwrap();
            assert!(s.is_satisfied_by(&x));
        }
        // x + y = -1 has no nonnegative solution.
        let mut t = LinearSystem::with_kinds(vec![VarKind::NonNeg; 2]);
        t.eq(point(&[1, 1]), int(-1));
        for solve in [lp_witness, lp_witness_primal, lp_witness_dual] {
            match solve(&t).unwrap() {
                LpOutcome::Infeasible(y) => assert!(t.is_refuted_by(&y)),
                other => panic!("{other:?}"),
            }
        }
    }

    #[test]
    fn malformed_rows_are_rejected() {
        let mut s = LinearSystem::new(2);
        s.ge(point(&[1]), int(0));
        assert!(matches!(lp_witness(&s), Err(Error::MalformedSystem(_))));
    }

    #[test]
    fn empty_system_is_feasible() {
        let s = LinearSystem::new(3);
        assert_eq!(lp_witness(&s).unwrap().witness().unwrap().len(), 3);
    }
}
