//! Two-valued semantics, truth tables, and tautology/equivalence checks by
//! exhaustive enumeration.

use std::fmt;

use crate::assignment::{check_guard, grid_row, zip_assignment, Assignment};
use crate::error::EvalError;
use crate::exec::Exec;
use crate::syntax::Formula;

/// Truth tables are refused beyond this many variables.
pub const MAX_TABLE_VARIABLES: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TruthValue2 {
    Zero,
    One,
}

impl TruthValue2 {
    /// Row order used by truth tables.
    pub const COUNTDOWN: [TruthValue2; 2] = [TruthValue2::One, TruthValue2::Zero];

    pub fn as_bool(self) -> bool {
        self == TruthValue2::One
    }

    pub fn as_f64(self) -> f64 {
        match self {
            TruthValue2::Zero => 0.0,
            TruthValue2::One => 1.0,
        }
    }
}

impl From<bool> for TruthValue2 {
    fn from(b: bool) -> Self {
        if b {
            TruthValue2::One
        } else {
            TruthValue2::Zero
        }
    }
}

impl fmt::Display for TruthValue2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TruthValue2::Zero => "0",
            TruthValue2::One => "1",
        })
    }
}

pub type Assignment2 = Assignment<TruthValue2>;

/// The classical connective tables.
pub fn connective(symbol: char, operands: &[TruthValue2]) -> Result<TruthValue2, EvalError> {
    use TruthValue2::{One, Zero};
    let value = match (symbol, operands) {
        ('N', [Zero]) => One,
        ('N', [One]) => Zero,

        ('C', [One, One]) => One,
        ('C', [One, Zero]) => Zero,
        ('C', [Zero, One]) => One,
        ('C', [Zero, Zero]) => One,

        ('K', [One, One]) => One,
        ('K', [One, Zero]) => Zero,
        ('K', [Zero, One]) => Zero,
        ('K', [Zero, Zero]) => Zero,

        ('A', [One, One]) => One,
        ('A', [One, Zero]) => One,
        ('A', [Zero, One]) => One,
        ('A', [Zero, Zero]) => Zero,

        _ => {
            return Err(EvalError::UnsupportedOperator {
                symbol,
                operands: operands.len(),
            })
        }
    };
    Ok(value)
}

pub fn eval2(formula: &Formula, assignment: &Assignment2) -> Result<TruthValue2, EvalError> {
    formula.fold(
        |leaf| match leaf {
            Formula::Atom(name) => assignment.lookup(*name),
            Formula::Const(value) => Ok(TruthValue2::from(*value)),
            Formula::Op(..) => unreachable!("fold only passes leaves"),
        },
        connective,
    )
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruthTableRow {
    pub inputs: Vec<TruthValue2>,
    pub value: TruthValue2,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruthTable {
    pub variables: Vec<char>,
    pub rows: Vec<TruthTableRow>,
}

impl TruthTable {
    pub fn column(&self) -> impl Iterator<Item = TruthValue2> + '_ {
        self.rows.iter().map(|r| r.value)
    }
}

/// `2^n` rows counting down from all ones, first variable most significant.
pub fn truth_table(formula: &Formula) -> Result<TruthTable, EvalError> {
    truth_table_with(formula, Exec::default())
}

pub fn truth_table_with(formula: &Formula, exec: Exec) -> Result<TruthTable, EvalError> {
    let variables = formula.free_variables();
    table_over(formula, variables, exec)
}

fn table_over(
    formula: &Formula,
    variables: Vec<char>,
    exec: Exec,
) -> Result<TruthTable, EvalError> {
    check_guard(variables.len(), MAX_TABLE_VARIABLES)?;
    let rows = exec.try_map(1usize << variables.len(), |index| {
        let inputs = grid_row(&variables, &TruthValue2::COUNTDOWN, index);
        let value = eval2(formula, &zip_assignment(&variables, &inputs))?;
        Ok(TruthTableRow { inputs, value })
    })?;
    Ok(TruthTable { variables, rows })
}

/// First assignment (in table order) at which `formula` is false.
pub fn tautology_counterexample(formula: &Formula) -> Result<Option<Assignment2>, EvalError> {
    let variables = formula.free_variables();
    first_row_where(&variables, |a| Ok(eval2(formula, a)? == TruthValue2::Zero))
}

pub fn is_tautology(formula: &Formula) -> Result<bool, EvalError> {
    Ok(tautology_counterexample(formula)?.is_none())
}

/// Variables of `f` followed by those of `g` not already present.
pub fn union_variables(f: &Formula, g: &Formula) -> Vec<char> {
    let mut variables = f.free_variables();
    for name in g.free_variables() {
        if !variables.contains(&name) {
            variables.push(name);
        }
    }
    variables
}

/// First assignment over the union of both variable sets at which `f` and
/// `g` disagree.
pub fn equivalence_counterexample(
    f: &Formula,
    g: &Formula,
) -> Result<Option<Assignment2>, EvalError> {
    let variables = union_variables(f, g);
    first_row_where(&variables, |a| Ok(eval2(f, a)? != eval2(g, a)?))
}

pub fn are_equivalent(f: &Formula, g: &Formula) -> Result<bool, EvalError> {
    Ok(equivalence_counterexample(f, g)?.is_none())
}

fn first_row_where(
    variables: &[char],
    hit: impl Fn(&Assignment2) -> Result<bool, EvalError> + Sync + Send,
) -> Result<Option<Assignment2>, EvalError> {
    check_guard(variables.len(), MAX_TABLE_VARIABLES)?;
    let assignment_at = |index| {
        zip_assignment(
            variables,
            &grid_row(variables, &TruthValue2::COUNTDOWN, index),
        )
    };
    // Surface evaluation errors (missing operators) before searching.
    hit(&assignment_at(0))?;
    let found = Exec::default().find_first(1usize << variables.len(), |index| {
        hit(&assignment_at(index)).unwrap_or(false)
    });
    Ok(found.map(assignment_at))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::{parse_str, OperatorTable};
    use TruthValue2::{One, Zero};

    fn f(s: &str) -> Formula {
        parse_str(s, &OperatorTable::standard()).unwrap()
    }

    fn assign(pairs: &[(char, u8)]) -> Assignment2 {
        pairs
            .iter()
            .map(|&(n, v)| (n, TruthValue2::from(v == 1)))
            .collect()
    }

    #[test]
    fn eval_examples() {
        assert_eq!(eval2(&f("Cpq"), &assign(&[('p', 1), ('q', 0)])), Ok(Zero));
        assert_eq!(eval2(&f("Cpq"), &assign(&[('p', 0), ('q', 0)])), Ok(One));
        assert_eq!(eval2(&f("NKpNp"), &assign(&[('p', 1)])), Ok(One));
        assert_eq!(eval2(&f("C10"), &Assignment2::new()), Ok(Zero));
    }

    #[test]
    fn missing_variable() {
        assert_eq!(
            eval2(&f("Kpq"), &assign(&[('p', 1)])),
            Err(EvalError::MissingVariable('q'))
        );
    }

    #[test]
    fn unsupported_operator() {
        let table = OperatorTable::standard().with('+', 2).unwrap();
        let g = parse_str("+pq", &table).unwrap();
        assert!(matches!(
            eval2(&g, &assign(&[('p', 1), ('q', 1)])),
            Err(EvalError::UnsupportedOperator {
                symbol: '+',
                operands: 2
            })
        ));
        assert!(is_tautology(&g).is_err());
    }

    #[test]
    fn conjunction_table() {
        let t = truth_table(&f("Kpq")).unwrap();
        assert_eq!(t.variables, vec!['p', 'q']);
        let rows: Vec<_> = t.rows.iter().map(|r| (r.inputs.clone(), r.value)).collect();
        assert_eq!(
            rows,
            vec![
                (vec![One, One], One),
                (vec![One, Zero], Zero),
                (vec![Zero, One], Zero),
                (vec![Zero, Zero], Zero),
            ]
        );
    }

    #[test]
    fn identity_and_constant_tables() {
        let t = truth_table(&f("p")).unwrap();
        assert_eq!(t.column().collect::<Vec<_>>(), vec![One, Zero]);
        let c = truth_table(&f("A0N0")).unwrap();
        assert!(c.variables.is_empty());
        assert_eq!(c.column().collect::<Vec<_>>(), vec![One]);
    }

    #[test]
    fn implication_as_disjunction() {
        assert_eq!(
            truth_table(&f("ANpq")).unwrap(),
            truth_table(&f("Cpq")).unwrap()
        );
    }

    #[test]
    fn table_strategies_agree() {
        let g = f("CKApqNrAsKtNu");
        assert_eq!(
            truth_table_with(&g, Exec::Sequential).unwrap(),
            truth_table_with(&g, Exec::Parallel).unwrap()
        );
    }

    #[test]
    fn too_many_variables() {
        let g = f("KaKbKcKdKeKfKgKhKiKjKkKlKmKnKoKpq");
        assert_eq!(g.free_variables().len(), 17);
        assert_eq!(
            truth_table(&g).unwrap_err(),
            EvalError::TooManyVariables {
                found: 17,
                limit: 16
            }
        );
    }

    #[test]
    fn tautologies() {
        for law in ["NKpNp", "ApNp", "CCpKqNqNp", "CKCpqpq"] {
            assert!(is_tautology(&f(law)).unwrap(), "{law}");
        }
        assert!(!is_tautology(&f("p")).unwrap());
        assert_eq!(
            tautology_counterexample(&f("Kpq")).unwrap(),
            Some(assign(&[('p', 1), ('q', 0)]))
        );
    }

    #[test]
    fn equivalences() {
        assert!(are_equivalent(&f("Kpq"), &f("NANpNq")).unwrap());
        assert!(are_equivalent(&f("Apq"), &f("NKNpNq")).unwrap());
        assert!(are_equivalent(&f("Cpq"), &f("ANpq")).unwrap());
        assert!(are_equivalent(&f("Cpq"), &f("CNqNp")).unwrap());
        assert!(are_equivalent(&f("NNp"), &f("p")).unwrap());
        assert!(!are_equivalent(&f("p"), &f("Np")).unwrap());
    }

    #[test]
    fn equivalence_over_union_of_variables() {
        // q is vacuous on the right.
        assert!(are_equivalent(&f("p"), &f("KpApq")).unwrap());
        assert_eq!(
            equivalence_counterexample(&f("p"), &f("q")).unwrap(),
            Some(assign(&[('p', 1), ('q', 0)]))
        );
    }
}
