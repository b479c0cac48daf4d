//! Three-valued semantics: Łukasiewicz's and strong Kleene.
//!
//! The two systems share negation, conjunction and disjunction. They differ
//! only in implication, and only when both operands are ½: Łukasiewicz makes
//! `C ½ ½` true, Kleene leaves it at ½.

use std::fmt;

use crate::assignment::{check_guard, grid_row, zip_assignment, Assignment};
use crate::classical::TruthValue2;
use crate::error::EvalError;
use crate::exec::Exec;
use crate::syntax::Formula;

pub const MAX_TABLE_VARIABLES: usize = 10;

/// A truth value in `{0, ½, 1}`, held symbolically.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TruthValue3 {
    Zero,
    Half,
    One,
}

impl TruthValue3 {
    /// Row order used by three-valued tables.
    pub const COUNTDOWN: [TruthValue3; 3] =
        [TruthValue3::One, TruthValue3::Half, TruthValue3::Zero];

    pub fn as_f64(self) -> f64 {
        match self {
            TruthValue3::Zero => 0.0,
            TruthValue3::Half => 0.5,
            TruthValue3::One => 1.0,
        }
    }

    /// Accepts exactly `0`, `0.5` and `1`.
    pub fn from_f64(x: f64) -> Result<Self, EvalError> {
        if x == 0.0 {
            Ok(TruthValue3::Zero)
        } else if x == 0.5 {
            Ok(TruthValue3::Half)
        } else if x == 1.0 {
            Ok(TruthValue3::One)
        } else {
            Err(EvalError::InvalidValue(x))
        }
    }

    /// The value in halves: 0, 1 or 2.
    pub fn halves(self) -> u8 {
        match self {
            TruthValue3::Zero => 0,
            TruthValue3::Half => 1,
            TruthValue3::One => 2,
        }
    }

    pub fn to_classical(self) -> Option<TruthValue2> {
        match self {
            TruthValue3::Zero => Some(TruthValue2::Zero),
            TruthValue3::One => Some(TruthValue2::One),
            TruthValue3::Half => None,
        }
    }
}

impl From<TruthValue2> for TruthValue3 {
    fn from(v: TruthValue2) -> Self {
        match v {
            TruthValue2::Zero => TruthValue3::Zero,
            TruthValue2::One => TruthValue3::One,
        }
    }
}

impl fmt::Display for TruthValue3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TruthValue3::Zero => "0",
            TruthValue3::Half => "½",
            TruthValue3::One => "1",
        })
    }
}

pub type Assignment3 = Assignment<TruthValue3>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Semantics3 {
    Lukasiewicz,
    Kleene,
}

impl fmt::Display for Semantics3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Semantics3::Lukasiewicz => "lukasiewicz",
            Semantics3::Kleene => "kleene",
        })
    }
}

fn unsupported(symbol: char, operands: &[TruthValue3]) -> EvalError {
    EvalError::UnsupportedOperator {
        symbol,
        operands: operands.len(),
    }
}

/// Łukasiewicz's connective tables: the classical entries plus the ½ rows.
pub fn lukasiewicz(symbol: char, operands: &[TruthValue3]) -> Result<TruthValue3, EvalError> {
    use TruthValue3::{Half, One, Zero};
    let value = match (symbol, operands) {
        ('N', [Zero]) => One,
        ('N', [Half]) => Half,
        ('N', [One]) => Zero,

        ('C', [One, One]) => One,
        ('C', [One, Half]) => Half,
        ('C', [One, Zero]) => Zero,
        ('C', [Half, One]) => One,
        ('C', [Half, Half]) => One,
        ('C', [Half, Zero]) => Half,
        ('C', [Zero, One]) => One,
        ('C', [Zero, Half]) => One,
        ('C', [Zero, Zero]) => One,

        ('K', [One, One]) => One,
        ('K', [One, Half]) => Half,
        ('K', [One, Zero]) => Zero,
        ('K', [Half, One]) => Half,
        ('K', [Half, Half]) => Half,
        ('K', [Half, Zero]) => Zero,
        ('K', [Zero, One]) => Zero,
        ('K', [Zero, Half]) => Zero,
        ('K', [Zero, Zero]) => Zero,

        ('A', [One, One]) => One,
        ('A', [One, Half]) => One,
        ('A', [One, Zero]) => One,
        ('A', [Half, One]) => One,
        ('A', [Half, Half]) => Half,
        ('A', [Half, Zero]) => Half,
        ('A', [Zero, One]) => One,
        ('A', [Zero, Half]) => Half,
        ('A', [Zero, Zero]) => Zero,

        _ => return Err(unsupported(symbol, operands)),
    };
    Ok(value)
}

/// Strong Kleene tables. Only `C ½ ½` differs from [`lukasiewicz`].
pub fn kleene(symbol: char, operands: &[TruthValue3]) -> Result<TruthValue3, EvalError> {
    use TruthValue3::{Half, One, Zero};
    let value = match (symbol, operands) {
        ('C', [One, One]) => One,
        ('C', [One, Half]) => Half,
        ('C', [One, Zero]) => Zero,
        ('C', [Half, One]) => One,
        ('C', [Half, Half]) => Half,
        ('C', [Half, Zero]) => Half,
        ('C', [Zero, One]) => One,
        ('C', [Zero, Half]) => One,
        ('C', [Zero, Zero]) => One,
        ('N' | 'K' | 'A', _) => return lukasiewicz(symbol, operands),
        _ => return Err(unsupported(symbol, operands)),
    };
    Ok(value)
}

pub fn connective(
    semantics: Semantics3,
    symbol: char,
    operands: &[TruthValue3],
) -> Result<TruthValue3, EvalError> {
    match semantics {
        Semantics3::Lukasiewicz => lukasiewicz(symbol, operands),
        Semantics3::Kleene => kleene(symbol, operands),
    }
}

pub fn eval3(
    formula: &Formula,
    assignment: &Assignment3,
    semantics: Semantics3,
) -> Result<TruthValue3, EvalError> {
    formula.fold(
        |leaf| match leaf {
            Formula::Atom(name) => assignment.lookup(*name),
            Formula::Const(value) => Ok(TruthValue3::from(TruthValue2::from(*value))),
            Formula::Op(..) => unreachable!("fold only passes leaves"),
        },
        |symbol, operands| connective(semantics, symbol, operands),
    )
}

pub fn eval3_lukasiewicz(
    formula: &Formula,
    assignment: &Assignment3,
) -> Result<TruthValue3, EvalError> {
    eval3(formula, assignment, Semantics3::Lukasiewicz)
}

pub fn eval3_kleene(formula: &Formula, assignment: &Assignment3) -> Result<TruthValue3, EvalError> {
    eval3(formula, assignment, Semantics3::Kleene)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrivalentRow {
    pub inputs: Vec<TruthValue3>,
    pub value: TruthValue3,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrivalentTable {
    pub semantics: Semantics3,
    pub variables: Vec<char>,
    pub rows: Vec<TrivalentRow>,
}

impl TrivalentTable {
    pub fn column(&self) -> impl Iterator<Item = TruthValue3> + '_ {
        self.rows.iter().map(|r| r.value)
    }

    /// True when every row takes the designated value 1.
    pub fn is_tautology(&self) -> bool {
        self.column().all(|v| v == TruthValue3::One)
    }
}

/// `3^n` rows, each digit running 1, ½, 0, first variable most significant.
pub fn trivalent_table(
    formula: &Formula,
    semantics: Semantics3,
) -> Result<TrivalentTable, EvalError> {
    trivalent_table_with(formula, semantics, Exec::default())
}

pub fn trivalent_table_with(
    formula: &Formula,
    semantics: Semantics3,
    exec: Exec,
) -> Result<TrivalentTable, EvalError> {
    let variables = formula.free_variables();
    check_guard(variables.len(), MAX_TABLE_VARIABLES)?;
    let rows = exec.try_map(3usize.pow(variables.len() as u32), |index| {
        let inputs = grid_row(&variables, &TruthValue3::COUNTDOWN, index);
        let value = eval3(formula, &zip_assignment(&variables, &inputs), semantics)?;
        Ok(TrivalentRow { inputs, value })
    })?;
    Ok(TrivalentTable {
        semantics,
        variables,
        rows,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SemanticsDisagreement {
    pub inputs: Vec<TruthValue3>,
    pub lukasiewicz: TruthValue3,
    pub kleene: TruthValue3,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SemanticsDiff {
    pub variables: Vec<char>,
    pub disagreements: Vec<SemanticsDisagreement>,
}

/// Every assignment over `{0, ½, 1}` where the two semantics part ways, in
/// table order.
pub fn diff_semantics(formula: &Formula) -> Result<SemanticsDiff, EvalError> {
    let luk = trivalent_table(formula, Semantics3::Lukasiewicz)?;
    let kle = trivalent_table(formula, Semantics3::Kleene)?;
    let disagreements = luk
        .rows
        .into_iter()
        .zip(kle.rows)
        .filter(|(l, k)| l.value != k.value)
        .map(|(l, k)| SemanticsDisagreement {
            inputs: l.inputs,
            lukasiewicz: l.value,
            kleene: k.value,
        })
        .collect();
    Ok(SemanticsDiff {
        variables: luk.variables,
        disagreements,
    })
}
